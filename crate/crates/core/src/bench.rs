//! Timing comparison of the four routes to the dual wavefunction: the
//! row-transfer sweep, brute-force grid enumeration, the matrix-product
//! trace, and the dual Gelfand–Tsetlin sum.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::gtpattern::dual_tokuyama_sum;
use crate::lattice::{
    dual_wavefunction, enumerate_configurations_oracle, z_symbols, GridBoundary, LOperatorVariant,
    LatticeError, ModelParams, Polarity, SiteConfig, DEFAULT_ORACLE_CAP,
};
use crate::mprod::{mp_dual_wavefunction, MprodError, MAX_AUX};
use crate::poly::LaurentPoly;
use crate::schur::{partition_from_config, SchurError};

/// Largest `M` accepted by the dense sweep.
pub const SWEEP_MAX_M: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    Sweep,
    OracleEnum,
    MpTrace,
    GtSum,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [
        Strategy::Sweep,
        Strategy::OracleEnum,
        Strategy::MpTrace,
        Strategy::GtSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Sweep => "sweep",
            Strategy::OracleEnum => "oracle-enum",
            Strategy::MpTrace => "mp-trace",
            Strategy::GtSum => "gt-sum",
        }
    }

    /// `Err` carries the reason the strategy is out of range at `(m, n)`.
    pub fn check_caps(self, m: usize, n: usize) -> Result<(), String> {
        match self {
            Strategy::Sweep if m > SWEEP_MAX_M => {
                Err(format!("sweep needs M <= {SWEEP_MAX_M}, got {m}"))
            }
            Strategy::OracleEnum if m * n > DEFAULT_ORACLE_CAP => Err(format!(
                "oracle enumeration needs M*N <= {DEFAULT_ORACLE_CAP}, got {}",
                m * n
            )),
            Strategy::MpTrace if n > MAX_AUX => {
                Err(format!("mp-trace needs N <= {MAX_AUX}, got {n}"))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Strategy::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown strategy {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchResult {
    pub strategy: Strategy,
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub micros: u128,
    /// Total number of terms over all hole configurations.
    pub terms: usize,
    pub agree: bool,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("invalid bench configuration: {0}")]
    Invalid(String),
    #[error(
        "{strategy} disagrees with {reference} at holes {holes:?}: got {got}, expected {expected}"
    )]
    Disagreement {
        strategy: Strategy,
        reference: Strategy,
        holes: Vec<usize>,
        got: String,
        expected: String,
    },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Schur(#[from] SchurError),
    #[error(transparent)]
    Mprod(#[from] MprodError),
}

fn compute(
    strategy: Strategy,
    configs: &[SiteConfig],
    m: usize,
    n: usize,
) -> Result<Vec<LaurentPoly>, BenchError> {
    let zs = z_symbols(n);
    let params = ModelParams::new(m)?;
    configs
        .iter()
        .map(|x| {
            Ok(match strategy {
                Strategy::Sweep => dual_wavefunction(x, &zs, LOperatorVariant::Standard, &params)?,
                Strategy::OracleEnum => enumerate_configurations_oracle(
                    &GridBoundary::dual_wavefunction(x, &zs)?,
                    LOperatorVariant::Standard,
                    &params,
                    DEFAULT_ORACLE_CAP,
                )?,
                Strategy::MpTrace => mp_dual_wavefunction(x, &zs)?,
                Strategy::GtSum => dual_tokuyama_sum(&partition_from_config(x), n, m)?,
            })
        })
        .collect()
}

/// Computes the dual wavefunction of every `N`-hole configuration on `M`
/// sites with each strategy and times it. With `strategies = None` every
/// strategy within its cap runs; explicitly requested strategies must all be
/// within their caps. The first strategy is the reference; any
/// disagreement is an error.
pub fn bench(
    m: usize,
    n: usize,
    strategies: Option<&[Strategy]>,
) -> Result<Vec<BenchResult>, BenchError> {
    if m == 0 || n == 0 || n > m {
        return Err(BenchError::Invalid(format!(
            "need 1 <= N <= M, got M = {m}, N = {n}"
        )));
    }
    let chosen: Vec<Strategy> = match strategies {
        Some(list) => {
            for s in list {
                s.check_caps(m, n).map_err(BenchError::CapExceeded)?;
            }
            list.to_vec()
        }
        None => Strategy::ALL
            .into_iter()
            .filter(|s| s.check_caps(m, n).is_ok())
            .collect(),
    };
    if chosen.is_empty() {
        return Err(BenchError::CapExceeded(format!(
            "no strategy applies at M = {m}, N = {n}"
        )));
    }
    let configs = SiteConfig::all(m, n, Polarity::Holes);
    let mut reference: Option<(Strategy, Vec<LaurentPoly>)> = None;
    let mut out = Vec::new();
    for s in chosen {
        let start = Instant::now();
        let values = compute(s, &configs, m, n)?;
        let micros = start.elapsed().as_micros();
        if let Some((r, expected)) = &reference {
            if let Some(i) = (0..configs.len()).find(|&i| values[i] != expected[i]) {
                return Err(BenchError::Disagreement {
                    strategy: s,
                    reference: *r,
                    holes: configs[i].positions().to_vec(),
                    got: values[i].to_string(),
                    expected: expected[i].to_string(),
                });
            }
        }
        out.push(BenchResult {
            strategy: s,
            m,
            n,
            micros,
            terms: values.iter().map(LaurentPoly::num_terms).sum(),
            agree: true,
        });
        if reference.is_none() {
            reference = Some((s, values));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_four_agree_small() {
        let rows = bench(5, 2, None).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| r.agree));
        let terms = rows[0].terms;
        assert!(rows.iter().all(|r| r.terms == terms));
    }

    #[test]
    fn oracle_dropped_above_cap() {
        let rows = bench(7, 3, None).unwrap();
        let names: Vec<_> = rows.iter().map(|r| r.strategy).collect();
        assert_eq!(
            names,
            vec![Strategy::Sweep, Strategy::MpTrace, Strategy::GtSum]
        );
        assert!(matches!(
            bench(7, 3, Some(&[Strategy::OracleEnum])),
            Err(BenchError::CapExceeded(_))
        ));
    }

    #[test]
    fn strategy_names_round_trip() {
        for s in Strategy::ALL {
            assert_eq!(s.name().parse::<Strategy>().unwrap(), s);
        }
        assert!("magic".parse::<Strategy>().is_err());
    }
}
