//! Exhaustive identity checks at small sizes, grouped into named suites.
//!
//! Every suite compares two independent computations of the same object and
//! records one case per comparison. Reports contain no timings, so a given
//! seed always produces the same report.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::bench::{bench, BenchError, Strategy};
use crate::gtpattern::{
    dual_tokuyama_sum, enumerate_bottom_fixed, rescaled_dual_tokuyama_sum, tokuyama_sum,
    weight_g_dual,
};
use crate::lattice::{
    b_matrix_element, b_matrix_element_closed_form, dual_wavefunction, dwbp,
    enumerate_configurations, five_vertex_b_element, wavefunction, yang_baxter_sides, z_symbols,
    BOperator, GridBoundary, LOperatorVariant, LatticeError, ModelParams, Polarity, QuantumState,
    SiteConfig, DEFAULT_ORACLE_CAP,
};
use crate::mprod::{mp_dual_wavefunction, prefactor_k, verify_algebra, MprodError};
use crate::poly::{deformed_vandermonde, pair_product, LaurentPoly, Monomial, PolyError, VarId};
use crate::schur::{
    alpha_symbols, config_from_partition, factorial_schur, partition_from_config, schur, z_vars,
    Partition, SchurError,
};

/// Failure messages kept per suite.
const MAX_FAILURES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    WorkedExample,
    Wavefunction,
    DualWavefunction,
    SingleRow,
    DualPatterns,
    TopPatterns,
    DomainWall,
    ConsecutiveHoles,
    MatrixProduct,
    GaugeAlgebra,
    YangBaxter,
    DegreeBound,
    Factorial,
    FiveVertex,
    Bench,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::WorkedExample,
        Suite::Wavefunction,
        Suite::DualWavefunction,
        Suite::SingleRow,
        Suite::DualPatterns,
        Suite::TopPatterns,
        Suite::DomainWall,
        Suite::ConsecutiveHoles,
        Suite::MatrixProduct,
        Suite::GaugeAlgebra,
        Suite::YangBaxter,
        Suite::DegreeBound,
        Suite::Factorial,
        Suite::FiveVertex,
        Suite::Bench,
    ];

    pub fn id(self) -> usize {
        Suite::ALL.iter().position(|&s| s == self).expect("listed") + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::WorkedExample => "worked-example",
            Suite::Wavefunction => "wavefunction",
            Suite::DualWavefunction => "dual-wavefunction",
            Suite::SingleRow => "single-row",
            Suite::DualPatterns => "dual-patterns",
            Suite::TopPatterns => "top-patterns",
            Suite::DomainWall => "domain-wall",
            Suite::ConsecutiveHoles => "consecutive-holes",
            Suite::MatrixProduct => "matrix-product",
            Suite::GaugeAlgebra => "gauge-algebra",
            Suite::YangBaxter => "yang-baxter",
            Suite::DegreeBound => "degree-bound",
            Suite::Factorial => "factorial",
            Suite::FiveVertex => "five-vertex",
            Suite::Bench => "bench",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::WorkedExample => {
                "dual wavefunction at M=4, holes (2,4) against its expansion and Schur form"
            }
            Suite::Wavefunction => "wavefunction = prod(z_j + t z_k) s_lambda(z), M <= 6, N <= 3",
            Suite::DualWavefunction => {
                "dual wavefunction = t^{N(M-N)} prod(z_j + t z_k) s_lambda(z/t), M <= 6, N <= 3"
            }
            Suite::SingleRow => {
                "single-row closed form against direct contraction, M <= 8, N <= 3, plus M=10"
            }
            Suite::DualPatterns => {
                "dual pattern sum = dual wavefunction and its rescaled Schur form, M <= 6, N <= 3"
            }
            Suite::TopPatterns => "top-fixed pattern sum = wavefunction, M <= 6, N <= 3",
            Suite::DomainWall => {
                "domain-wall partition function, homogeneous M <= 5 and inhomogeneous M <= 4"
            }
            Suite::ConsecutiveHoles => {
                "holes at 1..N give t^{N(M-N)} times the N-site domain-wall function"
            }
            Suite::MatrixProduct => "matrix-product trace = dual wavefunction, M <= 6, N <= 3",
            Suite::GaugeAlgebra => {
                "gauge algebra for n <= 4 and the trace prefactor for M <= 5, N <= 3 at 20 points"
            }
            Suite::YangBaxter => "Yang-Baxter relation and B-operator exchange relations, M <= 4",
            Suite::DegreeBound => {
                "t' = 1/t degree and divisibility of the rescaled dual wavefunction, M <= 5, N <= 3"
            }
            Suite::Factorial => "factorial Schur forms of both wavefunctions, M <= 4, N <= 2",
            Suite::FiveVertex => "t = -1 single-row elements and N! surviving inner states, M <= 6",
            Suite::Bench => "all strategies agree at M=8, N=3",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s || x.id().to_string() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Error)]
enum VerifyError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Schur(#[from] SchurError),
    #[error(transparent)]
    Mprod(#[from] MprodError),
    #[error(transparent)]
    Bench(#[from] BenchError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub id: usize,
    pub name: &'static str,
    pub description: &'static str,
    pub cases: usize,
    pub failed: usize,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    /// Number of suites in the full manifest.
    pub manifest: usize,
    /// Number of suites run.
    pub ran: usize,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < MAX_FAILURES {
            self.failures.push(msg);
        }
    }
}

/// Runs `suites` in order.
pub fn run(suites: &[Suite], seed: u64) -> VerifyReport {
    let reports: Vec<SuiteReport> = suites.iter().map(|&s| run_suite(s, seed)).collect();
    VerifyReport {
        seed,
        manifest: Suite::ALL.len(),
        ran: reports.len(),
        passed: reports.iter().all(|r| r.passed),
        suites: reports,
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    let mut tally = Tally::default();
    let result = match suite {
        Suite::WorkedExample => worked_example(&mut tally),
        Suite::Wavefunction => wavefunction_schur(&mut tally),
        Suite::DualWavefunction => dual_wavefunction_schur(&mut tally),
        Suite::SingleRow => single_row(&mut tally),
        Suite::DualPatterns => dual_patterns(&mut tally),
        Suite::TopPatterns => top_patterns(&mut tally),
        Suite::DomainWall => domain_wall(&mut tally),
        Suite::ConsecutiveHoles => consecutive_holes(&mut tally),
        Suite::MatrixProduct => matrix_product(&mut tally),
        Suite::GaugeAlgebra => gauge_algebra(&mut tally, seed),
        Suite::YangBaxter => yang_baxter(&mut tally),
        Suite::DegreeBound => degree_bound(&mut tally),
        Suite::Factorial => factorial(&mut tally),
        Suite::FiveVertex => five_vertex(&mut tally),
        Suite::Bench => bench_agreement(&mut tally),
    };
    if let Err(e) = result {
        tally.fail(format!("error: {e}"));
    }
    SuiteReport {
        id: suite.id(),
        name: suite.name(),
        description: suite.description(),
        cases: tally.cases,
        failed: tally.failed,
        passed: tally.failed == 0 && tally.cases > 0,
        failures: tally.failures,
    }
}

type Outcome = Result<(), VerifyError>;

fn t() -> LaurentPoly {
    LaurentPoly::t()
}

fn t_pow(k: i32) -> LaurentPoly {
    LaurentPoly::var_pow(VarId::T, k)
}

/// `p(z_1/t, …, z_n/t)`.
fn z_over_t(p: &LaurentPoly, n: usize) -> LaurentPoly {
    (1..=n as u16).fold(p.clone(), |acc, j| {
        acc.substitute_scale(
            VarId::z(j),
            1,
            &Monomial::from_pairs([(VarId::z(j), 1), (VarId::T, -1)]),
        )
    })
}

/// Sizes `(M, N)` with `1 <= M <= max_m`, `1 <= N <= min(M, max_n)`.
fn sizes(max_m: usize, max_n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max_m).flat_map(move |m| (1..=m.min(max_n)).map(move |n| (m, n)))
}

fn std_variant() -> LOperatorVariant {
    LOperatorVariant::Standard
}

fn worked_example(tally: &mut Tally) -> Outcome {
    let (z1, z2) = (LaurentPoly::z(1), LaurentPoly::z(2));
    let expansion = t().pow(2) * z1.clone() * z2.pow(3)
        + t() * (t() + LaurentPoly::one()) * z1.pow(2) * z2.pow(2)
        + t() * z1.pow(3) * z2.clone();
    let xbar = SiteConfig::holes(4, vec![2, 4])?;
    let got = dual_wavefunction(&xbar, &z_symbols(2), std_variant(), &ModelParams::new(4)?)?;
    tally.check(got == expansion, || {
        format!("got {got}, expected {expansion}")
    });
    let lam = Partition::new(vec![2, 1])?;
    let schur_form = t().pow(4) * (&z1 + &(t() * z2)) * z_over_t(&schur(&lam, &z_vars(2))?, 2);
    tally.check(schur_form == expansion, || {
        format!("Schur form gives {schur_form}")
    });
    Ok(())
}

fn wavefunction_schur(tally: &mut Tally) -> Outcome {
    for (m, n) in sizes(6, 3) {
        let params = ModelParams::new(m)?;
        let zs = z_symbols(n);
        let vdm = deformed_vandermonde(n as u16);
        for x in SiteConfig::all(m, n, Polarity::Particles) {
            let got = wavefunction(&x, &zs, std_variant(), &params)?;
            let expect = &vdm * &schur(&partition_from_config(&x), &z_vars(n))?;
            tally.check(got == expect, || {
                format!("M={m} particles {:?}", x.positions())
            });
        }
    }
    Ok(())
}

fn dual_wavefunction_schur(tally: &mut Tally) -> Outcome {
    for (m, n) in sizes(6, 3) {
        let params = ModelParams::new(m)?;
        let zs = z_symbols(n);
        let pre = t_pow((n * (m - n)) as i32) * deformed_vandermonde(n as u16);
        for x in SiteConfig::all(m, n, Polarity::Holes) {
            let got = dual_wavefunction(&x, &zs, std_variant(), &params)?;
            let expect = &pre * &z_over_t(&schur(&partition_from_config(&x), &z_vars(n))?, n);
            tally.check(got == expect, || format!("M={m} holes {:?}", x.positions()));
        }
    }
    Ok(())
}

fn single_row(tally: &mut Tally) -> Outcome {
    let z = LaurentPoly::z(1);
    for m in 1..=8 {
        let params = ModelParams::new(m)?;
        for n in 0..=3.min(m - 1) {
            for xbar in SiteConfig::all(m, n, Polarity::Holes) {
                for ybar in SiteConfig::all(m, n + 1, Polarity::Holes) {
                    let direct = b_matrix_element(&xbar, &ybar, &z, std_variant(), &params)?;
                    let closed = b_matrix_element_closed_form(&xbar, &ybar, &z)?;
                    tally.check(direct == closed, || {
                        format!(
                            "M={m} {:?} <- {:?}: {direct} vs {closed}",
                            xbar.positions(),
                            ybar.positions()
                        )
                    });
                }
            }
        }
    }
    let xbar = SiteConfig::holes(10, vec![3, 6])?;
    let ybar = SiteConfig::holes(10, vec![1, 6, 8])?;
    let expect = (t() + LaurentPoly::one()) * t().pow(3) * z.pow(5);
    let direct = b_matrix_element(&xbar, &ybar, &z, std_variant(), &ModelParams::new(10)?)?;
    tally.check(direct == expect, || format!("M=10 instance: {direct}"));
    Ok(())
}

fn dual_patterns(tally: &mut Tally) -> Outcome {
    for (m, n) in sizes(6, 3) {
        let params = ModelParams::new(m)?;
        let zs = z_symbols(n);
        let vdm = deformed_vandermonde(n as u16);
        for lam in Partition::all_in_box(n, m - n) {
            let xbar = config_from_partition(&lam, m, Polarity::Holes)?;
            let direct = dual_wavefunction(&xbar, &zs, std_variant(), &params)?;
            let sum = dual_tokuyama_sum(&lam, n, m)?;
            tally.check(sum == direct, || format!("M={m} lambda {lam}: pattern sum"));
            let rescaled = rescaled_dual_tokuyama_sum(&lam, n, m)?;
            let expect = &vdm * &schur(&lam, &z_vars(n))?;
            tally.check(rescaled == expect, || {
                format!("M={m} lambda {lam}: rescaled sum")
            });
        }
    }
    let (z1, z2) = (LaurentPoly::z(1), LaurentPoly::z(2));
    let mut expected = vec![
        t().pow(2) * z2.pow(3) * z1.clone(),
        t() * (t() + LaurentPoly::one()) * z2.pow(2) * z1.pow(2),
        t() * z2.clone() * z1.pow(3),
    ];
    let mut weights: Vec<LaurentPoly> = enumerate_bottom_fixed(&Partition::new(vec![2, 1])?, 2, 4)?
        .iter()
        .map(weight_g_dual)
        .collect();
    let key = |p: &LaurentPoly| p.to_string();
    expected.sort_by_key(key);
    weights.sort_by_key(key);
    tally.check(weights == expected, || {
        "three-pattern example weights differ".into()
    });
    Ok(())
}

fn top_patterns(tally: &mut Tally) -> Outcome {
    for (m, n) in sizes(6, 3) {
        let params = ModelParams::new(m)?;
        let zs = z_symbols(n);
        for lam in Partition::all_in_box(n, m - n) {
            let x = config_from_partition(&lam, m, Polarity::Particles)?;
            let direct = wavefunction(&x, &zs, std_variant(), &params)?;
            let sum = tokuyama_sum(&lam, n)?;
            tally.check(sum == direct, || format!("M={m} lambda {lam}"));
        }
    }
    Ok(())
}

fn domain_wall(tally: &mut Tally) -> Outcome {
    for m in 1..=5 {
        let got = dwbp(&z_symbols(m), None)?;
        tally.check(got == deformed_vandermonde(m as u16), || {
            format!("homogeneous M={m}: {got}")
        });
    }
    for m in 1..=4 {
        let vs: Vec<VarId> = (1..=m as u16).map(VarId::v).collect();
        let got = dwbp(&z_symbols(m), Some(&vs))?;
        let mono = Monomial::from_pairs((1..=m as u16).map(|k| (VarId::v(k), k as i32 - m as i32)));
        let expect = deformed_vandermonde(m as u16).mul_monomial(&mono);
        tally.check(got == expect, || format!("inhomogeneous M={m}: {got}"));
    }
    Ok(())
}

fn consecutive_holes(tally: &mut Tally) -> Outcome {
    for (m, n) in sizes(6, 3) {
        let xbar = SiteConfig::holes(m, (1..=n).collect())?;
        let zs = z_symbols(n);
        let got = dual_wavefunction(&xbar, &zs, std_variant(), &ModelParams::new(m)?)?;
        let expect = t_pow((n * (m - n)) as i32) * dwbp(&zs, None)?;
        tally.check(got == expect, || format!("M={m} N={n}"));
    }
    Ok(())
}

fn matrix_product(tally: &mut Tally) -> Outcome {
    for (m, n) in sizes(6, 3) {
        let params = ModelParams::new(m)?;
        let zs = z_symbols(n);
        for x in SiteConfig::all(m, n, Polarity::Holes) {
            let direct = dual_wavefunction(&x, &zs, std_variant(), &params)?;
            let trace = mp_dual_wavefunction(&x, &zs)?;
            tally.check(direct == trace, || {
                format!("M={m} holes {:?}", x.positions())
            });
        }
    }
    Ok(())
}

const GAUGE_SAMPLES: usize = 20;

fn gauge_algebra(tally: &mut Tally, seed: u64) -> Outcome {
    for n in 1..=4 {
        for r in verify_algebra(n, GAUGE_SAMPLES, seed)? {
            tally.check(r.passed, || {
                format!("n={n} {}: {:?}", r.relation, r.counterexample)
            });
        }
    }
    for (m, n) in sizes(5, 3) {
        let r = prefactor_k(m, n, GAUGE_SAMPLES, seed)?;
        tally.check(r.passed, || {
            format!("prefactor M={m} N={n}: {:?}", r.counterexample)
        });
    }
    Ok(())
}

fn yang_baxter(tally: &mut Tally) -> Outcome {
    let (z1, z2) = (LaurentPoly::z(1), LaurentPoly::z(2));
    let (lhs, rhs) = yang_baxter_sides(&z1, &z2);
    tally.check(lhs == rhs, || "Yang-Baxter relation".into());
    let tp = t_pow(-1);
    for m in 1..=4 {
        let params = ModelParams::new(m)?;
        for (variant, left, right) in [
            (
                LOperatorVariant::Standard,
                &z2 + &(t() * z1.clone()),
                &z1 + &(t() * z2.clone()),
            ),
            (
                LOperatorVariant::Rescaled,
                &z1 + &(&tp * &z2),
                &(&tp * &z1) + &z2,
            ),
        ] {
            let b1 = BOperator::new(variant, &z1, &params);
            let b2 = BOperator::new(variant, &z2, &params);
            for mask in 0..1u32 << m {
                let e = QuantumState::basis(m, mask);
                let l = b1.apply(&b2.apply(&e)).scale(&left);
                let r = b2.apply(&b1.apply(&e)).scale(&right);
                tally.check(l == r, || {
                    format!("{variant:?} exchange, M={m}, basis {mask:b}")
                });
            }
        }
    }
    Ok(())
}

fn degree_bound(tally: &mut Tally) -> Outcome {
    let tp_of_t = Monomial::var_pow(VarId::TPrime, -1);
    for (m, n) in sizes(5, 3) {
        let params = ModelParams::new(m)?;
        let zs = z_symbols(n);
        let top = (n * (n - 1) / 2) as i32;
        let tp = LaurentPoly::var(VarId::TPrime);
        let divisor = pair_product(n as u16, |j, k| {
            &(&tp * &LaurentPoly::z(j)) + &LaurentPoly::z(k)
        });
        for x in SiteConfig::all(m, n, Polarity::Holes) {
            let q =
                t_pow(n as i32) * dual_wavefunction(&x, &zs, LOperatorVariant::Rescaled, &params)?;
            let q = q.substitute_scale(VarId::T, 1, &tp_of_t);
            let (lo, hi) = q.degree_range(VarId::TPrime)?;
            tally.check(lo >= 0 && hi == top, || {
                format!("M={m} holes {:?}: t' degrees {lo}..{hi}", x.positions())
            });
            tally.check(q.exact_div(&divisor).is_ok(), || {
                format!("M={m} holes {:?}: not divisible", x.positions())
            });
        }
    }
    Ok(())
}

fn factorial(tally: &mut Tally) -> Outcome {
    for (m, n) in sizes(4, 2) {
        let params = ModelParams::new(m)?.with_symbolic_alphas();
        let alphas = alpha_symbols(m);
        let neg: Vec<LaurentPoly> = alphas.iter().map(|a| -a).collect();
        let zs = z_symbols(n);
        let vdm = deformed_vandermonde(n as u16);
        let pre = t_pow((n * (m - n)) as i32) * vdm.clone();
        for xbar in SiteConfig::all(m, n, Polarity::Holes) {
            let lam = partition_from_config(&xbar);
            let got = dual_wavefunction(&xbar, &zs, LOperatorVariant::Inhomogeneous, &params)?;
            let expect = &pre * &z_over_t(&factorial_schur(&lam, &z_vars(n), &neg)?, n);
            tally.check(got == expect, || {
                format!("dual M={m} holes {:?}", xbar.positions())
            });
        }
        for x in SiteConfig::all(m, n, Polarity::Particles) {
            let lam = partition_from_config(&x);
            let got = wavefunction(&x, &zs, LOperatorVariant::Inhomogeneous, &params)?;
            let expect = &vdm * &factorial_schur(&lam, &z_vars(n), &alphas)?;
            tally.check(got == expect, || {
                format!("M={m} particles {:?}", x.positions())
            });
        }
    }
    let zeros = vec![LaurentPoly::zero(); 6];
    for n in 1..=3 {
        for lam in Partition::all_in_box(n, 3) {
            let f = factorial_schur(&lam, &z_vars(n), &zeros)?;
            tally.check(f == schur(&lam, &z_vars(n))?, || {
                format!("alpha = 0 reduction, lambda {lam}")
            });
        }
    }
    Ok(())
}

fn five_vertex(tally: &mut Tally) -> Outcome {
    let z = LaurentPoly::z(1);
    for m in 1..=6 {
        let params = ModelParams::new(m)?;
        for n in 0..m {
            for xbar in SiteConfig::all(m, n, Polarity::Holes) {
                for ybar in SiteConfig::all(m, n + 1, Polarity::Holes) {
                    let closed = five_vertex_b_element(&xbar, &ybar, &z)?;
                    let swept =
                        b_matrix_element(&xbar, &ybar, &z, LOperatorVariant::Rescaled, &params)?
                            .substitute_scale(VarId::T, -1, &Monomial::one());
                    tally.check(closed == swept, || {
                        format!(
                            "M={m} {:?} <- {:?}: {closed} vs {swept}",
                            xbar.positions(),
                            ybar.positions()
                        )
                    });
                }
            }
        }
    }
    for (m, n) in sizes(6, 3) {
        let params = ModelParams::new(m)?;
        let zs = z_symbols(n);
        let factorial: usize = (1..=n).product();
        for xbar in SiteConfig::all(m, n, Polarity::Holes) {
            let boundary = GridBoundary::dual_wavefunction(&xbar, &zs)?;
            let count = enumerate_configurations(
                &boundary,
                LOperatorVariant::FiveVertex,
                &params,
                DEFAULT_ORACLE_CAP,
            )?
            .len();
            tally.check(count == factorial, || {
                format!("M={m} holes {:?}: {count} inner states", xbar.positions())
            });
        }
    }
    Ok(())
}

fn bench_agreement(tally: &mut Tally) -> Outcome {
    let rows = bench(8, 3, None)?;
    tally.check(rows.len() >= 3, || {
        format!("only {} strategies ran", rows.len())
    });
    tally.check(rows.iter().any(|r| r.strategy == Strategy::Sweep), || {
        "sweep missing".into()
    });
    for r in rows {
        tally.check(r.agree, || format!("{} disagrees", r.strategy));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(s.id().to_string().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(Suite::Bench.id(), 15);
    }

    #[test]
    fn cheap_suites_pass() {
        for s in [
            Suite::WorkedExample,
            Suite::DomainWall,
            Suite::ConsecutiveHoles,
        ] {
            let r = run_suite(s, 1);
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn manifest_counts_all_suites() {
        let r = run(&[Suite::WorkedExample], 0);
        assert_eq!(r.manifest, 15);
        assert_eq!(r.ran, 1);
    }
}
