//! Row-transfer sweeps against brute-force grid enumeration.

use felderhof::lattice::{
    dual_wavefunction, enumerate_configurations_oracle, wavefunction, z_symbols, GridBoundary,
    LOperatorVariant, ModelParams, Polarity, SiteConfig, DEFAULT_ORACLE_CAP,
};
use proptest::prelude::*;

fn params(variant: LOperatorVariant, m: usize) -> ModelParams {
    let p = ModelParams::new(m).unwrap();
    match variant {
        LOperatorVariant::Inhomogeneous => p.with_symbolic_alphas(),
        _ => p,
    }
}

fn check(variant: LOperatorVariant, cfg: &SiteConfig) {
    let m = cfg.m();
    let n = cfg.len();
    let zs = z_symbols(n);
    let p = params(variant, m);
    let (swept, boundary) = match cfg.polarity() {
        Polarity::Particles => (
            wavefunction(cfg, &zs, variant, &p).unwrap(),
            GridBoundary::wavefunction(cfg, &zs).unwrap(),
        ),
        Polarity::Holes => (
            dual_wavefunction(cfg, &zs, variant, &p).unwrap(),
            GridBoundary::dual_wavefunction(cfg, &zs).unwrap(),
        ),
    };
    let brute =
        enumerate_configurations_oracle(&boundary, variant, &p, DEFAULT_ORACLE_CAP).unwrap();
    assert_eq!(
        swept,
        brute,
        "{variant:?} {:?} {:?} on {m} sites",
        cfg.polarity(),
        cfg.positions()
    );
}

#[test]
fn exhaustive_small_grids() {
    for m in 1..=5 {
        for n in 0..=m.min(3) {
            for variant in LOperatorVariant::ALL {
                for polarity in [Polarity::Particles, Polarity::Holes] {
                    for cfg in SiteConfig::all(m, n, polarity) {
                        check(variant, &cfg);
                    }
                }
            }
        }
    }
}

#[test]
fn oracle_respects_cap() {
    let cfg = SiteConfig::holes(7, vec![1, 2, 3]).unwrap();
    let zs = z_symbols(3);
    let b = GridBoundary::dual_wavefunction(&cfg, &zs).unwrap();
    let p = ModelParams::new(7).unwrap();
    assert!(enumerate_configurations_oracle(
        &b,
        LOperatorVariant::Standard,
        &p,
        DEFAULT_ORACLE_CAP
    )
    .is_err());
}

fn config() -> impl Strategy<Value = (usize, Vec<usize>, bool)> {
    (4usize..=6).prop_flat_map(|m| {
        let n_max = (DEFAULT_ORACLE_CAP / m).min(3);
        (
            Just(m),
            prop::sample::subsequence((1..=m).collect::<Vec<_>>(), 1..=n_max),
            any::<bool>(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_configs_agree((m, pos, holes) in config(), v in 0usize..4) {
        let polarity = if holes { Polarity::Holes } else { Polarity::Particles };
        let cfg = SiteConfig::new(m, pos, polarity).unwrap();
        check(LOperatorVariant::ALL[v], &cfg);
    }
}
