use felderhof::lattice::{
    dual_wavefunction, z_symbols, LOperatorVariant, ModelParams, Polarity, SiteConfig,
};
use felderhof::mprod::{build_gauge, prefactor_k, verify_algebra, DEFAULT_SEED};
use felderhof::poly::{LaurentPoly, Monomial, VarId};
use felderhof::schur::{partition_from_config, schur, z_vars};

/// `s_λ̄(z/t)` for the partition of `xbar`.
fn schur_over_t(xbar: &SiteConfig) -> LaurentPoly {
    let n = xbar.len();
    let s = schur(&partition_from_config(xbar), &z_vars(n)).unwrap();
    (1..=n as u16).fold(s, |acc, j| {
        acc.substitute_scale(
            VarId::z(j),
            1,
            &Monomial::from_pairs([(VarId::z(j), 1), (VarId::T, -1)]),
        )
    })
}

#[test]
fn ratio_to_schur_is_independent_of_holes() {
    for (m, n) in [(5, 2), (6, 3), (6, 2)] {
        let params = ModelParams::new(m).unwrap();
        let zs = z_symbols(n);
        let configs = SiteConfig::all(m, n, Polarity::Holes);
        assert!(configs.len() >= 3);
        let first = &configs[0];
        let f0 = dual_wavefunction(first, &zs, LOperatorVariant::Standard, &params).unwrap();
        let s0 = schur_over_t(first);
        for x in &configs[1..] {
            let f = dual_wavefunction(x, &zs, LOperatorVariant::Standard, &params).unwrap();
            assert_eq!(
                &f * &s0,
                &f0 * &schur_over_t(x),
                "M={m} holes {:?}",
                x.positions()
            );
        }
    }
}

#[test]
fn diagonal_gauge_entries() {
    for n in 1..=4 {
        let g = build_gauge(&z_vars(n)).unwrap();
        let d = &g.top().d_diag;
        assert!(d.is_diagonal());
        for i in 0..1usize << n {
            let expect = Monomial::from_pairs((0..n).map(|a| {
                if i >> a & 1 == 1 {
                    (VarId::z(a as u16 + 1), 1)
                } else {
                    (VarId::T, 1)
                }
            }));
            assert_eq!(d[(i, i)], LaurentPoly::monomial(expect), "n={n} index {i}");
        }
    }
}

#[test]
fn algebra_reports_serialize() {
    let reports = verify_algebra(2, 20, DEFAULT_SEED).unwrap();
    assert!(reports.iter().all(|r| r.passed));
    let v = serde_json::to_value(&reports[0]).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys.len(), 5);
    for k in ["relation", "n", "samples", "passed", "counterexample"] {
        assert!(keys.contains(&k));
    }
    assert!(v["counterexample"].is_null());
}

#[test]
fn algebra_is_seed_deterministic() {
    assert_eq!(
        verify_algebra(3, 4, 7).unwrap(),
        verify_algebra(3, 4, 7).unwrap()
    );
}

#[test]
fn prefactor_boundary_cases() {
    for m in 1..=5 {
        assert!(
            prefactor_k(m, 1, 20, DEFAULT_SEED).unwrap().passed,
            "N=1, M={m}"
        );
    }
    for n in 1..=3 {
        assert!(
            prefactor_k(n, n, 20, DEFAULT_SEED).unwrap().passed,
            "M=N={n}"
        );
    }
    assert!(prefactor_k(4, 2, 20, DEFAULT_SEED).unwrap().passed);
    assert!(prefactor_k(2, 3, 20, DEFAULT_SEED).is_err());
}
