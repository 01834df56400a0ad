use std::collections::BTreeSet;

use felderhof::gtpattern::{
    enumerate_bottom_fixed, enumerate_top_fixed, weight_g_dual, StrictGTPattern,
};
use felderhof::lattice::{
    b_matrix_element, enumerate_configurations, z_symbols, GridBoundary, LOperatorVariant,
    ModelParams, Polarity,
};
use felderhof::poly::LaurentPoly;
use felderhof::schur::{config_from_partition, Partition};
use itertools::Itertools;
use proptest::prelude::*;

/// Every triangular array with the given first row whose later rows are
/// strictly decreasing and interlace the row before, by filtering all
/// strictly decreasing candidate rows.
fn nested_loop_patterns(first: &[usize]) -> BTreeSet<Vec<Vec<usize>>> {
    let n = first.len();
    let max = first.first().copied().unwrap_or(0);
    let mut partial: Vec<Vec<Vec<usize>>> = vec![vec![first.to_vec()]];
    for i in 1..n {
        let mut next = Vec::new();
        for rows in &partial {
            let up = &rows[i - 1];
            for mut cand in (0..=max).combinations(n - i) {
                cand.reverse();
                if (0..n - i).all(|j| up[j] >= cand[j] && cand[j] >= up[j + 1]) {
                    let mut r = rows.clone();
                    r.push(cand);
                    next.push(r);
                }
            }
        }
        partial = next;
    }
    partial.into_iter().collect()
}

fn first_row(lam: &Partition, n: usize) -> Vec<usize> {
    (0..n).map(|j| lam.part(j + 1) + n - j - 1).collect()
}

fn rows_of(p: &[StrictGTPattern]) -> BTreeSet<Vec<Vec<usize>>> {
    p.iter().map(|q| q.rows().to_vec()).collect()
}

#[test]
fn enumeration_matches_nested_loops() {
    for n in 1..=4 {
        for lam in Partition::all_in_box(n, 3) {
            let expect = nested_loop_patterns(&first_row(&lam, n));
            let top = enumerate_top_fixed(&lam, n).unwrap();
            assert_eq!(top.len(), expect.len(), "lambda {lam}");
            assert_eq!(rows_of(&top), expect);
            let bottom = enumerate_bottom_fixed(&lam, n, n + 3).unwrap();
            assert_eq!(rows_of(&bottom), expect);
        }
    }
}

#[test]
fn dual_patterns_are_the_inner_states() {
    for m in 2..=6usize {
        for n in 1..=m.min(3) {
            let params = ModelParams::new(m).unwrap();
            let zs = z_symbols(n);
            for lam in Partition::all_in_box(n, m - n) {
                let xbar = config_from_partition(&lam, m, Polarity::Holes).unwrap();
                let boundary = GridBoundary::dual_wavefunction(&xbar, &zs).unwrap();
                let grids =
                    enumerate_configurations(&boundary, LOperatorVariant::Standard, &params, 20)
                        .unwrap();
                let pats = enumerate_bottom_fixed(&lam, n, m).unwrap();
                assert_eq!(grids.len(), pats.len(), "M={m} lambda {lam}");
            }
        }
    }
}

fn product_of_rows(p: &StrictGTPattern) -> LaurentPoly {
    let layers = p.layer_configs();
    let m = p.m().unwrap();
    let n = p.n();
    let params = ModelParams::new(m).unwrap();
    (0..n)
        .map(|i| {
            let z = LaurentPoly::z((n - i) as u16);
            b_matrix_element(
                &layers[i + 1],
                &layers[i],
                &z,
                LOperatorVariant::Standard,
                &params,
            )
            .unwrap()
        })
        .product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn dual_weight_is_a_product_of_row_elements(m in 2usize..=7, n in 1usize..=3, seed in any::<u64>()) {
        prop_assume!(n <= m);
        let shapes = Partition::all_in_box(n, m - n);
        let lam = &shapes[(seed % shapes.len() as u64) as usize];
        for p in enumerate_bottom_fixed(lam, n, m).unwrap() {
            prop_assert_eq!(weight_g_dual(&p), product_of_rows(&p));
        }
    }

    #[test]
    fn pattern_json_round_trip(m in 3usize..=6, n in 1usize..=3) {
        prop_assume!(n <= m);
        let lam = Partition::all_in_box(n, m - n).pop().unwrap();
        for p in enumerate_bottom_fixed(&lam, n, m).unwrap() {
            let s = serde_json::to_string(&p).unwrap();
            let back: StrictGTPattern = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}

#[test]
fn malformed_pattern_json_rejected() {
    let bad = r#"{"orientation":"bottom","M":4,"rows":[[3,1],[4]]}"#;
    assert!(serde_json::from_str::<StrictGTPattern>(bad).is_err());
}
