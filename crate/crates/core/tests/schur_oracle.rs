//! Schur polynomials against the semistandard-tableau expansion.

use felderhof::poly::{LaurentPoly, VarId};
use felderhof::schur::{factorial_schur, schur, z_vars, Partition};
use proptest::prelude::*;

/// `Σ_T z^T` over semistandard tableaux of shape `λ` with entries in `1..=n`,
/// filled cell by cell in reading order.
fn tableau_sum(lambda: &[usize], n: usize) -> LaurentPoly {
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid = vec![vec![0usize; lambda.first().copied().unwrap_or(0)]; lambda.len()];
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        n: usize,
        acc: &mut LaurentPoly,
    ) {
        if k == cells.len() {
            let mut term = LaurentPoly::one();
            for row in grid.iter() {
                for &v in row.iter().filter(|&&v| v > 0) {
                    term *= &LaurentPoly::z(v as u16);
                }
            }
            *acc += &term;
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=n {
            grid[r][c] = v;
            fill(k + 1, cells, grid, n, acc);
        }
        grid[r][c] = 0;
    }
    let mut acc = LaurentPoly::zero();
    fill(0, &cells, &mut grid, n, &mut acc);
    acc
}

#[test]
fn bialternant_matches_tableaux() {
    for n in 1..=3 {
        for lam in Partition::all_in_box(n, 3) {
            let parts: Vec<usize> = lam.parts().iter().copied().filter(|&p| p > 0).collect();
            assert_eq!(
                schur(&lam, &z_vars(n)).unwrap(),
                tableau_sum(&parts, n),
                "lambda {lam}"
            );
        }
    }
}

#[test]
fn four_variables() {
    for lam in [vec![2, 1, 0, 0], vec![1, 1, 1, 0], vec![2, 2, 1, 0]] {
        let p = Partition::new(lam.clone()).unwrap();
        let parts: Vec<usize> = lam.into_iter().filter(|&x| x > 0).collect();
        assert_eq!(schur(&p, &z_vars(4)).unwrap(), tableau_sum(&parts, 4));
    }
}

#[test]
fn one_variable_factorial_is_a_rising_product() {
    // s_(k)(z | α) = ∏_{j=1}^{k} (z + α_j)
    let a: Vec<LaurentPoly> = (1..=4u16)
        .map(|j| LaurentPoly::var(VarId::alpha(j)))
        .collect();
    let got = factorial_schur(&Partition::new(vec![3]).unwrap(), &z_vars(1), &a).unwrap();
    let expect = (0..3).fold(LaurentPoly::one(), |acc, j| {
        acc * (LaurentPoly::z(1) + a[j].clone())
    });
    assert_eq!(got, expect);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn symmetric_under_permutation(a in 0usize..=3, b in 0usize..=3, c in 0usize..=3, perm in Just(()).prop_perturb(|_, mut rng| {
        let mut v = vec![VarId::z(1), VarId::z(2), VarId::z(3)];
        for i in (1..3).rev() {
            let j = (rng.next_u32() as usize) % (i + 1);
            v.swap(i, j);
        }
        v
    })) {
        let mut parts = vec![a, b, c];
        parts.sort_unstable_by(|x, y| y.cmp(x));
        let lam = Partition::new(parts).unwrap();
        prop_assert_eq!(schur(&lam, &perm).unwrap(), schur(&lam, &z_vars(3)).unwrap());
    }
}
