use crate::poly::{LaurentPoly, PolyMatrix};

use super::weights::l_matrix;
use super::{LOperatorVariant, ModelParams};

/// `z2 · R(z1/z2)` on `W_a ⊗ W_b`, basis index `a*2 + b`, rows are outputs.
pub fn r_matrix_cleared(z1: &LaurentPoly, z2: &LaurentPoly) -> PolyMatrix {
    let t = LaurentPoly::t();
    let t1 = &t + &LaurentPoly::one();
    let mut r = PolyMatrix::zeros(4);
    r[(0, 0)] = z2 + &(&t * z1);
    r[(1, 1)] = &t * &(z2 - z1);
    r[(1, 2)] = &t1 * z2;
    r[(2, 1)] = &t1 * z1;
    r[(2, 2)] = z1 - z2;
    r[(3, 3)] = z1 + &(&t * z2);
    r
}

/// Embeds a 4×4 operator acting on the two tensor factors at bit
/// positions `hi > lo` of the 8-dimensional space `W_a ⊗ W_b ⊗ V_j`
/// (index `a*4 + b*2 + j`).
fn embed(op: &PolyMatrix, hi: u32, lo: u32) -> PolyMatrix {
    let spectator = 3 - hi - lo;
    PolyMatrix::from_fn(8, |o, i| {
        if (o >> spectator & 1) != (i >> spectator & 1) {
            return LaurentPoly::zero();
        }
        let local = |s: usize| (s >> hi & 1) * 2 + (s >> lo & 1);
        op[(local(o), local(i))].clone()
    })
}

/// Both sides of `R_ab(z1/z2) L_aj(z1) L_bj(z2) = L_bj(z2) L_aj(z1) R_ab(z1/z2)`
/// as 8×8 matrices, with the `R`-matrix scaled by `z2`.
pub fn yang_baxter_sides(z1: &LaurentPoly, z2: &LaurentPoly) -> (PolyMatrix, PolyMatrix) {
    let params = ModelParams::new(1).expect("one site");
    let r = embed(&r_matrix_cleared(z1, z2), 2, 1);
    let l1 = embed(&l_matrix(LOperatorVariant::Standard, 1, z1, &params), 2, 0);
    let l2 = embed(&l_matrix(LOperatorVariant::Standard, 1, z2, &params), 1, 0);
    let lhs = &(&r * &l1) * &l2;
    let rhs = &(&l2 * &l1) * &r;
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn yang_baxter_holds() {
        let (lhs, rhs) = yang_baxter_sides(&LaurentPoly::z(1), &LaurentPoly::z(2));
        assert!(!lhs.is_zero());
        assert_eq!(lhs, rhs);
    }
}
