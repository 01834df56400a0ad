use crate::poly::{LaurentPoly, Monomial, PolyMatrix};

use super::ModelParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LOperatorVariant {
    /// The Felderhof L-operator.
    Standard,
    /// `t⁻¹ L(tz, t)`.
    Rescaled,
    /// Site-dependent factorial parameters `α_j`.
    Inhomogeneous,
    /// `Rescaled` at `t = -1`.
    FiveVertex,
}

impl LOperatorVariant {
    pub const ALL: [LOperatorVariant; 4] = [
        LOperatorVariant::Standard,
        LOperatorVariant::Rescaled,
        LOperatorVariant::Inhomogeneous,
        LOperatorVariant::FiveVertex,
    ];
}

/// The six vertex weights of one site, indexed `[in_aux*2 + in_q][out_aux*2 + out_q]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexTable {
    w: [[LaurentPoly; 4]; 4],
}

impl VertexTable {
    /// Weights of `variant` at `site` with spectral argument `z`. When the
    /// model carries inhomogeneities, `z` is replaced by `z / v_site`.
    pub fn new(
        variant: LOperatorVariant,
        site: usize,
        z: &LaurentPoly,
        params: &ModelParams,
    ) -> Self {
        let z = match params.vs() {
            Some(vs) => z.mul_monomial(&Monomial::var_pow(vs[site - 1], -1)),
            None => z.clone(),
        };
        let t = LaurentPoly::t();
        let one = LaurentPoly::one();
        let t_plus_1 = &t + &one;
        let ti = LaurentPoly::var_pow(crate::poly::VarId::T, -1);
        let (w00, w01_01, w10_01, w01_10, w10_10, w11) = match variant {
            LOperatorVariant::Standard => (
                one.clone(),
                t.clone(),
                one.clone(),
                &t_plus_1 * &z,
                z.clone(),
                z.clone(),
            ),
            LOperatorVariant::Rescaled => (
                ti.clone(),
                one.clone(),
                ti,
                &t_plus_1 * &z,
                z.clone(),
                z.clone(),
            ),
            LOperatorVariant::Inhomogeneous => {
                let a = params.alpha(site);
                (
                    one.clone(),
                    t.clone(),
                    one.clone(),
                    &t_plus_1 * &z,
                    &z + &a,
                    &z - &(&t * &a),
                )
            }
            LOperatorVariant::FiveVertex => (
                -&one,
                one.clone(),
                -&one,
                LaurentPoly::zero(),
                z.clone(),
                z.clone(),
            ),
        };
        let mut w: [[LaurentPoly; 4]; 4] = Default::default();
        w[0][0] = w00;
        w[1][1] = w01_01;
        w[2][1] = w10_01;
        w[1][2] = w01_10;
        w[2][2] = w10_10;
        w[3][3] = w11;
        Self { w }
    }

    #[inline]
    pub fn get(&self, in_aux: u8, in_q: u8, out_aux: u8, out_q: u8) -> &LaurentPoly {
        &self.w[(in_aux * 2 + in_q) as usize][(out_aux * 2 + out_q) as usize]
    }
}

/// `⟨out_aux|⟨out_q| L_{a,site}(z) |in_aux⟩|in_q⟩`. Zero for tuples that
/// violate particle conservation.
#[allow(clippy::too_many_arguments)]
pub fn l_weight(
    variant: LOperatorVariant,
    site: usize,
    in_aux: u8,
    in_q: u8,
    out_aux: u8,
    out_q: u8,
    z: &LaurentPoly,
    params: &ModelParams,
) -> LaurentPoly {
    assert!(site >= 1 && site <= params.m(), "site {site} out of range");
    assert!(
        in_aux < 2 && in_q < 2 && out_aux < 2 && out_q < 2,
        "bits must be 0 or 1"
    );
    VertexTable::new(variant, site, z, params)
        .get(in_aux, in_q, out_aux, out_q)
        .clone()
}

/// The 4×4 matrix of `L_{a,site}(z)` on `W_a ⊗ V_j`, basis index `aux*2 + q`,
/// rows are output states.
pub fn l_matrix(
    variant: LOperatorVariant,
    site: usize,
    z: &LaurentPoly,
    params: &ModelParams,
) -> PolyMatrix {
    let table = VertexTable::new(variant, site, z, params);
    PolyMatrix::from_fn(4, |o, i| {
        table
            .get((i >> 1) as u8, (i & 1) as u8, (o >> 1) as u8, (o & 1) as u8)
            .clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarId;

    fn p1() -> ModelParams {
        ModelParams::new(1).unwrap()
    }

    #[test]
    fn standard_entries() {
        let z = LaurentPoly::z(1);
        let t = LaurentPoly::t();
        let w = |a, b, c, d| l_weight(LOperatorVariant::Standard, 1, a, b, c, d, &z, &p1());
        assert_eq!(w(0, 0, 0, 0), LaurentPoly::one());
        assert_eq!(w(0, 1, 0, 1), t);
        assert_eq!(w(1, 0, 0, 1), LaurentPoly::one());
        assert_eq!(w(0, 1, 1, 0), (&t + &LaurentPoly::one()) * z.clone());
        assert_eq!(w(1, 0, 1, 0), z);
        assert_eq!(w(1, 1, 1, 1), z);
        assert!(w(0, 0, 1, 1).is_zero());
    }

    #[test]
    fn ice_rule_all_variants() {
        let z = LaurentPoly::z(1);
        let params = p1().with_symbolic_alphas();
        for v in LOperatorVariant::ALL {
            for idx in 0u8..16 {
                let (a, b, c, d) = (idx >> 3 & 1, idx >> 2 & 1, idx >> 1 & 1, idx & 1);
                if a + b != c + d {
                    assert!(l_weight(v, 1, a, b, c, d, &z, &params).is_zero());
                }
            }
        }
    }

    #[test]
    fn inhomogeneous_corner() {
        let params = ModelParams::new(3).unwrap().with_symbolic_alphas();
        let z = LaurentPoly::z(1);
        let a2 = LaurentPoly::var(VarId::alpha(2));
        let got = l_weight(LOperatorVariant::Inhomogeneous, 2, 1, 1, 1, 1, &z, &params);
        assert_eq!(got, &z - &(LaurentPoly::t() * a2.clone()));
        let got = l_weight(LOperatorVariant::Inhomogeneous, 2, 1, 0, 1, 0, &z, &params);
        assert_eq!(got, &z + &a2);
    }

    #[test]
    fn rescaled_is_scaled_standard() {
        let z = LaurentPoly::z(1);
        let ti = LaurentPoly::var_pow(VarId::T, -1);
        let tz = Monomial::from_pairs([(VarId::T, 1), (VarId::z(1), 1)]);
        for idx in 0u8..16 {
            let (a, b, c, d) = (idx >> 3 & 1, idx >> 2 & 1, idx >> 1 & 1, idx & 1);
            let std = l_weight(LOperatorVariant::Standard, 1, a, b, c, d, &z, &p1());
            let expect = &std.substitute_scale(VarId::z(1), 1, &tz) * &ti;
            let got = l_weight(LOperatorVariant::Rescaled, 1, a, b, c, d, &z, &p1());
            assert_eq!(got, expect);
            let five = got.substitute_scale(VarId::T, -1, &Monomial::one());
            assert_eq!(
                five,
                l_weight(LOperatorVariant::FiveVertex, 1, a, b, c, d, &z, &p1())
            );
        }
    }
}
