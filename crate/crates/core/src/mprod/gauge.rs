use num_traits::One;

use crate::poly::{LaurentPoly, Monomial, PolyMatrix, VarId};

use super::rational::{RationalFn, RationalMatrix};
use super::{check_n, MprodError};

/// Gauge data for `k` auxiliary spaces: `G_k^{-1} 𝒟_k G_k = D̃_k` (diagonal)
/// and `G_k^{-1} 𝒞_k G_k = Σ_j 𝒞_k^{(j)}`.
#[derive(Clone, Debug)]
pub struct GaugeLevel {
    pub g: RationalMatrix,
    pub d_diag: PolyMatrix,
    pub c_parts: Vec<RationalMatrix>,
    /// `H_k`, the lower-left block generator for the next level; absent on the last level.
    pub h: Option<RationalMatrix>,
}

impl GaugeLevel {
    pub fn c_sum(&self) -> RationalMatrix {
        let mut acc = RationalMatrix::zeros(self.d_diag.n());
        for c in &self.c_parts {
            acc = acc.add(c);
        }
        acc
    }
}

/// All levels `1..=n` of the recursive diagonalization.
#[derive(Clone, Debug)]
pub struct Gauge {
    pub zs: Vec<LaurentPoly>,
    pub levels: Vec<GaugeLevel>,
}

impl Gauge {
    pub fn top(&self) -> &GaugeLevel {
        self.levels.last().expect("at least one level")
    }
}

fn inverse_diag(d: &PolyMatrix) -> RationalMatrix {
    let n = d.n();
    let mut out = RationalMatrix::zeros(n);
    for i in 0..n {
        let (c, m) = d[(i, i)]
            .as_term()
            .expect("gauge diagonal entries are monomials");
        assert!(c.is_one(), "gauge diagonal entries are unit monomials");
        let inv = LaurentPoly::monomial(m.inv());
        out.set(i, i, RationalFn::from_poly(inv));
    }
    out
}

/// Builds `G_n`, `D̃_n` and `𝒞_n^{(j)}` by
/// `G_{k+1} = [[G_k, 0], [G_k H_k, G_k]]`,
/// `H_k = D̃_k^{-1} Σ_j (1+t) z_{k+1} / (z_j - z_{k+1}) 𝒞_k^{(j)}`,
/// `D̃_{k+1} = diag(t D̃_k, z_{k+1} D̃_k)`,
/// `𝒞_{k+1}^{(j)} = (z_j + t z_{k+1}) / (z_j - z_{k+1}) · diag(𝒞_k^{(j)}, -(z_{k+1}/t) 𝒞_k^{(j)})` for `j ≤ k`,
/// `𝒞_{k+1}^{(k+1)} = [[0, D̃_k], [0, 0]]`.
pub fn build_gauge(zs: &[VarId]) -> Result<Gauge, MprodError> {
    check_n(zs.len(), 4)?;
    let t = LaurentPoly::t();
    let tp1 = &t + &LaurentPoly::one();
    let z: Vec<LaurentPoly> = zs.iter().map(|&v| LaurentPoly::var(v)).collect();

    let mut c1 = PolyMatrix::zeros(2);
    c1[(0, 1)] = LaurentPoly::one();
    let mut level = GaugeLevel {
        g: RationalMatrix::identity(2),
        d_diag: PolyMatrix::diag(vec![t.clone(), z[0].clone()]),
        c_parts: vec![RationalMatrix::from_poly(&c1)],
        h: None,
    };
    let mut levels = Vec::new();
    for k in 1..zs.len() {
        let zk1 = &z[k];
        let dim = level.d_diag.n();
        let mut sum = RationalMatrix::zeros(dim);
        for (j, cj) in level.c_parts.iter().enumerate() {
            let coeff = RationalFn::new(&tp1 * zk1, &z[j] - zk1);
            sum = sum.add(&cj.scale(&coeff));
        }
        let h = inverse_diag(&level.d_diag).mul(&sum);

        let zero = RationalMatrix::zeros(dim);
        let g = RationalMatrix::from_blocks(&level.g, &zero, &level.g.mul(&h), &level.g);
        let d_diag = PolyMatrix::from_blocks(
            &level.d_diag.scale(&t),
            &PolyMatrix::zeros(dim),
            &PolyMatrix::zeros(dim),
            &level.d_diag.scale(zk1),
        );
        let lower = RationalFn::from_poly(-LaurentPoly::monomial(
            &Monomial::var(zs[k]) * &Monomial::var_pow(VarId::T, -1),
        ));
        let mut c_parts: Vec<RationalMatrix> = level
            .c_parts
            .iter()
            .enumerate()
            .map(|(j, cj)| {
                let pre = RationalFn::new(&z[j] + &(&t * zk1), &z[j] - zk1);
                RationalMatrix::from_blocks(cj, &zero, &zero, &cj.scale(&lower)).scale(&pre)
            })
            .collect();
        c_parts.push(RationalMatrix::from_blocks(
            &zero,
            &RationalMatrix::from_poly(&level.d_diag),
            &zero,
            &zero,
        ));
        level.h = Some(h);
        levels.push(level);
        level = GaugeLevel {
            g,
            d_diag,
            c_parts,
            h: None,
        };
    }
    levels.push(level);
    Ok(Gauge { zs: z, levels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mprod::build_cd;
    use crate::schur::z_vars;

    #[test]
    fn base_level() {
        let g = build_gauge(&z_vars(1)).unwrap();
        let top = g.top();
        assert_eq!(top.g, RationalMatrix::identity(2));
        assert_eq!(
            top.d_diag,
            PolyMatrix::diag(vec![LaurentPoly::t(), LaurentPoly::z(1)])
        );
        assert_eq!(top.c_parts.len(), 1);
    }

    #[test]
    fn two_spaces_symbolic() {
        let zs = z_vars(2);
        let gauge = build_gauge(&zs).unwrap();
        let top = gauge.top();
        assert!(top.d_diag.is_diagonal());
        let (d, c) = build_cd(&gauge.zs).unwrap();
        let d = RationalMatrix::from_poly(&d);
        let c = RationalMatrix::from_poly(&c);
        assert_eq!(
            d.mul(&top.g),
            top.g.mul(&RationalMatrix::from_poly(&top.d_diag))
        );
        assert_eq!(c.mul(&top.g), top.g.mul(&top.c_sum()));
    }
}
