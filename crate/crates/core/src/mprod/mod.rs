//! Matrix-product form of the dual wavefunction: the column operators
//! `𝒞_n, 𝒟_n` acting on `n` auxiliary spaces, their gauge
//! diagonalization, and randomized checks of the resulting algebra.
//!
//! Auxiliary basis states are bitmasks with bit `a-1` describing space
//! `a`, so the newest space in each recursion step is the outer block index.

mod check;
mod gauge;
mod rational;

use thiserror::Error;

use crate::lattice::{l_weight, LOperatorVariant, LatticeError, ModelParams, Polarity, SiteConfig};
use crate::poly::{LaurentPoly, PolyError, PolyMatrix};

pub use check::{
    prefactor_k, sample_point, verify_algebra, RelationReport, DEFAULT_SEED, MAX_RESAMPLES,
};
pub use gauge::{build_gauge, Gauge, GaugeLevel};
pub use rational::{RationalFn, RationalMatrix};

/// Largest number of auxiliary spaces handled by the dense operators.
pub const MAX_AUX: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MprodError {
    #[error("{0} auxiliary spaces exceed the cap of {1}")]
    TooManySpaces(usize, usize),
    #[error("could not find a non-degenerate sample point after {0} attempts")]
    DegenerateSample(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

fn check_n(n: usize, cap: usize) -> Result<(), MprodError> {
    if n == 0 || n > cap {
        return Err(MprodError::TooManySpaces(n, cap));
    }
    Ok(())
}

/// `(𝒟_n, 𝒞_n)` from `𝒟_1 = diag(t, z_1)`, `𝒞_1 = [[0,1],[0,0]]` and
/// `𝒟_{n+1} = [[t𝒟_n, 0], [(1+t) z_{n+1} 𝒞_n, z_{n+1} 𝒟_n]]`,
/// `𝒞_{n+1} = [[𝒞_n, 𝒟_n], [0, z_{n+1} 𝒞_n]]`.
pub fn build_cd(zs: &[LaurentPoly]) -> Result<(PolyMatrix, PolyMatrix), MprodError> {
    check_n(zs.len(), MAX_AUX)?;
    let t = LaurentPoly::t();
    let mut d = PolyMatrix::diag(vec![t.clone(), zs[0].clone()]);
    let mut c = PolyMatrix::zeros(2);
    c[(0, 1)] = LaurentPoly::one();
    for z in &zs[1..] {
        let h = d.n();
        let zero = PolyMatrix::zeros(h);
        let tp1z = &(&t + &LaurentPoly::one()) * z;
        let next_d = PolyMatrix::from_blocks(&d.scale(&t), &zero, &c.scale(&tp1z), &d.scale(z));
        let next_c = PolyMatrix::from_blocks(&c, &d, &zero, &c.scale(z));
        d = next_d;
        c = next_c;
    }
    Ok((d, c))
}

/// `(𝒟, 𝒞) = (⟨1|𝒯_j|1⟩, ⟨1|𝒯_j|0⟩)` for the column operator
/// `𝒯_j = L_{1j}(z_1) ⋯ L_{nj}(z_n)` assembled directly from vertex weights.
pub fn column_operators(zs: &[LaurentPoly]) -> Result<(PolyMatrix, PolyMatrix), MprodError> {
    let n = zs.len();
    check_n(n, MAX_AUX)?;
    let params = ModelParams::new(1)?;
    let weights: Vec<[[LaurentPoly; 4]; 4]> = zs
        .iter()
        .map(|z| {
            let mut w: [[LaurentPoly; 4]; 4] = Default::default();
            for i in 0..4u8 {
                for o in 0..4u8 {
                    w[i as usize][o as usize] = l_weight(
                        LOperatorVariant::Standard,
                        1,
                        i >> 1,
                        i & 1,
                        o >> 1,
                        o & 1,
                        z,
                        &params,
                    );
                }
            }
            w
        })
        .collect();
    let element = |out_aux: usize, in_aux: usize, in_q: u8| -> LaurentPoly {
        let mut q = in_q;
        let mut acc = LaurentPoly::one();
        for a in (0..n).rev() {
            let ia = (in_aux >> a & 1) as u8;
            let oa = (out_aux >> a & 1) as u8;
            let Some(next) = (ia + q).checked_sub(oa).filter(|&x| x < 2) else {
                return LaurentPoly::zero();
            };
            let w = &weights[a][(ia * 2 + q) as usize][(oa * 2 + next) as usize];
            if w.is_zero() {
                return LaurentPoly::zero();
            }
            acc *= w;
            q = next;
        }
        if q == 1 {
            acc
        } else {
            LaurentPoly::zero()
        }
    };
    let dim = 1 << n;
    let d = PolyMatrix::from_fn(dim, |o, i| element(o, i, 1));
    let c = PolyMatrix::from_fn(dim, |o, i| element(o, i, 0));
    Ok((d, c))
}

/// `⟨0^N| 𝒟^{M-x̄_N} 𝒞 𝒟^{x̄_N-x̄_{N-1}-1} ⋯ 𝒞 𝒟^{x̄_1-1} |1^N⟩`, i.e. the
/// trace against `P = |1^N⟩⟨0^N|`.
pub fn mp_dual_wavefunction(
    xbar: &SiteConfig,
    zs: &[LaurentPoly],
) -> Result<LaurentPoly, MprodError> {
    if xbar.polarity() != Polarity::Holes || xbar.len() != zs.len() {
        return Err(LatticeError::ConfigMismatch(
            "expected N holes for N spectral parameters".into(),
        )
        .into());
    }
    if zs.is_empty() {
        return Ok(LaurentPoly::one());
    }
    let (d, c) = build_cd(zs)?;
    let dim = d.n();
    let mut v = vec![LaurentPoly::zero(); dim];
    v[dim - 1] = LaurentPoly::one();
    let mut site = 1;
    for &x in xbar.positions() {
        for _ in site..x {
            v = d.mul_vec(&v);
        }
        v = c.mul_vec(&v);
        site = x + 1;
    }
    for _ in site..=xbar.m() {
        v = d.mul_vec(&v);
    }
    Ok(v.swap_remove(0))
}
