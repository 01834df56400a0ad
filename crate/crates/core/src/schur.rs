//! Partitions, configuration ↔ Young diagram translation, and Schur /
//! factorial Schur polynomials as bialternant quotients.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{LatticeError, Polarity, SiteConfig};
use crate::poly::{LaurentPoly, PolyError, PolyMatrix, VarId};

pub const DEFAULT_DET_CAP: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchurError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("determinant of size {n} exceeds the cap of {cap}")]
    DimensionCap { n: usize, cap: usize },
    #[error("need {needed} factorial parameters, got {got}")]
    InsufficientAlphas { needed: usize, got: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A weakly decreasing sequence of non-negative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SchurError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SchurError::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Length of the part list, zeros included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&p| p == 0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_i` (1-based), 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Exactly `n` parts: zero-padded, or truncated when the dropped parts
    /// are zero.
    pub fn padded(&self, n: usize) -> Result<Self, SchurError> {
        if self.0.iter().skip(n).any(|&p| p != 0) {
            return Err(SchurError::InvalidPartition(format!(
                "{self} has more than {n} nonzero parts"
            )));
        }
        Ok(Self((1..=n).map(|i| self.part(i)).collect()))
    }

    /// All partitions with exactly `n` parts, each at most `max_part`.
    pub fn all_in_box(n: usize, max_part: usize) -> Vec<Self> {
        (0..n)
            .map(|_| (0..=max_part).rev())
            .multi_cartesian_product()
            .filter(|p| p.windows(2).all(|w| w[0] >= w[1]))
            .map(Self)
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// The staircase `δ = (n-1, …, 1, 0)`.
pub fn staircase(n: usize) -> Vec<usize> {
    (0..n).rev().collect()
}

/// `λ_j = pos_{N-j+1} - N + j - 1` for a configuration with `N` marks.
pub fn partition_from_config(cfg: &SiteConfig) -> Partition {
    let pos = cfg.positions();
    let n = pos.len();
    Partition((1..=n).map(|j| pos[n - j] - (n - j + 1)).collect())
}

/// Inverse of [`partition_from_config`] on `m` sites, with `λ` read as `N = λ.len()` parts.
pub fn config_from_partition(
    lambda: &Partition,
    m: usize,
    polarity: Polarity,
) -> Result<SiteConfig, SchurError> {
    let n = lambda.len();
    let positions = (1..=n).map(|i| lambda.part(n - i + 1) + i).collect();
    Ok(SiteConfig::new(m, positions, polarity)?)
}

/// The Young diagram `μ̄` of an `N+1`-hole configuration, together with
/// `λ̄_0 = M - N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuBar {
    pub mu: Partition,
    pub lambda0: usize,
}

pub fn mu_from_config(ybar: &SiteConfig, n: usize, m: usize) -> Result<MuBar, SchurError> {
    if ybar.len() != n + 1 || ybar.m() != m {
        return Err(SchurError::Lattice(LatticeError::ConfigMismatch(format!(
            "expected {} marks on {m} sites",
            n + 1
        ))));
    }
    Ok(MuBar {
        mu: partition_from_config(ybar),
        lambda0: m - n,
    })
}

fn sign_of(perm: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn det_permutation(m: &PolyMatrix) -> LaurentPoly {
    let n = m.n();
    let mut acc = LaurentPoly::zero();
    for perm in (0..n).permutations(n) {
        let mut term = LaurentPoly::one();
        for (i, &j) in perm.iter().enumerate() {
            let e = &m[(i, j)];
            if e.is_zero() {
                term = LaurentPoly::zero();
                break;
            }
            term *= e;
        }
        if term.is_zero() {
            continue;
        }
        if sign_of(&perm) {
            acc += term;
        } else {
            acc -= &term;
        }
    }
    acc
}

fn det_bareiss(m: &PolyMatrix) -> Result<LaurentPoly, SchurError> {
    let n = m.n();
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n.saturating_sub(1) {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(LaurentPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[(i, j)] * &a[(k, k)]) - &(&a[(i, k)] * &a[(k, j)]);
                a[(i, j)] = num.exact_div(&prev)?;
            }
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if negate { -d } else { d })
}

/// Exact determinant with the default size cap.
pub fn det_poly(m: &PolyMatrix) -> Result<LaurentPoly, SchurError> {
    det_poly_capped(m, DEFAULT_DET_CAP)
}

/// Permutation expansion for `n ≤ 4`, fraction-free elimination above.
pub fn det_poly_capped(m: &PolyMatrix, cap: usize) -> Result<LaurentPoly, SchurError> {
    let n = m.n();
    if n > cap {
        return Err(SchurError::DimensionCap { n, cap });
    }
    match n {
        0 => Ok(LaurentPoly::one()),
        1..=4 => Ok(det_permutation(m)),
        _ => det_bareiss(m),
    }
}

/// Divides by `∏_{j<k} (z_j - z_k)` one factor at a time.
fn divide_vandermonde(mut p: LaurentPoly, zs: &[VarId]) -> Result<LaurentPoly, SchurError> {
    for j in 0..zs.len() {
        for k in j + 1..zs.len() {
            let d = LaurentPoly::var(zs[j]) - LaurentPoly::var(zs[k]);
            p = p.exact_div(&d)?;
        }
    }
    Ok(p)
}

/// `s_λ(z_1, …, z_N) = det(z_j^{λ_k + N - k}) / ∏_{j<k}(z_j - z_k)` with `N = zs.len()`.
pub fn schur(lambda: &Partition, zs: &[VarId]) -> Result<LaurentPoly, SchurError> {
    let n = zs.len();
    let lambda = lambda.padded(n)?;
    let m = PolyMatrix::from_fn(n, |j, k| {
        LaurentPoly::var_pow(zs[j], (lambda.part(k + 1) + n - k - 1) as i32)
    });
    divide_vandermonde(det_poly(&m)?, zs)
}

/// `z_1, …, z_n` as variable ids.
pub fn z_vars(n: usize) -> Vec<VarId> {
    (1..=n as u16).map(VarId::z).collect()
}

/// Symbolic `α_1, …, α_m`.
pub fn alpha_symbols(m: usize) -> Vec<LaurentPoly> {
    (1..=m as u16)
        .map(|j| LaurentPoly::var(VarId::alpha(j)))
        .collect()
}

/// `s_λ(z | α) = det(∏_{j=1}^{μ_l} (z_k + α_j)) / ∏_{k<k'}(z_k - z_{k'})`
/// with `μ = λ + δ`; row `l` of the determinant uses the first `μ_l`
/// factorial parameters in the order given.
pub fn factorial_schur(
    lambda: &Partition,
    zs: &[VarId],
    alphas: &[LaurentPoly],
) -> Result<LaurentPoly, SchurError> {
    let n = zs.len();
    let lambda = lambda.padded(n)?;
    let mu: Vec<usize> = (1..=n).map(|l| lambda.part(l) + n - l).collect();
    let needed = mu.first().copied().unwrap_or(0);
    if needed > alphas.len() {
        return Err(SchurError::InsufficientAlphas {
            needed,
            got: alphas.len(),
        });
    }
    // prefix[k][e] = ∏_{j=1}^{e} (z_k + α_j)
    let prefix: Vec<Vec<LaurentPoly>> = zs
        .iter()
        .map(|&z| {
            let zk = LaurentPoly::var(z);
            let mut acc = vec![LaurentPoly::one()];
            for a in &alphas[..needed] {
                let next = acc.last().unwrap() * &(&zk + a);
                acc.push(next);
            }
            acc
        })
        .collect();
    let m = PolyMatrix::from_fn(n, |l, k| prefix[k][mu[l]].clone());
    divide_vandermonde(det_poly(&m)?, zs)
}
