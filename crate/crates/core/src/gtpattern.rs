//! Strict Gelfand-Tsetlin patterns and their Tokuyama-type weighted sums.
//!
//! A pattern of size `N` is stored row by row: `rows[i]` holds
//! `a_{i,i}, …, a_{i,N-1}`. Neighbouring rows interlace,
//! `a_{i-1,j-1} ≥ a_{i,j} ≥ a_{i-1,j}`, and every row is strictly
//! decreasing. In the top-fixed orientation row 0 is the top row; in the
//! bottom-fixed (dual) orientation row 0 is the bottom row and the virtual
//! entries `ā_{j,j-1} = M` bound the pattern from above.

use serde::{Deserialize, Serialize};

use crate::lattice::{Polarity, SiteConfig};
use crate::poly::{LaurentPoly, Monomial, VarId};
use crate::schur::{Partition, SchurError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "top")]
    TopFixed,
    #[serde(rename = "bottom")]
    BottomFixed,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPattern")]
pub struct StrictGTPattern {
    orientation: Orientation,
    #[serde(rename = "M")]
    m: Option<usize>,
    rows: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawPattern {
    orientation: Orientation,
    #[serde(rename = "M")]
    m: Option<usize>,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<RawPattern> for StrictGTPattern {
    type Error = SchurError;

    fn try_from(r: RawPattern) -> Result<Self, Self::Error> {
        Self::new(r.orientation, r.m, r.rows)
    }
}

impl StrictGTPattern {
    /// Validates interlacing, strictness and, for bottom-fixed patterns,
    /// the bound `ā_{j,j} ≤ M`.
    pub fn new(
        orientation: Orientation,
        m: Option<usize>,
        rows: Vec<Vec<usize>>,
    ) -> Result<Self, SchurError> {
        let bad = |msg: String| Err(SchurError::InvalidPartition(msg));
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n - i {
                return bad(format!(
                    "row {i} has {} entries, expected {}",
                    r.len(),
                    n - i
                ));
            }
            if r.windows(2).any(|w| w[0] <= w[1]) {
                return bad(format!("row {i} is not strictly decreasing"));
            }
            if i > 0 {
                let up = &rows[i - 1];
                for (k, &x) in r.iter().enumerate() {
                    if !(up[k] >= x && x >= up[k + 1]) {
                        return bad(format!("rows {} and {i} do not interlace", i - 1));
                    }
                }
            }
        }
        match (orientation, m) {
            (Orientation::BottomFixed, None) => return bad("bottom-fixed patterns need M".into()),
            (Orientation::BottomFixed, Some(m)) if rows.iter().any(|r| r[0] > m) => {
                return bad(format!("diagonal entry exceeds M = {m}"));
            }
            _ => {}
        }
        Ok(Self {
            orientation,
            m,
            rows,
        })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn m(&self) -> Option<usize> {
        self.m
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `a_{i,j}` for `i ≤ j`.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.rows[i][j - i]
    }

    /// `d_i`: the sum of row `i`.
    pub fn row_sums(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    /// Hole configurations read off the rows of a bottom-fixed pattern:
    /// row `i` has holes at `ā_{i,j} + 1`, followed by the hole-free row.
    pub fn layer_configs(&self) -> Vec<SiteConfig> {
        let m = self.m.expect("layer decomposition needs M");
        let mut out: Vec<SiteConfig> = self
            .rows
            .iter()
            .map(|r| {
                let mut pos: Vec<usize> = r.iter().map(|&a| a + 1).collect();
                pos.reverse();
                SiteConfig::new(m, pos, Polarity::Holes)
                    .expect("pattern rows are valid hole positions")
            })
            .collect();
        out.push(SiteConfig::new(m, Vec::new(), Polarity::Holes).expect("empty configuration"));
        out
    }
}

fn first_row(lambda: &Partition, n: usize) -> Result<Vec<usize>, SchurError> {
    let lambda = lambda.padded(n)?;
    Ok((0..n).map(|j| lambda.part(j + 1) + n - j - 1).collect())
}

/// Depth-first completion of rows `1..N` below a fixed row 0, emitting
/// patterns in lexicographic order of their flattened entries.
fn complete(first: Vec<usize>, orientation: Orientation, m: Option<usize>) -> Vec<StrictGTPattern> {
    fn rec(rows: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        let n = rows[0].len();
        let i = rows.len();
        if i == n {
            out.push(rows.clone());
            return;
        }
        let k = cur.len();
        if k == n - i {
            let row = std::mem::take(cur);
            rows.push(row);
            rec(rows, cur, out);
            *cur = rows.pop().unwrap();
            return;
        }
        let up = &rows[i - 1];
        let (hi, lo) = (up[k], up[k + 1]);
        let hi = match cur.last() {
            Some(&0) => return,
            Some(&prev) => hi.min(prev - 1),
            None => hi,
        };
        for v in lo..=hi {
            cur.push(v);
            rec(rows, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![first];
    rec(&mut rows, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|rows| StrictGTPattern {
            orientation,
            m,
            rows,
        })
        .collect()
}

/// All strict patterns with top row `a_{0,j} = λ_{j+1} + N - j - 1`.
pub fn enumerate_top_fixed(
    lambda: &Partition,
    n: usize,
) -> Result<Vec<StrictGTPattern>, SchurError> {
    Ok(complete(first_row(lambda, n)?, Orientation::TopFixed, None))
}

/// All strict dual patterns with bottom row `ā_{0,j} = λ̄_{j+1} + N - j - 1` on `M` sites.
pub fn enumerate_bottom_fixed(
    lambda_bar: &Partition,
    n: usize,
    m: usize,
) -> Result<Vec<StrictGTPattern>, SchurError> {
    let first = first_row(lambda_bar, n)?;
    if first.first().is_some_and(|&a| a >= m) {
        return Err(SchurError::InvalidPartition(format!(
            "{lambda_bar} does not fit on {m} sites with {n} holes"
        )));
    }
    Ok(complete(first, Orientation::BottomFixed, Some(m)))
}

fn t_plus_1() -> LaurentPoly {
    LaurentPoly::t() + LaurentPoly::one()
}

fn z_monomial(exps: impl IntoIterator<Item = (u16, i64)>) -> Monomial {
    Monomial::from_pairs(exps.into_iter().map(|(k, e)| (VarId::z(k), e as i32)))
}

/// `∏_{i≥1} γ(a_{i,j}) · z_1^{d_0-d_1} z_2^{d_1-d_2} ⋯ z_N^{d_{N-1}}`.
pub fn weight_g(p: &StrictGTPattern) -> LaurentPoly {
    assert_eq!(
        p.orientation,
        Orientation::TopFixed,
        "weight_g takes a top-fixed pattern"
    );
    let n = p.n();
    let mut w = LaurentPoly::one();
    for i in 1..n {
        for j in i..n {
            let a = p.get(i, j);
            if a == p.get(i - 1, j - 1) {
                w *= &LaurentPoly::t();
            } else if a != p.get(i - 1, j) {
                w *= &t_plus_1();
            }
        }
    }
    let d = p.row_sums();
    let exps = (0..n).map(|k| {
        let next = d.get(k + 1).copied().unwrap_or(0);
        (k as u16 + 1, d[k] as i64 - next as i64)
    });
    w.mul_monomial(&z_monomial(exps))
}

/// `∏_{i≥0} γ̄(ā_{i,j}) · z_N^{d_0-d_1} ⋯ z_2^{d_{N-2}-d_{N-1}} z_1^{d_{N-1}}`,
/// where `γ̄(ā_{i,j}) = t^{max(ā_{i+1,j} - ā_{i,j} - 1, 0)}`, times `t+1` when
/// `i ≥ 1` and `ā_{i-1,j} ≠ ā_{i,j} ≠ ā_{i-1,j-1}`.
pub fn weight_g_dual(p: &StrictGTPattern) -> LaurentPoly {
    assert_eq!(
        p.orientation,
        Orientation::BottomFixed,
        "weight_g_dual takes a bottom-fixed pattern"
    );
    let m = p.m.expect("bottom-fixed patterns carry M");
    let n = p.n();
    let mut t_exp = 0usize;
    let mut mixed = 0u32;
    for i in 0..n {
        for j in i..n {
            let a = p.get(i, j);
            let above = if j == i { m } else { p.get(i + 1, j) };
            t_exp += above.saturating_sub(a + 1);
            if i >= 1 && a != p.get(i - 1, j) && a != p.get(i - 1, j - 1) {
                mixed += 1;
            }
        }
    }
    let d = p.row_sums();
    let exps = (0..n).map(|k| {
        let next = d.get(k + 1).copied().unwrap_or(0);
        ((n - k) as u16, d[k] as i64 - next as i64)
    });
    let w = t_plus_1().pow(mixed) * LaurentPoly::var_pow(VarId::T, t_exp as i32);
    w.mul_monomial(&z_monomial(exps))
}

/// `Σ_T G(T)` over top-fixed patterns.
pub fn tokuyama_sum(lambda: &Partition, n: usize) -> Result<LaurentPoly, SchurError> {
    Ok(enumerate_top_fixed(lambda, n)?.iter().map(weight_g).sum())
}

/// `Σ_T̄ Ḡ(T̄)` over bottom-fixed patterns.
pub fn dual_tokuyama_sum(
    lambda_bar: &Partition,
    n: usize,
    m: usize,
) -> Result<LaurentPoly, SchurError> {
    Ok(enumerate_bottom_fixed(lambda_bar, n, m)?
        .iter()
        .map(weight_g_dual)
        .sum())
}

/// `t^{|λ̄| - N(M-N)} Σ_T̄ Ḡ(T̄)`, which equals `∏_{j<k}(z_j + t z_k) s_λ̄(z)`.
pub fn rescaled_dual_tokuyama_sum(
    lambda_bar: &Partition,
    n: usize,
    m: usize,
) -> Result<LaurentPoly, SchurError> {
    let shift = lambda_bar.size() as i32 - (n * (m - n)) as i32;
    Ok(dual_tokuyama_sum(lambda_bar, n, m)?.mul_monomial(&Monomial::var_pow(VarId::T, shift)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::deformed_vandermonde;
    use crate::schur::{schur, z_vars};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn worked_dual_patterns() {
        let pats = enumerate_bottom_fixed(&p(&[2, 1]), 2, 4).unwrap();
        let tops: Vec<usize> = pats.iter().map(|q| q.get(1, 1)).collect();
        assert_eq!(tops, vec![1, 2, 3]);
        let weights: Vec<String> = pats.iter().map(|q| weight_g_dual(q).to_string()).collect();
        assert_eq!(
            weights,
            vec!["t^2*z1*z2^3", "t^2*z1^2*z2^2 + t*z1^2*z2^2", "t*z1^3*z2"]
        );
        let expect = deformed_vandermonde(2) * schur(&p(&[2, 1]), &z_vars(2)).unwrap();
        assert_eq!(
            rescaled_dual_tokuyama_sum(&p(&[2, 1]), 2, 4).unwrap(),
            expect
        );
    }

    #[test]
    fn top_fixed_sums() {
        let lam = p(&[2, 1]);
        assert_eq!(enumerate_top_fixed(&lam, 2).unwrap().len(), 3);
        let expect = deformed_vandermonde(2) * schur(&lam, &z_vars(2)).unwrap();
        assert_eq!(tokuyama_sum(&lam, 2).unwrap(), expect);
        assert!(tokuyama_sum(&Partition::empty(), 1).unwrap().is_one());
        let lam = p(&[1, 1]);
        let expect = deformed_vandermonde(2) * LaurentPoly::z(1) * LaurentPoly::z(2);
        assert_eq!(tokuyama_sum(&lam, 2).unwrap(), expect);
    }

    #[test]
    fn single_row_patterns() {
        let pats = enumerate_top_fixed(&p(&[4]), 1).unwrap();
        assert_eq!(pats.len(), 1);
        assert_eq!(weight_g(&pats[0]), LaurentPoly::z(1).pow(4));
        assert_eq!(enumerate_bottom_fixed(&p(&[2]), 1, 5).unwrap().len(), 1);
    }

    #[test]
    fn validation() {
        assert!(
            StrictGTPattern::new(Orientation::TopFixed, None, vec![vec![3, 1], vec![2]]).is_ok()
        );
        assert!(
            StrictGTPattern::new(Orientation::TopFixed, None, vec![vec![3, 1], vec![4]]).is_err()
        );
        assert!(
            StrictGTPattern::new(Orientation::TopFixed, None, vec![vec![1, 1], vec![1]]).is_err()
        );
        assert!(StrictGTPattern::new(Orientation::BottomFixed, None, vec![vec![1]]).is_err());
        assert!(StrictGTPattern::new(Orientation::BottomFixed, Some(2), vec![vec![3]]).is_err());
    }

    #[test]
    fn json_shape() {
        let pats = enumerate_bottom_fixed(&p(&[2, 1]), 2, 4).unwrap();
        let s = serde_json::to_string(&pats[0]).unwrap();
        assert_eq!(s, r#"{"orientation":"bottom","M":4,"rows":[[3,1],[1]]}"#);
        let back: StrictGTPattern = serde_json::from_str(&s).unwrap();
        assert_eq!(back, pats[0]);
    }
}
