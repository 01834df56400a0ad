use std::cmp::Ordering;
use std::fmt;
use std::ops::{Div, Mul};
use std::str::FromStr;

use super::PolyError;

/// Polynomial variables. The derived order `T < TPrime < Z(1) < Z(2) < … <
/// Alpha(1) < … < V(1) < …` fixes the term order and therefore every
/// serialized form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    /// Deformation parameter `t`.
    T,
    /// `t' = 1/t`, used only when re-expressing polynomials in `t'`.
    TPrime,
    /// Spectral parameter `z_j`, 1-based.
    Z(u16),
    /// Factorial parameter `α_j`, 1-based.
    Alpha(u16),
    /// Quantum-space inhomogeneity `v_j`, 1-based.
    V(u16),
}

impl VarId {
    pub fn z(i: u16) -> Self {
        assert!(i >= 1, "z indices are 1-based");
        VarId::Z(i)
    }

    pub fn alpha(i: u16) -> Self {
        assert!(i >= 1, "alpha indices are 1-based");
        VarId::Alpha(i)
    }

    pub fn v(i: u16) -> Self {
        assert!(i >= 1, "v indices are 1-based");
        VarId::V(i)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::T => write!(f, "t"),
            VarId::TPrime => write!(f, "tp"),
            VarId::Z(i) => write!(f, "z{i}"),
            VarId::Alpha(i) => write!(f, "a{i}"),
            VarId::V(i) => write!(f, "v{i}"),
        }
    }
}

impl FromStr for VarId {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PolyError::Parse(format!("unknown variable `{s}`"));
        match s {
            "t" => return Ok(VarId::T),
            "tp" => return Ok(VarId::TPrime),
            _ => {}
        }
        let (head, idx) = s.split_at(1.min(s.len()));
        let i: u16 = idx.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        match head {
            "z" => Ok(VarId::Z(i)),
            "a" => Ok(VarId::Alpha(i)),
            "v" => Ok(VarId::V(i)),
            _ => Err(bad()),
        }
    }
}

/// A Laurent monomial: sorted `(variable, exponent)` pairs, no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(VarId, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(v: VarId) -> Self {
        Self(vec![(v, 1)])
    }

    pub fn var_pow(v: VarId, e: i32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Self(vec![(v, e)])
        }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, i32)>>(pairs: I) -> Self {
        let mut v: Vec<(VarId, i32)> = pairs.into_iter().collect();
        v.sort_by_key(|&(var, _)| var);
        let mut out: Vec<(VarId, i32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some((last, acc)) if *last == var => *acc += e,
                _ => out.push((var, e)),
            }
        }
        out.retain(|&(_, e)| e != 0);
        Self(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, i32)> + '_ {
        self.0.iter().copied()
    }

    pub fn exponent(&self, v: VarId) -> i32 {
        self.0
            .binary_search_by_key(&v, |&(var, _)| var)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn without(&self, v: VarId) -> Self {
        Self(
            self.0
                .iter()
                .copied()
                .filter(|&(var, _)| var != v)
                .collect(),
        )
    }

    /// Sum of all exponents.
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn pow(&self, k: i32) -> Self {
        if k == 0 {
            return Self::one();
        }
        Self(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    /// Componentwise minimum of exponents, absent variables counting as 0.
    pub(crate) fn gcd_laurent(&self, other: &Monomial) -> Monomial {
        merge(self, other, |a, b| a.min(b))
    }
}

fn merge(a: &Monomial, b: &Monomial, f: impl Fn(i32, i32) -> i32) -> Monomial {
    let mut out = Vec::with_capacity(a.0.len() + b.0.len());
    let (mut i, mut j) = (0, 0);
    while i < a.0.len() || j < b.0.len() {
        let (v, e) = match (a.0.get(i), b.0.get(j)) {
            (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                Ordering::Less => {
                    i += 1;
                    (va, f(ea, 0))
                }
                Ordering::Greater => {
                    j += 1;
                    (vb, f(0, eb))
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                    (va, f(ea, eb))
                }
            },
            (Some(&(va, ea)), None) => {
                i += 1;
                (va, f(ea, 0))
            }
            (None, Some(&(vb, eb))) => {
                j += 1;
                (vb, f(0, eb))
            }
            (None, None) => unreachable!(),
        };
        if e != 0 {
            out.push((v, e));
        }
    }
    Monomial(out)
}

impl<'b> Mul<&'b Monomial> for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &'b Monomial) -> Monomial {
        merge(self, rhs, |a, b| a + b)
    }
}

impl<'b> Div<&'b Monomial> for &Monomial {
    type Output = Monomial;
    fn div(self, rhs: &'b Monomial) -> Monomial {
        merge(self, rhs, |a, b| a - b)
    }
}

/// Graded lexicographic: total degree first, then the exponent of the
/// smallest variable in [`VarId`] order where the two differ.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.0.get(i), other.0.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(&(_, ea)), None) => return ea.cmp(&0),
                    (None, Some(&(_, eb))) => return 0.cmp(&eb),
                    (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                        Ordering::Less => return ea.cmp(&0),
                        Ordering::Greater => return 0.cmp(&eb),
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(&eb);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, &(v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn var_order_is_fixed() {
        let mut vs = vec![
            VarId::v(1),
            VarId::alpha(2),
            VarId::z(3),
            VarId::TPrime,
            VarId::z(1),
            VarId::T,
        ];
        vs.sort();
        assert_eq!(
            vs,
            vec![
                VarId::T,
                VarId::TPrime,
                VarId::Z(1),
                VarId::Z(3),
                VarId::Alpha(2),
                VarId::V(1)
            ]
        );
    }

    #[test]
    fn parse_names() {
        for v in [
            VarId::T,
            VarId::TPrime,
            VarId::z(12),
            VarId::alpha(3),
            VarId::v(1),
        ] {
            assert_eq!(v.to_string().parse::<VarId>().unwrap(), v);
        }
        assert!("z0".parse::<VarId>().is_err());
        assert!("q1".parse::<VarId>().is_err());
        assert!("".parse::<VarId>().is_err());
    }

    #[test]
    fn mul_div_cancel_to_one() {
        let a = Monomial::from_pairs([(VarId::T, 2), (VarId::z(1), -1)]);
        let b = Monomial::from_pairs([(VarId::z(1), 1), (VarId::z(2), 3)]);
        let ab = &a * &b;
        assert_eq!(ab, Monomial::from_pairs([(VarId::T, 2), (VarId::z(2), 3)]));
        assert_eq!(&ab / &b, a);
        assert!((&a / &a).is_one());
    }

    #[test]
    fn grlex_order() {
        let t = Monomial::var(VarId::T);
        let z1 = Monomial::var(VarId::z(1));
        let z1sq = Monomial::var_pow(VarId::z(1), 2);
        assert!(z1sq > t);
        assert!(t > z1);
        assert!(Monomial::one() < z1);
        assert!(Monomial::var_pow(VarId::T, -1) < Monomial::one());
    }
}
