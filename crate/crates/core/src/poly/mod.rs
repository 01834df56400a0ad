//! Sparse multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Every weight, matrix element and identity in this crate is a
//! [`LaurentPoly`]. The representation is canonical: terms live in a
//! `BTreeMap` keyed by [`Monomial`], zero coefficients are never stored and
//! monomials never carry zero exponents, so structural equality is
//! mathematical equality.

mod json;
mod matrix;
mod monomial;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use matrix::PolyMatrix;
pub use monomial::{Monomial, VarId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial is not exactly divisible by the given divisor")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("degree of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("variable {0} has no assigned value")]
    Unassigned(VarId),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A Laurent polynomial in the variables of [`VarId`] over the integers.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::term(BigInt::from(c), Monomial::one())
    }

    pub fn var(v: VarId) -> Self {
        Self::term(BigInt::one(), Monomial::var(v))
    }

    /// `v^e` for any integer `e`.
    pub fn var_pow(v: VarId, e: i32) -> Self {
        Self::term(BigInt::one(), Monomial::var_pow(v, e))
    }

    pub fn t() -> Self {
        Self::var(VarId::T)
    }

    pub fn z(i: u16) -> Self {
        Self::var(VarId::z(i))
    }

    pub fn term(coeff: BigInt, mono: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        Self { terms }
    }

    pub fn monomial(mono: Monomial) -> Self {
        Self::term(BigInt::one(), mono)
    }

    pub fn from_terms<I: IntoIterator<Item = (BigInt, Monomial)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (c, m) in terms {
            p.add_term(c, m);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending term order.
    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// Largest term in the graded-lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, coeff: BigInt, mono: Monomial) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// If this polynomial is a single term `c·m`, return it.
    pub fn as_term(&self) -> Option<(&BigInt, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    /// All variables that occur with a nonzero exponent.
    pub fn variables(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self
            .terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m * mono, a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Tight `(min, max)` exponent of `var` over all terms.
    pub fn degree_range(&self, var: VarId) -> Result<(i32, i32), PolyError> {
        let mut it = self.terms.keys().map(|m| m.exponent(var));
        let first = it.next().ok_or(PolyError::ZeroPolynomial)?;
        Ok(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Replace every occurrence of `var^k` by `(coeff · mono)^k`.
    ///
    /// # Panics
    ///
    /// If `var` occurs with a negative exponent and `coeff` is not ±1, the
    /// result would leave the integers.
    pub fn substitute_scale(&self, var: VarId, coeff: i64, mono: &Monomial) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let k = m.exponent(var);
            let rest = m.without(var);
            let factor = if k >= 0 {
                BigInt::from(coeff).pow(k as u32)
            } else {
                assert!(
                    coeff == 1 || coeff == -1,
                    "substituting {var} with non-unit coefficient {coeff} under a negative power"
                );
                if coeff == -1 && k % 2 != 0 {
                    BigInt::from(-1)
                } else {
                    BigInt::one()
                }
            };
            out.add_term(c * factor, &rest * &mono.pow(k));
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(
        &self,
        assignment: &HashMap<VarId, BigRational>,
    ) -> Result<BigRational, PolyError> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut val = BigRational::from_integer(c.clone());
            for (v, e) in m.iter() {
                let x = assignment.get(&v).ok_or(PolyError::Unassigned(v))?;
                if e < 0 && x.is_zero() {
                    return Err(PolyError::DivisionByZero);
                }
                val *= num_traits::pow::Pow::pow(x, e);
            }
            total += val;
        }
        Ok(total)
    }

    /// Exact quotient `self / d` in the Laurent ring.
    ///
    /// Both operands are first shifted by monomials so that no variable
    /// appears with a negative exponent and `d` has no monomial factor. The
    /// quotient of the shifted polynomials is then an honest polynomial and
    /// is found by leading-term division, which terminates because the term
    /// order is a well-order on non-negative exponents.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if let Some((c, m)) = d.as_term() {
            let inv = m.inv();
            let mut out = Self::zero();
            for (pm, pc) in &self.terms {
                let (q, r) = pc.div_rem(c);
                if !r.is_zero() {
                    return Err(PolyError::NotDivisible);
                }
                out.add_term(q, pm * &inv);
            }
            return Ok(out);
        }
        let d_shift = d.min_exponents().inv();
        let p_shift = self.min_exponents().inv();
        let d0 = d.mul_monomial(&d_shift);
        let mut rem = self.mul_monomial(&p_shift);
        let (lm, lc) = {
            let (m, c) = d0.leading_term().expect("nonzero divisor");
            (m.clone(), c.clone())
        };
        let mut quot = Self::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm / &lm;
            if qm.iter().any(|(_, e)| e < 0) {
                return Err(PolyError::NotDivisible);
            }
            let (qc, r) = rc.div_rem(&lc);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            let step = LaurentPoly::term(qc, qm);
            rem -= &(&step * &d0);
            quot += &step;
        }
        // self·p_shift = quot·d·d_shift  =>  self / d = quot · d_shift / p_shift
        Ok(quot.mul_monomial(&(&d_shift / &p_shift)))
    }

    /// Monomial whose exponent in each variable is the minimum over all terms.
    fn min_exponents(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |acc, m| acc.gcd_laurent(m))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Leading term first, e.g. `t^2*z1*z2^3 + t*z1^2*z2^2 - 1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<VarId> for LaurentPoly {
    fn from(v: VarId) -> Self {
        Self::var(v)
    }
}

impl From<Monomial> for LaurentPoly {
    fn from(m: Monomial) -> Self {
        Self::monomial(m)
    }
}

impl<'a> AddAssign<&'a LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &'a LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(c.clone(), m.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            *self += &lhs;
        } else {
            for (m, c) in rhs.terms {
                self.add_term(c, m);
            }
        }
    }
}

impl<'a> SubAssign<&'a LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &'a LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(-c, m.clone());
        }
    }
}

impl<'b> Add<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl<'b> Sub<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<'b> Mul<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ca * cb, ma * mb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl<'a> MulAssign<&'a LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &'a LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

/// `∏_{1≤j<k≤n} f(j, k)` over 1-based index pairs.
pub fn pair_product<F: FnMut(u16, u16) -> LaurentPoly>(n: u16, mut f: F) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for j in 1..=n {
        for k in (j + 1)..=n {
            acc = &acc * &f(j, k);
        }
    }
    acc
}

/// The deformed Vandermonde factor `∏_{j<k} (z_j + t·z_k)`.
pub fn deformed_vandermonde(n: u16) -> LaurentPoly {
    pair_product(n, |j, k| {
        LaurentPoly::z(j) + LaurentPoly::t() * LaurentPoly::z(k)
    })
}

impl Mul<i64> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: i64) -> LaurentPoly {
        self.scale(&BigInt::from(rhs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: u16) -> LaurentPoly {
        LaurentPoly::z(i)
    }
    fn t() -> LaurentPoly {
        LaurentPoly::t()
    }
    fn ti() -> LaurentPoly {
        LaurentPoly::var_pow(VarId::T, -1)
    }

    #[test]
    fn add_disjoint_and_cancel() {
        let p = z(1) + t() * z(2);
        assert_eq!(p.num_terms(), 2);
        assert!((z(1) + -z(1)).is_zero());
        assert_eq!(&p + &LaurentPoly::zero(), p);
    }

    #[test]
    fn add_worked_example_terms() {
        let a = t().pow(2) * z(1) * z(2).pow(3);
        let b = t() * (t() + LaurentPoly::one()) * z(1).pow(2) * z(2).pow(2);
        let c = t() * z(1).pow(3) * z(2);
        let s = a + b + c;
        assert_eq!(s.num_terms(), 4);
        assert_eq!(
            s.to_string(),
            "t^2*z1^2*z2^2 + t^2*z1*z2^3 + t*z1^3*z2 + t*z1^2*z2^2"
        );
    }

    #[test]
    fn mul_factorised_example() {
        let lhs = (z(1) + t() * z(2)) * (z(1).pow(2) * z(2) + z(1) * z(2).pow(2));
        let rhs = z(1).pow(3) * z(2)
            + (t() + LaurentPoly::one()) * z(1).pow(2) * z(2).pow(2)
            + t() * z(1) * z(2).pow(3);
        assert_eq!(lhs, rhs);
        assert!((&lhs * &LaurentPoly::zero()).is_zero());
        assert_eq!((z(1) - z(2)) * (z(1) + z(2)), z(1).pow(2) - z(2).pow(2));
    }

    #[test]
    fn exact_div_examples() {
        let p = z(1).pow(2) - z(2).pow(2);
        assert_eq!(p.exact_div(&(z(1) - z(2))).unwrap(), z(1) + z(2));
        let num = z(1).pow(3) * z(2) - z(1) * z(2).pow(3);
        let q = num.exact_div(&(z(1) - z(2))).unwrap();
        assert_eq!(&q * &(z(1) - z(2)), num);
        assert_eq!(q, z(1).pow(2) * z(2) + z(1) * z(2).pow(2));
        assert_eq!(p.exact_div(&LaurentPoly::one()).unwrap(), p);
    }

    #[test]
    fn exact_div_laurent_and_failures() {
        let d = z(1) + ti() * z(2);
        let q = ti().pow(2) * LaurentPoly::var_pow(VarId::z(1), -1) + z(3);
        let p = &q * &d;
        assert_eq!(p.exact_div(&d).unwrap(), q);
        assert_eq!(z(1).exact_div(&(z(1) + z(2))), Err(PolyError::NotDivisible));
        assert_eq!(
            (z(1) * 3 + z(2)).exact_div(&LaurentPoly::constant(2)),
            Err(PolyError::NotDivisible)
        );
        assert_eq!(
            z(1).exact_div(&LaurentPoly::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn substitute_examples() {
        let tz1 = Monomial::from_pairs([(VarId::T, 1), (VarId::z(1), 1)]);
        assert_eq!(
            z(1).pow(2).substitute_scale(VarId::z(1), 1, &tz1),
            t().pow(2) * z(1).pow(2)
        );
        let p = t() * (t() + LaurentPoly::one());
        assert!(p.substitute_scale(VarId::T, -1, &Monomial::one()).is_zero());
        let q = z(1) + t() * z(2);
        let z2_over_t = Monomial::from_pairs([(VarId::T, -1), (VarId::z(2), 1)]);
        assert_eq!(q.substitute_scale(VarId::z(2), 1, &z2_over_t), z(1) + z(2));
        let r = ti().pow(3) + t().pow(2);
        assert_eq!(
            r.substitute_scale(VarId::T, -1, &Monomial::one()),
            LaurentPoly::zero()
        );
    }

    #[test]
    fn eval_examples() {
        let q = z(1) + t() * z(2);
        let pt: HashMap<VarId, BigRational> = [(VarId::z(1), 1), (VarId::z(2), 2), (VarId::T, 3)]
            .into_iter()
            .map(|(v, x)| (v, BigRational::from_integer(x.into())))
            .collect();
        assert_eq!(
            q.eval_rational(&pt).unwrap(),
            BigRational::from_integer(7.into())
        );
        let zero_t: HashMap<_, _> = [(VarId::T, BigRational::zero())].into_iter().collect();
        assert_eq!(ti().eval_rational(&zero_t), Err(PolyError::DivisionByZero));
        assert_eq!(
            z(4).eval_rational(&zero_t),
            Err(PolyError::Unassigned(VarId::z(4)))
        );
    }

    #[test]
    fn eval_worked_example_both_sides() {
        let lhs = t().pow(2) * z(1) * z(2).pow(3)
            + t() * (t() + LaurentPoly::one()) * z(1).pow(2) * z(2).pow(2)
            + t() * z(1).pow(3) * z(2);
        let s21 = (z(1) * ti()).pow(2) * (z(2) * ti()) + (z(1) * ti()) * (z(2) * ti()).pow(2);
        let rhs = t().pow(4) * (z(1) + t() * z(2)) * s21;
        let pt: HashMap<VarId, BigRational> = [(VarId::z(1), 1), (VarId::z(2), 1), (VarId::T, 2)]
            .into_iter()
            .map(|(v, x)| (v, BigRational::from_integer(x.into())))
            .collect();
        let l = lhs.eval_rational(&pt).unwrap();
        assert_eq!(l, BigRational::from_integer(12.into()));
        assert_eq!(rhs.eval_rational(&pt).unwrap(), l);
    }

    #[test]
    fn degree_range_examples() {
        let p = t().pow(2) + ti();
        assert_eq!(p.degree_range(VarId::T).unwrap(), (-1, 2));
        assert_eq!(
            (z(1) + t() * z(2)).degree_range(VarId::z(1)).unwrap(),
            (0, 1)
        );
        assert_eq!(
            LaurentPoly::zero().degree_range(VarId::T),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn display_negative_and_constant() {
        let p = -(ti() * 2) + LaurentPoly::constant(3) - z(1);
        assert_eq!(p.to_string(), "-z1 + 3 - 2*t^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
