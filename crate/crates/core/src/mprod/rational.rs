use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use crate::poly::{LaurentPoly, PolyError, VarId};

/// `num / ∏ f_i^{e_i}` with the denominator kept as a list of distinct
/// factors. Sums take the least common multiple of the factor lists, so no
/// polynomial GCD is ever needed; equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFn {
    num: LaurentPoly,
    den: Vec<(LaurentPoly, u32)>,
}

impl RationalFn {
    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Self {
            num,
            den: Vec::new(),
        }
    }

    /// `num / den`.
    ///
    /// # Panics
    ///
    /// If `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if den.is_one() {
            return Self::from_poly(num);
        }
        Self {
            num,
            den: vec![(den, 1)],
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> LaurentPoly {
        self.den.iter().map(|(f, e)| f.pow(*e)).product()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Multiplies the numerator by the factors of `self.den` missing from `target`.
    fn lift(&self, target: &[(LaurentPoly, u32)]) -> LaurentPoly {
        let mut num = self.num.clone();
        for (f, e) in target {
            let have = self.den.iter().find(|(g, _)| g == f).map_or(0, |(_, k)| *k);
            if *e > have {
                num *= &f.pow(e - have);
            }
        }
        num
    }

    fn lcm(a: &[(LaurentPoly, u32)], b: &[(LaurentPoly, u32)]) -> Vec<(LaurentPoly, u32)> {
        let mut out = a.to_vec();
        for (f, e) in b {
            match out.iter_mut().find(|(g, _)| g == f) {
                Some((_, k)) => *k = (*k).max(*e),
                None => out.push((f.clone(), *e)),
            }
        }
        out
    }

    pub fn eval_rational(
        &self,
        point: &HashMap<VarId, BigRational>,
    ) -> Result<BigRational, PolyError> {
        let d = self.denominator().eval_rational(point)?;
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(self.num.eval_rational(point)? / d)
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.denominator() == &other.num * &self.denominator()
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl<'b> Add<&'b RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &'b RationalFn) -> RationalFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let den = RationalFn::lcm(&self.den, &rhs.den);
        RationalFn {
            num: self.lift(&den) + rhs.lift(&den),
            den,
        }
    }
}

impl<'b> Sub<&'b RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &'b RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<'b> Mul<&'b RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &'b RationalFn) -> RationalFn {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        let mut den = self.den.clone();
        for (f, e) in &rhs.den {
            match den.iter_mut().find(|(g, _)| g == f) {
                Some((_, k)) => *k += e,
                None => den.push((f.clone(), *e)),
            }
        }
        RationalFn {
            num: &self.num * &rhs.num,
            den,
        }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ({})", self.num, self.denominator())
    }
}

/// Dense square matrix over [`RationalFn`].
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<RationalFn>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![RationalFn::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = RationalFn::one();
        }
        m
    }

    pub fn from_poly(p: &crate::poly::PolyMatrix) -> Self {
        let n = p.n();
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.entries[i * n + j] = RationalFn::from_poly(p[(i, j)].clone());
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFn {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RationalFn) {
        self.entries[i * self.n + j] = v;
    }

    pub fn scale(&self, s: &RationalFn) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    /// `[[a, b], [c, d]]`.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let h = a.n;
        let mut m = Self::zeros(2 * h);
        for i in 0..2 * h {
            for j in 0..2 * h {
                let blk = match (i < h, j < h) {
                    (true, true) => a,
                    (true, false) => b,
                    (false, true) => c,
                    (false, false) => d,
                };
                m.entries[i * 2 * h + j] = blk.get(i % h, j % h).clone();
            }
        }
        m
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * n + j;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Entrywise evaluation.
    pub fn eval_rational(
        &self,
        point: &HashMap<VarId, BigRational>,
    ) -> Result<Vec<BigRational>, PolyError> {
        self.entries
            .iter()
            .map(|e| e.eval_rational(point))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_share_denominators() {
        let z1 = LaurentPoly::z(1);
        let z2 = LaurentPoly::z(2);
        let d = &z1 - &z2;
        let a = RationalFn::new(z1.clone(), d.clone());
        let b = RationalFn::new(-&z2, d.clone());
        let s = &a + &b;
        assert_eq!(s, RationalFn::one());
        assert_eq!(s.denominator(), d);
        let p = &a * &RationalFn::from_poly(d);
        assert_eq!(p, RationalFn::from_poly(z1));
    }
}
