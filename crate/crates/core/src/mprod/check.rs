//! Exact checks of the gauge algebra at random rational points.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::poly::{PolyError, PolyMatrix, VarId};
use crate::schur::z_vars;

use super::gauge::{build_gauge, GaugeLevel};
use super::rational::RationalMatrix;
use super::{build_cd, MprodError};

pub const DEFAULT_SEED: u64 = 0xF31D;
pub const MAX_RESAMPLES: usize = 16;

const ODD_PRIMES: [i64; 24] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Outcome of checking one identity over a batch of sample points.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationReport {
    pub relation: String,
    pub n: usize,
    pub samples: usize,
    pub passed: bool,
    pub counterexample: Option<serde_json::Value>,
}

/// The `attempt`-th candidate point for sample `index`: each variable gets
/// `±p/q` with `p, q` odd primes, and the `z`'s are pairwise distinct.
/// Depends only on `(seed, index, attempt)`.
pub fn sample_point(
    vars: &[VarId],
    seed: u64,
    index: u64,
    attempt: usize,
) -> HashMap<VarId, BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut point = HashMap::new();
    for _ in 0..=attempt {
        point.clear();
        for &v in vars {
            let p = *ODD_PRIMES.choose(&mut rng).expect("nonempty");
            let q = *ODD_PRIMES.choose(&mut rng).expect("nonempty");
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            point.insert(v, BigRational::new(BigInt::from(sign * p), BigInt::from(q)));
        }
    }
    point
}

fn distinct_z(point: &HashMap<VarId, BigRational>) -> bool {
    let zs: Vec<&BigRational> = point
        .iter()
        .filter(|(v, _)| matches!(v, VarId::Z(_)))
        .map(|(_, x)| x)
        .collect();
    (0..zs.len()).all(|i| (i + 1..zs.len()).all(|j| zs[i] != zs[j]))
}

fn point_json(point: &HashMap<VarId, BigRational>) -> serde_json::Value {
    let sorted: BTreeMap<VarId, String> = point.iter().map(|(v, x)| (*v, x.to_string())).collect();
    serde_json::Value::Object(
        sorted
            .into_iter()
            .map(|(v, x)| (v.to_string(), serde_json::Value::String(x)))
            .collect(),
    )
}

/// Runs `check` at `samples` points; `check` returns `Ok(None)` on success,
/// `Ok(Some(detail))` on failure, and `Err(DivisionByZero)` to request a
/// fresh point. Reports the first failing sample.
fn run_samples<F>(
    relation: &str,
    n: usize,
    vars: &[VarId],
    samples: usize,
    seed: u64,
    mut check: F,
) -> Result<RelationReport, MprodError>
where
    F: FnMut(&HashMap<VarId, BigRational>) -> Result<Option<String>, PolyError>,
{
    let mut counterexample = None;
    for idx in 0..samples {
        let mut outcome = None;
        for attempt in 0..MAX_RESAMPLES {
            let point = sample_point(vars, seed, idx as u64, attempt);
            if !distinct_z(&point) {
                continue;
            }
            match check(&point) {
                Ok(r) => {
                    outcome = Some((point, r));
                    break;
                }
                Err(PolyError::DivisionByZero) => continue,
                Err(e) => return Err(e.into()),
            }
        }
        let Some((point, result)) = outcome else {
            return Err(MprodError::DegenerateSample(MAX_RESAMPLES));
        };
        if let Some(detail) = result {
            if counterexample.is_none() {
                counterexample =
                    Some(json!({"sample": idx, "point": point_json(&point), "detail": detail}));
            }
        }
    }
    Ok(RelationReport {
        relation: relation.to_string(),
        n,
        samples,
        passed: counterexample.is_none(),
        counterexample,
    })
}

/// Dense rational matrix evaluated at a point.
#[derive(Clone, Debug, PartialEq)]
struct QMat {
    n: usize,
    e: Vec<BigRational>,
}

impl QMat {
    fn from_rational(
        m: &RationalMatrix,
        pt: &HashMap<VarId, BigRational>,
    ) -> Result<Self, PolyError> {
        Ok(Self {
            n: m.n(),
            e: m.eval_rational(pt)?,
        })
    }

    fn from_poly(m: &PolyMatrix, pt: &HashMap<VarId, BigRational>) -> Result<Self, PolyError> {
        let n = m.n();
        let mut e = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                e.push(m[(i, j)].eval_rational(pt)?);
            }
        }
        Ok(Self { n, e })
    }

    fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        let mut e = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.e[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &o.e[k * n + j];
                    if !b.is_zero() {
                        e[i * n + j] += a * b;
                    }
                }
            }
        }
        Self { n, e }
    }

    fn scale(&self, s: &BigRational) -> Self {
        Self {
            n: self.n,
            e: self.e.iter().map(|x| x * s).collect(),
        }
    }

    fn add(&self, o: &Self) -> Self {
        Self {
            n: self.n,
            e: self.e.iter().zip(&o.e).map(|(a, b)| a + b).collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.e.iter().all(Zero::is_zero)
    }
}

fn describe(lhs: &QMat, rhs: &QMat) -> Option<String> {
    if lhs == rhs {
        return None;
    }
    let n = lhs.n;
    let idx = (0..n * n).find(|&i| lhs.e[i] != rhs.e[i]).unwrap_or(0);
    Some(format!(
        "entry ({}, {}): {} vs {}",
        idx / n,
        idx % n,
        lhs.e[idx],
        rhs.e[idx]
    ))
}

struct EvalLevel {
    d: QMat,
    c: Vec<QMat>,
    g: QMat,
    h: Option<QMat>,
}

fn eval_level(l: &GaugeLevel, pt: &HashMap<VarId, BigRational>) -> Result<EvalLevel, PolyError> {
    Ok(EvalLevel {
        d: QMat::from_poly(&l.d_diag, pt)?,
        c: l.c_parts
            .iter()
            .map(|c| QMat::from_rational(c, pt))
            .collect::<Result<_, _>>()?,
        g: QMat::from_rational(&l.g, pt)?,
        h: l.h
            .as_ref()
            .map(|h| QMat::from_rational(h, pt))
            .transpose()?,
    })
}

fn vars_with_t(n: usize) -> Vec<VarId> {
    let mut v = vec![VarId::T];
    v.extend(z_vars(n));
    v
}

/// Checks, with `n` auxiliary spaces and `samples` points each:
/// the commutation `𝒞^{(j)} D̃ = (z_j/t) D̃ 𝒞^{(j)}`, nilpotency
/// `(𝒞^{(j)})² = 0`, the exchange `𝒞^{(j)}𝒞^{(k)} = -(z_j/z_k) 𝒞^{(k)}𝒞^{(j)}`,
/// the gauge equations `𝒟 G = G D̃` and `𝒞 G = G Σ_j 𝒞^{(j)}`, and the
/// defining equation of each `H_k`.
pub fn verify_algebra(
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<RelationReport>, MprodError> {
    let zs = z_vars(n);
    let gauge = build_gauge(&zs)?;
    let (d_poly, c_poly) = build_cd(&gauge.zs)?;
    let vars = vars_with_t(n);
    let top = gauge.top();
    let t_of = |pt: &HashMap<VarId, BigRational>| pt[&VarId::T].clone();
    let z_of = |pt: &HashMap<VarId, BigRational>, j: usize| pt[&VarId::z(j as u16 + 1)].clone();

    let mut reports = Vec::new();
    reports.push(run_samples(
        "C(j) D = (z_j/t) D C(j)",
        n,
        &vars,
        samples,
        seed,
        |pt| {
            let e = eval_level(top, pt)?;
            for (j, cj) in e.c.iter().enumerate() {
                let r = cj.mul(&e.d);
                let l = e.d.mul(cj).scale(&(z_of(pt, j) / t_of(pt)));
                if let Some(msg) = describe(&r, &l) {
                    return Ok(Some(format!("j = {}: {msg}", j + 1)));
                }
            }
            Ok(None)
        },
    )?);
    reports.push(run_samples("C(j)^2 = 0", n, &vars, samples, seed, |pt| {
        let e = eval_level(top, pt)?;
        Ok(e.c
            .iter()
            .position(|cj| !cj.mul(cj).is_zero())
            .map(|j| format!("j = {}", j + 1)))
    })?);
    reports.push(run_samples(
        "C(j) C(k) = -(z_j/z_k) C(k) C(j)",
        n,
        &vars,
        samples,
        seed,
        |pt| {
            let e = eval_level(top, pt)?;
            for j in 0..n {
                for k in 0..n {
                    if j == k {
                        continue;
                    }
                    let l = e.c[j].mul(&e.c[k]);
                    let r = e.c[k].mul(&e.c[j]).scale(&(-(z_of(pt, j) / z_of(pt, k))));
                    if let Some(msg) = describe(&l, &r) {
                        return Ok(Some(format!("(j, k) = ({}, {}): {msg}", j + 1, k + 1)));
                    }
                }
            }
            Ok(None)
        },
    )?);
    reports.push(run_samples(
        "D G = G Ddiag",
        n,
        &vars,
        samples,
        seed,
        |pt| {
            let e = eval_level(top, pt)?;
            let d = QMat::from_poly(&d_poly, pt)?;
            Ok(describe(&d.mul(&e.g), &e.g.mul(&e.d)))
        },
    )?);
    reports.push(run_samples(
        "C G = G sum_j C(j)",
        n,
        &vars,
        samples,
        seed,
        |pt| {
            let e = eval_level(top, pt)?;
            let c = QMat::from_poly(&c_poly, pt)?;
            let sum = e.c.iter().skip(1).fold(e.c[0].clone(), |acc, x| acc.add(x));
            Ok(describe(&c.mul(&e.g), &e.g.mul(&sum)))
        },
    )?);
    if n > 1 {
        reports.push(run_samples(
            "z' Ddiag H + (1+t) z' C - t H Ddiag = 0",
            n,
            &vars,
            samples,
            seed,
            |pt| {
                let t = t_of(pt);
                for (k, level) in gauge.levels[..n - 1].iter().enumerate() {
                    let e = eval_level(level, pt)?;
                    let h = e.h.expect("inner levels carry H");
                    let znext = z_of(pt, k + 1);
                    let sum = e.c.iter().skip(1).fold(e.c[0].clone(), |acc, x| acc.add(x));
                    let total =
                        e.d.mul(&h)
                            .scale(&znext)
                            .add(&sum.scale(&(&znext * (&t + BigRational::one()))))
                            .add(&h.mul(&e.d).scale(&-t.clone()));
                    if !total.is_zero() {
                        return Ok(Some(format!("level {}", k + 1)));
                    }
                }
                Ok(None)
            },
        )?);
    }
    Ok(reports)
}

/// Compares `∏_j (t/z_j)^{j-1} ∏_{j<k} (z_k - z_j)/t · Tr[D̃^{M-N} 𝒞^{(N)} ⋯ 𝒞^{(1)} P]`
/// with `t^{N(M-N)} ∏_{j<k} (z_j + t z_k)` at `samples` points.
pub fn prefactor_k(
    m: usize,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<RelationReport, MprodError> {
    if n > m {
        return Err(crate::lattice::LatticeError::ConfigMismatch(format!(
            "N = {n} exceeds M = {m}"
        ))
        .into());
    }
    let gauge = build_gauge(&z_vars(n))?;
    let top = gauge.top();
    let vars = vars_with_t(n);
    run_samples("prefactor K", n, &vars, samples, seed, |pt| {
        let e = eval_level(top, pt)?;
        let t = pt[&VarId::T].clone();
        let z: Vec<BigRational> = (1..=n as u16).map(|j| pt[&VarId::z(j)].clone()).collect();
        let dim = 1usize << n;
        let mut v = vec![BigRational::zero(); dim];
        v[dim - 1] = BigRational::one();
        for c in &e.c {
            v = (0..dim)
                .map(|i| (0..dim).map(|j| &c.e[i * dim + j] * &v[j]).sum())
                .collect();
        }
        let trace = &v[0] * num_traits::pow(e.d.e[0].clone(), m - n);
        let mut k = trace;
        for (j, zj) in z.iter().enumerate() {
            k *= num_traits::pow(&t / zj, j);
            for zk in &z[j + 1..] {
                k *= (zk - zj) / &t;
            }
        }
        let mut expect = num_traits::pow(t.clone(), n * (m - n));
        for j in 0..n {
            for zk in &z[j + 1..] {
                expect *= &z[j] + &t * zk;
            }
        }
        Ok(if k == expect {
            None
        } else {
            Some(format!("K = {k}, closed form = {expect}"))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_are_deterministic() {
        let vars = vars_with_t(2);
        assert_eq!(sample_point(&vars, 7, 3, 0), sample_point(&vars, 7, 3, 0));
        assert_ne!(sample_point(&vars, 7, 3, 0), sample_point(&vars, 7, 4, 0));
    }

    #[test]
    fn small_algebra_passes() {
        for n in 1..=2 {
            for r in verify_algebra(n, 5, DEFAULT_SEED).unwrap() {
                assert!(r.passed, "{r:?}");
            }
        }
    }

    #[test]
    fn prefactor_small() {
        assert!(prefactor_k(3, 1, 4, DEFAULT_SEED).unwrap().passed);
        assert!(prefactor_k(2, 2, 4, DEFAULT_SEED).unwrap().passed);
    }
}
