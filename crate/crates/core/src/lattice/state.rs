use crate::poly::{LaurentPoly, VarId};

use super::config::full_mask;
use super::weights::VertexTable;
use super::{LOperatorVariant, LatticeError, ModelParams, Polarity, SiteConfig};

/// Dense vector of amplitudes over the `2^M` occupation basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumState {
    m: usize,
    amps: Vec<LaurentPoly>,
}

impl QuantumState {
    pub fn zero(m: usize) -> Self {
        Self {
            m,
            amps: vec![LaurentPoly::zero(); 1 << m],
        }
    }

    /// `|mask⟩` with unit amplitude.
    pub fn basis(m: usize, mask: u32) -> Self {
        let mut s = Self::zero(m);
        s.amps[mask as usize] = LaurentPoly::one();
        s
    }

    /// `|Ω⟩ = |0…0⟩`.
    pub fn vacuum(m: usize) -> Self {
        Self::basis(m, 0)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn amplitude(&self, mask: u32) -> &LaurentPoly {
        &self.amps[mask as usize]
    }

    pub fn amplitudes(&self) -> &[LaurentPoly] {
        &self.amps
    }

    /// Masks carrying a nonzero amplitude.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.amps
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, _)| i as u32)
    }

    pub fn scale(&self, s: &LaurentPoly) -> Self {
        Self {
            m: self.m,
            amps: self.amps.iter().map(|a| a * s).collect(),
        }
    }
}

/// `B(z) = ⟨0|_a L_{aM}(z) ⋯ L_{a1}(z) |1⟩_a` with its per-site weights resolved.
#[derive(Clone, Debug)]
pub struct BOperator {
    tables: Vec<VertexTable>,
}

impl BOperator {
    pub fn new(variant: LOperatorVariant, z: &LaurentPoly, params: &ModelParams) -> Self {
        let tables = (1..=params.m())
            .map(|site| VertexTable::new(variant, site, z, params))
            .collect();
        Self { tables }
    }

    pub fn m(&self) -> usize {
        self.tables.len()
    }

    /// Sweeps the auxiliary space across sites `1..=M`, entering in `|1⟩`
    /// and leaving projected on `⟨0|`.
    pub fn apply(&self, state: &QuantumState) -> QuantumState {
        assert_eq!(state.m, self.m(), "state and operator sizes differ");
        let n = state.amps.len();
        let mut a0 = vec![LaurentPoly::zero(); n];
        let mut a1 = state.amps.clone();
        for (j, w) in self.tables.iter().enumerate() {
            let bit = 1usize << j;
            for m0 in (0..n).filter(|i| i & bit == 0) {
                let m1 = m0 | bit;
                let i00 = std::mem::take(&mut a0[m0]);
                let i01 = std::mem::take(&mut a0[m1]);
                let i10 = std::mem::take(&mut a1[m0]);
                let i11 = std::mem::take(&mut a1[m1]);
                a0[m0] = mul_nz(w.get(0, 0, 0, 0), &i00);
                a0[m1] = mul_nz(w.get(0, 1, 0, 1), &i01) + mul_nz(w.get(1, 0, 0, 1), &i10);
                a1[m0] = mul_nz(w.get(0, 1, 1, 0), &i01) + mul_nz(w.get(1, 0, 1, 0), &i10);
                a1[m1] = mul_nz(w.get(1, 1, 1, 1), &i11);
            }
        }
        QuantumState {
            m: state.m,
            amps: a0,
        }
    }

    /// `⟨out| B |in⟩`. The auxiliary path is forced by particle
    /// conservation, so this is a single product of `M` weights.
    pub fn element(&self, out_mask: u32, in_mask: u32) -> LaurentPoly {
        let mut aux: i32 = 1;
        let mut acc = LaurentPoly::one();
        for (j, w) in self.tables.iter().enumerate() {
            let iq = (in_mask >> j & 1) as i32;
            let oq = (out_mask >> j & 1) as i32;
            let next = aux + iq - oq;
            if !(0..=1).contains(&next) {
                return LaurentPoly::zero();
            }
            let wt = w.get(aux as u8, iq as u8, next as u8, oq as u8);
            if wt.is_zero() {
                return LaurentPoly::zero();
            }
            acc *= wt;
            aux = next;
        }
        if aux == 0 {
            acc
        } else {
            LaurentPoly::zero()
        }
    }
}

fn mul_nz(w: &LaurentPoly, x: &LaurentPoly) -> LaurentPoly {
    if w.is_zero() || x.is_zero() {
        LaurentPoly::zero()
    } else {
        w * x
    }
}

pub fn apply_b(
    state: &QuantumState,
    variant: LOperatorVariant,
    z: &LaurentPoly,
    params: &ModelParams,
) -> QuantumState {
    BOperator::new(variant, z, params).apply(state)
}

/// `[z_1, …, z_n]` as polynomials.
pub fn z_symbols(n: usize) -> Vec<LaurentPoly> {
    (1..=n as u16)
        .map(|i| LaurentPoly::var(VarId::z(i)))
        .collect()
}

/// `B(z_1) ⋯ B(z_N) |start⟩`, applying `B(z_N)` first.
fn apply_string(
    start: QuantumState,
    zs: &[LaurentPoly],
    variant: LOperatorVariant,
    params: &ModelParams,
) -> QuantumState {
    zs.iter()
        .rev()
        .fold(start, |s, z| apply_b(&s, variant, z, params))
}

fn check(
    cfg: &SiteConfig,
    polarity: Polarity,
    zs: &[LaurentPoly],
    params: &ModelParams,
) -> Result<(), LatticeError> {
    if cfg.polarity() != polarity {
        return Err(LatticeError::ConfigMismatch(format!(
            "expected {polarity:?} configuration"
        )));
    }
    if cfg.m() != params.m() {
        return Err(LatticeError::ConfigMismatch(format!(
            "configuration has M = {} but the model has M = {}",
            cfg.m(),
            params.m()
        )));
    }
    if cfg.len() != zs.len() {
        return Err(LatticeError::ConfigMismatch(format!(
            "{} marks but {} spectral parameters",
            cfg.len(),
            zs.len()
        )));
    }
    Ok(())
}

/// `⟨x_1 … x_N| B(z_1) ⋯ B(z_N) |Ω⟩`.
pub fn wavefunction(
    x: &SiteConfig,
    zs: &[LaurentPoly],
    variant: LOperatorVariant,
    params: &ModelParams,
) -> Result<LaurentPoly, LatticeError> {
    check(x, Polarity::Particles, zs, params)?;
    let psi = apply_string(QuantumState::vacuum(params.m()), zs, variant, params);
    Ok(psi.amplitude(x.mask()).clone())
}

/// `⟨1 … M| B(z_1) ⋯ B(z_N) |x̄_1 … x̄_N⟩`.
pub fn dual_wavefunction(
    xbar: &SiteConfig,
    zs: &[LaurentPoly],
    variant: LOperatorVariant,
    params: &ModelParams,
) -> Result<LaurentPoly, LatticeError> {
    check(xbar, Polarity::Holes, zs, params)?;
    let m = params.m();
    let phi = apply_string(QuantumState::basis(m, xbar.mask()), zs, variant, params);
    Ok(phi.amplitude(full_mask(m)).clone())
}

/// Domain-wall partition function `⟨1 … M| B(z_1) ⋯ B(z_M) |Ω⟩` with
/// `M = zs.len()`, optionally with site arguments `z / v_j`.
pub fn dwbp(zs: &[LaurentPoly], vs: Option<&[VarId]>) -> Result<LaurentPoly, LatticeError> {
    let m = zs.len();
    let mut params = ModelParams::new(m)?;
    if let Some(vs) = vs {
        params = params.with_vs(vs.to_vec())?;
    }
    let full = SiteConfig::particles(m, (1..=m).collect())?;
    wavefunction(&full, zs, LOperatorVariant::Standard, &params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::deformed_vandermonde;

    fn std_params(m: usize) -> ModelParams {
        ModelParams::new(m).unwrap()
    }

    #[test]
    fn single_site_creation() {
        let p = std_params(1);
        let out = apply_b(
            &QuantumState::vacuum(1),
            LOperatorVariant::Standard,
            &LaurentPoly::z(1),
            &p,
        );
        assert_eq!(out.amplitude(1), &LaurentPoly::one());
        assert!(out.amplitude(0).is_zero());
    }

    #[test]
    fn raises_particle_number() {
        let p = std_params(4);
        let z = LaurentPoly::z(1);
        for mask in 0u32..16 {
            let out = apply_b(
                &QuantumState::basis(4, mask),
                LOperatorVariant::Standard,
                &z,
                &p,
            );
            for s in out.support() {
                assert_eq!(s.count_ones(), mask.count_ones() + 1);
            }
        }
    }

    #[test]
    fn element_matches_sweep() {
        let p = std_params(4);
        let b = BOperator::new(LOperatorVariant::Standard, &LaurentPoly::z(1), &p);
        for inm in 0u32..16 {
            let out = b.apply(&QuantumState::basis(4, inm));
            for outm in 0u32..16 {
                assert_eq!(&b.element(outm, inm), out.amplitude(outm));
            }
        }
    }

    #[test]
    fn worked_dual_example() {
        let p = std_params(4);
        let xbar = SiteConfig::holes(4, vec![2, 4]).unwrap();
        let got = dual_wavefunction(&xbar, &z_symbols(2), LOperatorVariant::Standard, &p).unwrap();
        assert_eq!(
            got.to_string(),
            "t^2*z1^2*z2^2 + t^2*z1*z2^3 + t*z1^3*z2 + t*z1^2*z2^2"
        );
    }

    #[test]
    fn small_wavefunctions() {
        let p = std_params(2);
        let x = SiteConfig::particles(2, vec![1, 2]).unwrap();
        let got = wavefunction(&x, &z_symbols(2), LOperatorVariant::Standard, &p).unwrap();
        assert_eq!(got, deformed_vandermonde(2));
        let empty = SiteConfig::particles(3, vec![]).unwrap();
        assert!(
            wavefunction(&empty, &[], LOperatorVariant::Standard, &std_params(3))
                .unwrap()
                .is_one()
        );
        let empty = SiteConfig::holes(3, vec![]).unwrap();
        assert!(
            dual_wavefunction(&empty, &[], LOperatorVariant::Standard, &std_params(3))
                .unwrap()
                .is_one()
        );
    }

    #[test]
    fn mismatches_are_reported() {
        let p = std_params(4);
        let x = SiteConfig::particles(4, vec![1, 2]).unwrap();
        assert!(matches!(
            wavefunction(&x, &z_symbols(1), LOperatorVariant::Standard, &p),
            Err(LatticeError::ConfigMismatch(_))
        ));
        assert!(matches!(
            dual_wavefunction(&x, &z_symbols(2), LOperatorVariant::Standard, &p),
            Err(LatticeError::ConfigMismatch(_))
        ));
    }

    #[test]
    fn dwbp_small() {
        assert!(dwbp(&z_symbols(1), None).unwrap().is_one());
        assert_eq!(dwbp(&z_symbols(2), None).unwrap(), deformed_vandermonde(2));
    }
}
