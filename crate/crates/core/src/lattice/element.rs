use num_bigint::BigInt;

use crate::poly::{LaurentPoly, Monomial, VarId};

use super::state::BOperator;
use super::{LOperatorVariant, LatticeError, ModelParams, Polarity, SiteConfig};

fn check_pair(xbar: &SiteConfig, ybar: &SiteConfig) -> Result<(), LatticeError> {
    if xbar.polarity() != Polarity::Holes || ybar.polarity() != Polarity::Holes {
        return Err(LatticeError::ConfigMismatch(
            "matrix elements take hole configurations".into(),
        ));
    }
    if xbar.m() != ybar.m() {
        return Err(LatticeError::ConfigMismatch(format!(
            "site counts differ: {} vs {}",
            xbar.m(),
            ybar.m()
        )));
    }
    if ybar.len() != xbar.len() + 1 {
        return Err(LatticeError::ConfigMismatch(format!(
            "in-state must have one more hole than the out-state ({} vs {})",
            ybar.len(),
            xbar.len()
        )));
    }
    Ok(())
}

/// `⟨x̄| B(z) |ȳ⟩` by a direct contraction of one row.
pub fn b_matrix_element(
    xbar: &SiteConfig,
    ybar: &SiteConfig,
    z: &LaurentPoly,
    variant: LOperatorVariant,
    params: &ModelParams,
) -> Result<LaurentPoly, LatticeError> {
    check_pair(xbar, ybar)?;
    if xbar.m() != params.m() {
        return Err(LatticeError::ConfigMismatch(
            "configuration and model sizes differ".into(),
        ));
    }
    Ok(BOperator::new(variant, z, params).element(xbar.mask(), ybar.mask()))
}

/// Closed form of `⟨x̄| B(z) |ȳ⟩` for the standard weights.
///
/// Nonzero exactly when `ȳ_1 ≤ x̄_1 ≤ ȳ_2 ≤ … ≤ x̄_N ≤ ȳ_{N+1}`, in which case
/// it equals
/// `(t+1)^{#{j : x̄_j ∉ {ȳ_j, ȳ_{j+1}}}} · t^{Σ_j max(x̄_j − ȳ_j − 1, 0)} · z^{ȳ_1 − 1 + Σ_j (ȳ_{j+1} − x̄_j)}`
/// with `x̄_{N+1} = M + 1` in the `t` exponent.
pub fn b_matrix_element_closed_form(
    xbar: &SiteConfig,
    ybar: &SiteConfig,
    z: &LaurentPoly,
) -> Result<LaurentPoly, LatticeError> {
    check_pair(xbar, ybar)?;
    let x = xbar.positions();
    let y = ybar.positions();
    let n = x.len();
    let interlaces = (0..n).all(|j| y[j] <= x[j] && x[j] <= y[j + 1]);
    if !interlaces {
        return Ok(LaurentPoly::zero());
    }
    let mixed = (0..n).filter(|&j| x[j] != y[j] && x[j] != y[j + 1]).count() as u32;
    let t_exp: usize = (0..=n)
        .map(|j| {
            let xj = if j < n { x[j] } else { xbar.m() + 1 };
            xj.saturating_sub(y[j] + 1)
        })
        .sum();
    let z_exp: usize = (y[0] - 1) + (0..n).map(|j| y[j + 1] - x[j]).sum::<usize>();
    let t1 = LaurentPoly::t() + LaurentPoly::one();
    Ok(t1.pow(mixed)
        * LaurentPoly::monomial(Monomial::var_pow(VarId::T, t_exp as i32))
        * z.pow(z_exp as u32))
}

/// Closed form of `⟨x̄| B̃(z) |ȳ⟩` for the five-vertex weights: with
/// `k = |ȳ|`, equals `(-1)^k (-1)^{j-1} z^{ȳ_j - 1}` when `x̄` is `ȳ` with
/// `ȳ_j` removed, and 0 otherwise.
pub fn five_vertex_b_element(
    xbar: &SiteConfig,
    ybar: &SiteConfig,
    z: &LaurentPoly,
) -> Result<LaurentPoly, LatticeError> {
    check_pair(xbar, ybar)?;
    let x = xbar.positions();
    let y = ybar.positions();
    let k = y.len();
    let removed = (0..k).find(|&j| {
        y.iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, &p)| p)
            .eq(x.iter().copied())
    });
    Ok(match removed {
        Some(j) => {
            let sign = if (k + j).is_multiple_of(2) { 1 } else { -1 };
            z.pow((y[j] - 1) as u32).scale(&BigInt::from(sign))
        }
        None => LaurentPoly::zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_single_row_example() {
        let xbar = SiteConfig::holes(10, vec![3, 6]).unwrap();
        let ybar = SiteConfig::holes(10, vec![1, 6, 8]).unwrap();
        let z = LaurentPoly::z(1);
        let expect = (LaurentPoly::t() + LaurentPoly::one()) * LaurentPoly::t().pow(3) * z.pow(5);
        let params = ModelParams::new(10).unwrap();
        assert_eq!(
            b_matrix_element(&xbar, &ybar, &z, LOperatorVariant::Standard, &params).unwrap(),
            expect
        );
        assert_eq!(
            b_matrix_element_closed_form(&xbar, &ybar, &z).unwrap(),
            expect
        );
    }

    #[test]
    fn non_interlacing_vanishes() {
        let xbar = SiteConfig::holes(4, vec![1]).unwrap();
        let ybar = SiteConfig::holes(4, vec![3, 4]).unwrap();
        let z = LaurentPoly::z(1);
        assert!(b_matrix_element_closed_form(&xbar, &ybar, &z)
            .unwrap()
            .is_zero());
        let params = ModelParams::new(4).unwrap();
        assert!(
            b_matrix_element(&xbar, &ybar, &z, LOperatorVariant::Standard, &params)
                .unwrap()
                .is_zero()
        );
    }

    #[test]
    fn single_hole_element() {
        let z = LaurentPoly::z(1);
        let params = ModelParams::new(2).unwrap();
        for y1 in 1..=2 {
            let xbar = SiteConfig::holes(2, vec![]).unwrap();
            let ybar = SiteConfig::holes(2, vec![y1]).unwrap();
            let direct =
                b_matrix_element(&xbar, &ybar, &z, LOperatorVariant::Standard, &params).unwrap();
            assert_eq!(
                direct,
                b_matrix_element_closed_form(&xbar, &ybar, &z).unwrap()
            );
        }
    }

    #[test]
    fn five_vertex_example() {
        let xbar = SiteConfig::holes(3, vec![2]).unwrap();
        let ybar = SiteConfig::holes(3, vec![1, 2]).unwrap();
        let z = LaurentPoly::z(1);
        assert!(five_vertex_b_element(&xbar, &ybar, &z).unwrap().is_one());
        let params = ModelParams::new(3).unwrap();
        let direct =
            b_matrix_element(&xbar, &ybar, &z, LOperatorVariant::FiveVertex, &params).unwrap();
        assert!(direct.is_one());
    }
}
