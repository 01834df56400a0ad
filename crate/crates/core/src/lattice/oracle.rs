//! Brute-force partition functions: enumerate every assignment of internal
//! edges on an `N × M` grid that obeys particle conservation at each vertex
//! and sum the products of vertex weights.

use crate::poly::LaurentPoly;

use super::config::full_mask;
use super::weights::VertexTable;
use super::{LOperatorVariant, LatticeError, ModelParams, Polarity, SiteConfig};

pub const DEFAULT_ORACLE_CAP: usize = 20;

/// Edge data on the boundary of the grid. Row `r` carries spectral
/// parameter `zs[r]`; rows are listed in operator order, so the last row
/// acts first on `bottom`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridBoundary {
    pub m: usize,
    pub zs: Vec<LaurentPoly>,
    /// Auxiliary state entering each row at site 1.
    pub left: Vec<u8>,
    /// Auxiliary state required leaving each row at site `M`.
    pub right: Vec<u8>,
    /// Occupation mask of the ket.
    pub bottom: u32,
    /// Occupation mask of the bra.
    pub top: u32,
}

impl GridBoundary {
    fn b_rows(m: usize, zs: &[LaurentPoly], bottom: u32, top: u32) -> Self {
        let n = zs.len();
        Self {
            m,
            zs: zs.to_vec(),
            left: vec![1; n],
            right: vec![0; n],
            bottom,
            top,
        }
    }

    /// Boundary of `⟨x| B(z_1) ⋯ B(z_N) |Ω⟩`.
    pub fn wavefunction(x: &SiteConfig, zs: &[LaurentPoly]) -> Result<Self, LatticeError> {
        if x.polarity() != Polarity::Particles || x.len() != zs.len() {
            return Err(LatticeError::ConfigMismatch(
                "expected N particles for N rows".into(),
            ));
        }
        Ok(Self::b_rows(x.m(), zs, 0, x.mask()))
    }

    /// Boundary of `⟨1^M| B(z_1) ⋯ B(z_N) |x̄⟩`.
    pub fn dual_wavefunction(xbar: &SiteConfig, zs: &[LaurentPoly]) -> Result<Self, LatticeError> {
        if xbar.polarity() != Polarity::Holes || xbar.len() != zs.len() {
            return Err(LatticeError::ConfigMismatch(
                "expected N holes for N rows".into(),
            ));
        }
        Ok(Self::b_rows(xbar.m(), zs, xbar.mask(), full_mask(xbar.m())))
    }

    pub fn rows(&self) -> usize {
        self.zs.len()
    }
}

/// One admissible edge configuration. `layers[0]` is the ket and
/// `layers[k]` the quantum state after `k` rows have acted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridConfiguration {
    pub layers: Vec<u32>,
    pub weight: LaurentPoly,
}

impl GridConfiguration {
    /// The quantum states strictly between ket and bra.
    pub fn inner_states(&self) -> &[u32] {
        &self.layers[1..self.layers.len() - 1]
    }
}

struct Search<'a> {
    b: &'a GridBoundary,
    /// `tables[k][site-1]` for the `k`-th row to act.
    tables: Vec<Vec<VertexTable>>,
    layers: Vec<u32>,
    out: Vec<GridConfiguration>,
}

impl Search<'_> {
    fn row(&mut self, k: usize, weight: LaurentPoly) {
        if k == self.tables.len() {
            if *self.layers.last().unwrap() == self.b.top {
                self.out.push(GridConfiguration {
                    layers: self.layers.clone(),
                    weight,
                });
            }
            return;
        }
        let r = self.b.rows() - 1 - k;
        let input = self.layers[k];
        self.site(k, r, 0, self.b.left[r], input, 0, weight);
    }

    #[allow(clippy::too_many_arguments)]
    fn site(
        &mut self,
        k: usize,
        r: usize,
        j: usize,
        aux: u8,
        input: u32,
        output: u32,
        weight: LaurentPoly,
    ) {
        if j == self.b.m {
            if aux == self.b.right[r] {
                self.layers.push(output);
                self.row(k + 1, weight);
                self.layers.pop();
            }
            return;
        }
        let iq = (input >> j & 1) as u8;
        for out_aux in 0..2u8 {
            let Some(oq) = (aux + iq).checked_sub(out_aux).filter(|&q| q < 2) else {
                continue;
            };
            let w = self.tables[k][j].get(aux, iq, out_aux, oq);
            if w.is_zero() {
                continue;
            }
            let next = &weight * w;
            self.site(k, r, j + 1, out_aux, input, output | (oq as u32) << j, next);
        }
    }
}

/// Every admissible configuration with nonzero weight, in depth-first order.
pub fn enumerate_configurations(
    boundary: &GridBoundary,
    variant: LOperatorVariant,
    params: &ModelParams,
    cap: usize,
) -> Result<Vec<GridConfiguration>, LatticeError> {
    let vertices = boundary.rows() * boundary.m;
    if vertices > cap {
        return Err(LatticeError::TooLarge { vertices, cap });
    }
    if boundary.m != params.m() {
        return Err(LatticeError::ConfigMismatch(
            "boundary and model sizes differ".into(),
        ));
    }
    let n = boundary.rows();
    if boundary.left.len() != n || boundary.right.len() != n {
        return Err(LatticeError::ConfigMismatch(
            "one left and right edge per row".into(),
        ));
    }
    let tables = (0..n)
        .map(|k| {
            let z = &boundary.zs[n - 1 - k];
            (1..=boundary.m)
                .map(|site| VertexTable::new(variant, site, z, params))
                .collect()
        })
        .collect();
    let mut search = Search {
        b: boundary,
        tables,
        layers: vec![boundary.bottom],
        out: Vec::new(),
    };
    search.row(0, LaurentPoly::one());
    Ok(search.out)
}

/// Sum of the weights of all admissible configurations.
pub fn enumerate_configurations_oracle(
    boundary: &GridBoundary,
    variant: LOperatorVariant,
    params: &ModelParams,
    cap: usize,
) -> Result<LaurentPoly, LatticeError> {
    Ok(enumerate_configurations(boundary, variant, params, cap)?
        .into_iter()
        .map(|c| c.weight)
        .sum())
}
