//! Vertex weights, B-operator sweeps and the configuration-enumeration oracle.
//!
//! Bit conventions: a vertex is `(in_aux, in_q) -> (out_aux, out_q)`; a
//! basis state of the quantum space is a bitmask with bit `j-1` set when site
//! `j` holds `|1⟩`.

mod config;
mod element;
mod oracle;
mod state;
mod weights;
mod ybe;

use thiserror::Error;

use crate::poly::{LaurentPoly, VarId};

pub use config::{Polarity, SiteConfig};
pub use element::{b_matrix_element, b_matrix_element_closed_form, five_vertex_b_element};
pub use oracle::{
    enumerate_configurations, enumerate_configurations_oracle, GridBoundary, GridConfiguration,
    DEFAULT_ORACLE_CAP,
};
pub use state::{
    apply_b, dual_wavefunction, dwbp, wavefunction, z_symbols, BOperator, QuantumState,
};
pub use weights::{l_matrix, l_weight, LOperatorVariant, VertexTable};
pub use ybe::{r_matrix_cleared, yang_baxter_sides};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("invalid site configuration: {0}")]
    InvalidConfig(String),
    #[error("configuration mismatch: {0}")]
    ConfigMismatch(String),
    #[error("oracle grid of {vertices} vertices exceeds the cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },
    #[error("invalid model parameters: {0}")]
    InvalidParams(String),
}

/// Site count plus optional per-site factorial parameters `α_j` and
/// inhomogeneities `v_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelParams {
    m: usize,
    alphas: Option<Vec<LaurentPoly>>,
    vs: Option<Vec<VarId>>,
}

impl ModelParams {
    pub fn new(m: usize) -> Result<Self, LatticeError> {
        if m == 0 {
            return Err(LatticeError::InvalidParams("M must be at least 1".into()));
        }
        if m > 24 {
            return Err(LatticeError::InvalidParams(format!(
                "M = {m} is too large for a dense state"
            )));
        }
        Ok(Self {
            m,
            alphas: None,
            vs: None,
        })
    }

    pub fn with_alphas(mut self, alphas: Vec<LaurentPoly>) -> Result<Self, LatticeError> {
        if alphas.len() != self.m {
            return Err(LatticeError::InvalidParams(format!(
                "expected {} factorial parameters, got {}",
                self.m,
                alphas.len()
            )));
        }
        self.alphas = Some(alphas);
        Ok(self)
    }

    /// Symbolic `α_1, …, α_M`.
    pub fn with_symbolic_alphas(self) -> Self {
        let alphas = (1..=self.m as u16)
            .map(|j| LaurentPoly::var(VarId::alpha(j)))
            .collect();
        Self {
            alphas: Some(alphas),
            ..self
        }
    }

    pub fn with_vs(mut self, vs: Vec<VarId>) -> Result<Self, LatticeError> {
        if vs.len() != self.m {
            return Err(LatticeError::InvalidParams(format!(
                "expected {} inhomogeneities, got {}",
                self.m,
                vs.len()
            )));
        }
        self.vs = Some(vs);
        Ok(self)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn alphas(&self) -> Option<&[LaurentPoly]> {
        self.alphas.as_deref()
    }

    pub fn vs(&self) -> Option<&[VarId]> {
        self.vs.as_deref()
    }

    /// `α_site`, falling back to the symbol when no values were supplied.
    pub fn alpha(&self, site: usize) -> LaurentPoly {
        match &self.alphas {
            Some(a) => a[site - 1].clone(),
            None => LaurentPoly::var(VarId::alpha(site as u16)),
        }
    }
}
