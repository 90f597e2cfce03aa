//! Hereditary properties: forbidden (induced) subgraphs and colouring
//! bounds.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{invalid, Result};
use crate::hypergraph::{
    chromatic_number, contains_induced, contains_subgraph, weak_chromatic_number, Hypergraph,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum PropertyMode {
    /// No forbidden graph as a subgraph.
    Monotone,
    /// No forbidden graph as an induced subgraph.
    Hereditary,
    /// Chromatic number at most `bound`.
    ChromaticBounded,
    /// Weak chromatic number at most `bound`.
    WeakChromaticBounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PropertySpec {
    pub r: usize,
    pub mode: PropertyMode,
    pub forbidden: Vec<Hypergraph>,
    pub bound: usize,
}

impl PropertySpec {
    fn forbidding(r: usize, mode: PropertyMode, forbidden: Vec<Hypergraph>) -> Result<Self> {
        if r < 2 {
            return Err(invalid!("uniformity must be at least 2"));
        }
        if let Some(f) = forbidden.iter().find(|f| f.uniformity() != r) {
            return Err(invalid!(
                "forbidden graph is {}-uniform, property is {r}-uniform",
                f.uniformity()
            ));
        }
        Ok(Self { r, mode, forbidden, bound: 0 })
    }

    /// `Mon(F)`; an empty list gives the property of all r-graphs.
    pub fn monotone(r: usize, forbidden: Vec<Hypergraph>) -> Result<Self> {
        Self::forbidding(r, PropertyMode::Monotone, forbidden)
    }

    /// `Her(F)`.
    pub fn hereditary(r: usize, forbidden: Vec<Hypergraph>) -> Result<Self> {
        Self::forbidding(r, PropertyMode::Hereditary, forbidden)
    }

    /// `C(p)`: chromatic number at most `p`.
    pub fn chromatic(r: usize, p: usize) -> Result<Self> {
        Self::colouring(r, PropertyMode::ChromaticBounded, p)
    }

    /// Weak chromatic number at most `q`.
    pub fn weak_chromatic(r: usize, q: usize) -> Result<Self> {
        Self::colouring(r, PropertyMode::WeakChromaticBounded, q)
    }

    fn colouring(r: usize, mode: PropertyMode, bound: usize) -> Result<Self> {
        if r < 2 {
            return Err(invalid!("uniformity must be at least 2"));
        }
        if bound == 0 {
            return Err(invalid!("colouring bound must be at least 1"));
        }
        Ok(Self { r, mode, forbidden: Vec::new(), bound })
    }

    /// Membership of `g` in the property.
    pub fn admits(&self, g: &Hypergraph) -> Result<bool> {
        if g.uniformity() != self.r {
            return Err(invalid!(
                "graph is {}-uniform, property is {}-uniform",
                g.uniformity(),
                self.r
            ));
        }
        Ok(match self.mode {
            PropertyMode::Monotone => {
                for f in &self.forbidden {
                    if contains_subgraph(g, f)? {
                        return Ok(false);
                    }
                }
                true
            }
            PropertyMode::Hereditary => {
                for f in &self.forbidden {
                    if contains_induced(g, f)? {
                        return Ok(false);
                    }
                }
                true
            }
            PropertyMode::ChromaticBounded => chromatic_number(g)? <= self.bound,
            PropertyMode::WeakChromaticBounded => weak_chromatic_number(g)? <= self.bound,
        })
    }

    /// Short human-readable label, e.g. `Mon(2 forbidden)` or `C(3)`.
    pub fn label(&self) -> String {
        match self.mode {
            PropertyMode::Monotone => alloc::format!("Mon({} forbidden)", self.forbidden.len()),
            PropertyMode::Hereditary => alloc::format!("Her({} forbidden)", self.forbidden.len()),
            PropertyMode::ChromaticBounded => alloc::format!("C({})", self.bound),
            PropertyMode::WeakChromaticBounded => alloc::format!("weak-C({})", self.bound),
        }
    }
}
