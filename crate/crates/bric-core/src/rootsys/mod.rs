//! Restricted root systems with orbit multiplicities.
//!
//! A compact symmetric space `M = G/K` of rank `r` decomposes its tangent
//! space as `p = a ⊕ ⊕_{λ∈Σ⁺} p_λ`, where `Σ⁺` is a set of positive
//! (restricted) roots and `m_λ = dim p_λ` are the multiplicities. The module
//! stores `Σ⁺` in simple-root coordinates, so that the centralizer of a face
//! vector dual to the simple root `α_k` is cut out by the span filter
//! "k-th coefficient = 0". Deleting the node `α_k` from the Dynkin diagram
//! yields the semisimple factor `B_{Φ^k}` of that centralizer and
//!
//! ```text
//! b(M) = 1 + max_k dim B_{Φ^k} = r + max_k Σ { m_λ : λ ∈ Σ⁺, c_k(λ) = 0 }.
//! ```

mod exceptional_data;
mod generate;
mod recognize;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Families of (possibly non-reduced) irreducible root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    #[serde(rename = "BC")]
    Bc,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::Bc => "BC",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl Family {
    /// Rank constraint for the family. Exceptional families have fixed rank;
    /// `B`/`C` start at 2 and `D` at 3 so that every datum has a unique
    /// canonical family (ranks below that coincide with `A`-types).
    pub fn rank_ok(self, rank: usize) -> bool {
        match self {
            Family::A | Family::Bc => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
            Family::E8 => rank == 8,
            Family::F4 => rank == 4,
            Family::G2 => rank == 2,
        }
    }

    /// Number of positive roots for the family at a given rank.
    pub fn positive_count(self, rank: usize) -> usize {
        match self {
            Family::A => rank * (rank + 1) / 2,
            Family::B | Family::C => rank * rank,
            Family::D => rank * (rank - 1),
            Family::Bc => rank * rank + rank,
            Family::E6 => 36,
            Family::E7 => 63,
            Family::E8 => 120,
            Family::F4 => 24,
            Family::G2 => 6,
        }
    }
}

/// Weyl-orbit label of a root. Reduced systems use `Single` (simply laced)
/// or `Short`/`Long`; type `BC` uses `Medium` for `e_i ± e_j`, `Short` for
/// `e_i` and `Long` for the divisible roots `2e_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orbit {
    Single,
    Medium,
    Short,
    Long,
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Orbit::Single => "single",
            Orbit::Medium => "medium",
            Orbit::Short => "short",
            Orbit::Long => "long",
        };
        f.write_str(s)
    }
}

/// Multiplicity assignment, one entry per Weyl orbit present.
pub type Multiplicities = BTreeMap<Orbit, u64>;

/// A positive root in simple-root coordinates together with its orbit label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    pub coeffs: Vec<i64>,
    pub orbit: Orbit,
}

impl Root {
    fn new(coeffs: Vec<i64>, orbit: Orbit) -> Self {
        Root { coeffs, orbit }
    }
}

/// A restricted root system with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDatum {
    pub family: Family,
    pub rank: usize,
    pub positive_roots: Vec<Root>,
    pub multiplicity: Multiplicities,
}

/// Orbits that actually occur for a family at a given rank.
pub fn orbits_present(family: Family, rank: usize) -> Vec<Orbit> {
    match family {
        Family::A | Family::D | Family::E6 | Family::E7 | Family::E8 => vec![Orbit::Single],
        Family::B | Family::C | Family::F4 | Family::G2 => vec![Orbit::Short, Orbit::Long],
        Family::Bc => {
            if rank >= 2 {
                vec![Orbit::Medium, Orbit::Short, Orbit::Long]
            } else {
                vec![Orbit::Short, Orbit::Long]
            }
        }
    }
}

/// Build a root datum, generating the positive roots for the family.
///
/// Classical families use closed-form coordinate patterns; exceptional
/// families come from embedded static tables.
pub fn build_root_datum(family: Family, rank: usize, mults: Multiplicities) -> Result<RootDatum> {
    if !family.rank_ok(rank) {
        return Err(Error::InvalidRank {
            family: family.to_string(),
            rank,
        });
    }
    for orbit in orbits_present(family, rank) {
        match mults.get(&orbit) {
            None => return Err(Error::MissingMultiplicity(orbit.to_string())),
            Some(0) => return Err(Error::ZeroMultiplicity(orbit.to_string())),
            Some(_) => {}
        }
    }
    let positive_roots = generate::positive_roots(family, rank);
    debug_assert_eq!(positive_roots.len(), family.positive_count(rank));
    Ok(RootDatum {
        family,
        rank,
        positive_roots,
        multiplicity: mults,
    })
}

impl RootDatum {
    /// Multiplicity of a root (by its orbit label).
    pub fn mult(&self, root: &Root) -> u64 {
        self.multiplicity[&root.orbit]
    }

    /// `dim M = r + Σ_{λ∈Σ⁺} m_λ`.
    pub fn dimension(&self) -> u64 {
        self.rank as u64
            + self
                .positive_roots
                .iter()
                .map(|root| self.mult(root))
                .sum::<u64>()
    }

    /// Positive roots whose `k`-th simple-root coefficient vanishes
    /// (1-based `k`), i.e. the roots surviving deletion of node `k`.
    pub fn span_filtered(&self, k: usize) -> Result<Vec<&Root>> {
        if k == 0 || k > self.rank {
            return Err(Error::NodeOutOfRange {
                index: k,
                rank: self.rank,
            });
        }
        Ok(self
            .positive_roots
            .iter()
            .filter(|root| root.coeffs[k - 1] == 0)
            .collect())
    }

    /// The invariant `b(M)` together with every node index attaining the max.
    ///
    /// `b = r + max_k Σ { m_λ : λ ∈ Σ⁺, c_k(λ) = 0 }`; ties are all reported.
    pub fn b_value(&self) -> (u64, Vec<usize>) {
        let mut best = 0u64;
        let mut argmax = Vec::new();
        for k in 1..=self.rank {
            let sum: u64 = self
                .positive_roots
                .iter()
                .filter(|root| root.coeffs[k - 1] == 0)
                .map(|root| self.mult(root))
                .sum();
            if sum > best || argmax.is_empty() {
                best = sum;
                argmax = vec![k];
            } else if sum == best {
                argmax.push(k);
            }
        }
        (self.rank as u64 + best, argmax)
    }

    /// Number of root lines (roots up to proportionality). For reduced
    /// systems this is `|Σ⁺|`; for `BC` the pairs `e_i, 2e_i` collapse.
    pub fn root_line_count(&self) -> usize {
        let mut lines: Vec<Vec<i64>> = Vec::new();
        for root in &self.positive_roots {
            let p = primitive(&root.coeffs);
            if !lines.contains(&p) {
                lines.push(p);
            }
        }
        lines.len()
    }

    /// Sum of multiplicities along the line of the simple root `α_k`
    /// (1-based). For `BC` end nodes this is `m_short + m_long`.
    pub fn line_mult(&self, k: usize) -> Result<u64> {
        if k == 0 || k > self.rank {
            return Err(Error::NodeOutOfRange {
                index: k,
                rank: self.rank,
            });
        }
        let unit: Vec<i64> = (0..self.rank).map(|i| i64::from(i == k - 1)).collect();
        Ok(self
            .positive_roots
            .iter()
            .filter(|root| primitive(&root.coeffs) == unit)
            .map(|root| self.mult(root))
            .sum())
    }

    /// Checks the structural invariants (root count, simple roots present,
    /// coefficients non-negative). Used by tests and catalog loading.
    pub fn validate(&self) -> Result<()> {
        let expected = self.family.positive_count(self.rank);
        if self.positive_roots.len() != expected {
            return Err(Error::Catalog(format!(
                "{}{}: expected {} positive roots, found {}",
                self.family,
                self.rank,
                expected,
                self.positive_roots.len()
            )));
        }
        for root in &self.positive_roots {
            if root.coeffs.len() != self.rank || root.coeffs.iter().any(|&c| c < 0) {
                return Err(Error::Catalog(format!(
                    "{}{}: bad coefficient vector {:?}",
                    self.family, self.rank, root.coeffs
                )));
            }
        }
        for k in 0..self.rank {
            let unit: Vec<i64> = (0..self.rank).map(|i| i64::from(i == k)).collect();
            if !self.positive_roots.iter().any(|r| r.coeffs == unit) {
                return Err(Error::Catalog(format!(
                    "{}{}: simple root α_{} missing",
                    self.family,
                    self.rank,
                    k + 1
                )));
            }
        }
        Ok(())
    }
}

fn primitive(coeffs: &[i64]) -> Vec<i64> {
    let g = coeffs
        .iter()
        .fold(0i64, |acc, &c| num_integer::gcd(acc, c.abs()));
    if g <= 1 {
        coeffs.to_vec()
    } else {
        coeffs.iter().map(|&c| c / g).collect()
    }
}

/// One Dynkin component left over after deleting a node, with the map from
/// its canonical node numbering back to parent nodes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubComponent {
    /// Parent node indices belonging to this component (ascending, 1-based).
    pub nodes: Vec<usize>,
    /// Canonical datum of the component with inherited multiplicities.
    pub datum: RootDatum,
    /// `node_map[i]` = parent node of the component's canonical node `i+1`.
    pub node_map: Vec<usize>,
}

/// Result of deleting node `k`: the components of `Φ^k = Λ \ {α_k}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubDatum {
    pub parent: RootDatum,
    pub removed_index: usize,
    pub components: Vec<SubComponent>,
}

impl SubDatum {
    /// `dim B_{Φ^k}` = total dimension of the component symmetric spaces.
    pub fn semisimple_dim(&self) -> u64 {
        self.components.iter().map(|c| c.datum.dimension()).sum()
    }

    /// Positive roots of every component mapped into parent coordinates.
    pub fn embedded_roots(&self) -> Vec<Root> {
        let rank = self.parent.rank;
        let mut out = Vec::new();
        for comp in &self.components {
            for root in &comp.datum.positive_roots {
                let mut coeffs = vec![0i64; rank];
                for (i, &c) in root.coeffs.iter().enumerate() {
                    coeffs[comp.node_map[i] - 1] = c;
                }
                out.push(Root::new(coeffs, root.orbit));
            }
        }
        out
    }
}

/// Delete Dynkin node `k` (1-based) and decompose the remainder.
pub fn delete_node(datum: &RootDatum, k: usize) -> Result<SubDatum> {
    if k == 0 || k > datum.rank {
        return Err(Error::NodeOutOfRange {
            index: k,
            rank: datum.rank,
        });
    }
    let components = recognize::components_after_deletion(datum, k)?;
    Ok(SubDatum {
        parent: datum.clone(),
        removed_index: k,
        components,
    })
}

/// `b(M)` computed through the component decomposition:
/// `1 + max_k dim B_{Φ^k}` (the `+1` is the torus rank direction).
///
/// Independent of [`RootDatum::b_value`]'s span-filter sum; the two are
/// cross-checked in tests over the whole catalog.
pub fn b_via_components(datum: &RootDatum) -> Result<(u64, Vec<usize>)> {
    let mut best = 0u64;
    let mut argmax = Vec::new();
    for k in 1..=datum.rank {
        let sub = delete_node(datum, k)?;
        // dim B_{Φ^k} already accounts for the r-1 surviving node directions.
        let dim = sub.semisimple_dim();
        if dim > best || argmax.is_empty() {
            best = dim;
            argmax = vec![k];
        } else if dim == best {
            argmax.push(k);
        }
    }
    Ok((best + 1, argmax))
}

pub use recognize::Diagram;

#[cfg(test)]
mod tests;
