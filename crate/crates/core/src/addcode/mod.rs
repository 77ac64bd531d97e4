//! Additive codes over GF(4) generated by graphs, and their weight profiles.
//!
//! The code of a graph with adjacency matrix `Γ` is spanned over F₂ by the
//! rows of `Γ + ωI`. Such codes are symplectic self-dual; they are Type II
//! exactly when every vertex has odd degree.

mod packed;
mod sampled;
mod support;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf4::{Gf4, Gf4Error, Gf4Vector};
use crate::metagraph::{MetacirculantSpec, SimpleGraph};

pub use packed::MAX_PACKED_LEN;
pub use sampled::{combination_minimum, min_weight_upper_bound, CombinationMinimum};
pub use support::{has_weight_below, min_distance_by_support, SupportSearch};
pub use sweep::{min_distance_exact, weight_count_at, ExhaustiveOptions, DEFAULT_EXHAUSTIVE_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Field(#[from] Gf4Error),
    #[error("a code needs at least one generator")]
    NoGenerators,
    #[error("{generators} generators exceed the exhaustive limit of {limit}")]
    ExhaustiveLimit { generators: usize, limit: usize },
    #[error("{required} codewords exceed the iteration budget of {budget}")]
    BudgetExceeded { required: u64, budget: u64 },
    #[error("code length {len} exceeds the packed kernel limit of {max}")]
    TooLong { len: usize, max: usize },
    #[error("generators are not in graph form (ω on the diagonal, 0/1 elsewhere)")]
    NotGraphForm,
    #[error("inequivalence test needs exact profiles, got {left} and {right}")]
    NotExact { left: ProfileKind, right: ProfileKind },
}

/// A code given by generators; its codewords are all F₂-combinations of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveCode {
    len: usize,
    generators: Vec<Gf4Vector>,
}

impl AdditiveCode {
    pub fn new(generators: Vec<Gf4Vector>) -> Result<Self, CodeError> {
        let len = generators.first().ok_or(CodeError::NoGenerators)?.len();
        for g in &generators {
            if g.len() != len {
                return Err(Gf4Error::LengthMismatch { left: len, right: g.len() }.into());
            }
        }
        Ok(AdditiveCode { len, generators })
    }

    /// Code length `n`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn generators(&self) -> &[Gf4Vector] {
        &self.generators
    }

    /// Number of generators `k`; the code has `2^k` words when they are independent.
    pub fn dimension(&self) -> usize {
        self.generators.len()
    }

    /// True when generator `i` has ω at `i` and only 0/1 elsewhere.
    pub fn is_graph_form(&self) -> bool {
        self.generators.len() == self.len
            && self.generators.iter().enumerate().all(|(i, g)| {
                let mut omega = Gf4Vector::zeros(self.len);
                omega.set(i, Gf4::OMEGA).expect("i < len");
                g.omega_plane() == omega.omega_plane()
            })
    }

    /// F₂-rank of the generators.
    pub fn rank(&self) -> usize {
        // each generator becomes one 2n-bit row: ω-plane words then 1-plane words
        let mut rows: Vec<Vec<u64>> = self
            .generators
            .iter()
            .map(|g| g.omega_plane().iter().chain(g.unit_plane()).copied().collect())
            .collect();
        let bits = rows.first().map_or(0, |r| r.len() * 64);
        let mut rank = 0;
        for bit in 0..bits {
            let (w, b) = (bit / 64, bit % 64);
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] >> b & 1 == 1) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[w] >> b & 1 == 1 {
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

impl fmt::Display for AdditiveCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Row `i` of `Γ + ωI`.
pub fn graph_code(g: &SimpleGraph) -> AdditiveCode {
    let n = g.n();
    let generators = (0..n)
        .map(|i| {
            let mut row = Gf4Vector::zeros(n);
            for j in g.neighbors(i) {
                row.set(j, Gf4::ONE).expect("neighbour in range");
            }
            row.set(i, Gf4::OMEGA).expect("diagonal in range");
            row
        })
        .collect();
    AdditiveCode { len: n, generators }
}

/// Result of [`is_self_dual`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfDuality {
    pub self_dual: bool,
    /// Generator pairs `(i, j)`, `i ≤ j`, with trace-Hermitian product 1.
    pub non_orthogonal: Vec<(usize, usize)>,
    pub rank: usize,
}

/// Self-orthogonal with `n` independent generators, i.e. `C = C*`.
pub fn is_self_dual(code: &AdditiveCode) -> SelfDuality {
    let gens = code.generators();
    let mut non_orthogonal = Vec::new();
    for i in 0..gens.len() {
        for j in i..gens.len() {
            if gens[i].trace_ip(&gens[j]).expect("equal lengths") {
                non_orthogonal.push((i, j));
            }
        }
    }
    let rank = code.rank();
    SelfDuality {
        self_dual: non_orthogonal.is_empty() && rank == code.len() && gens.len() == code.len(),
        non_orthogonal,
        rank,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeClass {
    /// Some codeword has odd weight.
    TypeI,
    /// Every codeword has even weight.
    TypeII,
}

impl fmt::Display for TypeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeClass::TypeI => "Type I",
            TypeClass::TypeII => "Type II",
        })
    }
}

/// Type II iff every vertex of the (full, bordered) graph has odd degree.
pub fn classify_by_degrees(g: &SimpleGraph) -> TypeClass {
    if g.degrees().iter().all(|d| d % 2 == 1) {
        TypeClass::TypeII
    } else {
        TypeClass::TypeI
    }
}

/// Classifies the bordered metacirculant code: Type II iff `Δ_S` and `m·ℓ` are both odd.
pub fn classify_by_theorem(spec: &MetacirculantSpec) -> TypeClass {
    if spec.delta() % 2 == 1 && spec.order() % 2 == 1 {
        TypeClass::TypeII
    } else {
        TypeClass::TypeI
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileKind {
    /// Every codeword was counted.
    Exact,
    /// Counts over a sample; `min_distance` is an upper bound on `d`.
    UpperBoundSampled,
    /// Counts cover only part of the code (e.g. low-support words).
    Partial,
}

impl fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProfileKind::Exact => "exact",
            ProfileKind::UpperBoundSampled => "upper_bound_sampled",
            ProfileKind::Partial => "partial",
        })
    }
}

/// Codeword counts by weight (`counts[w] = A_w`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightProfile {
    pub n: usize,
    pub kind: ProfileKind,
    pub counts: Vec<u64>,
    /// Least nonzero weight seen; `None` if only the zero word was seen.
    pub min_distance: Option<usize>,
}

impl WeightProfile {
    pub(crate) fn from_counts(n: usize, kind: ProfileKind, counts: Vec<u64>) -> Self {
        let min_distance = counts.iter().enumerate().skip(1).find(|(_, &c)| c > 0).map(|(w, _)| w);
        WeightProfile {
            n,
            kind,
            counts,
            min_distance,
        }
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Nonzero entries only.
    pub fn nonzero_counts(&self) -> BTreeMap<usize, u64> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w, c))
            .collect()
    }

    /// Type class read off an exact profile.
    pub fn type_class(&self) -> Option<TypeClass> {
        if self.kind != ProfileKind::Exact {
            return None;
        }
        let odd = self.counts.iter().skip(1).step_by(2).any(|&c| c > 0);
        Some(if odd { TypeClass::TypeI } else { TypeClass::TypeII })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Codes of different length are trivially inequivalent.
    DifferentLength { left: usize, right: usize },
    /// First weight where the counts differ.
    WeightCount { weight: usize, left: u64, right: u64 },
    Inconclusive,
}

/// Weight enumerators are equivalence invariants, so any differing `A_w`
/// proves two codes inequivalent.
pub fn inequivalence_witness(a: &WeightProfile, b: &WeightProfile) -> Result<Witness, CodeError> {
    if a.kind != ProfileKind::Exact || b.kind != ProfileKind::Exact {
        return Err(CodeError::NotExact {
            left: a.kind,
            right: b.kind,
        });
    }
    if a.n != b.n {
        return Ok(Witness::DifferentLength { left: a.n, right: b.n });
    }
    let top = a.counts.len().max(b.counts.len());
    Ok((0..top)
        .find(|&w| a.count(w) != b.count(w))
        .map_or(Witness::Inconclusive, |weight| Witness::WeightCount {
            weight,
            left: a.count(weight),
            right: b.count(weight),
        }))
}
