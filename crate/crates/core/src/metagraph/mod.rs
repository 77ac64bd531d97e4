//! Metacirculant graphs `G(m, ℓ, α, S₀, …, S_⌊m/2⌋)` and the bordered
//! construction.
//!
//! The vertex set is `Z_m × Z_ℓ`. Vertices `(i, j)` and `(i + k, h)` are
//! adjacent iff `h − j ∈ αⁱ·S_k` for `0 ≤ k ≤ ⌊m/2⌋`; `k = 0` gives the edges
//! inside a block. A spec is well formed when
//!
//! 1. `S₀ = −S₀`,
//! 2. `0 ∉ S₀`,
//! 3. `αᵐ·S_k = S_k` for `1 ≤ k ≤ ⌊m/2⌋`,
//! 4. `α^(m/2)·S_{m/2} = −S_{m/2}` when `m` is even,
//!
//! and `α` is a unit of `Z_ℓ`.

mod clique;
mod graph;
mod metrics;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use clique::{max_clique, CliqueBound};
pub use graph::{edge_list, SimpleGraph, VertexLabel};
pub use metrics::{metrics, GraphMetrics, MetricsOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid metacirculant spec: {0}")]
    InvalidSpec(ValidityReport),
    #[error("self-loop at vertex {}", vertex + 1)]
    SelfLoop { vertex: usize },
    #[error("vertex {} out of range for {n} vertices", vertex + 1)]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {}-{}", u + 1, v + 1)]
    DuplicateEdge { u: usize, v: usize },
    #[error("adjacency not symmetric at {}-{}", u + 1, v + 1)]
    Asymmetric { u: usize, v: usize },
}

/// The parameters `(m, ℓ, α, S₀ … S_⌊m/2⌋)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MetacirculantSpec {
    pub m: usize,
    pub ell: usize,
    pub alpha: usize,
    pub sets: Vec<BTreeSet<usize>>,
}

/// One failed condition of a spec.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    ZeroParameter,
    SetCount { expected: usize, found: usize },
    OutOfRange { set: usize, value: usize },
    AlphaNotUnit,
    S0NotSymmetric,
    ZeroInS0,
    NotInvariant { set: usize },
    HalfNotAntiInvariant { set: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroParameter => write!(f, "m ≥ 1 and ℓ ≥ 1"),
            Violation::SetCount { expected, found } => {
                write!(f, "⌊m/2⌋+1 = {expected} sets (found {found})")
            }
            Violation::OutOfRange { set, value } => write!(f, "S{set} ⊆ Z_ℓ ({value} out of range)"),
            Violation::AlphaNotUnit => write!(f, "gcd(α, ℓ) = 1"),
            Violation::S0NotSymmetric => write!(f, "S0 = −S0"),
            Violation::ZeroInS0 => write!(f, "0 ∉ S0"),
            Violation::NotInvariant { set } => write!(f, "α^m·S{set} = S{set}"),
            Violation::HalfNotAntiInvariant { set } => write!(f, "α^(m/2)·S{set} = −S{set}"),
        }
    }
}

/// Outcome of [`validate_spec`]: empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "violated {v}")?;
        }
        Ok(())
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn pow_mod(base: usize, exp: usize, modulus: usize) -> usize {
    let m = modulus as u128;
    let (mut b, mut e, mut acc) = (base as u128 % m, exp, 1u128 % m);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as usize
}

/// `{ factor·x mod ℓ : x ∈ set }`.
pub(crate) fn scale(set: &BTreeSet<usize>, factor: usize, ell: usize) -> BTreeSet<usize> {
    set.iter().map(|&x| (x * factor) % ell).collect()
}

pub(crate) fn negate(set: &BTreeSet<usize>, ell: usize) -> BTreeSet<usize> {
    set.iter().map(|&x| (ell - x) % ell).collect()
}

impl MetacirculantSpec {
    pub fn new(m: usize, ell: usize, alpha: usize, sets: Vec<Vec<usize>>) -> Self {
        MetacirculantSpec {
            m,
            ell,
            alpha,
            sets: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    /// Number of vertices of the (unbordered) graph.
    pub fn order(&self) -> usize {
        self.m * self.ell
    }

    pub fn set_count(&self) -> usize {
        self.m / 2 + 1
    }

    /// `Δ_S = |S₀| + 1` for odd `m`, `|S₀| + |S_{m/2}| + 1` for even `m`.
    pub fn delta(&self) -> usize {
        let mut d = self.sets[0].len() + 1;
        if self.m % 2 == 0 {
            d += self.sets[self.m / 2].len();
        }
        d
    }
}

impl fmt::Display for MetacirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({}, {}, {}", self.m, self.ell, self.alpha)?;
        for s in &self.sets {
            let items: Vec<String> = s.iter().map(|x| x.to_string()).collect();
            write!(f, ", {{{}}}", items.join(", "))?;
        }
        write!(f, ")")
    }
}

/// Checks the unit condition and the four set conditions, naming each failure.
pub fn validate_spec(spec: &MetacirculantSpec) -> ValidityReport {
    let mut violations = Vec::new();
    if spec.m == 0 || spec.ell == 0 {
        violations.push(Violation::ZeroParameter);
        return ValidityReport { violations };
    }
    let ell = spec.ell;
    if spec.sets.len() != spec.set_count() {
        violations.push(Violation::SetCount {
            expected: spec.set_count(),
            found: spec.sets.len(),
        });
        return ValidityReport { violations };
    }
    for (k, s) in spec.sets.iter().enumerate() {
        if let Some(&value) = s.iter().find(|&&x| x >= ell) {
            violations.push(Violation::OutOfRange { set: k, value });
        }
    }
    if !violations.is_empty() {
        return ValidityReport { violations };
    }
    if gcd(spec.alpha % ell, ell) != 1 {
        violations.push(Violation::AlphaNotUnit);
    }
    let s0 = &spec.sets[0];
    if negate(s0, ell) != *s0 {
        violations.push(Violation::S0NotSymmetric);
    }
    if s0.contains(&0) {
        violations.push(Violation::ZeroInS0);
    }
    let alpha_m = pow_mod(spec.alpha, spec.m, ell);
    for k in 1..spec.sets.len() {
        if scale(&spec.sets[k], alpha_m, ell) != spec.sets[k] {
            violations.push(Violation::NotInvariant { set: k });
        }
    }
    if spec.m % 2 == 0 {
        let k = spec.m / 2;
        let half = pow_mod(spec.alpha, k, ell);
        if scale(&spec.sets[k], half, ell) != negate(&spec.sets[k], ell) {
            violations.push(Violation::HalfNotAntiInvariant { set: k });
        }
    }
    ValidityReport { violations }
}

/// How `(block, offset)` pairs are numbered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Labeling {
    /// `block·ℓ + offset`: each block is a contiguous run of indices.
    #[default]
    BlockMajor,
    /// `offset·m + block`: consecutive indices cycle through the blocks.
    OffsetMajor,
}

impl Labeling {
    pub fn index(self, m: usize, ell: usize, block: usize, offset: usize) -> usize {
        match self {
            Labeling::BlockMajor => block * ell + offset,
            Labeling::OffsetMajor => offset * m + block,
        }
    }
}

/// Builds the metacirculant graph with block-major numbering.
pub fn build_metacirculant(spec: &MetacirculantSpec) -> Result<SimpleGraph, GraphError> {
    let report = validate_spec(spec);
    if !report.is_ok() {
        return Err(GraphError::InvalidSpec(report));
    }
    let (m, ell) = (spec.m, spec.ell);
    let mut g = SimpleGraph::empty(m * ell);
    for i in 0..m {
        let mult = pow_mod(spec.alpha, i, ell);
        for (k, set) in spec.sets.iter().enumerate() {
            // the block pair (i, i + m/2) is generated from both ends; condition 4
            // makes the two descriptions agree
            let target = (i + k) % m;
            for j in 0..ell {
                for &s in set {
                    let h = (j + mult * s) % ell;
                    let (u, v) = (i * ell + j, target * ell + h);
                    if u != v {
                        g.insert_edge(u, v);
                    }
                }
            }
        }
    }
    g.check_simple()?;
    let labels = (0..m)
        .flat_map(|block| (0..ell).map(move |offset| VertexLabel::Block { block, offset }))
        .collect();
    Ok(g.with_labels(labels))
}

/// Builds the metacirculant graph under the given numbering.
pub fn build_metacirculant_labeled(spec: &MetacirculantSpec, labeling: Labeling) -> Result<SimpleGraph, GraphError> {
    let g = build_metacirculant(spec)?;
    if labeling == Labeling::BlockMajor {
        return Ok(g);
    }
    let perm: Vec<usize> = (0..spec.m)
        .flat_map(|block| (0..spec.ell).map(move |offset| labeling.index(spec.m, spec.ell, block, offset)))
        .collect();
    Ok(g.relabel(&perm))
}

/// Adds a vertex `v_∞` adjacent to every vertex. It takes index 0; the
/// original vertices shift up by one.
pub fn border(g: &SimpleGraph) -> SimpleGraph {
    let n = g.n() + 1;
    let mut out = SimpleGraph::empty(n);
    for v in 1..n {
        out.insert_edge(0, v);
    }
    for (u, v) in g.edges() {
        out.insert_edge(u + 1, v + 1);
    }
    if let Some(labels) = g.labels() {
        let mut moved = Vec::with_capacity(n);
        moved.push(VertexLabel::Border);
        moved.extend_from_slice(labels);
        out = out.with_labels(moved);
    }
    out
}

/// Common degree of the metacirculant graph; with `bordered` the edge to
/// `v_∞` is included.
pub fn expected_valency(spec: &MetacirculantSpec, bordered: bool) -> usize {
    let sizes: Vec<usize> = spec.sets.iter().map(BTreeSet::len).collect();
    let m = spec.m;
    let mut deg = sizes[0];
    if m % 2 == 0 {
        deg += sizes[m / 2] + 2 * sizes[1..m / 2].iter().sum::<usize>();
    } else {
        deg += 2 * sizes[1..].iter().sum::<usize>();
    }
    deg + bordered as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hexacode() -> MetacirculantSpec {
        MetacirculantSpec::new(2, 3, 1, vec![vec![1, 2], vec![0]])
    }

    fn g80_3() -> MetacirculantSpec {
        MetacirculantSpec::new(
            10,
            8,
            5,
            vec![
                vec![2, 3, 5, 6],
                vec![3],
                vec![2, 4, 6, 7],
                vec![5, 6],
                vec![0, 1, 2, 3, 4, 6],
                vec![0, 2, 5, 6, 7],
            ],
        )
    }

    #[test]
    fn validates_fixture_specs() {
        assert!(validate_spec(&hexacode()).is_ok());
        assert!(validate_spec(&g80_3()).is_ok());
        // 5⁵ ≡ 5 (mod 8) and −5·{0,2,5,6,7} = {0,6,7,2,5}
        assert_eq!(pow_mod(5, 5, 8), 5);
        let s5 = &g80_3().sets[5];
        assert_eq!(scale(s5, 5, 8), negate(s5, 8));
    }

    #[test]
    fn zero_in_s0_is_named() {
        let mut s = hexacode();
        s.sets[0] = [0, 1, 2].into();
        let report = validate_spec(&s);
        assert_eq!(report.violations, vec![Violation::ZeroInS0]);
        assert!(report.to_string().contains("0 ∉ S0"));
    }

    #[test]
    fn single_condition_mutations() {
        let mut s = hexacode();
        s.sets[0] = [1].into();
        assert_eq!(validate_spec(&s).violations, vec![Violation::S0NotSymmetric]);

        let mut s = g80_3();
        s.alpha = 2;
        assert!(validate_spec(&s).violations.contains(&Violation::AlphaNotUnit));

        // G(3, 7, 2, ∅, {1}): 2³ = 8 ≡ 1, so S1 = {1} is fine; α = 3 gives 27 ≡ 6.
        let ok = MetacirculantSpec::new(3, 7, 2, vec![vec![], vec![1]]);
        assert!(validate_spec(&ok).is_ok());
        let bad = MetacirculantSpec::new(3, 7, 3, vec![vec![], vec![1]]);
        assert_eq!(validate_spec(&bad).violations, vec![Violation::NotInvariant { set: 1 }]);

        let mut s = g80_3();
        s.sets[5].remove(&7);
        s.sets[5].remove(&2);
        s.sets[5].insert(1);
        // {0,1,5,6}: −5·S = {0,3,7,2} ≠ S; 5^10 ≡ 1 so condition 3 still holds
        assert_eq!(
            validate_spec(&s).violations,
            vec![Violation::HalfNotAntiInvariant { set: 5 }]
        );
    }

    #[test]
    fn structural_errors() {
        let s = MetacirculantSpec::new(2, 3, 1, vec![vec![1, 2]]);
        assert!(matches!(
            validate_spec(&s).violations[..],
            [Violation::SetCount { expected: 2, found: 1 }]
        ));
        let s = MetacirculantSpec::new(2, 3, 1, vec![vec![1, 2], vec![3]]);
        assert!(matches!(
            validate_spec(&s).violations[..],
            [Violation::OutOfRange { set: 1, value: 3 }]
        ));
        let s = MetacirculantSpec::new(0, 3, 1, vec![]);
        assert_eq!(validate_spec(&s).violations, vec![Violation::ZeroParameter]);
        assert!(matches!(build_metacirculant(&s), Err(GraphError::InvalidSpec(_))));
    }

    #[test]
    fn hexacode_edges_follow_figure() {
        let g = build_metacirculant(&hexacode()).unwrap();
        let expected = vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 5), (3, 6), (4, 5), (4, 6), (5, 6)];
        assert_eq!(edge_list(&g), expected);
        assert_eq!(g.labels().unwrap()[4], VertexLabel::Block { block: 1, offset: 1 });
    }

    #[test]
    fn empty_sets_give_edgeless_graph() {
        let s = MetacirculantSpec::new(4, 5, 2, vec![vec![], vec![], vec![]]);
        let g = build_metacirculant(&s).unwrap();
        assert_eq!(g.n(), 20);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(expected_valency(&s, false), 0);
    }

    #[test]
    fn border_adds_universal_vertex() {
        let k2 = border(&SimpleGraph::empty(1));
        assert_eq!(k2.edges(), vec![(0, 1)]);
        let g = build_metacirculant(&hexacode()).unwrap();
        let b = border(&g);
        assert_eq!(b.degree(0), 6);
        for v in 0..6 {
            assert_eq!(b.degree(v + 1), g.degree(v) + 1);
        }
        assert_eq!(b.labels().unwrap()[0], VertexLabel::Border);
    }

    #[test]
    fn offset_major_labels() {
        let g = build_metacirculant_labeled(&hexacode(), Labeling::OffsetMajor).unwrap();
        // blocks interleave: block 0 is {1,3,5}, block 1 is {2,4,6}
        let expected = vec![(1, 2), (1, 3), (1, 5), (2, 4), (2, 6), (3, 4), (3, 5), (4, 6), (5, 6)];
        assert_eq!(edge_list(&g), expected);
        assert_eq!(g.labels().unwrap()[1], VertexLabel::Block { block: 1, offset: 0 });
    }

    #[test]
    fn valency_formula() {
        assert_eq!(expected_valency(&hexacode(), false), 3);
        assert_eq!(expected_valency(&hexacode(), true), 4);
        assert_eq!(expected_valency(&g80_3(), false), 4 + 5 + 2 * (1 + 4 + 2 + 6));
        let g = build_metacirculant(&g80_3()).unwrap();
        assert!(g.degrees().iter().all(|&d| d == 35));
    }
}
