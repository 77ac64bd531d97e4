//! Maximum clique by branch and bound with a greedy-colouring bound
//! (Tomita–Seki style), on bitsets.

use serde::{Deserialize, Serialize};

use super::SimpleGraph;

/// Largest clique found. `exact` is false when the node budget ran out, in
/// which case `size` is only a lower bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueBound {
    pub size: usize,
    pub exact: bool,
    pub nodes: u64,
    /// 0-based vertices of one clique of `size`.
    pub witness: Vec<usize>,
}

struct Search<'a> {
    g: &'a SimpleGraph,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    best: Vec<usize>,
    current: Vec<usize>,
}

fn iter_bits(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(w, &word)| {
        let mut bits = word;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(w * 64 + b)
        })
    })
}

#[inline]
fn clear(set: &mut [u64], v: usize) {
    set[v / 64] &= !(1 << (v % 64));
}

impl Search<'_> {
    /// Greedy colouring of `cand`: returns vertices in colour order with the
    /// colour number of each (a bound on the clique within the prefix).
    fn colour_order(&self, cand: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = cand.to_vec();
        let mut order = Vec::new();
        let mut colours = Vec::new();
        let mut colour = 0;
        while uncoloured.iter().any(|&w| w != 0) {
            colour += 1;
            let mut available = uncoloured.clone();
            loop {
                let next = iter_bits(&available).next();
                let Some(v) = next else { break };
                clear(&mut available, v);
                clear(&mut uncoloured, v);
                for (a, r) in available.iter_mut().zip(self.g.row(v)) {
                    *a &= !r;
                }
                order.push(v);
                colours.push(colour);
            }
        }
        (order, colours)
    }

    fn expand(&mut self, mut cand: Vec<u64>) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let (order, colours) = self.colour_order(&cand);
        for idx in (0..order.len()).rev() {
            if self.current.len() + colours[idx] <= self.best.len() || self.exhausted {
                return;
            }
            let v = order[idx];
            self.current.push(v);
            let next: Vec<u64> = cand.iter().zip(self.g.row(v)).map(|(c, r)| c & r).collect();
            if next.iter().all(|&w| w == 0) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            clear(&mut cand, v);
        }
    }
}

/// Clique number of `g`, searching at most `budget` branch nodes.
pub fn max_clique(g: &SimpleGraph, budget: u64) -> CliqueBound {
    let words = g.n().div_ceil(64).max(1);
    let mut all = vec![0u64; words];
    for v in 0..g.n() {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut search = Search {
        g,
        budget,
        nodes: 0,
        exhausted: false,
        best: Vec::new(),
        current: Vec::new(),
    };
    if g.n() > 0 {
        search.expand(all);
    }
    let mut witness = search.best;
    witness.sort_unstable();
    CliqueBound {
        size: witness.len(),
        exact: !search.exhausted,
        nodes: search.nodes,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> SimpleGraph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        SimpleGraph::from_edges(n, edges).unwrap()
    }

    fn brute_force(g: &SimpleGraph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&mask| {
                let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                vs.iter().all(|&u| vs.iter().all(|&v| u == v || g.has_edge(u, v)))
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn complete_graphs() {
        for n in 1..8 {
            let c = max_clique(&complete(n), u64::MAX);
            assert_eq!(c.size, n);
            assert!(c.exact);
        }
        assert_eq!(max_clique(&SimpleGraph::empty(0), 10).size, 0);
        assert_eq!(max_clique(&SimpleGraph::empty(5), 10).size, 1);
    }

    #[test]
    fn matches_brute_force_on_pseudo_random_graphs() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for n in 2..=14 {
            for _ in 0..10 {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        if state % 100 < 55 {
                            edges.push((u, v));
                        }
                    }
                }
                let g = SimpleGraph::from_edges(n, edges).unwrap();
                let c = max_clique(&g, u64::MAX);
                assert_eq!(c.size, brute_force(&g));
                for &u in &c.witness {
                    for &v in &c.witness {
                        assert!(u == v || g.has_edge(u, v));
                    }
                }
            }
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let c = max_clique(&complete(20), 1);
        assert!(!c.exact);
        assert!(c.size <= 20);
    }
}
