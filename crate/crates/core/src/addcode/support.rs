//! Low-support search for codes in graph form.
//!
//! When generator `i` is `ω·e_i` plus a 0/1 row, the ω-plane of a combination
//! is exactly its selection mask, so a combination of `s` generators has
//! weight at least `s`. Every word of weight `≤ t` therefore comes from at
//! most `t` generators, and scanning selections in order of size settles
//! both `d` and `A_d` after `Σ_{s ≤ d} C(n, s)` words instead of `2^n`.

use rayon::prelude::*;

use super::packed::{with_width, Packed, MAX_PACKED_LEN};
use super::{AdditiveCode, CodeError, ProfileKind, WeightProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupportSearch {
    pub min_distance: usize,
    /// `A_d`.
    pub count_at_min: u64,
    /// Words evaluated.
    pub visited: u64,
}

impl SupportSearch {
    /// A `Partial` profile: exact for every weight up to `d`, empty above.
    pub fn to_profile(&self, n: usize) -> WeightProfile {
        let mut counts = vec![0; self.min_distance.min(n) + 1];
        counts[0] = 1;
        if let Some(c) = counts.get_mut(self.min_distance) {
            *c = self.count_at_min;
        }
        WeightProfile::from_counts(n, ProfileKind::Partial, counts)
    }
}

fn check(code: &AdditiveCode) -> Result<(), CodeError> {
    if code.len() > MAX_PACKED_LEN {
        return Err(CodeError::TooLong {
            len: code.len(),
            max: MAX_PACKED_LEN,
        });
    }
    if !code.is_graph_form() {
        return Err(CodeError::NotGraphForm);
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as u64
}

/// Lightest weight and its multiplicity over selections of exactly `size`
/// generators, the first of which is `first`.
fn scan_size<const W: usize>(gens: &[Packed<W>], first: usize, size: usize) -> (usize, u64) {
    fn rec<const W: usize>(gens: &[Packed<W>], start: usize, left: usize, word: Packed<W>, best: &mut (usize, u64)) {
        if left == 0 {
            let w = word.weight();
            if w < best.0 {
                *best = (w, 1);
            } else if w == best.0 {
                best.1 += 1;
            }
            return;
        }
        for i in start..=gens.len() - left {
            rec(gens, i + 1, left - 1, word.xor(gens[i]), best);
        }
    }
    let mut best = (usize::MAX, 0);
    if first + size <= gens.len() {
        rec(gens, first + 1, size - 1, gens[first], &mut best);
    }
    best
}

fn merge(a: (usize, u64), b: (usize, u64)) -> (usize, u64) {
    match a.0.cmp(&b.0) {
        std::cmp::Ordering::Less => a,
        std::cmp::Ordering::Greater => b,
        std::cmp::Ordering::Equal => (a.0, a.1 + b.1),
    }
}

/// Exact `d` and `A_d` of a graph-form code, visiting at most `budget` words.
pub fn min_distance_by_support(code: &AdditiveCode, budget: u64) -> Result<SupportSearch, CodeError> {
    check(code)?;
    let n = code.len();
    let mut visited = 0u64;
    let mut best = (usize::MAX, 0u64);
    with_width!(n, W => {
        let gens: Vec<Packed<W>> = code.generators().iter().map(Packed::from_vector).collect();
        for size in 1..=n {
            if size > best.0 {
                break;
            }
            let words = binomial(n, size);
            if visited.saturating_add(words) > budget {
                return Err(CodeError::BudgetExceeded { required: visited.saturating_add(words), budget });
            }
            visited += words;
            let level = (0..n)
                .into_par_iter()
                .map(|first| scan_size(&gens, first, size))
                .reduce(|| (usize::MAX, 0), merge);
            best = merge(best, level);
        }
    }, else unreachable!());
    Ok(SupportSearch {
        min_distance: best.0,
        count_at_min: best.1,
        visited,
    })
}

/// Finds a nonzero word of weight `< floor`, returning its generator
/// selection, or `None` when the code has minimum distance `≥ floor`.
pub fn has_weight_below(code: &AdditiveCode, floor: usize) -> Result<Option<Vec<usize>>, CodeError> {
    fn rec<const W: usize>(
        gens: &[Packed<W>],
        start: usize,
        left: usize,
        word: Packed<W>,
        floor: usize,
        path: &mut Vec<usize>,
    ) -> bool {
        if left == 0 {
            return word.weight() < floor;
        }
        for i in start..=gens.len() - left {
            path.push(i);
            if rec(gens, i + 1, left - 1, word.xor(gens[i]), floor, path) {
                return true;
            }
            path.pop();
        }
        false
    }
    check(code)?;
    let n = code.len();
    Ok(with_width!(n, W => {
        let gens: Vec<Packed<W>> = code.generators().iter().map(Packed::from_vector).collect();
        let mut path = Vec::new();
        (1..floor.min(n + 1))
            .find(|&size| rec(&gens, 0, size, Packed::ZERO, floor, &mut path))
            .map(|_| path)
    }, else unreachable!()))
}
