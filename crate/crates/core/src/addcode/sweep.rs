//! Exhaustive weight distribution by Gray-code enumeration.
//!
//! The `k` generators are split into a low group of up to [`INNER_BITS`]
//! whose full span is tabulated once, and a high group walked in Gray-code
//! order: each outer step XORs one generator into the running codeword and
//! the whole table is then swept against it. Index space `[0, 2^(k-inner))`
//! is cut into contiguous chunks; a chunk's starting codeword is built
//! directly from the Gray code of its first index, so chunks are independent
//! and their histograms merge by addition.

use rayon::prelude::*;

use super::packed::{span_table, with_width, Packed, MAX_PACKED_LEN};
use super::{AdditiveCode, CodeError, ProfileKind, WeightProfile};

/// Largest number of generators enumerated without an explicit override.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 40;

/// Hard ceiling: combination indices must fit a `u64`.
const MAX_GENERATORS: usize = 63;

const INNER_BITS: usize = 10;
const MAX_CHUNKS: u64 = 4096;
const LANES: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExhaustiveOptions {
    /// Maximum number of generators.
    pub limit: usize,
    /// Maximum number of nonzero codewords to visit.
    pub budget: u64,
}

impl Default for ExhaustiveOptions {
    fn default() -> Self {
        ExhaustiveOptions {
            limit: DEFAULT_EXHAUSTIVE_LIMIT,
            budget: u64::MAX,
        }
    }
}

fn check_feasible(code: &AdditiveCode, opts: &ExhaustiveOptions) -> Result<(), CodeError> {
    let k = code.dimension();
    if k > opts.limit.min(MAX_GENERATORS) {
        return Err(CodeError::ExhaustiveLimit {
            generators: k,
            limit: opts.limit.min(MAX_GENERATORS),
        });
    }
    let required = (1u64 << k) - 1;
    if required > opts.budget {
        return Err(CodeError::BudgetExceeded {
            required,
            budget: opts.budget,
        });
    }
    if code.len() > MAX_PACKED_LEN {
        return Err(CodeError::TooLong {
            len: code.len(),
            max: MAX_PACKED_LEN,
        });
    }
    Ok(())
}

/// Full weight distribution of the code (`kind = Exact`).
///
/// Fails rather than returning partial counts when the code has more
/// generators than `opts.limit` or more codewords than `opts.budget`.
pub fn min_distance_exact(code: &AdditiveCode, opts: &ExhaustiveOptions) -> Result<WeightProfile, CodeError> {
    check_feasible(code, opts)?;
    let counts = with_width!(code.len(), W => {
        let gens: Vec<Packed<W>> = code.generators().iter().map(Packed::from_vector).collect();
        distribution::<W>(&gens, code.len())
    }, else unreachable!("length checked"));
    Ok(WeightProfile::from_counts(code.len(), ProfileKind::Exact, counts))
}

/// `A_w` for a single weight; same sweep as [`min_distance_exact`].
pub fn weight_count_at(code: &AdditiveCode, weight: usize, opts: &ExhaustiveOptions) -> Result<u64, CodeError> {
    if weight == 0 {
        return Ok(1);
    }
    Ok(min_distance_exact(code, opts)?.count(weight))
}

pub(crate) fn distribution<const W: usize>(gens: &[Packed<W>], len: usize) -> Vec<u64> {
    let inner = gens.len().min(INNER_BITS);
    let table = span_table(&gens[..inner]);
    let outer = &gens[inner..];
    let outer_total = 1u64 << outer.len();
    let chunks = outer_total.min(MAX_CHUNKS);
    let chunk_len = outer_total / chunks;
    let merged = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut hist = vec![[0u64; LANES]; len + 1];
            sweep_chunk(&table, outer, c * chunk_len, (c + 1) * chunk_len, &mut hist);
            hist
        })
        .reduce(
            || vec![[0u64; LANES]; len + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(&b) {
                    for lane in 0..LANES {
                        x[lane] += y[lane];
                    }
                }
                a
            },
        );
    merged.iter().map(|lanes| lanes.iter().sum()).collect()
}

/// Codeword at combination index `gray(index)` of the outer generators.
pub(crate) fn gray_start<const W: usize>(outer: &[Packed<W>], index: u64) -> Packed<W> {
    let mut gray = index ^ (index >> 1);
    let mut word = Packed::ZERO;
    while gray != 0 {
        word.xor_assign(&outer[gray.trailing_zeros() as usize]);
        gray &= gray - 1;
    }
    word
}

fn sweep_chunk<const W: usize>(
    table: &[Packed<W>],
    outer: &[Packed<W>],
    start: u64,
    end: u64,
    hist: &mut [[u64; LANES]],
) {
    let mut base = gray_start(outer, start);
    let mut i = start;
    loop {
        let mut quads = table.chunks_exact(LANES);
        for quad in &mut quads {
            for (lane, &t) in quad.iter().enumerate() {
                let w = base.xor(t).weight();
                debug_assert!(w < hist.len());
                // SAFETY: weight never exceeds the code length, and `hist` has len + 1 rows
                unsafe { hist.get_unchecked_mut(w)[lane] += 1 };
            }
        }
        for t in quads.remainder() {
            hist[base.xor(*t).weight()][0] += 1;
        }
        i += 1;
        if i == end {
            break;
        }
        base.xor_assign(&outer[i.trailing_zeros() as usize]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::addcode::{graph_code, oracle};
    use crate::gf4::Gf4Vector;
    use crate::metagraph::{border, build_metacirculant, MetacirculantSpec, SimpleGraph};
    use proptest::prelude::*;

    fn random_graph(n: usize, bits: u64) -> SimpleGraph {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let edges: Vec<_> = pairs.enumerate().filter(|(k, _)| bits >> (k % 64) & 1 == 1).map(|(_, e)| e).collect();
        SimpleGraph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn gray_start_matches_stepping() {
        let gens: Vec<Packed<1>> = (0..6).map(|i| Packed { omega: [1 << i], unit: [0] }).collect();
        let mut word = Packed::ZERO;
        for i in 0u64..64 {
            assert_eq!(gray_start(&gens, i), word);
            let next = i + 1;
            if next < 64 {
                word.xor_assign(&gens[next.trailing_zeros() as usize]);
            }
        }
    }

    #[test]
    fn hexacode_distributions() {
        let g = build_metacirculant(&MetacirculantSpec::new(2, 3, 1, vec![vec![1, 2], vec![0]])).unwrap();
        let p = min_distance_exact(&graph_code(&g), &ExhaustiveOptions::default()).unwrap();
        assert_eq!(p.min_distance, Some(4));
        assert_eq!(p.count(0), 1);
        assert_eq!(p.total(), 64);
        assert_eq!(p.counts, oracle::weight_distribution(&oracle::generator_rows(&g)));
        let b = border(&g);
        let pb = min_distance_exact(&graph_code(&b), &ExhaustiveOptions::default()).unwrap();
        assert_eq!(pb.min_distance, Some(3));
        assert_eq!(pb.total(), 128);
    }

    #[test]
    fn single_generator() {
        let code = graph_code(&SimpleGraph::empty(1));
        let p = min_distance_exact(&code, &ExhaustiveOptions::default()).unwrap();
        assert_eq!(p.counts, vec![1, 1]);
        assert_eq!(weight_count_at(&code, 0, &ExhaustiveOptions::default()).unwrap(), 1);
    }

    #[test]
    fn limits_are_enforced() {
        let code = graph_code(&SimpleGraph::empty(12));
        let opts = ExhaustiveOptions { limit: 11, ..Default::default() };
        assert_eq!(
            min_distance_exact(&code, &opts),
            Err(CodeError::ExhaustiveLimit { generators: 12, limit: 11 })
        );
        let opts = ExhaustiveOptions { budget: 4094, ..Default::default() };
        assert_eq!(
            min_distance_exact(&code, &opts),
            Err(CodeError::BudgetExceeded { required: 4095, budget: 4094 })
        );
        let opts = ExhaustiveOptions { budget: 4095, ..Default::default() };
        assert!(min_distance_exact(&code, &opts).is_ok());
    }

    #[test]
    fn wide_codes_use_multiword_kernel() {
        // 3 generators of length 130, spread over all three words
        let mut rows = Vec::new();
        for i in 0..3 {
            let mut v = Gf4Vector::zeros(130);
            v.set(i * 64, crate::gf4::Gf4::OMEGA).unwrap();
            v.set(129, crate::gf4::Gf4::ONE).unwrap();
            rows.push(v);
        }
        let p = min_distance_exact(&AdditiveCode::new(rows).unwrap(), &ExhaustiveOptions::default()).unwrap();
        // a subset of size s has weight s, plus one when s is odd (the shared 1)
        let counts: Vec<(usize, u64)> = p.nonzero_counts().into_iter().collect();
        assert_eq!(counts, vec![(0, 1), (2, 6), (4, 1)]);
    }

    proptest! {
        // 11 to 13 vertices put generators on both sides of the table split
        #[test]
        fn matches_scalar_oracle(n in 1usize..14, bits: u64) {
            let g = random_graph(n, bits);
            let p = min_distance_exact(&graph_code(&g), &ExhaustiveOptions::default()).unwrap();
            prop_assert_eq!(p.counts, oracle::weight_distribution(&oracle::generator_rows(&g)));
        }
    }
}
