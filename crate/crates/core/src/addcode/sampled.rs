//! Upper bounds on the minimum distance for codes too large to enumerate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::packed::{with_width, Packed, MAX_PACKED_LEN};
use super::{AdditiveCode, CodeError, ProfileKind, WeightProfile};

/// Samples per RNG stream; stream `c` serves samples `c·CHUNK ..`.
const SAMPLE_CHUNK: u64 = 1 << 16;

/// Lightest word over all combinations of at most `max_terms` generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinationMinimum {
    pub max_terms: usize,
    pub min_weight: usize,
    /// Generator indices of one lightest combination.
    pub combination: Vec<usize>,
    /// Histogram of every combination examined.
    pub counts: Vec<u64>,
}

fn check_len(code: &AdditiveCode) -> Result<(), CodeError> {
    if code.len() > MAX_PACKED_LEN || code.dimension() > MAX_PACKED_LEN {
        return Err(CodeError::TooLong {
            len: code.len().max(code.dimension()),
            max: MAX_PACKED_LEN,
        });
    }
    Ok(())
}

struct ComboScan<'a, const W: usize> {
    gens: &'a [Packed<W>],
    max_terms: usize,
    best: usize,
    best_combo: Vec<usize>,
    path: Vec<usize>,
    counts: Vec<u64>,
}

impl<const W: usize> ComboScan<'_, W> {
    fn visit(&mut self, start: usize, word: Packed<W>) {
        for i in start..self.gens.len() {
            let next = word.xor(self.gens[i]);
            self.path.push(i);
            let w = next.weight();
            self.counts[w] += 1;
            if w < self.best {
                self.best = w;
                self.best_combo = self.path.clone();
            }
            if self.path.len() < self.max_terms {
                self.visit(i + 1, next);
            }
            self.path.pop();
        }
    }
}

pub fn combination_minimum(code: &AdditiveCode, max_terms: usize) -> Result<CombinationMinimum, CodeError> {
    check_len(code)?;
    Ok(with_width!(code.len(), W => {
        let gens: Vec<Packed<W>> = code.generators().iter().map(Packed::from_vector).collect();
        let mut scan = ComboScan {
            gens: &gens,
            max_terms,
            best: usize::MAX,
            best_combo: Vec::new(),
            path: Vec::new(),
            counts: vec![0; code.len() + 1],
        };
        if max_terms > 0 {
            scan.visit(0, Packed::ZERO);
        }
        CombinationMinimum {
            max_terms,
            min_weight: scan.best,
            combination: scan.best_combo,
            counts: scan.counts,
        }
    }, else unreachable!()))
}

/// Byte-indexed span tables: `tables[g][b]` is the combination of
/// generators `8g .. 8g+8` selected by the bits of `b`.
fn byte_tables<const W: usize>(gens: &[Packed<W>]) -> Vec<[Packed<W>; 256]> {
    gens.chunks(8)
        .map(|group| {
            let mut table = [Packed::ZERO; 256];
            for (b, slot) in table.iter_mut().enumerate() {
                for (i, g) in group.iter().enumerate() {
                    if b >> i & 1 == 1 {
                        slot.xor_assign(g);
                    }
                }
            }
            table
        })
        .collect()
}

fn random_mask(rng: &mut ChaCha8Rng, k: usize) -> [u64; 4] {
    loop {
        let mut mask = [0u64; 4];
        for (w, slot) in mask.iter_mut().enumerate().take(k.div_ceil(64)) {
            let bits = k - 64 * w;
            *slot = rng.random::<u64>() & if bits >= 64 { u64::MAX } else { (1 << bits) - 1 };
        }
        if mask.iter().any(|&x| x != 0) {
            return mask;
        }
    }
}

fn sample_counts<const W: usize>(gens: &[Packed<W>], len: usize, samples: u64, seed: u64) -> Vec<u64> {
    let tables = byte_tables(gens);
    let k = gens.len();
    let streams = samples.div_ceil(SAMPLE_CHUNK);
    (0..streams)
        .into_par_iter()
        .map(|stream| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(stream);
            let todo = SAMPLE_CHUNK.min(samples - stream * SAMPLE_CHUNK);
            let mut counts = vec![0u64; len + 1];
            for _ in 0..todo {
                let mask = random_mask(&mut rng, k);
                let mut word = Packed::<W>::ZERO;
                for (g, table) in tables.iter().enumerate() {
                    let byte = (mask[g / 8] >> (8 * (g % 8))) & 0xff;
                    word.xor_assign(&table[byte as usize]);
                }
                counts[word.weight()] += 1;
            }
            counts
        })
        .reduce(
            || vec![0u64; len + 1],
            |mut a, b| {
                a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

/// Minimum weight over every combination of one to three generators plus
/// `samples` uniformly random nonzero combinations. The result is an upper
/// bound on `d` and is labelled `UpperBoundSampled`; its counts cover only the
/// words examined. Deterministic for a given seed whatever the thread count.
pub fn min_weight_upper_bound(code: &AdditiveCode, samples: u64, seed: u64) -> Result<WeightProfile, CodeError> {
    check_len(code)?;
    let combos = combination_minimum(code, 3)?;
    let sampled = with_width!(code.len(), W => {
        let gens: Vec<Packed<W>> = code.generators().iter().map(Packed::from_vector).collect();
        sample_counts::<W>(&gens, code.len(), samples, seed)
    }, else unreachable!());
    let counts = combos.counts.iter().zip(&sampled).map(|(a, b)| a + b).collect();
    Ok(WeightProfile::from_counts(code.len(), ProfileKind::UpperBoundSampled, counts))
}
