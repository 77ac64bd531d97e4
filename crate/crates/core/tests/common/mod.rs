//! Scalar reference arithmetic shared by the integration tests.
//!
//! Field elements are indices into an explicit Cayley table; codewords are
//! plain byte vectors. Nothing here touches the bit-plane representation.

#![allow(dead_code)]

use metacode::metagraph::SimpleGraph;

/// 0, 1, ω, ω² as 0, 1, 2, 3.
pub const ZERO: u8 = 0;
pub const ONE: u8 = 1;
pub const OMEGA: u8 = 2;
pub const OMEGA2: u8 = 3;

/// Addition in GF(4) = F₂[ω]/(ω² + ω + 1), written out by hand.
const ADD: [[u8; 4]; 4] = [
    [ZERO, ONE, OMEGA, OMEGA2],
    [ONE, ZERO, OMEGA2, OMEGA],
    [OMEGA, OMEGA2, ZERO, ONE],
    [OMEGA2, OMEGA, ONE, ZERO],
];

/// Multiplication: ωⁱ·ωʲ = ω^(i+j mod 3).
fn mul(a: u8, b: u8) -> u8 {
    if a == ZERO || b == ZERO {
        return ZERO;
    }
    let log = |x: u8| (x - 1) as usize;
    [ONE, OMEGA, OMEGA2][(log(a) + log(b)) % 3]
}

fn conj(a: u8) -> u8 {
    mul(a, a)
}

/// Trace of GF(4) over F₂: 0 on {0, 1}, 1 on {ω, ω²}.
fn trace(a: u8) -> u8 {
    (a == OMEGA || a == OMEGA2) as u8
}

pub fn symbol(x: u8) -> char {
    ['0', '1', 'w', 'W'][x as usize]
}

pub fn from_symbol(c: char) -> u8 {
    match c {
        '0' => ZERO,
        '1' => ONE,
        'w' => OMEGA,
        'W' => OMEGA2,
        _ => panic!("bad symbol {c}"),
    }
}

/// `Σ Tr(a_j · conj(b_j))` over F₂.
pub fn trace_ip(a: &[u8], b: &[u8]) -> u8 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| acc ^ trace(mul(x, conj(y))))
}

pub fn add(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().zip(b).map(|(&x, &y)| ADD[x as usize][y as usize]).collect()
}

pub fn weight(a: &[u8]) -> usize {
    a.iter().filter(|&&x| x != ZERO).count()
}

/// Rows of `Γ + ωI`.
pub fn graph_rows(g: &SimpleGraph) -> Vec<Vec<u8>> {
    let n = g.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        OMEGA
                    } else if g.has_edge(i, j) {
                        ONE
                    } else {
                        ZERO
                    }
                })
                .collect()
        })
        .collect()
}

/// `A_w` for every `w`, by summing each subset of rows from scratch.
pub fn weight_distribution(rows: &[Vec<u8>]) -> Vec<u64> {
    let n = rows[0].len();
    let mut counts = vec![0u64; n + 1];
    for mask in 0u64..1 << rows.len() {
        let mut word = vec![ZERO; n];
        for (i, r) in rows.iter().enumerate() {
            if mask >> i & 1 == 1 {
                word = add(&word, r);
            }
        }
        counts[weight(&word)] += 1;
    }
    counts
}

pub fn min_distance(counts: &[u64]) -> usize {
    (1..counts.len()).find(|&w| counts[w] > 0).unwrap_or(0)
}
