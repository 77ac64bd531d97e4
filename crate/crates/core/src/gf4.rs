//! Arithmetic over GF(4) and bit-packed vectors over it.
//!
//! An element is stored as the bit pair `(a, b)` meaning `a·ω + b`, so
//!
//! | element | `(a, b)` | symbol |
//! |---------|----------|--------|
//! | 0       | (0, 0)   | `0`    |
//! | 1       | (0, 1)   | `1`    |
//! | ω       | (1, 0)   | `w`    |
//! | ω̄ = ω²  | (1, 1)   | `W`    |
//!
//! With this encoding addition is XOR, and a vector of length `n` splits into
//! two `n`-bit planes: the ω-coefficients and the 1-coefficients. The
//! trace-Hermitian form `Σ (u_j v_j² + u_j² v_j)` then reduces to
//! `parity(popcount((u.ω & v.1) ^ (u.1 & v.ω)))`.

use std::fmt;
use std::ops::{Add, AddAssign};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf4Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("invalid GF(4) symbol {symbol:?} at position {position}")]
    InvalidSymbol { symbol: char, position: usize },
    #[error("plane has {got} words, expected {expected} for length {len}")]
    WordCount { len: usize, expected: usize, got: usize },
    #[error("bits set beyond position {len}")]
    TrailingBits { len: usize },
    #[error("index {index} out of range for length {len}")]
    OutOfRange { index: usize, len: usize },
}

/// An element of GF(4).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf4(u8);

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0b00);
    pub const ONE: Gf4 = Gf4(0b01);
    pub const OMEGA: Gf4 = Gf4(0b10);
    pub const OMEGA_BAR: Gf4 = Gf4(0b11);

    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA_BAR];

    /// Builds `a·ω + b`.
    #[inline]
    pub const fn from_bits(omega: bool, unit: bool) -> Gf4 {
        Gf4(((omega as u8) << 1) | unit as u8)
    }

    /// The ω-coefficient.
    #[inline]
    pub const fn omega_bit(self) -> bool {
        self.0 & 0b10 != 0
    }

    /// The 1-coefficient.
    #[inline]
    pub const fn unit_bit(self) -> bool {
        self.0 & 0b01 != 0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `x²`, which is also the Frobenius conjugate: fixes 0 and 1, swaps ω and ω̄.
    #[inline]
    pub const fn square(self) -> Gf4 {
        Gf4(self.0 ^ (self.0 >> 1))
    }

    pub const fn symbol(self) -> char {
        match self.0 {
            0 => '0',
            1 => '1',
            2 => 'w',
            _ => 'W',
        }
    }

    pub const fn from_symbol(c: char) -> Option<Gf4> {
        match c {
            '0' => Some(Gf4::ZERO),
            '1' => Some(Gf4::ONE),
            'w' => Some(Gf4::OMEGA),
            'W' => Some(Gf4::OMEGA_BAR),
            _ => None,
        }
    }
}

// characteristic 2: addition is XOR of the bit pairs
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for Gf4 {
    #[inline]
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Number of 64-bit words needed for `len` bits.
#[inline]
pub const fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

#[inline]
fn last_word_mask(len: usize) -> u64 {
    match len % 64 {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// A length-`n` vector over GF(4) stored as two little-endian bit planes.
///
/// Bits at positions `>= len` are always zero in both planes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf4Vector {
    len: usize,
    omega: Vec<u64>,
    unit: Vec<u64>,
}

impl Gf4Vector {
    pub fn zeros(len: usize) -> Self {
        let w = words_for(len);
        Gf4Vector {
            len,
            omega: vec![0; w],
            unit: vec![0; w],
        }
    }

    pub fn from_elements(elements: &[Gf4]) -> Self {
        let mut v = Gf4Vector::zeros(elements.len());
        for (i, &x) in elements.iter().enumerate() {
            v.put(i, x);
        }
        v
    }

    /// Builds a vector from raw planes, rejecting stray bits past `len`.
    pub fn from_planes(len: usize, omega: Vec<u64>, unit: Vec<u64>) -> Result<Self, Gf4Error> {
        let expected = words_for(len);
        for plane in [&omega, &unit] {
            if plane.len() != expected {
                return Err(Gf4Error::WordCount {
                    len,
                    expected,
                    got: plane.len(),
                });
            }
            if let Some(&last) = plane.last() {
                if last & !last_word_mask(len) != 0 {
                    return Err(Gf4Error::TrailingBits { len });
                }
            }
        }
        Ok(Gf4Vector { len, omega, unit })
    }

    /// Parses a row of `0 1 w W` symbols; whitespace is ignored.
    pub fn parse(text: &str) -> Result<Self, Gf4Error> {
        let mut elements = Vec::new();
        for (position, c) in text.chars().filter(|c| !c.is_whitespace()).enumerate() {
            let x = Gf4::from_symbol(c).ok_or(Gf4Error::InvalidSymbol { symbol: c, position })?;
            elements.push(x);
        }
        Ok(Gf4Vector::from_elements(&elements))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The ω-coefficient plane.
    #[inline]
    pub fn omega_plane(&self) -> &[u64] {
        &self.omega
    }

    /// The 1-coefficient plane.
    #[inline]
    pub fn unit_plane(&self) -> &[u64] {
        &self.unit
    }

    pub fn get(&self, index: usize) -> Result<Gf4, Gf4Error> {
        if index >= self.len {
            return Err(Gf4Error::OutOfRange {
                index,
                len: self.len,
            });
        }
        Ok(self.at(index))
    }

    pub fn set(&mut self, index: usize, value: Gf4) -> Result<(), Gf4Error> {
        if index >= self.len {
            return Err(Gf4Error::OutOfRange {
                index,
                len: self.len,
            });
        }
        self.put(index, value);
        Ok(())
    }

    #[inline]
    fn at(&self, index: usize) -> Gf4 {
        let (w, b) = (index / 64, index % 64);
        Gf4::from_bits((self.omega[w] >> b) & 1 == 1, (self.unit[w] >> b) & 1 == 1)
    }

    #[inline]
    fn put(&mut self, index: usize, value: Gf4) {
        let (w, b) = (index / 64, index % 64);
        let bit = 1u64 << b;
        self.omega[w] = (self.omega[w] & !bit) | ((value.omega_bit() as u64) << b);
        self.unit[w] = (self.unit[w] & !bit) | ((value.unit_bit() as u64) << b);
    }

    pub fn iter(&self) -> impl Iterator<Item = Gf4> + '_ {
        (0..self.len).map(|i| self.at(i))
    }

    fn check_len(&self, other: &Gf4Vector) -> Result<(), Gf4Error> {
        if self.len != other.len {
            return Err(Gf4Error::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(())
    }

    /// Component-wise sum.
    pub fn add(&self, other: &Gf4Vector) -> Result<Gf4Vector, Gf4Error> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Gf4Vector) -> Result<(), Gf4Error> {
        self.check_len(other)?;
        for (x, y) in self.omega.iter_mut().zip(&other.omega) {
            *x ^= y;
        }
        for (x, y) in self.unit.iter_mut().zip(&other.unit) {
            *x ^= y;
        }
        Ok(())
    }

    /// Number of nonzero coordinates.
    #[inline]
    pub fn weight(&self) -> usize {
        self.omega
            .iter()
            .zip(&self.unit)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    /// Hamming distance.
    pub fn distance(&self, other: &Gf4Vector) -> Result<usize, Gf4Error> {
        self.check_len(other)?;
        Ok(self
            .omega
            .iter()
            .zip(&self.unit)
            .zip(other.omega.iter().zip(&other.unit))
            .map(|((a, b), (c, d))| ((a ^ c) | (b ^ d)).count_ones() as usize)
            .sum())
    }

    /// Trace-Hermitian inner product `Σ (u_j v_j² + u_j² v_j)`; always 0 or 1.
    pub fn trace_ip(&self, other: &Gf4Vector) -> Result<bool, Gf4Error> {
        self.check_len(other)?;
        let mut acc = 0u64;
        for i in 0..self.omega.len() {
            acc ^= (self.omega[i] & other.unit[i]) ^ (self.unit[i] & other.omega[i]);
        }
        Ok(acc.count_ones() & 1 == 1)
    }
}

impl fmt::Display for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf4Vector[{}]({self})", self.len)
    }
}
