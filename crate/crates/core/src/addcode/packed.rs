//! Fixed-width codeword used by the enumeration kernels.

use crate::gf4::Gf4Vector;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) struct Packed<const W: usize> {
    pub omega: [u64; W],
    pub unit: [u64; W],
}

impl<const W: usize> Packed<W> {
    pub const ZERO: Self = Packed {
        omega: [0; W],
        unit: [0; W],
    };

    pub fn from_vector(v: &Gf4Vector) -> Self {
        let mut p = Self::ZERO;
        p.omega[..v.omega_plane().len()].copy_from_slice(v.omega_plane());
        p.unit[..v.unit_plane().len()].copy_from_slice(v.unit_plane());
        p
    }

    #[inline(always)]
    pub fn xor(self, other: Self) -> Self {
        let mut out = self;
        for i in 0..W {
            out.omega[i] ^= other.omega[i];
            out.unit[i] ^= other.unit[i];
        }
        out
    }

    #[inline(always)]
    pub fn xor_assign(&mut self, other: &Self) {
        for i in 0..W {
            self.omega[i] ^= other.omega[i];
            self.unit[i] ^= other.unit[i];
        }
    }

    #[inline(always)]
    pub fn weight(&self) -> usize {
        let mut w = 0;
        for i in 0..W {
            w += (self.omega[i] | self.unit[i]).count_ones() as usize;
        }
        w
    }
}

/// Every F₂-combination of `gens`, indexed by the combination mask.
pub(crate) fn span_table<const W: usize>(gens: &[Packed<W>]) -> Vec<Packed<W>> {
    let mut table = Vec::with_capacity(1 << gens.len());
    table.push(Packed::ZERO);
    for g in gens {
        let len = table.len();
        for t in 0..len {
            let x = table[t].xor(*g);
            table.push(x);
        }
    }
    table
}

/// Calls `$body` with a const `W` large enough for `$len` coordinates.
macro_rules! with_width {
    ($len:expr, $w:ident => $body:expr, else $fallback:expr) => {
        match crate::gf4::words_for($len) {
            0 | 1 => {
                const $w: usize = 1;
                $body
            }
            2 => {
                const $w: usize = 2;
                $body
            }
            3 | 4 => {
                const $w: usize = 4;
                $body
            }
            _ => $fallback,
        }
    };
}
pub(crate) use with_width;

/// Longest code the packed kernels accept.
pub const MAX_PACKED_LEN: usize = 256;
