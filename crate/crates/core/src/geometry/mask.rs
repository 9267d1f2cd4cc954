use std::fmt;

use crate::error::{Error, Result};

/// Largest supported cube dimension.
///
/// Edge matrices of binary simplices have entries in {-1, 0, 1}, so by
/// Hadamard's bound every k x k minor is at most k^(k/2) in magnitude. At
/// n = 12 that is below 3.0e6 for determinants and adjugate entries, and the
/// pairwise dot products of adjugate rows stay below 13 * (1.2e7)^2 < 2e15,
/// well inside `i64`. Anything larger is rejected up front.
pub const MAX_DIM: usize = 12;

pub(crate) fn check_dim(dim: usize, min: usize) -> Result<()> {
    if dim < min || dim > MAX_DIM {
        return Err(Error::DimensionOutOfRange { dim, min, max: MAX_DIM });
    }
    Ok(())
}

/// A vertex of the unit cube `I^n`, stored as an n-bit vector.
///
/// Bit `j - 1` holds coordinate `x_j`. Dimension 0 is allowed only as the
/// single point that exterior facets of 1-simplices collapse to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexMask {
    bits: u16,
    dim: u8,
}

impl VertexMask {
    pub fn new(bits: u32, dim: usize) -> Result<Self> {
        check_dim(dim, 0)?;
        if bits >> dim != 0 {
            return Err(Error::VertexOutOfRange { bits, dim });
        }
        Ok(Self { bits: bits as u16, dim: dim as u8 })
    }

    /// Caller guarantees `dim <= MAX_DIM` and `bits < 2^dim`.
    pub(crate) const fn from_raw(bits: u16, dim: usize) -> Self {
        Self { bits, dim: dim as u8 }
    }

    pub fn origin(dim: usize) -> Result<Self> {
        Self::new(0, dim)
    }

    /// The all-ones vertex `e^n`.
    pub fn all_ones(dim: usize) -> Result<Self> {
        check_dim(dim, 0)?;
        Ok(Self::from_raw(full_mask(dim), dim))
    }

    /// The unit vertex `e_axis^n`, `axis` counted from 1.
    pub fn unit(axis: usize, dim: usize) -> Result<Self> {
        if axis == 0 || axis > dim {
            return Err(Error::VertexOutOfRange { bits: 1u32 << axis.min(31), dim });
        }
        Self::new(1 << (axis - 1), dim)
    }

    pub fn bits(self) -> u16 {
        self.bits
    }

    pub fn dim(self) -> usize {
        self.dim as usize
    }

    /// Coordinate `x_axis` (axis counted from 1).
    pub fn coord(self, axis: usize) -> u8 {
        ((self.bits >> (axis - 1)) & 1) as u8
    }

    pub fn coords(self) -> impl Iterator<Item = u8> {
        (1..=self.dim()).map(move |axis| self.coord(axis))
    }

    pub fn complement(self) -> Self {
        Self::from_raw(!self.bits & full_mask(self.dim()), self.dim())
    }

    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    /// Drops coordinate `axis`, shifting higher coordinates down by one.
    pub fn delete_axis(self, axis: usize) -> Self {
        let low = self.bits & ((1u16 << (axis - 1)) - 1);
        let high = (self.bits >> axis) << (axis - 1);
        Self::from_raw(low | high, self.dim() - 1)
    }

    /// Inserts a new coordinate at position `axis` with the given value.
    pub fn insert_axis(self, axis: usize, value: u8) -> Self {
        let low = self.bits & ((1u16 << (axis - 1)) - 1);
        let high = (self.bits >> (axis - 1)) << axis;
        let mid = (value as u16 & 1) << (axis - 1);
        Self::from_raw(low | mid | high, self.dim() + 1)
    }

    /// Parses `"0110"`, where character `j - 1` is `x_j`.
    pub fn parse(text: &str) -> Result<Self> {
        let dim = text.chars().count();
        check_dim(dim, 0).map_err(|_| Error::Parse(format!("vertex `{text}` has unsupported length {dim}")))?;
        let mut bits = 0u32;
        for (j, c) in text.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << j,
                _ => return Err(Error::Parse(format!("vertex `{text}` contains `{c}`"))),
            }
        }
        Self::new(bits, dim)
    }
}

pub(crate) const fn full_mask(dim: usize) -> u16 {
    ((1u32 << dim) - 1) as u16
}

impl fmt::Display for VertexMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.coords() {
            f.write_str(if c == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_convention_puts_x1_first() {
        let v = VertexMask::parse("100").unwrap();
        assert_eq!(v.bits(), 1);
        assert_eq!(v.coord(1), 1);
        assert_eq!(v.to_string(), "100");
        assert_eq!(VertexMask::parse("0011").unwrap().bits(), 0b1100);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(VertexMask::new(0b1000, 3).is_err());
        assert!(VertexMask::new(0, 13).is_err());
        assert!(VertexMask::parse("01a").is_err());
        assert!(VertexMask::unit(4, 3).is_err());
    }

    #[test]
    fn axis_surgery_round_trips() {
        for bits in 0..16u32 {
            let v = VertexMask::new(bits, 4).unwrap();
            for axis in 1..=4 {
                let value = v.coord(axis);
                assert_eq!(v.delete_axis(axis).insert_axis(axis, value), v);
            }
        }
        let v = VertexMask::parse("1011").unwrap();
        assert_eq!(v.delete_axis(2).to_string(), "111");
        assert_eq!(v.complement().to_string(), "0100");
    }
}
