use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Free F2 parameters of a quotient ring, written as a string of `0`/`1`.
///
/// An empty vector stands for "all zero", whatever the expected length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamBits(Vec<bool>);

impl ParamBits {
    pub fn zeros(n: usize) -> Self {
        ParamBits(vec![false; n])
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        ParamBits(bits)
    }

    /// The `index`-th assignment of `n` bits, most significant bit first.
    pub fn from_index(n: usize, index: u64) -> Self {
        ParamBits((0..n).map(|i| index >> (n - 1 - i) & 1 == 1).collect())
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Descriptor {
                    input: s.to_string(),
                    reason: format!("parameter bits must be 0 or 1, found `{c}`"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(ParamBits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Bit `i`; bits past the end read as zero.
    pub fn get(&self, i: usize) -> bool {
        self.0.get(i).copied().unwrap_or(false)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// Pads an empty vector to `n` zeros.
    pub fn resolved(&self, n: usize) -> ParamBits {
        if self.0.is_empty() {
            ParamBits::zeros(n)
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for ParamBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for ParamBits {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ParamBits {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        ParamBits::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// How the bits of a quotient family are split into named parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamLayout {
    /// `γ1 γ2 γ3`, then `α0..α_{(s-1)/2}`, then `β0..β_{(s-1)/2}`.
    Z2 { half: usize },
    /// `α β`.
    S1,
}

impl ParamLayout {
    pub fn z2(s: u32) -> Self {
        ParamLayout::Z2 {
            half: (s as usize).div_ceil(2),
        }
    }

    pub fn len(&self) -> usize {
        match *self {
            ParamLayout::Z2 { half } => 3 + 2 * half,
            ParamLayout::S1 => 2,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub(crate) fn check(&self, family: &'static str, p: &ParamBits) -> Result<()> {
        if !p.is_empty() && p.len() != self.len() {
            return Err(Error::param(
                family,
                format!("expected {} parameter bits, got {}", self.len(), p.len()),
            ));
        }
        Ok(())
    }

    /// `(γ, α, β)` for the Z2 layout.
    pub(crate) fn split_z2(&self, p: &ParamBits) -> (Vec<bool>, Vec<bool>, Vec<bool>) {
        let ParamLayout::Z2 { half } = *self else {
            unreachable!("split_z2 on a circle layout")
        };
        let p = p.resolved(self.len());
        let b = p.bits();
        (
            b[..3].to_vec(),
            b[3..3 + half].to_vec(),
            b[3 + half..].to_vec(),
        )
    }

    /// Every assignment, in increasing binary order.
    pub fn assignments(&self) -> impl Iterator<Item = ParamBits> {
        let n = self.len();
        (0..1u64 << n).map(move |i| ParamBits::from_index(n, i))
    }

    /// Human-readable names of the bits in order.
    pub fn names(&self) -> Vec<String> {
        match *self {
            ParamLayout::Z2 { half } => ["gamma1", "gamma2", "gamma3"]
                .iter()
                .map(|s| s.to_string())
                .chain((0..half).map(|i| format!("alpha{i}")))
                .chain((0..half).map(|i| format!("beta{i}")))
                .collect(),
            ParamLayout::S1 => vec!["alpha".into(), "beta".into()],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = ParamBits::parse("0010110").unwrap();
        assert_eq!(p.to_string(), "0010110");
        assert!(ParamBits::parse("012").is_err());
        assert_eq!(ParamBits::from_index(4, 5).to_string(), "0101");
    }

    #[test]
    fn z2_layout() {
        let l = ParamLayout::z2(3);
        assert_eq!(l.len(), 7);
        assert_eq!(l.assignments().count(), 128);
        let (g, a, b) = l.split_z2(&ParamBits::parse("1011001").unwrap());
        assert_eq!(g, [true, false, true]);
        assert_eq!(a, [true, false]);
        assert_eq!(b, [false, true]);
        assert_eq!(l.names()[3], "alpha0");
    }
}
