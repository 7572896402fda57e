use std::fmt;
use std::str::FromStr;

use crate::error::SpecError;

/// States are bit masks over crossing indices, which caps exhaustive
/// enumeration at this many crossings.
pub const MAX_STATE_CROSSINGS: usize = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Marker {
    A,
    B,
}

impl Marker {
    pub fn swapped(self) -> Self {
        match self {
            Marker::A => Marker::B,
            Marker::B => Marker::A,
        }
    }
}

/// A marker for every crossing of a diagram. Bit `i` of the mask is set
/// when crossing `i` carries a `B` marker.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KauffmanState {
    mask: u64,
    len: usize,
}

impl KauffmanState {
    /// Panics if `len` exceeds [`MAX_STATE_CROSSINGS`] or `mask` has bits at
    /// or above `len`.
    pub fn from_mask(mask: u64, len: usize) -> Self {
        assert!(
            len <= MAX_STATE_CROSSINGS,
            "state length {len} exceeds {MAX_STATE_CROSSINGS}"
        );
        assert!(
            mask >> len == 0,
            "mask {mask:#x} has bits beyond {len} crossings"
        );
        Self { mask, len }
    }

    pub fn all_a(len: usize) -> Self {
        Self::from_mask(0, len)
    }

    pub fn from_markers(markers: &[Marker]) -> Self {
        let mask = markers
            .iter()
            .enumerate()
            .filter(|(_, &m)| m == Marker::B)
            .fold(0u64, |acc, (i, _)| acc | (1 << i));
        Self::from_mask(mask, markers.len())
    }

    /// Every state on `len` crossings, in mask order.
    pub fn enumerate(len: usize) -> impl Iterator<Item = KauffmanState> {
        assert!(len <= MAX_STATE_CROSSINGS);
        (0..1u64 << len).map(move |mask| KauffmanState { mask, len })
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn marker(&self, crossing: usize) -> Marker {
        assert!(crossing < self.len, "crossing {crossing} out of range");
        if self.mask >> crossing & 1 == 1 {
            Marker::B
        } else {
            Marker::A
        }
    }

    pub fn markers(&self) -> impl Iterator<Item = Marker> + '_ {
        (0..self.len).map(|i| self.marker(i))
    }

    pub fn b_count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn a_count(&self) -> usize {
        self.len - self.b_count()
    }

    /// Swaps every marker.
    pub fn complement(&self) -> Self {
        let full = if self.len == 0 {
            0
        } else {
            u64::MAX >> (64 - self.len)
        };
        Self {
            mask: !self.mask & full,
            len: self.len,
        }
    }

    /// Moves the first `k` crossings to the end, matching the relabeling
    /// induced by rotating a column of `k` crossings to the back.
    pub fn rotate_left(&self, k: usize) -> Self {
        assert!(k <= self.len);
        if self.len == 0 || k == 0 || k == self.len {
            return *self;
        }
        let full = u64::MAX >> (64 - self.len);
        let mask = ((self.mask >> k) | (self.mask << (self.len - k))) & full;
        Self {
            mask,
            len: self.len,
        }
    }
}

impl fmt::Display for KauffmanState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in self.markers() {
            f.write_str(match m {
                Marker::A => "A",
                Marker::B => "B",
            })?;
        }
        Ok(())
    }
}

impl FromStr for KauffmanState {
    type Err = SpecError;

    /// Parses a marker string such as `ABA`, one letter per crossing.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let markers = s
            .chars()
            .map(|c| match c {
                'A' | 'a' => Ok(Marker::A),
                'B' | 'b' => Ok(Marker::B),
                other => Err(SpecError::Marker(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if markers.len() > MAX_STATE_CROSSINGS {
            return Err(SpecError::Parse {
                input: s.to_string(),
                reason: format!("more than {MAX_STATE_CROSSINGS} markers"),
            });
        }
        Ok(Self::from_markers(&markers))
    }
}
