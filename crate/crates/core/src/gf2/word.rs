use std::fmt::Debug;
use std::ops::{BitAnd, BitOr, BitXor, BitXorAssign, Not};

/// Storage word for packed GF(2) rows.
///
/// Column `c` of a row lives in word `c / BITS`, bit `c % BITS` (least
/// significant bit first).
pub trait Word:
    Copy
    + Eq
    + Default
    + Debug
    + Send
    + Sync
    + 'static
    + BitXor<Output = Self>
    + BitXorAssign
    + BitAnd<Output = Self>
    + BitOr<Output = Self>
    + Not<Output = Self>
{
    const BITS: usize;
    const ZERO: Self;
    const ONES: Self;

    fn count_ones(self) -> u32;

    /// Word with only bit `i` set.
    fn bit(i: usize) -> Self;

    fn test(self, i: usize) -> bool {
        self & Self::bit(i) != Self::ZERO
    }

    /// Mask of the low `bits` bits (`bits <= BITS`).
    fn low_mask(bits: usize) -> Self;
}

macro_rules! impl_word {
    ($t:ty) => {
        impl Word for $t {
            const BITS: usize = <$t>::BITS as usize;
            const ZERO: Self = 0;
            const ONES: Self = <$t>::MAX;

            #[inline(always)]
            fn count_ones(self) -> u32 {
                <$t>::count_ones(self)
            }

            #[inline(always)]
            fn bit(i: usize) -> Self {
                1 << i
            }

            #[inline]
            fn low_mask(bits: usize) -> Self {
                if bits >= <Self as Word>::BITS {
                    Self::ONES
                } else {
                    (1 << bits) - 1
                }
            }
        }
    };
}

impl_word!(u32);
impl_word!(u64);

/// Runtime choice of storage word, for callers that dispatch on configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WordWidth {
    #[default]
    W32,
    W64,
}

impl WordWidth {
    pub fn bits(self) -> usize {
        match self {
            WordWidth::W32 => 32,
            WordWidth::W64 => 64,
        }
    }

    pub fn from_bits(bits: usize) -> Option<Self> {
        match bits {
            32 => Some(WordWidth::W32),
            64 => Some(WordWidth::W64),
            _ => None,
        }
    }
}
