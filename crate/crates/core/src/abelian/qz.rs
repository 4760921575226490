//! Rational residues modulo 1, i.e. the additive group Q/Z.
//!
//! Every root of unity in this crate is stored through its exponent: the
//! residue `r` stands for `e[r] = exp(2*pi*i*r)`. Nothing is ever evaluated
//! in floating point.

use crate::error::{Error, Result};
use num_integer::Integer;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A rational number modulo 1, stored in lowest terms with `0 <= num < den`.
///
/// The canonical total order compares `(den, num)` lexicographically, so the
/// zero element `0/1` comes first, then `1/2`, `1/3`, `2/3`, `1/4`, ... This
/// order fixes every coset-representative choice in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct QZ {
    num: u64,
    den: u64,
}

impl QZ {
    pub const ZERO: QZ = QZ { num: 0, den: 1 };

    /// Reduce `num/den` modulo 1.
    ///
    /// # Panics
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> QZ {
        assert!(den != 0, "QZ denominator must be nonzero");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let den = den as u64;
        let num = num.rem_euclid(den as i64) as u64;
        Self::reduced(num, den)
    }

    fn reduced(num: u64, den: u64) -> QZ {
        debug_assert!(den > 0 && num < den);
        let g = num.gcd(&den);
        QZ {
            num: num / g,
            den: den / g,
        }
    }

    /// Reduce an exact `i128` ratio modulo 1; used where intermediate
    /// numerators outgrow `i64` (adjugate columns, pairing sums).
    pub fn from_i128(num: i128, den: i128) -> QZ {
        assert!(den != 0, "QZ denominator must be nonzero");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let num = num.rem_euclid(den);
        Self::reduced_u128(num as u128, den as u128)
    }

    fn reduced_u128(num: u128, den: u128) -> QZ {
        let num = num % den;
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        debug_assert!(den <= u64::MAX as u128);
        QZ {
            num: num as u64,
            den: den as u64,
        }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// The additive order of the residue in Q/Z.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn add(&self, other: &QZ) -> QZ {
        let l = (self.den as u128).lcm(&(other.den as u128));
        let n = self.num as u128 * (l / self.den as u128)
            + other.num as u128 * (l / other.den as u128);
        Self::reduced_u128(n, l)
    }

    pub fn neg(&self) -> QZ {
        if self.num == 0 {
            *self
        } else {
            QZ {
                num: self.den - self.num,
                den: self.den,
            }
        }
    }

    pub fn sub(&self, other: &QZ) -> QZ {
        self.add(&other.neg())
    }

    /// Integer multiple `k * self` modulo 1.
    pub fn scale(&self, k: i64) -> QZ {
        let k = k.rem_euclid(self.den as i64) as u128;
        Self::reduced_u128(k * self.num as u128, self.den as u128)
    }

    /// Full rational product `self * other` modulo 1, used by bilinear pairings.
    pub fn mul(&self, other: &QZ) -> QZ {
        let n = self.num as u128 * other.num as u128;
        let d = self.den as u128 * other.den as u128;
        Self::reduced_u128(n, d)
    }
}

impl Ord for QZ {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.den, self.num).cmp(&(other.den, other.num))
    }
}

impl PartialOrd for QZ {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for QZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QZ {
    type Err = Error;

    /// Parse `"p/q"` or a bare integer `"p"`, with an optional leading sign.
    fn from_str(s: &str) -> Result<QZ> {
        let s = s.trim();
        let (num_s, den_s) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let num: i64 = num_s
            .parse()
            .map_err(|_| Error::parse(0, format!("invalid rational numerator {num_s:?}")))?;
        let den: i64 = den_s
            .parse()
            .map_err(|_| Error::parse(0, format!("invalid rational denominator {den_s:?}")))?;
        if den == 0 {
            return Err(Error::parse(0, "rational with zero denominator"));
        }
        Ok(QZ::new(num, den))
    }
}
