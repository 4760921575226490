//! Elements of (Q/Z)^n.

use crate::abelian::qz::QZ;
use crate::error::{Error, Result};
use num_integer::Integer;
use std::fmt;
use std::str::FromStr;

/// An element of (Q/Z)^n, the additive stand-in for a diagonal matrix
/// `diag(e[r_1], ..., e[r_n])` acting on C^n.
///
/// The derived `Ord` is lexicographic over the coordinate order of [`QZ`];
/// every canonical representative choice in the crate goes through it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    coords: Vec<QZ>,
}

impl GroupElement {
    pub fn new(coords: Vec<QZ>) -> GroupElement {
        GroupElement { coords }
    }

    pub fn zero(n: usize) -> GroupElement {
        GroupElement {
            coords: vec![QZ::ZERO; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[QZ] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> QZ {
        self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(QZ::is_zero)
    }

    pub fn add(&self, other: &GroupElement) -> GroupElement {
        debug_assert_eq!(self.dim(), other.dim());
        GroupElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> GroupElement {
        GroupElement {
            coords: self.coords.iter().map(QZ::neg).collect(),
        }
    }

    pub fn sub(&self, other: &GroupElement) -> GroupElement {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> GroupElement {
        GroupElement {
            coords: self.coords.iter().map(|c| c.scale(k)).collect(),
        }
    }

    /// Additive order: the least `k > 0` with `k * self = 0`.
    pub fn order(&self) -> u64 {
        self.coords.iter().fold(1u64, |l, c| l.lcm(&c.order()))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    /// Parse a parenthesized tuple of rationals, e.g. `"(1/3, 2/3, 0)"`.
    fn from_str(s: &str) -> Result<GroupElement> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::parse(0, format!("expected parenthesized tuple, got {t:?}")))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Err(Error::parse(0, "empty tuple has no dimension"));
        }
        let coords = inner
            .split(',')
            .map(|p| p.parse::<QZ>())
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupElement { coords })
    }
}
