//! Irreducible enhanced G-sets.

use crate::abelian::{character_group, AmbientGroup, Character, GroupElement, Subgroup};
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// The irreducible enhanced G-set `X_{H,k,hbar,alpha}`: the G-set
/// `(G/H) x {0..k-1}` where `h` advances the counter and, on wrap-around,
/// translates the coset by `hbar`; every point carries the character `alpha`
/// of its stabilizer `H`.
///
/// For abelian G two irreducibles are isomorphic iff all four fields agree
/// (conjugation freedom vanishes for abelian groups), so this struct doubles as
/// the canonical isomorphism-class key. `hbar` is always normalized to the
/// minimal representative of its coset mod H. Conjugation invariance of
/// `alpha` is vacuous here and not re-checked.
#[derive(Clone)]
pub struct Irreducible {
    h_sub: Subgroup,
    k: u64,
    hbar: GroupElement,
    alpha: Character,
}

impl Irreducible {
    pub fn new(h_sub: Subgroup, k: u64, hbar: GroupElement, alpha: Character) -> Result<Irreducible> {
        if k == 0 {
            return Err(Error::DomainMismatch("irreducible needs k >= 1".into()));
        }
        if !h_sub.parent().contains(&hbar) {
            return Err(Error::DomainMismatch(format!(
                "translation element {hbar} lies outside the ambient group"
            )));
        }
        if alpha.domain() != &h_sub {
            return Err(Error::DomainMismatch(
                "character domain differs from the isotropy subgroup".into(),
            ));
        }
        let hbar = h_sub.coset_rep(&hbar);
        Ok(Irreducible { h_sub, k, hbar, alpha })
    }

    pub fn group(&self) -> &Arc<AmbientGroup> {
        self.h_sub.parent()
    }

    pub fn isotropy(&self) -> &Subgroup {
        &self.h_sub
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn hbar(&self) -> &GroupElement {
        &self.hbar
    }

    pub fn alpha(&self) -> &Character {
        &self.alpha
    }

    /// Number of points of the underlying set: `k * [G : H]`.
    pub fn point_count(&self) -> u64 {
        self.k * self.h_sub.index()
    }

    /// Membership in `B_1(G)`: `h` moves every point inside its G-orbit.
    pub fn is_b1(&self) -> bool {
        self.k == 1
    }

    /// The filtration weight: the minimal period of `h`, i.e.
    /// `k` times the order of `hbar` in `G/H`.
    pub fn minimal_period(&self) -> u64 {
        let mut ord = 1u64;
        let mut acc = self.hbar.clone();
        while !self.h_sub.contains(&acc) {
            acc = acc.add(&self.hbar);
            ord += 1;
        }
        self.k * ord
    }
}

impl PartialEq for Irreducible {
    fn eq(&self, other: &Self) -> bool {
        self.h_sub == other.h_sub
            && self.k == other.k
            && self.hbar == other.hbar
            && self.alpha == other.alpha
    }
}

impl Eq for Irreducible {}

impl Ord for Irreducible {
    fn cmp(&self, other: &Self) -> Ordering {
        self.h_sub
            .elements()
            .cmp(other.h_sub.elements())
            .then_with(|| self.k.cmp(&other.k))
            .then_with(|| self.hbar.cmp(&other.hbar))
            .then_with(|| self.alpha.values_in_order().cmp(&other.alpha.values_in_order()))
    }
}

impl PartialOrd for Irreducible {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Irreducible {
    /// `[H={(0), (1/2)}; k=1; h=(0); a=0, 1/2]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[H={{")?;
        for (i, e) in self.h_sub.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}; k={}; h={}; a=", self.k, self.hbar)?;
        for (i, v) in self.alpha.values_in_order().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Irreducible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All irreducibles of `g` with k up to `max_k`, in canonical order.
pub fn all_irreducibles(g: &Arc<AmbientGroup>, max_k: u64) -> Vec<Irreducible> {
    let mut out = Vec::new();
    for h in g.subgroups() {
        for k in 1..=max_k {
            for rep in h.coset_reps() {
                for alpha in character_group(&h) {
                    out.push(
                        Irreducible::new(h.clone(), k, rep.clone(), alpha)
                            .expect("enumerated data is valid"),
                    );
                }
            }
        }
    }
    out.sort();
    out
}

/// The free generators of `B_1(g)` (every k = 1 irreducible).
pub fn b1_generators(g: &Arc<AmbientGroup>) -> Vec<Irreducible> {
    all_irreducibles(g, 1)
}
