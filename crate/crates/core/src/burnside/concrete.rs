//! Honest finite enhanced G-sets, used as the executable semantics behind
//! the Burnside-ring operations.
//!
//! Products, reductions and canonicalization are all performed on these
//! concrete sets — correctness by construction instead of closed formulas
//! (closed forms exist for everything here and serve as cross-checks).

use crate::abelian::{AmbientGroup, Character, GroupElement, Subgroup};
use crate::burnside::element::BurnsideElement;
use crate::burnside::irreducible::Irreducible;
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A finite enhanced G-set `(X, h, alpha)` with everything spelled out:
/// one permutation of the points per group *element* (not per generator —
/// stabilizers, equivariance and fixed points all quantify over the whole
/// group anyway), the equivariant map `h`, and a character of the isotropy
/// subgroup at every point.
pub struct ConcreteEnhancedSet {
    group: Arc<AmbientGroup>,
    /// `action[gi][x]` = the point `g . x`, with `gi` indexing `group.elements()`.
    action: Vec<Vec<usize>>,
    h: Vec<usize>,
    alphas: Vec<Character>,
}

fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    for &y in perm {
        if y >= perm.len() || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    true
}

impl ConcreteEnhancedSet {
    /// Validating constructor; every structural invariant is checked.
    pub fn new(
        group: Arc<AmbientGroup>,
        action: Vec<Vec<usize>>,
        h: Vec<usize>,
        alphas: Vec<Character>,
    ) -> Result<ConcreteEnhancedSet> {
        let s = ConcreteEnhancedSet { group, action, h, alphas };
        s.validate()?;
        Ok(s)
    }

    fn malformed(msg: impl Into<String>) -> Error {
        Error::MalformedEnhancedSet(msg.into())
    }

    fn validate(&self) -> Result<()> {
        let n = self.h.len();
        let order = self.group.order() as usize;
        if self.action.len() != order {
            return Err(Self::malformed("one permutation per group element required"));
        }
        for row in &self.action {
            if row.len() != n || !is_permutation(row) {
                return Err(Self::malformed("group action row is not a permutation"));
            }
        }
        if !is_permutation(&self.h) {
            return Err(Self::malformed("h is not a permutation"));
        }
        if self.alphas.len() != n {
            return Err(Self::malformed("need one character per point"));
        }
        // identity acts trivially (the zero element sorts first)
        if self.action[0] != (0..n).collect::<Vec<_>>() {
            return Err(Self::malformed("identity does not act trivially"));
        }
        // action is a homomorphism
        let els = self.group.elements();
        for (i, a) in els.iter().enumerate() {
            for (j, b) in els.iter().enumerate() {
                let sum_idx = self.element_index(&a.add(b));
                for x in 0..n {
                    if self.action[i][self.action[j][x]] != self.action[sum_idx][x] {
                        return Err(Self::malformed("action is not a homomorphism"));
                    }
                }
            }
        }
        // h is G-equivariant
        for row in &self.action {
            for x in 0..n {
                if self.h[row[x]] != row[self.h[x]] {
                    return Err(Self::malformed("h is not equivariant"));
                }
            }
        }
        // characters live on the right stabilizers and satisfy conditions 3(a), 3(b)
        for x in 0..n {
            let stab = self.stabilizer(x)?;
            if self.alphas[x].domain() != &stab {
                return Err(Self::malformed(format!(
                    "character at point {x} is not defined on its stabilizer"
                )));
            }
        }
        for row in &self.action {
            for x in 0..n {
                if self.alphas[row[x]] != self.alphas[x] {
                    return Err(Self::malformed("condition 3(a) violated: alpha not G-invariant"));
                }
            }
        }
        for x in 0..n {
            if self.alphas[self.h[x]] != self.alphas[x] {
                return Err(Self::malformed("condition 3(b) violated: alpha not h-invariant"));
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<AmbientGroup> {
        &self.group
    }

    pub fn point_count(&self) -> usize {
        self.h.len()
    }

    pub fn h_image(&self, x: usize) -> usize {
        self.h[x]
    }

    pub fn alpha_at(&self, x: usize) -> &Character {
        &self.alphas[x]
    }

    fn element_index(&self, g: &GroupElement) -> usize {
        self.group
            .elements()
            .binary_search(g)
            .expect("element belongs to the group")
    }

    /// Apply the action of `g`.
    pub fn act(&self, g: &GroupElement, x: usize) -> usize {
        self.action[self.element_index(g)][x]
    }

    pub fn stabilizer(&self, x: usize) -> Result<Subgroup> {
        let els: Vec<GroupElement> = self
            .group
            .elements()
            .iter()
            .enumerate()
            .filter(|(gi, _)| self.action[*gi][x] == x)
            .map(|(_, g)| g.clone())
            .collect();
        self.group.subgroup(&els)
    }

    /// Realize an irreducible: points are (coset of H) x {0..k-1}; `h`
    /// advances the counter, wrapping into a translation by `hbar`.
    pub fn materialize(x: &Irreducible) -> ConcreteEnhancedSet {
        let group = x.group().clone();
        let cosets = x.isotropy().cosets();
        let reps: Vec<GroupElement> = cosets.iter().map(|c| c[0].clone()).collect();
        let mut coset_of: BTreeMap<GroupElement, usize> = BTreeMap::new();
        for (ci, coset) in cosets.iter().enumerate() {
            for e in coset {
                coset_of.insert(e.clone(), ci);
            }
        }
        let k = x.k() as usize;
        let points = reps.len() * k;
        let idx = |c: usize, i: usize| c * k + i;

        let action = group
            .elements()
            .iter()
            .map(|g| {
                let mut row = vec![0; points];
                for (c, rep) in reps.iter().enumerate() {
                    let target = coset_of[&rep.add(g)];
                    for i in 0..k {
                        row[idx(c, i)] = idx(target, i);
                    }
                }
                row
            })
            .collect();

        let mut h = vec![0; points];
        for (c, rep) in reps.iter().enumerate() {
            for i in 0..k {
                h[idx(c, i)] = if i + 1 < k {
                    idx(c, i + 1)
                } else {
                    idx(coset_of[&rep.add(x.hbar())], 0)
                };
            }
        }

        // G is abelian: every point of the orbit has stabilizer H and carries
        // the same character (condition 3 transports it without change).
        let alphas = vec![x.alpha().clone(); points];
        ConcreteEnhancedSet { group, action, h, alphas }
    }

    /// Orbit decomposition into irreducibles.
    ///
    /// Orbits of the group generated by the G-action together with `h` are
    /// classified by reading the invariants off any orbit point (for abelian
    /// G the choice does not matter; we use the minimal point index).
    pub fn canonicalize(&self) -> Result<BurnsideElement> {
        self.validate()?;
        let n = self.point_count();
        let mut orbit_of = vec![usize::MAX; n];
        let mut result = BurnsideElement::zero(self.group.clone());
        for start in 0..n {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            // flood fill the combined orbit
            let mut stack = vec![start];
            orbit_of[start] = start;
            while let Some(x) = stack.pop() {
                let mut nexts: Vec<usize> =
                    self.action.iter().map(|row| row[x]).collect();
                nexts.push(self.h[x]);
                for y in nexts {
                    if orbit_of[y] == usize::MAX {
                        orbit_of[y] = start;
                        stack.push(y);
                    }
                }
            }

            let h_sub = self.alphas[start].domain().clone();
            // k = first power of h that returns into the G-orbit of `start`
            let g_orbit: Vec<usize> = self.action.iter().map(|row| row[start]).collect();
            let mut k = 1u64;
            let mut y = self.h[start];
            while !g_orbit.contains(&y) {
                y = self.h[y];
                k += 1;
            }
            // translation element: h^k(start) = hbar . start
            let hbar = self
                .group
                .elements()
                .iter()
                .enumerate()
                .find(|(gi, _)| self.action[*gi][start] == y)
                .map(|(_, g)| g.clone())
                .expect("h^k lands in the G-orbit");
            let irr = Irreducible::new(h_sub, k, hbar, self.alphas[start].clone())?;
            result = result.add(&BurnsideElement::generator(irr));
        }
        Ok(result)
    }

    fn same_group(&self, other: &ConcreteEnhancedSet) -> bool {
        Arc::ptr_eq(&self.group, &other.group)
            || self.group.elements() == other.group.elements()
    }

    /// Cartesian product with the diagonal action; characters multiply
    /// (exponents add) on the intersected stabilizers.
    pub fn product(&self, other: &ConcreteEnhancedSet) -> Result<ConcreteEnhancedSet> {
        if !self.same_group(other) {
            return Err(Error::DomainMismatch("product across different groups".into()));
        }
        let (n1, n2) = (self.point_count(), other.point_count());
        let idx = |x: usize, y: usize| x * n2 + y;
        let action: Vec<Vec<usize>> = (0..self.action.len())
            .map(|gi| {
                let mut row = vec![0; n1 * n2];
                for x in 0..n1 {
                    for y in 0..n2 {
                        row[idx(x, y)] = idx(self.action[gi][x], other.action[gi][y]);
                    }
                }
                row
            })
            .collect();
        let mut h = vec![0; n1 * n2];
        for x in 0..n1 {
            for y in 0..n2 {
                h[idx(x, y)] = idx(self.h[x], other.h[y]);
            }
        }
        let mut alphas = Vec::with_capacity(n1 * n2);
        for x in 0..n1 {
            for y in 0..n2 {
                let sx = self.alphas[x].domain();
                let sy = other.alphas[y].domain();
                let inter = sx.intersect(sy)?;
                let values = inter
                    .elements()
                    .iter()
                    .map(|g| (g.clone(), self.alphas[x].eval(g).add(&other.alphas[y].eval(g))))
                    .collect();
                alphas.push(Character::from_values(&inter, values)?);
            }
        }
        ConcreteEnhancedSet::new(self.group.clone(), action, h, alphas)
    }

    pub fn disjoint_union(&self, other: &ConcreteEnhancedSet) -> Result<ConcreteEnhancedSet> {
        if !self.same_group(other) {
            return Err(Error::DomainMismatch("union across different groups".into()));
        }
        let n1 = self.point_count();
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(r1, r2)| {
                r1.iter()
                    .copied()
                    .chain(r2.iter().map(|&y| y + n1))
                    .collect()
            })
            .collect();
        let h = self
            .h
            .iter()
            .copied()
            .chain(other.h.iter().map(|&y| y + n1))
            .collect();
        let alphas = self.alphas.iter().chain(&other.alphas).cloned().collect();
        ConcreteEnhancedSet::new(self.group.clone(), action, h, alphas)
    }

    /// Restrict the action to a subgroup, re-realized as its own ambient
    /// group; points and `h` are untouched, stabilizers shrink.
    pub fn restrict_to(&self, g_sub: &Subgroup) -> Result<ConcreteEnhancedSet> {
        if g_sub.parent().elements() != self.group.elements() {
            return Err(Error::DomainMismatch(
                "restriction subgroup lives in a different group".into(),
            ));
        }
        let target = g_sub.to_ambient();
        let n = self.point_count();
        let action: Vec<Vec<usize>> = target
            .elements()
            .iter()
            .map(|g| self.action[self.element_index(g)].clone())
            .collect();
        let mut alphas = Vec::with_capacity(n);
        for x in 0..n {
            let stab_els: Vec<GroupElement> = target
                .elements()
                .iter()
                .enumerate()
                .filter(|(gi, _)| action[*gi][x] == x)
                .map(|(_, g)| g.clone())
                .collect();
            let stab = target.subgroup(&stab_els)?;
            let values = stab
                .elements()
                .iter()
                .map(|g| (g.clone(), self.alphas[x].eval(g)))
                .collect();
            alphas.push(Character::from_values(&stab, values)?);
        }
        ConcreteEnhancedSet::new(target, action, self.h.clone(), alphas)
    }
}
