//! Finite abelian groups realized concretely inside (Q/Z)^n.
//!
//! Groups are kept as fully enumerated sorted element lists. Everything here
//! is desk scale (orders in the hundreds at most, with a configurable guard),
//! which buys exactness and trivially checkable invariants.

use crate::abelian::element::GroupElement;
use crate::abelian::smith::{smith_decomposition, IntMat};
use crate::error::{Error, Result};
use num_integer::Integer;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// Additive closure of `gens` inside (Q/Z)^n. With `guard = Some(limit)` the
/// closure aborts as soon as it exceeds `limit` elements.
fn closure(
    n: usize,
    gens: &[GroupElement],
    guard: Option<u64>,
) -> Result<BTreeSet<GroupElement>> {
    let mut set = BTreeSet::new();
    let zero = GroupElement::zero(n);
    set.insert(zero.clone());
    let mut queue = vec![zero];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = x.add(g);
            if set.insert(y.clone()) {
                if let Some(limit) = guard {
                    if set.len() as u64 > limit {
                        return Err(Error::GroupTooLarge { limit });
                    }
                }
                queue.push(y);
            }
        }
    }
    Ok(set)
}

/// Greedy small generating set: repeatedly adjoin the highest-order element
/// not yet generated. Deterministic given the canonical element order.
pub fn minimal_generators(elements: &[GroupElement]) -> Vec<GroupElement> {
    let Some(first) = elements.first() else {
        return Vec::new();
    };
    let n = first.dim();
    let mut by_order: Vec<&GroupElement> = elements.iter().collect();
    by_order.sort_by_key(|e| std::cmp::Reverse(e.order()));
    let mut gens: Vec<GroupElement> = Vec::new();
    let mut have = closure(n, &gens, None).expect("unguarded");
    for e in by_order {
        if !have.contains(e) {
            gens.push(e.clone());
            have = closure(n, &gens, None).expect("unguarded");
        }
    }
    gens
}

/// Invariant-factor basis of the group generated by `gens`: elements `b_i`
/// of order `d_i` with `d_1 | d_2 | ...` and the group equal to the direct
/// sum of the cyclic groups `<b_i>`. Trivial factors (`d_i = 1`) are dropped.
///
/// Computed from the Smith normal form of the relation lattice of `gens`:
/// the kernel of `[V | L*I]` (with `V` the numerator matrix over the common
/// denominator `L`) projects onto exactly the relations among the generators.
pub fn basis_decomposition(n: usize, gens: &[GroupElement]) -> Vec<(GroupElement, u64)> {
    if gens.is_empty() {
        return Vec::new();
    }
    let m = gens.len();
    let mut l: u64 = 1;
    for g in gens {
        for c in g.coords() {
            l = l.lcm(&c.den());
        }
    }
    let mut v = IntMat::zero(n, m);
    for (j, g) in gens.iter().enumerate() {
        for i in 0..n {
            let c = g.coord(i);
            v[(i, j)] = c.num() as i128 * (l / c.den()) as i128;
        }
    }
    let mut scaled_id = IntMat::identity(n);
    for i in 0..n {
        scaled_id[(i, i)] = l as i128;
    }
    let kernel = v.hstack(&scaled_id).kernel_basis();
    let mut relations = IntMat::zero(m, kernel.cols());
    for i in 0..m {
        for j in 0..kernel.cols() {
            relations[(i, j)] = kernel[(i, j)];
        }
    }
    let s = smith_decomposition(&relations);
    let mut basis = Vec::new();
    for i in 0..m {
        let d = s.d[(i, i)];
        assert!(d > 0, "finite group has a full-rank relation lattice");
        if d == 1 {
            continue;
        }
        let mut b = GroupElement::zero(n);
        for (j, g) in gens.iter().enumerate() {
            let ord = g.order() as i128;
            let c = s.p_inv[(j, i)].rem_euclid(ord) as i64;
            if c != 0 {
                b = b.add(&g.scale(c));
            }
        }
        basis.push((b, d as u64));
    }
    basis
}

/// A finite subgroup of (Q/Z)^n with its full sorted element list.
pub struct AmbientGroup {
    n: usize,
    elements: Vec<GroupElement>,
    generators: Vec<GroupElement>,
    cyclic_type: Vec<u64>,
}

impl AmbientGroup {
    /// Enumerate the closure of `generators` inside (Q/Z)^n.
    pub fn enumerate_closure(
        n: usize,
        generators: &[GroupElement],
        max_order: u64,
    ) -> Result<Arc<AmbientGroup>> {
        for g in generators {
            if g.dim() != n {
                return Err(Error::DomainMismatch(format!(
                    "generator {g} has dimension {}, expected {n}",
                    g.dim()
                )));
            }
        }
        let set = closure(n, generators, Some(max_order))?;
        Self::from_closed_set(n, set, generators.to_vec())
    }

    fn from_closed_set(
        n: usize,
        set: BTreeSet<GroupElement>,
        generators: Vec<GroupElement>,
    ) -> Result<Arc<AmbientGroup>> {
        let elements: Vec<GroupElement> = set.into_iter().collect();
        let mingens = minimal_generators(&elements);
        let cyclic_type: Vec<u64> = basis_decomposition(n, &mingens)
            .into_iter()
            .map(|(_, d)| d)
            .collect();
        let order: u64 = cyclic_type.iter().product();
        if order != elements.len() as u64 {
            return Err(Error::InternalInconsistency(format!(
                "cyclic type {cyclic_type:?} does not match order {}",
                elements.len()
            )));
        }
        Ok(Arc::new(AmbientGroup {
            n,
            elements,
            generators,
            cyclic_type,
        }))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn cyclic_type(&self) -> &[u64] {
        &self.cyclic_type
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement::zero(self.n)
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.dim() == self.n && self.elements.binary_search(g).is_ok()
    }

    pub fn full_subgroup(self: &Arc<Self>) -> Subgroup {
        Subgroup {
            parent: self.clone(),
            elements: self.elements.clone(),
        }
    }

    pub fn trivial_subgroup(self: &Arc<Self>) -> Subgroup {
        Subgroup {
            parent: self.clone(),
            elements: vec![self.zero()],
        }
    }

    /// Subgroup generated by `gens` (all of which must lie in the group).
    pub fn subgroup(self: &Arc<Self>, gens: &[GroupElement]) -> Result<Subgroup> {
        for g in gens {
            if !self.contains(g) {
                return Err(Error::DomainMismatch(format!("{g} is not in the group")));
            }
        }
        let set = closure(self.n, gens, None)?;
        Ok(Subgroup {
            parent: self.clone(),
            elements: set.into_iter().collect(),
        })
    }

    pub fn cyclic_subgroup(self: &Arc<Self>, g: &GroupElement) -> Result<Subgroup> {
        self.subgroup(std::slice::from_ref(g))
    }

    /// A sorted element list believed to be a subgroup; validated.
    pub fn subgroup_from_elements(self: &Arc<Self>, els: &[GroupElement]) -> Result<Subgroup> {
        let set: BTreeSet<GroupElement> = els.iter().cloned().collect();
        let closed = closure(self.n, els, None)?;
        if set != closed {
            return Err(Error::DomainMismatch(
                "element list is not closed under addition".into(),
            ));
        }
        self.subgroup(els)
    }

    /// Every subgroup, enumerated by breadth-first closure extension.
    /// Deterministic order (sorted by element list).
    pub fn subgroups(self: &Arc<Self>) -> Vec<Subgroup> {
        let mut found: BTreeSet<Vec<GroupElement>> = BTreeSet::new();
        let trivial = vec![self.zero()];
        found.insert(trivial.clone());
        let mut queue = vec![trivial];
        while let Some(cur) = queue.pop() {
            for g in &self.elements {
                if cur.binary_search(g).is_ok() {
                    continue;
                }
                let mut gens = cur.clone();
                gens.push(g.clone());
                let set = closure(self.n, &gens, None).expect("unguarded");
                let v: Vec<GroupElement> = set.into_iter().collect();
                if found.insert(v.clone()) {
                    queue.push(v);
                }
            }
        }
        found
            .into_iter()
            .map(|elements| Subgroup {
                parent: self.clone(),
                elements,
            })
            .collect()
    }
}

impl fmt::Debug for AmbientGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AmbientGroup(order {}, type {:?})",
            self.order(),
            self.cyclic_type
        )
    }
}

/// A subgroup of an [`AmbientGroup`], as a sorted sublist of its elements.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<AmbientGroup>,
    elements: Vec<GroupElement>,
}

impl Subgroup {
    pub fn parent(&self) -> &Arc<AmbientGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn index(&self) -> u64 {
        self.parent.order() / self.order()
    }

    pub fn dim(&self) -> usize {
        self.parent.n
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_full(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.same_ambient(other) && self.elements.iter().all(|g| other.contains(g))
    }

    fn same_ambient(&self, other: &Subgroup) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) || self.parent.elements == other.parent.elements
    }

    /// Smallest subgroup containing both (same ambient group required).
    pub fn sum(&self, other: &Subgroup) -> Result<Subgroup> {
        if !self.same_ambient(other) {
            return Err(Error::DomainMismatch("sum across ambient groups".into()));
        }
        let gens: Vec<GroupElement> = self
            .elements
            .iter()
            .chain(&other.elements)
            .cloned()
            .collect();
        self.parent.subgroup(&gens)
    }

    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup> {
        if !self.same_ambient(other) {
            return Err(Error::DomainMismatch(
                "intersection across ambient groups".into(),
            ));
        }
        let els: Vec<GroupElement> = self
            .elements
            .iter()
            .filter(|g| other.contains(g))
            .cloned()
            .collect();
        Ok(Subgroup {
            parent: self.parent.clone(),
            elements: els,
        })
    }

    /// Canonical representative (minimal element) of the coset `g + self`.
    pub fn coset_rep(&self, g: &GroupElement) -> GroupElement {
        self.elements
            .iter()
            .map(|h| g.add(h))
            .min()
            .expect("subgroup is nonempty")
    }

    /// All cosets of `self` in its parent; each coset sorted, cosets ordered
    /// by their minimal representative.
    pub fn cosets(&self) -> Vec<Vec<GroupElement>> {
        let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
        let mut out = Vec::new();
        for g in &self.parent.elements {
            if seen.contains(g) {
                continue;
            }
            let mut coset: Vec<GroupElement> = self.elements.iter().map(|h| g.add(h)).collect();
            coset.sort();
            for x in &coset {
                seen.insert(x.clone());
            }
            out.push(coset);
        }
        out
    }

    pub fn coset_reps(&self) -> Vec<GroupElement> {
        self.cosets().into_iter().map(|c| c[0].clone()).collect()
    }

    /// Invariant-factor basis of this subgroup; see [`basis_decomposition`].
    pub fn basis(&self) -> Vec<(GroupElement, u64)> {
        basis_decomposition(self.parent.n, &minimal_generators(&self.elements))
    }

    pub fn cyclic_type(&self) -> Vec<u64> {
        self.basis().into_iter().map(|(_, d)| d).collect()
    }

    /// Re-realize this subgroup as an ambient group in its own right (same
    /// coordinates in (Q/Z)^n).
    pub fn to_ambient(&self) -> Arc<AmbientGroup> {
        let set: BTreeSet<GroupElement> = self.elements.iter().cloned().collect();
        AmbientGroup::from_closed_set(self.parent.n, set, minimal_generators(&self.elements))
            .expect("subgroup data is consistent")
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_ambient(other) && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}
