//! Reduction to a subgroup, the enhanced Saito duality on B_1, equipped
//! fixed-point data, and the orbit filtration.

use crate::abelian::{AmbientGroup, Character, GroupElement, PairedGroups, Subgroup};
use crate::burnside::concrete::ConcreteEnhancedSet;
use crate::burnside::element::BurnsideElement;
use crate::burnside::irreducible::Irreducible;
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

fn check_subgroup_of(a: &BurnsideElement, g_sub: &Subgroup) -> Result<()> {
    if g_sub.parent().elements() != a.group().elements() {
        return Err(Error::DomainMismatch(
            "reduction subgroup lives in a different group".into(),
        ));
    }
    Ok(())
}

/// The reduction homomorphism `R^𝒢_G : B(𝒢) -> B(G)`.
///
/// Generators in B_1 take a closed-form fast path
/// (cross-checked against the general path by the test suite); everything
/// else goes through materialize / restrict / canonicalize.
pub fn reduce(a: &BurnsideElement, g_sub: &Subgroup) -> Result<BurnsideElement> {
    check_subgroup_of(a, g_sub)?;
    let target = g_sub.to_ambient();
    let mut out = BurnsideElement::zero(target.clone());
    for (irr, c) in a.coeffs() {
        let part = if irr.is_b1() {
            reduce_generator_fast(irr, g_sub, &target)?
        } else {
            reduce_generator_general(irr, g_sub)?
        };
        out = out.add(&part.scale(*c));
    }
    Ok(out)
}

/// General path: restrict the honest G-set and re-read its orbits.
pub fn reduce_general(a: &BurnsideElement, g_sub: &Subgroup) -> Result<BurnsideElement> {
    check_subgroup_of(a, g_sub)?;
    let target = g_sub.to_ambient();
    let mut out = BurnsideElement::zero(target);
    for (irr, c) in a.coeffs() {
        out = out.add(&reduce_generator_general(irr, g_sub)?.scale(*c));
    }
    Ok(out)
}

fn reduce_generator_general(irr: &Irreducible, g_sub: &Subgroup) -> Result<BurnsideElement> {
    ConcreteEnhancedSet::materialize(irr)
        .restrict_to(g_sub)?
        .canonicalize()
}

/// Closed-form reduction, valid for k = 1 generators: with
/// `k' = min{l > 0 : l*hbar in G + H}`, the generator `(H, 1, hbar, α)`
/// reduces to `(|𝒢||G∩H|) / (k'|H||G|)` copies of
/// `(G∩H, k', [k'*hbar], α|_{G∩H})`.
pub fn reduce_generator_fast(
    irr: &Irreducible,
    g_sub: &Subgroup,
    target: &Arc<AmbientGroup>,
) -> Result<BurnsideElement> {
    assert!(irr.is_b1(), "fast path requires k = 1");
    let ambient = irr.group();
    let h_sub = irr.isotropy();
    let hbar = irr.hbar();

    let g_plus_h = g_sub.sum(h_sub)?;
    let mut k = 1u64;
    let mut acc = hbar.clone();
    while !g_plus_h.contains(&acc) {
        acc = acc.add(hbar);
        k += 1;
    }

    let num = ambient.order() * g_sub.intersect(h_sub)?.order();
    let den = k * h_sub.order() * g_sub.order();
    if num % den != 0 {
        return Err(Error::InternalInconsistency(format!(
            "non-integral reduction coefficient {num}/{den}"
        )));
    }
    let coeff = (num / den) as i64;

    // translation: some g in G with g ≡ k*hbar (mod H); minimal by scan order
    let k_hbar = hbar.scale(k as i64);
    let trans = g_sub
        .elements()
        .iter()
        .find(|g| h_sub.contains(&g.sub(&k_hbar)))
        .cloned()
        .ok_or_else(|| {
            Error::InternalInconsistency("k*hbar not reachable in G + H".into())
        })?;

    let new_h = target.subgroup(g_sub.intersect(h_sub)?.elements())?;
    let values: BTreeMap<GroupElement, _> = new_h
        .elements()
        .iter()
        .map(|g| (g.clone(), irr.alpha().eval(g)))
        .collect();
    let alpha = Character::from_values(&new_h, values)?;
    Ok(BurnsideElement::generator(Irreducible::new(new_h, k, trans, alpha)?).scale(coeff))
}

/// The enhanced equivariant Saito duality `D̂_𝒢 : B_1(𝒢) -> B_1(𝒢*)`:
/// `(H, 1, hbar, α) -> (H~, 1, [α~], γ ↦ <hbar, γ>)`.
pub fn saito_dual(a: &BurnsideElement, pairing: &PairedGroups) -> Result<BurnsideElement> {
    if a.group().elements() != pairing.g().elements() {
        return Err(Error::DomainMismatch(
            "element does not live in the paired group".into(),
        ));
    }
    let mut out = BurnsideElement::zero(pairing.gstar().clone());
    for (irr, c) in a.coeffs() {
        if !irr.is_b1() {
            return Err(Error::NotInB1(irr.k()));
        }
        let h_dual = pairing.dual_subgroup(irr.isotropy())?;
        let gamma = pairing.extend_character(irr.alpha())?;
        // the new character is well defined on H~ because every element of
        // H~ annihilates H, hence is blind to the representative of hbar+H
        let values: BTreeMap<GroupElement, _> = h_dual
            .elements()
            .iter()
            .map(|d| (d.clone(), pairing.pair(irr.hbar(), d)))
            .collect();
        let alpha = Character::from_values(&h_dual, values)?;
        let dual_irr = Irreducible::new(h_dual, 1, gamma, alpha)?;
        out = out.add(&BurnsideElement::generator(dual_irr).scale(*c));
    }
    Ok(out)
}

/// A key of the equipped Burnside ring: a stabilizer class with the
/// character its fixed points carry.
#[derive(Clone, PartialEq, Eq)]
pub struct FixedTerm {
    stabilizer: Subgroup,
    character: Character,
}

impl FixedTerm {
    pub fn stabilizer(&self) -> &Subgroup {
        &self.stabilizer
    }

    pub fn character(&self) -> &Character {
        &self.character
    }
}

impl Ord for FixedTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.stabilizer
            .elements()
            .cmp(other.stabilizer.elements())
            .then_with(|| {
                self.character
                    .values_in_order()
                    .cmp(&other.character.values_in_order())
            })
    }
}

impl PartialOrd for FixedTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FixedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.stabilizer, self.character)
    }
}

/// Equipped Lefschetz data: fixed points of `g·h^m` counted
/// with multiplicity, grouped by (stabilizer, character).
#[derive(Clone, PartialEq, Eq)]
pub struct FixedPointData {
    terms: BTreeMap<FixedTerm, i64>,
}

impl FixedPointData {
    pub fn empty() -> FixedPointData {
        FixedPointData {
            terms: BTreeMap::new(),
        }
    }

    pub fn terms(&self) -> &BTreeMap<FixedTerm, i64> {
        &self.terms
    }

    fn add_term(&mut self, term: FixedTerm, c: i64) {
        use std::collections::btree_map::Entry;
        if c == 0 {
            return;
        }
        match self.terms.entry(term) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn merge_scaled(&mut self, other: &FixedPointData, c: i64) {
        for (t, v) in &other.terms {
            self.add_term(t.clone(), v * c);
        }
    }

    /// The plain (unequipped) Lefschetz number.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl fmt::Debug for FixedPointData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Fixed points of `g · h^m` on a concrete set.
pub fn fixed_point_data_concrete(
    s: &ConcreteEnhancedSet,
    g: &GroupElement,
    m: u64,
) -> Result<FixedPointData> {
    if !s.group().contains(g) {
        return Err(Error::DomainMismatch(format!("{g} is not in the group")));
    }
    let mut out = FixedPointData::empty();
    for x in 0..s.point_count() {
        let mut y = x;
        for _ in 0..m {
            y = s.h_image(y);
        }
        if s.act(g, y) == x {
            out.add_term(
                FixedTerm {
                    stabilizer: s.alpha_at(x).domain().clone(),
                    character: s.alpha_at(x).clone(),
                },
                1,
            );
        }
    }
    Ok(out)
}

/// Fixed points of `g · h^m` on a virtual element, by linearity.
pub fn fixed_point_data(a: &BurnsideElement, g: &GroupElement, m: u64) -> Result<FixedPointData> {
    if !a.group().contains(g) {
        return Err(Error::DomainMismatch(format!("{g} is not in the group")));
    }
    let mut out = FixedPointData::empty();
    for (irr, c) in a.coeffs() {
        let s = ConcreteEnhancedSet::materialize(irr);
        out.merge_scaled(&fixed_point_data_concrete(&s, g, m)?, *c);
    }
    Ok(out)
}

/// The largest `i` with `a ∈ F^i` — one less than the minimal
/// period of `h` across the support; `None` (infinity) for the zero element.
pub fn filtration_level(a: &BurnsideElement) -> Option<u64> {
    a.coeffs()
        .keys()
        .map(|irr| irr.minimal_period() - 1)
        .min()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{character_group, IntMat};
    use crate::burnside::irreducible::b1_generators;

    fn grp(n: usize, gens: &[&str]) -> Arc<AmbientGroup> {
        let gens: Vec<GroupElement> = gens.iter().map(|s| s.parse().unwrap()).collect();
        AmbientGroup::enumerate_closure(n, &gens, 5000).unwrap()
    }

    fn el(s: &str) -> GroupElement {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_to_whole_group_is_identity() {
        let g = grp(1, &["(1/4)"]);
        for irr in b1_generators(&g) {
            let a = BurnsideElement::generator(irr);
            let r = reduce(&a, &g.full_subgroup()).unwrap();
            assert_eq!(r, a);
        }
    }

    #[test]
    fn spec_reduction_example() {
        // 𝒢=Z/4, G={0,1/2}, ({0},1,1/4,triv) -> 1*({0},2,1/2,triv)
        let g = grp(1, &["(1/4)"]);
        let triv = g.trivial_subgroup();
        let a = BurnsideElement::generator(
            Irreducible::new(triv.clone(), 1, el("(1/4)"), Character::trivial(&triv)).unwrap(),
        );
        let sub = g.subgroup(&[el("(1/2)")]).unwrap();
        let r = reduce(&a, &sub).unwrap();
        assert_eq!(r.coeffs().len(), 1);
        let (irr, c) = r.coeffs().iter().next().unwrap();
        assert_eq!(*c, 1);
        assert_eq!(irr.k(), 2);
        assert_eq!(irr.isotropy().order(), 1);
        assert_eq!(irr.hbar(), &el("(1/2)"));
    }

    #[test]
    fn reduce_to_trivial_group() {
        // 𝒢=Z/2, generator (𝒢,1,e,α) -> 1*({0},1,0,triv) over the trivial group
        let g = grp(1, &["(1/2)"]);
        let full = g.full_subgroup();
        for alpha in character_group(&full) {
            let a = BurnsideElement::generator(
                Irreducible::new(full.clone(), 1, g.zero(), alpha).unwrap(),
            );
            let r = reduce(&a, &g.trivial_subgroup()).unwrap();
            assert_eq!(r.coeffs().len(), 1);
            let (irr, c) = r.coeffs().iter().next().unwrap();
            assert_eq!((irr.k(), *c), (1, 1));
            assert!(irr.isotropy().is_trivial());
            assert!(irr.alpha().is_trivial());
        }
    }

    #[test]
    fn fast_path_equals_general_path() {
        for (n, gens) in [(1usize, vec!["(1/4)"]), (1, vec!["(1/6)"]), (2, vec!["(1/2, 0)", "(0, 1/2)"])] {
            let g = grp(n, &gens);
            for sub in g.subgroups() {
                let target = sub.to_ambient();
                for irr in b1_generators(&g) {
                    let fast = reduce_generator_fast(&irr, &sub, &target).unwrap();
                    let gen = reduce_generator_general(&irr, &sub).unwrap();
                    assert_eq!(fast, gen, "{irr} reduced to {sub:?}");
                }
            }
        }
    }

    #[test]
    fn reduce_is_a_ring_homomorphism() {
        let g = grp(1, &["(1/6)"]);
        let gens = b1_generators(&g);
        let x = BurnsideElement::generator(gens[2].clone());
        let y = BurnsideElement::generator(gens[9].clone());
        for sub in g.subgroups() {
            let lhs = reduce(&x.mul(&y).unwrap(), &sub).unwrap();
            let rhs = reduce(&x, &sub).unwrap().mul(&reduce(&y, &sub).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
            let lhs = reduce(&x.add(&y), &sub).unwrap();
            let rhs = reduce(&x, &sub).unwrap().add(&reduce(&y, &sub).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn saito_dual_spec_examples() {
        let p = PairedGroups::from_matrix(IntMat::from_rows(vec![vec![2]]), 100).unwrap();
        let g = p.g().clone();
        let triv = g.trivial_subgroup();

        // ({0},1,1/2,triv) -> (𝒢*,1,e, γ↦<1/2,γ>) — the faithful character
        let a = BurnsideElement::generator(
            Irreducible::new(triv.clone(), 1, el("(1/2)"), Character::trivial(&triv)).unwrap(),
        );
        let d = saito_dual(&a, &p).unwrap();
        assert_eq!(d.coeffs().len(), 1);
        let (irr, c) = d.coeffs().iter().next().unwrap();
        assert_eq!(*c, 1);
        assert!(irr.isotropy().is_full());
        assert!(irr.hbar().is_zero());
        assert_eq!(irr.alpha().eval(&el("(1/2)")), "1/2".parse().unwrap());

        // (𝒢,1,e,triv) -> ({e},1,e,triv)
        let full = g.full_subgroup();
        let b = BurnsideElement::generator(
            Irreducible::new(full.clone(), 1, g.zero(), Character::trivial(&full)).unwrap(),
        );
        let d = saito_dual(&b, &p).unwrap();
        let (irr, _) = d.coeffs().iter().next().unwrap();
        assert!(irr.isotropy().is_trivial());
        assert!(irr.hbar().is_zero());
        assert!(irr.alpha().is_trivial());
    }

    #[test]
    fn saito_dual_is_involutive() {
        for e in [vec![vec![2]], vec![vec![4]], vec![vec![2, 0], vec![0, 2]], vec![vec![2, 1], vec![0, 3]]] {
            let p = PairedGroups::from_matrix(IntMat::from_rows(e), 100).unwrap();
            let back = p.swapped();
            for irr in b1_generators(p.g()) {
                let a = BurnsideElement::generator(irr);
                let round = saito_dual(&saito_dual(&a, &p).unwrap(), &back).unwrap();
                assert_eq!(round, a);
            }
        }
    }

    #[test]
    fn saito_dual_rejects_higher_k() {
        let p = PairedGroups::from_matrix(IntMat::from_rows(vec![vec![2]]), 100).unwrap();
        let triv = p.g().trivial_subgroup();
        let a = BurnsideElement::generator(
            Irreducible::new(triv.clone(), 2, p.g().zero(), Character::trivial(&triv)).unwrap(),
        );
        assert!(matches!(saito_dual(&a, &p), Err(Error::NotInB1(2))));
    }

    #[test]
    fn fixed_points_of_a_free_cycle() {
        let g = grp(1, &["(1/4)"]);
        let triv = g.trivial_subgroup();
        let a = BurnsideElement::generator(
            Irreducible::new(triv.clone(), 1, el("(1/4)"), Character::trivial(&triv)).unwrap(),
        );
        // g = e, m = 1: a 4-cycle has no fixed points
        assert_eq!(fixed_point_data(&a, &g.zero(), 1).unwrap().total(), 0);
        // g = 3/4, m = 1: g·h = id, all 4 points fixed
        let d = fixed_point_data(&a, &el("(3/4)"), 1).unwrap();
        assert_eq!(d.total(), 4);
        assert_eq!(d.terms().len(), 1);
        let (term, c) = d.terms().iter().next().unwrap();
        assert_eq!(*c, 4);
        assert!(term.stabilizer().is_trivial());
        // g = e, m = 4: everything fixed
        assert_eq!(fixed_point_data(&a, &g.zero(), 4).unwrap().total(), 4);
    }

    #[test]
    fn fixed_points_agree_between_concrete_and_canonical() {
        let g = grp(1, &["(1/4)"]);
        let h2 = g.subgroup(&[el("(1/2)")]).unwrap();
        let alpha = character_group(&h2).pop().unwrap();
        let irr = Irreducible::new(h2, 2, el("(1/4)"), alpha).unwrap();
        let s = ConcreteEnhancedSet::materialize(&irr);
        let a = s.canonicalize().unwrap();
        for g_el in g.elements() {
            for m in 1..=8 {
                let lhs = fixed_point_data_concrete(&s, g_el, m).unwrap();
                let rhs = fixed_point_data(&a, g_el, m).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn filtration_levels() {
        let g = grp(1, &["(1/2)"]);
        let full = g.full_subgroup();
        let triv = g.trivial_subgroup();
        let one = BurnsideElement::generator(
            Irreducible::new(full.clone(), 1, g.zero(), Character::trivial(&full)).unwrap(),
        );
        assert_eq!(filtration_level(&one), Some(0));
        let k3 = BurnsideElement::generator(
            Irreducible::new(triv.clone(), 3, g.zero(), Character::trivial(&triv)).unwrap(),
        );
        assert_eq!(filtration_level(&k3), Some(2));
        assert_eq!(filtration_level(&one.add(&k3)), Some(0));
        assert_eq!(filtration_level(&BurnsideElement::zero(g)), None);
    }
}
