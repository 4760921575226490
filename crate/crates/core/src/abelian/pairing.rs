//! The canonical pairing between the symmetry groups of an integer matrix
//! and of its transpose.
//!
//! For a nondegenerate integer matrix `E`, the group `G_E = {r in (Q/Z)^n :
//! E r = 0 mod Z^n}` (generated by the columns of `E^{-1}`) pairs with
//! `G_{E^T}` via `<a, c> = c^T E a mod 1`. This is well defined and
//! nondegenerate, and identifies `G_{E^T}` with the character group of
//! `G_E` — the concrete form of the duality the whole crate runs on.

use crate::abelian::character::Character;
use crate::abelian::element::GroupElement;
use crate::abelian::group::{AmbientGroup, Subgroup};
use crate::abelian::qz::QZ;
use crate::abelian::smith::IntMat;
use crate::error::{Error, Result};
use num_rational::Ratio;
use std::sync::Arc;

pub struct PairedGroups {
    g: Arc<AmbientGroup>,
    gstar: Arc<AmbientGroup>,
    e: IntMat,
}

/// Generators of `{r : M r = 0 mod Z^n}`: the columns of `M^{-1}` mod 1.
pub(crate) fn symmetry_generators(m: &IntMat, det: i128) -> Vec<GroupElement> {
    let adj = m.adjugate();
    let n = m.rows();
    (0..n)
        .map(|j| GroupElement::new((0..n).map(|i| QZ::from_i128(adj[(i, j)], det)).collect()))
        .collect()
}

impl PairedGroups {
    /// Build the symmetry groups of `e` and `e^T` with their pairing.
    pub fn from_matrix(e: IntMat, max_order: u64) -> Result<PairedGroups> {
        assert_eq!(e.rows(), e.cols(), "pairing matrix must be square");
        let det = e.det();
        if det == 0 {
            return Err(Error::Degenerate);
        }
        if det.unsigned_abs() > max_order as u128 {
            return Err(Error::GroupTooLarge { limit: max_order });
        }
        let n = e.rows();
        let g = AmbientGroup::enumerate_closure(n, &symmetry_generators(&e, det), max_order)?;
        let et = e.transpose();
        let gstar = AmbientGroup::enumerate_closure(n, &symmetry_generators(&et, det), max_order)?;
        if g.order() as u128 != det.unsigned_abs() || gstar.order() != g.order() {
            return Err(Error::InternalInconsistency(format!(
                "|G| = {}, |G*| = {}, |det| = {}",
                g.order(),
                gstar.order(),
                det.unsigned_abs()
            )));
        }
        Ok(PairedGroups { g, gstar, e })
    }

    pub fn g(&self) -> &Arc<AmbientGroup> {
        &self.g
    }

    pub fn gstar(&self) -> &Arc<AmbientGroup> {
        &self.gstar
    }

    pub fn matrix(&self) -> &IntMat {
        &self.e
    }

    /// `<a, c> = c^T E a mod 1` for `a` in G, `c` in G*.
    ///
    /// The double sum is accumulated as an exact rational *before* the final
    /// mod-1 reduction; reducing earlier would break well-definedness.
    pub fn pair(&self, a: &GroupElement, c: &GroupElement) -> QZ {
        debug_assert!(self.g.contains(a), "first pairing argument outside G");
        debug_assert!(self.gstar.contains(c), "second pairing argument outside G*");
        let n = self.e.rows();
        let mut acc: Ratio<i128> = Ratio::new(0, 1);
        for i in 0..n {
            for j in 0..n {
                let eij = self.e[(i, j)];
                if eij == 0 {
                    continue;
                }
                let ci = c.coord(i);
                let aj = a.coord(j);
                acc += Ratio::new(
                    eij * ci.num() as i128 * aj.num() as i128,
                    ci.den() as i128 * aj.den() as i128,
                );
            }
        }
        QZ::from_i128(*acc.numer(), *acc.denom())
    }

    /// The same pairing read from the other side: G* becomes the group, G
    /// its character group. `swapped().pair(c, a) == pair(a, c)`.
    pub fn swapped(&self) -> PairedGroups {
        PairedGroups {
            g: self.gstar.clone(),
            gstar: self.g.clone(),
            e: self.e.transpose(),
        }
    }

    fn check_in_g(&self, h: &Subgroup) -> Result<()> {
        if !Arc::ptr_eq(h.parent(), &self.g) && h.parent().elements() != self.g.elements() {
            return Err(Error::DomainMismatch(
                "subgroup does not live in the paired group G".into(),
            ));
        }
        Ok(())
    }

    /// `H~ = {γ in G* : <a, γ> = 0 for all a in H}`.
    pub fn dual_subgroup(&self, h: &Subgroup) -> Result<Subgroup> {
        self.check_in_g(h)?;
        let els: Vec<GroupElement> = self
            .gstar
            .elements()
            .iter()
            .filter(|c| h.elements().iter().all(|a| self.pair(a, c).is_zero()))
            .cloned()
            .collect();
        self.gstar.subgroup(&els)
    }

    /// A representative `γ` of the coset of characters of G extending `α`:
    /// `<h, γ> = α(h)` for all `h` in the domain of `α`. The canonical
    /// choice is the minimal such `γ`; any two differ by dual_subgroup(H).
    pub fn extend_character(&self, alpha: &Character) -> Result<GroupElement> {
        let h = alpha.domain();
        self.check_in_g(h)?;
        self.gstar
            .elements()
            .iter()
            .find(|c| h.elements().iter().all(|a| self.pair(a, c) == alpha.eval(a)))
            .cloned()
            .ok_or(Error::PairingInconsistent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::character::character_group;

    fn el(s: &str) -> GroupElement {
        s.parse().unwrap()
    }

    fn paired(rows: Vec<Vec<i128>>) -> PairedGroups {
        PairedGroups::from_matrix(IntMat::from_rows(rows), 5000).unwrap()
    }

    #[test]
    fn z4_self_pairing() {
        let p = paired(vec![vec![4]]);
        assert_eq!(p.g().order(), 4);
        assert_eq!(p.gstar().order(), 4);
        // pair(r, s) = 4rs mod 1
        assert_eq!(p.pair(&el("(1/4)"), &el("(1/4)")), QZ::new(1, 4));
        assert_eq!(p.pair(&el("(1/2)"), &el("(1/2)")), QZ::ZERO);
        assert_eq!(p.pair(&el("(3/4)"), &el("(1/2)")), QZ::new(1, 2));
    }

    #[test]
    fn dual_subgroup_examples() {
        let p = paired(vec![vec![4]]);
        let g = p.g().clone();
        assert!(p.dual_subgroup(&g.full_subgroup()).unwrap().is_trivial());
        assert!(p.dual_subgroup(&g.trivial_subgroup()).unwrap().is_full());
        let h = g.subgroup(&[el("(1/2)")]).unwrap();
        let dual = p.dual_subgroup(&h).unwrap();
        assert_eq!(dual.elements(), &[el("(0)"), el("(1/2)")]);
        assert_eq!(h.order() * dual.order(), g.order());
    }

    #[test]
    fn duals_across_a_nondiagonal_matrix() {
        let p = paired(vec![vec![2, 1], vec![0, 3]]);
        assert_eq!(p.g().order(), 6);
        assert_eq!(p.gstar().order(), 6);
        // nondegeneracy, both ways
        for a in p.g().elements() {
            if !a.is_zero() {
                assert!(p.gstar().elements().iter().any(|c| !p.pair(a, c).is_zero()));
            }
        }
        for c in p.gstar().elements() {
            if !c.is_zero() {
                assert!(p.g().elements().iter().any(|a| !p.pair(a, c).is_zero()));
            }
        }
        // |H| * |H~| = |G| and double duality, over every subgroup
        let swapped = p.swapped();
        for h in p.g().subgroups() {
            let dual = p.dual_subgroup(&h).unwrap();
            assert_eq!(h.order() * dual.order(), p.g().order());
            let back = swapped.dual_subgroup(&dual).unwrap();
            assert_eq!(back, h);
        }
    }

    #[test]
    fn swapped_pairing_agrees() {
        let p = paired(vec![vec![3, 0], vec![0, 3]]);
        let s = p.swapped();
        for a in p.g().elements() {
            for c in p.gstar().elements() {
                assert_eq!(p.pair(a, c), s.pair(c, a));
            }
        }
    }

    #[test]
    fn extend_character_examples() {
        // trivial character -> identity representative
        let p = paired(vec![vec![4]]);
        let h = p.g().subgroup(&[el("(1/2)")]).unwrap();
        let gamma = p.extend_character(&Character::trivial(&h)).unwrap();
        assert!(gamma.is_zero());

        // Z/2 self-paired, alpha(1/2) = 1/2 -> gamma = (1/2)
        let p = paired(vec![vec![2]]);
        let full = p.g().full_subgroup();
        let alpha = character_group(&full)
            .into_iter()
            .find(|c| c.eval(&el("(1/2)")) == QZ::new(1, 2))
            .unwrap();
        assert_eq!(p.extend_character(&alpha).unwrap(), el("(1/2)"));

        // Fermat x^3 + y^3 pairing, H = first factor
        let p = paired(vec![vec![3, 0], vec![0, 3]]);
        let h = p.g().subgroup(&[el("(1/3, 0)")]).unwrap();
        let alpha = character_group(&h)
            .into_iter()
            .find(|c| c.eval(&el("(1/3, 0)")) == QZ::new(1, 3))
            .unwrap();
        let gamma = p.extend_character(&alpha).unwrap();
        assert_eq!(p.pair(&el("(1/3, 0)"), &gamma), QZ::new(1, 3));
    }

    #[test]
    fn extension_is_exact_on_every_character() {
        let p = paired(vec![vec![2, 1], vec![0, 3]]);
        for h in p.g().subgroups() {
            for alpha in character_group(&h) {
                let gamma = p.extend_character(&alpha).unwrap();
                for a in h.elements() {
                    assert_eq!(p.pair(a, &gamma), alpha.eval(a));
                }
            }
        }
    }

    #[test]
    fn lemma_8_kernel_duality() {
        // dual(Ker α) = <γ> + H~ for every subgroup and character
        for e in [vec![vec![4]], vec![vec![3, 0], vec![0, 3]], vec![vec![2, 1], vec![0, 3]]] {
            let p = paired(e);
            for h in p.g().subgroups() {
                let h_dual = p.dual_subgroup(&h).unwrap();
                for alpha in character_group(&h) {
                    let gamma = p.extend_character(&alpha).unwrap();
                    let lhs = p.dual_subgroup(&alpha.kernel()).unwrap();
                    let rhs = p
                        .gstar()
                        .cyclic_subgroup(&gamma)
                        .unwrap()
                        .sum(&h_dual)
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn degenerate_and_oversized_matrices() {
        assert!(matches!(
            PairedGroups::from_matrix(IntMat::from_rows(vec![vec![1, 1], vec![1, 1]]), 100),
            Err(Error::Degenerate)
        ));
        assert!(matches!(
            PairedGroups::from_matrix(IntMat::from_rows(vec![vec![7]]), 5),
            Err(Error::GroupTooLarge { limit: 5 })
        ));
    }
}
