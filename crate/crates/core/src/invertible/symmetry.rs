//! Symmetry groups of invertible polynomials and the duality pipeline: the
//! enhanced equivariant Euler characteristic of the Milnor fibre, geometric
//! Lefschetz numbers, and reduced orbifold zeta functions.

use crate::abelian::{AmbientGroup, Character, GroupElement, IntMat, PairedGroups, Subgroup, QZ};
use crate::burnside::{reduce, BurnsideElement, Irreducible};
use crate::error::{Error, Result};
use crate::invertible::parse::InvertiblePolynomial;
use crate::zeta::{character_orbit_zeta, orbifold_zeta, IntegerZeta};
use num_rational::Ratio;
use num_traits::Signed;
use std::collections::BTreeMap;
use std::sync::Arc;

/// The diagonal symmetry group of an invertible polynomial together with
/// its weights, exponential grading operator and age character.
pub struct SymmetryData {
    poly: InvertiblePolynomial,
    gf: Arc<AmbientGroup>,
    q: Vec<Ratio<i128>>,
    hf: GroupElement,
    alphaf: Character,
    warnings: Vec<String>,
}

pub fn symmetry_data(p: &InvertiblePolynomial, max_order: u64) -> Result<SymmetryData> {
    let e = p.matrix();
    let n = p.n();
    let det = e.det();
    debug_assert_ne!(det, 0);
    if det.unsigned_abs() > max_order as u128 {
        return Err(Error::GroupTooLarge { limit: max_order });
    }

    // weights: q = E^{-1} (1,...,1)^T, kept as honest rationals
    let adj = e.adjugate();
    let q: Vec<Ratio<i128>> = (0..n)
        .map(|i| Ratio::new((0..n).map(|k| adj[(i, k)]).sum::<i128>(), det))
        .collect();

    let gens = crate::abelian::pairing::symmetry_generators(e, det);
    let gf = AmbientGroup::enumerate_closure(n, &gens, max_order)?;
    if gf.order() as u128 != det.unsigned_abs() {
        return Err(Error::InternalInconsistency(format!(
            "|G_f| = {} but |det E| = {}",
            gf.order(),
            det.unsigned_abs()
        )));
    }

    let hf = GroupElement::new(
        q.iter()
            .map(|qi| QZ::from_i128(*qi.numer(), *qi.denom()))
            .collect(),
    );
    if !gf.contains(&hf) {
        return Err(Error::InternalInconsistency(
            "exponential grading operator fell outside G_f".into(),
        ));
    }

    let full = gf.full_subgroup();
    let values: BTreeMap<GroupElement, QZ> = full
        .elements()
        .iter()
        .map(|g| {
            let mut s = QZ::ZERO;
            for j in 0..n {
                s = s.add(&g.coord(j));
            }
            (g.clone(), s)
        })
        .collect();
    let alphaf = Character::from_values(&full, values)?;

    let mut warnings = Vec::new();
    for (i, qi) in q.iter().enumerate() {
        if !qi.is_positive() || *qi >= Ratio::new(1, 1) {
            warnings.push(format!(
                "weight q_{} = {} is outside (0, 1); duality algebra still applies",
                i + 1,
                qi
            ));
        }
    }
    if p.coefficients().iter().any(|c| *c != Ratio::new(1, 1)) {
        warnings.push("coefficients differ from 1; they do not affect any computation".into());
    }

    Ok(SymmetryData {
        poly: p.clone(),
        gf,
        q,
        hf,
        alphaf,
        warnings,
    })
}

impl SymmetryData {
    pub fn poly(&self) -> &InvertiblePolynomial {
        &self.poly
    }

    pub fn group(&self) -> &Arc<AmbientGroup> {
        &self.gf
    }

    pub fn det(&self) -> i128 {
        self.poly.matrix().det()
    }

    pub fn weights(&self) -> &[Ratio<i128>] {
        &self.q
    }

    pub fn hf(&self) -> &GroupElement {
        &self.hf
    }

    pub fn alphaf(&self) -> &Character {
        &self.alphaf
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

/// Both symmetry groups of a transpose pair, glued by the pairing
/// `<μ, λ> = λ E μ mod 1` that identifies `G_{f~}` with the character
/// group of `G_f`. Construction asserts the grading/pairing identity:
/// `α_{f~} = <h_f, ·>` and `α_f = <·, h_{f~}>`.
pub struct DualPair {
    f: SymmetryData,
    ft: SymmetryData,
    pairing: PairedGroups,
}

pub fn build_dual_pair(p: &InvertiblePolynomial, max_order: u64) -> Result<DualPair> {
    let f = symmetry_data(p, max_order)?;
    let ft = symmetry_data(&p.transpose(), max_order)?;
    let pairing = PairedGroups::from_matrix(p.matrix().clone(), max_order)?;
    if pairing.g().elements() != f.gf.elements() || pairing.gstar().elements() != ft.gf.elements() {
        return Err(Error::InternalInconsistency(
            "pairing groups disagree with the symmetry groups".into(),
        ));
    }
    for lambda in pairing.gstar().elements() {
        if pairing.pair(&f.hf, lambda) != ft.alphaf.eval(lambda) {
            return Err(Error::InternalInconsistency(format!(
                "pairing identity failed: <h_f, {lambda}> != α_f~({lambda})"
            )));
        }
    }
    for mu in pairing.g().elements() {
        if pairing.pair(mu, &ft.hf) != f.alphaf.eval(mu) {
            return Err(Error::InternalInconsistency(format!(
                "pairing identity failed: <{mu}, h_f~> != α_f({mu})"
            )));
        }
    }
    Ok(DualPair { f, ft, pairing })
}

impl DualPair {
    pub fn f(&self) -> &SymmetryData {
        &self.f
    }

    pub fn ft(&self) -> &SymmetryData {
        &self.ft
    }

    pub fn pairing(&self) -> &PairedGroups {
        &self.pairing
    }
}

/// The strata of the Milnor fibre by vanishing coordinates: masks `I` of
/// columns with exactly `|I|` monomials supported inside `I`, paired with
/// `|det E_I|` of the square submatrix on those rows and columns.
fn strata(e: &IntMat) -> Vec<(u32, u128)> {
    let n = e.rows();
    assert!(n < 31, "stratum enumeration uses u32 masks");
    let row_masks: Vec<u32> = (0..n)
        .map(|i| (0..n).filter(|&j| e[(i, j)] != 0).fold(0, |m, j| m | 1 << j))
        .collect();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let rows: Vec<usize> = (0..n).filter(|&i| row_masks[i] & !mask == 0).collect();
        if rows.len() != mask.count_ones() as usize {
            continue;
        }
        let cols: Vec<usize> = (0..n).filter(|&j| mask & 1 << j != 0).collect();
        let sub = IntMat::from_rows(
            rows.iter()
                .map(|&i| cols.iter().map(|&j| e[(i, j)]).collect())
                .collect(),
        );
        out.push((mask, sub.det().unsigned_abs()));
    }
    out
}

/// The enhanced equivariant Euler characteristic
/// `χ̂^{G_f}(V_f, h_f) ∈ B̂₁(G_f)` as a sum of strata contributions
/// `m_I · [X_{K_I, 1, [h_f], α_f|_{K_I}}]`.
pub fn enhanced_euler(s: &SymmetryData) -> Result<BurnsideElement> {
    let n = s.poly.n();
    let order = s.gf.order() as u128;
    let mut acc = BurnsideElement::zero(s.gf.clone());
    for (mask, det_abs) in strata(s.poly.matrix()) {
        // K_I: the kernel of the G_f-action on the stratum torus
        let fixed: Vec<GroupElement> = s
            .gf
            .elements()
            .iter()
            .filter(|g| (0..n).all(|j| mask & 1 << j == 0 || g.coord(j).is_zero()))
            .cloned()
            .collect();
        let k_sub = s.gf.subgroup_from_elements(&fixed)?;
        let num = det_abs * k_sub.order() as u128;
        if num % order != 0 {
            return Err(Error::InternalInconsistency(format!(
                "stratum multiplicity {det_abs}*{}/{} is not an integer",
                k_sub.order(),
                order
            )));
        }
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        let m_i = sign * (num / order) as i64;
        if m_i == 0 {
            continue;
        }
        let alpha = s.alphaf.restrict(&k_sub)?;
        let irr = Irreducible::new(k_sub, 1, s.hf.clone(), alpha)?;
        acc = acc.add(&BurnsideElement::generator(irr).scale(m_i));
    }
    Ok(acc)
}

/// The reduced characteristic `χ̂^{G_f}(V_f, h_f) - [(pt, id, α_f)]`.
pub fn reduced_enhanced_euler(s: &SymmetryData) -> Result<BurnsideElement> {
    let full = s.gf.full_subgroup();
    let point = Irreducible::new(full, 1, s.gf.zero(), s.alphaf.clone())?;
    Ok(enhanced_euler(s)?.sub(&BurnsideElement::generator(point)))
}

/// The Euler characteristic of the fixed locus of `g · h_f^m` on the Milnor
/// fibre: the coordinates `J` frozen by `g + m·h_f` cut out `V_f ∩ C^J`,
/// whose strata contribute `(-1)^{|I|-1} |det E_I|`.
pub fn geometric_lefschetz(s: &SymmetryData, g: &GroupElement, m: u64) -> Result<i64> {
    if !s.gf.contains(g) {
        return Err(Error::DomainMismatch(
            "Lefschetz argument outside G_f".into(),
        ));
    }
    let shifted = g.add(&s.hf.scale(m as i64));
    let j_mask: u32 = (0..s.poly.n())
        .filter(|&j| shifted.coord(j).is_zero())
        .fold(0, |acc, j| acc | 1 << j);
    let mut chi: i64 = 0;
    for (mask, det_abs) in strata(s.poly.matrix()) {
        if mask & !j_mask != 0 {
            continue;
        }
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        chi += sign * det_abs as i64;
    }
    Ok(chi)
}

/// The reduced orbifold zeta function
/// `ζ^orb_{G,V_f,h_f}(t) / ∏_{g∈G} (1-t)_{α_f(g)}` for a subgroup
/// `G ⊆ G_f`, computed through Proposition 6 on `reduce(χ̂, G)`.
pub fn reduced_orbifold_zeta(s: &SymmetryData, g_sub: &Subgroup) -> Result<IntegerZeta> {
    let numerator = orbifold_zeta(&reduce(&enhanced_euler(s)?, g_sub)?);
    let denominator = character_orbit_zeta(&s.alphaf.restrict(g_sub)?);
    Ok(numerator.div(&denominator))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invertible::parse::parse_polynomial;

    fn sym(text: &str) -> SymmetryData {
        symmetry_data(&parse_polynomial(text).unwrap(), 5000).unwrap()
    }

    fn r(n: i128, d: i128) -> Ratio<i128> {
        Ratio::new(n, d)
    }

    #[test]
    fn fermat2_symmetries() {
        let s = sym("x^2");
        assert_eq!(s.det(), 2);
        assert_eq!(s.weights(), [r(1, 2)]);
        assert_eq!(s.hf(), &"(1/2)".parse().unwrap());
        assert_eq!(s.group().order(), 2);
        assert_eq!(s.alphaf().eval(&"(1/2)".parse().unwrap()), QZ::new(1, 2));
        assert!(s.warnings().is_empty());
    }

    #[test]
    fn chain_symmetries() {
        let s = sym("x^2*y + y^3");
        assert_eq!(s.det(), 6);
        assert_eq!(s.weights(), [r(1, 3), r(1, 3)]);
        assert_eq!(s.hf(), &"(1/3, 1/3)".parse().unwrap());
        assert_eq!(s.group().order(), 6);
        assert_eq!(s.group().cyclic_type(), &[6]);
    }

    #[test]
    fn fermat33_symmetries() {
        let s = sym("x^3 + y^3");
        assert_eq!(s.group().order(), 9);
        assert_eq!(s.group().cyclic_type(), &[3, 3]);
        assert_eq!(s.weights(), [r(1, 3), r(1, 3)]);
    }

    #[test]
    fn weight_warnings() {
        // x^2 + x*y: q = (1/2, 1/2) fine; x + x*y^2 gives q_1 = 1
        let s = sym("x + x*y^2");
        assert!(!s.warnings().is_empty());
    }

    #[test]
    fn dual_pair_assertions_hold_on_examples() {
        for text in ["x^2", "x^3 + y^3", "x^2*y + y^3", "x^2*y + y^2*z + z^3"] {
            let p = parse_polynomial(text).unwrap();
            let pair = build_dual_pair(&p, 5000).unwrap();
            assert_eq!(pair.f().group().order(), pair.ft().group().order());
        }
    }

    #[test]
    fn enhanced_euler_fermat2() {
        let s = sym("x^2");
        let chi = enhanced_euler(&s).unwrap();
        let triv = s.group().trivial_subgroup();
        let expected = BurnsideElement::generator(
            Irreducible::new(
                triv.clone(),
                1,
                "(1/2)".parse().unwrap(),
                Character::trivial(&triv),
            )
            .unwrap(),
        );
        assert_eq!(chi, expected);
        assert_eq!(chi.augmentation(), 2);
    }

    #[test]
    fn enhanced_euler_fermat33() {
        let s = sym("x^3 + y^3");
        let chi = enhanced_euler(&s).unwrap();
        // m_{1} = m_{2} = +1 on Z/3 kernels, m_{12} = -1 on the trivial kernel
        assert_eq!(chi.coeffs().len(), 3);
        let coeffs: Vec<i64> = chi.coeffs().values().copied().collect();
        let orders: Vec<u64> = chi.coeffs().keys().map(|i| i.isotropy().order()).collect();
        assert_eq!(coeffs, [-1, 1, 1]);
        assert_eq!(orders, [1, 3, 3]);
        assert_eq!(chi.augmentation(), -3); // 3 + 3 - 9 = 1 + (-1)^{n-1} μ, μ = 4
        for irr in chi.coeffs().keys() {
            assert_eq!(irr.k(), 1);
        }
    }

    #[test]
    fn reduced_euler_of_smooth_point_vanishes() {
        let s = sym("x");
        assert!(reduced_enhanced_euler(&s).unwrap().is_zero());
    }

    #[test]
    fn milnor_oracle_on_small_family() {
        // augmentation = 1 + (-1)^{n-1} ∏ (1/q_i - 1)
        for text in ["x^2", "x^5", "x^2 + y^3", "x^3 + y^3", "x^2*y + y^3"] {
            let s = sym(text);
            let mu: Ratio<i128> = s
                .weights()
                .iter()
                .map(|q| q.recip() - Ratio::new(1, 1))
                .product();
            assert!(mu.is_integer());
            let sign = if s.poly().n() % 2 == 1 { 1 } else { -1 };
            let expected = 1 + sign * mu.to_integer() as i64;
            assert_eq!(enhanced_euler(&s).unwrap().augmentation(), expected, "{text}");
        }
    }

    #[test]
    fn lefschetz_examples() {
        let s = sym("x^3 + y^3");
        let e = s.group().zero();
        assert_eq!(geometric_lefschetz(&s, &e, 1).unwrap(), 0);
        assert_eq!(geometric_lefschetz(&s, &e, 3).unwrap(), -3);

        let s2 = sym("x^2");
        assert_eq!(
            geometric_lefschetz(&s2, &"(1/2)".parse().unwrap(), 1).unwrap(),
            2
        );
        assert!(geometric_lefschetz(&s2, &"(1/3)".parse().unwrap(), 1).is_err());
    }

    #[test]
    fn lefschetz_agrees_with_fixed_point_totals() {
        for text in ["x^2", "x^3 + y^3", "x^2*y + y^3"] {
            let s = sym(text);
            let chi = enhanced_euler(&s).unwrap();
            let hf_order = s.hf().order();
            for g in s.group().elements() {
                for m in 1..=hf_order {
                    let total = crate::burnside::fixed_point_data(&chi, g, m).unwrap().total();
                    assert_eq!(
                        total,
                        geometric_lefschetz(&s, g, m).unwrap(),
                        "{text} g={g} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn reduced_zeta_fermat2() {
        let s = sym("x^2");
        let z = reduced_orbifold_zeta(&s, &s.group().trivial_subgroup()).unwrap();
        assert_eq!(z.to_string(), "(1-t^2)^1*(1-t)^-1");
        // full subgroup flips the quotient
        let z_full = reduced_orbifold_zeta(&s, &s.group().full_subgroup()).unwrap();
        assert_eq!(z_full.to_string(), "(1-t^2)^-1*(1-t)^1");
    }

    #[test]
    fn reduced_zeta_smooth_is_one() {
        let s = sym("x");
        let z = reduced_orbifold_zeta(&s, &s.group().trivial_subgroup()).unwrap();
        assert!(z.is_one());
        assert_eq!(z.to_string(), "1");
    }

    #[test]
    fn reduced_zeta_classical_monodromy() {
        // f = x^3 + y^3 with trivial G: the monodromy h_f generates a free
        // Z/3-action on the fibre (χ = -3), so ζ(t) = (1-t^3)^{χ/3} =
        // (1-t^3)^-1; the reduction divides one more (1-t).
        let s = sym("x^3 + y^3");
        let z = reduced_orbifold_zeta(&s, &s.group().trivial_subgroup()).unwrap();
        assert_eq!(z.to_string(), "(1-t^3)^-1*(1-t)^-1");
        // series of 1/((1-t^3)(1-t)): 1 + t + t^2 + 2t^3 + ...
        assert_eq!(z.series(3), vec![1, 1, 1, 2]);
    }
}
