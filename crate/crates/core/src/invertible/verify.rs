//! Executable verification of the duality statements for a given
//! invertible polynomial: the grading/pairing identity, both duality
//! theorems, and the zeta-function corollary.

use crate::abelian::{minimal_generators, GroupElement, Subgroup};
use crate::burnside::{b1_generators, reduce, saito_dual, BurnsideElement};
use crate::error::Result;
use crate::invertible::parse::InvertiblePolynomial;
use crate::invertible::symmetry::{
    build_dual_pair, reduced_enhanced_euler, reduced_orbifold_zeta, DualPair,
};
use crate::report::Check;
use crate::zeta::orbifold_zeta;
use std::str::FromStr;

/// The four verifiable duality statements.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Theorem {
    PropDual,
    Thm1,
    Thm2,
    Corollary,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [
        Theorem::PropDual,
        Theorem::Thm1,
        Theorem::Thm2,
        Theorem::Corollary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::PropDual => "prop_dual",
            Theorem::Thm1 => "thm1",
            Theorem::Thm2 => "thm2",
            Theorem::Corollary => "corollary",
        }
    }
}

impl FromStr for Theorem {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Theorem> {
        match s {
            "prop_dual" => Ok(Theorem::PropDual),
            "thm1" => Ok(Theorem::Thm1),
            "thm2" => Ok(Theorem::Thm2),
            "corollary" => Ok(Theorem::Corollary),
            other => Err(crate::Error::parse(
                0,
                format!("unknown theorem {other:?}; expected prop_dual, thm1, thm2 or corollary"),
            )),
        }
    }
}

fn subgroup_label(h: &Subgroup) -> String {
    if h.is_trivial() {
        return "<0>".into();
    }
    let gens: Vec<String> = minimal_generators(h.elements())
        .iter()
        .map(GroupElement::to_string)
        .collect();
    format!("<{}>", gens.join(", "))
}

fn values_row(values: impl Iterator<Item = crate::abelian::QZ>) -> String {
    values.map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

/// Run one theorem's checks for `p`. `g` restricts the subgroup-quantified
/// statements (thm1, corollary) to a single subgroup of `G_f`; the default
/// iterates over the full subgroup lattice.
pub fn verify_duality(
    p: &InvertiblePolynomial,
    which: Theorem,
    g: Option<&Subgroup>,
    max_order: u64,
) -> Result<Vec<Check>> {
    let pair = build_dual_pair(p, max_order)?;
    match which {
        Theorem::PropDual => prop_dual_checks(&pair),
        Theorem::Thm1 => thm1_checks(&pair, g),
        Theorem::Thm2 => thm2_checks(p, &pair),
        Theorem::Corollary => corollary_checks(p, &pair, g),
    }
}

fn prop_dual_checks(pair: &DualPair) -> Result<Vec<Check>> {
    let p = pair.pairing();
    let lhs1 = values_row(p.gstar().elements().iter().map(|l| p.pair(pair.f().hf(), l)));
    let rhs1 = values_row(p.gstar().elements().iter().map(|l| pair.ft().alphaf().eval(l)));
    let lhs2 = values_row(p.g().elements().iter().map(|m| p.pair(m, pair.ft().hf())));
    let rhs2 = values_row(p.g().elements().iter().map(|m| pair.f().alphaf().eval(m)));
    Ok(vec![
        Check::compare("prop_dual: <h_f, .> = alpha_f~ on G_f~", &lhs1, &rhs1),
        Check::compare("prop_dual: <., h_f~> = alpha_f on G_f", &lhs2, &rhs2),
    ])
}

fn thm2_checks(p: &InvertiblePolynomial, pair: &DualPair) -> Result<Vec<Check>> {
    let lhs = reduced_enhanced_euler(pair.ft())?;
    let dual = saito_dual(&reduced_enhanced_euler(pair.f())?, pair.pairing())?;
    let sign = if p.n() % 2 == 0 { 1 } else { -1 };
    let rhs = dual.scale(sign);
    Ok(vec![Check::compare(
        format!("thm2: chi~(f~) = (-1)^{} D(chi~(f))", p.n()),
        &lhs,
        &rhs,
    )])
}

fn subgroups_under_test(pair: &DualPair, g: Option<&Subgroup>) -> Vec<Subgroup> {
    match g {
        Some(sub) => vec![sub.clone()],
        None => pair.pairing().g().subgroups(),
    }
}

fn thm1_checks(pair: &DualPair, g: Option<&Subgroup>) -> Result<Vec<Check>> {
    let pairing = pair.pairing();
    let mut elements: Vec<(String, BurnsideElement)> = b1_generators(pairing.g())
        .into_iter()
        .map(|irr| (irr.to_string(), BurnsideElement::generator(irr)))
        .collect();
    elements.push((
        "reduced enhanced Euler characteristic".into(),
        reduced_enhanced_euler(pair.f())?,
    ));

    let mut checks = Vec::new();
    for sub in subgroups_under_test(pair, g) {
        let dual_sub = pairing.dual_subgroup(&sub)?;
        let name = format!(
            "thm1: G = {} ({} elements tested)",
            subgroup_label(&sub),
            elements.len()
        );
        let mut verdict = None;
        let mut shown = (String::new(), String::new());
        for (label, x) in &elements {
            let lhs = orbifold_zeta(&reduce(x, &sub)?);
            let rhs = orbifold_zeta(&reduce(&saito_dual(x, pairing)?, &dual_sub)?);
            if lhs != rhs {
                verdict = Some(Check::fail(
                    format!("{name}; counterexample {label}"),
                    lhs.to_string(),
                    rhs.to_string(),
                ));
                break;
            }
            shown = (lhs.to_string(), rhs.to_string());
        }
        checks.push(verdict.unwrap_or_else(|| Check::pass(name, shown.0, shown.1)));
    }
    Ok(checks)
}

fn corollary_checks(
    p: &InvertiblePolynomial,
    pair: &DualPair,
    g: Option<&Subgroup>,
) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for sub in subgroups_under_test(pair, g) {
        let dual_sub = pair.pairing().dual_subgroup(&sub)?;
        let lhs = reduced_orbifold_zeta(pair.ft(), &dual_sub)?;
        let rhs_base = reduced_orbifold_zeta(pair.f(), &sub)?;
        let rhs = if p.n() % 2 == 0 {
            rhs_base
        } else {
            rhs_base.pow(-1)
        };
        checks.push(Check::compare(
            format!(
                "corollary: G = {}, G~ = {}",
                subgroup_label(&sub),
                subgroup_label(&dual_sub)
            ),
            &lhs,
            &rhs,
        ));
    }
    Ok(checks)
}

/// Convenience wrapper: run every theorem, concatenating the checks.
pub fn verify_all(p: &InvertiblePolynomial, max_order: u64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for which in Theorem::ALL {
        checks.extend(verify_duality(p, which, None, max_order)?);
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invertible::parse::parse_polynomial;
    use crate::report::all_passed;

    fn verify(text: &str, which: Theorem) -> Vec<Check> {
        verify_duality(&parse_polynomial(text).unwrap(), which, None, 5000).unwrap()
    }

    #[test]
    fn fermat2_passes_everything() {
        let p = parse_polynomial("x^2").unwrap();
        let checks = verify_all(&p, 5000).unwrap();
        assert!(all_passed(&checks), "{checks:#?}");
    }

    #[test]
    fn thm2_chain_pair() {
        // x^2*y + y^3 and its transpose x^2 + x*y^3
        let checks = verify("x^2*y + y^3", Theorem::Thm2);
        assert_eq!(checks.len(), 1);
        assert!(all_passed(&checks), "{checks:#?}");
    }

    #[test]
    fn corollary_chain_all_subgroups() {
        let checks = verify("x^2*y + y^3", Theorem::Corollary);
        assert_eq!(checks.len(), 4, "Z/6 has four subgroups");
        assert!(all_passed(&checks), "{checks:#?}");
    }

    #[test]
    fn thm1_fermat33() {
        let checks = verify("x^3 + y^3", Theorem::Thm1);
        assert!(all_passed(&checks), "{checks:#?}");
        assert_eq!(checks.len(), 6, "Z/3 x Z/3 has six subgroups");
    }

    #[test]
    fn thm1_single_subgroup() {
        let p = parse_polynomial("x^2*y + y^3").unwrap();
        let pair = build_dual_pair(&p, 5000).unwrap();
        let g = pair.pairing().g().trivial_subgroup();
        let checks = verify_duality(&p, Theorem::Thm1, Some(&g), 5000).unwrap();
        assert_eq!(checks.len(), 1);
        assert!(all_passed(&checks), "{checks:#?}");
    }

    #[test]
    fn prop_dual_renders_value_rows() {
        let checks = verify("x^2", Theorem::PropDual);
        assert_eq!(checks.len(), 2);
        assert!(all_passed(&checks));
        assert_eq!(checks[0].lhs, "0, 1/2");
    }

    #[test]
    fn theorem_names_parse() {
        for t in Theorem::ALL {
            assert_eq!(t.name().parse::<Theorem>().unwrap(), t);
        }
        assert!("thm3".parse::<Theorem>().is_err());
    }
}
