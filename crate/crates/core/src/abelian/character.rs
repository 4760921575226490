//! Characters of finite abelian groups, stored as full value tables.
//!
//! A character stands for a homomorphism `H -> C^*`; the table holds the
//! exponents, so the complex value at `g` is `e[values(g)]`.

use crate::abelian::element::GroupElement;
use crate::abelian::group::{minimal_generators, Subgroup};
use crate::abelian::qz::QZ;
use crate::error::{Error, Result};
use num_integer::Integer;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone)]
pub struct Character {
    domain: Subgroup,
    values: BTreeMap<GroupElement, QZ>,
}

impl Character {
    pub fn trivial(domain: &Subgroup) -> Character {
        let values = domain
            .elements()
            .iter()
            .map(|g| (g.clone(), QZ::ZERO))
            .collect();
        Character {
            domain: domain.clone(),
            values,
        }
    }

    /// Build from an explicit table, validating the homomorphism property.
    pub fn from_values(domain: &Subgroup, values: BTreeMap<GroupElement, QZ>) -> Result<Character> {
        if values.len() != domain.elements().len()
            || !domain.elements().iter().all(|g| values.contains_key(g))
        {
            return Err(Error::DomainMismatch(
                "character table does not match its domain".into(),
            ));
        }
        let chi = Character {
            domain: domain.clone(),
            values,
        };
        if !chi.eval(&GroupElement::zero(domain.dim())).is_zero() {
            return Err(Error::DomainMismatch("character is nonzero at 0".into()));
        }
        // chi(g + b) = chi(g) + chi(b) for generators b and all g implies the
        // full homomorphism property by induction on words in the generators.
        for b in minimal_generators(domain.elements()) {
            let vb = chi.eval(&b);
            for g in domain.elements() {
                if chi.eval(&g.add(&b)) != chi.eval(g).add(&vb) {
                    return Err(Error::DomainMismatch(
                        "character table is not a homomorphism".into(),
                    ));
                }
            }
        }
        Ok(chi)
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn eval(&self, g: &GroupElement) -> QZ {
        *self
            .values
            .get(g)
            .unwrap_or_else(|| panic!("{g} is outside the character's domain"))
    }

    pub fn try_eval(&self, g: &GroupElement) -> Option<QZ> {
        self.values.get(g).copied()
    }

    pub fn is_trivial(&self) -> bool {
        self.values.values().all(QZ::is_zero)
    }

    /// Values listed in the canonical order of the domain's elements.
    pub fn values_in_order(&self) -> Vec<QZ> {
        self.domain.elements().iter().map(|g| self.eval(g)).collect()
    }

    /// Pointwise sum (the product of the underlying C^*-valued characters).
    pub fn add(&self, other: &Character) -> Result<Character> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch("adding characters of different domains".into()));
        }
        let values = self
            .values
            .iter()
            .map(|(g, v)| (g.clone(), v.add(&other.eval(g))))
            .collect();
        Ok(Character {
            domain: self.domain.clone(),
            values,
        })
    }

    pub fn restrict(&self, sub: &Subgroup) -> Result<Character> {
        if !sub.is_subgroup_of(&self.domain) {
            return Err(Error::DomainMismatch(
                "restriction target is not a subgroup of the domain".into(),
            ));
        }
        let values = sub
            .elements()
            .iter()
            .map(|g| (g.clone(), self.eval(g)))
            .collect();
        Ok(Character {
            domain: sub.clone(),
            values,
        })
    }

    /// `Ker α = {g in H : α(g) = 0}`.
    pub fn kernel(&self) -> Subgroup {
        let els: Vec<GroupElement> = self
            .domain
            .elements()
            .iter()
            .filter(|g| self.eval(g).is_zero())
            .cloned()
            .collect();
        self.domain
            .parent()
            .subgroup_from_elements(&els)
            .expect("a character kernel is a subgroup")
    }

    /// Order of the image subgroup of C^*, i.e. `|H| / |Ker α|`.
    pub fn image_order(&self) -> u64 {
        self.values
            .values()
            .fold(1u64, |l, v| l.lcm(&v.order()))
    }
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.values == other.values
    }
}

impl Eq for Character {}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values_in_order().iter().map(QZ::to_string).collect();
        write!(f, "Character[{}]", vals.join(", "))
    }
}

/// All `|H|` characters of `H`, in a deterministic order (lexicographic over
/// the exponent tuples on the invariant-factor basis).
pub fn character_group(h: &Subgroup) -> Vec<Character> {
    let basis = h.basis();
    let n = h.dim();

    // Basis coordinates of every element of H.
    let mut combos: Vec<(GroupElement, Vec<u64>)> = vec![(GroupElement::zero(n), Vec::new())];
    for (b, d) in &basis {
        combos = combos
            .into_iter()
            .flat_map(|(x, c)| {
                (0..*d).map(move |k| {
                    let mut c2 = c.clone();
                    c2.push(k);
                    (x.add(&b.scale(k as i64)), c2)
                })
            })
            .collect();
    }
    let coords: BTreeMap<GroupElement, Vec<u64>> = combos.into_iter().collect();
    debug_assert_eq!(coords.len() as u64, h.order());

    let ds: Vec<u64> = basis.iter().map(|(_, d)| *d).collect();
    let mut tuples: Vec<Vec<u64>> = vec![Vec::new()];
    for d in &ds {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..*d).map(move |k| {
                    let mut t2 = t.clone();
                    t2.push(k);
                    t2
                })
            })
            .collect();
    }

    tuples
        .into_iter()
        .map(|t| {
            let values = coords
                .iter()
                .map(|(g, c)| {
                    let mut v = QZ::ZERO;
                    for i in 0..ds.len() {
                        v = v.add(&QZ::new((t[i] * c[i]) as i64, ds[i] as i64));
                    }
                    (g.clone(), v)
                })
                .collect();
            Character {
                domain: h.clone(),
                values,
            }
        })
        .collect()
}
