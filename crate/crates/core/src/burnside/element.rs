//! Elements of the enhanced Burnside ring: integer combinations of
//! irreducibles with the Grothendieck-group subtraction carried in the
//! coefficients.

use crate::abelian::{AmbientGroup, Character};
use crate::burnside::concrete::ConcreteEnhancedSet;
use crate::burnside::irreducible::Irreducible;
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone)]
pub struct BurnsideElement {
    group: Arc<AmbientGroup>,
    coeffs: BTreeMap<Irreducible, i64>,
}

impl BurnsideElement {
    pub fn zero(group: Arc<AmbientGroup>) -> BurnsideElement {
        BurnsideElement {
            group,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn generator(irr: Irreducible) -> BurnsideElement {
        let group = irr.group().clone();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(irr, 1);
        BurnsideElement { group, coeffs }
    }

    /// The multiplicative unit: the one-point set `[G, 1, e, trivial]`.
    pub fn one(group: Arc<AmbientGroup>) -> BurnsideElement {
        let full = group.full_subgroup();
        let alpha = Character::trivial(&full);
        let irr = Irreducible::new(full, 1, group.zero(), alpha).expect("unit data is valid");
        Self::generator(irr)
    }

    pub fn from_terms(
        group: Arc<AmbientGroup>,
        terms: impl IntoIterator<Item = (Irreducible, i64)>,
    ) -> Result<BurnsideElement> {
        let mut out = Self::zero(group);
        for (irr, c) in terms {
            if irr.group().elements() != out.group.elements() {
                return Err(Error::DomainMismatch(
                    "irreducible belongs to a different group".into(),
                ));
            }
            out.add_assign(irr, c);
        }
        Ok(out)
    }

    pub fn group(&self) -> &Arc<AmbientGroup> {
        &self.group
    }

    pub fn coeffs(&self) -> &BTreeMap<Irreducible, i64> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Every stored irreducible has k = 1.
    pub fn is_b1(&self) -> bool {
        self.coeffs.keys().all(Irreducible::is_b1)
    }

    fn same_group(&self, other: &BurnsideElement) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || self.group.elements() == other.group.elements()
    }

    fn add_assign(&mut self, irr: Irreducible, c: i64) {
        use std::collections::btree_map::Entry;
        if c == 0 {
            return;
        }
        match self.coeffs.entry(irr) {
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

    pub fn add(&self, other: &BurnsideElement) -> BurnsideElement {
        assert!(self.same_group(other), "Burnside addition across groups");
        let mut out = self.clone();
        for (irr, c) in &other.coeffs {
            out.add_assign(irr.clone(), *c);
        }
        out
    }

    pub fn neg(&self) -> BurnsideElement {
        self.scale(-1)
    }

    pub fn sub(&self, other: &BurnsideElement) -> BurnsideElement {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: i64) -> BurnsideElement {
        if c == 0 {
            return Self::zero(self.group.clone());
        }
        BurnsideElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Ring product: Cartesian product of materialized sets with the
    /// diagonal action, canonicalized back to generator form.
    pub fn mul(&self, other: &BurnsideElement) -> Result<BurnsideElement> {
        if !self.same_group(other) {
            return Err(Error::DomainMismatch("Burnside product across groups".into()));
        }
        let mut out = Self::zero(self.group.clone());
        for (i1, c1) in &self.coeffs {
            let s1 = ConcreteEnhancedSet::materialize(i1);
            for (i2, c2) in &other.coeffs {
                let s2 = ConcreteEnhancedSet::materialize(i2);
                let prod = s1.product(&s2)?.canonicalize()?;
                out = out.add(&prod.scale(c1 * c2));
            }
        }
        Ok(out)
    }

    /// Underlying virtual point count (the augmentation B(G) -> Z).
    pub fn augmentation(&self) -> i64 {
        self.coeffs
            .iter()
            .map(|(irr, c)| c * irr.point_count() as i64)
            .sum()
    }
}

impl PartialEq for BurnsideElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other) && self.coeffs == other.coeffs
    }
}

impl Eq for BurnsideElement {}

impl fmt::Display for BurnsideElement {
    /// Signed terms in canonical key order: `+1*[...] -2*[...]`; zero is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (irr, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c:+}*{irr}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
