//! Zeta functions as formal products of cyclotomic factors, in exact
//! integer/rational arithmetic.
//!
//! All "zeta functions" here are finite products `∏ (1 - e[c] t)^{m_c}`
//! with integer exponents of either sign. Keeping every factor split to
//! t-degree 1 makes equality a map comparison; converting back to the
//! integer shape `∏ (1 - t^n)^{e_n}` is Möbius inversion over denominators.

use crate::abelian::{Character, Subgroup, QZ};
use crate::burnside::{BurnsideElement, ConcreteEnhancedSet, Irreducible};
use crate::error::{Error, Result};
use num_integer::Integer;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// `∏_c (1 - e[c] t)^{m_c}` in canonical split form.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TwistedZeta {
    factors: BTreeMap<QZ, i64>,
}

impl TwistedZeta {
    pub fn one() -> TwistedZeta {
        TwistedZeta::default()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &BTreeMap<QZ, i64> {
        &self.factors
    }

    fn push(&mut self, c: QZ, e: i64) {
        use std::collections::btree_map::Entry;
        if e == 0 {
            return;
        }
        match self.factors.entry(c) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += e;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(e);
            }
        }
    }

    /// Multiply in `(1 - e[c] t^k)^e`, splitting the degree-k factor into
    /// its k degree-1 factors: `1 - e[c] t^k = ∏_{j<k} (1 - e[(c+j)/k] t)`.
    pub fn mul_factor(&mut self, c: QZ, k: u64, e: i64) {
        assert!(k > 0);
        for j in 0..k {
            let num = c.num() as i128 + j as i128 * c.den() as i128;
            let den = c.den() as i128 * k as i128;
            self.push(QZ::from_i128(num, den), e);
        }
    }

    pub fn mul(&self, other: &TwistedZeta) -> TwistedZeta {
        let mut out = self.clone();
        for (&c, &e) in &other.factors {
            out.push(c, e);
        }
        out
    }

    pub fn div(&self, other: &TwistedZeta) -> TwistedZeta {
        let mut out = self.clone();
        for (&c, &e) in &other.factors {
            out.push(c, -e);
        }
        out
    }

    /// The sector twist `(ψ(t))_β := ψ(β^{-1} t)`: every root picks up the
    /// factor `e[β]`, i.e. every exponent key moves to `c - β`.
    pub fn twist(&self, beta: QZ) -> TwistedZeta {
        TwistedZeta {
            factors: self
                .factors
                .iter()
                .map(|(c, &e)| (c.sub(&beta), e))
                .collect(),
        }
    }

    /// Rewrite as `∏ (1 - t^n)^{e_n}` if possible.
    ///
    /// The exponent function must be constant on each class of exact
    /// denominator d (the primitive d-th roots); then `e_n = Σ_{n|m}
    /// μ(m/n) F(m)`. The reconstruction is split back and compared, so any
    /// non-integral input is caught exactly.
    pub fn to_integer_form(&self) -> Result<IntegerZeta> {
        let mut class_exp: BTreeMap<u64, i64> = BTreeMap::new();
        for (c, &e) in &self.factors {
            class_exp.entry(c.den()).or_insert(e);
        }
        let mut candidates: std::collections::BTreeSet<u64> = std::collections::BTreeSet::new();
        for &d in class_exp.keys() {
            for n in 1..=d {
                if d % n == 0 {
                    candidates.insert(n);
                }
            }
        }
        let mut out = IntegerZeta::one();
        for &n in &candidates {
            let mut e_n: i64 = 0;
            for (&m, &f) in &class_exp {
                if m % n == 0 {
                    e_n += moebius(m / n) * f;
                }
            }
            out.push(n, e_n);
        }
        if out.split() != *self {
            return Err(Error::NotIntegral);
        }
        Ok(out)
    }
}

impl fmt::Debug for TwistedZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.factors.iter()).finish()
    }
}

fn moebius(n: u64) -> i64 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `∏_n (1 - t^n)^{e_n}` with integer exponents of either sign.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntegerZeta {
    factors: BTreeMap<u64, i64>,
}

impl IntegerZeta {
    pub fn one() -> IntegerZeta {
        IntegerZeta::default()
    }

    pub fn from_factor(n: u64, e: i64) -> IntegerZeta {
        let mut z = Self::one();
        z.push(n, e);
        z
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &BTreeMap<u64, i64> {
        &self.factors
    }

    fn push(&mut self, n: u64, e: i64) {
        use std::collections::btree_map::Entry;
        assert!(n > 0);
        if e == 0 {
            return;
        }
        match self.factors.entry(n) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += e;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(e);
            }
        }
    }

    pub fn mul(&self, other: &IntegerZeta) -> IntegerZeta {
        let mut out = self.clone();
        for (&n, &e) in &other.factors {
            out.push(n, e);
        }
        out
    }

    pub fn div(&self, other: &IntegerZeta) -> IntegerZeta {
        let mut out = self.clone();
        for (&n, &e) in &other.factors {
            out.push(n, -e);
        }
        out
    }

    pub fn pow(&self, k: i64) -> IntegerZeta {
        if k == 0 {
            return Self::one();
        }
        IntegerZeta {
            factors: self.factors.iter().map(|(&n, &e)| (n, e * k)).collect(),
        }
    }

    /// Embed into split form (`1 - t^n` has roots at all n-th roots of unity).
    pub fn split(&self) -> TwistedZeta {
        let mut out = TwistedZeta::one();
        for (&n, &e) in &self.factors {
            out.mul_factor(QZ::ZERO, n, e);
        }
        out
    }

    /// Exact power-series coefficients up to degree `deg` (inclusive).
    pub fn series(&self, deg: usize) -> Vec<i128> {
        let mut s = vec![0i128; deg + 1];
        s[0] = 1;
        for (&n, &e) in &self.factors {
            let n = n as usize;
            if n > deg {
                // (1 - t^n)^e ≡ 1 up to this degree — only true for e >= 0?
                // No: also for negative e, 1/(1-t^n) = 1 + t^n + ... ≡ 1.
                continue;
            }
            if e > 0 {
                for _ in 0..e {
                    for i in (n..=deg).rev() {
                        s[i] -= s[i - n];
                    }
                }
            } else {
                for _ in 0..(-e) {
                    for i in n..=deg {
                        s[i] += s[i - n];
                    }
                }
            }
        }
        s
    }
}

impl fmt::Display for IntegerZeta {
    /// `(1-t^4)^2*(1-t^2)^-1`, factors by descending n; the empty product
    /// renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (&n, &e)) in self.factors.iter().rev().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if n == 1 {
                write!(f, "(1-t)^{e}")?;
            } else {
                write!(f, "(1-t^{n})^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntegerZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for IntegerZeta {
    type Err = Error;

    /// Parse the `Display` grammar: `1` or `(1-t^N)^E` factors joined by `*`.
    fn from_str(s: &str) -> Result<IntegerZeta> {
        let s = s.trim();
        if s == "1" {
            return Ok(IntegerZeta::one());
        }
        let mut out = IntegerZeta::one();
        for (i, part) in s.split('*').enumerate() {
            let part = part.trim();
            let err = |msg: &str| Error::parse(i, format!("{msg} in zeta factor {part:?}"));
            let rest = part
                .strip_prefix("(1-t")
                .ok_or_else(|| err("expected (1-t"))?;
            let (n, rest) = if let Some(r) = rest.strip_prefix('^') {
                let close = r.find(')').ok_or_else(|| err("missing )"))?;
                let n: u64 = r[..close].parse().map_err(|_| err("bad degree"))?;
                (n, &r[close + 1..])
            } else {
                let rest = rest.strip_prefix(')').ok_or_else(|| err("missing )"))?;
                (1, rest)
            };
            if n == 0 {
                return Err(err("degree must be positive"));
            }
            let e: i64 = match rest.strip_prefix('^') {
                Some(e) => e.parse().map_err(|_| err("bad exponent"))?,
                None if rest.is_empty() => 1,
                None => return Err(err("trailing garbage")),
            };
            out.push(n, e);
        }
        Ok(out)
    }
}

/// Closed form for the orbifold zeta of the irreducible generator
/// `(H, k, hbar, α)`: it equals `(1 - t^{lcm(k,m)})^{k|H| / lcm(k,m)}`
/// where `m = |H| / |Ker α|` is the order of the character image.
pub fn zeta_of_basic(h: &Subgroup, k: u64, alpha: &Character) -> IntegerZeta {
    let m = alpha.image_order();
    let l = k.lcm(&m);
    IntegerZeta::from_factor(l, (k * h.order() / l) as i64)
}

/// Orbifold monodromy zeta of a virtual enhanced set, assembled from the
/// closed form on each generator. Multiplicative in the element.
pub fn orbifold_zeta(a: &BurnsideElement) -> IntegerZeta {
    let mut out = IntegerZeta::one();
    for (irr, &c) in a.coeffs() {
        out = out.mul(&zeta_of_basic(irr.isotropy(), irr.k(), irr.alpha()).pow(c));
    }
    out
}

/// The defining sector product executed literally on a concrete set: for
/// every `g` and every character value `β`, the monodromy zeta of `h` on
/// `(X^g_β)/G`, twisted by `β`; all multiplied together.
pub fn orbifold_zeta_brute(s: &ConcreteEnhancedSet) -> Result<IntegerZeta> {
    let group = s.group().clone();
    let mut acc = TwistedZeta::one();
    for g in group.elements() {
        // β ↦ set of g-fixed points with α_x(g) = β
        let mut parts: BTreeMap<QZ, Vec<usize>> = BTreeMap::new();
        for x in 0..s.point_count() {
            if s.act(g, x) == x {
                parts.entry(s.alpha_at(x).eval(g)).or_default().push(x);
            }
        }
        for (beta, points) in parts {
            // quotient by G: orbit representative = the minimal point
            let mut orbit_rep: BTreeMap<usize, usize> = BTreeMap::new();
            for &x in &points {
                let rep = group
                    .elements()
                    .iter()
                    .map(|a| s.act(a, x))
                    .min()
                    .expect("group is nonempty");
                orbit_rep.insert(x, rep);
            }
            let reps: Vec<usize> = {
                let mut v: Vec<usize> = orbit_rep.values().copied().collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            // cycles of the induced h on the quotient
            let mut zeta_part = TwistedZeta::one();
            let mut seen: std::collections::BTreeSet<usize> = Default::default();
            for &r in &reps {
                if seen.contains(&r) {
                    continue;
                }
                let mut len = 0u64;
                let mut cur = r;
                loop {
                    seen.insert(cur);
                    len += 1;
                    cur = orbit_rep[&s.h_image(cur)];
                    if cur == r {
                        break;
                    }
                }
                zeta_part.mul_factor(QZ::ZERO, len, 1);
            }
            acc = acc.mul(&zeta_part.twist(beta));
        }
    }
    acc.to_integer_form()
}

/// Brute-force orbifold zeta of a single irreducible (materialize, then
/// take the sector product point by point).
pub fn orbifold_zeta_brute_irreducible(irr: &Irreducible) -> Result<IntegerZeta> {
    orbifold_zeta_brute(&ConcreteEnhancedSet::materialize(irr))
}

/// The one-point-orbit normalizer `∏_{g∈G} (1-t)_{α(g)}`, which regroups
/// to `(1 - t^{m})^{|G|/m}` with `m` the order of the character image.
/// Dividing by it reduces an orbifold zeta function.
pub fn character_orbit_zeta(alpha: &Character) -> IntegerZeta {
    zeta_of_basic(alpha.domain(), 1, alpha)
}
