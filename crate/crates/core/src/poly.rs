//! Sparse multivariate polynomials over exact rationals.
//!
//! Representation: a map from monomials to nonzero `Rat` coefficients.
//! Monomials are maps from variable names to positive exponents, ordered by
//! graded lexicographic order so that printing and iteration are
//! deterministic. The zero polynomial is the empty map.
//!
//! The fixed vocabulary used by the engine is
//! {g, i, gB, c, d, c2, e, f, fd, cliff}, but the kernel accepts any names.

use crate::rational::Rat;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A monomial: variable name -> exponent, with all exponents > 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mono(BTreeMap<String, u32>);

impl Mono {
    pub fn unit() -> Mono {
        Mono(BTreeMap::new())
    }

    pub fn var(name: &str) -> Mono {
        let mut m = BTreeMap::new();
        m.insert(name.to_string(), 1);
        Mono(m)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Mono) -> Mono {
        let mut out = self.0.clone();
        for (v, e) in &other.0 {
            *out.entry(v.clone()).or_insert(0) += e;
        }
        Mono(out)
    }

    pub fn exponent(&self, var: &str) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(|s| s.as_str())
    }
}

impl Ord for Mono {
    /// Graded lexicographic: compare total degree first, then exponents
    /// variable by variable in alphabetical order (higher exponent on an
    /// earlier variable wins).
    fn cmp(&self, other: &Mono) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let vars: BTreeSet<&String> = self.0.keys().chain(other.0.keys()).collect();
        for v in vars {
            let a = self.0.get(v.as_str()).copied().unwrap_or(0);
            let b = other.0.get(v.as_str()).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Mono) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Mono, Rat>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> MPoly {
        MPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> MPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::unit(), c);
        }
        MPoly { terms }
    }

    pub fn int(n: i64) -> MPoly {
        MPoly::constant(Rat::from_int(n))
    }

    pub fn rat(num: i64, den: i64) -> MPoly {
        MPoly::constant(Rat::new(num, den))
    }

    pub fn var(name: &str) -> MPoly {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(name), Rat::one());
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_unit().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mono::total_degree).max().unwrap_or(0)
    }

    /// The set of variables that actually occur.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            out.extend(m.vars().map(str::to_string));
        }
        out
    }

    fn insert_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes rational values for some variables; unbound variables
    /// remain symbolic. Substitution is a ring homomorphism.
    pub fn eval(&self, bindings: &BTreeMap<String, Rat>) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Mono::unit();
            for (v, e) in &m.0 {
                match bindings.get(v) {
                    Some(val) => coeff *= &val.pow(*e),
                    None => {
                        rest.0.insert(v.clone(), *e);
                    }
                }
            }
            out.insert_term(rest, coeff);
        }
        out
    }

    /// Evaluates with every variable bound; the result must be constant.
    pub fn eval_full(&self, bindings: &BTreeMap<String, Rat>) -> Option<Rat> {
        self.eval(bindings).as_constant()
    }

    /// Substitutes polynomials for variables (ring homomorphism).
    pub fn subst(&self, bindings: &BTreeMap<String, MPoly>) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(c.clone());
            for (v, e) in &m.0 {
                let factor = match bindings.get(v) {
                    Some(p) => p.pow(*e),
                    None => MPoly::var(v).pow(*e),
                };
                term = &term * &factor;
            }
            out = &out + &term;
        }
        out
    }

    /// Convenience for binding a single variable to a rational.
    pub fn eval_at(&self, var: &str, value: Rat) -> MPoly {
        let mut b = BTreeMap::new();
        b.insert(var.to_string(), value);
        self.eval(&b)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl fmt::Display for MPoly {
    /// Terms in descending graded-lex order, e.g. `3/2*g*i - 3/2*i^2 + 3*g - 3*i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if idx == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if m.is_unit() {
                write!(f, "{mag}")?;
            } else if mag == Rat::one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl From<i64> for MPoly {
    fn from(n: i64) -> MPoly {
        MPoly::int(n)
    }
}

/// Shorthand used throughout the engine.
pub fn var(name: &str) -> MPoly {
    MPoly::var(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bind(pairs: &[(&str, Rat)]) -> BTreeMap<String, Rat> {
        pairs
            .iter()
            .map(|(v, r)| (v.to_string(), r.clone()))
            .collect()
    }

    #[test]
    fn difference_of_squares() {
        let g = var("g");
        let lhs = &(&g + &MPoly::int(1)) * &(&g - &MPoly::int(1));
        let rhs = &g.pow(2) - &MPoly::int(1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn additive_identity() {
        let p = &(&var("g") * &var("i")) + &MPoly::rat(3, 2);
        assert_eq!(&p + &MPoly::zero(), p);
    }

    #[test]
    fn hand_expansion() {
        // (3/2)(i+2)(g-i) = 3/2*g*i - 3/2*i^2 + 3*g - 3*i
        let (g, i) = (var("g"), var("i"));
        let p = &(&MPoly::rat(3, 2) * &(&i + &MPoly::int(2))) * &(&g - &i);
        let expected = &(&(&(&g * &i).scale(&Rat::new(3, 2)) - &i.pow(2).scale(&Rat::new(3, 2)))
            + &g.scale(&Rat::from_int(3)))
            - &i.scale(&Rat::from_int(3));
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "3/2*g*i - 3/2*i^2 + 3*g - 3*i");
    }

    #[test]
    fn eval_full_binding() {
        // g^2 - 1 at g = 3 -> 8
        let p = &var("g").pow(2) - &MPoly::int(1);
        assert_eq!(
            p.eval_full(&bind(&[("g", Rat::from_int(3))])),
            Some(Rat::from_int(8))
        );
        // 3/2 (i+2)(g-i) at i=1, g=4 -> 27/2
        let (g, i) = (var("g"), var("i"));
        let q = &(&MPoly::rat(3, 2) * &(&i + &MPoly::int(2))) * &(&g - &i);
        assert_eq!(
            q.eval_full(&bind(&[("g", Rat::from_int(4)), ("i", Rat::from_int(1))])),
            Some(Rat::new(27, 2))
        );
    }

    #[test]
    fn partial_eval() {
        // ig at i=2 -> 2g
        let p = &var("i") * &var("g");
        assert_eq!(
            p.eval(&bind(&[("i", Rat::from_int(2))])),
            var("g").scale(&Rat::from_int(2))
        );
    }

    #[test]
    fn zero_detection() {
        let g = var("g");
        let a = (&g + &MPoly::int(1)).pow(2);
        let b = &(&g.pow(2) + &g.scale(&Rat::from_int(2))) + &MPoly::int(1);
        assert!((&a - &b).is_zero());
        assert!(!(&g - &var("i")).is_zero());
    }

    #[test]
    fn display_ordering() {
        // Graded-lex descending; constant last.
        let p = &(&var("g") + &var("i").pow(2)) + &MPoly::int(5);
        assert_eq!(p.to_string(), "i^2 + g + 5");
        assert_eq!(MPoly::zero().to_string(), "0");
        assert_eq!((-&var("g")).to_string(), "-g");
    }

    #[test]
    fn subst_polynomial() {
        // c -> g + 2 inside c*d
        let p = &var("c") * &var("d");
        let mut b = BTreeMap::new();
        b.insert("c".to_string(), &var("g") + &MPoly::int(2));
        let q = p.subst(&b);
        let expected = &(&var("g") + &MPoly::int(2)) * &var("d");
        assert_eq!(q, expected);
    }
}
