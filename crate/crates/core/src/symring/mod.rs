//! The ring Λ of symmetric functions over ℚ.
//!
//! Elements are sparse maps from partitions to exact rationals in one of four
//! bases. The power sums `p_λ` are the canonical internal basis: the vertex
//! operators act by substitution there and the Hall pairing is diagonal.

mod convert;
mod generators;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{self, Rational};
use crate::ring::CommRing;

pub use convert::{hall_inner, omega, schur, to_schur_expansion};
pub use generators::{gen_e, gen_echeck, gen_ehat, gen_h, gen_hcheck, gen_hhat, Generator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "p")]
    P,
    #[serde(rename = "h")]
    H,
    #[serde(rename = "e")]
    E,
    #[serde(rename = "s")]
    Schur,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::H => "h",
            Basis::E => "e",
            Basis::Schur => "s",
        }
    }

    /// `p`, `h` and `e` monomials multiply by concatenating their partitions.
    pub fn is_multiplicative(self) -> bool {
        !matches!(self, Basis::Schur)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p" => Ok(Basis::P),
            "h" => Ok(Basis::H),
            "e" => Ok(Basis::E),
            "s" => Ok(Basis::Schur),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

/// An element of Λ. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::monomial(basis, Partition::empty(), Rational::one())
    }

    pub fn constant(basis: Basis, c: Rational) -> Self {
        Self::monomial(basis, Partition::empty(), c)
    }

    pub fn monomial(basis: Basis, lambda: Partition, coeff: Rational) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, coeff);
        f
    }

    /// `p_λ` with coefficient one.
    pub fn p(lambda: &[u32]) -> Self {
        Self::monomial(Basis::P, Partition::from_unsorted(lambda.to_vec()), Rational::one())
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut f = Self::zero(basis);
        for (lambda, c) in terms {
            f.add_term(lambda, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest weight occurring, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::weight).max()
    }

    /// Terms of weight exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> SymFunc {
        self.filter_terms(|lambda| lambda.weight() == d)
    }

    /// Drops every term of weight above `d`.
    pub fn truncate(&self, d: u32) -> SymFunc {
        self.filter_terms(|lambda| lambda.weight() <= d)
    }

    fn filter_terms(&self, keep: impl Fn(&Partition) -> bool) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().filter(|(l, _)| keep(l)).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    /// Distinct weights occurring, ascending.
    pub fn weights(&self) -> Vec<u32> {
        let mut w: Vec<u32> = self.terms.keys().map(Partition::weight).collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`, bases assumed equal.
    pub(crate) fn add_scaled(&mut self, other: &SymFunc, c: &Rational) {
        debug_assert_eq!(self.basis, other.basis);
        if c.is_zero() {
            return;
        }
        for (lambda, d) in &other.terms {
            self.add_term(lambda.clone(), d * c);
        }
    }

    /// `self += c · (a · b)` for multiplicative bases, without materializing `a · b`.
    pub(crate) fn add_product(&mut self, a: &SymFunc, b: &SymFunc, c: &Rational) {
        debug_assert!(self.basis == a.basis && a.basis == b.basis && a.basis.is_multiplicative());
        for (la, ca) in &a.terms {
            let cac = ca * c;
            for (lb, cb) in &b.terms {
                self.add_term(la.union(lb), &cac * cb);
            }
        }
    }

    fn check_same(&self, other: &SymFunc) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(self.basis, other.basis));
        }
        Ok(())
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_same(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_same(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc { basis: self.basis, terms: self.terms.iter().map(|(l, d)| (l.clone(), d * c)).collect() }
    }

    pub fn neg(&self) -> SymFunc {
        self.scale(&-Rational::one())
    }

    /// Ring product. Both operands must share a basis; the Schur basis is
    /// multiplied through power sums.
    pub fn multiply(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_same(other)?;
        if self.basis.is_multiplicative() {
            let mut out = SymFunc::zero(self.basis);
            out.add_product(self, other, &Rational::one());
            Ok(out)
        } else {
            let prod = self.to_p().multiply(&other.to_p())?;
            Ok(prod.to_basis(Basis::Schur))
        }
    }

    pub fn pow(&self, k: u32) -> SymFunc {
        let mut out = SymFunc::one(self.basis);
        for _ in 0..k {
            out = out.multiply(self).expect("same basis");
        }
        out
    }

    /// Whether every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(rational::is_integer)
    }

    /// Terms in canonical order: weight descending, then partitions in
    /// reverse-lexicographic order.
    pub fn canonical_terms(&self) -> Vec<(&Partition, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| b.weight().cmp(&a.weight()).then_with(|| b.cmp(a)));
        v
    }

    pub(crate) fn as_p(&self) -> std::borrow::Cow<'_, SymFunc> {
        if self.basis == Basis::P {
            std::borrow::Cow::Borrowed(self)
        } else {
            std::borrow::Cow::Owned(self.to_p())
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc<{}>({})", self.basis, self)
    }
}

/// Canonical text: `1/2 p[2] + 1/2 p[1,1]`, `s[1,1] - s[]`, `h[2] - 1`.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.canonical_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_unit = lambda.is_empty() && self.basis != Basis::Schur;
            if is_unit {
                f.write_str(&rational::format(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{} ", rational::format(&mag))?;
                }
                write!(f, "{}{}", self.basis, lambda)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: Basis,
    terms: Vec<TermJson>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson {
            basis: self.basis,
            terms: self
                .canonical_terms()
                .into_iter()
                .map(|(l, c)| TermJson { partition: l.clone(), coeff: rational::format(c) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SymFuncJson::deserialize(d)?;
        let mut f = SymFunc::zero(raw.basis);
        for t in raw.terms {
            let c = rational::parse(&t.coeff).map_err(serde::de::Error::custom)?;
            f.add_term(t.partition, c);
        }
        Ok(f)
    }
}

/// Ring structure on power-sum expansions; other bases are converted first.
impl CommRing for SymFunc {
    fn ring_zero() -> Self {
        SymFunc::zero(Basis::P)
    }

    fn ring_one() -> Self {
        SymFunc::one(Basis::P)
    }

    fn ring_is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn ring_add(&self, other: &Self) -> Self {
        let mut out = self.to_p();
        out.add_scaled(&other.as_p(), &Rational::one());
        out
    }

    fn ring_mul(&self, other: &Self) -> Self {
        let mut out = SymFunc::zero(Basis::P);
        out.add_product(&self.as_p(), &other.as_p(), &Rational::one());
        out
    }

    fn ring_neg(&self) -> Self {
        SymFunc::neg(self)
    }

    fn ring_add_assign(&mut self, other: &Self) {
        if self.basis != Basis::P {
            *self = self.to_p();
        }
        self.add_scaled(&other.as_p(), &Rational::one());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn concatenation_product() {
        let f = SymFunc::p(&[2]).multiply(&SymFunc::p(&[1])).unwrap();
        assert_eq!(f, SymFunc::p(&[2, 1]));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let f = SymFunc::p(&[3, 2, 1]).add(&SymFunc::p(&[1])).unwrap();
        let g = f.add(&f.scale(&frac(-1, 1))).unwrap();
        assert!(g.is_zero());
        assert_eq!(g.num_terms(), 0);
    }

    #[test]
    fn basis_mismatch_rejected() {
        let h = SymFunc::monomial(Basis::H, Partition::new(vec![1]).unwrap(), frac(1, 1));
        assert!(matches!(h.add(&SymFunc::p(&[1])), Err(Error::BasisMismatch(..))));
        assert!(h.multiply(&SymFunc::p(&[1])).is_err());
    }

    #[test]
    fn h1_squared() {
        let h1 = SymFunc::monomial(Basis::H, Partition::new(vec![1]).unwrap(), frac(1, 1));
        let sq = h1.multiply(&h1).unwrap();
        assert_eq!(sq, SymFunc::monomial(Basis::H, Partition::new(vec![1, 1]).unwrap(), frac(1, 1)));
        assert_eq!(sq.to_p(), SymFunc::p(&[1, 1]));
    }

    #[test]
    fn canonical_text_and_json() {
        let f = gen_h(2);
        assert_eq!(f.to_string(), "1/2 p[2] + 1/2 p[1,1]");
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"basis":"p","terms":[{"partition":[2],"coeff":"1/2"},{"partition":[1,1],"coeff":"1/2"}]}"#
        );
        let back: SymFunc = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(back, f);
        let g = SymFunc::from_terms(
            Basis::Schur,
            [(Partition::new(vec![1, 1]).unwrap(), frac(1, 1)), (Partition::empty(), frac(-1, 1))],
        );
        assert_eq!(g.to_string(), "s[1,1] - s[]");
        let h = SymFunc::from_terms(
            Basis::H,
            [(Partition::new(vec![2]).unwrap(), frac(1, 1)), (Partition::empty(), frac(-1, 1))],
        );
        assert_eq!(h.to_string(), "h[2] - 1");
        assert_eq!(SymFunc::one(Basis::P).to_string(), "1");
        assert_eq!(SymFunc::zero(Basis::P).to_string(), "0");
        assert_eq!(SymFunc::p(&[1]).neg().to_string(), "-p[1]");
    }

    #[test]
    fn truncation_is_graded() {
        let f = SymFunc::p(&[3]).add(&SymFunc::p(&[1])).unwrap().add(&SymFunc::one(Basis::P)).unwrap();
        assert_eq!(f.truncate(1), SymFunc::p(&[1]).add(&SymFunc::one(Basis::P)).unwrap());
        assert_eq!(f.homogeneous_component(3), SymFunc::p(&[3]));
        assert_eq!(f.degree(), Some(3));
        assert_eq!(f.weights(), vec![0, 1, 3]);
    }
}
