//! Integer partitions: conjugation, Frobenius coordinates, `z_λ` and enumeration.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is ∅.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates `parts`, dropping trailing zeros.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotDecreasing(parts.iter().map(|&p| p as i64).collect()));
        }
        Ok(Partition(parts))
    }

    /// Like [`Partition::new`] for signed input, rejecting negative entries.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::NegativePart(parts.to_vec()));
        }
        let as_u32: Vec<u32> = parts.iter().map(|&p| p as u32).collect();
        Partition::new(as_u32).map_err(|_| Error::NotDecreasing(parts.to_vec()))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Concatenation of parts, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x >= y {
                        out.push(x);
                        a.next();
                    } else {
                        out.push(y);
                        b.next();
                    }
                }
                (Some(_), None) => out.extend(a.by_ref()),
                (None, Some(_)) => out.extend(b.by_ref()),
                (None, None) => break,
            }
        }
        Partition(out)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width).map(|j| self.0.iter().take_while(|&&p| p >= j).count() as u32).collect();
        Partition(parts)
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::from(1);
        for (part, mult) in self.multiplicities() {
            for k in 1..=mult {
                z *= BigInt::from(part) * BigInt::from(k);
            }
        }
        z
    }

    /// Length of the main diagonal.
    pub fn frobenius_rank(&self) -> usize {
        self.0.iter().enumerate().take_while(|&(i, &p)| p as usize > i).count()
    }

    pub fn to_frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let r = self.frobenius_rank();
        let alpha = (0..r).map(|i| self.0[i] - 1 - i as u32).collect();
        let beta = (0..r).map(|i| conj.0[i] - 1 - i as u32).collect();
        FrobeniusCoords { alpha, beta }
    }

    pub fn from_frobenius(fc: &FrobeniusCoords) -> Partition {
        let r = fc.rank();
        if r == 0 {
            return Partition::empty();
        }
        // rows below the diagonal block come from the column lengths beta
        let mut rows: Vec<u32> = (0..r).map(|i| fc.alpha[i] + 1 + i as u32).collect();
        let tail_height = fc.beta[0] as usize + 1;
        for i in r..tail_height {
            let count = fc.beta.iter().enumerate().filter(|&(j, &b)| b as usize + j >= i).count();
            rows.push(count as u32);
        }
        Partition(rows)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<i64>::deserialize(d)?;
        Partition::from_signed(&raw).map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts JSON arrays (`[3,1]`, `[]`) or bare comma lists (`3,1`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(s);
        let mut parts = Vec::new();
        for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            parts.push(tok.parse::<i64>().map_err(|_| Error::Parse(format!("bad part {tok:?}")))?);
        }
        Partition::from_signed(&parts)
    }
}

/// Hook coordinates `(α|β)` with `α_i = λ_i − i`, `β_i = λ′_i − i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusCoords {
    alpha: Vec<u32>,
    beta: Vec<u32>,
}

impl FrobeniusCoords {
    pub fn new(alpha: Vec<u32>, beta: Vec<u32>) -> Result<Self> {
        if alpha.len() != beta.len() {
            return Err(Error::InvalidFrobenius(format!("unequal lengths {} and {}", alpha.len(), beta.len())));
        }
        let strict = |v: &[u32]| v.windows(2).all(|w| w[0] > w[1]);
        if !strict(&alpha) || !strict(&beta) {
            return Err(Error::InvalidFrobenius(format!(
                "sequences must be strictly decreasing: {alpha:?} | {beta:?}"
            )));
        }
        Ok(FrobeniusCoords { alpha, beta })
    }

    pub fn alpha(&self) -> &[u32] {
        &self.alpha
    }

    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    pub fn rank(&self) -> usize {
        self.alpha.len()
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: i64) -> Result<Vec<Partition>> {
    if n < 0 {
        return Err(Error::NegativeWeight(n));
    }
    fn fill(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            fill(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(n as u32, n as u32, &mut Vec::new(), &mut out);
    Ok(out)
}

/// All partitions of weight `0..=max_weight`, grouped by weight.
pub fn partitions_up_to(max_weight: u32) -> Vec<Partition> {
    (0..=max_weight as i64).flat_map(|n| partitions_of(n).expect("non-negative")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn frobenius_examples() {
        let fc = p(&[1, 1]).to_frobenius();
        assert_eq!((fc.alpha(), fc.beta()), (&[0][..], &[1][..]));
        let fc = p(&[5]).to_frobenius();
        assert_eq!((fc.alpha(), fc.beta()), (&[4][..], &[0][..]));
        let fc = p(&[3, 2]).to_frobenius();
        assert_eq!((fc.alpha(), fc.beta()), (&[2, 0][..], &[1, 0][..]));
        assert_eq!(Partition::empty().to_frobenius().rank(), 0);
    }

    #[test]
    fn frobenius_rejects_bad_coords() {
        assert!(FrobeniusCoords::new(vec![1, 1], vec![1, 0]).is_err());
        assert!(FrobeniusCoords::new(vec![1], vec![1, 0]).is_err());
        assert!(FrobeniusCoords::new(vec![0, 1], vec![1, 0]).is_err());
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(Partition::empty().z(), BigInt::from(1));
        assert_eq!(p(&[2, 1]).z(), BigInt::from(2));
        assert_eq!(p(&[2, 2, 1]).z(), BigInt::from(8));
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(partitions_of(0).unwrap(), vec![Partition::empty()]);
        let four = partitions_of(4).unwrap();
        assert_eq!(four, vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
        assert_eq!(partitions_of(8).unwrap().len(), 22);
        assert!(partitions_of(-1).is_err());
        assert_eq!(partitions_up_to(6).len(), 30);
    }

    #[test]
    fn normalization_and_validation() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::from_signed(&[2, -1]).is_err());
        assert_eq!("[3,1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
        assert_eq!(serde_json::from_str::<Partition>("[]").unwrap(), Partition::empty());
    }

    #[test]
    fn involutions_up_to_twelve() {
        for lam in partitions_up_to(12) {
            assert_eq!(lam.conjugate().conjugate(), lam);
            assert_eq!(Partition::from_frobenius(&lam.to_frobenius()), lam);
            assert_eq!(lam.conjugate().weight(), lam.weight());
        }
    }

    #[test]
    fn union_sorts() {
        assert_eq!(p(&[3, 1]).union(&p(&[2, 2])), p(&[3, 2, 2, 1]));
        assert_eq!(Partition::empty().union(&p(&[1])), p(&[1]));
    }
}
