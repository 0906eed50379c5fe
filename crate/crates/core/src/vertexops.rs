//! Vertex operators acting on the bosonic Fock space Λ.
//!
//! `a_{−n}` is multiplication by `p_n` and `a_n = n ∂/∂p_n`. Every operator
//! here has the shape `prefactor(z) · exp(±Σ p_n z^n / n) · exp(±Σ ∂_{p_n} u_n(z))`
//! with `u_n(z) = z^{−n}` or `z^{−n} + z^n`. The annihilation half is the
//! translation `p_n ↦ p_n ± u_n(z)`, so applying an operator to a polynomial in
//! the `p_n` gives a finite Laurent polynomial before the creation series is
//! multiplied in; each mode is one coefficient of the product.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::partition::{FrobeniusCoords, Partition};
use crate::rational::Rational;
use crate::symring::{Basis, Generator, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    S,
    SStar,
    Y,
    YStar,
    W,
    WStar,
}

impl Family {
    pub const ALL: [Family; 6] = [Family::S, Family::SStar, Family::Y, Family::YStar, Family::W, Family::WStar];

    pub fn spec(self) -> OperatorSpec {
        OperatorSpec::of(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AnnihilationPattern {
    /// `u_n(z) = z^{−n}`
    Inverse,
    /// `u_n(z) = z^{−n} + z^n`
    Symmetric,
}

/// Which power of `z` carries mode `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    /// mode `n` is the coefficient of `z^{−n}`
    Negative,
    /// mode `n` is the coefficient of `z^{n}`
    Positive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorSpec {
    pub family: Family,
    pub creation_sign: i8,
    pub annihilation_sign: i8,
    pub pattern: AnnihilationPattern,
    /// Sparse integer Laurent polynomial as `(exponent, coefficient)` pairs.
    pub prefactor: Vec<(i64, i64)>,
    pub orientation: Orientation,
}

impl OperatorSpec {
    pub fn of(family: Family) -> Self {
        use AnnihilationPattern::*;
        use Orientation::*;
        let one = vec![(0, 1)];
        let one_minus_z2 = vec![(0, 1), (2, -1)];
        let (creation_sign, annihilation_sign, pattern, prefactor, orientation) = match family {
            Family::S => (1, -1, Inverse, one, Negative),
            Family::SStar => (-1, 1, Inverse, one, Positive),
            Family::Y => (1, -1, Symmetric, one, Negative),
            Family::YStar => (-1, 1, Symmetric, one_minus_z2, Positive),
            Family::W => (1, -1, Symmetric, one_minus_z2, Negative),
            Family::WStar => (-1, 1, Symmetric, one, Positive),
        };
        OperatorSpec { family, creation_sign, annihilation_sign, pattern, prefactor, orientation }
    }

    /// Highest power of `z` in the prefactor.
    pub fn prefactor_degree(&self) -> i64 {
        self.prefactor.iter().map(|&(e, _)| e).max().unwrap_or(0)
    }

    /// Coefficient `c_m` of `z^m` in the creation series: `h_m` or `(−1)^m e_m`.
    fn creation_coefficient(&self, m: i64) -> (std::sync::Arc<SymFunc>, bool) {
        if self.creation_sign > 0 {
            (Generator::H.cached(m), false)
        } else {
            (Generator::E.cached(m), m % 2 != 0)
        }
    }
}

/// A finite Laurent polynomial in `z` with coefficients in Λ.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentSlice {
    coeffs: BTreeMap<i64, SymFunc>,
}

impl LaurentSlice {
    pub fn coeff(&self, exponent: i64) -> SymFunc {
        self.coeffs.get(&exponent).cloned().unwrap_or_else(|| SymFunc::zero(Basis::P))
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &SymFunc)> {
        self.coeffs.iter().map(|(&e, f)| (e, f))
    }

    pub fn exponent_range(&self) -> Option<(i64, i64)> {
        Some((*self.coeffs.keys().next()?, *self.coeffs.keys().next_back()?))
    }

    fn add(&mut self, exponent: i64, lambda: Partition, c: Rational) {
        let slot = self.coeffs.entry(exponent).or_insert_with(|| SymFunc::zero(Basis::P));
        slot.add_term(lambda, c);
        if slot.is_zero() {
            self.coeffs.remove(&exponent);
        }
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut b = BigInt::one();
    for i in 0..k {
        b = b * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    b
}

/// One part size `k` with multiplicity `m`: `(p_k + s·u_k(z))^m` expanded as
/// `(z-exponent, integer coefficient, remaining power of p_k)`.
fn expand_block(k: u32, m: usize, sign: i8, pattern: AnnihilationPattern) -> Vec<(i64, BigInt, usize)> {
    let mut out = Vec::new();
    let k = k as i64;
    for j in 0..=m {
        let outer = binomial(m, j) * if sign < 0 && j % 2 == 1 { -1 } else { 1 };
        match pattern {
            AnnihilationPattern::Inverse => out.push((-k * j as i64, outer, m - j)),
            AnnihilationPattern::Symmetric => {
                for i in 0..=j {
                    out.push((k * (j as i64 - 2 * i as i64), &outer * binomial(j, i), m - j));
                }
            }
        }
    }
    out
}

/// The annihilation exponential of `spec` applied to `f`, by translation of
/// the power sums.
pub fn apply_annihilation(spec: &OperatorSpec, f: &SymFunc) -> LaurentSlice {
    let f = f.as_p();
    let mut slice = LaurentSlice::default();
    for (lambda, c) in f.terms() {
        // partial products: (exponent, coefficient, surviving parts)
        let mut partial: Vec<(i64, BigInt, Vec<u32>)> = vec![(0, BigInt::one(), Vec::new())];
        for (k, m) in lambda.multiplicities() {
            let block = expand_block(k, m, spec.annihilation_sign, spec.pattern);
            let mut next = Vec::with_capacity(partial.len() * block.len());
            for (e, coeff, parts) in &partial {
                for (be, bc, keep) in &block {
                    let mut p = parts.clone();
                    p.extend(std::iter::repeat_n(k, *keep));
                    next.push((e + be, coeff * bc, p));
                }
            }
            partial = next;
        }
        for (e, coeff, parts) in partial {
            // parts are produced in decreasing block order, so already sorted
            let lambda = Partition::new(parts).expect("sorted parts");
            slice.add(e, lambda, c * Rational::from_integer(coeff));
        }
    }
    slice
}

/// Mode `n` of `spec` applied to `f`.
pub fn mode(spec: &OperatorSpec, n: i64, f: &SymFunc) -> SymFunc {
    let slice = apply_annihilation(spec, f);
    mode_from_slice(spec, n, &slice)
}

fn mode_from_slice(spec: &OperatorSpec, n: i64, slice: &LaurentSlice) -> SymFunc {
    let target = match spec.orientation {
        Orientation::Negative => -n,
        Orientation::Positive => n,
    };
    let mut out = SymFunc::zero(Basis::P);
    for &(pe, pc) in &spec.prefactor {
        let pc = Rational::from_integer(pc.into());
        for (e, coeff) in slice.iter() {
            let m = target - pe - e;
            if m < 0 {
                continue;
            }
            let (creation, negate) = spec.creation_coefficient(m);
            let c = if negate { -&pc } else { pc.clone() };
            out.add_product(&creation, coeff, &c);
        }
    }
    out
}

/// Several modes of the same operator on the same vector, sharing one
/// annihilation pass.
pub fn modes(spec: &OperatorSpec, indices: impl IntoIterator<Item = i64>, f: &SymFunc) -> Vec<SymFunc> {
    let slice = apply_annihilation(spec, f);
    indices.into_iter().map(|n| mode_from_slice(spec, n, &slice)).collect()
}

/// `X_{n_1} X_{n_2} ⋯ X_{n_k}.1`, applied right to left.
pub fn mode_word(word: &[(Family, i64)]) -> SymFunc {
    apply_word(word, &SymFunc::one(Basis::P))
}

/// `X_{n_1} ⋯ X_{n_k}.f`, applied right to left.
pub fn apply_word(word: &[(Family, i64)], f: &SymFunc) -> SymFunc {
    let mut v = f.to_p();
    for &(family, n) in word.iter().rev() {
        if v.is_zero() {
            break;
        }
        v = mode(&family.spec(), n, &v);
    }
    v
}

fn signed(f: SymFunc, negative: bool) -> SymFunc {
    if negative {
        f.neg()
    } else {
        f
    }
}

fn creation_word(family: Family, lambda: &Partition) -> SymFunc {
    let word: Vec<_> = lambda.parts().iter().map(|&p| (family, -(p as i64))).collect();
    mode_word(&word)
}

/// `(−1)^{|λ|} X*_{λ′_1} ⋯ X*_{λ′_k}.1`
fn dual_word(family: Family, lambda: &Partition) -> SymFunc {
    let word: Vec<_> = lambda.conjugate().parts().iter().map(|&p| (family, p as i64)).collect();
    signed(mode_word(&word), lambda.weight() % 2 == 1)
}

/// `Y_{−λ_1} ⋯ Y_{−λ_k}.1`
pub fn sp_vertex(lambda: &Partition) -> SymFunc {
    creation_word(Family::Y, lambda)
}

/// `W_{−λ_1} ⋯ W_{−λ_k}.1`
pub fn o_vertex(lambda: &Partition) -> SymFunc {
    creation_word(Family::W, lambda)
}

/// `S_{−λ_1} ⋯ S_{−λ_k}.1`
pub fn schur_vertex(lambda: &Partition) -> SymFunc {
    creation_word(Family::S, lambda)
}

/// `(−1)^{|λ|} S*_{λ′_1} ⋯ S*_{λ′_k}.1`
pub fn schur_dual_vertex(lambda: &Partition) -> SymFunc {
    dual_word(Family::SStar, lambda)
}

/// `(−1)^{|λ|} Y*_{λ′_1} ⋯ Y*_{λ′_k}.1`
pub fn sp_dual_vertex(lambda: &Partition) -> SymFunc {
    dual_word(Family::YStar, lambda)
}

/// `(−1)^{|λ|} W*_{λ′_1} ⋯ W*_{λ′_k}.1`
pub fn o_dual_vertex(lambda: &Partition) -> SymFunc {
    dual_word(Family::WStar, lambda)
}

/// `X*_{λ_1} ⋯ X*_{λ_k}.1` without sign or conjugation.
pub fn starred_word(family: Family, lambda: &Partition) -> SymFunc {
    let word: Vec<_> = lambda.parts().iter().map(|&p| (family, p as i64)).collect();
    mode_word(&word)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CharKind {
    Sp,
    O,
    Schur,
}

impl CharKind {
    /// `(creation, starred)` operator families.
    pub fn families(self) -> (Family, Family) {
        match self {
            CharKind::Sp => (Family::Y, Family::YStar),
            CharKind::O => (Family::W, Family::WStar),
            CharKind::Schur => (Family::S, Family::SStar),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FrobeniusVariant {
    /// `(−1)^{|β|+r(r−1)/2} X_{−α_1−1} ⋯ X_{−α_r−r} X*_{β_1−(r−1)} ⋯ X*_{β_r}.1`
    CreationFirst,
    /// `(−1)^{|β|+r(r+1)/2} X*_{β_1+1} ⋯ X*_{β_r+r} X_{−α_1+(r−1)} ⋯ X_{−α_r}.1`
    AnnihilationFirst,
}

/// The signed mode word of `variant` for the partition `(α|β)`.
pub fn frobenius_word(kind: CharKind, fc: &FrobeniusCoords, variant: FrobeniusVariant) -> (bool, Vec<(Family, i64)>) {
    let (create, star) = kind.families();
    let r = fc.rank() as i64;
    let beta_weight: i64 = fc.beta().iter().map(|&b| b as i64).sum();
    let alpha = |i: usize| fc.alpha()[i] as i64;
    let beta = |i: usize| fc.beta()[i] as i64;
    match variant {
        FrobeniusVariant::CreationFirst => {
            let mut word: Vec<_> = (0..fc.rank()).map(|i| (create, -alpha(i) - (i as i64 + 1))).collect();
            word.extend((0..fc.rank()).map(|i| (star, beta(i) - (r - 1 - i as i64))));
            ((beta_weight + r * (r - 1) / 2) % 2 == 1, word)
        }
        FrobeniusVariant::AnnihilationFirst => {
            let mut word: Vec<_> = (0..fc.rank()).map(|i| (star, beta(i) + i as i64 + 1)).collect();
            word.extend((0..fc.rank()).map(|i| (create, -alpha(i) + (r - 1 - i as i64))));
            ((beta_weight + r * (r + 1) / 2) % 2 == 1, word)
        }
    }
}

/// Evaluates the Frobenius-notation realization of `s`, `sp` or `o`.
pub fn frobenius_vertex(kind: CharKind, fc: &FrobeniusCoords, variant: FrobeniusVariant) -> SymFunc {
    let (negative, word) = frobenius_word(kind, fc, variant);
    signed(mode_word(&word), negative)
}

/// Pairs of operator families in the exchange relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CliffordPair {
    /// `Y_m Y_n + Y_{n+1} Y_{m−1} = 0`
    YY,
    /// `Y*_m Y*_n + Y*_{n−1} Y*_{m+1} = 0`
    YStarYStar,
    /// `Y_m Y*_n + Y*_{n+1} Y_{m+1} = δ_{m,n}`
    YYStar,
    WW,
    WStarWStar,
    WWStar,
}

impl CliffordPair {
    pub const ALL: [CliffordPair; 6] = [
        CliffordPair::YY,
        CliffordPair::YStarYStar,
        CliffordPair::YYStar,
        CliffordPair::WW,
        CliffordPair::WStarWStar,
        CliffordPair::WWStar,
    ];

    /// `(first, second, index shape)`
    fn layout(self) -> (Family, Family, u8) {
        match self {
            CliffordPair::YY => (Family::Y, Family::Y, 0),
            CliffordPair::YStarYStar => (Family::YStar, Family::YStar, 1),
            CliffordPair::YYStar => (Family::Y, Family::YStar, 2),
            CliffordPair::WW => (Family::W, Family::W, 0),
            CliffordPair::WStarWStar => (Family::WStar, Family::WStar, 1),
            CliffordPair::WWStar => (Family::W, Family::WStar, 2),
        }
    }
}

/// `(LHS − RHS)(f)` for one exchange relation.
pub fn clifford_residual(pair: CliffordPair, m: i64, n: i64, f: &SymFunc) -> SymFunc {
    let (a, b, shape) = pair.layout();
    let (direct, swapped) = match shape {
        0 => ([(a, m), (a, n)], [(a, n + 1), (a, m - 1)]),
        1 => ([(a, m), (a, n)], [(a, n - 1), (a, m + 1)]),
        _ => ([(a, m), (b, n)], [(b, n + 1), (a, m + 1)]),
    };
    let mut residual = apply_word(&direct, f);
    residual.add_scaled(&apply_word(&swapped, f), &Rational::one());
    if shape == 2 && m == n {
        residual.add_scaled(&f.to_p(), &-Rational::one());
    }
    residual
}

/// [`clifford_residual`] for every `(m, n)` in `indices × indices`, in
/// row-major order. Inner results and annihilation passes are shared across
/// the grid.
pub fn clifford_residuals(pair: CliffordPair, indices: RangeInclusive<i64>, f: &SymFunc) -> Vec<((i64, i64), SymFunc)> {
    let (a, b, shape) = pair.layout();
    let (a_spec, b_spec) = (a.spec(), b.spec());
    let idx: Vec<i64> = indices.collect();
    let f = f.to_p();
    let mut grid: BTreeMap<(i64, i64), SymFunc> = BTreeMap::new();
    // direct term: outer a_m on inner b_n f
    for &n in &idx {
        let inner = mode(&b_spec, n, &f);
        let slice = apply_annihilation(&a_spec, &inner);
        for &m in &idx {
            grid.insert((m, n), mode_from_slice(&a_spec, m, &slice));
        }
    }
    // swapped term: inner index depends on m, outer on n
    let (outer_spec, inner_shift, outer_shift) = match shape {
        0 => (&a_spec, -1, 1),
        1 => (&a_spec, 1, -1),
        _ => (&b_spec, 1, 1),
    };
    for &m in &idx {
        let inner = mode(&a_spec, m + inner_shift, &f);
        let slice = apply_annihilation(outer_spec, &inner);
        for &n in &idx {
            let slot = grid.get_mut(&(m, n)).expect("filled above");
            slot.add_scaled(&mode_from_slice(outer_spec, n + outer_shift, &slice), &Rational::one());
            if shape == 2 && m == n {
                slot.add_scaled(&f, &-Rational::one());
            }
        }
    }
    grid.into_iter().collect()
}

/// Candidate index relations between the symplectic and orthogonal modes.
///
/// `W(z) = (1 − z²) Y(z)` forces `W_n = Y_n − Y_{n+2}`, and
/// `Y*(z) = (1 − z²) W*(z)` forces `Y*_n = W*_n − W*_{n−2}`. The variants with
/// the opposite shift are kept so that both index conventions can be tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModeRelation {
    /// `W_n = Y_n − Y_{n+2}`
    WAsYDifferenceUp,
    /// `W_n = Y_n − Y_{n−2}`
    WAsYDifferenceDown,
    /// `Y_n = W_n + W_{n+2} + W_{n+4} + ⋯`
    YAsWSumUp,
    /// `Y_n = W_n + W_{n−2} + W_{n−4} + ⋯`
    YAsWSumDown,
    /// `Y*_n = W*_n − W*_{n−2}`
    YStarAsWStarDifferenceDown,
    /// `Y*_n = W*_n − W*_{n+2}`
    YStarAsWStarDifferenceUp,
    /// `W*_n = Y*_n + Y*_{n−2} + Y*_{n−4} + ⋯`
    WStarAsYStarSumDown,
    /// `W*_n = Y*_n + Y*_{n+2} + Y*_{n+4} + ⋯`
    WStarAsYStarSumUp,
}

impl ModeRelation {
    pub const ALL: [ModeRelation; 8] = [
        ModeRelation::WAsYDifferenceUp,
        ModeRelation::WAsYDifferenceDown,
        ModeRelation::YAsWSumUp,
        ModeRelation::YAsWSumDown,
        ModeRelation::YStarAsWStarDifferenceDown,
        ModeRelation::YStarAsWStarDifferenceUp,
        ModeRelation::WStarAsYStarSumDown,
        ModeRelation::WStarAsYStarSumUp,
    ];

    /// Whether the relation follows from the generating-function definitions.
    pub fn is_derived(self) -> bool {
        matches!(
            self,
            ModeRelation::WAsYDifferenceUp
                | ModeRelation::YAsWSumUp
                | ModeRelation::YStarAsWStarDifferenceDown
                | ModeRelation::WStarAsYStarSumDown
        )
    }
}

/// Residual `LHS − RHS` of `relation` at index `n` on `f`.
///
/// Sums stop once their summands vanish on `f`: unstarred modes `X_m` kill
/// anything of degree `< m`, starred modes `X*_m` kill anything of degree
/// `< −m`. Sums in the other direction never vanish and are cut at
/// `max_terms` summands.
pub fn mode_relation_residual(relation: ModeRelation, n: i64, f: &SymFunc, max_terms: usize) -> SymFunc {
    use ModeRelation::*;
    let d = f.degree().unwrap_or(0) as i64;
    let (lhs, combination): (Family, Vec<(Family, i64, i64)>) = match relation {
        WAsYDifferenceUp => (Family::W, vec![(Family::Y, n, 1), (Family::Y, n + 2, -1)]),
        WAsYDifferenceDown => (Family::W, vec![(Family::Y, n, 1), (Family::Y, n - 2, -1)]),
        YStarAsWStarDifferenceDown => (Family::YStar, vec![(Family::WStar, n, 1), (Family::WStar, n - 2, -1)]),
        YStarAsWStarDifferenceUp => (Family::YStar, vec![(Family::WStar, n, 1), (Family::WStar, n + 2, -1)]),
        YAsWSumUp | YAsWSumDown | WStarAsYStarSumDown | WStarAsYStarSumUp => {
            let (lhs, family, step) = match relation {
                YAsWSumUp => (Family::Y, Family::W, 2),
                YAsWSumDown => (Family::Y, Family::W, -2),
                WStarAsYStarSumDown => (Family::WStar, Family::YStar, -2),
                _ => (Family::WStar, Family::YStar, 2),
            };
            let starred = family == Family::YStar;
            let vanishes = |idx: i64| if starred { idx < -d } else { idx > d };
            let terms = (0..max_terms as i64)
                .map(|k| n + step * k)
                .take_while(|&idx| !vanishes(idx))
                .map(|idx| (family, idx, 1))
                .collect();
            (lhs, terms)
        }
    };
    let mut residual = mode(&lhs.spec(), n, f);
    for (family, idx, c) in combination {
        residual.add_scaled(&mode(&family.spec(), idx, f), &Rational::from_integer((-c).into()));
    }
    residual
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::symring::{gen_e, gen_h, schur};
    use crate::weyldet;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn one() -> SymFunc {
        SymFunc::one(Basis::P)
    }

    #[test]
    fn annihilation_examples() {
        let y = Family::Y.spec();
        let vac = apply_annihilation(&y, &one());
        assert_eq!(vac.iter().map(|(e, f)| (e, f.clone())).collect::<Vec<_>>(), vec![(0, one())]);
        let s = apply_annihilation(&y, &SymFunc::p(&[1]));
        assert_eq!(s.coeff(0), SymFunc::p(&[1]));
        assert_eq!(s.coeff(-1), one().neg());
        assert_eq!(s.coeff(1), one().neg());
        assert_eq!(s.iter().count(), 3);
        let s = apply_annihilation(&Family::S.spec(), &SymFunc::p(&[2]));
        assert_eq!(s.coeff(0), SymFunc::p(&[2]));
        assert_eq!(s.coeff(-2), one().neg());
        assert_eq!(s.iter().count(), 2);
    }

    #[test]
    fn mode_examples() {
        for n in 0..6 {
            assert_eq!(mode(&Family::S.spec(), -n, &one()), gen_h(n));
        }
        assert_eq!(mode(&Family::YStar.spec(), 2, &one()), gen_e(2).sub(&one()).unwrap());
        assert!(mode(&Family::Y.spec(), 1, &one()).is_zero());
        assert_eq!(mode_word(&[(Family::Y, -2)]), gen_h(2));
        assert_eq!(mode_word(&[(Family::WStar, 0)]), one());
    }

    #[test]
    fn y_word_on_vacuum() {
        let got = mode_word(&[(Family::Y, -1), (Family::Y, -1)]);
        assert_eq!(got, weyldet::sp(&part(&[1, 1])));
        assert_eq!(got, gen_e(2).sub(&one()).unwrap());
    }

    #[test]
    fn realization_examples() {
        for n in 0..5 {
            assert_eq!(sp_vertex(&part(&[n])), gen_h(n as i64));
        }
        assert_eq!(sp_dual_vertex(&part(&[1, 1])), gen_e(2).sub(&one()).unwrap());
        assert_eq!(schur_vertex(&part(&[2, 1])), schur(&part(&[2, 1])));
    }

    #[test]
    fn frobenius_examples() {
        let fc = part(&[1, 1]).to_frobenius();
        let got = frobenius_vertex(CharKind::Sp, &fc, FrobeniusVariant::CreationFirst);
        assert_eq!(got, gen_e(2).sub(&one()).unwrap());
        for n in 1..5 {
            let fc = part(&[n]).to_frobenius();
            assert_eq!(frobenius_vertex(CharKind::Schur, &fc, FrobeniusVariant::CreationFirst), schur(&part(&[n])));
        }
        let fc = part(&[1, 1]).to_frobenius();
        assert_eq!(frobenius_vertex(CharKind::O, &fc, FrobeniusVariant::AnnihilationFirst), weyldet::o(&part(&[1, 1])));
        let empty = Partition::empty().to_frobenius();
        for v in [FrobeniusVariant::CreationFirst, FrobeniusVariant::AnnihilationFirst] {
            assert_eq!(frobenius_vertex(CharKind::Sp, &empty, v), one());
        }
    }

    #[test]
    fn clifford_examples() {
        assert!(clifford_residual(CliffordPair::YYStar, 0, 0, &one()).is_zero());
        assert!(clifford_residual(CliffordPair::YY, 2, 1, &SymFunc::p(&[2, 1])).is_zero());
        assert!(clifford_residual(CliffordPair::WStarWStar, 1, 1, &SymFunc::p(&[1, 1])).is_zero());
        // the δ term matters: without it the mixed relation is off by f
        let f = SymFunc::p(&[2]);
        let mut raw = apply_word(&[(Family::Y, 1), (Family::YStar, 1)], &f);
        raw.add_scaled(&apply_word(&[(Family::YStar, 2), (Family::Y, 2)], &f), &int(1));
        assert_eq!(raw, f);
    }

    #[test]
    fn batched_residuals_match_single() {
        let f = SymFunc::p(&[2, 1]);
        for pair in CliffordPair::ALL {
            for ((m, n), r) in clifford_residuals(pair, -2..=2, &f) {
                assert_eq!(r, clifford_residual(pair, m, n, &f), "{pair:?} {m} {n}");
            }
        }
    }

    #[test]
    fn vacuum_laws() {
        for family in Family::ALL {
            let spec = family.spec();
            if spec.orientation == Orientation::Negative {
                for n in 1..5 {
                    assert!(mode(&spec, n, &one()).is_zero(), "{family:?}_{n}");
                }
            }
            assert_eq!(mode(&spec, 0, &one()), one(), "{family:?}_0");
        }
    }

    #[test]
    fn derived_relations_hold_opposite_shifts_fail() {
        for relation in ModeRelation::ALL {
            let mut failures = 0;
            for f in [one(), SymFunc::p(&[1]), SymFunc::p(&[2, 1])] {
                for n in -3..=3 {
                    if !mode_relation_residual(relation, n, &f, 12).is_zero() {
                        failures += 1;
                    }
                }
            }
            assert_eq!(failures == 0, relation.is_derived(), "{relation:?}");
        }
    }

    #[test]
    fn degree_bound() {
        for family in Family::ALL {
            let spec = family.spec();
            let extra = if spec.prefactor_degree() == 2 { 2 } else { 0 };
            for f in [one(), SymFunc::p(&[3, 1]), gen_h(4)] {
                let d = f.degree().unwrap() as i64;
                for n in 0..=4 {
                    let g = mode(&spec, -n, &f);
                    if let Some(top) = g.degree() {
                        assert!((top as i64) <= d + n + extra, "{family:?} n={n}");
                    }
                }
            }
        }
    }
}
