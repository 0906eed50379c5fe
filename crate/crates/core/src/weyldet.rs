//! Division-free determinants over Λ and the determinant formulae for
//! Schur, symplectic and orthogonal Schur functions.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{self, frac, int, Rational};
use crate::ring::CommRing;
use crate::specialize::SignedPermutation;
use crate::symring::{Basis, Generator, SymFunc};

/// A square matrix over a commutative ring.
#[derive(Clone, Debug)]
pub struct RingMatrix<T> {
    k: usize,
    entries: Vec<Vec<T>>,
}

impl<T: CommRing> RingMatrix<T> {
    pub fn new(entries: Vec<Vec<T>>) -> Result<Self> {
        let k = entries.len();
        if entries.iter().any(|row| row.len() != k) {
            return Err(Error::Parse(format!("matrix must be square, got {k} rows of mixed width")));
        }
        Ok(RingMatrix { k, entries })
    }

    pub fn from_fn(k: usize, f: impl Fn(usize, usize) -> T) -> Self {
        RingMatrix { k, entries: (0..k).map(|i| (0..k).map(|j| f(i, j)).collect()).collect() }
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn entry(&self, i: usize, j: usize) -> &T {
        &self.entries[i][j]
    }
}

/// Laplace expansion along rows, memoized on the set of consumed columns.
/// Needs no division, so it works over any commutative ring.
pub fn det_over_ring<T: CommRing>(m: &RingMatrix<T>) -> T {
    let k = m.k;
    if k == 0 {
        return T::ring_one();
    }
    assert!(k < 32, "determinant dimension {k} too large");
    let full = (1u32 << k) - 1;
    // memo[mask] = det of rows popcount(mask).. over the columns outside mask
    let mut memo: Vec<Option<T>> = vec![None; 1 << k];
    memo[full as usize] = Some(T::ring_one());
    // masks with more bits are resolved first
    let mut by_pop: Vec<u32> = (0..full).collect();
    by_pop.sort_by_key(|mask| std::cmp::Reverse(mask.count_ones()));
    for mask in by_pop {
        let row = mask.count_ones() as usize;
        let mut acc = T::ring_zero();
        let mut free_before = 0usize;
        for col in 0..k {
            if mask & (1 << col) != 0 {
                continue;
            }
            let sub = memo[(mask | (1 << col)) as usize].as_ref().expect("resolved");
            let entry = &m.entries[row][col];
            if !entry.ring_is_zero() && !sub.ring_is_zero() {
                let term = entry.ring_mul(sub);
                if free_before.is_multiple_of(2) {
                    acc.ring_add_assign(&term);
                } else {
                    acc.ring_add_assign(&term.ring_neg());
                }
            }
            free_before += 1;
        }
        memo[mask as usize] = Some(acc);
    }
    memo[0].take().expect("root resolved")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Character {
    Sp,
    O,
}

/// Entry pattern of a generator determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Shape {
    /// `½ det(g_{λ_i−i+j} + g_{λ_i−i−j+2})`
    Plus,
    /// `det(g_{λ_i−i+j} − g_{λ_i−i−j})`
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DetFormula {
    pub character: Character,
    pub generator: Generator,
    pub shape: Shape,
    /// Index by `λ′` instead of `λ`.
    pub conjugated: bool,
}

impl DetFormula {
    const fn new(character: Character, generator: Generator, shape: Shape, conjugated: bool) -> Self {
        DetFormula { character, generator, shape, conjugated }
    }

    pub const SP: [DetFormula; 4] = [
        DetFormula::new(Character::Sp, Generator::H, Shape::Plus, false),
        DetFormula::new(Character::Sp, Generator::HCheck, Shape::Minus, false),
        DetFormula::new(Character::Sp, Generator::E, Shape::Minus, true),
        DetFormula::new(Character::Sp, Generator::EHat, Shape::Plus, true),
    ];

    pub const O: [DetFormula; 4] = [
        DetFormula::new(Character::O, Generator::H, Shape::Minus, false),
        DetFormula::new(Character::O, Generator::HHat, Shape::Plus, false),
        DetFormula::new(Character::O, Generator::E, Shape::Plus, true),
        DetFormula::new(Character::O, Generator::ECheck, Shape::Minus, true),
    ];

    /// The admissible formula for `character` built from `generator`, if any.
    pub fn lookup(character: Character, generator: Generator) -> Result<DetFormula> {
        let table = match character {
            Character::Sp => &DetFormula::SP,
            Character::O => &DetFormula::O,
        };
        table
            .iter()
            .find(|f| f.generator == generator)
            .copied()
            .ok_or_else(|| Error::InadmissibleFormula(format!("no {character:?} formula in terms of {generator:?}")))
    }

    pub fn is_admissible(&self) -> bool {
        DetFormula::SP.contains(self) || DetFormula::O.contains(self)
    }
}

impl fmt::Display for DetFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = if self.conjugated { "λ′" } else { "λ" };
        match self.shape {
            Shape::Plus => write!(f, "{:?}: ½det({:?}[{idx}] plus)", self.character, self.generator),
            Shape::Minus => write!(f, "{:?}: det({:?}[{idx}] minus)", self.character, self.generator),
        }
    }
}

fn generator_entry(generator: Generator, lambda: &Partition, shape: Shape, i: usize, j: usize) -> SymFunc {
    // 1-based indices as in the defining formulae
    let (i1, j1) = (i as i64 + 1, j as i64 + 1);
    let base = lambda.part(i) as i64 - i1;
    let first = generator.cached(base + j1);
    match shape {
        Shape::Plus => {
            let mut f = (*first).clone();
            f.add_scaled(&generator.cached(base - j1 + 2), &Rational::one());
            f
        }
        Shape::Minus => {
            let mut f = (*first).clone();
            f.add_scaled(&generator.cached(base - j1), &-Rational::one());
            f
        }
    }
}

/// The `ℓ(λ) × ℓ(λ)` generator matrix for `shape`.
pub fn generator_matrix(lambda: &Partition, generator: Generator, shape: Shape) -> RingMatrix<SymFunc> {
    RingMatrix::from_fn(lambda.length(), |i, j| generator_entry(generator, lambda, shape, i, j))
}

/// `½ det(g_{λ_i−i+j} + g_{λ_i−i−j+2})` or `det(g_{λ_i−i+j} − g_{λ_i−i−j})`.
///
/// The first column of the plus matrix is `2 g_{λ_i−i+1}`, so the ½ is exact
/// for any nonempty λ; the empty determinant is 1.
pub fn generator_det(lambda: &Partition, generator: Generator, shape: Shape) -> SymFunc {
    let det = det_over_ring(&generator_matrix(lambda, generator, shape));
    match shape {
        Shape::Plus if !lambda.is_empty() => det.scale(&frac(1, 2)),
        _ => det,
    }
}

fn check_character(formula: &DetFormula, expected: Character) -> Result<()> {
    if formula.character != expected || !formula.is_admissible() {
        return Err(Error::InadmissibleFormula(formula.to_string()));
    }
    Ok(())
}

fn formula_det(lambda: &Partition, formula: &DetFormula) -> SymFunc {
    let index = if formula.conjugated { lambda.conjugate() } else { lambda.clone() };
    generator_det(&index, formula.generator, formula.shape)
}

/// Symplectic Schur function `sp_λ` by one of its four determinant formulae.
pub fn sp_det(lambda: &Partition, formula: &DetFormula) -> Result<SymFunc> {
    check_character(formula, Character::Sp)?;
    Ok(formula_det(lambda, formula))
}

/// Orthogonal Schur function `o_λ` by one of its four determinant formulae.
pub fn o_det(lambda: &Partition, formula: &DetFormula) -> Result<SymFunc> {
    check_character(formula, Character::O)?;
    Ok(formula_det(lambda, formula))
}

/// `sp_λ = ½ det(h_{λ_i−i+j} + h_{λ_i−i−j+2})`.
pub fn sp(lambda: &Partition) -> SymFunc {
    formula_det(lambda, &DetFormula::SP[0])
}

/// `o_λ = det(h_{λ_i−i+j} − h_{λ_i−i−j})`.
pub fn o(lambda: &Partition) -> SymFunc {
    formula_det(lambda, &DetFormula::O[0])
}

/// `s_λ = det(h_{λ_i−i+j})` (H) or `det(e_{λ′_i−i+j})` (E), in the power-sum basis.
pub fn jacobi_trudi(lambda: &Partition, generator: Generator) -> SymFunc {
    let index = match generator {
        Generator::H => lambda.clone(),
        Generator::E => lambda.conjugate(),
        other => panic!("Jacobi–Trudi is defined for h or e, not {other:?}"),
    };
    let m = RingMatrix::from_fn(index.length(), |i, j| {
        (*generator.cached(index.part(i) as i64 - i as i64 + j as i64)).clone()
    });
    det_over_ring(&m)
}

pub fn jacobi_trudi_checked(lambda: &Partition, basis: Basis) -> Result<SymFunc> {
    match basis {
        Basis::H => Ok(jacobi_trudi(lambda, Generator::H)),
        Basis::E => Ok(jacobi_trudi(lambda, Generator::E)),
        other => Err(Error::WrongBasis { expected: Basis::H, found: other }),
    }
}

/// `(−1)^{|λ|+k(k−1)/2} det(e_{λ_i−i−j+k+1} − e_{λ_i−i+j−k−1})`, the
/// column-reversed form of the starred symplectic word.
pub fn column_reversed_e_det(lambda: &Partition) -> SymFunc {
    let k = lambda.length() as i64;
    let m = RingMatrix::from_fn(lambda.length(), |i, j| {
        let (i1, j1) = (i as i64 + 1, j as i64 + 1);
        let base = lambda.part(i) as i64 - i1;
        let mut f = (*Generator::E.cached(base - j1 + k + 1)).clone();
        f.add_scaled(&Generator::E.cached(base + j1 - k - 1), &-Rational::one());
        f
    });
    let det = det_over_ring(&m);
    if (lambda.weight() as i64 + k * (k - 1) / 2) % 2 == 1 {
        det.neg()
    } else {
        det
    }
}

/// The three Vandermonde-like kernels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KernelKind {
    /// `det(z_i^{k−j} + z_i^{k+j−2}) = 2 ∏_{i<j} (z_i − z_j)(1 − z_i z_j)`
    DType,
    /// `det(z_i^{k−j} − z_i^{k+j}) = ∏_{i<j} (z_i − z_j) ∏_{i≤j} (1 − z_i z_j)`
    CType,
    /// `det(z_i^{j−1} − z_i^{2k−j+1}) = ∏_{i<j} (z_j − z_i) ∏_{i≤j} (1 − z_i z_j)`
    CReversed,
}

impl KernelKind {
    pub const ALL: [KernelKind; 3] = [KernelKind::DType, KernelKind::CType, KernelKind::CReversed];
}

/// The three sides of a kernel identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelSides<T> {
    pub lhs: T,
    pub rhs_product: T,
    pub rhs_sum: T,
}

impl<T: PartialEq> KernelSides<T> {
    pub fn agree(&self) -> bool {
        self.lhs == self.rhs_product && self.rhs_product == self.rhs_sum
    }
}

fn ring_int<T: CommRing>(n: i64) -> T {
    let mut acc = T::ring_zero();
    let unit = if n < 0 { T::ring_one().ring_neg() } else { T::ring_one() };
    for _ in 0..n.unsigned_abs() {
        acc.ring_add_assign(&unit);
    }
    acc
}

/// Evaluates all three sides over any ring, given `mono(i, e) = z_i^e`.
fn kernel_sides<T: CommRing>(kind: KernelKind, k: usize, mono: impl Fn(usize, i64) -> T) -> KernelSides<T> {
    let ki = k as i64;
    let matrix = RingMatrix::from_fn(k, |i, j| {
        let j1 = j as i64 + 1;
        match kind {
            KernelKind::DType => mono(i, ki - j1).ring_add(&mono(i, ki + j1 - 2)),
            KernelKind::CType => mono(i, ki - j1).ring_sub(&mono(i, ki + j1)),
            KernelKind::CReversed => mono(i, j1 - 1).ring_sub(&mono(i, 2 * ki - j1 + 1)),
        }
    });
    let lhs = det_over_ring(&matrix);

    let mut product = match kind {
        KernelKind::DType => ring_int::<T>(2),
        _ => T::ring_one(),
    };
    for i in 0..k {
        for j in i..k {
            let one_minus = T::ring_one().ring_sub(&mono(i, 1).ring_mul(&mono(j, 1)));
            if j > i {
                let diff = match kind {
                    KernelKind::CReversed => mono(j, 1).ring_sub(&mono(i, 1)),
                    _ => mono(i, 1).ring_sub(&mono(j, 1)),
                };
                product = product.ring_mul(&diff).ring_mul(&one_minus);
            } else if kind != KernelKind::DType {
                product = product.ring_mul(&one_minus);
            }
        }
    }

    let mut sum = T::ring_zero();
    for w in SignedPermutation::all(k) {
        // D-type terms carry sgn(σ) only, the C types sgn(σ) ε_1⋯ε_k
        let sign = match kind {
            KernelKind::DType => w.perm_sign(),
            _ => w.sign(),
        };
        let mut term = if sign < 0 { T::ring_one().ring_neg() } else { T::ring_one() };
        for i in 0..k {
            let sigma = w.image(i) as i64 + 1;
            let eps = w.sign_at(i) as i64;
            let exponent = match kind {
                KernelKind::DType => (ki - 1) + eps * (sigma - 1),
                KernelKind::CType => ki - eps * sigma,
                KernelKind::CReversed => ki + eps * (-ki + sigma - 1),
            };
            term = term.ring_mul(&mono(i, exponent));
        }
        sum.ring_add_assign(&term);
    }
    KernelSides { lhs, rhs_product: product, rhs_sum: sum }
}

/// Evaluates a kernel identity at an exact rational point.
///
/// The point must have distinct nonzero entries with `z_i ≠ ±1` and
/// `z_i z_j ≠ 1`, so that no side vanishes for trivial reasons.
pub fn vandermonde_kernel(kind: KernelKind, point: &[Rational]) -> Result<KernelSides<Rational>> {
    if point.is_empty() {
        return Err(Error::DegeneratePoint("no variables".into()));
    }
    for (i, zi) in point.iter().enumerate() {
        if zi.is_zero() || zi.is_one() || (-zi).is_one() {
            return Err(Error::DegeneratePoint(format!("z_{} = {}", i + 1, rational::format(zi))));
        }
        for (j, zj) in point.iter().enumerate().skip(i + 1) {
            if zi == zj || (zi * zj).is_one() {
                return Err(Error::DegeneratePoint(format!("z_{} and z_{} collide", i + 1, j + 1)));
            }
        }
    }
    Ok(kernel_sides(kind, point.len(), |i, e| rational::pow(&point[i], e)))
}

/// Sparse Laurent polynomial in `z_1, …, z_k` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl LaurentPoly {
    pub fn monomial(nvars: usize, var: usize, exponent: i64) -> Self {
        let mut e = vec![0; nvars];
        e[var] = exponent;
        LaurentPoly { terms: BTreeMap::from([(e, Rational::one())]) }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<i64>, c: Rational) {
        let slot = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn unify(a: &[i64], b: &[i64]) -> Vec<i64> {
        let n = a.len().max(b.len());
        (0..n).map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)).collect()
    }

    fn normalize(e: &[i64]) -> Vec<i64> {
        let mut v = e.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }
}

/// Exponent vectors are stored without trailing zeros so that polynomials in
/// different numbers of variables compare correctly.
impl CommRing for LaurentPoly {
    fn ring_zero() -> Self {
        LaurentPoly::default()
    }

    fn ring_one() -> Self {
        LaurentPoly { terms: BTreeMap::from([(Vec::new(), Rational::one())]) }
    }

    fn ring_is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn ring_add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    fn ring_mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(LaurentPoly::normalize(&LaurentPoly::unify(ea, eb)), ca * cb);
            }
        }
        out
    }

    fn ring_neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

/// Symbolic expansion of all three sides as Laurent polynomials in `k` variables.
pub fn vandermonde_symbolic(kind: KernelKind, k: usize) -> KernelSides<LaurentPoly> {
    kernel_sides(kind, k, |i, e| {
        let mut m = LaurentPoly::monomial(k, i, e);
        m.terms = m.terms.into_iter().map(|(e, c)| (LaurentPoly::normalize(&e), c)).collect();
        m
    })
}

/// Integer evaluation point.
pub fn point(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| int(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;
    use crate::symring::{gen_e, gen_h, schur};

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn one() -> SymFunc {
        SymFunc::one(Basis::P)
    }

    #[test]
    fn small_determinants() {
        let m = RingMatrix::new(vec![vec![gen_h(1), gen_h(2)], vec![one(), gen_h(1)]]).unwrap();
        assert_eq!(det_over_ring(&m), gen_e(2));
        let id = RingMatrix::from_fn(3, |i, j| if i == j { one() } else { SymFunc::zero(Basis::P) });
        assert_eq!(det_over_ring(&id), one());
        let single = RingMatrix::new(vec![vec![gen_h(3)]]).unwrap();
        assert_eq!(det_over_ring(&single), gen_h(3));
        let empty: RingMatrix<SymFunc> = RingMatrix::new(vec![]).unwrap();
        assert_eq!(det_over_ring(&empty), one());
    }

    #[test]
    fn rational_determinant_matches_leibniz() {
        let m = RingMatrix::from_fn(4, |i, j| int(((i * 7 + j * 3) % 5) as i64 - 2));
        let mut leibniz = Rational::zero();
        for w in SignedPermutation::all(4).into_iter().filter(|w| (0..4).all(|i| w.sign_at(i) > 0)) {
            let mut t = if w.perm_sign() < 0 { -Rational::one() } else { Rational::one() };
            for i in 0..4 {
                t *= m.entry(i, w.image(i)).clone();
            }
            leibniz += t;
        }
        assert_eq!(det_over_ring(&m), leibniz);
    }

    #[test]
    fn defining_examples() {
        for n in 0..7 {
            assert_eq!(sp_det(&part(&[n]), &DetFormula::SP[0]).unwrap(), gen_h(n as i64));
        }
        assert_eq!(sp(&part(&[1, 1])), gen_e(2).sub(&one()).unwrap());
        assert_eq!(o(&part(&[2])), gen_h(2).sub(&one()).unwrap());
        assert_eq!(sp(&Partition::empty()), one());
        assert_eq!(o(&Partition::empty()), one());
    }

    #[test]
    fn inadmissible_formulas_rejected() {
        let bad = DetFormula::new(Character::Sp, Generator::HHat, Shape::Plus, false);
        assert!(matches!(sp_det(&part(&[1]), &bad), Err(Error::InadmissibleFormula(_))));
        assert!(sp_det(&part(&[1]), &DetFormula::O[0]).is_err());
        assert!(o_det(&part(&[1]), &DetFormula::SP[1]).is_err());
        assert!(DetFormula::lookup(Character::O, Generator::HCheck).is_err());
        assert_eq!(DetFormula::lookup(Character::O, Generator::HHat).unwrap(), DetFormula::O[1]);
    }

    #[test]
    fn jacobi_trudi_examples() {
        let h21 = jacobi_trudi(&part(&[2, 1]), Generator::H).to_basis(Basis::H);
        let expected = SymFunc::from_terms(Basis::H, [(part(&[2, 1]), int(1)), (part(&[3]), int(-1))]);
        assert_eq!(h21, expected);
        for n in 1..6 {
            let ones = Partition::new(vec![1; n]).unwrap();
            assert_eq!(jacobi_trudi(&ones, Generator::H), gen_e(n as i64));
        }
        assert_eq!(jacobi_trudi(&Partition::empty(), Generator::E), one());
        assert!(jacobi_trudi_checked(&part(&[1]), Basis::Schur).is_err());
    }

    #[test]
    fn jacobi_trudi_forms_agree() {
        for lambda in partitions_up_to(8) {
            assert_eq!(jacobi_trudi(&lambda, Generator::E), schur(&lambda), "{lambda}");
        }
    }

    #[test]
    fn all_formulae_agree_small() {
        for lambda in partitions_up_to(5) {
            let spv = sp(&lambda);
            for f in &DetFormula::SP {
                assert_eq!(sp_det(&lambda, f).unwrap(), spv, "{f} at {lambda}");
            }
            let ov = o(&lambda);
            for f in &DetFormula::O {
                assert_eq!(o_det(&lambda, f).unwrap(), ov, "{f} at {lambda}");
            }
        }
    }

    #[test]
    fn kernel_small_examples() {
        let d = vandermonde_kernel(KernelKind::DType, &point(&[3])).unwrap();
        assert_eq!(d, KernelSides { lhs: int(2), rhs_product: int(2), rhs_sum: int(2) });
        let c = vandermonde_kernel(KernelKind::CType, &point(&[3])).unwrap();
        assert_eq!(c, KernelSides { lhs: int(-8), rhs_product: int(-8), rhs_sum: int(-8) });
        assert!(vandermonde_kernel(KernelKind::CType, &point(&[2, 2])).is_err());
        assert!(vandermonde_kernel(KernelKind::CType, &[frac(1, 2), int(2)]).is_err());
        assert!(vandermonde_kernel(KernelKind::DType, &point(&[0])).is_err());
        assert!(vandermonde_kernel(KernelKind::DType, &point(&[-1])).is_err());
    }

    #[test]
    fn kernels_symbolic_up_to_three() {
        for kind in KernelKind::ALL {
            for k in 1..=3 {
                let sides = vandermonde_symbolic(kind, k);
                assert!(sides.agree(), "{kind:?} k={k}: {sides:?}");
            }
        }
    }
}
