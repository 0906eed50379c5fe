//! Evaluation of symmetric functions at finite variable sets, and brute-force
//! Weyl character oracles for `Sp(2n)`, `SO(2n+1)` and `SO(2n)`.

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{self, Rational};
use crate::symring::SymFunc;
use crate::weyldet;

/// Where the power-sum values of an [`EvalPoint`] came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `p_n = Σ (x_i^n + x_i^{−n})`
    Symplectic(Vec<Rational>),
    /// `p_n = 1 + Σ (x_i^n + x_i^{−n})`
    OddOrthogonal(Vec<Rational>),
    /// `p_n = Σ (x_i^n + x_i^{−n})`
    EvenOrthogonal(Vec<Rational>),
    Raw,
}

/// Values for `p_1, …, p_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalPoint {
    p_values: Vec<Rational>,
    provenance: Provenance,
}

fn torus_power_sums(xs: &[Rational], max_degree: u32, constant: i64) -> Result<Vec<Rational>> {
    if let Some(i) = xs.iter().position(|x| x.is_zero()) {
        return Err(Error::DegeneratePoint(format!("x_{} = 0", i + 1)));
    }
    Ok((1..=max_degree as i64)
        .map(|n| {
            let mut total = rational::int(constant);
            for x in xs {
                total += rational::pow(x, n) + rational::pow(x, -n);
            }
            total
        })
        .collect())
}

impl EvalPoint {
    pub fn symplectic(xs: &[Rational], max_degree: u32) -> Result<Self> {
        Ok(EvalPoint {
            p_values: torus_power_sums(xs, max_degree, 0)?,
            provenance: Provenance::Symplectic(xs.to_vec()),
        })
    }

    pub fn odd_orthogonal(xs: &[Rational], max_degree: u32) -> Result<Self> {
        Ok(EvalPoint {
            p_values: torus_power_sums(xs, max_degree, 1)?,
            provenance: Provenance::OddOrthogonal(xs.to_vec()),
        })
    }

    pub fn even_orthogonal(xs: &[Rational], max_degree: u32) -> Result<Self> {
        Ok(EvalPoint {
            p_values: torus_power_sums(xs, max_degree, 0)?,
            provenance: Provenance::EvenOrthogonal(xs.to_vec()),
        })
    }

    /// `values[n − 1]` is the value of `p_n`.
    pub fn raw(values: Vec<Rational>) -> Self {
        EvalPoint { p_values: values, provenance: Provenance::Raw }
    }

    pub fn max_degree(&self) -> u32 {
        self.p_values.len() as u32
    }

    pub fn p_value(&self, n: u32) -> Result<&Rational> {
        self.p_values.get((n as usize).wrapping_sub(1)).ok_or(Error::MissingPowerSum(n))
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
}

/// The ring homomorphism `p_n ↦ pt.p_value(n)`.
pub fn evaluate(f: &SymFunc, pt: &EvalPoint) -> Result<Rational> {
    let mut total = Rational::zero();
    for (lambda, c) in f.as_p().terms() {
        let mut term = c.clone();
        for &part in lambda.parts() {
            term *= pt.p_value(part)?;
        }
        total += term;
    }
    Ok(total)
}

/// An element `(σ, ε)` of the hyperoctahedral group acting by
/// `(w·μ)_i = ε_i μ_{σ(i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Parse(format!("not a permutation: {perm:?}")));
            }
            seen[p] = true;
        }
        if signs.len() != n || signs.iter().any(|s| s.abs() != 1) {
            return Err(Error::Parse(format!("bad sign vector {signs:?}")));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { perm: (0..n).collect(), signs: vec![1; n] }
    }

    /// All `2^n n!` elements (types B and C).
    pub fn all(n: usize) -> Vec<Self> {
        let perms = permutations(n);
        let mut out = Vec::with_capacity(perms.len() << n);
        for perm in perms {
            for mask in 0u32..(1 << n) {
                let signs = (0..n).map(|i| if mask & (1 << i) != 0 { -1 } else { 1 }).collect();
                out.push(SignedPermutation { perm: perm.clone(), signs });
            }
        }
        out
    }

    /// The `2^{n−1} n!` elements with an even number of sign changes (type D).
    pub fn all_even(n: usize) -> Vec<Self> {
        Self::all(n).into_iter().filter(|w| w.sign_product() > 0).collect()
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn sign_at(&self, i: usize) -> i8 {
        self.signs[i]
    }

    /// `sgn(σ)`.
    pub fn perm_sign(&self) -> i32 {
        let inversions = (0..self.perm.len())
            .flat_map(|i| (i + 1..self.perm.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| self.perm[i] > self.perm[j])
            .count();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `ε_1 ⋯ ε_n`.
    pub fn sign_product(&self) -> i32 {
        self.signs.iter().map(|&s| s as i32).product()
    }

    /// Determinant of `w` as a linear map: `sgn(σ) ε_1 ⋯ ε_n`.
    pub fn sign(&self) -> i32 {
        self.perm_sign() * self.sign_product()
    }

    pub fn act(&self, weight: &[i64]) -> Vec<i64> {
        (0..self.perm.len()).map(|i| self.signs[i] as i64 * weight[self.perm[i]]).collect()
    }

    /// `(self ∘ other)·μ = self·(other·μ)`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let n = self.perm.len();
        let perm = (0..n).map(|i| other.perm[self.perm[i]]).collect();
        let signs = (0..n).map(|i| self.signs[i] * other.signs[self.perm[i]]).collect();
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        SignedPermutation { perm, signs }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for smaller in permutations(n - 1) {
        for pos in 0..=smaller.len() {
            let mut p = smaller.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeylType {
    /// `SO(2n+1)`
    B,
    /// `Sp(2n)`
    C,
    /// `SO(2n)`
    D,
}

/// `Σ_w det(w) x^{w(μ)}` where the caller passes `2μ` so that half-integers
/// stay integral. Each variable picks up an extra `x_j^{shift/2}`.
fn alternant(
    group: &[SignedPermutation],
    det_of: impl Fn(&SignedPermutation) -> i32,
    doubled: &[i64],
    shift: i64,
    xs: &[Rational],
) -> Rational {
    let mut total = Rational::zero();
    for w in group {
        let image = w.act(doubled);
        let mut term = Rational::from_integer(det_of(w).into());
        for (x, e) in xs.iter().zip(&image) {
            debug_assert_eq!((e + shift) % 2, 0);
            term *= rational::pow(x, (e + shift) / 2);
        }
        total += term;
    }
    total
}

/// Weyl character of the irreducible module with highest weight `weights`
/// (a dominant integral weight in ε-coordinates), by explicit summation over
/// the Weyl group.
///
/// Type B has `ρ = (n − ½, …, ½)`. Both sums are multiplied by the common
/// factor `∏ x_j^{½}`, which keeps every exponent integral and cancels in the
/// ratio.
pub fn weyl_character_weights(kind: WeylType, weights: &[i64], xs: &[Rational]) -> Result<Rational> {
    let n = xs.len();
    if weights.len() != n {
        return Err(Error::RankViolation {
            partition: weights.iter().map(|&w| w.unsigned_abs() as u32).collect(),
            rank: n,
        });
    }
    let doubled_rho: Vec<i64> = (0..n)
        .map(|i| {
            let i = i as i64 + 1;
            let n = n as i64;
            match kind {
                WeylType::C => 2 * (n - i + 1),
                WeylType::B => 2 * (n - i) + 1,
                WeylType::D => 2 * (n - i),
            }
        })
        .collect();
    let doubled_top: Vec<i64> = weights.iter().zip(&doubled_rho).map(|(w, r)| 2 * w + r).collect();
    let (group, shift) = match kind {
        WeylType::B => (SignedPermutation::all(n), 1),
        WeylType::C => (SignedPermutation::all(n), 0),
        WeylType::D => (SignedPermutation::all_even(n), 0),
    };
    let det_of = |w: &SignedPermutation| match kind {
        WeylType::D => w.perm_sign(),
        _ => w.sign(),
    };
    let denominator = alternant(&group, det_of, &doubled_rho, shift, xs);
    if denominator.is_zero() {
        return Err(Error::DegeneratePoint("Weyl denominator vanishes; retry with another point".into()));
    }
    Ok(alternant(&group, det_of, &doubled_top, shift, xs) / denominator)
}

/// [`weyl_character_weights`] for a partition with `ℓ(λ) ≤ n`, padded with zeros.
pub fn weyl_character(kind: WeylType, lambda: &Partition, xs: &[Rational]) -> Result<Rational> {
    let n = xs.len();
    if lambda.length() > n {
        return Err(Error::RankViolation { partition: lambda.parts().to_vec(), rank: n });
    }
    let weights: Vec<i64> = (0..n).map(|i| lambda.part(i) as i64).collect();
    weyl_character_weights(kind, &weights, xs)
}

/// Type-B character computed in square-root variables: `ys` with `x_i = y_i²`,
/// so every exponent of `y` in the Weyl sums is an integer.
pub fn weyl_character_b_squared(lambda: &Partition, ys: &[Rational]) -> Result<Rational> {
    let n = ys.len();
    if lambda.length() > n {
        return Err(Error::RankViolation { partition: lambda.parts().to_vec(), rank: n });
    }
    let doubled_rho: Vec<i64> = (0..n as i64).map(|i| 2 * (n as i64 - i - 1) + 1).collect();
    let doubled_top: Vec<i64> = (0..n).map(|i| 2 * lambda.part(i) as i64 + doubled_rho[i]).collect();
    let group = SignedPermutation::all(n);
    // x^{μ} = y^{2μ}: the doubled exponents are already exponents of y
    let sum = |exps: &[i64]| {
        let mut total = Rational::zero();
        for w in &group {
            let mut term = Rational::from_integer(w.sign().into());
            for (y, e) in ys.iter().zip(w.act(exps)) {
                term *= rational::pow(y, e);
            }
            total += term;
        }
        total
    };
    let denominator = sum(&doubled_rho);
    if denominator.is_zero() {
        return Err(Error::DegeneratePoint("Weyl denominator vanishes; retry with another point".into()));
    }
    Ok(sum(&doubled_top) / denominator)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CharacterKind {
    Sp,
    OOdd,
    OEven,
}

impl CharacterKind {
    pub fn weyl_type(self) -> WeylType {
        match self {
            CharacterKind::Sp => WeylType::C,
            CharacterKind::OOdd => WeylType::B,
            CharacterKind::OEven => WeylType::D,
        }
    }

    pub fn group_name(self) -> &'static str {
        match self {
            CharacterKind::Sp => "Sp",
            CharacterKind::OOdd => "SO_odd",
            CharacterKind::OEven => "SO_even",
        }
    }

    /// The universal character evaluated at the torus point `xs`.
    pub fn universal(self, lambda: &Partition, xs: &[Rational]) -> Result<Rational> {
        let degree = lambda.weight().max(1);
        let (f, pt) = match self {
            CharacterKind::Sp => (weyldet::sp(lambda), EvalPoint::symplectic(xs, degree)?),
            CharacterKind::OOdd => (weyldet::o(lambda), EvalPoint::odd_orthogonal(xs, degree)?),
            CharacterKind::OEven => (weyldet::o(lambda), EvalPoint::even_orthogonal(xs, degree)?),
        };
        evaluate(&f, &pt)
    }
}

/// Universal specialization and Weyl-group oracle, side by side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crosscheck {
    pub universal: Rational,
    pub oracle: Rational,
}

impl Crosscheck {
    pub fn agrees(&self) -> bool {
        self.universal == self.oracle
    }
}

/// Compares `sp_λ` (resp. `o_λ`) at `(x_i, x_i^{−1})` with the irreducible
/// character of highest weight λ. `OEven` needs `ℓ(λ) < n`.
pub fn character_crosscheck(kind: CharacterKind, lambda: &Partition, xs: &[Rational]) -> Result<Crosscheck> {
    let n = xs.len();
    let fits = match kind {
        CharacterKind::OEven => lambda.length() < n,
        _ => lambda.length() <= n,
    };
    if !fits {
        return Err(Error::RankViolation { partition: lambda.parts().to_vec(), rank: n });
    }
    let oracle = weyl_character(kind.weyl_type(), lambda, xs)?;
    let universal = kind.universal(lambda, xs)?;
    Ok(Crosscheck { universal, oracle })
}

/// For `ℓ(λ) = n` in type D: `o_λ` at the torus point, `χ_λ` and `χ_{σ(λ)}`
/// where `σ` flips the sign of the last coordinate.
pub fn even_orthogonal_full_length(lambda: &Partition, xs: &[Rational]) -> Result<(Rational, Rational, Rational)> {
    let n = xs.len();
    if lambda.length() != n {
        return Err(Error::RankViolation { partition: lambda.parts().to_vec(), rank: n });
    }
    let mut weights: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    let chi = weyl_character_weights(WeylType::D, &weights, xs)?;
    if let Some(last) = weights.last_mut() {
        *last = -*last;
    }
    let chi_flipped = weyl_character_weights(WeylType::D, &weights, xs)?;
    let universal = CharacterKind::OEven.universal(lambda, xs)?;
    Ok((universal, chi, chi_flipped))
}

/// A random point of `n` distinct small rationals avoiding `0`, `±1` and
/// `x_i x_j = 1`.
pub fn generic_point<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    while out.len() < n {
        let num: i64 = rng.gen_range(-9..=9);
        let den: i64 = rng.gen_range(1..=5);
        let x = rational::frac(num, den);
        let bad = x.is_zero() || x.is_one() || (-&x).is_one() || out.iter().any(|y| *y == x || (y * &x).is_one());
        if !bad {
            out.push(x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use crate::symring::{gen_h, Basis};

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn evaluation_examples() {
        let pt = EvalPoint::symplectic(&[int(2)], 4).unwrap();
        assert_eq!(evaluate(&SymFunc::p(&[1]), &pt).unwrap(), frac(5, 2));
        assert_eq!(evaluate(&SymFunc::one(Basis::P), &pt).unwrap(), int(1));
        assert_eq!(evaluate(&gen_h(2), &pt).unwrap(), frac(21, 4));
        assert!(matches!(evaluate(&SymFunc::p(&[5]), &pt), Err(Error::MissingPowerSum(5))));
        assert!(EvalPoint::symplectic(&[int(0)], 2).is_err());
    }

    #[test]
    fn group_orders_and_axioms() {
        assert_eq!(SignedPermutation::all(3).len(), 48);
        assert_eq!(SignedPermutation::all_even(3).len(), 24);
        assert_eq!(SignedPermutation::all(0).len(), 1);
        let group = SignedPermutation::all(3);
        let e = SignedPermutation::identity(3);
        let mu = [5, -2, 7];
        for a in &group {
            assert_eq!(a.compose(&a.inverse()), e);
            assert_eq!(a.compose(&e), *a);
            assert_eq!(a.inverse().sign(), a.sign());
            for b in group.iter().step_by(7) {
                assert_eq!(a.compose(b).act(&mu), a.act(&b.act(&mu)));
                assert_eq!(a.compose(b).sign(), a.sign() * b.sign());
            }
        }
        assert!(SignedPermutation::new(vec![0, 0], vec![1, 1]).is_err());
        assert!(SignedPermutation::new(vec![1, 0], vec![1, 2]).is_err());
    }

    #[test]
    fn small_characters() {
        assert_eq!(weyl_character(WeylType::C, &part(&[1]), &[int(2)]).unwrap(), frac(5, 2));
        let xs = [frac(2, 3), int(5)];
        let vector: Rational = xs.iter().map(|x| x + x.recip()).sum();
        assert_eq!(weyl_character(WeylType::D, &part(&[1]), &xs).unwrap(), vector);
        assert_eq!(weyl_character(WeylType::B, &part(&[1]), &[int(2)]).unwrap(), frac(7, 2));
        for kind in [WeylType::B, WeylType::C, WeylType::D] {
            for n in 1..=3 {
                let xs: Vec<Rational> = (0..n).map(|i| frac(i as i64 + 2, 3 + 2 * i as i64)).collect();
                assert_eq!(weyl_character(kind, &Partition::empty(), &xs).unwrap(), int(1), "{kind:?} n={n}");
            }
        }
        assert!(weyl_character(WeylType::C, &part(&[1, 1]), &[int(2)]).is_err());
        assert!(weyl_character(WeylType::C, &part(&[1]), &[int(1)]).is_err());
    }

    #[test]
    fn b_type_routes_agree() {
        let ys = [frac(3, 2), int(2), frac(-1, 3)];
        let xs: Vec<Rational> = ys.iter().map(|y| y * y).collect();
        for lambda in crate::partition::partitions_up_to(5).into_iter().filter(|l| l.length() <= 3) {
            assert_eq!(
                weyl_character(WeylType::B, &lambda, &xs).unwrap(),
                weyl_character_b_squared(&lambda, &ys).unwrap(),
                "{lambda}"
            );
        }
    }

    #[test]
    fn crosscheck_examples() {
        let c = character_crosscheck(CharacterKind::Sp, &part(&[1]), &[int(2)]).unwrap();
        assert_eq!(c, Crosscheck { universal: frac(5, 2), oracle: frac(5, 2) });
        let c = character_crosscheck(CharacterKind::Sp, &part(&[1, 1]), &[int(2), int(3)]).unwrap();
        assert!(c.agrees());
        let c = character_crosscheck(CharacterKind::OOdd, &part(&[1]), &[int(2)]).unwrap();
        assert_eq!(c, Crosscheck { universal: frac(7, 2), oracle: frac(7, 2) });
        assert!(character_crosscheck(CharacterKind::OEven, &part(&[1, 1]), &[int(2), int(3)]).is_err());
        assert!(character_crosscheck(CharacterKind::Sp, &part(&[1, 1, 1]), &[int(2), int(3)]).is_err());
    }

    #[test]
    fn symplectic_dimension_at_identity() {
        for n in 1..=4 {
            let pt = EvalPoint::symplectic(&vec![int(1); n], 1).unwrap();
            assert_eq!(evaluate(&SymFunc::p(&[1]), &pt).unwrap(), int(2 * n as i64));
        }
    }

    #[test]
    fn generic_points_avoid_degeneracies() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let pt = generic_point(&mut rng, 4);
            for (i, x) in pt.iter().enumerate() {
                assert!(!x.is_zero() && !x.is_one());
                for y in &pt[i + 1..] {
                    assert_ne!(x, y);
                    assert!(!(x * y).is_one());
                }
            }
        }
    }
}
