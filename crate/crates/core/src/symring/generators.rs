use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Basis, SymFunc};
use crate::partition::partitions_of;
use crate::rational::Rational;

/// Generator families of Λ used as determinant entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Generator {
    H,
    E,
    /// `ĥ_n = h_n − h_{n−2}`
    HHat,
    /// `ê_n = e_n − e_{n−2}`
    EHat,
    /// `ȟ_n = h_n + h_{n−2} + h_{n−4} + ⋯`
    HCheck,
    /// `ě_n = e_n + e_{n−2} + e_{n−4} + ⋯`
    ECheck,
}

impl Generator {
    pub const ALL: [Generator; 6] =
        [Generator::H, Generator::E, Generator::HHat, Generator::EHat, Generator::HCheck, Generator::ECheck];

    /// The `n`-th member in the power-sum basis. Zero for `n < 0`.
    pub fn get(self, n: i64) -> SymFunc {
        (*self.cached(n)).clone()
    }

    pub(crate) fn cached(self, n: i64) -> Arc<SymFunc> {
        if n < 0 {
            return Arc::new(SymFunc::zero(Basis::P));
        }
        if let Some(f) = CACHE.read().expect("cache lock").get(&(self, n)) {
            return f.clone();
        }
        let f = Arc::new(self.compute(n));
        CACHE.write().expect("cache lock").insert((self, n), f.clone());
        f
    }

    fn compute(self, n: i64) -> SymFunc {
        let one = Rational::from_integer(1.into());
        match self {
            Generator::H => complete(n as u32, false),
            Generator::E => complete(n as u32, true),
            Generator::HHat | Generator::EHat => {
                let base = if self == Generator::HHat { Generator::H } else { Generator::E };
                let mut f = (*base.cached(n)).clone();
                f.add_scaled(&base.cached(n - 2), &-one);
                f
            }
            Generator::HCheck | Generator::ECheck => {
                let base = if self == Generator::HCheck { Generator::H } else { Generator::E };
                let mut f = SymFunc::zero(Basis::P);
                let mut m = n;
                while m >= 0 {
                    f.add_scaled(&base.cached(m), &one);
                    m -= 2;
                }
                f
            }
        }
    }
}

type Cache = LazyLock<RwLock<HashMap<(Generator, i64), Arc<SymFunc>>>>;

static CACHE: Cache = LazyLock::new(|| RwLock::new(HashMap::new()));

/// Coefficient of `z^n` in `exp(Σ p_k z^k / k)`: `Σ_{λ⊢n} p_λ / z_λ`.
/// The elementary version carries the sign `(−1)^{n − ℓ(λ)}`.
fn complete(n: u32, elementary: bool) -> SymFunc {
    let terms = partitions_of(n as i64).expect("non-negative").into_iter().map(|lambda| {
        let sign = if elementary && (n as usize - lambda.length()) % 2 == 1 { -1 } else { 1 };
        let c = Rational::new(BigInt::from(sign), lambda.z());
        (lambda, c)
    });
    SymFunc::from_terms(Basis::P, terms)
}

pub fn gen_h(n: i64) -> SymFunc {
    Generator::H.get(n)
}

pub fn gen_e(n: i64) -> SymFunc {
    Generator::E.get(n)
}

pub fn gen_hhat(n: i64) -> SymFunc {
    Generator::HHat.get(n)
}

pub fn gen_ehat(n: i64) -> SymFunc {
    Generator::EHat.get(n)
}

pub fn gen_hcheck(n: i64) -> SymFunc {
    Generator::HCheck.get(n)
}

pub fn gen_echeck(n: i64) -> SymFunc {
    Generator::ECheck.get(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn lin(terms: &[(SymFunc, i64)]) -> SymFunc {
        let mut f = SymFunc::zero(Basis::P);
        for (g, c) in terms {
            f.add_scaled(g, &int(*c));
        }
        f
    }

    #[test]
    fn low_order_expansions() {
        let half = frac(1, 2);
        let expected_h2 = SymFunc::p(&[1, 1]).scale(&half).add(&SymFunc::p(&[2]).scale(&half)).unwrap();
        assert_eq!(gen_h(2), expected_h2);
        let expected_e2 = SymFunc::p(&[1, 1]).scale(&half).sub(&SymFunc::p(&[2]).scale(&half)).unwrap();
        assert_eq!(gen_e(2), expected_e2);
        assert!(gen_h(-3).is_zero());
        assert_eq!(gen_h(0), SymFunc::one(Basis::P));
        assert_eq!(gen_e(0), SymFunc::one(Basis::P));
    }

    #[test]
    fn hat_and_check() {
        assert_eq!(gen_hhat(1), gen_h(1));
        let one = SymFunc::one(Basis::P);
        assert_eq!(gen_hcheck(4), lin(&[(gen_h(4), 1), (gen_h(2), 1), (one.clone(), 1)]));
        assert_eq!(gen_echeck(0), one.clone());
        assert_eq!(gen_hhat(0), one.clone());
        assert_eq!(gen_ehat(3), lin(&[(gen_e(3), 1), (gen_e(1), -1)]));
    }

    #[test]
    fn newton_identity() {
        // n h_n = Σ_{k=1}^{n} p_k h_{n−k}
        for n in 1..=12i64 {
            let lhs = gen_h(n).scale(&int(n));
            let mut rhs = SymFunc::zero(Basis::P);
            for k in 1..=n {
                rhs.add_product(&SymFunc::p(&[k as u32]), &gen_h(n - k), &int(1));
            }
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn hat_check_inversion() {
        for n in 0..=12i64 {
            let diff = lin(&[(gen_hcheck(n), 1), (gen_hcheck(n - 2), -1)]);
            assert_eq!(gen_h(n), diff);
            let mut sum = SymFunc::zero(Basis::P);
            let mut m = n;
            while m >= 0 {
                sum.add_scaled(&gen_hhat(m), &int(1));
                m -= 2;
            }
            assert_eq!(gen_h(n), sum);
        }
    }

    #[test]
    fn inverse_z_sums_to_one() {
        // h_n at p_i = 1 for all i is Σ_{λ⊢n} 1/z_λ = 1
        for n in 0..=10 {
            let total: Rational = gen_h(n).terms().map(|(_, c)| c.clone()).sum();
            assert_eq!(total, int(1));
        }
    }
}
