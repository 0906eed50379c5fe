use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_traits::{One, Zero};

use super::{Basis, Generator, SymFunc};
use crate::partition::{partitions_of, Partition};
use crate::rational::{int, Rational};
use crate::weyldet;

type Cache<K> = LazyLock<RwLock<HashMap<K, Arc<SymFunc>>>>;

static SCHUR: Cache<Partition> = LazyLock::new(|| RwLock::new(HashMap::new()));
static POWER_SUM_IN: Cache<(Basis, u32)> = LazyLock::new(|| RwLock::new(HashMap::new()));

fn cached<K: std::hash::Hash + Eq + Clone>(
    cache: &Cache<K>,
    key: &K,
    compute: impl FnOnce() -> SymFunc,
) -> Arc<SymFunc> {
    if let Some(f) = cache.read().expect("cache lock").get(key) {
        return f.clone();
    }
    let f = Arc::new(compute());
    cache.write().expect("cache lock").insert(key.clone(), f.clone());
    f
}

/// `s_λ` in the power-sum basis, from the h-form Jacobi–Trudi determinant.
pub fn schur(lambda: &Partition) -> SymFunc {
    (*schur_cached(lambda)).clone()
}

fn schur_cached(lambda: &Partition) -> Arc<SymFunc> {
    cached(&SCHUR, lambda, || weyldet::jacobi_trudi(lambda, Generator::H).to_p())
}

/// `p_n` written in the `h` or `e` basis through Newton's identities.
fn power_sum_in(basis: Basis, n: u32) -> Arc<SymFunc> {
    debug_assert!(matches!(basis, Basis::H | Basis::E));
    if let Some(f) = POWER_SUM_IN.read().expect("cache lock").get(&(basis, n)) {
        return f.clone();
    }
    let mono = |k: u32| SymFunc::monomial(basis, Partition::new(vec![k]).expect("single part"), Rational::one());
    // h: p_n = n h_n − Σ_{k<n} p_k h_{n−k}
    // e: p_n = (−1)^{n−1} (n e_n − Σ_{k<n} (−1)^{k−1} p_k e_{n−k})
    let mut f = mono(n).scale(&int(n as i64));
    for k in 1..n {
        let sign = if basis == Basis::E && k % 2 == 0 { 1 } else { -1 };
        f.add_product(&power_sum_in(basis, k), &mono(n - k), &int(sign));
    }
    if basis == Basis::E && n.is_multiple_of(2) {
        f = f.neg();
    }
    let f = Arc::new(f);
    POWER_SUM_IN.write().expect("cache lock").insert((basis, n), f.clone());
    f
}

impl SymFunc {
    /// Re-expresses `self` in the power-sum basis.
    pub fn to_p(&self) -> SymFunc {
        match self.basis {
            Basis::P => self.clone(),
            Basis::H | Basis::E => {
                let generator = if self.basis == Basis::H { Generator::H } else { Generator::E };
                let mut out = SymFunc::zero(Basis::P);
                for (lambda, c) in &self.terms {
                    let mut prod = SymFunc::one(Basis::P);
                    for &part in lambda.parts() {
                        let mut next = SymFunc::zero(Basis::P);
                        next.add_product(&prod, &generator.cached(part as i64), &Rational::one());
                        prod = next;
                    }
                    out.add_scaled(&prod, c);
                }
                out
            }
            Basis::Schur => {
                let mut out = SymFunc::zero(Basis::P);
                for (lambda, c) in &self.terms {
                    out.add_scaled(&schur_cached(lambda), c);
                }
                out
            }
        }
    }

    pub fn to_basis(&self, target: Basis) -> SymFunc {
        if self.basis == target {
            return self.clone();
        }
        let p = self.to_p();
        match target {
            Basis::P => p,
            Basis::H | Basis::E => {
                let mut out = SymFunc::zero(target);
                for (lambda, c) in &p.terms {
                    let mut prod = SymFunc::one(target);
                    for &part in lambda.parts() {
                        let mut next = SymFunc::zero(target);
                        next.add_product(&prod, &power_sum_in(target, part), &Rational::one());
                        prod = next;
                    }
                    out.add_scaled(&prod, c);
                }
                out
            }
            Basis::Schur => to_schur_expansion(&p),
        }
    }
}

/// The involution `ω(p_n) = (−1)^{n−1} p_n`, returned in the input's basis.
///
/// On `h`/`e` monomials it swaps the two bases and on Schur functions it
/// conjugates the index, so each basis takes its own route.
pub fn omega(f: &SymFunc) -> SymFunc {
    match f.basis {
        Basis::P => {
            let terms = f.terms.iter().map(|(lambda, c)| {
                let odd = (lambda.weight() as usize - lambda.length()) % 2 == 1;
                (lambda.clone(), if odd { -c.clone() } else { c.clone() })
            });
            SymFunc::from_terms(Basis::P, terms)
        }
        Basis::H | Basis::E => {
            let swapped = if f.basis == Basis::H { Basis::E } else { Basis::H };
            let relabeled = SymFunc { basis: swapped, terms: f.terms.clone() };
            relabeled.to_basis(f.basis)
        }
        Basis::Schur => {
            SymFunc::from_terms(Basis::Schur, f.terms.iter().map(|(lambda, c)| (lambda.conjugate(), c.clone())))
        }
    }
}

/// Hall inner product `⟨p_λ, p_μ⟩ = z_λ δ_{λμ}`.
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> Rational {
    let (f, g) = (f.to_p(), g.to_p());
    let (small, large) = if f.num_terms() <= g.num_terms() { (&f, &g) } else { (&g, &f) };
    let mut total = Rational::zero();
    for (lambda, c) in &small.terms {
        if let Some(d) = large.terms.get(lambda) {
            total += c * d * Rational::from_integer(lambda.z());
        }
    }
    total
}

/// Schur-basis coefficients `c_μ = ⟨f, s_μ⟩`, weight by weight.
pub fn to_schur_expansion(f: &SymFunc) -> SymFunc {
    let p = f.to_p();
    let mut out = SymFunc::zero(Basis::Schur);
    for d in p.weights() {
        let component = p.homogeneous_component(d);
        for mu in partitions_of(d as i64).expect("non-negative") {
            let c = hall_inner(&component, &schur_cached(&mu));
            out.add_term(mu, c);
        }
    }
    out
}
