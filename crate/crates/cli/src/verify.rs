//! Verification suites behind `weylschur verify`.
//!
//! Instances are evaluated in parallel and gathered in a fixed order, so the
//! report depends only on the parameters.

use clap::ValueEnum;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use weylschur::rational;
use weylschur::specialize::{self, CharacterKind};
use weylschur::symring::{omega, to_schur_expansion};
use weylschur::vertexops::{self, CharKind, CliffordPair, FrobeniusVariant, ModeRelation};
use weylschur::weyldet::{self, DetFormula, KernelKind};
use weylschur::{partitions_up_to, Partition, Rational, SymFunc};

use crate::realize::{self, Kind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Clifford,
    Dualbasis,
    Dets8,
    Frobenius,
    Vandermonde,
    Duality,
    Characters,
    Relations,
    All,
}

/// Which index shifts the `relations` suite checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    /// Shifts forced by `W(z) = (1 − z²) Y(z)` and `Y*(z) = (1 − z²) W*(z)`.
    Derived,
    /// The opposite shifts, e.g. `W_n = Y_n − Y_{n−2}`.
    Opposite,
}

impl Suite {
    const EACH: [Suite; 8] = [
        Suite::Clifford,
        Suite::Dualbasis,
        Suite::Dets8,
        Suite::Frobenius,
        Suite::Vandermonde,
        Suite::Duality,
        Suite::Characters,
        Suite::Relations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Clifford => "clifford",
            Suite::Dualbasis => "dualbasis",
            Suite::Dets8 => "dets8",
            Suite::Frobenius => "frobenius",
            Suite::Vandermonde => "vandermonde",
            Suite::Duality => "duality",
            Suite::Characters => "characters",
            Suite::Relations => "relations",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Params {
    pub max_weight: u32,
    pub seed: u64,
    pub range: i64,
    pub k: usize,
    pub convention: Convention,
}

impl Params {
    fn replay(&self, suite: Suite) -> String {
        match suite {
            Suite::Clifford => {
                format!("weylschur verify clifford --range {} --max-weight {}", self.range, self.max_weight)
            }
            Suite::Vandermonde => format!("weylschur verify vandermonde --k {} --seed {}", self.k, self.seed),
            Suite::Characters => {
                format!("weylschur verify characters --max-weight {} --seed {}", self.max_weight, self.seed)
            }
            Suite::Relations => format!(
                "weylschur verify relations --range {} --max-weight {} --convention {}",
                self.range,
                self.max_weight,
                match self.convention {
                    Convention::Derived => "derived",
                    Convention::Opposite => "opposite",
                }
            ),
            other => format!("weylschur verify {} --max-weight {}", other.name(), self.max_weight),
        }
    }
}

pub struct Instance {
    pub id: String,
    /// `None` on success, otherwise the evidence.
    pub failure: Option<Value>,
}

impl Instance {
    fn check(id: String, expected: &SymFunc, got: &SymFunc) -> Instance {
        let failure = (expected != got).then(|| json!({ "expected": expected.to_json(), "got": got.to_json() }));
        Instance { id, failure }
    }

    fn values(id: String, expected: &Rational, got: &Rational) -> Instance {
        let failure =
            (expected != got).then(|| json!({ "expected": rational::format(expected), "got": rational::format(got) }));
        Instance { id, failure }
    }

    fn flag(id: String, ok: bool, evidence: impl FnOnce() -> Value) -> Instance {
        Instance { id, failure: (!ok).then(evidence) }
    }
}

pub struct SuiteReport {
    pub suite: Suite,
    pub instances: Vec<Instance>,
    replay: String,
}

impl SuiteReport {
    pub fn failures(&self) -> usize {
        self.instances.iter().filter(|i| i.failure.is_some()).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn counterexamples(&self) -> Vec<Value> {
        self.instances
            .iter()
            .filter_map(|i| {
                i.failure.as_ref().map(|evidence| {
                    json!({ "suite": self.suite.name(), "instance": i.id, "evidence": evidence, "replay": self.replay })
                })
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let results: Vec<Value> =
            self.instances.iter().map(|i| json!({ "id": i.id, "pass": i.failure.is_none() })).collect();
        json!({
            "suite": self.suite.name(),
            "pass": self.passed(),
            "instances": self.instances.len(),
            "failed": self.failures(),
            "results": results,
            "counterexamples": self.counterexamples(),
        })
    }
}

pub fn run(suite: Suite, params: &Params) -> Vec<SuiteReport> {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    suites
        .into_iter()
        .map(|s| {
            let instances = match s {
                Suite::Clifford => clifford(params),
                Suite::Dualbasis => dual_basis(params),
                Suite::Dets8 => dets8(params),
                Suite::Frobenius => frobenius(params),
                Suite::Vandermonde => vandermonde(params),
                Suite::Duality => duality(params),
                Suite::Characters => characters(params),
                Suite::Relations => relations(params),
                Suite::All => unreachable!("expanded above"),
            };
            SuiteReport { suite: s, instances, replay: params.replay(s) }
        })
        .collect()
}

fn per_partition(max_weight: u32, f: impl Fn(&Partition) -> Vec<Instance> + Sync + Send) -> Vec<Instance> {
    let parts = partitions_up_to(max_weight);
    let chunks: Vec<Vec<Instance>> = parts.par_iter().map(f).collect();
    chunks.into_iter().flatten().collect()
}

fn clifford(params: &Params) -> Vec<Instance> {
    let units: Vec<(CliffordPair, Partition)> = CliffordPair::ALL
        .iter()
        .flat_map(|&pair| partitions_up_to(params.max_weight).into_iter().map(move |mu| (pair, mu)))
        .collect();
    let range = params.range;
    let chunks: Vec<Vec<Instance>> = units
        .par_iter()
        .map(|(pair, mu)| {
            let f = SymFunc::p(mu.parts());
            vertexops::clifford_residuals(*pair, -range..=range, &f)
                .into_iter()
                .map(|((m, n), residual)| {
                    let id = format!("{pair:?} m={m} n={n} f=p{mu}");
                    Instance::flag(id, residual.is_zero(), || json!({ "residual": residual.to_json() }))
                })
                .collect()
        })
        .collect();
    chunks.into_iter().flatten().collect()
}

fn dual_basis(params: &Params) -> Vec<Instance> {
    per_partition(params.max_weight, |lambda| {
        let mut out = vec![
            Instance::check(
                format!("Y duality {lambda}"),
                &vertexops::sp_vertex(lambda),
                &vertexops::sp_dual_vertex(lambda),
            ),
            Instance::check(
                format!("W duality {lambda}"),
                &vertexops::o_vertex(lambda),
                &vertexops::o_dual_vertex(lambda),
            ),
        ];
        for (name, f) in [("sp", weyldet::sp(lambda)), ("o", weyldet::o(lambda))] {
            let expansion = to_schur_expansion(&f);
            out.push(Instance::flag(
                format!("{name} integral {lambda}"),
                expansion.has_integer_coefficients(),
                || json!({ "expansion": expansion.to_json() }),
            ));
        }
        out
    })
}

fn dets8(params: &Params) -> Vec<Instance> {
    per_partition(params.max_weight, |lambda| {
        let sp = vertexops::sp_vertex(lambda);
        let o = vertexops::o_vertex(lambda);
        let mut out = Vec::new();
        for formula in &DetFormula::SP {
            let det = weyldet::sp_det(lambda, formula).expect("admissible");
            out.push(Instance::check(format!("{formula} at {lambda}"), &sp, &det));
        }
        for formula in &DetFormula::O {
            let det = weyldet::o_det(lambda, formula).expect("admissible");
            out.push(Instance::check(format!("{formula} at {lambda}"), &o, &det));
        }
        out
    })
}

fn frobenius(params: &Params) -> Vec<Instance> {
    per_partition(params.max_weight, |lambda| {
        let fc = lambda.to_frobenius();
        let mut out = Vec::new();
        for (kind, char_kind) in [(Kind::Schur, CharKind::Schur), (Kind::Sp, CharKind::Sp), (Kind::O, CharKind::O)] {
            let expected = realize::reference(kind, lambda);
            for variant in [FrobeniusVariant::CreationFirst, FrobeniusVariant::AnnihilationFirst] {
                let got = vertexops::frobenius_vertex(char_kind, &fc, variant);
                out.push(Instance::check(format!("{} {variant:?} {lambda}", kind.as_str()), &expected, &got));
            }
        }
        out
    })
}

const POINTS_PER_CASE: usize = 20;

fn vandermonde(params: &Params) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut cases = Vec::new();
    for kind in KernelKind::ALL {
        for k in 1..=params.k {
            for t in 0..POINTS_PER_CASE {
                cases.push((kind, k, t, specialize::generic_point(&mut rng, k)));
            }
        }
    }
    let mut out: Vec<Instance> = cases
        .par_iter()
        .map(|(kind, k, t, pt)| {
            let id = format!("{kind:?} k={k} point {t}");
            let shown: Vec<String> = pt.iter().map(rational::format).collect();
            match weyldet::vandermonde_kernel(*kind, pt) {
                Ok(sides) => Instance::flag(id, sides.agree(), || {
                    json!({
                        "point": shown,
                        "det": rational::format(&sides.lhs),
                        "product": rational::format(&sides.rhs_product),
                        "sum": rational::format(&sides.rhs_sum),
                    })
                }),
                Err(e) => Instance::flag(id, false, || json!({ "point": shown, "error": e.to_string() })),
            }
        })
        .collect();
    for kind in KernelKind::ALL {
        for k in 1..=params.k.min(2) {
            let ok = weyldet::vandermonde_symbolic(kind, k).agree();
            out.push(Instance::flag(format!("{kind:?} k={k} symbolic"), ok, || json!({ "symbolic": false })));
        }
    }
    out
}

fn duality(params: &Params) -> Vec<Instance> {
    per_partition(params.max_weight, |lambda| {
        vec![Instance::check(
            format!("omega sp{lambda}"),
            &weyldet::o(&lambda.conjugate()),
            &omega(&weyldet::sp(lambda)),
        )]
    })
}

const POINTS_PER_CHARACTER: usize = 5;
const MAX_RANK: usize = 3;

fn characters(params: &Params) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut cases = Vec::new();
    for n in 1..=MAX_RANK {
        for lambda in partitions_up_to(params.max_weight) {
            for kind in [CharacterKind::Sp, CharacterKind::OOdd, CharacterKind::OEven] {
                let fits = match kind {
                    CharacterKind::OEven => lambda.length() < n,
                    _ => lambda.length() <= n,
                };
                if !fits {
                    continue;
                }
                for _ in 0..POINTS_PER_CHARACTER {
                    cases.push((kind, lambda.clone(), specialize::generic_point(&mut rng, n)));
                }
            }
        }
    }
    cases
        .par_iter()
        .map(|(kind, lambda, xs)| {
            let shown: Vec<String> = xs.iter().map(rational::format).collect();
            let id = format!("{} {lambda} at [{}]", kind.group_name(), shown.join(","));
            match specialize::character_crosscheck(*kind, lambda, xs) {
                Ok(c) => Instance::values(id, &c.oracle, &c.universal),
                Err(e) => Instance::flag(id, false, || json!({ "error": e.to_string() })),
            }
        })
        .collect()
}

/// Summand bounds for the mode sums. In the derived direction a sum stops by
/// itself after at most `(deg f + R)/2 + 1` summands. In the other direction
/// it never terminates and every summand raises the degree, so it is cut short.
const DERIVED_SUM_TERMS: usize = 64;
const OPPOSITE_SUM_TERMS: usize = 3;

fn relations(params: &Params) -> Vec<Instance> {
    let wanted = params.convention == Convention::Derived;
    let chosen: Vec<ModeRelation> = ModeRelation::ALL.iter().copied().filter(|r| r.is_derived() == wanted).collect();
    let units: Vec<(ModeRelation, Partition)> =
        chosen.iter().flat_map(|&r| partitions_up_to(params.max_weight).into_iter().map(move |mu| (r, mu))).collect();
    let range = params.range;
    let max_terms = if wanted { DERIVED_SUM_TERMS } else { OPPOSITE_SUM_TERMS };
    let chunks: Vec<Vec<Instance>> = units
        .par_iter()
        .map(|(relation, mu)| {
            let f = SymFunc::p(mu.parts());
            (-range..=range)
                .map(|n| {
                    let residual = vertexops::mode_relation_residual(*relation, n, &f, max_terms);
                    let id = format!("{relation:?} n={n} f=p{mu}");
                    Instance::flag(id, residual.is_zero(), || json!({ "residual": residual.to_json() }))
                })
                .collect()
        })
        .collect();
    chunks.into_iter().flatten().collect()
}
