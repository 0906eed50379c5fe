//! Selection of a realization (`--via`) and evaluation of a character.

use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;
use weylschur::symring::schur;
use weylschur::vertexops::{self, CharKind, FrobeniusVariant};
use weylschur::weyldet::{self, Character, DetFormula};
use weylschur::{Generator, Partition, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Sp,
    O,
    Schur,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Sp => "sp",
            Kind::O => "o",
            Kind::Schur => "schur",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Via {
    Det(Generator),
    Vertex,
    VertexDual,
    Frobenius(FrobeniusVariant),
}

impl FromStr for Via {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let via = match s {
            "vertex" => Via::Vertex,
            "vertex-dual" => Via::VertexDual,
            "frobenius:creation" => Via::Frobenius(FrobeniusVariant::CreationFirst),
            "frobenius:annihilation" => Via::Frobenius(FrobeniusVariant::AnnihilationFirst),
            "det:h" => Via::Det(Generator::H),
            "det:e" => Via::Det(Generator::E),
            "det:hhat" => Via::Det(Generator::HHat),
            "det:ehat" => Via::Det(Generator::EHat),
            "det:hcheck" => Via::Det(Generator::HCheck),
            "det:echeck" => Via::Det(Generator::ECheck),
            other => {
                return Err(format!(
                    "unknown realization {other:?}; expected det:<h|e|hhat|ehat|hcheck|echeck>, vertex, vertex-dual, \
                     frobenius:creation or frobenius:annihilation"
                ))
            }
        };
        Ok(via)
    }
}

impl fmt::Display for Via {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Via::Vertex => f.write_str("vertex"),
            Via::VertexDual => f.write_str("vertex-dual"),
            Via::Frobenius(FrobeniusVariant::CreationFirst) => f.write_str("frobenius:creation"),
            Via::Frobenius(FrobeniusVariant::AnnihilationFirst) => f.write_str("frobenius:annihilation"),
            Via::Det(g) => {
                let name = match g {
                    Generator::H => "h",
                    Generator::E => "e",
                    Generator::HHat => "hhat",
                    Generator::EHat => "ehat",
                    Generator::HCheck => "hcheck",
                    Generator::ECheck => "echeck",
                };
                write!(f, "det:{name}")
            }
        }
    }
}

/// Every realization accepted for `kind`.
pub fn realizations(kind: Kind) -> Vec<Via> {
    let mut out: Vec<Via> = Generator::ALL.iter().map(|&g| Via::Det(g)).filter(|v| admissible(kind, *v)).collect();
    out.extend([
        Via::Vertex,
        Via::VertexDual,
        Via::Frobenius(FrobeniusVariant::CreationFirst),
        Via::Frobenius(FrobeniusVariant::AnnihilationFirst),
    ]);
    out
}

fn admissible(kind: Kind, via: Via) -> bool {
    match (kind, via) {
        (Kind::Schur, Via::Det(g)) => matches!(g, Generator::H | Generator::E),
        (Kind::Sp, Via::Det(g)) => DetFormula::lookup(Character::Sp, g).is_ok(),
        (Kind::O, Via::Det(g)) => DetFormula::lookup(Character::O, g).is_ok(),
        _ => true,
    }
}

/// The character `kind` at `lambda` computed through `via`, in the power-sum basis.
pub fn compute(kind: Kind, lambda: &Partition, via: Via) -> Result<SymFunc, String> {
    if !admissible(kind, via) {
        let accepted: Vec<String> = realizations(kind).iter().map(Via::to_string).collect();
        return Err(format!("{via} is not a realization of {}; accepted: {}", kind.as_str(), accepted.join(", ")));
    }
    let f = match (kind, via) {
        (Kind::Schur, Via::Det(g)) => weyldet::jacobi_trudi(lambda, g),
        (Kind::Sp, Via::Det(g)) => weyldet::sp_det(lambda, &DetFormula::lookup(Character::Sp, g).expect("admissible"))
            .map_err(|e| e.to_string())?,
        (Kind::O, Via::Det(g)) => weyldet::o_det(lambda, &DetFormula::lookup(Character::O, g).expect("admissible"))
            .map_err(|e| e.to_string())?,
        (Kind::Sp, Via::Vertex) => vertexops::sp_vertex(lambda),
        (Kind::O, Via::Vertex) => vertexops::o_vertex(lambda),
        (Kind::Schur, Via::Vertex) => vertexops::schur_vertex(lambda),
        (Kind::Sp, Via::VertexDual) => vertexops::sp_dual_vertex(lambda),
        (Kind::O, Via::VertexDual) => vertexops::o_dual_vertex(lambda),
        (Kind::Schur, Via::VertexDual) => vertexops::schur_dual_vertex(lambda),
        (kind, Via::Frobenius(variant)) => {
            let char_kind = match kind {
                Kind::Sp => CharKind::Sp,
                Kind::O => CharKind::O,
                Kind::Schur => CharKind::Schur,
            };
            vertexops::frobenius_vertex(char_kind, &lambda.to_frobenius(), variant)
        }
    };
    Ok(f)
}

/// The reference value every realization is compared against.
pub fn reference(kind: Kind, lambda: &Partition) -> SymFunc {
    match kind {
        Kind::Sp => weyldet::sp(lambda),
        Kind::O => weyldet::o(lambda),
        Kind::Schur => schur(lambda),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn via_round_trips() {
        for kind in [Kind::Sp, Kind::O, Kind::Schur] {
            for via in realizations(kind) {
                assert_eq!(via.to_string().parse::<Via>().unwrap(), via);
            }
        }
        assert!("det:x".parse::<Via>().is_err());
    }

    #[test]
    fn admissibility() {
        assert_eq!(realizations(Kind::Sp).len(), 8);
        assert_eq!(realizations(Kind::O).len(), 8);
        assert_eq!(realizations(Kind::Schur).len(), 6);
        let l = Partition::new(vec![2, 1]).unwrap();
        assert!(compute(Kind::Sp, &l, Via::Det(Generator::HHat)).is_err());
        assert!(compute(Kind::O, &l, Via::Det(Generator::EHat)).is_err());
        assert!(compute(Kind::Schur, &l, Via::Det(Generator::HCheck)).is_err());
    }
}
