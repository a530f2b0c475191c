use std::fmt;

use thiserror::Error;

use crate::subset::GroundSubset;

/// Which matroid axiom a rank table or basis family failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// `rk(∅) = 0`.
    EmptyRank,
    /// `rk(F ∪ x) ∈ {rk F, rk F + 1}`.
    UnitIncrease,
    /// `rk F = rk(F ∪ x) = rk(F ∪ y)` forces `rk(F ∪ {x, y}) = rk F`.
    RankExchange,
    /// The basis family is nonempty.
    BasesNonempty,
    /// No basis contains another.
    BasesAntichain,
    /// Basis exchange.
    BasisExchange,
}

impl Axiom {
    pub fn id(self) -> &'static str {
        match self {
            Axiom::EmptyRank => "empty-rank",
            Axiom::UnitIncrease => "unit-increase",
            Axiom::RankExchange => "rank-exchange",
            Axiom::BasesNonempty => "bases-nonempty",
            Axiom::BasesAntichain => "bases-antichain",
            Axiom::BasisExchange => "basis-exchange",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Sets and elements exhibiting an axiom failure.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness {
    pub sets: Vec<GroundSubset>,
    pub elements: Vec<usize>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<String> = self.sets.iter().map(|s| s.to_string()).collect();
        write!(f, "sets [{}]", sets.join(", "))?;
        if !self.elements.is_empty() {
            write!(f, ", elements {:?}", self.elements)?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("axiom {axiom} violated: {witness}")]
    AxiomViolation { axiom: Axiom, witness: Witness },

    #[error("ground set of size {n} exceeds the cap of {max}")]
    GroundTooLarge { n: usize, max: usize },

    #[error("rank table must have {expected} entries, got {got}")]
    TableSize { expected: usize, got: usize },

    #[error("rank {k} exceeds ground set size {n}")]
    RankTooLarge { k: usize, n: usize },

    #[error("subset {subset} is not inside the ground set of size {n}")]
    OutOfGround { subset: GroundSubset, n: usize },

    #[error("invalid line presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid realization matrix: {0}")]
    InvalidMatrix(String),

    #[error("{set} is not a member of the family")]
    NotInFamily { set: GroundSubset },

    #[error("invalid affine permutation window: {0}")]
    InvalidWindow(String),

    #[error("malformed cyclic rank matrix: {0}")]
    MalformedMatrix(String),

    #[error("not a positroid: its cyclic interval ranks define a different matroid")]
    NotPositroid,

    #[error("inconsistent interval ranks: {0}")]
    InconsistentRanks(String),

    #[error(
        "polytope dimension mismatch for face {face}: asserted {asserted}, computed {computed}"
    )]
    DimensionMismatch {
        face: usize,
        asserted: usize,
        computed: usize,
    },

    #[error("ground set mismatch: {0}")]
    GroundSetMismatch(String),

    #[error("face {face} has a basis {basis} that is not a basis of the parent")]
    FaceNotInParent { face: usize, basis: GroundSubset },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
