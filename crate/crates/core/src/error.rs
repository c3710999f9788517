use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("duplicate element `{0}`")]
    DuplicateElement(String),

    #[error("antisymmetry violated: `{0}` and `{1}` specialize to each other")]
    Antisymmetry(String, String),

    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("map is not total: {0}")]
    NotTotal(String),

    #[error("map is not monotone: `{from_lo}` <= `{from_hi}` but `{to_lo}` is not <= `{to_hi}`")]
    NotMonotone {
        from_lo: String,
        from_hi: String,
        to_lo: String,
        to_hi: String,
    },

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("set is not Thomason (not closed under specialization)")]
    NotThomason,

    #[error("level {requested} is beyond the available depth {available}")]
    DepthExceeded { requested: usize, available: usize },

    #[error("cannot lift a level-{from} set down to level {to}")]
    LiftBelowLevel { from: usize, to: usize },

    #[error("point `{point}` is not compatible with the transitions at level {level}")]
    IncompatiblePoint { point: String, level: usize },

    #[error("not a section at level {level}: element `{element}` {reason}")]
    NotASection {
        level: usize,
        element: String,
        reason: String,
    },

    #[error("unassigned generator `{0}`")]
    UnassignedGenerator(String),

    #[error("too large: {0}")]
    TooLarge(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("no isomorphism: {0}")]
    NoIsomorphism(String),
}
