use thiserror::Error;

use crate::semigroup::ElementId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("semigroup order must be at least 1")]
    EmptyOrder,

    #[error("semigroup order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("table shape mismatch: {0}")]
    Shape(String),

    #[error("cell ({row}, {col}) holds {value}, outside [0, {order})")]
    NotClosed {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("element {element} is outside a semigroup of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("generator set is empty")]
    EmptyGeneratorSet,

    #[error("product of the empty sequence is undefined")]
    EmptySequence,

    #[error("sequence of length {len} exceeds the product-set cap of {cap}")]
    SequenceTooLong { len: usize, cap: usize },

    #[error("semigroup is not commutative")]
    NotCommutative,

    #[error("component is not archimedean: it holds {idempotents} idempotents")]
    NotArchimedean { idempotents: usize },

    #[error("element {0} is not in the nil part of its component")]
    NotInNilPart(ElementId),

    #[error("sequence has length {actual}, expected |S \\ E(S)| = {expected}")]
    WrongLength { expected: usize, actual: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("glued semigroup is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociativeAfterGlue { a: usize, b: usize, c: usize },

    #[error("subset is not closed under multiplication")]
    NotSubsemigroup,
}
