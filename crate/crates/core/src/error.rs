use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus must be at least 1, got {0}")]
    ZeroModulus(u64),
    #[error("expected an even modulus, got {0}")]
    OddModulus(u64),
    #[error("expected an odd unit, got t = {0}")]
    EvenUnit(i64),
    #[error("no solution-vector case for n = {n} (2-adic valuation {r}) with e = {e}")]
    VectorCase { n: u64, r: u32, e: u32 },

    #[error("cyclic order must be at least 1")]
    TrivialOrder,
    #[error("coefficient vector has length {got}, group has {expected} summands")]
    Length { expected: usize, got: usize },
    #[error("elements belong to different groups")]
    GroupMismatch,
    #[error("image of generator {index} is not killed by its order {order}")]
    NotWellDefined { index: usize, order: u64 },
    #[error("carrier is not closed under generator {generator}")]
    NotClosed { generator: usize },

    #[error("k = {0} is outside the supported range 2..=6")]
    KOutOfRange(u32),
    #[error("n = {0} is outside the supported range (n >= 2)")]
    NOutOfRange(u64),
    #[error("K({k},{n}) relation check failed: {relation}")]
    Relation { k: u32, n: u64, relation: String },
    #[error("(t = {t}, eps = {eps}) is not a listed self-equivalence of P(n = {n})")]
    InvalidEquivalence { t: u64, eps: u8, n: u64 },
    #[error("element cannot be written as a*theta plus named generators")]
    Decomposition,

    #[error("G({k},{n}) mismatch: closed form {closed_form}, brute force {brute_force}\n{partition}")]
    Mismatch {
        k: u32,
        n: u64,
        closed_form: u64,
        brute_force: u64,
        partition: String,
    },
}
