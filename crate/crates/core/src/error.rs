use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system {series}{rank}: {constraint}")]
    InvalidSeries {
        series: String,
        rank: usize,
        constraint: &'static str,
    },

    #[error("node {index} out of range (rank {rank})")]
    NodeOutOfRange { index: usize, rank: usize },

    #[error("not a permutation of the {rank} simple roots: {detail}")]
    NotAPermutation { rank: usize, detail: String },

    #[error(
        "node permutation is not a diagram automorphism: Cartan entry ({i},{j}) = {before} \
         but image entry ({si},{sj}) = {after}"
    )]
    CartanViolated {
        i: usize,
        j: usize,
        si: usize,
        sj: usize,
        before: i64,
        after: i64,
    },

    #[error("anisotropic kernel is not stable: automorphism sends node {from} to node {to}")]
    KernelNotStable { from: usize, to: usize },

    #[error("order bound {bound} exceeded while enumerating {what} ({reached} elements reached)")]
    OrderBoundExceeded {
        what: &'static str,
        bound: usize,
        reached: usize,
    },

    #[error("unknown case `{0}`; known cases: {1}")]
    UnknownCase(String, String),

    #[error("case {case}: {message}")]
    CaseParameters { case: String, message: String },

    #[error("{0}")]
    Format(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
