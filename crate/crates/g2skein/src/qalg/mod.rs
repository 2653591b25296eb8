//! Exact arithmetic in the field of rational functions of q over the
//! rationals: Laurent polynomials, quantum integers, canonical quotients.

mod parse;
mod poly;
mod ratfunc;

pub use parse::{parse_laurent, parse_ratfunc, rf};
pub use poly::{qbinom, qfact, qint, LaurentPoly, Rat};
pub use ratfunc::RatFunc;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum QalgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative argument {0}")]
    NegativeArgument(i64),
    #[error("binomial arguments out of range: m={m}, n={n}")]
    BinomOutOfRange { m: i64, n: i64 },
    #[error("quotient is not a Laurent polynomial")]
    InexactDivision,
    #[error("evaluation at q=0")]
    EvalAtZero,
    #[error("pole at evaluation point")]
    Pole,
    #[error("parse error: {0}")]
    Parse(String),
}
