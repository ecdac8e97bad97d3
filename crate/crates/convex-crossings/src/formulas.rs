//! Exact closed-form values of the convex crossing number for the
//! `K(p^(1), m^(n))` family and its special cases.
//!
//! All formulas are evaluated over integers: the polynomial is computed
//! times its common denominator in `i128` and divided once at the end, with
//! a zero-remainder check. A non-integral or negative result would mean the
//! evaluator is wrong, so both are hard failures rather than recoverable
//! errors.

use thiserror::Error;

use crate::multipartite::ExactInt;

/// Input caps keeping every i128 intermediate (quartic in m and n,
/// quadratic in p) well inside range.
pub const MAX_SET_SIZE: u64 = 10_000;
pub const MAX_SPECIAL_SIZE: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("{name} must be at least 1")]
    NonPositive { name: &'static str },
    #[error("formula requires {condition}")]
    DivisibilityViolation { condition: &'static str },
    #[error("inputs exceed the supported range (m, n <= {MAX_SET_SIZE}, p <= {MAX_SPECIAL_SIZE})")]
    OutOfRange,
}

/// Which of the two main evaluators applies to an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// `p | mn`
    T1,
    /// `mn | p`
    T2,
}

impl Theorem {
    pub fn as_str(&self) -> &'static str {
        match self {
            Theorem::T1 => "t1",
            Theorem::T2 => "t2",
        }
    }
}

/// A validated `(m, n, p)` instance of `K(p^(1), m^(n))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaInput {
    pub m: u64,
    pub n: u64,
    pub p: u64,
}

impl FormulaInput {
    pub fn new(m: u64, n: u64, p: u64) -> Result<Self, FormulaError> {
        check_positive(m, "m")?;
        check_positive(n, "n")?;
        check_positive(p, "p")?;
        if m > MAX_SET_SIZE || n > MAX_SET_SIZE || p > MAX_SPECIAL_SIZE {
            return Err(FormulaError::OutOfRange);
        }
        Ok(Self { m, n, p })
    }

    pub fn p_divides_mn(&self) -> bool {
        (self.m * self.n).is_multiple_of(self.p)
    }

    pub fn mn_divides_p(&self) -> bool {
        self.p.is_multiple_of(self.m * self.n)
    }

    /// The applicable evaluator; at the boundary `p = mn` both apply and
    /// agree, and T1 is reported.
    pub fn applicable_theorem(&self) -> Option<Theorem> {
        if self.p_divides_mn() {
            Some(Theorem::T1)
        } else if self.mn_divides_p() {
            Some(Theorem::T2)
        } else {
            None
        }
    }
}

fn check_positive(v: u64, name: &'static str) -> Result<(), FormulaError> {
    if v == 0 {
        Err(FormulaError::NonPositive { name })
    } else {
        Ok(())
    }
}

/// Divides an integer-valued polynomial result by its common denominator,
/// asserting exactness and nonnegativity.
fn exact_div(value: i128, denom: i128) -> ExactInt {
    assert!(
        value % denom == 0,
        "formula value {value} is not divisible by {denom}; evaluator bug"
    );
    let q = value / denom;
    assert!(q >= 0, "formula value {q} is negative; evaluator bug");
    q as u128
}

/// `nu1(K_{m,n}) = 1/12 n(m-1)(2mn-3m-n)` for `m | n`.
pub fn nu1_bipartite(m: u64, n: u64) -> Result<ExactInt, FormulaError> {
    check_positive(m, "m")?;
    check_positive(n, "n")?;
    if m > MAX_SPECIAL_SIZE || n > MAX_SPECIAL_SIZE {
        return Err(FormulaError::OutOfRange);
    }
    if !n.is_multiple_of(m) {
        return Err(FormulaError::DivisibilityViolation { condition: "m | n" });
    }
    let (m, n) = (m as i128, n as i128);
    Ok(exact_div(n * (m - 1) * (2 * m * n - 3 * m - n), 12))
}

/// `nu1(K_{m^(n)}) = 1/24 m²n(n-1)(m²n² + 2n - m²n - 6mn + 6m)`.
pub fn nu1_balanced(m: u64, n: u64) -> Result<ExactInt, FormulaError> {
    check_positive(m, "m")?;
    check_positive(n, "n")?;
    if m > MAX_SET_SIZE || n > MAX_SET_SIZE {
        return Err(FormulaError::OutOfRange);
    }
    let (m, n) = (m as i128, n as i128);
    let inner = m * m * n * n + 2 * n - m * m * n - 6 * m * n + 6 * m;
    Ok(exact_div(m * m * n * (n - 1) * inner, 24))
}

// The 15-term polynomial for nu1(K(p^(1), m^(n))) in the p | mn case, times
// its common denominator 24.
fn phi_times_24(m: i128, n: i128, p: i128) -> i128 {
    let (m2, n2, p2) = (m * m, n * n, p * p);
    let (m3, n3) = (m2 * m, n2 * n);
    let (m4, n4) = (m3 * m, n3 * n);
    m4 * n4 + 2 * m2 * n3 - 2 * m4 * n3 - 6 * m3 * n3 + 12 * m3 * n2 + m4 * n2 - 6 * m3 * n
        + 4 * m2 * n2 * p2
        - 6 * p2 * m * n
        - 18 * m2 * n2 * p
        + 2 * m * n * p
        + 12 * m2 * n * p
        - 4 * m3 * n2 * p
        + 4 * m3 * n3 * p
        + 4 * m * n2 * p
}

/// `nu1(K(p^(1), m^(n)))` for `p | mn`.
pub fn nu1_theorem1(m: u64, n: u64, p: u64) -> Result<ExactInt, FormulaError> {
    let input = FormulaInput::new(m, n, p)?;
    if !input.p_divides_mn() {
        return Err(FormulaError::DivisibilityViolation { condition: "p | mn" });
    }
    Ok(exact_div(phi_times_24(m as i128, n as i128, p as i128), 24))
}

/// `nu1(K(p^(1), m^(n)))` for `mn | p`: the `p | mn` polynomial corrected by
/// `-1/12 m²n² + 1/12 p²`.
pub fn nu1_theorem2(m: u64, n: u64, p: u64) -> Result<ExactInt, FormulaError> {
    let input = FormulaInput::new(m, n, p)?;
    if !input.mn_divides_p() {
        return Err(FormulaError::DivisibilityViolation { condition: "mn | p" });
    }
    let (mi, ni, pi) = (m as i128, n as i128, p as i128);
    let value = phi_times_24(mi, ni, pi) - 2 * mi * mi * ni * ni + 2 * pi * pi;
    Ok(exact_div(value, 24))
}

/// Auto-dispatch between the two evaluators; errors if neither divisibility
/// condition holds.
pub fn nu1_special(m: u64, n: u64, p: u64) -> Result<(Theorem, ExactInt), FormulaError> {
    let input = FormulaInput::new(m, n, p)?;
    match input.applicable_theorem() {
        Some(Theorem::T1) => Ok((Theorem::T1, nu1_theorem1(m, n, p)?)),
        Some(Theorem::T2) => Ok((Theorem::T2, nu1_theorem2(m, n, p)?)),
        None => Err(FormulaError::DivisibilityViolation {
            condition: "p | mn or mn | p",
        }),
    }
}

/// `sum_{k=1}^{mn} floor((k-1)/n) = 1/2 mn(m-1)`.
pub fn floor_sum(m: u64, n: u64) -> ExactInt {
    let (m, n) = (m as u128, n as u128);
    m * n * m.saturating_sub(1) / 2
}
