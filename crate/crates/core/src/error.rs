use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    /// The search space is larger than the configured state budget.
    #[error("search space of {required} states exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    /// An input dimension is above a hard structural limit.
    #[error("{what} is {value}, above the limit of {limit}")]
    GuardExceeded { what: &'static str, value: u64, limit: u64 },
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub(crate) fn saturating_pow(base: u128, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

/// `C(n, r)` saturating at `u128::MAX`.
pub(crate) fn binomial(n: u64, r: u64) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for j in 0..r {
        acc = match acc.checked_mul((n - j) as u128) {
            Some(x) => x / (j as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
