//! Closed forms for path and cycle Wiener indices and the two extremal bounds,
//! evaluated in exact rational arithmetic.

use num_rational::Ratio;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{formula} is undefined at n = {n}, t = {t}")]
    Domain {
        formula: &'static str,
        n: usize,
        t: usize,
    },
}

fn r(num: i64, den: i64) -> Ratio<i64> {
    Ratio::new(num, den)
}

fn integral(value: Ratio<i64>) -> u64 {
    assert!(value.is_integer(), "closed form is integral on its domain");
    value.to_integer() as u64
}

/// `W(P_n) = n(n+1)(n-1)/6`.
pub fn lemma1_wiener_path(n: usize) -> Result<u64, FormulaError> {
    if n == 0 {
        return Err(FormulaError::Domain {
            formula: "W(P_n)",
            n,
            t: 0,
        });
    }
    let n = n as i64;
    Ok(integral(r(n * (n + 1) * (n - 1), 6)))
}

/// `W(C_n)`: `n(n^2 - 1)/8` for odd `n`, `n^3/8` for even `n`.
pub fn lemma1_wiener_cycle(n: usize) -> Result<u64, FormulaError> {
    if n < 3 {
        return Err(FormulaError::Domain {
            formula: "W(C_n)",
            n,
            t: 0,
        });
    }
    let n = n as i64;
    let value = if n % 2 == 1 {
        r(n * (n * n - 1), 8)
    } else {
        r(n * n * n, 8)
    };
    Ok(integral(value))
}

fn check_class(formula: &'static str, n: usize, t: usize) -> Result<(i64, i64), FormulaError> {
    if n == 0 || n < 2 * t + 1 {
        return Err(FormulaError::Domain { formula, n, t });
    }
    Ok((n as i64, t as i64))
}

/// `n^2/2 + (2t - 3/2)n + 3t^2 - 7t + 1`, exactly as printed.
pub fn theorem1_lower_bound(n: usize, t: usize) -> Result<Ratio<i64>, FormulaError> {
    let (n, t) = check_class("lower bound", n, t)?;
    Ok(r(n * n, 2) + (r(2 * t, 1) - r(3, 2)) * n + r(3 * t * t - 7 * t + 1, 1))
}

/// The upper bound, case by parity of `t = 2k` or `t = 2k + 1`, exactly as
/// printed. Defined wherever the saw graph exists; the bound itself is only
/// claimed for `n >= 5`, see [`theorem2_applies`].
pub fn theorem2_upper_bound(n: usize, t: usize) -> Result<Ratio<i64>, FormulaError> {
    let (n, t) = check_class("upper bound", n, t)?;
    let k = t / 2;
    let cubic = r(n * n * n, 6);
    let shared = r(k * n * n - 4 * k * k * n, 1);
    Ok(if t % 2 == 0 {
        cubic - r(n * n, 2) + r(n, 3) + shared + r(4 * k * k * k, 3) + r(8 * k * k, 1)
            - r(10 * k, 3)
    } else {
        cubic - r(13 * n, 6) + shared - r(4 * k * n, 1) - r(4 * k * k * k, 3)
            + r(10 * k * k, 1)
            + r(35 * k, 3)
            + r(5, 1)
    })
}

/// The upper bound is stated for `n >= 5`.
pub fn theorem2_applies(n: usize) -> bool {
    n >= 5
}

/// `"a"` for integers, `"a/b"` otherwise.
pub fn format_ratio(value: Ratio<i64>) -> String {
    if value.is_integer() {
        value.to_integer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}
