//! Bracketing bisection for monotone predicates.
//!
//! Every iterative quantity in the crate (generalized inverses, Luxemburg gauges,
//! weak gauges) is the left end of an up-set `{x > 0 : pred(x)}` of a predicate that
//! is false below some threshold and true above it. The search keeps the invariant
//! `!pred(lo) && pred(hi)` and stops once `lo` and `hi` are adjacent floats, which is
//! well inside the 1e-12 relative target.

use crate::error::{Error, Result};

const MAX_STEPS: usize = 4096;

/// Threshold of a monotone predicate on `(0, ∞)`, starting the bracket at `guess`.
///
/// Returns `hi`, the smallest located point where `pred` holds. Returns 0 when `pred`
/// holds on every positive float down to the smallest normal.
pub fn threshold(pred: impl Fn(f64) -> bool, guess: f64) -> Result<f64> {
    let guess = if guess.is_finite() && guess > 0.0 {
        guess
    } else {
        1.0
    };
    let (mut lo, mut hi);
    if pred(guess) {
        hi = guess;
        loop {
            let half = hi * 0.5;
            if half < f64::MIN_POSITIVE {
                return Ok(0.0);
            }
            if pred(half) {
                hi = half;
            } else {
                lo = half;
                break;
            }
        }
    } else {
        lo = guess;
        let mut steps = 0;
        loop {
            hi = lo * 2.0;
            if !hi.is_finite() || steps > MAX_STEPS {
                return Err(Error::Numerical(format!(
                    "no upper bracket found above {lo:e}"
                )));
            }
            if pred(hi) {
                break;
            }
            lo = hi;
            steps += 1;
        }
    }
    for _ in 0..MAX_STEPS {
        let mid = lo + (hi - lo) * 0.5;
        if mid <= lo || mid >= hi {
            return Ok(hi);
        }
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Err(Error::Numerical("bisection did not converge".into()))
}
