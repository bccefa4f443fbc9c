//! Exact sign tests for expressions with one or two square roots of
//! non-negative integers.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

fn sign(x: &BigInt) -> Ordering {
    x.cmp(&BigInt::zero())
}

/// Sign of `a + b·√x` for `x ≥ 0`.
///
/// When the two terms disagree in sign, the one with the larger square
/// decides; equal squares mean the sum is exactly zero.
pub fn sign_one(a: &BigInt, b: &BigInt, x: &BigInt) -> Ordering {
    assert!(!x.is_negative(), "square root of a negative number");
    let sa = sign(a);
    let sb = if x.is_zero() {
        Ordering::Equal
    } else {
        sign(b)
    };
    match (sa, sb) {
        (s, Ordering::Equal) | (Ordering::Equal, s) => s,
        _ if sa == sb => sa,
        _ => match (a * a).cmp(&(b * b * x)) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        },
    }
}

/// Sign of `a + b·√x + c·√y` for `x, y ≥ 0`.
///
/// With `u = a + b·√x` and `v = c·√y` of opposite signs,
/// `u² − v² = (a² + b²x − c²y) + 2ab·√x` is a one-root expression.
pub fn sign_two(a: &BigInt, b: &BigInt, x: &BigInt, c: &BigInt, y: &BigInt) -> Ordering {
    assert!(!y.is_negative(), "square root of a negative number");
    let su = sign_one(a, b, x);
    let sv = if y.is_zero() {
        Ordering::Equal
    } else {
        sign(c)
    };
    match (su, sv) {
        (s, Ordering::Equal) | (Ordering::Equal, s) => s,
        _ if su == sv => su,
        _ => {
            let rational_part = a * a + b * b * x - c * c * y;
            let root_coeff = BigInt::from(2) * a * b;
            match sign_one(&rational_part, &root_coeff, x) {
                Ordering::Greater => su,
                Ordering::Less => sv,
                Ordering::Equal => Ordering::Equal,
            }
        }
    }
}
