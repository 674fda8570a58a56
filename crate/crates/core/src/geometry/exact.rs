use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Divides out the content and makes the first nonzero entry positive.
/// Returns `None` for the zero vector.
pub(crate) fn normalize<const N: usize>(mut v: [BigInt; N]) -> Option<[BigInt; N]> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return None;
    }
    let negate = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in v.iter_mut() {
        *x /= &g;
        if negate {
            *x = -&*x;
        }
    }
    Some(v)
}

pub(crate) fn dot(a: &[BigInt; 4], b: &[BigInt; 4]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn det3(m: [[&BigInt; 3]; 3]) -> BigInt {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}
