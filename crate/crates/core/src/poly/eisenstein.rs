use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntPoly;

/// Trial division bound for the constant term.
const TRIAL_LIMIT: u64 = 1_000_000;

/// Smallest prime `q` with `q | a_0, …, a_{n-1}`, `q ∤ a_n` and `q² ∤ a_0`.
///
/// Only primes dividing `a_0` can qualify, so those are the candidates. `a_0`
/// is trial-factored up to 10⁶; a cofactor left over is used only when it is
/// certainly prime (below 10¹²). `None` means no witness was found, which
/// says nothing about reducibility.
pub fn eisenstein_witness(p: &IntPoly) -> Option<BigInt> {
    let deg = p.degree()?;
    if deg == 0 {
        return None;
    }
    let a0 = p.coeff(0);
    if a0.is_zero() {
        return None;
    }
    prime_factors(&a0.abs())
        .into_iter()
        .find(|q| satisfies(p, q))
}

fn satisfies(p: &IntPoly, q: &BigInt) -> bool {
    let c = p.coeffs();
    let n = c.len() - 1;
    c[..n].iter().all(|a| a.is_multiple_of(q))
        && !c[n].is_multiple_of(q)
        && !c[0].is_multiple_of(&(q * q))
}

/// Distinct prime factors in increasing order, dropping any cofactor that is
/// too large to be certified prime by the trial division performed.
fn prime_factors(m: &BigInt) -> Vec<BigInt> {
    let mut rest = m.clone();
    let mut out = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let dd = BigInt::from(d);
        if &dd * &dd > rest {
            break;
        }
        if rest.is_multiple_of(&dd) {
            out.push(dd.clone());
            while rest.is_multiple_of(&dd) {
                rest /= &dd;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        // no factor up to min(d, sqrt) remains, so `rest` is prime when
        // d*d exceeds it
        let certified = rest
            .to_u128()
            .is_some_and(|r| (d as u128) * (d as u128) > r || r < (TRIAL_LIMIT as u128).pow(2));
        if certified {
            out.push(rest);
        }
    }
    out
}
