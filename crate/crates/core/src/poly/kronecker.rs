//! Kronecker's factor search over `Z[x]`.
//!
//! A factor `f` of degree `d` is pinned down by its values at `d + 1`
//! integer points, and each value `f(a)` must divide `p(a)`. So: evaluate `p`
//! at a handful of points, pick the `d + 1` points whose values have the
//! fewest divisors, run through all divisor choices, interpolate, and
//! test-divide. The interpolation uses Newton divided differences, which are
//! integers for any integer polynomial at integer nodes, so a non-integral
//! difference kills a partial choice early.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntPoly;

pub const DEFAULT_DEGREE_CAP: usize = 12;

/// Values whose square root exceeds this are not factored; their points are
/// skipped.
const VALUE_TRIAL_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Kronecker {
    /// Exhaustive search found no factor of degree `1..=deg/2`.
    Irreducible,
    /// `p = f · g` with `1 ≤ deg f ≤ deg g`.
    Factor(IntPoly, IntPoly),
    /// Degree above the cap, or too few usable evaluation points.
    OutOfRange,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorStatus {
    Irreducible,
    /// Not resolved within the degree cap.
    Unresolved,
    /// Integer content, listed when it is not 1.
    Constant,
}

/// Searches for a nontrivial factor of the primitive part of `p`.
///
/// Constants are reported as `Irreducible`: they have no factor of positive
/// degree. Factors come back normalized with a positive constant term (or a
/// positive leading coefficient when the constant term is zero); the content
/// of `p` stays in the cofactor so that `f · g = p`.
pub fn kronecker_factor(p: &IntPoly, degree_cap: usize) -> Kronecker {
    let Some(deg) = p.degree() else {
        return Kronecker::Irreducible;
    };
    if deg > degree_cap {
        return Kronecker::OutOfRange;
    }
    if deg <= 1 {
        return Kronecker::Irreducible;
    }
    let content = p.content();
    let pp = IntPoly::new(p.coeffs().iter().map(|c| c / &content).collect());
    let split = |f: IntPoly| {
        let f = normalize(f);
        let g = p.divide_exact(&f).expect("nonzero").expect("f divides p");
        Kronecker::Factor(f, g)
    };
    if pp.coeff(0).is_zero() {
        return split(IntPoly::monomial(1));
    }

    let reach = degree_cap.div_ceil(2).max(deg.div_ceil(2)) as i64;
    let mut points = Vec::new();
    for a in std::iter::once(0).chain((1..=reach).flat_map(|k| [k, -k])) {
        let x = BigInt::from(a);
        let v = pp.eval_int(&x);
        if v.is_zero() {
            // x - a divides p
            return split(IntPoly::new(vec![-x, BigInt::one()]));
        }
        if let Some(divs) = divisors(&v.abs()) {
            points.push((x, divs));
        }
    }
    points.sort_by_key(|(_, d)| d.len());

    let lead = pp.leading().expect("nonzero").clone();
    for d in 1..=deg / 2 {
        if points.len() < d + 1 {
            return Kronecker::OutOfRange;
        }
        let chosen = &points[..=d];
        let mut search = Search {
            points: chosen,
            target: &pp,
            lead: &lead,
            rows: Vec::with_capacity(d + 1),
            found: None,
        };
        search.level(0);
        if let Some(f) = search.found {
            return split(f);
        }
    }
    Kronecker::Irreducible
}

/// Splits `p` into irreducible factors as far as the degree cap allows.
/// Factors are sorted by degree then coefficients; a non-unit content comes
/// first as a constant factor.
pub fn factorize(p: &IntPoly, degree_cap: usize) -> Vec<(IntPoly, FactorStatus)> {
    let mut out = Vec::new();
    if p.degree().is_none_or(|d| d == 0) {
        return vec![(p.clone(), FactorStatus::Constant)];
    }
    let mut content = p.content();
    if p.leading().is_some_and(|c| c.is_negative()) {
        content = -content;
    }
    let primitive = IntPoly::new(p.coeffs().iter().map(|c| c / &content).collect());
    if !content.is_one() {
        out.push((IntPoly::new(vec![content]), FactorStatus::Constant));
    }
    let mut stack = vec![primitive];
    let mut pieces = Vec::new();
    while let Some(q) = stack.pop() {
        match kronecker_factor(&q, degree_cap) {
            Kronecker::Irreducible => pieces.push((normalize(q), FactorStatus::Irreducible)),
            Kronecker::OutOfRange => pieces.push((normalize(q), FactorStatus::Unresolved)),
            Kronecker::Factor(f, g) => {
                stack.push(f);
                stack.push(g);
            }
        }
    }
    pieces.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    out.extend(pieces);
    out
}

fn normalize(f: IntPoly) -> IntPoly {
    let c0 = f.coeff(0);
    let flip = if c0.is_zero() {
        f.leading().is_some_and(|c| c.is_negative())
    } else {
        c0.is_negative()
    };
    if flip {
        f.scale(&BigInt::from(-1))
    } else {
        f
    }
}

struct Search<'a> {
    points: &'a [(BigInt, Vec<BigInt>)],
    target: &'a IntPoly,
    lead: &'a BigInt,
    /// `rows[j][k]` is the divided difference `f[x_{j-k}, …, x_j]`.
    rows: Vec<Vec<BigInt>>,
    found: Option<IntPoly>,
}

impl Search<'_> {
    fn level(&mut self, j: usize) {
        if self.found.is_some() {
            return;
        }
        let d = self.points.len() - 1;
        let (xj, divs) = &self.points[j];
        for div in divs {
            // f and -f are interchangeable: fix the sign at the first point
            let signs: &[i8] = if j == 0 { &[1] } else { &[1, -1] };
            for &s in signs {
                let y = if s > 0 { div.clone() } else { -div };
                let Some(row) = self.row(j, xj, y) else {
                    continue;
                };
                if j == d {
                    let top = &row[d];
                    if top.is_zero() || !self.lead.is_multiple_of(top) {
                        continue;
                    }
                    self.rows.push(row);
                    let f = self.newton_to_monomial();
                    self.rows.pop();
                    if self.target.divide_exact(&f).expect("nonzero").is_some() {
                        self.found = Some(f);
                        return;
                    }
                } else {
                    self.rows.push(row);
                    self.level(j + 1);
                    self.rows.pop();
                    if self.found.is_some() {
                        return;
                    }
                }
            }
        }
    }

    /// Divided-difference row for a new point, or `None` if some entry is
    /// not an integer.
    fn row(&self, j: usize, xj: &BigInt, y: BigInt) -> Option<Vec<BigInt>> {
        let mut row = Vec::with_capacity(j + 1);
        row.push(y);
        for k in 1..=j {
            let num = &row[k - 1] - &self.rows[j - 1][k - 1];
            let den = xj - &self.points[j - k].0;
            let (q, r) = num.div_rem(&den);
            if !r.is_zero() {
                return None;
            }
            row.push(q);
        }
        Some(row)
    }

    /// `Σ c_k Π_{i<k} (x - x_i)` with `c_k = rows[k][k]`, by Horner on the
    /// Newton form.
    fn newton_to_monomial(&self) -> IntPoly {
        let d = self.rows.len() - 1;
        let mut acc = IntPoly::new(vec![self.rows[d][d].clone()]);
        for k in (0..d).rev() {
            let lin = IntPoly::new(vec![-self.points[k].0.clone(), BigInt::one()]);
            acc = &(&acc * &lin) + &IntPoly::new(vec![self.rows[k][k].clone()]);
        }
        acc
    }
}

/// Positive divisors of `m > 0`, or `None` when `m` is too large to factor
/// by the trial division used here.
fn divisors(m: &BigInt) -> Option<Vec<BigInt>> {
    let mut rest = m.to_u128()?;
    let mut primes: Vec<(u128, u32)> = Vec::new();
    let mut d: u128 = 2;
    while d * d <= rest {
        if d > VALUE_TRIAL_LIMIT as u128 {
            return None;
        }
        if rest % d == 0 {
            let mut e = 0;
            while rest % d == 0 {
                rest /= d;
                e += 1;
            }
            primes.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        primes.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (q, e) in primes {
        let q = BigInt::from(q);
        let base = divs.clone();
        let mut power = BigInt::one();
        for _ in 0..e {
            power *= &q;
            divs.extend(base.iter().map(|b| b * &power));
        }
    }
    divs.sort();
    Some(divs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn c6_splits() {
        assert_eq!(
            kronecker_factor(&p(&[1, 6, 9, 2]), DEFAULT_DEGREE_CAP),
            Kronecker::Factor(p(&[1, 2]), p(&[1, 4, 1]))
        );
    }

    #[test]
    fn c5_irreducible() {
        assert_eq!(kronecker_factor(&p(&[1, 5, 5]), DEFAULT_DEGREE_CAP), Kronecker::Irreducible);
    }

    #[test]
    fn cap_respected() {
        let mut c = vec![1i64; 15];
        c[14] = 3;
        assert_eq!(kronecker_factor(&p(&c), 12), Kronecker::OutOfRange);
    }

    #[test]
    fn finds_quadratic_pairs() {
        // (x^2 + 1)(x^2 + x + 3): no rational roots
        let a = p(&[1, 0, 1]);
        let b = p(&[3, 1, 1]);
        let prod = &a * &b;
        match kronecker_factor(&prod, DEFAULT_DEGREE_CAP) {
            Kronecker::Factor(f, g) => {
                assert_eq!(&f * &g, prod);
                assert!(f == a || f == b, "{f}");
            }
            other => panic!("expected a factor, got {other:?}"),
        }
        assert_eq!(kronecker_factor(&p(&[1, 0, 1]), 12), Kronecker::Irreducible);
        assert_eq!(kronecker_factor(&p(&[-2, 0, 0, 1]), 12), Kronecker::Irreducible);
    }

    #[test]
    fn content_stays_in_cofactor() {
        // 6(1+x)(1+2x)
        let q = p(&[6, 18, 12]);
        match kronecker_factor(&q, 12) {
            Kronecker::Factor(f, g) => {
                assert_eq!(&f * &g, q);
                assert_eq!(f.degree(), Some(1));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(kronecker_factor(&p(&[6, 12]), 12), Kronecker::Irreducible);
    }

    #[test]
    fn zero_constant_term() {
        match kronecker_factor(&p(&[0, 1, 1]), 12) {
            Kronecker::Factor(f, g) => {
                assert_eq!(f, p(&[0, 1]));
                assert_eq!(g, p(&[1, 1]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn full_factorization() {
        let c6 = p(&[1, 6, 9, 2]);
        let fs = factorize(&c6, 12);
        assert_eq!(
            fs,
            vec![(p(&[1, 2]), FactorStatus::Irreducible), (p(&[1, 4, 1]), FactorStatus::Irreducible)]
        );
        let q = &(&p(&[1, 3]) * &p(&[1, 3])) * &p(&[2, 2]);
        let fs = factorize(&q, 12);
        assert_eq!(fs[0], (p(&[2]), FactorStatus::Constant));
        assert_eq!(fs.len(), 4);
        let prod = fs.iter().fold(IntPoly::one(), |acc, (f, _)| &acc * f);
        assert_eq!(prod, q);
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(&BigInt::from(12)).unwrap(), [1, 2, 3, 4, 6, 12].map(BigInt::from).to_vec());
        assert_eq!(divisors(&BigInt::from(1)).unwrap(), vec![BigInt::one()]);
        assert!(divisors(&(BigInt::from(1u64 << 62) * BigInt::from(1u64 << 62))).is_some());
        let huge = BigInt::from(1_000_000_007u64) * BigInt::from(1_000_000_009u64) * BigInt::from(998_244_353u64);
        assert!(divisors(&huge).is_none());
    }
}
