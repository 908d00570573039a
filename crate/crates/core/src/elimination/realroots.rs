//! Real-root isolation for univariate polynomials over ℚ using Descartes'
//! rule of signs on bisected intervals (Vincent–Collins–Akritas style).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::gcd::poly_gcd;
use crate::algebra::poly::{Poly, Rat};
use crate::vars::Var;

/// Isolating intervals for the real roots of a univariate polynomial.
/// Each interval contains exactly one real root of the squarefree part;
/// degenerate intervals `[r, r]` mark exact rational roots.
#[derive(Clone, Debug)]
pub struct RealRootIsolation {
    pub polynomial: Poly,
    pub var: Var,
    pub intervals: Vec<(Rat, Rat)>,
}

impl RealRootIsolation {
    pub fn count(&self) -> usize {
        self.intervals.len()
    }

    /// Shrink every interval below the requested width.
    pub fn refine(&mut self, width: &Rat) {
        let coeffs = squarefree_coeffs(&self.polynomial, &self.var);
        for iv in self.intervals.iter_mut() {
            *iv = refine_interval(&coeffs, iv.clone(), width);
        }
    }
}

/// Isolate all real roots of a nonzero univariate polynomial.
pub fn isolate_real_roots(p: &Poly, v: &Var) -> RealRootIsolation {
    assert!(!p.is_zero(), "cannot isolate roots of the zero polynomial");
    let coeffs = squarefree_coeffs(p, v);
    let mut intervals = Vec::new();
    if coeffs.len() <= 1 {
        return RealRootIsolation {
            polynomial: p.clone(),
            var: v.clone(),
            intervals,
        };
    }
    // exact root at 0
    let mut c = coeffs.clone();
    if c[0].is_zero() {
        let k = c.iter().position(|q| !q.is_zero()).unwrap();
        c.drain(0..k);
        intervals.push((Rat::zero(), Rat::zero()));
    }
    let bound = cauchy_bound(&c);
    // positive roots on (0, bound)
    isolate_on(&c, &Rat::zero(), &bound, &mut intervals);
    // negative roots: roots of c(-x) on (0, bound) mirrored
    let neg: Vec<Rat> = c
        .iter()
        .enumerate()
        .map(|(i, q)| if i % 2 == 1 { -q.clone() } else { q.clone() })
        .collect();
    let mut mirrored = Vec::new();
    isolate_on(&neg, &Rat::zero(), &bound, &mut mirrored);
    for (lo, hi) in mirrored {
        intervals.push((-hi, -lo));
    }
    intervals.sort_by(|a, b| a.0.cmp(&b.0));
    RealRootIsolation {
        polynomial: p.clone(),
        var: v.clone(),
        intervals,
    }
}

pub fn count_real_roots(p: &Poly, v: &Var) -> usize {
    isolate_real_roots(p, v).count()
}

fn squarefree_coeffs(p: &Poly, v: &Var) -> Vec<Rat> {
    let sf = {
        let d = p.derivative(v);
        let g = poly_gcd(p, &d);
        if g.is_constant() {
            p.primitive_part()
        } else {
            p.div_exact(&g).expect("gcd divides").primitive_part()
        }
    };
    sf.univar_coeffs(v)
}

fn eval_coeffs(c: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for q in c.iter().rev() {
        acc = acc * x + q;
    }
    acc
}

fn cauchy_bound(c: &[Rat]) -> Rat {
    let lead = c.last().unwrap().abs();
    let mut m = Rat::zero();
    for q in &c[..c.len() - 1] {
        let a = q.abs() / &lead;
        if a > m {
            m = a;
        }
    }
    (m + Rat::one()).ceil()
}

/// Descartes sign-variation count of p mapped onto (lo, hi) → (0, ∞).
fn variations_on(c: &[Rat], lo: &Rat, hi: &Rat) -> usize {
    // q(x) = p(lo + (hi-lo) x), then r(x) = (1+x)^n q(1/(1+x))
    let n = c.len() - 1;
    let mut q = taylor_shift(c, lo);
    let w = hi - lo;
    let mut pw = Rat::one();
    for qi in q.iter_mut() {
        *qi *= &pw;
        pw *= &w;
    }
    q.reverse();
    let r = taylor_shift_one(&q);
    let mut count = 0;
    let mut last: Option<bool> = None;
    for x in &r {
        if x.is_zero() {
            continue;
        }
        let s = x.is_positive();
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    let _ = n;
    count
}

/// p(x + a) for rational a.
fn taylor_shift(c: &[Rat], a: &Rat) -> Vec<Rat> {
    let mut out = c.to_vec();
    let n = out.len();
    if a.is_zero() {
        return out;
    }
    for i in (0..n - 1).rev() {
        for j in i..n - 1 {
            let add = out[j + 1].clone() * a;
            out[j] += add;
        }
    }
    out
}

/// p(x + 1) with the inner loop specialised to 1.
fn taylor_shift_one(c: &[Rat]) -> Vec<Rat> {
    let mut out = c.to_vec();
    let n = out.len();
    for i in (0..n - 1).rev() {
        for j in i..n - 1 {
            let add = out[j + 1].clone();
            out[j] += add;
        }
    }
    out
}

fn isolate_on(c: &[Rat], lo: &Rat, hi: &Rat, out: &mut Vec<(Rat, Rat)>) {
    if lo >= hi {
        return;
    }
    match variations_on(c, lo, hi) {
        0 => {}
        1 => out.push((lo.clone(), hi.clone())),
        _ => {
            let mid = (lo + hi) / Rat::from_integer(BigInt::from(2));
            if eval_coeffs(c, &mid).is_zero() {
                out.push((mid.clone(), mid.clone()));
            }
            isolate_on(c, lo, &mid, out);
            isolate_on(c, &mid, hi, out);
        }
    }
}

fn refine_interval(c: &[Rat], iv: (Rat, Rat), width: &Rat) -> (Rat, Rat) {
    let (mut lo, mut hi) = iv;
    if lo == hi {
        return (lo, hi);
    }
    let two = Rat::from_integer(BigInt::from(2));
    while &(hi.clone() - &lo) > width {
        let mid = (&lo + &hi) / &two;
        let fm = eval_coeffs(c, &mid);
        if fm.is_zero() {
            return (mid.clone(), mid);
        }
        let flo = eval_coeffs(c, &lo);
        if flo.is_zero() {
            // endpoint root of the squarefree part: collapse
            return (lo.clone(), lo);
        }
        if (flo.is_positive() && fm.is_negative()) || (flo.is_negative() && fm.is_positive()) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// The rational with the smallest denominator inside the closed interval.
pub fn simplest_rational_in(lo: &Rat, hi: &Rat) -> Rat {
    assert!(lo <= hi);
    if lo.is_negative() && !hi.is_negative() {
        return Rat::zero();
    }
    if hi.is_negative() {
        return -simplest_rational_in(&-hi.clone(), &-lo.clone());
    }
    // 0 <= lo <= hi
    let ceil_lo = lo.ceil();
    if ceil_lo <= *hi {
        return ceil_lo;
    }
    let n = lo.floor();
    let f = simplest_rational_in(
        &(Rat::one() / (hi - &n)),
        &(Rat::one() / (lo - &n)),
    );
    n + Rat::one() / f
}

/// All rational roots with denominator of bounded height, removed exactly
/// from the polynomial; returns (roots, non-rational isolating intervals).
pub fn rational_roots_bounded(
    p: &Poly,
    v: &Var,
    height: &BigInt,
) -> (Vec<Rat>, Vec<(Rat, Rat)>) {
    let iso = isolate_real_roots(p, v);
    let coeffs = squarefree_coeffs(p, v);
    let mut roots = Vec::new();
    let mut rest = Vec::new();
    let hh = Rat::new(BigInt::one(), height * height * BigInt::from(4));
    for (lo, hi) in iso.intervals {
        if lo == hi {
            roots.push(lo);
            continue;
        }
        let (lo, hi) = refine_interval(&coeffs, (lo, hi), &hh);
        if lo == hi {
            roots.push(lo);
            continue;
        }
        let cand = simplest_rational_in(&lo, &hi);
        if eval_coeffs(&coeffs, &cand).is_zero() {
            roots.push(cand);
        } else {
            rest.push((lo, hi));
        }
    }
    (roots, rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::{rat, rat_i};

    fn t() -> Var {
        Var::new("t")
    }

    fn tp() -> Poly {
        Poly::var(&t())
    }

    #[test]
    fn sqrt_two_isolated() {
        let p = tp().pow(2).sub(&Poly::constant_i(2));
        let iso = isolate_real_roots(&p, &t());
        assert_eq!(iso.count(), 2);
        let two = rat_i(2);
        for (lo, hi) in &iso.intervals {
            // the interval straddles one of ±sqrt(2)
            assert!((lo * lo <= two && two <= hi * hi) || (hi * hi <= two && two <= lo * lo));
        }
    }

    #[test]
    fn no_real_roots() {
        let p = tp().pow(2).add(&Poly::one());
        assert_eq!(count_real_roots(&p, &t()), 0);
    }

    #[test]
    fn three_integer_roots() {
        // (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6
        let p = tp()
            .pow(3)
            .sub(&tp().pow(2).scale(&rat_i(6)))
            .add(&tp().scale(&rat_i(11)))
            .sub(&Poly::constant_i(6));
        let iso = isolate_real_roots(&p, &t());
        assert_eq!(iso.count(), 3);
        let (roots, rest) = rational_roots_bounded(&p, &t(), &num_bigint::BigInt::from(1000));
        assert!(rest.is_empty());
        assert_eq!(roots, vec![rat_i(1), rat_i(2), rat_i(3)]);
    }

    #[test]
    fn repeated_roots_counted_once() {
        let p = tp().sub(&Poly::one()).pow(3).mul(&tp().add(&Poly::constant_i(2)));
        assert_eq!(count_real_roots(&p, &t()), 2);
    }

    #[test]
    fn refinement_narrows() {
        let p = tp().pow(2).sub(&Poly::constant_i(2));
        let mut iso = isolate_real_roots(&p, &t());
        iso.refine(&rat(1, 1024));
        for (lo, hi) in &iso.intervals {
            assert!(hi - lo <= rat(1, 1024));
        }
    }

    #[test]
    fn rational_root_with_denominator() {
        // (2t-3)(t^2+1)
        let p = tp()
            .scale(&rat_i(2))
            .sub(&Poly::constant_i(3))
            .mul(&tp().pow(2).add(&Poly::one()));
        let (roots, rest) = rational_roots_bounded(&p, &t(), &num_bigint::BigInt::from(1000));
        assert_eq!(roots, vec![rat(3, 2)]);
        assert!(rest.is_empty());
    }

    #[test]
    fn simplest_rational_picks_small_denominator() {
        assert_eq!(
            simplest_rational_in(&rat(2, 7), &rat(1, 3)),
            rat(1, 3)
        );
        assert_eq!(simplest_rational_in(&rat(-1, 2), &rat(1, 5)), rat_i(0));
        assert_eq!(simplest_rational_in(&rat(7, 5), &rat(8, 5)), rat(3, 2));
    }

    #[test]
    fn random_products_match_construction() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let nlin = rng.gen_range(0..4usize);
            let nquad = rng.gen_range(0..3usize);
            let mut p = Poly::one();
            let mut roots: Vec<i64> = Vec::new();
            for _ in 0..nlin {
                let r = rng.gen_range(-6i64..=6);
                roots.push(r);
                p = p.mul(&tp().sub(&Poly::constant_i(r)));
            }
            for _ in 0..nquad {
                // t^2 + a t + b irreducible over R: discriminant < 0
                let a = rng.gen_range(-3i64..=3);
                let b = rng.gen_range(1i64..=9) + a * a / 4 + 1;
                p = p.mul(&tp().pow(2).add(&tp().scale(&rat_i(a))).add(&Poly::constant_i(b)));
            }
            if p.is_constant() {
                continue;
            }
            roots.sort();
            roots.dedup();
            assert_eq!(count_real_roots(&p, &t()), roots.len(), "p = {}", p);
        }
    }
}
