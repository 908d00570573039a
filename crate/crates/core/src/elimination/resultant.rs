//! Resultants with respect to one variable.
//!
//! Computed by a content-stripped polynomial remainder sequence with exact
//! bookkeeping of the leading-coefficient and content factors, so the output
//! is the exact Sylvester-matrix determinant (sign included). Unit tests
//! check the value against a fraction-free Bareiss determinant oracle.

use num_traits::{One, Zero};

use crate::algebra::gcd::{poly_gcd, prem, VPoly};
use crate::algebra::poly::{Poly, Rat};
use crate::vars::Var;

/// Accumulated product of polynomial factors with signed exponents plus a
/// rational scalar; assembled by exact division at the end.
struct Factors {
    scalar: Rat,
    factors: Vec<(Poly, i64)>,
}

impl Factors {
    fn new() -> Factors {
        Factors {
            scalar: Rat::one(),
            factors: Vec::new(),
        }
    }

    fn push(&mut self, p: &Poly, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(c) = p.as_constant() {
            if e >= 0 {
                for _ in 0..e {
                    self.scalar *= &c;
                }
            } else {
                for _ in 0..(-e) {
                    self.scalar /= &c;
                }
            }
            return;
        }
        if let Some(entry) = self.factors.iter_mut().find(|(q, _)| q == p) {
            entry.1 += e;
        } else {
            self.factors.push((p.clone(), e));
        }
    }

    fn assemble(self) -> Poly {
        let mut num = Poly::constant(self.scalar);
        let mut den = Poly::one();
        for (p, e) in self.factors {
            if e > 0 {
                num = num.mul(&p.pow(e as u32));
            } else {
                den = den.mul(&p.pow((-e) as u32));
            }
        }
        num.div_exact(&den)
            .expect("resultant factor assembly is an exact division")
    }
}

/// Sylvester resultant of `a` and `b` eliminating `v`.
///
/// Res of anything with the zero polynomial is 0; when one argument is
/// constant in `v`, the result is that constant raised to the other's degree.
/// High-degree instances with at most two surviving variables are computed
/// by exact evaluation/interpolation on an integer grid (the resultant's
/// degree in a surviving variable is bounded by the Sylvester structure);
/// everything else goes through a content-stripped PRS.
pub fn resultant(a: &Poly, b: &Poly, v: &Var) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    if let Some(r) = interpolation_route(a, b, v) {
        return r;
    }
    resultant_prs(a, b, v)
}

fn resultant_prs(a: &Poly, b: &Poly, v: &Var) -> Poly {
    let mut fa = VPoly::new(a, v);
    let mut fb = VPoly::new(b, v);
    let mut acc = Factors::new();
    let mut negate = false;
    loop {
        if fa.deg() < fb.deg() {
            if fa.deg() % 2 == 1 && fb.deg() % 2 == 1 {
                negate = !negate;
            }
            std::mem::swap(&mut fa, &mut fb);
        }
        let m = fa.deg();
        let n = fb.deg();
        if n == 0 {
            acc.push(fb.lc(), m as i64);
            break;
        }
        let r = prem(&fa, &fb);
        if r.is_zero() {
            return Poly::zero();
        }
        let rd = r.deg();
        // strip the full content of the remainder to keep the PRS small
        let (content, stripped) = strip_content(r);
        // Res(A,B) = (-1)^{mn} lc(B)^{m - rd - n(m-n+1)} content^n Res(B,R')
        if (m * n) % 2 == 1 {
            negate = !negate;
        }
        acc.push(fb.lc(), m as i64 - rd as i64 - (n as i64) * ((m - n + 1) as i64));
        acc.push(&content, n as i64);
        fa = fb;
        fb = stripped;
    }
    let res = acc.assemble();
    if negate {
        res.neg()
    } else {
        res
    }
}

/// Degree of the resultant in a surviving variable `w`:
/// deg_w ≤ deg_v(a)·deg_w(b) + deg_v(b)·deg_w(a).
fn surviving_degree_bound(a: &Poly, b: &Poly, v: &Var, w: &Var) -> u32 {
    a.degree_in(v) * b.degree_in(w) + b.degree_in(v) * a.degree_in(w)
}

fn interpolation_route(a: &Poly, b: &Poly, v: &Var) -> Option<Poly> {
    let others: Vec<Var> = crate::vars::merge_vars(a.vars(), b.vars())
        .into_iter()
        .filter(|w| w != v)
        .collect();
    let dv = a.degree_in(v) + b.degree_in(v);
    if others.is_empty() || others.len() > 2 || dv < 12 {
        return None;
    }
    let bounds: Vec<u32> = others
        .iter()
        .map(|w| surviving_degree_bound(a, b, v, w))
        .collect();
    let grid: u64 = bounds.iter().map(|d| *d as u64 + 1).product();
    if grid > 40_000 {
        return None;
    }
    let la = a.leading_coeff_in(v);
    let lb = b.leading_coeff_in(v);
    let mut samples: Vec<Vec<Rat>> = Vec::new();
    // per-axis nodes; skip values that annihilate a leading coefficient,
    // since a degree drop under specialization changes the determinant shape
    for (w, bound) in others.iter().zip(&bounds) {
        let mut nodes = Vec::with_capacity(*bound as usize + 1);
        let mut k: i64 = 0;
        while nodes.len() < *bound as usize + 1 && k < 1000 {
            for cand in [k, -k] {
                if nodes.len() == *bound as usize + 1 {
                    break;
                }
                let val = Rat::from_integer(cand.into());
                if (cand == 0 && k != 0) || nodes.contains(&val) {
                    continue;
                }
                if la.eval_var(w, &val).is_zero() || lb.eval_var(w, &val).is_zero() {
                    continue;
                }
                nodes.push(val);
            }
            k += 1;
        }
        if nodes.len() < *bound as usize + 1 {
            return None;
        }
        samples.push(nodes);
    }
    // evaluate on the grid with univariate PRS resultants
    let assignments: Vec<Vec<(Var, Rat)>> = match others.len() {
        1 => samples[0]
            .iter()
            .map(|x| vec![(others[0].clone(), x.clone())])
            .collect(),
        _ => {
            let mut out = Vec::new();
            for x in &samples[0] {
                for y in &samples[1] {
                    out.push(vec![
                        (others[0].clone(), x.clone()),
                        (others[1].clone(), y.clone()),
                    ]);
                }
            }
            out
        }
    };
    let mut values: Vec<(Vec<Rat>, Rat)> = Vec::with_capacity(assignments.len());
    for assign in &assignments {
        if la.eval(assign).is_zero() || lb.eval(assign).is_zero() {
            return None; // grid hit a degree drop: fall back to the PRS
        }
        let av: Vec<Rat> = a.coeffs_in(v).iter().map(|c| c.eval(assign)).collect();
        let bv: Vec<Rat> = b.coeffs_in(v).iter().map(|c| c.eval(assign)).collect();
        let r = univar_resultant(&av, &bv);
        values.push((assign.iter().map(|(_, x)| x.clone()).collect(), r));
    }
    // tensor-product Lagrange interpolation
    match others.len() {
        1 => {
            let pts: Vec<(Rat, Rat)> = values
                .into_iter()
                .map(|(xs, r)| (xs[0].clone(), r))
                .collect();
            Some(lagrange_poly(&others[0], &pts))
        }
        _ => {
            let ny = samples[1].len();
            let mut tau_polys: Vec<(Rat, Poly)> = Vec::new();
            for (i, x) in samples[0].iter().enumerate() {
                let pts: Vec<(Rat, Rat)> = (0..ny)
                    .map(|j| {
                        let (xs, r) = &values[i * ny + j];
                        (xs[1].clone(), r.clone())
                    })
                    .collect();
                tau_polys.push((x.clone(), lagrange_poly(&others[1], &pts)));
            }
            // interpolate each τ-coefficient across the first axis
            let max_deg = tau_polys
                .iter()
                .map(|(_, p)| p.degree_in(&others[1]) as usize)
                .max()
                .unwrap_or(0);
            let mut acc = Poly::zero();
            let wy = Poly::var(&others[1]);
            for k in 0..=max_deg {
                let pts: Vec<(Rat, Rat)> = tau_polys
                    .iter()
                    .map(|(x, p)| {
                        let cs = p.coeffs_in(&others[1]);
                        let c = cs
                            .get(k)
                            .and_then(|q| q.as_constant())
                            .unwrap_or_else(Rat::zero);
                        (x.clone(), c)
                    })
                    .collect();
                let ck = lagrange_poly(&others[0], &pts);
                if !ck.is_zero() {
                    acc = acc.add(&ck.mul(&wy.pow(k as u32)));
                }
            }
            Some(acc)
        }
    }
}

fn lagrange_poly(v: &Var, pts: &[(Rat, Rat)]) -> Poly {
    let x = Poly::var(v);
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in pts.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut term = Poly::constant(yi.clone());
        for (j, (xj, _)) in pts.iter().enumerate() {
            if i == j {
                continue;
            }
            term = term
                .mul(&x.sub(&Poly::constant(xj.clone())))
                .scale(&(xi - xj).recip());
        }
        acc = acc.add(&term);
    }
    acc
}

/// Exact univariate resultant over ℚ via a content-stripped integer PRS.
pub fn univar_resultant(a: &[Rat], b: &[Rat]) -> Rat {
    use num_bigint::BigInt;
    let trim = |c: &[Rat]| {
        let mut v = c.to_vec();
        while v.last().map(|q| q.is_zero()).unwrap_or(false) {
            v.pop();
        }
        v
    };
    let fa = trim(a);
    let fb = trim(b);
    if fa.is_empty() || fb.is_empty() {
        return Rat::zero();
    }
    // clear denominators: Res(λA, B) = λ^deg B · Res(A, B)
    let clear = |c: &[Rat]| -> (Vec<BigInt>, Rat) {
        let mut lcm = BigInt::one();
        for q in c {
            lcm = num_integer::Integer::lcm(&lcm, q.denom());
        }
        let ints: Vec<BigInt> = c.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
        (ints, Rat::new(BigInt::one(), lcm))
    };
    let (ia, sa) = clear(&fa);
    let (ib, sb) = clear(&fb);
    let da = ia.len() as u32 - 1;
    let db = ib.len() as u32 - 1;
    let raw = int_resultant(ia, ib);
    let mut scale = Rat::one();
    for _ in 0..db {
        scale *= &sa;
    }
    for _ in 0..da {
        scale *= &sb;
    }
    Rat::from_integer(raw) * scale
}

/// Resultant of two integer polynomials (dense ascending), exact sign.
fn int_resultant(a: Vec<num_bigint::BigInt>, b: Vec<num_bigint::BigInt>) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    let deg = |p: &Vec<BigInt>| p.len() as i64 - 1;
    let mut fa = a;
    let mut fb = b;
    let mut negate = false;
    let mut num: Vec<(BigInt, u64)> = Vec::new();
    let mut den: Vec<(BigInt, u64)> = Vec::new();
    loop {
        if deg(&fa) < deg(&fb) {
            if deg(&fa) % 2 == 1 && deg(&fb) % 2 == 1 {
                negate = !negate;
            }
            std::mem::swap(&mut fa, &mut fb);
        }
        let m = deg(&fa);
        let n = deg(&fb);
        if n == 0 {
            num.push((fb[0].clone(), m as u64));
            break;
        }
        // pseudo-remainder
        let lb = fb[n as usize].clone();
        let mut r = fa.clone();
        let mut e = m - n + 1;
        while deg(&r) >= n && !r.is_empty() {
            let dr = deg(&r) as usize;
            let lr = r[dr].clone();
            for c in r.iter_mut() {
                *c = &*c * &lb;
            }
            for i in 0..n as usize {
                r[dr - n as usize + i] = &r[dr - n as usize + i] - &lr * &fb[i];
            }
            r[dr] = BigInt::zero();
            while r.last().map(|c| c.is_zero()).unwrap_or(false) {
                r.pop();
            }
            e -= 1;
        }
        if r.is_empty() {
            return BigInt::zero();
        }
        if e > 0 {
            let mut f = BigInt::one();
            for _ in 0..e {
                f = &f * &lb;
            }
            for c in r.iter_mut() {
                *c = &*c * &f;
            }
        }
        let rd = deg(&r);
        // strip integer content
        let mut g = BigInt::zero();
        for c in &r {
            g = num_integer::Integer::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        if !g.is_one() {
            for c in r.iter_mut() {
                *c = &*c / &g;
            }
        }
        if (m * n) % 2 == 1 {
            negate = !negate;
        }
        let lb_exp = m - rd - n * (m - n + 1);
        if lb_exp >= 0 {
            num.push((lb, lb_exp as u64));
        } else {
            den.push((lb, (-lb_exp) as u64));
        }
        num.push((g, n as u64));
        fa = fb;
        fb = r;
    }
    let mut np = BigInt::one();
    for (base, e) in num {
        for _ in 0..e {
            np = &np * &base;
        }
    }
    let mut dp = BigInt::one();
    for (base, e) in den {
        for _ in 0..e {
            dp = &dp * &base;
        }
    }
    let q = &np / &dp;
    debug_assert_eq!(&q * &dp, np, "resultant assembly division must be exact");
    if negate {
        -q
    } else {
        q
    }
}

/// Factor a VPoly as content · primitive, content covering both the
/// polynomial gcd of the coefficients and the rational scale.
fn strip_content(r: VPoly) -> (Poly, VPoly) {
    let mut g = Poly::zero();
    for c in &r.0 {
        if !c.is_zero() {
            g = poly_gcd(&g, c);
            if g.is_constant() {
                break;
            }
        }
    }
    let mut coeffs: Vec<Poly> = if g.is_constant() {
        r.0
    } else {
        r.0
            .iter()
            .map(|c| c.div_exact(&g).expect("content divides"))
            .collect()
    };
    if g.is_constant() {
        g = Poly::one();
    }
    // joint rational content of the remaining coefficients
    let mut num = num_bigint::BigInt::zero();
    let mut den = num_bigint::BigInt::one();
    for c in &coeffs {
        if c.is_zero() {
            continue;
        }
        let rc = c.content();
        num = num_integer::Integer::gcd(&num, rc.numer());
        den = num_integer::Integer::lcm(&den, rc.denom());
    }
    let rho = Rat::new(num, den);
    if !rho.is_one() {
        for c in coeffs.iter_mut() {
            *c = c.scale(&rho.recip());
        }
    }
    (g.scale(&rho), VPoly(coeffs))
}

#[cfg(test)]
pub mod oracle {
    //! Fraction-free Sylvester determinant, used to cross-check the PRS.
    use super::*;

    pub fn sylvester_resultant(a: &Poly, b: &Poly, v: &Var) -> Poly {
        let ca = a.coeffs_in(v);
        let cb = b.coeffs_in(v);
        let m = ca.len() - 1;
        let n = cb.len() - 1;
        if m == 0 && n == 0 {
            return Poly::one();
        }
        let size = m + n;
        let mut mat = vec![vec![Poly::zero(); size]; size];
        for row in 0..n {
            for (j, c) in ca.iter().enumerate() {
                mat[row][row + (m - j)] = c.clone();
            }
        }
        for row in 0..m {
            for (j, c) in cb.iter().enumerate() {
                mat[n + row][row + (n - j)] = c.clone();
            }
        }
        bareiss_det(mat)
    }

    pub fn bareiss_det(mut m: Vec<Vec<Poly>>) -> Poly {
        let n = m.len();
        if n == 0 {
            return Poly::one();
        }
        let mut sign = false;
        let mut prev = Poly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|i| !m[*i][k].is_zero()) else {
                    return Poly::zero();
                };
                m.swap(k, swap);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                    m[i][j] = num.div_exact(&prev).expect("Bareiss divides exactly");
                }
                m[i][k] = Poly::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if sign {
            det.neg()
        } else {
            det
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::rat_i;

    fn t() -> Var {
        Var::new("t")
    }

    fn tp() -> Poly {
        Poly::var(&t())
    }

    #[test]
    fn resultant_constant_value() {
        // Res_t(t^2+1, t-1) = 2 (Sylvester determinant by hand)
        let a = tp().pow(2).add(&Poly::one());
        let b = tp().sub(&Poly::one());
        assert_eq!(resultant(&a, &b, &t()), Poly::constant_i(2));
    }

    #[test]
    fn resultant_shared_root_vanishes() {
        let a = tp().pow(2).sub(&Poly::one());
        let b = tp().sub(&Poly::one());
        assert!(resultant(&a, &b, &t()).is_zero());
    }

    #[test]
    fn parabola_implicitization() {
        // Res_t(x - t, y - t^2) = y - x^2
        let x = Poly::var(&Var::new("x"));
        let y = Poly::var(&Var::new("y"));
        let a = x.sub(&tp());
        let b = y.sub(&tp().pow(2));
        let r = resultant(&a, &b, &t());
        assert_eq!(r.primitive_part(), y.sub(&x.pow(2)).primitive_part());
        assert_eq!(r, oracle::sylvester_resultant(&a, &b, &t()));
    }

    #[test]
    fn constant_argument_rule() {
        // Res_t(c, B) = c^{deg B}
        let b = tp().pow(3).sub(&tp()).add(&Poly::one());
        assert_eq!(
            resultant(&Poly::constant_i(5), &b, &t()),
            Poly::constant_i(125)
        );
    }

    #[test]
    fn agrees_with_sylvester_oracle_on_randoms() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let x = Poly::var(&Var::new("x"));
        for _ in 0..60 {
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                let d = rng.gen_range(1..=4);
                let mut p = Poly::zero();
                for k in 0..=d {
                    let c = rng.gen_range(-4i64..=4);
                    let e = rng.gen_range(0..=1u32);
                    p = p.add(&tp().pow(k).mul(&x.pow(e)).scale(&rat_i(c)));
                }
                p
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            if a.degree_in(&t()) == 0 || b.degree_in(&t()) == 0 {
                continue;
            }
            assert_eq!(
                resultant(&a, &b, &t()),
                oracle::sylvester_resultant(&a, &b, &t()),
                "a = {}, b = {}",
                a,
                b
            );
        }
    }
}

#[cfg(test)]
mod interp_tests {
    use super::*;
    use crate::algebra::parse_expression;

    #[test]
    fn interpolation_matches_prs_on_bivariate() {
        let t = Var::new("t");
        let k = Var::new("kappa");
        let ta = Var::new("tau");
        let mk = |s: &str| {
            parse_expression(s, &[t.clone(), k.clone(), ta.clone()])
                .unwrap()
                .num()
                .clone()
        };
        // degrees big enough to trigger the interpolation route
        let a = mk("(t^7+3*t^2+1)*kappa - (t^6-4*t+2)");
        let b = mk("(t^6+t+5)*tau - (t^5+t^3-7)");
        let by_interp = interpolation_route(&a, &b, &t).expect("route taken");
        let by_prs = resultant_prs(&a, &b, &t);
        assert_eq!(by_interp, by_prs);
    }

    #[test]
    fn univar_resultant_matches_examples() {
        use crate::algebra::poly::{rat, rat_i};
        // Res(t^2+1, t-1) = 2
        let a = vec![rat_i(1), rat_i(0), rat_i(1)];
        let b = vec![rat_i(-1), rat_i(1)];
        assert_eq!(univar_resultant(&a, &b), rat_i(2));
        // rational scaling: Res((1/2)t^2+1/2, t-1) = (1/2)^1 * 2 = 1
        let a2 = vec![rat(1, 2), rat_i(0), rat(1, 2)];
        assert_eq!(univar_resultant(&a2, &b), rat_i(1));
    }
}
