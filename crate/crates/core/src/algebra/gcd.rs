//! Polynomial gcd: content/primitive-part recursion on the leading variable
//! with a subresultant PRS for the univariate steps.
//!
//! A cheap evaluation pre-filter certifies coprimality without running the
//! PRS: if the gcd of univariate images (at a point keeping both leading
//! coefficients nonzero) is constant, the gcd of the primitive parts is
//! constant too.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{rat_i, Poly, Rat};
use crate::vars::Var;

/// Canonical-form gcd over ℚ: integer-primitive with positive leading
/// coefficient; gcd(p, 0) = canonical(p); 1 for coprime inputs.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let v = leading_var(a, b);
    let da = a.degree_in(&v);
    let db = b.degree_in(&v);
    if da == 0 {
        let (cb, _) = content_pp_in(b, &v);
        return poly_gcd(a, &cb);
    }
    if db == 0 {
        let (ca, _) = content_pp_in(a, &v);
        return poly_gcd(&ca, b);
    }
    let (ca, ppa) = content_pp_in(a, &v);
    let (cb, ppb) = content_pp_in(b, &v);
    let cg = poly_gcd(&ca, &cb);
    if images_coprime(&ppa, &ppb, &v) == Some(true) {
        return cg;
    }
    let ppg = prs_gcd(&ppa, &ppb, &v);
    cg.mul(&ppg).primitive_part()
}

/// First variable (in the global order) present in either polynomial.
fn leading_var(a: &Poly, b: &Poly) -> Var {
    let mut best: Option<Var> = None;
    for v in a.vars().iter().chain(b.vars().iter()) {
        match &best {
            None => best = Some(v.clone()),
            Some(w) if v < w => best = Some(v.clone()),
            _ => {}
        }
    }
    best.expect("nonconstant polynomial")
}

/// Content (gcd of coefficients) and primitive part with respect to `v`.
pub fn content_pp_in(p: &Poly, v: &Var) -> (Poly, Poly) {
    let coeffs = p.coeffs_in(v);
    let mut c = Poly::zero();
    for co in &coeffs {
        if !co.is_zero() {
            c = poly_gcd(&c, co);
            if c.is_constant() {
                break;
            }
        }
    }
    if c.is_constant() {
        // still factor out the rational content so the pp is primitive
        let rc = p.content();
        return (Poly::constant(rc.clone()), p.scale(&rc.recip()));
    }
    let rc = p.content();
    let c_full = c.scale(&rc);
    let pp = p.div_exact(&c_full).expect("content divides");
    (c_full, pp)
}

/// Evaluation pre-filter: Some(true) certifies that the gcd of the
/// v-primitive inputs is constant. Some(false)/None are inconclusive.
fn images_coprime(a: &Poly, b: &Poly, v: &Var) -> Option<bool> {
    let others: Vec<Var> = a
        .vars()
        .iter()
        .chain(b.vars().iter())
        .filter(|w| *w != v)
        .cloned()
        .collect();
    if others.is_empty() {
        return None; // already univariate; go straight to the PRS
    }
    let la = a.leading_coeff_in(v);
    let lb = b.leading_coeff_in(v);
    'points: for trial in 0..12i64 {
        let assign: Vec<(Var, Rat)> = others
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), rat_i(point_schedule(trial + i as i64))))
            .collect();
        if la.eval(&assign).is_zero() || lb.eval(&assign).is_zero() {
            continue 'points;
        }
        let ia = eval_to_univar(a, v, &assign);
        let ib = eval_to_univar(b, v, &assign);
        let g = univar_gcd_int(&ia, &ib);
        return Some(g.len() == 1);
    }
    None
}

fn point_schedule(i: i64) -> i64 {
    // small deterministic values, avoiding 0
    const P: [i64; 12] = [2, 3, 5, 7, -2, -3, 11, 13, -5, 17, 19, 23];
    P[(i.rem_euclid(12)) as usize]
}

fn eval_to_univar(p: &Poly, v: &Var, assign: &[(Var, Rat)]) -> Vec<BigInt> {
    let coeffs = p.coeffs_in(v);
    let rats: Vec<Rat> = coeffs.iter().map(|c| c.eval(assign)).collect();
    clear_denoms(&rats)
}

fn clear_denoms(rats: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for r in rats {
        lcm = lcm.lcm(r.denom());
    }
    let ints: Vec<BigInt> = rats
        .iter()
        .map(|r| r.numer() * (&lcm / r.denom()))
        .collect();
    primitive_int(ints)
}

fn primitive_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

/// Primitive-PRS gcd of two integer polynomials (dense, ascending).
fn univar_gcd_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut f = primitive_int(a.to_vec());
    let mut g = primitive_int(b.to_vec());
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_empty() {
        let r = int_prem(&f, &g);
        f = g;
        g = primitive_int(r);
    }
    f
}

/// Pseudo-remainder of dense integer polynomials.
fn int_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for i in 0..db {
            r[dr - db + i] = &r[dr - db + i] - &lr * &b[i];
        }
        r[dr] = BigInt::zero();
        while r.last().map(|c| c.is_zero()).unwrap_or(false) {
            r.pop();
        }
    }
    r
}

/// A polynomial viewed densely in one variable, with Poly coefficients.
pub struct VPoly(pub Vec<Poly>);

impl VPoly {
    pub fn new(p: &Poly, v: &Var) -> VPoly {
        let mut c = p.coeffs_in(v);
        while c.last().map(|q| q.is_zero()).unwrap_or(false) {
            c.pop();
        }
        VPoly(c)
    }

    pub fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn lc(&self) -> &Poly {
        self.0.last().expect("nonzero")
    }

    pub fn to_poly(&self, v: &Var) -> Poly {
        Poly::from_coeffs_in(v, &self.0)
    }

    fn scale(&self, k: &Poly) -> VPoly {
        VPoly(self.0.iter().map(|c| c.mul(k)).collect())
    }

    fn div_exact(&self, k: &Poly) -> VPoly {
        VPoly(
            self.0
                .iter()
                .map(|c| c.div_exact(k).expect("exact coefficient division"))
                .collect(),
        )
    }

    fn normalized(mut self) -> VPoly {
        while self.0.last().map(|q| q.is_zero()).unwrap_or(false) {
            self.0.pop();
        }
        self
    }
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) · a  mod  b.
pub fn prem(a: &VPoly, b: &VPoly) -> VPoly {
    assert!(!b.is_zero());
    let db = b.deg();
    let lb = b.lc().clone();
    let mut r = VPoly(a.0.clone());
    let mut e: i64 = a.deg() as i64 - db as i64 + 1;
    while !r.is_zero() && r.deg() >= db {
        let dr = r.deg();
        let lr = r.lc().clone();
        let mut next = r.scale(&lb).0;
        for i in 0..db {
            next[dr - db + i] = next[dr - db + i].sub(&lr.mul(&b.0[i]));
        }
        next[dr] = Poly::zero();
        r = VPoly(next).normalized();
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        r = r.scale(&f);
    }
    r
}

/// Subresultant-PRS gcd of two v-primitive polynomials; returns the fully
/// primitive gcd (constant 1 when coprime).
fn prs_gcd(ppa: &Poly, ppb: &Poly, v: &Var) -> Poly {
    let mut a = VPoly::new(ppa, v);
    let mut b = VPoly::new(ppb, v);
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let delta = a.deg() - b.deg();
        let r = prem(&a, &b);
        if r.is_zero() {
            let gp = b.to_poly(v);
            let (_, pp) = content_pp_in(&gp, v);
            return pp.primitive_part();
        }
        if r.deg() == 0 {
            return Poly::one();
        }
        a = b;
        let divisor = g.mul(&h.pow(delta as u32));
        b = r.div_exact(&divisor);
        g = a.lc().clone();
        if delta > 0 {
            let num = g.pow(delta as u32);
            h = num
                .div_exact(&h.pow(delta as u32 - 1))
                .expect("subresultant h update is exact");
        }
    }
}

/// Product of the distinct irreducible factors, canonical form.
/// Computed as p / gcd(p, ∂p/∂v over every variable jointly); the joint gcd
/// is ∏ fᵉ⁻¹ over the irreducible factorization in characteristic zero.
pub fn squarefree_part(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let p = p.primitive_part();
    let mut g = p.clone();
    for v in p.vars().to_vec() {
        if g.is_constant() {
            break;
        }
        g = poly_gcd(&g, &p.derivative(&v));
    }
    if g.is_constant() {
        return p;
    }
    p.div_exact(&g).expect("gcd divides").primitive_part()
}

/// Yun-style multiplicity split: pairwise products reassemble `p` up to a
/// constant. Factors free of the chosen variable are split recursively on
/// the remaining variables; components may still be reducible.
pub fn multiplicity_split(p: &Poly) -> Vec<(Poly, u32)> {
    let p = p.primitive_part();
    if p.is_constant() {
        return Vec::new();
    }
    let v = p.vars()[0].clone();
    let mut out: Vec<(Poly, u32)> = Vec::new();
    let dp = p.derivative(&v);
    let g = poly_gcd(&p, &dp);
    if g.is_constant() {
        out.push((p, 1));
        return out;
    }
    let mut c = p.div_exact(&g).expect("gcd divides").primitive_part();
    let mut d = dp
        .div_exact(&g)
        .expect("gcd divides")
        .sub(&c.derivative(&v))
        .primitive_part();
    let mut i = 1u32;
    let mut product = Poly::one();
    while !c.is_constant() {
        let a = poly_gcd(&c, &d);
        if !a.is_constant() {
            out.push((a.clone(), i));
            product = product.mul(&a.pow(i));
        }
        c = c.div_exact(&a).expect("gcd divides").primitive_part();
        d = d
            .div_exact(&a)
            .expect("gcd divides")
            .sub(&c.derivative(&v))
            .primitive_part();
        i += 1;
    }
    // leftover free of v (behaved as content for d/dv)
    let leftover = p
        .div_exact(&product)
        .expect("split is exact")
        .primitive_part();
    if !leftover.is_constant() {
        for (f, m) in multiplicity_split(&leftover) {
            out.push((f, m));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::rat_i;

    fn tp() -> Poly {
        Poly::var(&Var::new("t"))
    }

    #[test]
    fn gcd_trivial_cases() {
        // gcd(t^2-1, t^3-1) = t-1
        let a = tp().pow(2).sub(&Poly::one());
        let b = tp().pow(3).sub(&Poly::one());
        assert_eq!(poly_gcd(&a, &b), tp().sub(&Poly::one()));
        // gcd(p, 0) = canonical(p)
        let p = tp().scale(&rat_i(2));
        assert_eq!(poly_gcd(&p, &Poly::zero()), tp());
        assert_eq!(poly_gcd(&Poly::zero(), &p), tp());
    }

    #[test]
    fn gcd_strips_content() {
        // gcd(6t^2+6t, 4t^2-4) = t+1  (hand Euclid)
        let a = tp().pow(2).scale(&rat_i(6)).add(&tp().scale(&rat_i(6)));
        let b = tp().pow(2).scale(&rat_i(4)).sub(&Poly::constant_i(4));
        assert_eq!(poly_gcd(&a, &b), tp().add(&Poly::one()));
    }

    #[test]
    fn gcd_multivariate() {
        let x = Poly::var(&Var::new("x"));
        let g = tp().add(&x.pow(2));
        let a = g.mul(&tp().sub(&x)).mul(&Poly::constant_i(3));
        let b = g.mul(&tp().add(&x)).mul(&g);
        assert_eq!(poly_gcd(&a, &b), g);
    }

    #[test]
    fn gcd_coprime_multivariate() {
        let x = Poly::var(&Var::new("x"));
        let a = tp().pow(3).add(&x);
        let b = tp().add(&x.pow(2)).add(&Poly::one());
        assert_eq!(poly_gcd(&a, &b), Poly::one());
    }

    #[test]
    fn squarefree_strips_powers() {
        let f = tp().sub(&Poly::one());
        let g = tp().add(&Poly::constant_i(2));
        let p = f.pow(3).mul(&g);
        assert_eq!(squarefree_part(&p), f.mul(&g).primitive_part());
    }

    #[test]
    fn multiplicity_split_reassembles() {
        let x = Poly::var(&Var::new("x"));
        let f = tp().sub(&Poly::one());
        let g = tp().add(&x);
        let p = f.pow(2).mul(&g).scale(&rat_i(6));
        let parts = multiplicity_split(&p);
        let mut prod = Poly::one();
        for (q, m) in &parts {
            prod = prod.mul(&q.pow(*m));
        }
        assert_eq!(prod.primitive_part(), p.primitive_part());
        assert_eq!(parts.len(), 2);
    }
}

#[cfg(test)]
mod sf_tests {
    use super::*;
    use crate::vars::Var;

    #[test]
    fn squarefree_keeps_coprime_cross_factors() {
        let a = Poly::var(&Var::new("c1"));
        let b = Poly::var(&Var::new("c2"));
        let p = a.mul(&b);
        assert_eq!(squarefree_part(&p), p);
        let q = a.pow(2).mul(&b);
        assert_eq!(squarefree_part(&q), p);
    }
}
