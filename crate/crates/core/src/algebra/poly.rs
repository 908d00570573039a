//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a map ordered by graded-lexicographic monomial order
//! over the global variable order (see [`crate::vars`]). Arithmetic is
//! value-exact; the *canonical form* (integer-primitive, positive leading
//! coefficient) is a separate normalization used wherever results are only
//! meaningful up to a constant multiple (gcds, implicit equations).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::vars::{merge_vars, Var};

pub type Rat = BigRational;

pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent vector aligned to a polynomial's variable list, ordered grlex.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// A sparse multivariate polynomial over ℚ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    vars: Vec<Var>,
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(Vec::new()), c);
        }
        Poly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn constant_i(c: i64) -> Poly {
        Poly::constant(rat_i(c))
    }

    pub fn var(v: &Var) -> Poly {
        let mut terms = BTreeMap::new();
        terms.insert(Mono(vec![1]), Rat::one());
        Poly {
            vars: vec![v.clone()],
            terms,
        }
    }

    pub fn from_terms(vars: Vec<Var>, terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Poly {
        let mut map: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars.len());
            if c.is_zero() {
                continue;
            }
            let m = Mono(exps);
            let entry = map.entry(m).or_insert_with(Rat::zero);
            *entry += c;
            // removal of cancelled entries happens below
        }
        map.retain(|_, c| !c.is_zero());
        Poly { vars, terms: map }.trimmed()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().degree() == 0)
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().next_back().map(|m| m.degree()).unwrap_or(0)
    }

    /// Drop variables that no longer occur and keep the global order.
    fn trimmed(self) -> Poly {
        if self.vars.is_empty() {
            return self;
        }
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect();
        if used.iter().all(|u| *u) {
            return self;
        }
        let vars: Vec<Var> = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, u)| **u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = self
            .terms
            .into_iter()
            .map(|(m, c)| {
                let exps = m
                    .0
                    .into_iter()
                    .zip(&used)
                    .filter(|(_, u)| **u)
                    .map(|(e, _)| e)
                    .collect();
                (Mono(exps), c)
            })
            .collect();
        Poly { vars, terms }
    }

    /// Re-express this polynomial over a superset variable list.
    pub fn aligned(&self, vars: &[Var]) -> Poly {
        if self.vars == vars {
            return self.clone();
        }
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("alignment superset"))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; vars.len()];
                for (k, e) in m.0.iter().enumerate() {
                    exps[idx[k]] = *e;
                }
                (Mono(exps), c.clone())
            })
            .collect();
        Poly {
            vars: vars.to_vec(),
            terms,
        }
    }

    fn binop(&self, other: &Poly, sub: bool) -> Poly {
        let vars = merge_vars(&self.vars, &other.vars);
        let a = self.aligned(&vars);
        let mut b = other.aligned(&vars);
        let mut terms = a.terms;
        for (m, c) in std::mem::take(&mut b.terms) {
            let c = if sub { -c } else { c };
            match terms.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        Poly { vars, terms }.trimmed()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.binop(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.binop(other, true)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &Rat) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let vars = merge_vars(&self.vars, &other.vars);
        let a = self.aligned(&vars);
        let b = other.aligned(&vars);
        let (small, big) = if a.terms.len() <= b.terms.len() { (a, b) } else { (b, a) };
        let mut terms: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match terms.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
        }
        Poly { vars, terms }.trimmed()
    }

    /// Integer power, multiplying by the base repeatedly; for the sizes in
    /// this crate that beats binary powering because the accumulator stays
    /// paired with a small factor.
    pub fn pow(&self, n: u32) -> Poly {
        match n {
            0 => Poly::one(),
            1 => self.clone(),
            _ => {
                let mut acc = self.clone();
                for _ in 1..n {
                    acc = acc.mul(self);
                }
                acc
            }
        }
    }

    pub fn derivative(&self, v: &Var) -> Poly {
        let Some(i) = self.vars.iter().position(|w| w == v) else {
            return Poly::zero();
        };
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[i] > 0)
            .map(|(m, c)| {
                let mut exps = m.0.clone();
                let e = exps[i];
                exps[i] = e - 1;
                (Mono(exps), c * Rat::from_integer(BigInt::from(e)))
            })
            .collect();
        Poly {
            vars: self.vars.clone(),
            terms,
        }
        .trimmed()
    }

    pub fn degree_in(&self, v: &Var) -> u32 {
        let Some(i) = self.vars.iter().position(|w| w == v) else {
            return 0;
        };
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: &Var) -> bool {
        self.degree_in(v) > 0
    }

    /// Coefficients of powers of `v`: index k holds the coefficient of v^k
    /// as a polynomial in the remaining variables.
    pub fn coeffs_in(&self, v: &Var) -> Vec<Poly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![Poly::zero(); d + 1];
        let Some(i) = self.vars.iter().position(|w| w == v) else {
            out[0] = self.clone();
            return out;
        };
        let rest: Vec<Var> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, w)| w.clone())
            .collect();
        let mut maps: Vec<BTreeMap<Mono, Rat>> = vec![BTreeMap::new(); d + 1];
        for (m, c) in &self.terms {
            let k = m.0[i] as usize;
            let exps: Vec<u32> = m
                .0
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, e)| *e)
                .collect();
            maps[k].insert(Mono(exps), c.clone());
        }
        for (k, map) in maps.into_iter().enumerate() {
            out[k] = Poly {
                vars: rest.clone(),
                terms: map,
            }
            .trimmed();
        }
        out
    }

    /// Leading coefficient with respect to `v` (a polynomial in the rest).
    pub fn leading_coeff_in(&self, v: &Var) -> Poly {
        let mut cs = self.coeffs_in(v);
        cs.pop().unwrap_or_else(Poly::zero)
    }

    /// Build Σ coeffs[k]·v^k back from `coeffs_in` output.
    pub fn from_coeffs_in(v: &Var, coeffs: &[Poly]) -> Poly {
        let vp = Poly::var(v);
        let mut acc = Poly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&c.mul(&vp.pow(k as u32)));
            }
        }
        acc
    }

    /// Substitute an exact rational for one variable.
    pub fn eval_var(&self, v: &Var, value: &Rat) -> Poly {
        let coeffs = self.coeffs_in(v);
        let mut acc = Poly::zero();
        let mut p = Rat::one();
        for c in coeffs {
            if !c.is_zero() {
                acc = acc.add(&c.scale(&p));
            }
            p *= value;
        }
        acc
    }

    /// Substitute polynomials for variables (simultaneous, Horner per var).
    pub fn subst(&self, bindings: &[(Var, Poly)]) -> Poly {
        let relevant: Vec<&(Var, Poly)> = bindings
            .iter()
            .filter(|(v, _)| self.contains_var(v))
            .collect();
        if relevant.is_empty() {
            return self.clone();
        }
        let (v, replacement) = relevant[0];
        let coeffs = self.coeffs_in(v);
        // Horner evaluation: substitute the remaining bindings in each
        // coefficient before recombining, so bindings are simultaneous.
        let mut acc = Poly::zero();
        for c in coeffs.into_iter().rev() {
            acc = acc.mul(replacement).add(&c.subst(bindings));
        }
        acc
    }

    /// Evaluate fully to a rational; every variable must be bound.
    pub fn eval(&self, values: &[(Var, Rat)]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, e) in m.0.iter().enumerate() {
                if *e > 0 {
                    let v = values
                        .iter()
                        .find(|(w, _)| *w == self.vars[i])
                        .map(|(_, r)| r.clone())
                        .unwrap_or_else(|| panic!("unbound variable {}", self.vars[i]));
                    let mut p = Rat::one();
                    for _ in 0..*e {
                        p *= &v;
                    }
                    term *= p;
                }
            }
            acc += term;
        }
        acc
    }

    pub fn leading_term(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Rational content: the value γ with `self = γ · primitive_part()`.
    /// Zero polynomial has content 0.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_integer::Integer::gcd(&num_gcd, c.numer());
            den_lcm = num_integer::Integer::lcm(&den_lcm, c.denom());
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        if self.leading_term().unwrap().1.is_negative() {
            content = -content;
        }
        content
    }

    /// Canonical form: integer-primitive coefficients, positive leading
    /// coefficient. The zero polynomial is its own canonical form.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let vars = merge_vars(&self.vars, &divisor.vars);
        let mut rem = self.aligned(&vars);
        let d = divisor.aligned(&vars);
        let (dm, dc) = {
            let (m, c) = d.leading_term()?;
            (m.clone(), c.clone())
        };
        let mut q: BTreeMap<Mono, Rat> = BTreeMap::new();
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading_term().unwrap();
                (m.clone(), c.clone())
            };
            if !dm.divides(&rm) {
                return None;
            }
            let qm = rm.div(&dm);
            let qc = rc / &dc;
            // rem -= (qc * qm) * d
            let mut piece = BTreeMap::new();
            piece.insert(qm.clone(), qc.clone());
            let pp = Poly {
                vars: vars.clone(),
                terms: piece,
            };
            rem = rem.sub(&pp.mul(&d)).aligned(&vars);
            q.insert(qm, qc);
        }
        Some(
            Poly {
                vars,
                terms: q,
            }
            .trimmed(),
        )
    }

    /// Map each coefficient as given (used by tests and display helpers).
    pub fn map_coeffs(&self, f: impl Fn(&Rat) -> Rat) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Poly {
            vars: self.vars.clone(),
            terms,
        }
        .trimmed()
    }

    /// Dense coefficient vector for a univariate polynomial in `v`.
    pub fn univar_coeffs(&self, v: &Var) -> Vec<Rat> {
        assert!(
            self.vars.iter().all(|w| w == v),
            "polynomial is not univariate in {}",
            v
        );
        let d = self.degree_in(v) as usize;
        let mut out = vec![Rat::zero(); d + 1];
        for (m, c) in &self.terms {
            let k = if m.0.is_empty() { 0 } else { m.0[0] as usize };
            out[k] = c.clone();
        }
        out
    }
}

fn fmt_coeff(c: &Rat) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || m.degree() == 0 {
                parts.push(fmt_coeff(&mag));
            }
            for (i, e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(self.vars[i].to_string()),
                    _ => parts.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> Var {
        Var::new(n)
    }

    fn tp() -> Poly {
        Poly::var(&v("t"))
    }

    #[test]
    fn mul_parabola_identity() {
        // (t+1)(t-1) = t^2 - 1
        let a = tp().add(&Poly::one());
        let b = tp().sub(&Poly::one());
        let p = a.mul(&b);
        assert_eq!(p, tp().pow(2).sub(&Poly::one()));
    }

    #[test]
    fn add_zero_is_identity() {
        let p = tp().pow(3).add(&Poly::constant(rat(1, 2)));
        assert_eq!(p.add(&Poly::zero()), p);
    }

    #[test]
    fn sub_cancels_cubes() {
        // (t^3+1) - (t^3-1) = 2
        let a = tp().pow(3).add(&Poly::one());
        let b = tp().pow(3).sub(&Poly::one());
        assert_eq!(a.sub(&b), Poly::constant_i(2));
    }

    #[test]
    fn content_and_primitive() {
        // -4t^2 + 6 has content -2, primitive 2t^2 - 3
        let p = tp().pow(2).scale(&rat_i(-4)).add(&Poly::constant_i(6));
        assert_eq!(p.content(), rat_i(-2));
        let prim = p.primitive_part();
        assert_eq!(prim, tp().pow(2).scale(&rat_i(2)).sub(&Poly::constant_i(3)));
        // idempotence
        assert_eq!(prim.primitive_part(), prim);
    }

    #[test]
    fn div_exact_roundtrip() {
        let a = tp().add(&Poly::one());
        let b = tp().pow(2).add(&Poly::constant_i(3));
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert_eq!(p.div_exact(&tp().add(&Poly::constant_i(2))), None);
    }

    #[test]
    fn coeffs_in_reassembles() {
        let x = Poly::var(&v("x"));
        let p = tp().pow(2).mul(&x).add(&x.pow(3)).add(&tp()).add(&Poly::one());
        let cs = p.coeffs_in(&v("t"));
        assert_eq!(Poly::from_coeffs_in(&v("t"), &cs), p);
    }

    #[test]
    fn grlex_leading_term() {
        // x^2 y + x y^2: same degree; x^2 y leads because x ranks before y
        let x = Poly::var(&v("x"));
        let y = Poly::var(&v("y"));
        let p = x.pow(2).mul(&y).add(&x.mul(&y.pow(2)));
        let (m, _) = p.leading_term().unwrap();
        assert_eq!(m.0, vec![2, 1]);
    }

    #[test]
    fn subst_simultaneous() {
        // p(x,y) = x y, bind x->y, y->x simultaneously: still x y
        let x = Poly::var(&v("x"));
        let y = Poly::var(&v("y"));
        let p = x.mul(&y);
        let q = p.subst(&[(v("x"), y.clone()), (v("y"), x.clone())]);
        assert_eq!(q, p);
    }

    #[test]
    fn display_reduced_fractions() {
        let p = tp().pow(2).scale(&rat(3, 2)).sub(&tp());
        assert_eq!(p.to_string(), "3/2*t^2 - t");
    }
}
