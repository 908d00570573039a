//! Reduced rational functions: quotients of polynomials with a canonical
//! denominator (integer-primitive, positive leading coefficient) and no
//! common factor. Two equal functions always compare structurally equal.

use std::fmt;

use num_traits::Zero;

use super::gcd::poly_gcd;
use super::poly::{Poly, Rat};
use super::AlgebraError;
use crate::vars::{merge_vars, Var};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let (mut num, mut den) = (num, den);
        let g = poly_gcd(&num, &den);
        if !g.is_constant() {
            num = num.div_exact(&g).expect("gcd divides");
            den = den.div_exact(&g).expect("gcd divides");
        }
        let c = den.content();
        den = den.scale(&c.recip());
        num = num.scale(&c.recip());
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_rat(r: Rat) -> RatFunc {
        Self::from_poly(Poly::constant(r))
    }

    pub fn from_int(n: i64) -> RatFunc {
        Self::from_poly(Poly::constant_i(n))
    }

    pub fn var(v: &Var) -> RatFunc {
        Self::from_poly(Poly::var(v))
    }

    pub fn zero() -> RatFunc {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> RatFunc {
        Self::from_poly(Poly::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    /// Constant as a function of `v` (may still involve other symbols).
    pub fn is_constant_in(&self, v: &Var) -> bool {
        !self.num.contains_var(v) && !self.den.contains_var(v)
    }

    pub fn vars(&self) -> Vec<Var> {
        merge_vars(self.num.vars(), self.den.vars())
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        Self::reduced(
            self.num
                .mul(&other.den)
                .add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        Self::reduced(
            self.num
                .mul(&other.den)
                .sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        // cross-reduce first to keep the big multiplication small
        let a = Self::reduced(self.num.clone(), other.den.clone());
        let b = Self::reduced(other.num.clone(), self.den.clone());
        RatFunc {
            num: a.num.mul(&b.num),
            den: a.den.mul(&b.den),
        }
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, AlgebraError> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.mul(&RatFunc::reduced(other.den.clone(), other.num.clone())))
    }

    pub fn pow(&self, n: i32) -> Result<RatFunc, AlgebraError> {
        if n < 0 {
            return RatFunc::one().div(&self.pow(-n)?);
        }
        Ok(RatFunc {
            num: self.num.pow(n as u32),
            den: self.den.pow(n as u32),
        })
    }

    pub fn scale(&self, k: &Rat) -> RatFunc {
        Self::reduced(self.num.scale(k), self.den.clone())
    }

    /// Quotient-rule derivative, reduced.
    pub fn derivative(&self, v: &Var) -> RatFunc {
        let n = self.num.derivative(v).mul(&self.den).sub(&self.num.mul(&self.den.derivative(v)));
        Self::reduced(n, self.den.mul(&self.den))
    }

    /// Simultaneous substitution of rational functions for variables;
    /// unbound variables are unchanged.
    pub fn substitute(&self, bindings: &[(Var, RatFunc)]) -> Result<RatFunc, AlgebraError> {
        let n = poly_subst(&self.num, bindings);
        let d = poly_subst(&self.den, bindings);
        if d.is_zero() {
            return Err(AlgebraError::SubstitutionZeroDenominator);
        }
        n.div(&d)
    }

    /// Exact evaluation; `None` at a pole of the reduced form.
    pub fn eval(&self, values: &[(Var, Rat)]) -> Option<Rat> {
        let d = self.den.eval(values);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(values) / d)
    }
}

/// Evaluate a polynomial at rational-function arguments (Horner per var).
fn poly_subst(p: &Poly, bindings: &[(Var, RatFunc)]) -> RatFunc {
    let bound: Vec<&(Var, RatFunc)> = bindings.iter().filter(|(v, _)| p.contains_var(v)).collect();
    if bound.is_empty() {
        return RatFunc::from_poly(p.clone());
    }
    let (v, r) = bound[0];
    let coeffs = p.coeffs_in(v);
    let mut acc = RatFunc::zero();
    for c in coeffs.into_iter().rev() {
        acc = acc.mul(r).add(&poly_subst(&c, bindings));
    }
    acc
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().map(|c| c == Rat::from_integer(1.into())).unwrap_or(false) {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl std::ops::Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        RatFunc::add(&self, &rhs)
    }
}
