//! Implicitization of rational plane maps via resultants, with
//! extraneous-factor pruning.
//!
//! The resultant Res_t(den_x·X − num_x, den_y·Y − num_y) vanishes on the
//! image but may pick up extraneous factors. Squarefree multiplicity
//! components that fail to vanish at enough sampled image points are divided
//! out; a gcd across reparameterized copies of the map removes further junk.
//! The result is verified symbolically by back-substitution. Downstream code
//! never relies on irreducibility.

use num_traits::Zero;

use crate::algebra::gcd::{multiplicity_split, poly_gcd, squarefree_part};
use crate::algebra::poly::{Poly, Rat};
use crate::algebra::ratfunc::RatFunc;
use crate::schedule::Schedule;
use crate::vars::Var;

use super::resultant::resultant;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum ElimError {
    #[error("both components are constant; the image is a point")]
    ImageIsPoint,
    #[error("implicitization failed: {0}")]
    Failed(String),
}

/// A squarefree primitive polynomial vanishing exactly on the closure of the
/// image of a rational map, plus the image samples used for pruning.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicitCurve {
    pub poly: Poly,
    pub out_vars: (Var, Var),
    pub pruning_certificate: Vec<(Rat, Rat)>,
}

impl ImplicitCurve {
    /// Exact membership test for a rational point.
    pub fn contains(&self, x: &Rat, y: &Rat) -> bool {
        self.poly
            .eval(&[(self.out_vars.0.clone(), x.clone()), (self.out_vars.1.clone(), y.clone())])
            .is_zero()
    }
}

/// Implicitize the map t ↦ (x(t), y(t)).
pub fn implicitize(
    x: &RatFunc,
    y: &RatFunc,
    param: &Var,
    out_vars: (&Var, &Var),
    schedule: &Schedule,
) -> Result<ImplicitCurve, ElimError> {
    let (ov_x, ov_y) = out_vars;
    let xc = x.is_constant_in(param);
    let yc = y.is_constant_in(param);
    if xc && yc {
        return Err(ElimError::ImageIsPoint);
    }
    if xc {
        // image is the vertical line X = x
        let line = Poly::var(ov_x)
            .mul(x.den())
            .sub(x.num())
            .primitive_part();
        return finish(line, x, y, param, (ov_x, ov_y), schedule);
    }
    if yc {
        let line = Poly::var(ov_y)
            .mul(y.den())
            .sub(y.num())
            .primitive_part();
        return finish(line, x, y, param, (ov_x, ov_y), schedule);
    }

    let first = pruned_resultant(x, y, param, (ov_x, ov_y), schedule)?;
    // gcd against a shifted copy of the map trims extraneous factors that do
    // not follow the parameterization
    let mut best = first;
    for shift in 1..=2i64 {
        if best.total_degree() <= 1 {
            break;
        }
        let phi = RatFunc::var(param).add(&RatFunc::from_int(shift));
        let xs = x.substitute(&[(param.clone(), phi.clone())]).map_err(bad)?;
        let ys = y.substitute(&[(param.clone(), phi)]).map_err(bad)?;
        let other = pruned_resultant(&xs, &ys, param, (ov_x, ov_y), schedule)?;
        let g = poly_gcd(&best, &other);
        if !g.is_constant() && g.total_degree() < best.total_degree() {
            best = g;
        }
    }
    finish(best, x, y, param, (ov_x, ov_y), schedule)
}

fn bad(e: crate::algebra::AlgebraError) -> ElimError {
    ElimError::Failed(e.to_string())
}

fn pruned_resultant(
    x: &RatFunc,
    y: &RatFunc,
    param: &Var,
    out_vars: (&Var, &Var),
    schedule: &Schedule,
) -> Result<Poly, ElimError> {
    let fx = Poly::var(out_vars.0).mul(x.den()).sub(x.num());
    let fy = Poly::var(out_vars.1).mul(y.den()).sub(y.num());
    let res = resultant(&fx, &fy, param);
    if res.is_zero() {
        return Err(ElimError::Failed(
            "resultant vanished identically".to_string(),
        ));
    }
    let sf = squarefree_part(&res);
    let mut kept = Poly::one();
    for (component, _) in multiplicity_split(&sf) {
        if vanishes_on_image(&component, x, y, param, out_vars, schedule) {
            kept = kept.mul(&component);
        }
    }
    if kept.is_constant() {
        return Err(ElimError::Failed(
            "no resultant factor follows the parameterization".to_string(),
        ));
    }
    Ok(kept.primitive_part())
}

/// Sampled vanishing with the Schwartz–Zippel-style exact count: a nonzero
/// composition numerator has degree at most D, so vanishing at D+1 distinct
/// non-pole parameter values forces identical vanishing.
pub fn vanishes_on_image(
    f: &Poly,
    x: &RatFunc,
    y: &RatFunc,
    param: &Var,
    out_vars: (&Var, &Var),
    schedule: &Schedule,
) -> bool {
    let dx = x.num().degree_in(param).max(x.den().degree_in(param));
    let dy = y.num().degree_in(param).max(y.den().degree_in(param));
    let bound =
        f.degree_in(out_vars.0) * dx + f.degree_in(out_vars.1) * dy;
    let needed = bound as usize + 1;
    let mut got = 0usize;
    let mut budget = needed * 3 + 16;
    for v in schedule.values(budget) {
        if got >= needed {
            break;
        }
        budget -= 1;
        let (Some(xv), Some(yv)) = (
            x.eval(&[(param.clone(), v.clone())]),
            y.eval(&[(param.clone(), v.clone())]),
        ) else {
            continue;
        };
        let val = f.eval(&[
            (out_vars.0.clone(), xv),
            (out_vars.1.clone(), yv),
        ]);
        if !val.is_zero() {
            return false;
        }
        got += 1;
    }
    got >= needed
}

fn finish(
    candidate: Poly,
    x: &RatFunc,
    y: &RatFunc,
    param: &Var,
    out_vars: (&Var, &Var),
    schedule: &Schedule,
) -> Result<ImplicitCurve, ElimError> {
    let poly = squarefree_part(&candidate);
    // symbolic back-substitution: the exact post-condition
    let composed = poly_compose(&poly, x, y, out_vars);
    if !composed.is_zero() {
        return Err(ElimError::Failed(
            "implicit candidate does not vanish on the parameterization".to_string(),
        ));
    }
    let mut cert = Vec::new();
    for v in schedule.values(24) {
        if cert.len() >= 8 {
            break;
        }
        if let (Some(xv), Some(yv)) = (
            x.eval(&[(param.clone(), v.clone())]),
            y.eval(&[(param.clone(), v)]),
        ) {
            cert.push((xv, yv));
        }
    }
    Ok(ImplicitCurve {
        poly,
        out_vars: (out_vars.0.clone(), out_vars.1.clone()),
        pruning_certificate: cert,
    })
}

/// F(x(t), y(t)) as a reduced rational function.
pub fn poly_compose(f: &Poly, x: &RatFunc, y: &RatFunc, out_vars: (&Var, &Var)) -> RatFunc {
    let mut acc = RatFunc::zero();
    for cs in f.coeffs_in(out_vars.0).iter().enumerate() {
        let (i, c) = cs;
        let mut inner = RatFunc::zero();
        for (j, cc) in c.coeffs_in(out_vars.1).iter().enumerate() {
            if cc.is_zero() {
                continue;
            }
            inner = inner.add(
                &RatFunc::from_poly(cc.clone()).mul(&y.pow(j as i32).expect("nonneg power")),
            );
        }
        if inner.is_zero() {
            continue;
        }
        acc = acc.add(&inner.mul(&x.pow(i as i32).expect("nonneg power")));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_expression;

    fn t() -> Var {
        Var::new("t")
    }

    fn xy() -> (Var, Var) {
        (Var::new("x"), Var::new("y"))
    }

    fn imp(xs: &str, ys: &str) -> ImplicitCurve {
        let x = parse_expression(xs, &[t()]).unwrap();
        let y = parse_expression(ys, &[t()]).unwrap();
        let (vx, vy) = xy();
        implicitize(&x, &y, &t(), (&vx, &vy), &Schedule::Primes).unwrap()
    }

    #[test]
    fn parabola() {
        let c = imp("t", "t^2");
        let (vx, vy) = xy();
        let expect = Poly::var(&vy).sub(&Poly::var(&vx).pow(2)).primitive_part();
        assert_eq!(c.poly, expect);
    }

    #[test]
    fn circle_chart() {
        // ((1-t^2)/(1+t^2), 2t/(1+t^2)) lies on x^2 + y^2 - 1
        let c = imp("(1-t^2)/(1+t^2)", "2*t/(1+t^2)");
        let (vx, vy) = xy();
        let expect = Poly::var(&vx)
            .pow(2)
            .add(&Poly::var(&vy).pow(2))
            .sub(&Poly::one())
            .primitive_part();
        assert_eq!(c.poly, expect);
    }

    #[test]
    fn cubic_x1() {
        // X1: x^3 + y^3 - 10 x y = 0
        let c = imp("10*t/(t^3+1)", "10*t^2/(t^3+1)");
        let (vx, vy) = xy();
        let expect = Poly::var(&vx)
            .pow(3)
            .add(&Poly::var(&vy).pow(3))
            .sub(&Poly::var(&vx).mul(&Poly::var(&vy)).scale(&crate::algebra::rat_i(10)))
            .primitive_part();
        assert_eq!(c.poly, expect);
    }

    #[test]
    fn point_image_rejected() {
        let x = parse_expression("3", &[t()]).unwrap();
        let y = parse_expression("5", &[t()]).unwrap();
        let (vx, vy) = xy();
        assert_eq!(
            implicitize(&x, &y, &t(), (&vx, &vy), &Schedule::Primes),
            Err(ElimError::ImageIsPoint)
        );
    }

    #[test]
    fn vertical_line() {
        let c = imp("2", "t^3");
        let (vx, _) = xy();
        assert_eq!(c.poly, Poly::var(&vx).sub(&Poly::constant_i(2)));
    }

    #[test]
    fn back_substitution_holds() {
        let x = parse_expression("(t^2-3)/(t^4+1)", &[t()]).unwrap();
        let y = parse_expression("(t^3+t)/(t^4+1)", &[t()]).unwrap();
        let (vx, vy) = xy();
        let c = implicitize(&x, &y, &t(), (&vx, &vy), &Schedule::Primes).unwrap();
        assert!(poly_compose(&c.poly, &x, &y, (&vx, &vy)).is_zero());
    }
}
