//! Signature maps and signature descriptors: a constant point when both
//! classifying invariants are constant, otherwise the parameterized map
//! together with its implicit bivariate polynomial in (κ, τ).

use crate::algebra::poly::Rat;
use crate::algebra::ratfunc::RatFunc;
use crate::elimination::implicitize::{implicitize, vanishes_on_image, ImplicitCurve};
use crate::invariants::{invariants_for, Group, InvariantError, ParamCurve2};
use crate::schedule::Schedule;
use crate::vars::Var;

pub fn kappa_var() -> Var {
    Var::new("kappa")
}

pub fn tau_var() -> Var {
    Var::new("tau")
}

#[derive(Clone, Debug)]
pub enum SignatureKind {
    Constant { kappa0: Rat, tau0: Rat },
    Curve { k: RatFunc, t: RatFunc, implicit: ImplicitCurve },
}

#[derive(Clone, Debug)]
pub struct Signature {
    pub group: Group,
    pub param: Var,
    pub kind: SignatureKind,
}

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum SignatureError {
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("signatures carry different group tags")]
    MixedGroups,
    #[error("signature implicitization failed: {0}")]
    Implicitization(String),
}

/// The signature of a non-exceptional curve for the given group.
pub fn signature_of(
    curve: &ParamCurve2,
    group: Group,
    schedule: &Schedule,
) -> Result<Signature, SignatureError> {
    let inv = invariants_for(curve, group)?;
    let param = curve.param.clone();
    if let (Some(k0), Some(t0)) = (inv.k.as_constant(), inv.t.as_constant()) {
        return Ok(Signature {
            group,
            param,
            kind: SignatureKind::Constant {
                kappa0: k0,
                tau0: t0,
            },
        });
    }
    let (vk, vt) = (kappa_var(), tau_var());
    let implicit = implicitize(&inv.k, &inv.t, &param, (&vk, &vt), schedule)
        .map_err(|e| SignatureError::Implicitization(e.to_string()))?;
    Ok(Signature {
        group,
        param,
        kind: SignatureKind::Curve {
            k: inv.k,
            t: inv.t,
            implicit,
        },
    })
}

/// Signature equality over ℂ.
///
/// Constant signatures compare by κ (the K-constancy value alone decides the
/// constant case); in the curve case, each parameterized signature map must
/// satisfy the other's implicit polynomial, tested at enough samples to be
/// exact.
pub fn signatures_equal_complex(a: &Signature, b: &Signature) -> Result<bool, SignatureError> {
    if a.group != b.group {
        return Err(SignatureError::MixedGroups);
    }
    match (&a.kind, &b.kind) {
        (
            SignatureKind::Constant { kappa0: ka, .. },
            SignatureKind::Constant { kappa0: kb, .. },
        ) => Ok(ka == kb),
        (SignatureKind::Curve { .. }, SignatureKind::Constant { .. })
        | (SignatureKind::Constant { .. }, SignatureKind::Curve { .. }) => Ok(false),
        (
            SignatureKind::Curve {
                k: ka,
                t: ta,
                implicit: ia,
            },
            SignatureKind::Curve {
                k: kb,
                t: tb,
                implicit: ib,
            },
        ) => {
            let (vk, vt) = (kappa_var(), tau_var());
            let sched = Schedule::Primes;
            let ab = vanishes_on_image(&ib.poly, ka, ta, &a.param, (&vk, &vt), &sched);
            if !ab {
                return Ok(false);
            }
            let ba = vanishes_on_image(&ia.poly, kb, tb, &b.param, (&vk, &vt), &sched);
            Ok(ba)
        }
    }
}

impl Signature {
    pub fn is_constant(&self) -> bool {
        matches!(self.kind, SignatureKind::Constant { .. })
    }

    pub fn implicit_poly(&self) -> Option<&crate::algebra::poly::Poly> {
        match &self.kind {
            SignatureKind::Curve { implicit, .. } => Some(&implicit.poly),
            SignatureKind::Constant { .. } => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_expression, rat};

    fn t() -> Var {
        Var::new("t")
    }

    fn curve(xs: &str, ys: &str) -> ParamCurve2 {
        let x = parse_expression(xs, &[t()]).unwrap();
        let y = parse_expression(ys, &[t()]).unwrap();
        ParamCurve2::new(x, y, t()).unwrap()
    }

    fn x1() -> ParamCurve2 {
        curve("10*t/(t^3+1)", "10*t^2/(t^3+1)")
    }

    fn x2() -> ParamCurve2 {
        curve("(t^3+3*t^2+3*t+2)/(t+1)", "t+1")
    }

    fn x3() -> ParamCurve2 {
        curve("t^3/(t+1)", "t^2/(t+1)")
    }

    fn paper_quartic() -> crate::algebra::poly::Poly {
        let kv = kappa_var();
        let tv = tau_var();
        parse_expression(
            "4410000*tau^4 + 259308000*tau^3 + 53760000*kappa*tau^2 + 5250987000*tau^2 \
             - 2032128000*kappa*tau + 163840000*kappa^2 + 39697461720*tau \
             - 6401203200*kappa + 62523502209",
            &[kv, tv],
        )
        .unwrap()
        .num()
        .clone()
    }

    #[test]
    fn x3_signature_is_a_point() {
        let s = signature_of(&x3(), Group::Projective, &Schedule::Primes).unwrap();
        match s.kind {
            SignatureKind::Constant { kappa0, tau0 } => {
                assert_eq!(kappa0, rat(250047, 12800));
                assert_eq!(tau0, rat(0, 1));
            }
            _ => panic!("expected constant signature"),
        }
    }

    #[test]
    fn x1_signature_implicit_is_paper_quartic() {
        let s = signature_of(&x1(), Group::Projective, &Schedule::Primes).unwrap();
        let p = s.implicit_poly().expect("curve signature");
        assert_eq!(p, &paper_quartic().primitive_part());
    }

    #[test]
    fn parabola_signature_is_exceptional() {
        let err = signature_of(&curve("t", "t^2"), Group::Affine, &Schedule::Primes).unwrap_err();
        assert!(matches!(err, SignatureError::Invariant(_)));
    }

    #[test]
    fn x1_x2_signatures_equal_over_c() {
        let s1 = signature_of(&x1(), Group::Projective, &Schedule::Primes).unwrap();
        let s2 = signature_of(&x2(), Group::Projective, &Schedule::Primes).unwrap();
        assert!(signatures_equal_complex(&s1, &s2).unwrap());
        // reflexivity and symmetry
        assert!(signatures_equal_complex(&s1, &s1).unwrap());
        assert!(signatures_equal_complex(&s2, &s1).unwrap());
    }

    #[test]
    fn x1_x3_signatures_differ() {
        let s1 = signature_of(&x1(), Group::Projective, &Schedule::Primes).unwrap();
        let s3 = signature_of(&x3(), Group::Projective, &Schedule::Primes).unwrap();
        assert!(!signatures_equal_complex(&s1, &s3).unwrap());
    }

    #[test]
    fn curve_signature_back_substitutes() {
        let s = signature_of(&x1(), Group::Projective, &Schedule::Primes).unwrap();
        let SignatureKind::Curve { k, t: tt, implicit } = &s.kind else {
            panic!()
        };
        let composed = crate::elimination::implicitize::poly_compose(
            &implicit.poly,
            k,
            tt,
            (&kappa_var(), &tau_var()),
        );
        assert!(composed.is_zero());
    }

    #[test]
    fn mixed_groups_rejected() {
        let sa = signature_of(&x1(), Group::Affine, &Schedule::Primes).unwrap();
        let sp = signature_of(&x1(), Group::Projective, &Schedule::Primes).unwrap();
        assert_eq!(
            signatures_equal_complex(&sa, &sp).unwrap_err(),
            SignatureError::MixedGroups
        );
    }
}
