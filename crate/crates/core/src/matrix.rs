//! Exact rational matrices: plane transforms (3×3 classes up to scale),
//! cameras (3×4 classes), and the small linear solves behind transform
//! estimation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::poly::Rat;
use crate::algebra::ratfunc::RatFunc;
use crate::invariants::{ParamCurve2, ParamCurve3};

pub type RatMat = Vec<Vec<Rat>>;

pub fn mat_mul(a: &RatMat, b: &RatMat) -> RatMat {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        for j in 0..m {
            let mut acc = Rat::zero();
            for l in 0..k {
                acc += &a[i][l] * &b[l][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn det3(m: &RatMat) -> Rat {
    let d = |a: &Rat, b: &Rat, c: &Rat, e: &Rat| a * e - b * c;
    &m[0][0] * d(&m[1][1], &m[1][2], &m[2][1], &m[2][2])
        - &m[0][1] * d(&m[1][0], &m[1][2], &m[2][0], &m[2][2])
        + &m[0][2] * d(&m[1][0], &m[1][1], &m[2][0], &m[2][1])
}

pub fn inverse3(m: &RatMat) -> Option<RatMat> {
    let det = det3(m);
    if det.is_zero() {
        return None;
    }
    let c = |i: usize, j: usize| {
        let r: Vec<usize> = (0..3).filter(|k| *k != i).collect();
        let s: Vec<usize> = (0..3).filter(|k| *k != j).collect();
        let minor = &m[r[0]][s[0]] * &m[r[1]][s[1]] - &m[r[0]][s[1]] * &m[r[1]][s[0]];
        if (i + j) % 2 == 0 {
            minor
        } else {
            -minor
        }
    };
    let mut out = vec![vec![Rat::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = c(j, i) / &det;
        }
    }
    Some(out)
}

pub fn identity3() -> RatMat {
    (0..3)
        .map(|i| {
            (0..3)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect()
}

/// Scale a matrix class to a canonical representative: entries become
/// coprime integers and the first nonzero entry (row-major) is positive.
pub fn normalize_class(m: &RatMat) -> RatMat {
    let mut den_lcm = BigInt::one();
    let mut num_gcd = BigInt::zero();
    for row in m {
        for e in row {
            den_lcm = den_lcm.lcm(e.denom());
            num_gcd = num_gcd.gcd(e.numer());
        }
    }
    if num_gcd.is_zero() {
        return m.clone();
    }
    let mut scale = Rat::new(den_lcm, num_gcd);
    let first = m
        .iter()
        .flat_map(|r| r.iter())
        .find(|e| !e.is_zero())
        .expect("nonzero matrix");
    if (first * &scale).is_negative() {
        scale = -scale;
    }
    m.iter()
        .map(|r| r.iter().map(|e| e * &scale).collect())
        .collect()
}

/// Equality of matrix classes (up to a nonzero scalar).
pub fn proportional(a: &RatMat, b: &RatMat) -> bool {
    normalize_class(a) == normalize_class(b)
}

/// Apply a 3×3 projective class to plane-curve components.
pub fn apply_homography(m: &RatMat, curve: &ParamCurve2) -> Option<ParamCurve2> {
    let row = |i: usize| {
        curve
            .x
            .scale(&m[i][0])
            .add(&curve.y.scale(&m[i][1]))
            .add(&RatFunc::from_rat(m[i][2].clone()))
    };
    let w = row(2);
    if w.is_zero() {
        return None;
    }
    let x = row(0).div(&w).ok()?;
    let y = row(1).div(&w).ok()?;
    ParamCurve2::new(x, y, curve.param.clone()).ok()
}

/// Apply a 3×3 projective class to an exact point.
pub fn apply_homography_point(m: &RatMat, p: &(Rat, Rat)) -> Option<(Rat, Rat)> {
    let row = |i: usize| &m[i][0] * &p.0 + &m[i][1] * &p.1 + &m[i][2];
    let w = row(2);
    if w.is_zero() {
        return None;
    }
    Some((row(0) / &w, row(1) / w))
}

/// Apply a 3×4 camera class to a space curve, producing the image curve.
pub fn apply_camera(p: &RatMat, curve: &ParamCurve3) -> Option<ParamCurve2> {
    let row = |i: usize| {
        curve.z[0]
            .scale(&p[i][0])
            .add(&curve.z[1].scale(&p[i][1]))
            .add(&curve.z[2].scale(&p[i][2]))
            .add(&RatFunc::from_rat(p[i][3].clone()))
    };
    let w = row(2);
    if w.is_zero() {
        return None;
    }
    let x = row(0).div(&w).ok()?;
    let y = row(1).div(&w).ok()?;
    ParamCurve2::new(x, y, curve.param.clone()).ok()
}

pub fn apply_camera_point(p: &RatMat, z: &[Rat; 3]) -> Option<(Rat, Rat)> {
    let row = |i: usize| &p[i][0] * &z[0] + &p[i][1] * &z[1] + &p[i][2] * &z[2] + &p[i][3];
    let w = row(2);
    if w.is_zero() {
        return None;
    }
    Some((row(0) / &w, row(1) / w))
}

/// Gaussian elimination; `None` when the system is singular/inconsistent.
pub fn solve_linear(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = a.len();
    let m = a[0].len();
    let mut row = 0;
    let mut pivots = Vec::new();
    for col in 0..m {
        let Some(p) = (row..n).find(|r| !a[*r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        b.swap(row, p);
        let inv = a[row][col].clone().recip();
        for c in col..m {
            a[row][c] *= &inv;
        }
        b[row] *= &inv;
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..m {
                    let sub = &a[row][c] * &f;
                    a[r][c] -= sub;
                }
                let sub = &b[row] * &f;
                b[r] -= sub;
            }
        }
        pivots.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    if pivots.len() < m {
        return None; // underdetermined
    }
    for r in row..n {
        if !b[r].is_zero() {
            return None; // inconsistent
        }
    }
    let mut x = vec![Rat::zero(); m];
    for (r, col) in pivots.iter().enumerate() {
        x[*col] = b[r].clone();
    }
    Some(x)
}

/// One-dimensional nullspace of a rational matrix, if it exists.
pub fn nullspace_1d(mut a: Vec<Vec<Rat>>) -> Option<Vec<Rat>> {
    let n = a.len();
    let m = a[0].len();
    let mut row = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..m {
        let Some(p) = (row..n).find(|r| !a[*r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].clone().recip();
        for c in col..m {
            a[row][c] *= &inv;
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..m {
                    let sub = &a[row][c] * &f;
                    a[r][c] -= sub;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let free: Vec<usize> = (0..m).filter(|c| !pivot_cols.contains(c)).collect();
    if free.len() != 1 {
        return None;
    }
    let fc = free[0];
    let mut v = vec![Rat::zero(); m];
    v[fc] = Rat::one();
    for (r, col) in pivot_cols.iter().enumerate() {
        v[*col] = -a[r][fc].clone();
    }
    Some(v)
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::{rat, rat_i};

    fn m(rows: &[[i64; 3]; 3]) -> RatMat {
        rows.iter()
            .map(|r| r.iter().map(|e| rat_i(*e)).collect())
            .collect()
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[[0, 10, 0], [0, 0, 10], [1, 0, 0]]);
        let inv = inverse3(&a).unwrap();
        assert!(proportional(&mat_mul(&a, &inv), &identity3()));
    }

    #[test]
    fn class_normalization() {
        let a = m(&[[0, 10, 0], [0, 0, 10], [1, 0, 0]]);
        let b: RatMat = a
            .iter()
            .map(|r| r.iter().map(|e| e * rat(-3, 7)).collect())
            .collect();
        assert!(proportional(&a, &b));
        assert_eq!(normalize_class(&b), a);
    }

    #[test]
    fn linear_solver_exact() {
        // 2x + y = 5, x - y = 1 → x = 2, y = 1
        let a = vec![vec![rat_i(2), rat_i(1)], vec![rat_i(1), rat_i(-1)]];
        let b = vec![rat_i(5), rat_i(1)];
        assert_eq!(solve_linear(a, b).unwrap(), vec![rat_i(2), rat_i(1)]);
    }

    #[test]
    fn nullspace_of_rank2() {
        // rows of [[1,0,-2],[0,1,-3]] → nullspace span (2,3,1)
        let a = vec![
            vec![rat_i(1), rat_i(0), rat_i(-2)],
            vec![rat_i(0), rat_i(1), rat_i(-3)],
        ];
        let v = nullspace_1d(a).unwrap();
        assert_eq!(v, vec![rat_i(2), rat_i(3), rat_i(1)]);
    }
}
