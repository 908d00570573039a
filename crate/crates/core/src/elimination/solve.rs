//! Small polynomial-system solving over ℝ by triangular resultant
//! elimination: rational solutions exactly, residual irrational coordinates
//! as isolating intervals, positive dimension by free-variable sampling with
//! an interpolated (and symbolically verified) graph description when one
//! exists.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::gcd::{poly_gcd, squarefree_part};
use crate::algebra::poly::{Poly, Rat};
use crate::schedule::Schedule;
use crate::vars::Var;

use super::realroots::{isolate_real_roots, rational_roots_bounded};

const FREE_SAMPLES: usize = 9;
const ROOT_HEIGHT: u64 = 1_000_000;
const MAX_BRANCH_DEPTH: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dimension {
    Empty,
    Zero,
    Positive,
}

#[derive(Clone, Debug)]
pub enum Coord {
    Exact(Rat),
    /// Isolated real algebraic coordinate: interval plus the defining
    /// univariate polynomial obtained from the triangular specialization.
    Isolated { interval: (Rat, Rat), defining: Poly },
}

#[derive(Clone, Debug)]
pub struct SolutionPoint {
    pub coords: Vec<(Var, Coord)>,
    /// Variables that were free in the system; their values here are samples
    /// from the height schedule, not isolated solutions.
    pub free_vars: Vec<Var>,
}

impl SolutionPoint {
    pub fn rational(&self) -> Option<Vec<(Var, Rat)>> {
        let mut out = Vec::with_capacity(self.coords.len());
        for (v, c) in &self.coords {
            match c {
                Coord::Exact(r) => out.push((v.clone(), r.clone())),
                Coord::Isolated { .. } => return None,
            }
        }
        Some(out)
    }

    pub fn is_free_sample(&self) -> bool {
        !self.free_vars.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct SolutionSet {
    pub dimension: Dimension,
    pub points: Vec<SolutionPoint>,
    /// Generators describing the variety when it is positive-dimensional.
    pub variety_description: Option<Vec<Poly>>,
    /// Count of solution branches that could not be resolved exactly
    /// (irrational partial coordinates needing further extension). When
    /// nonzero, emptiness conclusions must not be drawn.
    pub unresolved: usize,
}

impl SolutionSet {
    pub fn rational_points(&self) -> Vec<Vec<(Var, Rat)>> {
        self.points.iter().filter_map(|p| p.rational()).collect()
    }

    pub fn is_certainly_empty(&self) -> bool {
        matches!(self.dimension, Dimension::Empty) && self.unresolved == 0
    }
}

/// Solve a polynomial system in the given unknowns; `inequations` are
/// enforced (≠ 0) on every returned point.
pub fn solve_system(equations: &[Poly], unknowns: &[Var], inequations: &[Poly]) -> SolutionSet {
    let mut stats = Stats::default();
    let eqs: Vec<Poly> = equations.to_vec();
    let mut points = solve_rec(eqs, unknowns, &mut stats, 0);
    // enforce the input equations exactly on rational points
    points.retain(|p| match p.rational() {
        Some(vals) => equations.iter().all(|e| e.eval(&vals).is_zero()),
        None => true,
    });
    // enforce inequations
    points.retain(|p| satisfies_inequations(p, inequations));
    dedup_points(&mut points);

    let any_free = points.iter().any(|p| p.is_free_sample());
    let dimension = if any_free {
        Dimension::Positive
    } else if points.is_empty() && stats.unresolved == 0 {
        Dimension::Empty
    } else if points.is_empty() {
        Dimension::Empty // flagged via unresolved
    } else {
        Dimension::Zero
    };
    let variety_description = if any_free {
        interpolate_graph(&points, unknowns, equations)
            .or_else(|| Some(normalize_system(equations)))
    } else {
        None
    };
    SolutionSet {
        dimension,
        points,
        variety_description,
        unresolved: stats.unresolved,
    }
}

#[derive(Default)]
struct Stats {
    unresolved: usize,
}

fn normalize_system(eqs: &[Poly]) -> Vec<Poly> {
    let mut out: Vec<Poly> = Vec::new();
    for e in eqs {
        if e.is_zero() {
            continue;
        }
        let p = squarefree_part(e);
        if !p.is_constant() && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn solve_rec(eqs: Vec<Poly>, unknowns: &[Var], stats: &mut Stats, depth: usize) -> Vec<SolutionPoint> {
    let mut sys: Vec<Poly> = Vec::new();
    for e in eqs {
        if e.is_zero() {
            continue;
        }
        if e.is_constant() {
            return Vec::new(); // inconsistent
        }
        let p = squarefree_part(&e);
        if !sys.contains(&p) {
            sys.push(p);
        }
    }
    let Some((u, rest)) = unknowns.split_first() else {
        return if sys.is_empty() {
            vec![SolutionPoint {
                coords: Vec::new(),
                free_vars: Vec::new(),
            }]
        } else {
            Vec::new()
        };
    };
    if depth > MAX_BRANCH_DEPTH {
        stats.unresolved += 1;
        return Vec::new();
    }

    let (eu, e0): (Vec<Poly>, Vec<Poly>) = sys.into_iter().partition(|e| e.contains_var(u));
    if eu.is_empty() {
        // u is unconstrained here: sample it
        let subs = solve_rec(e0, rest, stats, depth);
        let mut out = Vec::new();
        for sp in subs {
            for val in Schedule::heights(FREE_SAMPLES) {
                let mut coords = vec![(u.clone(), Coord::Exact(val.clone()))];
                coords.extend(sp.coords.iter().cloned());
                let mut free = sp.free_vars.clone();
                free.push(u.clone());
                out.push(SolutionPoint {
                    coords,
                    free_vars: free,
                });
            }
        }
        return out;
    }

    // pivot: minimal degree in u, then fewest terms
    let pivot_idx = (0..eu.len())
        .min_by_key(|i| (eu[*i].degree_in(u), eu[*i].num_terms()))
        .unwrap();
    let pivot = eu[pivot_idx].clone();
    let mut reduced = e0.clone();
    for (i, e) in eu.iter().enumerate() {
        if i == pivot_idx {
            continue;
        }
        let r = super::resultant::resultant(&pivot, e, u);
        if r.is_zero() {
            // common factor: split the variety
            let g = poly_gcd(&pivot, e);
            let mut sys_a: Vec<Poly> = e0.clone();
            let mut sys_b: Vec<Poly> = e0.clone();
            for (j, q) in eu.iter().enumerate() {
                if j == pivot_idx || j == i {
                    continue;
                }
                sys_a.push(q.clone());
                sys_b.push(q.clone());
            }
            sys_a.push(g.clone());
            sys_b.push(pivot.div_exact(&g).expect("gcd divides"));
            sys_b.push(e.div_exact(&g).expect("gcd divides"));
            let mut out = solve_rec(sys_a, unknowns, stats, depth + 1);
            out.extend(solve_rec(sys_b, unknowns, stats, depth + 1));
            dedup_points(&mut out);
            return out;
        }
        reduced.push(r.primitive_part());
    }

    let subs = solve_rec(reduced, rest, stats, depth);
    let mut out = Vec::new();
    for sp in subs {
        let Some(vals) = sp.rational() else {
            // extension over an irrational partial point needs algebraic
            // arithmetic; record and move on
            stats.unresolved += 1;
            continue;
        };
        // specialize the u-equations at this partial point
        let mut g = Poly::zero();
        let mut inconsistent = false;
        for e in &eu {
            let mut spec = e.clone();
            for (v, r) in &vals {
                spec = spec.eval_var(v, r);
            }
            if spec.is_zero() {
                continue;
            }
            if spec.is_constant() {
                inconsistent = true;
                break;
            }
            g = poly_gcd(&g, &spec);
            if g.is_constant() && !g.is_zero() {
                inconsistent = true;
                break;
            }
        }
        if inconsistent {
            continue;
        }
        if g.is_zero() {
            // every u-equation vanished at the partial point: u is free here
            for val in Schedule::heights(FREE_SAMPLES) {
                let mut coords = vec![(u.clone(), Coord::Exact(val.clone()))];
                coords.extend(sp.coords.iter().cloned());
                let mut free = sp.free_vars.clone();
                free.push(u.clone());
                out.push(SolutionPoint {
                    coords,
                    free_vars: free,
                });
            }
            continue;
        }
        let (roots, intervals) = rational_roots_bounded(&g, u, &BigInt::from(ROOT_HEIGHT));
        for r in roots {
            let mut coords = vec![(u.clone(), Coord::Exact(r))];
            coords.extend(sp.coords.iter().cloned());
            out.push(SolutionPoint {
                coords,
                free_vars: sp.free_vars.clone(),
            });
        }
        for interval in intervals {
            let mut coords = vec![(
                u.clone(),
                Coord::Isolated {
                    interval,
                    defining: g.clone(),
                },
            )];
            coords.extend(sp.coords.iter().cloned());
            out.push(SolutionPoint {
                coords,
                free_vars: sp.free_vars.clone(),
            });
        }
    }
    out
}

fn satisfies_inequations(p: &SolutionPoint, inequations: &[Poly]) -> bool {
    if inequations.is_empty() {
        return true;
    }
    let rational: Vec<(Var, Rat)> = p
        .coords
        .iter()
        .filter_map(|(v, c)| match c {
            Coord::Exact(r) => Some((v.clone(), r.clone())),
            Coord::Isolated { .. } => None,
        })
        .collect();
    for q in inequations {
        if rational.len() == p.coords.len() {
            if q.eval(&rational).is_zero() {
                return false;
            }
            continue;
        }
        // one isolated coordinate: decide q(α) = 0 through the defining poly
        let isolated: Vec<&(Var, Coord)> = p
            .coords
            .iter()
            .filter(|(_, c)| matches!(c, Coord::Isolated { .. }))
            .collect();
        if isolated.len() != 1 {
            continue; // conservative: keep
        }
        let (v, c) = isolated[0];
        let Coord::Isolated { interval, defining } = c else {
            unreachable!()
        };
        let mut spec = q.clone();
        for (w, r) in &rational {
            spec = spec.eval_var(w, r);
        }
        if spec.is_zero() {
            return false;
        }
        if spec.is_constant() {
            continue;
        }
        let h = poly_gcd(defining, &spec);
        if h.is_constant() {
            continue;
        }
        // q vanishes at the box root iff h has a root in the interval
        let iso = isolate_real_roots(&h, v);
        for (lo, hi) in iso.intervals {
            if lo <= interval.1 && interval.0 <= hi {
                return false;
            }
        }
    }
    true
}

fn dedup_points(points: &mut Vec<SolutionPoint>) {
    let mut seen: Vec<String> = Vec::new();
    points.retain(|p| {
        let key = format!("{:?}", p.coords);
        if seen.contains(&key) {
            false
        } else {
            seen.push(key);
            true
        }
    });
}

/// When exactly one unknown is free and the others are single-valued over
/// it, fit polynomial graphs through the sampled points and verify them
/// symbolically against the whole system.
fn interpolate_graph(
    points: &[SolutionPoint],
    unknowns: &[Var],
    equations: &[Poly],
) -> Option<Vec<Poly>> {
    let free: Vec<Var> = points
        .iter()
        .flat_map(|p| p.free_vars.iter().cloned())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    if free.len() != 1 {
        return None;
    }
    let fv = free[0].clone();
    let mut pairs: std::collections::BTreeMap<String, (Rat, Vec<(Var, Rat)>)> =
        std::collections::BTreeMap::new();
    for p in points {
        let vals = p.rational()?;
        let fval = vals.iter().find(|(v, _)| *v == fv)?.1.clone();
        let others: Vec<(Var, Rat)> = vals.iter().filter(|(v, _)| *v != fv).cloned().collect();
        let key = fval.to_string();
        if let Some((_, existing)) = pairs.get(&key) {
            if *existing != others {
                return None; // branched: not a graph
            }
        } else {
            pairs.insert(key, (fval, others));
        }
    }
    if pairs.len() < 3 {
        return None;
    }
    let samples: Vec<(Rat, Vec<(Var, Rat)>)> = pairs.into_values().collect();
    let mut generators = Vec::new();
    for v in unknowns.iter().filter(|v| **v != fv) {
        let pts: Vec<(Rat, Rat)> = samples
            .iter()
            .map(|(f, others)| {
                (
                    f.clone(),
                    others
                        .iter()
                        .find(|(w, _)| w == v)
                        .map(|(_, r)| r.clone())
                        .unwrap(),
                )
            })
            .collect();
        let phi = lagrange(&fv, &pts);
        generators.push(Poly::var(v).sub(&phi).primitive_part());
    }
    // symbolic verification on the full system
    let bindings: Vec<(Var, Poly)> = unknowns
        .iter()
        .filter(|v| **v != fv)
        .map(|v| {
            let g = generators
                .iter()
                .find(|g| g.contains_var(v))
                .expect("one generator per bound unknown");
            // generator is v - φ (up to sign/content): solve for v
            let coeffs = g.coeffs_in(v);
            assert_eq!(coeffs.len(), 2);
            let phi = coeffs[0]
                .neg()
                .div_exact(&coeffs[1])
                .expect("linear in the unknown");
            (v.clone(), phi)
        })
        .collect();
    for e in equations {
        if !e.subst(&bindings).is_zero() {
            return None;
        }
    }
    Some(generators)
}

fn lagrange(v: &Var, pts: &[(Rat, Rat)]) -> Poly {
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
            let num = x.sub(&Poly::constant(xj.clone()));
            let den = xi - xj;
            term = term.mul(&num).scale(&den.recip());
        }
        acc = acc.add(&term);
    }
    acc
}
