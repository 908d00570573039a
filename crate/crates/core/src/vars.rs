//! Variable names and the fixed global ordering used by all polynomials.
//!
//! Every polynomial carries its own ordered variable list, but lists are
//! always sorted by this single global order so that values constructed in
//! different places compare structurally. Built-in names used by the
//! pipeline come first; any other symbol sorts after them lexicographically.

use std::borrow::Borrow;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Built-in variable names, in their global precedence order.
const BUILTIN_ORDER: [&str; 15] = [
    "t", "s", "x", "y", "kappa", "tau", "c1", "c2", "c3", "a1", "a2", "b", "z1", "z2", "z3",
];

/// An interned variable name with the global ordering.
#[derive(Clone, Debug)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        Var(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    fn rank(&self) -> usize {
        BUILTIN_ORDER
            .iter()
            .position(|n| *n == self.name())
            .unwrap_or(BUILTIN_ORDER.len())
    }
}

impl PartialEq for Var {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}
impl Eq for Var {}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank()
            .cmp(&other.rank())
            .then_with(|| self.name().cmp(other.name()))
    }
}

impl std::hash::Hash for Var {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl From<&str> for Var {
    fn from(s: &str) -> Self {
        Var::new(s)
    }
}

impl Borrow<str> for Var {
    fn borrow(&self) -> &str {
        self.name()
    }
}

/// Merge two sorted variable lists into their sorted union.
pub fn merge_vars(a: &[Var], b: &[Var]) -> Vec<Var> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_order_beats_lexicographic() {
        assert!(Var::new("t") < Var::new("s"));
        assert!(Var::new("tau") < Var::new("c1"));
        assert!(Var::new("z3") < Var::new("u"));
        assert!(Var::new("u") < Var::new("w"));
    }

    #[test]
    fn merge_dedups() {
        let a = vec![Var::new("t"), Var::new("x")];
        let b = vec![Var::new("s"), Var::new("x")];
        let m = merge_vars(&a, &b);
        assert_eq!(
            m.iter().map(|v| v.name().to_string()).collect::<Vec<_>>(),
            vec!["t", "s", "x"]
        );
    }
}
