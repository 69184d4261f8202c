//! Multi-index monomials over `X_0 < X_1 < ... < X_n`.
//!
//! Position `i` of the exponent vector is the exponent of `X_i`; `X_0` is the
//! smallest variable. External text formats list variables greatest first,
//! see [`crate::text::Vars`].

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::ops::Add;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `X^a = X_0^a_0 ... X_n^a_n`.
///
/// `Ord` is the canonical enumeration order used for every deterministic
/// listing in the crate: lower degree first, then lexicographic on the
/// exponents read from `X_n` down to `X_0`, larger first. It is *not* a term
/// order; see [`TermOrder`] for those.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The variable `X_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Index of the smallest variable dividing `self`; `None` for `1`.
    pub fn min_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    /// Index of the largest variable dividing `self`; `None` for `1`.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    /// `self / X_i` if `X_i` divides `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// All monomials reachable by one up move: replace one occurrence of
    /// `X_i` by some `X_j` with `j > i`. Sorted canonically.
    pub fn elementary_moves_up(&self) -> Vec<Monomial> {
        let n = self.nvars();
        let mut out = Vec::new();
        for i in 0..n {
            if self.exps[i] == 0 {
                continue;
            }
            for j in i + 1..n {
                let mut exps = self.exps.clone();
                exps[i] -= 1;
                exps[j] += 1;
                out.push(Monomial { exps });
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Every monomial of degree `m` in `nvars` variables, in canonical order.
    pub fn all_of_degree(nvars: usize, m: u32) -> Vec<Monomial> {
        fn rec(exps: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Monomial>) {
            if pos == 0 {
                exps[0] = left;
                out.push(Monomial { exps: exps.clone() });
                return;
            }
            for e in (0..=left).rev() {
                exps[pos] = e;
                rec(exps, pos - 1, left - e, out);
            }
            exps[pos] = 0;
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if m == 0 {
                out.push(Monomial { exps: vec![] });
            }
            return out;
        }
        let mut exps = vec![0; nvars];
        rec(&mut exps, nvars - 1, m, &mut out);
        out
    }

    /// Every monomial of degree at most `m`, in canonical order.
    pub fn all_up_to_degree(nvars: usize, m: u32) -> Vec<Monomial> {
        (0..=m).flat_map(|d| Monomial::all_of_degree(nvars, d)).collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for i in (0..self.exps.len().max(other.exps.len())).rev() {
                let a = self.exps.get(i).copied().unwrap_or(0);
                let b = other.exps.get(i).copied().unwrap_or(0);
                if a != b {
                    return b.cmp(&a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::text::Vars::default_for(self.nvars()).monomial(self))
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::text::Vars::default_for(self.nvars()).monomial(self))
    }
}

/// Term orders with `X_0 < X_1 < ... < X_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    Lex,
    Deglex,
    Degrevlex,
}

impl TermOrder {
    pub const ALL: [TermOrder; 3] = [TermOrder::Lex, TermOrder::Deglex, TermOrder::Degrevlex];

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let lex = || {
            for i in (0..a.nvars()).rev() {
                if a.exps[i] != b.exps[i] {
                    return a.exps[i].cmp(&b.exps[i]);
                }
            }
            Ordering::Equal
        };
        match self {
            TermOrder::Lex => lex(),
            TermOrder::Deglex => a.degree().cmp(&b.degree()).then_with(lex),
            TermOrder::Degrevlex => a.degree().cmp(&b.degree()).then_with(|| {
                for i in 0..a.nvars() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TermOrder::Lex => "lex",
            TermOrder::Deglex => "deglex",
            TermOrder::Degrevlex => "degrevlex",
        }
    }
}

impl std::str::FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(TermOrder::Lex),
            "deglex" => Ok(TermOrder::Deglex),
            "degrevlex" => Ok(TermOrder::Degrevlex),
            _ => Err(Error::Parse(format!("unknown term order `{s}`"))),
        }
    }
}

/// The Borel quasi-order: `a` precedes `b` when `b` is reachable from `a`
/// by up moves. Reachable sets are memoized per source monomial.
#[derive(Default)]
pub struct BorelOrder {
    reach: Mutex<HashMap<Monomial, std::sync::Arc<HashSet<Monomial>>>>,
}

impl BorelOrder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn precedes(&self, a: &Monomial, b: &Monomial) -> Result<bool> {
        if a.degree() != b.degree() || a.nvars() != b.nvars() {
            return Err(Error::IncomparableDegrees(a.degree(), b.degree()));
        }
        if a == b {
            return Ok(true);
        }
        Ok(self.up_set(a).contains(b))
    }

    /// All monomials reachable from `a` by zero or more up moves.
    pub fn up_set(&self, a: &Monomial) -> std::sync::Arc<HashSet<Monomial>> {
        if let Some(s) = self.reach.lock().unwrap().get(a) {
            return s.clone();
        }
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(a.clone());
        queue.push_back(a.clone());
        while let Some(cur) = queue.pop_front() {
            for next in cur.elementary_moves_up() {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let set = std::sync::Arc::new(seen);
        self.reach.lock().unwrap().insert(a.clone(), set.clone());
        set
    }
}

/// Free-standing form of [`BorelOrder::precedes`] without a shared cache.
pub fn precedes_b(a: &Monomial, b: &Monomial) -> Result<bool> {
    BorelOrder::new().precedes(a, b)
}

/// A degree in `Z^{n+1}`, indexed like exponent vectors (`X_0` first).
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct LambdaDegree(pub Vec<i64>);

impl LambdaDegree {
    pub fn zero(nvars: usize) -> Self {
        LambdaDegree(vec![0; nvars])
    }

    /// `alpha - gamma`.
    pub fn difference(alpha: &Monomial, gamma: &Monomial) -> Self {
        LambdaDegree(
            alpha
                .exps()
                .iter()
                .zip(gamma.exps())
                .map(|(a, g)| *a as i64 - *g as i64)
                .collect(),
        )
    }

    pub fn of_monomial(m: &Monomial) -> Self {
        LambdaDegree(m.exps().iter().map(|&e| e as i64).collect())
    }

    pub fn scaled(&self, k: i64) -> Self {
        LambdaDegree(self.0.iter().map(|v| v * k).collect())
    }

    pub fn sub(&self, other: &LambdaDegree) -> Self {
        LambdaDegree(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Entries listed greatest variable first, the order used by every
    /// external format.
    pub fn external(&self) -> Vec<i64> {
        self.0.iter().rev().copied().collect()
    }
}

impl Add for &LambdaDegree {
    type Output = LambdaDegree;

    fn add(self, rhs: &LambdaDegree) -> LambdaDegree {
        LambdaDegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // x > y > z, i.e. exps are [z, y, x]
    fn m(x: u32, y: u32, z: u32) -> Monomial {
        Monomial::new(vec![z, y, x])
    }

    #[test]
    fn up_moves_of_xyz() {
        let mut got = m(1, 1, 1).elementary_moves_up();
        got.sort();
        let mut want = vec![m(2, 0, 1), m(2, 1, 0), m(1, 2, 0)];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn up_moves_edge_cases() {
        assert!(m(2, 0, 0).elementary_moves_up().is_empty());
        assert!(m(0, 0, 0).elementary_moves_up().is_empty());
        let mut got = m(0, 0, 2).elementary_moves_up();
        got.sort();
        let mut want = vec![m(0, 1, 1), m(1, 0, 1)];
        want.sort();
        assert_eq!(got, want);
        for u in m(1, 3, 2).elementary_moves_up() {
            assert_eq!(u.degree(), 6);
        }
    }

    #[test]
    fn precedes_examples() {
        assert!(precedes_b(&m(1, 1, 1), &m(2, 0, 1)).unwrap());
        assert!(precedes_b(&m(1, 1, 1), &m(1, 1, 1)).unwrap());
        assert!(!precedes_b(&m(2, 0, 1), &m(1, 1, 1)).unwrap());
        assert!(matches!(
            precedes_b(&m(1, 0, 0), &m(1, 1, 0)),
            Err(Error::IncomparableDegrees(1, 2))
        ));
    }

    #[test]
    fn canonical_order_degree_two() {
        let got = Monomial::all_of_degree(3, 2);
        let want = vec![m(2, 0, 0), m(1, 1, 0), m(1, 0, 1), m(0, 2, 0), m(0, 1, 1), m(0, 0, 2)];
        assert_eq!(got, want);
        let mut sorted = want.clone();
        sorted.reverse();
        sorted.sort();
        assert_eq!(sorted, want);
        assert!(Monomial::one(3) < m(0, 0, 1));
    }

    #[test]
    fn min_max_var() {
        let a = m(2, 0, 1);
        assert_eq!(a.min_var(), Some(0));
        assert_eq!(a.max_var(), Some(2));
        assert_eq!(Monomial::one(3).min_var(), None);
    }

    #[test]
    fn term_orders_on_degree_two() {
        // lex: y^2 > xz is false (x dominates); degrevlex: xz < y^2? In degrevlex
        // with x>y>z, y^2 > xz.
        assert_eq!(TermOrder::Lex.cmp(&m(1, 0, 1), &m(0, 2, 0)), Ordering::Greater);
        assert_eq!(TermOrder::Degrevlex.cmp(&m(1, 0, 1), &m(0, 2, 0)), Ordering::Less);
        assert_eq!(TermOrder::Deglex.cmp(&m(0, 0, 3), &m(1, 0, 0)), Ordering::Greater);
        assert_eq!(TermOrder::Lex.cmp(&m(0, 0, 3), &m(1, 0, 0)), Ordering::Less);
    }

    #[test]
    fn lambda_difference() {
        // alpha = x^2y, gamma = y^2z -> (2,-1,-1) in (x,y,z)
        let l = LambdaDegree::difference(&m(2, 1, 0), &m(0, 2, 1));
        assert_eq!(l.external(), vec![2, -1, -1]);
        let z = LambdaDegree::zero(3);
        assert_eq!(&l + &z, l);
    }
}
