//! Sparse polynomials in the coefficient variables `C_0, C_1, ...`.
//!
//! These serve as the coefficient ring of the generic marked set. Only
//! ring operations, evaluation and substitution are provided; no GCDs.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{Field, Ring};

/// A power product `prod C_v^e`, stored as `(v, e)` pairs with increasing `v`
/// and positive `e`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PowerProduct(Vec<(u32, u32)>);

impl PowerProduct {
    pub fn one() -> Self {
        PowerProduct(Vec::new())
    }

    pub fn var(v: u32) -> Self {
        PowerProduct(vec![(v, 1)])
    }

    pub fn from_pairs(mut pairs: Vec<(u32, u32)>) -> Self {
        pairs.retain(|p| p.1 > 0);
        pairs.sort_unstable();
        let mut out: Vec<(u32, u32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        PowerProduct(out)
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: u32) -> u32 {
        match self.0.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn mul(&self, other: &PowerProduct) -> PowerProduct {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        PowerProduct(out)
    }

    /// The power product with variable `v` removed, and its exponent.
    pub fn split_var(&self, v: u32) -> (PowerProduct, u32) {
        match self.0.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => {
                let mut rest = self.0.clone();
                let (_, e) = rest.remove(i);
                (PowerProduct(rest), e)
            }
            Err(_) => (self.clone(), 0),
        }
    }
}

impl Ord for PowerProduct {
    /// Graded, then lexicographic with `C_0` the most significant variable.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            let (mut i, mut j) = (0, 0);
            loop {
                match (a.get(i), b.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(x), Some(y)) => {
                        if x.0 == y.0 {
                            if x.1 != y.1 {
                                return x.1.cmp(&y.1);
                            }
                            i += 1;
                            j += 1;
                        } else if x.0 < y.0 {
                            return Ordering::Greater;
                        } else {
                            return Ordering::Less;
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for PowerProduct {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in the coefficient variables with scalars in `K`.
///
/// Terms are kept sorted by [`PowerProduct`]'s order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Debug)]
pub struct CPoly<K> {
    terms: Vec<(PowerProduct, K)>,
}

impl<K: Field> CPoly<K> {
    pub fn constant(c: K) -> Self {
        if c.is_zero() {
            CPoly { terms: Vec::new() }
        } else {
            CPoly { terms: vec![(PowerProduct::one(), c)] }
        }
    }

    pub fn var(v: u32) -> Self {
        CPoly { terms: vec![(PowerProduct::var(v), K::one())] }
    }

    pub fn term(pp: PowerProduct, c: K) -> Self {
        if c.is_zero() {
            CPoly::zero()
        } else {
            CPoly { terms: vec![(pp, c)] }
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (PowerProduct, K)>) -> Self {
        let mut acc: HashMap<PowerProduct, K> = HashMap::new();
        for (pp, c) in terms {
            let e = acc.entry(pp).or_insert_with(K::zero);
            *e = e.clone() + c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        CPoly { terms }
    }

    pub fn terms(&self) -> &[(PowerProduct, K)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.last().map(|t| t.0.degree()).unwrap_or(0)
    }

    pub fn constant_term(&self) -> K {
        match self.terms.first() {
            Some((pp, c)) if pp.is_one() => c.clone(),
            _ => K::zero(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    /// Degree-one part as `(variable, coefficient)` pairs.
    pub fn linear_part(&self) -> Vec<(u32, K)> {
        self.terms
            .iter()
            .filter(|t| t.0.degree() == 1)
            .map(|t| (t.0.pairs()[0].0, t.1.clone()))
            .collect()
    }

    pub fn variables(&self) -> Vec<u32> {
        let mut vs: Vec<u32> =
            self.terms.iter().flat_map(|t| t.0.pairs().iter().map(|p| p.0)).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn degree_in(&self, v: u32) -> u32 {
        self.terms.iter().map(|t| t.0.exponent(v)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return CPoly::zero();
        }
        CPoly { terms: self.terms.iter().map(|(p, v)| (p.clone(), v.clone() * c.clone())).collect() }
    }

    /// Multiplication by a single term; the storage order is preserved
    /// because the order is multiplicative.
    pub fn mul_term(&self, pp: &PowerProduct, c: &K) -> Self {
        if c.is_zero() {
            return CPoly::zero();
        }
        CPoly {
            terms: self.terms.iter().map(|(p, v)| (p.mul(pp), v.clone() * c.clone())).collect(),
        }
    }

    fn merge(a: &[(PowerProduct, K)], b: &[(PowerProduct, K)], sign: bool) -> Self {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let negb = |c: &K| if sign { c.clone() } else { -c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0.clone(), negb(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = a[i].1.clone() + negb(&b[j].1);
                    if !s.is_zero() {
                        out.push((a[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| (t.0.clone(), negb(&t.1))));
        CPoly { terms: out }
    }

    pub fn eval(&self, point: &[K]) -> K {
        let mut acc = K::zero();
        for (pp, c) in &self.terms {
            let mut v = c.clone();
            for &(var, e) in pp.pairs() {
                let x = &point[var as usize];
                for _ in 0..e {
                    v = v * x.clone();
                }
            }
            acc = acc + v;
        }
        acc
    }

    /// Replaces `C_v` by `value` everywhere.
    pub fn substitute(&self, v: u32, value: &CPoly<K>) -> Self {
        let max_e = self.degree_in(v);
        if max_e == 0 {
            return self.clone();
        }
        let mut powers = vec![CPoly::one()];
        for k in 1..=max_e as usize {
            let next = &powers[k - 1] * value;
            powers.push(next);
        }
        let mut grouped: Vec<Vec<(PowerProduct, K)>> = vec![Vec::new(); max_e as usize + 1];
        for (pp, c) in &self.terms {
            let (rest, e) = pp.split_var(v);
            grouped[e as usize].push((rest, c.clone()));
        }
        let mut out = CPoly::zero();
        for (e, terms) in grouped.into_iter().enumerate() {
            if terms.is_empty() {
                continue;
            }
            let coeff = CPoly::from_terms(terms);
            out = out + &coeff * &powers[e];
        }
        out
    }

    /// Replaces every `C_v` with `v` a key of `values` simultaneously.
    pub fn substitute_all(&self, values: &HashMap<u32, CPoly<K>>) -> Self {
        // group terms by their substituted part
        let mut groups: HashMap<PowerProduct, Vec<(PowerProduct, K)>> = HashMap::new();
        let mut untouched = Vec::new();
        for (pp, c) in &self.terms {
            let (hit, keep): (Vec<(u32, u32)>, Vec<(u32, u32)>) =
                pp.pairs().iter().partition(|(v, _)| values.contains_key(v));
            if hit.is_empty() {
                untouched.push((pp.clone(), c.clone()));
            } else {
                groups.entry(PowerProduct(hit)).or_default().push((PowerProduct(keep), c.clone()));
            }
        }
        if groups.is_empty() {
            return self.clone();
        }
        let mut powers: HashMap<(u32, u32), CPoly<K>> = HashMap::new();
        let mut power = |v: u32, e: u32| -> CPoly<K> {
            if let Some(p) = powers.get(&(v, e)) {
                return p.clone();
            }
            let mut p = values[&v].clone();
            for _ in 1..e {
                p = &p * &values[&v];
            }
            powers.insert((v, e), p.clone());
            p
        };
        let mut acc: HashMap<PowerProduct, K> = HashMap::new();
        for (pp, c) in untouched {
            acc.insert(pp, c);
        }
        let mut keys: Vec<_> = groups.into_iter().collect();
        keys.sort_by(|a, b| a.0.cmp(&b.0));
        for (hit, rest) in keys {
            let mut factor = CPoly::from_terms(rest);
            for &(v, e) in hit.pairs() {
                factor = &factor * &power(v, e);
            }
            for (pp, c) in factor.terms {
                let e = acc.entry(pp).or_insert_with(K::zero);
                *e = e.clone() + c;
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        CPoly { terms }
    }

    /// Sets each listed variable to zero.
    pub fn kill_vars(&self, vars: &std::collections::BTreeSet<u32>) -> Self {
        CPoly {
            terms: self
                .terms
                .iter()
                .filter(|t| t.0.pairs().iter().all(|p| !vars.contains(&p.0)))
                .cloned()
                .collect(),
        }
    }

    /// Renames variables through `map`.
    pub fn rename(&self, map: impl Fn(u32) -> u32) -> Self {
        CPoly::from_terms(self.terms.iter().map(|(pp, c)| {
            (
                PowerProduct::from_pairs(pp.pairs().iter().map(|&(v, e)| (map(v), e)).collect()),
                c.clone(),
            )
        }))
    }
}

impl<K: Field> Zero for CPoly<K> {
    fn zero() -> Self {
        CPoly { terms: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<K: Field> One for CPoly<K> {
    fn one() -> Self {
        CPoly::constant(K::one())
    }

    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }
}

impl<K: Field> Add for CPoly<K> {
    type Output = CPoly<K>;

    fn add(self, rhs: Self) -> Self {
        if self.terms.is_empty() {
            return rhs;
        }
        if rhs.terms.is_empty() {
            return self;
        }
        CPoly::merge(&self.terms, &rhs.terms, true)
    }
}

impl<K: Field> Sub for CPoly<K> {
    type Output = CPoly<K>;

    fn sub(self, rhs: Self) -> Self {
        if rhs.terms.is_empty() {
            return self;
        }
        CPoly::merge(&self.terms, &rhs.terms, false)
    }
}

impl<K: Field> Neg for CPoly<K> {
    type Output = CPoly<K>;

    fn neg(self) -> Self {
        CPoly { terms: self.terms.into_iter().map(|(p, c)| (p, -c)).collect() }
    }
}

impl<K: Field> Mul for &CPoly<K> {
    type Output = CPoly<K>;

    fn mul(self, rhs: &CPoly<K>) -> CPoly<K> {
        if self.terms.is_empty() || rhs.terms.is_empty() {
            return CPoly::zero();
        }
        let (small, big) =
            if self.terms.len() <= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        if small.terms.len() == 1 {
            let (pp, c) = &small.terms[0];
            return big.mul_term(pp, c);
        }
        CPoly::from_terms(small.terms.iter().flat_map(|(p, c)| {
            big.terms.iter().map(move |(q, d)| (p.mul(q), c.clone() * d.clone()))
        }))
    }
}

impl<K: Field> Mul for CPoly<K> {
    type Output = CPoly<K>;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<K: Field> Ring for CPoly<K> {
    fn add_mul(&mut self, c: &Self, other: &Self) {
        let prod = c * other;
        let cur = std::mem::replace(self, CPoly::zero());
        *self = cur + prod;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = CPoly<Rational>;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn storage_order_is_multiplicative() {
        let a = PowerProduct::from_pairs(vec![(0, 1), (3, 2)]);
        let b = PowerProduct::from_pairs(vec![(1, 3)]);
        let t = PowerProduct::from_pairs(vec![(2, 1), (0, 4)]);
        assert_eq!(a.cmp(&b), Ordering::Greater);
        assert_eq!(a.mul(&t).cmp(&b.mul(&t)), Ordering::Greater);
    }

    #[test]
    fn ring_ops() {
        let x = P::var(0);
        let y = P::var(1);
        let s = x.clone() + y.clone();
        let d = x.clone() - y.clone();
        let prod = &s * &d;
        let want = &x * &x - &y * &y;
        assert_eq!(prod, want);
        assert!((s.clone() - s).is_zero());
        assert_eq!(P::one() * x.clone(), x);
    }

    #[test]
    fn eval_and_substitute() {
        // p = c0^2 c1 - 3 c1 + 2
        let c0 = P::var(0);
        let c1 = P::var(1);
        let p = &(&c0 * &c0) * &c1 - c1.scale(&q(3)) + P::constant(q(2));
        assert_eq!(p.eval(&[q(2), q(5)]), q(20 - 15 + 2));
        // c0 := c1 + 1
        let sub = p.substitute(0, &(c1.clone() + P::one()));
        assert_eq!(sub.eval(&[q(99), q(5)]), p.eval(&[q(6), q(5)]));
        assert_eq!(sub.degree_in(0), 0);
    }

    #[test]
    fn linear_part_and_constant() {
        let p = P::var(2).scale(&q(-1)) + &P::var(0) * &P::var(1) + P::constant(q(4));
        assert_eq!(p.constant_term(), q(4));
        assert_eq!(p.linear_part(), vec![(2, q(-1))]);
        assert_eq!(p.total_degree(), 2);
        assert_eq!(p.variables(), vec![0, 1, 2]);
    }
}
