//! Text grammar for monomials and polynomials.
//!
//! Monomials are `*`-separated products of `var` or `var^k`, with `1` for
//! the empty product. Polynomials are signed sums of `coeff*monomial` where
//! `coeff` is an integer or `p/q`. Variables are listed greatest first:
//! `["x","y","z"]` means `x = X_2 > y = X_1 > z = X_0`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::param::CPoly;
use crate::poly::HomPoly;
use crate::scalar::{ExactScalar, Field};
use crate::Rational;

/// Variable names, greatest variable first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vars {
    names: Vec<String>,
}

impl Vars {
    pub fn new(names: Vec<String>) -> Result<Self> {
        for (i, n) in names.iter().enumerate() {
            let ok = !n.is_empty()
                && n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::Parse(format!("invalid variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::Parse(format!("duplicate variable name `{n}`")));
            }
        }
        Ok(Vars { names })
    }

    /// `x, y, z` for up to three variables, `x{n-1}, ..., x0` beyond.
    pub fn default_for(nvars: usize) -> Self {
        let names = if nvars <= 3 {
            ["x", "y", "z"][..nvars].iter().map(|s| s.to_string()).collect()
        } else {
            (0..nvars).rev().map(|i| format!("x{i}")).collect()
        };
        Vars { names }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Name of the internal variable `X_i`.
    pub fn name(&self, i: usize) -> &str {
        &self.names[self.names.len() - 1 - i]
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name).map(|p| self.names.len() - 1 - p)
    }

    pub fn monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for i in (0..m.nvars()).rev() {
            match m.exps()[i] {
                0 => {}
                1 => parts.push(self.name(i).to_string()),
                e => parts.push(format!("{}^{e}", self.name(i))),
            }
        }
        parts.join("*")
    }

    pub fn parse_monomial(&self, s: &str) -> Result<Monomial> {
        let s = s.trim();
        let mut exps = vec![0u32; self.nvars()];
        if s == "1" {
            return Ok(Monomial::new(exps));
        }
        for factor in s.split('*') {
            self.apply_factor(factor.trim(), &mut exps)?;
        }
        Ok(Monomial::new(exps))
    }

    fn apply_factor(&self, factor: &str, exps: &mut [u32]) -> Result<()> {
        let (name, e) = match factor.split_once('^') {
            Some((n, e)) => {
                let e: u32 = e
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
                (n.trim(), e)
            }
            None => (factor, 1),
        };
        let i = self
            .index_of(name)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
        exps[i] += e;
        Ok(())
    }

    /// Parses a homogeneous rational polynomial. The zero polynomial `0`
    /// gets degree tag 0.
    pub fn parse_poly(&self, s: &str) -> Result<HomPoly<Rational>> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (k, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && !(cur.is_empty() && k == 0) {
                if cur.is_empty() {
                    return Err(Error::Parse(format!("dangling sign in `{s}`")));
                }
                chunks.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if ch == '-' && k == 0 {
                neg = true;
            } else if ch == '+' && k == 0 {
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("dangling sign in `{s}`")));
        }
        chunks.push((neg, cur));

        let mut terms = Vec::new();
        for (neg, chunk) in chunks {
            let mut coeff = Rational::one();
            let mut exps = vec![0u32; self.nvars()];
            for factor in chunk.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in `{chunk}`")));
                }
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    let v = Rational::parse_exact(factor)
                        .ok_or_else(|| Error::Parse(format!("bad coefficient `{factor}`")))?;
                    coeff *= v;
                } else {
                    self.apply_factor(factor, &mut exps)?;
                }
            }
            if neg {
                coeff = -coeff;
            }
            terms.push((Monomial::new(exps), coeff));
        }
        let degree = terms
            .iter()
            .find(|t| !t.1.is_zero())
            .map(|t| t.0.degree())
            .unwrap_or(0);
        let mut p = HomPoly::zero(self.nvars(), degree);
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            if m.degree() != degree {
                return Err(Error::Parse(format!(
                    "polynomial `{s}` is not homogeneous: degree {} vs {}",
                    degree,
                    m.degree()
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Prints in canonical monomial order.
    pub fn poly(&self, p: &HomPoly<Rational>) -> String {
        signed_sum(p.terms().map(|(m, c)| (self.monomial(m), c.clone())))
    }
}

pub fn rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Joins `(monomial, coefficient)` pairs as `a - 2*b + 1/3*c`. A monomial
/// printed as `1` is the constant term.
fn signed_sum(terms: impl Iterator<Item = (String, Rational)>) -> String {
    let mut out = String::new();
    for (k, (mono, c)) in terms.enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono == "1" {
            out.push_str(&rational(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&rational(&abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Prints a polynomial in the coefficient variables, highest terms first,
/// naming variable `v` by `name(v)`.
pub fn param_poly(p: &CPoly<Rational>, name: impl Fn(u32) -> String) -> String {
    signed_sum(p.terms().iter().rev().map(|(pp, c)| {
        let mono = if pp.is_one() {
            "1".to_string()
        } else {
            pp.pairs()
                .iter()
                .map(|&(v, e)| if e == 1 { name(v) } else { format!("{}^{e}", name(v)) })
                .collect::<Vec<_>>()
                .join("*")
        };
        (mono, c.clone())
    }))
}

/// Scalar conversion used by random generators and tests.
pub fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::PowerProduct;

    fn xyz() -> Vars {
        Vars::default_for(3)
    }

    #[test]
    fn monomial_roundtrip() {
        let v = xyz();
        let m = v.parse_monomial("x^2*z^3").unwrap();
        assert_eq!(m.exps(), &[3, 0, 2]);
        assert_eq!(v.monomial(&m), "x^2*z^3");
        assert_eq!(v.parse_monomial("1").unwrap(), Monomial::one(3));
        assert_eq!(v.monomial(&Monomial::one(3)), "1");
        assert!(v.parse_monomial("w").is_err());
        assert!(v.parse_monomial("x^a").is_err());
    }

    #[test]
    fn poly_parse_and_print() {
        let v = xyz();
        let p = v.parse_poly("x*y^2*z^2 - y^4*z - x^2*z^3").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.degree(), 5);
        let printed = v.poly(&p);
        assert_eq!(v.parse_poly(&printed).unwrap(), p);
        let r = v.parse_poly("-1*y*z + 2/4*x^2").unwrap();
        assert_eq!(v.poly(&r), "1/2*x^2 - y*z");
        assert_eq!(v.poly(&v.parse_poly("x - x").unwrap()), "0");
        assert!(v.parse_poly("x + y^2").is_err());
        assert!(v.parse_poly("x +").is_err());
    }

    #[test]
    fn param_printing() {
        let p = CPoly::var(0).scale(&q(-2))
            + CPoly::term(PowerProduct::from_pairs(vec![(1, 2), (0, 1)]), q(1))
            + CPoly::constant(q(3));
        let s = param_poly(&p, |v| format!("c{v}"));
        assert_eq!(s, "c0*c1^2 - 2*c0 + 3");
    }

    #[test]
    fn vars_validation() {
        assert!(Vars::new(vec!["x".into(), "x".into()]).is_err());
        assert!(Vars::new(vec!["2x".into()]).is_err());
        let v = Vars::new(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(v.name(1), "a");
        assert_eq!(Vars::default_for(5).names()[0], "x4");
    }
}
