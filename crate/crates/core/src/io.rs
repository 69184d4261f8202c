//! JSON file formats and reports.
//!
//! Marked sets store each polynomial as `head + tail` with the tail printed
//! including its sign, so `{"head":"x*y","tail":"-1*y*z"}` is `xy - yz`.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::criterion::{CriterionReport, PairRemainder};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::marked::{JSet, MarkedPoly, WElem};
use crate::oracle::OracleReport;
use crate::poly::HomPoly;
use crate::reduce::{ReductionTrace, TraceStatus};
use crate::stratum::{Embedding, GenericMarkedSet, Generator, Provenance, Section, StratumIdeal};
use crate::text::{param_poly, rational, Vars};
use crate::{ParamPoly, QJSet, QPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
}

impl IdealFile {
    pub fn parse(&self) -> Result<(Vars, MonomialIdeal)> {
        let vars = Vars::new(self.vars.clone())?;
        let gens = self.gens.iter().map(|g| vars.parse_monomial(g)).collect::<Result<Vec<_>>>()?;
        Ok((vars.clone(), MonomialIdeal::new(vars.nvars(), gens)))
    }

    pub fn new(vars: &Vars, ideal: &MonomialIdeal) -> Self {
        IdealFile {
            vars: vars.names().to_vec(),
            gens: ideal.basis().iter().map(|m| vars.monomial(m)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedEntry {
    pub head: String,
    pub tail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedSetFile {
    pub vars: Vec<String>,
    pub ideal: Vec<String>,
    pub polys: Vec<MarkedEntry>,
}

impl MarkedSetFile {
    pub fn parse(&self) -> Result<(Vars, QJSet)> {
        let (vars, ideal) = IdealFile { vars: self.vars.clone(), gens: self.ideal.clone() }.parse()?;
        let mut polys = Vec::new();
        for e in &self.polys {
            let head = vars.parse_monomial(&e.head)?;
            let printed = vars.parse_poly(&e.tail)?;
            let tail = if printed.is_zero() {
                HomPoly::zero(vars.nvars(), head.degree())
            } else {
                printed.neg()
            };
            polys.push(MarkedPoly::new(head, tail));
        }
        Ok((vars, JSet::new(ideal, polys)?))
    }

    pub fn new(vars: &Vars, jset: &QJSet) -> Self {
        MarkedSetFile {
            vars: vars.names().to_vec(),
            ideal: jset.ideal().basis().iter().map(|m| vars.monomial(m)).collect(),
            polys: jset
                .polys()
                .iter()
                .map(|p| MarkedEntry { head: vars.monomial(&p.head), tail: vars.poly(&p.tail.neg()) })
                .collect(),
        }
    }
}

/// Reads either an ideal file or a marked-set file; an ideal becomes its
/// monomial marked set.
pub fn parse_input(text: &str) -> Result<(Vars, QJSet)> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if value.get("polys").is_some() {
        let f: MarkedSetFile = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        f.parse()
    } else {
        let f: IdealFile = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        let (vars, ideal) = f.parse()?;
        Ok((vars, JSet::monomial(ideal)))
    }
}

fn welem(vars: &Vars, ideal: &MonomialIdeal, w: &WElem) -> Value {
    json!({ "delta": vars.monomial(&w.delta), "head": vars.monomial(w.alpha(ideal)) })
}

pub fn trace_json(vars: &Vars, ideal: &MonomialIdeal, trace: &ReductionTrace<Rational>) -> Value {
    let steps: Vec<Value> = trace
        .steps
        .iter()
        .map(|s| {
            json!({
                "rewritten": vars.monomial(&s.rewritten),
                "rule": welem(vars, ideal, &s.rule),
                "coefficient": rational(&s.coefficient),
                "result": vars.poly(&s.result),
            })
        })
        .collect();
    let mut out = json!({
        "start": vars.poly(&trace.start),
        "steps": steps,
        "result": vars.poly(trace.last()),
    });
    match trace.status {
        TraceStatus::NormalForm => out["status"] = json!("normal_form"),
        TraceStatus::CycleDetected { start } => {
            out["status"] = json!("cycle_detected");
            out["cycle_start"] = json!(start);
        }
        TraceStatus::StepCapExceeded => out["status"] = json!("step_cap_exceeded"),
    }
    out
}

fn remainder_json(vars: &Vars, ideal: &MonomialIdeal, r: &PairRemainder<Rational>) -> Value {
    json!({
        "pair": [welem(vars, ideal, &r.pair.first), welem(vars, ideal, &r.pair.second)],
        "lcm": vars.monomial(&r.pair.lcm),
        "special": r.pair.special,
        "remainder": vars.poly(&r.remainder),
    })
}

pub fn criterion_json(vars: &Vars, ideal: &MonomialIdeal, report: &CriterionReport<Rational>) -> Value {
    json!({
        "verdict": report.verdict,
        "m0": report.m0,
        "remainders": report.remainders.iter().map(|r| remainder_json(vars, ideal, r)).collect::<Vec<_>>(),
    })
}

pub fn oracle_json(vars: &Vars, report: &OracleReport) -> Value {
    json!({
        "verdict": report.verdict,
        "degree": report.degree,
        "dim_i": report.dim_i,
        "dim_j": report.dim_j,
        "witness": report.witness.as_ref().map(|w: &QPoly| vars.poly(w)),
        "intersection_dim": report.intersection_dim,
    })
}

pub fn legend_json(vars: &Vars, gset: &GenericMarkedSet) -> Value {
    Value::Array(
        gset.cvars
            .iter()
            .map(|c| {
                json!({
                    "i": c.index,
                    "name": c.name(),
                    "alpha": vars.monomial(&c.alpha),
                    "gamma": vars.monomial(&c.gamma),
                    "lambda": c.lambda.external(),
                })
            })
            .collect(),
    )
}

pub fn param_string(gset: &GenericMarkedSet, p: &ParamPoly) -> String {
    param_poly(p, |v| gset.name(v))
}

fn lambda_json(gset: &GenericMarkedSet, p: &ParamPoly) -> Value {
    match gset.lambda_degree(p) {
        Some(l) => json!(l.external()),
        None => Value::Null,
    }
}

fn provenance_json(vars: &Vars, ideal: &MonomialIdeal, p: &Provenance) -> Value {
    match p {
        Provenance::Reduction { first, second, monomial } => json!({
            "kind": "reduction",
            "pair": [welem(vars, ideal, first), welem(vars, ideal, second)],
            "monomial": vars.monomial(monomial),
        }),
        Provenance::Minor { degree, rows, cols } => json!({
            "kind": "minor",
            "degree": degree,
            "rows": rows.iter().map(|w| welem(vars, ideal, w)).collect::<Vec<_>>(),
            "cols": cols.iter().map(|m| vars.monomial(m)).collect::<Vec<_>>(),
        }),
    }
}

fn generator_json(vars: &Vars, gset: &GenericMarkedSet, g: &Generator) -> Value {
    json!({
        "poly": param_string(gset, &g.poly),
        "lambda": lambda_json(gset, &g.poly),
        "provenance": provenance_json(vars, gset.ideal(), &g.provenance),
    })
}

fn var_names(gset: &GenericMarkedSet, vs: &[u32]) -> Vec<String> {
    vs.iter().map(|&v| gset.name(v)).collect()
}

pub fn stratum_json(vars: &Vars, gset: &GenericMarkedSet, s: &StratumIdeal) -> Value {
    json!({
        "N": gset.n(),
        "cvars": legend_json(vars, gset),
        "vars": var_names(gset, &s.vars),
        "generators": s.generators.iter().map(|g| generator_json(vars, gset, g)).collect::<Vec<_>>(),
    })
}

pub fn section_json(vars: &Vars, gset: &GenericMarkedSet, s: &Section) -> Value {
    let mut out = stratum_json(vars, gset, &s.ideal);
    out["killed"] = json!(var_names(gset, &s.killed));
    out
}

/// The stratum report plus the embedding: `kept` lists the kept variables,
/// and `summary` carries the counts.
pub fn embedding_json(
    vars: &Vars,
    gset: &GenericMarkedSet,
    s: &StratumIdeal,
    e: &Embedding,
    tangent_dim: usize,
) -> Value {
    let mut out = stratum_json(vars, gset, s);
    out["kept"] = json!(var_names(gset, &e.kept));
    out["reduced"] = json!(e
        .generators
        .iter()
        .map(|g| json!({ "poly": param_string(gset, g), "lambda": lambda_json(gset, g), "degree": g.total_degree() }))
        .collect::<Vec<_>>());
    out["substitutions"] = json!(e
        .substitutions
        .iter()
        .map(|s| json!({ "var": gset.name(s.var), "value": param_string(gset, &s.value) }))
        .collect::<Vec<_>>());
    out["summary"] = summary_json(gset, e, tangent_dim);
    out
}

pub fn summary_json(gset: &GenericMarkedSet, e: &Embedding, tangent_dim: usize) -> Value {
    json!({
        "N": gset.n(),
        "tangent_dim": tangent_dim,
        "kept": e.kept.len(),
        "gen_degrees": e.degrees(),
        "complete": e.complete,
    })
}

/// Parses a point given as `{"c[i][j]": "p/q", ...}` (missing entries are 0)
/// or as a full array of `N` rationals.
pub fn parse_point(gset: &GenericMarkedSet, value: &Value) -> Result<Vec<Rational>> {
    use crate::scalar::ExactScalar;
    use num_traits::Zero;
    let scalar = |v: &Value| -> Result<Rational> {
        let parsed = match v {
            Value::String(s) => Rational::parse_exact(s),
            Value::Number(n) => Rational::parse_exact(&n.to_string()),
            _ => None,
        };
        parsed.ok_or_else(|| Error::Parse(format!("expected a rational, got {v}")))
    };
    match value {
        Value::Array(items) => {
            if items.len() != gset.n() {
                return Err(Error::LengthMismatch { expected: gset.n(), got: items.len() });
            }
            items.iter().map(scalar).collect()
        }
        Value::Object(map) => {
            let mut c = vec![Rational::zero(); gset.n()];
            for (k, v) in map {
                let cv = gset
                    .cvars
                    .iter()
                    .find(|cv| &cv.name() == k)
                    .ok_or_else(|| Error::Parse(format!("unknown coefficient variable `{k}`")))?;
                c[cv.index as usize] = scalar(v)?;
            }
            Ok(c)
        }
        _ => Err(Error::Parse("a point is an array or an object".into())),
    }
}

pub fn point_json(gset: &GenericMarkedSet, c: &[Rational]) -> Value {
    use num_traits::Zero;
    let mut map = serde_json::Map::new();
    for (cv, x) in gset.cvars.iter().zip(c) {
        if !x.is_zero() {
            map.insert(cv.name(), json!(rational(x)));
        }
    }
    Value::Object(map)
}

/// A specialized marked set, in file form.
pub fn specialized_json(vars: &Vars, jset: &QJSet) -> Value {
    serde_json::to_value(MarkedSetFile::new(vars, jset)).expect("plain data")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criterion::is_j_basis;

    const EX3: &str = r#"{"vars":["x","y","z"],"ideal":["x*y","z^2"],
        "polys":[{"head":"x*y","tail":"y*z"},{"head":"z^2","tail":"x*z"}]}"#;

    #[test]
    fn marked_set_round_trip() {
        let (vars, g) = parse_input(EX3).unwrap();
        assert_eq!(vars.poly(&g.poly(0).tail), "-y*z");
        let f = MarkedSetFile::new(&vars, &g);
        let text = serde_json::to_string(&f).unwrap();
        let (_, back) = parse_input(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn ideal_input_gives_monomial_set() {
        let (_, g) = parse_input(r#"{"vars":["x","y","z"],"gens":["x^2","x*y","x*z","y^2"]}"#).unwrap();
        assert!(is_j_basis(&g).unwrap().verdict);
        assert!(g.polys().iter().all(|p| p.tail.is_zero()));
    }

    #[test]
    fn parse_errors_are_not_refusals() {
        let e = parse_input("{").unwrap_err();
        assert!(!e.is_refusal());
        let e = parse_input(r#"{"vars":["x","y"],"gens":["w"]}"#).unwrap_err();
        assert!(!e.is_refusal());
    }
}
