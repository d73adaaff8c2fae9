//! JSON forms of distributions and sets. Rationals and scalars are strings
//! (`"p/q"`, `"a+b*sqrt2"`); each delta comb is the string `"[c0,c1,...]"`.

use std::collections::{BTreeMap, BTreeSet};

use distalg_core::scalar::parse_rational;
use distalg_core::{Bound, Dist, Error, Interval, MSet, Poly, Rational, RawDist, Scalar};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistJson {
    pub breakpoints: Vec<String>,
    pub pieces: Vec<Vec<String>>,
    pub deltas: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntervalJson {
    pub lo: String,
    pub hi: String,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MSetJson {
    pub intervals: Vec<IntervalJson>,
    pub add: Vec<String>,
    pub remove: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error(transparent)]
    Value(#[from] Error),
}

fn poly_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(Scalar::to_string).collect()
}

fn parse_poly(cs: &[String]) -> Result<Poly, Error> {
    Ok(Poly::new(cs.iter().map(|c| c.parse()).collect::<Result<_, _>>()?))
}

fn comb_string(cs: &[Scalar]) -> String {
    let parts: Vec<String> = cs.iter().map(Scalar::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn parse_comb(s: &str) -> Result<Vec<Scalar>, Error> {
    let inner =
        s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(|| {
            Error::Representation(format!("delta coefficients must look like [c0,c1,...], got {s:?}"))
        })?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(str::parse).collect()
}

impl From<&Dist> for DistJson {
    fn from(f: &Dist) -> Self {
        DistJson {
            breakpoints: f.breakpoints().iter().map(Rational::to_string).collect(),
            pieces: f.pieces().iter().map(poly_strings).collect(),
            deltas: f.delta_terms().map(|(x, d)| (x.to_string(), comb_string(d.coeffs()))).collect(),
        }
    }
}

impl DistJson {
    pub fn to_dist(&self) -> Result<Dist, Error> {
        if self.pieces.len() != self.breakpoints.len() + 1 {
            return Err(Error::Representation(format!(
                "{} breakpoints need {} pieces, got {}",
                self.breakpoints.len(),
                self.breakpoints.len() + 1,
                self.pieces.len()
            )));
        }
        let mut raw = RawDist { left: parse_poly(&self.pieces[0])?, ..RawDist::default() };
        for (x, p) in self.breakpoints.iter().zip(&self.pieces[1..]) {
            raw.seams.push((parse_rational(x)?, parse_poly(p)?));
        }
        for (x, cs) in &self.deltas {
            raw.deltas.push((parse_rational(x)?, parse_comb(cs)?));
        }
        raw.normalize()
    }
}

fn bound_string(b: &Bound) -> String {
    b.to_string()
}

fn parse_bound(s: &str) -> Result<Bound, Error> {
    match s.trim() {
        "-inf" => Ok(Bound::NegInf),
        "inf" | "+inf" => Ok(Bound::PosInf),
        other => Ok(Bound::Finite(parse_rational(other)?)),
    }
}

impl From<&MSet> for MSetJson {
    fn from(m: &MSet) -> Self {
        MSetJson {
            intervals: m
                .intervals()
                .iter()
                .map(|i| IntervalJson {
                    lo: bound_string(&i.lo),
                    hi: bound_string(&i.hi),
                    lo_closed: i.lo_closed,
                    hi_closed: i.hi_closed,
                })
                .collect(),
            add: m.added().iter().map(Rational::to_string).collect(),
            remove: m.removed().iter().map(Rational::to_string).collect(),
        }
    }
}

impl MSetJson {
    pub fn to_mset(&self) -> Result<MSet, Error> {
        let intervals = self
            .intervals
            .iter()
            .map(|i| Ok(Interval::new(parse_bound(&i.lo)?, parse_bound(&i.hi)?, i.lo_closed, i.hi_closed)))
            .collect::<Result<Vec<_>, Error>>()?;
        let points = |v: &[String]| v.iter().map(|p| parse_rational(p)).collect::<Result<BTreeSet<_>, _>>();
        Ok(MSet::from_parts(intervals, points(&self.add)?, points(&self.remove)?))
    }
}

pub fn dist_to_json(f: &Dist) -> String {
    serde_json::to_string(&DistJson::from(f)).expect("string maps always serialize")
}

pub fn dist_from_json(s: &str) -> Result<Dist, JsonError> {
    Ok(serde_json::from_str::<DistJson>(s)?.to_dist()?)
}

pub fn mset_to_json(m: &MSet) -> String {
    serde_json::to_string(&MSetJson::from(m)).expect("string fields always serialize")
}

pub fn mset_from_json(s: &str) -> Result<MSet, JsonError> {
    Ok(serde_json::from_str::<MSetJson>(s)?.to_mset()?)
}
