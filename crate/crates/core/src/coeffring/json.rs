//! JSON form of a series: the truncation context plus the term list in
//! canonical order, coefficients as `"num/den"` strings.

use indexmap::IndexMap;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Monomial, Rational, Series, TruncationContext, Var};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub beta: u32,
    pub vars: IndexMap<String, u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub context: TruncationContext,
    pub terms: Vec<TermJson>,
}

pub(crate) fn format_rational(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl From<&Series> for SeriesJson {
    fn from(s: &Series) -> Self {
        let terms = s
            .terms()
            .map(|(m, c)| TermJson {
                coeff: format_rational(c),
                beta: m.beta(),
                vars: m.exps().iter().map(|&(v, e)| (v.to_string(), e)).collect(),
            })
            .collect();
        SeriesJson {
            context: s.ctx(),
            terms,
        }
    }
}

impl TryFrom<&SeriesJson> for Series {
    type Error = Error;

    fn try_from(j: &SeriesJson) -> Result<Series> {
        let mut s = Series::zero(j.context);
        for t in &j.terms {
            let mut exps = Vec::with_capacity(t.vars.len());
            for (name, &e) in &t.vars {
                let v: Var = name.parse()?;
                if !j.context.contains(v) {
                    return Err(Error::VariableOutOfRange {
                        var: v,
                        ctx: j.context,
                    });
                }
                exps.push((v, e));
            }
            s.add_term(Monomial::new(t.beta, exps), parse_rational(&t.coeff)?);
        }
        Ok(s)
    }
}

impl Serialize for Series {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let j = SeriesJson::deserialize(deserializer)?;
        Series::try_from(&j).map_err(serde::de::Error::custom)
    }
}
