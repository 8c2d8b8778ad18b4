//! Identity sets as JSON, LaTeX or plain text.
//!
//! A term is `[num, den, [factor, ...]]` with one factor per symbol:
//!
//! ```text
//! ["a", i, e]         a_i^e
//! ["wp", [i,j,..], e] wp_ij..^e
//! ["x", e] ["y", e]   the generic point
//! ["x", m, e] ...     x_m, likewise "y"
//! ["l", i, e] ["k", i, e] ["h", [i,j], e] ["r", e]
//! ```
//!
//! Integers beyond 64 bits are written as decimal strings.

use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{Identity, IdentitySet, Source, Variables};
use crate::poly::{Monomial, Poly};
use crate::rational::Rational;
use crate::symbol::{Symbol, SymbolKind};
use crate::{Error, Result};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

fn int_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn factor_value(s: Symbol, e: u32) -> Value {
    match s.kind() {
        SymbolKind::Coeff(i) => json!(["a", i, e]),
        SymbolKind::Wp(idx) => json!(["wp", idx, e]),
        SymbolKind::X => json!(["x", e]),
        SymbolKind::Y => json!(["y", e]),
        SymbolKind::PointX(m) => json!(["x", m, e]),
        SymbolKind::PointY(m) => json!(["y", m, e]),
        SymbolKind::BorderL(i) => json!(["l", i, e]),
        SymbolKind::BorderK(i) => json!(["k", i, e]),
        SymbolKind::Matrix(i, j) => json!(["h", [i, j], e]),
        SymbolKind::Root => json!(["r", e]),
    }
}

/// The term list of `p`.
pub fn terms_value(p: &Poly) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|(m, c)| {
                let factors: Vec<Value> = m.pairs().iter().map(|(s, e)| factor_value(*s, *e)).collect();
                json!([int_value(c.numer()), int_value(c.denom()), factors])
            })
            .collect(),
    )
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvariantViolation(format!("term encoding: {}", msg.into()))
}

fn int_from(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad(format!("{n} is not an integer"))),
        Value::String(s) => s.parse().map_err(|_| bad(format!("{s:?} is not an integer"))),
        _ => Err(bad(format!("{v} is not an integer"))),
    }
}

fn small(v: &Value) -> Result<u64> {
    v.as_u64().ok_or_else(|| bad(format!("{v} is not a small index")))
}

fn index(v: &Value) -> Result<u8> {
    small(v).and_then(|n| u8::try_from(n).map_err(|_| bad(format!("{n} out of range"))))
}

fn factor_from(v: &Value) -> Result<(Symbol, u32)> {
    let a = v.as_array().ok_or_else(|| bad("factor is not an array"))?;
    let tag = a.first().and_then(Value::as_str).ok_or_else(|| bad("factor without tag"))?;
    let e = small(a.last().ok_or_else(|| bad("empty factor"))?)? as u32;
    let s = match (tag, a.len()) {
        ("a", 3) => Symbol::a(index(&a[1])?),
        ("wp", 3) => {
            let idx = a[1].as_array().ok_or_else(|| bad("wp indices"))?.iter().map(index).collect::<Result<Vec<u8>>>()?;
            Symbol::wp(&idx)
        }
        ("x", 2) => Symbol::x(),
        ("y", 2) => Symbol::y(),
        ("x", 3) => Symbol::point_x(index(&a[1])?),
        ("y", 3) => Symbol::point_y(index(&a[1])?),
        ("l", 3) => Symbol::l(index(&a[1])?),
        ("k", 3) => Symbol::k(index(&a[1])?),
        ("h", 3) => {
            let ij = a[1].as_array().ok_or_else(|| bad("h indices"))?;
            if ij.len() != 2 {
                return Err(bad("h needs two indices"));
            }
            Symbol::matrix(index(&ij[0])?, index(&ij[1])?)
        }
        ("r", 2) => Symbol::root(),
        _ => return Err(bad(format!("unknown factor {v}"))),
    };
    Ok((s, e))
}

/// Inverse of [`terms_value`].
pub fn poly_from_terms(v: &Value) -> Result<Poly> {
    let terms = v.as_array().ok_or_else(|| bad("terms is not an array"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(|| bad("term is not [num, den, factors]"))?;
        let den = int_from(&t[1])?;
        if den == BigInt::from(0) {
            return Err(Error::DivisionByZero);
        }
        let c = Rational::new(int_from(&t[0])?, den);
        let factors = t[2].as_array().ok_or_else(|| bad("factors"))?.iter().map(factor_from).collect::<Result<Vec<_>>>()?;
        out.push((Monomial::from_pairs(factors), c));
    }
    Ok(Poly::from_terms(out))
}

#[derive(Serialize)]
pub struct IdentityRecord {
    pub name: String,
    pub genus: u8,
    pub weight: Option<i32>,
    pub multiplet_id: Option<String>,
    pub source: Source,
    pub origin: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Canonical text of the polynomial that vanishes.
    pub relation: String,
    pub terms: Value,
}

impl From<&Identity> for IdentityRecord {
    fn from(id: &Identity) -> Self {
        IdentityRecord {
            name: id.name.clone(),
            genus: id.genus,
            weight: id.weight,
            multiplet_id: id.multiplet_id.clone(),
            source: id.source,
            origin: id.origin.clone(),
            note: id.note.clone(),
            relation: id.relation.to_string(),
            terms: terms_value(&id.relation),
        }
    }
}

#[derive(Serialize)]
struct SetDocument<'a> {
    set: &'a str,
    genus: u8,
    variables: Variables,
    count: usize,
    identities: Vec<IdentityRecord>,
}

pub fn to_json(set: &IdentitySet) -> String {
    let doc = SetDocument {
        set: &set.name,
        genus: set.genus,
        variables: set.variables,
        count: set.len(),
        identities: set.members.iter().map(IdentityRecord::from).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

/// The relations of a JSON document written by [`to_json`], by name.
pub fn parse_json(s: &str) -> Result<Vec<(String, Poly)>> {
    let v: Value = serde_json::from_str(s).map_err(|e| bad(e.to_string()))?;
    let ids = v["identities"].as_array().ok_or_else(|| bad("no identities"))?;
    ids.iter()
        .map(|r| {
            let name = r["name"].as_str().ok_or_else(|| bad("record without name"))?.to_string();
            Ok((name, poly_from_terms(&r["terms"])?))
        })
        .collect()
}

fn latex_symbol(s: Symbol, vars: Variables) -> String {
    match (s.kind(), vars) {
        (SymbolKind::Wp(idx), Variables::Baker) if idx.len() == 2 => {
            format!("\\wp^{{\\mathfrak B}}_{{{}{}}}", idx[0], idx[1])
        }
        _ => s.latex(),
    }
}

fn latex_monomial(m: &Monomial, vars: Variables) -> String {
    m.pairs()
        .iter()
        .map(|(s, e)| {
            let base = latex_symbol(*s, vars);
            if *e == 1 {
                base
            } else if base.contains('^') {
                format!("{{{base}}}^{{{e}}}")
            } else {
                format!("{base}^{{{e}}}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// `p` in LaTeX, as `\wp_{ijk}` and `a_i`.
pub fn poly_latex(p: &Poly, vars: Variables) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        out.push_str(match (n, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let abs = c.abs();
        let coef = if abs.is_integer() {
            abs.to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
        };
        if m.is_one() {
            out.push_str(&coef);
        } else {
            if !abs.is_one() {
                out.push_str(&coef);
                out.push(' ');
            }
            out.push_str(&latex_monomial(m, vars));
        }
    }
    out
}

pub fn to_latex(set: &IdentitySet) -> String {
    let mut out = format!("% {} (genus {}, {} identities)\n", set.name, set.genus, set.len());
    for id in &set.members {
        out.push_str(&format!(
            "\\begin{{equation}}\n% {} [{}; {}]\n{} = 0\n\\end{{equation}}\n",
            id.name,
            id.source,
            id.origin,
            poly_latex(&id.relation, set.variables)
        ));
    }
    out
}

pub fn to_text(set: &IdentitySet) -> String {
    let mut out = String::new();
    for id in &set.members {
        let weight = id.weight.map(|w| w.to_string()).unwrap_or_else(|| "-".into());
        out.push_str(&format!("{}\tweight={}\t{}\t{} = 0\n", id.name, weight, id.source, id.relation));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

pub fn render(set: &IdentitySet, format: Format) -> String {
    match format {
        Format::Json => to_json(set),
        Format::Latex => to_latex(set),
        Format::Text => to_text(set),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_set;
    use crate::poly::p;

    #[test]
    fn term_encoding() {
        let q = p("-1/4*a0*wp[1,1]^2 + 3*x2*y1 - h[2,5]*r + l3*k1");
        let v = terms_value(&q);
        assert_eq!(poly_from_terms(&v).unwrap(), q);
        let lead = terms_value(&p("a0^2*wp[1,1]"));
        assert_eq!(lead, json!([[1, 1, [["a", 0, 2], ["wp", [1, 1], 1]]]]));
    }

    #[test]
    fn big_coefficients_are_strings() {
        let q = Poly::constant(Rational::new(BigInt::from(10).pow(30), 7));
        let v = terms_value(&q);
        assert!(v[0][0].is_string());
        assert_eq!(poly_from_terms(&v).unwrap(), q);
    }

    #[test]
    fn json_round_trip() {
        let set = catalog_set(2, "bilinear").unwrap();
        let back = parse_json(&to_json(&set)).unwrap();
        assert_eq!(back.len(), 4);
        for (m, (name, q)) in set.members.iter().zip(back) {
            assert_eq!(m.name, name);
            assert_eq!(m.relation, q);
        }
    }

    #[test]
    fn latex_notation() {
        assert_eq!(poly_latex(&p("-1/2*a4*wp[1,3] + wp[1,1,3,3]"), Variables::Covariant), "-\\frac{1}{2} a_{4} \\wp_{13} + \\wp_{1133}");
        assert_eq!(poly_latex(&p("wp[2,3]^2"), Variables::Baker), "{\\wp^{\\mathfrak B}_{23}}^{2}");
    }
}
