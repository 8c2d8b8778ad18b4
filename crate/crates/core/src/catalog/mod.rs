//! Every identity set: transcribed displays, f-generated multiplets and the
//! mechanically derived four-index relations.
//!
//! Relations are stored as the polynomial that must vanish (`lhs - rhs`).

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::matrix::PolyMatrix;
use crate::poly::{p, Poly};
use crate::rational::Rational;
use crate::sl2::{self, closure_check, Derivation};
use crate::{Error, Result};

pub mod baker;
pub mod genus1;
pub mod genus2;
pub mod genus3;
pub mod mechanical;
pub mod printed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    PaperAsPrinted,
    Generated,
    OracleCorrected,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::PaperAsPrinted => "paper-as-printed",
            Source::Generated => "generated",
            Source::OracleCorrected => "oracle-corrected",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Identity {
    pub name: String,
    pub genus: u8,
    pub relation: Poly,
    /// h-eigenvalue; `None` when the relation is not weight-homogeneous.
    pub weight: Option<i32>,
    pub multiplet_id: Option<String>,
    pub source: Source,
    /// Short provenance tag, e.g. `appendix-1:3` or `f^2(P9)`.
    pub origin: String,
    pub note: Option<String>,
    /// Unexpanded form of a determinantal relation.
    pub det_form: Option<Arc<DetForm>>,
}

/// `plus + scale * det(matrix)`.
#[derive(Clone, Debug)]
pub struct DetForm {
    pub matrix: PolyMatrix,
    pub scale: Rational,
    pub plus: Poly,
}

impl DetForm {
    pub fn det(matrix: PolyMatrix) -> Self {
        DetForm {
            matrix,
            scale: Rational::one(),
            plus: Poly::zero(),
        }
    }

    pub fn expand(&self) -> Result<Poly> {
        Ok(&self.plus + &self.matrix.det()?.scale(&self.scale))
    }
}

impl Identity {
    pub fn new(name: impl Into<String>, genus: u8, relation: Poly, source: Source, origin: impl Into<String>) -> Self {
        let weight = sl2::weight(&relation, genus);
        Identity {
            name: name.into(),
            genus,
            relation,
            weight,
            multiplet_id: None,
            source,
            origin: origin.into(),
            note: None,
            det_form: None,
        }
    }

    pub fn with_det_form(mut self, form: DetForm) -> Self {
        self.det_form = Some(Arc::new(form));
        self
    }

    pub fn in_multiplet(mut self, id: impl Into<String>) -> Self {
        self.multiplet_id = Some(id.into());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// The two-index functions a set is written in.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variables {
    #[default]
    Covariant,
    /// Baker's `wp^B_ij = wp_ij - c a_k`, see [`baker`].
    Baker,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Closure {
    pub e: bool,
    pub f: bool,
}

#[derive(Clone, Debug)]
pub struct IdentitySet {
    pub name: String,
    pub genus: u8,
    pub members: Vec<Identity>,
    pub closure: Option<Closure>,
    pub variables: Variables,
}

impl IdentitySet {
    pub fn new(name: impl Into<String>, genus: u8, members: Vec<Identity>) -> Self {
        IdentitySet {
            name: name.into(),
            genus,
            members,
            closure: None,
            variables: Variables::Covariant,
        }
    }

    pub fn in_baker_variables(mut self) -> Self {
        self.variables = Variables::Baker;
        self
    }

    /// A member's relation rewritten in the covariant functions.
    pub fn covariant_relation(&self, id: &Identity) -> Poly {
        match self.variables {
            Variables::Covariant => id.relation.clone(),
            Variables::Baker => id.relation.substitute(&baker::baker_to_covariant()),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn relations(&self) -> Vec<Poly> {
        self.members.iter().map(|m| m.relation.clone()).collect()
    }

    /// Run the e and f closure checks and record the result.
    pub fn with_closure(mut self) -> Self {
        let rel = self.relations();
        let e = Derivation::e(self.genus).expect("catalog genus");
        let f = Derivation::f(self.genus).expect("catalog genus");
        self.closure = Some(Closure {
            e: closure_check(&rel, &e).closed(),
            f: closure_check(&rel, &f).closed(),
        });
        self
    }

    pub fn get(&self, name: &str) -> Option<&Identity> {
        self.members.iter().find(|m| m.name == name)
    }
}

/// `lhs - rhs` from two expressions in the text syntax.
pub fn rel(lhs: &str, rhs: &str) -> Poly {
    p(lhs) - p(rhs)
}

/// Wrap the members of an f-chain as identities of one multiplet.
pub fn multiplet_identities(m: &sl2::Multiplet, id: &str, origin: &str) -> Vec<Identity> {
    m.members
        .iter()
        .enumerate()
        .map(|(i, r)| {
            Identity::new(format!("{id}({i})"), m.genus, r.clone(), Source::Generated, format!("f^{i}({origin})"))
                .in_multiplet(id)
        })
        .collect()
}

/// Names accepted by [`catalog_set`], per genus.
pub fn set_names(genus: u8) -> &'static [&'static str] {
    match genus {
        1 => &["ode", "second-order", "all"],
        2 => &["bilinear", "kummer", "quadratic", "fourindex", "fourindex-generated", "all"],
        3 => &[
            "P5",
            "linear",
            "P9",
            "P7",
            "quadratic-leading",
            "h-minors",
            "appendix1",
            "fourindex-generated",
            "appendix2",
            "appendix2-as-printed",
            "appendix2-transformed",
            "maintext",
            "all",
        ],
        _ => &[],
    }
}

/// Whether every member of the named set is expected to vanish. Printed
/// sets with known transcription errors are not.
pub fn expected_to_vanish(genus: u8, name: &str) -> bool {
    !(genus == 3
        && matches!(
            name,
            "appendix1" | "appendix2" | "appendix2-as-printed" | "appendix2-transformed" | "maintext"
        ))
}

/// Look up a named identity set.
pub fn catalog_set(genus: u8, name: &str) -> Result<IdentitySet> {
    sl2::check_genus(genus)?;
    let set = match (genus, name) {
        (1, "ode") => IdentitySet::new("ode", 1, vec![genus1::genus1_ode()]),
        (1, "second-order") => IdentitySet::new("second-order", 1, vec![genus1::genus1_second_order()?]),
        (2, "bilinear") => genus2::genus2_bilinear(),
        (2, "kummer") => IdentitySet::new("kummer", 2, vec![genus2::genus2_kummer()]),
        (2, "quadratic") => genus2::genus2_quadratic_products()?,
        (2, "fourindex") => genus2::genus2_fourindex()?,
        (2, "fourindex-generated") => genus2::genus2_fourindex_generated()?,
        (3, "P5") => genus3::genus3_p5()?.printed,
        (3, "linear") => genus3::genus3_linear(),
        (3, "P9") => genus3::named_multiplet_set("P9")?,
        (3, "P7") => genus3::named_multiplet_set("P7")?,
        (3, "quadratic-leading") => genus3::genus3_quadratic_leading()?,
        (3, "h-minors") => genus3::h_minor_set()?,
        (3, "appendix1") => printed::appendix1(),
        (3, "fourindex-generated") => mechanical::genus3_fourindex_generated()?.normalized,
        (3, "appendix2") => printed::appendix2(),
        (3, "appendix2-as-printed") => IdentitySet {
            name: "appendix2-as-printed".into(),
            ..printed::appendix2()
        },
        (3, "appendix2-transformed") => baker::appendix2_transformed(),
        (3, "maintext") => printed::main_text_fourindex(),
        (g, "all") => {
            let mut members = Vec::new();
            for n in set_names(g).iter().filter(|n| **n != "all" && expected_to_vanish(g, n)) {
                members.extend(catalog_set(g, n)?.members);
            }
            IdentitySet::new("all", g, members)
        }
        _ => return Err(Error::UnknownSet(format!("{name} (genus {genus})"))),
    };
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_set_is_an_error() {
        assert!(matches!(catalog_set(2, "nope"), Err(Error::UnknownSet(_))));
        assert!(matches!(catalog_set(5, "ode"), Err(Error::UnsupportedGenus(5))));
    }

    #[test]
    fn relation_helper() {
        assert_eq!(rel("wp[1,1]^2", "a0"), p("wp[1,1]^2 - a0"));
    }
}
