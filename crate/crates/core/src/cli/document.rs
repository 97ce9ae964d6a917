//! JSON documents describing algebras, maps and functionals.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebras::BinaryAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Covector, Matrix, Vector};
use crate::scalars::{identifiers, parse_scalar, vars_from, Bindings, Scalar, Vars};
use crate::ternary::TernaryAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Binary,
    Ternary,
}

impl Kind {
    pub fn arity(self) -> usize {
        match self {
            Kind::Binary => 2,
            Kind::Ternary => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub basis: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub args: Vec<String>,
    pub value: Vec<Term>,
}

/// Serialized form. Scalars are always strings in the expression grammar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<String>,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    /// Square matrices as lists of rows; column `j` is the image of basis `j`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub functionals: BTreeMap<String, Vec<String>>,
    /// Expressions asserted to vanish.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub constraints: Vec<String>,
    /// Map names of the twist pair of a ternary algebra.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl Document {
    pub fn from_json(text: &str) -> Result<Document> {
        serde_json::from_str(text).map_err(|e| Error::Document {
            location: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Algebra {
    Binary(BinaryAlgebra),
    Ternary(TernaryAlgebra),
}

/// A validated document with every scalar parsed.
#[derive(Clone, Debug, PartialEq)]
pub struct Model {
    pub params: Vars,
    pub algebra: Algebra,
    pub maps: BTreeMap<String, Matrix>,
    pub functionals: BTreeMap<String, Covector>,
    pub constraints: Vec<(String, Scalar)>,
    pub twist_names: Option<[String; 2]>,
    pub provenance: Option<String>,
}

fn doc_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Document {
        location: location.into(),
        message: message.into(),
    }
}

fn parse_at(text: &str, params: &Vars, location: &str) -> Result<Scalar> {
    parse_scalar(text, params).map_err(|e| doc_err(location, e.to_string()))
}

impl Model {
    pub fn from_document(doc: &Document) -> Result<Model> {
        let n = doc.dim;
        if doc.basis.len() != n {
            return Err(doc_err(
                "basis",
                format!("{} names for dimension {n}", doc.basis.len()),
            ));
        }
        for (i, name) in doc.basis.iter().enumerate() {
            if doc.basis[..i].contains(name) {
                return Err(doc_err(format!("basis[{i}]"), format!("duplicate name {name}")));
            }
        }
        for (i, p) in doc.params.iter().enumerate() {
            if doc.params[..i].contains(p) || doc.basis.contains(p) {
                return Err(doc_err(format!("params[{i}]"), format!("duplicate name {p}")));
            }
        }
        let params = vars_from(doc.params.iter().cloned());
        let index = |name: &str, loc: &str| -> Result<usize> {
            doc.basis
                .iter()
                .position(|b| b == name)
                .ok_or_else(|| doc_err(loc, format!("unknown basis element {name}")))
        };

        let arity = doc.kind.arity();
        let mut binary = BinaryAlgebra::abelian(doc.basis.clone());
        let mut ternary = TernaryAlgebra::abelian(doc.basis.clone());
        let mut seen: Vec<Vec<usize>> = Vec::new();
        for (b, entry) in doc.brackets.iter().enumerate() {
            let loc = format!("brackets[{b}]");
            if entry.args.len() != arity {
                return Err(doc_err(
                    format!("{loc}.args"),
                    format!("expected {arity} arguments"),
                ));
            }
            let idx = entry
                .args
                .iter()
                .map(|a| index(a, &format!("{loc}.args")))
                .collect::<Result<Vec<_>>>()?;
            if idx.windows(2).any(|w| w[0] >= w[1]) {
                return Err(doc_err(
                    format!("{loc}.args"),
                    "arguments must be strictly increasing in basis order",
                ));
            }
            if seen.contains(&idx) {
                return Err(doc_err(format!("{loc}.args"), "bracket given twice"));
            }
            seen.push(idx.clone());
            let mut value = zero_vector(n);
            for (t, term) in entry.value.iter().enumerate() {
                let tloc = format!("{loc}.value[{t}]");
                let k = index(&term.basis, &format!("{tloc}.basis"))?;
                let c = parse_at(&term.coeff, &params, &format!("{tloc}.coeff"))?;
                value[k] = value[k].add(&c);
            }
            match doc.kind {
                Kind::Binary => binary.set_bracket(idx[0], idx[1], value)?,
                Kind::Ternary => ternary.set_bracket(idx[0], idx[1], idx[2], value)?,
            }
        }

        let mut maps = BTreeMap::new();
        for (name, rows) in &doc.maps {
            let loc = format!("maps.{name}");
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(doc_err(loc, format!("expected a {n}x{n} matrix")));
            }
            let mut entries = Vec::with_capacity(n * n);
            for (r, row) in rows.iter().enumerate() {
                for (c, text) in row.iter().enumerate() {
                    entries.push(parse_at(text, &params, &format!("{loc}[{r}][{c}]"))?);
                }
            }
            maps.insert(name.clone(), Matrix::new(n, n, entries)?);
        }

        let mut functionals = BTreeMap::new();
        for (name, entries) in &doc.functionals {
            let loc = format!("functionals.{name}");
            if entries.len() != n {
                return Err(doc_err(loc, format!("expected {n} entries")));
            }
            let v = entries
                .iter()
                .enumerate()
                .map(|(i, t)| parse_at(t, &params, &format!("{loc}[{i}]")))
                .collect::<Result<Vector>>()?;
            functionals.insert(name.clone(), Covector::new(v));
        }

        let constraints = doc
            .constraints
            .iter()
            .enumerate()
            .map(|(i, t)| Ok((t.clone(), parse_at(t, &params, &format!("constraints[{i}]"))?)))
            .collect::<Result<Vec<_>>>()?;

        let mut model = Model {
            params,
            algebra: Algebra::Binary(binary),
            maps,
            functionals,
            constraints,
            twist_names: None,
            provenance: doc.provenance.clone(),
        };
        match doc.kind {
            Kind::Binary => {
                if doc.twist.is_some() {
                    return Err(doc_err("twist", "only ternary documents carry a twist"));
                }
            }
            Kind::Ternary => {
                if let Some([a, b]) = &doc.twist {
                    let ma = model.map(a).map_err(|_| doc_err("twist", format!("unknown map {a}")))?;
                    let mb = model.map(b).map_err(|_| doc_err("twist", format!("unknown map {b}")))?;
                    ternary.set_twist(ma, mb)?;
                }
                model.twist_names = doc.twist.clone();
                model.algebra = Algebra::Ternary(ternary);
            }
        }
        Ok(model)
    }

    pub fn parse_json(text: &str) -> Result<Model> {
        Model::from_document(&Document::from_json(text)?)
    }

    pub fn kind(&self) -> Kind {
        match self.algebra {
            Algebra::Binary(_) => Kind::Binary,
            Algebra::Ternary(_) => Kind::Ternary,
        }
    }

    pub fn basis(&self) -> &[String] {
        match &self.algebra {
            Algebra::Binary(a) => a.basis_names(),
            Algebra::Ternary(t) => t.basis_names(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis().len()
    }

    pub fn binary(&self) -> Result<&BinaryAlgebra> {
        match &self.algebra {
            Algebra::Binary(a) => Ok(a),
            Algebra::Ternary(_) => Err(Error::HypothesisFailure(
                "this command needs a binary algebra".into(),
            )),
        }
    }

    pub fn ternary(&self) -> Result<&TernaryAlgebra> {
        match &self.algebra {
            Algebra::Ternary(t) => Ok(t),
            Algebra::Binary(_) => Err(Error::HypothesisFailure(
                "this command needs a ternary algebra".into(),
            )),
        }
    }

    /// A named map; `id` and `zero` are built in unless the document
    /// defines them.
    pub fn map(&self, name: &str) -> Result<Matrix> {
        let n = self.dim();
        match self.maps.get(name) {
            Some(m) => Ok(m.clone()),
            None if name == "id" => Ok(Matrix::identity(n)),
            None if name == "zero" => Ok(Matrix::zeros(n, n)),
            None => Err(Error::UnknownName(name.to_string())),
        }
    }

    /// A named functional; `zero` is built in.
    pub fn functional(&self, name: &str) -> Result<Covector> {
        match self.functionals.get(name) {
            Some(f) => Ok(f.clone()),
            None if name == "zero" => Ok(Covector::zeros(self.dim())),
            None => Err(Error::UnknownName(name.to_string())),
        }
    }

    /// Substitutes `bindings` into every scalar.
    pub fn substitute(&self, bindings: &Bindings) -> Result<Model> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let mut f = |s: &Scalar| s.substitute(bindings);
        let algebra = match &self.algebra {
            Algebra::Binary(a) => Algebra::Binary(a.map_scalars(&mut f)?),
            Algebra::Ternary(t) => Algebra::Ternary(t.map_scalars(&mut f)?),
        };
        let maps = self
            .maps
            .iter()
            .map(|(k, m)| Ok((k.clone(), m.map_entries(&mut f)?)))
            .collect::<Result<_>>()?;
        let functionals = self
            .functionals
            .iter()
            .map(|(k, v)| {
                let e = v.entries().iter().map(&mut f).collect::<Result<Vector>>()?;
                Ok((k.clone(), Covector::new(e)))
            })
            .collect::<Result<_>>()?;
        Ok(Model {
            params: self.params.clone(),
            algebra,
            maps,
            functionals,
            constraints: Vec::new(),
            twist_names: self.twist_names.clone(),
            provenance: self.provenance.clone(),
        })
    }

    /// Solves the constraints one after another for a parameter each: the
    /// leftmost parameter in the constraint text that occurs linearly.
    pub fn constraint_bindings(&self) -> Result<Bindings> {
        let mut bindings = Bindings::new();
        for (i, (text, c)) in self.constraints.iter().enumerate() {
            let c = c.substitute(&bindings)?;
            if c.is_zero() {
                continue;
            }
            let num = c.numerator();
            let solved = identifiers(text).into_iter().find_map(|name| {
                let idx = num.vars().iter().position(|v| *v == name)?;
                let (coef, rest) = num.linear_in(idx)?;
                Some((name, coef, rest))
            });
            let Some((name, coef, rest)) = solved else {
                return Err(doc_err(
                    format!("constraints[{i}]"),
                    "no parameter occurs linearly",
                ));
            };
            let value = Scalar::from_fraction(-&rest, coef)?;
            let single = Bindings::from([(name.clone(), value.clone())]);
            for v in bindings.values_mut() {
                *v = v.substitute(&single)?;
            }
            bindings.insert(name, value);
        }
        Ok(bindings)
    }

    /// The model with its constraints substituted away, and the bindings used.
    pub fn constrained(&self) -> Result<(Model, Bindings)> {
        let b = self.constraint_bindings()?;
        let mut m = self.substitute(&b)?;
        m.constraints.clear();
        Ok((m, b))
    }

    pub fn to_document(&self) -> Document {
        let basis = self.basis().to_vec();
        let n = basis.len();
        let terms = |v: &Vector| -> Vec<Term> {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| Term {
                    basis: basis[k].clone(),
                    coeff: c.to_string(),
                })
                .collect()
        };
        let mut brackets = Vec::new();
        match &self.algebra {
            Algebra::Binary(a) => {
                for i in 0..n {
                    for j in i + 1..n {
                        let v = a.structure_constants(i, j);
                        if v.iter().any(|c| !c.is_zero()) {
                            brackets.push(BracketEntry {
                                args: vec![basis[i].clone(), basis[j].clone()],
                                value: terms(v),
                            });
                        }
                    }
                }
            }
            Algebra::Ternary(t) => {
                for ([i, j, k], v) in t.nonzero_brackets() {
                    brackets.push(BracketEntry {
                        args: vec![basis[i].clone(), basis[j].clone(), basis[k].clone()],
                        value: terms(v),
                    });
                }
            }
        }
        Document {
            kind: self.kind(),
            params: self.params.iter().cloned().collect(),
            dim: n,
            basis: basis.clone(),
            brackets,
            maps: self
                .maps
                .iter()
                .map(|(k, m)| {
                    let rows = (0..n)
                        .map(|r| (0..n).map(|c| m.get(r, c).to_string()).collect())
                        .collect();
                    (k.clone(), rows)
                })
                .collect(),
            functionals: self
                .functionals
                .iter()
                .map(|(k, f)| (k.clone(), f.entries().iter().map(|s| s.to_string()).collect()))
                .collect(),
            // Kept as written: the text decides which parameter gets eliminated.
            constraints: self.constraints.iter().map(|(t, _)| t.clone()).collect(),
            twist: self.twist_names.clone(),
            provenance: self.provenance.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        self.to_document().to_json()
    }
}

/// Renders a coordinate vector as a linear combination of basis names.
pub fn render_vector(v: &[Scalar], basis: &[String]) -> String {
    let mut out = String::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let coef = if c.is_one() {
            String::new()
        } else if text == "-1" {
            "-".to_string()
        } else if c.is_constant() || !text.contains([' ', '+']) {
            format!("{text}*")
        } else {
            format!("({text})*")
        };
        if out.is_empty() {
            out.push_str(&coef);
        } else if let Some(rest) = coef.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&coef);
        }
        out.push_str(&basis[k]);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
