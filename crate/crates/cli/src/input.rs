//! The JSON input document: field declaration, groupoid presentations,
//! sparse structure-constant blocks, and the ordered task list.

use std::collections::BTreeMap;

use serde::Deserialize;
use whopf_core::comodule::ComoduleAlgebra;
use whopf_core::crossed::CrossedSystem;
use whopf_core::field::{FieldSpec, Scalar};
use whopf_core::linmap::{LinMap, Space};
use whopf_core::maction::{solve_reg2, WeakModuleAlgebra};
use whopf_core::structure::{groupoid_algebra, Algebra, Coalgebra, Groupoid, WeakHopfAlgebra};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub field: FieldDecl,
    #[serde(default)]
    pub groupoids: BTreeMap<String, GroupoidDecl>,
    #[serde(default)]
    pub structures: BTreeMap<String, StructureDecl>,
    #[serde(default)]
    pub tasks: Vec<TaskDecl>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDecl {
    pub field: String,
    #[serde(default)]
    pub p: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupoidDecl {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDecl>,
    pub comp: Vec<(String, String, String)>,
    pub inv: Vec<(String, String)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDecl {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

/// A scalar literal: an integer over GF(p), `"a/b"` (or `"a"`) over ℚ.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum ScalarLit {
    Int(i64),
    Str(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDecl {
    pub basis: Vec<String>,
    /// μ(e_i⊗e_j) += s·e_k, entries (i, j, k, s)
    #[serde(default)]
    pub mult: Vec<(String, String, String, ScalarLit)>,
    /// η(1) += s·e_k, entries (k, s)
    #[serde(default)]
    pub unit: Vec<(String, ScalarLit)>,
    /// δ(e_i) += s·(e_j⊗e_k), entries (i, j, k, s)
    #[serde(default)]
    pub comult: Vec<(String, String, String, ScalarLit)>,
    /// ε(e_i) = s, entries (i, s)
    #[serde(default)]
    pub counit: Vec<(String, ScalarLit)>,
    /// λ(e_i) += s·e_j, entries (i, j, s)
    #[serde(default)]
    pub antipode: Vec<(String, String, ScalarLit)>,
    /// ρ(a) += s·(b⊗h), entries (a, b, h, s); h-labels live in the Hopf basis
    #[serde(default)]
    pub coaction: Vec<(String, String, String, ScalarLit)>,
    /// φ(h⊗a) += s·b, entries (h, a, b, s)
    #[serde(default)]
    pub action: Vec<(String, String, String, ScalarLit)>,
    /// σ(h1⊗h2) += s·a, entries (h1, h2, a, s)
    #[serde(default)]
    pub cocycle: Vec<(String, String, String, ScalarLit)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskDecl {
    pub op: String,
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub hopf: Option<String>,
    #[serde(default)]
    pub algebra: Option<String>,
    #[serde(default)]
    pub groupoid: Option<String>,
    #[serde(default)]
    pub lhs: Option<String>,
    #[serde(default)]
    pub rhs: Option<String>,
}

/// A validation failure with the location that caused it.
#[derive(Debug)]
pub struct InputError {
    pub location: String,
    pub message: String,
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

pub type InputResult<T> = Result<T, InputError>;

fn err<T>(location: impl Into<String>, message: impl std::fmt::Display) -> InputResult<T> {
    Err(InputError {
        location: location.into(),
        message: message.to_string(),
    })
}

impl FieldDecl {
    pub fn resolve(&self) -> InputResult<FieldSpec> {
        match self.field.as_str() {
            "Q" => Ok(FieldSpec::Rationals),
            "GF" => match self.p {
                Some(p) => FieldSpec::prime(p).or_else(|e| err("field.p", e)),
                None => err("field.p", "GF requires a prime modulus p"),
            },
            other => err("field.field", format!("unknown field kind {other:?}")),
        }
    }
}

/// Resolves names from the document into verified kernel objects.
pub struct Resolver<'a> {
    pub doc: &'a InputDocument,
    pub field: FieldSpec,
    pub max_enum: u64,
}

impl<'a> Resolver<'a> {
    pub fn new(doc: &'a InputDocument, field: FieldSpec, max_enum: u64) -> Resolver<'a> {
        Resolver {
            doc,
            field,
            max_enum,
        }
    }

    fn scalar(&self, loc: &str, lit: &ScalarLit) -> InputResult<Scalar> {
        match lit {
            ScalarLit::Int(n) => Ok(self.field.from_i64(*n)),
            ScalarLit::Str(s) => self.field.parse_scalar(s).or_else(|e| err(loc, e)),
        }
    }

    fn structure(&self, name: &str) -> InputResult<&'a StructureDecl> {
        self.doc
            .structures
            .get(name)
            .ok_or(())
            .or_else(|_| err(format!("structures.{name}"), "name does not resolve"))
    }

    /// Builds a sparse map from labelled entries. `dom`/`cod` index spaces by
    /// basis label; each entry contributes one coefficient.
    fn sparse_map<E>(
        &self,
        loc: &str,
        dom: &Space,
        cod: &Space,
        entries: &[E],
        index: impl Fn(&E) -> InputResult<(Vec<String>, Vec<String>, Scalar)>,
    ) -> InputResult<LinMap> {
        let dom_labels = dom.basis_labels();
        let cod_labels = cod.basis_labels();
        let mut m = LinMap::zero(dom, cod, self.field);
        for e in entries {
            let (dlabels, clabels, s) = index(e)?;
            // an empty label tuple addresses the basis vector of the unit K
            let dlabel = if dlabels.is_empty() { "1".to_string() } else { dlabels.join("⊗") };
            let clabel = if clabels.is_empty() { "1".to_string() } else { clabels.join("⊗") };
            let Some(j) = dom_labels.iter().position(|l| *l == dlabel) else {
                return err(loc, format!("label {dlabel:?} not in basis of {}", dom.id()));
            };
            let Some(i) = cod_labels.iter().position(|l| *l == clabel) else {
                return err(loc, format!("label {clabel:?} not in basis of {}", cod.id()));
            };
            let cur = m.get(i, j).add(&s);
            m.set(i, j, cur);
        }
        Ok(m)
    }

    pub fn groupoid(&self, name: &str) -> InputResult<Groupoid> {
        let decl = self
            .doc
            .groupoids
            .get(name)
            .ok_or(())
            .or_else(|_| err(format!("groupoids.{name}"), "name does not resolve"))?;
        Groupoid::new(
            decl.objects.clone(),
            decl.morphisms
                .iter()
                .map(|m| (m.id.clone(), m.src.clone(), m.tgt.clone()))
                .collect(),
            decl.comp.clone(),
            decl.inv.clone(),
        )
        .or_else(|e| err(format!("groupoids.{name}"), e))
    }

    /// A weak Hopf algebra: a groupoid name (preferred) or a full
    /// structure-constant block.
    pub fn hopf(&self, name: &str) -> InputResult<WeakHopfAlgebra> {
        if self.doc.groupoids.contains_key(name) {
            let g = self.groupoid(name)?;
            return groupoid_algebra(&g, self.field)
                .or_else(|e| err(format!("groupoids.{name}"), e));
        }
        let decl = self.structure(name)?;
        let loc = format!("structures.{name}");
        let space = Space::new(name, decl.basis.clone());
        let alg = self.algebra_from(&loc, &space, decl)?;
        if decl.comult.is_empty() || decl.counit.is_empty() || decl.antipode.is_empty() {
            return err(&loc, "a weak Hopf structure needs comult, counit and antipode");
        }
        let comult = self.sparse_map(
            &loc,
            &space,
            &space.tensor(&space),
            &decl.comult,
            |(i, j, k, s)| {
                Ok((
                    vec![i.clone()],
                    vec![j.clone(), k.clone()],
                    self.scalar(&loc, s)?,
                ))
            },
        )?;
        let counit = self.sparse_map(&loc, &space, &Space::unit(), &decl.counit, |(i, s)| {
            Ok((vec![i.clone()], vec![], self.scalar(&loc, s)?))
        })?;
        let antipode = self.sparse_map(&loc, &space, &space, &decl.antipode, |(i, j, s)| {
            Ok((vec![i.clone()], vec![j.clone()], self.scalar(&loc, s)?))
        })?;
        let coalg = Coalgebra::new(space, counit, comult);
        Ok(WeakHopfAlgebra::new(alg, coalg, antipode))
    }

    fn algebra_from(
        &self,
        loc: &str,
        space: &Space,
        decl: &StructureDecl,
    ) -> InputResult<Algebra> {
        if decl.mult.is_empty() || decl.unit.is_empty() {
            return err(loc, "an algebra needs mult and unit entries");
        }
        let mult = self.sparse_map(
            loc,
            &space.tensor(space),
            space,
            &decl.mult,
            |(i, j, k, s)| {
                Ok((
                    vec![i.clone(), j.clone()],
                    vec![k.clone()],
                    self.scalar(loc, s)?,
                ))
            },
        )?;
        let unit = self.sparse_map(loc, &Space::unit(), space, &decl.unit, |(k, s)| {
            Ok((vec![], vec![k.clone()], self.scalar(loc, s)?))
        })?;
        Ok(Algebra::new(space.clone(), unit, mult))
    }

    pub fn algebra(&self, name: &str) -> InputResult<Algebra> {
        let decl = self.structure(name)?;
        let loc = format!("structures.{name}");
        let space = Space::new(name, decl.basis.clone());
        self.algebra_from(&loc, &space, decl)
    }

    /// A right H-comodule algebra: either the regular one (`algebra == hopf`)
    /// or an algebra block carrying a `coaction`.
    pub fn comodule(&self, alg_name: &str, hopf_name: &str) -> InputResult<ComoduleAlgebra> {
        let h = self.hopf(hopf_name)?;
        if alg_name == hopf_name {
            return Ok(ComoduleAlgebra::regular(&h));
        }
        let a = self.algebra(alg_name)?;
        let decl = self.structure(alg_name)?;
        let loc = format!("structures.{alg_name}.coaction");
        if decl.coaction.is_empty() {
            return err(&loc, "comodule task needs a coaction block");
        }
        let rho = self.sparse_map(
            &loc,
            &a.space,
            &a.space.tensor(h.space()),
            &decl.coaction,
            |(x, b, hh, s)| {
                Ok((
                    vec![x.clone()],
                    vec![b.clone(), hh.clone()],
                    self.scalar(&loc, s)?,
                ))
            },
        )?;
        Ok(ComoduleAlgebra::new(a, h, rho))
    }

    /// A crossed system `(φ, σ)` from an algebra block carrying `action`
    /// and `cocycle`; the cocycle inverse is solved exactly.
    pub fn crossed_system(&self, hopf_name: &str, alg_name: &str) -> InputResult<CrossedSystem> {
        let h = self.hopf(hopf_name)?;
        let a = self.algebra(alg_name)?;
        let decl = self.structure(alg_name)?;
        let loc = format!("structures.{alg_name}");
        if decl.action.is_empty() {
            return err(format!("{loc}.action"), "crossed task needs an action block");
        }
        let phi = self.sparse_map(
            &format!("{loc}.action"),
            &h.space().tensor(&a.space),
            &a.space,
            &decl.action,
            |(hh, x, b, s)| {
                Ok((
                    vec![hh.clone(), x.clone()],
                    vec![b.clone()],
                    self.scalar(&loc, s)?,
                ))
            },
        )?;
        let m = WeakModuleAlgebra::new(a.clone(), h.clone(), phi);
        let sigma_map = if decl.cocycle.is_empty() {
            m.u2().clone()
        } else {
            self.sparse_map(
                &format!("{loc}.cocycle"),
                &h.space().tensor(h.space()),
                &a.space,
                &decl.cocycle,
                |(h1, h2, x, s)| {
                    Ok((
                        vec![h1.clone(), h2.clone()],
                        vec![x.clone()],
                        self.scalar(&loc, s)?,
                    ))
                },
            )?
        };
        let sigma = solve_reg2(&m, &sigma_map, self.max_enum)
            .or_else(|e| err(format!("{loc}.cocycle"), e))?;
        Ok(CrossedSystem::new(m, sigma))
    }
}
