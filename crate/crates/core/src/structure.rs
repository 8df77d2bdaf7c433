//! Algebras, coalgebras, convolution calculus, weak Hopf algebras and
//! groupoid algebras.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linmap::{LinMap, Space};
use crate::report::Report;

/// An algebra `(A, η, μ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    pub space: Space,
    /// η: K → A
    pub unit: LinMap,
    /// μ: A⊗A → A
    pub mult: LinMap,
}

impl Algebra {
    pub fn new(space: Space, unit: LinMap, mult: LinMap) -> Algebra {
        assert_eq!(unit.dom(), &Space::unit());
        assert_eq!(unit.cod(), &space);
        assert_eq!(mult.dom(), &space.tensor(&space));
        assert_eq!(mult.cod(), &space);
        Algebra { space, unit, mult }
    }

    pub fn field(&self) -> FieldSpec {
        self.unit.field()
    }

    pub fn id(&self) -> LinMap {
        LinMap::identity(&self.space, self.field())
    }

    pub fn is_commutative(&self) -> bool {
        let c = LinMap::symmetry(&self.space, &self.space, self.field());
        self.mult.o(&c) == self.mult
    }
}

/// A coalgebra `(D, ε, δ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalgebra {
    pub space: Space,
    /// ε: D → K
    pub counit: LinMap,
    /// δ: D → D⊗D
    pub comult: LinMap,
}

impl Coalgebra {
    pub fn new(space: Space, counit: LinMap, comult: LinMap) -> Coalgebra {
        assert_eq!(counit.dom(), &space);
        assert_eq!(counit.cod(), &Space::unit());
        assert_eq!(comult.dom(), &space);
        assert_eq!(comult.cod(), &space.tensor(&space));
        Coalgebra { space, counit, comult }
    }

    pub fn field(&self) -> FieldSpec {
        self.counit.field()
    }

    pub fn id(&self) -> LinMap {
        LinMap::identity(&self.space, self.field())
    }

    pub fn is_cocommutative(&self) -> bool {
        let c = LinMap::symmetry(&self.space, &self.space, self.field());
        c.o(&self.comult) == self.comult
    }
}

/// Tensor-product algebra `A⊗B` with `μ_{A⊗B} = (μ_A⊗μ_B)∘(A⊗c_{B,A}⊗B)`.
pub fn tensor_algebra(a: &Algebra, b: &Algebra) -> Algebra {
    let field = a.field();
    let c = LinMap::symmetry(&b.space, &a.space, field);
    let mult = a.mult.x(&b.mult).o(&a.id().x(&c).x(&b.id()));
    Algebra::new(a.space.tensor(&b.space), a.unit.x(&b.unit), mult)
}

/// Tensor-product coalgebra `D⊗E` with `δ_{D⊗E} = (D⊗c_{D,E}⊗E)∘(δ_D⊗δ_E)`.
pub fn tensor_coalgebra(d: &Coalgebra, e: &Coalgebra) -> Coalgebra {
    let field = d.field();
    let c = LinMap::symmetry(&d.space, &e.space, field);
    let comult = d.id().x(&c).x(&e.id()).o(&d.comult.x(&e.comult));
    Coalgebra::new(d.space.tensor(&e.space), d.counit.x(&e.counit), comult)
}

/// `n`-fold tensor power of a coalgebra (left fold; coassociativity makes the
/// fold order immaterial).
pub fn tensor_power_coalgebra(d: &Coalgebra, n: usize) -> Coalgebra {
    assert!(n >= 1);
    let mut acc = d.clone();
    for _ in 1..n {
        acc = tensor_coalgebra(&acc, d);
    }
    acc
}

/// Convolution product `α∧β = μ_A ∘ (α⊗β) ∘ δ_B` of maps `B → A`.
pub fn convolution(alpha: &LinMap, beta: &LinMap, b: &Coalgebra, a: &Algebra) -> LinMap {
    assert_eq!(alpha.dom(), &b.space, "convolution: left factor domain");
    assert_eq!(beta.dom(), &b.space, "convolution: right factor domain");
    assert_eq!(alpha.cod(), &a.space, "convolution: left factor codomain");
    assert_eq!(beta.cod(), &a.space, "convolution: right factor codomain");
    a.mult.o(&alpha.x(beta)).o(&b.comult)
}

pub fn verify_algebra(a: &Algebra) -> Report {
    let mut r = Report::new(&format!("algebra axioms on {}", a.space.id()));
    let id = a.id();
    let left = a.mult.o(&id.x(&a.unit));
    let right = a.mult.o(&a.unit.x(&id));
    r.check_eq("alg.unit.right", &left, &id);
    r.check_eq("alg.unit.left", &right, &id);
    r.check_eq(
        "alg.assoc",
        &a.mult.o(&id.x(&a.mult)),
        &a.mult.o(&a.mult.x(&id)),
    );
    r
}

pub fn verify_coalgebra(d: &Coalgebra) -> Report {
    let mut r = Report::new(&format!("coalgebra axioms on {}", d.space.id()));
    let id = d.id();
    r.check_eq("coalg.counit.left", &d.counit.x(&id).o(&d.comult), &id);
    r.check_eq("coalg.counit.right", &id.x(&d.counit).o(&d.comult), &id);
    r.check_eq(
        "coalg.coassoc",
        &d.comult.x(&id).o(&d.comult),
        &id.x(&d.comult).o(&d.comult),
    );
    r
}

/// A weak Hopf algebra with its four cached projections.
#[derive(Debug, Clone, Default)]
struct LazyCaches {
    coalg2: std::sync::OnceLock<Coalgebra>,
    coalg3: std::sync::OnceLock<Coalgebra>,
}

#[derive(Debug, Clone)]
pub struct WeakHopfAlgebra {
    pub alg: Algebra,
    pub coalg: Coalgebra,
    /// λ: H → H
    pub antipode: LinMap,
    pi_l: LinMap,
    pi_r: LinMap,
    pi_l_bar: LinMap,
    pi_r_bar: LinMap,
    caches: std::sync::Arc<LazyCaches>,
}

impl WeakHopfAlgebra {
    /// Assembles the structure and computes the projection cache from the
    /// defining formulas. Axioms are *checked* by [`verify_weak_hopf`].
    pub fn new(alg: Algebra, coalg: Coalgebra, antipode: LinMap) -> WeakHopfAlgebra {
        assert_eq!(alg.space, coalg.space, "algebra and coalgebra must share the space");
        assert_eq!(antipode.dom(), &alg.space);
        assert_eq!(antipode.cod(), &alg.space);
        let field = alg.field();
        let h = LinMap::identity(&alg.space, field);
        let c = LinMap::symmetry(&alg.space, &alg.space, field);
        let eps_mu = coalg.counit.o(&alg.mult);
        let delta_eta = coalg.comult.o(&alg.unit);
        let pi_l = eps_mu.x(&h).o(&h.x(&c)).o(&delta_eta.x(&h));
        let pi_r = h.x(&eps_mu).o(&c.x(&h)).o(&h.x(&delta_eta));
        let pi_l_bar = h.x(&eps_mu).o(&delta_eta.x(&h));
        let pi_r_bar = eps_mu.x(&h).o(&h.x(&delta_eta));
        WeakHopfAlgebra {
            alg,
            coalg,
            antipode,
            pi_l,
            pi_r,
            pi_l_bar,
            pi_r_bar,
            caches: std::sync::Arc::new(LazyCaches::default()),
        }
    }

    pub fn space(&self) -> &Space {
        &self.alg.space
    }
    pub fn field(&self) -> FieldSpec {
        self.alg.field()
    }
    pub fn id(&self) -> LinMap {
        self.alg.id()
    }
    pub fn mu(&self) -> &LinMap {
        &self.alg.mult
    }
    pub fn eta(&self) -> &LinMap {
        &self.alg.unit
    }
    pub fn delta(&self) -> &LinMap {
        &self.coalg.comult
    }
    pub fn eps(&self) -> &LinMap {
        &self.coalg.counit
    }
    pub fn lambda(&self) -> &LinMap {
        &self.antipode
    }
    pub fn pi_l(&self) -> &LinMap {
        &self.pi_l
    }
    pub fn pi_r(&self) -> &LinMap {
        &self.pi_r
    }
    pub fn pi_l_bar(&self) -> &LinMap {
        &self.pi_l_bar
    }
    pub fn pi_r_bar(&self) -> &LinMap {
        &self.pi_r_bar
    }

    /// The symmetry `c_{H,H}`.
    pub fn c_hh(&self) -> LinMap {
        LinMap::symmetry(self.space(), self.space(), self.field())
    }

    pub fn eps_mu(&self) -> LinMap {
        self.eps().o(self.mu())
    }

    pub fn delta_eta(&self) -> LinMap {
        self.delta().o(self.eta())
    }

    /// The coalgebra `H⊗H` (computed once, shared by clones).
    pub fn coalg2(&self) -> Coalgebra {
        self.caches
            .coalg2
            .get_or_init(|| tensor_coalgebra(&self.coalg, &self.coalg))
            .clone()
    }

    /// The coalgebra `H⊗H⊗H`.
    pub fn coalg3(&self) -> Coalgebra {
        self.caches
            .coalg3
            .get_or_init(|| tensor_coalgebra(&self.coalg2(), &self.coalg))
            .clone()
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalg.is_cocommutative()
    }

    /// Convolution of endo-morphism-shaped maps `H → A`.
    pub fn conv(&self, alpha: &LinMap, beta: &LinMap, target: &Algebra) -> LinMap {
        convolution(alpha, beta, &self.coalg, target)
    }

    /// Does `δ∘η = η⊗η` hold (the ordinary Hopf case)?
    pub fn is_hopf_unit(&self) -> bool {
        self.delta_eta() == self.eta().x(self.eta())
    }
}

/// The four projections, in the order `(Π^L, Π^R, Π̄^L, Π̄^R)`.
pub fn projections(h: &WeakHopfAlgebra) -> (LinMap, LinMap, LinMap, LinMap) {
    (
        h.pi_l().clone(),
        h.pi_r().clone(),
        h.pi_l_bar().clone(),
        h.pi_r_bar().clone(),
    )
}

/// Checks the weak Hopf axioms (a1)–(a4), the antipode properties, the cached
/// projections against their defining formulas, and the convolution-unit
/// identities `Π^L = id∧λ`, `Π^R = λ∧id`.
pub fn verify_weak_hopf(h: &WeakHopfAlgebra) -> Report {
    let mut r = Report::new(&format!("weak Hopf axioms on {}", h.space().id()));
    r.absorb(verify_algebra(&h.alg));
    r.absorb(verify_coalgebra(&h.coalg));

    let id = h.id();
    let c = h.c_hh();
    let mu = h.mu();
    let delta = h.delta();
    let eps = h.eps();
    let eta = h.eta();
    let lam = h.lambda();
    let eps_mu = h.eps_mu();
    let delta_eta = h.delta_eta();
    let delta2 = h.coalg2().comult;

    // (a1)
    r.check_eq("a1", &delta.o(mu), &mu.x(mu).o(&delta2));

    // (a2), both lines
    let lhs_a2 = eps_mu.o(&mu.x(&id));
    let rhs_a2_1 = eps.x(eps).o(&mu.x(mu)).o(&id.x(delta).x(&id));
    let rhs_a2_2 = eps.x(eps).o(&mu.x(mu)).o(&id.x(&c.o(delta)).x(&id));
    r.check_eq("a2.1", &lhs_a2, &rhs_a2_1);
    r.check_eq("a2.2", &lhs_a2, &rhs_a2_2);

    // (a3), both lines
    let lhs_a3 = delta.x(&id).o(&delta_eta);
    let rhs_a3_1 = id.x(mu).x(&id).o(&delta.x(delta)).o(&eta.x(eta));
    let rhs_a3_2 = id.x(&mu.o(&c)).x(&id).o(&delta.x(delta)).o(&eta.x(eta));
    r.check_eq("a3.1", &lhs_a3, &rhs_a3_1);
    r.check_eq("a3.2", &lhs_a3, &rhs_a3_2);

    // (a4)
    let id_conv_lam = h.conv(&id, lam, &h.alg);
    let lam_conv_id = h.conv(lam, &id, &h.alg);
    let pi_l_formula = eps_mu.x(&id).o(&id.x(&c)).o(&delta_eta.x(&id));
    let pi_r_formula = id.x(&eps_mu).o(&c.x(&id)).o(&id.x(&delta_eta));
    r.check_eq("a4-1", &id_conv_lam, &pi_l_formula);
    r.check_eq("a4-2", &lam_conv_id, &pi_r_formula);
    r.check_eq("a4-3", &h.conv(&h.conv(lam, &id, &h.alg), lam, &h.alg), lam);

    // antipode is antimultiplicative, anticomultiplicative, unit/counit invariant
    r.check_eq("antipode.antimult", &lam.o(mu), &mu.o(&lam.x(lam)).o(&c));
    r.check_eq("antipode.anticomult", &delta.o(lam), &c.o(&lam.x(lam)).o(delta));
    r.check_eq("antipode.unit", &lam.o(eta), eta);
    r.check_eq("antipode.counit", &eps.o(lam), eps);

    // cached projections equal their formulas…
    r.check_eq("cache.piL", h.pi_l(), &pi_l_formula);
    r.check_eq("cache.piR", h.pi_r(), &pi_r_formula);
    r.check_eq("cache.piLbar", h.pi_l_bar(), &id.x(&eps_mu).o(&delta_eta.x(&id)));
    r.check_eq("cache.piRbar", h.pi_r_bar(), &eps_mu.x(&id).o(&id.x(&delta_eta)));
    // …are idempotent…
    let idem = [h.pi_l(), h.pi_r(), h.pi_l_bar(), h.pi_r_bar()]
        .iter()
        .all(|p| p.o(p) == **p);
    r.push_bool("pi.idempotent", idem);
    // …and are the convolution units against the identity
    r.check_eq("propiedadesgeneralespiLR.L", &id_conv_lam, h.pi_l());
    r.check_eq("propiedadesgeneralespiLR.R", &lam_conv_id, h.pi_r());
    r.check_eq("id.L", &h.conv(h.pi_l(), h.pi_l(), &h.alg), h.pi_l());
    r.check_eq("id.R", &h.conv(h.pi_r(), h.pi_r(), &h.alg), h.pi_r());

    // unnumbered composition chains through the antipode
    r.check_eq("pi.lambda.1", &h.pi_l().o(lam), &h.pi_l().o(h.pi_r()));
    r.check_eq("pi.lambda.2", &h.pi_l().o(h.pi_r()), &lam.o(h.pi_r()));
    r.check_eq("pi.lambda.3", &h.pi_r().o(lam), &h.pi_r().o(h.pi_l()));
    r.check_eq("pi.lambda.4", &h.pi_r().o(h.pi_l()), &lam.o(h.pi_l()));

    r
}

/// The 24-identity projection catalog, each checked exactly.
pub fn verify_projection_identities(h: &WeakHopfAlgebra) -> Report {
    let mut r = Report::new(&format!("projection identities on {}", h.space().id()));
    let id = h.id();
    let c = h.c_hh();
    let mu = h.mu();
    let delta = h.delta();
    let lam = h.lambda();
    let eps_mu = h.eps_mu();
    let delta_eta = h.delta_eta();
    let (pl, pr, plb, prb) = (h.pi_l(), h.pi_r(), h.pi_l_bar(), h.pi_r_bar());

    r.check_eq("composiciones1.1", &pl.o(plb), pl);
    r.check_eq("composiciones1.2", &pl.o(prb), prb);
    r.check_eq("composiciones1.3", &pr.o(plb), plb);
    r.check_eq("composiciones1.4", &pr.o(prb), pr);

    r.check_eq("composiciones2.1", &plb.o(pl), plb);
    r.check_eq("composiciones2.2", &plb.o(pr), pr);
    r.check_eq("composiciones2.3", &prb.o(pl), pl);
    r.check_eq("composiciones2.4", &prb.o(pr), prb);

    r.check_eq("composiciones.1", pl, &prb.o(lam));
    r.check_eq("composiciones.2", pl, &lam.o(plb));
    r.check_eq("composiciones.3", pr, &plb.o(lam));
    r.check_eq("composiciones.4", pr, &lam.o(prb));

    r.check_eq(
        "PiLmu",
        &mu.o(&id.x(pl)),
        &eps_mu.x(&id).o(&id.x(&c)).o(&delta.x(&id)),
    );
    r.check_eq(
        "PiRmu",
        &mu.o(&pr.x(&id)),
        &id.x(&eps_mu).o(&c.x(&id)).o(&id.x(delta)),
    );
    r.check_eq("PiLbarramu", &mu.o(&id.x(plb)), &id.x(&eps_mu).o(&delta.x(&id)));
    r.check_eq("PiRbarramu", &mu.o(&prb.x(&id)), &eps_mu.x(&id).o(&id.x(delta)));

    r.check_eq(
        "deltaPIL",
        &id.x(pl).o(delta),
        &mu.x(&id).o(&id.x(&c)).o(&delta_eta.x(&id)),
    );
    r.check_eq(
        "deltaPIR",
        &pr.x(&id).o(delta),
        &id.x(mu).o(&c.x(&id)).o(&id.x(&delta_eta)),
    );
    r.check_eq("deltaPILbarra", &plb.x(&id).o(delta), &id.x(mu).o(&delta_eta.x(&id)));
    r.check_eq("deltaPIRbarra", &id.x(prb).o(delta), &mu.x(&id).o(&id.x(&delta_eta)));

    r.check_eq("PiLmuPiL", &pl.o(mu).o(&id.x(pl)), &pl.o(mu));
    r.check_eq("PiRmuPiR", &pr.o(mu).o(&pr.x(&id)), &pr.o(mu));
    r.check_eq("PiLdeltaPiL", &id.x(pl).o(delta).o(pl), &delta.o(pl));
    r.check_eq("PiRdeltaPiR", &pr.x(&id).o(delta).o(pr), &delta.o(pr));

    debug_assert_eq!(r.items.len(), 24);
    r
}

/// A finite groupoid: objects, morphisms with sources and targets, a partial
/// composition table and a total inversion.
#[derive(Debug, Clone)]
pub struct Groupoid {
    pub objects: Vec<String>,
    /// `(label, source, target)`, labels unique.
    pub morphisms: Vec<(String, String, String)>,
    /// `comp[(g, f)] = g∘f`, present exactly when `target(f) = source(g)`.
    pub comp: BTreeMap<(String, String), String>,
    /// `inv[g] = g⁻¹`.
    pub inv: BTreeMap<String, String>,
    /// `identity[x]` = the identity morphism at object `x`.
    pub identities: BTreeMap<String, String>,
}

impl Groupoid {
    /// Builds and validates a groupoid from its presentation.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<(String, String, String)>,
        comp: Vec<(String, String, String)>,
        inv: Vec<(String, String)>,
    ) -> Result<Groupoid> {
        let err = |context: String| Error::InvalidGroupoid { context };
        let object_set: BTreeSet<&String> = objects.iter().collect();
        if object_set.len() != objects.len() {
            return Err(err("duplicate object".into()));
        }
        let mut src = BTreeMap::new();
        let mut tgt = BTreeMap::new();
        for (m, s, t) in &morphisms {
            if !object_set.contains(s) || !object_set.contains(t) {
                return Err(err(format!("morphism {m} has undeclared endpoint")));
            }
            if src.insert(m.clone(), s.clone()).is_some() {
                return Err(err(format!("duplicate morphism {m}")));
            }
            tgt.insert(m.clone(), t.clone());
        }
        let mut table = BTreeMap::new();
        for (g, f, gf) in &comp {
            for m in [g, f, gf] {
                if !src.contains_key(m) {
                    return Err(err(format!("composition uses undeclared morphism {m}")));
                }
            }
            if tgt[f] != src[g] {
                return Err(err(format!("{g}∘{f} declared but target({f}) ≠ source({g})")));
            }
            if src[gf] != src[f] || tgt[gf] != tgt[g] {
                return Err(err(format!("{g}∘{f} = {gf} has wrong endpoints")));
            }
            if table.insert((g.clone(), f.clone()), gf.clone()).is_some() {
                return Err(err(format!("duplicate composition entry {g}∘{f}")));
            }
        }
        // the table must be total on composable pairs
        for (g, gs, _) in &morphisms {
            for (f, _, ft) in &morphisms {
                if ft == gs && !table.contains_key(&(g.clone(), f.clone())) {
                    return Err(err(format!("missing composition {g}∘{f}")));
                }
            }
        }
        // identities: for each object, a morphism e with e∘f = f and g∘e = g
        let mut identities = BTreeMap::new();
        for x in &objects {
            let mut found = None;
            'cand: for (e, es, et) in &morphisms {
                if es != x || et != x {
                    continue;
                }
                for (f, _, ft) in &morphisms {
                    if ft == x && table[&(e.clone(), f.clone())] != *f {
                        continue 'cand;
                    }
                }
                for (g, gs, _) in &morphisms {
                    if gs == x && table[&(g.clone(), e.clone())] != *g {
                        continue 'cand;
                    }
                }
                found = Some(e.clone());
                break;
            }
            match found {
                Some(e) => {
                    identities.insert(x.clone(), e);
                }
                None => return Err(err(format!("object {x} has no identity morphism"))),
            }
        }
        // associativity on all composable triples
        for (g, gs, _) in &morphisms {
            for (f, fs, ft) in &morphisms {
                if ft != gs {
                    continue;
                }
                for (e, _, et) in &morphisms {
                    if et != fs {
                        continue;
                    }
                    let left = &table[&(table[&(g.clone(), f.clone())].clone(), e.clone())];
                    let right = &table[&(g.clone(), table[&(f.clone(), e.clone())].clone())];
                    if left != right {
                        return Err(err(format!("associativity fails on ({g},{f},{e})")));
                    }
                }
            }
        }
        // inverses
        let inv_map: BTreeMap<String, String> = inv.into_iter().collect();
        for (m, s, t) in &morphisms {
            let Some(mi) = inv_map.get(m) else {
                return Err(err(format!("morphism {m} has no inverse entry")));
            };
            if src.get(mi) != Some(t) || tgt.get(mi) != Some(s) {
                return Err(err(format!("inverse of {m} has wrong endpoints")));
            }
            if table[&(mi.clone(), m.clone())] != identities[s] {
                return Err(err(format!("{mi}∘{m} is not the identity at {s}")));
            }
            if table[&(m.clone(), mi.clone())] != identities[t] {
                return Err(err(format!("{m}∘{mi} is not the identity at {t}")));
            }
        }
        Ok(Groupoid {
            objects,
            morphisms,
            comp: table,
            inv: inv_map,
            identities,
        })
    }

    /// Morphisms in canonical basis order: sorted by (source, target, label).
    pub fn canonical_basis(&self) -> Vec<(String, String, String)> {
        let mut ms = self.morphisms.clone();
        ms.sort_by(|a, b| (&a.1, &a.2, &a.0).cmp(&(&b.1, &b.2, &b.0)));
        ms
    }

    /// A one-object groupoid from a group's multiplication table.
    /// `mul[i][j]` is the index of `g_i g_j`; element 0 must be the unit.
    pub fn from_group(labels: &[&str], mul: &[Vec<usize>]) -> Result<Groupoid> {
        let n = labels.len();
        let objects = vec!["x".to_string()];
        let morphisms: Vec<_> = labels
            .iter()
            .map(|l| (l.to_string(), "x".to_string(), "x".to_string()))
            .collect();
        let mut comp = Vec::new();
        for i in 0..n {
            for j in 0..n {
                comp.push((
                    labels[i].to_string(),
                    labels[j].to_string(),
                    labels[mul[i][j]].to_string(),
                ));
            }
        }
        let mut inv = Vec::new();
        for i in 0..n {
            let j = (0..n).find(|&j| mul[i][j] == 0).ok_or(Error::InvalidGroupoid {
                context: format!("element {} has no inverse", labels[i]),
            })?;
            inv.push((labels[i].to_string(), labels[j].to_string()));
        }
        Groupoid::new(objects, morphisms, comp, inv)
    }
}

/// The groupoid algebra `kG`: product = composition-or-zero, `δ(g) = g⊗g`,
/// `ε(g) = 1`, `λ(g) = g⁻¹`, `η = Σ identities`.
pub fn groupoid_algebra(g: &Groupoid, field: FieldSpec) -> Result<WeakHopfAlgebra> {
    let basis = g.canonical_basis();
    let labels: Vec<String> = basis.iter().map(|(l, _, _)| l.clone()).collect();
    let index: BTreeMap<&String, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let n = labels.len();
    let space = Space::new("H", labels.clone());
    let k = Space::unit();

    let mut unit = LinMap::zero(&k, &space, field);
    for e in g.identities.values() {
        unit.set(index[e], 0, field.one());
    }

    let hh = space.tensor(&space);
    let mut mult = LinMap::zero(&hh, &space, field);
    for (i, gi) in labels.iter().enumerate() {
        for (j, fj) in labels.iter().enumerate() {
            if let Some(gf) = g.comp.get(&(gi.clone(), fj.clone())) {
                mult.set(index[gf], i * n + j, field.one());
            }
        }
    }

    let mut counit = LinMap::zero(&space, &k, field);
    for i in 0..n {
        counit.set(0, i, field.one());
    }

    let mut comult = LinMap::zero(&space, &hh, field);
    for i in 0..n {
        comult.set(i * n + i, i, field.one());
    }

    let mut antipode = LinMap::zero(&space, &space, field);
    for (i, gi) in labels.iter().enumerate() {
        antipode.set(index[&g.inv[gi]], i, field.one());
    }

    let alg = Algebra::new(space.clone(), unit, mult);
    let coalg = Coalgebra::new(space, counit, comult);
    Ok(WeakHopfAlgebra::new(alg, coalg, antipode))
}

/// Stock groupoids used throughout the test suites.
pub mod examples {
    use super::*;

    /// The trivial group.
    pub fn trivial_group() -> Groupoid {
        Groupoid::from_group(&["e"], &[vec![0]]).unwrap()
    }

    /// Z/2 = {e, g}.
    pub fn z2() -> Groupoid {
        Groupoid::from_group(&["e", "g"], &[vec![0, 1], vec![1, 0]]).unwrap()
    }

    /// Z/3 = {e, g, h} with g² = h.
    pub fn z3() -> Groupoid {
        Groupoid::from_group(
            &["e", "g", "h"],
            &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
        )
        .unwrap()
    }

    /// Z/4.
    pub fn z4() -> Groupoid {
        Groupoid::from_group(
            &["e", "a", "b", "c"],
            &[
                vec![0, 1, 2, 3],
                vec![1, 2, 3, 0],
                vec![2, 3, 0, 1],
                vec![3, 0, 1, 2],
            ],
        )
        .unwrap()
    }

    /// Klein four-group Z/2 × Z/2.
    pub fn klein() -> Groupoid {
        Groupoid::from_group(
            &["e", "a", "b", "c"],
            &[
                vec![0, 1, 2, 3],
                vec![1, 0, 3, 2],
                vec![2, 3, 0, 1],
                vec![3, 2, 1, 0],
            ],
        )
        .unwrap()
    }

    /// Two objects, only identity morphisms (the discrete groupoid).
    pub fn discrete_two() -> Groupoid {
        Groupoid::new(
            vec!["x".into(), "y".into()],
            vec![
                ("idx".into(), "x".into(), "x".into()),
                ("idy".into(), "y".into(), "y".into()),
            ],
            vec![
                ("idx".into(), "idx".into(), "idx".into()),
                ("idy".into(), "idy".into(), "idy".into()),
            ],
            vec![("idx".into(), "idx".into()), ("idy".into(), "idy".into())],
        )
        .unwrap()
    }

    /// The indiscrete groupoid on two objects: 2 identities plus `u: x→y`
    /// and `v: y→x` with `v = u⁻¹`.
    pub fn indiscrete_two() -> Groupoid {
        Groupoid::new(
            vec!["x".into(), "y".into()],
            vec![
                ("idx".into(), "x".into(), "x".into()),
                ("idy".into(), "y".into(), "y".into()),
                ("u".into(), "x".into(), "y".into()),
                ("v".into(), "y".into(), "x".into()),
            ],
            vec![
                ("idx".into(), "idx".into(), "idx".into()),
                ("idy".into(), "idy".into(), "idy".into()),
                ("u".into(), "idx".into(), "u".into()),
                ("idy".into(), "u".into(), "u".into()),
                ("v".into(), "idy".into(), "v".into()),
                ("idx".into(), "v".into(), "v".into()),
                ("v".into(), "u".into(), "idx".into()),
                ("u".into(), "v".into(), "idy".into()),
            ],
            vec![
                ("idx".into(), "idx".into()),
                ("idy".into(), "idy".into()),
                ("u".into(), "v".into()),
                ("v".into(), "u".into()),
            ],
        )
        .unwrap()
    }

    /// Disjoint union of Z/2 at `x` and the trivial group at `y`.
    pub fn z2_plus_point() -> Groupoid {
        Groupoid::new(
            vec!["x".into(), "y".into()],
            vec![
                ("idx".into(), "x".into(), "x".into()),
                ("g".into(), "x".into(), "x".into()),
                ("idy".into(), "y".into(), "y".into()),
            ],
            vec![
                ("idx".into(), "idx".into(), "idx".into()),
                ("idx".into(), "g".into(), "g".into()),
                ("g".into(), "idx".into(), "g".into()),
                ("g".into(), "g".into(), "idx".into()),
                ("idy".into(), "idy".into(), "idy".into()),
            ],
            vec![
                ("idx".into(), "idx".into()),
                ("g".into(), "g".into()),
                ("idy".into(), "idy".into()),
            ],
        )
        .unwrap()
    }

    /// Disjoint union of Z/3 at `x` and the trivial group at `y`.
    pub fn z3_plus_point() -> Groupoid {
        let mut morphisms = vec![
            ("e".to_string(), "x".to_string(), "x".to_string()),
            ("g".to_string(), "x".to_string(), "x".to_string()),
            ("h".to_string(), "x".to_string(), "x".to_string()),
            ("idy".to_string(), "y".to_string(), "y".to_string()),
        ];
        morphisms.sort();
        let z3 = [["e", "g", "h"], ["g", "h", "e"], ["h", "e", "g"]];
        let names = ["e", "g", "h"];
        let mut comp = vec![("idy".to_string(), "idy".to_string(), "idy".to_string())];
        for i in 0..3 {
            for j in 0..3 {
                comp.push((names[i].to_string(), names[j].to_string(), z3[i][j].to_string()));
            }
        }
        Groupoid::new(
            vec!["x".into(), "y".into()],
            morphisms,
            comp,
            vec![
                ("e".into(), "e".into()),
                ("g".into(), "h".into()),
                ("h".into(), "g".into()),
                ("idy".into(), "idy".into()),
            ],
        )
        .unwrap()
    }

    /// Disjoint union of Z/2 at `x` and Z/2 at `y`.
    pub fn z2_plus_z2() -> Groupoid {
        Groupoid::new(
            vec!["x".into(), "y".into()],
            vec![
                ("idx".into(), "x".into(), "x".into()),
                ("a".into(), "x".into(), "x".into()),
                ("idy".into(), "y".into(), "y".into()),
                ("b".into(), "y".into(), "y".into()),
            ],
            vec![
                ("idx".into(), "idx".into(), "idx".into()),
                ("idx".into(), "a".into(), "a".into()),
                ("a".into(), "idx".into(), "a".into()),
                ("a".into(), "a".into(), "idx".into()),
                ("idy".into(), "idy".into(), "idy".into()),
                ("idy".into(), "b".into(), "b".into()),
                ("b".into(), "idy".into(), "b".into()),
                ("b".into(), "b".into(), "idy".into()),
            ],
            vec![
                ("idx".into(), "idx".into()),
                ("a".into(), "a".into()),
                ("idy".into(), "idy".into()),
                ("b".into(), "b".into()),
            ],
        )
        .unwrap()
    }

    /// Every groupoid with at most 2 objects and at most 4 morphisms,
    /// up to isomorphism.
    pub fn all_small_groupoids() -> Vec<(&'static str, Groupoid)> {
        vec![
            ("trivial", trivial_group()),
            ("Z2", z2()),
            ("Z3", z3()),
            ("Z4", z4()),
            ("Klein", klein()),
            ("discrete2", discrete_two()),
            ("indiscrete2", indiscrete_two()),
            ("Z2+pt", z2_plus_point()),
            ("Z3+pt", z3_plus_point()),
            ("Z2+Z2", z2_plus_z2()),
        ]
    }
}
