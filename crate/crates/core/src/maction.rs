//! Weak left H-module algebras, the Reg solvers at arities 1 and 2, the Ω²
//! idempotent, centers, and the module structures induced on A_H and Z(A_H).

use crate::comodule::{filter_affine_unique, CleftCertificate};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linmap::{factor_through, kernel, solve_linear_map_system, LinMap, Space};
use crate::report::Report;
use crate::structure::{tensor_power_coalgebra, Algebra, Coalgebra, WeakHopfAlgebra};

/// A weak left H-module algebra `(A, φ_A)` with its cached weak units
/// `u1 = φ∘(H⊗η_A)` and `u2 = φ∘(H⊗u1)`.
#[derive(Debug, Clone)]
pub struct WeakModuleAlgebra {
    pub a: Algebra,
    pub h: WeakHopfAlgebra,
    /// φ_A: H⊗A → A
    pub phi: LinMap,
    u1: LinMap,
    u2: LinMap,
    strict: bool,
}

impl WeakModuleAlgebra {
    pub fn new(a: Algebra, h: WeakHopfAlgebra, phi: LinMap) -> WeakModuleAlgebra {
        assert_eq!(phi.dom(), &h.space().tensor(&a.space));
        assert_eq!(phi.cod(), &a.space);
        let u1 = phi.o(&h.id().x(&a.unit));
        let u2 = phi.o(&h.id().x(&u1));
        // strictness is always recomputed from (d3-1), never asserted by callers
        let strict = phi.o(&h.mu().x(&a.id())) == phi.o(&h.id().x(&phi));
        WeakModuleAlgebra {
            a,
            h,
            phi,
            u1,
            u2,
            strict,
        }
    }

    /// The trivial action `φ = ε⊗A`.
    pub fn trivial(a: Algebra, h: WeakHopfAlgebra) -> WeakModuleAlgebra {
        let phi = h.eps().x(&a.id());
        WeakModuleAlgebra::new(a, h, phi)
    }

    pub fn field(&self) -> FieldSpec {
        self.a.field()
    }
    pub fn u1(&self) -> &LinMap {
        &self.u1
    }
    pub fn u2(&self) -> &LinMap {
        &self.u2
    }
    pub fn is_strict(&self) -> bool {
        self.strict
    }

    /// Convolution of maps `H → A`.
    pub fn conv1(&self, alpha: &LinMap, beta: &LinMap) -> LinMap {
        self.h.conv(alpha, beta, &self.a)
    }

    /// Convolution of maps `H⊗H → A`.
    pub fn conv2(&self, alpha: &LinMap, beta: &LinMap) -> LinMap {
        crate::structure::convolution(alpha, beta, &self.h.coalg2(), &self.a)
    }
}

/// The idempotent `Ω^L = ((ε∘μ)⊗H⊗H)∘δ_{H⊗H}`.
pub fn omega_l(h: &WeakHopfAlgebra) -> LinMap {
    let idhh = LinMap::identity(&h.space().tensor(h.space()), h.field());
    h.eps_mu().x(&idhh).o(&h.coalg2().comult)
}

/// The idempotent `Ω^R = (H⊗H⊗(ε∘μ))∘δ_{H⊗H}`.
pub fn omega_r(h: &WeakHopfAlgebra) -> LinMap {
    let idhh = LinMap::identity(&h.space().tensor(h.space()), h.field());
    idhh.x(&h.eps_mu()).o(&h.coalg2().comult)
}

/// `Ω²` (as `Ω^L`), with the identity report: idempotency, `μ∘Ω = μ`, the
/// module-morphism factored forms, and — for cocommutative H — `Ω^L = Ω^R`
/// plus the comultiplication compatibility.
pub fn omega2(h: &WeakHopfAlgebra) -> (LinMap, Report) {
    let mut r = Report::new("Ω² identities");
    let ol = omega_l(h);
    let or = omega_r(h);
    let idh = h.id();
    let delta2 = h.coalg2().comult;
    r.push_bool("omega.idempotent", ol.o(&ol) == ol && or.o(&or) == or);
    r.push_bool(
        "omega.mu",
        h.mu().o(&ol) == *h.mu() && h.mu().o(&or) == *h.mu(),
    );
    let form1 = h.mu().o(&idh.x(h.pi_l())).x(&idh).o(&idh.x(h.delta()));
    let form2 = idh
        .x(&h.mu().o(&h.pi_r_bar().x(&idh)))
        .o(&h.c_hh().o(h.delta()).x(&idh));
    r.check_eq("omega-L-1.a", &ol, &form1);
    r.check_eq("omega-L-1.b", &ol, &form2);
    if h.is_cocommutative() {
        r.check_eq("omega.LR", &ol, &or);
        let idhh = LinMap::identity(&h.space().tensor(h.space()), h.field());
        r.check_eq("Omegadelta.a", &ol.x(&idhh).o(&delta2), &idhh.x(&ol).o(&delta2));
        r.check_eq("Omegadelta.b", &idhh.x(&ol).o(&delta2), &delta2.o(&ol));
    }
    (ol, r)
}

/// Checks (d1)–(d9) individually, reports strictness (d3-1), `u2 = u1∘μ`,
/// and — for cocommutative H — that `u1` factors through the center.
pub fn verify_weak_module_algebra(m: &WeakModuleAlgebra) -> Report {
    let mut r = Report::new(&format!(
        "weak module algebra {} over {}",
        m.a.space.id(),
        m.h.space().id()
    ));
    let a = &m.a;
    let h = &m.h;
    let phi = &m.phi;
    let ida = a.id();
    let idh = h.id();
    let c_ha = LinMap::symmetry(h.space(), &a.space, m.field());
    let c_aa = LinMap::symmetry(&a.space, &a.space, m.field());

    r.check_eq("d1", &phi.o(&h.eta().x(&ida)), &ida);
    let d2_rhs = a
        .mult
        .o(&phi.x(phi))
        .o(&idh.x(&c_ha).x(&ida))
        .o(&h.delta().x(&ida).x(&ida));
    r.check_eq("d2", &phi.o(&idh.x(&a.mult)), &d2_rhs);
    r.check_eq("d3", &phi.o(&h.mu().x(&a.unit)), &phi.o(&idh.x(m.u1())));
    r.check_eq("d4", &phi.o(&h.pi_l().x(&ida)), &a.mult.o(&m.u1().x(&ida)));
    r.check_eq(
        "d5",
        &phi.o(&h.pi_l_bar().x(&ida)),
        &a.mult.o(&c_aa).o(&m.u1().x(&ida)),
    );
    r.check_eq("d6", &phi.o(&h.pi_l().x(&a.unit)), m.u1());
    r.check_eq("d7", &phi.o(&h.pi_l_bar().x(&a.unit)), m.u1());
    r.check_eq("d8", m.u2(), &m.u1().x(&h.eps_mu()).o(&h.delta().x(&idh)));
    r.check_eq(
        "d9",
        m.u2(),
        &h.eps_mu()
            .x(m.u1())
            .o(&idh.x(&h.c_hh()))
            .o(&h.delta().x(&idh)),
    );
    // strictness (d3-1) is a reported value, not an axiom: a weak module
    // algebra may legitimately fail it, so it never fails the report
    r.push_bool(
        if m.is_strict() { "d3-1.strict" } else { "d3-1.weak" },
        true,
    );
    r.check_eq("u1-u2", m.u2(), &m.u1().o(h.mu()));
    if h.is_cocommutative() {
        let z = center(a);
        r.push_bool("u1.central", factor_through(m.u1(), &z.i_z).is_ok());
    }
    // ψ/∇ interplay identities that hold for every verified action
    let psi = psi_lift(m);
    r.check_eq(
        "nabla-fi",
        &a.mult.o(&m.u1().x(phi)).o(&h.delta().x(&ida)),
        phi,
    );
    r.check_eq(
        "eta-psi-varep",
        &ida.x(h.eps()).o(&psi).o(&idh.x(&a.unit)),
        m.u1(),
    );
    r
}

/// `ψ_H^A = (φ⊗H)∘(H⊗c_{H,A})∘(δ⊗A): H⊗A → A⊗H`.
pub fn psi_lift(m: &WeakModuleAlgebra) -> LinMap {
    let c_ha = LinMap::symmetry(m.h.space(), &m.a.space, m.field());
    m.phi
        .x(&m.h.id())
        .o(&m.h.id().x(&c_ha))
        .o(&m.h.delta().x(&m.a.id()))
}

/// A convolution-invertible map `h: H → A` in `Reg_φ(H, A)`.
#[derive(Debug, Clone)]
pub struct RegElement {
    pub map: LinMap,
    pub inv: LinMap,
}

/// A convolution-invertible map `σ: H⊗H → A` in `Reg_φ(H⊗H, A)`.
#[derive(Debug, Clone)]
pub struct RegCocycle {
    pub map: LinMap,
    pub inv: LinMap,
}

fn reg_coalgebra(m: &WeakModuleAlgebra, arity: usize) -> Coalgebra {
    match arity {
        1 => m.h.coalg.clone(),
        2 => m.h.coalg2(),
        3 => m.h.coalg3(),
        n => tensor_power_coalgebra(&m.h.coalg, n),
    }
}

/// Solves for the convolution inverse of `map` in `Reg_φ(H^{⊗arity}, A)`.
///
/// By associativity of convolution the sandwich conditions linearize on the
/// (e1)/(f1) solution set: `h∧x∧h = h` becomes the x-free test `u∧h = h`,
/// and `x∧h∧x = x` becomes `u∧x = x`. So the whole problem is one exact
/// linear solve; uniqueness of inverses forces a 0-dimensional family. The
/// quadratic filter remains only as a fallback should a degenerate family
/// ever appear.
pub fn solve_reg_inverse(
    m: &WeakModuleAlgebra,
    map: &LinMap,
    arity: usize,
    max_enum: u64,
) -> Result<LinMap> {
    let coalg = reg_coalgebra(m, arity);
    assert_eq!(map.dom(), &coalg.space);
    assert_eq!(map.cod(), &m.a.space);
    let unit = match arity {
        1 => m.u1().clone(),
        2 => m.u2().clone(),
        _ => unreachable!("arity 1 and 2 only"),
    };
    let conv = |x: &LinMap, y: &LinMap| crate::structure::convolution(x, y, &coalg, &m.a);
    if conv(&unit, map) != *map {
        // (e2)/(f2) cannot hold for any candidate inverse
        return Err(Error::NoInverse);
    }
    let right = |x: &LinMap| conv(map, x);
    let left = |x: &LinMap| conv(x, map);
    let absorb = |x: &LinMap| conv(&unit, x).sub(x);
    let zero = LinMap::zero(&coalg.space, &m.a.space, m.field());
    let fam = solve_linear_map_system(
        &coalg.space,
        &m.a.space,
        m.field(),
        &[&right, &left, &absorb],
        &[&unit, &unit, &zero],
    )
    .map_err(|_| Error::NoInverse)?;
    let pass = |x: &LinMap| conv(&conv(map, x), map) == *map && conv(&conv(x, map), x) == *x;
    filter_affine_unique(&fam, m.field(), max_enum, pass)
}

/// Solves `Reg_φ(H, A)` membership for `h`.
pub fn solve_reg1(m: &WeakModuleAlgebra, h: &LinMap, max_enum: u64) -> Result<RegElement> {
    let inv = solve_reg_inverse(m, h, 1, max_enum)?;
    Ok(RegElement {
        map: h.clone(),
        inv,
    })
}

/// Solves `Reg_φ(H⊗H, A)` membership for `σ`.
pub fn solve_reg2(m: &WeakModuleAlgebra, sigma: &LinMap, max_enum: u64) -> Result<RegCocycle> {
    let inv = solve_reg_inverse(m, sigma, 2, max_enum)?;
    Ok(RegCocycle {
        map: sigma.clone(),
        inv,
    })
}

/// Verifies (e1)–(e3) for a claimed arity-1 inverse.
pub fn verify_reg1(m: &WeakModuleAlgebra, e: &RegElement) -> Report {
    let mut r = Report::new("Reg(H,A) conditions");
    r.check_eq("e1.right", &m.conv1(&e.map, &e.inv), m.u1());
    r.check_eq("e1.left", &m.conv1(&e.inv, &e.map), m.u1());
    r.check_eq("e2", &m.conv1(&m.conv1(&e.map, &e.inv), &e.map), &e.map);
    r.check_eq("e3", &m.conv1(&m.conv1(&e.inv, &e.map), &e.inv), &e.inv);
    r
}

/// Verifies (f1)–(f3) for a claimed arity-2 inverse.
pub fn verify_reg2(m: &WeakModuleAlgebra, s: &RegCocycle) -> Report {
    let mut r = Report::new("Reg(H⊗H,A) conditions");
    r.check_eq("f1.right", &m.conv2(&s.map, &s.inv), m.u2());
    r.check_eq("f1.left", &m.conv2(&s.inv, &s.map), m.u2());
    r.check_eq("f2", &m.conv2(&m.conv2(&s.map, &s.inv), &s.map), &s.map);
    r.check_eq("f3", &m.conv2(&m.conv2(&s.inv, &s.map), &s.inv), &s.inv);
    r
}

/// Reports the normalization properties of a Reg element and verifies their
/// equivalence clusters, plus the unit correspondence with the inverse.
pub fn reg1_normalization_report(m: &WeakModuleAlgebra, e: &RegElement) -> Report {
    let mut r = Report::new("Reg(H,A) normalization equivalences");
    let h = &m.h;
    let heta = e.map.o(h.eta()) == m.a.unit;
    let hpil = e.map.o(h.pi_l()) == *m.u1();
    let hbarpil = e.map.o(h.pi_l_bar()) == *m.u1();
    r.push_bool("heta", heta);
    r.push_bool("hPiL", hpil);
    r.push_bool("hbarPiL", hbarpil);
    r.push_bool("cluster.eta-PiL", heta == hpil && hpil == hbarpil);
    if let Ok(lam_inv) = h.lambda().try_inverse() {
        let hpir = e.map.o(h.pi_r()) == m.u1().o(h.lambda());
        let hbarpir = e.map.o(h.pi_r_bar()) == m.u1().o(&lam_inv);
        r.push_bool("hPiR", hpir);
        r.push_bool("hbarPiR", hbarpir);
        r.push_bool("cluster.eta-PiR", heta == hpir && hpir == hbarpir);
    }
    // h∘η = η_A  ⟺  h⁻¹∘η = η_A
    let inv_eta = e.inv.o(h.eta()) == m.a.unit;
    r.push_bool("eta-inverse-iff", heta == inv_eta);
    r
}

/// Reports the normalization properties of a Reg cocycle, the left and right
/// equivalence clusters, and the inverse normalization correspondences.
pub fn reg2_normalization_report(m: &WeakModuleAlgebra, s: &RegCocycle) -> Report {
    let mut r = Report::new("Reg(H⊗H,A) normalization equivalences");
    let h = &m.h;
    let idh = h.id();
    let u1 = m.u1();
    let left_unit = |sig: &LinMap| sig.o(&h.eta().x(&idh)) == *u1;
    let right_unit = |sig: &LinMap| sig.o(&idh.x(h.eta())) == *u1;

    let sel = left_unit(&s.map);
    let spll = s.map.o(&h.pi_l().x(&idh)).o(h.delta()) == *u1;
    let splc = s.map.o(&h.c_hh()).o(&idh.x(h.pi_l_bar())).o(h.delta()) == *u1;
    r.push_bool("sigma-eta-l", sel);
    r.push_bool("sigma-PiL-l", spll);
    r.push_bool("sigma-PiL-c", splc);
    r.push_bool("cluster.left", sel == spll && spll == splc);

    let ser = right_unit(&s.map);
    let sprr = s.map.o(&idh.x(h.pi_r())).o(h.delta()) == *u1;
    let sprc = s.map.o(&h.c_hh()).o(&h.pi_r_bar().x(&idh)).o(h.delta()) == *u1;
    r.push_bool("sigma-eta-r", ser);
    r.push_bool("sigma-PiR-r", sprr);
    r.push_bool("sigma-PiR-r-c", sprc);
    r.push_bool("cluster.right", ser == sprr && sprr == sprc);

    // σ normalized on a side ⟺ σ⁻¹ normalized on that side
    r.push_bool("sigma-sigma-1.i", left_unit(&s.map) == left_unit(&s.inv));
    r.push_bool("sigma-sigma-1.ii", right_unit(&s.map) == right_unit(&s.inv));

    if h.is_cocommutative() {
        let om = omega_l(h);
        r.check_eq("sigmaOmega", &s.map.o(&om), &s.map);
        r.check_eq("sigmaOmega.inv", &s.inv.o(&om), &s.inv);
    }
    r
}

/// The center `Z(A) ↪ A` with its induced commutative algebra structure.
#[derive(Debug, Clone)]
pub struct Center {
    pub za: Algebra,
    pub i_z: LinMap,
}

/// Computes `Z(A)` as the kernel of `a ↦ (left mult by a) − (right mult by a)`.
pub fn center(a: &Algebra) -> Center {
    let field = a.field();
    let n = a.space.dim();
    let rows_space = Space::new("EndA", (0..n * n).map(|i| format!("E{i}")).collect());
    let mut op = LinMap::zero(&a.space, &rows_space, field);
    for j in 0..n {
        for b in 0..n {
            for i in 0..n {
                // coefficient of e_i in e_j·e_b − e_b·e_j
                let left = a.mult.get(i, j * n + b).clone();
                let right = a.mult.get(i, b * n + j);
                let v = left.sub(right);
                if !v.is_zero() {
                    op.set(b * n + i, j, v);
                }
            }
        }
    }
    let ker = kernel(&op, "Z");
    let i_z = ker.emb;
    let unit = factor_through(&a.unit, &i_z).expect("the unit is always central");
    let mult = factor_through(&a.mult.o(&i_z.x(&i_z)), &i_z)
        .expect("products of central elements are central");
    let za = Algebra::new(ker.obj, unit, mult);
    debug_assert!(za.is_commutative());
    Center { za, i_z }
}

/// The weak left H-module structure induced on the coinvariants of a cleft
/// extension, computed from both formulas and cross-checked.
pub fn induced_module_structure(cert: &CleftCertificate) -> Result<(WeakModuleAlgebra, Report)> {
    if !cert.ca.h.is_cocommutative() {
        return Err(Error::NotCocommutative);
    }
    if !cert.cleft {
        return Err(Error::FactorizationFailure {
            context: "certificate does not establish cleftness".into(),
        });
    }
    let ca = &cert.ca;
    let a = &ca.a;
    let h = &ca.h;
    let ida = a.id();
    let c_aa = LinMap::symmetry(&a.space, &a.space, ca.field());
    // φ_A = μ∘(A⊗(μ∘c))∘(((f⊗f⁻¹)∘δ)⊗i_A): H⊗A_H → A
    let big_phi = a
        .mult
        .o(&ida.x(&a.mult.o(&c_aa)))
        .o(&cert.f.x(&cert.finv).o(h.delta()).x(&cert.coinv.i_a));
    let phi_ah = factor_through(&big_phi, &cert.coinv.i_a).map_err(|_| {
        Error::FactorizationFailure {
            context: "induced action does not factor through i_A".into(),
        }
    })?;
    let mut r = Report::new("induced module structure on the coinvariants");
    // alternate form φ_{A_H} = p_A∘μ∘(f⊗i_A)
    let alt = cert.p_a.o(&a.mult).o(&cert.f.x(&cert.coinv.i_a));
    r.check_eq("alternativamodulo", &phi_ah, &alt);
    let m = WeakModuleAlgebra::new(cert.coinv.ah.clone(), h.clone(), phi_ah);
    let wr = verify_weak_module_algebra(&m);
    r.push_bool("weak-module-algebra", wr.all_passed());
    r.absorb(wr);
    // twisted-case criteria, each checked as a biconditional
    let idah = m.a.id();
    let lhs_i = m.phi == m.phi.o(&h.pi_l_bar().x(&idah));
    let rhs_i =
        a.mult.o(&cert.f.x(&cert.coinv.i_a)) == a.mult.o(&c_aa).o(&cert.f.x(&cert.coinv.i_a));
    r.push_bool("casotwisted.i", lhs_i == rhs_i);
    let lhs_ii = m.phi == m.phi.o(&h.pi_l().x(&idah));
    let rhs_ii = a.mult.o(&cert.finv.x(&cert.coinv.i_a))
        == a.mult.o(&c_aa).o(&cert.finv.x(&cert.coinv.i_a));
    r.push_bool("casotwisted.ii", lhs_ii == rhs_ii);
    Ok((m, r))
}

/// The strict action induced on `Z(A_H)` by a cleft extension with a total
/// integral, with the auxiliary ψ identities verified.
pub fn center_module_structure(
    cert: &CleftCertificate,
    m_ah: &WeakModuleAlgebra,
) -> Result<(WeakModuleAlgebra, Center, Report)> {
    if !cert.ca.h.is_cocommutative() {
        return Err(Error::NotCocommutative);
    }
    if cert.f.o(cert.ca.h.eta()) != cert.ca.a.unit {
        return Err(Error::NotTotal);
    }
    let ca = &cert.ca;
    let a = &ca.a;
    let h = &ca.h;
    let ida = a.id();
    let c_aa = LinMap::symmetry(&a.space, &a.space, ca.field());
    let z = center(&m_ah.a);

    let mut r = Report::new("center module structure");
    // ψ_A = μ∘(A⊗(μ∘c))∘(((f⁻¹⊗f)∘δ)⊗i_A), factored through i_A
    let psi_a = a
        .mult
        .o(&ida.x(&a.mult.o(&c_aa)))
        .o(&cert.finv.x(&cert.f).o(h.delta()).x(&cert.coinv.i_a));
    let psi_ah = factor_through(&psi_a, &cert.coinv.i_a).map_err(|_| {
        Error::FactorizationFailure {
            context: "ψ_A does not factor through i_A".into(),
        }
    })?;

    let idh = h.id();
    let c_h_ah = LinMap::symmetry(h.space(), &m_ah.a.space, ca.field());
    r.check_eq(
        "primeraigualdad",
        &a.mult.o(&cert.finv.x(&cert.coinv.i_a)),
        &a.mult
            .o(&psi_a.x(&cert.finv))
            .o(&idh.x(&c_h_ah))
            .o(&h.delta().x(&m_ah.a.id())),
    );
    r.check_eq(
        "segundaigualdad",
        &a.mult.o(&c_aa).o(&cert.f.x(&cert.coinv.i_a)),
        &a.mult.o(&cert.f.x(&psi_a)).o(&h.delta().x(&m_ah.a.id())),
    );
    // (varphipsi) φ∘(H⊗ψ)∘(δ⊗A_H) = μ_{A_H}∘(u1⊗A_H)
    r.check_eq(
        "varphipsi",
        &m_ah.phi.o(&idh.x(&psi_ah)).o(&h.delta().x(&m_ah.a.id())),
        &m_ah.a.mult.o(&m_ah.u1().x(&m_ah.a.id())),
    );

    // the action restricts to the center
    let phi_z = factor_through(&m_ah.phi.o(&idh.x(&z.i_z)), &z.i_z).map_err(|_| {
        Error::FactorizationFailure {
            context: "φ_{A_H}∘(H⊗i_Z) does not factor through the center".into(),
        }
    })?;
    let zm = WeakModuleAlgebra::new(z.za.clone(), h.clone(), phi_z);
    r.push_bool("centroesHmodulo", zm.is_strict());
    let wr = verify_weak_module_algebra(&zm);
    r.push_bool("weak-module-algebra", wr.all_passed());
    r.absorb(wr);
    Ok((zm, z, r))
}
