//! Desk-scale second cohomology: exhaustive enumeration of normalized
//! convolution-invertible center-valued 2-cocycles, the coboundary quotient,
//! and the bijection with fixed-action crossed-system classes.

use crate::cleft2cross::{extract_crossed_system, transport_phi, transport_sigma};
use crate::comodule::CleftCertificate;
use crate::crossed::{verify_cocycle, verify_normal, verify_twisted, CrossedSystem};
use crate::error::{Error, Result};
use crate::linmap::{factor_through, solve_linear_map_system, LinMap};
use crate::maction::{
    center_module_structure, solve_reg1, solve_reg2, verify_reg2, Center, RegCocycle, RegElement,
    WeakModuleAlgebra,
};
use crate::report::Report;

/// A normalized center-valued 2-cocycle with its coboundary class.
#[derive(Debug, Clone)]
pub struct CocycleClass {
    pub tau: RegCocycle,
    pub class_id: usize,
    pub representative: bool,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind((0..n).collect())
    }
    fn root(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.root(a), self.root(b));
        // keep the smaller index as the representative
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.0[hi] = lo;
    }
}

/// The affine family of candidate cocycles: the normalization constraints
/// `τ∘(η⊗H) = u1`, `τ∘(H⊗η) = u1` together with further linear conditions
/// that every Reg-invertible candidate must satisfy — the absorption laws
/// `u2∧τ = τ`, `τ∧u2 = τ` and, for cocommutative H, `τ∘Ω² = τ`. The extra
/// cuts change no final counts (the Reg filter implies them) but keep the
/// enumeration space near the true support.
fn normalized_family(m: &WeakModuleAlgebra) -> Result<crate::linmap::AffineFamily> {
    let h = &m.h;
    let idh = h.id();
    let hh = h.space().tensor(h.space());
    let zero = LinMap::zero(&hh, &m.a.space, m.field());
    let left = |x: &LinMap| x.o(&h.eta().x(&idh));
    let right = |x: &LinMap| x.o(&idh.x(h.eta()));
    let absorb_l = |x: &LinMap| m.conv2(m.u2(), x).sub(x);
    let absorb_r = |x: &LinMap| m.conv2(x, m.u2()).sub(x);
    let mut ops: Vec<&dyn Fn(&LinMap) -> LinMap> = vec![&left, &right, &absorb_l, &absorb_r];
    let mut rhs: Vec<&LinMap> = vec![m.u1(), m.u1(), &zero, &zero];
    let om = crate::maction::omega_l(h);
    let omega_fix = |x: &LinMap| x.o(&om).sub(x);
    if h.is_cocommutative() {
        ops.push(&omega_fix);
        rhs.push(&zero);
    }
    solve_linear_map_system(&hh, &m.a.space, m.field(), &ops, &rhs)
}

/// Exhaustively lists the maps `H⊗H → Z` that are normalized,
/// Reg-invertible, and satisfy the cocycle condition (g2), in deterministic
/// enumeration order.
pub fn enumerate_cocycles(
    zm: &WeakModuleAlgebra,
    max_enum: u64,
    threads: usize,
) -> Result<Vec<RegCocycle>> {
    assert!(
        zm.is_strict(),
        "cocycle enumeration expects the strict center action"
    );
    let fam = normalized_family(zm).map_err(|_| Error::Inconsistent)?;
    let needed = fam.count(zm.field()).ok_or(Error::NotEnumerable)?;
    if needed > max_enum as u128 {
        return Err(Error::SearchSpaceTooLarge {
            needed,
            bound: max_enum,
        });
    }
    Ok(crate::par::scan_indices(needed, threads, |idx| {
        let cand = fam.member_gf(zm.field(), idx);
        let reg = solve_reg2(zm, &cand, max_enum).ok()?;
        let cs = CrossedSystem::new(zm.clone(), reg);
        let (ok, _) = verify_cocycle(&cs);
        ok.then_some(cs.sigma)
    }))
}

/// All coboundary witnesses: normalized Reg-invertible `h: H → Z` that fix
/// the action under (relacionfis).
fn coboundary_witnesses(
    zm: &WeakModuleAlgebra,
    max_enum: u64,
    threads: usize,
) -> Result<Vec<RegElement>> {
    let total = crate::linmap::count_all_maps(zm.h.space(), &zm.a.space, zm.field(), max_enum)?;
    Ok(crate::par::scan_indices(total, threads, |idx| {
        let cand = crate::linmap::map_from_index(zm.h.space(), &zm.a.space, zm.field(), idx);
        if cand.o(zm.h.eta()) != zm.a.unit {
            return None;
        }
        let reg = solve_reg1(zm, &cand, max_enum).ok()?;
        (transport_phi(zm, &reg) == zm.phi).then_some(reg)
    }))
}

/// Quotients the enumerated cocycles by the coboundary relation: union-find
/// with edges `τ' ↦ transport(τ', h)` over all exhaustive normalized
/// witnesses `h: H → Z`. Representatives are enumeration-minimal.
pub fn h2_classes(
    zm: &WeakModuleAlgebra,
    cocycles: &[RegCocycle],
    max_enum: u64,
    threads: usize,
) -> Result<Vec<CocycleClass>> {
    let witnesses = coboundary_witnesses(zm, max_enum, threads)?;
    let mut uf = UnionFind::new(cocycles.len());
    for h in &witnesses {
        for (j, tau) in cocycles.iter().enumerate() {
            let moved = transport_sigma(zm, &tau.map, h);
            let idx = cocycles
                .iter()
                .position(|t| t.map == moved)
                .expect("coboundary transport must stay inside the cocycle set");
            uf.union(j, idx);
        }
    }
    // class ids in order of first appearance of each representative
    let mut rep_order: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for (j, tau) in cocycles.iter().enumerate() {
        let root = uf.root(j);
        let class_id = match rep_order.iter().position(|&r| r == root) {
            Some(k) => k,
            None => {
                rep_order.push(root);
                rep_order.len() - 1
            }
        };
        out.push(CocycleClass {
            tau: tau.clone(),
            class_id,
            representative: root == j,
        });
    }
    Ok(out)
}

/// Twists a base crossed system by a center-valued cocycle:
/// `σ ↦ σ ∧ (i_Z∘τ)`, with the result verified as a crossed system.
pub fn twist(
    base: &CrossedSystem,
    z: &Center,
    tau: &RegCocycle,
) -> Result<(CrossedSystem, Report)> {
    let m = &base.m;
    let mut r = Report::new("twist by a center-valued cocycle");
    let w = z.i_z.o(&tau.map);
    let w_inv = z.i_z.o(&tau.inv);
    let new_map = m.conv2(&base.sigma.map, &w);
    let new_inv = m.conv2(&w_inv, &base.sigma.inv);
    let sigma = RegCocycle {
        map: new_map,
        inv: new_inv,
    };
    let regr = verify_reg2(m, &sigma);
    r.push_bool("twisted-sigma-reg", regr.all_passed());
    let cs = CrossedSystem::new(m.clone(), sigma);
    let (g1, _) = verify_twisted(&cs);
    let (g2, _) = verify_cocycle(&cs);
    let (g3, _) = verify_normal(&cs);
    r.push_bool("g1", g1);
    r.push_bool("g2", g2);
    r.push_bool("g3", g3);
    if let Some(item) = r.first_failure() {
        return Err(Error::CocycleFail {
            label: item.label.clone(),
        });
    }
    Ok((cs, r))
}

/// Recovers the cocycle from a twisted system: `σ⁻¹ ∧ γ` factors through the
/// center and equals `τ`.
pub fn untwist(
    base: &CrossedSystem,
    z: &Center,
    zm: &WeakModuleAlgebra,
    twisted: &CrossedSystem,
) -> Result<(RegCocycle, Report)> {
    let m = &base.m;
    let mut r = Report::new("untwist");
    let gamma = &twisted.sigma.map;
    let cand = m.conv2(&base.sigma.inv, gamma);
    let tau_map = factor_through(&cand, &z.i_z).map_err(|_| Error::FactorizationFailure {
        context: "σ⁻¹∧γ does not factor through the center".into(),
    })?;
    let cand_inv = m.conv2(&twisted.sigma.inv, &base.sigma.map);
    let tau_inv = factor_through(&cand_inv, &z.i_z).map_err(|_| Error::FactorizationFailure {
        context: "γ⁻¹∧σ does not factor through the center".into(),
    })?;
    let tau = RegCocycle {
        map: tau_map,
        inv: tau_inv,
    };
    let regr = verify_reg2(zm, &tau);
    r.push_bool("untwisted-reg", regr.all_passed());
    if let Some(item) = r.first_failure() {
        return Err(Error::CocycleFail {
            label: item.label.clone(),
        });
    }
    Ok((tau, r))
}

/// Everything the bijection verification establishes.
pub struct H2Bijection {
    pub cocycles: Vec<RegCocycle>,
    pub classes: Vec<CocycleClass>,
    pub class_count: usize,
    pub population: Vec<CrossedSystem>,
    pub population_class_ids: Vec<usize>,
    pub population_class_count: usize,
    pub report: Report,
}

/// The full population of crossed systems `(φ, σ')` with the fixed action of
/// `m`, enumerated exhaustively over GF(p).
pub fn crossed_population(
    m: &WeakModuleAlgebra,
    max_enum: u64,
    threads: usize,
) -> Result<Vec<CrossedSystem>> {
    let fam = normalized_family(m).map_err(|_| Error::Inconsistent)?;
    let needed = fam.count(m.field()).ok_or(Error::NotEnumerable)?;
    if needed > max_enum as u128 {
        return Err(Error::SearchSpaceTooLarge {
            needed,
            bound: max_enum,
        });
    }
    Ok(crate::par::scan_indices(needed, threads, |idx| {
        let cand = fam.member_gf(m.field(), idx);
        let reg = solve_reg2(m, &cand, max_enum).ok()?;
        let cs = CrossedSystem::new(m.clone(), reg);
        let (g1, _) = verify_twisted(&cs);
        if !g1 {
            return None;
        }
        let (g2, _) = verify_cocycle(&cs);
        if !g2 {
            return None;
        }
        let (g3, _) = verify_normal(&cs);
        g3.then_some(cs)
    }))
}

/// Classifies a fixed-action population by ≈, using witness-generated edges.
pub fn classify_population(
    m: &WeakModuleAlgebra,
    population: &[CrossedSystem],
    max_enum: u64,
    threads: usize,
) -> Result<(Vec<usize>, usize)> {
    let witnesses = coboundary_witnesses(m, max_enum, threads)?;
    let mut uf = UnionFind::new(population.len());
    for h in &witnesses {
        for (j, cs) in population.iter().enumerate() {
            let moved = transport_sigma(m, &cs.sigma.map, h);
            let idx = population
                .iter()
                .position(|c| c.sigma.map == moved)
                .expect("equivalence transport must stay inside the population");
            uf.union(j, idx);
        }
    }
    let mut rep_order: Vec<usize> = Vec::new();
    let mut ids = Vec::with_capacity(population.len());
    for j in 0..population.len() {
        let root = uf.root(j);
        let id = match rep_order.iter().position(|&r| r == root) {
            Some(k) => k,
            None => {
                rep_order.push(root);
                rep_order.len() - 1
            }
        };
        ids.push(id);
    }
    Ok((ids, rep_order.len()))
}

/// Verifies the bijection between cocycle classes and fixed-action
/// crossed-system classes, for the cleft extension behind `cert`.
pub fn verify_h2_bijection(cert: &CleftCertificate, max_enum: u64) -> Result<H2Bijection> {
    verify_h2_bijection_par(cert, max_enum, 1)
}

/// Parallel variant of [`verify_h2_bijection`]; the enumeration layers scan
/// candidate chunks on `threads` workers, everything else is single-threaded.
pub fn verify_h2_bijection_par(
    cert: &CleftCertificate,
    max_enum: u64,
    threads: usize,
) -> Result<H2Bijection> {
    let (base, _) = extract_crossed_system(cert)?;
    let (zm, z, zr) = center_module_structure(cert, &base.m)?;
    let mut r = Report::new("second-cohomology bijection");
    r.push_bool("center-module", zr.all_passed());

    let cocycles = enumerate_cocycles(&zm, max_enum, threads)?;
    let classes = h2_classes(&zm, &cocycles, max_enum, threads)?;
    let class_count = classes.iter().map(|c| c.class_id).max().map_or(0, |m| m + 1);

    let population = crossed_population(&base.m, max_enum, threads)?;
    let (pop_ids, pop_class_count) =
        classify_population(&base.m, &population, max_enum, threads)?;

    r.push_bool("counts-equal", class_count == pop_class_count);

    // the twist map on classes: well-defined and injective on representatives
    let mut image_of_class: Vec<Option<usize>> = vec![None; class_count];
    let mut ok_well_defined = true;
    let mut ok_in_population = true;
    for c in &classes {
        let (tw, _) = twist(&base, &z, &c.tau)?;
        let Some(pos) = population.iter().position(|p| p.sigma.map == tw.sigma.map) else {
            ok_in_population = false;
            continue;
        };
        let img = pop_ids[pos];
        match image_of_class[c.class_id] {
            None => image_of_class[c.class_id] = Some(img),
            Some(prev) => ok_well_defined &= prev == img,
        }
        // twist then untwist recovers the cocycle exactly
        let (back, _) = untwist(&base, &z, &zm, &tw)?;
        if back.map != c.tau.map {
            ok_well_defined = false;
        }
    }
    r.push_bool("twist-lands-in-population", ok_in_population);
    r.push_bool("well-defined", ok_well_defined);
    let mut images: Vec<usize> = image_of_class.iter().map(|i| i.expect("total")).collect();
    images.sort_unstable();
    images.dedup();
    r.push_bool("injective", images.len() == class_count);
    r.push_bool("surjective", images.len() == pop_class_count);

    // untwist then twist is the identity on the population
    let mut ok_untwist = true;
    for cs in &population {
        let (tau, _) = untwist(&base, &z, &zm, cs)?;
        let (re, _) = twist(&base, &z, &tau)?;
        ok_untwist &= re.sigma.map == cs.sigma.map;
        // the recovered cocycle is one of the enumerated ones
        ok_untwist &= cocycles.iter().any(|t| t.map == tau.map);
    }
    r.push_bool("untwist-twist-identity", ok_untwist);

    if let Some(item) = r.first_failure() {
        return Err(Error::CocycleFail {
            label: item.label.clone(),
        });
    }
    Ok(H2Bijection {
        cocycles,
        classes,
        class_count,
        population,
        population_class_ids: pop_ids,
        population_class_count: pop_class_count,
        report: r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::{is_cleft, Coinvariants, ComoduleAlgebra};
    use crate::crossed::{build_crossed_product, comodule_structure, canonical_integral};
    use crate::field::FieldSpec;
    use crate::structure::{examples, groupoid_algebra};

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    /// Cleft certificate for the canonical extension `A ↪ A×_σH`.
    fn cert_of(cs: &CrossedSystem) -> CleftCertificate {
        let cpd = build_crossed_product(cs).unwrap();
        let pc = comodule_structure(&cpd).unwrap();
        canonical_integral(&cpd, &pc).unwrap().0
    }

    #[test]
    fn z2_gf3_has_two_cocycles_and_two_classes() {
        let cert = cert_of(&crate::crossed::examples::hopf_smash());
        let (base, _) = extract_crossed_system(&cert).unwrap();
        let (zm, _z, _) = center_module_structure(&cert, &base.m).unwrap();
        let cocycles = enumerate_cocycles(&zm, 1 << 20, 1).unwrap();
        assert_eq!(cocycles.len(), 2); // τ(g⊗g) ∈ {1, 2}
        let classes = h2_classes(&zm, &cocycles, 1 << 20, 1).unwrap();
        let n = classes.iter().map(|c| c.class_id).max().unwrap() + 1;
        assert_eq!(n, 2); // squares in GF(3)^* are trivial
    }

    #[test]
    fn gf2_z2_has_one_cocycle_one_class() {
        let h = groupoid_algebra(&examples::z2(), gf(2)).unwrap();
        let a = crate::crossed::examples::base_field_algebra(gf(2));
        let m = WeakModuleAlgebra::trivial(a, h);
        let sigma = solve_reg2(&m, m.u2(), 1 << 20).unwrap();
        let cs = CrossedSystem::new(m, sigma);
        let cert = cert_of(&cs);
        let bij = verify_h2_bijection(&cert, 1 << 20).unwrap();
        assert_eq!(bij.cocycles.len(), 1);
        assert_eq!(bij.class_count, 1);
        assert_eq!(bij.population_class_count, 1);
    }

    #[test]
    fn k2_over_gf3_has_one_class() {
        let cert = cert_of(&crate::crossed::examples::weak_smash_k2());
        let bij = verify_h2_bijection(&cert, 1 << 20).unwrap();
        assert_eq!(bij.class_count, 1);
        assert_eq!(bij.population_class_count, 1);
        assert!(bij.report.all_passed(), "{}", bij.report);
    }

    #[test]
    fn z2_gf3_bijection_is_two_to_two() {
        let cert = cert_of(&crate::crossed::examples::hopf_smash());
        let bij = verify_h2_bijection(&cert, 1 << 20).unwrap();
        assert_eq!(bij.class_count, 2);
        assert_eq!(bij.population_class_count, 2);
        assert_eq!(bij.population.len(), 2);
        assert!(bij.report.all_passed(), "{}", bij.report);
    }

    #[test]
    fn twist_by_trivial_class_is_identity() {
        let cert = cert_of(&crate::crossed::examples::hopf_smash());
        let (base, _) = extract_crossed_system(&cert).unwrap();
        let (zm, z, _) = center_module_structure(&cert, &base.m).unwrap();
        // τ = u2 on Z
        let tau = solve_reg2(&zm, zm.u2(), 1 << 20).unwrap();
        let (tw, r) = twist(&base, &z, &tau).unwrap();
        assert!(r.all_passed());
        assert_eq!(tw.sigma.map, base.sigma.map);
        // untwist recovers τ
        let (back, _) = untwist(&base, &z, &zm, &tw).unwrap();
        assert_eq!(back.map, tau.map);
    }

    #[test]
    fn twist_by_nontrivial_cocycle_gives_twisted_group_algebra() {
        let cert = cert_of(&crate::crossed::examples::hopf_smash());
        let (base, _) = extract_crossed_system(&cert).unwrap();
        let (zm, z, _) = center_module_structure(&cert, &base.m).unwrap();
        let cocycles = enumerate_cocycles(&zm, 1 << 20, 1).unwrap();
        let nontrivial = cocycles
            .iter()
            .find(|t| t.map != *zm.u2())
            .expect("the class set has a nontrivial member");
        let (tw, r) = twist(&base, &z, nontrivial).unwrap();
        assert!(r.all_passed());
        assert_ne!(tw.sigma.map, base.sigma.map);
        // the twisted system rebuilds a valid crossed product
        let cpd = build_crossed_product(&tw).unwrap();
        assert!(cpd.report.all_passed());
        let (back, _) = untwist(&base, &z, &zm, &tw).unwrap();
        assert_eq!(back.map, nontrivial.map);
    }
}
