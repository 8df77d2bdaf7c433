//! Pass/fail reports for identity verification.
//!
//! Failures carry a witness: the first basis column on which the two sides of
//! an identity disagree, rendered against the codomain basis.

use std::fmt;

use crate::linmap::LinMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckItem {
    /// Stable label of the identity being checked, e.g. `a1` or `deltaPIL`.
    pub label: String,
    pub passed: bool,
    /// On failure: the first differing basis column, both sides rendered.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn new(title: &str) -> Report {
        Report {
            title: title.to_string(),
            items: Vec::new(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failed_labels(&self) -> Vec<&str> {
        self.items.iter().filter(|i| !i.passed).map(|i| i.label.as_str()).collect()
    }

    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.items.iter().find(|i| !i.passed)
    }

    pub fn get(&self, label: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.label == label)
    }

    pub fn push_bool(&mut self, label: &str, passed: bool) {
        self.items.push(CheckItem {
            label: label.to_string(),
            passed,
            witness: None,
        });
    }

    /// Records exact equality of two maps, with a column witness on failure.
    pub fn check_eq(&mut self, label: &str, lhs: &LinMap, rhs: &LinMap) {
        let passed = lhs == rhs;
        let witness = if passed {
            None
        } else if lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod() {
            Some(format!(
                "shape mismatch: {}→{} vs {}→{}",
                lhs.dom().id(),
                lhs.cod().id(),
                rhs.dom().id(),
                rhs.cod().id()
            ))
        } else {
            let j = lhs.first_diff_column(rhs).expect("maps differ");
            Some(format!(
                "column {}: lhs = {}, rhs = {}",
                lhs.dom().basis_label(j),
                lhs.column_string(j),
                rhs.column_string(j)
            ))
        };
        self.items.push(CheckItem {
            label: label.to_string(),
            passed,
            witness,
        });
    }

    pub fn absorb(&mut self, other: Report) {
        self.items.extend(other.items);
    }

    /// Requires all items to pass; otherwise returns the supplied error built
    /// from the first failing label.
    pub fn require_all<E>(&self, mk: impl Fn(String) -> E) -> Result<(), E> {
        match self.first_failure() {
            None => Ok(()),
            Some(item) => Err(mk(item.label.clone())),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for item in &self.items {
            let mark = if item.passed { "ok  " } else { "FAIL" };
            write!(f, "  [{mark}] {}", item.label)?;
            if let Some(w) = &item.witness {
                write!(f, "  ({w})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Catalog of the identity labels the verifiers can report, with one-line
/// descriptions. Used by the CLI's `--list-identities`.
pub fn identity_catalog() -> Vec<(&'static str, &'static str)> {
    vec![
        ("alg.unit", "μ∘(A⊗η) = id = μ∘(η⊗A)"),
        ("alg.assoc", "μ∘(A⊗μ) = μ∘(μ⊗A)"),
        ("coalg.counit", "(ε⊗D)∘δ = id = (D⊗ε)∘δ"),
        ("coalg.coassoc", "(δ⊗D)∘δ = (D⊗δ)∘δ"),
        ("a1", "δ∘μ = (μ⊗μ)∘δ_{H⊗H}"),
        ("a2", "ε∘μ∘(μ⊗H) = (ε⊗ε)∘(μ⊗μ)∘(H⊗δ⊗H), both symmetric forms"),
        ("a3", "(δ⊗H)∘δ∘η = (H⊗μ⊗H)∘(δ⊗δ)∘(η⊗η), both symmetric forms"),
        ("a4-1", "id∧λ equals the target-projection formula"),
        ("a4-2", "λ∧id equals the source-projection formula"),
        ("a4-3", "λ∧id∧λ = λ"),
        ("antipode.antimult", "λ∘μ = μ∘(λ⊗λ)∘c"),
        ("antipode.anticomult", "δ∘λ = c∘(λ⊗λ)∘δ"),
        ("antipode.unit", "λ∘η = η and ε∘λ = ε"),
        ("propiedadesgeneralespiLR", "Π^L = id∧λ and Π^R = λ∧id"),
        ("id", "Π^L∧Π^L = Π^L and Π^R∧Π^R = Π^R"),
        ("pi.idempotent", "all four projections are idempotent"),
        ("composiciones1", "Π∘Π̄ composites, four equalities"),
        ("composiciones2", "Π̄∘Π composites, four equalities"),
        ("composiciones", "Π^L = Π̄^R∘λ = λ∘Π̄^L and Π^R = Π̄^L∘λ = λ∘Π̄^R"),
        ("pi.lambda", "Π^L∘λ = Π^L∘Π^R = λ∘Π^R and Π^R∘λ = Π^R∘Π^L = λ∘Π^L"),
        ("PiLmu", "μ∘(H⊗Π^L) expansion"),
        ("PiRmu", "μ∘(Π^R⊗H) expansion"),
        ("PiLbarramu", "μ∘(H⊗Π̄^L) expansion"),
        ("PiRbarramu", "μ∘(Π̄^R⊗H) expansion"),
        ("deltaPIL", "(H⊗Π^L)∘δ expansion"),
        ("deltaPIR", "(Π^R⊗H)∘δ expansion"),
        ("deltaPILbarra", "(Π̄^L⊗H)∘δ expansion"),
        ("deltaPIRbarra", "(H⊗Π̄^R)∘δ expansion"),
        ("PiLmuPiL", "Π^L∘μ∘(H⊗Π^L) = Π^L∘μ"),
        ("PiRmuPiR", "Π^R∘μ∘(Π^R⊗H) = Π^R∘μ"),
        ("PiLdeltaPiL", "(H⊗Π^L)∘δ∘Π^L = δ∘Π^L"),
        ("PiRdeltaPiR", "(Π^R⊗H)∘δ∘Π^R = δ∘Π^R"),
        ("comodule.counit", "(A⊗ε)∘ρ = id"),
        ("comodule.coassoc", "(ρ⊗H)∘ρ = (A⊗δ)∘ρ"),
        ("comodule.mult", "ρ∘μ = μ_{A⊗H}∘(ρ⊗ρ)"),
        ("b1", "(A⊗Π^L)∘ρ as a multiplication formula"),
        ("b2", "(A⊗Π̄^R)∘ρ as a multiplication formula"),
        ("b3", "(A⊗Π^L)∘ρ∘η = ρ∘η"),
        ("b4", "(A⊗Π̄^R)∘ρ∘η = ρ∘η"),
        ("b5", "coaction of the unit, plain form"),
        ("b6", "coaction of the unit, twisted form"),
        ("zetaA", "ζ_A = (A⊗Π^L)∘ρ"),
        ("a)", "entwining vs multiplication"),
        ("b)", "entwining vs comultiplication"),
        ("c)", "Γ∘(H⊗η_A) = (e_A⊗H)∘δ"),
        ("d)", "(A⊗ε)∘Γ = μ∘(e_A⊗A)"),
        ("m)", "(A, μ_A, ρ_A) is an entwined module"),
        ("c1", "f⁻¹∧f = e_A"),
        ("c2", "f∧f⁻¹ = (A⊗(ε∘μ))∘((ρ∘η)⊗H)"),
        ("c3", "f⁻¹∧f∧f⁻¹ = f⁻¹"),
        ("cleaving-lambda", "ρ∘f⁻¹ = (f⁻¹⊗λ)∘c∘δ"),
        ("new-weak-cleft", "Γ∘(H⊗f⁻¹)∘δ = ζ∘f⁻¹"),
        ("equcross1", "μ∘(A⊗e_A)∘ρ = id"),
        ("equcross2", "μ∘(q_A⊗f)∘ρ = id"),
        ("equcross3", "ρ∘μ through q_A"),
        ("equcross4", "μ∘(i_A⊗f) through q_A"),
        ("equcross5", "p_A∘μ∘(i_A⊗A) = μ_{A_H}∘(A_H⊗p_A)"),
        ("equalityforh", "h = f∧(f⁻¹∘Π̄^R)"),
        ("expresioninversah", "h⁻¹ = (f∘Π^R)∧f⁻¹"),
        ("expresioncruzada", "μ∘((f⁻¹∘η)⊗(f∘η)) = η"),
        ("d1", "φ∘(η⊗A) = id"),
        ("d2", "φ∘(H⊗μ) expansion"),
        ("d3", "φ∘(μ⊗η_A) = φ∘(H⊗u1)"),
        ("d3-1", "strictness: φ∘(μ⊗A) = φ∘(H⊗φ)"),
        ("d4", "φ∘(Π^L⊗A) = μ∘(u1⊗A)"),
        ("d5", "φ∘(Π̄^L⊗A) = μ∘c∘(u1⊗A)"),
        ("d6", "φ∘(Π^L⊗η_A) = u1"),
        ("d7", "φ∘(Π̄^L⊗η_A) = u1"),
        ("d8", "u2 = (u1⊗(ε∘μ))∘(δ⊗H)"),
        ("d9", "u2 = ((ε∘μ)⊗u1)∘(H⊗c)∘(δ⊗H)"),
        ("u1-u2", "u2 = u1∘μ"),
        ("u1.central", "u1 factors through the center (cocommutative case)"),
        ("omega.idempotent", "Ω^L and Ω^R are idempotent"),
        ("omega.mu", "μ∘Ω^L = μ = μ∘Ω^R"),
        ("omega-L-1", "Ω^L as a module morphism, both factored forms"),
        ("Omegadelta", "(Ω²⊗H⊗H)∘δ_{H⊗H} = (H⊗H⊗Ω²)∘δ_{H⊗H} = δ_{H⊗H}∘Ω²"),
        ("sigmaOmega", "σ = σ∘Ω² and σ⁻¹ = σ⁻¹∘Ω²"),
        ("e1", "h∧h⁻¹ = h⁻¹∧h = u1"),
        ("e2", "h∧h⁻¹∧h = h"),
        ("e3", "h⁻¹∧h∧h⁻¹ = h⁻¹"),
        ("f1", "σ∧σ⁻¹ = σ⁻¹∧σ = u2"),
        ("f2", "σ∧σ⁻¹∧σ = σ"),
        ("f3", "σ⁻¹∧σ∧σ⁻¹ = σ⁻¹"),
        ("heta", "h∘η = η_A"),
        ("hPiL", "h∘Π^L = u1"),
        ("hbarPiL", "h∘Π̄^L = u1"),
        ("hPiR", "h∘Π^R = u1∘λ"),
        ("hbarPiR", "h∘Π̄^R = u1∘λ⁻¹"),
        ("sigma-eta-l", "σ∘(η⊗H) = u1"),
        ("sigma-PiL-l", "σ∘(Π^L⊗H)∘δ = u1"),
        ("sigma-PiL-c", "σ∘c∘(H⊗Π̄^L)∘δ = u1"),
        ("sigma-eta-r", "σ∘(H⊗η) = u1"),
        ("sigma-PiR-r", "σ∘(H⊗Π^R)∘δ = u1"),
        ("sigma-PiR-r-c", "σ∘c∘(Π̄^R⊗H)∘δ = u1"),
        ("g1", "twisted condition on the action"),
        ("g2", "cocycle condition with the Ω insertions"),
        ("g3", "normal condition"),
        ("new-two-cocycle", "cocycle condition, cocommutative form"),
        ("new-two-cocycle-2", "cocycle condition, inverse-paired form"),
        ("new-two-cocycle-3", "cocycle condition, reversed-paired form"),
        ("psiAH", "ψ_H^A lift formula"),
        ("sigmaAH", "σ_H^A lift formula"),
        ("wmeas-wcp", "(μ⊗H)∘(A⊗ψ)∘(ψ⊗A) = ψ∘(H⊗μ)"),
        ("idem-wcp", "∇ is idempotent"),
        ("nabla.amodule", "∇ is a left A-module morphism"),
        ("nabla-u1", "∇ = ((μ∘(A⊗u1))⊗H)∘(A⊗δ)"),
        ("nabla-delta", "(A⊗δ)∘∇ = (∇⊗H)∘(A⊗δ)"),
        ("nabla-varep", "(A⊗ε)∘∇ = μ∘(A⊗u1)"),
        ("fi-nab", "(μ⊗H)∘(A⊗ψ)∘(∇⊗A) = (μ⊗H)∘(A⊗ψ) = ∇∘(μ⊗H)∘(A⊗ψ)"),
        ("fi-nab-2", "∇∘ψ = ψ"),
        ("nabla-fi", "μ∘(u1⊗φ)∘(δ⊗A) = φ"),
        ("nabla-fiAH", "(μ⊗H)∘(u1⊗ψ)∘(δ⊗A) = ψ"),
        ("eta-psi-varep", "(A⊗ε)∘ψ∘(H⊗η_A) = u1"),
        ("eta-psi-complex", "(μ⊗H)∘(u1⊗c)∘(δ⊗A) = (μ⊗H)∘(A⊗c)∘((ψ∘(H⊗η))⊗A)"),
        ("delta-sigmaHA", "(A⊗δ)∘σ_H^A = (σ_H^A⊗μ)∘δ_{H⊗H}"),
        ("sigmaOmegaH", "σ_H^A∘Ω² = σ_H^A"),
        ("Nablasigma", "∇∘σ_H^A = σ_H^A"),
        ("varepsilonsigma", "(A⊗ε)∘σ_H^A = σ"),
        ("twis-wcp", "twisted condition, lifted quadruple form"),
        ("twisted-sigma", "twisted condition, σ form"),
        ("cocy2-wcp", "cocycle condition, lifted quadruple form"),
        ("2-cocycle-sigma", "cocycle condition, σ form"),
        ("c1-wcp", "twisted consequence (∇ absorbed on the right)"),
        ("aw1", "twisted consequence (∇ absorbed on the left)"),
        ("pre1-wcp", "preunit absorbs on the right"),
        ("pre2-wcp", "preunit absorbs on the left"),
        ("pre3-wcp", "preunit vs ψ and β_ν"),
        ("mu.assoc", "μ_{A⊗σH} is associative"),
        ("mu.normalized", "∇∘μ = μ = μ∘(∇⊗∇)"),
        ("prod-wcp", "the split product is associative and unital"),
        ("smash-condition", "σ_H^A = (u1⊗H)∘δ∘μ"),
        ("productotwistedaspa", "φ = φ∘(Π^L⊗A)"),
        ("propiedadfactorizacion", "equalizing maps into A×H land under A⊗Π^L"),
        ("newnabla-2", "∇∘((μ∘(A⊗u1))⊗η) = (A⊗Π^L)∘∇"),
        ("igualdadparacociclo", "unit identity for the canonical inverse integral"),
        ("sigma-f", "σ_{A_H} = p_A∘μ∘(f⊗f)"),
        ("new-aux-2", "e_A∘μ∘(Π^R⊗H) = e_A∘μ"),
        ("alternativamodulo", "φ_{A_H} = p_A∘μ∘(f⊗i_A)"),
        ("relacionfis", "equivalence relation on actions"),
        ("relacionsigmas", "equivalence relation on cocycles"),
        ("nablaprima-nabla", "equivalent systems share the idempotent ∇"),
        ("prin-1-aux", "auxiliary identity for the equivalence isomorphism"),
        ("prin-2-aux", "auxiliary identity for the equivalence isomorphism"),
        ("otraigualdadparaT", "i_{A⊗H}∘T in closed form"),
        ("isomorfismocleft", "the equivalence isomorphism of crossed products"),
        ("newexpressionfornabla", "∇_{A_H⊗H} = (p_A⊗H)∘ρ∘μ∘(i_A⊗f)"),
        ("ecuacion", "u1 via σ, σ⁻¹ and the antipode"),
        ("expresionparaq", "q_{A×σH} = p_{A⊗H}∘(A⊗Π^L)∘i_{A⊗H}"),
        ("expresionparap", "p_{A×σH} = (A⊗ε)∘i_{A⊗H}"),
        ("primeraigualdad", "μ∘(f⁻¹⊗i_A) through ψ_A"),
        ("segundaigualdad", "μ∘c∘(f⊗i_A) through ψ_A"),
        ("varphipsi", "φ∘(H⊗ψ)∘(δ⊗A_H) = μ∘(u1⊗A_H)"),
        ("centroesHmodulo", "the center action is strict"),
    ]
}
