//! Decision procedures for residual nilpotence of `Z^n ⋊ Z` and `F_n ⋊ Z`,
//! and the classifier assembling them into a [`Verdict`].
//!
//! Claims carry a [`Certainty`]. A negative residual-nilpotence claim is
//! only ever made from a proven source; failure of a sufficient condition
//! is reported as evidence and never flips a bit.

mod checks;
mod classify;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::zlinalg::IntMatrix;

pub use checks::{
    af_criterion, augmentation_power_check, gamma_omega_is_fiber, integer_eigenvalue_criterion,
    lie_component_audit, mikhailov_module_check, mod_p_unipotency, tensor_power_audit, unipotency_primes,
    AfResult, AuditRecord, IntegerEigenvalues,
};
pub use classify::{
    classify_action_family, classify_f2, classify_general, default_tensor_bound, finite_index_resnil_subgroup,
    ClassifyOptions, FiniteIndexSubgroup, GroupInput,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Certainty {
    Proven,
    /// Established for every degree up to and including the bound.
    ProvenUpToBound(u32),
    Unknown,
}

impl fmt::Display for Certainty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certainty::Proven => write!(f, "proven"),
            Certainty::ProvenUpToBound(k) => write!(f, "verified up to k={k}"),
            Certainty::Unknown => write!(f, "unknown"),
        }
    }
}

/// A yes/no claim; `value` is `None` exactly when the certainty is
/// [`Certainty::Unknown`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub value: Option<bool>,
    pub certainty: Certainty,
}

impl Claim {
    pub fn proven(v: bool) -> Self {
        Claim {
            value: Some(v),
            certainty: Certainty::Proven,
        }
    }

    pub fn bounded(v: bool, k: u32) -> Self {
        Claim {
            value: Some(v),
            certainty: Certainty::ProvenUpToBound(k),
        }
    }

    pub fn unknown() -> Self {
        Claim {
            value: None,
            certainty: Certainty::Unknown,
        }
    }

    pub fn is_proven(&self, v: bool) -> bool {
        self.value == Some(v) && self.certainty == Certainty::Proven
    }

    pub fn is_unknown(&self) -> bool {
        self.value.is_none()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LcsLength {
    /// `γ_ω = γ_2`.
    Two,
    Omega,
    OmegaSquared,
    Unknown,
}

impl fmt::Display for LcsLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LcsLength::Two => write!(f, "2"),
            LcsLength::Omega => write!(f, "ω"),
            LcsLength::OmegaSquared => write!(f, "ω²"),
            LcsLength::Unknown => write!(f, "unknown"),
        }
    }
}

/// A set of primes, or all of them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeSet {
    pub all: bool,
    pub primes: BTreeSet<u64>,
}

impl PrimeSet {
    pub fn all() -> Self {
        PrimeSet {
            all: true,
            primes: BTreeSet::new(),
        }
    }

    pub fn of(primes: impl IntoIterator<Item = u64>) -> Self {
        PrimeSet {
            all: false,
            primes: primes.into_iter().collect(),
        }
    }

    pub fn contains(&self, p: u64) -> bool {
        self.all || self.primes.contains(&p)
    }

    pub fn is_empty(&self) -> bool {
        !self.all && self.primes.is_empty()
    }

    pub fn intersect(&self, other: &PrimeSet) -> PrimeSet {
        match (self.all, other.all) {
            (true, _) => other.clone(),
            (_, true) => self.clone(),
            _ => PrimeSet::of(self.primes.intersection(&other.primes).copied()),
        }
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        other.all || (!self.all && self.primes.is_subset(&other.primes))
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.all {
            return write!(f, "all primes");
        }
        if self.primes.is_empty() {
            return write!(f, "none");
        }
        let v: Vec<String> = self.primes.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", v.join(", "))
    }
}

/// The criteria a witness can cite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Criterion {
    FactorValuesAtOne,
    Fiber,
    IntegerEigenvalues,
    ModPUnipotency,
    EigenvalueProducts,
    TensorPowerAudit,
    LieComponentAudit,
    AugmentationPower,
    TrivialActionModP,
    RankTwoTable,
    FiniteIndexSubgroup,
    PFiniteImpliesNilpotent,
    NotNilpotent,
    Abelian,
    OpenForHigherRank,
    Automorphism,
}

impl Criterion {
    pub const ALL: [Criterion; 16] = [
        Criterion::FactorValuesAtOne,
        Criterion::Fiber,
        Criterion::IntegerEigenvalues,
        Criterion::ModPUnipotency,
        Criterion::EigenvalueProducts,
        Criterion::TensorPowerAudit,
        Criterion::LieComponentAudit,
        Criterion::AugmentationPower,
        Criterion::TrivialActionModP,
        Criterion::RankTwoTable,
        Criterion::FiniteIndexSubgroup,
        Criterion::PFiniteImpliesNilpotent,
        Criterion::NotNilpotent,
        Criterion::Abelian,
        Criterion::OpenForHigherRank,
        Criterion::Automorphism,
    ];

    /// Short name used in reports.
    pub fn name(self) -> &'static str {
        match self {
            Criterion::FactorValuesAtOne => "factor values at 1",
            Criterion::Fiber => "fiber test",
            Criterion::IntegerEigenvalues => "integer eigenvalues",
            Criterion::ModPUnipotency => "mod-p unipotency",
            Criterion::EigenvalueProducts => "eigenvalue products of A-E",
            Criterion::TensorPowerAudit => "tensor power audit",
            Criterion::LieComponentAudit => "Lie component audit",
            Criterion::AugmentationPower => "augmentation power",
            Criterion::TrivialActionModP => "trivial action mod p",
            Criterion::RankTwoTable => "rank-2 det/trace table",
            Criterion::FiniteIndexSubgroup => "finite-index subgroup",
            Criterion::PFiniteImpliesNilpotent => "p-finite implies nilpotent",
            Criterion::NotNilpotent => "not nilpotent",
            Criterion::Abelian => "abelian group",
            Criterion::OpenForHigherRank => "higher rank",
            Criterion::Automorphism => "automorphism check",
        }
    }

    /// The statement relied upon.
    pub fn anchor(self) -> &'static str {
        match self {
            Criterion::FactorValuesAtOne => {
                "Aschenbrenner-Friedl: Z^n ⋊ Z is residually nilpotent iff no irreducible factor q of the \
                 characteristic polynomial has q(1) = ±1, and residually p-finite iff every q(1) lies in pZ"
            }
            Criterion::Fiber => "γ_ω(F_n ⋊ Z) = F_n, and the series stops at γ_2, iff A - E is invertible over Z",
            Criterion::IntegerEigenvalues => {
                "all eigenvalues integral: residually nilpotent; residually p-finite for every p when all \
                 equal 1, residually 2-finite otherwise"
            }
            Criterion::ModPUnipotency => {
                "(A - E)^N ≡ 0 mod p gives char(A) ≡ (x-1)^n mod p, so every factor q of every tensor power \
                 has q(1) ≡ 0 mod p; all quotients Z^(n^k) ⋊ Z are residually p-finite, hence so is F_n ⋊ Z"
            }
            Criterion::EigenvalueProducts => {
                "Mikhailov: if no product of eigenvalues of A - E equals ±1, the module Z^n is residually nilpotent"
            }
            Criterion::TensorPowerAudit => {
                "factor test on A^(⊗k): all k residually nilpotent gives γ_(ω²) = 1; all k residually \
                 p-finite gives residual p-finiteness"
            }
            Criterion::LieComponentAudit => {
                "factor test on the Lie components γ_k/γ_(k+1); its factors are among those of A^(⊗k), so a \
                 tensor pass implies a Lie pass"
            }
            Criterion::AugmentationPower => "Δ^N Ā ⊆ mĀ for the augmentation ideal of the acting group",
            Criterion::TrivialActionModP => {
                "A residually p-nilpotent, B residually nilpotent, B acting trivially modulo γ_2^(p)(A): \
                 A ⋊ B is residually nilpotent"
            }
            Criterion::RankTwoTable => {
                "F_2 ⋊ Z: length 2 iff det=1, tr∈{1,3} or det=-1, tr=±1; otherwise length ω when det=1 \
                 (p-finite for p | tr-2) or det=-1 with tr even (2-finite), and ω² when det=-1 with tr odd"
            }
            Criterion::FiniteIndexSubgroup => {
                "F_2 ⋊_(φ²) Z, or F_2 ⋊_(φ⁴) Z when det=-1 and tr=±1, is a residually nilpotent subgroup of \
                 index 2 or 4"
            }
            Criterion::PFiniteImpliesNilpotent => {
                "a finitely generated residually p-finite group is residually nilpotent"
            }
            Criterion::NotNilpotent => "a residually nilpotent group that is not nilpotent has length ω",
            Criterion::Abelian => "Z ⋊ Z with trivial action is Z^2, whose series stops at γ_2 = 1",
            Criterion::OpenForHigherRank => {
                "for n ≥ 3 no trichotomy of lower central series lengths is known; the length may be undecided"
            }
            Criterion::Automorphism => "φ is an automorphism when composition with a claimed inverse is the identity",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub criterion: Criterion,
    pub anchor: String,
    pub evidence: String,
    pub certainty: Certainty,
}

impl Witness {
    pub fn new(criterion: Criterion, evidence: impl Into<String>, certainty: Certainty) -> Self {
        Witness {
            criterion,
            anchor: criterion.anchor().to_string(),
            evidence: evidence.into(),
            certainty,
        }
    }
}

/// Classification of `F_n ⋊ Z` (or of `F_n ⋊ B` for an action family).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub rank: usize,
    /// The abelianized action, one matrix per generator of the acting group.
    pub matrices: Vec<IntMatrix>,
    pub residually_nilpotent: Claim,
    /// Claims for individual primes.
    pub residually_p_finite: BTreeMap<u64, Claim>,
    /// The claim for every prime not listed above.
    pub other_primes: Claim,
    pub lcs_length: LcsLength,
    pub lcs_certainty: Certainty,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    pub(crate) fn new(rank: usize, matrices: Vec<IntMatrix>) -> Self {
        Verdict {
            rank,
            matrices,
            residually_nilpotent: Claim::unknown(),
            residually_p_finite: BTreeMap::new(),
            other_primes: Claim::unknown(),
            lcs_length: LcsLength::Unknown,
            lcs_certainty: Certainty::Unknown,
            witnesses: Vec::new(),
        }
    }

    /// The claim for prime `p`.
    pub fn p_finite(&self, p: u64) -> Claim {
        self.residually_p_finite.get(&p).copied().unwrap_or(self.other_primes)
    }

    /// Primes proven residually p-finite; `all` when every prime is.
    pub fn proven_p_finite(&self) -> PrimeSet {
        if self.other_primes.is_proven(true) {
            return PrimeSet::all();
        }
        PrimeSet::of(
            self.residually_p_finite
                .iter()
                .filter(|(_, c)| c.is_proven(true))
                .map(|(&p, _)| p),
        )
    }

    fn is_abelian(&self) -> bool {
        self.rank == 1 && self.matrices.iter().all(IntMatrix::is_identity)
    }

    /// Internal consistency of the claims.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let claims = self
            .residually_p_finite
            .values()
            .chain([&self.other_primes, &self.residually_nilpotent]);
        for c in claims {
            if c.value.is_none() != (c.certainty == Certainty::Unknown) {
                return Err(format!("claim {c:?} mixes a value with unknown certainty"));
            }
        }
        if !self.proven_p_finite().is_empty() && !self.residually_nilpotent.is_proven(true) {
            return Err("proven residually p-finite but residual nilpotence not proven".into());
        }
        let bounded_p = self
            .residually_p_finite
            .values()
            .chain([&self.other_primes])
            .any(|c| c.value == Some(true));
        if bounded_p && self.residually_nilpotent.value != Some(true) {
            return Err("residually p-finite claim without a residual nilpotence claim".into());
        }
        if self.lcs_length == LcsLength::Two && self.residually_nilpotent.value != Some(false) && !self.is_abelian() {
            return Err("length 2 but not claimed non-residually-nilpotent".into());
        }
        if self.residually_nilpotent.is_proven(false)
            && self
                .residually_p_finite
                .values()
                .chain([&self.other_primes])
                .any(|c| c.value == Some(true))
        {
            return Err("residually p-finite claimed for a group that is not residually nilpotent".into());
        }
        if self.witnesses.iter().any(|w| w.anchor.is_empty() || w.anchor != w.criterion.anchor()) {
            return Err("witness anchor not from the citation table".into());
        }
        Ok(())
    }
}

/// Integer with a typographic minus sign, as used in evidence strings.
pub(crate) fn show(v: &BigInt) -> String {
    if v.is_negative() {
        format!("−{}", v.abs())
    } else {
        v.to_string()
    }
}
