//! The verifiable claim set and its residue-class applicability.

/// Everything the sweeper can check. Identifiers are the stable CLI names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Claim {
    /// sigma_01 sign formula for p = 1 mod 4
    Thm11,
    /// sigma_02 sign formula for p = 1 mod 4 (per primitive root)
    Thm12,
    /// g-free sigma_02 form vs the general form, p = 5 mod 8
    Thm125Mod8,
    /// sigma_01 sign for p = 3 mod 4
    Sun3Mod4,
    /// det(M_p) for p = 5 mod 8: float oracle plus exact sign relation
    Cor11,
    /// product of (j^2 - i^2) mod p vs its closed form
    Lemma21,
    /// Chowla: n! vs the fundamental unit
    Lemma22,
    /// Williams-Currie: 2^((p-1)/4) vs class numbers
    Lemma23,
    /// root-of-unity Vandermonde product vs closed form
    Lemma24,
    /// Mordell: n! vs h(-p) for p = 3 mod 4
    Mordell,
    /// pair counts, r_k sums, and complete character sums
    ProofIdentities,
    /// sign of x -> ax equals the Legendre symbol, all units a
    Zolotarev,
    /// cyclotomic polynomial splitting mod p
    PhiSplit,
    /// inversion-count sign vs modular-ratio sign, all sequence pairs
    CrossOracle,
}

impl Claim {
    pub const ALL: [Claim; 14] = [
        Claim::Thm11,
        Claim::Thm12,
        Claim::Thm125Mod8,
        Claim::Sun3Mod4,
        Claim::Cor11,
        Claim::Lemma21,
        Claim::Lemma22,
        Claim::Lemma23,
        Claim::Lemma24,
        Claim::Mordell,
        Claim::ProofIdentities,
        Claim::Zolotarev,
        Claim::PhiSplit,
        Claim::CrossOracle,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Thm11 => "thm1.1",
            Claim::Thm12 => "thm1.2",
            Claim::Thm125Mod8 => "thm1.2-5mod8",
            Claim::Sun3Mod4 => "sun-3mod4",
            Claim::Cor11 => "cor1.1",
            Claim::Lemma21 => "lemma2.1",
            Claim::Lemma22 => "lemma2.2",
            Claim::Lemma23 => "lemma2.3",
            Claim::Lemma24 => "lemma2.4",
            Claim::Mordell => "mordell",
            Claim::ProofIdentities => "proof-identities",
            Claim::Zolotarev => "zolotarev",
            Claim::PhiSplit => "phi-split",
            Claim::CrossOracle => "cross-oracle",
        }
    }

    pub fn parse(s: &str) -> Option<Claim> {
        Claim::ALL.into_iter().find(|c| c.id() == s)
    }

    /// Whether the claim says anything about this prime.
    pub fn applies(self, p: u64) -> bool {
        match self {
            Claim::Thm11 | Claim::Thm12 | Claim::Lemma22 | Claim::Lemma23 => p % 4 == 1,
            Claim::Thm125Mod8 | Claim::Cor11 => p % 8 == 5,
            Claim::Sun3Mod4 => p % 4 == 3,
            Claim::Mordell => p % 4 == 3 && p > 3,
            Claim::Lemma24 => p > 3,
            Claim::Lemma21
            | Claim::ProofIdentities
            | Claim::Zolotarev
            | Claim::PhiSplit
            | Claim::CrossOracle => true,
        }
    }

    /// Whether records carry a primitive root (and g-mode applies).
    pub fn uses_g(self) -> bool {
        matches!(
            self,
            Claim::Thm12 | Claim::Thm125Mod8 | Claim::Cor11 | Claim::PhiSplit | Claim::CrossOracle
        )
    }

    /// Claims whose formula side is a single sign that the test hook can flip.
    pub fn supports_fault(self) -> bool {
        matches!(
            self,
            Claim::Thm11 | Claim::Thm12 | Claim::Thm125Mod8 | Claim::Sun3Mod4
        )
    }
}
