//! External classification results that the case analysis cites without
//! recomputing them.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Axiom {
    pub id: &'static str,
    pub statement: &'static str,
    pub citation: &'static str,
}

pub const DADOK_POLAR: &str = "DADOK-POLAR";
pub const GKW_BOUNDARY: &str = "GKW-BOUNDARY";
pub const DYNKIN_INDEX_BOUNDARY: &str = "S-DYNKIN-INDEX";
pub const SMALL_INDEX_POLAR: &str = "AEV-SMALL-INDEX";
pub const COHOMOGENEITY_LE_3: &str = "COHOM-LE-3";
pub const COHOMOGENEITY_4: &str = "COHOM-4";
pub const S3_CENTRAL_ELEMENT: &str = "S3-CENTRAL-ELEMENT";
pub const U3_NO_S3_BOUNDARY: &str = "U3-NO-S3-BOUNDARY";
pub const QUATERNION_TORIC: &str = "Q-TORIC";

const LEDGER: [Axiom; 9] = [
    Axiom {
        id: DADOK_POLAR,
        statement: "Polar irreducible representations are classified; a polar representation of a connected group is orbit-equivalent to a symmetric-space isotropy representation.",
        citation: "[D]",
    },
    Axiom {
        id: GKW_BOUNDARY,
        statement: "An irreducible representation of a compact connected simple Lie group whose orbit space has nonempty boundary is polar, toric, q-toric, or the half-spin representation of Spin(11).",
        citation: "[GKW]",
    },
    Axiom {
        id: DYNKIN_INDEX_BOUNDARY,
        statement: "An S^3-boundary component requires the Dynkin index of the complexified representation to be less than one.",
        citation: "[S, Corollary 13.4]",
    },
    Axiom {
        id: SMALL_INDEX_POLAR,
        statement: "Irreducible representations of simple groups with Dynkin index less than one are polar.",
        citation: "[A-E-V, Table 1]",
    },
    Axiom {
        id: COHOMOGENEITY_LE_3,
        statement: "A representation of cohomogeneity at most 3 is polar or has abstract copolarity 1.",
        citation: "[Str, Theorem 5.1]; [GOT, Theorem 1.1]; [GL, Corollary 1.6 and Example 1.9]",
    },
    Axiom {
        id: COHOMOGENEITY_4,
        statement: "Non-polar, non-reduced irreducible representations of cohomogeneity 4 of compact connected groups have abstract copolarity 2.",
        citation: "[GL, Theorem 1.11]",
    },
    Axiom {
        id: S3_CENTRAL_ELEMENT,
        statement: "In U(1) x SU(2) x SU(2) an isotropy group S^3 has its nontrivial central element central in G; its nonzero fixed space would be G-invariant, contradicting irreducibility.",
        citation: "structural argument on the centre of an SU(2) subgroup",
    },
    Axiom {
        id: U3_NO_S3_BOUNDARY,
        statement: "For U(1) x SU(3) no representation of the admissible reality types has an S^3-boundary component.",
        citation: "[S, section 13]; [A-E-V, Table 1]",
    },
    Axiom {
        id: QUATERNION_TORIC,
        statement: "Irreducible representations reducing to a group with identity component locally Sp(1)^k are q-toric, and k = 3.",
        citation: "[GG]",
    },
];

pub fn axiom_ledger() -> Vec<Axiom> {
    LEDGER.to_vec()
}

pub fn find(id: &str) -> Option<Axiom> {
    LEDGER.iter().copied().find(|a| a.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn ledger_shape() {
        let ledger = axiom_ledger();
        assert_eq!(ledger.len(), 9);
        let ids: BTreeSet<&str> = ledger.iter().map(|a| a.id).collect();
        assert_eq!(ids.len(), 9);
        assert!(find(QUATERNION_TORIC).is_some());
        assert!(find("NOPE").is_none());
    }
}
