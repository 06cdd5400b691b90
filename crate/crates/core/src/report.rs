//! Report plumbing shared by builders, the oracle and the CLI.

use serde::{Deserialize, Serialize};

/// Version tag written into every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

/// Where a crossing-number value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Provenance {
    /// Iterative-deepening exhaustion met a planar planarization.
    #[serde(rename = "oracle-exact")]
    OracleExact,
    /// A verified lower-bound certificate met a verified upper witness.
    #[serde(rename = "certificate-lower+witness-upper")]
    CertificateLowerWitnessUpper,
    /// Stated by a formula and not re-verified.
    #[serde(rename = "paper-derived")]
    PaperDerived,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::OracleExact => "oracle-exact",
            Provenance::CertificateLowerWitnessUpper => "certificate-lower+witness-upper",
            Provenance::PaperDerived => "paper-derived",
        }
    }
}

/// A crossing value with its provenance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrValue {
    pub value: u64,
    pub provenance: Provenance,
}

impl CrValue {
    pub fn paper(value: u64) -> Self {
        CrValue {
            value,
            provenance: Provenance::PaperDerived,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn provenance_names() {
        for p in [
            Provenance::OracleExact,
            Provenance::CertificateLowerWitnessUpper,
            Provenance::PaperDerived,
        ] {
            let s = serde_json::to_string(&p).unwrap();
            assert_eq!(s, format!("\"{}\"", p.as_str()));
        }
    }
}
