//! Contradiction certificates: structured records of why a configuration
//! cannot occur, carrying the exact quantities that witness it.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::ExactScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    /// A computed `|A|²` is not the value Münzner's restriction allows.
    MunznerMismatch,
    /// The defining equation has no real root.
    NoRealSolution,
    /// The equation forces a quantity to vanish that has a definite sign.
    SignImpossibility,
    /// All alternatives were refuted.
    TotallyGeodesic,
    /// No contradiction was found.
    Consistent,
}

impl CertificateKind {
    pub fn name(self) -> &'static str {
        match self {
            CertificateKind::MunznerMismatch => "MunznerMismatch",
            CertificateKind::NoRealSolution => "NoRealSolution",
            CertificateKind::SignImpossibility => "SignImpossibility",
            CertificateKind::TotallyGeodesic => "TotallyGeodesic",
            CertificateKind::Consistent => "Consistent",
        }
    }

    pub fn is_contradiction(self) -> bool {
        matches!(
            self,
            CertificateKind::MunznerMismatch
                | CertificateKind::NoRealSolution
                | CertificateKind::SignImpossibility
        )
    }
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub kind: CertificateKind,
    /// Human-readable statement of the witnessing computation.
    pub summary: String,
    /// Named exact values, in the order they were derived.
    pub details: Vec<(String, ExactScalar)>,
    pub children: Vec<Certificate>,
}

impl Certificate {
    pub fn new(kind: CertificateKind, summary: impl Into<String>) -> Self {
        Certificate { kind, summary: summary.into(), details: Vec::new(), children: Vec::new() }
    }

    pub fn detail(mut self, name: impl Into<String>, value: ExactScalar) -> Self {
        self.details.push((name.into(), value));
        self
    }

    pub fn child(mut self, c: Certificate) -> Self {
        self.children.push(c);
        self
    }

    pub fn get(&self, name: &str) -> Option<&ExactScalar> {
        self.details.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.summary)?;
        for (name, value) in &self.details {
            write!(f, "; {name} = {value}")?;
        }
        Ok(())
    }
}
