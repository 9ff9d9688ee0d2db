//! Rejection stages shared by the root-construction pipelines.

use std::fmt;

/// Why a root construction gave up. The first four stages belong to the
/// ptolemaic pipeline, the next three to the split pipeline;
/// `FinalVerificationFailed` is shared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectionStage {
    NotConnected,
    NotChordal,
    AssignmentInfeasible,
    FinalVerificationFailed,
    TooManyCliques,
    IntersectionTooSmall,
    NotHereditaryCliqueHelly,
}

impl RejectionStage {
    pub fn name(self) -> &'static str {
        match self {
            RejectionStage::NotConnected => "not-connected",
            RejectionStage::NotChordal => "not-chordal",
            RejectionStage::AssignmentInfeasible => "assignment-infeasible",
            RejectionStage::FinalVerificationFailed => "final-verification-failed",
            RejectionStage::TooManyCliques => "too-many-cliques",
            RejectionStage::IntersectionTooSmall => "intersection-too-small",
            RejectionStage::NotHereditaryCliqueHelly => "not-hereditary-clique-helly",
        }
    }
}

impl fmt::Display for RejectionStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
