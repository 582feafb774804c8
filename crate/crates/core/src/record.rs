//! Comparison records shared by the oracle, the equivalence experiments and
//! the command-line reports.

use serde::{Serialize, Serializer};

use crate::arith::ExactInt;
use crate::perms::Signature;

/// Where a number came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Closed form, or structured generation of necklaces.
    Formula,
    /// Exhaustive enumeration of cycles or words.
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RecordParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Signature>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub other_sigma: Option<Signature>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evaluation: Option<Vec<usize>>,
}

impl RecordParams {
    pub fn n(n: usize) -> Self {
        RecordParams {
            n,
            ..Default::default()
        }
    }

    pub fn sigma(sigma: &Signature, n: usize) -> Self {
        RecordParams {
            sigma: Some(sigma.clone()),
            n,
            ..Default::default()
        }
    }

    pub fn with_i(mut self, i: usize) -> Self {
        self.i = Some(i);
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_other(mut self, other: &Signature) -> Self {
        self.other_sigma = Some(other.clone());
        self
    }

    pub fn with_evaluation(mut self, evaluation: Vec<usize>) -> Self {
        self.evaluation = Some(evaluation);
        self
    }
}

/// One checked identity instance: `left` against `right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub claim: String,
    pub params: RecordParams,
    #[serde(serialize_with = "serialize_exact")]
    pub left: ExactInt,
    pub left_method: Method,
    #[serde(serialize_with = "serialize_exact")]
    pub right: ExactInt,
    pub right_method: Method,
    pub verdict: Verdict,
    /// A mismatch here is documented and does not fail verification.
    pub known_discrepancy: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationRecord {
    pub fn new(
        claim: impl Into<String>,
        params: RecordParams,
        (left, left_method): (ExactInt, Method),
        (right, right_method): (ExactInt, Method),
    ) -> Self {
        let verdict = if left == right {
            Verdict::Match
        } else {
            Verdict::Mismatch
        };
        VerificationRecord {
            claim: claim.into(),
            params,
            left,
            left_method,
            right,
            right_method,
            verdict,
            known_discrepancy: false,
            note: None,
        }
    }

    pub fn known_discrepancy(mut self, note: impl Into<String>) -> Self {
        self.known_discrepancy = true;
        self.note = Some(note.into());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_match(&self) -> bool {
        self.verdict == Verdict::Match
    }

    /// Mismatched and not a documented discrepancy.
    pub fn is_failure(&self) -> bool {
        !self.is_match() && !self.known_discrepancy
    }
}

/// Serialises an exact integer as a bare JSON number of any size.
pub fn serialize_exact<S: Serializer>(value: &ExactInt, serializer: S) -> Result<S::Ok, S::Error> {
    let number: serde_json::Number = value
        .to_string()
        .parse()
        .map_err(serde::ser::Error::custom)?;
    number.serialize(serializer)
}
