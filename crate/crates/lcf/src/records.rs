//! JSON records for verdicts, witnesses and scan lines.

use lcf_core::bounds::ScanLine;
use lcf_core::constructions::{Provenance, Witness};
use lcf_core::model::{CanonicalAssignment, LayerLog, Verdict};
use lcf_core::ExactCount;
use serde::{Deserialize, Serialize};

/// A canonical assignment: `z` is indexed by the lexicographic rank of the
/// `m`-subset of `[2m − d]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentRecord {
    pub m: u32,
    pub n: u32,
    pub d: u32,
    pub z: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<ProvenanceRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceRecord {
    /// `general-knt`, `balanced-extension` or `search`.
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<u32>,
    /// Intersection size of the layer a search witness came from.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
}

impl From<&Provenance> for ProvenanceRecord {
    fn from(p: &Provenance) -> Self {
        match p {
            Provenance::Construction(s) => ProvenanceRecord {
                family: s.family.as_str().to_string(),
                m: Some(s.m),
                t: Some(s.t),
                c: Some(s.c),
                d: None,
            },
            Provenance::Search { d } => {
                ProvenanceRecord { family: "search".to_string(), m: None, t: None, c: None, d: Some(*d) }
            }
        }
    }
}

impl AssignmentRecord {
    pub fn new(a: &CanonicalAssignment) -> Self {
        AssignmentRecord { m: a.m, n: a.n, d: a.d, z: a.z.clone(), provenance: None }
    }

    pub fn to_canonical(&self) -> lcf_core::Result<CanonicalAssignment> {
        CanonicalAssignment::new(self.m, self.n, self.d, self.z.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerRecord {
    pub d: u32,
    pub states: u64,
    pub min_value: Option<String>,
    pub above_chromatic: bool,
    pub completed: bool,
}

impl From<&LayerLog> for LayerRecord {
    fn from(l: &LayerLog) -> Self {
        LayerRecord {
            d: l.d,
            states: l.states,
            min_value: l.min_value.as_ref().map(ExactCount::to_decimal),
            above_chromatic: l.above_chromatic,
            completed: l.completed,
        }
    }
}

/// Counts are decimal strings so they survive any JSON reader.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub n: u32,
    pub m: u32,
    pub relation: String,
    pub chromatic: String,
    pub min_value: Option<String>,
    pub witness: Option<AssignmentRecord>,
    pub witness_value: Option<String>,
    pub evidence: String,
    pub layers: Vec<LayerRecord>,
    pub notes: Vec<String>,
}

impl From<&Verdict> for VerdictRecord {
    fn from(v: &Verdict) -> Self {
        VerdictRecord {
            n: v.n,
            m: v.m,
            relation: v.relation.as_str().to_string(),
            chromatic: v.chromatic.to_decimal(),
            min_value: v.min_value.as_ref().map(ExactCount::to_decimal),
            witness: v.witness.as_ref().map(AssignmentRecord::new),
            witness_value: v.witness_value.as_ref().map(ExactCount::to_decimal),
            evidence: v.evidence.as_str().to_string(),
            layers: v.layers.iter().map(LayerRecord::from).collect(),
            notes: v.notes.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub n: u32,
    pub m: u32,
    pub found: bool,
    pub chromatic: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<AssignmentRecord>,
}

impl WitnessRecord {
    pub fn new(n: u32, m: u32, chromatic: &ExactCount, w: Option<&Witness>) -> Self {
        WitnessRecord {
            n,
            m,
            found: w.is_some(),
            chromatic: chromatic.to_decimal(),
            value: w.map(|w| w.value.to_decimal()),
            witness: w.map(|w| AssignmentRecord {
                provenance: Some(ProvenanceRecord::from(&w.provenance)),
                ..AssignmentRecord::new(&w.assignment)
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FailingRecord {
    pub d: u32,
    pub parts: Vec<u32>,
    pub bound: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub m: u32,
    pub n: u32,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failing_composition: Option<FailingRecord>,
    pub near_ties: u32,
    pub evaluations: u64,
}

impl From<&ScanLine> for ScanRecord {
    fn from(l: &ScanLine) -> Self {
        ScanRecord {
            m: l.m,
            n: l.n,
            status: l.status.as_str().to_string(),
            failing_composition: l
                .failing
                .as_ref()
                .map(|f| FailingRecord { d: f.d, parts: f.parts.clone(), bound: f.bound }),
            near_ties: l.near_ties,
            evaluations: l.evaluations,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lcf_core::exact::{min_list_count, SearchBudget};

    #[test]
    fn assignment_round_trip() {
        let a = CanonicalAssignment::uniform(5, 3).unwrap();
        let r = AssignmentRecord::new(&a);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"m":3,"n":5,"d":3,"z":[5]}"#);
        let back: AssignmentRecord = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_canonical().unwrap(), a);
    }

    #[test]
    fn verdict_counts_are_strings() {
        let v = min_list_count(4, 3, &SearchBudget::default()).unwrap();
        let j = serde_json::to_value(VerdictRecord::from(&v)).unwrap();
        assert_eq!(j["relation"], "equal");
        assert_eq!(j["min_value"], "54");
    }
}
