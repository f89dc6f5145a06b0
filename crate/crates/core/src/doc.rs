//! JSON document format.
//!
//! One envelope for frames, mass and belief tables, credal vertex lists,
//! scenarios, and reports. Rationals are strings (`"1/3"`, `"2"`), never
//! floats; subsets are arrays of element labels; vertex lists and table
//! rows are emitted in canonical order so serialized documents are
//! byte-stable.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::belief::{AxiomViolation, BeliefFunction, MassFunction};
use crate::condmass::CertificationReport;
use crate::conditioning::{ConditionalReport, ConditioningRule};
use crate::credal::{
    envelope_setfunction, polytope_vertices, CredalError, CredalSet, LinearConstraint,
    PartitionScenario, Relation, ScenarioError,
};
use crate::frame::{Frame, FrameError, FrameExt, Subset};
use crate::rational::{format_rat, parse_rat, Rat, RationalParseError};
use crate::setfn::{SetFunction, SetFunctionError};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format_version {got} (this build reads {want})")]
    Version { got: u32, want: u32 },
    #[error("document kind `{got}` cannot be used here (need {want})")]
    Kind { got: &'static str, want: &'static str },
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Rational(#[from] RationalParseError),
    #[error(transparent)]
    Axiom(#[from] AxiomViolation),
    #[error(transparent)]
    SetFunction(#[from] SetFunctionError),
    #[error(transparent)]
    Scenario(#[from] ScenarioError),
    #[error(transparent)]
    Credal(#[from] CredalError),
    #[error("unknown constraint relation `{0}` (use `<=`, `=`, `>=`)")]
    Relation(String),
    #[error("lower envelope of the document is not a belief function: {0}")]
    NotBelief(AxiomViolation),
}

/// A subset paired with a rational value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub set: Vec<String>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintEntry {
    pub coeffs: Vec<String>,
    pub relation: String,
    pub bound: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub set: Vec<String>,
    pub belief: String,
    pub plausibility: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StraddlerEntry {
    pub set: Vec<String>,
    pub cut: Vec<String>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StringEntry {
    pub head: usize,
    pub tail: Vec<usize>,
    pub set: Vec<String>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "scenario", rename_all = "kebab-case")]
pub enum ScenarioBody {
    Partition {
        cells: Vec<Vec<String>>,
        weights: Vec<String>,
    },
    Constraints {
        constraints: Vec<ConstraintEntry>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "report", rename_all = "kebab-case")]
pub enum ReportBody {
    Conditional {
        rule: String,
        event: Vec<String>,
        elements: Vec<String>,
        rows: Vec<ReportRow>,
    },
    Certification {
        event: Vec<String>,
        elements: Vec<String>,
        normalizer: String,
        inside: Vec<Entry>,
        straddling: Vec<StraddlerEntry>,
        strings: Vec<StringEntry>,
        conditional_mass: Vec<Entry>,
        certified: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Body {
    Frame {
        elements: Vec<String>,
    },
    Mass {
        elements: Vec<String>,
        entries: Vec<Entry>,
    },
    Belief {
        elements: Vec<String>,
        entries: Vec<Entry>,
    },
    Credal {
        elements: Vec<String>,
        vertices: Vec<Vec<String>>,
    },
    Scenario {
        elements: Vec<String>,
        #[serde(flatten)]
        scenario: ScenarioBody,
    },
    Report {
        #[serde(flatten)]
        report: ReportBody,
    },
}

impl Body {
    fn kind(&self) -> &'static str {
        match self {
            Body::Frame { .. } => "frame",
            Body::Mass { .. } => "mass",
            Body::Belief { .. } => "belief",
            Body::Credal { .. } => "credal",
            Body::Scenario { .. } => "scenario",
            Body::Report { .. } => "report",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub format_version: u32,
    #[serde(flatten)]
    pub body: Body,
}

fn subset_labels(subset: &Subset) -> Vec<String> {
    subset.labels().into_iter().map(str::to_owned).collect()
}

/// Value table in canonical subset order; `skip_zero` drops zero entries
/// (used for mass documents, where absent means zero).
fn table_entries(f: &SetFunction, skip_zero: bool) -> Vec<Entry> {
    use num::Zero;
    let frame = f.frame();
    let mut subsets: Vec<Subset> = frame.subsets().collect();
    subsets.sort();
    subsets
        .into_iter()
        .filter(|s| !skip_zero || !f.get(s).is_zero())
        .map(|s| Entry {
            value: format_rat(f.get(&s)),
            set: subset_labels(&s),
        })
        .collect()
}

impl Document {
    pub fn new(body: Body) -> Self {
        Document {
            format_version: FORMAT_VERSION,
            body,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, DocError> {
        let doc: Document = serde_json::from_str(text)?;
        if doc.format_version != FORMAT_VERSION {
            return Err(DocError::Version {
                got: doc.format_version,
                want: FORMAT_VERSION,
            });
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents always serialize");
        text.push('\n');
        text
    }

    // -- constructors from core values ------------------------------------

    pub fn from_frame(frame: &Frame) -> Self {
        Document::new(Body::Frame {
            elements: frame.labels().to_vec(),
        })
    }

    /// Mass document: focal sets only, canonical order.
    pub fn from_mass(mass: &MassFunction) -> Self {
        Document::new(Body::Mass {
            elements: mass.frame().labels().to_vec(),
            entries: table_entries(mass.set_function(), true),
        })
    }

    /// Belief document: the full `2^n` table, canonical order.
    pub fn from_belief(bel: &BeliefFunction) -> Self {
        Document::from_belief_table(bel.set_function())
    }

    /// Belief document from a raw table (possibly not a belief function;
    /// `check` consumes these unvalidated).
    pub fn from_belief_table(f: &SetFunction) -> Self {
        Document::new(Body::Belief {
            elements: f.frame().labels().to_vec(),
            entries: table_entries(f, false),
        })
    }

    pub fn from_credal(cs: &CredalSet) -> Self {
        Document::new(Body::Credal {
            elements: cs.frame().labels().to_vec(),
            vertices: cs
                .vertices()
                .iter()
                .map(|v| v.iter().map(format_rat).collect())
                .collect(),
        })
    }

    pub fn from_partition(ps: &PartitionScenario) -> Self {
        Document::new(Body::Scenario {
            elements: ps.frame().labels().to_vec(),
            scenario: ScenarioBody::Partition {
                cells: ps.cells().iter().map(subset_labels).collect(),
                weights: ps.weights().iter().map(format_rat).collect(),
            },
        })
    }

    pub fn from_constraints(frame: &Frame, constraints: &[LinearConstraint]) -> Self {
        Document::new(Body::Scenario {
            elements: frame.labels().to_vec(),
            scenario: ScenarioBody::Constraints {
                constraints: constraints
                    .iter()
                    .map(|c| ConstraintEntry {
                        coeffs: c.coeffs.iter().map(format_rat).collect(),
                        relation: match c.relation {
                            Relation::Le => "<=",
                            Relation::Eq => "=",
                            Relation::Ge => ">=",
                        }
                        .to_owned(),
                        bound: format_rat(&c.bound),
                    })
                    .collect(),
            },
        })
    }

    pub fn from_conditional(report: &ConditionalReport) -> Self {
        let bel = report.belief_function();
        let frame = bel.frame();
        let mut subsets: Vec<Subset> = frame.subsets().collect();
        subsets.sort();
        let rows = subsets
            .into_iter()
            .map(|s| ReportRow {
                belief: format_rat(bel.belief(&s)),
                plausibility: format_rat(&bel.plausibility(&s)),
                set: subset_labels(&s),
            })
            .collect();
        Document::new(Body::Report {
            report: ReportBody::Conditional {
                rule: match report.rule() {
                    ConditioningRule::Fh => "fh",
                    ConditioningRule::Ds => "ds",
                }
                .to_owned(),
                event: subset_labels(report.event()),
                elements: frame.labels().to_vec(),
                rows,
            },
        })
    }

    pub fn from_certification(report: &CertificationReport) -> Self {
        let fd = &report.decomposition;
        let frame = fd.event().frame();
        let inside = fd
            .inside_sets()
            .iter()
            .enumerate()
            .map(|(i, s)| Entry {
                set: subset_labels(s),
                value: format_rat(fd.raw_head_weight(i)),
            })
            .collect();
        let straddling = fd
            .straddling_sets()
            .iter()
            .zip(fd.cut_sets())
            .enumerate()
            .map(|(j, (raw, cut))| StraddlerEntry {
                set: subset_labels(raw),
                cut: subset_labels(&cut),
                value: format_rat(fd.raw_straddler_weight(j)),
            })
            .collect();
        let strings = report
            .strings
            .iter()
            .map(|s| StringEntry {
                head: s.head,
                tail: s.tail.clone(),
                set: subset_labels(&s.set),
                value: format_rat(&s.value),
            })
            .collect();
        let conditional_mass = match &report.mass {
            Ok(m) => table_entries(m.set_function(), true),
            Err(_) => Vec::new(),
        };
        Document::new(Body::Report {
            report: ReportBody::Certification {
                event: subset_labels(fd.event()),
                elements: frame.labels().to_vec(),
                normalizer: format_rat(fd.normalizer()),
                inside,
                straddling,
                strings,
                conditional_mass,
                certified: report.certified(),
            },
        })
    }

    // -- extractors back into core values ----------------------------------

    fn wrong_kind(&self, want: &'static str) -> DocError {
        DocError::Kind {
            got: self.body.kind(),
            want,
        }
    }

    /// The frame of any document kind that carries element labels.
    pub fn frame(&self) -> Result<Arc<Frame>, DocError> {
        let elements = match &self.body {
            Body::Frame { elements }
            | Body::Mass { elements, .. }
            | Body::Belief { elements, .. }
            | Body::Credal { elements, .. }
            | Body::Scenario { elements, .. } => elements,
            Body::Report { report } => match report {
                ReportBody::Conditional { elements, .. }
                | ReportBody::Certification { elements, .. } => elements,
            },
        };
        Ok(Frame::new(elements.iter().cloned())?)
    }

    pub fn to_mass(&self) -> Result<MassFunction, DocError> {
        let Body::Mass { entries, .. } = &self.body else {
            return Err(self.wrong_kind("mass"));
        };
        let frame = self.frame()?;
        let mut pairs = Vec::with_capacity(entries.len());
        for entry in entries {
            pairs.push((frame.subset(&entry.set)?, parse_rat(&entry.value)?));
        }
        Ok(MassFunction::from_entries(&frame, pairs)?)
    }

    /// The raw table of a belief document, unvalidated.
    pub fn to_set_function(&self) -> Result<SetFunction, DocError> {
        let Body::Belief { entries, .. } = &self.body else {
            return Err(self.wrong_kind("belief"));
        };
        let frame = self.frame()?;
        let mut f = SetFunction::zero(Arc::clone(&frame));
        for entry in entries {
            let subset = frame.subset(&entry.set)?;
            f.set(&subset, parse_rat(&entry.value)?);
        }
        Ok(f)
    }

    pub fn to_credal(&self) -> Result<CredalSet, DocError> {
        let Body::Credal { vertices, .. } = &self.body else {
            return Err(self.wrong_kind("credal"));
        };
        let frame = self.frame()?;
        let mut parsed = Vec::with_capacity(vertices.len());
        for v in vertices {
            let coords: Result<Vec<Rat>, _> = v.iter().map(|x| parse_rat(x)).collect();
            parsed.push(coords?);
        }
        Ok(CredalSet::new(frame, parsed)?)
    }

    pub fn to_partition(&self) -> Result<PartitionScenario, DocError> {
        let Body::Scenario {
            scenario: ScenarioBody::Partition { cells, weights },
            ..
        } = &self.body
        else {
            return Err(self.wrong_kind("scenario/partition"));
        };
        let frame = self.frame()?;
        let mut subsets = Vec::with_capacity(cells.len());
        for cell in cells {
            subsets.push(frame.subset(cell)?);
        }
        let parsed: Result<Vec<Rat>, _> = weights.iter().map(|w| parse_rat(w)).collect();
        Ok(PartitionScenario::new(frame, subsets, parsed?)?)
    }

    pub fn to_constraints(&self) -> Result<(Arc<Frame>, Vec<LinearConstraint>), DocError> {
        let Body::Scenario {
            scenario: ScenarioBody::Constraints { constraints },
            ..
        } = &self.body
        else {
            return Err(self.wrong_kind("scenario/constraints"));
        };
        let frame = self.frame()?;
        let mut parsed = Vec::with_capacity(constraints.len());
        for c in constraints {
            let coeffs: Result<Vec<Rat>, _> = c.coeffs.iter().map(|x| parse_rat(x)).collect();
            let relation = match c.relation.as_str() {
                "<=" => Relation::Le,
                "=" | "==" => Relation::Eq,
                ">=" => Relation::Ge,
                other => return Err(DocError::Relation(other.to_owned())),
            };
            parsed.push(LinearConstraint {
                coeffs: coeffs?,
                relation,
                bound: parse_rat(&c.bound)?,
            });
        }
        Ok((frame, parsed))
    }

    /// Lowers any representable document to a belief function: mass tables
    /// transform, belief tables validate, partitions take their cell mass,
    /// constraint systems and credal sets take their lower envelope (which
    /// must pass the belief-function check).
    pub fn to_belief(&self) -> Result<BeliefFunction, DocError> {
        match &self.body {
            Body::Mass { .. } => Ok(self.to_mass()?.belief()),
            Body::Belief { .. } => Ok(BeliefFunction::try_new(self.to_set_function()?)?),
            Body::Scenario {
                scenario: ScenarioBody::Partition { .. },
                ..
            } => Ok(crate::credal::partition_belief(&self.to_partition()?)),
            Body::Scenario {
                scenario: ScenarioBody::Constraints { .. },
                ..
            } => {
                let (frame, constraints) = self.to_constraints()?;
                let cs = polytope_vertices(&constraints, &frame)?;
                envelope_setfunction(&cs).verdict.map_err(DocError::NotBelief)
            }
            Body::Credal { .. } => {
                let cs = self.to_credal()?;
                envelope_setfunction(&cs).verdict.map_err(DocError::NotBelief)
            }
            Body::Frame { .. } | Body::Report { .. } => Err(self.wrong_kind("mass|belief|scenario|credal")),
        }
    }
}
