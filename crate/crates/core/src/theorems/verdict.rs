use serde::{Deserialize, Serialize};

/// Relative width of the tolerance band applied to every inequality.
pub const STRICT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
}

impl Relation {
    /// Strict relations must clear a band of `STRICT_TOL·max(1, |lhs|, |rhs|)`.
    pub fn test(self, lhs: f64, rhs: f64) -> bool {
        let band = STRICT_TOL * 1f64.max(lhs.abs()).max(rhs.abs());
        match self {
            Relation::Gt => lhs > rhs + band,
            Relation::Lt => lhs < rhs - band,
            Relation::Le => lhs <= rhs + band,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClauseStatus {
    Satisfied,
    Violated,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub lhs: Option<f64>,
    pub relation: Relation,
    pub rhs: Option<f64>,
    pub status: ClauseStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl Clause {
    pub fn evaluate(name: &str, lhs: f64, relation: Relation, rhs: f64) -> Clause {
        let status = if relation.test(lhs, rhs) { ClauseStatus::Satisfied } else { ClauseStatus::Violated };
        Clause { name: name.to_string(), lhs: Some(lhs), relation, rhs: Some(rhs), status, note: None }
    }

    pub fn not_applicable(name: &str, relation: Relation, note: impl Into<String>) -> Clause {
        Clause {
            name: name.to_string(),
            lhs: None,
            relation,
            rhs: None,
            status: ClauseStatus::NotApplicable,
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Clause {
        self.note = Some(note.into());
        self
    }

    pub fn is_violated(&self) -> bool {
        self.status == ClauseStatus::Violated
    }
}

/// `holds` is true iff at least one clause was evaluated and none was violated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionVerdict {
    pub holds: bool,
    pub clauses: Vec<Clause>,
}

impl ConditionVerdict {
    pub fn from_clauses(clauses: Vec<Clause>) -> Self {
        let evaluated = clauses.iter().any(|c| c.status != ClauseStatus::NotApplicable);
        let holds = evaluated && clauses.iter().all(|c| !c.is_violated());
        ConditionVerdict { holds, clauses }
    }

    pub fn failed(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.is_violated())
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }
}
