use std::fmt;

use crate::exactlin::{decode_index, Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// First failing basis tuple (lexicographic) and the residual `lhs - rhs`
/// evaluated on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

/// Ordered list of axiom checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, name: &str, status: Status, witness: Option<Witness>, note: Option<String>) {
        self.checks.push(Check { name: name.to_string(), status, witness, note });
    }

    /// Records whether two linear maps agree; on failure the witness is the
    /// first differing input basis tuple, decoded with `input_dims`.
    pub fn compare(&mut self, name: &str, lhs: &Matrix, rhs: &Matrix, input_dims: &[usize]) -> bool {
        if lhs.shape() != rhs.shape() {
            let note = format!("shape {:?} vs {:?}", lhs.shape(), rhs.shape());
            self.push(name, Status::Fail, None, Some(note));
            return false;
        }
        match lhs.first_difference(rhs) {
            None => {
                self.push(name, Status::Pass, None, None);
                true
            }
            Some((col, residual)) => {
                let w = Witness { tuple: decode_index(col, input_dims), residual };
                self.push(name, Status::Fail, Some(w), None);
                false
            }
        }
    }

    /// Records that a map vanishes identically.
    pub fn vanishes(&mut self, name: &str, m: &Matrix, input_dims: &[usize]) -> bool {
        let zero = Matrix::zeros(m.field(), m.rows(), m.cols());
        self.compare(name, m, &zero, input_dims)
    }

    /// Records a yes/no condition without a witness.
    pub fn expect(&mut self, name: &str, ok: bool, note: &str) -> bool {
        let note = (!ok && !note.is_empty()).then(|| note.to_string());
        self.push(name, if ok { Status::Pass } else { Status::Fail }, None, note);
        ok
    }

    /// Records a failure whose witness is an ambient vector rather than a
    /// basis tuple.
    pub fn fail_with(&mut self, name: &str, residual: Vec<Scalar>, note: &str) {
        self.push(name, Status::Fail, Some(Witness { tuple: Vec::new(), residual }), Some(note.to_string()));
    }

    pub fn skip(&mut self, name: &str, reason: &str) {
        self.push(name, Status::Skipped, None, Some(reason.to_string()));
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}/{}", c.name);
            }
            self.checks.push(c);
        }
    }

    /// No check failed (skipped checks are tolerated).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// Every check passed; skipped checks count as failures.
    pub fn passed_strict(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn status_of(&self, name: &str) -> Option<Status> {
        self.get(name).map(|c| c.status)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{:<8} {}", c.status.as_str(), c.name)?;
            if let Some(w) = &c.witness {
                let res: Vec<String> = w.residual.iter().map(|s| s.to_string()).collect();
                write!(f, "  at {:?} residual [{}]", w.tuple, res.join(", "))?;
            }
            if let Some(n) = &c.note {
                write!(f, "  ({n})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
