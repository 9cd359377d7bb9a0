//! Named sub-check verdicts with counterexample witnesses.

use std::fmt;

use crate::exactlin::Vector;

/// Counterexample: the basis indices (0-based) where an identity failed and
/// the defect, i.e. left side minus right side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub defect: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Informational flags are reported but do not affect the verdict.
    pub informational: bool,
    /// Number of basis tuples evaluated, and how many of them failed.
    pub evaluated: usize,
    pub failed: usize,
    /// Present exactly when `passed` is false.
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub title: String,
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new(title: impl Into<String>) -> Self {
        CheckReport {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Appends every check of `other`, prefixing names with `prefix`.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}{}", c.name);
            }
            self.checks.push(c);
        }
    }

    /// Conjunction of all non-informational verdicts.
    pub fn passed(&self) -> bool {
        self.checks.iter().filter(|c| !c.informational).all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Verdict of the named check; panics if absent.
    pub fn verdict(&self, name: &str) -> bool {
        self.get(name)
            .unwrap_or_else(|| panic!("no check named {name:?} in report {:?}", self.title))
            .passed
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.informational && !c.passed)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            let tag = match (c.passed, c.informational) {
                (true, false) => "PASS",
                (false, false) => "FAIL",
                (true, true) => "yes ",
                (false, true) => "no  ",
            };
            write!(f, "  {tag} {} ({}/{})", c.name, c.evaluated - c.failed, c.evaluated)?;
            if let Some(w) = &c.witness {
                let idx: Vec<String> = w.indices.iter().map(|i| (i + 1).to_string()).collect();
                write!(f, " at ({}): {}", idx.join(","), w.defect)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Accumulates per-tuple outcomes into a [`Check`], keeping the first
/// failing tuple as the witness.
#[derive(Debug)]
pub struct Tally {
    name: String,
    informational: bool,
    evaluated: usize,
    failed: usize,
    witness: Option<Witness>,
}

impl Tally {
    pub fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            informational: false,
            evaluated: 0,
            failed: 0,
            witness: None,
        }
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    /// Records one tuple whose identity holds iff `defect` is zero.
    pub fn defect(&mut self, indices: &[usize], defect: Vector) {
        self.evaluated += 1;
        if !defect.is_zero() {
            self.failed += 1;
            if self.witness.is_none() {
                self.witness = Some(Witness {
                    indices: indices.to_vec(),
                    defect,
                });
            }
        }
    }

    /// Records one tuple comparing two vectors; the defect is `lhs - rhs`.
    pub fn compare(&mut self, indices: &[usize], lhs: &Vector, rhs: &Vector) {
        self.defect(indices, lhs - rhs);
    }

    /// Records a tuple with a precomputed verdict; `defect` is kept as the
    /// witness when `ok` is false.
    pub fn outcome(&mut self, indices: &[usize], ok: bool, defect: Vector) {
        self.evaluated += 1;
        if !ok {
            self.failed += 1;
            if self.witness.is_none() {
                self.witness = Some(Witness {
                    indices: indices.to_vec(),
                    defect,
                });
            }
        }
    }

    pub fn finish(self) -> Check {
        Check {
            name: self.name,
            passed: self.failed == 0,
            informational: self.informational,
            evaluated: self.evaluated,
            failed: self.failed,
            witness: self.witness,
        }
    }
}

/// Single yes/no flag with an optional witness on failure.
pub fn flag(name: impl Into<String>, ok: bool, witness: Option<Witness>) -> Check {
    Check {
        name: name.into(),
        passed: ok,
        informational: false,
        evaluated: 1,
        failed: usize::from(!ok),
        witness: if ok {
            None
        } else {
            Some(witness.unwrap_or(Witness {
                indices: Vec::new(),
                defect: Vector::zeros(0),
            }))
        },
    }
}

/// Like [`flag`] but informational.
pub fn info(name: impl Into<String>, ok: bool, witness: Option<Witness>) -> Check {
    Check {
        informational: true,
        ..flag(name, ok, witness)
    }
}
