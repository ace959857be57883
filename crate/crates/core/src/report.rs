//! Validation reports shared by every validator in the crate.

use std::fmt;

/// The axiom or condition a violation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Shape,
    Parity,
    Associativity,
    LeftUnit,
    RightUnit,
    Grading,
    OddUnit,
    StarInvolution,
    StarParity,
    StarSignRule,
    Degenerate,
    TraceSymmetry,
    OddTrace,
    NotEven,
    NotSemisimple,
    NotInvertible,
    Bimodule,
    PhiAssociativity,
    Reality,
    MissingStar,
    StarFlavor,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Shape => "shape",
            Rule::Parity => "parity",
            Rule::Associativity => "associativity",
            Rule::LeftUnit => "left-unit",
            Rule::RightUnit => "right-unit",
            Rule::Grading => "grading",
            Rule::OddUnit => "odd-unit",
            Rule::StarInvolution => "star-involution",
            Rule::StarParity => "star-parity",
            Rule::StarSignRule => "star-sign-rule",
            Rule::Degenerate => "degenerate",
            Rule::TraceSymmetry => "trace-symmetry",
            Rule::OddTrace => "odd-trace",
            Rule::NotEven => "not-even",
            Rule::NotSemisimple => "not-semisimple",
            Rule::NotInvertible => "not-invertible",
            Rule::Bimodule => "bimodule",
            Rule::PhiAssociativity => "phi-associativity",
            Rule::Reality => "reality",
            Rule::MissingStar => "missing-star",
            Rule::StarFlavor => "star-flavor",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    /// Basis indices exhibiting the failure.
    pub witness: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}", self.rule, self.witness)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// Keeps at most this many violations per rule; the rest are only counted.
const PER_RULE_LIMIT: usize = 16;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    violations: Vec<Violation>,
    suppressed: usize,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn suppressed(&self) -> usize {
        self.suppressed
    }

    pub fn has(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }

    pub fn push(&mut self, rule: Rule, witness: Vec<usize>, detail: impl Into<String>) {
        if self.violations.iter().filter(|v| v.rule == rule).count() >= PER_RULE_LIMIT {
            self.suppressed += 1;
            return;
        }
        self.violations.push(Violation {
            rule,
            witness,
            detail: detail.into(),
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.suppressed += other.suppressed;
        for v in other.violations {
            self.push(v.rule, v.witness, v.detail);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        if self.suppressed > 0 {
            write!(f, "; ... {} more", self.suppressed)?;
        }
        Ok(())
    }
}
