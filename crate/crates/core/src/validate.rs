//! Law-violation reports with concrete witnesses.

use std::fmt;

use serde::Serialize;

/// One violated law, with the elements that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "law", rename_all = "snake_case")]
pub enum Violation {
    /// `(a·b)·c != a·(b·c)`.
    Associativity { a: usize, b: usize, c: usize },
    /// `left·right` should equal the non-identity operand.
    Identity { left: usize, right: usize },
    /// The declared zero does not absorb `element`.
    Zero { zero: usize, element: usize },
    /// Acting by the identity moves `element`.
    ActUnit { element: usize },
    /// `x·(st) != (x·s)·t` (mirrored for left acts).
    ActAssociativity { element: usize, s: usize, t: usize },
    /// Centred flag set but the fixed-point count is not one.
    NotCentred { fixed_points: Vec<usize> },
    /// Empty carrier under the rejecting emptiness policy.
    EmptyCarrier,
    /// `h(x·s) != h(x)·s`.
    Equivariance { element: usize, s: usize },
    /// `a ~ b` but `a·s !~ b·s`.
    Compatibility { a: usize, b: usize, s: usize },
    /// Representative table is not a valid least-representative labelling.
    Representative { element: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Associativity { a, b, c } => write!(f, "associativity fails at ({a},{b},{c})"),
            Violation::Identity { left, right } => write!(f, "identity law fails at ({left},{right})"),
            Violation::Zero { zero, element } => write!(f, "zero {zero} does not absorb {element}"),
            Violation::ActUnit { element } => write!(f, "unit law fails at {element}"),
            Violation::ActAssociativity { element, s, t } => {
                write!(f, "action associativity fails at ({element},{s},{t})")
            }
            Violation::NotCentred { fixed_points } => {
                write!(f, "centred act has fixed points {fixed_points:?}")
            }
            Violation::EmptyCarrier => write!(f, "empty carrier"),
            Violation::Equivariance { element, s } => {
                write!(f, "equivariance fails at (a={element}, s={s})")
            }
            Violation::Compatibility { a, b, s } => {
                write!(f, "{a} ~ {b} but not after acting by {s}")
            }
            Violation::Representative { element } => {
                write!(f, "bad representative for element {element}")
            }
        }
    }
}

/// Every violated law of a structure. Empty iff the structure is valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub(crate) fn into_result(self) -> crate::Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(crate::Error::Laws(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
