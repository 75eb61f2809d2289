use std::fmt;

use num_bigint::BigInt;

use crate::pp::{BoxDims, SymmetryClass};

/// Which pipeline produced a count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Oracle,
    Lgv,
    Formula,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Lgv => "lgv",
            Method::Formula => "formula",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How the sign of a count is fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignConvention {
    /// Signs measured against the class's reference partition.
    Reference,
    /// Only the absolute value is meaningful.
    AbsoluteValue,
    /// The sign is believed, but not proven, to be +1.
    ConjecturedPositive,
    /// Sign fixed by the lattice path weights, which may differ from the
    /// reference partition by a global sign.
    PathNormalized,
}

impl SignConvention {
    pub fn name(self) -> &'static str {
        match self {
            SignConvention::Reference => "reference",
            SignConvention::AbsoluteValue => "absolute",
            SignConvention::ConjecturedPositive => "conjectured-positive",
            SignConvention::PathNormalized => "path-normalized",
        }
    }
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An exact signed enumeration result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedCount {
    pub value: BigInt,
    pub method: Method,
    pub class: SymmetryClass,
    pub bx: BoxDims,
    pub sign_convention: SignConvention,
}

impl SignedCount {
    pub fn new(value: BigInt, method: Method, class: SymmetryClass, bx: BoxDims) -> Self {
        Self {
            value,
            method,
            class,
            bx,
            sign_convention: SignConvention::Reference,
        }
    }

    pub fn with_convention(mut self, c: SignConvention) -> Self {
        self.sign_convention = c;
        self
    }
}
