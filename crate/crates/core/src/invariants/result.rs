use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::{write_tuple, MultiIdeal};
use crate::polyhedra::WeightVector;
use crate::rational::Rational;

/// Jet orders `m = (m_1, …, m_s)`, one per factor of a multiideal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JetOrderVector(Vec<u64>);

impl JetOrderVector {
    pub fn new(orders: Vec<u64>) -> Self {
        Self(orders)
    }

    pub fn for_pair(pair: &MultiIdeal, orders: Vec<u64>) -> Result<Self> {
        if orders.len() != pair.len() {
            return Err(Error::JetOrderLength {
                expected: pair.len(),
                found: orders.len(),
            });
        }
        Ok(Self(orders))
    }

    pub fn orders(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|m| = Σ m_i`.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for JetOrderVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum InvariantValue {
    MinusInfinity,
    Finite(Rational),
}

impl InvariantValue {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            InvariantValue::Finite(v) => Some(v),
            InvariantValue::MinusInfinity => None,
        }
    }

    pub fn is_minus_infinity(&self) -> bool {
        matches!(self, InvariantValue::MinusInfinity)
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::MinusInfinity => f.write_str("-inf"),
            InvariantValue::Finite(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Weight(WeightVector),
    JetOrder(JetOrderVector),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Weight(w) => write!(f, "w={w}"),
            Witness::JetOrder(m) => write!(f, "m={m}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    /// A matching exact lower bound is known.
    Certified,
    /// Only a bounded search was done; the value is an upper estimate.
    BoxBounded(u64),
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Certified => f.write_str("certified"),
            Certificate::BoxBounded(b) => write!(f, "box-bounded({b})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Toric divisors: selection-region LPs plus box enumeration.
    ToricRegions,
    /// Minimum of `s_m` over jet orders.
    JetSweep,
    /// Facets of the Newton polyhedron.
    NewtonFacets,
    /// Minimum of `z_m` over jet orders.
    ZmSweep,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Route::ToricRegions => "toric-regions",
            Route::JetSweep => "jet-sweep",
            Route::NewtonFacets => "newton-facets",
            Route::ZmSweep => "zm-sweep",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantResult {
    pub value: InvariantValue,
    pub witness: Witness,
    pub certificate: Certificate,
    pub route: Route,
    /// Exact lower bound, when the route produces one.
    pub lower_bound: Option<Rational>,
}

impl InvariantResult {
    pub fn is_certified(&self) -> bool {
        self.certificate == Certificate::Certified
    }
}

impl fmt::Display for InvariantResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, witness {}, {}", self.value, self.witness, self.certificate)
    }
}
