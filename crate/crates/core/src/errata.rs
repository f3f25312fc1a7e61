//! Known discrepancies between stated formulas and what the oracles
//! certify.
//!
//! A failing check of an uncorrected formula is reported as a documented discrepancy
//! only when its anchor appears here; anything else is a plain failure.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Erratum {
    /// Anchor of the affected check.
    pub anchor: &'static str,
    pub summary: &'static str,
    pub correction: &'static str,
}

pub const KNOWN: &[Erratum] = &[Erratum {
    anchor: "cone.m.recurrence",
    summary: "the uncorrected middle coefficient B of the solid-cone M recurrence \
              is missing a factor; it is right only when n = m",
    correction: "multiply B by (p-2n-2mu-d)/(p-m-n-2mu-d), which is what the \
                 univariate M recurrence gives after the parameter shift \
                 n -> n-m, p -> p-2alpha-2m, q -> q+2alpha+2m",
}];

/// The registered erratum for `anchor`, if any.
pub fn lookup(anchor: &str) -> Option<&'static Erratum> {
    KNOWN.iter().find(|e| e.anchor == anchor)
}
