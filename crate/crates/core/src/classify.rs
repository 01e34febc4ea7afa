//! One-shot summary of every numerical classifier for a tuple.

use serde::{Deserialize, Serialize};

use crate::resolution::betti_table;
use crate::tuple::{
    buchsbaum_minimal_form, ci_power_form, cwl_from_trace, degree_of_tuple, is_minimal,
    reduction_trace, regularity_closed_form, TetTuple,
};

/// `minimal ⇒ !acm` and `linear_resolution ⇒ componentwise_linear`.
/// The trivial tuple has every flag false and no regularity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub tuple: TetTuple,
    pub trivial: bool,
    pub acm: bool,
    pub minimal: bool,
    pub buchsbaum_minimal_r: Option<u32>,
    pub schwartau: bool,
    pub componentwise_linear: bool,
    pub linear_resolution: bool,
    pub ci_power_r: Option<u32>,
    pub degree: u64,
    pub regularity: Option<u32>,
}

pub fn classify(t: &TetTuple) -> ClassificationReport {
    let a = t.entries();
    if t.is_trivial() {
        return ClassificationReport {
            tuple: *t,
            trivial: true,
            acm: false,
            minimal: false,
            buchsbaum_minimal_r: None,
            schwartau: false,
            componentwise_linear: false,
            linear_resolution: false,
            ci_power_r: None,
            degree: 0,
            regularity: None,
        };
    }
    let trace = reduction_trace(t);
    let table = betti_table(t).expect("non-trivial tuples always have a table");
    ClassificationReport {
        tuple: *t,
        trivial: false,
        acm: trace.is_acm(),
        minimal: is_minimal(t),
        buchsbaum_minimal_r: buchsbaum_minimal_form(t),
        schwartau: a[1] == 0 && a[4] == 0,
        componentwise_linear: cwl_from_trace(&trace),
        linear_resolution: table.is_linear(),
        ci_power_r: ci_power_form(t),
        degree: degree_of_tuple(t),
        regularity: regularity_closed_form(t).ok(),
    }
}
