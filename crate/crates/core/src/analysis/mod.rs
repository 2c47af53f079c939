//! Counting and classifying expansions: finite-depth enumeration, the
//! nested branching intervals, exact uniqueness decisions for eventually
//! periodic sequences and the dimension of the alternating attractor.

mod dimension;
mod enumerate;
mod lambda;
mod survey;
mod unique;

pub use dimension::{
    box_count_estimate, dimension_formula, hausdorff_dimension, ifs_disjoint, ifs_images, BoxCount,
    DimensionFormula,
};
pub use enumerate::{allowed_digits, count_expansions, enumerate_prefixes, ExpansionNode, MAX_COUNT_DEPTH};
pub use lambda::{
    branching_depth, branching_witness, lambda_interval_closed_form, lambda_interval_recursive, BranchNode,
    Split,
};
pub use survey::{survey, SurveyReport, SurveySample, GRID_BITS};
pub use unique::{
    countable_unique_family, parse_pattern, u_element, unique_eventually_periodic, v_set_word, Block,
    UniquenessCertificate,
};
