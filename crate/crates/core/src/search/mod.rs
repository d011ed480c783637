//! Searches over all graphs of an order and the records they produce.

mod queries;
mod record;
mod space;
mod theorems;

pub use queries::{
    achievable_diameters, circulant_diameter2_mp2, claimed_diameters, construct_diameter_two, diameter2_mp2_exists,
    diameter_two_claimed, ex_minus, ex_minus_construction, gex, mex, mu, mu_construction, mu_table, ramsey_degree_bound,
    ramsey_r34, Mode, CIRCULANT_MAX_ORDER,
};
pub use record::{
    append_records, canonical_sort, load_dir, load_verified, parse_records, read_records, read_records_from,
    BoundsRecord, QueryKind, RecordValue, SearchRecord, SCHEMA_VERSION, WITNESS_CAP,
};
pub use space::SearchSpace;
pub use theorems::{
    suite_names, verify_theorems, CIRCULANT_GAP, verify_theorems_with, Counterexample, Fault, Profile, SuiteOutcome, TheoremReport,
};
