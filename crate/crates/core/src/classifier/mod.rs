//! Almost-cyclic classification: exhaustive search over (character, class)
//! pairs, the bundled classification table dataset, and the verification
//! suites that tie computed spectra back to it.

mod dataset;
mod search;
mod verify;

pub use dataset::{
    load_bundled, load_path, parse_dataset, EValue, EllCondition, RowScope, TableRow,
    BUNDLED_SPIN_BOUND_FAILURES, BUNDLED_TABLES_CSV,
};
pub use search::{
    is_subnatural, is_subnatural_partition, search_almost_cyclic, CharLabel, ClassLabel,
    ClassificationHit, SEARCH_DEGREE_CAP,
};
pub use verify::{
    binary_digit_sum, collect_hits, spin_degree_bound_holds, verify_bounds, verify_completeness,
    verify_corollaries, verify_generation, verify_oracles, verify_spin_degree_bound,
    verify_table_rows, verify_wn_equivalence, CheckRecord, HitCache, VerificationReport,
    SWEEP_CHARACTERISTICS, SWEEP_PRIMES,
};
