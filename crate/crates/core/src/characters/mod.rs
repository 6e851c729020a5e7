//! Exact ordinary character theory of S_n and A_n: border-strip character
//! values, restriction and splitting to A_n, character-based eigenvalue
//! spectra for prime-power classes, and two independent explicit-matrix
//! oracles.
//!
//! The character route (a root-of-unity transform of values on power classes)
//! is the production path; the explicit deleted-module and polytabloid
//! matrices exist to check it.

mod an;
mod charpoly;
mod gf;
mod mn;
mod specht;
mod spectrum;
mod table;
mod wn_oracle;

pub use an::{
    an_character_value, an_characters, an_class_size, an_classes, factorial, sn_centralizer_order,
    sn_character_value, sn_class_size, AnCharacter, SplitSign,
};
pub use charpoly::{charpoly_bigint, charpoly_mod, root_multiplicity_cyc};
pub use mn::mn_character;
pub use specht::{specht_matrix_oracle, specht_spectrum_with, SpechtModule, SPECHT_DEGREE_CAP};
pub use spectrum::{an_irrep_spectrum, sn_irrep_spectrum};
pub use table::{
    build_an_table, build_sn_table, sn_character_labels, sn_classes, CharacterTable, GroupKind,
};
pub use wn_oracle::{matrix_oracle_wn, matrix_spectrum_pn, ORACLE_DEGREE_CAP};
