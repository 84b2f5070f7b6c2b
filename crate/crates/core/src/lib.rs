//! Monomial ideals containing pure powers: lex-plus-powers ideals, Macaulay
//! growth bounds, linkage and face-vector tools.

#![no_std]

extern crate alloc;

pub mod degree_sequence;
pub mod egh;
pub mod error;
pub mod ideal;
pub mod kk;
pub mod linkage;
pub mod lpp;
pub mod macaulay;
pub mod monomial;
pub mod piece;
pub mod scan;
pub mod text;

pub use degree_sequence::DegreeSequence;
pub use egh::{
    cb_bound, egh_check, francisco_ideal, francisco_link, mu_bound_check, mu_extremal,
    mu_quotient_bound_check, CBParameters,
};
pub use error::{Error, Result};
pub use ideal::{hilbert_function, ideal_colon, multiplicity, HilbertFunction, MonomialIdeal};
pub use kk::{
    complex_of, complex_to_fvector, fvector_via_hilbert, kk_valid, kk_violation, realize_fvector,
    stanley_reisner, FVector, SimplicialComplex,
};
pub use linkage::{
    duality_check, duality_table, link, link_mu_check, mu_in_quotient, socle_monomials, socle_type,
    two_var_link, two_var_profile, TwoVarProfile,
};
pub use lpp::{
    clements_lindstrom, is_lpp, is_segment, is_spp, is_strongly_stable, lex_segment, lpp_piece,
    minus, plus, sigma, stabilize_spp, two_var_lpp, ClCertificate, DimensionSequence,
    SliceDecomposition,
};
pub use macaulay::{
    bracket, classical_growth, growth, is_admissible_hf, macaulay_growth, macaulay_rep, realize_hf,
    MacaulayRep,
};
pub use monomial::{lex_compare, Monomial};
pub use piece::{multiply_piece, GradedPiece};
pub use scan::{egh_scan, enumerate_ideals, ScanConfig, ScanReport, Violation};
pub use text::{parse_ideal, parse_monomial};
