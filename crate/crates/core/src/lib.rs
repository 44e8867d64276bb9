//! Linkage computations in local rings `k[x]/Q` at the origin: iterated links
//! `J : m^k`, reduction numbers, Koszul homology lengths and checks of the
//! accompanying structural statements.

pub mod error;
pub mod field;
pub mod groebner;
pub mod homology;
pub mod ideal;
pub mod linalg;
pub mod linkage;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod report;
pub mod ring;

pub use error::{ArithError, Error, Result};
pub use field::{Field, FieldElement};
pub use homology::{h1_upper_bound_check, koszul_h1_length, sym2_length, BoundOutcome, H1Record, Sym2Record};
pub use groebner::{module_length, syzygies, FreeVector, GroebnerBasis, Length, Submodule};
pub use ideal::{order, socle_link, Ideal, MPrimaryCertificate, MinimalGenerators, SocleLink};
pub use linkage::{
    build_tower, link_generator_check, link_square_check, pairing_matrix, reduction_number, run_scenario_suite,
    square_criterion_check, square_witness, valabrega_valla_check, LinkLevel, LinkTower, PairingMatrix,
    ReductionNumber, SquareOutcome,
};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_field, parse_poly, parse_polys, parse_ring, parse_ring_with_field};
pub use poly::{Polynomial, Term};
pub use report::{emit_report, emit_reports, Format, Report, Value, Verdict};
pub use ring::{GbLimits, Ring};
