//! Polygonal maps on closed surfaces: validation, face-sequence types,
//! exhaustive enumeration of two-sequence maps of curvature zero, and exact
//! isomorphism invariants.

pub mod catalog;
pub mod enumerator;
pub mod facetypes;
pub mod isomorphism;
pub mod map;

/// Exact rational used for curvature.
pub type Rational = num_rational::Ratio<i64>;

pub use catalog::{catalog_entries, entries_of_type, fixtures, lookup, CatalogEntry, CatalogError};
pub use enumerator::{
    critical_vertex_obstruction, critical_vertex_obstruction_with, enumerate_maps,
    enumerate_maps_with, EnumerateError, Obstruction, ObstructionOptions, SearchOptions,
    SearchReport, SearchStatus,
};
pub use facetypes::{
    candidate_type_tables, canonical_face_sequence, parse_type, solve_zero_curvature, FaceSequence,
    MapType, TypeError, TypeTable,
};
pub use isomorphism::{
    automorphism_count, canonical_form, char_poly, cycle_notation, is_isomorphic, isomorphism,
    CanonicalCertificate, CharPoly,
};
pub use map::{Face, LinkCycle, LinkEntry, Map, MapError, MapTextError, Surface, Vertex};
