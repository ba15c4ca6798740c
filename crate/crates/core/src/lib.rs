//! Exact arithmetic and combinatorics for caps in finite projective spaces.
//!
//! A cap in PG(r, q) is a point set with no three points collinear. This crate
//! builds the fields GF(p^h), the projective spaces over them, the classical
//! cap constructions (quadrics, ovoids, hyperovals, Singer orbits), and the
//! counting machinery (chord numbers, size bounds, orbit searches, stabilizer
//! certificates) needed to certify which of those sets are transitive and
//! co-transitive caps. Everything is exact integer arithmetic; nothing floats.

pub mod cap;
pub mod constructions;
pub mod field;
pub mod forms;
mod linalg;
pub mod orbits;
pub mod pointfile;
mod polynomial;
pub mod rational;
pub mod singer;
pub mod space;
pub mod verify;

pub use cap::{
    a10_orbit_sizes, a8_orbit_sizes, cap_size_bound, cap_verdict, chord_formula_a10,
    chord_formula_a8, chord_number, chord_profile, complement_majority_check,
    complete_cap_search, expected_chord_number, first_line_avoiding, first_line_within, is_cap,
    is_complete, CapBound, CapError, CapVerdict, ChordProfile, ComplementVerdict, PointSet,
    SearchOptions, SearchResult,
};
pub use constructions::{
    cap11_pg43, descriptors, direct_sum_union, elliptic_quadric, extraspecial_vector_orbits,
    hyperbolic_quadric, hyperoval_pg24, hyperplane_complement, psu42_triple, pure_tensor_points,
    subgeometry_witnesses, tits_ovoid, ConstructionDescriptor, ConstructionError,
    ExtraspecialOrbits, Psu42Triple, SubgeometryWitnesses,
};
pub use field::{subfield_embed, Fe, FieldError, FieldSpec, SubfieldEmbedding};
pub use forms::{FormError, FormKind, HermitianFormSpec, QuadraticFormSpec};
pub use orbits::{
    cotransitivity_necessary, pgl_order, point_orbits, setwise_stabilizer_bruteforce,
    Collineation, CotransitivityCheck, OrbitError, OrbitResult, StabilizerCertificate,
};
pub use pointfile::{read_points, write_points, PointFileError};
pub use rational::Rational;
pub use singer::{
    a1_parity_refutation, build_singer, fk_orbit_lengths, orbit_cap_filter,
    orbit_union_cap_search, subgroup_orbits, two_orbit_smaller_sizes, FkCondition, FkParams,
    OrbitPartition, ParityVerdict, SingerCycle, SingerError, UnionSearchOptions,
    UnionSearchResult,
};
pub use space::{build_space, build_space_limited, PointId, ProjPoint, ProjectiveSpace, SpaceError};
pub use verify::{
    claim_manifest, verify, CaseCheck, Limits, VerificationReport, VerifyError,
    DEFAULT_STABILIZER_LIMIT, DEFAULT_UNION_NODE_BUDGET,
};
