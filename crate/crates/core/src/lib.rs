//! Exact coincidence invariants for fibre-preserving maps between the two
//! circle bundles over the circle: the torus and the Klein bottle.
//!
//! Maps are classified over the base by a fibre degree `q` and a section
//! invariant `r` ([`bundle`]).  For a pair of maps the crate computes, in
//! exact integer/rational arithmetic and along independently cross-checkable
//! routes:
//!
//! * the Reidemeister count over the base, by closed form and by explicit
//!   orbit enumeration of the twisted conjugacy action ([`reidemeister`]);
//! * the Nielsen count, its sharp variant, the minimal number of coincidence
//!   components, and looseness ([`nielsen`]);
//! * the bordism-style obstruction class with its group shape, inversion and
//!   truncation, plus fixed-point index components of self-maps ([`omega`]);
//! * the explicit coincidence circle diagram of the affine representatives,
//!   with seam permutation, wraps and intersection counts ([`geometry`]).

pub mod angle;
pub mod bundle;
pub mod error;
pub mod geometry;
pub mod nielsen;
pub mod omega;
pub mod reidemeister;

pub use angle::{Angle, Rat};
pub use bundle::{
    extract_invariants, section, standard_map, BundlePoint, BundleSpace, ConstantSectionMap,
    FiberMapClass, FibrewiseMap, FibrewiseProduct, MapPair, Section, Sign, StandardMap,
};
pub use error::{Error, Result};
pub use geometry::{
    coincidence_roots, diagram, fibre_intersection_count, gluing_permutation, klein_r_from_roots,
    minimal_representative_diagram, section_intersection_count, CoincidenceCircle,
    CoincidenceDiagram,
};
pub use nielsen::{full_report, is_loose, mcc, nielsen_number, nielsen_sharp, InvariantReport};
pub use omega::{
    dold_index_components, hurewicz_truncation, omega_class, omega_group, recover_pair_invariants,
    root_invariant, Component, DoldIndexComponents, OmegaClass, OmegaGroupDescriptor, Summand,
};
pub use reidemeister::{
    action_generators, involution_fixed_points, orbit_enumerate, reidemeister_count,
    AffineGenerator, Cardinality, FiniteOrbits, InvolutionReport, ReidemeisterSet,
};
