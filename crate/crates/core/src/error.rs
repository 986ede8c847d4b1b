//! Error type shared by every calculator in the library.

use crate::angle::Rat;
use crate::bundle::BundleSpace;
use thiserror::Error;

/// Errors reported by the invariant calculators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two maps were combined although their domains or codomains differ.
    #[error("maps must share domain and codomain: ({0} -> {1}) versus ({2} -> {3})", .left.0, .left.1, .right.0, .right.1)]
    SpaceMismatch {
        left: (BundleSpace, BundleSpace),
        right: (BundleSpace, BundleSpace),
    },

    /// A map between distinct total spaces must have fibre degree 0.
    #[error("fibre degree must vanish for maps between distinct total spaces, got q = {q}")]
    MixedDegree { q: i64 },

    /// A point was fed to an evaluator whose domain is a different space.
    #[error("evaluator domain is {expected}, point lies in {found}")]
    WrongDomain {
        expected: BundleSpace,
        found: BundleSpace,
    },

    /// An evaluator moved the base coordinate, so it is not fibre-preserving.
    #[error("evaluator moved the base coordinate: t = {t} was sent to {returned}")]
    BaseNotPreserved { t: Rat, returned: Rat },

    /// An evaluator's chart values do not match up across the gluing seam.
    #[error("evaluator is not well defined across the gluing seam")]
    SeamIncompatible,

    /// The operation needs a nonzero fibre degree.
    #[error("operation requires a nonzero fibre degree")]
    ZeroFibreDegree,

    /// A self-map invariant was requested for a map between distinct spaces.
    #[error("self-map invariant requires domain = codomain, got {domain} -> {codomain}")]
    NotSelfMap {
        domain: BundleSpace,
        codomain: BundleSpace,
    },

    /// A class component does not lie in the summand prescribed by its group.
    #[error("component {index} lies outside its summand")]
    ComponentOutsideSummand { index: usize },

    /// The parity component contradicts the value forced by the other two.
    #[error("inconsistent class: parity component is {found} but the recovered pair forces {forced}")]
    InconsistentClass { found: u8, forced: u8 },

    /// The diagram of two identical representatives carries no isolated circles.
    #[error("diagram is degenerate: the standard representatives coincide identically")]
    DegenerateDiagram,

    /// The sampling angle hits a coincidence root at the gluing seam.
    #[error("angle {angle} meets a coincidence root at the gluing seam; re-sample with a different angle")]
    NonGenericAngle { angle: Rat },

    /// The operation is only defined over one of the two codomains.
    #[error("{operation} applies only over a {required} codomain")]
    WrongCodomain {
        operation: &'static str,
        required: BundleSpace,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T, E = Error> = std::result::Result<T, E>;
