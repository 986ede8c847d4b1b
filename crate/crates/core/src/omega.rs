//! The bordism-style obstruction class of a pair and the computable
//! components of the fixed-point index of a self-map.
//!
//! Each (domain, codomain) combination carries a three-summand abelian group;
//! the class of a pair is a triple of components in those summands.  The
//! first component is the fibre degree `q` (a trivial value when the spaces
//! differ and the summand collapses), the second encodes the section
//! invariant `r` up to a codomain-dependent correction, and the third is the
//! parity of the Nielsen count.  The class vanishes exactly when the pair is
//! loose, and the first two components recover `(q, r)`.

use crate::bundle::{BundleSpace, FiberMapClass, MapPair};
use crate::error::{Error, Result};
use crate::nielsen::nielsen_number;
use std::fmt;

/// One summand of an obstruction group.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Summand {
    /// The integers.
    Z,
    /// The residues mod 2.
    Z2,
    /// The trivial group.
    Zero,
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summand::Z => write!(f, "Z"),
            Summand::Z2 => write!(f, "Z2"),
            Summand::Zero => write!(f, "0"),
        }
    }
}

/// Shape of the obstruction group for one (domain, codomain) combination.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OmegaGroupDescriptor {
    domain: BundleSpace,
    codomain: BundleSpace,
}

/// The obstruction group of a (domain, codomain) combination.
pub fn omega_group(domain: BundleSpace, codomain: BundleSpace) -> OmegaGroupDescriptor {
    OmegaGroupDescriptor { domain, codomain }
}

impl OmegaGroupDescriptor {
    pub fn domain(self) -> BundleSpace {
        self.domain
    }

    pub fn codomain(self) -> BundleSpace {
        self.codomain
    }

    /// The three summands: the degree summand collapses for maps between
    /// distinct spaces, the middle summand is ℤ over an orientable codomain
    /// and ℤ/2 over a non-orientable one, and the parity summand is always
    /// ℤ/2.
    pub fn summands(self) -> [Summand; 3] {
        let first = if self.domain == self.codomain {
            Summand::Z
        } else {
            Summand::Zero
        };
        let second = match self.codomain {
            BundleSpace::Torus => Summand::Z,
            BundleSpace::Klein => Summand::Z2,
        };
        [first, second, Summand::Z2]
    }
}

impl fmt::Display for OmegaGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.summands();
        write!(f, "{a} (+) {b} (+) {c}")
    }
}

/// A value in one summand: an integer in ℤ, a residue in ℤ/2, or the unique
/// value of the trivial group.  Keeping the trivial value distinct from the
/// integer 0 makes membership checks exact.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Component {
    Trivial,
    Integer(i64),
    Residue(u8),
}

impl Component {
    /// Whether the component is the zero of its summand.
    pub fn is_zero(self) -> bool {
        matches!(
            self,
            Component::Trivial | Component::Integer(0) | Component::Residue(0)
        )
    }

    fn lies_in(self, summand: Summand) -> bool {
        match (self, summand) {
            (Component::Trivial, Summand::Zero) => true,
            (Component::Integer(_), Summand::Z) => true,
            (Component::Residue(0 | 1), Summand::Z2) => true,
            _ => false,
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Trivial => write!(f, "-"),
            Component::Integer(n) => write!(f, "{n}"),
            Component::Residue(p) => write!(f, "{p}"),
        }
    }
}

/// An element of an obstruction group: one component per summand.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OmegaClass {
    group: OmegaGroupDescriptor,
    c1: Component,
    c2: Component,
    c3: Component,
}

impl OmegaClass {
    /// Build a class, checking each component against its summand.
    pub fn new(
        group: OmegaGroupDescriptor,
        c1: Component,
        c2: Component,
        c3: Component,
    ) -> Result<Self> {
        let summands = group.summands();
        for (index, (component, summand)) in [c1, c2, c3].into_iter().zip(summands).enumerate() {
            if !component.lies_in(summand) {
                return Err(Error::ComponentOutsideSummand { index: index + 1 });
            }
        }
        Ok(OmegaClass { group, c1, c2, c3 })
    }

    pub fn group(self) -> OmegaGroupDescriptor {
        self.group
    }

    pub fn c1(self) -> Component {
        self.c1
    }

    pub fn c2(self) -> Component {
        self.c2
    }

    pub fn c3(self) -> Component {
        self.c3
    }

    /// Whether the class is the zero element of its group.
    pub fn is_zero(self) -> bool {
        self.c1.is_zero() && self.c2.is_zero() && self.c3.is_zero()
    }
}

impl fmt::Display for OmegaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c1, self.c2, self.c3)
    }
}

fn parity(n: i64) -> u8 {
    n.rem_euclid(2) as u8
}

/// The obstruction class of a pair.
///
/// The first component is the fibre degree (trivial between distinct
/// spaces).  The second is `r` over an orientable codomain; over a
/// non-orientable codomain the preferred section itself contributes a
/// correction, giving `r + 1` from a torus domain and `r + 1 + q` (mod 2)
/// from a Klein domain.  The third is the parity of the Nielsen count.
pub fn omega_class(pair: MapPair) -> OmegaClass {
    let domain = pair.domain();
    let codomain = pair.codomain();
    let q = pair.q();
    let r = pair.r();
    let c1 = if domain == codomain {
        Component::Integer(q)
    } else {
        Component::Trivial
    };
    let c2 = match (domain, codomain) {
        (_, BundleSpace::Torus) => Component::Integer(r),
        (BundleSpace::Klein, BundleSpace::Klein) => Component::Residue(parity(r + 1 + q)),
        (BundleSpace::Torus, BundleSpace::Klein) => Component::Residue(parity(r + 1)),
    };
    let c3 = Component::Residue(parity(nielsen_number(pair) as i64));
    OmegaClass {
        group: omega_group(domain, codomain),
        c1,
        c2,
        c3,
    }
}

/// The obstruction class of the roots of a single map: its class against the
/// angle-0 section composite.
pub fn root_invariant(f: FiberMapClass) -> OmegaClass {
    omega_class(MapPair::root_pair(f))
}

/// Invert [`omega_class`]: recover the difference invariants `(q, r)` from
/// the first two components and check the parity component against the value
/// they force.
pub fn recover_pair_invariants(class: OmegaClass) -> Result<(i64, i64)> {
    let domain = class.group.domain;
    let codomain = class.group.codomain;
    let q = match class.c1 {
        Component::Integer(v) => v,
        Component::Trivial => 0,
        Component::Residue(_) => return Err(Error::ComponentOutsideSummand { index: 1 }),
    };
    let r = match (codomain, class.c2) {
        (BundleSpace::Torus, Component::Integer(v)) => v,
        (BundleSpace::Klein, Component::Residue(p)) => {
            // The mod-2 correction is an involution, so recovery reapplies it.
            let correction = match domain {
                BundleSpace::Klein => 1 + q,
                BundleSpace::Torus => 1,
            };
            i64::from(parity(i64::from(p) + correction))
        }
        _ => return Err(Error::ComponentOutsideSummand { index: 2 }),
    };
    let forced = parity(nielsen_number(MapPair::from_invariants(domain, codomain, q, r)?) as i64);
    let found = match class.c3 {
        Component::Residue(p) => p,
        _ => return Err(Error::ComponentOutsideSummand { index: 3 }),
    };
    if found != forced {
        return Err(Error::InconsistentClass { found, forced });
    }
    Ok((q, r))
}

/// Forget the parity component, keeping the part visible to first homology.
pub fn hurewicz_truncation(class: OmegaClass) -> (Component, Component) {
    (class.c1, class.c2)
}

/// The two computable components of the fixed-point index of a self-map.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DoldIndexComponents {
    /// Degree-type component `1 − q(f)`.
    pub first: i64,
    /// Parity of the Nielsen count of the pair (identity, f).
    pub second: u8,
}

/// Fixed-point index components of a self-map class, read off the pair
/// (identity, f): the fixed points of `f` are the coincidences of that pair.
pub fn dold_index_components(f: FiberMapClass) -> Result<DoldIndexComponents> {
    if f.domain() != f.codomain() {
        return Err(Error::NotSelfMap {
            domain: f.domain(),
            codomain: f.codomain(),
        });
    }
    let identity = FiberMapClass::identity(f.domain());
    let pair = MapPair::new(identity, f)?;
    Ok(DoldIndexComponents {
        first: 1 - f.q(),
        second: parity(nielsen_number(pair) as i64),
    })
}
