//! Essential-class counts and the minimal number of coincidence components
//! over the base.
//!
//! For these bundle pairs the Nielsen count over the base, its sharp variant
//! and the minimal number of coincidence components all coincide, and they
//! agree with the Reidemeister count whenever the latter is finite.  A pair
//! is loose — deformable over the base to be coincidence-free — exactly when
//! the minimal component count is zero.

use crate::bundle::{BundleSpace, MapPair};
use crate::reidemeister::{reidemeister_count, Cardinality};
use num_integer::gcd;

/// Nielsen count of a pair over the base: the number of essential coincidence
/// classes.
///
/// Over an orientable codomain this is `gcd(|q|, |r|)` unless `q = r = 0`,
/// where it vanishes.  Over a non-orientable codomain with `q ≠ 0` every
/// class is essential, giving the finite Reidemeister count; with `q = 0` a
/// single essential class survives when `r = 0` and none otherwise.
pub fn nielsen_number(pair: MapPair) -> u64 {
    let q = pair.q();
    let r = pair.r();
    match pair.codomain() {
        BundleSpace::Torus => {
            if q == 0 && r == 0 {
                0
            } else {
                gcd(q.unsigned_abs(), r.unsigned_abs())
            }
        }
        BundleSpace::Klein => {
            if q == 0 {
                if r == 0 {
                    1
                } else {
                    0
                }
            } else {
                let m = q.unsigned_abs();
                if m % 2 == 0 && r == 1 {
                    m / 2
                } else {
                    m / 2 + 1
                }
            }
        }
    }
}

/// Sharp Nielsen count; for these bundle pairs it equals [`nielsen_number`].
pub fn nielsen_sharp(pair: MapPair) -> u64 {
    nielsen_number(pair)
}

/// Minimal number of coincidence components among all pairs homotopic over
/// the base; for these bundle pairs it equals [`nielsen_number`].
pub fn mcc(pair: MapPair) -> u64 {
    nielsen_number(pair)
}

/// Whether the pair is loose: deformable over the base to be coincidence
/// free.  Over an orientable codomain this happens exactly for `q = r = 0`
/// (shift one map off the other along the fibres); over a non-orientable one
/// exactly for `q = 0`, `r ≠ 0` (the two maps become antipodal).
pub fn is_loose(pair: MapPair) -> bool {
    let q = pair.q();
    let r = pair.r();
    match pair.codomain() {
        BundleSpace::Torus => q == 0 && r == 0,
        BundleSpace::Klein => q == 0 && r != 0,
    }
}

/// All counting invariants of a pair in one record.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct InvariantReport {
    pub reidemeister: Cardinality,
    pub nielsen: u64,
    pub nielsen_sharp: u64,
    pub mcc: u64,
    pub loose: bool,
}

/// Compute every counting invariant of the pair and cross-check the internal
/// consistency relations; a violation would be a defect in the closed forms,
/// so it panics rather than returning.
pub fn full_report(pair: MapPair) -> InvariantReport {
    let report = InvariantReport {
        reidemeister: reidemeister_count(pair),
        nielsen: nielsen_number(pair),
        nielsen_sharp: nielsen_sharp(pair),
        mcc: mcc(pair),
        loose: is_loose(pair),
    };
    assert!(report.nielsen <= report.nielsen_sharp && report.nielsen_sharp <= report.mcc);
    if let Cardinality::Finite(count) = report.reidemeister {
        assert!(report.mcc <= count, "component count exceeds class count");
    }
    assert_eq!(report.loose, report.mcc == 0);
    report
}
