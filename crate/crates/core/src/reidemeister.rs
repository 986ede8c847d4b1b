//! Orbit structure of the twisted conjugacy action on the fibre fundamental
//! group.
//!
//! For a pair of map classes with difference invariants `(q, r)` the action on
//! ℤ is generated by the translation `k ↦ k − q` together with a second
//! translation `k ↦ k − r` over an orientable codomain, or the reflection
//! `k ↦ r − k` over a non-orientable one.  Orbits are the twisted conjugacy
//! classes of the pair; their number is the Reidemeister count over the base.
//!
//! Two independent routes to that number live here: closed-form evaluation
//! ([`reidemeister_count`]) and explicit orbit enumeration
//! ([`orbit_enumerate`]), so each can serve as an oracle for the other.

use crate::bundle::{BundleSpace, MapPair};
use crate::error::{Error, Result};
use num_integer::gcd;
use std::collections::BTreeSet;
use std::fmt;
use std::num::NonZeroU32;

/// The affine map `k ↦ sign·k + offset` on the integers, `sign ∈ {+1, −1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AffineGenerator {
    sign: i64,
    offset: i64,
}

impl AffineGenerator {
    /// The translation `k ↦ k + offset`.
    pub fn translation(offset: i64) -> Self {
        AffineGenerator { sign: 1, offset }
    }

    /// The reflection `k ↦ offset − k`.
    pub fn reflection(offset: i64) -> Self {
        AffineGenerator { sign: -1, offset }
    }

    pub fn sign(self) -> i64 {
        self.sign
    }

    pub fn offset(self) -> i64 {
        self.offset
    }

    /// Apply to an integer.
    pub fn apply(self, k: i64) -> i64 {
        self.sign * k + self.offset
    }

    /// Composition `self ∘ other`.
    pub fn compose(self, other: Self) -> Self {
        AffineGenerator {
            sign: self.sign * other.sign,
            offset: self.sign * other.offset + self.offset,
        }
    }

    pub fn is_identity(self) -> bool {
        self.sign == 1 && self.offset == 0
    }

    pub fn is_reflection(self) -> bool {
        self.sign == -1
    }
}

impl fmt::Display for AffineGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 1 {
            write!(f, "k -> k + {}", self.offset)
        } else {
            write!(f, "k -> {} - k", self.offset)
        }
    }
}

/// The two generators of the twisted conjugacy action of a pair.
pub fn action_generators(pair: MapPair) -> Vec<AffineGenerator> {
    let translation = AffineGenerator::translation(-pair.q());
    let second = match pair.codomain() {
        BundleSpace::Torus => AffineGenerator::translation(-pair.r()),
        BundleSpace::Klein => AffineGenerator::reflection(pair.r()),
    };
    vec![translation, second]
}

/// A possibly infinite count.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Cardinality {
    Finite(u64),
    Infinite,
}

impl Cardinality {
    pub fn is_finite(self) -> bool {
        matches!(self, Cardinality::Finite(_))
    }

    /// The value when finite.
    pub fn finite(self) -> Option<u64> {
        match self {
            Cardinality::Finite(n) => Some(n),
            Cardinality::Infinite => None,
        }
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(n) => write!(f, "{n}"),
            Cardinality::Infinite => write!(f, "inf"),
        }
    }
}

/// Orbit decomposition of the residues modulo a finite modulus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteOrbits {
    modulus: u64,
    representatives: Vec<u64>,
    orbit_map: Vec<usize>,
}

impl FiniteOrbits {
    /// The modulus the residues live in.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Least residue of each orbit, ascending; orbit indices follow this
    /// order.
    pub fn representatives(&self) -> &[u64] {
        &self.representatives
    }

    /// Orbit index of a residue.
    pub fn orbit_of(&self, residue: u64) -> Option<usize> {
        self.orbit_map.get(residue as usize).copied()
    }
}

/// The set of twisted conjugacy classes of a pair: its cardinality, explicit
/// orbit data when finite, and windowed representatives when infinite.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReidemeisterSet {
    cardinality: Cardinality,
    finite: Option<FiniteOrbits>,
    window_representatives: Vec<i64>,
}

impl ReidemeisterSet {
    pub fn cardinality(&self) -> Cardinality {
        self.cardinality
    }

    /// Orbit decomposition, present exactly when the set is finite.
    pub fn orbits(&self) -> Option<&FiniteOrbits> {
        self.finite.as_ref()
    }

    /// Orbit representatives in the finite case.
    pub fn representatives(&self) -> Option<&[u64]> {
        self.finite.as_ref().map(|f| f.representatives())
    }

    /// One representative for each orbit meeting the requested window, sorted
    /// ascending; empty in the finite case.
    pub fn window_representatives(&self) -> &[i64] {
        &self.window_representatives
    }
}

/// Forward closure of the residues under a set of permutations of ℤ/m.
/// Sweeping starts ascending, so each orbit is discovered at its least
/// residue and orbit indices are ordered by those representatives.
fn finite_orbits(modulus: u64, generators: &[AffineGenerator]) -> FiniteOrbits {
    let m = modulus as usize;
    let mut orbit_map = vec![usize::MAX; m];
    let mut representatives = Vec::new();
    for start in 0..m {
        if orbit_map[start] != usize::MAX {
            continue;
        }
        let index = representatives.len();
        representatives.push(start as u64);
        let mut stack = vec![start];
        orbit_map[start] = index;
        while let Some(k) = stack.pop() {
            for gen in generators {
                let next = gen.apply(k as i64).rem_euclid(modulus as i64) as usize;
                if orbit_map[next] == usize::MAX {
                    orbit_map[next] = index;
                    stack.push(next);
                }
            }
        }
    }
    FiniteOrbits {
        modulus,
        representatives,
        orbit_map,
    }
}

/// Enumerate the twisted conjugacy classes of a pair.
///
/// For `q ≠ 0` the action descends to the residues mod `|q|` and the orbits
/// are enumerated by search.  For `q = 0` the (in)finitude is certified
/// structurally from the generator shapes — reflection orbits have at most
/// two elements over a Klein codomain, translation orbits are the cosets of
/// `rℤ` over a torus codomain — and `window` only selects which orbits of ℤ
/// are reported, namely those meeting `[−window, window]`.
pub fn orbit_enumerate(pair: MapPair, window: NonZeroU32) -> ReidemeisterSet {
    let q = pair.q();
    let r = pair.r();
    let generators = action_generators(pair);

    if q != 0 {
        let orbits = finite_orbits(q.unsigned_abs(), &generators);
        return ReidemeisterSet {
            cardinality: Cardinality::Finite(orbits.representatives.len() as u64),
            finite: Some(orbits),
            window_representatives: Vec::new(),
        };
    }

    let w = i64::from(window.get());
    match (pair.codomain(), r) {
        (BundleSpace::Torus, 0) => {
            // Both generators are the identity: every integer is its own
            // orbit and the set is infinite.
            ReidemeisterSet {
                cardinality: Cardinality::Infinite,
                finite: None,
                window_representatives: (-w..=w).collect(),
            }
        }
        (BundleSpace::Torus, _) => {
            // Orbits are the cosets of rℤ: finitely many, one per residue
            // mod |r|.
            let modulus = r.unsigned_abs();
            let orbits = finite_orbits(modulus, &generators);
            debug_assert_eq!(orbits.representatives.len() as u64, modulus);
            ReidemeisterSet {
                cardinality: Cardinality::Finite(modulus),
                finite: Some(orbits),
                window_representatives: Vec::new(),
            }
        }
        (BundleSpace::Klein, _) => {
            // The translation is trivial and the reflection pairs l with
            // r − l: every orbit has at most two elements, so the set is
            // infinite.  Each orbit contains a nonnegative element; report
            // the least one.
            let mut reps = BTreeSet::new();
            for l in -w..=w {
                let mirrored = r - l;
                let rep = match (l >= 0, mirrored >= 0) {
                    (true, true) => l.min(mirrored),
                    (true, false) => l,
                    (false, true) => mirrored,
                    (false, false) => unreachable!("one of l, r - l is nonnegative"),
                };
                reps.insert(rep);
            }
            ReidemeisterSet {
                cardinality: Cardinality::Infinite,
                finite: None,
                window_representatives: reps.into_iter().collect(),
            }
        }
    }
}

/// Fixed-point report of the residue involution attached to a pair of
/// section invariants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvolutionReport {
    q: i64,
    fixed_count: u64,
    fixed_points: Vec<u64>,
}

impl InvolutionReport {
    pub fn q(&self) -> i64 {
        self.q
    }

    /// Number of fixed residues; always 0, 1 or 2.
    pub fn fixed_count(&self) -> u64 {
        self.fixed_count
    }

    /// The fixed residues mod `|q|`, ascending.
    pub fn fixed_points(&self) -> &[u64] {
        &self.fixed_points
    }
}

/// Fixed points of the involution `k ↦ (r1 − r2) − k` on the residues mod
/// `|q|`, i.e. the solutions of `2k ≡ r1 − r2 (mod |q|)`.  Intended for
/// section invariants `r1, r2 ∈ {0, 1}` of a non-orientable codomain, though
/// the congruence is solved for any integers.
pub fn involution_fixed_points(q: i64, r1: i64, r2: i64) -> Result<InvolutionReport> {
    if q == 0 {
        return Err(Error::ZeroFibreDegree);
    }
    let m = q.unsigned_abs() as i64;
    let d = (r1 - r2).rem_euclid(m);
    let fixed_points: Vec<u64> = if m % 2 == 1 {
        // 2 is invertible; (m + 1) / 2 is its inverse mod m.
        vec![(d * ((m + 1) / 2)).rem_euclid(m) as u64]
    } else if d % 2 == 0 {
        let k0 = (d / 2) as u64;
        let k1 = k0 + (m / 2) as u64;
        let mut v = vec![k0, k1];
        v.sort_unstable();
        v
    } else {
        Vec::new()
    };
    Ok(InvolutionReport {
        q,
        fixed_count: fixed_points.len() as u64,
        fixed_points,
    })
}

/// Closed-form Reidemeister count of a pair over the base.
///
/// Over an orientable codomain the count is `gcd(|q|, |r|)`, infinite exactly
/// when `q = r = 0`.  Over a non-orientable codomain the count is infinite
/// when the domain is the torus or `q = 0`; otherwise it is `|q|/2` when `q`
/// is even and `r = 1`, and `⌊|q|/2⌋ + 1` otherwise — equivalently
/// `(|q| + fixed_count)/2` with the fixed count of the residue involution.
pub fn reidemeister_count(pair: MapPair) -> Cardinality {
    let q = pair.q();
    let r = pair.r();
    match pair.codomain() {
        BundleSpace::Torus => {
            if q == 0 && r == 0 {
                Cardinality::Infinite
            } else {
                Cardinality::Finite(gcd(q.unsigned_abs(), r.unsigned_abs()))
            }
        }
        BundleSpace::Klein => {
            if pair.domain() == BundleSpace::Torus || q == 0 {
                Cardinality::Infinite
            } else {
                let m = q.unsigned_abs();
                Cardinality::Finite(if m % 2 == 0 && r == 1 {
                    m / 2
                } else {
                    m / 2 + 1
                })
            }
        }
    }
}
