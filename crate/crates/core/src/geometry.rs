//! Explicit coincidence sets of the affine representatives: root angles in
//! each fibre, the seam-matching permutation, and assembled circle diagrams.
//!
//! Two affine representatives coincide exactly where the reduced class meets
//! the angle-0 section, so every diagram is controlled by the difference
//! invariants `(q, r)`.  For `q ≠ 0` each fibre carries `|q|` root angles;
//! following them across the seam permutes their indices, and the cycles of
//! that permutation are the coincidence circles.  For `q = 0` the roots are
//! whole fibres (or empty), giving vertical circles.

use crate::angle::{Angle, Rat};
use crate::bundle::{BundleSpace, MapPair};
use crate::error::{Error, Result};
use std::fmt;

/// One connected coincidence circle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CoincidenceCircle {
    /// A circle transverse to the fibres: it covers the base `base_wrap`
    /// times and visits the root indices of `root_cycle` in seam order.
    Horizontal { base_wrap: u64, root_cycle: Vec<u64> },
    /// A whole fibre of coincidences over one base point.
    VerticalFibre { base_coordinate: Rat },
}

impl CoincidenceCircle {
    /// How many times the circle crosses a generic fibre.
    pub fn base_wrap(&self) -> u64 {
        match self {
            CoincidenceCircle::Horizontal { base_wrap, .. } => *base_wrap,
            CoincidenceCircle::VerticalFibre { .. } => 0,
        }
    }
}

/// The coincidence set of the affine representatives of a pair, organized
/// into circles.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoincidenceDiagram {
    pair: MapPair,
    circles: Vec<CoincidenceCircle>,
    degenerate: bool,
}

impl CoincidenceDiagram {
    pub fn pair(&self) -> MapPair {
        self.pair
    }

    pub fn circles(&self) -> &[CoincidenceCircle] {
        &self.circles
    }

    /// True when the two representatives coincide identically (`q = r = 0`),
    /// so the raw coincidence set is the whole space rather than circles.
    pub fn degenerate(&self) -> bool {
        self.degenerate
    }

    /// The base wraps of the horizontal circles, sorted ascending.
    pub fn wrap_multiset(&self) -> Vec<u64> {
        let mut wraps: Vec<u64> = self
            .circles
            .iter()
            .filter_map(|c| match c {
                CoincidenceCircle::Horizontal { base_wrap, .. } => Some(*base_wrap),
                CoincidenceCircle::VerticalFibre { .. } => None,
            })
            .collect();
        wraps.sort_unstable();
        wraps
    }
}

impl fmt::Display for CoincidenceDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} circle(s) for {}", self.circles.len(), self.pair)
    }
}

/// The root angles of the pair in the fibre over base parameter `t`, indexed
/// `k = 0 … |q| − 1`.
///
/// Over an orientable codomain the roots solve `q·θ ≡ −r·t (mod 1)`, giving
/// `θ_k = (k − r·t)/q`; over a non-orientable one they solve
/// `q·θ ≡ r/2 (mod 1)`, giving the base-independent `θ_k = (r/2 + k)/q`.
/// The parameter `t` is taken in the chart `[0, 1]`, so `t = 1` lists the
/// roots approaching the seam.
pub fn coincidence_roots(pair: MapPair, t: Rat) -> Result<Vec<Angle>> {
    let q = pair.q();
    if q == 0 {
        return Err(Error::ZeroFibreDegree);
    }
    let r = pair.r();
    let qr = Rat::from_integer(q);
    Ok((0..q.unsigned_abs())
        .map(|k| {
            let numerator = match pair.codomain() {
                BundleSpace::Torus => Rat::from_integer(k as i64) - Rat::from_integer(r) * t,
                BundleSpace::Klein => Rat::new(r, 2) + Rat::from_integer(k as i64),
            };
            Angle::new(numerator / qr)
        })
        .collect())
}

/// The permutation of root indices induced by crossing the seam: the root
/// with index `k` at `t = 1` continues as root `σ(k)` at `t = 0` through the
/// domain gluing.  Computed by exact angle matching; for an orientable
/// domain it is the shift `k ↦ k − r`, for a non-orientable one the
/// reflection `k ↦ −k − r` (mod `|q|`).
pub fn gluing_permutation(pair: MapPair) -> Result<Vec<u64>> {
    let at_zero = coincidence_roots(pair, Rat::from_integer(0))?;
    let at_seam = coincidence_roots(pair, Rat::from_integer(1))?;
    let domain = pair.domain();
    Ok(at_seam
        .iter()
        .map(|&theta| {
            let glued = domain.glue(theta);
            at_zero
                .iter()
                .position(|&root| root == glued)
                .expect("the seam image of a root is a root") as u64
        })
        .collect())
}

/// Decompose a permutation into cycles, each rotated to start at its least
/// element, ordered by those starting elements.
fn cycles(sigma: &[u64]) -> Vec<Vec<u64>> {
    let mut seen = vec![false; sigma.len()];
    let mut out = Vec::new();
    for start in 0..sigma.len() as u64 {
        if seen[start as usize] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut k = start;
        while !seen[k as usize] {
            seen[k as usize] = true;
            cycle.push(k);
            k = sigma[k as usize];
        }
        out.push(cycle);
    }
    out
}

/// The coincidence diagram of the affine representatives of the pair.
///
/// For `q ≠ 0` the circles are the cycles of the seam permutation, each
/// wrapping the base once per visited root index.  For `q = 0`, `r ≠ 0` the
/// coincidences are whole fibres over an orientable codomain (at the `|r|`
/// base points where `r·t ≡ 0 (mod 1)`) and empty over a non-orientable one
/// (the representatives are antipodal).  For `q = r = 0` the representatives
/// coincide identically and the diagram is degenerate.
pub fn diagram(pair: MapPair) -> CoincidenceDiagram {
    let q = pair.q();
    let r = pair.r();
    if q != 0 {
        let sigma = gluing_permutation(pair).expect("nonzero fibre degree");
        let circles = cycles(&sigma)
            .into_iter()
            .map(|root_cycle| CoincidenceCircle::Horizontal {
                base_wrap: root_cycle.len() as u64,
                root_cycle,
            })
            .collect();
        return CoincidenceDiagram {
            pair,
            circles,
            degenerate: false,
        };
    }
    if r != 0 {
        let circles = match pair.codomain() {
            BundleSpace::Torus => (0..r.unsigned_abs() as i64)
                .map(|j| CoincidenceCircle::VerticalFibre {
                    base_coordinate: Rat::new(j, r.abs()),
                })
                .collect(),
            BundleSpace::Klein => Vec::new(),
        };
        return CoincidenceDiagram {
            pair,
            circles,
            degenerate: false,
        };
    }
    CoincidenceDiagram {
        pair,
        circles: Vec::new(),
        degenerate: true,
    }
}

/// The diagram of a coincidence-minimal deformation of the pair.
///
/// Identical to [`diagram`] except in the degenerate case, where one map is
/// pushed off the other: a constant fibre rotation removes every coincidence
/// over an orientable codomain, while over a non-orientable one any
/// admissible rotation field keeps a zero, leaving exactly one vertical
/// fibre (placed at the seam).
pub fn minimal_representative_diagram(pair: MapPair) -> CoincidenceDiagram {
    let raw = diagram(pair);
    if !raw.degenerate {
        return raw;
    }
    let circles = match pair.codomain() {
        BundleSpace::Torus => Vec::new(),
        BundleSpace::Klein => vec![CoincidenceCircle::VerticalFibre {
            base_coordinate: Rat::from_integer(0),
        }],
    };
    CoincidenceDiagram {
        pair,
        circles,
        degenerate: false,
    }
}

/// Intersections of the diagram with one generic fibre: the total base wrap.
pub fn fibre_intersection_count(diagram: &CoincidenceDiagram) -> Result<u64> {
    if diagram.degenerate {
        return Err(Error::DegenerateDiagram);
    }
    Ok(diagram.circles.iter().map(|c| c.base_wrap()).sum())
}

/// Intersections of the diagram with the constant-angle loop at
/// `generic_angle`, which must avoid the root values at the seam.
///
/// Only defined over an orientable codomain: there the domain is either the
/// torus (horizontal circles, counted exactly from the root equation) or
/// mixed with `q = 0` (vertical fibres, one crossing each).  Over a
/// non-orientable codomain constant-angle loops do not close up generically;
/// the section invariant is read from the root phase instead
/// ([`klein_r_from_roots`]).
pub fn section_intersection_count(diagram: &CoincidenceDiagram, generic_angle: Rat) -> Result<u64> {
    if diagram.degenerate {
        return Err(Error::DegenerateDiagram);
    }
    let pair = diagram.pair;
    if pair.codomain() != BundleSpace::Torus {
        return Err(Error::WrongCodomain {
            operation: "section intersection counting",
            required: BundleSpace::Torus,
        });
    }
    let q = pair.q();
    let r = pair.r();
    if q == 0 {
        // Vertical fibres contain every angle exactly once.
        return Ok(diagram.circles.len() as u64);
    }
    let alpha = Angle::new(generic_angle);
    for root in coincidence_roots(pair, Rat::from_integer(0))? {
        if root == alpha {
            return Err(Error::NonGenericAngle {
                angle: generic_angle,
            });
        }
    }
    if r == 0 {
        // Each circle sits at a constant angle distinct from a generic one.
        return Ok(0);
    }
    // Root k crosses angle α at the t ∈ [0, 1) solving
    // r·t ≡ k − q·α (mod q), i.e. t = (c + q·j)/r with c = k − q·α, j ∈ ℤ.
    // t is monotone in j, so the solutions form one integer interval.
    let mut count = 0i64;
    for k in 0..q.unsigned_abs() as i64 {
        let c = Rat::from_integer(k) - Rat::from_integer(q) * alpha.rep();
        let at_zero = -c / Rat::from_integer(q);
        let at_one = (Rat::from_integer(r) - c) / Rat::from_integer(q);
        count += if (q > 0) == (r > 0) {
            // Increasing in j: j ranges over [at_zero, at_one).
            (at_one.ceil() - at_zero.ceil()).to_integer()
        } else {
            // Decreasing in j: j ranges over (at_one, at_zero].
            (at_zero.floor() - at_one.floor()).to_integer()
        };
    }
    Ok(count as u64)
}

/// Read the section invariant of a non-orientable-codomain pair off its root
/// phase: the roots sit at `(r/2 + k)/q`, so `2·q·θ` is an integer of parity
/// `r` for every root `θ`.
pub fn klein_r_from_roots(pair: MapPair) -> Result<u8> {
    if pair.codomain() != BundleSpace::Klein {
        return Err(Error::WrongCodomain {
            operation: "root-phase recovery",
            required: BundleSpace::Klein,
        });
    }
    let roots = coincidence_roots(pair, Rat::from_integer(0))?;
    let doubled = roots[0].rep() * Rat::from_integer(2 * pair.q());
    debug_assert!(doubled.is_integer());
    Ok(doubled.to_integer().rem_euclid(2) as u8)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::BundleSpace::{Klein, Torus};

    fn pair(dom: BundleSpace, cod: BundleSpace, q: i64, r: i64) -> MapPair {
        MapPair::from_invariants(dom, cod, q, r).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn angles(values: &[(i64, i64)]) -> Vec<Angle> {
        values.iter().map(|&(n, d)| Angle::new(rat(n, d))).collect()
    }

    #[test]
    fn torus_roots_follow_the_moving_formula() {
        let p = pair(Torus, Torus, 2, 1);
        assert_eq!(
            coincidence_roots(p, rat(1, 2)).unwrap(),
            angles(&[(3, 4), (1, 4)])
        );
        assert_eq!(
            coincidence_roots(p, rat(0, 1)).unwrap(),
            angles(&[(0, 1), (1, 2)])
        );
    }

    #[test]
    fn klein_roots_are_base_independent() {
        let p = pair(Klein, Klein, 5, 0);
        let expected = angles(&[(0, 1), (1, 5), (2, 5), (3, 5), (4, 5)]);
        assert_eq!(coincidence_roots(p, rat(0, 1)).unwrap(), expected);
        assert_eq!(coincidence_roots(p, rat(2, 3)).unwrap(), expected);

        let p = pair(Klein, Klein, 4, 1);
        assert_eq!(
            coincidence_roots(p, rat(0, 1)).unwrap(),
            angles(&[(1, 8), (3, 8), (5, 8), (7, 8)])
        );
        assert_eq!(
            coincidence_roots(pair(Torus, Torus, 0, 3), rat(0, 1)),
            Err(Error::ZeroFibreDegree)
        );
    }

    #[test]
    fn seam_permutation_is_shift_or_reflection() {
        // Orientable domain: σ(k) = k − r mod |q|.
        assert_eq!(
            gluing_permutation(pair(Torus, Torus, 6, 4)).unwrap(),
            vec![2, 3, 4, 5, 0, 1]
        );
        // Non-orientable domain: σ(k) = −k − r mod |q|.
        assert_eq!(
            gluing_permutation(pair(Klein, Klein, 4, 1)).unwrap(),
            vec![3, 2, 1, 0]
        );
        assert_eq!(
            gluing_permutation(pair(Klein, Klein, 5, 0)).unwrap(),
            vec![0, 4, 3, 2, 1]
        );
    }

    #[test]
    fn diagrams_with_nonzero_degree() {
        let d = diagram(pair(Torus, Torus, 6, 4));
        assert_eq!(d.circles().len(), 2);
        assert_eq!(d.wrap_multiset(), vec![3, 3]);

        let d = diagram(pair(Klein, Klein, 5, 0));
        assert_eq!(d.wrap_multiset(), vec![1, 2, 2]);

        let d = diagram(pair(Klein, Klein, 4, 1));
        assert_eq!(d.wrap_multiset(), vec![2, 2]);
        let cycles: Vec<_> = d
            .circles()
            .iter()
            .map(|c| match c {
                CoincidenceCircle::Horizontal { root_cycle, .. } => root_cycle.clone(),
                CoincidenceCircle::VerticalFibre { .. } => panic!("horizontal expected"),
            })
            .collect();
        assert_eq!(cycles, vec![vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn diagrams_with_zero_degree() {
        let d = diagram(pair(Torus, Torus, 0, 3));
        assert_eq!(
            d.circles(),
            &[
                CoincidenceCircle::VerticalFibre {
                    base_coordinate: rat(0, 1)
                },
                CoincidenceCircle::VerticalFibre {
                    base_coordinate: rat(1, 3)
                },
                CoincidenceCircle::VerticalFibre {
                    base_coordinate: rat(2, 3)
                },
            ]
        );
        // Antipodal representatives never meet.
        assert!(diagram(pair(Klein, Klein, 0, 1)).circles().is_empty());
        assert!(diagram(pair(Torus, Torus, 0, 0)).degenerate());
    }

    #[test]
    fn minimal_diagrams_resolve_degeneracy() {
        let d = minimal_representative_diagram(pair(Torus, Torus, 0, 0));
        assert!(!d.degenerate() && d.circles().is_empty());

        let d = minimal_representative_diagram(pair(Torus, Klein, 0, 0));
        assert!(!d.degenerate());
        assert_eq!(
            d.circles(),
            &[CoincidenceCircle::VerticalFibre {
                base_coordinate: rat(0, 1)
            }]
        );

        // Non-degenerate pairs pass through unchanged.
        let p = pair(Klein, Klein, 4, 1);
        assert_eq!(minimal_representative_diagram(p), diagram(p));
    }

    #[test]
    fn fibre_counts_total_the_degree() {
        let d = diagram(pair(Torus, Torus, 6, 4));
        assert_eq!(fibre_intersection_count(&d).unwrap(), 6);
        let d = diagram(pair(Klein, Klein, 5, 0));
        assert_eq!(fibre_intersection_count(&d).unwrap(), 5);
        let d = diagram(pair(Torus, Torus, 0, 3));
        assert_eq!(fibre_intersection_count(&d).unwrap(), 0);
        let d = diagram(pair(Torus, Torus, 0, 0));
        assert_eq!(
            fibre_intersection_count(&d),
            Err(Error::DegenerateDiagram)
        );
    }

    #[test]
    fn section_counts_recover_the_section_invariant() {
        let d = diagram(pair(Torus, Torus, 6, 4));
        assert_eq!(section_intersection_count(&d, rat(6, 13)).unwrap(), 4);
        let d = diagram(pair(Torus, Torus, 6, -4));
        assert_eq!(section_intersection_count(&d, rat(6, 13)).unwrap(), 4);
        let d = diagram(pair(Torus, Torus, 5, 0));
        assert_eq!(section_intersection_count(&d, rat(1, 7)).unwrap(), 0);
        let d = diagram(pair(Torus, Torus, 0, 3));
        assert_eq!(section_intersection_count(&d, rat(1, 2)).unwrap(), 3);
        let d = diagram(pair(Klein, Torus, 0, -2));
        assert_eq!(section_intersection_count(&d, rat(1, 2)).unwrap(), 2);
    }

    #[test]
    fn section_count_rejects_seam_roots_and_klein_codomains() {
        let d = diagram(pair(Torus, Torus, 6, 4));
        // 2/6 is the k = 2 root at the seam.
        assert_eq!(
            section_intersection_count(&d, rat(1, 3)),
            Err(Error::NonGenericAngle { angle: rat(1, 3) })
        );
        let d = diagram(pair(Klein, Klein, 5, 0));
        assert!(matches!(
            section_intersection_count(&d, rat(1, 2)),
            Err(Error::WrongCodomain { .. })
        ));
    }

    #[test]
    fn root_phase_recovers_klein_r() {
        assert_eq!(klein_r_from_roots(pair(Klein, Klein, 4, 1)).unwrap(), 1);
        assert_eq!(klein_r_from_roots(pair(Klein, Klein, 5, 0)).unwrap(), 0);
        assert_eq!(klein_r_from_roots(pair(Klein, Klein, -3, 1)).unwrap(), 1);
        assert!(matches!(
            klein_r_from_roots(pair(Torus, Torus, 2, 1)),
            Err(Error::WrongCodomain { .. })
        ));
    }
}
