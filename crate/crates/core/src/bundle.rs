//! Total spaces, points, homotopy classes over the base, and exact evaluators.
//!
//! Both total spaces are quotients of `[0, 1] × S¹`: the fibre over the seam
//! `t = 1` is glued back to the fibre over `t = 0` by the identity (the
//! orientable case, a torus) or by reflection `θ ↦ −θ` (the non-orientable
//! case, a Klein bottle).  A fibre-preserving map is classified over the base
//! by two integers: the fibre degree `q` and a section invariant `r`, which is
//! a full integer over an orientable codomain and a residue mod 2 over a
//! non-orientable one.  Maps between the two distinct spaces force `q = 0`.

use crate::angle::{Angle, Rat};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// One of the two circle bundles over the circle.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BundleSpace {
    /// Orientable gluing: the torus.
    Torus,
    /// Orientation-reversing gluing: the Klein bottle.
    Klein,
}

impl BundleSpace {
    /// Fibre-coordinate change picked up by crossing the seam once.
    pub fn glue(self, theta: Angle) -> Angle {
        match self {
            BundleSpace::Torus => theta,
            BundleSpace::Klein => -theta,
        }
    }

    /// True when the seam gluing reverses the fibre orientation.
    pub fn reverses_orientation(self) -> bool {
        matches!(self, BundleSpace::Klein)
    }

    /// Reduce a section invariant to its canonical form for this codomain:
    /// the integer itself over the torus, the residue in `{0, 1}` over the
    /// Klein bottle.
    pub fn reduce_r(self, r: i64) -> i64 {
        match self {
            BundleSpace::Torus => r,
            BundleSpace::Klein => r.rem_euclid(2),
        }
    }
}

impl fmt::Display for BundleSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BundleSpace::Torus => write!(f, "T"),
            BundleSpace::Klein => write!(f, "K"),
        }
    }
}

impl FromStr for BundleSpace {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_uppercase().as_str() {
            "T" | "TORUS" => Ok(BundleSpace::Torus),
            "K" | "KLEIN" => Ok(BundleSpace::Klein),
            other => Err(format!("unknown space {other:?}, expected T or K")),
        }
    }
}

/// A point of a total space, reduced to the fundamental chart
/// `t ∈ [0, 1)`, `θ ∈ [0, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BundlePoint {
    space: BundleSpace,
    base: Rat,
    fibre: Angle,
}

impl BundlePoint {
    /// Build a point from arbitrary chart coordinates.  The base coordinate
    /// is reduced mod 1; each full unit crossed conjugates the fibre angle in
    /// the non-orientable space, so `(1, θ)` lands on `(0, θ)` over the torus
    /// and on `(0, −θ)` over the Klein bottle.
    pub fn new(space: BundleSpace, base: Rat, fibre: Rat) -> Self {
        let wraps = base.floor().to_integer();
        let base = base - base.floor();
        let mut fibre = Angle::new(fibre);
        if space.reverses_orientation() && wraps.rem_euclid(2) == 1 {
            fibre = -fibre;
        }
        BundlePoint { space, base, fibre }
    }

    /// The space the point lives in.
    pub fn space(self) -> BundleSpace {
        self.space
    }

    /// Canonical base coordinate in `[0, 1)`.
    pub fn base(self) -> Rat {
        self.base
    }

    /// Canonical fibre angle.
    pub fn fibre(self) -> Angle {
        self.fibre
    }
}

impl fmt::Display for BundlePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {}, {}]", self.space, self.base, self.fibre)
    }
}

/// Sign selecting one of the two preferred sections: `+1` runs along angle 0,
/// `-1` along the half turn.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The constant fibre angle of the corresponding section.
    pub fn angle(self) -> Angle {
        match self {
            Sign::Plus => Angle::zero(),
            Sign::Minus => Angle::half(),
        }
    }
}

impl TryFrom<i64> for Sign {
    type Error = String;
    fn try_from(v: i64) -> Result<Self, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(format!("sign must be +1 or -1, got {other}")),
        }
    }
}

/// The section of a total space running at a constant preferred angle.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Section {
    space: BundleSpace,
    epsilon: Sign,
}

/// The section `[t] ↦ [(t, ε)]`.  Both preferred angles are fixed by the seam
/// gluing, so the section is well defined over either space.
pub fn section(space: BundleSpace, epsilon: Sign) -> Section {
    Section { space, epsilon }
}

impl Section {
    /// Evaluate the section at a base coordinate (any rational accepted).
    pub fn eval(&self, t: Rat) -> BundlePoint {
        BundlePoint::new(self.space, t, self.epsilon.angle().rep())
    }

    /// The space the section lands in.
    pub fn space(&self) -> BundleSpace {
        self.space
    }

    /// Which preferred angle the section runs along.
    pub fn epsilon(&self) -> Sign {
        self.epsilon
    }
}

/// The homotopy class over the base of a fibre-preserving map, recorded by
/// its fibre degree `q` and section invariant `r`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FiberMapClass {
    domain: BundleSpace,
    codomain: BundleSpace,
    q: i64,
    r: i64,
}

impl FiberMapClass {
    /// Build a class, enforcing the degree constraint for maps between
    /// distinct spaces and reducing `r` mod 2 over a Klein codomain.
    pub fn new(domain: BundleSpace, codomain: BundleSpace, q: i64, r: i64) -> Result<Self> {
        if domain != codomain && q != 0 {
            return Err(Error::MixedDegree { q });
        }
        Ok(FiberMapClass {
            domain,
            codomain,
            q,
            r: codomain.reduce_r(r),
        })
    }

    /// The class of the identity self-map.
    pub fn identity(space: BundleSpace) -> Self {
        FiberMapClass {
            domain: space,
            codomain: space,
            q: 1,
            r: 0,
        }
    }

    /// The class of the composite `s_ε ∘ p`: project to the base, then follow
    /// the preferred section of the codomain.
    pub fn constant_section(domain: BundleSpace, codomain: BundleSpace, epsilon: Sign) -> Self {
        let r = match (codomain, epsilon) {
            (BundleSpace::Klein, Sign::Minus) => 1,
            _ => 0,
        };
        FiberMapClass {
            domain,
            codomain,
            q: 0,
            r,
        }
    }

    pub fn domain(self) -> BundleSpace {
        self.domain
    }

    pub fn codomain(self) -> BundleSpace {
        self.codomain
    }

    /// Fibre degree.
    pub fn q(self) -> i64 {
        self.q
    }

    /// Section invariant, canonical for the codomain.
    pub fn r(self) -> i64 {
        self.r
    }

    /// Class of the pointwise fibrewise product: degrees and section
    /// invariants add.
    pub fn multiply(self, other: Self) -> Result<Self> {
        self.check_same_spaces(other)?;
        Ok(FiberMapClass {
            domain: self.domain,
            codomain: self.codomain,
            q: self.q + other.q,
            r: self.codomain.reduce_r(self.r + other.r),
        })
    }

    /// Class of the pointwise fibrewise inverse: degrees and section
    /// invariants negate.
    pub fn inverse(self) -> Self {
        FiberMapClass {
            domain: self.domain,
            codomain: self.codomain,
            q: -self.q,
            r: self.codomain.reduce_r(-self.r),
        }
    }

    /// Whether two classes agree, i.e. the maps are homotopic over the base.
    pub fn is_homotopic_over_base(self, other: Self) -> Result<bool> {
        self.check_same_spaces(other)?;
        Ok(self.q == other.q && self.r == other.r)
    }

    fn check_same_spaces(self, other: Self) -> Result<()> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::SpaceMismatch {
                left: (self.domain, self.codomain),
                right: (other.domain, other.codomain),
            });
        }
        Ok(())
    }
}

impl fmt::Display for FiberMapClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} -> {}; q = {}, r = {})",
            self.domain, self.codomain, self.q, self.r
        )
    }
}

/// An ordered pair of map classes with common domain and codomain, together
/// with the difference invariants that control its coincidence theory.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MapPair {
    first: FiberMapClass,
    second: FiberMapClass,
    q: i64,
    r: i64,
}

impl MapPair {
    /// Pair two classes; their coincidence invariants depend only on the
    /// differences `q = q₁ − q₂` and `r = r₁ − r₂` (mod 2 over a Klein
    /// codomain).
    pub fn new(first: FiberMapClass, second: FiberMapClass) -> Result<Self> {
        first.check_same_spaces(second)?;
        Ok(MapPair {
            first,
            second,
            q: first.q - second.q,
            r: first.codomain.reduce_r(first.r - second.r),
        })
    }

    /// The canonical pair with given difference invariants: a class with
    /// `(q, r)` against the angle-0 section composite.
    pub fn from_invariants(
        domain: BundleSpace,
        codomain: BundleSpace,
        q: i64,
        r: i64,
    ) -> Result<Self> {
        let first = FiberMapClass::new(domain, codomain, q, r)?;
        let second = FiberMapClass::constant_section(domain, codomain, Sign::Plus);
        MapPair::new(first, second)
    }

    /// The pair of `f` against the angle-0 section composite; its coincidences
    /// are the roots of `f`.
    pub fn root_pair(f: FiberMapClass) -> Self {
        let base = FiberMapClass::constant_section(f.domain, f.codomain, Sign::Plus);
        MapPair::new(f, base).expect("same spaces by construction")
    }

    /// The pair in the opposite order.
    pub fn swapped(self) -> Self {
        MapPair::new(self.second, self.first).expect("same spaces by construction")
    }

    /// The single class `f₁ · f₂⁻¹` whose roots are this pair's coincidences.
    pub fn reduced(self) -> FiberMapClass {
        self.first
            .multiply(self.second.inverse())
            .expect("same spaces by construction")
    }

    pub fn first(self) -> FiberMapClass {
        self.first
    }

    pub fn second(self) -> FiberMapClass {
        self.second
    }

    /// Difference fibre degree `q₁ − q₂`.
    pub fn q(self) -> i64 {
        self.q
    }

    /// Difference section invariant, canonical for the codomain.
    pub fn r(self) -> i64 {
        self.r
    }

    pub fn domain(self) -> BundleSpace {
        self.first.domain
    }

    pub fn codomain(self) -> BundleSpace {
        self.first.codomain
    }
}

impl fmt::Display for MapPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} -> {}; q = {}, r = {}]",
            self.domain(),
            self.codomain(),
            self.q,
            self.r
        )
    }
}

/// Exact evaluator for a fibre-preserving map, presented in the fundamental
/// chart `[0, 1] × S¹`.
pub trait FibrewiseMap {
    fn domain(&self) -> BundleSpace;

    fn codomain(&self) -> BundleSpace;

    /// Evaluate in the chart.  The input base coordinate may be any rational,
    /// in particular the seam value `t = 1`; the output base coordinate is
    /// returned unreduced so callers can detect base motion, while the output
    /// angle is reduced mod 1.
    fn eval_chart(&self, t: Rat, theta: Angle) -> (Rat, Angle);

    /// Upper bound on how fast the output angle moves per unit of input base
    /// or fibre motion.  [`extract_invariants`] samples denser than twice
    /// this bound, which certifies its winding counts.
    fn angular_speed_bound(&self) -> u64;

    /// Evaluate at an actual point of the domain space.
    fn eval(&self, point: BundlePoint) -> Result<BundlePoint> {
        if point.space() != self.domain() {
            return Err(Error::WrongDomain {
                expected: self.domain(),
                found: point.space(),
            });
        }
        let (t, theta) = self.eval_chart(point.base(), point.fibre());
        Ok(BundlePoint::new(self.codomain(), t, theta.rep()))
    }
}

/// The affine representative of a homotopy class: in the chart,
/// `(t, θ) ↦ (t, r·t + q·θ)` over an orientable codomain and
/// `(t, θ) ↦ (t, r/2 + q·θ)` over a non-orientable one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StandardMap {
    class: FiberMapClass,
}

/// The affine representative of `class`.
pub fn standard_map(class: FiberMapClass) -> StandardMap {
    StandardMap { class }
}

impl StandardMap {
    /// The class this map represents.
    pub fn class(&self) -> FiberMapClass {
        self.class
    }
}

impl FibrewiseMap for StandardMap {
    fn domain(&self) -> BundleSpace {
        self.class.domain
    }

    fn codomain(&self) -> BundleSpace {
        self.class.codomain
    }

    fn eval_chart(&self, t: Rat, theta: Angle) -> (Rat, Angle) {
        let base_term = match self.class.codomain {
            BundleSpace::Torus => Rat::from_integer(self.class.r) * t,
            BundleSpace::Klein => Rat::new(self.class.r, 2),
        };
        (t, Angle::new(base_term) + theta.scale(self.class.q))
    }

    fn angular_speed_bound(&self) -> u64 {
        self.class.q.unsigned_abs().max(self.class.r.unsigned_abs())
    }
}

/// The composite `s_ε ∘ p`: collapse each fibre onto a preferred section of
/// the codomain.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ConstantSectionMap {
    domain: BundleSpace,
    codomain: BundleSpace,
    epsilon: Sign,
}

impl ConstantSectionMap {
    pub fn new(domain: BundleSpace, codomain: BundleSpace, epsilon: Sign) -> Self {
        ConstantSectionMap {
            domain,
            codomain,
            epsilon,
        }
    }

    /// The class of this composite.
    pub fn class(&self) -> FiberMapClass {
        FiberMapClass::constant_section(self.domain, self.codomain, self.epsilon)
    }
}

impl FibrewiseMap for ConstantSectionMap {
    fn domain(&self) -> BundleSpace {
        self.domain
    }

    fn codomain(&self) -> BundleSpace {
        self.codomain
    }

    fn eval_chart(&self, t: Rat, _theta: Angle) -> (Rat, Angle) {
        (t, self.epsilon.angle())
    }

    fn angular_speed_bound(&self) -> u64 {
        0
    }
}

/// Pointwise fibrewise product of two evaluators with matching spaces.
#[derive(Clone, Copy, Debug)]
pub struct FibrewiseProduct<F, G> {
    f: F,
    g: G,
}

impl<F: FibrewiseMap, G: FibrewiseMap> FibrewiseProduct<F, G> {
    pub fn new(f: F, g: G) -> Result<Self> {
        if f.domain() != g.domain() || f.codomain() != g.codomain() {
            return Err(Error::SpaceMismatch {
                left: (f.domain(), f.codomain()),
                right: (g.domain(), g.codomain()),
            });
        }
        Ok(FibrewiseProduct { f, g })
    }
}

impl<F: FibrewiseMap, G: FibrewiseMap> FibrewiseMap for FibrewiseProduct<F, G> {
    fn domain(&self) -> BundleSpace {
        self.f.domain()
    }

    fn codomain(&self) -> BundleSpace {
        self.f.codomain()
    }

    fn eval_chart(&self, t: Rat, theta: Angle) -> (Rat, Angle) {
        let (t_f, out_f) = self.f.eval_chart(t, theta);
        let (t_g, out_g) = self.g.eval_chart(t, theta);
        // Surface a base shift from either factor.
        let t_out = if t_f != t { t_f } else { t_g };
        (t_out, out_f + out_g)
    }

    fn angular_speed_bound(&self) -> u64 {
        self.f.angular_speed_bound() + self.g.angular_speed_bound()
    }
}

/// Displacement representative of `b − a` in `(−1/2, 1/2]`: the step actually
/// taken by a path whose speed certificate rules out half-turn jumps between
/// consecutive samples.
fn min_displacement(a: Angle, b: Angle) -> Rat {
    let d = (b - a).rep();
    if d > Rat::new(1, 2) {
        d - Rat::from_integer(1)
    } else {
        d
    }
}

fn chart_angle<F: FibrewiseMap + ?Sized>(map: &F, t: Rat, theta: Angle) -> Result<Angle> {
    let (t_out, out) = map.eval_chart(t, theta);
    if t_out != t {
        return Err(Error::BaseNotPreserved { t, returned: t_out });
    }
    Ok(out)
}

/// Recover the `(q, r)` class invariants of an evaluator by certified
/// sampling.
///
/// `q` is the winding of the fibre loop `θ ↦ map(0, θ)`.  Over an orientable
/// codomain, `r` is the winding of the section loop `t ↦ map(t, 0)`.  Over a
/// non-orientable codomain plain winding is not homotopy invariant; instead
/// `r` is the parity of `θ̃(0) + θ̃(1)` for a continuous lift `θ̃` of the
/// section loop's fibre angle, which is invariant and matches the affine
/// representatives.  Sampling density exceeds twice the evaluator's angular
/// speed bound, so the minimal-displacement lift between consecutive samples
/// is the true lift.
pub fn extract_invariants<F: FibrewiseMap + ?Sized>(map: &F) -> Result<(i64, i64)> {
    let bound = map.angular_speed_bound();
    assert!(
        bound <= (i64::MAX as u64 - 4) / 2,
        "angular speed bound too large to sample"
    );
    let steps = 2 * bound as i64 + 4;
    let t0 = Rat::from_integer(0);

    // Fibre loop at t = 0.
    let mut winding = Rat::from_integer(0);
    let first = chart_angle(map, t0, Angle::zero())?;
    let mut prev = first;
    for j in 1..=steps {
        let next = chart_angle(map, t0, Angle::new(Rat::new(j, steps)))?;
        winding += min_displacement(prev, next);
        prev = next;
    }
    // The sum telescopes to an exact integer: each term equals the true
    // angle difference mod 1 and the loop closes.
    debug_assert!(winding.is_integer());
    let q = winding.to_integer();

    // Section loop along angle 0.
    let start = first.rep();
    let mut lift = start;
    let mut prev = first;
    for j in 1..=steps {
        let next = chart_angle(map, Rat::new(j, steps), Angle::zero())?;
        lift += min_displacement(prev, next);
        prev = next;
    }
    let r = match map.codomain() {
        BundleSpace::Torus => {
            // The chart values at t = 0 and t = 1 describe the same point, so
            // the total lift change is an integer for any honest evaluator.
            let total = lift - start;
            if !total.is_integer() {
                return Err(Error::SeamIncompatible);
            }
            total.to_integer()
        }
        BundleSpace::Klein => {
            // Seam gluing negates the angle, so θ̃(1) ≡ −θ̃(0) mod 1 and the
            // lift sum is an integer whose parity is the invariant.
            let total = lift + start;
            if !total.is_integer() {
                return Err(Error::SeamIncompatible);
            }
            total.to_integer().rem_euclid(2)
        }
    };
    Ok((q, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn point_canonicalization_respects_gluing() {
        // Torus: crossing the seam leaves the angle alone.
        assert_eq!(
            BundlePoint::new(BundleSpace::Torus, rat(1, 1), rat(1, 4)),
            BundlePoint::new(BundleSpace::Torus, rat(0, 1), rat(1, 4))
        );
        // Klein bottle: one crossing conjugates the angle, two restore it.
        assert_eq!(
            BundlePoint::new(BundleSpace::Klein, rat(1, 1), rat(1, 4)),
            BundlePoint::new(BundleSpace::Klein, rat(0, 1), rat(3, 4))
        );
        assert_eq!(
            BundlePoint::new(BundleSpace::Klein, rat(2, 1), rat(1, 4)),
            BundlePoint::new(BundleSpace::Klein, rat(0, 1), rat(1, 4))
        );
        assert_eq!(
            BundlePoint::new(BundleSpace::Klein, rat(-1, 2), rat(1, 3)),
            BundlePoint::new(BundleSpace::Klein, rat(1, 2), rat(2, 3))
        );
    }

    #[test]
    fn sections_close_up_over_both_spaces() {
        for space in [BundleSpace::Torus, BundleSpace::Klein] {
            for eps in [Sign::Plus, Sign::Minus] {
                let s = section(space, eps);
                assert_eq!(s.eval(rat(0, 1)), s.eval(rat(1, 1)));
            }
        }
    }

    #[test]
    fn standard_map_evaluation_matches_affine_formula() {
        let class = FiberMapClass::new(BundleSpace::Torus, BundleSpace::Torus, 3, 2).unwrap();
        let f = standard_map(class);
        let p = BundlePoint::new(BundleSpace::Torus, rat(1, 2), rat(1, 4));
        // 2·(1/2) + 3·(1/4) = 7/4 ≡ 3/4.
        assert_eq!(
            f.eval(p).unwrap(),
            BundlePoint::new(BundleSpace::Torus, rat(1, 2), rat(3, 4))
        );

        let class = FiberMapClass::new(BundleSpace::Torus, BundleSpace::Klein, 0, 1).unwrap();
        let f = standard_map(class);
        let p = BundlePoint::new(BundleSpace::Torus, rat(1, 3), rat(5, 7));
        assert_eq!(
            f.eval(p).unwrap(),
            BundlePoint::new(BundleSpace::Klein, rat(1, 3), rat(1, 2))
        );
    }

    #[test]
    fn standard_map_is_well_defined_across_the_seam() {
        let samples = [rat(0, 1), rat(1, 7), rat(1, 3), rat(2, 5), rat(9, 11)];
        for (dom, cod) in [
            (BundleSpace::Torus, BundleSpace::Torus),
            (BundleSpace::Klein, BundleSpace::Klein),
            (BundleSpace::Torus, BundleSpace::Klein),
            (BundleSpace::Klein, BundleSpace::Torus),
        ] {
            let qs: &[i64] = if dom == cod { &[-3, -1, 0, 2, 5] } else { &[0] };
            for &q in qs {
                for r in -3..=3 {
                    let f = standard_map(FiberMapClass::new(dom, cod, q, r).unwrap());
                    for &s in &samples {
                        let theta = Angle::new(s);
                        let (_, at_seam) = f.eval_chart(Rat::from_integer(1), theta);
                        let (_, at_zero) = f.eval_chart(Rat::from_integer(0), dom.glue(theta));
                        // Both chart outputs must describe the same codomain point.
                        assert_eq!(
                            BundlePoint::new(cod, Rat::from_integer(1), at_seam.rep()),
                            BundlePoint::new(cod, Rat::from_integer(0), at_zero.rep()),
                            "class {:?} sample {s}",
                            f.class()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn mixed_space_classes_require_degree_zero() {
        assert_eq!(
            FiberMapClass::new(BundleSpace::Torus, BundleSpace::Klein, 2, 0),
            Err(Error::MixedDegree { q: 2 })
        );
        assert!(FiberMapClass::new(BundleSpace::Klein, BundleSpace::Torus, 0, 5).is_ok());
    }

    #[test]
    fn klein_codomain_reduces_r() {
        let f = FiberMapClass::new(BundleSpace::Klein, BundleSpace::Klein, 3, -3).unwrap();
        assert_eq!(f.r(), 1);
        let g = FiberMapClass::new(BundleSpace::Torus, BundleSpace::Klein, 0, 4).unwrap();
        assert_eq!(g.r(), 0);
    }

    #[test]
    fn class_arithmetic_is_a_group() {
        let a = FiberMapClass::new(BundleSpace::Torus, BundleSpace::Torus, 2, -1).unwrap();
        let b = FiberMapClass::new(BundleSpace::Torus, BundleSpace::Torus, -5, 4).unwrap();
        let ab = a.multiply(b).unwrap();
        assert_eq!((ab.q(), ab.r()), (-3, 3));
        let unit = a.multiply(a.inverse()).unwrap();
        assert_eq!(
            unit,
            FiberMapClass::constant_section(BundleSpace::Torus, BundleSpace::Torus, Sign::Plus)
        );

        let k = FiberMapClass::new(BundleSpace::Klein, BundleSpace::Klein, 4, 1).unwrap();
        assert_eq!(k.inverse().r(), 1);
        assert_eq!(k.multiply(k).unwrap().r(), 0);
    }

    #[test]
    fn space_mismatch_is_rejected() {
        let a = FiberMapClass::new(BundleSpace::Torus, BundleSpace::Torus, 1, 0).unwrap();
        let b = FiberMapClass::new(BundleSpace::Klein, BundleSpace::Klein, 1, 0).unwrap();
        assert!(matches!(a.multiply(b), Err(Error::SpaceMismatch { .. })));
        assert!(matches!(MapPair::new(a, b), Err(Error::SpaceMismatch { .. })));
        assert!(matches!(
            a.is_homotopic_over_base(b),
            Err(Error::SpaceMismatch { .. })
        ));
    }

    #[test]
    fn pair_difference_invariants() {
        let f1 = FiberMapClass::new(BundleSpace::Klein, BundleSpace::Klein, 4, 1).unwrap();
        let f2 = FiberMapClass::new(BundleSpace::Klein, BundleSpace::Klein, 1, 1).unwrap();
        let pair = MapPair::new(f1, f2).unwrap();
        assert_eq!((pair.q(), pair.r()), (3, 0));
        assert_eq!(pair.reduced().q(), 3);
        assert_eq!(pair.swapped().q(), -3);
        // Swapping negates r mod 2, which fixes both residues.
        assert_eq!(pair.swapped().r(), 0);
    }

    #[test]
    fn extraction_recovers_standard_invariants() {
        let cases = [
            (BundleSpace::Torus, BundleSpace::Torus, 3, -2),
            (BundleSpace::Torus, BundleSpace::Torus, 0, 7),
            (BundleSpace::Klein, BundleSpace::Klein, 2, 1),
            (BundleSpace::Klein, BundleSpace::Klein, -5, 0),
            (BundleSpace::Torus, BundleSpace::Klein, 0, 1),
            (BundleSpace::Klein, BundleSpace::Torus, 0, -4),
        ];
        for (dom, cod, q, r) in cases {
            let class = FiberMapClass::new(dom, cod, q, r).unwrap();
            let extracted = extract_invariants(&standard_map(class)).unwrap();
            assert_eq!(extracted, (class.q(), class.r()), "{class}");
        }
    }

    #[test]
    fn extraction_handles_section_composites() {
        // Over the torus the minus section composite is not affine, yet its
        // class is (0, 0); over the Klein bottle it carries r = 1.
        let m = ConstantSectionMap::new(BundleSpace::Torus, BundleSpace::Torus, Sign::Minus);
        assert_eq!(extract_invariants(&m).unwrap(), (0, 0));
        let m = ConstantSectionMap::new(BundleSpace::Klein, BundleSpace::Klein, Sign::Minus);
        assert_eq!(extract_invariants(&m).unwrap(), (0, 1));
        let m = ConstantSectionMap::new(BundleSpace::Torus, BundleSpace::Klein, Sign::Plus);
        assert_eq!(extract_invariants(&m).unwrap(), (0, 0));
    }

    #[test]
    fn extraction_is_additive_on_products() {
        let a = standard_map(
            FiberMapClass::new(BundleSpace::Klein, BundleSpace::Klein, 2, 1).unwrap(),
        );
        let b = standard_map(
            FiberMapClass::new(BundleSpace::Klein, BundleSpace::Klein, 3, 1).unwrap(),
        );
        let prod = FibrewiseProduct::new(a, b).unwrap();
        assert_eq!(extract_invariants(&prod).unwrap(), (5, 0));
    }

    /// Evaluator that shifts the base coordinate: not fibre-preserving.
    struct BaseShift;

    impl FibrewiseMap for BaseShift {
        fn domain(&self) -> BundleSpace {
            BundleSpace::Torus
        }
        fn codomain(&self) -> BundleSpace {
            BundleSpace::Torus
        }
        fn eval_chart(&self, t: Rat, theta: Angle) -> (Rat, Angle) {
            (t + Rat::new(1, 3), theta)
        }
        fn angular_speed_bound(&self) -> u64 {
            1
        }
    }

    #[test]
    fn extraction_rejects_base_motion() {
        assert!(matches!(
            extract_invariants(&BaseShift),
            Err(Error::BaseNotPreserved { .. })
        ));
        let p = BundlePoint::new(BundleSpace::Klein, rat(0, 1), rat(0, 1));
        assert!(matches!(
            BaseShift.eval(p),
            Err(Error::WrongDomain { .. })
        ));
    }

    /// Evaluator whose chart values tear at the seam.
    struct SeamTear;

    impl FibrewiseMap for SeamTear {
        fn domain(&self) -> BundleSpace {
            BundleSpace::Torus
        }
        fn codomain(&self) -> BundleSpace {
            BundleSpace::Torus
        }
        fn eval_chart(&self, t: Rat, _theta: Angle) -> (Rat, Angle) {
            // Angle t/3 never returns to its start: not a map of the bundle.
            (t, Angle::new(t / Rat::from_integer(3)))
        }
        fn angular_speed_bound(&self) -> u64 {
            1
        }
    }

    #[test]
    fn extraction_rejects_seam_tears() {
        assert_eq!(extract_invariants(&SeamTear), Err(Error::SeamIncompatible));
    }
}
