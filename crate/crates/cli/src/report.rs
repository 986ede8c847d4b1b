//! Serializable report types and their human-readable rendering.

use serde::{Deserialize, Serialize};

use coincide_core::{
    diagram, full_report, involution_fixed_points, klein_r_from_roots, mcc,
    minimal_representative_diagram, omega_class, orbit_enumerate, recover_pair_invariants,
    reidemeister_count, BundleSpace, Cardinality, CoincidenceCircle, Component, FiberMapClass,
    MapPair,
};

/// A class count: a number, or the string "inf".
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CountValue(pub Cardinality);

impl Serialize for CountValue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            Cardinality::Finite(n) => serializer.serialize_u64(n),
            Cardinality::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for CountValue {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Number(u64),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Number(n) => Ok(CountValue(Cardinality::Finite(n))),
            Repr::Text(s) if s == "inf" => Ok(CountValue(Cardinality::Infinite)),
            Repr::Text(s) => Err(serde::de::Error::custom(format!(
                "expected a count or \"inf\", got {s:?}"
            ))),
        }
    }
}

fn space_code(space: BundleSpace) -> String {
    space.to_string()
}

/// Echo of one map class.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct ClassEcho {
    pub q: i64,
    pub r: i64,
}

impl ClassEcho {
    fn of(class: FiberMapClass) -> Self {
        ClassEcho {
            q: class.q(),
            r: class.r(),
        }
    }
}

/// Echo of the pair and its difference invariants.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct PairEcho {
    pub domain: String,
    pub codomain: String,
    pub first: ClassEcho,
    pub second: ClassEcho,
    pub q: i64,
    pub r: i64,
}

impl PairEcho {
    pub fn of(pair: MapPair) -> Self {
        PairEcho {
            domain: space_code(pair.domain()),
            codomain: space_code(pair.codomain()),
            first: ClassEcho::of(pair.first()),
            second: ClassEcho::of(pair.second()),
            q: pair.q(),
            r: pair.r(),
        }
    }
}

/// The counting invariants.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct CountsOut {
    pub reidemeister: CountValue,
    pub nielsen: u64,
    pub nielsen_sharp: u64,
    pub mcc: u64,
    pub loose: bool,
    /// Orbit representatives: least residues when the class set is finite,
    /// a window of lift values when it is infinite.
    pub representatives: Vec<i64>,
    /// Modulus of the residue representatives, when finite and defined.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub modulus: Option<u64>,
}

/// The bordism components.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct OmegaOut {
    /// The three summands, e.g. ["Z", "Z2", "Z2"].
    pub group: [String; 3],
    /// Integer first component; absent when that summand is trivial.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c1: Option<i64>,
    pub c2: i64,
    pub c3: u8,
    pub zero: bool,
}

/// One coincidence circle.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CircleOut {
    Horizontal { base_wrap: u64, roots: Vec<u64> },
    Vertical { base_coordinate: String },
}

impl CircleOut {
    pub fn of(circle: &CoincidenceCircle) -> Self {
        match circle {
            CoincidenceCircle::Horizontal {
                base_wrap,
                root_cycle,
            } => CircleOut::Horizontal {
                base_wrap: *base_wrap,
                roots: root_cycle.clone(),
            },
            CoincidenceCircle::VerticalFibre { base_coordinate } => CircleOut::Vertical {
                base_coordinate: base_coordinate.to_string(),
            },
        }
    }
}

/// The coincidence circles of a minimal representative.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct DiagramOut {
    /// True when the raw affine representatives coincide everywhere, so the
    /// listed circles come from a coincidence-minimal deformation.
    pub deformed: bool,
    pub circles: Vec<CircleOut>,
    pub wraps: Vec<u64>,
}

/// Cross-validation flags; `false` anywhere means routes disagree.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct OracleOut {
    /// Orbit enumeration reproduces the closed-form class count.
    pub orbit_count_agrees: bool,
    /// The reflection-orbit identity reproduces it too (non-orientable
    /// self-pairs with nonzero degree only).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reflection_identity_agrees: Option<bool>,
    /// The minimal diagram has exactly the minimal number of circles.
    pub diagram_count_agrees: bool,
    /// The bordism components invert back to the pair invariants.
    pub bordism_roundtrip_agrees: bool,
    /// Root phases recover the section parity (non-orientable codomain,
    /// nonzero degree only).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub root_phase_agrees: Option<bool>,
}

impl OracleOut {
    pub fn all_agree(&self) -> bool {
        self.orbit_count_agrees
            && self.reflection_identity_agrees.unwrap_or(true)
            && self.diagram_count_agrees
            && self.bordism_roundtrip_agrees
            && self.root_phase_agrees.unwrap_or(true)
    }
}

/// Everything the `invariants` subcommand knows about one pair.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct Report {
    pub pair: PairEcho,
    pub invariants: CountsOut,
    pub omega: OmegaOut,
    pub diagram: DiagramOut,
    pub oracle: OracleOut,
}

/// Compute the full report, including the oracle cross-checks.
pub fn build_report(pair: MapPair, window: std::num::NonZeroU32) -> Report {
    let counts = full_report(pair);
    let set = orbit_enumerate(pair, window);

    let (representatives, modulus) = match set.orbits() {
        Some(orbits) => (
            orbits.representatives().iter().map(|&k| k as i64).collect(),
            Some(orbits.modulus()),
        ),
        None => (set.window_representatives().to_vec(), None),
    };

    let class = omega_class(pair);
    let summands = class.group().summands();
    let omega = OmegaOut {
        group: [
            summands[0].to_string(),
            summands[1].to_string(),
            summands[2].to_string(),
        ],
        c1: match class.c1() {
            Component::Integer(n) => Some(n),
            _ => None,
        },
        c2: match class.c2() {
            Component::Integer(n) => n,
            Component::Residue(p) => i64::from(p),
            Component::Trivial => 0,
        },
        c3: match class.c3() {
            Component::Residue(p) => p,
            _ => 0,
        },
        zero: class.is_zero(),
    };

    let minimal = minimal_representative_diagram(pair);
    let diagram_out = DiagramOut {
        deformed: diagram(pair).degenerate(),
        circles: minimal.circles().iter().map(CircleOut::of).collect(),
        wraps: minimal.wrap_multiset(),
    };

    let reflection_identity_agrees = (pair.domain() == BundleSpace::Klein
        && pair.codomain() == BundleSpace::Klein
        && pair.q() != 0)
        .then(|| {
            let fixed = involution_fixed_points(pair.q(), pair.first().r(), pair.second().r())
                .expect("nonzero degree")
                .fixed_count();
            reidemeister_count(pair)
                == Cardinality::Finite((pair.q().unsigned_abs() + fixed) / 2)
        });
    let root_phase_agrees = (pair.codomain() == BundleSpace::Klein && pair.q() != 0)
        .then(|| klein_r_from_roots(pair).is_ok_and(|p| i64::from(p) == pair.r()));

    let oracle = OracleOut {
        orbit_count_agrees: set.cardinality() == counts.reidemeister,
        reflection_identity_agrees,
        diagram_count_agrees: minimal.circles().len() as u64 == mcc(pair),
        bordism_roundtrip_agrees: recover_pair_invariants(class) == Ok((pair.q(), pair.r())),
        root_phase_agrees,
    };

    Report {
        pair: PairEcho::of(pair),
        invariants: CountsOut {
            reidemeister: CountValue(counts.reidemeister),
            nielsen: counts.nielsen,
            nielsen_sharp: counts.nielsen_sharp,
            mcc: counts.mcc,
            loose: counts.loose,
            representatives,
            modulus,
        },
        omega,
        diagram: diagram_out,
        oracle,
    }
}

impl Report {
    /// Render the human-readable block.
    pub fn render(&self, out: &mut String) {
        use std::fmt::Write;
        let p = &self.pair;
        let _ = writeln!(
            out,
            "[{} -> {}] first (q = {}, r = {}), second (q = {}, r = {}) => q = {}, r = {}",
            p.domain, p.codomain, p.first.q, p.first.r, p.second.q, p.second.r, p.q, p.r
        );
        let inv = &self.invariants;
        let _ = writeln!(
            out,
            "  classes      #R = {}{}",
            match inv.reidemeister.0 {
                Cardinality::Finite(n) => n.to_string(),
                Cardinality::Infinite => "inf".to_string(),
            },
            match inv.modulus {
                Some(m) => format!(", residues mod {m}: {:?}", inv.representatives),
                None => format!(", window sample: {:?}", inv.representatives),
            }
        );
        let _ = writeln!(
            out,
            "  counts       N = {}, N# = {}, MCC = {}",
            inv.nielsen, inv.nielsen_sharp, inv.mcc
        );
        let _ = writeln!(out, "  loose        {}", if inv.loose { "yes" } else { "no" });
        let c1 = self
            .omega
            .c1
            .map_or_else(|| "-".to_string(), |n| n.to_string());
        let _ = writeln!(
            out,
            "  omega        ({}, {}, {}) in {} (+) {} (+) {}{}",
            c1,
            self.omega.c2,
            self.omega.c3,
            self.omega.group[0],
            self.omega.group[1],
            self.omega.group[2],
            if self.omega.zero { "  [zero]" } else { "" }
        );
        let _ = writeln!(
            out,
            "  diagram      {} circle(s), wraps {:?}{}",
            self.diagram.circles.len(),
            self.diagram.wraps,
            if self.diagram.deformed {
                "  [after minimal deformation]"
            } else {
                ""
            }
        );
        let _ = writeln!(
            out,
            "  oracle       {}",
            if self.oracle.all_agree() {
                "all routes agree".to_string()
            } else {
                format!(
                    "DISAGREEMENT: orbit {}, reflection {:?}, diagram {}, bordism {}, root {:?}",
                    self.oracle.orbit_count_agrees,
                    self.oracle.reflection_identity_agrees,
                    self.oracle.diagram_count_agrees,
                    self.oracle.bordism_roundtrip_agrees,
                    self.oracle.root_phase_agrees
                )
            }
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::num::NonZeroU32;

    fn window() -> NonZeroU32 {
        NonZeroU32::new(4).unwrap()
    }

    #[test]
    fn reports_roundtrip_through_their_serialized_form() {
        for (domain, codomain, q, r) in [
            (BundleSpace::Klein, BundleSpace::Klein, 5, 1),
            (BundleSpace::Torus, BundleSpace::Torus, 0, 0),
            (BundleSpace::Klein, BundleSpace::Klein, 0, 1),
            (BundleSpace::Klein, BundleSpace::Torus, 0, 7),
        ] {
            let pair = MapPair::from_invariants(domain, codomain, q, r).unwrap();
            let report = build_report(pair, window());
            let text = serde_json::to_string(&report).unwrap();
            let parsed: Report = serde_json::from_str(&text).unwrap();
            assert_eq!(parsed, report);
        }
    }

    #[test]
    fn count_values_reject_unknown_strings() {
        assert!(serde_json::from_str::<CountValue>("\"inf\"").is_ok());
        assert!(serde_json::from_str::<CountValue>("17").is_ok());
        assert!(serde_json::from_str::<CountValue>("\"lots\"").is_err());
    }
}
