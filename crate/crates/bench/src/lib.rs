//! Benchmark-only crate: see `benches/invariants.rs`.  Shared grid helpers
//! live here so the bench target stays focused on measurement.

use coincide_core::{BundleSpace, MapPair};

/// Every realizable pair class with `|q| ≤ qmax` and `|r| ≤ rmax`.
pub fn grid(qmax: i64, rmax: i64) -> Vec<MapPair> {
    use BundleSpace::{Klein, Torus};
    let combos = [(Torus, Torus), (Klein, Klein), (Klein, Torus), (Torus, Klein)];
    let mut out = Vec::new();
    for (domain, codomain) in combos {
        let qs: Vec<i64> = if domain == codomain {
            (-qmax..=qmax).collect()
        } else {
            vec![0]
        };
        let rs: Vec<i64> = match codomain {
            Torus => (-rmax..=rmax).collect(),
            Klein => vec![0, 1],
        };
        for &q in &qs {
            for &r in &rs {
                out.push(MapPair::from_invariants(domain, codomain, q, r).unwrap());
            }
        }
    }
    out
}
