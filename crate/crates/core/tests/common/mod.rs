#![allow(dead_code)]

use ehrhart_core::LatticePolytope;
use proptest::prelude::*;

/// Random small lattice polytopes with the origin in the interior.
///
/// Each axis gets a positive and a negative point so the origin is usually
/// interior; the remaining rejections come from degenerate hulls.
pub fn polytope(max_dim: usize, reach: i64) -> impl Strategy<Value = LatticePolytope> {
    // weight dimension d by d^2 so higher dimensions are not starved by rejections
    let dims = proptest::strategy::Union::new_weighted(
        (1..=max_dim).map(|d| ((d * d) as u32, Just(d))).collect(),
    );
    dims.prop_flat_map(move |n| {
        let axis = proptest::collection::vec((1..=reach, 1..=reach), n);
        let jitter = proptest::collection::vec(proptest::collection::vec(-1i64..=1, n), 2 * n);
        let extra = proptest::collection::vec(proptest::collection::vec(-reach..=reach, n), 0..=2);
        (Just(n), axis, jitter, extra)
    })
    .prop_filter_map(
        "hull must contain the origin in its interior",
        |(n, axis, jitter, extra)| {
            let mut points = Vec::new();
            for (i, (a, b)) in axis.iter().enumerate() {
                for (k, s) in [(2 * i, *a), (2 * i + 1, -*b)] {
                    let mut v = jitter[k].clone();
                    v[i] = s;
                    points.push(v);
                }
            }
            points.extend(extra);
            LatticePolytope::convex_hull(n, &points).ok()
        },
    )
}

/// Random simplices `conv(e_1, ..., e_n, -w)` with positive integer weights.
pub fn weighted_simplex(max_dim: usize, max_weight: i64) -> impl Strategy<Value = LatticePolytope> {
    (1..=max_dim).prop_flat_map(move |n| {
        proptest::collection::vec(1..=max_weight, n).prop_map(move |w| {
            let mut vertices: Vec<Vec<i64>> = (0..n)
                .map(|i| {
                    let mut v = vec![0; n];
                    v[i] = 1;
                    v
                })
                .collect();
            vertices.push(w.iter().map(|x| -x).collect());
            LatticePolytope::new(n, vertices).expect("weighted simplex is valid")
        })
    })
}

pub fn simplex123() -> LatticePolytope {
    LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-2, -3]]).unwrap()
}
