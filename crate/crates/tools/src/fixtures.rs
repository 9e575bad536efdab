//! Reference data, embedded so reproduction runs need no files.

use golomb_core::mixedgraph::MixedGraph;

/// `g_3(t)` for `t = 6..=35`.
pub const TABLE1: [(u64, u64); 30] = [
    (6, 2),
    (7, 6),
    (8, 8),
    (9, 18),
    (10, 16),
    (11, 30),
    (12, 34),
    (13, 48),
    (14, 48),
    (15, 72),
    (16, 72),
    (17, 96),
    (18, 98),
    (19, 126),
    (20, 128),
    (21, 162),
    (22, 160),
    (23, 198),
    (24, 202),
    (25, 240),
    (26, 240),
    (27, 288),
    (28, 288),
    (29, 336),
    (30, 338),
    (31, 390),
    (32, 392),
    (33, 450),
    (34, 448),
    (35, 510),
];

/// Names accepted by `--fixture`.
pub const GRAPH_FIXTURES: [&str; 1] = ["triangle"];

/// Three vertices, edges {1,3} and {2,3}, arc 1 -> 2.
pub fn triangle() -> MixedGraph {
    MixedGraph::from_one_based(3, &[(1, 3), (2, 3)], &[(1, 2)]).expect("valid fixture")
}

pub fn graph_fixture(name: &str) -> Option<MixedGraph> {
    match name {
        "triangle" => Some(triangle()),
        _ => None,
    }
}

/// One row of the triangle's lattice point table: a coloring, the regions
/// (as 1-based vertex orders, smallest color first) whose closures contain
/// it, and its multiplicity.
#[derive(Debug, Clone, Copy)]
pub struct TriangleRow {
    pub point: [i64; 3],
    pub regions: &'static [[usize; 3]],
    pub multiplicity: u64,
}

const R123: [usize; 3] = [1, 2, 3];
const R132: [usize; 3] = [1, 3, 2];
const R312: [usize; 3] = [3, 1, 2];

const fn row(point: [i64; 3], regions: &'static [[usize; 3]]) -> TriangleRow {
    TriangleRow { point, regions, multiplicity: regions.len() as u64 }
}

/// Points of `P` (colors in {0,1}).
pub const TRIANGLE_T2: [TriangleRow; 6] = [
    row([0, 0, 0], &[R123, R132, R312]),
    row([0, 0, 1], &[R123]),
    row([0, 1, 0], &[R132, R312]),
    row([0, 1, 1], &[R123, R132]),
    row([1, 1, 0], &[R312]),
    row([1, 1, 1], &[R123, R132, R312]),
];

/// Points of `2P` (colors in {0,1,2}).
pub const TRIANGLE_T3: [TriangleRow; 18] = [
    row([0, 0, 0], &[R123, R132, R312]),
    row([0, 0, 1], &[R123]),
    row([0, 0, 2], &[R123]),
    row([0, 1, 0], &[R132, R312]),
    row([0, 1, 1], &[R123, R132]),
    row([0, 1, 2], &[R123]),
    row([0, 2, 0], &[R132, R312]),
    row([0, 2, 1], &[R132]),
    // Lies on x1 < x2 = x3, so in the closures of R123 and R132.
    row([0, 2, 2], &[R123, R132]),
    row([1, 1, 0], &[R312]),
    row([1, 1, 1], &[R123, R132, R312]),
    row([1, 1, 2], &[R123]),
    row([1, 2, 0], &[R312]),
    row([1, 2, 1], &[R132, R312]),
    row([1, 2, 2], &[R123, R132]),
    row([2, 2, 0], &[R312]),
    row([2, 2, 1], &[R312]),
    row([2, 2, 2], &[R123, R132, R312]),
];
