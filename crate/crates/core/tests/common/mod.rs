//! Helpers shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use semimap::{fixtures, Map};

use semimap::facetypes::MapType;

/// A face cycle up to rotation and reversal.
pub fn cycle_key(c: &[usize]) -> Vec<usize> {
    let n = c.len();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..n {
        for dir in [1, n - 1] {
            let v: Vec<usize> = (0..n).map(|i| c[(start + i * dir) % n]).collect();
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
    }
    best.unwrap()
}

pub fn face_set(m: &Map) -> BTreeSet<Vec<usize>> {
    m.faces().iter().map(|f| cycle_key(f.vertices())).collect()
}

pub fn image(m: &Map, phi: &[usize]) -> BTreeSet<Vec<usize>> {
    m.faces()
        .iter()
        .map(|f| cycle_key(&f.vertices().iter().map(|&v| phi[v]).collect::<Vec<_>>()))
        .collect()
}

/// Adjacency of both maps, the source map and the target face set.
type Context<'a> = (
    &'a Vec<Vec<bool>>,
    &'a Vec<Vec<bool>>,
    &'a Map,
    &'a BTreeSet<Vec<usize>>,
);

/// Every vertex bijection `a -> b` carrying faces onto faces, by backtracking
/// over partial assignments that preserve adjacency.
pub fn all_isomorphisms(a: &Map, b: &Map, limit: usize) -> Vec<Vec<usize>> {
    let n = a.n_vertices();
    if n != b.n_vertices() {
        return Vec::new();
    }
    let adj = |m: &Map| {
        let mut t = vec![vec![false; n]; n];
        for &(u, v) in m.edges() {
            t[u][v] = true;
            t[v][u] = true;
        }
        t
    };
    let (aa, ab) = (adj(a), adj(b));
    let target = face_set(b);
    let mut out = Vec::new();
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        i: usize,
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        ctx: Context,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        let (aa, ab, a, target) = ctx;
        let n = phi.len();
        if out.len() >= limit {
            return;
        }
        if i == n {
            if image(a, phi) == *target {
                out.push(phi.clone());
            }
            return;
        }
        for y in 0..n {
            if used[y] || (0..i).any(|j| aa[i][j] != ab[y][phi[j]]) {
                continue;
            }
            phi[i] = y;
            used[y] = true;
            go(i + 1, phi, used, ctx, out, limit);
            used[y] = false;
        }
        phi[i] = usize::MAX;
    }
    go(
        0,
        &mut phi,
        &mut used,
        (&aa, &ab, a, &target),
        &mut out,
        limit,
    );
    out
}

pub fn small_maps() -> Vec<(&'static str, Map)> {
    let m = |n, f: Vec<Vec<usize>>| Map::new(n, f).unwrap();
    let ring = |k: usize, apex: usize| (0..k).map(move |i| vec![i, (i + 1) % k, apex]);
    vec![
        ("tetrahedron", fixtures::tetrahedron()),
        ("bipyramid3", fixtures::tetrahedron().stack_face(0)),
        (
            "square pyramid",
            m(
                5,
                vec![
                    vec![0, 1, 2, 3],
                    vec![0, 1, 4],
                    vec![1, 2, 4],
                    vec![2, 3, 4],
                    vec![3, 0, 4],
                ],
            ),
        ),
        ("octahedron", m(6, ring(4, 4).chain(ring(4, 5)).collect())),
        (
            "prism",
            m(
                6,
                vec![
                    vec![0, 1, 2],
                    vec![3, 4, 5],
                    vec![0, 1, 4, 3],
                    vec![1, 2, 5, 4],
                    vec![2, 0, 3, 5],
                ],
            ),
        ),
        (
            "projective plane",
            m(
                6,
                vec![
                    vec![0, 1, 2],
                    vec![0, 2, 3],
                    vec![0, 3, 4],
                    vec![0, 4, 5],
                    vec![0, 5, 1],
                    vec![1, 2, 4],
                    vec![2, 3, 5],
                    vec![3, 4, 1],
                    vec![4, 5, 2],
                    vec![5, 1, 3],
                ],
            ),
        ),
        ("bipyramid5", m(7, ring(5, 5).chain(ring(5, 6)).collect())),
        ("T7", fixtures::t7()),
        (
            "stacked octahedron",
            m(6, ring(4, 4).chain(ring(4, 5)).collect()).stack_face(0),
        ),
        (
            "cube",
            m(
                8,
                vec![
                    vec![0, 1, 2, 3],
                    vec![4, 5, 6, 7],
                    vec![0, 1, 5, 4],
                    vec![1, 2, 6, 5],
                    vec![2, 3, 7, 6],
                    vec![3, 0, 4, 7],
                ],
            ),
        ),
        ("bipyramid6", m(8, ring(6, 6).chain(ring(6, 7)).collect())),
        ("antiprism4", {
            let mut f = vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]];
            for i in 0..4 {
                f.push(vec![i, (i + 1) % 4, 4 + i]);
                f.push(vec![(i + 1) % 4, 4 + i, 4 + (i + 1) % 4]);
            }
            m(8, f)
        }),
    ]
}

/// A deterministic pseudo-random permutation of `0..n`.
pub fn shuffle(n: usize, seed: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut s = seed
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    for i in (1..n).rev() {
        s = s
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        p.swap(i, (s >> 33) as usize % (i + 1));
    }
    p
}

/// Census types with their expected map counts on at most 12 vertices.
pub const CENSUS: [(&str, usize); 15] = [
    ("[3^6:3^4.6]", 3),
    ("[3^3.4^2:3.4.6.4]", 2),
    ("[3^2.4.3.4:3.4.6.4]", 2),
    ("[3^6:3^2.4.3.4]", 1),
    ("[3^6:3^3.4^2]", 13),
    ("[3^3.4^2:4^4]", 9),
    ("[3^6:3^2.4.12]", 0),
    ("[3^6:3^2.6^2]", 0),
    ("[3^4.6:3.6.3.6]", 0),
    ("[3^2.6^2:3^4.6]", 0),
    ("[3^2.6^2:3.6.3.6]", 0),
    ("[3.4^2.6:3.6.3.6]", 0),
    ("[3.4^2.6:3.4.6.4]", 0),
    ("[3.4.6.4:4.6.12]", 0),
    ("[3.12^2:3.4.3.12]", 0),
];

/// Pairs of catalog maps claimed to be non-isomorphic although they share
/// type, surface and vertex count.
pub fn claimed_distinct_pairs() -> Vec<(String, String)> {
    let mut pairs = Vec::new();
    let mut all_pairs = |prefix: &str, ids: &[u32], suffix: &str| {
        for (i, a) in ids.iter().enumerate() {
            for b in &ids[i + 1..] {
                pairs.push((
                    format!("{prefix}{a}({suffix})"),
                    format!("{prefix}{b}({suffix})"),
                ));
            }
        }
    };
    all_pairs("E", &[3, 6], "T");
    all_pairs("E", &[4, 8, 11, 12, 13], "T");
    all_pairs("F", &[2, 5], "T");
    all_pairs("F", &[3, 6, 7, 9], "T");
    all_pairs("E", &[1, 5], "K");
    all_pairs("E", &[2, 7, 9, 10], "K");
    all_pairs("F", &[1, 8], "K");
    pairs
}

/// Reference characteristic polynomials, coefficients from `a^12` down.
pub const REFERENCE_POLYS: [(&str, [i64; 13]); 12] = [
    (
        "E4(T)",
        [1, 0, -32, -40, 254, 440, -628, -1400, 105, 1000, 300, 0, 0],
    ),
    (
        "E8(T)",
        [
            1, 0, -32, -48, 254, 656, -292, -2352, -2167, 624, 2044, 1120, 192,
        ],
    ),
    (
        "E11(T)",
        [
            1, 0, -31, -32, 222, 180, -746, -220, 1201, -228, -647, 322, 0,
        ],
    ),
    (
        "E12(T)",
        [
            1, 0, -33, -44, 258, 432, -682, -1032, 957, 560, -789, 276, -32,
        ],
    ),
    (
        "E13(T)",
        [
            1, 0, -33, -44, 252, 456, -568, -1296, 348, 1328, 108, -432, -128,
        ],
    ),
    (
        "F3(T)",
        [1, 0, -26, -17, 176, 91, -505, -95, 590, -90, -118, 24, 0],
    ),
    (
        "F6(T)",
        [1, 0, -28, -24, 212, 280, -524, -976, 80, 860, 528, 96, 0],
    ),
    (
        "F7(T)",
        [
            1, 0, -27, -20, 201, 192, -532, -552, 492, 560, -84, -192, -44,
        ],
    ),
    (
        "F9(T)",
        [
            1, 0, -27, -20, 207, 168, -610, -288, 723, -136, -171, 84, -11,
        ],
    ),
    (
        "E2(K)",
        [
            1, 0, -32, -40, 254, 440, -644, -1400, 457, 1640, 156, -640, -192,
        ],
    ),
    (
        "E7(K)",
        [
            1, 0, -32, -48, 258, 640, -364, -220, -1635, 496, 684, -32, -64,
        ],
    ),
    (
        "E9(K)",
        [
            1, 0, -31, -39, 227, 377, -561, -1129, 416, 1283, 92, -492, -144,
        ],
    ),
];

/// Reference polynomials that the catalog maps do not reproduce.
pub const POLY_MISMATCHES: [&str; 5] = ["E11(T)", "F3(T)", "F6(T)", "E7(K)", "E9(K)"];

/// The second sequences paired with `3^3.4^2` in the hand-worked
/// non-existence cases.
pub const WORKED_CASES: [&str; 8] = [
    "3^2.6^2", "3.4^2.6", "3^4.6", "3^2.4.12", "4.8^2", "4.5.20", "4.6.12", "3.4.3.12",
];

pub fn worked_case_types() -> Vec<MapType> {
    WORKED_CASES
        .iter()
        .map(|f| semimap::parse_type(&format!("3^3.4^2:{f}")).unwrap())
        .collect()
}
