//! Independent reference implementations checked against the library.

mod common;

use common::{all_isomorphisms, face_set, image, shuffle, small_maps};

use std::collections::{BTreeSet, HashMap};

use semimap::{
    automorphism_count, canonical_form, catalog_entries, char_poly, enumerate_maps, fixtures,
    is_isomorphic, isomorphism, parse_type, solve_zero_curvature, Map,
};

#[test]
fn automorphism_counts_match_brute_force() {
    assert_eq!(
        all_isomorphisms(&fixtures::t7(), &fixtures::t7(), usize::MAX).len(),
        42
    );
    assert_eq!(automorphism_count(&fixtures::t7()), 42);
    assert_eq!(automorphism_count(&fixtures::tetrahedron()), 24);
    for (name, m) in small_maps() {
        let brute = all_isomorphisms(&m, &m, usize::MAX).len();
        assert_eq!(automorphism_count(&m), brute, "{name}");
    }
    assert_eq!(
        automorphism_count(&fixtures::square_torus()),
        all_isomorphisms(
            &fixtures::square_torus(),
            &fixtures::square_torus(),
            usize::MAX
        )
        .len()
    );
}

#[test]
fn isomorphism_matches_brute_force_on_small_maps() {
    let mut maps = Vec::new();
    for (i, (name, m)) in small_maps().into_iter().enumerate() {
        let relabeled = m.relabel(&shuffle(m.n_vertices(), i as u64 + 7));
        maps.push((name, m));
        maps.push((name, relabeled));
    }
    for (na, a) in &maps {
        for (nb, b) in &maps {
            let brute = !all_isomorphisms(a, b, 1).is_empty();
            assert_eq!(is_isomorphic(a, b), brute, "{na} vs {nb}");
            assert_eq!(brute, na == nb, "{na} vs {nb}");
            match isomorphism(a, b) {
                Some(phi) => assert_eq!(image(a, &phi), face_set(b), "{na} vs {nb}"),
                None => assert!(!brute),
            }
        }
    }
}

/// `det(xI - A)` by fraction-free Gaussian elimination.
fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Characteristic polynomial from its values at `0..=n`, via Newton's
/// forward differences. Coefficients in descending order.
fn char_poly_by_interpolation(map: &Map) -> Vec<i128> {
    let n = map.n_vertices();
    let values: Vec<i128> = (0..=n as i128)
        .map(|x| {
            let mut m = vec![vec![0i128; n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = x;
            }
            for &(u, v) in map.edges() {
                m[u][v] = -1;
                m[v][u] = -1;
            }
            bareiss_det(m)
        })
        .collect();
    let mut diffs = values.clone();
    let mut newton = Vec::new();
    for _ in 0..=n {
        newton.push(diffs[0]);
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
    }
    // f(x) = sum_k newton[k] / k! * x (x-1) ... (x-k+1)
    let mut coeffs = vec![0i128; n + 1]; // ascending
    let mut falling = vec![1i128]; // ascending coefficients of x(x-1)...(x-k+1)
    let mut fact = 1i128;
    for (k, d) in newton.iter().enumerate() {
        if k > 0 {
            fact *= k as i128;
        }
        assert_eq!(d % fact, 0);
        for (i, c) in falling.iter().enumerate() {
            coeffs[i] += d / fact * c;
        }
        let mut next = vec![0i128; falling.len() + 1];
        for (i, c) in falling.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= k as i128 * c;
        }
        falling = next;
    }
    coeffs.reverse();
    coeffs
}

#[test]
fn char_poly_matches_interpolation() {
    let mut maps: Vec<Map> = catalog_entries().iter().map(|e| e.map.clone()).collect();
    maps.extend(small_maps().into_iter().map(|(_, m)| m));
    maps.push(fixtures::square_torus());
    for m in maps {
        let ours: Vec<i128> = char_poly(&m)
            .coefficients()
            .iter()
            .map(|c| c.to_string().parse().unwrap())
            .collect();
        assert_eq!(ours, char_poly_by_interpolation(&m));
    }
}

/// Least tuple over rotations and reversals.
fn canonical_sizes(s: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut best = s.to_vec();
    for start in 0..n {
        for dir in [1, n - 1] {
            let v: Vec<u32> = (0..n).map(|i| s[(start + i * dir) % n]).collect();
            best = best.min(v);
        }
    }
    best
}

fn permutations(items: &mut Vec<u32>, k: usize, out: &mut BTreeSet<Vec<u32>>) {
    if k == items.len() {
        out.insert(canonical_sizes(items));
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

#[test]
fn zero_curvature_matches_brute_force() {
    // sum 1/p_i = d/2 - 1, as integers over the common denominator L.
    const MAX_SIZE: u32 = 50;
    let mut brute = BTreeSet::new();
    fn multisets(
        d: usize,
        from: u32,
        num: i64,
        den: i64,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if cur.len() == d {
            if num == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for p in from..=MAX_SIZE {
            // remaining target num/den must be positive and at most (d - len)/p
            let left = (d - cur.len()) as i64;
            if num * p as i64 > left * den {
                continue;
            }
            if num * (p as i64) < den && cur.len() + 1 < d {
                // 1/p > target leaves nothing positive for the rest
                continue;
            }
            let (n2, d2) = (num * p as i64 - den, den * p as i64);
            if n2 < 0 {
                continue;
            }
            cur.push(p);
            multisets(d, p, n2, d2, cur, out);
            cur.pop();
        }
    }
    for d in 3..=6usize {
        let mut found = Vec::new();
        multisets(d, 3, d as i64 - 2, 2, &mut Vec::new(), &mut found);
        for mut ms in found {
            permutations(&mut ms, 0, &mut brute);
        }
    }
    let ours: BTreeSet<Vec<u32>> = solve_zero_curvature()
        .iter()
        .map(|s| s.sizes().to_vec())
        .collect();
    assert_eq!(brute.len(), 21);
    assert_eq!(ours, brute);
}

/// Face-by-face generator that checks only edge multiplicity, the face
/// intersection rule and per-vertex face counts, then validates each leaf.
struct Naive {
    n_max: usize,
    faces: Vec<Vec<usize>>,
    edges: HashMap<(usize, usize), u8>,
    tri: Vec<u8>,
    quad: Vec<u8>,
    labels: usize,
    found: BTreeSet<Vec<u8>>,
}

impl Naive {
    fn key(a: usize, b: usize) -> (usize, usize) {
        (a.min(b), a.max(b))
    }

    /// 3^6 has six triangles; 3^3.4^2 has three triangles and two squares.
    fn counts_ok(&self, v: usize) -> bool {
        let (t, q) = (self.tri[v], self.quad[v]);
        q <= 2 && if q > 0 { t <= 3 } else { t <= 6 }
    }

    fn fits(&self, f: &[usize]) -> bool {
        let k = f.len();
        for i in 0..k {
            if self
                .edges
                .get(&Self::key(f[i], f[(i + 1) % k]))
                .copied()
                .unwrap_or(0)
                >= 2
            {
                return false;
            }
        }
        for g in &self.faces {
            let shared: Vec<usize> = f.iter().copied().filter(|v| g.contains(v)).collect();
            match shared.len() {
                0 | 1 => {}
                2 => {
                    let adj = |c: &[usize]| {
                        let (i, j) = (
                            c.iter().position(|&x| x == shared[0]).unwrap(),
                            c.iter().position(|&x| x == shared[1]).unwrap(),
                        );
                        (i + 1) % c.len() == j || (j + 1) % c.len() == i
                    };
                    if !adj(f) || !adj(g) {
                        return false;
                    }
                }
                _ => return false,
            }
        }
        true
    }

    fn apply(&mut self, f: Vec<usize>, delta: i8) {
        let k = f.len();
        for i in 0..k {
            let e = self
                .edges
                .entry(Self::key(f[i], f[(i + 1) % k]))
                .or_insert(0);
            *e = (*e as i8 + delta) as u8;
        }
        for &v in &f {
            let c = if k == 3 {
                &mut self.tri[v]
            } else {
                &mut self.quad[v]
            };
            *c = (*c as i8 + delta) as u8;
        }
        if delta > 0 {
            self.faces.push(f);
        } else {
            self.faces.pop();
        }
    }

    fn open_edge(&self) -> Option<(usize, usize)> {
        let mut open: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|(_, &c)| c == 1)
            .map(|(&e, _)| e)
            .collect();
        open.sort_unstable();
        open.first().copied()
    }

    fn run(&mut self, ty: &semimap::MapType) {
        let Some((v, w)) = self.open_edge() else {
            if let Ok(m) = Map::new(self.labels, self.faces.clone()) {
                if m.map_type() == *ty {
                    self.found.insert(canonical_form(&m).as_bytes().to_vec());
                }
            }
            return;
        };
        let saved = self.labels;
        // Existing labels, then the next fresh one.
        let options = |labels: usize| (0..=labels).filter(|&x| x < self.n_max);
        let mut cands = Vec::new();
        for x in options(saved) {
            cands.push(vec![v, w, x]);
            for y in options(if x == saved { saved + 1 } else { saved }) {
                cands.push(vec![v, w, x, y]);
            }
        }
        for f in cands {
            let mut distinct = f.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != f.len() || !self.fits(&f) {
                continue;
            }
            let top = *f.iter().max().unwrap();
            self.labels = saved.max(top + 1);
            self.apply(f.clone(), 1);
            if f.iter().all(|&u| self.counts_ok(u)) {
                self.run(ty);
            }
            self.apply(f, -1);
            self.labels = saved;
        }
    }
}

#[test]
fn naive_generator_agrees_on_small_bounds() {
    let ty = parse_type("[3^6:3^3.4^2]").unwrap();
    for n_max in 4..=9 {
        let mut naive = Naive {
            n_max,
            faces: Vec::new(),
            edges: HashMap::new(),
            tri: vec![0; n_max + 2],
            quad: vec![0; n_max + 2],
            labels: 0,
            found: BTreeSet::new(),
        };
        for seed in [vec![0, 1, 2], vec![0, 1, 2, 3]] {
            if seed.len() > n_max {
                continue;
            }
            naive.labels = seed.len();
            naive.apply(seed.clone(), 1);
            naive.run(&ty);
            naive.apply(seed, -1);
        }
        let ours: BTreeSet<Vec<u8>> = enumerate_maps(&ty, n_max)
            .unwrap()
            .certificates
            .iter()
            .map(|c| c.as_bytes().to_vec())
            .collect();
        assert_eq!(ours, naive.found, "n_max = {n_max}");
        if n_max == 9 {
            assert_eq!(ours.len(), 4);
        }
    }
}
