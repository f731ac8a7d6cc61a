//! Map isomorphism via canonical flag traversals, plus exact
//! characteristic polynomials of the edge graph.
//!
//! A flag is a mutually incident (vertex, edge, face) triple. Flag `(f, i, d)`
//! sits at position `i` of face `f` and uses the edge towards position
//! `i + 1` when `d = 0`, towards `i - 1` when `d = 1`. The three involutions
//! swap the vertex, the edge, or the face of a flag while keeping the other
//! two. A breadth-first numbering from a root flag encodes the whole map; the
//! least encoding over all roots is a certificate that is equal for two maps
//! exactly when they are isomorphic, orientation-reversing maps included.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use sha2::{Digest, Sha256};

use crate::map::{Map, Vertex};

/// The flag structure of a map.
#[derive(Debug, Clone)]
pub struct Flags {
    /// `sigma[k][x]` is the image of flag `x` under involution `k`.
    sigma: [Vec<u32>; 3],
    vertex: Vec<Vertex>,
}

impl Flags {
    pub fn new(map: &Map) -> Flags {
        let faces = map.faces();
        let mut offset = Vec::with_capacity(faces.len());
        let mut total = 0usize;
        for f in faces {
            offset.push(total);
            total += 2 * f.len();
        }
        let id = |f: usize, i: usize, d: usize| (offset[f] + 2 * i + d) as u32;
        let mut sigma = [vec![0u32; total], vec![0u32; total], vec![0u32; total]];
        let mut vertex = vec![0; total];

        // For sigma2: the flags of each directed half of every edge.
        let mut at_edge: std::collections::HashMap<(Vertex, Vertex), Vec<u32>> =
            std::collections::HashMap::new();
        for (fi, f) in faces.iter().enumerate() {
            let vs = f.vertices();
            let n = vs.len();
            for i in 0..n {
                for d in 0..2 {
                    let x = id(fi, i, d) as usize;
                    vertex[x] = vs[i];
                    let (j, other) = if d == 0 {
                        ((i + 1) % n, 1)
                    } else {
                        ((i + n - 1) % n, 0)
                    };
                    sigma[0][x] = id(fi, j, other);
                    sigma[1][x] = id(fi, i, 1 - d);
                    at_edge.entry((vs[i], vs[j])).or_default().push(x as u32);
                }
            }
        }
        for flags in at_edge.values() {
            debug_assert_eq!(flags.len(), 2, "every edge lies on two faces");
            sigma[2][flags[0] as usize] = flags[1];
            sigma[2][flags[1] as usize] = flags[0];
        }
        Flags { sigma, vertex }
    }

    pub fn len(&self) -> usize {
        self.vertex.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex.is_empty()
    }

    /// Image of `flag` under involution `k` (0: vertex, 1: edge, 2: face).
    pub fn sigma(&self, k: usize, flag: usize) -> usize {
        self.sigma[k][flag] as usize
    }

    /// Vertex of a flag.
    pub fn vertex(&self, flag: usize) -> Vertex {
        self.vertex[flag]
    }

    /// Breadth-first numbering from `root`; returns flags in visit order.
    fn bfs_order(&self, root: usize) -> Vec<u32> {
        let n = self.len();
        let mut order = Vec::with_capacity(n);
        let mut number = vec![u32::MAX; n];
        number[root] = 0;
        order.push(root as u32);
        let mut head = 0;
        while head < order.len() {
            let x = order[head] as usize;
            head += 1;
            for k in 0..3 {
                let y = self.sigma[k][x] as usize;
                if number[y] == u32::MAX {
                    number[y] = order.len() as u32;
                    order.push(y as u32);
                }
            }
        }
        order
    }

    /// Compares the encoding from `root` against `best`, stopping at the first
    /// difference. Returns the ordering and, when smaller, the new encoding.
    fn encode_against(
        &self,
        root: usize,
        best: Option<&[u32]>,
        scratch: &mut Vec<u32>,
    ) -> Ordering {
        let n = self.len();
        let mut number = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        number[root] = 0;
        order.push(root);
        scratch.clear();
        let mut head = 0;
        let mut state = if best.is_some() {
            Ordering::Equal
        } else {
            Ordering::Less
        };
        while head < order.len() {
            let x = order[head];
            head += 1;
            for k in 0..3 {
                let y = self.sigma[k][x] as usize;
                if number[y] == u32::MAX {
                    number[y] = order.len() as u32;
                    order.push(y);
                }
                let code = number[y];
                if state == Ordering::Equal {
                    let b = best.expect("state Equal implies a best code")[scratch.len()];
                    state = code.cmp(&b);
                    if state == Ordering::Greater {
                        return Ordering::Greater;
                    }
                }
                scratch.push(code);
            }
        }
        state
    }
}

/// Relabeling-invariant encoding of a map. Equal certificates mean
/// isomorphic maps; the byte order is the catalog and report order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCertificate(Vec<u8>);

impl CanonicalCertificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// SHA-256 of the certificate, in lowercase hex.
    pub fn hash_hex(&self) -> String {
        hex::encode(Sha256::digest(&self.0))
    }
}

/// Result of the canonical minimization.
struct Canon {
    code: Vec<u32>,
    roots: Vec<usize>,
}

fn canonize(flags: &Flags) -> Canon {
    let mut best: Vec<u32> = Vec::new();
    let mut roots = Vec::new();
    let mut scratch = Vec::new();
    for root in 0..flags.len() {
        let cmp = flags.encode_against(
            root,
            if roots.is_empty() { None } else { Some(&best) },
            &mut scratch,
        );
        match cmp {
            Ordering::Less => {
                std::mem::swap(&mut best, &mut scratch);
                roots.clear();
                roots.push(root);
            }
            Ordering::Equal => roots.push(root),
            Ordering::Greater => {}
        }
    }
    Canon { code: best, roots }
}

/// Canonical certificate of a map.
pub fn canonical_form(map: &Map) -> CanonicalCertificate {
    let flags = Flags::new(map);
    let canon = canonize(&flags);
    let mut bytes = Vec::with_capacity(4 * (canon.code.len() + 1));
    bytes.extend_from_slice(&(flags.len() as u32).to_be_bytes());
    for c in canon.code {
        bytes.extend_from_slice(&c.to_be_bytes());
    }
    CanonicalCertificate(bytes)
}

/// Order of the automorphism group, orientation-reversing maps included.
pub fn automorphism_count(map: &Map) -> usize {
    canonize(&Flags::new(map)).roots.len()
}

/// Whether two maps are isomorphic. Cheap invariants are compared first.
pub fn is_isomorphic(a: &Map, b: &Map) -> bool {
    if a.n_vertices() != b.n_vertices()
        || a.faces().len() != b.faces().len()
        || a.edges().len() != b.edges().len()
    {
        return false;
    }
    if a.map_type() != b.map_type() || a.surface() != b.surface() {
        return false;
    }
    if char_poly(a) != char_poly(b) {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

/// A vertex bijection `phi` with `phi(a) = b` when the maps are isomorphic.
pub fn isomorphism(a: &Map, b: &Map) -> Option<Vec<Vertex>> {
    let (fa, fb) = (Flags::new(a), Flags::new(b));
    if fa.len() != fb.len() || a.n_vertices() != b.n_vertices() {
        return None;
    }
    let (ca, cb) = (canonize(&fa), canonize(&fb));
    if ca.code != cb.code {
        return None;
    }
    let oa = fa.bfs_order(ca.roots[0]);
    let ob = fb.bfs_order(cb.roots[0]);
    let mut phi = vec![usize::MAX; a.n_vertices()];
    for (x, y) in oa.iter().zip(&ob) {
        phi[fa.vertex(*x as usize)] = fb.vertex(*y as usize);
    }
    Some(phi)
}

/// Cycle notation of a permutation, fixed points omitted, e.g.
/// `(0,1)(2,5)`. The identity prints as `()`.
pub fn cycle_notation(perm: &[Vertex]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x.to_string());
            x = perm[x];
        }
        out.push('(');
        out.push_str(&cycle.join(","));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Characteristic polynomial `det(aI - A)` of the edge graph, with exact
/// integer coefficients in descending degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// Coefficients from `a^n` down to the constant term.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Builds a polynomial from descending coefficients.
    pub fn from_coefficients(coeffs: Vec<BigInt>) -> CharPoly {
        CharPoly { coeffs }
    }
}

impl fmt::Display for CharPoly {
    /// Descending signed monomials, e.g. `a^12 - 31a^10 + 322a`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = n - i;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if !mag.is_one() || power == 0 {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "a")?,
                p => write!(f, "a^{p}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Exact characteristic polynomial by the Faddeev-LeVerrier recurrence:
/// `M_k = A M_{k-1} + c_{k-1} I`, `c_k = -tr(A M_k) / k`, where every
/// division is exact over the integers.
pub fn char_poly(map: &Map) -> CharPoly {
    let n = map.n_vertices();
    let mut adj = vec![vec![0i64; n]; n];
    for &(u, v) in map.edges() {
        adj[u][v] = 1;
        adj[v][u] = 1;
    }
    let mut coeffs = vec![BigInt::one()];
    let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // m <- A m + c_{k-1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in adj.iter().enumerate() {
            for (j, cell) in next[i].iter_mut().enumerate() {
                let mut s = BigInt::zero();
                for (l, &a) in row.iter().enumerate() {
                    if a != 0 {
                        s += &m[l][j];
                    }
                }
                *cell = s;
            }
            next[i][i] += &coeffs[k - 1];
        }
        m = next;
        // trace(A m)
        let mut tr = BigInt::zero();
        for (i, row) in adj.iter().enumerate() {
            for (l, &a) in row.iter().enumerate() {
                if a != 0 {
                    tr += &m[l][i];
                }
            }
        }
        let c = -tr / BigInt::from(k);
        coeffs.push(c);
    }
    CharPoly { coeffs }
}
