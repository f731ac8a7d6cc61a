//! Polygonal maps on closed surfaces.
//!
//! A [`Map`] is a vertex count plus a list of faces, each face a cycle of
//! vertex ids. Construction validates the map axioms and normalizes the face
//! list, so two equal maps always produce identical structures.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::facetypes::{FaceSequence, MapType};
use crate::Rational;

/// Vertex identifier, `0..n_vertices`.
pub type Vertex = usize;

/// Reasons a face list fails to describe a polygonal map.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("a map needs at least one vertex")]
    NoVertices,
    #[error("face {face} has {len} vertices, at least 3 are required")]
    FaceTooSmall { face: usize, len: usize },
    #[error("face {face} uses vertex {vertex}, but the map has {n_vertices} vertices")]
    VertexOutOfRange {
        face: usize,
        vertex: Vertex,
        n_vertices: usize,
    },
    #[error("face {face} repeats vertex {vertex}")]
    RepeatedVertexInFace { face: usize, vertex: Vertex },
    #[error("faces {first} and {second} share {shared:?}, which is neither a vertex nor an edge")]
    FaceIntersectionViolation {
        first: usize,
        second: usize,
        shared: Vec<Vertex>,
    },
    #[error("edge {u}-{v} lies on {count} faces instead of 2")]
    EdgeNotOnTwoFaces { u: Vertex, v: Vertex, count: usize },
    #[error("vertex {vertex} lies on {count} faces, at least 3 are required")]
    DanglingVertex { vertex: Vertex, count: usize },
    #[error("the faces around vertex {vertex} do not form a single wheel")]
    PinchedVertex { vertex: Vertex },
    #[error("the edge graph is disconnected")]
    Disconnected,
}

/// Errors from reading the map text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapTextError {
    #[error("line {line}: expected header `map <n_vertices>`")]
    MissingHeader { line: usize },
    #[error("line {line}: `{token}` is not a vertex id")]
    BadToken { line: usize, token: String },
    #[error("invalid map: {0}")]
    Invalid(#[from] MapError),
}

/// A face as a normalized vertex cycle: least vertex first, then its lesser
/// neighbor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(Vec<Vertex>);

impl Face {
    /// Normalizes a vertex cycle given in either direction from any start.
    pub fn normalized(cycle: &[Vertex]) -> Face {
        let n = cycle.len();
        let start = (0..n).min_by_key(|&i| cycle[i]).unwrap_or(0);
        let fwd = cycle[(start + 1) % n];
        let back = cycle[(start + n - 1) % n];
        let out = if fwd <= back {
            (0..n).map(|k| cycle[(start + k) % n]).collect()
        } else {
            (0..n).map(|k| cycle[(start + n - k) % n]).collect()
        };
        Face(out)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    /// Position of `v` in the cycle.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.0.iter().position(|&x| x == v)
    }

    /// The two cycle neighbors of the vertex at position `i`.
    fn neighbors_at(&self, i: usize) -> (Vertex, Vertex) {
        let n = self.0.len();
        (self.0[(i + n - 1) % n], self.0[(i + 1) % n])
    }
}

/// One entry of a link cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinkEntry {
    pub vertex: Vertex,
    /// Whether the entry is joined to the center by an edge.
    pub adjacent: bool,
}

/// The boundary cycle of the union of faces around a vertex.
///
/// Entries start at the least adjacent neighbor and run in the direction
/// giving the lexicographically smaller vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkCycle {
    entries: Vec<LinkEntry>,
}

impl LinkCycle {
    pub fn entries(&self) -> &[LinkEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of adjacent entries, equal to the degree of the center.
    pub fn degree(&self) -> usize {
        self.entries.iter().filter(|e| e.adjacent).count()
    }
}

impl fmt::Display for LinkCycle {
    /// `C_n(v1, [v2], ...)` with non-adjacent entries in brackets.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{}(", self.entries.len())?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if e.adjacent {
                write!(f, "{}", e.vertex)?;
            } else {
                write!(f, "[{}]", e.vertex)?;
            }
        }
        write!(f, ")")
    }
}

/// Closed surface of Euler characteristic 0, or anything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Surface {
    Torus,
    KleinBottle,
    Other { chi: i64, orientable: bool },
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::Torus => write!(f, "torus"),
            Surface::KleinBottle => write!(f, "klein-bottle"),
            Surface::Other {
                orientable: true, ..
            } => write!(f, "orientable"),
            Surface::Other {
                orientable: false, ..
            } => write!(f, "non-orientable"),
        }
    }
}

/// A validated polygonal map. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Map {
    n_vertices: usize,
    faces: Vec<Face>,
    edges: Vec<(Vertex, Vertex)>,
    /// Per vertex, the incident faces in link order.
    wheels: Vec<Vec<usize>>,
    links: Vec<LinkCycle>,
}

impl Map {
    /// Validates a face list and builds the map.
    ///
    /// Checks run in a fixed order and the first failure is reported: face
    /// sizes, vertex range and repeats per face, pairwise face intersections,
    /// edge multiplicities, vertices on too few faces, pinched vertices, and
    /// connectivity.
    pub fn new(n_vertices: usize, faces: Vec<Vec<Vertex>>) -> Result<Map, MapError> {
        if n_vertices == 0 {
            return Err(MapError::NoVertices);
        }
        for (i, f) in faces.iter().enumerate() {
            if f.len() < 3 {
                return Err(MapError::FaceTooSmall {
                    face: i,
                    len: f.len(),
                });
            }
            if let Some(&vertex) = f.iter().find(|&&v| v >= n_vertices) {
                return Err(MapError::VertexOutOfRange {
                    face: i,
                    vertex,
                    n_vertices,
                });
            }
            let mut seen = f.clone();
            seen.sort_unstable();
            if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
                return Err(MapError::RepeatedVertexInFace {
                    face: i,
                    vertex: w[0],
                });
            }
        }
        check_intersections(n_vertices, &faces)?;

        let mut edge_count: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
        for f in &faces {
            for k in 0..f.len() {
                *edge_count
                    .entry(ordered(f[k], f[(k + 1) % f.len()]))
                    .or_default() += 1;
            }
        }
        if let Some((&(u, v), &count)) = edge_count.iter().find(|(_, &c)| c != 2) {
            return Err(MapError::EdgeNotOnTwoFaces { u, v, count });
        }

        let mut normalized: Vec<Face> = faces.iter().map(|f| Face::normalized(f)).collect();
        normalized.sort();

        let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); n_vertices];
        for (fi, f) in normalized.iter().enumerate() {
            for &v in f.vertices() {
                incidence[v].push(fi);
            }
        }
        if let Some(v) = (0..n_vertices).find(|&v| incidence[v].len() < 3) {
            return Err(MapError::DanglingVertex {
                vertex: v,
                count: incidence[v].len(),
            });
        }

        let mut wheels = Vec::with_capacity(n_vertices);
        let mut links = Vec::with_capacity(n_vertices);
        for (v, around) in incidence.iter().enumerate() {
            let (wheel, link) =
                walk_wheel(v, &normalized, around).ok_or(MapError::PinchedVertex { vertex: v })?;
            wheels.push(wheel);
            links.push(link);
        }

        let edges: Vec<(Vertex, Vertex)> = edge_count.keys().copied().collect();
        if !connected(n_vertices, &edges) {
            return Err(MapError::Disconnected);
        }
        Ok(Map {
            n_vertices,
            faces: normalized,
            edges,
            wheels,
            links,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Faces in normalized order.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.links[v].degree()
    }

    /// Graph neighbors of `v` in link order.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.links[v]
            .entries
            .iter()
            .filter(|e| e.adjacent)
            .map(|e| e.vertex)
            .collect()
    }

    /// Indices of the faces around `v`, in the order of its link.
    pub fn wheel(&self, v: Vertex) -> &[usize] {
        &self.wheels[v]
    }

    /// The link cycle of `v`.
    pub fn link(&self, v: Vertex) -> &LinkCycle {
        &self.links[v]
    }

    /// Canonical face-sequence of `v`.
    pub fn face_sequence(&self, v: Vertex) -> FaceSequence {
        let sizes: Vec<u32> = self.wheels[v]
            .iter()
            .map(|&f| self.faces[f].len() as u32)
            .collect();
        FaceSequence::canonical_unchecked(&sizes)
    }

    /// Curvature at `v`.
    pub fn curvature(&self, v: Vertex) -> Rational {
        self.face_sequence(v).curvature()
    }

    /// The set of distinct face-sequences of the map.
    pub fn map_type(&self) -> MapType {
        MapType::from_sequences((0..self.n_vertices).map(|v| self.face_sequence(v)))
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.n_vertices as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Whether faces can be oriented so that every edge is traversed once in
    /// each direction.
    pub fn is_orientable(&self) -> bool {
        // Direction of an edge inside a face: +1 when stored as u -> v.
        let mut by_edge: BTreeMap<(Vertex, Vertex), Vec<(usize, i8)>> = BTreeMap::new();
        for (fi, f) in self.faces.iter().enumerate() {
            let vs = f.vertices();
            for k in 0..vs.len() {
                let (a, b) = (vs[k], vs[(k + 1) % vs.len()]);
                let dir = if a < b { 1 } else { -1 };
                by_edge.entry(ordered(a, b)).or_default().push((fi, dir));
            }
        }
        let mut adj: Vec<Vec<(usize, i8)>> = vec![Vec::new(); self.faces.len()];
        for pair in by_edge.values() {
            let ((f, df), (g, dg)) = (pair[0], pair[1]);
            // s_g = -s_f * df * dg
            adj[f].push((g, -df * dg));
            adj[g].push((f, -df * dg));
        }
        let mut sign = vec![0i8; self.faces.len()];
        let mut queue = VecDeque::new();
        sign[0] = 1;
        queue.push_back(0);
        while let Some(f) = queue.pop_front() {
            for &(g, rel) in &adj[f] {
                let want = sign[f] * rel;
                if sign[g] == 0 {
                    sign[g] = want;
                    queue.push_back(g);
                } else if sign[g] != want {
                    return false;
                }
            }
        }
        true
    }

    /// Torus or Klein bottle when `chi = 0`, otherwise `Other`.
    pub fn surface(&self) -> Surface {
        let chi = self.euler_characteristic();
        let orientable = self.is_orientable();
        match (chi, orientable) {
            (0, true) => Surface::Torus,
            (0, false) => Surface::KleinBottle,
            _ => Surface::Other { chi, orientable },
        }
    }

    /// Replaces face `face` by a cone over its boundary from one new vertex.
    pub fn stack_face(&self, face: usize) -> Map {
        self.stack(&[face])
    }

    /// Stacks every face at once; new vertices follow the face order.
    pub fn stack_all_faces(&self) -> Map {
        let all: Vec<usize> = (0..self.faces.len()).collect();
        self.stack(&all)
    }

    fn stack(&self, chosen: &[usize]) -> Map {
        let mut next = self.n_vertices;
        let mut faces = Vec::new();
        for (fi, f) in self.faces.iter().enumerate() {
            if chosen.contains(&fi) {
                let vs = f.vertices();
                for k in 0..vs.len() {
                    faces.push(vec![vs[k], vs[(k + 1) % vs.len()], next]);
                }
                next += 1;
            } else {
                faces.push(f.vertices().to_vec());
            }
        }
        Map::new(next, faces).expect("stacking preserves the map axioms")
    }

    /// The same map with vertex `v` renamed to `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n_vertices`.
    pub fn relabel(&self, perm: &[Vertex]) -> Map {
        assert_eq!(perm.len(), self.n_vertices, "permutation length");
        let faces = self
            .faces
            .iter()
            .map(|f| f.vertices().iter().map(|&v| perm[v]).collect())
            .collect();
        Map::new(self.n_vertices, faces).expect("relabeling by a permutation preserves validity")
    }

    /// Serializes to the line format: a `map <n>` header, then one face per
    /// line.
    pub fn to_text(&self) -> String {
        let mut out = format!("map {}\n", self.n_vertices);
        for f in &self.faces {
            let line: Vec<String> = f.vertices().iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the line format. `#` starts a comment; blank lines are ignored.
    pub fn from_text(text: &str) -> Result<Map, MapTextError> {
        let mut n_vertices = None;
        let mut faces = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            if n_vertices.is_none() {
                let n = match (tokens.next(), tokens.next(), tokens.next()) {
                    (Some("map"), Some(n), None) => n.parse::<usize>().ok(),
                    _ => None,
                };
                n_vertices = Some(n.ok_or(MapTextError::MissingHeader { line: line_no })?);
                continue;
            }
            let face = tokens
                .map(|t| {
                    t.parse::<Vertex>().map_err(|_| MapTextError::BadToken {
                        line: line_no,
                        token: t.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            faces.push(face);
        }
        let n = n_vertices.ok_or(MapTextError::MissingHeader { line: 1 })?;
        Ok(Map::new(n, faces)?)
    }
}

pub(crate) fn ordered(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Any two faces meet in nothing, one vertex, or one common edge.
fn check_intersections(n_vertices: usize, faces: &[Vec<Vertex>]) -> Result<(), MapError> {
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); n_vertices];
    for (fi, f) in faces.iter().enumerate() {
        for &v in f {
            at[v].push(fi);
        }
    }
    let mut shared: BTreeMap<(usize, usize), Vec<Vertex>> = BTreeMap::new();
    for (v, fs) in at.iter().enumerate() {
        for (i, &a) in fs.iter().enumerate() {
            for &b in &fs[i + 1..] {
                shared.entry(ordered(a, b)).or_default().push(v);
            }
        }
    }
    for (&(a, b), vs) in &shared {
        let ok = match vs.len() {
            1 => true,
            2 => consecutive(&faces[a], vs[0], vs[1]) && consecutive(&faces[b], vs[0], vs[1]),
            _ => false,
        };
        if !ok {
            return Err(MapError::FaceIntersectionViolation {
                first: a,
                second: b,
                shared: vs.clone(),
            });
        }
    }
    Ok(())
}

fn consecutive(face: &[Vertex], x: Vertex, y: Vertex) -> bool {
    let n = face.len();
    (0..n).any(|k| {
        let (a, b) = (face[k], face[(k + 1) % n]);
        (a == x && b == y) || (a == y && b == x)
    })
}

/// Walks the faces around `v`. Returns `None` when they do not form one
/// cycle.
fn walk_wheel(v: Vertex, faces: &[Face], at: &[usize]) -> Option<(Vec<usize>, LinkCycle)> {
    // For each face at v: the two neighbors of v in it.
    let corners: Vec<(usize, Vertex, Vertex)> = at
        .iter()
        .map(|&fi| {
            let pos = faces[fi]
                .position(v)
                .expect("incidence lists are consistent");
            let (a, b) = faces[fi].neighbors_at(pos);
            (fi, a, b)
        })
        .collect();
    let start = corners.iter().flat_map(|&(_, a, b)| [a, b]).min()?;
    let mut best: Option<(Vec<usize>, Vec<LinkEntry>)> = None;
    for first in corners.iter().filter(|c| c.1 == start || c.2 == start) {
        let mut wheel = Vec::new();
        let mut entries = Vec::new();
        let mut entry = start;
        let mut corner = *first;
        loop {
            let (fi, a, b) = corner;
            wheel.push(fi);
            let exit = if a == entry { b } else { a };
            entries.push(LinkEntry {
                vertex: entry,
                adjacent: true,
            });
            for &x in interior_path(&faces[fi], v, entry) {
                entries.push(LinkEntry {
                    vertex: x,
                    adjacent: false,
                });
            }
            entry = exit;
            if entry == start {
                break;
            }
            corner = *corners
                .iter()
                .find(|c| c.0 != fi && (c.1 == entry || c.2 == entry))?;
            if wheel.contains(&corner.0) {
                return None;
            }
        }
        if wheel.len() != corners.len() {
            return None;
        }
        let better = match &best {
            None => true,
            Some((_, e)) => entries
                .iter()
                .map(|x| x.vertex)
                .lt(e.iter().map(|x| x.vertex)),
        };
        if better {
            best = Some((wheel, entries));
        }
    }
    best.map(|(wheel, entries)| (wheel, LinkCycle { entries }))
}

/// Vertices of `face` strictly between `entry` and the other neighbor of
/// `v`, walking away from `v` through `entry`.
fn interior_path<'a>(
    face: &'a Face,
    v: Vertex,
    entry: Vertex,
) -> impl Iterator<Item = &'a Vertex> + 'a {
    let vs = face.vertices();
    let n = vs.len();
    let pv = face.position(v).expect("v lies on face");
    let forward = vs[(pv + 1) % n] == entry;
    (2..n - 1).map(move |k| {
        if forward {
            &vs[(pv + k) % n]
        } else {
            &vs[(pv + n - k) % n]
        }
    })
}

fn connected(n: usize, edges: &[(Vertex, Vertex)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}
