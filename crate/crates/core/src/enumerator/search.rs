//! Backtracking growth of partial maps, one face at a time.
//!
//! The state holds committed faces, edge multiplicities and, per vertex, the
//! corners (face size and the two neighbors of the vertex in that face). A
//! new face is always glued along an edge that so far lies on one face. Every
//! step keeps these invariants:
//! - no edge lies on more than two faces;
//! - any two faces meet in nothing, one vertex, or one edge;
//! - the corners at each vertex split into fans (runs of faces linked by
//!   shared edges) that can be laid out disjointly, with gaps, along some
//!   allowed face-sequence; a closed wheel must equal an allowed sequence.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::facetypes::canonical_rotation;

/// Shared node counter with a hard limit.
pub(crate) struct Budget {
    used: AtomicU64,
    limit: u64,
    exceeded: AtomicBool,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Budget {
        Budget {
            used: AtomicU64::new(0),
            limit,
            exceeded: AtomicBool::new(false),
        }
    }

    /// Charges one node; false once the limit is passed.
    pub(crate) fn charge(&self) -> bool {
        if self.exceeded.load(Ordering::Relaxed) {
            return false;
        }
        if self.used.fetch_add(1, Ordering::Relaxed) + 1 > self.limit {
            self.exceeded.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub(crate) fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed).min(self.limit)
    }

    pub(crate) fn exceeded(&self) -> bool {
        self.exceeded.load(Ordering::Relaxed)
    }
}

/// Port standing for a neighbor not chosen yet; it matches nothing.
const UNKNOWN: usize = usize::MAX;

#[derive(Debug, Clone, Copy)]
struct Corner {
    face: usize,
    size: u32,
    a: usize,
    b: usize,
}

/// Allowed wheels: each target is a face-sequence in canonical form.
#[derive(Debug, Clone)]
pub(crate) struct Targets {
    pub seqs: Vec<Vec<u32>>,
    pub sizes: Vec<u32>,
    pub max_degree: usize,
}

impl Targets {
    pub(crate) fn new(seqs: Vec<Vec<u32>>) -> Targets {
        let mut sizes: Vec<u32> = seqs.iter().flatten().copied().collect();
        sizes.sort_unstable();
        sizes.dedup();
        let max_degree = seqs.iter().map(Vec::len).max().unwrap_or(0);
        Targets {
            seqs,
            sizes,
            max_degree,
        }
    }

    pub(crate) fn all_mask(&self) -> u8 {
        ((1u16 << self.seqs.len()) - 1) as u8
    }
}

#[derive(Debug, Clone)]
pub(crate) struct State {
    cap: usize,
    next: usize,
    faces: Vec<Vec<usize>>,
    edge: Vec<u8>,
    corners: Vec<Vec<Corner>>,
    /// Bitmask of targets each vertex may realize.
    allowed: Vec<u8>,
    /// Faces must be coherently oriented and the patch planar.
    oriented: bool,
    /// For each directed edge, one plus the index of the face traversing it.
    dart: Vec<u32>,
    /// Set when a fresh label was wanted beyond `cap`.
    pub truncated: bool,
}

/// A vertex wheel laid out around a new seed vertex `0`, link labels
/// `1..=L` in cyclic order.
pub(crate) fn seed_faces(seq: &[u32]) -> (Vec<Vec<usize>>, usize) {
    let link: usize = seq.iter().map(|&p| p as usize - 2).sum();
    let label = |i: usize| 1 + i % link;
    let mut pos = 0;
    let mut faces = Vec::new();
    for &p in seq {
        let mut f = vec![0];
        for k in 0..(p as usize - 1) {
            f.push(label(pos + k));
        }
        pos += p as usize - 2;
        faces.push(f);
    }
    (faces, link + 1)
}

impl State {
    pub(crate) fn new(cap: usize, all: u8) -> State {
        State {
            cap,
            next: 0,
            faces: Vec::new(),
            edge: vec![0; cap * cap],
            corners: vec![Vec::new(); cap],
            allowed: vec![all; cap],
            oriented: false,
            dart: vec![0; cap * cap],
            truncated: false,
        }
    }

    /// A state for patches of a planar tiling: coherent orientation and
    /// genus zero are enforced.
    pub(crate) fn new_oriented(cap: usize, all: u8) -> State {
        State {
            oriented: true,
            ..State::new(cap, all)
        }
    }

    pub(crate) fn next_label(&self) -> usize {
        self.next
    }

    pub(crate) fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub(crate) fn restrict(&mut self, v: usize, mask: u8) {
        self.allowed[v] &= mask;
    }

    fn edge_count(&self, a: usize, b: usize) -> u8 {
        self.edge[a * self.cap + b]
    }

    fn bump_edge(&mut self, a: usize, b: usize, delta: i8) {
        let i = a * self.cap + b;
        let j = b * self.cap + a;
        self.edge[i] = (self.edge[i] as i8 + delta) as u8;
        self.edge[j] = self.edge[i];
    }

    /// Adds a face without checks (seeding and replay).
    pub(crate) fn push_face(&mut self, face: Vec<usize>) {
        let n = face.len();
        let fi = self.faces.len();
        for k in 0..n {
            let (x, y) = (face[k], face[(k + 1) % n]);
            self.bump_edge(x, y, 1);
            self.dart[x * self.cap + y] = fi as u32 + 1;
            let prev = face[(k + n - 1) % n];
            self.corners[x].push(Corner {
                face: fi,
                size: n as u32,
                a: prev,
                b: y,
            });
            self.next = self.next.max(x + 1);
        }
        self.faces.push(face);
    }

    fn pop_face(&mut self) {
        let face = self.faces.pop().expect("pop after push");
        let n = face.len();
        for k in 0..n {
            let (x, y) = (face[k], face[(k + 1) % n]);
            self.bump_edge(x, y, -1);
            self.dart[x * self.cap + y] = 0;
            self.corners[x].pop();
        }
    }

    /// Neighbors of `v` along edges that lie on a single face, ascending.
    fn open_ports(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.corners[v]
            .iter()
            .flat_map(|c| [c.a, c.b])
            .filter(move |&x| self.edge_count(v, x) == 1)
    }

    pub(crate) fn is_complete(&self, v: usize) -> bool {
        !self.corners[v].is_empty() && self.open_ports(v).next().is_none()
    }

    /// Least open port of `v`, if any.
    pub(crate) fn least_open_port(&self, v: usize) -> Option<usize> {
        self.open_ports(v).min()
    }

    /// Canonical wheel of a complete vertex.
    pub(crate) fn wheel_sequence(&self, v: usize) -> Vec<u32> {
        let fans = fans(&self.corners[v], None, self.oriented);
        match fans {
            Some(Fans {
                closed: Some(c), ..
            }) => canonical_rotation(&c),
            _ => Vec::new(),
        }
    }

    /// Link vertices of a complete vertex `v`: every other vertex on its faces.
    pub(crate) fn link_vertices(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.corners[v]
            .iter()
            .flat_map(|c| self.faces[c.face].iter().copied())
            .filter(|&x| x != v)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn feasible(&self, v: usize, extra: Option<Corner>, targets: &Targets) -> bool {
        feasible(
            &self.corners[v],
            extra,
            self.allowed[v],
            targets,
            self.oriented,
        )
    }

    /// Every face that can be glued along the open edge `v-w`, in the order
    /// tried: increasing size, then existing labels before fresh ones.
    pub(crate) fn candidates(&mut self, v: usize, w: usize, targets: &Targets) -> Vec<Vec<usize>> {
        self.candidates_bounded(v, w, targets, usize::MAX)
            .unwrap_or_default()
    }

    /// As `candidates`, but gives up with `None` once more than `limit`
    /// faces are found.
    pub(crate) fn candidates_bounded(
        &mut self,
        v: usize,
        w: usize,
        targets: &Targets,
        limit: usize,
    ) -> Option<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        // The new face runs against the face already on `v-w`.
        let reversed = self.oriented && self.dart[v * self.cap + w] != 0;
        for &p in &targets.sizes {
            let mut face = vec![v, w];
            let mut in_face = vec![false; self.cap];
            in_face[v] = true;
            in_face[w] = true;
            self.fill(
                p as usize,
                &mut face,
                &mut in_face,
                0,
                reversed,
                targets,
                limit,
                &mut out,
            );
            if out.len() > limit {
                return None;
            }
        }
        if reversed {
            for f in &mut out {
                f[1..].reverse();
            }
        }
        Some(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn fill(
        &mut self,
        p: usize,
        face: &mut Vec<usize>,
        in_face: &mut Vec<bool>,
        fresh: usize,
        reversed: bool,
        targets: &Targets,
        limit: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if out.len() > limit {
            return;
        }
        let v = face[0];
        if face.len() == p {
            // Close the cycle back to v.
            let last = face[p - 1];
            if self.edge_count(last, v) >= 2 || !self.dir_free(last, v, reversed) {
                return;
            }
            let size = p as u32;
            let before_last = face[p - 2];
            if !self.feasible(
                last,
                Some(new_corner(size, before_last, v, reversed)),
                targets,
            ) {
                return;
            }
            if !self.feasible(v, Some(new_corner(size, last, face[1], reversed)), targets) {
                return;
            }
            out.push(face.clone());
            return;
        }
        let prev = *face.last().expect("face holds v and w");
        let slot_is_last = face.len() == p - 1;
        let existing = self.next;
        let mut choices: Vec<usize> = (0..existing).filter(|&x| !in_face[x]).collect();
        let fresh_label = existing + fresh;
        if fresh_label < self.cap {
            choices.push(fresh_label);
        } else {
            self.truncated = true;
        }
        for x in choices {
            let is_fresh = x >= existing;
            if !is_fresh {
                if self.is_complete(x)
                    || self.edge_count(prev, x) >= 2
                    || !self.dir_free(prev, x, reversed)
                {
                    continue;
                }
                if !self.intersections_ok(x, prev, v, slot_is_last, in_face) {
                    continue;
                }
                // The neighbor after `x` is not chosen yet: it either closes a
                // gap at an open port of `x` or starts a new edge.
                let ok = if slot_is_last {
                    self.feasible(x, Some(new_corner(p as u32, prev, v, reversed)), targets)
                } else {
                    let ports: Vec<usize> = self
                        .open_ports(x)
                        .filter(|&y| y != prev && !in_face[y])
                        .collect();
                    ports.into_iter().chain([UNKNOWN]).any(|y| {
                        self.feasible(x, Some(new_corner(p as u32, prev, y, reversed)), targets)
                    })
                };
                if !ok {
                    continue;
                }
            }
            // Both neighbors of `prev` inside the new face are now known.
            let before = face[face.len() - 2];
            let extra = new_corner(p as u32, before, x, reversed);
            if !self.feasible(prev, Some(extra), targets) {
                continue;
            }
            face.push(x);
            in_face[x] = true;
            self.fill(
                p,
                face,
                in_face,
                fresh + usize::from(is_fresh),
                reversed,
                targets,
                limit,
                out,
            );
            in_face[x] = false;
            face.pop();
        }
    }

    /// Whether the new face may traverse `a -> b` (listed order) without
    /// repeating a directed edge.
    fn dir_free(&self, a: usize, b: usize, reversed: bool) -> bool {
        if !self.oriented {
            return true;
        }
        let (s, t) = if reversed { (b, a) } else { (a, b) };
        self.dart[s * self.cap + t] == 0
    }

    /// Euler check on the patch with every vertex split into its fans: each
    /// component must be a sphere with holes.
    pub(crate) fn is_planar(&self) -> bool {
        let cap = self.cap;
        let mut split_vertices = 0i64;
        for cs in &self.corners {
            if cs.is_empty() {
                continue;
            }
            let starts = cs.iter().filter(|c| !cs.iter().any(|d| d.b == c.a)).count();
            split_vertices += starts.max(1) as i64;
        }
        let mut parent: Vec<usize> = (0..self.faces.len()).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut darts = 0i64;
        let mut boundary: Vec<(usize, usize)> = Vec::new();
        for (fi, f) in self.faces.iter().enumerate() {
            let n = f.len();
            for k in 0..n {
                let (x, y) = (f[k], f[(k + 1) % n]);
                darts += 1;
                let other = self.dart[y * cap + x] as usize;
                if other == 0 {
                    boundary.push((x, y));
                } else {
                    let other = other - 1;
                    let (r1, r2) = (root(&mut parent, fi), root(&mut parent, other));
                    parent[r1] = r2;
                }
            }
        }
        let edges = (darts + boundary.len() as i64) / 2;
        let faces = self.faces.len() as i64;
        let components = (0..self.faces.len())
            .filter(|&i| root(&mut parent, i) == i)
            .count() as i64;
        // Follow each boundary dart x->y across the fan at y to the next one.
        let index: std::collections::HashMap<(usize, usize), usize> =
            boundary.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut seen = vec![false; boundary.len()];
        let mut holes = 0i64;
        for start in 0..boundary.len() {
            if seen[start] {
                continue;
            }
            holes += 1;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                let (x, y) = boundary[cur];
                let mut port = x;
                let mut guard = 0;
                let next = loop {
                    let Some(c) = self.corners[y].iter().find(|c| c.a == port) else {
                        return false;
                    };
                    if let Some(&j) = index.get(&(y, c.b)) {
                        break j;
                    }
                    port = c.b;
                    guard += 1;
                    if guard > self.corners[y].len() {
                        return false;
                    }
                };
                cur = next;
            }
        }
        split_vertices - edges + faces == 2 * components - holes
    }

    /// Faces through `x` may share with the new face at most `x` plus one
    /// vertex next to `x` in both cycles.
    fn intersections_ok(
        &self,
        x: usize,
        prev: usize,
        v: usize,
        slot_is_last: bool,
        in_face: &[bool],
    ) -> bool {
        for c in &self.corners[x] {
            let f = &self.faces[c.face];
            let mut other = None;
            for &y in f {
                if y != x && in_face[y] {
                    if other.is_some() {
                        return false;
                    }
                    other = Some(y);
                }
            }
            if let Some(y) = other {
                let adjacent_in_new = y == prev || (slot_is_last && y == v);
                if !adjacent_in_new || !(c.a == y || c.b == y) {
                    return false;
                }
            }
        }
        true
    }

    /// Commits a candidate face.
    pub(crate) fn apply(&mut self, face: Vec<usize>) {
        self.push_face(face);
    }

    pub(crate) fn undo(&mut self) {
        self.pop_face();
        self.next = self
            .faces
            .iter()
            .flatten()
            .map(|&x| x + 1)
            .max()
            .unwrap_or(0);
    }
}

struct Fans {
    open: Vec<Vec<u32>>,
    closed: Option<Vec<u32>>,
}

/// Splits the corners at a vertex into open fans and at most one closed
/// wheel. `None` when a closed wheel coexists with other corners.
fn fans(corners: &[Corner], extra: Option<Corner>, oriented: bool) -> Option<Fans> {
    let mut cs: Vec<Corner> = corners.to_vec();
    if let Some(e) = extra {
        cs.push(e);
    }
    if oriented {
        return oriented_fans(&cs);
    }
    let m = cs.len();
    let mut used = vec![false; m];
    let partner =
        |i: usize, port: usize| (0..m).find(|&j| j != i && (cs[j].a == port || cs[j].b == port));
    let mut open = Vec::new();
    for i in 0..m {
        if used[i] {
            continue;
        }
        // Start only at an end corner: one of its ports has no partner.
        let start_port = if partner(i, cs[i].a).is_none() {
            cs[i].a
        } else if partner(i, cs[i].b).is_none() {
            cs[i].b
        } else {
            continue;
        };
        let mut fan = Vec::new();
        let mut cur = i;
        let mut entry = start_port;
        loop {
            used[cur] = true;
            fan.push(cs[cur].size);
            let exit = if cs[cur].a == entry {
                cs[cur].b
            } else {
                cs[cur].a
            };
            match partner(cur, exit) {
                Some(j) if !used[j] => {
                    cur = j;
                    entry = exit;
                }
                _ => break,
            }
        }
        open.push(fan);
    }
    let rest: Vec<usize> = (0..m).filter(|&i| !used[i]).collect();
    if rest.is_empty() {
        return Some(Fans { open, closed: None });
    }
    // Remaining corners form cycles; only a single full wheel is acceptable.
    if !open.is_empty() {
        return None;
    }
    let mut cycle = Vec::new();
    let mut cur = rest[0];
    let mut entry = cs[cur].a;
    loop {
        used[cur] = true;
        cycle.push(cs[cur].size);
        let exit = if cs[cur].a == entry {
            cs[cur].b
        } else {
            cs[cur].a
        };
        match partner(cur, exit) {
            Some(j) if !used[j] => {
                cur = j;
                entry = exit;
            }
            _ => break,
        }
    }
    if cycle.len() != m {
        return None;
    }
    Some(Fans {
        open,
        closed: Some(cycle),
    })
}

/// Fans of coherently oriented corners, each listed along the orientation.
fn oriented_fans(cs: &[Corner]) -> Option<Fans> {
    let m = cs.len();
    let succ = |i: usize| (0..m).find(|&j| j != i && cs[j].a == cs[i].b);
    let has_pred = |i: usize| (0..m).any(|j| j != i && cs[j].b == cs[i].a);
    let mut used = vec![false; m];
    let mut open = Vec::new();
    for i in 0..m {
        if has_pred(i) {
            continue;
        }
        let mut fan = Vec::new();
        let mut cur = Some(i);
        while let Some(c) = cur {
            if used[c] {
                return None;
            }
            used[c] = true;
            fan.push(cs[c].size);
            cur = succ(c);
        }
        open.push(fan);
    }
    if used.iter().all(|&u| u) {
        return Some(Fans { open, closed: None });
    }
    if !open.is_empty() {
        return None;
    }
    let mut cycle = Vec::new();
    let mut cur = 0;
    while !used[cur] {
        used[cur] = true;
        cycle.push(cs[cur].size);
        cur = succ(cur)?;
    }
    if cycle.len() != m {
        return None;
    }
    Some(Fans {
        open,
        closed: Some(cycle),
    })
}

fn new_corner(size: u32, before: usize, after: usize, reversed: bool) -> Corner {
    if reversed {
        Corner {
            face: usize::MAX,
            size,
            a: after,
            b: before,
        }
    } else {
        Corner {
            face: usize::MAX,
            size,
            a: before,
            b: after,
        }
    }
}

fn feasible(
    corners: &[Corner],
    extra: Option<Corner>,
    allowed: u8,
    targets: &Targets,
    oriented: bool,
) -> bool {
    let m = corners.len() + usize::from(extra.is_some());
    if m > targets.max_degree {
        return false;
    }
    let Some(fs) = fans(corners, extra, oriented) else {
        return false;
    };
    if let Some(cycle) = fs.closed {
        let canon = canonical_rotation(&cycle);
        return targets
            .seqs
            .iter()
            .enumerate()
            .any(|(i, t)| allowed & (1 << i) != 0 && *t == canon);
    }
    let mut open = fs.open;
    open.sort_by_key(|f| std::cmp::Reverse(f.len()));
    targets.seqs.iter().enumerate().any(|(i, t)| {
        allowed & (1 << i) != 0 && {
            let need: usize = open.iter().map(|f| f.len() + 1).sum();
            need <= t.len()
                && if oriented {
                    let r: Vec<u32> = t.iter().rev().copied().collect();
                    embed(&open, 0, t, 0, false) || embed(&open, 0, &r, 0, false)
                } else {
                    embed(&open, 0, t, 0, true)
                }
        }
    })
}

/// Places fans `k..` into free cells of the cyclic target `t`, each fan
/// flanked by free cells.
fn embed(fans: &[Vec<u32>], k: usize, t: &[u32], occupied: u64, flip: bool) -> bool {
    if k == fans.len() {
        return true;
    }
    let d = t.len();
    let fan = &fans[k];
    let len = fan.len();
    let cell = |i: usize| 1u64 << (i % d);
    for s in 0..d {
        if occupied & cell(s + d - 1) != 0 || occupied & cell(s + len) != 0 {
            continue;
        }
        for rev in [false, true] {
            let mut mask = 0u64;
            let ok = (0..len).all(|j| {
                let size = if rev { fan[len - 1 - j] } else { fan[j] };
                let c = cell(s + j);
                mask |= c;
                occupied & c == 0 && t[(s + j) % d] == size
            });
            // The flanking cells must stay free of this fan as well.
            if ok
                && mask & cell(s + d - 1) == 0
                && mask & cell(s + len) == 0
                && embed(fans, k + 1, t, occupied | mask, flip)
            {
                return true;
            }
            if len == 1 || !flip {
                break;
            }
        }
    }
    false
}

/// How the next vertex to extend is chosen.
pub(crate) enum Pick<'a> {
    /// Least vertex with an open edge.
    Least,
    /// First vertex of the list with an open edge; finished when none has.
    Targets(&'a dyn Fn(&State) -> Vec<usize>),
}

/// Outcome of a depth-first run.
pub(crate) enum Visit {
    Continue,
    Stop,
}

/// Depth-first search from `state`. `on_complete` is called whenever the
/// picking rule finds nothing left to extend; returning `Visit::Stop` ends the
/// search early.
pub(crate) fn dfs(
    state: &mut State,
    targets: &Targets,
    pick: &Pick<'_>,
    budget: &Budget,
    on_complete: &mut dyn FnMut(&State) -> Visit,
) -> Visit {
    let options = match pick {
        Pick::Least => {
            let choice =
                (0..state.next_label()).find_map(|v| state.least_open_port(v).map(|w| (v, w)));
            let Some((v, w)) = choice else {
                return on_complete(state);
            };
            state.candidates(v, w, targets)
        }
        Pick::Targets(list) => {
            // Fail first over the least open edge of each target.
            let mut best: Option<Vec<Vec<usize>>> = None;
            let open: Vec<(usize, usize)> = list(state)
                .into_iter()
                .filter_map(|v| state.least_open_port(v).map(|w| (v, w)))
                .collect();
            for (v, w) in open {
                let limit = best.as_ref().map_or(usize::MAX, |b| b.len() - 1);
                let Some(c) = state.candidates_bounded(v, w, targets, limit) else {
                    continue;
                };
                if best.as_ref().is_none_or(|b| c.len() < b.len()) {
                    let done = c.len() <= 1;
                    best = Some(c);
                    if done {
                        break;
                    }
                }
            }
            let Some(options) = best else {
                return on_complete(state);
            };
            options
        }
    };
    for face in options {
        if !budget.charge() {
            return Visit::Stop;
        }
        state.apply(face);
        if state.oriented && !state.is_planar() {
            state.undo();
            continue;
        }
        let r = dfs(state, targets, pick, budget, on_complete);
        state.undo();
        if let Visit::Stop = r {
            return Visit::Stop;
        }
    }
    Visit::Continue
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corner(size: u32, a: usize, b: usize) -> Corner {
        Corner {
            face: 0,
            size,
            a,
            b,
        }
    }

    #[test]
    fn seed_wheel_labels_link_in_order() {
        let (faces, n) = seed_faces(&[3, 3, 3, 4, 4]);
        assert_eq!(n, 8);
        assert_eq!(
            faces,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 3],
                vec![0, 3, 4],
                vec![0, 4, 5, 6],
                vec![0, 6, 7, 1]
            ]
        );
    }

    #[test]
    fn fan_embedding() {
        let t = Targets::new(vec![vec![3, 3, 3, 4, 4]]);
        // 4,4 then a separate 3: fits (3,3,[3],4,4 with gaps).
        let cs = [corner(4, 1, 2), corner(4, 2, 3), corner(3, 7, 8)];
        assert!(feasible(&cs, None, 1, &t, false));
        // Three consecutive 4s never fit.
        let cs = [corner(4, 1, 2), corner(4, 2, 3), corner(4, 3, 4)];
        assert!(!feasible(&cs, None, 1, &t, false));
        // 4,3,4 is not a run of 3^3.4^2.
        let cs = [corner(4, 1, 2), corner(3, 2, 3), corner(4, 3, 4)];
        assert!(!feasible(&cs, None, 1, &t, false));
        // Two separate 4-fans need a gap on both sides: 4 _ 4 _ is impossible with 3,3,3 between? No: 3,3,3 sits between them on one side only.
        let cs = [corner(4, 1, 2), corner(4, 5, 6)];
        assert!(!feasible(&cs, None, 1, &t, false));
        // A closed wheel must match exactly.
        let cs = [
            corner(3, 1, 2),
            corner(3, 2, 3),
            corner(3, 3, 4),
            corner(4, 4, 5),
            corner(4, 5, 1),
        ];
        assert!(feasible(&cs, None, 1, &t, false));
        let cs = [
            corner(3, 1, 2),
            corner(3, 2, 3),
            corner(4, 3, 4),
            corner(3, 4, 5),
            corner(4, 5, 1),
        ];
        assert!(!feasible(&cs, None, 1, &t, false));
    }
}
