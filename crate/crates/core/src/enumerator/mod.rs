//! Exhaustive generation of two-sequence maps and a bounded local
//! non-existence prover.

mod search;

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::facetypes::{FaceSequence, MapType};
use crate::isomorphism::{canonical_form, CanonicalCertificate};
use crate::map::Map;
use search::{dfs, seed_faces, Budget, Pick, State, Targets, Visit};

/// Default node budget for both search entry points.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest label count the obstruction prover will use before giving up.
pub const DEFAULT_LABEL_CAP: usize = 160;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("type {0} has a face-sequence of nonzero curvature")]
    NonZeroCurvatureType(String),
    #[error("expected a type with exactly two face-sequences, got {k}")]
    NotAPairType { k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    /// The whole tree was explored and at least one map was found.
    Complete,
    /// The whole tree was explored and no map exists within the bound.
    Obstructed,
    /// The node budget ran out; the map list may be incomplete.
    BudgetExceeded,
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    /// One map per isomorphism class, sorted by certificate.
    pub maps: Vec<Map>,
    /// Certificates of `maps`, in the same order.
    pub certificates: Vec<CanonicalCertificate>,
    /// Faces placed during the search.
    pub nodes: u64,
    pub status: SearchStatus,
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub budget: u64,
    /// Worker threads; 0 uses the rayon default.
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> SearchOptions {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            workers: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstruction {
    Obstructed,
    Unknown,
}

#[derive(Debug, Clone, Copy)]
pub struct ObstructionOptions {
    pub budget: u64,
    pub label_cap: usize,
}

impl Default for ObstructionOptions {
    fn default() -> ObstructionOptions {
        ObstructionOptions {
            budget: DEFAULT_BUDGET,
            label_cap: DEFAULT_LABEL_CAP,
        }
    }
}

fn check_pair(ty: &MapType) -> Result<[FaceSequence; 2], EnumerateError> {
    if ty.k() != 2 {
        return Err(EnumerateError::NotAPairType { k: ty.k() });
    }
    if !ty.is_flat() {
        return Err(EnumerateError::NonZeroCurvatureType(ty.to_string()));
    }
    Ok([ty.sequences()[0].clone(), ty.sequences()[1].clone()])
}

fn targets_of(pair: &[FaceSequence; 2]) -> Targets {
    Targets::new(pair.iter().map(|s| s.sizes().to_vec()).collect())
}

/// All maps on at most `n_max` vertices whose distinct face-sequences are
/// exactly the two of `ty`, one per isomorphism class.
pub fn enumerate_maps(ty: &MapType, n_max: usize) -> Result<SearchReport, EnumerateError> {
    enumerate_maps_with(ty, n_max, &SearchOptions::default())
}

pub fn enumerate_maps_with(
    ty: &MapType,
    n_max: usize,
    opts: &SearchOptions,
) -> Result<SearchReport, EnumerateError> {
    let pair = check_pair(ty)?;
    let targets = targets_of(&pair);
    // Every map has a vertex of each sequence; seed with the larger wheel.
    let seed = if pair[1].link_length() > pair[0].link_length() {
        1
    } else {
        0
    };
    let budget = Budget::new(opts.budget);
    let found = if pair[seed].link_length() + 1 > n_max {
        BTreeMap::new()
    } else {
        let mut base = State::new(n_max, targets.all_mask());
        for f in seed_faces(pair[seed].sizes()).0 {
            base.push_face(f);
        }
        base.restrict(0, 1 << seed);
        let run = || grow(&base, &targets, ty, &budget);
        if opts.workers == 0 {
            run()
        } else {
            match rayon::ThreadPoolBuilder::new()
                .num_threads(opts.workers)
                .build()
            {
                Ok(pool) => pool.install(run),
                Err(_) => run(),
            }
        }
    };
    let status = if budget.exceeded() {
        SearchStatus::BudgetExceeded
    } else if found.is_empty() {
        SearchStatus::Obstructed
    } else {
        SearchStatus::Complete
    };
    let (certificates, maps) = found.into_iter().unzip();
    Ok(SearchReport {
        maps,
        certificates,
        nodes: budget.used(),
        status,
    })
}

/// Expands the first levels sequentially, then searches the subtrees in
/// parallel and merges by certificate.
fn grow(
    base: &State,
    targets: &Targets,
    ty: &MapType,
    budget: &Budget,
) -> BTreeMap<CanonicalCertificate, Map> {
    const SPLIT_DEPTH: usize = 2;
    let mut frontier: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for _ in 0..SPLIT_DEPTH {
        let mut next = Vec::new();
        for path in frontier {
            let mut st = replay(base, &path);
            let choice = (0..st.next_label()).find_map(|v| st.least_open_port(v).map(|w| (v, w)));
            match choice {
                None => next.push(path),
                Some((v, w)) => {
                    for face in st.candidates(v, w, targets) {
                        if !budget.charge() {
                            break;
                        }
                        let mut p = path.clone();
                        p.push(face);
                        next.push(p);
                    }
                }
            }
        }
        frontier = next;
    }
    let parts: Vec<Vec<(CanonicalCertificate, Map)>> = frontier
        .par_iter()
        .map(|path| {
            let mut st = replay(base, path);
            let mut out = Vec::new();
            let mut on_complete = |s: &State| {
                if let Some(m) = accept(s, targets, ty) {
                    out.push((canonical_form(&m), m));
                }
                Visit::Continue
            };
            dfs(&mut st, targets, &Pick::Least, budget, &mut on_complete);
            out
        })
        .collect();
    parts.into_iter().flatten().collect()
}

fn replay(base: &State, path: &[Vec<usize>]) -> State {
    let mut st = base.clone();
    for f in path {
        st.apply(f.clone());
    }
    st
}

fn accept(s: &State, targets: &Targets, ty: &MapType) -> Option<Map> {
    let mut seen = [false; 2];
    for v in 0..s.next_label() {
        let w = s.wheel_sequence(v);
        let i = targets.seqs.iter().position(|t| *t == w)?;
        seen[i] = true;
    }
    if !(seen[0] && seen[1]) {
        return None;
    }
    let m = Map::new(s.next_label(), s.faces().to_vec()).ok()?;
    (m.map_type() == *ty).then_some(m)
}

/// Tries to rule out every map of type `ty`, whatever its size, by showing
/// that the neighborhood of a vertex whose link holds a vertex of the other
/// sequence cannot be completed out to `radius`.
pub fn critical_vertex_obstruction(
    ty: &MapType,
    radius: usize,
) -> Result<Obstruction, EnumerateError> {
    critical_vertex_obstruction_with(ty, radius, &ObstructionOptions::default())
}

pub fn critical_vertex_obstruction_with(
    ty: &MapType,
    radius: usize,
    opts: &ObstructionOptions,
) -> Result<Obstruction, EnumerateError> {
    let pair = check_pair(ty)?;
    let targets = targets_of(&pair);
    let budget = Budget::new(opts.budget);
    let radius = radius.max(1);
    // Either side suffices: any map has an edge joining the two classes, so
    // both kinds of critical vertex exist.
    for side in 0..2 {
        if side_obstructed(&pair, &targets, side, radius, opts.label_cap, &budget) {
            return Ok(Obstruction::Obstructed);
        }
    }
    Ok(Obstruction::Unknown)
}

fn side_obstructed(
    pair: &[FaceSequence; 2],
    targets: &Targets,
    side: usize,
    radius: usize,
    cap: usize,
    budget: &Budget,
) -> bool {
    let (faces, n) = seed_faces(pair[side].sizes());
    if n > cap {
        return false;
    }
    let other = 1 - side;
    for u in 1..n {
        let mut st = State::new_oriented(cap, targets.all_mask());
        for f in &faces {
            st.push_face(f.clone());
        }
        st.restrict(0, 1 << side);
        st.restrict(u, 1 << other);
        let order = move |s: &State| neighborhood(s, u, radius);
        let mut completed = false;
        let mut on_complete = |_: &State| {
            completed = true;
            Visit::Stop
        };
        dfs(
            &mut st,
            targets,
            &Pick::Targets(&order),
            budget,
            &mut on_complete,
        );
        if completed || budget.exceeded() || st.truncated {
            return false;
        }
    }
    true
}

/// Vertices whose wheels must close: the critical neighbor first, then every
/// vertex within `radius - 1` link steps of the seed.
fn neighborhood(s: &State, u: usize, radius: usize) -> Vec<usize> {
    let mut layer = vec![0];
    let mut all = vec![0];
    for _ in 1..radius {
        let mut next = Vec::new();
        for &x in &layer {
            if s.is_complete(x) {
                next.extend(s.link_vertices(x));
            }
        }
        next.sort_unstable();
        next.dedup();
        next.retain(|x| !all.contains(x));
        all.extend(&next);
        layer = next;
    }
    all.sort_unstable();
    all.retain(|&x| x != u);
    let mut order = vec![u];
    order.extend(all);
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facetypes::parse_type;

    #[test]
    fn rejects_bad_types() {
        let t = parse_type("3^6").unwrap();
        assert_eq!(
            enumerate_maps(&t, 12).unwrap_err(),
            EnumerateError::NotAPairType { k: 1 }
        );
        let t = parse_type("3^6:3^7").unwrap();
        assert!(matches!(
            enumerate_maps(&t, 12),
            Err(EnumerateError::NonZeroCurvatureType(_))
        ));
    }

    #[test]
    fn small_census() {
        let t = parse_type("[3^6:3^4.6]").unwrap();
        let r = enumerate_maps(&t, 12).unwrap();
        assert_eq!(r.status, SearchStatus::Complete);
        assert_eq!(r.maps.len(), 3);
    }

    #[test]
    fn tiny_bound_finds_nothing() {
        let t = parse_type("[3^6:3^4.6]").unwrap();
        let r = enumerate_maps(&t, 5).unwrap();
        assert_eq!(r.status, SearchStatus::Obstructed);
        assert!(r.maps.is_empty());
    }

    #[test]
    fn budget_is_reported() {
        let t = parse_type("[3^6:3^3.4^2]").unwrap();
        let r = enumerate_maps_with(
            &t,
            12,
            &SearchOptions {
                budget: 10,
                workers: 1,
            },
        )
        .unwrap();
        assert_eq!(r.status, SearchStatus::BudgetExceeded);
    }
}
