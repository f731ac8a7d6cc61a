//! Named census of two-sequence maps of curvature zero on at most 12
//! vertices, plus the small single-sequence fixtures used in tests.

mod data;

use std::sync::OnceLock;

use thiserror::Error;

use crate::facetypes::{parse_type, MapType};
use crate::map::{Map, Surface};

/// A named map with its declared type and surface.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub map_type: MapType,
    pub surface: Surface,
    pub map: Map,
    /// Where the face list was read from.
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog name `{name}`{}", suggestion_text(.suggestion))]
    UnknownName {
        name: String,
        suggestion: Option<String>,
    },
}

fn suggestion_text(s: &Option<String>) -> String {
    match s {
        Some(s) => format!(" (did you mean {s}?)"),
        None => String::new(),
    }
}

/// All entries, in series order (A1(K), A2(T), ..., F9(T)).
pub fn catalog_entries() -> &'static [CatalogEntry] {
    static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| {
        data::RAW
            .iter()
            .map(|raw| {
                let faces = raw.faces.iter().map(|f| f.to_vec()).collect();
                let map = Map::new(raw.n_vertices, faces).expect("catalog face lists are valid maps");
                let map_type = parse_type(raw.map_type).expect("catalog types parse");
                let source = format!(
                    "vertex links from the classification of type {map_type} on at most 12 vertices, \
                     checked against the drawn example"
                );
                CatalogEntry { name: raw.name, map_type, surface: raw.surface, map, source }
            })
            .collect()
    })
}

/// Entries whose type equals `ty`.
pub fn entries_of_type(ty: &MapType) -> Vec<&'static CatalogEntry> {
    catalog_entries()
        .iter()
        .filter(|e| e.map_type == *ty)
        .collect()
}

fn normalize(name: &str) -> String {
    name.chars()
        .filter(|c| !c.is_whitespace())
        .flat_map(char::to_uppercase)
        .collect()
}

fn stem(name: &str) -> &str {
    name.split('(').next().unwrap_or(name)
}

/// Finds an entry by name. Case is ignored and the `(T)`/`(K)` suffix may be
/// dropped.
pub fn lookup(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    let key = normalize(name);
    let entries = catalog_entries();
    if let Some(e) = entries.iter().find(|e| normalize(e.name) == key) {
        return Ok(e);
    }
    let by_stem: Vec<_> = entries.iter().filter(|e| stem(e.name) == key).collect();
    if let [e] = by_stem.as_slice() {
        return Ok(e);
    }
    let suggestion = entries
        .iter()
        .map(|e| {
            (
                strsim::levenshtein(&key, &normalize(e.name))
                    .min(strsim::levenshtein(&key, stem(e.name))),
                e.name,
            )
        })
        .min()
        .map(|(_, n)| n.to_string());
    Err(CatalogError::UnknownName {
        name: name.to_string(),
        suggestion,
    })
}

/// Small single-sequence maps used as test fixtures.
pub mod fixtures {
    use crate::map::Map;

    /// The seven-vertex triangulation of the torus, type [3^6].
    pub fn t7() -> Map {
        let mut faces = Vec::new();
        for i in 0..7 {
            faces.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
            faces.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
        }
        Map::new(7, faces).expect("T7 is a valid map")
    }

    /// The 3x3 square grid on the torus, type [4^4].
    pub fn square_torus() -> Map {
        let at = |r: usize, c: usize| 3 * (r % 3) + c % 3;
        let mut faces = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                faces.push(vec![at(r, c), at(r, c + 1), at(r + 1, c + 1), at(r + 1, c)]);
            }
        }
        Map::new(9, faces).expect("the 3x3 grid is a valid map")
    }

    /// Boundary of the tetrahedron.
    pub fn tetrahedron() -> Map {
        Map::new(
            4,
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        )
        .expect("valid map")
    }
}
