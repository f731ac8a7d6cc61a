//! Runs the bounded census for every candidate pair type and prints counts.

use std::time::Instant;

use semimap::{candidate_type_tables, enumerate_maps, parse_type, Surface};

fn main() {
    let n_max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(12);
    let tables = candidate_type_tables();
    let extra = std::env::args().skip(2).collect::<Vec<_>>();
    let types: Vec<String> = if extra.is_empty() {
        tables
            .set_b
            .iter()
            .chain(tables.set_a.iter())
            .map(|t| t.to_string())
            .collect()
    } else {
        extra
    };
    for t in types {
        let ty = parse_type(&t).expect("type parses");
        let start = Instant::now();
        let r = enumerate_maps(&ty, n_max).expect("pair type");
        let torus = r
            .maps
            .iter()
            .filter(|m| m.surface() == Surface::Torus)
            .count();
        println!(
            "{ty}\t{}\ttorus={torus}\tklein={}\tnodes={}\t{:?}\t{:.2?}",
            r.maps.len(),
            r.maps.len() - torus,
            r.nodes,
            r.status,
            start.elapsed()
        );
    }
}
