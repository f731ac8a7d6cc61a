//! Runs the critical-vertex prover over the candidate pair types.

use std::time::Instant;

use semimap::{candidate_type_tables, critical_vertex_obstruction, parse_type};

fn main() {
    let radius: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);
    let tables = candidate_type_tables();
    for (set, list) in [("B", &tables.set_b), ("A", &tables.set_a)] {
        for t in list.iter() {
            let ty = parse_type(&t.to_string()).expect("type parses");
            let start = Instant::now();
            let r = critical_vertex_obstruction(&ty, radius).expect("pair type");
            println!("{set}\t{ty}\t{r:?}\t{:.2?}", start.elapsed());
        }
    }
}
