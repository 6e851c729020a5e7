use std::time::Instant;
use symspec::classifier::*;

fn main() {
    let rows = load_bundled().unwrap();
    let mut cache = HitCache::new();

    let t = Instant::now();
    let r = verify_table_rows(&rows, &mut cache).unwrap();
    println!("tables: passed={} checks={} violations={:?} ({:.2?})", r.passed, r.checks.len(), r.violations, t.elapsed());
    for c in r.checks.iter().filter(|c| c.status != "dataset-only") {
        println!("  [{}] {} :: {}", c.status, c.name, c.details);
    }

    let t = Instant::now();
    let r = verify_completeness(&rows, &mut cache).unwrap();
    println!("completeness: passed={} ({:.2?})", r.passed, t.elapsed());
    for v in &r.violations { println!("  VIOLATION {v}"); }

    let t = Instant::now();
    let hits = collect_hits(5..=10, &mut cache).unwrap();
    let r = verify_bounds(&hits);
    println!("bounds: passed={} over {} hits ({:.2?})", r.passed, hits.len(), t.elapsed());
    for v in &r.violations { println!("  VIOLATION {v}"); }

    let t = Instant::now();
    let r = verify_wn_equivalence(12).unwrap();
    println!("lemma33e: passed={} ({:.2?})", r.passed, t.elapsed());
    for v in &r.violations { println!("  VIOLATION {v}"); }

    let t = Instant::now();
    let r = verify_oracles(7, 12).unwrap();
    println!("oracles: passed={} ({:.2?})", r.passed, t.elapsed());
    for v in &r.violations { println!("  VIOLATION {v}"); }

    let t = Instant::now();
    let r = verify_generation(&[5, 7, 8, 9, 10, 11, 12]);
    println!("generation: passed={} ({:.2?})", r.passed, t.elapsed());
}
