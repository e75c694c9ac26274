//! Runs the whole verification suite and prints the JSON report summary.
//!
//! `cargo run --example full_verification -- 2,2 1,1 2`

use wreath_core::abelian::GroupDescriptor;
use wreath_core::tower::{full_verification, TowerPair, VerifyOptions};

fn parse(s: &str) -> Vec<u32> {
    s.split(',').filter(|x| !x.is_empty()).map(|x| x.parse().expect("integer")).collect()
}

fn main() -> wreath_core::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let factors = args.first().map_or(vec![2, 2], |s| parse(s));
    let gens = args.get(1).map_or(vec![vec![1, 1]], |s| s.split(';').map(parse).collect());
    let n_max = args.get(2).map_or(2, |s| s.parse().expect("n_max"));

    let pair = TowerPair::new(GroupDescriptor::new(factors, gens), n_max)?;
    let report = full_verification(&pair, VerifyOptions::default())?;
    for c in &report.checks {
        println!("{} {} ({} cases)", if c.passed { "pass" } else { "FAIL" }, c.id, c.cases);
    }
    println!("norms: {:?}, passed: {}", report.phi_norms, report.passed);
    Ok(())
}
