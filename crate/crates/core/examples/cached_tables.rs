//! Persisting character tables and structure constants between runs.

use std::sync::Arc;

use wreath_core::abelian::GroupDescriptor;
use wreath_core::bialgebra::{Basis, GradedVector, TowerContext};
use wreath_core::cache::Cache;

fn main() -> wreath_core::Result<()> {
    let dir = std::env::temp_dir().join("wreath-example-cache");
    let descriptor = GroupDescriptor::new(vec![4], vec![vec![2]]);
    for run in 0..2 {
        let cache = Arc::new(Cache::new(&dir)?);
        let r = TowerContext::new(descriptor.clone(), 2)?.with_cache(cache.clone());
        let x = GradedVector::basis(Basis::new(1, 0));
        let p = r.product(&x, &x)?;
        println!("run {run}: [1:0]² = {p}; cache hits {}, misses {}", cache.hits(), cache.misses());
    }
    println!("entries under {}", dir.display());
    Ok(())
}
