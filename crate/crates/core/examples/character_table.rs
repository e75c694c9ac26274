//! Exact character table of G(4,2,2) by the Dixon-Schneider method.

use wreath_core::abelian::GroupDescriptor;
use wreath_core::chartab::{character_table, ClassStructure};
use wreath_core::wreath::RestrictedWreathGroup;

fn main() -> wreath_core::Result<()> {
    let (_, h) = GroupDescriptor::new(vec![4], vec![vec![2]]).build()?;
    let g = RestrictedWreathGroup::new(&h, 2, 1_000)?;
    let classes = ClassStructure::from_group(g.group());
    println!("working prime {} for exponent {}", classes.working_prime(), classes.exponent);

    let table = character_table(&classes)?;
    for c in 0..g.class_count() {
        println!("class {c}: {} (size {})", g.group().representative(c).word(), table.geometry().sizes[c]);
    }
    for (i, chi) in table.irreducibles().iter().enumerate() {
        let row: Vec<String> = chi.values().iter().map(ToString::to_string).collect();
        println!("χ{i}: {}", row.join(" | "));
    }
    let sum: u64 = table.degrees().iter().map(|d| d * d).sum();
    println!("Σ deg² = {sum} = |G|, orthogonality failure: {:?}", table.orthogonality_failure());
    Ok(())
}
