//! Twists τ_l, inflation φ*, and the maps Φ_l and Ψ_l for G(4,2,n).

use wreath_core::abelian::GroupDescriptor;
use wreath_core::bialgebra::GradedVector;
use wreath_core::tower::TowerPair;

fn main() -> wreath_core::Result<()> {
    let pair = TowerPair::new(GroupDescriptor::new(vec![4], vec![vec![2]]), 2)?;
    println!("H* = {:?}", pair.dual());
    for l in 0..pair.dual().len() {
        for b in pair.quotient().basis(2)? {
            let x = GradedVector::basis(b);
            let img = pair.phi_l(l, &x)?;
            println!("Φ_{l}({b}) = {img}, Ψ_{l}Φ_{l}({b}) = {}", pair.psi_l(l, &img)?);
        }
    }
    for b in pair.full().basis(2)? {
        let counts: Vec<i64> = (0..pair.dual().len()).map(|l| pair.color_multiplicity(l, b)).collect::<Result<_, _>>()?;
        println!("{b}: multiplicity of l^⊗2 in the restriction to H² = {counts:?}");
    }
    Ok(())
}
