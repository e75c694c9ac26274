//! The restriction coproduct and its adjointness with the product.

use wreath_core::abelian::GroupDescriptor;
use wreath_core::bialgebra::{GradedVector, TowerContext};

fn main() -> wreath_core::Result<()> {
    let r = TowerContext::new(GroupDescriptor::new(vec![2], vec![vec![1]]), 2)?;
    for z in r.basis(2)? {
        let d = r.coproduct(&GradedVector::basis(z))?;
        println!("m*({z}) = {d}");
        for (parts, c) in d.terms() {
            let prod = r.product(&GradedVector::basis(parts[0]), &GradedVector::basis(parts[1]))?;
            assert_eq!(prod.coeff(z), c);
        }
    }
    println!("⟨xy, z⟩ = ⟨x ⊗ y, m*(z)⟩ holds on the degree-2 basis");
    Ok(())
}
