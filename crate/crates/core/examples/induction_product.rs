//! The induction product on R(G,H) = ⊕ R(G_n(G,H)).

use wreath_core::abelian::GroupDescriptor;
use wreath_core::bialgebra::{Basis, GradedVector, TowerContext};

fn main() -> wreath_core::Result<()> {
    // Symmetric groups: G = H = 1.
    let sym = TowerContext::new(GroupDescriptor::new(vec![], vec![]), 4)?;
    let x = GradedVector::basis(Basis::new(1, 0));
    println!("S: [1:0]² = {}", sym.product(&x, &x)?);
    println!("S: [1:0]⁴ = {}", sym.product_all(&[x.clone(), x.clone(), x.clone(), x])?);

    let r = TowerContext::new(GroupDescriptor::new(vec![4], vec![vec![2]]), 3)?;
    for k in 1..=2 {
        let s = r.structure_constants(k, 3 - k)?;
        println!("G(4,2,·) m_{{{k},{}}}: dims {:?}", 3 - k, s.dims);
        for i in 0..s.dims[0] {
            for j in 0..s.dims[1] {
                println!("  {}·{} -> {:?}", Basis::new(k, i), Basis::new(3 - k, j), s.row(i, j));
            }
        }
    }
    Ok(())
}
