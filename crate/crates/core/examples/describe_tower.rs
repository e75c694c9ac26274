//! Orders and class counts along a tower G_n(G,H), and the block embedding.

use wreath_core::abelian::{AbelianElement, GroupDescriptor};
use wreath_core::wreath::{block_embed, RestrictedWreathGroup};

fn main() -> wreath_core::Result<()> {
    // G(4,2,n): G = Z/4, H = ⟨2⟩.
    let (g, h) = GroupDescriptor::new(vec![4], vec![vec![2]]).build()?;
    println!("G = {g}, H = {}, [G:H] = {}", h.structure(), h.index());
    for n in 1..=3 {
        let gn = RestrictedWreathGroup::new(&h, n, 1_000)?;
        println!(
            "G(4,2,{n}): order {} (formula {}), {} classes",
            gn.order(),
            RestrictedWreathGroup::order_formula(&h, n),
            gn.class_count()
        );
    }

    let g1 = RestrictedWreathGroup::new(&h, 1, 1_000)?;
    let g2 = RestrictedWreathGroup::new(&h, 2, 1_000)?;
    let a = g1.element(&[AbelianElement(vec![2])], &[0])?;
    let b = g1.element(&[AbelianElement(vec![0])], &[0])?;
    let e = block_embed(&[&a, &b], &[1, 1])?;
    println!("{} ⊕ {} = {} in G_2, class {:?}", a.word(), b.word(), e.word(), g2.class_of(&e));
    Ok(())
}
