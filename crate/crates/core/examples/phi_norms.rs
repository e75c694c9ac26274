//! Norms of Φ(π_λ) against [G:H]^{l(λ)-1}, and diagonal double cosets.

use wreath_core::abelian::GroupDescriptor;
use wreath_core::tower::{LambdaTuple, TowerPair};

fn main() -> wreath_core::Result<()> {
    let pair = TowerPair::new(GroupDescriptor::new(vec![4], vec![vec![2]]), 3)?;
    for n in 0..=3 {
        for t in pair.labeled_tuples(n)? {
            let img = pair.phi_of(&t)?;
            let norm = img.pairing(&img);
            let predicted = pair.predicted_norm(&t.lambda);
            let mark = if norm == predicted { "" } else { "  <- differs" };
            println!("{t}: Φ = {img}, norm {norm}, [G:H]^(l-1) = {predicted}{mark}");
        }
        for lambda in LambdaTuple::all(pair.dual().len(), n) {
            println!("  {lambda}: {} diagonal double cosets", pair.count_diagonal_double_cosets(&lambda, &lambda)?);
        }
    }
    Ok(())
}
