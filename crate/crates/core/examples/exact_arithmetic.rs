//! Cyclotomic numbers with exact rational coefficients, and Smith normal form.

use wreath_core::arith::{cyclotomic_polynomial, smith_normal_form, Cyclotomic, Rational};

fn main() {
    println!("Φ_12 = {:?}", cyclotomic_polynomial(12));

    let z = Cyclotomic::root_power(8, 1);
    let sqrt2 = &z + &z.galois(7).unwrap();
    println!("ζ8 + ζ8⁻¹ = {sqrt2}");
    println!("(ζ8 + ζ8⁻¹)² = {}", &sqrt2 * &sqrt2);

    let w = Cyclotomic::root_power(3, 1);
    let half = Cyclotomic::from_rational(3, Rational::new(1.into(), 2.into()));
    let x = &w + &half;
    println!("ω + 1/2 = {x}, |ω + 1/2|² = {}", &x * &x.conj());

    // Values of a character of G_2(Z/4, ⟨2⟩) live in Q(i); moving them to Q(ζ12) is exact.
    let i = Cyclotomic::root_power(4, 1);
    println!("i in Q(ζ12): {}", i.embed(12).unwrap());

    let m = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
    let snf = smith_normal_form(&m);
    println!("Smith form of {m:?}: diagonal {:?}", snf.diagonal());
}
