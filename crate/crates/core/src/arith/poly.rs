//! Dense integer polynomials, just enough to build cyclotomic moduli.

/// Coefficients from the constant term upward; no trailing zeros except for the zero polynomial.
pub type IntPoly = Vec<i64>;

fn trim(p: &mut IntPoly) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

/// Exact division by a monic polynomial. Returns `None` if the remainder is nonzero.
pub fn div_exact_monic(num: &[i64], den: &[i64]) -> Option<IntPoly> {
    assert_eq!(*den.last().expect("empty divisor"), 1, "divisor must be monic");
    if num.len() < den.len() {
        return if num.iter().all(|&c| c == 0) { Some(vec![0]) } else { None };
    }
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

/// The `e`-th cyclotomic polynomial, obtained from `x^e - 1` by dividing out the
/// cyclotomic polynomials of all proper divisors of `e`.
pub fn cyclotomic_polynomial(e: u32) -> IntPoly {
    assert!(e >= 1, "cyclotomic polynomial needs e >= 1");
    let e = e as usize;
    let mut p = vec![0i64; e + 1];
    p[0] = -1;
    p[e] = 1;
    for d in 1..e {
        if e.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d as u32);
            p = div_exact_monic(&p, &phi_d).expect("cyclotomic divisor must divide x^e - 1");
        }
    }
    p
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            while n.is_multiple_of(q) {
                n /= q;
            }
            result -= result / q;
        }
        q += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mul(a: &[i64], b: &[i64]) -> IntPoly {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn base_cases() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
    }

    #[test]
    fn twelfth() {
        // x^12 - 1 = Φ1 Φ2 Φ3 Φ4 Φ6 Φ12, with the small factors written out by hand.
        let small = [vec![-1, 1], vec![1, 1], vec![1, 1, 1], vec![1, 0, 1], vec![1, -1, 1]];
        let mut prod = vec![1];
        for f in &small {
            prod = mul(&prod, f);
        }
        let mut x12 = vec![0; 13];
        x12[0] = -1;
        x12[12] = 1;
        let quotient = div_exact_monic(&x12, &prod).unwrap();
        assert_eq!(quotient, vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), quotient);
    }

    #[test]
    fn degree_is_totient() {
        for e in 1..=60u32 {
            assert_eq!(cyclotomic_polynomial(e).len() as u64 - 1, euler_phi(e as u64), "e = {e}");
        }
    }

    #[test]
    fn inexact_division_detected() {
        assert!(div_exact_monic(&[1, 0, 1], &[-1, 1]).is_none());
    }
}
