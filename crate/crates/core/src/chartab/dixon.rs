//! Dixon–Schneider: irreducible characters from class-multiplication matrices
//! over F_p, lifted to cyclotomic values through power maps.

use num_integer::Roots;

use super::{CharacterTable, ClassFunction, ClassGeometry};
use crate::arith::modp::{inv_mod, mul_mod, pow_mod, primitive_root, working_prime};
use crate::arith::{simultaneous_eigenbasis, Cyclotomic, PrimeFieldMatrix};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupLaw};

/// Everything the algorithm needs to know about a group.
#[derive(Debug, Clone)]
pub struct ClassStructure {
    pub order: u64,
    pub sizes: Vec<u64>,
    pub inverse_class: Vec<usize>,
    pub exponent: u64,
    /// power_map[c][j] = class of g^j, j in 0..exponent.
    pub power_map: Vec<Vec<usize>>,
    /// a[(i·r + j)·r + k] = #{x ∈ Cᵢ : x⁻¹ g_k ∈ Cⱼ}.
    pub coefficients: Vec<u64>,
}

impl ClassStructure {
    pub fn from_group<L: GroupLaw>(g: &FiniteGroup<L>) -> Self {
        let cd = g.classes();
        ClassStructure {
            order: cd.order,
            sizes: cd.sizes.clone(),
            inverse_class: cd.inverse_class.clone(),
            exponent: cd.exponent,
            power_map: cd.power_map.clone(),
            coefficients: g.class_coefficients(),
        }
    }

    pub fn class_count(&self) -> usize {
        self.sizes.len()
    }

    /// The working prime: smallest p ≡ 1 (mod exponent) with p > 2⌈√|Γ|⌉.
    pub fn working_prime(&self) -> u64 {
        let root = self.order.sqrt();
        let ceil = if root * root == self.order { root } else { root + 1 };
        working_prime(self.exponent, 2 * ceil)
    }

    pub fn class_matrix(&self, i: usize, p: u64) -> PrimeFieldMatrix {
        let r = self.class_count();
        let data = self.coefficients[i * r * r..(i + 1) * r * r].to_vec();
        PrimeFieldMatrix::new(p, r, r, data).expect("square class matrix")
    }
}

/// Computes the exact character table, verifying row orthogonality before returning.
pub fn character_table(cs: &ClassStructure) -> Result<CharacterTable> {
    let r = cs.class_count();
    let n = cs.order;
    let e = cs.exponent;
    let p = cs.working_prime();
    if p >= 1 << 32 {
        return Err(Error::Internal(format!("working prime {p} too large")));
    }
    let z = pow_mod(primitive_root(p), (p - 1) / e, p);

    let mats: Vec<PrimeFieldMatrix> = (1..r).map(|i| cs.class_matrix(i, p)).collect();
    let vectors = if r == 1 { vec![vec![1]] } else { simultaneous_eigenbasis(&mats)? };
    if vectors.len() != r {
        return Err(Error::Internal(format!("found {} characters for {r} classes", vectors.len())));
    }

    let size_inv: Vec<u64> = cs.sizes.iter().map(|&h| inv_mod(h % p, p)).collect();
    let max_degree = n.sqrt();
    let e_inv = inv_mod(e % p, p);
    let mut rows = Vec::with_capacity(r);
    for w in vectors {
        if w[0] == 0 {
            return Err(Error::Internal("eigenvector vanishes at the identity class".into()));
        }
        let scale = inv_mod(w[0], p);
        let omega: Vec<u64> = w.iter().map(|&x| mul_mod(x, scale, p)).collect();
        // χ(1)² · Σ_k ω_k ω_{k*} / h_k = |Γ|
        let s = (0..r).fold(0u64, |acc, k| {
            let t = mul_mod(mul_mod(omega[k], omega[cs.inverse_class[k]], p), size_inv[k], p);
            (acc + t) % p
        });
        if s == 0 {
            return Err(Error::Internal("degenerate norm while recovering a degree".into()));
        }
        let d2 = mul_mod(n % p, inv_mod(s, p), p);
        let degree = (1..=max_degree)
            .find(|&d| (d * d) % p == d2)
            .ok_or_else(|| Error::Internal("no degree lifts the squared-degree residue".into()))?;
        let modular: Vec<u64> = (0..r).map(|k| mul_mod(mul_mod(omega[k], degree % p, p), size_inv[k], p)).collect();

        let mut values = Vec::with_capacity(r);
        for k in 0..r {
            // multiplicity of ζ^t among the eigenvalues of g_k
            let mut mult = vec![0i64; e as usize];
            for (t, slot) in mult.iter_mut().enumerate() {
                let mut acc = 0u64;
                for j in 0..e {
                    let root = pow_mod(z, (e - (j * t as u64) % e) % e, p);
                    acc = (acc + mul_mod(modular[cs.power_map[k][j as usize]], root, p)) % p;
                }
                let m = mul_mod(acc, e_inv, p);
                if m > degree {
                    return Err(Error::Internal(format!("eigenvalue multiplicity {m} exceeds degree {degree}")));
                }
                *slot = m as i64;
            }
            values.push(Cyclotomic::from_root_multiplicities(e as u32, &mult));
        }
        rows.push(ClassFunction::new(values));
    }

    let geometry = ClassGeometry { order: n, sizes: cs.sizes.clone() };
    let table = CharacterTable::from_rows(geometry, e as u32, rows)?;
    if let Some(w) = table.orthogonality_failure() {
        return Err(Error::Internal(format!("row orthogonality fails at {w:?}")));
    }
    Ok(table)
}
