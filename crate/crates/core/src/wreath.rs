//! The restricted wreath products G_n(G, H): monomial n×n matrices with entries
//! in an abelian group G whose entries sum into a subgroup H.

use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use crate::abelian::{AbelianElement, AbelianSubgroup, AdditionTable, FiniteAbelianGroup, QuotientMap};
use crate::error::{usage, Error, Result};
use crate::group::{FiniteGroup, GroupLaw};

/// Default cap on n!·|G|ⁿ for exhaustive enumeration.
pub const DEFAULT_BUDGET: u128 = 100_000;

/// (colors v, permutation σ); the matrix D(v)·P(σ) with P(σ)e_j = e_{σ(j)}.
///
/// Colors are mixed-radix indices into the coefficient group. The derived order
/// compares the permutation in one-line notation first, then the colors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    perm: Vec<u8>,
    colors: Vec<u16>,
}

impl WreathElement {
    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    /// One-line notation, 0-based: σ(i) = perm[i].
    pub fn permutation(&self) -> &[u8] {
        &self.perm
    }

    pub fn color_indices(&self) -> &[u16] {
        &self.colors
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    /// Compact text form `[perm|colors]` used in reports and caches.
    pub fn word(&self) -> String {
        format!("[{}|{}]", self.perm.iter().join(","), self.colors.iter().join(","))
    }
}

impl fmt::Debug for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

/// Multiplication in S_n[G] = S_n ⋉ Gⁿ:
/// (v,σ)(w,τ) = (v + σ·w, στ) with (σ·w)ᵢ = w_{σ⁻¹(i)}.
#[derive(Clone)]
pub struct WreathLaw {
    coefficients: FiniteAbelianGroup,
    table: Arc<AdditionTable>,
    n: usize,
}

impl WreathLaw {
    pub fn new(coefficients: &FiniteAbelianGroup, n: usize) -> Self {
        WreathLaw { coefficients: coefficients.clone(), table: Arc::new(AdditionTable::new(coefficients)), n }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &FiniteAbelianGroup {
        &self.coefficients
    }

    /// Σᵢ vᵢ as an index into G.
    pub fn color_sum(&self, a: &WreathElement) -> u16 {
        a.colors.iter().fold(0, |acc, &c| self.table.add(acc, c))
    }

    pub fn make(&self, colors: &[AbelianElement], perm: &[u8]) -> Result<WreathElement> {
        if colors.len() != self.n || perm.len() != self.n {
            return Err(usage(format!("expected degree {}, got {} colors and {} points", self.n, colors.len(), perm.len())));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p as usize >= self.n || std::mem::replace(&mut seen[p as usize], true) {
                return Err(usage(format!("{perm:?} is not a permutation")));
            }
        }
        for c in colors {
            self.coefficients.check(c)?;
        }
        Ok(WreathElement { perm: perm.to_vec(), colors: colors.iter().map(|c| self.coefficients.index_of(c) as u16).collect() })
    }

    pub fn colors(&self, a: &WreathElement) -> Vec<AbelianElement> {
        a.colors.iter().map(|&c| self.coefficients.element(c as usize)).collect()
    }

    pub fn checked_mul(&self, a: &WreathElement, b: &WreathElement) -> Result<WreathElement> {
        if a.degree() != self.n || b.degree() != self.n {
            return Err(usage(format!("degree mismatch: {} and {} in degree {}", a.degree(), b.degree(), self.n)));
        }
        Ok(self.mul(a, b))
    }
}

impl GroupLaw for WreathLaw {
    type Elem = WreathElement;

    fn identity(&self) -> WreathElement {
        WreathElement { perm: (0..self.n as u8).collect(), colors: vec![0; self.n] }
    }

    fn mul(&self, a: &WreathElement, b: &WreathElement) -> WreathElement {
        let n = a.perm.len();
        let mut colors = a.colors.clone();
        // (σ·w)_{σ(j)} = w_j
        for j in 0..n {
            let i = a.perm[j] as usize;
            colors[i] = self.table.add(colors[i], b.colors[j]);
        }
        let perm = b.perm.iter().map(|&t| a.perm[t as usize]).collect();
        WreathElement { perm, colors }
    }

    fn inv(&self, a: &WreathElement) -> WreathElement {
        let n = a.perm.len();
        let mut perm = vec![0u8; n];
        let mut colors = vec![0u16; n];
        for (j, &p) in a.perm.iter().enumerate() {
            let i = p as usize;
            perm[i] = j as u8;
            // (−σ⁻¹·v)_j = −v_{σ(j)}
            colors[j] = self.table.neg(a.colors[i]);
        }
        WreathElement { perm, colors }
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Elements of G_n(G,H) in sorted order, each exactly once. Fails if n!·|G|ⁿ exceeds `budget`.
pub fn enumerate(law: &WreathLaw, h: &AbelianSubgroup, budget: u128) -> Result<Vec<WreathElement>> {
    let n = law.n;
    let g = &law.coefficients;
    let full = factorial(n).saturating_mul((g.order() as u128).saturating_pow(n as u32));
    if full > budget {
        return Err(Error::Resource { what: format!("enumerating S_{n}[{g}]"), needed: full, bound: budget });
    }
    let colorings: Vec<Vec<u16>> = (0..n)
        .map(|_| 0..g.order() as u16)
        .multi_cartesian_product()
        .filter(|v| h.contains_index(v.iter().fold(0, |acc, &c| law.table.add(acc, c)) as usize))
        .collect();
    let colorings = if n == 0 { vec![Vec::new()] } else { colorings };
    let mut out = Vec::with_capacity(colorings.len() * factorial(n) as usize);
    for perm in (0..n as u8).permutations(n) {
        for c in &colorings {
            out.push(WreathElement { perm: perm.clone(), colors: c.clone() });
        }
    }
    Ok(out)
}

/// G_n(G, H) with its enumerated elements, conjugacy classes and power maps.
pub struct RestrictedWreathGroup {
    subgroup: AbelianSubgroup,
    group: FiniteGroup<WreathLaw>,
}

impl RestrictedWreathGroup {
    pub fn new(h: &AbelianSubgroup, n: usize, budget: u128) -> Result<Self> {
        if n > u8::MAX as usize {
            return Err(usage("degree too large"));
        }
        let law = WreathLaw::new(h.ambient(), n);
        let elements = enumerate(&law, h, budget)?;
        let group = FiniteGroup::from_elements(law, elements)?;
        Ok(RestrictedWreathGroup { subgroup: h.clone(), group })
    }

    pub fn degree(&self) -> usize {
        self.group.law().n
    }

    pub fn coefficients(&self) -> &FiniteAbelianGroup {
        self.subgroup.ambient()
    }

    pub fn subgroup(&self) -> &AbelianSubgroup {
        &self.subgroup
    }

    pub fn law(&self) -> &WreathLaw {
        self.group.law()
    }

    pub fn group(&self) -> &FiniteGroup<WreathLaw> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// n!·|G|ⁿ/[G:H] for n ≥ 1; G_0 is trivial.
    pub fn order_formula(h: &AbelianSubgroup, n: usize) -> u128 {
        if n == 0 {
            return 1;
        }
        factorial(n) * (h.ambient().order() as u128).pow(n as u32) / h.index() as u128
    }

    /// Element of G_n(G,H); fails if the colors do not sum into H.
    pub fn element(&self, colors: &[AbelianElement], perm: &[u8]) -> Result<WreathElement> {
        let e = self.law().make(colors, perm)?;
        if !self.subgroup.contains_index(self.law().color_sum(&e) as usize) {
            return Err(usage(format!("colors of {e:?} do not sum into H")));
        }
        Ok(e)
    }

    pub fn mul(&self, a: &WreathElement, b: &WreathElement) -> Result<WreathElement> {
        self.law().checked_mul(a, b)
    }

    pub fn inv(&self, a: &WreathElement) -> WreathElement {
        self.law().inv(a)
    }

    pub fn sum(&self, a: &WreathElement) -> AbelianElement {
        self.coefficients().element(self.law().color_sum(a) as usize)
    }

    pub fn class_count(&self) -> usize {
        self.group.classes().count()
    }

    pub fn class_of(&self, a: &WreathElement) -> Option<usize> {
        self.group.class_of(a)
    }

    pub fn power_map(&self, class: usize, j: i64) -> usize {
        self.group.power_map(class, j)
    }

    pub fn exponent(&self) -> u32 {
        self.group.classes().exponent as u32
    }
}

/// Reduces colors mod H: G_n(G,H) → G_n(G/H, 1).
pub fn reduce_mod_h(q: &QuotientMap, a: &WreathElement) -> WreathElement {
    WreathElement { perm: a.perm.clone(), colors: a.colors.iter().map(|&c| q.apply_index(c as usize) as u16).collect() }
}

/// Block-diagonal embedding G_{k₁} × … × G_{k_r} → G_{k₁+…+k_r}.
pub fn block_embed(parts: &[&WreathElement], composition: &[usize]) -> Result<WreathElement> {
    if parts.len() != composition.len() || parts.iter().zip(composition).any(|(p, &k)| p.degree() != k) {
        return Err(usage(format!(
            "parts of degrees {:?} do not match composition {composition:?}",
            parts.iter().map(|p| p.degree()).collect::<Vec<_>>()
        )));
    }
    let mut perm = Vec::new();
    let mut colors = Vec::new();
    let mut offset = 0u8;
    for p in parts {
        perm.extend(p.perm.iter().map(|&x| x + offset));
        colors.extend_from_slice(&p.colors);
        offset += p.degree() as u8;
    }
    Ok(WreathElement { perm, colors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::GroupDescriptor;
    use rand::prelude::*;

    fn tower(f: Vec<u32>, gens: Vec<Vec<u32>>) -> AbelianSubgroup {
        GroupDescriptor::new(f, gens).build().unwrap().1
    }

    fn ae(v: u32) -> AbelianElement {
        AbelianElement(vec![v])
    }

    #[test]
    fn hyperoctahedral_product_by_hand() {
        // ((0,0), swap)·((1,0), id) in S₂[Z/2]: with matrices
        // P(swap) · diag(-1, 1) = [[0,1],[-1,0]] = diag(1,-1)·P(swap)
        let h = tower(vec![2], vec![vec![1]]);
        let w = RestrictedWreathGroup::new(&h, 2, DEFAULT_BUDGET).unwrap();
        let a = w.element(&[ae(0), ae(0)], &[1, 0]).unwrap();
        let b = w.element(&[ae(1), ae(0)], &[0, 1]).unwrap();
        assert_eq!(w.mul(&a, &b).unwrap(), w.element(&[ae(0), ae(1)], &[1, 0]).unwrap());
    }

    /// Dense monomial matrices over Z/m encoded as (row → (col, color)).
    fn as_matrix(law: &WreathLaw, a: &WreathElement) -> Vec<(usize, u32)> {
        // column j has its entry in row σ(j), with color v_{σ(j)}
        let mut rows = vec![(0, 0); a.degree()];
        for j in 0..a.degree() {
            let i = a.permutation()[j] as usize;
            rows[i] = (j, law.colors(a)[i].0[0]);
        }
        rows
    }

    fn matrix_mul(m: u32, x: &[(usize, u32)], y: &[(usize, u32)]) -> Vec<(usize, u32)> {
        x.iter().map(|&(k, c)| (y[k].0, (c + y[k].1) % m)).collect()
    }

    #[test]
    fn matches_monomial_matrix_product() {
        let h = tower(vec![4], vec![vec![1]]);
        let w = RestrictedWreathGroup::new(&h, 3, DEFAULT_BUDGET).unwrap();
        let mut rng = StdRng::seed_from_u64(7);
        let els = w.group().elements();
        for _ in 0..300 {
            let a = els.choose(&mut rng).unwrap();
            let b = els.choose(&mut rng).unwrap();
            let ab = w.mul(a, b).unwrap();
            assert_eq!(as_matrix(w.law(), &ab), matrix_mul(4, &as_matrix(w.law(), a), &as_matrix(w.law(), b)));
        }
    }

    #[test]
    fn orders_match_formula() {
        let cases = [
            (vec![2], vec![], 1, 1),
            (vec![2], vec![], 2, 4),
            (vec![2], vec![vec![1]], 3, 48),
            (vec![4], vec![vec![2]], 2, 16),
            (vec![3], vec![], 3, 54),
            (vec![2, 2], vec![vec![1, 1]], 2, 16),
            (vec![], vec![], 3, 6),
        ];
        for (f, gens, n, expect) in cases {
            let h = tower(f, gens);
            let w = RestrictedWreathGroup::new(&h, n, DEFAULT_BUDGET).unwrap();
            assert_eq!(w.order(), expect);
            assert_eq!(RestrictedWreathGroup::order_formula(&h, n), expect as u128);
            for e in w.group().elements() {
                assert!(h.contains(&w.sum(e)));
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let h = tower(vec![4], vec![]);
        let err = RestrictedWreathGroup::new(&h, 5, 1000).err().unwrap();
        assert!(matches!(err, Error::Resource { bound: 1000, .. }));
    }

    #[test]
    fn group_axioms_on_random_triples() {
        let mut rng = StdRng::seed_from_u64(11);
        for (f, gens, n) in [(vec![4], vec![vec![2]], 3), (vec![2, 2], vec![vec![1, 1]], 3), (vec![3], vec![], 3)] {
            let h = tower(f, gens);
            let w = RestrictedWreathGroup::new(&h, n, DEFAULT_BUDGET).unwrap();
            let els = w.group().elements();
            let id = w.law().identity();
            for _ in 0..1000 {
                let (a, b, c) = (els.choose(&mut rng).unwrap(), els.choose(&mut rng).unwrap(), els.choose(&mut rng).unwrap());
                let l = w.mul(&w.mul(a, b).unwrap(), c).unwrap();
                let r = w.mul(a, &w.mul(b, c).unwrap()).unwrap();
                assert_eq!(l, r);
                assert_eq!(w.mul(a, &id).unwrap(), *a);
                assert_eq!(w.mul(a, &w.inv(a)).unwrap(), id);
                let g = w.coefficients();
                assert_eq!(w.sum(&w.mul(a, b).unwrap()), g.add(&w.sum(a), &w.sum(b)));
            }
        }
    }

    #[test]
    fn degree_mismatch_is_usage_error() {
        let h = tower(vec![2], vec![]);
        let w2 = RestrictedWreathGroup::new(&h, 2, DEFAULT_BUDGET).unwrap();
        let w1 = RestrictedWreathGroup::new(&h, 1, DEFAULT_BUDGET).unwrap();
        let a = w2.law().identity();
        let b = w1.law().identity();
        assert!(matches!(w2.mul(&a, &b), Err(Error::Usage(_))));
        assert!(w2.element(&[ae(1), ae(0)], &[0, 1]).is_err());
    }

    #[test]
    fn class_counts() {
        let h = tower(vec![2], vec![]);
        let w = RestrictedWreathGroup::new(&h, 2, DEFAULT_BUDGET).unwrap();
        let els = w.group().elements();
        assert!(els.iter().all(|a| els.iter().all(|b| w.mul(a, b).unwrap() == w.mul(b, a).unwrap())));
        assert_eq!(w.class_count(), 4);

        let w = RestrictedWreathGroup::new(&h, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(w.order(), 24);
        assert_eq!(w.class_count(), 5);
        let mut sizes = w.group().classes().sizes.clone();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);

        let trivial = RestrictedWreathGroup::new(&h, 0, DEFAULT_BUDGET).unwrap();
        assert_eq!((trivial.order(), trivial.class_count()), (1, 1));
    }

    #[test]
    fn class_representatives_are_minimal() {
        let h = tower(vec![4], vec![vec![2]]);
        let w = RestrictedWreathGroup::new(&h, 2, DEFAULT_BUDGET).unwrap();
        let cd = w.group().classes();
        for c in 0..cd.count() {
            let rep = w.group().representative(c);
            for e in w.group().elements() {
                if w.class_of(e) == Some(c) {
                    assert!(rep <= e);
                }
            }
        }
        assert_eq!(cd.sizes.iter().sum::<u64>(), 16);
        assert!(cd.sizes.iter().all(|s| 16 % s == 0));
    }

    #[test]
    fn reduction_is_homomorphism_with_kernel_hn() {
        let (g, h) = GroupDescriptor::new(vec![4], vec![vec![2]]).build().unwrap();
        let q = QuotientMap::new(&h).unwrap();
        let w = RestrictedWreathGroup::new(&h, 2, DEFAULT_BUDGET).unwrap();
        let target = RestrictedWreathGroup::new(&AbelianSubgroup::trivial(q.target()), 2, DEFAULT_BUDGET).unwrap();
        let id = target.law().identity();
        let mut fibers = std::collections::HashMap::new();
        for a in w.group().elements() {
            let ra = reduce_mod_h(&q, a);
            assert!(target.group().index_of(&ra).is_some());
            *fibers.entry(ra.clone()).or_insert(0usize) += 1;
            let in_kernel = a.is_diagonal() && w.law().colors(a).iter().all(|c| h.contains(c));
            assert_eq!(ra == id, in_kernel);
            for b in w.group().elements() {
                assert_eq!(reduce_mod_h(&q, &w.mul(a, b).unwrap()), target.mul(&ra, &reduce_mod_h(&q, b)).unwrap());
            }
        }
        assert_eq!(fibers.len(), target.order());
        assert!(fibers.values().all(|&f| f == h.order().pow(2)));
        assert_eq!(reduce_mod_h(&q, &w.law().identity()), id);
        let _ = g;
    }

    #[test]
    fn block_embedding() {
        let h = tower(vec![4], vec![vec![2]]);
        let w1 = RestrictedWreathGroup::new(&h, 1, DEFAULT_BUDGET).unwrap();
        let w2 = RestrictedWreathGroup::new(&h, 2, DEFAULT_BUDGET).unwrap();
        let id1 = w1.law().identity();
        assert_eq!(block_embed(&[&id1, &id1], &[1, 1]).unwrap(), w2.law().identity());
        let mut image = std::collections::HashSet::new();
        for a in w1.group().elements() {
            for b in w1.group().elements() {
                let e = block_embed(&[a, b], &[1, 1]).unwrap();
                assert!(w2.group().index_of(&e).is_some());
                image.insert(e);
                for c in w1.group().elements() {
                    for d in w1.group().elements() {
                        let lhs = w2.mul(&block_embed(&[a, b], &[1, 1]).unwrap(), &block_embed(&[c, d], &[1, 1]).unwrap()).unwrap();
                        let rhs = block_embed(&[&w1.mul(a, c).unwrap(), &w1.mul(b, d).unwrap()], &[1, 1]).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
        assert_eq!(image.len(), 4);
        assert!(block_embed(&[&id1], &[2]).is_err());
    }
}
