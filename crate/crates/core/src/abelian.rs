//! Finite abelian groups in invariant-factor form, their subgroups, quotients
//! and dual groups.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arith::snf::smith_normal_form;
use crate::arith::Cyclotomic;
use crate::error::{usage, Error, Result};

/// Z/m₁ ⊕ … ⊕ Z/m_k with m₁ | m₂ | … | m_k.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    factors: Vec<u32>,
}

/// A residue vector (r₁,…,r_k) with 0 ≤ rᵢ < mᵢ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbelianElement(pub Vec<u32>);

impl FiniteAbelianGroup {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if factors.contains(&0) {
            return Err(usage("invariant factors must be positive"));
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(usage(format!("invariant factors {factors:?} do not form a divisibility chain")));
        }
        Ok(FiniteAbelianGroup { factors })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: Vec::new() }
    }

    pub fn cyclic(m: u32) -> Self {
        Self::new(vec![m]).expect("cyclic group of positive order")
    }

    pub fn invariant_factors(&self) -> &[u32] {
        &self.factors
    }

    /// Invariant factors with the trivial Z/1 summands removed.
    pub fn nontrivial_factors(&self) -> Vec<u32> {
        self.factors.iter().copied().filter(|&m| m > 1).collect()
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.factors.iter().map(|&m| m as usize).product()
    }

    pub fn exponent(&self) -> u32 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_cyclic(&self) -> bool {
        self.nontrivial_factors().len() <= 1
    }

    pub fn zero(&self) -> AbelianElement {
        AbelianElement(vec![0; self.factors.len()])
    }

    pub fn contains(&self, a: &AbelianElement) -> bool {
        a.0.len() == self.factors.len() && a.0.iter().zip(&self.factors).all(|(r, m)| r < m)
    }

    pub fn check(&self, a: &AbelianElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(usage(format!("{:?} is not an element of {self}", a.0)))
        }
    }

    /// Reduces an arbitrary integer vector into the group.
    pub fn reduce(&self, v: &[i64]) -> AbelianElement {
        AbelianElement(v.iter().zip(&self.factors).map(|(&x, &m)| x.rem_euclid(m as i64) as u32).collect())
    }

    pub fn add(&self, a: &AbelianElement, b: &AbelianElement) -> AbelianElement {
        AbelianElement(a.0.iter().zip(&b.0).zip(&self.factors).map(|((x, y), m)| (x + y) % m).collect())
    }

    pub fn neg(&self, a: &AbelianElement) -> AbelianElement {
        AbelianElement(a.0.iter().zip(&self.factors).map(|(x, m)| (m - x) % m).collect())
    }

    pub fn scale(&self, a: &AbelianElement, k: i64) -> AbelianElement {
        self.reduce(&a.0.iter().map(|&x| x as i64 * k).collect::<Vec<_>>())
    }

    /// Mixed-radix index; agrees with lexicographic order on residue vectors.
    pub fn index_of(&self, a: &AbelianElement) -> usize {
        a.0.iter().zip(&self.factors).fold(0, |acc, (&r, &m)| acc * m as usize + r as usize)
    }

    pub fn element(&self, mut idx: usize) -> AbelianElement {
        let mut out = vec![0u32; self.factors.len()];
        for (slot, &m) in out.iter_mut().zip(&self.factors).rev() {
            *slot = (idx % m as usize) as u32;
            idx /= m as usize;
        }
        AbelianElement(out)
    }

    pub fn elements(&self) -> impl Iterator<Item = AbelianElement> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    pub fn element_order(&self, a: &AbelianElement) -> u32 {
        a.0.iter().zip(&self.factors).map(|(&r, &m)| m / num_integer::gcd(r, m)).fold(1, num_integer::lcm)
    }
}

impl fmt::Debug for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nt = self.nontrivial_factors();
        if nt.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = nt.iter().map(|m| format!("Z/{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Index-based addition table, for hot loops over small groups.
#[derive(Debug, Clone)]
pub struct AdditionTable {
    order: usize,
    sum: Vec<u16>,
    neg: Vec<u16>,
}

impl AdditionTable {
    pub fn new(g: &FiniteAbelianGroup) -> Self {
        let n = g.order();
        assert!(n <= u16::MAX as usize, "addition tables are for small groups");
        let elems: Vec<AbelianElement> = g.elements().collect();
        let mut sum = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                sum.push(g.index_of(&g.add(a, b)) as u16);
            }
        }
        let neg = elems.iter().map(|a| g.index_of(&g.neg(a)) as u16).collect();
        AdditionTable { order: n, sum, neg }
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.sum[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }
}

/// A subgroup H ⊂ G with its exhaustive element list and its own invariant-factor presentation.
#[derive(Debug, Clone)]
pub struct AbelianSubgroup {
    ambient: FiniteAbelianGroup,
    generators: Vec<AbelianElement>,
    member: Vec<bool>,
    elements: Vec<AbelianElement>,
    structure: FiniteAbelianGroup,
    /// Images in G of the standard generators of `structure`.
    basis: Vec<AbelianElement>,
    /// Ambient index → coordinates in `structure` (for members).
    coords: Vec<Option<AbelianElement>>,
}

impl AbelianSubgroup {
    pub fn from_generators(g: &FiniteAbelianGroup, gens: Vec<AbelianElement>) -> Result<Self> {
        for x in &gens {
            g.check(x)?;
        }
        // closure by breadth-first addition of generators
        let mut member = vec![false; g.order()];
        member[g.index_of(&g.zero())] = true;
        let mut frontier = vec![g.zero()];
        while let Some(x) = frontier.pop() {
            for s in &gens {
                let y = g.add(&x, s);
                let iy = g.index_of(&y);
                if !member[iy] {
                    member[iy] = true;
                    frontier.push(y);
                }
            }
        }
        let elements: Vec<AbelianElement> = member.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| g.element(i)).collect();

        let (structure, basis) = presentation(g, &gens)?;
        let mut coords = vec![None; g.order()];
        for y in structure.elements() {
            let mut acc = g.zero();
            for (c, b) in y.0.iter().zip(&basis) {
                acc = g.add(&acc, &g.scale(b, *c as i64));
            }
            let idx = g.index_of(&acc);
            if coords[idx].is_some() || !member[idx] {
                return Err(Error::Internal("subgroup presentation is not a bijection".into()));
            }
            coords[idx] = Some(y);
        }
        if structure.order() != elements.len() {
            return Err(Error::Internal("subgroup presentation has the wrong order".into()));
        }
        Ok(AbelianSubgroup { ambient: g.clone(), generators: gens, member, elements, structure, basis, coords })
    }

    pub fn whole(g: &FiniteAbelianGroup) -> Self {
        let gens = (0..g.rank())
            .map(|i| {
                let mut v = vec![0; g.rank()];
                v[i] = 1 % g.invariant_factors()[i];
                AbelianElement(v)
            })
            .collect();
        Self::from_generators(g, gens).expect("standard generators lie in the group")
    }

    pub fn trivial(g: &FiniteAbelianGroup) -> Self {
        Self::from_generators(g, Vec::new()).expect("empty generating set")
    }

    pub fn ambient(&self) -> &FiniteAbelianGroup {
        &self.ambient
    }

    pub fn generators(&self) -> &[AbelianElement] {
        &self.generators
    }

    pub fn elements(&self) -> &[AbelianElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.ambient.order() / self.order()
    }

    pub fn contains(&self, a: &AbelianElement) -> bool {
        self.ambient.contains(a) && self.member[self.ambient.index_of(a)]
    }

    pub fn contains_index(&self, idx: usize) -> bool {
        self.member[idx]
    }

    /// H as an abstract group in invariant-factor form.
    pub fn structure(&self) -> &FiniteAbelianGroup {
        &self.structure
    }

    pub fn basis(&self) -> &[AbelianElement] {
        &self.basis
    }

    /// Coordinates of a member of H in the presentation returned by [`Self::structure`].
    pub fn coordinates(&self, a: &AbelianElement) -> Option<&AbelianElement> {
        if !self.ambient.contains(a) {
            return None;
        }
        self.coords[self.ambient.index_of(a)].as_ref()
    }

    pub fn coordinates_by_index(&self, idx: usize) -> Option<&AbelianElement> {
        self.coords[idx].as_ref()
    }
}

/// Invariant factors of ⟨gens⟩ ⊂ G and the images of the standard generators.
fn presentation(g: &FiniteAbelianGroup, gens: &[AbelianElement]) -> Result<(FiniteAbelianGroup, Vec<AbelianElement>)> {
    let s = gens.len();
    let k = g.rank();
    if s == 0 {
        return Ok((FiniteAbelianGroup::trivial(), Vec::new()));
    }
    // left kernel of [gens; diag(m)] restricted to the generator coordinates = relations among gens
    let mut a: Vec<Vec<i64>> = gens.iter().map(|x| x.0.iter().map(|&r| r as i64).collect()).collect();
    for (i, &m) in g.invariant_factors().iter().enumerate() {
        let mut row = vec![0i64; k];
        row[i] = m as i64;
        a.push(row);
    }
    let sf = smith_normal_form(&a);
    let rank = sf.diagonal().iter().filter(|&&d| d != 0).count();
    let relations: Vec<Vec<i64>> = sf.u[rank..].iter().map(|row| row[..s].to_vec()).collect();
    let rel = smith_normal_form(&relations);
    let diag = rel.diagonal();
    if diag.len() < s || diag.contains(&0) {
        return Err(Error::Internal("subgroup relation lattice is not of full rank".into()));
    }
    let mut factors = Vec::new();
    let mut basis = Vec::new();
    for (i, &d) in diag.iter().enumerate() {
        if d == 1 {
            continue;
        }
        factors.push(d as u32);
        // i-th new generator = Σ_j v_inv[i][j] · gens[j]
        let mut acc = vec![0i64; k];
        for (j, x) in gens.iter().enumerate() {
            for (slot, &r) in acc.iter_mut().zip(&x.0) {
                *slot += rel.v_inv[i][j] * r as i64;
            }
        }
        basis.push(g.reduce(&acc));
    }
    Ok((FiniteAbelianGroup::new(factors)?, basis))
}

/// The surjection G → G/H with G/H in invariant-factor form.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    source: FiniteAbelianGroup,
    target: FiniteAbelianGroup,
    image: Vec<usize>,
}

impl QuotientMap {
    pub fn new(h: &AbelianSubgroup) -> Result<Self> {
        let g = h.ambient();
        let k = g.rank();
        let mut rel: Vec<Vec<i64>> = Vec::new();
        for (i, &m) in g.invariant_factors().iter().enumerate() {
            let mut row = vec![0i64; k];
            row[i] = m as i64;
            rel.push(row);
        }
        rel.extend(h.generators().iter().map(|x| x.0.iter().map(|&r| r as i64).collect()));
        let sf = smith_normal_form(&rel);
        let diag = sf.diagonal();
        let keep: Vec<usize> = (0..k).filter(|&i| diag[i] > 1).collect();
        let target = FiniteAbelianGroup::new(keep.iter().map(|&i| diag[i] as u32).collect())?;
        let image = g
            .elements()
            .map(|x| {
                let y: Vec<i64> = (0..k).map(|c| (0..k).map(|r| x.0[r] as i64 * sf.v[r][c]).sum()).collect();
                let coset: Vec<i64> = keep.iter().map(|&i| y[i]).collect();
                target.index_of(&target.reduce(&coset))
            })
            .collect();
        Ok(QuotientMap { source: g.clone(), target, image })
    }

    pub fn source(&self) -> &FiniteAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteAbelianGroup {
        &self.target
    }

    pub fn apply(&self, a: &AbelianElement) -> AbelianElement {
        self.target.element(self.image[self.source.index_of(a)])
    }

    /// Same map on mixed-radix indices.
    pub fn apply_index(&self, idx: usize) -> usize {
        self.image[idx]
    }
}

/// A homomorphism A → C^×, stored as a label a ∈ ⊕Z/dᵢ with
/// value(y) = ζ_e^{Σ aᵢ yᵢ e/dᵢ}, e = exponent(A).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinearCharacter {
    domain: FiniteAbelianGroup,
    label: AbelianElement,
}

impl LinearCharacter {
    pub fn new(domain: &FiniteAbelianGroup, label: AbelianElement) -> Result<Self> {
        domain.check(&label)?;
        Ok(LinearCharacter { domain: domain.clone(), label })
    }

    pub fn trivial(domain: &FiniteAbelianGroup) -> Self {
        LinearCharacter { domain: domain.clone(), label: domain.zero() }
    }

    pub fn domain(&self) -> &FiniteAbelianGroup {
        &self.domain
    }

    pub fn label(&self) -> &AbelianElement {
        &self.label
    }

    pub fn is_trivial(&self) -> bool {
        self.label == self.domain.zero()
    }

    /// The conductor in which values are reported: exponent of the domain.
    pub fn conductor(&self) -> u32 {
        self.domain.exponent()
    }

    /// k with value(y) = ζ_e^k.
    pub fn exponent_at(&self, y: &AbelianElement) -> u32 {
        let e = self.conductor() as u64;
        let k: u64 = self
            .label
            .0
            .iter()
            .zip(&y.0)
            .zip(self.domain.invariant_factors())
            .map(|((&a, &b), &d)| a as u64 * b as u64 * (e / d as u64))
            .sum();
        (k % e) as u32
    }

    pub fn value(&self, y: &AbelianElement) -> Cyclotomic {
        Cyclotomic::root_power(self.conductor(), self.exponent_at(y) as i64)
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.domain != other.domain {
            return Err(usage("characters live on different groups"));
        }
        Ok(LinearCharacter { domain: self.domain.clone(), label: self.domain.add(&self.label, &other.label) })
    }

    pub fn inverse(&self) -> Self {
        LinearCharacter { domain: self.domain.clone(), label: self.domain.neg(&self.label) }
    }
}

impl fmt::Debug for LinearCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi{:?}", self.label.0)
    }
}

/// All characters of A, in lexicographic order of their labels (trivial first).
pub fn dual_group(a: &FiniteAbelianGroup) -> Vec<LinearCharacter> {
    a.elements().map(|label| LinearCharacter { domain: a.clone(), label }).collect()
}

/// On-disk naming of a coefficient pair (G, H).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub invariant_factors: Vec<u32>,
    pub subgroup_generators: Vec<Vec<u32>>,
}

impl GroupDescriptor {
    pub fn new(invariant_factors: Vec<u32>, subgroup_generators: Vec<Vec<u32>>) -> Self {
        GroupDescriptor { invariant_factors, subgroup_generators }
    }

    pub fn build(&self) -> Result<(FiniteAbelianGroup, AbelianSubgroup)> {
        let g = FiniteAbelianGroup::new(self.invariant_factors.clone())?;
        let gens = self.subgroup_generators.iter().map(|v| AbelianElement(v.clone())).collect();
        let h = AbelianSubgroup::from_generators(&g, gens)?;
        Ok((g, h))
    }

    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serialises")
    }

    /// Content hash used to key caches.
    pub fn hash_hex(&self) -> String {
        let digest = Sha256::digest(self.canonical_json().as_bytes());
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }

    /// Descriptor for (G/H, 1).
    pub fn for_quotient(q: &QuotientMap) -> Self {
        GroupDescriptor { invariant_factors: q.target().invariant_factors().to_vec(), subgroup_generators: Vec::new() }
    }
}

/// Distinct elements of a set, for tests and reports.
pub fn distinct<T: std::hash::Hash + Eq + Clone>(items: &[T]) -> bool {
    items.iter().cloned().collect::<HashSet<_>>().len() == items.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    fn el(v: &[u32]) -> AbelianElement {
        AbelianElement(v.to_vec())
    }

    #[test]
    fn subgroup_examples() {
        let z4 = FiniteAbelianGroup::cyclic(4);
        let h = AbelianSubgroup::from_generators(&z4, vec![el(&[2])]).unwrap();
        assert_eq!(h.elements(), &[el(&[0]), el(&[2])]);
        assert_eq!(h.index(), 2);

        let z6 = FiniteAbelianGroup::cyclic(6);
        let h = AbelianSubgroup::from_generators(&z6, vec![]).unwrap();
        assert_eq!(h.order(), 1);
        assert_eq!(h.index(), 6);

        let v4 = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        let h = AbelianSubgroup::from_generators(&v4, vec![el(&[1, 1])]).unwrap();
        assert_eq!((h.order(), h.index()), (2, 2));
        assert_eq!(h.structure().invariant_factors(), &[2]);
    }

    #[test]
    fn foreign_generator_rejected() {
        let z4 = FiniteAbelianGroup::cyclic(4);
        assert!(matches!(AbelianSubgroup::from_generators(&z4, vec![el(&[5])]), Err(Error::Usage(_))));
        assert!(FiniteAbelianGroup::new(vec![4, 2]).is_err());
    }

    #[test]
    fn subgroup_presentations() {
        let g = FiniteAbelianGroup::new(vec![2, 4]).unwrap();
        let h = AbelianSubgroup::from_generators(&g, vec![el(&[1, 2]), el(&[0, 2])]).unwrap();
        assert_eq!(h.structure().invariant_factors(), &[2, 2]);
        let h = AbelianSubgroup::from_generators(&g, vec![el(&[1, 1])]).unwrap();
        assert_eq!(h.structure().invariant_factors(), &[4]);
        let whole = AbelianSubgroup::whole(&g);
        assert_eq!(whole.structure().invariant_factors(), &[2, 4]);
        for x in g.elements() {
            assert!(whole.coordinates(&x).is_some());
        }
    }

    #[test]
    fn quotient_examples() {
        let z4 = FiniteAbelianGroup::cyclic(4);
        let h = AbelianSubgroup::from_generators(&z4, vec![el(&[2])]).unwrap();
        assert_eq!(QuotientMap::new(&h).unwrap().target().invariant_factors(), &[2]);
        let q = QuotientMap::new(&AbelianSubgroup::whole(&z4)).unwrap();
        assert_eq!(q.target().order(), 1);
    }

    /// Brute-force structure of G/H: count cosets, and read the invariant factors off the
    /// numbers of elements of each order in the coset group.
    fn coset_structure(g: &FiniteAbelianGroup, h: &AbelianSubgroup) -> (usize, Vec<usize>) {
        let mut cosets: Vec<Vec<AbelianElement>> = Vec::new();
        for x in g.elements() {
            let mut c: Vec<AbelianElement> = h.elements().iter().map(|y| g.add(&x, y)).collect();
            c.sort();
            if !cosets.contains(&c) {
                cosets.push(c);
            }
        }
        let coset_of = |x: &AbelianElement| cosets.iter().position(|c| c.contains(x)).unwrap();
        let mut orders: Vec<usize> = cosets
            .iter()
            .map(|c| {
                let mut k = 1;
                let mut acc = c[0].clone();
                while coset_of(&acc) != coset_of(&g.zero()) {
                    acc = g.add(&acc, &c[0]);
                    k += 1;
                }
                k
            })
            .collect();
        orders.sort();
        (cosets.len(), orders)
    }

    #[test]
    fn quotient_z2_z4_by_02() {
        let g = FiniteAbelianGroup::new(vec![2, 4]).unwrap();
        let h = AbelianSubgroup::from_generators(&g, vec![el(&[0, 2])]).unwrap();
        let q = QuotientMap::new(&h).unwrap();
        let (count, orders) = coset_structure(&g, &h);
        assert_eq!(count, 4);
        // Z/2⊕Z/2 has one element of order 1 and three of order 2
        assert_eq!(orders, vec![1, 2, 2, 2]);
        assert_eq!(q.target().invariant_factors(), &[2, 2]);
    }

    #[test]
    fn quotient_kernel_is_subgroup() {
        let cases: Vec<(Vec<u32>, Vec<Vec<u32>>)> = vec![
            (vec![4], vec![vec![2]]),
            (vec![2, 4], vec![vec![0, 2]]),
            (vec![2, 4], vec![vec![1, 1]]),
            (vec![2, 2], vec![vec![1, 1]]),
            (vec![3, 6], vec![vec![1, 2]]),
            (vec![6], vec![]),
        ];
        for (f, gens) in cases {
            let (g, h) = GroupDescriptor::new(f, gens).build().unwrap();
            let q = QuotientMap::new(&h).unwrap();
            assert_eq!(q.target().order() * h.order(), g.order());
            let mut hit = vec![false; q.target().order()];
            for x in g.elements() {
                let y = q.apply(&x);
                hit[q.target().index_of(&y)] = true;
                assert_eq!(y == q.target().zero(), h.contains(&x));
                for z in g.elements() {
                    let lhs = q.apply(&g.add(&x, &z));
                    assert_eq!(lhs, q.target().add(&y, &q.apply(&z)));
                }
            }
            assert!(hit.into_iter().all(|b| b));
        }
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual_group(&FiniteAbelianGroup::trivial()).len(), 1);
        let z2 = dual_group(&FiniteAbelianGroup::cyclic(2));
        assert!(z2[0].is_trivial());
        assert_eq!(z2[1].value(&el(&[1])), Cyclotomic::from_int(2, -1));

        // Klein four: exhaustive homomorphism search agrees, and products form Z/2⊕Z/2
        let v4 = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        let chars = dual_group(&v4);
        let elems: Vec<_> = v4.elements().collect();
        let mut homs = 0;
        for signs in 0..16u32 {
            let f = |i: usize| if signs >> i & 1 == 1 { -1 } else { 1 };
            let ok = (0..4).all(|a| (0..4).all(|b| f(v4.index_of(&v4.add(&elems[a], &elems[b]))) == f(a) * f(b)));
            homs += ok as usize;
        }
        assert_eq!(homs, chars.len());
        for a in &chars {
            assert_eq!(a.product(a).unwrap(), chars[0]);
        }
    }

    #[test]
    fn character_orthogonality_and_nondegeneracy() {
        for f in [vec![4], vec![2, 2], vec![2, 4], vec![3, 6], vec![]] {
            let a = FiniteAbelianGroup::new(f).unwrap();
            let chars = dual_group(&a);
            let e = a.exponent();
            for x in &chars {
                for y in &chars {
                    let mut s = Cyclotomic::zero(e);
                    for g in a.elements() {
                        s = &s + &(&x.value(&g) * &y.value(&g).conj());
                    }
                    let s = s.scale(&Rational::new(1.into(), (a.order() as i64).into()));
                    assert_eq!(s, Cyclotomic::from_int(e, i64::from(x == y)));
                }
                for g in a.elements() {
                    for h in a.elements() {
                        assert_eq!(x.value(&a.add(&g, &h)), &x.value(&g) * &x.value(&h));
                    }
                }
            }
            for g in a.elements().filter(|g| *g != a.zero()) {
                assert!(chars.iter().any(|l| l.exponent_at(&g) != 0));
            }
        }
    }

    #[test]
    fn descriptor_hash_is_stable() {
        let d = GroupDescriptor::new(vec![4], vec![vec![2]]);
        assert_eq!(d.canonical_json(), r#"{"invariant_factors":[4],"subgroup_generators":[[2]]}"#);
        assert_eq!(d.hash_hex(), d.clone().hash_hex());
        assert_ne!(d.hash_hex(), GroupDescriptor::new(vec![4], vec![]).hash_hex());
    }
}
