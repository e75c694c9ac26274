//! The graded algebra/coalgebra R(G,H) = ⊕ₙ R_n(G,H) on the irreducible
//! characters of G_n(G,H): induction product, restriction coproduct and the
//! graded pairing.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::abelian::{AbelianSubgroup, FiniteAbelianGroup, GroupDescriptor};
use crate::cache::{BasisLabels, Cache, CharTableFile, SlabFile, FORMAT_VERSION};
use crate::chartab::{character_table, CharacterTable, ClassGeometry, ClassStructure, Fusion};
use crate::error::{usage, Error, Result};
use crate::wreath::{block_embed, RestrictedWreathGroup, DEFAULT_BUDGET};

/// An irreducible element: irreducible `index` of G_`degree`. Degree 0 has the single unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Basis {
    pub degree: usize,
    pub index: usize,
}

impl Basis {
    pub const UNIT: Basis = Basis { degree: 0, index: 0 };

    pub fn new(degree: usize, index: usize) -> Self {
        Basis { degree, index }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.degree, self.index)
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (d, i) = s.split_once(':').ok_or_else(|| usage(format!("basis label {s:?} is not of the form degree:index")))?;
        let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| usage(format!("bad basis label {s:?}")));
        Ok(Basis { degree: parse(d)?, index: parse(i)? })
    }
}

/// Finitely supported integer combination of basis elements.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedVector {
    coeffs: BTreeMap<Basis, i64>,
}

impl GradedVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::basis(Basis::UNIT)
    }

    pub fn basis(b: Basis) -> Self {
        Self::term(b, 1)
    }

    pub fn term(b: Basis, c: i64) -> Self {
        let mut v = Self::zero();
        v.add_term(b, c);
        v
    }

    pub fn add_term(&mut self, b: Basis, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry(b).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&b);
        }
    }

    pub fn coeff(&self, b: Basis) -> i64 {
        self.coeffs.get(&b).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Basis, i64)> + '_ {
        self.coeffs.iter().map(|(&b, &c)| (b, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// All coefficients ≥ 0 and not zero.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.coeffs.values().all(|&c| c > 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// The single basis element if this vector is one.
    pub fn as_irreducible(&self) -> Option<Basis> {
        match self.coeffs.iter().next() {
            Some((&b, &1)) if self.coeffs.len() == 1 => Some(b),
            _ => None,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.keys().map(|b| b.degree).max().unwrap_or(0)
    }

    pub fn is_homogeneous_of(&self, n: usize) -> bool {
        self.coeffs.keys().all(|b| b.degree == n)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (b, c) in self.terms() {
            out.add_term(b, c * k);
        }
        out
    }

    /// Graded pairing: irreducibles are orthonormal.
    pub fn pairing(&self, other: &Self) -> i64 {
        self.terms().map(|(b, c)| c * other.coeff(b)).sum()
    }
}

impl fmt::Display for GradedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(b, c)| if c == 1 { format!("[{b}]") } else { format!("{c}[{b}]") }).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl FromIterator<(Basis, i64)> for GradedVector {
    fn from_iter<I: IntoIterator<Item = (Basis, i64)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (b, c) in iter {
            v.add_term(b, c);
        }
        v
    }
}

/// Element of R ⊗ R, or more generally of an m-fold tensor power:
/// integer coefficients on tuples of basis elements.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TensorVector {
    coeffs: BTreeMap<Vec<Basis>, i64>,
}

impl TensorVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn pure(parts: Vec<Basis>) -> Self {
        let mut t = Self::zero();
        t.add_term(parts, 1);
        t
    }

    pub fn add_term(&mut self, parts: Vec<Basis>, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry(parts.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&parts);
        }
    }

    pub fn coeff(&self, parts: &[Basis]) -> i64 {
        self.coeffs.get(parts).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Basis>, i64)> + '_ {
        self.coeffs.iter().map(|(b, &c)| (b, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b.clone(), c);
        }
        out
    }

    pub fn pairing(&self, other: &Self) -> i64 {
        self.terms().map(|(b, c)| c * other.coeff(b)).sum()
    }

    /// Outer product of factor vectors.
    pub fn from_factors(factors: &[GradedVector]) -> Self {
        let mut acc = Self::pure(Vec::new());
        for f in factors {
            let mut next = Self::zero();
            for (parts, c) in acc.terms() {
                for (b, d) in f.terms() {
                    let mut p = parts.clone();
                    p.push(b);
                    next.add_term(p, c * d);
                }
            }
            acc = next;
        }
        acc
    }

    /// Swap the two factors of an element of R ⊗ R.
    pub fn swapped(&self) -> Self {
        let mut out = Self::zero();
        for (parts, c) in self.terms() {
            out.add_term(parts.iter().rev().copied().collect(), c);
        }
        out
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(b, c)| {
                let t = b.iter().map(|x| format!("[{x}]")).collect::<Vec<_>>().join("⊗");
                if c == 1 {
                    t
                } else {
                    format!("{c}{t}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// G_n(G,H) together with its character table.
pub struct Degree {
    pub group: RestrictedWreathGroup,
    pub table: CharacterTable,
    pub from_cache: bool,
}

impl Degree {
    pub fn geometry(&self) -> &ClassGeometry {
        self.table.geometry()
    }

    pub fn representative_words(&self) -> Vec<String> {
        (0..self.group.class_count()).map(|c| self.group.group().representative(c).word()).collect()
    }
}

/// Multiplicities c[i][j][t] of irreducible t of G_{k+l} in the induction of i ⊗ j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    pub k: usize,
    pub l: usize,
    pub dims: [usize; 3],
    data: Vec<i64>,
}

impl StructureConstants {
    pub fn get(&self, i: usize, j: usize, t: usize) -> i64 {
        self.data[(i * self.dims[1] + j) * self.dims[2] + t]
    }

    pub fn row(&self, i: usize, j: usize) -> &[i64] {
        let start = (i * self.dims[1] + j) * self.dims[2];
        &self.data[start..start + self.dims[2]]
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    fn to_nested(&self) -> Vec<Vec<Vec<i64>>> {
        (0..self.dims[0]).map(|i| (0..self.dims[1]).map(|j| self.row(i, j).to_vec()).collect()).collect()
    }
}

/// Restriction multiplicities r[t][i][j] of irreducible t of G_{k+l} on G_k × G_l.
#[derive(Debug, Clone)]
struct Restrictions {
    dims: [usize; 3],
    data: Vec<i64>,
}

impl Restrictions {
    fn get(&self, t: usize, i: usize, j: usize) -> i64 {
        self.data[(t * self.dims[0] + i) * self.dims[1] + j]
    }
}

pub fn default_n_max(g: &FiniteAbelianGroup) -> usize {
    match g.order() {
        1 | 2 => 4,
        3 | 4 => 3,
        _ => 2,
    }
}

/// Product table of G_k × G_l with its class fusion into G_{k+l}.
pub type BlockFusion = (CharacterTable, Fusion);

/// R(G,H) truncated at degree `n_max`, with lazily built and cached per-degree data.
pub struct TowerContext {
    descriptor: GroupDescriptor,
    subgroup: AbelianSubgroup,
    n_max: usize,
    budget: u128,
    cache: Option<Arc<Cache>>,
    degrees: Mutex<BTreeMap<usize, Arc<Degree>>>,
    products: Mutex<HashMap<(usize, usize), Arc<StructureConstants>>>,
    restrictions: Mutex<HashMap<(usize, usize), Arc<Restrictions>>>,
    fusions: Mutex<HashMap<(usize, usize), Arc<BlockFusion>>>,
}

impl TowerContext {
    pub fn new(descriptor: GroupDescriptor, n_max: usize) -> Result<Self> {
        let (_, h) = descriptor.build()?;
        Ok(TowerContext {
            descriptor,
            subgroup: h,
            n_max,
            budget: DEFAULT_BUDGET,
            cache: None,
            degrees: Mutex::new(BTreeMap::new()),
            products: Mutex::new(HashMap::new()),
            restrictions: Mutex::new(HashMap::new()),
            fusions: Mutex::new(HashMap::new()),
        })
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_cache(mut self, cache: Arc<Cache>) -> Self {
        self.cache = Some(cache);
        self
    }

    pub fn descriptor(&self) -> &GroupDescriptor {
        &self.descriptor
    }

    pub fn coefficients(&self) -> &FiniteAbelianGroup {
        self.subgroup.ambient()
    }

    pub fn subgroup(&self) -> &AbelianSubgroup {
        &self.subgroup
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn budget(&self) -> u128 {
        self.budget
    }

    pub fn cache(&self) -> Option<&Arc<Cache>> {
        self.cache.as_ref()
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if n > self.n_max {
            return Err(Error::Resource { what: "degree beyond n_max".into(), needed: n as u128, bound: self.n_max as u128 });
        }
        Ok(())
    }

    /// G_n(G,H) and its character table, computed once (or read from the cache).
    pub fn degree(&self, n: usize) -> Result<Arc<Degree>> {
        self.check_degree(n)?;
        if let Some(d) = self.degrees.lock().unwrap().get(&n) {
            return Ok(d.clone());
        }
        let group = RestrictedWreathGroup::new(&self.subgroup, n, self.budget)?;
        let words: Vec<String> = (0..group.class_count()).map(|c| group.group().representative(c).word()).collect();
        let cached =
            self.cache.as_ref().and_then(|c| c.load_table(&self.descriptor, n)).filter(|f| {
                f.representatives == words && f.class_sizes == group.group().classes().sizes && f.order == group.order() as u64
            });
        let (table, from_cache) = match cached.map(|f| f.to_table()) {
            Some(Ok(t)) => (t, true),
            other => {
                if let Some(Err(e)) = other {
                    log::warn!("discarding cache entry for degree {n}: {e}");
                }
                let t = character_table(&ClassStructure::from_group(group.group()))?;
                if let Some(c) = &self.cache {
                    c.store_table(&CharTableFile::new(&self.descriptor, n, words, &t))?;
                }
                (t, false)
            }
        };
        let d = Arc::new(Degree { group, table, from_cache });
        Ok(self.degrees.lock().unwrap().entry(n).or_insert(d).clone())
    }

    pub fn dimension(&self, n: usize) -> Result<usize> {
        Ok(self.degree(n)?.table.len())
    }

    pub fn basis(&self, n: usize) -> Result<Vec<Basis>> {
        Ok((0..self.dimension(n)?).map(|i| Basis::new(n, i)).collect())
    }

    pub fn check_basis(&self, b: Basis) -> Result<()> {
        let dim = self.dimension(b.degree)?;
        if b.index >= dim {
            return Err(usage(format!("basis element {b} does not exist: degree {} has {dim} irreducibles", b.degree)));
        }
        Ok(())
    }

    /// Product table of G_k × G_l and its class fusion into G_{k+l}.
    pub fn block_fusion(&self, k: usize, l: usize) -> Result<Arc<BlockFusion>> {
        if let Some(f) = self.fusions.lock().unwrap().get(&(k, l)) {
            return Ok(f.clone());
        }
        let (dk, dl, dn) = (self.degree(k)?, self.degree(l)?, self.degree(k + l)?);
        let prod = dk.table.tensor(&dl.table);
        let mut map = Vec::with_capacity(prod.geometry().class_count());
        for a in 0..dk.group.class_count() {
            for b in 0..dl.group.class_count() {
                let e = block_embed(&[dk.group.group().representative(a), dl.group.group().representative(b)], &[k, l])?;
                map.push(dn.group.class_of(&e).ok_or_else(|| Error::Internal("block embedding left the group".into()))?);
            }
        }
        let fusion = Fusion::new(prod.geometry().clone(), dn.geometry().clone(), map)?;
        let entry = Arc::new((prod, fusion));
        Ok(self.fusions.lock().unwrap().entry((k, l)).or_insert(entry).clone())
    }

    /// Structure constants of m_{k,l}, by induction from G_k × G_l.
    pub fn structure_constants(&self, k: usize, l: usize) -> Result<Arc<StructureConstants>> {
        self.check_degree(k + l)?;
        if let Some(s) = self.products.lock().unwrap().get(&(k, l)) {
            return Ok(s.clone());
        }
        let (dk, dl, dn) = (self.degree(k)?, self.degree(l)?, self.degree(k + l)?);
        let labels =
            BasisLabels { left: dk.table.degrees().to_vec(), right: dl.table.degrees().to_vec(), product: dn.table.degrees().to_vec() };
        let dims = [dk.table.len(), dl.table.len(), dn.table.len()];
        let cached = self
            .cache
            .as_ref()
            .and_then(|c| c.load_slab(&self.descriptor, k, l))
            .filter(|f| f.basis_labels == labels && f.constants.len() == dims[0])
            .and_then(|f| {
                let flat: Vec<i64> = f.constants.into_iter().flatten().flatten().collect();
                (flat.len() == dims.iter().product::<usize>()).then_some(flat)
            });
        let data = match cached {
            Some(d) => d,
            None => {
                let fusion = self.block_fusion(k, l)?;
                let (prod, fusion) = (&fusion.0, &fusion.1);
                let rows: Vec<Vec<i64>> = (0..dims[0] * dims[1])
                    .into_par_iter()
                    .map(|ij| dn.table.decompose(&fusion.induce(prod.irreducible(ij))?))
                    .collect::<Result<_>>()?;
                let data: Vec<i64> = rows.into_iter().flatten().collect();
                if let Some(c) = &self.cache {
                    let s = StructureConstants { k, l, dims, data: data.clone() };
                    c.store_slab(&SlabFile {
                        format_version: FORMAT_VERSION,
                        kind: "structure_constants".into(),
                        descriptor: self.descriptor.clone(),
                        descriptor_hash: self.descriptor.hash_hex(),
                        k,
                        l,
                        basis_labels: labels,
                        constants: s.to_nested(),
                    })?;
                }
                data
            }
        };
        let s = Arc::new(StructureConstants { k, l, dims, data });
        Ok(self.products.lock().unwrap().entry((k, l)).or_insert(s).clone())
    }

    fn restrictions(&self, k: usize, l: usize) -> Result<Arc<Restrictions>> {
        if let Some(r) = self.restrictions.lock().unwrap().get(&(k, l)) {
            return Ok(r.clone());
        }
        let dn = self.degree(k + l)?;
        let fusion = self.block_fusion(k, l)?;
        let (prod, fusion) = (&fusion.0, &fusion.1);
        let rows: Vec<Vec<i64>> = (0..dn.table.len())
            .into_par_iter()
            .map(|t| prod.decompose(&fusion.restrict(dn.table.irreducible(t))?))
            .collect::<Result<_>>()?;
        let dims = [self.dimension(k)?, self.dimension(l)?, dn.table.len()];
        let r = Arc::new(Restrictions { dims, data: rows.into_iter().flatten().collect() });
        Ok(self.restrictions.lock().unwrap().entry((k, l)).or_insert(r).clone())
    }

    fn check_vector(&self, a: &GradedVector) -> Result<()> {
        for (b, _) in a.terms() {
            self.check_basis(b)?;
        }
        Ok(())
    }

    /// Induction product m.
    pub fn product(&self, a: &GradedVector, b: &GradedVector) -> Result<GradedVector> {
        self.check_vector(a)?;
        self.check_vector(b)?;
        let mut out = GradedVector::zero();
        for (x, cx) in a.terms() {
            for (y, cy) in b.terms() {
                let s = self.structure_constants(x.degree, y.degree)?;
                for (t, &c) in s.row(x.index, y.index).iter().enumerate() {
                    out.add_term(Basis::new(x.degree + y.degree, t), cx * cy * c);
                }
            }
        }
        Ok(out)
    }

    /// Iterated product in the given order; the empty product is the unit.
    pub fn product_all(&self, factors: &[GradedVector]) -> Result<GradedVector> {
        factors.iter().try_fold(GradedVector::unit(), |acc, f| self.product(&acc, f))
    }

    /// Restriction coproduct m*, including the unit ⊗ a and a ⊗ unit terms.
    pub fn coproduct(&self, a: &GradedVector) -> Result<TensorVector> {
        self.check_vector(a)?;
        let mut out = TensorVector::zero();
        for (t, ct) in a.terms() {
            let n = t.degree;
            for k in 0..=n {
                let r = self.restrictions(k, n - k)?;
                for i in 0..r.dims[0] {
                    for j in 0..r.dims[1] {
                        let c = r.get(t.index, i, j);
                        if c != 0 {
                            out.add_term(vec![Basis::new(k, i), Basis::new(n - k, j)], ct * c);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// m-fold iterated coproduct (m ≥ 1), splitting off the first factor each time.
    pub fn iterated_coproduct(&self, a: &GradedVector, m: usize) -> Result<TensorVector> {
        if m == 0 {
            return Err(usage("iterated coproduct needs at least one factor"));
        }
        let mut acc = TensorVector::zero();
        for (b, c) in a.terms() {
            acc.add_term(vec![b], c);
        }
        for _ in 1..m {
            let mut next = TensorVector::zero();
            for (parts, c) in acc.terms() {
                let (last, head) = parts.split_last().expect("nonempty tuple");
                for (pair, d) in self.coproduct(&GradedVector::basis(*last))?.terms() {
                    let mut p = head.to_vec();
                    p.extend_from_slice(pair);
                    next.add_term(p, c * d);
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    /// Graded pairing, validating basis labels.
    pub fn pairing(&self, a: &GradedVector, b: &GradedVector) -> Result<i64> {
        self.check_vector(a)?;
        self.check_vector(b)?;
        Ok(a.pairing(b))
    }

    /// Counit: the degree-0 coefficient.
    pub fn counit(&self, a: &GradedVector) -> i64 {
        a.coeff(Basis::UNIT)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym() -> TowerContext {
        TowerContext::new(GroupDescriptor::new(vec![], vec![]), 4).unwrap()
    }

    fn e(n: usize, i: usize) -> GradedVector {
        GradedVector::basis(Basis::new(n, i))
    }

    #[test]
    fn symmetric_group_tower() {
        let r = sym();
        let dims: Vec<usize> = (0..=4).map(|n| r.dimension(n).unwrap()).collect();
        assert_eq!(dims, vec![1, 1, 2, 3, 5]);
        // [triv S1]·[triv S1] = [triv S2] + [sign S2]
        let sq = r.product(&e(1, 0), &e(1, 0)).unwrap();
        assert_eq!(sq, e(2, 0).add(&e(2, 1)));
        let s = r.structure_constants(1, 1).unwrap();
        assert_eq!(s.dims, [1, 1, 2]);
        assert_eq!(s.entries(), &[1, 1]);
    }

    #[test]
    fn unit_laws() {
        let r = sym();
        for n in 0..=3 {
            for b in r.basis(n).unwrap() {
                let x = GradedVector::basis(b);
                assert_eq!(r.product(&GradedVector::unit(), &x).unwrap(), x);
                assert_eq!(r.product(&x, &GradedVector::unit()).unwrap(), x);
            }
        }
        let s = r.structure_constants(0, 3).unwrap();
        for i in 0..s.dims[1] {
            for t in 0..s.dims[2] {
                assert_eq!(s.get(0, i, t), i64::from(i == t));
            }
        }
        let cop = r.coproduct(&GradedVector::unit()).unwrap();
        assert_eq!(cop, TensorVector::pure(vec![Basis::UNIT, Basis::UNIT]));
    }

    #[test]
    fn coproduct_of_trivial_s2() {
        let r = sym();
        let d2 = r.degree(2).unwrap();
        let triv = (0..d2.table.len()).find(|&i| d2.table.irreducible(i) == &d2.table.trivial_character()).unwrap();
        let cop = r.coproduct(&e(2, triv)).unwrap();
        let mut expected = TensorVector::zero();
        expected.add_term(vec![Basis::new(2, triv), Basis::UNIT], 1);
        expected.add_term(vec![Basis::new(1, 0), Basis::new(1, 0)], 1);
        expected.add_term(vec![Basis::UNIT, Basis::new(2, triv)], 1);
        assert_eq!(cop, expected);
    }

    #[test]
    fn degree_overflow_is_resource_error() {
        let r = TowerContext::new(GroupDescriptor::new(vec![], vec![]), 2).unwrap();
        assert!(matches!(r.product(&e(2, 0), &e(1, 0)), Err(Error::Resource { .. })));
        assert!(matches!(r.product(&e(1, 3), &e(1, 0)), Err(Error::Usage(_))));
    }

    #[test]
    fn degree_sums_under_induction() {
        let r = TowerContext::new(GroupDescriptor::new(vec![4], vec![vec![2]]), 3).unwrap();
        for (k, l) in [(1, 1), (1, 2), (2, 1)] {
            let s = r.structure_constants(k, l).unwrap();
            let (dk, dl, dn) = (r.degree(k).unwrap(), r.degree(l).unwrap(), r.degree(k + l).unwrap());
            let index = (dn.group.order() / (dk.group.order() * dl.group.order())) as i64;
            for i in 0..s.dims[0] {
                for j in 0..s.dims[1] {
                    let total: i64 = (0..s.dims[2]).map(|t| s.get(i, j, t) * dn.table.degrees()[t] as i64).sum();
                    assert_eq!(total, index * (dk.table.degrees()[i] * dl.table.degrees()[j]) as i64);
                }
            }
        }
    }

    #[test]
    fn labels_parse() {
        assert_eq!("2:3".parse::<Basis>().unwrap(), Basis::new(2, 3));
        assert!("2".parse::<Basis>().is_err());
        assert_eq!(Basis::new(1, 0).to_string(), "1:0");
    }

    #[test]
    fn vector_algebra() {
        let a = e(1, 0).scale(2).add(&e(2, 1));
        assert_eq!(a.pairing(&a), 5);
        assert!(a.is_positive());
        assert!(!a.sub(&e(2, 1).scale(2)).is_nonnegative());
        assert_eq!(a.sub(&a), GradedVector::zero());
        assert_eq!(e(1, 0).as_irreducible(), Some(Basis::new(1, 0)));
        assert_eq!(a.as_irreducible(), None);
    }
}
