//! Maps between the towers R(G/H,1) and R(G,H): twists τ_l, inflation φ*,
//! Φ_l = τ_l ∘ φ*, its adjoint Ψ_l, and the products Φ, Ψ over H*.

mod verify;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::abelian::{dual_group, GroupDescriptor, LinearCharacter, QuotientMap};
use crate::arith::{Cyclotomic, Rational};
use crate::bialgebra::{Basis, GradedVector, TensorVector, TowerContext};
use crate::cache::Cache;
use crate::chartab::ClassFunction;
use crate::error::{usage, Error, Result};
use crate::group::GroupLaw;
use crate::wreath::{block_embed, reduce_mod_h, DEFAULT_BUDGET};
use num_integer::Integer;

pub use verify::{bialgebra_suite, full_verification, CheckResult, TowerMapReport, VerifyOptions};

/// Degrees λ_l indexed by H* in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaTuple(pub Vec<usize>);

impl LambdaTuple {
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// l(λ): the number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|&&x| x > 0).count()
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Nonzero parts in H* order: the block composition of G_λ.
    pub fn composition(&self) -> Vec<usize> {
        self.0.iter().copied().filter(|&x| x > 0).collect()
    }

    /// All tuples of `slots` entries with sum `n`, in lexicographic order.
    pub fn all(slots: usize, n: usize) -> Vec<LambdaTuple> {
        fn rec(slots: usize, n: usize, prefix: &mut Vec<usize>, out: &mut Vec<LambdaTuple>) {
            if prefix.len() + 1 == slots {
                prefix.push(n);
                out.push(LambdaTuple(prefix.clone()));
                prefix.pop();
                return;
            }
            for k in 0..=n {
                prefix.push(k);
                rec(slots, n - k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if slots == 0 {
            if n == 0 {
                out.push(LambdaTuple(Vec::new()));
            }
            return out;
        }
        rec(slots, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for LambdaTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
    }
}

/// A λ-tuple together with one irreducible of G_{λ_l}(G/H,1) per slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledTuple {
    pub lambda: LambdaTuple,
    pub factors: Vec<Basis>,
}

impl fmt::Display for LabeledTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(Basis::to_string).collect();
        write!(f, "{}[{}]", self.lambda, parts.join(","))
    }
}

type Images = Arc<Vec<GradedVector>>;

/// A labeled tuple and the multiplicity of an irreducible in its Φ-image.
pub type Witness = (LabeledTuple, i64);

/// The pair of towers R(G,H) and R(G/H,1) with the maps between them.
pub struct TowerPair {
    full: TowerContext,
    quotient: TowerContext,
    quotient_map: QuotientMap,
    dual: Vec<LinearCharacter>,
    twists: Mutex<HashMap<(usize, usize), Images>>,
    inflations: Mutex<HashMap<usize, Images>>,
}

impl TowerPair {
    pub fn new(descriptor: GroupDescriptor, n_max: usize) -> Result<Self> {
        Self::build(descriptor, n_max, DEFAULT_BUDGET, None)
    }

    pub fn build(descriptor: GroupDescriptor, n_max: usize, budget: u128, cache: Option<Arc<Cache>>) -> Result<Self> {
        let mut full = TowerContext::new(descriptor, n_max)?.with_budget(budget);
        let quotient_map = QuotientMap::new(full.subgroup())?;
        let mut quotient = TowerContext::new(GroupDescriptor::for_quotient(&quotient_map), n_max)?.with_budget(budget);
        if let Some(c) = cache {
            full = full.with_cache(c.clone());
            quotient = quotient.with_cache(c);
        }
        let dual = dual_group(full.subgroup().structure());
        Ok(TowerPair { full, quotient, quotient_map, dual, twists: Mutex::new(HashMap::new()), inflations: Mutex::new(HashMap::new()) })
    }

    /// R(G,H).
    pub fn full(&self) -> &TowerContext {
        &self.full
    }

    /// R(G/H,1).
    pub fn quotient(&self) -> &TowerContext {
        &self.quotient
    }

    pub fn quotient_map(&self) -> &QuotientMap {
        &self.quotient_map
    }

    /// H* in canonical order; index 0 is the trivial character.
    pub fn dual(&self) -> &[LinearCharacter] {
        &self.dual
    }

    pub fn n_max(&self) -> usize {
        self.full.n_max()
    }

    /// [G:H].
    pub fn index(&self) -> usize {
        self.full.subgroup().index()
    }

    fn character(&self, l: usize) -> Result<&LinearCharacter> {
        self.dual.get(l).ok_or_else(|| usage(format!("H* has {} characters, no index {l}", self.dual.len())))
    }

    /// l̃(v,σ) = l(Σ vᵢ) on the classes of G_n(G,H).
    pub fn extension(&self, l: usize, n: usize) -> Result<ClassFunction> {
        let chi = self.character(l)?;
        let d = self.full.degree(n)?;
        let h = self.full.subgroup();
        let values = (0..d.group.class_count())
            .map(|c| {
                let s = d.group.sum(d.group.group().representative(c));
                let coords = h.coordinates(&s).ok_or_else(|| Error::Internal("color sum outside H".into()))?;
                Ok(chi.value(coords))
            })
            .collect::<Result<_>>()?;
        Ok(ClassFunction::new(values))
    }

    /// τ_l on each irreducible of degree n.
    pub fn twist_images(&self, l: usize, n: usize) -> Result<Images> {
        if let Some(t) = self.twists.lock().unwrap().get(&(l, n)) {
            return Ok(t.clone());
        }
        let ext = self.extension(l, n)?;
        let d = self.full.degree(n)?;
        let images = d
            .table
            .irreducibles()
            .iter()
            .map(|chi| {
                let coeffs = d.table.decompose(&chi.pointwise_mul(&ext)?)?;
                Ok(coeffs.into_iter().enumerate().map(|(i, c)| (Basis::new(n, i), c)).collect())
            })
            .collect::<Result<Vec<GradedVector>>>()?;
        let images = Arc::new(images);
        Ok(self.twists.lock().unwrap().entry((l, n)).or_insert(images).clone())
    }

    pub fn twist(&self, l: usize, a: &GradedVector) -> Result<GradedVector> {
        let mut out = GradedVector::zero();
        for (b, c) in a.terms() {
            self.full.check_basis(b)?;
            out = out.add(&self.twist_images(l, b.degree)?[b.index].scale(c));
        }
        Ok(out)
    }

    /// φ* on each irreducible of G_n(G/H,1).
    pub fn inflation_images(&self, n: usize) -> Result<Images> {
        if let Some(t) = self.inflations.lock().unwrap().get(&n) {
            return Ok(t.clone());
        }
        let (d, dq) = (self.full.degree(n)?, self.quotient.degree(n)?);
        let class_map = (0..d.group.class_count())
            .map(|c| {
                let img = reduce_mod_h(&self.quotient_map, d.group.group().representative(c));
                dq.group.class_of(&img).ok_or_else(|| Error::Internal("reduction left G_n(G/H,1)".into()))
            })
            .collect::<Result<Vec<usize>>>()?;
        let images = dq
            .table
            .irreducibles()
            .iter()
            .map(|chi| {
                let pulled = ClassFunction::new(class_map.iter().map(|&c| chi.values()[c].clone()).collect());
                let coeffs = d.table.decompose(&pulled)?;
                Ok(coeffs.into_iter().enumerate().map(|(i, c)| (Basis::new(n, i), c)).collect())
            })
            .collect::<Result<Vec<GradedVector>>>()?;
        let images = Arc::new(images);
        Ok(self.inflations.lock().unwrap().entry(n).or_insert(images).clone())
    }

    /// φ*: R(G/H,1) → R(G,H).
    pub fn inflate(&self, a: &GradedVector) -> Result<GradedVector> {
        let mut out = GradedVector::zero();
        for (b, c) in a.terms() {
            self.quotient.check_basis(b)?;
            out = out.add(&self.inflation_images(b.degree)?[b.index].scale(c));
        }
        Ok(out)
    }

    /// Φ_l = τ_l ∘ φ*.
    pub fn phi_l(&self, l: usize, a: &GradedVector) -> Result<GradedVector> {
        self.twist(l, &self.inflate(a)?)
    }

    /// Φ_l on every irreducible of degree n.
    pub fn phi_l_images(&self, l: usize, n: usize) -> Result<Vec<GradedVector>> {
        self.quotient.basis(n)?.into_iter().map(|b| self.phi_l(l, &GradedVector::basis(b))).collect()
    }

    /// Ψ_l, the adjoint of Φ_l: the coefficient of ρ in Ψ_l(π) is ⟨π, Φ_l(ρ)⟩.
    pub fn psi_l(&self, l: usize, a: &GradedVector) -> Result<GradedVector> {
        let mut by_degree: BTreeMap<usize, Vec<GradedVector>> = BTreeMap::new();
        let mut out = GradedVector::zero();
        for (b, c) in a.terms() {
            self.full.check_basis(b)?;
            if let std::collections::btree_map::Entry::Vacant(e) = by_degree.entry(b.degree) {
                e.insert(self.phi_l_images(l, b.degree)?);
            }
            for (i, img) in by_degree[&b.degree].iter().enumerate() {
                out.add_term(Basis::new(b.degree, i), c * img.coeff(b));
            }
        }
        Ok(out)
    }

    /// Φ(x) = ∏_l Φ_l(x_l), one factor per character of H in canonical order.
    pub fn big_phi(&self, factors: &[GradedVector]) -> Result<GradedVector> {
        if factors.len() != self.dual.len() {
            return Err(usage(format!("Φ takes {} factors, got {}", self.dual.len(), factors.len())));
        }
        let images = factors.iter().enumerate().map(|(l, x)| self.phi_l(l, x)).collect::<Result<Vec<_>>>()?;
        self.full.product_all(&images)
    }

    /// Φ extended linearly to the tensor power.
    pub fn big_phi_tensor(&self, t: &TensorVector) -> Result<GradedVector> {
        let mut out = GradedVector::zero();
        for (parts, c) in t.terms() {
            let factors: Vec<GradedVector> = parts.iter().map(|&b| GradedVector::basis(b)).collect();
            out = out.add(&self.big_phi(&factors)?.scale(c));
        }
        Ok(out)
    }

    /// Ψ = (⊗_l Ψ_l) ∘ iterated coproduct.
    pub fn big_psi(&self, a: &GradedVector) -> Result<TensorVector> {
        let m = self.dual.len();
        let split = self.full.iterated_coproduct(a, m)?;
        let mut out = TensorVector::zero();
        let mut memo: HashMap<(usize, Basis), GradedVector> = HashMap::new();
        for (parts, c) in split.terms() {
            let mut factors = Vec::with_capacity(m);
            for (l, &b) in parts.iter().enumerate() {
                if let std::collections::hash_map::Entry::Vacant(e) = memo.entry((l, b)) {
                    e.insert(self.psi_l(l, &GradedVector::basis(b))?);
                }
                factors.push(memo[&(l, b)].clone());
            }
            for (p, d) in TensorVector::from_factors(&factors).terms() {
                out.add_term(p.clone(), c * d);
            }
        }
        Ok(out)
    }

    /// Every labeled tuple (λ, (π_l)) with |λ| = n.
    pub fn labeled_tuples(&self, n: usize) -> Result<Vec<LabeledTuple>> {
        let mut out = Vec::new();
        for lambda in LambdaTuple::all(self.dual.len(), n) {
            let mut choices: Vec<Vec<Basis>> = vec![Vec::new()];
            for &k in lambda.parts() {
                let basis = self.quotient.basis(k)?;
                choices = choices
                    .into_iter()
                    .flat_map(|prefix| {
                        basis.iter().map(move |&b| {
                            let mut p = prefix.clone();
                            p.push(b);
                            p
                        })
                    })
                    .collect();
            }
            out.extend(choices.into_iter().map(|factors| LabeledTuple { lambda: lambda.clone(), factors }));
        }
        Ok(out)
    }

    /// Φ(π_λ) for a labeled tuple.
    pub fn phi_of(&self, t: &LabeledTuple) -> Result<GradedVector> {
        let factors: Vec<GradedVector> = t.factors.iter().map(|&b| GradedVector::basis(b)).collect();
        self.big_phi(&factors)
    }

    /// The value [G:H]^{l(λ)−1} predicted for ⟨Φ(π_λ), Φ(π_λ)⟩; 1 for the empty tuple.
    pub fn predicted_norm(&self, lambda: &LambdaTuple) -> i64 {
        (self.index() as i64).pow(lambda.length().saturating_sub(1) as u32)
    }

    /// ⟨Res_{H^n} π, l^{⊗n}⟩, summed over the color subgroup H^n ⊂ G_n(G,H).
    pub fn color_multiplicity(&self, l: usize, pi: Basis) -> Result<i64> {
        self.full.check_basis(pi)?;
        let n = pi.degree;
        let chi = self.character(l)?;
        let d = self.full.degree(n)?;
        let h = self.full.subgroup();
        let law = d.group.law();
        let identity: Vec<u8> = (0..n as u8).collect();
        let hn_order = h.order().pow(n as u32);
        let e = d.table.conductor().lcm(&chi.conductor());
        let mut acc = Cyclotomic::zero(e);
        let mut digits = vec![0usize; n];
        for _ in 0..hn_order {
            let colors: Vec<_> = digits.iter().map(|&i| h.elements()[i].clone()).collect();
            let g = law.make(&colors, &identity)?;
            let class = d.group.class_of(&g).ok_or_else(|| Error::Internal("color element outside G_n".into()))?;
            let coords = h.coordinates(&d.group.sum(&g)).ok_or_else(|| Error::Internal("color sum outside H".into()))?;
            let term = &d.table.irreducible(pi.index).values()[class].embed(e)? * &chi.value(coords).conj().embed(e)?;
            acc = &acc + &term;
            for digit in digits.iter_mut() {
                *digit += 1;
                if *digit < h.order() {
                    break;
                }
                *digit = 0;
            }
        }
        let q = acc.to_rational().ok_or_else(|| Error::NotVirtualCharacter(acc.to_string()))?
            / Rational::from_integer((hn_order as i64).into());
        if !q.is_integer() {
            return Err(Error::NotVirtualCharacter(q.to_string()));
        }
        i64::try_from(q.to_integer()).map_err(|_| Error::Internal("multiplicity overflow".into()))
    }

    /// Number of double cosets G_λ \ G_n / G_μ that contain an element with identity permutation.
    pub fn count_diagonal_double_cosets(&self, lambda: &LambdaTuple, mu: &LambdaTuple) -> Result<usize> {
        let n = lambda.degree();
        if mu.degree() != n {
            return Err(usage(format!("{lambda} and {mu} have different degrees")));
        }
        let d = self.full.degree(n)?;
        let group = d.group.group();
        let left = self.block_generators(&lambda.composition())?;
        let right = self.block_generators(&mu.composition())?;
        let law = d.group.law();
        let mut parent: Vec<usize> = (0..group.order()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (i, x) in group.elements().iter().enumerate() {
            let neighbours = left.iter().map(|a| law.mul(a, x)).chain(right.iter().map(|b| law.mul(x, b)));
            for y in neighbours {
                let j = group.index_of(&y).ok_or_else(|| Error::Internal("block subgroup left G_n".into()))?;
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
        let mut diagonal_roots: Vec<usize> = Vec::new();
        for (i, x) in group.elements().iter().enumerate() {
            if x.is_diagonal() {
                diagonal_roots.push(find(&mut parent, i));
            }
        }
        diagonal_roots.sort_unstable();
        diagonal_roots.dedup();
        Ok(diagonal_roots.len())
    }

    /// Generators of the block subgroup G_{k₁} × … × G_{k_r} ⊂ G_n(G,H).
    fn block_generators(&self, composition: &[usize]) -> Result<Vec<crate::wreath::WreathElement>> {
        let degrees = composition.iter().map(|&k| self.full.degree(k)).collect::<Result<Vec<_>>>()?;
        let identities: Vec<_> = degrees.iter().map(|d| d.group.law().identity()).collect();
        let mut gens = Vec::new();
        for (slot, d) in degrees.iter().enumerate() {
            for &g in d.group.group().generators() {
                let mut parts: Vec<&crate::wreath::WreathElement> = identities.iter().collect();
                parts[slot] = d.group.group().element(g);
                gens.push(block_embed(&parts, composition)?);
            }
        }
        Ok(gens)
    }

    /// For each irreducible of degree n, a labeled tuple t with ⟨π, Φ(t)⟩ > 0, if one exists.
    pub fn weak_surjectivity_scan(&self, n: usize) -> Result<Vec<(Basis, Option<Witness>)>> {
        let images = self.labeled_tuples(n)?.into_iter().map(|t| self.phi_of(&t).map(|img| (t, img))).collect::<Result<Vec<_>>>()?;
        Ok(self
            .full
            .basis(n)?
            .into_iter()
            .map(|pi| {
                let hit = images.iter().find(|(_, img)| img.coeff(pi) > 0).map(|(t, img)| (t.clone(), img.coeff(pi)));
                (pi, hit)
            })
            .collect())
    }
}

#[cfg(test)]
mod tests;
