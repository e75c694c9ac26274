//! Exact complex character tables, inner products, induction and restriction.

mod dixon;

pub use dixon::{character_table, ClassStructure};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::{Cyclotomic, Rational};
use crate::error::{usage, Error, Result};

/// Order and class sizes: all the inner product needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGeometry {
    pub order: u64,
    pub sizes: Vec<u64>,
}

impl ClassGeometry {
    pub fn class_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn product(&self, other: &Self) -> Self {
        ClassGeometry {
            order: self.order * other.order,
            sizes: self.sizes.iter().flat_map(|a| other.sizes.iter().map(move |b| a * b)).collect(),
        }
    }
}

/// One value per conjugacy class, in the owner's class order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassFunction(Vec<Cyclotomic>);

impl ClassFunction {
    pub fn new(values: Vec<Cyclotomic>) -> Self {
        ClassFunction(values)
    }

    pub fn constant(classes: usize, conductor: u32, value: i64) -> Self {
        ClassFunction(vec![Cyclotomic::from_int(conductor, value); classes])
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value at the identity class (class 0).
    pub fn degree(&self) -> Option<Rational> {
        self.0.first().and_then(Cyclotomic::to_rational)
    }

    pub fn conductor(&self) -> u32 {
        self.0.first().map_or(1, Cyclotomic::conductor)
    }

    pub fn embed(&self, conductor: u32) -> Result<Self> {
        self.0.iter().map(|v| v.embed(conductor)).collect::<Result<_>>().map(ClassFunction)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Cyclotomic::is_zero)
    }

    /// Pointwise product, embedding both into a common conductor.
    pub fn pointwise_mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = common_field(self, other)?;
        Ok(ClassFunction(a.0.iter().zip(&b.0).map(|(x, y)| x * y).collect()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let (a, b) = common_field(self, other)?;
        Ok(ClassFunction(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect()))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        ClassFunction(self.0.iter().map(|v| v.scale(k)).collect())
    }

    pub fn conj(&self) -> Self {
        ClassFunction(self.0.iter().map(Cyclotomic::conj).collect())
    }
}

fn common_field(a: &ClassFunction, b: &ClassFunction) -> Result<(ClassFunction, ClassFunction)> {
    if a.len() != b.len() {
        return Err(usage(format!("class functions on {} and {} classes", a.len(), b.len())));
    }
    let e = a.conductor().lcm(&b.conductor());
    Ok((a.embed(e)?, b.embed(e)?))
}

/// (1/|Γ|) Σ_C |C|·χ(C)·conj(ψ(C)), as a cyclotomic number.
pub fn inner_product_cyclotomic(geom: &ClassGeometry, chi: &ClassFunction, psi: &ClassFunction) -> Result<Cyclotomic> {
    if chi.len() != geom.class_count() || psi.len() != geom.class_count() {
        return Err(usage("class function does not belong to this group"));
    }
    let (a, b) = common_field(chi, psi)?;
    let mut acc = Cyclotomic::zero(a.conductor());
    for ((x, y), &h) in a.0.iter().zip(&b.0).zip(&geom.sizes) {
        let term = x * &y.conj();
        acc = &acc + &term.scale(&Rational::from_integer(h.into()));
    }
    Ok(acc.scale(&Rational::new(1.into(), geom.order.into())))
}

/// The usual pairing; fails if the result is not rational (inputs not Galois-stable).
pub fn inner_product(geom: &ClassGeometry, chi: &ClassFunction, psi: &ClassFunction) -> Result<Rational> {
    inner_product_cyclotomic(geom, chi, psi)?.to_rational().ok_or_else(|| usage("inner product is not rational"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    geometry: ClassGeometry,
    conductor: u32,
    irreducibles: Vec<ClassFunction>,
    degrees: Vec<u64>,
    /// |C|·conj(χᵢ(C)), cached for decomposition.
    weighted_conj: Vec<ClassFunction>,
}

impl CharacterTable {
    /// Assembles a table from rows, sorting them by degree then by values.
    pub fn from_rows(geometry: ClassGeometry, conductor: u32, mut rows: Vec<ClassFunction>) -> Result<Self> {
        let mut keyed = Vec::with_capacity(rows.len());
        for row in rows.drain(..) {
            if row.len() != geometry.class_count() {
                return Err(usage("row length differs from class count"));
            }
            let row = row.embed(conductor)?;
            let degree = row
                .degree()
                .and_then(|d| d.to_integer().to_u64())
                .ok_or_else(|| Error::Internal("character degree is not a positive integer".into()))?;
            keyed.push((degree, row));
        }
        keyed.sort();
        Ok(Self::assemble(geometry, conductor, keyed))
    }

    /// Assembles a table without reordering (used for product tables whose
    /// rows are indexed by pairs).
    fn assemble(geometry: ClassGeometry, conductor: u32, rows: Vec<(u64, ClassFunction)>) -> Self {
        let (degrees, irreducibles): (Vec<u64>, Vec<ClassFunction>) = rows.into_iter().unzip();
        let weighted_conj = irreducibles
            .iter()
            .map(|chi| {
                ClassFunction(chi.0.iter().zip(&geometry.sizes).map(|(v, &h)| v.conj().scale(&Rational::from_integer(h.into()))).collect())
            })
            .collect();
        CharacterTable { geometry, conductor, irreducibles, degrees, weighted_conj }
    }

    /// Rebuilds a table from stored rows in the given order, e.g. after loading a cache file.
    pub fn from_stored(geometry: ClassGeometry, conductor: u32, rows: Vec<ClassFunction>) -> Result<Self> {
        let mut keyed = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != geometry.class_count() {
                return Err(usage("row length differs from class count"));
            }
            let row = row.embed(conductor)?;
            let degree = row.degree().and_then(|d| d.to_integer().to_u64()).unwrap_or(0);
            keyed.push((degree, row));
        }
        Ok(Self::assemble(geometry, conductor, keyed))
    }

    pub fn geometry(&self) -> &ClassGeometry {
        &self.geometry
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn irreducible(&self, i: usize) -> &ClassFunction {
        &self.irreducibles[i]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn inner_product(&self, chi: &ClassFunction, psi: &ClassFunction) -> Result<Rational> {
        inner_product(&self.geometry, chi, psi)
    }

    /// Coordinates ⟨χ, χᵢ⟩ over the irreducibles; each must be an integer and the
    /// reconstruction must reproduce χ.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Vec<i64>> {
        if chi.len() != self.geometry.class_count() {
            return Err(usage("class function does not belong to this group"));
        }
        let e = self.conductor.lcm(&chi.conductor());
        let chi_e = chi.embed(e)?;
        let order = BigInt::from(self.geometry.order);
        let mut coeffs = Vec::with_capacity(self.len());
        for w in &self.weighted_conj {
            let w = w.embed(e)?;
            let mut acc = Cyclotomic::zero(e);
            for (x, y) in chi_e.0.iter().zip(&w.0) {
                if !x.is_zero() {
                    acc = &acc + &(x * y);
                }
            }
            let q = acc.to_rational().ok_or_else(|| Error::NotVirtualCharacter(format!("{acc}")))?;
            let q = q / Rational::from_integer(order.clone());
            if !q.is_integer() {
                return Err(Error::NotVirtualCharacter(q.to_string()));
            }
            coeffs.push(q.to_integer().to_i64().ok_or_else(|| Error::Internal("coefficient overflow".into()))?);
        }
        let mut recon = ClassFunction::constant(chi.len(), e, 0);
        for (c, row) in coeffs.iter().zip(&self.irreducibles) {
            if *c != 0 {
                recon = recon.add(&row.scale(&Rational::from_integer((*c).into())))?;
            }
        }
        if recon.embed(e)? != chi_e {
            return Err(Error::Internal("decomposition does not reconstruct the class function".into()));
        }
        Ok(coeffs)
    }

    /// Σ cᵢ χᵢ.
    pub fn combine(&self, coeffs: &[i64]) -> Result<ClassFunction> {
        if coeffs.len() != self.len() {
            return Err(usage("coefficient vector has the wrong length"));
        }
        let mut acc = ClassFunction::constant(self.geometry.class_count(), self.conductor, 0);
        for (c, row) in coeffs.iter().zip(&self.irreducibles) {
            if *c != 0 {
                acc = acc.add(&row.scale(&Rational::from_integer((*c).into())))?;
            }
        }
        Ok(acc)
    }

    pub fn regular_character(&self) -> ClassFunction {
        let mut values = vec![Cyclotomic::zero(self.conductor); self.geometry.class_count()];
        values[0] = Cyclotomic::from_int(self.conductor, self.geometry.order as i64);
        ClassFunction(values)
    }

    pub fn trivial_character(&self) -> ClassFunction {
        ClassFunction::constant(self.geometry.class_count(), self.conductor, 1)
    }

    /// First failing pair (i, j, ⟨χᵢ,χⱼ⟩) of row orthonormality, if any.
    pub fn orthogonality_failure(&self) -> Option<(usize, usize, String)> {
        for i in 0..self.len() {
            for j in i..self.len() {
                let expected = Cyclotomic::from_int(self.conductor, i64::from(i == j));
                match inner_product_cyclotomic(&self.geometry, &self.irreducibles[i], &self.irreducibles[j]) {
                    Ok(v) if v == expected => {}
                    Ok(v) => return Some((i, j, v.to_string())),
                    Err(e) => return Some((i, j, e.to_string())),
                }
            }
        }
        None
    }

    /// First failing pair of column orthogonality: Σᵢ χᵢ(C)·conj(χᵢ(D)) = δ·|Γ|/|C|.
    pub fn column_orthogonality_failure(&self) -> Option<(usize, usize)> {
        let r = self.geometry.class_count();
        for c in 0..r {
            for d in c..r {
                let mut acc = Cyclotomic::zero(self.conductor);
                for chi in &self.irreducibles {
                    acc = &acc + &(&chi.0[c] * &chi.0[d].conj());
                }
                let expected = if c == d { (self.geometry.order / self.geometry.sizes[c]) as i64 } else { 0 };
                if acc != Cyclotomic::from_int(self.conductor, expected) {
                    return Some((c, d));
                }
            }
        }
        None
    }

    /// Σ deg² = |Γ|, every degree divides |Γ|, and #irreducibles = #classes.
    pub fn degree_checks(&self) -> bool {
        let n = self.geometry.order;
        self.len() == self.geometry.class_count()
            && self.degrees.iter().map(|d| d * d).sum::<u64>() == n
            && self.degrees.iter().all(|&d| d > 0 && n.is_multiple_of(d))
    }

    /// Table of the direct product: classes and characters indexed by pairs (a, b) ↦ a·|B| + b.
    pub fn tensor(&self, other: &Self) -> CharacterTable {
        let e = self.conductor.lcm(&other.conductor);
        let geometry = self.geometry.product(&other.geometry);
        let mut rows = Vec::with_capacity(self.len() * other.len());
        for (x, dx) in self.irreducibles.iter().zip(&self.degrees) {
            let x = x.embed(e).expect("lcm conductor");
            for (y, dy) in other.irreducibles.iter().zip(&other.degrees) {
                let y = y.embed(e).expect("lcm conductor");
                let values = x.0.iter().flat_map(|u| y.0.iter().map(move |v| u * v)).collect();
                rows.push((dx * dy, ClassFunction(values)));
            }
        }
        Self::assemble(geometry, e, rows)
    }
}

/// Class fusion of a subgroup K ⊂ Γ: which Γ-class each K-class lands in.
#[derive(Debug, Clone)]
pub struct Fusion {
    pub sub: ClassGeometry,
    pub over: ClassGeometry,
    pub map: Vec<usize>,
}

impl Fusion {
    pub fn new(sub: ClassGeometry, over: ClassGeometry, map: Vec<usize>) -> Result<Self> {
        if map.len() != sub.class_count() || map.iter().any(|&c| c >= over.class_count()) {
            return Err(usage("fusion map does not match class counts"));
        }
        if !over.order.is_multiple_of(sub.order) {
            return Err(usage("subgroup order does not divide group order"));
        }
        Ok(Fusion { sub, over, map })
    }

    pub fn index(&self) -> u64 {
        self.over.order / self.sub.order
    }

    /// (Ind χ)(C) = |Γ|/(|K|·|C|) · Σ_{D ⊂ C} |D|·χ(D).
    pub fn induce(&self, chi: &ClassFunction) -> Result<ClassFunction> {
        if chi.len() != self.sub.class_count() {
            return Err(usage("class function does not live on the subgroup"));
        }
        let e = chi.conductor();
        let mut sums = vec![Cyclotomic::zero(e); self.over.class_count()];
        for ((v, &c), &h) in chi.0.iter().zip(&self.map).zip(&self.sub.sizes) {
            if !v.is_zero() {
                sums[c] = &sums[c] + &v.scale(&Rational::from_integer(h.into()));
            }
        }
        let values = sums
            .into_iter()
            .zip(&self.over.sizes)
            .map(|(s, &hc)| if s.is_zero() { s } else { s.scale(&Rational::new(self.over.order.into(), (self.sub.order * hc).into())) })
            .collect();
        Ok(ClassFunction(values))
    }

    pub fn restrict(&self, psi: &ClassFunction) -> Result<ClassFunction> {
        if psi.len() != self.over.class_count() {
            return Err(usage("class function does not live on the overgroup"));
        }
        Ok(ClassFunction(self.map.iter().map(|&c| psi.0[c].clone()).collect()))
    }
}

/// Class function from integer values (for permutation characters and tests).
pub fn integer_class_function(conductor: u32, values: &[i64]) -> ClassFunction {
    ClassFunction(values.iter().map(|&v| Cyclotomic::from_int(conductor, v)).collect())
}
