//! Exhaustive verification of the tower-map identities, collected as data.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{LabeledTuple, LambdaTuple, TowerPair};
use crate::abelian::GroupDescriptor;
use crate::arith::smith_normal_form;
use crate::bialgebra::{Basis, GradedVector, TensorVector, TowerContext};
use crate::cache::FORMAT_VERSION;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub name: String,
    pub params: Value,
    pub passed: bool,
    /// Number of individual instances examined.
    pub cases: u64,
    /// First counterexample, if any.
    pub witness: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TowerMapReport {
    pub format_version: u32,
    pub kind: String,
    pub descriptor: GroupDescriptor,
    pub n_max: usize,
    pub index: usize,
    pub dual_size: usize,
    pub passed: bool,
    /// Distinct values of ⟨Φ(π_λ), Φ(π_λ)⟩ seen over all labeled tuples.
    pub phi_norms: Vec<i64>,
    pub checks: Vec<CheckResult>,
}

impl TowerMapReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Highest total degree for the algebra/coalgebra axioms; capped at n_max.
    pub bialgebra_degree: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { bialgebra_degree: usize::MAX }
    }
}

#[derive(Default)]
struct Tally {
    cases: u64,
    witness: Option<Value>,
}

impl Tally {
    fn case(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }
}

type CheckFn<'a> = Box<dyn Fn() -> Result<Tally> + Send + Sync + 'a>;

struct Check<'a> {
    id: &'static str,
    name: &'static str,
    params: Value,
    run: CheckFn<'a>,
}

impl<'a> Check<'a> {
    fn new(id: &'static str, name: &'static str, params: Value, run: impl Fn() -> Result<Tally> + Send + Sync + 'a) -> Self {
        Check { id, name, params, run: Box::new(run) }
    }

    fn execute(&self) -> Result<CheckResult> {
        let (cases, witness) = match (self.run)() {
            Ok(t) => (t.cases, t.witness),
            Err(e @ Error::Resource { .. }) => return Err(e),
            Err(e) => (0, Some(json!({ "error": e.to_string() }))),
        };
        Ok(CheckResult {
            id: self.id.into(),
            name: self.name.into(),
            params: self.params.clone(),
            passed: witness.is_none(),
            cases,
            witness,
        })
    }
}

fn labels(v: &GradedVector) -> Value {
    json!(v.to_string())
}

fn tensor(v: &TensorVector) -> Value {
    json!(v.to_string())
}

/// Applies a per-slot linear map to every factor of a tensor.
fn map_tensor(t: &TensorVector, f: impl Fn(usize, Basis) -> Result<GradedVector>) -> Result<TensorVector> {
    let mut out = TensorVector::zero();
    for (parts, c) in t.terms() {
        let factors = parts.iter().enumerate().map(|(i, &b)| f(i, b)).collect::<Result<Vec<_>>>()?;
        for (p, d) in TensorVector::from_factors(&factors).terms() {
            out.add_term(p.clone(), c * d);
        }
    }
    Ok(out)
}

/// (Δ ⊗ 1)Δ or (1 ⊗ Δ)Δ as 3-tensors.
fn double_coproduct(ctx: &TowerContext, x: &GradedVector, split_left: bool) -> Result<TensorVector> {
    let mut out = TensorVector::zero();
    for (pair, c) in ctx.coproduct(x)?.terms() {
        let (a, b) = (pair[0], pair[1]);
        let inner = ctx.coproduct(&GradedVector::basis(if split_left { a } else { b }))?;
        for (p, d) in inner.terms() {
            let parts = if split_left { vec![p[0], p[1], b] } else { vec![a, p[0], p[1]] };
            out.add_term(parts, c * d);
        }
    }
    Ok(out)
}

fn bases(ctx: &TowerContext, top: usize) -> Result<Vec<Vec<Basis>>> {
    (0..=top).map(|n| ctx.basis(n)).collect()
}

/// Degree pairs (k, l), both positive, with k + l ≤ top.
fn positive_pairs(top: usize) -> Vec<(usize, usize)> {
    (1..=top).flat_map(|k| (1..=top - k).map(move |l| (k, l))).collect()
}

fn bialgebra_checks<'a>(tower: &'static str, ctx: &'a TowerContext, top: usize) -> Vec<Check<'a>> {
    let p = json!({ "tower": tower, "max_degree": top });
    vec![
        Check::new("bialgebra.unit", "unit and counit", p.clone(), move || {
            let mut t = Tally::default();
            for x in bases(ctx, top)?.into_iter().flatten() {
                let x = GradedVector::basis(x);
                let (l, r) = (ctx.product(&GradedVector::unit(), &x)?, ctx.product(&x, &GradedVector::unit())?);
                t.case(l == x && r == x, || json!({ "x": labels(&x), "unit_times_x": labels(&l), "x_times_unit": labels(&r) }));
            }
            Ok(t)
        }),
        Check::new("bialgebra.commutativity", "m(x,y) = m(y,x)", p.clone(), move || {
            let mut t = Tally::default();
            let b = bases(ctx, top)?;
            for (k, l) in positive_pairs(top) {
                for &x in &b[k] {
                    for &y in &b[l] {
                        let (x, y) = (GradedVector::basis(x), GradedVector::basis(y));
                        let (xy, yx) = (ctx.product(&x, &y)?, ctx.product(&y, &x)?);
                        t.case(xy == yx, || json!({ "x": labels(&x), "y": labels(&y), "xy": labels(&xy), "yx": labels(&yx) }));
                    }
                }
            }
            Ok(t)
        }),
        Check::new("bialgebra.associativity", "(xy)z = x(yz)", p.clone(), move || {
            let mut t = Tally::default();
            let b = bases(ctx, top)?;
            for (k, l) in positive_pairs(top) {
                for m in 1..=top.saturating_sub(k + l) {
                    for &x in &b[k] {
                        for &y in &b[l] {
                            for &z in &b[m] {
                                let (x, y, z) = (GradedVector::basis(x), GradedVector::basis(y), GradedVector::basis(z));
                                let left = ctx.product(&ctx.product(&x, &y)?, &z)?;
                                let right = ctx.product(&x, &ctx.product(&y, &z)?)?;
                                t.case(left == right, || json!({ "x": labels(&x), "y": labels(&y), "z": labels(&z) }));
                            }
                        }
                    }
                }
            }
            Ok(t)
        }),
        Check::new("bialgebra.cocommutativity", "m*(x) is swap-symmetric", p.clone(), move || {
            let mut t = Tally::default();
            for x in bases(ctx, top)?.into_iter().flatten() {
                let d = ctx.coproduct(&GradedVector::basis(x))?;
                t.case(d == d.swapped(), || json!({ "x": x.to_string(), "coproduct": tensor(&d) }));
            }
            Ok(t)
        }),
        Check::new("bialgebra.coassociativity", "(m* ⊗ 1)m* = (1 ⊗ m*)m*", p.clone(), move || {
            let mut t = Tally::default();
            for x in bases(ctx, top)?.into_iter().flatten() {
                let x = GradedVector::basis(x);
                let (l, r) = (double_coproduct(ctx, &x, true)?, double_coproduct(ctx, &x, false)?);
                t.case(l == r, || json!({ "x": labels(&x), "left": tensor(&l), "right": tensor(&r) }));
            }
            Ok(t)
        }),
        Check::new("bialgebra.adjointness", "⟨m(x⊗y), z⟩ = ⟨x⊗y, m*(z)⟩", p.clone(), move || {
            let mut t = Tally::default();
            let b = bases(ctx, top)?;
            for n in 0..=top {
                for &z in &b[n] {
                    let dz = ctx.coproduct(&GradedVector::basis(z))?;
                    for k in 0..=n {
                        for &x in &b[k] {
                            for &y in &b[n - k] {
                                let lhs = ctx.product(&GradedVector::basis(x), &GradedVector::basis(y))?.coeff(z);
                                let rhs = dz.coeff(&[x, y]);
                                t.case(lhs == rhs, || json!({ "x": x.to_string(), "y": y.to_string(), "z": z.to_string(), "product_side": lhs, "coproduct_side": rhs }));
                            }
                        }
                    }
                }
            }
            Ok(t)
        }),
        Check::new("bialgebra.positivity", "structure constants are nonnegative and every product is nonzero", p, move || {
            let mut t = Tally::default();
            for k in 0..=top {
                for l in 0..=top - k {
                    let s = ctx.structure_constants(k, l)?;
                    for i in 0..s.dims[0] {
                        for j in 0..s.dims[1] {
                            let row = s.row(i, j);
                            let ok = row.iter().all(|&c| c >= 0) && row.iter().any(|&c| c > 0);
                            t.case(ok, || json!({ "x": Basis::new(k, i).to_string(), "y": Basis::new(l, j).to_string(), "row": row }));
                        }
                    }
                }
            }
            Ok(t)
        }),
    ]
}

fn chartab_check<'a>(tower: &'static str, ctx: &'a TowerContext, n: usize) -> Check<'a> {
    Check::new("chartab.exactness", "row and column orthogonality, Σ deg² = |Γ|", json!({ "tower": tower, "n": n }), move || {
        let d = ctx.degree(n)?;
        let mut t = Tally::default();
        if let Some((i, j, v)) = d.table.orthogonality_failure() {
            t.case(false, || json!({ "kind": "row orthogonality", "i": i, "j": j, "inner_product": v, "from_cache": d.from_cache }));
        } else {
            t.case(true, || Value::Null);
        }
        let sum: u64 = d.table.degrees().iter().map(|&x| x * x).sum();
        t.case(
            sum == d.table.geometry().order,
            || json!({ "kind": "degree sum", "sum_of_squares": sum, "order": d.table.geometry().order }),
        );
        let col = d.table.column_orthogonality_failure();
        t.case(col.is_none(), || json!({ "kind": "column orthogonality", "classes": col }));
        t.case(
            d.group.order() as u128 == crate::wreath::RestrictedWreathGroup::order_formula(ctx.subgroup(), n),
            || json!({ "kind": "group order" }),
        );
        Ok(t)
    })
}

fn pair_checks<'a>(pair: &'a TowerPair) -> Vec<Check<'a>> {
    let top = pair.n_max();
    let m = pair.dual().len();
    let full = pair.full();
    let quot = pair.quotient();
    let p = json!({ "n_max": top });
    let mut checks = vec![
        Check::new("twist.extension", "l̃ is a linear character restricting to l^{⊗n}", p.clone(), move || {
            let mut t = Tally::default();
            for l in 0..m {
                for n in 0..=top {
                    let ext = pair.extension(l, n)?;
                    let d = full.degree(n)?;
                    let coeffs = d.table.decompose(&ext)?;
                    let linear = coeffs.iter().filter(|&&c| c != 0).count() == 1
                        && coeffs.iter().enumerate().all(|(i, &c)| c == 0 || (c == 1 && d.table.degrees()[i] == 1));
                    t.case(linear, || json!({ "l": l, "n": n, "decomposition": coeffs }));
                    if let Some(i) = coeffs.iter().position(|&c| c == 1) {
                        let mult = pair.color_multiplicity(l, Basis::new(n, i))?;
                        t.case(
                            mult == 1,
                            || json!({ "l": l, "n": n, "extension": Basis::new(n, i).to_string(), "color_multiplicity": mult }),
                        );
                    }
                }
            }
            Ok(t)
        }),
        Check::new("twist.identity_and_permutation", "τ_trivial = id and each τ_l permutes the basis", p.clone(), move || {
            let mut t = Tally::default();
            for l in 0..m {
                for n in 0..=top {
                    let images = pair.twist_images(l, n)?;
                    let targets: BTreeSet<Basis> = images.iter().filter_map(GradedVector::as_irreducible).collect();
                    t.case(
                        targets.len() == images.len(),
                        || json!({ "l": l, "n": n, "images": images.iter().map(labels).collect::<Vec<_>>() }),
                    );
                    if l == 0 {
                        for (i, img) in images.iter().enumerate() {
                            t.case(img.as_irreducible() == Some(Basis::new(n, i)), || json!({ "n": n, "i": i, "image": labels(img) }));
                        }
                    }
                }
            }
            Ok(t)
        }),
        Check::new("twist.composition", "τ_l ∘ τ_l' = τ_{ll'} and τ_l* = τ_{l⁻¹}", p.clone(), move || {
            let mut t = Tally::default();
            let dual = pair.dual();
            let position = |c: &crate::abelian::LinearCharacter| {
                dual.iter().position(|d| d == c).ok_or_else(|| Error::Internal("H* not closed".into()))
            };
            for l in 0..m {
                let inv = position(&dual[l].inverse())?;
                for l2 in 0..m {
                    let prod = position(&dual[l].product(&dual[l2])?)?;
                    for n in 0..=top {
                        for b in full.basis(n)? {
                            let x = GradedVector::basis(b);
                            let lhs = pair.twist(l, &pair.twist(l2, &x)?)?;
                            let rhs = pair.twist(prod, &x)?;
                            t.case(lhs == rhs, || json!({ "l": l, "l_prime": l2, "x": labels(&x), "composite": labels(&lhs), "product_twist": labels(&rhs) }));
                        }
                    }
                }
                for n in 0..=top {
                    for a in full.basis(n)? {
                        for b in full.basis(n)? {
                            let lhs = pair.twist(l, &GradedVector::basis(a))?.coeff(b);
                            let rhs = pair.twist(inv, &GradedVector::basis(b))?.coeff(a);
                            t.case(
                                lhs == rhs,
                                || json!({ "l": l, "a": a.to_string(), "b": b.to_string(), "forward": lhs, "adjoint": rhs }),
                            );
                        }
                    }
                }
            }
            Ok(t)
        }),
        Check::new("twist.orthogonal", "⟨τ_l a, τ_l b⟩ = ⟨a, b⟩", p.clone(), move || {
            let mut t = Tally::default();
            for l in 0..m {
                for n in 0..=top {
                    let basis = full.basis(n)?;
                    for &a in &basis {
                        for &b in &basis {
                            let (x, y) = (GradedVector::basis(a), GradedVector::basis(b));
                            let lhs = pair.twist(l, &x)?.pairing(&pair.twist(l, &y)?);
                            t.case(lhs == x.pairing(&y), || json!({ "l": l, "a": a.to_string(), "b": b.to_string(), "twisted": lhs }));
                        }
                    }
                }
            }
            Ok(t)
        }),
        Check::new("twist.bialgebra", "τ_l preserves products and coproducts", p.clone(), move || {
            let mut t = Tally::default();
            let b = bases(full, top)?;
            for l in 0..m {
                for (k, k2) in positive_pairs(top) {
                    for &x in &b[k] {
                        for &y in &b[k2] {
                            let (x, y) = (GradedVector::basis(x), GradedVector::basis(y));
                            let lhs = pair.twist(l, &full.product(&x, &y)?)?;
                            let rhs = full.product(&pair.twist(l, &x)?, &pair.twist(l, &y)?)?;
                            t.case(lhs == rhs, || json!({ "l": l, "x": labels(&x), "y": labels(&y) }));
                        }
                    }
                }
                for &x in b.iter().flatten() {
                    let x = GradedVector::basis(x);
                    let lhs = full.coproduct(&pair.twist(l, &x)?)?;
                    let rhs = map_tensor(&full.coproduct(&x)?, |_, b| pair.twist(l, &GradedVector::basis(b)))?;
                    t.case(lhs == rhs, || json!({ "l": l, "x": labels(&x), "left": tensor(&lhs), "right": tensor(&rhs) }));
                }
            }
            Ok(t)
        }),
        Check::new("inflation.bialgebra", "φ* sends the unit to the unit and is an algebra and coalgebra map", p.clone(), move || {
            let mut t = Tally::default();
            let unit = pair.inflate(&GradedVector::unit())?;
            t.case(unit == GradedVector::unit(), || json!({ "image_of_unit": labels(&unit) }));
            let b = bases(quot, top)?;
            for (k, k2) in positive_pairs(top) {
                for &x in &b[k] {
                    for &y in &b[k2] {
                        let (x, y) = (GradedVector::basis(x), GradedVector::basis(y));
                        let lhs = pair.inflate(&quot.product(&x, &y)?)?;
                        let rhs = full.product(&pair.inflate(&x)?, &pair.inflate(&y)?)?;
                        t.case(lhs == rhs, || json!({ "x": labels(&x), "y": labels(&y), "inflated_product": labels(&lhs), "product_of_inflations": labels(&rhs) }));
                    }
                }
            }
            for &x in b.iter().flatten() {
                let x = GradedVector::basis(x);
                let lhs = full.coproduct(&pair.inflate(&x)?)?;
                let rhs = map_tensor(&quot.coproduct(&x)?, |_, b| pair.inflate(&GradedVector::basis(b)))?;
                t.case(lhs == rhs, || json!({ "x": labels(&x), "left": tensor(&lhs), "right": tensor(&rhs) }));
            }
            Ok(t)
        }),
        Check::new("phi_l.irreducible_injective", "Φ_l sends distinct irreducibles to distinct irreducibles", p.clone(), move || {
            let mut t = Tally::default();
            for l in 0..m {
                for n in 0..=top {
                    let images = pair.phi_l_images(l, n)?;
                    let targets: BTreeSet<Basis> = images.iter().filter_map(GradedVector::as_irreducible).collect();
                    t.case(
                        targets.len() == images.len(),
                        || json!({ "l": l, "n": n, "images": images.iter().map(labels).collect::<Vec<_>>() }),
                    );
                }
            }
            Ok(t)
        }),
        Check::new("phi_l.bialgebra", "Φ_l is multiplicative and comultiplicative", p.clone(), move || {
            let mut t = Tally::default();
            let b = bases(quot, top)?;
            for l in 0..m {
                for (k, k2) in positive_pairs(top) {
                    for &x in &b[k] {
                        for &y in &b[k2] {
                            let (x, y) = (GradedVector::basis(x), GradedVector::basis(y));
                            let lhs = pair.phi_l(l, &quot.product(&x, &y)?)?;
                            let rhs = full.product(&pair.phi_l(l, &x)?, &pair.phi_l(l, &y)?)?;
                            t.case(lhs == rhs, || json!({ "l": l, "x": labels(&x), "y": labels(&y) }));
                        }
                    }
                }
                for &x in b.iter().flatten() {
                    let x = GradedVector::basis(x);
                    let lhs = full.coproduct(&pair.phi_l(l, &x)?)?;
                    let rhs = map_tensor(&quot.coproduct(&x)?, |_, b| pair.phi_l(l, &GradedVector::basis(b)))?;
                    t.case(lhs == rhs, || json!({ "l": l, "x": labels(&x), "left": tensor(&lhs), "right": tensor(&rhs) }));
                }
            }
            Ok(t)
        }),
        Check::new("phi_l.image_basis", "π is in the image of Φ_l iff Res_{H^n} π contains l^{⊗n}", p.clone(), move || {
            let mut t = Tally::default();
            for l in 0..m {
                for n in 0..=top {
                    let image: BTreeSet<Basis> = pair.phi_l_images(l, n)?.iter().filter_map(GradedVector::as_irreducible).collect();
                    for b in full.basis(n)? {
                        let mult = pair.color_multiplicity(l, b)?;
                        t.case(
                            image.contains(&b) == (mult > 0),
                            || json!({ "l": l, "irreducible": b.to_string(), "in_image": image.contains(&b), "color_multiplicity": mult }),
                        );
                    }
                }
            }
            Ok(t)
        }),
        Check::new("phi_l.orthogonal_images", "⟨Φ_l(x), Φ_l'(y)⟩ = 0 for l ≠ l' in positive degree", p.clone(), move || {
            let mut t = Tally::default();
            for n in 1..=top {
                let images = (0..m).map(|l| pair.phi_l_images(l, n)).collect::<Result<Vec<_>>>()?;
                for l in 0..m {
                    for l2 in (l + 1)..m {
                        for (i, x) in images[l].iter().enumerate() {
                            for (j, y) in images[l2].iter().enumerate() {
                                let v = x.pairing(y);
                                t.case(v == 0, || json!({ "l": l, "l_prime": l2, "x": Basis::new(n, i).to_string(), "y": Basis::new(n, j).to_string(), "pairing": v }));
                            }
                        }
                    }
                }
            }
            Ok(t)
        }),
        Check::new(
            "psi_l.inverse_and_projection",
            "Ψ_lΦ_l = id; Φ_lΨ_l is a self-adjoint idempotent; Ψ_l kills Φ_l' images",
            p.clone(),
            move || {
                let mut t = Tally::default();
                for l in 0..m {
                    for n in 0..=top {
                        for x in quot.basis(n)? {
                            let x = GradedVector::basis(x);
                            let back = pair.psi_l(l, &pair.phi_l(l, &x)?)?;
                            t.case(back == x, || json!({ "l": l, "x": labels(&x), "psi_phi_x": labels(&back) }));
                            if n > 0 {
                                for l2 in (0..m).filter(|&l2| l2 != l) {
                                    let killed = pair.psi_l(l, &pair.phi_l(l2, &x)?)?;
                                    t.case(
                                        killed.is_zero(),
                                        || json!({ "l": l, "l_prime": l2, "x": labels(&x), "image": labels(&killed) }),
                                    );
                                }
                            }
                        }
                        let basis = full.basis(n)?;
                        let proj =
                            basis.iter().map(|&b| pair.phi_l(l, &pair.psi_l(l, &GradedVector::basis(b))?)).collect::<Result<Vec<_>>>()?;
                        for (i, pb) in proj.iter().enumerate() {
                            let twice = pair.phi_l(l, &pair.psi_l(l, pb)?)?;
                            t.case(
                                &twice == pb,
                                || json!({ "l": l, "pi": Basis::new(n, i).to_string(), "once": labels(pb), "twice": labels(&twice) }),
                            );
                            for (j, &b2) in basis.iter().enumerate() {
                                let (lhs, rhs) = (pb.coeff(b2), proj[j].coeff(Basis::new(n, i)));
                                t.case(
                                    lhs == rhs,
                                    || json!({ "l": l, "a": Basis::new(n, i).to_string(), "b": b2.to_string(), "left": lhs, "right": rhs }),
                                );
                            }
                        }
                    }
                }
                Ok(t)
            },
        ),
        Check::new("psi_l.bialgebra", "Ψ_l is multiplicative and comultiplicative", p.clone(), move || {
            let mut t = Tally::default();
            let b = bases(full, top)?;
            for l in 0..m {
                for (k, k2) in positive_pairs(top) {
                    for &x in &b[k] {
                        for &y in &b[k2] {
                            let (x, y) = (GradedVector::basis(x), GradedVector::basis(y));
                            let lhs = pair.psi_l(l, &full.product(&x, &y)?)?;
                            let rhs = quot.product(&pair.psi_l(l, &x)?, &pair.psi_l(l, &y)?)?;
                            t.case(lhs == rhs, || json!({ "l": l, "x": labels(&x), "y": labels(&y), "psi_of_product": labels(&lhs), "product_of_psi": labels(&rhs) }));
                        }
                    }
                }
                for &x in b.iter().flatten() {
                    let x = GradedVector::basis(x);
                    let lhs = quot.coproduct(&pair.psi_l(l, &x)?)?;
                    let rhs = map_tensor(&full.coproduct(&x)?, |_, b| pair.psi_l(l, &GradedVector::basis(b)))?;
                    t.case(lhs == rhs, || json!({ "l": l, "x": labels(&x), "left": tensor(&lhs), "right": tensor(&rhs) }));
                }
            }
            Ok(t)
        }),
        Check::new("phi.double_cosets", "diagonal double cosets in G_λ\\G_n/G_λ number [G:H]^{l(λ)−1}", p.clone(), move || {
            let mut t = Tally::default();
            for n in 0..=top {
                for lambda in LambdaTuple::all(m, n) {
                    let count = pair.count_diagonal_double_cosets(&lambda, &lambda)?;
                    let want = pair.predicted_norm(&lambda);
                    t.case(count as i64 == want, || json!({ "lambda": lambda.to_string(), "count": count, "expected": want }));
                }
            }
            Ok(t)
        }),
        Check::new("phi.weak_surjectivity", "every irreducible is a constituent of some Φ(π_λ)", p.clone(), move || {
            let mut t = Tally::default();
            for n in 0..=top {
                for (pi, hit) in pair.weak_surjectivity_scan(n)? {
                    t.case(hit.is_some(), || json!({ "irreducible": pi.to_string() }));
                }
            }
            Ok(t)
        }),
        Check::new("psi.adjoint_positive", "⟨Ψ(π), t⟩ = ⟨π, Φ(t)⟩; Ψ(π) ≥ 0 and nonzero", p.clone(), move || {
            let mut t = Tally::default();
            for n in 0..=top {
                let tuples = pair.labeled_tuples(n)?;
                let images = tuples.iter().map(|x| pair.phi_of(x)).collect::<Result<Vec<_>>>()?;
                for pi in full.basis(n)? {
                    let psi = pair.big_psi(&GradedVector::basis(pi))?;
                    t.case(psi.is_nonnegative() && !psi.is_zero(), || json!({ "irreducible": pi.to_string(), "psi": tensor(&psi) }));
                    let total: i64 = psi.terms().map(|(_, c)| c).sum::<i64>();
                    let mut seen = 0;
                    for (tuple, img) in tuples.iter().zip(&images) {
                        let (lhs, rhs) = (psi.coeff(&tuple.factors), img.coeff(pi));
                        seen += lhs;
                        t.case(
                            lhs == rhs,
                            || json!({ "irreducible": pi.to_string(), "tuple": tuple.to_string(), "psi_side": lhs, "phi_side": rhs }),
                        );
                    }
                    t.case(
                        seen == total,
                        || json!({ "irreducible": pi.to_string(), "psi": tensor(&psi), "kind": "support outside labeled tuples" }),
                    );
                }
            }
            Ok(t)
        }),
        Check::new("psi.coalgebra_surjective", "Ψ is a coalgebra map and surjective over Z in each degree", p.clone(), move || {
            let mut t = Tally::default();
            for n in 0..=top {
                let tuples = pair.labeled_tuples(n)?;
                let basis = full.basis(n)?;
                let psis = basis.iter().map(|&b| pair.big_psi(&GradedVector::basis(b))).collect::<Result<Vec<_>>>()?;
                let matrix: Vec<Vec<i64>> = tuples.iter().map(|tu| psis.iter().map(|p| p.coeff(&tu.factors)).collect()).collect();
                let diag = smith_normal_form(&matrix).diagonal();
                let surjective = diag.len() >= tuples.len() && diag[..tuples.len()].iter().all(|&d| d == 1);
                t.case(surjective, || json!({ "n": n, "smith_diagonal": diag, "rows": tuples.len() }));
                for (&b, psi) in basis.iter().zip(&psis) {
                    let lhs = tensor_coproduct(pair, psi)?;
                    let mut rhs = BTreeMap::new();
                    for (pr, c) in full.coproduct(&GradedVector::basis(b))?.terms() {
                        let (left, right) = (pair.big_psi(&GradedVector::basis(pr[0]))?, pair.big_psi(&GradedVector::basis(pr[1]))?);
                        for (x, d) in left.terms() {
                            for (y, e) in right.terms() {
                                *rhs.entry((x.clone(), y.clone())).or_insert(0) += c * d * e;
                            }
                        }
                    }
                    rhs.retain(|_, v| *v != 0);
                    t.case(lhs == rhs, || json!({ "irreducible": b.to_string(), "kind": "coalgebra map" }));
                }
            }
            Ok(t)
        }),
        Check::new("phi.norms", "⟨Φ(π_λ), Φ(σ_μ)⟩ = δ·[G:H]^{l(λ)−1}", p.clone(), move || norm_tally(pair).map(|(t, _)| t)),
    ];
    if pair.index() == 1 {
        checks.push(Check::new(
            "full_wreath.isomorphism",
            "for G = H, Φ and Ψ are mutually inverse bijections on the bases",
            p,
            move || {
                let mut t = Tally::default();
                for n in 0..=top {
                    let tuples = pair.labeled_tuples(n)?;
                    let mut hit = BTreeSet::new();
                    for tu in &tuples {
                        let img = pair.phi_of(tu)?;
                        let irr = img.as_irreducible();
                        t.case(irr.is_some(), || json!({ "tuple": tu.to_string(), "image": labels(&img) }));
                        if let Some(b) = irr {
                            hit.insert(b);
                            let back = pair.big_psi(&img)?;
                            t.case(
                                back == TensorVector::pure(tu.factors.clone()),
                                || json!({ "tuple": tu.to_string(), "psi_phi": tensor(&back) }),
                            );
                        }
                    }
                    let basis = full.basis(n)?;
                    t.case(
                        hit.len() == basis.len() && tuples.len() == basis.len(),
                        || json!({ "n": n, "tuples": tuples.len(), "irreducibles": basis.len(), "hit": hit.len() }),
                    );
                    for b in basis {
                        let x = GradedVector::basis(b);
                        let round = pair.big_phi_tensor(&pair.big_psi(&x)?)?;
                        t.case(round == x, || json!({ "irreducible": b.to_string(), "phi_psi": labels(&round) }));
                    }
                }
                Ok(t)
            },
        ));
    }
    checks
}

/// The coproduct of ⊗_l R(G/H,1) applied to an element of the tensor power,
/// keyed by (left tuple, right tuple).
type SplitTuples = BTreeMap<(Vec<Basis>, Vec<Basis>), i64>;

fn tensor_coproduct(pair: &TowerPair, t: &TensorVector) -> Result<SplitTuples> {
    let mut out = SplitTuples::new();
    for (parts, c) in t.terms() {
        let mut acc = vec![((Vec::<Basis>::new(), Vec::<Basis>::new()), c)];
        for &b in parts {
            let split = pair.quotient().coproduct(&GradedVector::basis(b))?;
            let mut next = Vec::new();
            for ((l, r), d) in &acc {
                for (pr, e) in split.terms() {
                    let (mut l2, mut r2) = (l.clone(), r.clone());
                    l2.push(pr[0]);
                    r2.push(pr[1]);
                    next.push(((l2, r2), d * e));
                }
            }
            acc = next;
        }
        for (k, v) in acc {
            *out.entry(k).or_insert(0) += v;
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// Exhaustive pairing of Φ-images of labeled tuples, degree by degree.
fn norm_tally(pair: &TowerPair) -> Result<(Tally, BTreeSet<i64>)> {
    let mut t = Tally::default();
    let mut norms = BTreeSet::new();
    for n in 0..=pair.n_max() {
        let tuples: Vec<LabeledTuple> = pair.labeled_tuples(n)?;
        let images = tuples.par_iter().map(|x| pair.phi_of(x)).collect::<Result<Vec<_>>>()?;
        for (i, (a, x)) in tuples.iter().zip(&images).enumerate() {
            for (j, (b, y)) in tuples.iter().zip(&images).enumerate() {
                let v = x.pairing(y);
                let want = if i == j { pair.predicted_norm(&a.lambda) } else { 0 };
                if i == j {
                    norms.insert(v);
                }
                t.case(v == want, || json!({ "left": a.to_string(), "right": b.to_string(), "pairing": v, "expected": want }));
            }
        }
    }
    Ok((t, norms))
}

/// Runs every check for the pair of towers, collecting failures as data.
/// Only resource-budget errors abort.
pub fn full_verification(pair: &TowerPair, options: VerifyOptions) -> Result<TowerMapReport> {
    let top = pair.n_max();
    let bialgebra_top = options.bialgebra_degree.min(top);
    for n in 0..=top {
        pair.full().degree(n)?;
        pair.quotient().degree(n)?;
    }
    let mut table_checks = Vec::new();
    for n in 0..=top {
        table_checks.push(chartab_check("R(G,H)", pair.full(), n));
        table_checks.push(chartab_check("R(G/H,1)", pair.quotient(), n));
    }
    let mut checks = run(&table_checks)?;
    let tables_ok = checks.iter().all(|c| c.passed);
    let mut norms = Vec::new();
    if tables_ok {
        let mut rest = bialgebra_checks("R(G,H)", pair.full(), bialgebra_top);
        rest.extend(bialgebra_checks("R(G/H,1)", pair.quotient(), bialgebra_top));
        rest.extend(pair_checks(pair));
        checks.extend(run(&rest)?);
        norms = norm_tally(pair)?.1.into_iter().collect();
    } else {
        checks.push(CheckResult {
            id: "dependent_checks".into(),
            name: "remaining checks need exact character tables".into(),
            params: json!({ "n_max": top }),
            passed: false,
            cases: 0,
            witness: Some(json!({ "skipped": "character table check failed" })),
        });
    }
    Ok(TowerMapReport {
        format_version: FORMAT_VERSION,
        kind: "verification".into(),
        descriptor: pair.full().descriptor().clone(),
        n_max: top,
        index: pair.index(),
        dual_size: pair.dual().len(),
        passed: checks.iter().all(|c| c.passed),
        phi_norms: norms,
        checks,
    })
}

/// The algebra/coalgebra axioms on one tower up to total degree `top` (capped at its n_max).
pub fn bialgebra_suite(tower: &'static str, ctx: &TowerContext, top: usize) -> Result<Vec<CheckResult>> {
    run(&bialgebra_checks(tower, ctx, top.min(ctx.n_max())))
}

fn run(checks: &[Check<'_>]) -> Result<Vec<CheckResult>> {
    checks.par_iter().map(Check::execute).collect()
}
