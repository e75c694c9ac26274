//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic throughout.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use wreath_core::abelian::GroupDescriptor;
use wreath_core::bialgebra::{GradedVector, TensorVector, TowerContext};
use wreath_core::cache::{from_json, to_canonical_json, Cache, CharTableFile, SlabFile};
use wreath_core::cli::{run, Cli};
use wreath_core::tower::{bialgebra_suite, full_verification, LambdaTuple, TowerMapReport, TowerPair, VerifyOptions};
use wreath_core::wreath::{RestrictedWreathGroup, WreathElement};

type Outcome = Result<String, String>;

fn g42() -> GroupDescriptor {
    GroupDescriptor::new(vec![4], vec![vec![2]])
}

fn klein_diagonal() -> GroupDescriptor {
    GroupDescriptor::new(vec![2, 2], vec![vec![1, 1]])
}

fn hyperoctahedral() -> GroupDescriptor {
    GroupDescriptor::new(vec![2], vec![vec![1]])
}

fn type_d() -> GroupDescriptor {
    GroupDescriptor::new(vec![2], vec![])
}

/// Every tower instantiated by criteria 1-4, with its n_max.
fn instances() -> Vec<(&'static str, GroupDescriptor, usize)> {
    vec![
        ("(Z/4, <2>)", g42(), 2),
        ("(Z/2+Z/2, diagonal)", klein_diagonal(), 2),
        ("(Z/2, Z/2)", hyperoctahedral(), 3),
        ("(Z/2, 0)", type_d(), 4),
    ]
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn criterion_1() -> Outcome {
    let mut pairs = 0;
    for desc in [g42(), klein_diagonal()] {
        let pair = TowerPair::new(desc.clone(), 2).map_err(e)?;
        ensure(pair.index() == 2, || format!("{desc:?}: [G:H] = {}", pair.index()))?;
        let mut tuples = Vec::new();
        for n in 0..=2 {
            for t in pair.labeled_tuples(n).map_err(e)? {
                let img = pair.phi_of(&t).map_err(e)?;
                tuples.push((t, img));
            }
        }
        for (a, x) in &tuples {
            for (b, y) in &tuples {
                let want = if a == b { 2i64.pow(a.lambda.length().saturating_sub(1) as u32) } else { 0 };
                let got = x.pairing(y);
                ensure(got == want, || format!("{desc:?}: <Φ({a}), Φ({b})> = {got}, expected {want}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} tuple pairs match δ·2^(l(λ)-1)"))
}

fn criterion_2() -> Outcome {
    let pair = TowerPair::new(g42(), 2).map_err(e)?;
    let mut seen = Vec::new();
    for n in 0..=2 {
        for lambda in LambdaTuple::all(pair.dual().len(), n) {
            let count = pair.count_diagonal_double_cosets(&lambda, &lambda).map_err(e)?;
            let want = 2usize.pow(lambda.length().saturating_sub(1) as u32);
            ensure(count == want, || format!("λ = {lambda}: {count} diagonal double cosets, expected {want}"))?;
            seen.push(format!("{lambda}:{count}"));
        }
    }
    Ok(format!("counts {}", seen.join(" ")))
}

/// Partitions of n, by direct recursion.
fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn bipartitions(n: usize) -> usize {
    (0..=n).map(|k| partitions(k, k).len() * partitions(n - k, n - k).len()).sum()
}

fn criterion_3() -> Outcome {
    let pair = TowerPair::new(hyperoctahedral(), 3).map_err(e)?;
    let d2 = pair.full().degree(2).map_err(e)?;
    ensure(d2.group.order() == 8, || format!("G_2 has order {}", d2.group.order()))?;
    ensure(d2.table.len() == 5 && bipartitions(2) == 5, || format!("{} irreducibles vs {} bipartitions", d2.table.len(), bipartitions(2)))?;
    for n in 0..=3 {
        let basis = pair.full().basis(n).map_err(e)?;
        let tuples = pair.labeled_tuples(n).map_err(e)?;
        ensure(basis.len() == bipartitions(n) && tuples.len() == basis.len(), || {
            format!("degree {n}: {} irreducibles, {} tuples, {} bipartitions", basis.len(), tuples.len(), bipartitions(n))
        })?;
        let mut image = BTreeSet::new();
        for t in &tuples {
            let img = pair.phi_of(t).map_err(e)?;
            let b = img.as_irreducible().ok_or_else(|| format!("Φ({t}) = {img} is not a basis element"))?;
            image.insert(b);
            let back = pair.big_psi(&img).map_err(e)?;
            ensure(back == TensorVector::pure(t.factors.clone()), || format!("Ψ(Φ({t})) = {back}"))?;
        }
        ensure(image.len() == basis.len(), || format!("degree {n}: Φ hits {} of {} irreducibles", image.len(), basis.len()))?;
        for b in basis {
            let x = GradedVector::basis(b);
            let round = pair.big_phi_tensor(&pair.big_psi(&x).map_err(e)?).map_err(e)?;
            ensure(round == x, || format!("Φ(Ψ({b})) = {round}"))?;
        }
    }
    Ok("Φ bijective on bases up to degree 3, Ψ∘Φ = id, Φ∘Ψ = id; 5 irreducibles = 5 bipartitions of 2".into())
}

fn criterion_4() -> Outcome {
    let mut witnessed = 0;
    for (desc, top) in [(g42(), 2), (type_d(), 4)] {
        let pair = TowerPair::new(desc.clone(), top).map_err(e)?;
        for n in 0..=top {
            for (pi, hit) in pair.weak_surjectivity_scan(n).map_err(e)? {
                let (t, mult) = hit.ok_or_else(|| format!("{desc:?}: irreducible {pi} is not a constituent of any Φ(π_λ)"))?;
                let check = pair.phi_of(&t).map_err(e)?.coeff(pi);
                ensure(check == mult && mult > 0, || format!("witness {t} for {pi} does not reproduce"))?;
                witnessed += 1;
            }
        }
    }
    Ok(format!("{witnessed} irreducibles witnessed"))
}

/// Degree multiset of a group from brute force: linear characters from the
/// commutator subgroup, class count from conjugation orbits, the rest from Σ d² = |G|.
fn brute_force_degrees(g: &RestrictedWreathGroup) -> Result<Vec<u64>, String> {
    let elems: Vec<WreathElement> = g.group().elements().to_vec();
    let mul = |a: &WreathElement, b: &WreathElement| g.mul(a, b).expect("closed");
    let mut derived: HashSet<WreathElement> = HashSet::new();
    for a in &elems {
        for b in &elems {
            derived.insert(mul(&mul(a, b), &mul(&g.inv(a), &g.inv(b))));
        }
    }
    loop {
        let current: Vec<_> = derived.iter().cloned().collect();
        let before = derived.len();
        for a in &current {
            for b in &current {
                derived.insert(mul(a, b));
            }
        }
        if derived.len() == before {
            break;
        }
    }
    let order = elems.len() as u64;
    let linear = order / derived.len() as u64;
    let mut seen: HashSet<WreathElement> = HashSet::new();
    let mut classes = 0;
    for x in &elems {
        if seen.insert(x.clone()) {
            classes += 1;
            for y in &elems {
                seen.insert(mul(&mul(y, x), &g.inv(y)));
            }
        }
    }
    let rest = classes - linear as usize;
    let candidates: Vec<u64> = (2..=order).filter(|d| order.is_multiple_of(*d) && d * d <= order).collect();
    let mut solutions = Vec::new();
    fn search(cands: &[u64], slots: usize, target: u64, start: usize, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slots == 0 {
            if target == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for i in start..cands.len() {
            let d2 = cands[i] * cands[i];
            if d2 <= target {
                acc.push(cands[i]);
                search(cands, slots - 1, target - d2, i, acc, out);
                acc.pop();
            }
        }
    }
    search(&candidates, rest, order - linear, 0, &mut Vec::new(), &mut solutions);
    ensure(solutions.len() == 1, || format!("degree equation has {} solutions", solutions.len()))?;
    let mut degrees = vec![1; linear as usize];
    degrees.extend(&solutions[0]);
    Ok(degrees)
}

fn criterion_5() -> Outcome {
    let mut tables = 0;
    for (name, desc, top) in instances() {
        let pair = TowerPair::new(desc, top).map_err(e)?;
        for ctx in [pair.full(), pair.quotient()] {
            for n in 0..=top {
                let d = ctx.degree(n).map_err(e)?;
                if let Some((i, j, v)) = d.table.orthogonality_failure() {
                    return Err(format!("{name} degree {n}: <χ{i}, χ{j}> = {v}"));
                }
                let sum: u64 = d.table.degrees().iter().map(|x| x * x).sum();
                ensure(sum == d.group.order() as u64, || format!("{name} degree {n}: Σ deg² = {sum}, |Γ| = {}", d.group.order()))?;
                tables += 1;
            }
        }
    }
    let ctx = TowerContext::new(type_d(), 3).map_err(e)?;
    let d3 = ctx.degree(3).map_err(e)?;
    let mut got = d3.table.degrees().to_vec();
    got.sort_unstable();
    let oracle = brute_force_degrees(&d3.group)?;
    ensure(got == oracle && got == vec![1, 1, 2, 3, 3], || format!("G_3(Z/2,0) degrees {got:?}, oracle {oracle:?}"))?;
    Ok(format!("{tables} tables exact; G_3(Z/2,0) degrees {got:?}"))
}

fn criterion_6() -> Outcome {
    let mut cases = 0;
    let mut towers = 0;
    for (name, desc, _) in instances() {
        let pair = TowerPair::new(desc, 3).map_err(e)?;
        for (label, ctx) in [("R(G,H)", pair.full()), ("R(G/H,1)", pair.quotient())] {
            for c in bialgebra_suite(label, ctx, 3).map_err(e)? {
                ensure(c.passed, || format!("{name} {label} {}: {:?}", c.id, c.witness))?;
                cases += c.cases;
            }
            towers += 1;
        }
    }
    Ok(format!("{cases} cases over {towers} towers to total degree 3"))
}

const MAP_CHECKS: [&str; 10] = [
    "twist.extension",
    "twist.identity_and_permutation",
    "twist.composition",
    "twist.orthogonal",
    "twist.bialgebra",
    "inflation.bialgebra",
    "phi_l.irreducible_injective",
    "phi_l.bialgebra",
    "phi_l.image_basis",
    "phi_l.orthogonal_images",
];

fn criterion_7() -> Outcome {
    let mut cases = 0;
    for (name, desc, top) in instances() {
        let pair = TowerPair::new(desc, top).map_err(e)?;
        let report = full_verification(&pair, VerifyOptions { bialgebra_degree: 0 }).map_err(e)?;
        let wanted: Vec<&str> = MAP_CHECKS.iter().copied().chain(["psi_l.inverse_and_projection", "psi_l.bialgebra"]).collect();
        for id in wanted {
            let c = report.checks.iter().find(|c| c.id == id).ok_or_else(|| format!("{name}: check {id} missing"))?;
            let vacuous = id == "phi_l.orthogonal_images" && pair.dual().len() == 1;
            ensure(c.passed && (c.cases > 0 || vacuous), || format!("{name} {id}: {:?}", c.witness))?;
            cases += c.cases;
        }
    }
    Ok(format!("{cases} cases: τ laws, Φ_l injective/irreducible, image basis, orthogonal images, Ψ_lΦ_l = id, projection"))
}

fn cli_output(args: &[&str]) -> (i32, String) {
    use clap::Parser;
    let cli = Cli::try_parse_from(args).expect("valid arguments");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&cli, &mut out, &mut err);
    (code, String::from_utf8(out).expect("utf8"))
}

fn criterion_8() -> Outcome {
    let cold_dir = tempfile::tempdir().map_err(e)?;
    let cold_cache = Arc::new(Cache::new(cold_dir.path()).map_err(e)?);
    let verify = |cache: Option<Arc<Cache>>| -> Result<TowerMapReport, String> {
        let pair = TowerPair::build(g42(), 2, 100_000, cache).map_err(e)?;
        full_verification(&pair, VerifyOptions::default()).map_err(e)
    };
    let cold = verify(Some(cold_cache.clone()))?;
    ensure(cold_cache.hits() == 0 && cold_cache.misses() > 0, || "cold run touched an existing entry".into())?;
    let warm_cache = Arc::new(Cache::new(cold_dir.path()).map_err(e)?);
    let warm = verify(Some(warm_cache.clone()))?;
    ensure(warm_cache.hits() > 0 && warm_cache.misses() == 0, || {
        format!("warm run: {} hits, {} misses", warm_cache.hits(), warm_cache.misses())
    })?;
    ensure(cold == warm, || "warm-cache report differs from cold".into())?;
    let uncached = verify(None)?;
    ensure(uncached == cold, || "uncached report differs".into())?;

    let text = to_canonical_json(&cold).map_err(e)?;
    let parsed: TowerMapReport = from_json(&text).map_err(e)?;
    ensure(parsed == cold && to_canonical_json(&parsed).map_err(e)? == text, || "report JSON round trip is not exact".into())?;
    let ctx = TowerContext::new(g42(), 2).map_err(e)?;
    let d = ctx.degree(2).map_err(e)?;
    let file = CharTableFile::new(&g42(), 2, d.representative_words(), &d.table);
    let json = to_canonical_json(&file).map_err(e)?;
    let back: CharTableFile = from_json(&json).map_err(e)?;
    ensure(back == file && back.to_table().map_err(e)? == d.table, || "character table JSON round trip is not exact".into())?;
    for entry in std::fs::read_dir(cold_dir.path()).map_err(e)? {
        let path = entry.map_err(e)?.path();
        let stored = std::fs::read_to_string(&path).map_err(e)?;
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
        let again = if name.starts_with("char_table") {
            to_canonical_json(&from_json::<CharTableFile>(&stored).map_err(e)?)
        } else {
            to_canonical_json(&from_json::<SlabFile>(&stored).map_err(e)?)
        };
        ensure(again.map_err(e)? == stored, || format!("{} is not in canonical form", path.display()))?;
    }

    let runs: Vec<(i32, String)> = (0..2)
        .map(|_| {
            let dir = tempfile::tempdir().expect("tempdir");
            let path = dir.path().to_str().expect("utf8 path").to_string();
            cli_output(&["wreath", "verify", "--group", "4", "--subgroup", "2", "--nmax", "2", "--format", "json", "--cache-dir", &path])
        })
        .collect();
    ensure(runs[0].0 == 0 && runs[0] == runs[1], || "CLI verify output differs between runs".into())?;
    let describe: Vec<_> =
        (0..2).map(|_| cli_output(&["wreath", "describe", "--group", "4", "--subgroup", "2", "--format", "json"])).collect();
    ensure(describe[0] == describe[1], || "describe output differs between runs".into())?;
    Ok(format!("cold = warm = uncached, {} cache hits on rerun, JSON round trips exact, reruns byte-identical", warm_cache.hits()))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("Φ norm formula for |λ|,|μ| ≤ 2 in (Z/4,<2>) and (Z/2+Z/2, diagonal)", criterion_1),
        ("diagonal double cosets for |λ| ≤ 2 in G(4,2,n)", criterion_2),
        ("full wreath (Z/2,Z/2), n ≤ 3: Φ and Ψ mutually inverse", criterion_3),
        ("weak surjectivity", criterion_4),
        ("character table exactness", criterion_5),
        ("bialgebra axioms to total degree 3", criterion_6),
        ("twist, inflation, Φ_l and Ψ_l laws", criterion_7),
        ("cache coherence, JSON round trip, determinism", criterion_8),
    ];
    let mut failed = 0;
    let mut summary = BTreeMap::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => println!("criterion {}: PASS {name} [{detail}] ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
        summary.insert(i + 1, outcome.is_ok());
    }
    println!("acceptance: {} of {} criteria passed", summary.values().filter(|&&ok| ok).count(), summary.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
