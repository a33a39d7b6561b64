use anyhow::{bail, Context, Result};
use loglin_core::design::{build_design_matrix, verify_spec};
use loglin_core::enumerate::{all_complexes, random_complex, MAX_EXHAUSTIVE_M};
use loglin_core::hilbert::{
    coarse_closed_form, e_vector, f_from_e, satisfies_dehn_sommerville, truncated_coarse_series,
};
use loglin_core::{engine, EVector, FVector, ModelSpec, SimplicialComplex};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cli::{InputArgs, LevelArgs, OutputFormat};
use crate::input::{load, model_spec};
use crate::render::{big, bigs, print_json, tuple};

/// Process exit status for a command that ran to completion.
pub type Status = u8;

pub const OK: Status = 0;
pub const DISAGREE: Status = 1;

fn facet_lists(c: &SimplicialComplex) -> Vec<Vec<usize>> {
    c.facets().iter().map(|f| f.vertices().to_vec()).collect()
}

pub fn info(input: &InputArgs, output: OutputFormat) -> Result<Status> {
    let c = load(input)?.complex;
    let f = c.f_vector();
    let e = e_vector(&f);
    let ds = satisfies_dehn_sommerville(&f);
    let nonfaces = c.minimal_nonfaces();
    let f_big: Vec<BigInt> = f.counts().iter().map(|&x| BigInt::from(x)).collect();
    match output {
        OutputFormat::Json => print_json(&json!({
            "m": c.vertex_count(),
            "facets": facet_lists(&c),
            "dimension": c.dim(),
            "f_vector": bigs(&f_big),
            "e_vector": bigs(e.coeffs()),
            "minimal_nonfaces": nonfaces.iter().map(|n| n.vertices().to_vec()).collect::<Vec<_>>(),
            "dehn_sommerville": ds,
        })),
        OutputFormat::Text => {
            println!("m: {}", c.vertex_count());
            println!("facets: {c}");
            println!("dimension: {}", c.dim());
            println!("f_vector: {}", tuple(f.counts()));
            println!("e_vector: {}", tuple(e.coeffs()));
            let nf: Vec<String> = nonfaces.iter().map(|n| n.to_string()).collect();
            println!("minimal_nonfaces: {}", if nf.is_empty() { "none".to_string() } else { nf.join(" ") });
            println!("dehn_sommerville: {ds}");
        }
    }
    Ok(OK)
}

pub fn rank(
    input: &InputArgs,
    levels: &LevelArgs,
    verify: bool,
    size_cap: u128,
    output: OutputFormat,
) -> Result<Status> {
    let spec = model_spec(load(input)?, levels)?;
    let report = engine::report(&spec, verify, size_cap)?;
    if verify && !report.oracle_checked() {
        eprintln!(
            "warning: design matrix has {} columns, above the size cap of {size_cap}; reporting the formula only",
            spec.joint_cells()
        );
    }
    let checks: Vec<&str> = report.cross_checks.iter().map(|m| m.name()).collect();
    match output {
        OutputFormat::Json => print_json(&json!({
            "m": spec.complex().vertex_count(),
            "facets": facet_lists(spec.complex()),
            "levels": spec.levels(),
            "joint_cells": big(&spec.joint_cells()),
            "rank": big(&report.rank),
            "model_dimension": big(&report.model_dimension),
            "degrees_of_freedom": big(&report.degrees_of_freedom),
            "method": report.method.name(),
            "cross_checks": checks,
            "dehn_sommerville": report.ds_model,
            "oracle_checked": report.oracle_checked(),
            "oracle_rank": report.oracle_rank.as_ref().map(big),
            "oracle_agrees": report.oracle_agrees(),
        })),
        OutputFormat::Text => {
            println!("complex: {}", spec.complex());
            println!("levels: {}", tuple(spec.levels()));
            println!("joint_cells: {}", spec.joint_cells());
            println!("rank: {}", report.rank);
            println!("model_dimension: {}", report.model_dimension);
            println!("degrees_of_freedom: {}", report.degrees_of_freedom);
            println!("method: {}", report.method);
            println!("cross_checks: {}", if checks.is_empty() { "none".to_string() } else { checks.join(", ") });
            println!("dehn_sommerville: {}", report.ds_model);
            match (&report.oracle_rank, report.oracle_agrees()) {
                (Some(o), Some(ok)) => println!("oracle_rank: {o} ({})", if ok { "agrees" } else { "DISAGREES" }),
                _ if verify => println!("oracle_rank: skipped (size cap)"),
                _ => {}
            }
        }
    }
    Ok(if report.oracle_agrees() == Some(false) { DISAGREE } else { OK })
}

pub struct EvectorArgs<'a> {
    pub input: &'a InputArgs,
    pub f_vector: Option<&'a [u64]>,
    pub e_vector: Option<&'a [i64]>,
    pub r: Option<u64>,
    pub x: Option<&'a [f64]>,
    pub degree: usize,
    pub tolerance: f64,
}

fn has_input(i: &InputArgs) -> bool {
    i.family.is_some() || i.facets.is_some() || i.spec_json.is_some() || i.input.is_some() || i.m.is_some()
}

pub fn evector(a: EvectorArgs<'_>, output: OutputFormat) -> Result<Status> {
    let (complex, f, e) = match (a.f_vector, a.e_vector) {
        (Some(_), _) | (_, Some(_)) if has_input(a.input) => {
            bail!("--f-vector and --e-vector replace the complex input; drop the other input flags")
        }
        (Some(list), _) => {
            let f = FVector::new(list.to_vec())?;
            let e = e_vector(&f);
            (None, f, e)
        }
        (None, Some(list)) => {
            let e = EVector::from_i64s(list)?;
            (None, f_from_e(&e)?, e)
        }
        (None, None) => {
            let c = load(a.input)?.complex;
            let f = c.f_vector();
            let e = e_vector(&f);
            (Some(c), f, e)
        }
    };
    let ds = satisfies_dehn_sommerville(&f);
    let at_r = a.r.map(|r| e.eval(&BigInt::from(r)));
    let mut status = OK;
    let series = match a.x {
        None => None,
        Some(x) => {
            let Some(c) = &complex else {
                bail!("--x needs a complex, not a bare vector");
            };
            if x.len() != c.vertex_count() {
                bail!("--x has {} values, the complex has m = {}", x.len(), c.vertex_count());
            }
            let truncated = truncated_coarse_series(c, x, a.degree);
            let closed = coarse_closed_form(c, x);
            let diff = (truncated - closed).abs();
            let within = diff <= a.tolerance;
            if !within {
                status = DISAGREE;
            }
            Some((truncated, closed, diff, within))
        }
    };
    let f_big: Vec<BigInt> = f.counts().iter().map(|&v| BigInt::from(v)).collect();
    match output {
        OutputFormat::Json => {
            let mut v = json!({
                "f_vector": bigs(&f_big),
                "e_vector": bigs(e.coeffs()),
                "dehn_sommerville": ds,
            });
            if let (Some(r), Some(val)) = (a.r, &at_r) {
                v["r"] = json!(r);
                v["value_at_r"] = big(val);
            }
            if let Some((t, c, d, w)) = series {
                v["series"] = json!({
                    "x": a.x,
                    "degree": a.degree,
                    "truncated": t,
                    "closed_form": c,
                    "abs_diff": d,
                    "tolerance": a.tolerance,
                    "within_tolerance": w,
                });
            }
            print_json(&v);
        }
        OutputFormat::Text => {
            println!("f_vector: {}", tuple(f.counts()));
            println!("e_vector: {}", tuple(e.coeffs()));
            println!("dehn_sommerville: {ds}");
            if let (Some(r), Some(val)) = (a.r, &at_r) {
                println!("value_at_r: {val} (r = {r})");
            }
            if let Some((t, c, d, w)) = series {
                println!("series_truncated: {t:e} (degree {})", a.degree);
                println!("series_closed_form: {c:e}");
                println!("series_abs_diff: {d:e} ({})", if w { "within tolerance" } else { "EXCEEDS tolerance" });
            }
        }
    }
    Ok(status)
}

pub struct SweepArgs<'a> {
    pub max_m: usize,
    pub levels: &'a [u64],
    pub random: usize,
    pub random_m: &'a [usize],
    pub seed: u64,
    pub size_cap: u128,
}

struct Group {
    label: String,
    m: usize,
    complexes: usize,
    specs: Vec<ModelSpec>,
}

#[derive(Default)]
struct Tally {
    cases: usize,
    checked: usize,
    disagreements: usize,
    rank_min: Option<BigInt>,
    rank_max: Option<BigInt>,
}

impl Tally {
    fn add_rank(&mut self, r: &BigInt) {
        if self.rank_min.as_ref().is_none_or(|m| r < m) {
            self.rank_min = Some(r.clone());
        }
        if self.rank_max.as_ref().is_none_or(|m| r > m) {
            self.rank_max = Some(r.clone());
        }
    }

    fn merge(&mut self, o: &Tally) {
        self.cases += o.cases;
        self.checked += o.checked;
        self.disagreements += o.disagreements;
        for r in o.rank_min.iter().chain(o.rank_max.iter()) {
            self.add_rank(r);
        }
    }

    fn skipped(&self) -> usize {
        self.cases - self.checked
    }

    fn range(&self) -> String {
        match (&self.rank_min, &self.rank_max) {
            (Some(a), Some(b)) => format!("{a}..{b}"),
            _ => "-".into(),
        }
    }

    fn json(&self, label: &str, m: Option<usize>, complexes: usize) -> Value {
        json!({
            "group": label,
            "m": m,
            "complexes": complexes,
            "cases": self.cases,
            "checked": self.checked,
            "skipped": self.skipped(),
            "disagreements": self.disagreements,
            "rank_min": self.rank_min.as_ref().map(big),
            "rank_max": self.rank_max.as_ref().map(big),
        })
    }
}

fn level_vectors(set: &[u64], m: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                set.iter().map(move |&r| {
                    let mut v = prefix.clone();
                    v.push(r);
                    v
                })
            })
            .collect();
    }
    out
}

fn sweep_groups(a: &SweepArgs<'_>) -> Result<Vec<Group>> {
    let mut groups = Vec::new();
    for m in 1..=a.max_m {
        let complexes = all_complexes(m)?;
        let vectors = level_vectors(a.levels, m);
        let mut specs = Vec::with_capacity(complexes.len() * vectors.len());
        for c in &complexes {
            for l in &vectors {
                specs.push(ModelSpec::new(c.clone(), l.clone())?);
            }
        }
        groups.push(Group {
            label: format!("m={m}"),
            m,
            complexes: complexes.len(),
            specs,
        });
    }
    if a.random > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        for &m in a.random_m {
            let mut specs = Vec::with_capacity(a.random);
            for _ in 0..a.random {
                let c = random_complex(m, &mut rng)?;
                let l = (0..m).map(|_| a.levels[rng.gen_range(0..a.levels.len())]).collect();
                specs.push(ModelSpec::new(c, l)?);
            }
            groups.push(Group {
                label: format!("random m={m}"),
                m,
                complexes: a.random,
                specs,
            });
        }
    }
    Ok(groups)
}

pub fn verify_sweep(a: SweepArgs<'_>, output: OutputFormat) -> Result<Status> {
    if a.max_m == 0 && a.random == 0 {
        bail!("--max-m must be at least 1");
    }
    if a.max_m > MAX_EXHAUSTIVE_M {
        bail!("--max-m is limited to {MAX_EXHAUSTIVE_M} for the exhaustive sweep, got {}", a.max_m);
    }
    if a.levels.is_empty() {
        bail!("--levels must list at least one level count");
    }
    let groups = sweep_groups(&a)?;

    // Every case is independent; rayon keeps the collected order.
    let cases: Vec<(usize, &ModelSpec)> = groups
        .iter()
        .enumerate()
        .flat_map(|(g, group)| group.specs.iter().map(move |s| (g, s)))
        .collect();
    let results: Vec<_> = cases
        .par_iter()
        .map(|&(g, spec)| (g, spec, verify_spec(spec, a.size_cap)))
        .collect();

    let mut tallies: Vec<Tally> = groups.iter().map(|_| Tally::default()).collect();
    let mut problems = Vec::new();
    for (g, spec, res) in results {
        let t = &mut tallies[g];
        t.cases += 1;
        match res {
            Ok(v) => {
                t.add_rank(&v.formula_rank);
                if v.checked() {
                    t.checked += 1;
                    if !v.agree() {
                        t.disagreements += 1;
                        problems.push(json!({
                            "complex": spec.complex().to_string(),
                            "levels": spec.levels(),
                            "formula_rank": big(&v.formula_rank),
                            "oracle_rank": v.oracle_rank.as_ref().map(big),
                        }));
                    }
                }
            }
            Err(e) => {
                t.checked += 1;
                t.disagreements += 1;
                problems.push(json!({
                    "complex": spec.complex().to_string(),
                    "levels": spec.levels(),
                    "error": e.to_string(),
                }));
            }
        }
    }
    let mut total = Tally::default();
    for t in &tallies {
        total.merge(t);
    }
    let total_complexes: usize = groups.iter().map(|g| g.complexes).sum();

    match output {
        OutputFormat::Json => {
            let rows: Vec<Value> = groups
                .iter()
                .zip(&tallies)
                .map(|(g, t)| t.json(&g.label, Some(g.m), g.complexes))
                .collect();
            print_json(&json!({
                "levels": a.levels,
                "seed": a.seed,
                "rows": rows,
                "total": total.json("total", None, total_complexes),
                "problems": problems,
            }));
        }
        OutputFormat::Text => {
            println!(
                "{:<14}{:>10}{:>8}{:>9}{:>9}{:>15}  rank_range",
                "group", "complexes", "cases", "checked", "skipped", "disagreements"
            );
            let row = |label: &str, complexes: usize, t: &Tally| {
                println!(
                    "{:<14}{:>10}{:>8}{:>9}{:>9}{:>15}  {}",
                    label,
                    complexes,
                    t.cases,
                    t.checked,
                    t.skipped(),
                    t.disagreements,
                    t.range()
                );
            };
            for (g, t) in groups.iter().zip(&tallies) {
                row(&g.label, g.complexes, t);
            }
            row("total", total_complexes, &total);
            for p in &problems {
                println!("DISAGREEMENT {p}");
            }
        }
    }
    Ok(if total.disagreements > 0 { DISAGREE } else { OK })
}

pub fn dump_matrix(input: &InputArgs, levels: &LevelArgs, size_cap: u128) -> Result<Status> {
    let spec = model_spec(load(input)?, levels)?;
    let mat = build_design_matrix(&spec, size_cap).context("cannot build the design matrix")?;
    print!("{}", mat.to_text());
    Ok(OK)
}
