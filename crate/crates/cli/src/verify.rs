//! `verify`: independent (b₂, split) jobs checked in parallel.

use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use minimal4::{
    closed_form_ranks, extend_stage, init_stage, verify_stage, BuildOptions, CohomologyAlgebra, SullivanError,
};
use serde::Serialize;

use crate::document::ModelDocument;
use crate::{Format, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Job {
    pub split: (usize, usize),
    pub max_degree: u32,
}

#[derive(Serialize)]
pub struct JobResult {
    pub b2: usize,
    pub split: (usize, usize),
    pub max_degree: u32,
    pub stages_verified: u32,
    pub ranks: Option<BTreeMap<u32, u64>>,
    pub failures: Vec<String>,
    pub guard: Option<String>,
}

impl JobResult {
    fn status(&self) -> Status {
        if !self.failures.is_empty() {
            Status::Failed
        } else if self.guard.is_some() {
            Status::Guard
        } else {
            Status::Ok
        }
    }
}

pub fn plan(b2: Option<usize>, split: Option<(usize, usize)>, all_splits: bool, max_degree: u32) -> Result<Vec<Job>> {
    if max_degree < 2 {
        bail!("--max-degree must be at least 2");
    }
    let range: Vec<usize> = match (b2, split) {
        (_, Some((p, q))) => {
            if b2.is_some_and(|b| b != p + q) {
                bail!("split {p},{q} does not add up to b2");
            }
            return Ok(vec![Job { split: (p, q), max_degree }]);
        }
        (Some(b), None) => vec![b],
        (None, None) => (0..=6).collect(),
    };
    Ok(range
        .into_iter()
        .flat_map(|b| {
            let splits: Vec<(usize, usize)> =
                if all_splits { (0..=b).map(|p| (p, b - p)).collect() } else { vec![(b, 0)] };
            splits.into_iter().map(move |split| Job { split, max_degree })
        })
        .collect())
}

pub fn run_job(job: Job, guard: usize) -> JobResult {
    let (p, q) = job.split;
    let mut result = JobResult {
        b2: p + q,
        split: job.split,
        max_degree: job.max_degree,
        stages_verified: 0,
        ranks: None,
        failures: Vec::new(),
        guard: None,
    };
    let a = CohomologyAlgebra::four_manifold(p, q);
    let opts = BuildOptions { guard, ..Default::default() };
    let mut stage = match init_stage(&a) {
        Ok(s) => s,
        Err(e) => {
            result.failures.push(e.to_string());
            return result;
        }
    };
    loop {
        let report = verify_stage(&stage, &a, guard);
        for c in report.failures() {
            let witness = c.witness.as_deref().unwrap_or("");
            if witness.contains("guard limit") {
                result.guard = Some(format!("k = {}: {witness}", stage.k()));
            } else {
                result.failures.push(format!("k = {}: {}: {witness}", stage.k(), c.name));
            }
        }
        if result.guard.is_some() || !result.failures.is_empty() {
            break;
        }
        result.stages_verified += 1;
        if stage.k() >= job.max_degree {
            break;
        }
        match extend_stage(&stage, &a, &opts) {
            Ok((next, _)) => stage = next,
            Err(e) if e.is_guard() => {
                result.guard = Some(e.to_string());
                break;
            }
            Err(e) => {
                result.failures.push(format!("k = {}: {e}", stage.k()));
                break;
            }
        }
    }
    let ranks = stage.rank_table();
    let formula = closed_form_ranks((p + q) as u64, job.max_degree);
    for d in 2..=stage.k() {
        if let Some(f) = formula.rank(d) {
            if ranks.get(d) != Some(f) {
                result.failures.push(format!("degree {d}: engine {:?}, closed form {f}", ranks.get(d)));
            }
        }
    }
    result.ranks = Some(ranks.entries().clone());
    result
}

pub fn run_jobs(jobs: &[Job], guard: usize, format: Format) -> Status {
    let mut results: Vec<JobResult> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs.iter().map(|&job| scope.spawn(move || run_job(job, guard))).collect();
        handles.into_iter().map(|h| h.join().expect("verify job panicked")).collect()
    });
    // splits of the same b2 must give the same table
    let mut consistency = Vec::new();
    for i in 1..results.len() {
        let (prev, cur) = (&results[i - 1], &results[i]);
        if prev.b2 == cur.b2 && prev.ranks.is_some() && cur.ranks.is_some() && prev.ranks != cur.ranks {
            consistency.push((i, format!("ranks differ from split {:?}", prev.split)));
        }
    }
    for (i, msg) in consistency {
        results[i].failures.push(msg);
    }
    let status = results.iter().map(JobResult::status).fold(Status::Ok, worse);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&results).expect("results serialize")),
        Format::Table => {
            for r in &results {
                let tag = match r.status() {
                    Status::Ok => "PASS ",
                    Status::Failed => "FAIL ",
                    Status::Guard => "GUARD",
                };
                let ranks = r.ranks.as_ref().map_or_else(String::new, |t| {
                    t.iter().map(|(d, n)| format!("{d}:{n}")).collect::<Vec<_>>().join(" ")
                });
                println!(
                    "{tag}  b2={} split=({},{}) D={}  stages={}  ranks {ranks}",
                    r.b2, r.split.0, r.split.1, r.max_degree, r.stages_verified
                );
                for f in &r.failures {
                    println!("       {f}");
                }
                if let Some(g) = &r.guard {
                    println!("       {g}");
                }
            }
            let failed = results.iter().filter(|r| r.status() != Status::Ok).count();
            println!("{} of {} jobs passed", results.len() - failed, results.len());
        }
    }
    status
}

fn worse(a: Status, b: Status) -> Status {
    match (a, b) {
        (Status::Failed, _) | (_, Status::Failed) => Status::Failed,
        (Status::Guard, _) | (_, Status::Guard) => Status::Guard,
        _ => Status::Ok,
    }
}

pub fn verify_fixture(path: &str, guard: usize, format: Format) -> Result<Status> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading fixture {path}"))?;
    let doc: ModelDocument = serde_json::from_str(&text).with_context(|| format!("parsing fixture {path}"))?;
    let (stage, algebra) = match doc.to_stage(guard) {
        Ok(x) => x,
        Err(e) if e.downcast_ref::<SullivanError>().is_some_and(SullivanError::is_guard) => {
            eprintln!("error: {e:#}");
            return Ok(Status::Guard);
        }
        Err(e) => return Err(e),
    };
    let report = verify_stage(&stage, &algebra, guard);
    match format {
        Format::Json => {
            let checks: Vec<_> = report
                .checks
                .iter()
                .map(|c| serde_json::json!({"name": c.name, "passed": c.passed, "witness": c.witness}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&checks).expect("checks serialize"));
        }
        Format::Table => {
            for c in &report.checks {
                match &c.witness {
                    None => println!("PASS  {}", c.name),
                    Some(w) => println!("FAIL  {}: {w}", c.name),
                }
            }
        }
    }
    Ok(if report.passed() { Status::Ok } else { Status::Failed })
}
