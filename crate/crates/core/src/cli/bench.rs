//! Benchmark suites: run jobs under several methods and compare the results.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::input::{adapt_element, ElementDoc, SpecDoc};
use super::ms;
use crate::diophantine::{sound_bound, Antichain, Limits};
use crate::error::{Error, Result};
use crate::omega::{omega_element, two_gen_params, Method, OmegaOptions};
use crate::semigroup::{Element, Monoid};
use crate::vector::{serialize_biguint, NVec};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Suite {
    #[serde(default)]
    pub jobs: Vec<Job>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Job {
    pub id: String,
    /// `omega-elem`, `minimals` or `omega-sg`.
    pub command: String,
    pub spec: SpecDoc,
    #[serde(default)]
    pub element: Option<ElementDoc>,
    /// Defaults to every method applicable to the monoid.
    #[serde(default)]
    pub methods: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub job_id: String,
    pub mode: String,
    pub command: String,
    pub method: Method,
    #[serde(serialize_with = "serialize_biguint")]
    pub value: num_bigint::BigUint,
    pub minimals_count: usize,
    pub elapsed_ms: f64,
    /// All methods of the same job (and generator) returned the same minimal set.
    pub agree: bool,
    #[serde(skip)]
    minimals: Antichain,
}

impl Suite {
    pub fn read(path: &Path) -> Result<Suite> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidSpec(format!("{}: {e}", path.display())))?;
        Suite::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Suite> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(format!("suite: {e}")))
    }
}

fn applicable(monoid: &Monoid) -> Vec<Method> {
    let mut methods = vec![Method::Engine];
    if two_gen_params(monoid).is_some() {
        methods.push(Method::TwoGenClosed);
    }
    let p = monoid.arity();
    if sound_bound(monoid, &NVec::zeros(p)).is_ok() {
        methods.push(Method::Oracle);
    }
    methods
}

fn job_methods(job: &Job, monoid: &Monoid) -> Result<Vec<Method>> {
    match &job.methods {
        None => Ok(applicable(monoid)),
        Some(names) => names
            .iter()
            .map(|n| {
                Method::parse(n)
                    .ok_or_else(|| Error::InvalidSpec(format!("job {}: unknown method {n:?}", job.id)))
            })
            .collect(),
    }
}

/// Runs every job and method. Rows come out in suite order, then generator
/// order, then method order.
pub fn run_suite(suite: &Suite, limits: &Limits) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for job in &suite.jobs {
        let raw = job.spec.to_spec()?;
        let monoid = Monoid::new(&raw)?;
        let targets: Vec<(String, Element)> = match job.command.as_str() {
            "omega-elem" | "minimals" => {
                let doc = job
                    .element
                    .as_ref()
                    .or(job.spec.element.as_ref())
                    .ok_or_else(|| {
                        Error::InvalidSpec(format!("job {}: {} needs an element", job.id, job.command))
                    })?;
                let elem = adapt_element(&raw, &monoid, doc.to_element()?)?;
                vec![(job.id.clone(), elem)]
            }
            "omega-sg" => {
                let p = monoid.arity();
                (0..p)
                    .map(|i| {
                        (
                            format!("{}/e{}", job.id, i + 1),
                            Element::Expression(NVec::unit(p, i)),
                        )
                    })
                    .collect()
            }
            other => {
                return Err(Error::InvalidSpec(format!(
                    "job {}: command {other:?} cannot be benchmarked",
                    job.id
                )))
            }
        };
        let methods = job_methods(job, &monoid)?;
        for (id, elem) in targets {
            let first = rows.len();
            for &method in &methods {
                let opts = OmegaOptions {
                    limits: *limits,
                    method: Some(method),
                    cross_check: false,
                };
                let report = omega_element(&monoid, &elem, &opts)?;
                rows.push(BenchRow {
                    job_id: id.clone(),
                    mode: monoid.mode().name().to_string(),
                    command: job.command.clone(),
                    method,
                    value: report.value,
                    minimals_count: report.minimals.len(),
                    elapsed_ms: ms(report.elapsed),
                    agree: true,
                    minimals: report.minimals,
                });
            }
            let group = &mut rows[first..];
            let agree = group
                .iter()
                .all(|r| r.value == group[0].value && r.minimals == group[0].minimals);
            for r in group.iter_mut() {
                r.agree = agree;
            }
        }
    }
    Ok(rows)
}

pub const CSV_HEADER: &str = "job_id,mode,command,method,value,minimals_count,elapsed_ms,agree";

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn write_csv(rows: &[BenchRow], out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            csv_field(&r.job_id),
            r.mode,
            csv_field(&r.command),
            r.method,
            r.value,
            r.minimals_count,
            r.elapsed_ms,
            r.agree
        )?;
    }
    Ok(())
}

pub fn report_json(rows: &[BenchRow]) -> Value {
    json!({
        "rows": rows,
        "all_agree": rows.iter().all(|r| r.agree),
    })
}
