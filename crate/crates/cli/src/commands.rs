use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use judicious::generators::{random_hypergraph, GeneratorSpec, Instance};
use judicious::local_search::SearchConfig;
use judicious::oracle::{bipartition_report, tripartition_report, OracleReport};
use judicious::ratio::GOOD;
use judicious::{solve, verify_good, Hypergraph3, Ratio, Tripartition, Vertex};

use crate::format::{self, InstanceFile};
use crate::CliError;

/// Result of a command: text for stdout, an optional note for stderr and
/// the exit status (0, or 1 when a bound was not met).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: Option<String>,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: None, code: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    /// 1-based vertex ids per part.
    pub parts: Vec<Vec<u64>>,
    pub degrees: Vec<u64>,
    pub m: u64,
    pub threshold: Ratio,
    pub meets_bound: bool,
    pub method: Option<String>,
}

#[derive(Debug, Deserialize)]
struct PartsOnly {
    parts: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleJson {
    pub instance: String,
    pub mode: String,
    pub objective: Option<u64>,
    /// 1-based vertex ids per part.
    pub witness: Option<Vec<Vec<u64>>>,
    pub instances_checked: u64,
    pub failure_count: u64,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    Tri,
    Bi,
}

impl std::str::FromStr for OracleMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "tri" => Ok(OracleMode::Tri),
            "bi" => Ok(OracleMode::Bi),
            _ => Err(format!("unknown mode `{s}` (expected tri or bi)")),
        }
    }
}

fn one_based(parts: &[Vec<Vertex>]) -> Vec<Vec<u64>> {
    parts.iter().map(|p| p.iter().map(|&v| u64::from(v) + 1).collect()).collect()
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn hypergraph(text: &str) -> Result<Hypergraph3, CliError> {
    match format::parse(text)? {
        InstanceFile::Hypergraph(g) => Ok(g),
        InstanceFile::Special(_) => {
            Err(CliError::Input("expected a `p h3` instance, found `p smg`".into()))
        }
    }
}

fn partition_json(p: &Tripartition, cert: &judicious::Certificate) -> PartitionJson {
    let parts: Vec<Vec<Vertex>> = judicious::Class::ALL.iter().map(|&c| p.members(c)).collect();
    PartitionJson {
        parts: one_based(&parts),
        degrees: cert.degrees.clone(),
        m: cert.m,
        threshold: cert.threshold,
        meets_bound: cert.meets_bound,
        method: cert.method.map(|m| m.to_string()),
    }
}

pub fn partition(text: &str, cfg: &SearchConfig) -> Result<Output, CliError> {
    let g = hypergraph(text)?;
    let out = solve(&g, cfg)?;
    let json = to_json(&partition_json(&out.partition, &out.certificate));
    Ok(Output {
        stdout: json,
        stderr: out.warning,
        code: if out.certificate.meets_bound { 0 } else { 1 },
    })
}

/// Recomputes the degrees of the parts listed in `json`; any other fields
/// in it are ignored.
pub fn verify(instance: &str, json: &str) -> Result<Output, CliError> {
    let g = hypergraph(instance)?;
    let given: PartsOnly =
        serde_json::from_str(json).map_err(|e| CliError::Input(format!("partition JSON: {e}")))?;
    if given.parts.len() != 3 {
        return Err(CliError::Input(format!("expected 3 parts, found {}", given.parts.len())));
    }
    let mut sets: Vec<Vec<Vertex>> = Vec::with_capacity(3);
    for part in &given.parts {
        let mut set = Vec::with_capacity(part.len());
        for &id in part {
            if id == 0 || id > g.n() as u64 {
                return Err(CliError::Input(format!("vertex {id} outside 1..={}", g.n())));
            }
            set.push((id - 1) as Vertex);
        }
        sets.push(set);
    }
    let p = Tripartition::from_sets(g.n(), [&sets[0], &sets[1], &sets[2]])?;
    let cert = verify_good(&g, &p)?;
    let code = if cert.meets_bound { 0 } else { 1 };
    Ok(Output { stdout: to_json(&partition_json(&p, &cert)), stderr: None, code })
}

pub fn oracle(text: &str, mode: Option<OracleMode>, cap: u64) -> Result<Output, CliError> {
    let instance = format::parse(text)?;
    let (mode, report): (OracleMode, OracleReport) = match (instance, mode) {
        (InstanceFile::Hypergraph(g), None | Some(OracleMode::Tri)) => {
            (OracleMode::Tri, tripartition_report(&g, cap)?)
        }
        (InstanceFile::Special(g), None | Some(OracleMode::Bi)) => {
            (OracleMode::Bi, bipartition_report(&g, cap)?)
        }
        (InstanceFile::Hypergraph(_), Some(OracleMode::Bi)) => {
            return Err(CliError::Input("mode bi needs a `p smg` instance".into()))
        }
        (InstanceFile::Special(_), Some(OracleMode::Tri)) => {
            return Err(CliError::Input("mode tri needs a `p h3` instance".into()))
        }
    };
    let json = OracleJson {
        instance: report.instance,
        mode: match mode {
            OracleMode::Tri => "tri".into(),
            OracleMode::Bi => "bi".into(),
        },
        objective: report.objective,
        witness: report.witness.as_deref().map(one_based),
        instances_checked: report.instances_checked,
        failure_count: report.failure_count,
        failures: report.failures,
    };
    Ok(Output::ok(to_json(&json)))
}

pub const CSV_HEADER: &str =
    "n,m,seed,min_degree,threshold_num,threshold_den,ratio_millis,method,restarts_used";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentArgs {
    pub n: usize,
    pub m: usize,
    pub count: u64,
    pub seed: u64,
}

/// Instance `i` is `random_hypergraph(n, m, seed + i)` solved with that same
/// seed. Rows come out in instance order.
pub fn experiment(args: &ExperimentArgs, cfg: &SearchConfig) -> Result<Output, CliError> {
    // fail on bad parameters before spawning work
    if args.count > 0 {
        random_hypergraph(args.n, args.m, args.seed)?;
        if args.m == 0 {
            return Err(CliError::Input("experiment needs m >= 1".into()));
        }
    }
    let rows: Vec<Result<(String, bool), CliError>> = (0..args.count)
        .into_par_iter()
        .map(|i| {
            let seed = args.seed.wrapping_add(i);
            let g = random_hypergraph(args.n, args.m, seed)?;
            let out = solve(&g, &SearchConfig { seed, ..cfg.clone() })?;
            let cert = &out.certificate;
            let min = cert.min_degree();
            let method = cert.method.map_or("none", |m| m.as_str());
            let row = format!(
                "{},{},{},{},{},{},{},{},{}",
                args.n,
                g.m(),
                seed,
                min,
                GOOD.num,
                GOOD.den,
                min * 1000 / g.m(),
                method,
                out.restarts_used
            );
            Ok((row, cert.meets_bound))
        })
        .collect();
    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    let mut all_met = true;
    for row in rows {
        let (line, met) = row?;
        all_met &= met;
        csv.push_str(&line);
        csv.push('\n');
    }
    Ok(Output { stdout: csv, stderr: None, code: if all_met { 0 } else { 1 } })
}

pub fn generate(spec: &GeneratorSpec) -> Result<Output, CliError> {
    let text = match spec.build()? {
        Instance::Hypergraph(g) => format::serialize_h3(&g),
        Instance::Special(g) => format::serialize_smg(&g),
    };
    Ok(Output::ok(text))
}
