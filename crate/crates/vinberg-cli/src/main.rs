//! Command-line frontend: orbit tables, containment diagrams, Hilbert data,
//! Euler-level complexes, Bott's algorithm, and the end-to-end regression
//! against the stored tables.

use clap::{Args, Parser, Subcommand};
use std::collections::HashMap;
use std::process::ExitCode;
use vinberg_core::bott::{bott_gl, gl_bott_dim, GlBott};
use vinberg_core::cases::{Case, CaseId};
use vinberg_core::geomtech::{prop_disjointness, Coh};
use vinberg_core::verify::{
    self, hasse_dot, load_case_data, orbit_geometry, present_terms, verify_case, CaseData,
    Status, VerifyOptions,
};

/// Exact orbit data for the theta-representations of E6, F4 and G2.
#[derive(Parser)]
#[command(name = "vinberg", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct CaseArg {
    /// case id such as E6.2, F4.4 or G2.2
    case: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the ten study cases
    ListCases,
    /// Grading dimensions of one case
    Grade {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long)]
        json: bool,
    },
    /// Orbit classification of one case
    Orbits {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long)]
        json: bool,
        /// compare against the stored tables
        #[arg(long)]
        verify: bool,
    },
    /// Containment diagram of one case
    Hasse {
        #[command(flatten)]
        case: CaseArg,
        /// write the diagram as DOT to this path
        #[arg(long)]
        dot: Option<std::path::PathBuf>,
        /// fail on any printed cover the limit search cannot certify
        #[arg(long)]
        strict: bool,
    },
    /// Hilbert numerator and degree of one orbit closure
    Hilbert {
        #[command(flatten)]
        case: CaseArg,
        /// orbit index as in the tables
        orbit: usize,
        #[arg(long)]
        json: bool,
    },
    /// Euler-level terms of the complex attached to one orbit closure
    Resolve {
        #[command(flatten)]
        case: CaseArg,
        orbit: usize,
        #[arg(long)]
        json: bool,
    },
    /// Cohomological disjointness evidence for normality (j <= jmax)
    Evidence {
        #[command(flatten)]
        case: CaseArg,
        orbit: usize,
        #[arg(long, default_value_t = 4)]
        jmax: usize,
    },
    /// Bott's algorithm on a Grassmannian: --space grass:r,n --weight "l1,..;m1,.."
    Bott {
        #[arg(long)]
        space: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Run the full pipeline for the given cases (or all) and diff against
    /// the stored tables
    VerifyPaper {
        /// case ids; empty means all ten
        cases: Vec<String>,
        /// fail on logged inconsistencies too
        #[arg(long)]
        strict: bool,
        /// parallel worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn parse_case(s: &str) -> Result<CaseId, String> {
    CaseId::parse(s).map_err(|e| e.to_string())
}

fn load(case: &str) -> Result<CaseData, String> {
    load_case_data(parse_case(case)?)
}

fn orbit_row(data: &CaseData, pos: usize) -> serde_json::Value {
    let o = &data.orbits[pos];
    let case = &data.case;
    let fixture_index = data
        .matched
        .iter()
        .find(|(_, &c)| c == pos)
        .map(|(&f, _)| f);
    let rep: Vec<serde_json::Value> = o
        .rep
        .iter()
        .map(|&(r, _)| serde_json::json!(case.gl.rs.roots[r].clone()))
        .collect();
    let coeffs: Vec<i64> = o.rep.iter().map(|&(_, c)| c).collect();
    let mut row = serde_json::json!({
        "i": fixture_index,
        "type": o.label,
        "dim": o.dim,
        "rep": rep,
    });
    if coeffs.iter().any(|&c| c != 1) {
        row["coeffs"] = serde_json::json!(coeffs);
    }
    if !o.rep.is_empty() && case.scheme != vinberg_core::cases::LabelScheme::RootVector {
        row["labels"] = serde_json::json!(o
            .rep
            .iter()
            .map(|&(r, _)| case.label(r).to_string())
            .collect::<Vec<_>>());
    }
    row
}

fn run() -> Result<u8, String> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::ListCases => {
            for id in CaseId::all() {
                println!("{id}");
            }
            Ok(0)
        }
        Cmd::Grade { case, json } => {
            let c = Case::new(parse_case(&case.case)?).map_err(|e| e.to_string())?;
            let v = c.grading_json();
            if json {
                println!("{}", serde_json::to_string(&v).unwrap());
            } else {
                println!("case {}", c.id);
                println!("  dim g = {}", c.gl.dim_g());
                for &i in c.gl.components.keys() {
                    if i >= 0 {
                        println!("  dim g_{i} = {}", c.gl.dim_component(i));
                    }
                }
                println!(
                    "  Levi factors: {}",
                    c.factors
                        .iter()
                        .map(|f| f.ty.to_string())
                        .collect::<Vec<_>>()
                        .join(" x ")
                );
            }
            Ok(0)
        }
        Cmd::Orbits { case, json, verify } => {
            let data = load(&case.case)?;
            if json {
                let rows: Vec<serde_json::Value> =
                    (0..data.orbits.len()).map(|i| orbit_row(&data, i)).collect();
                let v = serde_json::json!({
                    "case": data.case.id.to_string(),
                    "orbits": rows,
                });
                println!("{}", serde_json::to_string(&v).unwrap());
            } else {
                println!("case {}: {} orbits", data.case.id, data.orbits.len());
                for (pos, o) in data.orbits.iter().enumerate() {
                    let fi = data
                        .matched
                        .iter()
                        .find(|(_, &c)| c == pos)
                        .map(|(&f, _)| f.to_string())
                        .unwrap_or_else(|| "-".into());
                    let labels: Vec<String> = o
                        .rep
                        .iter()
                        .map(|&(r, c)| {
                            let l = if data.case.scheme
                                == vinberg_core::cases::LabelScheme::RootVector
                            {
                                data.case.label(r).to_string()
                            } else {
                                format!("[{}]", data.case.label(r))
                            };
                            if c == 1 {
                                l
                            } else {
                                format!("{c}*{l}")
                            }
                        })
                        .collect();
                    println!(
                        "  O{:<2} {:<8} dim {:<3} {}",
                        fi,
                        o.label,
                        o.dim,
                        labels.join(" + ")
                    );
                }
            }
            if verify {
                let mut v = verify::CaseVerification {
                    id: data.case.id,
                    items: vec![],
                };
                verify::verify_orbits(&data, &mut v);
                let (text, ok) = verify::report(std::slice::from_ref(&v), false);
                eprintln!("{text}");
                if !ok {
                    return Ok(2);
                }
            }
            Ok(0)
        }
        Cmd::Hasse { case, dot, strict } => {
            let data = load(&case.case)?;
            let mut v = verify::CaseVerification {
                id: data.case.id,
                items: vec![],
            };
            let outcome = verify::verify_hasse(&data, &mut v);
            let text = hasse_dot(&data, &outcome);
            match dot {
                Some(path) => {
                    std::fs::write(&path, &text).map_err(|e| e.to_string())?;
                    eprintln!("wrote {}", path.display());
                }
                None => println!("{text}"),
            }
            let (report, _) = verify::report(std::slice::from_ref(&v), strict);
            eprintln!("{report}");
            let bad = v
                .items
                .iter()
                .any(|i| i.status == Status::Fail || (strict && i.strict_fails));
            Ok(if bad { 2 } else { 0 })
        }
        Cmd::Hilbert { case, orbit, json } => {
            let data = load(&case.case)?;
            let pos = *data
                .matched
                .get(&orbit)
                .ok_or_else(|| format!("orbit {orbit} not in the tables for this case"))?;
            let g = orbit_geometry(&data.case, &data.orbits, pos, false)?;
            if json {
                let v = serde_json::json!({
                    "case": data.case.id.to_string(),
                    "orbit": orbit,
                    "codim": g.hilbert.codim,
                    "numerator": g.hilbert.numerator,
                    "degree": g.hilbert.degree,
                    "flags": g.hilbert.flags,
                });
                println!("{}", serde_json::to_string(&v).unwrap());
            } else {
                println!(
                    "case {} orbit {orbit}: codim {}, numerator {:?}, degree {}",
                    data.case.id, g.hilbert.codim, g.hilbert.numerator, g.hilbert.degree
                );
            }
            Ok(0)
        }
        Cmd::Resolve { case, orbit, json } => {
            let data = load(&case.case)?;
            let pos = *data
                .matched
                .get(&orbit)
                .ok_or_else(|| format!("orbit {orbit} not in the tables for this case"))?;
            let g = orbit_geometry(&data.case, &data.orbits, pos, true)?;
            let terms = present_terms(&data.case, &g.reduced);
            if json {
                let v = serde_json::json!({
                    "case": data.case.id.to_string(),
                    "orbit": orbit,
                    "cancelled_ghost_pairs": g.cancelled,
                    "flags": ["euler-level"],
                    "terms": terms.iter().map(|(i, s)| serde_json::json!({
                        "i": i,
                        "summands": s.iter().map(|(w, d, m)| serde_json::json!({
                            "weight": w, "degree": d, "mult": m,
                        })).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string(&v).unwrap());
            } else {
                println!(
                    "case {} orbit {orbit} (Euler-level, {} ghost pairs cancelled):",
                    data.case.id, g.cancelled
                );
                for (i, summands) in &terms {
                    let body: Vec<String> = summands
                        .iter()
                        .map(|(w, d, m)| {
                            if *m > 1 {
                                format!("{m}*({w})(-{d})")
                            } else {
                                format!("({w})(-{d})")
                            }
                        })
                        .collect();
                    println!("  F_{i} = {}", body.join(" + "));
                }
            }
            Ok(0)
        }
        Cmd::Evidence { case, orbit, jmax } => {
            let data = load(&case.case)?;
            let pos = *data
                .matched
                .get(&orbit)
                .ok_or_else(|| format!("orbit {orbit} not in the tables for this case"))?;
            let coh = Coh::new(&data.case);
            let specs = vinberg_core::geomtech::candidate_desingularizations(
                &data.case,
                &data.orbits,
                pos,
            );
            if specs.is_empty() {
                return Err("no desingularization candidate".into());
            }
            let rep = prop_disjointness(&coh, &specs[0], jmax);
            for (j, rs_hits, normal_hits) in &rep.per_j {
                println!(
                    "j = {j}: rational-singularities hits {}, normality hits {}",
                    rs_hits.len(),
                    normal_hits.len()
                );
            }
            println!(
                "evidence: rational singularities {}, normality {}",
                rep.rational_singularities_evidence(),
                rep.normality_evidence()
            );
            Ok(0)
        }
        Cmd::Bott { space, weight } => {
            let spec = space
                .strip_prefix("grass:")
                .ok_or("space must look like grass:r,n")?;
            let (r, n) = spec
                .split_once(',')
                .ok_or("space must look like grass:r,n")?;
            let r: usize = r.trim().parse().map_err(|_| "bad r")?;
            let n: usize = n.trim().parse().map_err(|_| "bad n")?;
            let (lam, mu) = weight
                .split_once(';')
                .ok_or("weight must look like l1,..;m1,..")?;
            let parse_vec = |s: &str| -> Result<Vec<i64>, String> {
                if s.trim().is_empty() {
                    return Ok(vec![]);
                }
                s.split(',')
                    .map(|x| x.trim().parse::<i64>().map_err(|e| e.to_string()))
                    .collect()
            };
            let lam = parse_vec(lam)?;
            let mu = parse_vec(mu)?;
            if lam.len() != n - r || mu.len() != r {
                return Err(format!(
                    "need {} quotient entries and {} sub entries",
                    n - r,
                    r
                ));
            }
            let res = bott_gl(r, n, &lam, &mu);
            let v = match &res {
                GlBott::Zero => serde_json::json!({"zero": true}),
                GlBott::Coh { degree, weight } => serde_json::json!({
                    "zero": false,
                    "cohomological_degree": degree,
                    "weight": weight,
                    "dim": gl_bott_dim(&res, n).to_string(),
                }),
            };
            println!("{}", serde_json::to_string(&v).unwrap());
            Ok(0)
        }
        Cmd::VerifyPaper { cases, strict, jobs } => {
            let ids: Vec<CaseId> = if cases.is_empty() {
                CaseId::all()
            } else {
                let mut v = Vec::new();
                for c in &cases {
                    // bare type names select all nodes of that type
                    if let Ok(id) = CaseId::parse(c) {
                        v.push(id);
                    } else {
                        let matched: Vec<CaseId> = CaseId::all()
                            .into_iter()
                            .filter(|id| id.stype.to_string() == *c)
                            .collect();
                        if matched.is_empty() {
                            return Err(format!("unknown case {c}"));
                        }
                        v.extend(matched);
                    }
                }
                v
            };
            let opts = VerifyOptions::default();
            let mut results: Vec<(usize, verify::CaseVerification)> = Vec::new();
            if jobs <= 1 {
                for (k, id) in ids.iter().enumerate() {
                    results.push((k, verify_case(*id, &opts)?));
                }
            } else {
                let next = std::sync::atomic::AtomicUsize::new(0);
                let results_mx: std::sync::Mutex<
                    Vec<(usize, Result<verify::CaseVerification, String>)>,
                > = std::sync::Mutex::new(Vec::new());
                std::thread::scope(|scope| {
                    for _ in 0..jobs.min(ids.len()) {
                        scope.spawn(|| loop {
                            let k = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                            if k >= ids.len() {
                                break;
                            }
                            let r = verify_case(ids[k], &opts);
                            results_mx.lock().unwrap().push((k, r));
                        });
                    }
                });
                let collected = results_mx.into_inner().unwrap();
                for (k, r) in collected {
                    results.push((k, r?));
                }
            }
            results.sort_by_key(|(k, _)| *k);
            let list: Vec<verify::CaseVerification> =
                results.into_iter().map(|(_, r)| r).collect();
            let (text, ok) = verify::report(&list, strict);
            println!("{text}");
            let mut summary: HashMap<&str, usize> = HashMap::new();
            for cv in &list {
                for item in &cv.items {
                    *summary
                        .entry(match item.status {
                            Status::Pass => "pass",
                            Status::Flagged => "flagged",
                            Status::Fail => "fail",
                        })
                        .or_insert(0) += 1;
                }
            }
            println!(
                "summary: {} pass, {} flagged, {} fail",
                summary.get("pass").unwrap_or(&0),
                summary.get("flagged").unwrap_or(&0),
                summary.get("fail").unwrap_or(&0)
            );
            Ok(if ok { 0 } else { 2 })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
