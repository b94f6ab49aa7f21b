use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use nlcone::cone::{
    hilbert_basis, irredundancy_certify, nl_cone_facets, rays_from_facets, table_row,
    verify_saturation, Lattice, TableRow,
};
use nlcone::horn::{self, Family, Inequality};
use nlcone::lr::{lr, lr_v1, lr_v2, lr_v3};
use nlcone::nl::{nl, nl_multiple};
use nlcone::partition::parse_partition_list;
use nlcone::tableau::{demote, rectify, rsk, rsk_inverse, Biword, SkewShape, Tableau};
use nlcone::{HornDatum, Partition, Subset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

const SCHEMA: &str = "nlcone/1";
const MAX_N: u32 = 7;

#[derive(Parser)]
#[command(name = "nlcone", version, about = "Newell-Littlewood numbers and the saturated NL-cone")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
    /// Worker threads (defaults to available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Littlewood-Richardson coefficient c^ν_{λ,μ}.
    Lr {
        /// "λ;μ;ν"
        #[arg(long)]
        parts: String,
        #[arg(long, value_enum, default_value_t = Rule::Memo)]
        rule: Rule,
    },
    /// Newell-Littlewood number N_{λ,μ,ν}.
    Nl(NlArgs),
    /// Multiple Newell-Littlewood number of s >= 3 partitions.
    Mnl {
        #[arg(long)]
        parts: String,
    },
    /// RSK of a word, or of a biword given by --top and --bottom; with
    /// --inverse, reads P and Q from --p and --q (rows separated by ';').
    Rsk {
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        #[arg(long)]
        top: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        bottom: Option<String>,
        #[arg(long)]
        inverse: bool,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long)]
        q: Option<String>,
    },
    /// Rectify a skew tableau by jeu de taquin.
    Rectify(SkewArgs),
    /// Demote a ballot tableau at an inner corner.
    Demote {
        #[command(flatten)]
        tableau: SkewArgs,
        /// "row,col" (1-based)
        #[arg(long)]
        corner: String,
    },
    /// List an inequality family.
    Ineq {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "minimal")]
        family: Family,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Membership of a rational triple in the cone of a family.
    Member {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "minimal")]
        family: Family,
        /// "λ;μ;ν" with rational parts, e.g. "3/2,1;1;1/2"
        #[arg(long)]
        parts: String,
    },
    /// Boundary factorization along a minimal inequality.
    Factor {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        parts: String,
        /// Index into the `ineq --family minimal` listing, or
        /// "A;A';B;B';C;C'" with comma-separated elements.
        #[arg(long)]
        datum: String,
    },
    /// Rays, Hilbert basis and facet certificates of the NL-cone.
    Cone {
        #[arg(long)]
        n: u32,
        /// List the extremal rays.
        #[arg(long)]
        rays: bool,
        #[arg(long, value_enum)]
        hilbert: Option<LatticeArg>,
        #[arg(long)]
        certify: bool,
    },
    /// Check N > 0 on the even-lattice Hilbert basis.
    Saturation {
        #[arg(long)]
        n: u32,
    },
    /// Summary table: chamber+facets | EHI | rays | Hilbert(Λ₂) | Hilbert(Λ).
    Table {
        #[arg(long, default_value_t = 3)]
        max_n: u32,
        /// Largest n for the ray and Hilbert columns.
        #[arg(long, default_value_t = 4)]
        polyhedral_max_n: u32,
        #[arg(long)]
        csv: bool,
    },
    /// Randomized cross-checks of the LR rules and the two inequality
    /// families.
    Check {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct NlArgs {
    /// Bound on the lengths of the partitions.
    #[arg(long)]
    n: Option<u32>,
    /// "λ;μ;ν"
    #[arg(long)]
    parts: String,
}

#[derive(Args)]
struct SkewArgs {
    #[arg(long)]
    outer: String,
    #[arg(long, default_value = "")]
    inner: String,
    /// Entries of the skew rows, rows separated by ';'.
    #[arg(long, allow_hyphen_values = true)]
    rows: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    V1,
    V2,
    V3,
    Memo,
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeArg {
    Even,
    Full,
}

impl From<LatticeArg> for Lattice {
    fn from(l: LatticeArg) -> Self {
        match l {
            LatticeArg::Even => Lattice::Even,
            LatticeArg::Full => Lattice::Full,
        }
    }
}

/// Bad input, reported with exit status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(e: impl std::fmt::Display) -> anyhow::Error {
    anyhow!(Usage(e.to_string()))
}

struct Outcome {
    text: String,
    json: Value,
    /// A verification step failed.
    failed: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, failed: false }
    }
}

fn check_n(n: u32) -> anyhow::Result<()> {
    if !(1..=MAX_N).contains(&n) {
        return Err(usage(format!("n = {n} is outside the supported range 1..={MAX_N}")));
    }
    Ok(())
}

fn triple(s: &str, n: Option<u32>) -> anyhow::Result<[Partition; 3]> {
    let parts = parse_partition_list(s).map_err(usage)?;
    let [a, b, c]: [Partition; 3] = parts
        .try_into()
        .map_err(|v: Vec<Partition>| usage(format!("expected 3 partitions, got {}", v.len())))?;
    if let Some(n) = n {
        check_n(n)?;
        if [&a, &b, &c].iter().any(|p| p.len() > n as usize) {
            return Err(usage(format!("a partition has more than {n} parts")));
        }
    }
    Ok([a, b, c])
}

fn int_list(s: &str) -> anyhow::Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| usage(format!("bad integer list {s:?}"))))
        .collect()
}

fn rows_of(s: &str) -> anyhow::Result<Vec<Vec<i64>>> {
    s.split(';').map(int_list).collect()
}

fn skew_tableau(a: &SkewArgs) -> anyhow::Result<Tableau> {
    let outer: Partition = a.outer.parse().map_err(usage)?;
    let inner: Partition = a.inner.parse().map_err(usage)?;
    let shape = SkewShape::new(outer, inner).map_err(usage)?;
    Tableau::new(shape, rows_of(&a.rows)?).map_err(usage)
}

fn tableau_json(t: &Tableau) -> Value {
    serde_json::to_value(t).expect("tableau serializes")
}

fn datum_string(d: &HornDatum) -> String {
    d.pairs()
        .iter()
        .flat_map(|(a, b)| [*a, *b])
        .map(|s| s.elements().iter().map(u32::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

fn parse_datum(n: u32, s: &str) -> anyhow::Result<HornDatum> {
    let sets: Vec<Subset> = s
        .split(';')
        .map(|t| Subset::parse(n, t))
        .collect::<Result<_, _>>()
        .map_err(usage)?;
    let [a, ap, b, bp, c, cp]: [Subset; 6] = sets
        .try_into()
        .map_err(|v: Vec<Subset>| usage(format!("expected 6 subsets, got {}", v.len())))?;
    HornDatum::new(a, ap, b, bp, c, cp).map_err(usage)
}

fn ineq_json(q: &Inequality) -> Value {
    let mut v = json!({ "coeffs": q.coeffs, "family": q.family });
    if let Some(d) = &q.datum {
        let sets = d.pairs().into_iter().flat_map(|(a, b)| [a, b]);
        for (key, set) in ["A", "A'", "B", "B'", "C", "C'"].into_iter().zip(sets) {
            v[key] = json!(set.elements());
        }
        v["r"] = json!(d.r);
    }
    v
}

fn family(n: u32, family: Family) -> Vec<Inequality> {
    match family {
        Family::Minimal => horn::minimal_inequalities(n),
        Family::ExtendedHorn => horn::extended_horn_inequalities(n),
        Family::Chamber => horn::chamber_inequalities(n),
    }
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    Ok(match cli.command {
        Command::Lr { parts, rule } => {
            let [l, m, v] = triple(&parts, None)?;
            let c = match rule {
                Rule::V1 => lr_v1(&l, &m, &v),
                Rule::V2 => lr_v2(&l, &m, &v),
                Rule::V3 => lr_v3(&l, &m, &v),
                Rule::Memo => lr(&l, &m, &v),
            };
            Outcome::ok(c.to_string(), json!({ "command": "lr", "parts": [l, m, v], "value": c }))
        }
        Command::Nl(NlArgs { n, parts }) => {
            let [l, m, v] = triple(&parts, n)?;
            let c = nl(&l, &m, &v);
            Outcome::ok(c.to_string(), json!({ "command": "nl", "parts": [l, m, v], "value": c.to_string() }))
        }
        Command::Mnl { parts } => {
            let ps = parse_partition_list(&parts).map_err(usage)?;
            let c = nl_multiple(&ps).map_err(usage)?;
            Outcome::ok(c.to_string(), json!({ "command": "mnl", "parts": ps, "value": c.to_string() }))
        }
        Command::Rsk { word, top, bottom, inverse, p, q } => {
            if inverse {
                let (Some(p), Some(q)) = (p, q) else {
                    bail!(usage("--inverse needs --p and --q"));
                };
                let p = Tableau::from_rows(rows_of(&p)?).map_err(usage)?;
                let q = Tableau::from_rows(rows_of(&q)?).map_err(usage)?;
                let b = rsk_inverse(&p, &q).map_err(usage)?;
                let fmt = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
                Outcome::ok(
                    format!("top: {}\nbottom: {}", fmt(b.top()), fmt(b.bottom())),
                    json!({ "command": "rsk", "top": b.top(), "bottom": b.bottom() }),
                )
            } else {
                let b = match (word, top, bottom) {
                    (Some(w), None, None) => Biword::from_word(&int_list(&w)?),
                    (None, Some(t), Some(b)) => Biword::new(int_list(&t)?, int_list(&b)?).map_err(usage)?,
                    _ => bail!(usage("give either --word or both --top and --bottom")),
                };
                let (p, q) = rsk(&b);
                Outcome::ok(
                    format!("P:\n{}Q:\n{}", p.render(), q.render()),
                    json!({ "command": "rsk", "p": tableau_json(&p), "q": tableau_json(&q) }),
                )
            }
        }
        Command::Rectify(a) => {
            let t = skew_tableau(&a)?;
            let r = rectify(&t);
            Outcome::ok(r.render(), json!({ "command": "rectify", "result": tableau_json(&r) }))
        }
        Command::Demote { tableau, corner } => {
            let t = skew_tableau(&tableau)?;
            let c = int_list(&corner)?;
            let [r, col] = c[..] else {
                bail!(usage("--corner expects \"row,col\""));
            };
            if r < 1 || col < 1 {
                bail!(usage("corner coordinates are 1-based"));
            }
            let (out, row) = demote(&t, (r as usize, col as usize)).map_err(usage)?;
            Outcome::ok(
                format!("{}row: {row}", out.render()),
                json!({ "command": "demote", "result": tableau_json(&out), "row": row }),
            )
        }
        Command::Ineq { n, family: fam, count } => {
            check_n(n)?;
            let report = horn::inequalities_with_report(n, fam);
            let list = report.inequalities;
            let text = if count {
                list.len().to_string()
            } else {
                let mut s: Vec<String> = list
                    .iter()
                    .enumerate()
                    .map(|(i, q)| match &q.datum {
                        Some(d) => format!("{i}\t{q}\t{}", datum_string(d)),
                        None => format!("{i}\t{q}"),
                    })
                    .collect();
                s.push(format!("count: {}", list.len()));
                s.join("\n")
            };
            Outcome::ok(
                text,
                json!({
                    "command": "ineq", "n": n, "family": fam, "count": list.len(),
                    "merged": report.merged,
                    "items": list.iter().map(ineq_json).collect::<Vec<_>>(),
                }),
            )
        }
        Command::Member { n, family: fam, parts } => {
            check_n(n)?;
            let rat: Vec<_> = parts
                .split(';')
                .map(horn::parse_rational_partition)
                .collect::<Result<_, _>>()
                .map_err(usage)?;
            if rat.len() != 3 {
                bail!(usage(format!("expected 3 partitions, got {}", rat.len())));
            }
            let ineqs = family(n, fam);
            let v = horn::is_member(n as usize, &rat[0], &rat[1], &rat[2], &ineqs).map_err(usage)?;
            let mut text = v.member.to_string();
            if let Some(q) = &v.violated {
                text.push_str(&format!("\nviolated: {q}"));
            }
            Outcome::ok(
                text,
                json!({ "command": "member", "n": n, "family": fam, "member": v.member,
                        "violated": v.violated.as_ref().map(ineq_json) }),
            )
        }
        Command::Factor { n, parts, datum } => {
            let [l, m, v] = triple(&parts, Some(n))?;
            // either an index into the minimal list or "A;A';B;B';C;C'"
            let d = match datum.trim().parse::<usize>() {
                Ok(i) => {
                    let list = horn::minimal_inequalities(n);
                    let count = list.len();
                    list.into_iter().nth(i).and_then(|q| q.datum).ok_or_else(|| {
                        usage(format!("index {i} out of range ({count} minimal inequalities)"))
                    })?
                }
                Err(_) => parse_datum(n, &datum)?,
            };
            let f = horn::factor_boundary(&l, &m, &v, &d).map_err(usage)?;
            let direct = nl(&l, &m, &v);
            Outcome {
                text: format!(
                    "lr_factor: {}\nnl_factor: {}\nproduct: {}\nnl: {direct}",
                    f.lr_factor, f.nl_factor, f.product
                ),
                json: json!({ "command": "factor", "lr_factor": f.lr_factor,
                              "nl_factor": f.nl_factor.to_string(), "product": f.product.to_string(),
                              "nl": direct.to_string() }),
                failed: f.product != direct,
            }
        }
        Command::Cone { n, rays: list_rays, hilbert, certify } => {
            check_n(n)?;
            let facets = nl_cone_facets(n);
            let rays = rays_from_facets(&facets).context("ray computation")?;
            let mut text = vec![format!("dim: {}", 3 * n), format!("facets: {}", facets.len()), format!("rays: {}", rays.len())];
            let mut out = json!({ "command": "cone", "n": n, "dim": 3 * n, "facets": facets.len(), "rays": rays.len() });
            let mut failed = false;
            if list_rays {
                text.extend(rays.iter().map(|r| format!("  {r:?}")));
                out["ray_list"] = json!(rays);
            }
            if let Some(l) = hilbert {
                let hb = hilbert_basis(&facets, &rays, l.into())?;
                text.push(format!("hilbert: {}", hb.len()));
                out["hilbert"] = json!(hb.len());
                out["hilbert_basis"] = json!(hb);
            }
            if certify {
                let rep = irredundancy_certify(&facets, &rays)?;
                let chamber = 3 * n as usize;
                let redundant = rep.redundant();
                // for n = 1 the chamber inequalities are implied by the others
                failed = redundant.iter().any(|&i| i >= chamber);
                text.push(format!("certified facets: {}/{}", facets.len() - redundant.len(), facets.len()));
                if !redundant.is_empty() {
                    text.push(format!("redundant: {redundant:?}"));
                }
                out["certified"] = json!(facets.len() - redundant.len());
                out["redundant"] = json!(redundant);
            }
            Outcome { text: text.join("\n"), json: out, failed }
        }
        Command::Saturation { n } => {
            check_n(n)?;
            let rep = verify_saturation(n)?;
            let mut text = format!("n: {n}\nhilbert: {}\nviolations: {}", rep.hilbert_size, rep.violations.len());
            for (stage, secs) in &rep.timings {
                text.push_str(&format!("\n{stage}: {secs:.3}s"));
            }
            Outcome {
                text,
                json: json!({ "command": "saturation", "n": n, "hilbert_size": rep.hilbert_size,
                              "violations": rep.violations, "holds": rep.holds() }),
                failed: !rep.holds(),
            }
        }
        Command::Table { max_n, polyhedral_max_n, csv } => {
            check_n(max_n)?;
            let rows: Vec<TableRow> = (1..=max_n)
                .map(|n| table_row(n, n <= polyhedral_max_n))
                .collect::<Result<_, _>>()?;
            let text = if csv {
                std::iter::once(TableRow::CSV_HEADER.to_string())
                    .chain(rows.iter().map(TableRow::csv))
                    .collect::<Vec<_>>()
                    .join("\n")
            } else {
                rows.iter().map(TableRow::render).collect::<Vec<_>>().join("\n")
            };
            Outcome::ok(text, json!({ "command": "table", "rows": rows }))
        }
        Command::Check { samples, seed } => check(samples, seed)?,
    })
}

fn random_partition(rng: &mut ChaCha8Rng, len: usize, max: u32) -> Partition {
    Partition::from_unsorted((0..len).map(|_| rng.gen_range(0..=max)).collect())
}

/// Random LR rule agreement and family agreement on random rational points.
fn check(samples: usize, seed: u64) -> anyhow::Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lr_mismatch = 0;
    for _ in 0..samples {
        let l = random_partition(&mut rng, 3, 3);
        let m = random_partition(&mut rng, 3, 3);
        let big = (l.size() + m.size()) as u32;
        let v = random_partition(&mut rng, 4, big.min(5));
        let a = lr_v1(&l, &m, &v);
        if a != lr_v2(&l, &m, &v) || a != lr_v3(&l, &m, &v) {
            lr_mismatch += 1;
        }
    }
    let mut family_mismatch = 0;
    for n in 1..=3u32 {
        let min = horn::minimal_inequalities(n);
        let eh = horn::extended_horn_inequalities(n);
        for _ in 0..samples {
            let x: Vec<i64> = (0..3)
                .flat_map(|_| {
                    let mut b: Vec<i64> = (0..n).map(|_| rng.gen_range(0..8)).collect();
                    b.sort_unstable_by(|a, b| b.cmp(a));
                    b
                })
                .collect();
            if horn::check_point(&min, &x).member != horn::check_point(&eh, &x).member {
                family_mismatch += 1;
            }
        }
    }
    let failed = lr_mismatch + family_mismatch > 0;
    Ok(Outcome {
        text: format!("lr rule mismatches: {lr_mismatch}\nfamily mismatches: {family_mismatch}"),
        json: json!({ "command": "check", "seed": seed, "samples": samples,
                      "lr_mismatches": lr_mismatch, "family_mismatches": family_mismatch }),
        failed,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let as_json = cli.json;
    let path = cli.output.clone();
    match run(cli) {
        Ok(out) => {
            let body = if as_json {
                let mut v = out.json;
                v["schema"] = json!(SCHEMA);
                serde_json::to_string(&v).expect("json")
            } else {
                out.text.trim_end().to_string()
            };
            match path {
                Some(p) => {
                    if let Err(e) = std::fs::write(&p, body + "\n") {
                        eprintln!("error: cannot write {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                }
                None => println!("{body}"),
            }
            ExitCode::from(if out.failed { 1 } else { 0 })
        }
        Err(e) => {
            // exit status 1 is reserved for failed verifications
            if e.downcast_ref::<Usage>().is_some() {
                eprintln!("usage error: {e:#}");
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(2)
        }
    }
}
