//! Command-line front end: closed-form covering numbers, witness-set
//! reports, type-level cover checks, per-member counts, the lemma
//! verifiers, and exact covering-number certification for small groups.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use report::*;
use symcover::cycletype::CycleType;
use symcover::families::SubgroupFamily;
use symcover::smallgroups::{
    build_cover_instance, exact_min_cover, maximal_subgroups, Ambient, Catalog, CoverOutcome,
    SolveBudget,
};
use symcover::verifier::{self, LemmaReport, Verdict};
use symcover::witness::{
    intersection_profile, partition_check, sigma_formula, sigma_s18, sigma_upper_bound,
    witness_classes, witness_classes_s18, CoverPlan, WitnessClass,
};

/// Write one output line; a consumer that closed the pipe ends the
/// program quietly instead of panicking.
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let mut out = std::io::stdout().lock();
        if writeln!(out, $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

#[derive(Parser)]
#[command(name = "symcover", version, about = "Exact covers of symmetric groups by maximal subgroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Args)]
struct FormatArg {
    /// Output format; `json` is the stable machine interface
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Covering number of S_n (n divisible by 6; n = 18 reports the
    /// stated value next to both computed routes)
    Sigma {
        #[arg(long)]
        n: u32,
        /// Report the upper bound from the cover construction instead
        /// (any even n >= 6)
        #[arg(long)]
        bound: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Witness classes, per-family member counts and intersections, and
    /// the partition identities
    Witness {
        #[arg(long)]
        n: u32,
        /// Output format (alias of --format)
        #[arg(long, value_enum)]
        emit: Option<Format>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Type-level cover validity of the minimal cover plan
    CoverCheck {
        #[arg(long)]
        n: u32,
        /// Drop a family from the plan first (repeatable), e.g.
        /// `--drop intransitive:3`
        #[arg(long)]
        drop: Vec<String>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Exact class size, member count/order, and per-member count of one
    /// cycle type in one family
    Count {
        #[arg(long)]
        n: u32,
        /// Family spec: intransitive:<k>, wr2, imprimitive:<b>x<l>, alternating
        #[arg(long)]
        family: String,
        /// Cycle type as comma-separated len^mult tokens, e.g. `3,7,8`;
        /// omitted fixed points are reconstructed from --n
        #[arg(long = "type")]
        cycle_type: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run the lemma verifiers; exit code 0 iff every verdict passes
    Verify {
        #[arg(long, conflicts_with = "sweep")]
        n: Option<u32>,
        /// Degree range `lo:hi[:step]` (step defaults to 6)
        #[arg(long)]
        sweep: Option<String>,
        /// all|hbound|prim|imprim|forced|width|almostall|exchange|s18
        #[arg(long, default_value = "all")]
        lemma: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Certify the covering number of a small group by exact set-cover
    /// search over its maximal subgroups
    Exact {
        /// Group name: S4..S8 or A4..A7
        #[arg(long)]
        group: String,
        /// Wall-clock budget; exceeded budgets report exact bounds
        #[arg(long, default_value = "60")]
        budget_seconds: u64,
        /// Deterministic node budget (overrides the wall clock)
        #[arg(long)]
        budget_nodes: Option<u64>,
        /// Write the full result (certificate included) to this path
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Extra catalog file overriding built-in generator entries
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[command(flatten)]
        format: FormatArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(pass) => {
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> symcover::Result<bool> {
    match cli.command {
        Command::Sigma { n, bound, format } => cmd_sigma(n, bound, format.format),
        Command::Witness { n, emit, format } => cmd_witness(n, emit.unwrap_or(format.format)),
        Command::CoverCheck { n, drop, format } => cmd_cover_check(n, &drop, format.format),
        Command::Count {
            n,
            family,
            cycle_type,
            format,
        } => cmd_count(n, &family, &cycle_type, format.format),
        Command::Verify {
            n,
            sweep,
            lemma,
            format,
        } => cmd_verify(n, sweep.as_deref(), &lemma, format.format),
        Command::Exact {
            group,
            budget_seconds,
            budget_nodes,
            emit,
            catalog,
            format,
        } => cmd_exact(&group, budget_seconds, budget_nodes, emit, catalog, format.format),
    }
}

fn cmd_sigma(n: u32, bound: bool, format: Format) -> symcover::Result<bool> {
    let result = if bound {
        SigmaResult {
            sigma: None,
            sigma_upper_bound: Some(sigma_upper_bound(n)?.to_string()),
            s18: None,
        }
    } else if n == 18 {
        SigmaResult {
            sigma: None,
            sigma_upper_bound: None,
            s18: Some(sigma_s18()),
        }
    } else {
        SigmaResult {
            sigma: Some(sigma_formula(n)?.to_string()),
            sigma_upper_bound: None,
            s18: None,
        }
    };
    let envelope = Envelope::new("sigma", json!({"n": n, "bound": bound}), vec![result], true);
    match format {
        Format::Json => outln!("{}", envelope.to_json()),
        Format::Table => {
            let r = &envelope.results[0];
            if let Some(s) = &r.sigma {
                outln!("sigma(S_{n}) = {s}");
            } else if let Some(s) = &r.sigma_upper_bound {
                outln!("sigma(S_{n}) <= {s}");
            } else if let Some(s18) = &r.s18 {
                outln!("sigma(S_18) stated: {}", s18.stated);
                outln!("  formula sum:       {}", s18.formula_sum);
                outln!("  cover enumeration: {}", s18.cover_enumeration);
                outln!("  computed routes agree: {}", s18.computed_agree);
                outln!("  matches stated value:  {}", s18.matches_stated);
            }
        }
    }
    Ok(true)
}

fn class_list(n: u32) -> symcover::Result<Vec<WitnessClass>> {
    if n == 18 {
        Ok(witness_classes_s18())
    } else {
        witness_classes(n)
    }
}

fn cmd_witness(n: u32, format: Format) -> symcover::Result<bool> {
    let classes = class_list(n)?;
    let plan = CoverPlan::minimal(n)?;
    let partition = partition_check(n)?;

    let classes_out: Vec<WitnessClassOut> = classes
        .iter()
        .map(|c| WitnessClassOut {
            index: c.index,
            cycle_type: c.cycle_type.to_string(),
            size: c.size.to_string(),
        })
        .collect();
    let mut families_out = Vec::new();
    for f in plan.families() {
        let profile = intersection_profile(f, &classes)?;
        families_out.push(FamilyOut {
            spec: f.spec_string(),
            members: f.member_count()?.to_string(),
            per_member_intersections: profile.iter().map(|v| v.to_string()).collect(),
        });
    }
    let pass = partition.pass;
    let result = WitnessResult {
        n,
        classes: classes_out,
        families: families_out,
        identities: partition.identities,
    };
    let envelope = Envelope::new("witness", json!({"n": n}), vec![result], pass);
    match format {
        Format::Json => outln!("{}", envelope.to_json()),
        Format::Table => {
            let r = &envelope.results[0];
            outln!("witness classes of S_{n}:");
            for c in &r.classes {
                outln!("  class {:>3}: ({}) size {}", c.index, c.cycle_type, c.size);
            }
            outln!("cover families:");
            for f in &r.families {
                outln!(
                    "  {:<18} members {:>12}  per-member {}",
                    f.spec,
                    f.members,
                    f.per_member_intersections.join(",")
                );
            }
            outln!("identities:");
            for id in &r.identities {
                outln!("  [{}] {}", if id.pass { "ok" } else { "FAIL" }, id.name);
            }
            outln!("partition check: {}", if pass { "pass" } else { "FAIL" });
        }
    }
    Ok(pass)
}

fn cmd_cover_check(n: u32, drop: &[String], format: Format) -> symcover::Result<bool> {
    let mut plan = CoverPlan::minimal(n)?;
    let mut dropped = Vec::new();
    for spec in drop {
        let family = SubgroupFamily::parse(spec, n)?;
        plan = plan.without(&family);
        dropped.push(family.spec_string());
    }
    let uncovered = plan.uncovered_types()?;
    let pass = uncovered.is_empty();
    let result = CoverCheckResult {
        n,
        families: plan.families().iter().map(|f| f.spec_string()).collect(),
        dropped,
        total_size: plan.total_size()?.to_string(),
        uncovered: uncovered.iter().map(|t| t.to_string()).collect(),
        pass,
    };
    let envelope = Envelope::new(
        "cover-check",
        json!({"n": n, "drop": drop}),
        vec![result],
        pass,
    );
    match format {
        Format::Json => outln!("{}", envelope.to_json()),
        Format::Table => {
            let r = &envelope.results[0];
            outln!("plan for S_{n}: {}", r.families.join(", "));
            if !r.dropped.is_empty() {
                outln!("dropped: {}", r.dropped.join(", "));
            }
            outln!("total subgroups: {}", r.total_size);
            if r.pass {
                outln!("cover check: pass (no uncovered cycle type)");
            } else {
                outln!("cover check: FAIL; uncovered types:");
                for t in &r.uncovered {
                    outln!("  ({t})");
                }
            }
        }
    }
    Ok(pass)
}

fn cmd_count(n: u32, family: &str, cycle_type: &str, format: Format) -> symcover::Result<bool> {
    let family = SubgroupFamily::parse(family, n)?;
    let t = CycleType::parse(cycle_type, n)?;
    let result = CountResult {
        n,
        family: family.spec_string(),
        cycle_type: t.to_string(),
        class_size: t.class_size().to_string(),
        member_count: family.member_count()?.to_string(),
        member_order: family.member_order()?.to_string(),
        count_in_member: family.count_in_member(&t)?.to_string(),
    };
    let envelope = Envelope::new(
        "count",
        json!({"n": n, "family": result.family, "type": result.cycle_type}),
        vec![result],
        true,
    );
    match format {
        Format::Json => outln!("{}", envelope.to_json()),
        Format::Table => {
            let r = &envelope.results[0];
            outln!("type ({}) in S_{n}: class size {}", r.cycle_type, r.class_size);
            outln!("family {}: {} members of order {}", r.family, r.member_count, r.member_order);
            outln!("per-member count of the type: {}", r.count_in_member);
        }
    }
    Ok(true)
}

fn parse_sweep(spec: &str) -> symcover::Result<Vec<u32>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let parse_err = |detail: String| symcover::Error::Parse {
        what: "sweep range",
        input: spec.to_string(),
        detail,
    };
    if parts.len() < 2 || parts.len() > 3 {
        return Err(parse_err("expected lo:hi or lo:hi:step".to_string()));
    }
    let lo: u32 = parts[0].parse().map_err(|e| parse_err(format!("{e}")))?;
    let hi: u32 = parts[1].parse().map_err(|e| parse_err(format!("{e}")))?;
    let step: u32 = if parts.len() == 3 {
        parts[2].parse().map_err(|e| parse_err(format!("{e}")))?
    } else {
        6
    };
    if step == 0 || lo > hi {
        return Err(parse_err("need lo <= hi and step > 0".to_string()));
    }
    Ok((lo..=hi).step_by(step as usize).collect())
}

fn cmd_verify(n: Option<u32>, sweep: Option<&str>, lemma: &str, format: Format) -> symcover::Result<bool> {
    let degrees: Vec<u32> = match (n, sweep) {
        (Some(n), None) => vec![n],
        (None, Some(spec)) => parse_sweep(spec)?,
        _ => {
            return Err(symcover::Error::Parse {
                what: "verify arguments",
                input: String::new(),
                detail: "exactly one of --n or --sweep is required".to_string(),
            })
        }
    };
    let mut reports: Vec<LemmaReport> = Vec::new();
    if lemma == "all" {
        reports.extend(verifier::run_all(degrees.iter().copied()));
    } else {
        for &d in &degrees {
            reports.push(verifier::verify_lemma(lemma, d)?);
        }
    }
    let all_pass = reports.iter().all(|r| r.verdict == Verdict::Pass);
    let inputs = json!({
        "n": n,
        "sweep": sweep,
        "lemma": lemma,
    });
    let envelope = Envelope::new("verify", inputs, reports, all_pass);
    match format {
        Format::Json => outln!("{}", envelope.to_json()),
        Format::Table => {
            for r in &envelope.results {
                let tag = match r.verdict {
                    Verdict::Pass => "pass",
                    Verdict::Fail => "FAIL",
                };
                outln!("n={:<4} {:<10} {}", r.n, r.lemma_id, tag);
                if r.verdict == Verdict::Fail {
                    for w in &r.witnesses {
                        outln!("    {w}");
                    }
                }
            }
            outln!("all pass: {all_pass}");
        }
    }
    Ok(all_pass)
}

fn cmd_exact(
    group: &str,
    budget_seconds: u64,
    budget_nodes: Option<u64>,
    emit: Option<PathBuf>,
    catalog_path: Option<PathBuf>,
    format: Format,
) -> symcover::Result<bool> {
    let ambient = Ambient::parse(group)?;
    let mut catalog = Catalog::builtin();
    if let Some(path) = &catalog_path {
        let text = std::fs::read_to_string(path).map_err(|e| symcover::Error::Parse {
            what: "catalog file",
            input: path.display().to_string(),
            detail: e.to_string(),
        })?;
        catalog.extend_with(Catalog::parse(&text)?);
    }
    let maximals = maximal_subgroups(ambient, &catalog)?;
    let instance = build_cover_instance(&ambient.elements(), &maximals)?;
    let budget = match budget_nodes {
        Some(nodes) => SolveBudget::nodes(nodes),
        None => SolveBudget::seconds(budget_seconds),
    };
    let outcome = exact_min_cover(&instance, budget);
    let (kind, sigma, lower, upper, nodes, cert) = match &outcome {
        CoverOutcome::Exact {
            size,
            certificate,
            nodes,
        } => ("exact", Some(*size), None, None, *nodes, certificate.clone()),
        CoverOutcome::Bounds {
            lower,
            upper,
            best_known,
            nodes,
        } => ("bounds", None, Some(*lower), Some(*upper), *nodes, best_known.clone()),
    };
    let verified = instance.is_cover(&cert);
    let mut labels: Vec<String> = cert.iter().map(|&i| instance.labels[i].clone()).collect();
    labels.sort();
    let result = ExactResult {
        group: ambient.name(),
        degree: ambient.degree(),
        universe: instance.universe_size,
        subsets: instance.subsets.len(),
        outcome: kind.to_string(),
        sigma,
        lower,
        upper,
        nodes,
        certificate: labels,
        certificate_verified: verified,
    };
    let inputs = json!({
        "group": ambient.name(),
        "budget_seconds": budget_seconds,
        "budget_nodes": budget_nodes,
    });
    let envelope = Envelope::new("exact", inputs, vec![result], verified);
    if let Some(path) = emit {
        std::fs::write(&path, envelope.to_json()).map_err(|e| symcover::Error::Parse {
            what: "certificate output path",
            input: path.display().to_string(),
            detail: e.to_string(),
        })?;
    }
    match format {
        Format::Json => outln!("{}", envelope.to_json()),
        Format::Table => {
            let r = &envelope.results[0];
            outln!(
                "{}: universe {} elements, {} candidate subgroups",
                r.group, r.universe, r.subsets
            );
            match (&r.sigma, &r.lower, &r.upper) {
                (Some(s), _, _) => outln!("covering number = {s} (exact, {} nodes)", r.nodes),
                (_, Some(lo), Some(hi)) => {
                    outln!("budget exhausted after {} nodes: {lo} <= covering number <= {hi}", r.nodes)
                }
                _ => unreachable!(),
            }
            outln!("certificate ({} subgroups, verified: {}):", r.certificate.len(), r.certificate_verified);
            for label in &r.certificate {
                outln!("  {label}");
            }
        }
    }
    Ok(verified)
}
