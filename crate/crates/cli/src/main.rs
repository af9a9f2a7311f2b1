//! Command-line front end: build groups from stock families or
//! presentation files, report their invariants, enumerate near-identity
//! automorphism sets, evaluate the collapse classification on groups or
//! symbolic structure triples, compute Hom groups of abelian
//! descriptors, and run the verification suite.
//!
//! All randomness flows from `--seed`, and machine-readable output
//! contains no timings, so identical invocations produce identical
//! bytes.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nilaut_core::abelian::FgAbelian;
use nilaut_core::autos;
use nilaut_core::invariants::{analyze, GroupAnalysis, StructureTriple};
use nilaut_core::pcgroup::{
    abelian, cyclic, dihedral, extraspecial, heisenberg, parse_pc, quaternion, schur_sharp_32,
    BuildOptions, ExtraspecialKind, FiniteGroup, GroupRef, PcPresentation, DEFAULT_BUILD_CAP,
};
use nilaut_core::theorems::{
    check_ia_star_inner, check_ia_star_inner_symbolic, classify_ia_inner_finite,
    classify_ia_inner_symbolic, default_corpus, run_suite, ClassificationVerdict, RunConfig,
    Selector, CHECK_NAMES,
};

#[derive(Parser)]
#[command(
    name = "nilaut",
    version,
    about = "Calculator for near-identity automorphisms of finite nilpotent groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the command's output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Largest group order the builder will materialize.
    #[arg(long, global = true, default_value_t = DEFAULT_BUILD_CAP)]
    cap: usize,

    /// Seed for generating-tuple sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Cap on sampled minimal generating tuples per group.
    #[arg(long, global = true, default_value_t = 20)]
    sample_limit: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group and emit its presentation file.
    ///
    /// The output is the portable descriptor format that every other
    /// subcommand reads back; order and table-verification status ride
    /// along as comments (text) or fields (json).
    Construct(ConstructArgs),

    /// Structural report: orders, subgroup sizes, abelian shapes.
    Analyze {
        /// Presentation file.
        presentation: PathBuf,
    },

    /// Enumerate an automorphism set and report its size and shape.
    Autos {
        /// Presentation file.
        presentation: PathBuf,
        /// Which set to enumerate.
        #[arg(long, value_enum, default_value_t = Which::Ia)]
        which: Which,
        /// Also list each automorphism by its generator images.
        #[arg(long)]
        elements: bool,
    },

    /// Decide whether the near-identity automorphisms collapse to the
    /// inner ones, for a concrete group or a symbolic structure triple.
    Classify {
        /// Presentation file (omit when --triple is given).
        presentation: Option<PathBuf>,
        /// Symbolic triple "G/Z | G/G' | G'" of abelian descriptors,
        /// e.g. "C_2xC_2 | C_2xC_2 | C_2".
        #[arg(long, conflicts_with = "presentation")]
        triple: Option<String>,
        /// Ask about the center-fixing variant instead.
        #[arg(long)]
        star: bool,
    },

    /// Hom group of two finite(ly generated) abelian descriptors.
    Hom {
        /// Source descriptor, e.g. "C_4 x C_2" or "Z^2 x C_3".
        source: String,
        /// Target descriptor.
        target: String,
    },

    /// Run the verification suite over a corpus of groups.
    ///
    /// Exits nonzero if any check fails.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Stock family: cyclic, abelian, dihedral, quaternion,
    /// extraspecial, heisenberg, sharp32.
    #[arg(long, conflicts_with = "presentation")]
    family: Option<String>,

    /// Presentation file to rebuild and re-verify.
    #[arg(long)]
    presentation: Option<PathBuf>,

    /// Group order (cyclic, dihedral, quaternion, extraspecial).
    #[arg(long)]
    n: Option<u64>,

    /// Prime (extraspecial, heisenberg).
    #[arg(long)]
    p: Option<u64>,

    /// Ring exponent for heisenberg over Z/p^k (default 1).
    #[arg(long)]
    k: Option<u32>,

    /// Extraspecial isomorphism type: plus (default) or minus.
    #[arg(long)]
    kind: Option<String>,

    /// Abelian descriptor, e.g. "C_4 x C_2" (family abelian).
    #[arg(long)]
    descriptor: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Include the built-in corpus.
    #[arg(long)]
    builtin: bool,

    /// Directory of .pc presentation files to add to the corpus.
    #[arg(long)]
    corpus: Option<PathBuf>,

    /// Run every check.
    #[arg(long, conflicts_with = "checks")]
    all: bool,

    /// Run only this check (repeatable).
    #[arg(long = "check")]
    checks: Vec<String>,

    /// List the check names and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    /// Inner automorphisms (conjugations).
    Inner,
    /// Automorphisms trivial on the abelianization.
    Ia,
    /// Like ia, additionally fixing the center pointwise.
    IaStar,
    /// Class-preserving automorphisms.
    AutC,
    /// The full automorphism group, by generator-image search.
    Aut,
}

/// What a subcommand hands back to the output plumbing.
struct Report {
    text: String,
    json: serde_json::Value,
    /// Drives the process exit status.
    failed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::FAILURE;
        }
    };
    let body = match cli.format {
        Format::Text => report.text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json)
                .expect("reports serialize without fail");
            s.push('\n');
            s
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = fs::write(path, &body) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::FAILURE;
        }
    } else {
        print!("{body}");
    }
    if report.failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn run(cli: &Cli) -> Result<Report, String> {
    let opts = BuildOptions { cap: cli.cap, ..BuildOptions::default() };
    match &cli.command {
        Command::Construct(args) => cmd_construct(args, &opts),
        Command::Analyze { presentation } => cmd_analyze(presentation, &opts),
        Command::Autos { presentation, which, elements } => {
            cmd_autos(presentation, *which, *elements, &opts)
        }
        Command::Classify { presentation, triple, star } => {
            cmd_classify(presentation.as_deref(), triple.as_deref(), *star, &opts)
        }
        Command::Hom { source, target } => cmd_hom(source, target),
        Command::Verify(args) => cmd_verify(args, cli, &opts),
    }
}

fn load_group(path: &Path, opts: &BuildOptions) -> Result<GroupRef, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let pres = parse_pc(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    FiniteGroup::build(&pres, opts).map_err(|e| e.to_string())
}

fn family_presentation(name: &str, args: &ConstructArgs) -> Result<PcPresentation, String> {
    let need_n = || args.n.ok_or(format!("--family {name} needs --n"));
    match name {
        "cyclic" => cyclic(need_n()?),
        "abelian" => {
            let d = args
                .descriptor
                .as_deref()
                .ok_or("--family abelian needs --descriptor")?;
            let desc: FgAbelian = d.parse().map_err(|e| format!("{e}"))?;
            abelian(&desc)
        }
        "dihedral" => dihedral(need_n()?),
        "quaternion" => quaternion(need_n()?),
        "extraspecial" => {
            let p = args.p.ok_or("--family extraspecial needs --p")?;
            let kind = match args.kind.as_deref() {
                None | Some("plus") => ExtraspecialKind::Plus,
                Some("minus") => ExtraspecialKind::Minus,
                Some(other) => return Err(format!("unknown kind `{other}`, use plus or minus")),
            };
            extraspecial(p, need_n()?, kind)
        }
        "heisenberg" => {
            let p = args.p.ok_or("--family heisenberg needs --p")?;
            heisenberg(p, args.k.unwrap_or(1))
        }
        "sharp32" => return Ok(schur_sharp_32()),
        other => {
            return Err(format!(
                "unknown family `{other}`; known: cyclic, abelian, dihedral, quaternion, \
                 extraspecial, heisenberg, sharp32"
            ))
        }
    }
    .map_err(|e| e.to_string())
}

fn cmd_construct(args: &ConstructArgs, opts: &BuildOptions) -> Result<Report, String> {
    let pres = match (&args.family, &args.presentation) {
        (Some(f), None) => family_presentation(f, args)?,
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            parse_pc(&text).map_err(|e| e.to_string())?
        }
        _ => return Err("give exactly one of --family or --presentation".into()),
    };
    let group = FiniteGroup::build(&pres, opts).map_err(|e| e.to_string())?;
    let text = format!(
        "# order: {}\n# associativity check: {} scan\n{}",
        group.order(),
        group.verification(),
        pres
    );
    let json = serde_json::json!({
        "name": group.name(),
        "order": group.order(),
        "verification": group.verification().to_string(),
        "presentation": pres.to_string(),
    });
    Ok(Report { text, json, failed: false })
}

fn render_analysis(a: &GroupAnalysis) -> String {
    fn opt<T: std::fmt::Display>(v: &Option<T>, fallback: &str) -> String {
        match v {
            Some(x) => x.to_string(),
            None => fallback.to_string(),
        }
    }
    let mut t = String::new();
    let _ = writeln!(t, "name:                {}", a.name);
    let _ = writeln!(t, "order:               {}", a.order);
    let _ = writeln!(t, "abelian:             {}", a.is_abelian);
    let _ = writeln!(t, "nilpotency class:    {}", opt(&a.nilpotency_class, "not nilpotent"));
    let _ = writeln!(t, "exponent:            {}", a.exponent);
    let _ = writeln!(t, "center:              order {}, {}", a.center_order, a.center_structure);
    let _ = writeln!(
        t,
        "derived subgroup:    order {}, {}",
        a.derived_order,
        opt(&a.derived_structure, "nonabelian")
    );
    let _ = writeln!(
        t,
        "commutator values:   {} ({})",
        a.commutator_set_size,
        if a.commutator_set_is_closed { "all of G'" } else { "a proper subset of G'" }
    );
    let _ = writeln!(t, "frattini order:      {}", opt(&a.frattini_order, "not computed"));
    let _ = writeln!(t, "conjugacy classes:   {}", a.conjugacy_class_count);
    let _ = writeln!(t, "minimal generators:  {}", opt(&a.min_generators, "not computed"));
    let _ = writeln!(t, "abelianization:      {}", a.abelianization);
    let _ = writeln!(t, "central quotient:    {}", opt(&a.central_quotient_structure, "nonabelian"));
    let _ = writeln!(t, "table verification:  {}", a.table_verification);
    t
}

fn cmd_analyze(path: &Path, opts: &BuildOptions) -> Result<Report, String> {
    let group = load_group(path, opts)?;
    let a = analyze(&group);
    Ok(Report {
        text: render_analysis(&a),
        json: serde_json::to_value(&a).expect("analysis serializes"),
        failed: false,
    })
}

fn cmd_autos(
    path: &Path,
    which: Which,
    elements: bool,
    opts: &BuildOptions,
) -> Result<Report, String> {
    let group = load_group(path, opts)?;
    let set = match which {
        Which::Inner => autos::inner(&group),
        Which::Ia => autos::ia(&group).map_err(|e| e.to_string())?,
        Which::IaStar => autos::ia_star(&group).map_err(|e| e.to_string())?,
        Which::AutC => autos::class_preserving(&group).map_err(|e| e.to_string())?,
        Which::Aut => autos::aut_bruteforce(&group).map_err(|e| e.to_string())?,
    };
    let structure = set.structure();
    let generator_images: Vec<Vec<[String; 2]>> = set
        .permutations()
        .iter()
        .map(|perm| {
            group
                .generators()
                .iter()
                .map(|&g| {
                    [group.label(g).to_string(), group.label(perm[g as usize]).to_string()]
                })
                .collect()
        })
        .collect();

    let mut text = String::new();
    let _ = writeln!(text, "group:     {}", group.name());
    let _ = writeln!(text, "set:       {}", set.kind());
    let _ = writeln!(text, "order:     {}", set.order());
    let _ = writeln!(
        text,
        "structure: {}",
        structure
            .as_ref()
            .map(|s| s.to_string())
            .unwrap_or_else(|| "nonabelian".to_string())
    );
    if elements {
        for images in &generator_images {
            let row: Vec<String> =
                images.iter().map(|[g, h]| format!("{g} -> {h}")).collect();
            let _ = writeln!(text, "  {}", row.join(", "));
        }
    }

    let mut json = serde_json::json!({
        "group": group.name(),
        "set": set.kind(),
        "order": set.order(),
        "structure": structure.map(|s| s.to_string()),
    });
    if elements {
        json["generator_images"] =
            serde_json::to_value(&generator_images).expect("images serialize");
    }
    Ok(Report { text, json, failed: false })
}

fn parse_triple(s: &str) -> Result<StructureTriple, String> {
    let parts: Vec<&str> = s.split('|').collect();
    let [a, b, c] = parts.as_slice() else {
        return Err(format!(
            "a triple is three `|`-separated descriptors \"G/Z | G/G' | G'\", got {} parts",
            parts.len()
        ));
    };
    let parse = |d: &str, what: &str| {
        d.trim()
            .parse::<FgAbelian>()
            .map_err(|e| format!("{what}: {e}"))
    };
    Ok(StructureTriple {
        central_quotient: parse(a, "G/Z")?,
        abelianization: parse(b, "G/G'")?,
        derived: parse(c, "G'")?,
    })
}

fn render_verdict(v: &ClassificationVerdict) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "case:        {}", v.case);
    let _ = writeln!(t, "criterion:   {}", v.predicate_holds);
    let _ = writeln!(t, "direct:      {}", v.direct_check_holds);
    let _ = writeln!(t, "consistent:  {}", v.consistent);
    if let Some(w) = &v.witness {
        let _ = writeln!(t, "witness:     {w}");
    }
    if let Some(i) = v.isomorphic {
        let _ = writeln!(t, "isomorphic:  {i} (as abstract groups)");
    }
    t
}

fn cmd_classify(
    presentation: Option<&Path>,
    triple: Option<&str>,
    star: bool,
    opts: &BuildOptions,
) -> Result<Report, String> {
    let verdict = match (presentation, triple) {
        (Some(path), None) => {
            let group = load_group(path, opts)?;
            if star { check_ia_star_inner(&group) } else { classify_ia_inner_finite(&group) }
                .map_err(|e| e.to_string())?
        }
        (None, Some(s)) => {
            let t = parse_triple(s)?;
            if star {
                check_ia_star_inner_symbolic(&t)
            } else {
                classify_ia_inner_symbolic(&t)
            }
            .map_err(|e| e.to_string())?
        }
        _ => return Err("give exactly one of a presentation file or --triple".into()),
    };
    Ok(Report {
        text: render_verdict(&verdict),
        failed: !verdict.consistent,
        json: serde_json::to_value(&verdict).expect("verdict serializes"),
    })
}

fn cmd_hom(source: &str, target: &str) -> Result<Report, String> {
    let u: FgAbelian = source.parse().map_err(|e| format!("source: {e}"))?;
    let v: FgAbelian = target.parse().map_err(|e| format!("target: {e}"))?;
    let hom = u.hom_structure(&v);
    let order = hom.order().map(|o| o.to_string());
    let text = format!(
        "Hom({u}, {v}) = {hom}\norder: {}\n",
        order.as_deref().unwrap_or("infinite")
    );
    let json = serde_json::json!({
        "source": u.to_string(),
        "target": v.to_string(),
        "hom": hom.to_string(),
        "order": order,
    });
    Ok(Report { text, json, failed: false })
}

fn cmd_verify(args: &VerifyArgs, cli: &Cli, opts: &BuildOptions) -> Result<Report, String> {
    if args.list {
        let mut text = String::new();
        for name in CHECK_NAMES {
            let _ = writeln!(text, "{name}");
        }
        return Ok(Report {
            text,
            json: serde_json::to_value(CHECK_NAMES).expect("names serialize"),
            failed: false,
        });
    }

    let mut corpus: Vec<GroupRef> = Vec::new();
    if args.builtin {
        corpus.extend(default_corpus());
    }
    if let Some(dir) = &args.corpus {
        let mut paths: Vec<PathBuf> = fs::read_dir(dir)
            .map_err(|e| format!("{}: {e}", dir.display()))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|ext| ext == "pc"))
            .collect();
        paths.sort();
        for p in paths {
            corpus.push(load_group(&p, opts)?);
        }
    }
    if corpus.is_empty() {
        return Err("empty corpus: pass --builtin and/or --corpus <dir>".into());
    }

    let selector = if args.all {
        Selector::All
    } else if args.checks.is_empty() {
        return Err("choose --all or one or more --check names (--list shows them)".into());
    } else {
        for c in &args.checks {
            if !CHECK_NAMES.contains(&c.as_str()) {
                return Err(format!("unknown check `{c}` (--list shows the names)"));
            }
        }
        Selector::named(args.checks.iter().cloned())
    };

    let config = RunConfig { tuple_limit: cli.sample_limit, seed: cli.seed };
    let report = run_suite(&corpus, &selector, &config);
    Ok(Report {
        text: report.render_text(),
        failed: !report.all_passed,
        json: serde_json::to_value(&report).expect("report serializes"),
    })
}
