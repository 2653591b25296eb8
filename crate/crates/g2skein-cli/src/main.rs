//! Command-line front end: evaluate closed webs, compute link invariants of
//! colored braid closures, run verification suites, and dump the audited
//! relation and projector tables.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 engine
//! stuck or equality undecided.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use g2skein::braid::{invariant_in, reidemeister_suite, torus_reference, BraidWord, CaseResult};
use g2skein::qalg::{Rat, RatFunc};
use g2skein::rep::{
    cr_power, entry_strings, spectral_strings, trace, verify_projectors,
    verify_spectral_vs_crossing, weights_of, Projectors, Space,
};
use g2skein::skein::{engine, engine_defining, pair, rule_table, standard_registry, SkeinError};
use g2skein::web::{coloring_string, from_json, mirror};

#[derive(Parser)]
#[command(
    name = "g2skein",
    about = "Exact evaluation of G2 webs and the G2 quantum link invariant",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit machine-readable JSON alongside the human text.
    #[arg(long, global = true)]
    json: bool,
    /// Also print values specialized at q=1.
    #[arg(long, global = true)]
    q1: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed web (JSON file) to a rational function in q.
    Eval(EvalArgs),
    /// Invariant of a colored braid closure.
    Invariant(InvariantArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Dump audited relation or projector tables.
    Tables(TablesArgs),
    /// Print registered basis sizes.
    Dims,
}

#[derive(Args)]
struct EvalArgs {
    /// Path to the web JSON.
    #[arg(long)]
    web: String,
}

#[derive(Args)]
struct InvariantArgs {
    /// Braid word: whitespace-separated signed generator indices, e.g. "1 1 1".
    #[arg(long, allow_hyphen_values = true)]
    braid: String,
    /// Strand colors, e.g. 1,1 or 1,2.
    #[arg(long, value_delimiter = ',')]
    colors: Vec<u8>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: relations, reidemeister, projectors, torus.
    #[arg(long)]
    suite: String,
    /// Largest torus crossing count (torus suite only).
    #[arg(long, default_value_t = 6)]
    nmax: i64,
}

#[derive(Args)]
struct TablesArgs {
    #[arg(long)]
    rules: bool,
    #[arg(long)]
    projectors: bool,
}

fn render(v: &RatFunc, q1: bool) -> String {
    let mut s = v.to_string();
    if q1 {
        match v.eval_at(&Rat::from_integer(1.into())) {
            Ok(x) => s.push_str(&format!("   [q=1: {x}]")),
            Err(_) => s.push_str("   [pole at q=1]"),
        }
    }
    s
}

fn value_json(v: &RatFunc) -> serde_json::Value {
    let poly_map = |p: &g2skein::qalg::LaurentPoly| {
        let mut m = serde_json::Map::new();
        for (e, c) in p.terms() {
            m.insert(e.to_string(), serde_json::Value::String(c.to_string()));
        }
        serde_json::Value::Object(m)
    };
    if v.is_poly() {
        serde_json::json!({ "polynomial": poly_map(v.num()) })
    } else {
        serde_json::json!({ "num": poly_map(v.num()), "den": poly_map(v.den()) })
    }
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval(args) => {
            let text = std::fs::read_to_string(&args.web)
                .map_err(|e| format!("cannot read {}: {e}", args.web))?;
            let web = from_json(&text).map_err(|e| format!("bad web: {e}"))?;
            if !web.is_closed() {
                return Err("web is not closed (nonempty coloring)".into());
            }
            let mut e = engine();
            match e.eval_web(&web) {
                Ok(v) => {
                    println!("{}", render(&v, cli.q1));
                    if cli.json {
                        println!("{}", value_json(&v));
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(SkeinError::Stuck(w)) | Err(SkeinError::Cycle(w)) => {
                    eprintln!("engine stuck; offending web:");
                    eprintln!("{}", g2skein::web::to_json(&w));
                    Ok(ExitCode::from(3))
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Invariant(args) => {
            let b = BraidWord::parse(&args.braid, &args.colors)
                .map_err(|e| format!("bad braid: {e}"))?;
            let mut e = engine();
            let reg = standard_registry();
            let v = invariant_in(&mut e, Some(&reg), &b).map_err(|e| e.to_string())?;
            println!("{}", render(&v, cli.q1));
            if cli.json {
                println!("{}", value_json(&v));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let mut cases: Vec<(String, bool)> = Vec::new();
            let mut undecided = 0usize;
            match args.suite.as_str() {
                "relations" => {
                    let reg = standard_registry();
                    let mut full = engine();
                    let mut def = engine_defining();
                    let mut seen = std::collections::BTreeSet::new();
                    for rule in rule_table() {
                        if !seen.insert(rule.name.to_string()) {
                            continue;
                        }
                        if let Some((lhs, rhs)) = rule.as_relation() {
                            let ok = g2skein::skein::equal(&mut full, &lhs, &rhs, &reg)
                                .unwrap_or(false);
                            cases.push((format!("table: {}", rule.name), ok));
                            if let Some((_, probes)) = reg.lookup(lhs.coloring()) {
                                for (i, p) in probes.iter().enumerate() {
                                    let a = pair(&mut def, &lhs, &mirror(p));
                                    let b = pair(&mut def, &rhs, &mirror(p));
                                    if let (Ok(a), Ok(b)) = (a, b) {
                                        cases.push((
                                            format!("defining closure {i}: {}", rule.name),
                                            a == b,
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
                "reidemeister" => {
                    let mut e = engine();
                    let reg = standard_registry();
                    let rep = reidemeister_suite(&mut e, &reg).map_err(|e| e.to_string())?;
                    for (name, r) in rep.cases {
                        if r == CaseResult::Undecided {
                            undecided += 1;
                        }
                        cases.push((name, r == CaseResult::Pass));
                    }
                }
                "projectors" => {
                    let mut e = engine();
                    let reg = standard_registry();
                    let ps = Projectors::resolve(&mut e, &reg).map_err(|e| e.to_string())?;
                    println!("smudged 2w2 coefficient resolved as {:?}", ps.reading());
                    let rep = verify_projectors(&mut e, &reg, &ps).map_err(|e| e.to_string())?;
                    cases.extend(rep.cases);
                    let rep = verify_spectral_vs_crossing(&mut e, &reg, &ps)
                        .map_err(|e| e.to_string())?;
                    cases.extend(rep.cases);
                }
                "torus" => {
                    let mut e = engine();
                    let reg = standard_registry();
                    let ps = Projectors::resolve(&mut e, &reg).map_err(|e| e.to_string())?;
                    for n in 0..=args.nmax {
                        for colors in [(1u8, 1u8), (2, 2), (1, 2)] {
                            if colors == (1, 2) && n % 2 != 0 {
                                continue;
                            }
                            let b = BraidWord::new(
                                vec![colors.0, colors.1],
                                vec![(1, 1); n as usize],
                            )
                            .unwrap();
                            let direct = invariant_in(&mut e, Some(&reg), &b)
                                .map_err(|e| e.to_string())?;
                            let reference =
                                torus_reference(n, colors).map_err(|e| e.to_string())?;
                            let space = match colors {
                                (1, 1) => Space::End11,
                                (2, 2) => Space::End22,
                                _ => Space::Hom12,
                            };
                            let power = cr_power(&mut e, &reg, &ps, space, n)
                                .map_err(|e| e.to_string())?;
                            let tr = trace(&mut e, &power).map_err(|e| e.to_string())?;
                            let norm = match colors {
                                (1, 1) => RatFunc::qpow(-12 * n),
                                (2, 2) => RatFunc::qpow(-24 * n),
                                _ => RatFunc::qpow(0),
                            };
                            let spectral = &norm * &tr;
                            cases.push((
                                format!("torus n={n} colors ({},{})", colors.0, colors.1),
                                direct == reference && spectral == reference,
                            ));
                        }
                    }
                }
                other => return Err(format!("unknown suite {other:?}")),
            }
            let mut all = true;
            for (name, ok) in &cases {
                println!("{} {}", if *ok { "pass" } else { "FAIL" }, name);
                all &= ok;
            }
            if cli.json {
                let arr: Vec<serde_json::Value> = cases
                    .iter()
                    .map(|(n, ok)| serde_json::json!({ "case": n, "pass": ok }))
                    .collect();
                println!("{}", serde_json::json!({ "suite": args.suite, "cases": arr }));
            }
            if undecided > 0 {
                eprintln!("{undecided} undecided cases");
                return Ok(ExitCode::from(3));
            }
            Ok(if all { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Tables(args) => {
            if args.rules || !args.projectors {
                println!("# relation table");
                for rule in rule_table() {
                    println!(
                        "{:32} | {:55} | {}",
                        rule.name,
                        rule.signature(),
                        rule.coefficients().join(" ; ")
                    );
                }
            }
            if args.projectors {
                println!("# projector table");
                let mut e = engine();
                let reg = standard_registry();
                let ps = Projectors::resolve(&mut e, &reg).map_err(|e| e.to_string())?;
                println!("(smudged 2w2 coefficient resolved as {:?})", ps.reading());
                for space in [Space::End11, Space::Hom12, Space::End22] {
                    for w in weights_of(space) {
                        let entries = entry_strings(space, *w, ps.reading()).unwrap();
                        let parts: Vec<String> =
                            entries.iter().map(|(web, c)| format!("{c} * {web}")).collect();
                        println!("P[{space}][{w}] = {}", parts.join(" + "));
                    }
                }
                println!("(Hom21 entries are conjugates of Hom12 by the crossings)");
                println!("# spectral decompositions");
                for space in [Space::End11, Space::Hom12, Space::Hom21, Space::End22] {
                    let parts: Vec<String> = spectral_strings(space)
                        .iter()
                        .map(|(l, w)| format!("({l}) P[{w}]"))
                        .collect();
                    println!("R[{space}] = {}", parts.join(" + "));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dims => {
            let reg = standard_registry();
            let mut parts = Vec::new();
            for c in ["1111", "1212", "2222"] {
                let coloring: Vec<_> = c
                    .bytes()
                    .map(|b| g2skein::web::Label::from_color(b - b'0').unwrap())
                    .collect();
                let n = reg.lookup(&coloring).map(|(_, ws)| ws.len()).unwrap_or(0);
                parts.push(format!("{}:{n}", coloring_string(&coloring)));
            }
            println!("{}", parts.join(" "));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
