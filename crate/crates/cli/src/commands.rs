use std::fmt::Write;

use serde::Serialize;

use mnword::analysis::{
    build_by_doubling, galois_graph_direct, galois_graph_generic, h_triangle,
    h_triangle_mismatches, scan_conjecture, word_lattice, HEntry,
};
use mnword::lattice::{certify, LatticeCertificate, PosetJson};
use mnword::oracle::{first_disagreement, run_suite, to_json_lines};
use mnword::word::{count_words, enumerate, word_stats, WordStats};
use mnword::MnWord;

use crate::{Cli, Command, Failure, Format};

type Outcome = Result<String, Failure>;

pub(crate) fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Conjecture {
            max_m,
            max_n,
            max_a,
        } => conjecture(cli, *max_m, *max_n, *max_a),
        Command::Verify { max_m, max_n } => verify(cli, *max_m, *max_n),
        Command::Stats { word: Some(word) } => single_stats(cli, word),
        command => {
            check_budget(cli)?;
            match command {
                Command::Enumerate => enumerate_words(cli),
                Command::Stats { word: None } => all_stats(cli),
                Command::Certify => certificate(cli),
                Command::ExportHasse => hasse(cli),
                Command::Galois => galois(cli),
                Command::HTriangle => triangle(cli),
                Command::DoublingTrace => doubling(cli),
                _ => unreachable!("handled above"),
            }
        }
    }
}

fn check_budget(cli: &Cli) -> Result<(), Failure> {
    let size = count_words(cli.m, cli.n);
    if size > cli.budget.into() {
        return Err(Failure::Usage(format!(
            "W({},{}) has {size} words, above the budget of {} (raise --budget)",
            cli.m, cli.n, cli.budget
        )));
    }
    Ok(())
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("values serialize") + "\n"
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn enumerate_words(cli: &Cli) -> Outcome {
    let words: Vec<MnWord> = enumerate(cli.m, cli.n).collect();
    Ok(match cli.format {
        Format::Json => json(&words),
        _ => words.iter().map(|w| format!("{w}\n")).collect(),
    })
}

#[derive(Serialize)]
struct WordReport {
    word: String,
    #[serde(flatten)]
    stats: WordStats,
}

fn stats_line(word: &MnWord, s: &WordStats) -> String {
    let support: Vec<String> = s.support.iter().map(u32::to_string).collect();
    let min = s.min_letter.map_or("-".to_owned(), |l| l.to_string());
    format!(
        "{word} min={min} supp={{{}}} top={} in={}\n",
        support.join(","),
        s.top_count,
        s.in_degree
    )
}

fn render_stats(cli: &Cli, words: &[MnWord]) -> String {
    let reports: Vec<WordReport> = words
        .iter()
        .map(|w| WordReport {
            word: w.to_string(),
            stats: word_stats(w),
        })
        .collect();
    match cli.format {
        Format::Json if words.len() == 1 => json(&reports[0]),
        Format::Json => json(&reports),
        _ => words
            .iter()
            .zip(&reports)
            .map(|(w, r)| stats_line(w, &r.stats))
            .collect(),
    }
}

fn single_stats(cli: &Cli, word: &str) -> Outcome {
    let w = MnWord::parse(cli.m, word).map_err(usage)?;
    Ok(render_stats(cli, &[w]))
}

fn all_stats(cli: &Cli) -> Outcome {
    let words: Vec<MnWord> = enumerate(cli.m, cli.n).collect();
    Ok(render_stats(cli, &words))
}

fn certificate_problems(cli: &Cli, cert: &LatticeCertificate) -> Vec<String> {
    let expected_length = if cli.n == 0 {
        0
    } else {
        (cli.m as usize + 1) * cli.n - 1
    };
    let mut problems = Vec::new();
    let flags = [
        ("lattice", cert.is_lattice),
        ("extremal", cert.is_extremal),
        ("trim", cert.is_trim),
        ("join semidistributive", cert.is_join_semidistributive),
        ("meet semidistributive", cert.is_meet_semidistributive),
    ];
    problems.extend(
        flags
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(what, _)| format!("not {what}")),
    );
    if cert.length != expected_length {
        problems.push(format!(
            "length {} instead of {expected_length}",
            cert.length
        ));
    }
    problems
}

fn certificate(cli: &Cli) -> Outcome {
    let lat = word_lattice(cli.m, cli.n).map_err(usage)?;
    let cert = certify(lat.poset());
    let output = match cli.format {
        Format::Json => json(&cert),
        _ => {
            let mut out = String::new();
            writeln!(out, "W({},{}): {} elements", cli.m, cli.n, lat.len()).unwrap();
            writeln!(out, "length {}", cert.length).unwrap();
            writeln!(out, "join-irreducibles {}", cert.join_irreducible_count).unwrap();
            writeln!(out, "meet-irreducibles {}", cert.meet_irreducible_count).unwrap();
            writeln!(out, "lattice {}", cert.is_lattice).unwrap();
            writeln!(out, "extremal {}", cert.is_extremal).unwrap();
            writeln!(
                out,
                "join-semidistributive {}",
                cert.is_join_semidistributive
            )
            .unwrap();
            writeln!(
                out,
                "meet-semidistributive {}",
                cert.is_meet_semidistributive
            )
            .unwrap();
            writeln!(out, "trim {}", cert.is_trim).unwrap();
            if let Some(chain) = &cert.left_modular_chain {
                let words: Vec<String> = chain
                    .iter()
                    .map(|&i| lat.poset().label(i).to_string())
                    .collect();
                writeln!(out, "left-modular chain {}", words.join(" < ")).unwrap();
            }
            out
        }
    };
    let problems = certificate_problems(cli, &cert);
    if problems.is_empty() {
        Ok(output)
    } else {
        Err(Failure::Disagreement {
            output,
            witness: problems.join(", "),
        })
    }
}

fn hasse(cli: &Cli) -> Outcome {
    let lat = word_lattice(cli.m, cli.n).map_err(usage)?;
    let p = lat.poset();
    Ok(match cli.format {
        Format::Json => json::<PosetJson>(&p.to_json()),
        Format::Dot => p.to_dot(&format!("W({},{})", cli.m, cli.n)),
        _ => p
            .covers()
            .iter()
            .map(|&(a, b)| format!("{} < {}\n", p.label(a), p.label(b)))
            .collect(),
    })
}

fn galois(cli: &Cli) -> Outcome {
    let direct = galois_graph_direct(cli.m, cli.n);
    let output = match cli.format {
        Format::Json => json(&direct),
        Format::Dot => direct.to_dot(),
        _ => direct
            .edge_labels()
            .into_iter()
            .map(|(s, t)| {
                format!(
                    "{s} {} -> {t} {}\n",
                    s.to_word(cli.m, cli.n),
                    t.to_word(cli.m, cli.n)
                )
            })
            .collect(),
    };
    let generic = galois_graph_generic(cli.m, cli.n).map_err(usage)?;
    if generic == direct {
        Ok(output)
    } else {
        Err(Failure::Disagreement {
            output,
            witness: "explicit arrow rule differs from the generic Galois graph".into(),
        })
    }
}

#[derive(Serialize)]
struct TriangleJson {
    m: u32,
    n: usize,
    polynomial: String,
    coefficients: Vec<HEntry>,
}

fn triangle(cli: &Cli) -> Outcome {
    let t = h_triangle(cli.m, cli.n);
    let output = match cli.format {
        Format::Csv => t.to_csv(),
        Format::Json => json(&TriangleJson {
            m: cli.m,
            n: cli.n,
            polynomial: t.polynomial(),
            coefficients: t.entries(),
        }),
        _ => {
            let mut out = format!("H = {}\n", t.polynomial());
            for e in t.entries() {
                writeln!(out, "a={} b={} {}", e.a, e.b, e.coefficient).unwrap();
            }
            out
        }
    };
    let mismatches = h_triangle_mismatches(cli.m, cli.n);
    if mismatches.is_empty() {
        return Ok(output);
    }
    let witness: Vec<String> = mismatches
        .iter()
        .map(|(a, b, direct, closed)| {
            format!("a={a} b={b}: counted {direct}, closed form {closed}")
        })
        .collect();
    Err(Failure::Disagreement {
        output,
        witness: format!("H-triangle closed form differs ({})", witness.join("; ")),
    })
}

fn conjecture(cli: &Cli, max_m: u32, max_n: usize, max_a: Option<usize>) -> Outcome {
    let report = scan_conjecture(max_m, max_n, max_a);
    let output = match cli.format {
        Format::Json => json(&report),
        _ => {
            let mut out = String::new();
            for w in &report.counterexamples {
                writeln!(
                    out,
                    "counterexample m={} n={} a={}: in-degree count {}, conjectured {}",
                    w.m, w.n, w.a, w.proven, w.conjectured
                )
                .unwrap();
            }
            if report.holds() {
                writeln!(
                    out,
                    "no counterexample found ({} triples, m <= {max_m}, n <= {max_n})",
                    report.checked
                )
                .unwrap();
            }
            out
        }
    };
    match report.counterexamples.first() {
        None => Ok(output),
        Some(w) => Err(Failure::Disagreement {
            output,
            witness: format!(
                "conjectured in-degree count fails at m={} n={} a={}",
                w.m, w.n, w.a
            ),
        }),
    }
}

#[derive(Serialize)]
struct StepJson {
    word_length: usize,
    stage: usize,
    level: Option<u32>,
    interval: Option<[String; 2]>,
    size: usize,
    poset: PosetJson,
}

fn doubling(cli: &Cli) -> Outcome {
    let trace = build_by_doubling(cli.m, cli.n).map_err(|e| Failure::Disagreement {
        output: String::new(),
        witness: e.to_string(),
    })?;
    Ok(match cli.format {
        Format::Json => {
            let steps: Vec<StepJson> = trace
                .steps
                .iter()
                .map(|s| StepJson {
                    word_length: s.word_length,
                    stage: s.stage,
                    level: s.level,
                    interval: s
                        .interval
                        .as_ref()
                        .map(|(lo, hi)| [lo.to_string(), hi.to_string()]),
                    size: s.poset.len(),
                    poset: s.poset.to_json(),
                })
                .collect();
            json(&steps)
        }
        _ => trace
            .steps
            .iter()
            .map(|s| {
                let doubled = match (&s.interval, s.level) {
                    (None, _) => "base chain".to_owned(),
                    (Some((lo, hi)), None) => format!("doubled [{lo}, {hi}] (whole lattice)"),
                    (Some((lo, hi)), Some(j)) => format!("doubled [{lo}, {hi}] (slice min >= {j})"),
                };
                format!(
                    "length {} stage {}: {doubled} -> {} elements\n",
                    s.word_length,
                    s.stage,
                    s.poset.len()
                )
            })
            .collect(),
    })
}

fn verify(cli: &Cli, max_m: u32, max_n: usize) -> Outcome {
    let reports = run_suite(max_m, max_n, cli.budget);
    let output = match cli.format {
        Format::Json => to_json_lines(&reports),
        _ => {
            let mut out = String::new();
            for r in &reports {
                let status = if r.agreed { "ok" } else { "FAIL" };
                write!(out, "{status} {} {}", r.subject, r.instance).unwrap();
                if let Some(w) = &r.witness {
                    write!(out, ": {w}").unwrap();
                }
                out.push('\n');
            }
            let failed = reports.iter().filter(|r| !r.agreed).count();
            writeln!(out, "{} checks, {failed} disagreements", reports.len()).unwrap();
            out
        }
    };
    match first_disagreement(&reports) {
        None => Ok(output),
        Some(r) => Err(Failure::Disagreement {
            witness: format!(
                "{} at {}: {}",
                r.subject,
                r.instance,
                r.witness.as_deref().unwrap_or("")
            ),
            output,
        }),
    }
}
