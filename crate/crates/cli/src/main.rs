use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use cwplanar::drawing::build_arc_drawing;
use cwplanar::gadgets::boundary::{certify_is_gadget_report, subset_name};
use cwplanar::gadgets::{check_random_hosts, ds_crossover_gadget, is_crossover_gadget, CrossoverGadget, Problem};
use cwplanar::io::{parse_graph, parse_layout, to_dot, write_graph, write_layout};
use cwplanar::planarizer::{planarize, verify_planarization};
use cwplanar::solvers::{heuristic_layout, DpReport};
use cwplanar::{cut_profile, exact_cutwidth, Error, ErrorKind, Graph, LinearLayout};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Parser)]
#[command(name = "cwplanar", version, about = "Cutwidth-preserving planarization and exact IS/DS oracles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cut profile of a layout, the exact cutwidth, or a heuristic layout's width.
    Cutwidth {
        graph: PathBuf,
        layout: Option<PathBuf>,
        #[arg(long)]
        exact: bool,
    },
    /// Replace every crossing of the layout's arc drawing by a crossover gadget.
    Planarize {
        graph: PathBuf,
        layout: PathBuf,
        #[arg(long, value_enum)]
        problem: ProblemArg,
        #[arg(long, allow_negative_numbers = true)]
        t: i64,
        /// Re-check planarity, widths and the optimum shift.
        #[arg(long)]
        verify: bool,
        /// Prefix for the output files; defaults to the graph path plus `.planar`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Optimum independent set or dominating set.
    Solve {
        graph: PathBuf,
        layout: Option<PathBuf>,
        #[arg(long, value_enum)]
        problem: ProblemArg,
        #[arg(long, value_enum, default_value = "dp")]
        algo: Algo,
    },
    /// Check a gadget: boundary conditions (independent set) and random host shifts.
    Certify {
        /// Gadget JSON file. Without it, `--builtin` selects a built-in gadget.
        gadget: Option<PathBuf>,
        #[arg(long, value_enum, conflicts_with = "gadget")]
        builtin: Option<ProblemArg>,
        #[arg(long, default_value_t = 25)]
        hosts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the graph as DOT or the layout's arc diagram as SVG.
    Export {
        graph: PathBuf,
        layout: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Format,
        /// Output file; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    Is,
    Ds,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Problem {
        match p {
            ProblemArg::Is => Problem::Is,
            ProblemArg::Ds => Problem::Ds,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Dp,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Svg,
}

#[derive(Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

#[derive(Serialize)]
struct RunReport {
    schema: u32,
    command: Vec<String>,
    inputs: Vec<InputDigest>,
    seed: Option<u64>,
    results: Value,
    passed: bool,
    wall_time_ms: f64,
}

/// Reads the input files and records their digests.
struct Inputs(Vec<InputDigest>);

impl Inputs {
    fn read(&mut self, path: &Path) -> cwplanar::Result<String> {
        let bytes = std::fs::read(path)?;
        self.0.push(InputDigest { path: path.display().to_string(), sha256: hex::encode(Sha256::digest(&bytes)) });
        String::from_utf8(bytes).map_err(|e| Error::Parse { line: 0, msg: format!("{}: {e}", path.display()) })
    }

    fn graph(&mut self, path: &Path) -> cwplanar::Result<Graph> {
        parse_graph(&self.read(path)?)
    }

    fn layout(&mut self, path: &Path, g: &Graph) -> cwplanar::Result<LinearLayout> {
        parse_layout(&self.read(path)?, g.vertex_count())
    }
}

struct Outcome {
    results: Value,
    passed: bool,
    seed: Option<u64>,
    /// Printed instead of the report, for `export` without `--output`.
    raw: Option<String>,
}

impl Outcome {
    fn ok(results: Value) -> Outcome {
        Outcome { results, passed: true, seed: None, raw: None }
    }
}

fn dp_fields(r: &DpReport) -> Value {
    json!({
        "optimum": r.optimum,
        "max_live_states": r.max_live_states,
        "bag_count": r.bag_count,
        "width_used": r.width_used,
    })
}

fn cmd_cutwidth(inp: &mut Inputs, graph: &Path, layout: Option<&Path>, exact: bool) -> cwplanar::Result<Outcome> {
    let g = inp.graph(graph)?;
    let mut res = json!({ "n": g.vertex_count(), "m": g.edge_count() });
    if let Some(p) = layout {
        let l = inp.layout(p, &g)?;
        let prof = cut_profile(&g, &l)?;
        res["layout_width"] = json!(prof.max_width);
        res["cut_profile"] = json!(prof.widths);
    }
    if exact {
        let (w, l) = exact_cutwidth(&g)?;
        res["exact_cutwidth"] = json!(w);
        res["optimal_layout"] = json!(l.order().iter().map(|v| v + 1).collect::<Vec<_>>());
    } else if layout.is_none() {
        let l = heuristic_layout(&g);
        res["heuristic_width"] = json!(cut_profile(&g, &l)?.max_width);
        res["heuristic_layout"] = json!(l.order().iter().map(|v| v + 1).collect::<Vec<_>>());
    }
    Ok(Outcome::ok(res))
}

fn builtin(p: Problem) -> CrossoverGadget {
    match p {
        Problem::Is => is_crossover_gadget(),
        Problem::Ds => ds_crossover_gadget(),
    }
}

fn cmd_planarize(
    inp: &mut Inputs,
    graph: &Path,
    layout: &Path,
    problem: Problem,
    t: i64,
    verify: bool,
    out: Option<&Path>,
) -> cwplanar::Result<Outcome> {
    let g = inp.graph(graph)?;
    let l = inp.layout(layout, &g)?;
    let gadget = builtin(problem);
    let r = planarize(&g, &l, t, &gadget)?;
    let prefix = out.map(Path::to_path_buf).unwrap_or_else(|| {
        let mut s = graph.as_os_str().to_owned();
        s.push(".planar");
        PathBuf::from(s)
    });
    let with_ext = |ext: &str| {
        let mut s = prefix.as_os_str().to_owned();
        s.push(ext);
        PathBuf::from(s)
    };
    let (graph_out, layout_out, report_out) = (with_ext(".graph"), with_ext(".layout"), with_ext(".report.json"));
    std::fs::write(&graph_out, write_graph(&r.g_prime))?;
    std::fs::write(&layout_out, write_layout(&r.layout_prime))?;
    let mut res = json!({
        "problem": problem,
        "t": t,
        "t_prime": r.t_prime,
        "crossings_replaced": r.crossings_replaced,
        "width_in": r.width_in,
        "width_out": r.width_out,
        "gadget_width": r.gadget_width,
        "vertices": r.g_prime.vertex_count(),
        "edges": r.g_prime.edge_count(),
        "cut_profile": r.profile.widths,
        "graph_file": graph_out.display().to_string(),
        "layout_file": layout_out.display().to_string(),
    });
    let mut passed = true;
    if verify {
        let chk = verify_planarization(&g, t, &r, &gadget)?;
        passed = chk.passes();
        res["verification"] = serde_json::to_value(&chk)?;
    }
    std::fs::write(&report_out, serde_json::to_string_pretty(&res)?)?;
    Ok(Outcome { results: res, passed, seed: None, raw: None })
}

fn cmd_solve(
    inp: &mut Inputs,
    graph: &Path,
    layout: Option<&Path>,
    problem: Problem,
    algo: Algo,
) -> cwplanar::Result<Outcome> {
    let g = inp.graph(graph)?;
    let res = match algo {
        Algo::Brute => json!({ "problem": problem, "algo": "brute", "optimum": problem.brute(&g)? }),
        Algo::Dp => {
            let (l, source) = match layout {
                Some(p) => (inp.layout(p, &g)?, "given"),
                None => (heuristic_layout(&g), "heuristic"),
            };
            let mut v = dp_fields(&problem.dp(&g, &l)?);
            v["problem"] = json!(problem);
            v["algo"] = json!("dp");
            v["layout"] = json!(source);
            v
        }
    };
    Ok(Outcome::ok(res))
}

fn verdict(name: &str, pass: bool, detail: String) -> Value {
    eprintln!("{name}: {} {detail}", if pass { "PASS" } else { "FAIL" });
    json!({ "condition": name, "pass": pass, "detail": detail })
}

fn cmd_certify(
    inp: &mut Inputs,
    gadget: Option<&Path>,
    builtin_problem: Option<Problem>,
    hosts: usize,
    seed: u64,
) -> cwplanar::Result<Outcome> {
    let gadget = match (gadget, builtin_problem) {
        (Some(p), _) => CrossoverGadget::from_json(&inp.read(p)?)?,
        (None, Some(p)) => builtin(p),
        (None, None) => return Err(Error::Precondition("give a gadget file or --builtin is|ds".into())),
    };
    let mut conditions = Vec::new();
    conditions.push(verdict(
        "outer-face",
        gadget.outer_face_certified(),
        "terminals u, v, u', v' around the outer face".into(),
    ));
    if gadget.problem == Problem::Is {
        let cert = certify_is_gadget_report(&gadget)?;
        let c1_detail = match cert.c1_violations.first() {
            Some(&f) => format!("h({}) = {} != {}", subset_name(f), cert.boundary.get(f), cert.shift),
            None => format!("h(F) = {} on all nine subsets", cert.shift),
        };
        conditions.push(verdict("C1", cert.c1(), c1_detail));
        conditions.push(verdict(
            "C2",
            cert.c2,
            format!("h({{u, u'}}) = {}, h({{v, v'}}) = {}", cert.boundary.get(0b0011), cert.boundary.get(0b1100)),
        ));
        conditions.push(verdict("C3", cert.c3, format!("h(all four) = {}", cert.boundary.get(0b1111))));
    }
    let max_n = if gadget.problem == Problem::Is { 10 } else { 8 };
    let report = check_random_hosts(&gadget, hosts, max_n, seed)?;
    conditions.push(verdict(
        "host-shift",
        report.passes(),
        format!("{} of {} hosts shift by {}", hosts - report.failures(), hosts, gadget.shift),
    ));
    let passed = conditions.iter().all(|c| c["pass"] == json!(true));
    let res = json!({
        "problem": gadget.problem,
        "shift": gadget.shift,
        "vertices": gadget.h.vertex_count(),
        "edges": gadget.h.edge_count(),
        "layout_width": gadget.width(),
        "conditions": conditions,
        "hosts": report.trials,
    });
    Ok(Outcome { results: res, passed, seed: Some(seed), raw: None })
}

fn cmd_export(
    inp: &mut Inputs,
    graph: &Path,
    layout: Option<&Path>,
    format: Format,
    output: Option<&Path>,
) -> cwplanar::Result<Outcome> {
    let g = inp.graph(graph)?;
    let text = match format {
        Format::Dot => to_dot(&g),
        Format::Svg => {
            let l = match layout {
                Some(p) => inp.layout(p, &g)?,
                None => LinearLayout::identity(g.vertex_count()),
            };
            build_arc_drawing(&g, &l)?.to_svg()
        }
    };
    match output {
        Some(p) => {
            std::fs::write(p, &text)?;
            Ok(Outcome::ok(json!({ "output": p.display().to_string(), "bytes": text.len() })))
        }
        None => Ok(Outcome { results: Value::Null, passed: true, seed: None, raw: Some(text) }),
    }
}

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Parse => 2,
        ErrorKind::Precondition => 3,
        ErrorKind::Resource => 4,
        ErrorKind::Verification => 5,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut inp = Inputs(Vec::new());
    let outcome = match &cli.command {
        Command::Cutwidth { graph, layout, exact } => cmd_cutwidth(&mut inp, graph, layout.as_deref(), *exact),
        Command::Planarize { graph, layout, problem, t, verify, out } => {
            cmd_planarize(&mut inp, graph, layout, (*problem).into(), *t, *verify, out.as_deref())
        }
        Command::Solve { graph, layout, problem, algo } => {
            cmd_solve(&mut inp, graph, layout.as_deref(), (*problem).into(), *algo)
        }
        Command::Certify { gadget, builtin, hosts, seed } => {
            cmd_certify(&mut inp, gadget.as_deref(), builtin.map(Problem::from), *hosts, *seed)
        }
        Command::Export { graph, layout, format, output } => {
            cmd_export(&mut inp, graph, layout.as_deref(), *format, output.as_deref())
        }
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(e.kind()));
        }
    };
    if let Some(raw) = outcome.raw {
        print!("{raw}");
        return ExitCode::SUCCESS;
    }
    let report = RunReport {
        schema: 1,
        command: std::env::args().collect(),
        inputs: inp.0,
        seed: outcome.seed,
        results: outcome.results,
        passed: outcome.passed,
        wall_time_ms: start.elapsed().as_secs_f64() * 1000.0,
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(exit_code(ErrorKind::Verification))
    }
}
