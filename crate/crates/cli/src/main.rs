//! `igel`: ego-network encodings, distinguishability surveys and graph
//! generators from the command line.
//!
//! Exit codes: 0 success (and "distinguished" for `compare`), 1 usage error,
//! 2 data error (unreadable or malformed input, invalid parameters), 3
//! "equivalent" for `compare`.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use igel::encode::{igel_encode_all, vectorize};
use igel::families;
use igel::gamma::{gamma_encode_all, vectorize_gamma};
use igel::io::{
    parse_edge_list, parse_graph6_collection, write_edge_list, write_graph6, EdgeListOptions,
};
use igel::survey::{pairwise_compare, run_survey, EncoderSpec, Verdict};
use igel::wl::wl_refine;
use igel::{Error, Graph, GraphCollection};

#[derive(Parser)]
#[command(
    name = "igel",
    version,
    about = "Ego-network encodings and distinguishability surveys"
)]
struct Cli {
    /// Worker threads for parallel encoding (default: all cores).
    #[arg(long, global = true, env = "IGEL_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write sparse per-vertex feature vectors.
    Encode(EncodeArgs),
    /// Bucket a graph collection by encoding and count indistinguishable pairs.
    Survey(SurveyArgs),
    /// Compare two graphs; exits 0 if distinguished, 3 if equivalent.
    Compare(CompareArgs),
    /// Generate a graph from a named family.
    Gen(GenArgs),
    /// Dump the stable 1-WL color histogram.
    Refine(RefineArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    G6,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EncodeMethod {
    Igel,
    Gamma,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Wl,
    Igel,
    Gamma,
}

#[derive(Args)]
struct InputArgs {
    /// Input format; inferred from the extension (`.g6` is graph6) when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Edge-list ids start at 0 (default).
    #[arg(long, conflicts_with = "one_indexed")]
    zero_indexed: bool,

    /// Edge-list ids start at 1.
    #[arg(long)]
    one_indexed: bool,

    /// Declared vertex count for edge lists; keeps isolated vertices.
    #[arg(long)]
    vertices: Option<usize>,
}

#[derive(Args)]
struct EncodeArgs {
    /// Input files (`-` for standard input).
    #[arg(required = true)]
    inputs: Vec<PathBuf>,

    #[command(flatten)]
    input: InputArgs,

    #[arg(long, default_value_t = 2)]
    alpha: usize,

    #[arg(long, value_enum, default_value = "igel")]
    method: EncodeMethod,

    /// Degree cap: `auto` (collection-wide max degree) or a number.
    #[arg(long, default_value = "auto")]
    dcap: String,

    /// Output file (default: standard output).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SurveyArgs {
    /// graph6 collection.
    input: PathBuf,

    #[arg(long, value_enum, default_value = "igel")]
    method: Method,

    /// Depth, or a comma-separated list to concatenate depths (igel only).
    #[arg(long, default_value = "2", value_delimiter = ',')]
    alpha: Vec<usize>,

    /// Refinement iteration cap for `wl`.
    #[arg(long)]
    wl_iters: Option<usize>,

    /// Run the exact isomorphism check on every colliding pair (n <= 12).
    #[arg(long)]
    verify: bool,

    /// Report colliding pairs as errors (collection known pairwise non-isomorphic).
    #[arg(long)]
    known_non_isomorphic: bool,

    /// Include the colliding buckets in the report.
    #[arg(long)]
    detail: bool,

    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    a: PathBuf,
    b: PathBuf,

    #[command(flatten)]
    input: InputArgs,

    #[arg(long, value_enum, default_value = "igel")]
    method: Method,

    #[arg(long, default_value = "2", value_delimiter = ',')]
    alpha: Vec<usize>,

    #[arg(long)]
    wl_iters: Option<usize>,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: Family,

    #[arg(long, value_enum, default_value = "edgelist", global = true)]
    out_format: Format,

    /// Write edge lists with ids starting at 1.
    #[arg(long, global = true)]
    one_indexed: bool,

    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Family {
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// Star with `n` leaves.
    Star {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    Petersen,
    Shrikhande,
    /// `k x k` rook's graph.
    Rook {
        k: usize,
    },
    /// Paley graph on a prime `q = 1 mod 4`.
    Paley {
        q: usize,
    },
    RandomRegular {
        n: usize,
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Gnp {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct RefineArgs {
    #[arg(required = true)]
    inputs: Vec<PathBuf>,

    #[command(flatten)]
    input: InputArgs,

    #[arg(long)]
    max_iters: Option<usize>,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: 1,
            error: anyhow!(msg.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Failure { code: 2, error }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: 2,
            error: e.into(),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// A parsed input graph and, for edge lists, the ids used in the file.
struct Loaded {
    graph: Graph,
    ids: Option<Vec<u64>>,
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("cannot read standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
    }
}

fn with_location(path: &Path, e: Error) -> anyhow::Error {
    match e {
        Error::Parse { line, message } => anyhow!("{}:{line}: {message}", path.display()),
        other => anyhow!("{}: {other}", path.display()),
    }
}

fn format_of(path: &Path, explicit: Option<Format>) -> Format {
    explicit.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => Format::G6,
        _ => Format::Edgelist,
    })
}

impl InputArgs {
    fn check(&self, paths: &[&PathBuf]) -> Outcome<()> {
        let any_g6 = paths
            .iter()
            .any(|p| format_of(p, self.format) == Format::G6);
        if any_g6 && (self.zero_indexed || self.one_indexed || self.vertices.is_some()) {
            return Err(Failure::usage(
                "--zero-indexed, --one-indexed and --vertices apply to edge lists only",
            ));
        }
        Ok(())
    }

    fn load(&self, path: &Path) -> Outcome<Vec<Loaded>> {
        let text = read_text(path)?;
        match format_of(path, self.format) {
            Format::G6 => {
                let coll = parse_graph6_collection(&text).map_err(|e| with_location(path, e))?;
                Ok(coll
                    .graphs
                    .into_iter()
                    .map(|graph| Loaded { graph, ids: None })
                    .collect())
            }
            Format::Edgelist => {
                let opts = EdgeListOptions {
                    zero_indexed: !self.one_indexed,
                    vertices: self.vertices,
                };
                let parsed = parse_edge_list(&text, opts).map_err(|e| with_location(path, e))?;
                Ok(vec![Loaded {
                    graph: parsed.graph,
                    ids: Some(parsed.original_ids),
                }])
            }
        }
    }

    fn load_all(&self, paths: &[PathBuf]) -> Outcome<Vec<Loaded>> {
        self.check(&paths.iter().collect::<Vec<_>>())?;
        let mut out = Vec::new();
        for p in paths {
            out.extend(self.load(p)?);
        }
        Ok(out)
    }

    fn load_one(&self, path: &Path) -> Outcome<Graph> {
        let mut graphs = self.load(path)?;
        if graphs.len() != 1 {
            return Err(anyhow!(
                "{}: expected exactly one graph, found {}",
                path.display(),
                graphs.len()
            )
            .into());
        }
        Ok(graphs.remove(0).graph)
    }
}

fn emit(out: Option<&Path>, text: &str) -> Outcome<()> {
    match out {
        Some(p) if p != Path::new("-") => {
            fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))?;
        }
        _ => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .context("cannot write standard output")?;
        }
    }
    Ok(())
}

fn encoder_spec(method: Method, alpha: &[usize], wl_iters: Option<usize>) -> Outcome<EncoderSpec> {
    let spec = match (method, alpha) {
        (Method::Wl, _) => EncoderSpec::Wl {
            max_iters: wl_iters,
        },
        (_, []) => return Err(Failure::usage("--alpha needs at least one value")),
        (Method::Igel, [a]) => EncoderSpec::Igel { alpha: *a },
        (Method::Igel, list) => EncoderSpec::IgelConcat {
            alphas: list.to_vec(),
        },
        (Method::Gamma, [a]) => EncoderSpec::Gamma { alpha: *a },
        (Method::Gamma, _) => return Err(Failure::usage("gamma takes a single --alpha")),
    };
    spec.validate()?;
    Ok(spec)
}

fn cmd_encode(args: &EncodeArgs) -> Outcome<()> {
    let dcap_fixed = match args.dcap.as_str() {
        "auto" => None,
        s => Some(s.parse::<usize>().map_err(|_| {
            Failure::usage(format!("--dcap must be `auto` or a number, got {s:?}"))
        })?),
    };
    let graphs = args.input.load_all(&args.inputs)?;
    let dcap = match dcap_fixed {
        Some(c) => c,
        None => {
            let c = graphs
                .iter()
                .map(|l| l.graph.max_degree())
                .max()
                .unwrap_or(0)
                .max(1);
            eprintln!("dcap=auto resolved to {c}");
            c
        }
    };
    let method = match args.method {
        EncodeMethod::Igel => "igel",
        EncodeMethod::Gamma => "gamma",
    };
    let mut text = format!("# dcap={dcap} alpha={} method={method}\n", args.alpha);
    let multi = graphs.len() > 1;
    for (i, loaded) in graphs.iter().enumerate() {
        if multi {
            if i > 0 {
                text.push('\n');
            }
            let _ = writeln!(text, "# graph {i}");
        }
        let vectors = match args.method {
            EncodeMethod::Igel => igel_encode_all(&loaded.graph, args.alpha)?
                .iter()
                .map(|e| vectorize(e, dcap))
                .collect::<igel::Result<Vec<_>>>()?,
            EncodeMethod::Gamma => gamma_encode_all(&loaded.graph, args.alpha)?
                .iter()
                .map(|e| vectorize_gamma(e, dcap))
                .collect::<igel::Result<Vec<_>>>()?,
        };
        for (v, vec) in vectors.iter().enumerate() {
            let id = loaded.ids.as_ref().map_or(v as u64, |ids| ids[v]);
            let _ = writeln!(text, "{id} {vec}");
        }
    }
    emit(args.out.as_deref(), &text)
}

fn cmd_survey(args: &SurveyArgs) -> Outcome<()> {
    let spec = encoder_spec(args.method, &args.alpha, args.wl_iters)?;
    let text = read_text(&args.input)?;
    let coll: GraphCollection =
        parse_graph6_collection(&text).map_err(|e| with_location(&args.input, e))?;
    let report = run_survey(&coll, &spec, args.verify)?;
    let name = args.input.file_stem().map_or_else(
        || args.input.display().to_string(),
        |s| s.to_string_lossy().into_owned(),
    );
    let summary = report.summary(&name, args.known_non_isomorphic, args.detail);
    let mut line = serde_json::to_string(&summary).context("cannot serialize report")?;
    line.push('\n');
    emit(args.json.as_deref(), &line)
}

fn cmd_compare(args: &CompareArgs) -> Outcome<ExitCode> {
    let spec = encoder_spec(args.method, &args.alpha, args.wl_iters)?;
    args.input.check(&[&args.a, &args.b])?;
    let g1 = args.input.load_one(&args.a)?;
    let g2 = args.input.load_one(&args.b)?;
    let cmp = pairwise_compare(&g1, &g2, &spec)?;
    let mut line = cmp.verdict.to_string();
    if let Some(w) = &cmp.witness {
        let _ = write!(line, ": {w}");
    }
    line.push('\n');
    emit(None, &line)?;
    Ok(match cmp.verdict {
        Verdict::Distinguished => ExitCode::SUCCESS,
        Verdict::Equivalent => ExitCode::from(3),
    })
}

fn cmd_gen(args: &GenArgs) -> Outcome<()> {
    let g = match &args.family {
        Family::Cycle { n } => families::gen_cycle(*n),
        Family::Path { n } => families::gen_path(*n),
        Family::Complete { n } => families::gen_complete(*n),
        Family::Star { n } => families::gen_star(*n),
        Family::CompleteBipartite { a, b } => families::gen_complete_bipartite(*a, *b),
        Family::Petersen => families::gen_petersen(),
        Family::Shrikhande => families::gen_shrikhande(),
        Family::Rook { k } => families::gen_rook(*k),
        Family::Paley { q } => families::gen_paley(*q),
        Family::RandomRegular { n, d, seed } => families::gen_random_regular(*n, *d, *seed),
        Family::Gnp { n, p, seed } => families::gen_gnp(*n, *p, *seed),
    }?;
    let text = match args.out_format {
        Format::Edgelist => write_edge_list(&g, !args.one_indexed),
        Format::G6 => {
            if args.one_indexed {
                return Err(Failure::usage(
                    "--one-indexed applies to edge-list output only",
                ));
            }
            write_graph6(&g) + "\n"
        }
    };
    emit(args.out.as_deref(), &text)
}

fn cmd_refine(args: &RefineArgs) -> Outcome<()> {
    let graphs = args.input.load_all(&args.inputs)?;
    let mut text = String::new();
    for (i, loaded) in graphs.iter().enumerate() {
        let c = wl_refine(&loaded.graph, args.max_iters);
        if graphs.len() > 1 {
            if i > 0 {
                text.push('\n');
            }
            let _ = writeln!(text, "# graph {i}");
        }
        let _ = writeln!(
            text,
            "# iterations={} classes={}",
            c.iterations,
            c.num_classes()
        );
        for (color, count) in c.histogram.iter().enumerate() {
            let _ = writeln!(text, "{color} {count}");
        }
    }
    emit(None, &text)
}

fn run(cli: &Cli) -> Outcome<ExitCode> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(Failure::usage("--threads must be at least 1"));
        }
        igel::par::set_threads(t);
    }
    match &cli.command {
        Command::Encode(a) => cmd_encode(a)?,
        Command::Survey(a) => cmd_survey(a)?,
        Command::Compare(a) => return cmd_compare(a),
        Command::Gen(a) => cmd_gen(a)?,
        Command::Refine(a) => cmd_refine(a)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("igel: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
