//! `caps` — constructions, chord profiles, Singer orbits, exhaustive
//! searches, and the one-shot verification suite for caps in PG(r, q).

use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use caps_core::{
    build_singer, build_space, cap11_pg43, cap_size_bound, cap_verdict, chord_profile,
    complete_cap_search, descriptors, direct_sum_union, elliptic_quadric,
    expected_chord_number, extraspecial_vector_orbits, hyperbolic_quadric, hyperoval_pg24,
    hyperplane_complement, is_complete, orbit_cap_filter, psu42_triple, pure_tensor_points,
    read_points, subgeometry_witnesses, subgroup_orbits, tits_ovoid, verify, write_points,
    FieldSpec, Limits, PointId, PointSet, ProjectiveSpace, SearchOptions,
};

use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "caps",
    version,
    about = "Caps in finite projective spaces PG(r, q): exact constructions, chord numbers, \
             exhaustive searches, and a deterministic verification report"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named construction as a point file (see `construct --list`)
    Construct(ConstructArgs),
    /// Decide whether a point file is a cap; exit 1 with a witness if not
    Check(PointsArg),
    /// Chord-number profile of the cap in a point file
    Chord(PointsArg),
    /// Orbits of a cyclic subgroup acting freely on PG(r, q)
    Singer(SingerArgs),
    /// Exhaustive maximum-cap search over a small space
    Search(SearchArgs),
    /// Re-run the full case-analysis verification and report every check
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Construction name, e.g. elliptic-quadric
    name: Option<String>,
    /// List every available construction and its parameters
    #[arg(long)]
    list: bool,
    /// Field order
    #[arg(long)]
    q: Option<u32>,
    /// Projective dimension
    #[arg(long)]
    r: Option<usize>,
    /// Summand dimension for direct-sum
    #[arg(long)]
    t: Option<usize>,
    /// Second tensor factor dimension for pure-tensor
    #[arg(long)]
    b: Option<usize>,
    /// Subfield order for subgeometry (q must equal s^2)
    #[arg(long)]
    s: Option<u32>,
    /// Number of coordinates for subgeometry
    #[arg(long)]
    a: Option<usize>,
}

#[derive(Args)]
struct PointsArg {
    /// Point file: header `PG r q`, one point per line, `-` for stdin
    #[arg(long)]
    points: PathBuf,
}

#[derive(Args)]
struct SingerArgs {
    /// Projective dimension
    #[arg(long)]
    r: usize,
    /// Field order
    #[arg(long)]
    q: u64,
    /// Number of residue classes; must divide the cycle order
    #[arg(long)]
    n: u64,
}

#[derive(Args)]
struct SearchArgs {
    /// Projective dimension
    #[arg(long)]
    r: u32,
    /// Field order
    #[arg(long)]
    q: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Emit the report as canonical JSON (sorted keys, stable bytes)
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Emit the report as human-readable text (the default)
    #[arg(long)]
    text: bool,
    /// Largest collineation group the brute-force stages may enumerate
    #[arg(long)]
    limit: Option<u64>,
    /// Node budget per divisor for the orbit-union searches
    #[arg(long)]
    union_budget: Option<u64>,
    /// Worker threads for the check groups; the report does not depend on this
    #[arg(long)]
    workers: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            let broken_pipe = err.chain().any(|cause| {
                cause
                    .downcast_ref::<io::Error>()
                    .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
            });
            if broken_pipe {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Construct(args) => run_construct(args),
        Command::Check(args) => run_check(args),
        Command::Chord(args) => run_chord(args),
        Command::Singer(args) => run_singer(args),
        Command::Search(args) => run_search(args),
        Command::Verify(args) => run_verify(args),
    }
}

fn space_of(q: u64, r: usize) -> Result<Arc<ProjectiveSpace>> {
    let f = FieldSpec::of_order(q)?;
    Ok(build_space(&f, r)?)
}

fn req<T: Copy>(value: Option<T>, flag: &str, name: &str) -> Result<T> {
    value.ok_or_else(|| anyhow!("construction '{name}' requires {flag}"))
}

fn print_point_set(set: &PointSet, comments: &[String]) -> Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for line in comments {
        writeln!(out, "# {line}")?;
    }
    write_points(set, &mut out)?;
    Ok(())
}

fn run_construct(args: ConstructArgs) -> Result<ExitCode> {
    if args.list || args.name.is_none() {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        for d in descriptors() {
            let params = if d.parameters.is_empty() { "(no parameters)" } else { d.parameters };
            writeln!(out, "{:<22} {:<38} size {}", d.name, params, d.size_formula)?;
            writeln!(out, "{:<22} {}", "", d.summary)?;
        }
        return Ok(ExitCode::SUCCESS);
    }
    let name = args.name.as_deref().unwrap_or_default();

    let mut comments: Vec<String> = Vec::new();
    let set = match name {
        "elliptic-quadric" => elliptic_quadric(req(args.q, "--q", name)?)?,
        "hyperbolic-quadric" => hyperbolic_quadric(req(args.q, "--q", name)?)?,
        "tits-ovoid" => tits_ovoid(req(args.q, "--q", name)?)?,
        "hyperoval-pg24" => hyperoval_pg24()?,
        "hyperplane-complement" => hyperplane_complement(req(args.r, "--r", name)?)?,
        "cap11-pg43" => cap11_pg43()?,
        "direct-sum" => {
            let q = req(args.q, "--q", name)?;
            let t = req(args.t, "--t", name)?;
            let space = space_of(q as u64, 2 * t - 1)?;
            direct_sum_union(&space, t)?
        }
        "pure-tensor" => {
            let q = req(args.q, "--q", name)?;
            let b = req(args.b, "--b", name)?;
            let space = space_of(q as u64, 2 * b - 1)?;
            pure_tensor_points(&space, b)?
        }
        "subgeometry" => {
            let w = subgeometry_witnesses(
                req(args.q, "--q", name)?,
                req(args.s, "--s", name)?,
                req(args.a, "--a", name)?,
            )?;
            comments.push(format!(
                "collinear triple inside: {}",
                triple_str(w.subgeometry.space(), w.inside_triple)
            ));
            comments.push(format!(
                "collinear triple outside, avoiding the subgeometry: {}",
                triple_str(w.subgeometry.space(), w.outside_triple)
            ));
            w.subgeometry
        }
        "extraspecial-orbits" => {
            let orbits = extraspecial_vector_orbits()?;
            comments.push(format!(
                "vector orbit lengths: {:?}; printing the first projective image",
                orbits.vector_orbits.iter().map(Vec::len).collect::<Vec<_>>()
            ));
            for (i, image) in orbits.images.iter().enumerate() {
                comments.push(format!(
                    "image {i}: {} points, cap: {}",
                    image.len(),
                    cap_verdict(image).is_cap
                ));
            }
            orbits.images.into_iter().next().expect("five orbit images")
        }
        "psu42-triple" => {
            let t = psu42_triple()?;
            comments.push(format!(
                "collinear: {}; third vector equals the sum of the first two: {}",
                t.collinear, t.third_is_sum
            ));
            PointSet::new(&t.space, t.ids.iter().copied())?
        }
        other => bail!("unknown construction '{other}'; see `caps construct --list`"),
    };

    let verdict = cap_verdict(&set);
    comments.insert(
        0,
        format!(
            "{name}: {} points in PG({},{}); cap: {}",
            set.len(),
            set.space().r(),
            set.space().q(),
            verdict.is_cap
        ),
    );
    print_point_set(&set, &comments)?;
    Ok(ExitCode::SUCCESS)
}

fn read_set(path: &Path) -> Result<PointSet> {
    if path == Path::new("-") {
        let stdin = io::stdin();
        Ok(read_points(stdin.lock())?)
    } else {
        let file =
            File::open(path).with_context(|| format!("opening {}", path.display()))?;
        Ok(read_points(BufReader::new(file))?)
    }
}

fn point_str(space: &ProjectiveSpace, id: PointId) -> String {
    space.point(id).to_string()
}

fn triple_str(space: &ProjectiveSpace, ids: [PointId; 3]) -> String {
    format!(
        "{} {} {}",
        point_str(space, ids[0]),
        point_str(space, ids[1]),
        point_str(space, ids[2])
    )
}

fn run_check(args: PointsArg) -> Result<ExitCode> {
    let set = read_set(&args.points)?;
    let space = set.space().clone();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let verdict = cap_verdict(&set);
    match verdict.witness {
        None => {
            writeln!(
                out,
                "cap: {} points in PG({},{}); complete: {}",
                set.len(),
                space.r(),
                space.q(),
                is_complete(&set)?
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Some((a, b, c)) => {
            writeln!(
                out,
                "not a cap: {} {} {} are collinear",
                point_str(&space, a),
                point_str(&space, b),
                point_str(&space, c)
            )?;
            Ok(ExitCode::from(1))
        }
    }
}

fn run_chord(args: PointsArg) -> Result<ExitCode> {
    let set = read_set(&args.points)?;
    let space = set.space().clone();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let verdict = cap_verdict(&set);
    if let Some((a, b, c)) = verdict.witness {
        writeln!(
            out,
            "not a cap: {} {} {} are collinear",
            point_str(&space, a),
            point_str(&space, b),
            point_str(&space, c)
        )?;
        return Ok(ExitCode::from(1));
    }
    let profile = chord_profile(&set)?;
    let k = set.len() as u64;
    let m = profile.externals().len() as u64;
    let q = space.q() as u64;
    writeln!(out, "cap size k = {k}, external points m = {m}, q = {q}")?;
    if let Some(c) = profile.constant_value() {
        writeln!(out, "chord numbers: constant {c}")?;
    } else {
        writeln!(out, "chord numbers: min {}, max {}", profile.min(), profile.max())?;
    }
    writeln!(
        out,
        "sum over external points: {} (pair count times q - 1: {})",
        profile.total(),
        k * (k - 1) * (q - 1) / 2
    )?;
    let expected = expected_chord_number(k, m.max(1), q);
    writeln!(
        out,
        "two-orbit expected value k(k-1)(q-1)/(2m) = {expected} (integer: {})",
        expected.is_integer()
    )?;
    Ok(ExitCode::SUCCESS)
}

fn run_singer(args: SingerArgs) -> Result<ExitCode> {
    let space = space_of(args.q, args.r)?;
    let cycle = build_singer(&space);
    let partition = subgroup_orbits(&cycle, args.n)?;
    let flags = orbit_cap_filter(&partition);
    let orbit_size = cycle.order() / args.n;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    writeln!(
        out,
        "cyclic group of order {} acting on the {} points of PG({},{})",
        cycle.order(),
        space.num_points(),
        args.r,
        args.q
    )?;
    writeln!(
        out,
        "{} orbits of size {}; caps: {} of {}",
        args.n,
        orbit_size,
        flags.iter().filter(|&&b| b).count(),
        flags.len()
    )?;
    for (i, orbit) in partition.orbits().iter().enumerate() {
        writeln!(
            out,
            "orbit {i}: cap: {}, least point {}",
            flags[i],
            point_str(&space, orbit[0])
        )?;
    }
    Ok(ExitCode::SUCCESS)
}

fn run_search(args: SearchArgs) -> Result<ExitCode> {
    let bound = cap_size_bound(args.r, args.q);
    let space = space_of(args.q, args.r as usize)?;
    let result = complete_cap_search(&space, &SearchOptions::default())?;
    let example = PointSet::new(&space, result.example.iter().copied())?;
    let comments = vec![format!(
        "exhaustive search over PG({},{}): maximum cap size {} (bound {}, {}); {} nodes",
        args.r,
        args.q,
        result.max_size,
        bound.value,
        if bound.exact { "exact" } else { "upper bound" },
        result.nodes
    )];
    print_point_set(&example, &comments)?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode> {
    let mut limits = Limits::from_env();
    if let Some(limit) = args.limit {
        limits.stabilizer_limit = limit;
    }
    if let Some(budget) = args.union_budget {
        limits.union_node_budget = budget;
    }
    let workers = args
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(4, |n| n.get()));
    let report = verify(&limits, workers)?;
    let rendered = if args.json { report.to_canonical_json() } else { report.to_text() };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    out.write_all(rendered.as_bytes())?;
    Ok(if report.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
