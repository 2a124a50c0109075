//! Command-line front end: builds pipe dreams and pattern faces, runs the
//! mitosis operators, renders ASCII art, exports JSON, and drives the
//! verification sweeps.

use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use gzmitosis::gz::{self, EqKind, Equation, EquationFace, Flavor};
use gzmitosis::pipedream::{self, MitosisRule, PipeDreamJson};
use gzmitosis::polykernel::{self, FaceContext};
use gzmitosis::schubert;
use gzmitosis::weyl::{self, GroupType};
use gzmitosis::{Error, Rat, Result};

#[derive(Parser)]
#[command(name = "gzmitosis", about = "Mitosis operators on pipe dreams and pattern polytope faces")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Mitosis on pipe dreams: the two-row rule and its type A / type C forms.
    #[command(subcommand)]
    Mitosis(MitosisCmd),
    /// Pattern polytope faces: closure measurement and face-level mitosis.
    #[command(subcommand)]
    Gz(GzCmd),
    /// Schubert polynomials and generated face sets.
    #[command(subcommand)]
    Schubert(SchubertCmd),
    /// Reduced subwords of the long type C inscription word.
    Subwords(SubwordsArgs),
    /// Exhaustive verification sweeps; exits 1 on any mismatch.
    Verify(VerifyArgs),
    /// Renders a JSON envelope from stdin as ASCII art or canonical JSON.
    Render(RenderArgs),
}

#[derive(Subcommand)]
enum MitosisCmd {
    /// Two-row mitosis on an (ell+1, ell) pair of rows.
    Basic(BasicArgs),
    /// Type A mitosis on a staircase pipe dream, acting on rows i and i+1.
    A(PipeArgs),
    /// Type C mitosis on a skew pipe dream, acting on rows i and i+1.
    C(PipeArgs),
}

#[derive(Args)]
struct BasicArgs {
    /// Length of the lower row; the upper row has ell+1 squares.
    #[arg(long)]
    ell: usize,
    /// Filled positions of the upper row, e.g. "1,2,3,4".
    #[arg(long, default_value = "")]
    a: String,
    /// Filled positions of the lower row.
    #[arg(long, default_value = "")]
    b: String,
    /// Emit the canonical JSON envelope instead of ASCII.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PipeArgs {
    /// Rank of the pipe-dream region.
    #[arg(long)]
    n: Option<usize>,
    /// Pipe-dream row index the operator acts on.
    #[arg(long)]
    i: usize,
    /// Crosses as "i,j;i,j" pairs.
    #[arg(long, conflicts_with = "stdin_json")]
    crosses: Option<String>,
    /// Read the pipe dream from a JSON envelope on stdin.
    #[arg(long)]
    stdin_json: bool,
}

#[derive(Subcommand)]
enum GzCmd {
    /// Closes a diagram's equation set and measures the cut-out face.
    Face(FaceArgs),
    /// Applies face mitosis with operator index i at the chosen vertex flavor.
    Mitosis(GzMitosisArgs),
}

#[derive(Args)]
struct FaceArgs {
    #[arg(long = "type", value_enum)]
    gtype: TypeArg,
    #[arg(long)]
    n: usize,
    /// Diagram cells as "i,j;i,j" pairs.
    #[arg(long, default_value = "")]
    diagram: String,
    #[arg(long, value_enum, default_value_t = FlavorArg::Kogan)]
    flavor: FlavorArg,
}

#[derive(Args)]
struct GzMitosisArgs {
    #[arg(long = "type", value_enum)]
    gtype: TypeArg,
    #[arg(long)]
    n: usize,
    /// Operator index; the split happens at the top-row cell (1, i).
    #[arg(long)]
    i: usize,
    /// Diagram cells as "i,j;i,j" pairs.
    #[arg(long, default_value = "")]
    diagram: String,
    #[arg(long, value_enum, default_value_t = FlavorArg::Kogan)]
    flavor: FlavorArg,
    /// Use the adapted combinatorial operator instead of the geometric one.
    #[arg(long)]
    adapted: bool,
}

#[derive(Subcommand)]
enum SchubertCmd {
    /// Schubert polynomial of a permutation in one-line notation.
    Poly(PolyArgs),
    /// Face set generated from the Kogan vertex along a reduced word.
    Sw(SwArgs),
}

#[derive(Args)]
struct PolyArgs {
    /// One-line notation, e.g. "2,1,3".
    #[arg(long)]
    perm: String,
}

#[derive(Args)]
struct SwArgs {
    #[arg(long)]
    n: usize,
    /// Reduced word letters, e.g. "1,2"; empty for the identity.
    #[arg(long, default_value = "")]
    word: String,
}

#[derive(Args)]
struct SubwordsArgs {
    #[arg(long)]
    n: usize,
    /// Signed one-line notation of the target, e.g. "-2,1".
    #[arg(long, allow_hyphen_values = true)]
    target: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: SuiteArg,
    /// Rank; defaults to the largest rank the suite is specified for.
    #[arg(long)]
    n: Option<usize>,
    /// Replace one ingredient by its documented broken variant.
    #[arg(long, value_enum)]
    mutate: Option<MutateArg>,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    A,
    C,
}

impl TypeArg {
    fn group(self) -> GroupType {
        match self {
            TypeArg::A => GroupType::A,
            TypeArg::C => GroupType::C,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum FlavorArg {
    Kogan,
    Dual,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum SuiteArg {
    Main,
    C,
    Km,
    Schubert,
    Dualchain,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum MutateArg {
    DropJRestriction,
    UnswapDualPq,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Json,
}

#[derive(Serialize)]
struct EnvelopeOut<'a, T: Serialize> {
    kind: &'a str,
    payload: &'a T,
}

#[derive(Deserialize)]
struct EnvelopeIn {
    kind: String,
    payload: serde_json::Value,
}

#[derive(Serialize)]
struct BasicMitosisOut {
    r: usize,
    j: Vec<usize>,
    offsprings: Vec<BasicRowsOut>,
}

#[derive(Serialize)]
struct BasicRowsOut {
    ell: usize,
    a: Vec<usize>,
    b: Vec<usize>,
}

#[derive(Serialize)]
struct ClosureOut {
    face: EquationFace,
    feasible: bool,
    dim: usize,
}

/// Wire form of a pattern with an optional marked diagram and weight.
#[derive(Serialize, Deserialize)]
struct GzPatternJson {
    #[serde(rename = "type")]
    gtype: String,
    n: usize,
    #[serde(default)]
    diagram: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lambda: Option<Vec<String>>,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.cmd) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Capacity(_) => 3,
                _ => 2,
            }
        }
    };
    std::process::exit(code);
}

fn run(cmd: Cmd) -> Result<i32> {
    match cmd {
        Cmd::Mitosis(MitosisCmd::Basic(args)) => cmd_basic(args),
        Cmd::Mitosis(MitosisCmd::A(args)) => cmd_pipe(args, TypeArg::A),
        Cmd::Mitosis(MitosisCmd::C(args)) => cmd_pipe(args, TypeArg::C),
        Cmd::Gz(GzCmd::Face(args)) => cmd_face(args),
        Cmd::Gz(GzCmd::Mitosis(args)) => cmd_gz_mitosis(args),
        Cmd::Schubert(SchubertCmd::Poly(args)) => cmd_poly(args),
        Cmd::Schubert(SchubertCmd::Sw(args)) => cmd_sw(args),
        Cmd::Subwords(args) => cmd_subwords(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Render(args) => cmd_render(args),
    }
}

fn emit<T: Serialize>(kind: &str, payload: &T) -> Result<i32> {
    let line = serde_json::to_string(&EnvelopeOut { kind, payload })
        .map_err(|e| Error::Format(e.to_string()))?;
    println!("{line}");
    Ok(0)
}

fn parse_usizes(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Format(format!("invalid number {:?}", t.trim())))
        })
        .collect()
}

fn parse_i64s(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Format(format!("invalid number {:?}", t.trim())))
        })
        .collect()
}

fn parse_cells(s: &str) -> Result<Vec<(usize, usize)>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';')
        .map(|pair| {
            let nums = parse_usizes(pair)?;
            if nums.len() != 2 {
                return Err(Error::Format(format!("cell {pair:?} must be a row,column pair")));
            }
            Ok((nums[0], nums[1]))
        })
        .collect()
}

fn read_stdin() -> Result<String> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Error::Format(format!("cannot read stdin: {e}")))?;
    Ok(buf)
}

fn row_symbols(row: &[bool]) -> String {
    row.iter().map(|&f| if f { "+" } else { "." }).collect::<Vec<_>>().join(" ")
}

fn cmd_basic(args: BasicArgs) -> Result<i32> {
    let d = pipedream::BasicPipeDream::from_filled(args.ell, &parse_usizes(&args.a)?, &parse_usizes(&args.b)?)?;
    let (r, j, offsprings) = pipedream::two_row_mitosis(&d);
    if args.json {
        let payload = BasicMitosisOut {
            r,
            j,
            offsprings: offsprings
                .iter()
                .map(|o| {
                    let (a, b) = o.filled();
                    BasicRowsOut { ell: o.ell, a, b }
                })
                .collect(),
        };
        return emit("basic_mitosis", &payload);
    }
    println!("r: {r}");
    println!("j: {}", j.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
    for (t, o) in offsprings.iter().enumerate() {
        println!("offspring {}:", t + 1);
        println!("{}", row_symbols(&o.a_row));
        println!("{}", row_symbols(&o.b_row));
    }
    Ok(0)
}

fn cmd_pipe(args: PipeArgs, which: TypeArg) -> Result<i32> {
    let wire = if args.stdin_json {
        let env: EnvelopeIn =
            serde_json::from_str(&read_stdin()?).map_err(|e| Error::Format(e.to_string()))?;
        if env.kind != "pipedream" {
            return Err(Error::Format(format!("expected a pipedream envelope, got {:?}", env.kind)));
        }
        serde_json::from_value::<PipeDreamJson>(env.payload).map_err(|e| Error::Format(e.to_string()))?
    } else {
        let Some(n) = args.n else {
            return Err(Error::Domain("--n is required unless --stdin-json is given".into()));
        };
        PipeDreamJson {
            kind: match which {
                TypeArg::A => "A".into(),
                TypeArg::C => "C".into(),
            },
            n,
            crosses: parse_cells(args.crosses.as_deref().unwrap_or(""))?,
        }
    };
    let out: Vec<PipeDreamJson> = match which {
        TypeArg::A => pipedream::mitosis_a(args.i, &wire.into_a()?)?
            .iter()
            .map(PipeDreamJson::from)
            .collect(),
        TypeArg::C => pipedream::mitosis_c(args.i, &wire.into_c()?)?
            .iter()
            .map(PipeDreamJson::from)
            .collect(),
    };
    emit("pipedreams", &out)
}

fn face_from_args(gtype: GroupType, n: usize, diagram: &str, flavor: FlavorArg) -> Result<EquationFace> {
    let diagram: gz::Diagram = parse_cells(diagram)?.into_iter().collect();
    let flavor = match (gtype, flavor) {
        (GroupType::A, FlavorArg::Kogan) => Flavor::Kogan,
        (GroupType::C, FlavorArg::Kogan) => Flavor::Symplectic,
        (GroupType::C, FlavorArg::Dual) => Flavor::Dual,
        (GroupType::A, FlavorArg::Dual) => {
            return Err(Error::Domain("the dual flavor lives in type C".into()))
        }
    };
    gz::face_of_diagram(gtype, n, &diagram, flavor)
}

fn cmd_face(args: FaceArgs) -> Result<i32> {
    let face = face_from_args(args.gtype.group(), args.n, &args.diagram, args.flavor)?;
    let closure = gz::close_and_measure(&face)?;
    emit(
        "closure",
        &ClosureOut {
            face: closure.face,
            feasible: closure.feasible,
            dim: closure.dim,
        },
    )
}

/// Geometric mitosis at the flavor vertex under the split at (1, i).
fn geometric_flavor_mitosis(flavor: Flavor, n: usize, i: usize, face: &EquationFace) -> Result<Vec<EquationFace>> {
    let gtype = flavor.group_type();
    let limit = match gtype {
        GroupType::A => 3,
        GroupType::C => 2,
    };
    if n > limit {
        return Err(Error::Capacity(format!(
            "geometric face mitosis in type {gtype:?} is limited to n <= {limit}, got {n}"
        )));
    }
    if i < 1 || i > n {
        return Err(Error::Domain(format!("operator index {i} is outside 1..={n}")));
    }
    let ctx = FaceContext::new(gz::gz_polytope(gtype, n, &gz::default_weight(gtype, n))?)?;
    let faces_all = ctx.all_faces();
    let v = gz::vertex_point(&ctx, &gz::flavor_vertex(flavor, n)?)?;
    let handle = gz::face_handle(&ctx, face)?;
    let (p_kind, q_kind) = match flavor {
        Flavor::Dual => (EqKind::B, EqKind::A),
        _ => (EqKind::A, EqKind::B),
    };
    let p = ctx.facet(gz::eq_row_index(gtype, n, Equation::new(p_kind, 1, i))?);
    let q = ctx.facet(gz::eq_row_index(gtype, n, Equation::new(q_kind, 1, i))?);
    let got = polykernel::geometric_mitosis_over(&ctx, &faces_all, &v, &p, &q, &handle)?;
    let mut out = Vec::new();
    for h in got.unwrap_or_default() {
        out.push(gz::handle_equations(gtype, n, &h)?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn cmd_gz_mitosis(args: GzMitosisArgs) -> Result<i32> {
    let gtype = args.gtype.group();
    let face = face_from_args(gtype, args.n, &args.diagram, args.flavor)?;
    let out = match (gtype, args.flavor, args.adapted) {
        (GroupType::A, FlavorArg::Kogan, true) => gz::adapted_mitosis_a(args.i, &face)?,
        (GroupType::C, FlavorArg::Kogan, true) => gz::adapted_mitosis_c(args.i, &face)?,
        (GroupType::C, FlavorArg::Dual, true) => gz::adapted_mitosis_dual_c(args.i, &face)?,
        (GroupType::C, FlavorArg::Dual, false) => gz::dual_mitosis_c(args.n, args.i, &face)?,
        (_, FlavorArg::Kogan, false) => {
            let flavor = match gtype {
                GroupType::A => Flavor::Kogan,
                GroupType::C => Flavor::Symplectic,
            };
            geometric_flavor_mitosis(flavor, args.n, args.i, &face)?
        }
        (GroupType::A, FlavorArg::Dual, _) => unreachable!("rejected while building the face"),
    };
    emit("faces", &out)
}

fn cmd_poly(args: PolyArgs) -> Result<i32> {
    let images = parse_i64s(&args.perm)?;
    let w = weyl::element_from_images(GroupType::A, &images)?;
    let poly = schubert::schubert_polynomial(w.rank(), &w)?;
    emit("polynomial", &poly)
}

fn cmd_sw(args: SwArgs) -> Result<i32> {
    let word = parse_usizes(&args.word)?;
    let faces = schubert::generate_sw(args.n, &word)?;
    emit("faces", &faces)
}

fn cmd_subwords(args: SubwordsArgs) -> Result<i32> {
    let target = weyl::element_from_images(GroupType::C, &parse_i64s(&args.target)?)?;
    if target.rank() != args.n {
        return Err(Error::Domain(format!(
            "target has rank {}, expected {}",
            target.rank(),
            args.n
        )));
    }
    let positions = weyl::reduced_subwords(GroupType::C, args.n, &weyl::w0_bar(args.n), &target)?;
    emit("subwords", &positions)
}

fn cmd_verify(args: VerifyArgs) -> Result<i32> {
    let mutate_ok = match (args.suite, args.mutate) {
        (_, None) => true,
        (SuiteArg::Main | SuiteArg::Km, Some(MutateArg::DropJRestriction)) => true,
        (SuiteArg::Dualchain, Some(MutateArg::UnswapDualPq)) => true,
        _ => false,
    };
    if !mutate_ok {
        return Err(Error::Domain("this mutation does not apply to the chosen suite".into()));
    }
    let rule = match args.mutate {
        Some(MutateArg::DropJRestriction) => MitosisRule::DropPrefixBound,
        _ => MitosisRule::Standard,
    };
    let report = match args.suite {
        SuiteArg::Main => gz::verify_theorem_main(args.n.unwrap_or(3), rule)?,
        SuiteArg::C => gz::verify_theorem_c(args.n.unwrap_or(2), rule)?,
        SuiteArg::Km => pipedream::km_report(args.n.unwrap_or(3), rule)?,
        SuiteArg::Schubert => schubert::verify_schubert(args.n.unwrap_or(3))?,
        SuiteArg::Dualchain => schubert::compare_dual_chain_vs_subwords(
            args.n.unwrap_or(2),
            args.mutate != Some(MutateArg::UnswapDualPq),
        )?,
    };
    println!("checked: {}, mismatches: {}", report.checked, report.mismatches.len());
    for m in &report.mismatches {
        eprintln!("mismatch: {m}");
    }
    Ok(if report.ok() { 0 } else { 1 })
}

fn parse_weight(gtype: GroupType, n: usize, lambda: &Option<Vec<String>>) -> Result<Vec<Rat>> {
    match lambda {
        None => Ok(gz::default_weight(gtype, n)),
        Some(tokens) => tokens.iter().map(|t| polykernel::rat_from_string(t)).collect(),
    }
}

fn cmd_render(args: RenderArgs) -> Result<i32> {
    let env: EnvelopeIn =
        serde_json::from_str(&read_stdin()?).map_err(|e| Error::Format(e.to_string()))?;
    match env.kind.as_str() {
        "pipedream" => {
            let wire: PipeDreamJson =
                serde_json::from_value(env.payload).map_err(|e| Error::Format(e.to_string()))?;
            match (wire.kind.as_str(), args.format) {
                ("A", FormatArg::Ascii) => {
                    println!("{}", wire.into_a()?.render());
                    Ok(0)
                }
                ("C", FormatArg::Ascii) => {
                    println!("{}", wire.into_c()?.render());
                    Ok(0)
                }
                ("A", FormatArg::Json) => emit("pipedream", &PipeDreamJson::from(&wire.into_a()?)),
                ("C", FormatArg::Json) => emit("pipedream", &PipeDreamJson::from(&wire.into_c()?)),
                _ => Err(Error::Format(format!("unknown pipe-dream type {:?}", wire.kind))),
            }
        }
        "gz" => {
            let wire: GzPatternJson =
                serde_json::from_value(env.payload).map_err(|e| Error::Format(e.to_string()))?;
            let gtype = match wire.gtype.as_str() {
                "A" => GroupType::A,
                "C" => GroupType::C,
                other => return Err(Error::Format(format!("unknown pattern type {other:?}"))),
            };
            let lambda = parse_weight(gtype, wire.n, &wire.lambda)?;
            let diagram: gz::Diagram = wire.diagram.iter().copied().collect();
            match args.format {
                FormatArg::Ascii => {
                    println!("{}", gz::render_pattern(gtype, wire.n, &lambda, &diagram)?);
                    Ok(0)
                }
                FormatArg::Json => {
                    gz::render_pattern(gtype, wire.n, &lambda, &diagram)?;
                    let canonical = GzPatternJson {
                        gtype: wire.gtype,
                        n: wire.n,
                        diagram: diagram.into_iter().collect(),
                        lambda: Some(lambda.iter().map(polykernel::rat_to_string).collect()),
                    };
                    emit("gz", &canonical)
                }
            }
        }
        other => Err(Error::Format(format!("unknown envelope kind {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn list_parsers_accept_blanks_and_reject_garbage() {
        assert_eq!(parse_usizes("").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_usizes("1, 2,3").unwrap(), vec![1, 2, 3]);
        assert!(parse_usizes("1,x").is_err());
        assert_eq!(parse_cells("1,2;2,1").unwrap(), vec![(1, 2), (2, 1)]);
        assert!(parse_cells("1,2;3").is_err());
        assert_eq!(parse_i64s("-2,1").unwrap(), vec![-2, 1]);
    }

    #[test]
    fn flavor_selection_rejects_dual_type_a() {
        assert!(face_from_args(GroupType::A, 2, "", FlavorArg::Dual).is_err());
        assert!(face_from_args(GroupType::C, 2, "1,1", FlavorArg::Dual).is_ok());
    }

    #[test]
    fn geometric_and_adapted_mitosis_agree_on_a_qualifying_face() {
        let face = face_from_args(GroupType::A, 2, "1,1;2,1", FlavorArg::Kogan).unwrap();
        let geometric = geometric_flavor_mitosis(Flavor::Kogan, 2, 1, &face).unwrap();
        let adapted = gz::adapted_mitosis_a(1, &face).unwrap();
        let adapted_closed: BTreeSet<EquationFace> = adapted
            .iter()
            .map(|f| gz::close_and_measure(f).map(|c| c.face))
            .collect::<Result<_>>()
            .unwrap();
        assert_eq!(geometric.into_iter().collect::<BTreeSet<_>>(), adapted_closed);
    }
}
