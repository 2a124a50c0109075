//! Acceptance gate: one test per shipped guarantee, exercising the CLI binary
//! where a guarantee is about command behavior and the library elsewhere.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Output, Stdio};
use std::time::Instant;

use gzmitosis::gz::{self, EqKind, Equation, EquationFace, Flavor};
use gzmitosis::pipedream::{self, PipeDreamA, PipeDreamJson, SkewPipeDreamC};
use gzmitosis::polykernel::{self, poly_from_int_rows, FaceContext};
use gzmitosis::schubert;
use gzmitosis::weyl::{self, GroupElement, GroupType};
use gzmitosis::Rat;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_gzmitosis")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(bin())
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn dreams_a(out: &Output) -> BTreeSet<PipeDreamA> {
    let env: serde_json::Value = serde_json::from_str(stdout_of(out).trim()).expect("json stdout");
    assert_eq!(env["kind"], "pipedreams");
    let wires: Vec<PipeDreamJson> = serde_json::from_value(env["payload"].clone()).expect("payload");
    wires.into_iter().map(|w| w.into_a().expect("type A payload")).collect()
}

fn dreams_c(out: &Output) -> BTreeSet<SkewPipeDreamC> {
    let env: serde_json::Value = serde_json::from_str(stdout_of(out).trim()).expect("json stdout");
    assert_eq!(env["kind"], "pipedreams");
    let wires: Vec<PipeDreamJson> = serde_json::from_value(env["payload"].clone()).expect("payload");
    wires.into_iter().map(|w| w.into_c().expect("type C payload")).collect()
}

const STAIRCASE_EXAMPLE: &str = "1,1;1,2;1,3;1,4;2,3;3,1;4,1;5,1";
const SKEW_EXAMPLE: &str = "1,1;1,3;1,4;2,3;2,4;3,3;3,4;3,5;4,4";

#[test]
fn c01_two_row_mitosis_reproduces_the_leading_example() {
    let out = run(&["mitosis", "basic", "--ell", "5", "--a", "1,2,3,4", "--b", "3", "--json"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout_of(&out).trim(),
        r#"{"kind":"basic_mitosis","payload":{"r":4,"j":[1,2,4],"offsprings":[{"ell":5,"a":[2,3,4],"b":[3]},{"ell":5,"a":[3,4],"b":[1,3]},{"ell":5,"a":[3],"b":[1,2,3]}]}}"#
    );
    let ascii = run(&["mitosis", "basic", "--ell", "5", "--a", "1,2,3,4", "--b", "3"]);
    assert_eq!(exit_code(&ascii), 0);
    let text = stdout_of(&ascii);
    assert!(text.starts_with("r: 4\nj: 1,2,4\n"));
    assert_eq!(text.matches("offspring").count(), 3);
    println!("criterion 01: pass");
}

#[test]
fn c02_type_a_mitosis_splits_the_staircase_example() {
    let out = run(&["mitosis", "a", "--n", "6", "--i", "1", "--crosses", STAIRCASE_EXAMPLE]);
    assert_eq!(exit_code(&out), 0);
    let expect: BTreeSet<PipeDreamA> = [
        vec![(1, 2), (1, 3), (1, 4), (2, 3), (3, 1), (4, 1), (5, 1)],
        vec![(1, 3), (1, 4), (2, 1), (2, 3), (3, 1), (4, 1), (5, 1)],
        vec![(1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (4, 1), (5, 1)],
    ]
    .into_iter()
    .map(|cells| PipeDreamA::new(6, cells).unwrap())
    .collect();
    assert_eq!(dreams_a(&out), expect);

    for i in ["2", "3", "4", "6"] {
        let empty = run(&["mitosis", "a", "--n", "6", "--i", i, "--crosses", STAIRCASE_EXAMPLE]);
        assert_eq!(exit_code(&empty), 0);
        assert!(dreams_a(&empty).is_empty(), "i={i}");
    }

    let fifth = run(&["mitosis", "a", "--n", "6", "--i", "5", "--crosses", STAIRCASE_EXAMPLE]);
    let erased = PipeDreamA::new(
        6,
        [(1, 1), (1, 2), (1, 3), (1, 4), (2, 3), (3, 1), (4, 1)],
    )
    .unwrap();
    assert_eq!(dreams_a(&fifth), BTreeSet::from([erased]));
    println!("criterion 02: pass");
}

#[test]
fn c03_type_c_mitosis_splits_the_skew_example() {
    let out = run(&["mitosis", "c", "--n", "4", "--i", "1", "--crosses", SKEW_EXAMPLE]);
    assert_eq!(exit_code(&out), 0);
    let expect: BTreeSet<SkewPipeDreamC> = [
        vec![(1, 1), (1, 3), (2, 3), (2, 4), (3, 3), (3, 4), (3, 5), (4, 4)],
        vec![(1, 1), (1, 3), (1, 5), (2, 3), (3, 3), (3, 4), (3, 5), (4, 4)],
        vec![(1, 1), (1, 3), (1, 5), (2, 3), (2, 5), (3, 3), (3, 4), (3, 5)],
    ]
    .into_iter()
    .map(|cells| SkewPipeDreamC::new(4, cells).unwrap())
    .collect();
    assert_eq!(dreams_c(&out), expect);

    for i in ["2", "3"] {
        let empty = run(&["mitosis", "c", "--n", "4", "--i", i, "--crosses", SKEW_EXAMPLE]);
        assert_eq!(exit_code(&empty), 0);
        assert!(dreams_c(&empty).is_empty(), "i={i}");
    }

    let fourth = run(&["mitosis", "c", "--n", "4", "--i", "4", "--crosses", SKEW_EXAMPLE]);
    let erased = SkewPipeDreamC::new(
        4,
        [(1, 3), (1, 4), (2, 3), (2, 4), (3, 3), (3, 4), (3, 5), (4, 4)],
    )
    .unwrap();
    assert_eq!(dreams_c(&fourth), BTreeSet::from([erased]));
    println!("criterion 03: pass");
}

#[test]
fn c04_the_worked_example_admits_and_splits_as_documented() {
    // Degree-2 example body: x1 <= 1, x1 >= 0, x3 <= 1, x3 >= 0, x2 >= 0,
    // x1 + x2 + x3 <= 2, with distinguished vertex v = (1, 1, 0).
    let body = poly_from_int_rows(
        3,
        &[
            (&[1, 0, 0], 1),
            (&[-1, 0, 0], 0),
            (&[0, 0, 1], 1),
            (&[0, 0, -1], 0),
            (&[0, -1, 0], 0),
            (&[1, 1, 1], 2),
        ],
    )
    .unwrap();
    let ctx = FaceContext::new(body).unwrap();
    let v: Vec<Rat> = [1, 1, 0].iter().map(|&t| gzmitosis::rat(t)).collect();

    // First split pair: P1 = {x3 = 0}, Q1 = {x3 = 1}; the face {x3 = 0,
    // x1 + x2 + x3 = 2} has exactly the offsprings {x1 = 1} and the degree facet.
    let p1 = ctx.facet(3);
    let q1 = ctx.facet(2);
    let f = ctx.face(&BTreeSet::from([3, 5]));
    let out = polykernel::geometric_mitosis(&ctx, &v, &p1, &q1, &f).unwrap().unwrap();
    assert_eq!(out, vec![ctx.facet(0), ctx.facet(5)]);

    // Second split pair: P2 = {x1 = 1}, Q2 = {x1 = 0}; every v-face of P2 is
    // admissible and has exactly one offspring.
    let p2 = ctx.facet(0);
    let q2 = ctx.facet(1);
    let mut admissible = 0;
    for f in ctx.faces_through(&v).unwrap() {
        if !ctx.contains_face(&p2, &f) {
            continue;
        }
        let offsprings = polykernel::geometric_mitosis(&ctx, &v, &p2, &q2, &f)
            .unwrap()
            .expect("every v-face of this facet is admissible");
        assert_eq!(offsprings.len(), 1, "tight {:?}", f.tight);
        admissible += 1;
    }
    assert_eq!(admissible, 4);

    // Split-prism example: in the Cayley sum of the two triangles a square
    // splits into, the facet P and its edges are admissible, vertices are not.
    let tri_p = poly_from_int_rows(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[-1, -1], -1)]).unwrap();
    let tri_q = poly_from_int_rows(2, &[(&[-1, 0], 0), (&[0, -1], 0), (&[1, 1], 1)]).unwrap();
    let prism = polykernel::cayley_sum(&tri_p, &tri_q).unwrap();
    let ctx = FaceContext::new(prism).unwrap();
    let p_facet = ctx.facet(ctx.poly.row_by_label("P").unwrap());
    for f in ctx.all_faces() {
        if !ctx.contains_face(&p_facet, &f) {
            continue;
        }
        let expansion = polykernel::expand(&ctx, &p_facet, &f).unwrap();
        match f.dim {
            0 => assert!(expansion.is_none(), "vertices must not be admissible"),
            1 | 2 => assert!(expansion.is_some(), "edges and the facet must be admissible"),
            _ => unreachable!("the facet has dimension 2"),
        }
    }
    println!("criterion 04: pass");
}

#[test]
fn c05_the_main_sweeps_finish_clean_within_budget() {
    let start = Instant::now();
    let small = run(&["verify", "main", "--n", "2"]);
    assert_eq!(exit_code(&small), 0);
    assert_eq!(stdout_of(&small).trim(), "checked: 6, mismatches: 0");
    let large = run(&["verify", "main", "--n", "3"]);
    assert_eq!(exit_code(&large), 0);
    assert_eq!(stdout_of(&large).trim(), "checked: 56, mismatches: 0");
    assert!(start.elapsed().as_secs() < 120, "sweeps must finish within two minutes");
    println!("criterion 05: pass");
}

#[test]
fn c06_adapted_mitosis_matches_the_two_row_bijection() {
    for n in 1..=3 {
        let report = gz::adapted_vs_bijection_report(n, true).unwrap();
        assert!(report.ok(), "geometric comparison at n={n}: {:?}", report.mismatches);
    }
    let report = gz::adapted_vs_bijection_report(4, false).unwrap();
    assert!(report.ok(), "combinatorial comparison at n=4: {:?}", report.mismatches);

    // Splitting a 13-dimensional face of the rank-6 pattern yields exactly
    // three 14-dimensional offsprings.
    let face = EquationFace::new(
        GroupType::A,
        6,
        [
            Equation::new(EqKind::A, 1, 1),
            Equation::new(EqKind::A, 2, 1),
            Equation::new(EqKind::A, 3, 1),
            Equation::new(EqKind::A, 4, 1),
            Equation::new(EqKind::A, 3, 2),
            Equation::new(EqKind::A, 1, 3),
            Equation::new(EqKind::A, 1, 4),
            Equation::new(EqKind::A, 1, 5),
        ],
    )
    .unwrap();
    assert_eq!(gz::close_and_measure(&face).unwrap().dim, 13);
    let out = gz::adapted_mitosis_a(1, &face).unwrap();
    let diagrams: BTreeSet<gz::Diagram> = out.iter().map(gz::diagram_of).collect();
    let expect: BTreeSet<gz::Diagram> = [
        [(2, 1), (3, 1), (4, 1), (3, 2), (1, 3), (1, 4), (1, 5)],
        [(3, 1), (4, 1), (1, 2), (3, 2), (1, 3), (1, 4), (1, 5)],
        [(3, 1), (1, 2), (2, 2), (3, 2), (1, 3), (1, 4), (1, 5)],
    ]
    .into_iter()
    .map(|cells| cells.into_iter().collect())
    .collect();
    assert_eq!(diagrams, expect);
    assert_eq!(out.len(), 3);
    for child in &out {
        let c = gz::close_and_measure(child).unwrap();
        assert!(c.feasible);
        assert_eq!(c.dim, 14);
    }
    println!("criterion 06: pass");
}

#[test]
fn c07_the_type_c_sweep_is_clean() {
    let out = run(&["verify", "c", "--n", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out).trim(), "checked: 6, mismatches: 0");
    println!("criterion 07: pass");
}

#[test]
fn c08_pipe_dream_descent_chains_are_clean() {
    let out = run(&["verify", "km", "--n", "3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out).trim(), "checked: 36, mismatches: 0");
    println!("criterion 08: pass");
}

#[test]
fn c09_polynomial_identities_hold() {
    let out = run(&["verify", "schubert", "--n", "3"]);
    assert_eq!(exit_code(&out), 0);
    let line = stdout_of(&out);
    assert!(line.trim().ends_with("mismatches: 0"), "got {line:?}");
    println!("criterion 09: pass");
}

#[test]
fn c10_generated_face_sets_realize_schubert_polynomials() {
    let n = 3;
    let w0 = weyl::w0(GroupType::A, n);
    for w in weyl::all_elements(GroupType::A, n).unwrap() {
        let words = weyl::all_reduced_words(&w).unwrap();
        let base = schubert::generate_sw(n, &words[0]).unwrap();
        for word in &words[1..] {
            assert_eq!(schubert::generate_sw(n, word).unwrap(), base, "word {word:?}");
        }
        let u = weyl::product(&w0, &w);
        let GroupElement::A(ref perm) = u else { unreachable!("type A element") };
        let dreams = pipedream::enumerate_reduced_pipe_dreams(n, perm).unwrap();
        assert_eq!(base.len(), dreams.len(), "face count for {u:?}");
        assert_eq!(
            schubert::diagram_polynomial(n, &base).unwrap(),
            schubert::schubert_polynomial(n, &u).unwrap(),
            "diagram sum for {u:?}"
        );
    }
    println!("criterion 10: pass");
}

#[test]
fn c11_the_dual_chain_deficit_is_exactly_one_face() {
    let out = run(&["verify", "dualchain", "--n", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out).trim(), "checked: 8, mismatches: 0");

    let s2s1 = weyl::evaluate(GroupType::C, 2, &[2, 1]).unwrap();
    assert_eq!(schubert::dual_face_count(2, &s2s1).unwrap().0, 3);
    assert_eq!(schubert::dual_face_count(2, &weyl::w0(GroupType::C, 2)).unwrap().0, 1);
    assert_eq!(schubert::dual_face_count(2, &weyl::identity(GroupType::C, 2)).unwrap().0, 1);
    println!("criterion 11: pass");
}

#[test]
fn c12_the_dual_subword_face_matches_the_inscription() {
    let face = gz::dual_subword_face(4, &[1, 4, 5, 6, 7, 8, 11, 14, 15, 16]).unwrap();
    let expect = EquationFace::new(
        GroupType::C,
        4,
        [
            Equation::new(EqKind::B, 1, 1),
            Equation::new(EqKind::B, 1, 2),
            Equation::new(EqKind::B, 1, 3),
            Equation::new(EqKind::A, 2, 2),
            Equation::new(EqKind::B, 3, 2),
            Equation::new(EqKind::B, 3, 3),
            Equation::new(EqKind::A, 4, 1),
            Equation::new(EqKind::A, 4, 2),
            Equation::new(EqKind::B, 5, 1),
            Equation::new(EqKind::B, 7, 1),
        ],
    )
    .unwrap();
    assert_eq!(face, expect);
    println!("criterion 12: pass");
}

#[test]
fn c13_closure_dimensions_match_exact_geometry() {
    for (gtype, n) in [(GroupType::A, 2), (GroupType::A, 3), (GroupType::C, 2)] {
        let report = gz::closure_dimension_report(gtype, n).unwrap();
        assert!(report.ok(), "type {gtype:?} n={n}: {:?}", report.mismatches);
        assert_eq!(report.checked, 1 << gz::gz_cells(gtype, n).len());
    }
    println!("criterion 13: pass");
}

#[test]
fn c14_verification_verbs_exit_as_documented() {
    for suite in ["main", "c", "km", "schubert", "dualchain"] {
        let out = run(&["verify", suite]);
        assert_eq!(exit_code(&out), 0, "shipped {suite} must be clean");
    }
    let broken_main = run(&["verify", "main", "--n", "3", "--mutate", "drop-j-restriction"]);
    assert_eq!(exit_code(&broken_main), 1);
    let broken_km = run(&["verify", "km", "--n", "3", "--mutate", "drop-j-restriction"]);
    assert_eq!(exit_code(&broken_km), 1);
    let broken_dual = run(&["verify", "dualchain", "--n", "2", "--mutate", "unswap-dual-pq"]);
    assert_eq!(exit_code(&broken_dual), 1);

    for (suite, mutation) in [
        ("c", "drop-j-restriction"),
        ("schubert", "unswap-dual-pq"),
        ("main", "unswap-dual-pq"),
    ] {
        let out = run(&["verify", suite, "--mutate", mutation]);
        assert_eq!(exit_code(&out), 2, "{mutation} must not apply to {suite}");
    }
    println!("criterion 14: pass");
}

#[test]
fn render_round_trips_both_envelope_kinds() {
    let dream = r#"{"kind":"pipedream","payload":{"type":"A","n":6,"crosses":[[1,1],[1,2],[1,3],[1,4],[2,3],[3,1],[4,1],[5,1]]}}"#;
    let ascii = run_stdin(&["render", "--format", "ascii"], dream);
    assert_eq!(exit_code(&ascii), 0);
    assert_eq!(
        stdout_of(&ascii),
        "+ + + + . .\n. . + . .\n+ . . .\n+ . .\n+ .\n.\n"
    );
    let json = run_stdin(&["render", "--format", "json"], dream);
    assert_eq!(stdout_of(&json).trim(), dream);

    let pattern = r#"{"kind":"gz","payload":{"type":"C","n":2,"diagram":[[1,1],[2,1]]}}"#;
    let ascii = run_stdin(&["render", "--format", "ascii"], pattern);
    assert_eq!(exit_code(&ascii), 0);
    let json = run_stdin(&["render", "--format", "json"], pattern);
    assert_eq!(
        stdout_of(&json).trim(),
        r#"{"kind":"gz","payload":{"type":"C","n":2,"diagram":[[1,1],[2,1]],"lambda":["2","1","0"]}}"#
    );

    let bad = run_stdin(&["render", "--format", "ascii"], r#"{"kind":"mystery","payload":{}}"#);
    assert_eq!(exit_code(&bad), 2);
    println!("render round-trip: pass");
}

#[test]
fn malformed_input_exits_with_usage_errors() {
    assert_eq!(exit_code(&run(&["schubert", "sw", "--n", "2", "--word", "1,1"])), 2);
    assert_eq!(exit_code(&run(&["schubert", "poly", "--perm", "2,2,1"])), 2);
    assert_eq!(exit_code(&run(&["mitosis", "a", "--i", "1"])), 2);
    assert_eq!(exit_code(&run(&["mitosis", "a", "--n", "6", "--i", "1", "--crosses", "9,9"])), 2);
    assert_eq!(exit_code(&run(&["gz", "face", "--type", "a", "--n", "2", "--diagram", "1,1", "--flavor", "dual"])), 2);
    assert_eq!(exit_code(&run(&["subwords", "--n", "5", "--target", "1,2,3,4,-5"])), 3);
    println!("usage errors: pass");
}
