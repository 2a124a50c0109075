//! Schubert-calculus layer: divided differences on integer polynomials, the
//! pipe-dream monomial oracle, face-set generation from the Kogan vertex, and
//! the dual-Kogan subword correspondence with its chain comparison.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::gz::{self, EqKind, Equation, EquationFace};
use crate::pipedream;
use crate::polykernel::FaceContext;
use crate::weyl::{self, GroupElement, GroupType, Permutation};
use crate::{Error, Report, Result};

/// Sparse integer polynomial with a fixed variable count; no zero terms stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "IntPolynomialJson", try_from = "IntPolynomialJson")]
pub struct IntPolynomial {
    vars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl IntPolynomial {
    pub fn zero(vars: usize) -> IntPolynomial {
        IntPolynomial { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: i64) -> IntPolynomial {
        let mut p = IntPolynomial::zero(vars);
        p.add_term(&vec![0; vars], c).expect("constant term never overflows");
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    /// Adds c * x^exps, dropping the term if the coefficient cancels.
    pub fn add_term(&mut self, exps: &[u32], c: i64) -> Result<()> {
        if exps.len() != self.vars {
            return Err(Error::Domain(format!(
                "exponent vector has {} entries, expected {}",
                exps.len(),
                self.vars
            )));
        }
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(exps.to_vec()).or_insert(0);
        *slot = slot
            .checked_add(c)
            .ok_or_else(|| Error::Capacity("polynomial coefficient overflow".into()))?;
        if *slot == 0 {
            self.terms.remove(exps);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    co: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct IntPolynomialJson {
    vars: usize,
    terms: Vec<TermJson>,
}

impl From<IntPolynomial> for IntPolynomialJson {
    fn from(p: IntPolynomial) -> Self {
        IntPolynomialJson {
            vars: p.vars,
            terms: p.terms.into_iter().map(|(exp, co)| TermJson { exp, co }).collect(),
        }
    }
}

impl TryFrom<IntPolynomialJson> for IntPolynomial {
    type Error = Error;

    fn try_from(j: IntPolynomialJson) -> Result<IntPolynomial> {
        let mut p = IntPolynomial::zero(j.vars);
        for term in j.terms {
            if term.co == 0 || p.terms.contains_key(&term.exp) {
                return Err(Error::Format("polynomial terms must be nonzero and distinct".into()));
            }
            p.add_term(&term.exp, term.co)?;
        }
        Ok(p)
    }
}

/// The divided difference (f - s_i f)/(x_i - x_{i+1}), computed term by term.
pub fn divided_difference(i: usize, f: &IntPolynomial) -> Result<IntPolynomial> {
    if i < 1 || i + 1 > f.vars {
        return Err(Error::Domain(format!(
            "operator index {i} needs variables x_{i} and x_{}",
            i + 1
        )));
    }
    let mut out = IntPolynomial::zero(f.vars);
    for (exps, c) in f.terms() {
        let (p, q) = (exps[i - 1], exps[i]);
        // x_i^p x_{i+1}^q contributes the geometric sum between the exponents
        let (lo, hi, sign) = if p > q { (q, p, c) } else { (p, q, -c) };
        let mut exps = exps.to_vec();
        for t in lo..hi {
            exps[i - 1] = t;
            exps[i] = hi + lo - 1 - t;
            out.add_term(&exps, sign)?;
        }
    }
    Ok(out)
}

/// The staircase monomial x_1^n x_2^{n-1} ... x_n, the longest element's
/// Schubert polynomial.
fn staircase(n: usize) -> IntPolynomial {
    let mut p = IntPolynomial::zero(n + 1);
    let exps: Vec<u32> = (0..=n as u32).rev().collect();
    p.add_term(&exps, 1).expect("single monomial never overflows");
    p
}

fn delta_chain(n: usize, word: &[usize]) -> Result<IntPolynomial> {
    let mut f = staircase(n);
    for &i in word {
        f = divided_difference(i, &f)?;
    }
    Ok(f)
}

/// The Schubert polynomial of w in S_{n+1}, built by divided differences from
/// the staircase monomial along a reduced word for w0 w.
pub fn schubert_polynomial(n: usize, w: &GroupElement) -> Result<IntPolynomial> {
    if w.group_type() != GroupType::A || w.rank() != n {
        return Err(Error::Domain("expected a type A element of matching rank".into()));
    }
    let u = weyl::product(&weyl::w0(GroupType::A, n), w);
    delta_chain(n, &weyl::reduced_word(&u))
}

/// The Fomin-Kirillov sum over reduced pipe dreams of w: each dream contributes
/// the product of x_i over its crosses (i, j).
pub fn pipe_dream_polynomial(n: usize, w: &Permutation) -> Result<IntPolynomial> {
    let mut out = IntPolynomial::zero(n + 1);
    for d in pipedream::enumerate_reduced_pipe_dreams(n, w)? {
        let mut exps = vec![0u32; n + 1];
        for &(i, _) in &d.crosses {
            exps[i - 1] += 1;
        }
        out.add_term(&exps, 1)?;
    }
    Ok(out)
}

/// Sum of diagram monomials over faces: a cell (i, j) contributes x_j.
pub fn diagram_polynomial(n: usize, faces: &[EquationFace]) -> Result<IntPolynomial> {
    let mut out = IntPolynomial::zero(n + 1);
    for face in faces {
        let mut exps = vec![0u32; n + 1];
        for (_, j) in gz::diagram_of(face) {
            exps[j - 1] += 1;
        }
        out.add_term(&exps, 1)?;
    }
    Ok(out)
}

/// The face set S_w: iterated adapted mitosis from the Kogan vertex along the
/// word, first letter applied first; sorted with duplicates merged.
pub fn generate_sw(n: usize, word: &[usize]) -> Result<Vec<EquationFace>> {
    if !weyl::is_reduced(GroupType::A, n, word)? {
        return Err(Error::Domain(format!("word {word:?} is not reduced")));
    }
    let mut faces: BTreeSet<EquationFace> = BTreeSet::new();
    faces.insert(gz::kogan_vertex(GroupType::A, n)?);
    for &i in word {
        let mut next = BTreeSet::new();
        for face in &faces {
            next.extend(gz::adapted_mitosis_a(i, face)?);
        }
        faces = next;
    }
    Ok(faces.into_iter().collect())
}

/// Dual Kogan faces presenting w: one face per reduced subword of the long
/// inscription word multiplying to w0 w, deduplicated.
pub fn dual_face_count(n: usize, w: &GroupElement) -> Result<(usize, Vec<EquationFace>)> {
    if w.group_type() != GroupType::C || w.rank() != n {
        return Err(Error::Domain("expected a type C element of matching rank".into()));
    }
    if n > 4 {
        return Err(Error::Capacity(format!("subword counting is limited to n <= 4, got {n}")));
    }
    let target = weyl::product(&weyl::w0(GroupType::C, n), w);
    let mut faces = BTreeSet::new();
    for positions in weyl::reduced_subwords(GroupType::C, n, &weyl::w0_bar(n), &target)? {
        faces.insert(gz::dual_subword_face(n, &positions)?);
    }
    let faces: Vec<EquationFace> = faces.into_iter().collect();
    Ok((faces.len(), faces))
}

/// Walks the two maximal chains of B_2 from the dual Kogan vertex to the whole
/// polytope, applying dual mitosis with operator index i to every presentation
/// face lying in the facet {x(1,i) = lambda_{i+1}}, and diffs each step's union
/// against the subword presentation of the next element. The lower chain's
/// first step uses the adapted operator. One face is genuinely missing where
/// the upper chain lands on s2 s1; the report treats exactly that deficit as
/// expected and anything else as a mismatch. `swap_pq = false` replays the
/// comparison with the facet pair unswapped, for the mutation harness.
pub fn compare_dual_chain_vs_subwords(n: usize, swap_pq: bool) -> Result<Report> {
    if n != 2 {
        return Err(Error::Domain(format!("the chain comparison is pinned to n = 2, got {n}")));
    }
    let lambda = gz::default_weight(GroupType::C, n);
    let ctx = FaceContext::new(gz::gz_polytope(GroupType::C, n, &lambda)?)?;
    let faces_all = ctx.all_faces();
    let v_star = gz::vertex_point(&ctx, &gz::dual_kogan_vertex(n)?)?;
    let deficit = EquationFace::new(
        GroupType::C,
        n,
        [Equation::new(EqKind::B, 1, 1), Equation::new(EqKind::B, 1, 2)],
    )?;
    let deficit_ids = ctx.vertex_ids(&gz::face_handle(&ctx, &deficit)?);
    let mut report = Report { checked: 0, mismatches: Vec::new() };
    for (chain, ops) in [("upper", [1usize, 2, 1, 2]), ("lower", [2usize, 1, 2, 1])] {
        let mut stage = weyl::identity(GroupType::C, n);
        for (step, &i) in ops.iter().enumerate() {
            let next = weyl::apply_generator(&stage, n - i + 1)?;
            report.checked += 1;
            let label = format!("{chain} chain step {}", step + 1);
            let sources = dual_face_count(n, &stage)?.1;
            let expected: BTreeSet<Vec<usize>> = dual_face_count(n, &next)?
                .1
                .iter()
                .map(|f| Ok(ctx.vertex_ids(&gz::face_handle(&ctx, f)?)))
                .collect::<Result<_>>()?;
            let mut actual: BTreeSet<Vec<usize>> = BTreeSet::new();
            let p_eq = Equation::new(EqKind::B, 1, i);
            for face in sources.iter().filter(|f| f.contains(p_eq)) {
                if chain == "lower" && step == 0 {
                    for child in gz::adapted_mitosis_dual_c(i, face)? {
                        actual.insert(ctx.vertex_ids(&gz::face_handle(&ctx, &child)?));
                    }
                    continue;
                }
                let handle = gz::face_handle(&ctx, face)?;
                match gz::dual_mitosis_c_in(&ctx, n, i, &handle, &faces_all, &v_star, swap_pq) {
                    Ok(Some(children)) => {
                        for child in children {
                            actual.insert(ctx.vertex_ids(&child));
                        }
                    }
                    Ok(None) => {
                        report.mismatches.push(format!("{label}: face {:?} is not admissible", face.eqs))
                    }
                    Err(Error::Domain(_)) => {
                        report.mismatches.push(format!("{label}: operator rejected face {:?}", face.eqs))
                    }
                    Err(e) => return Err(e),
                }
            }
            let missing: Vec<&Vec<usize>> = expected.difference(&actual).collect();
            let extra: Vec<&Vec<usize>> = actual.difference(&expected).collect();
            if chain == "upper" && step == 1 {
                if missing != [&deficit_ids] || !extra.is_empty() {
                    report
                        .mismatches
                        .push(format!("{label}: expected exactly the one documented missing face"));
                }
            } else if !missing.is_empty() || !extra.is_empty() {
                report
                    .mismatches
                    .push(format!("{label}: {} missing, {} extra", missing.len(), extra.len()));
            }
            stage = next;
        }
    }
    Ok(report)
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

fn random_polynomial(vars: usize, state: &mut u64) -> IntPolynomial {
    let mut p = IntPolynomial::zero(vars);
    let terms = 1 + splitmix64(state) % 8;
    for _ in 0..terms {
        let exps: Vec<u32> = (0..vars).map(|_| (splitmix64(state) % 5) as u32).collect();
        let c = (splitmix64(state) % 19) as i64 - 9;
        p.add_term(&exps, c).expect("corpus coefficients stay small");
    }
    p
}

/// Checks the divided-difference identities on a random corpus, then for every
/// w in S_{n+1}: Schubert word-independence, the pipe-dream monomial sum, and
/// the three structural properties of the generated face sets.
pub fn verify_schubert(n: usize) -> Result<Report> {
    if n < 1 || n > 3 {
        return Err(Error::Capacity(format!("schubert verification is limited to n <= 3, got {n}")));
    }
    let vars = n + 1;
    let mut report = Report { checked: 0, mismatches: Vec::new() };
    let mut state = 0x5EED0001u64;
    for round in 0..100 {
        let f = random_polynomial(vars, &mut state);
        for i in 1..vars {
            report.checked += 1;
            if !divided_difference(i, &divided_difference(i, &f)?)?.is_zero() {
                report.mismatches.push(format!("corpus {round}: delta_{i} squared is nonzero"));
            }
        }
        for i in 1..vars {
            for j in i + 2..vars {
                report.checked += 1;
                let ij = divided_difference(i, &divided_difference(j, &f)?)?;
                let ji = divided_difference(j, &divided_difference(i, &f)?)?;
                if ij != ji {
                    report.mismatches.push(format!("corpus {round}: delta_{i}/delta_{j} do not commute"));
                }
            }
        }
        for i in 1..vars - 1 {
            report.checked += 1;
            let lhs = divided_difference(i, &divided_difference(i + 1, &divided_difference(i, &f)?)?)?;
            let rhs = divided_difference(i + 1, &divided_difference(i, &divided_difference(i + 1, &f)?)?)?;
            if lhs != rhs {
                report.mismatches.push(format!("corpus {round}: braid relation fails at {i}"));
            }
        }
    }
    let w0 = weyl::w0(GroupType::A, n);
    for w in weyl::all_elements(GroupType::A, n)? {
        let sp = schubert_polynomial(n, &w)?;
        let u = weyl::product(&w0, &w);
        let wl = format!("w = {:?}", w.line());
        report.checked += 1;
        if weyl::all_reduced_words(&u)?
            .iter()
            .any(|word| delta_chain(n, word).map(|f| f != sp).unwrap_or(true))
        {
            report.mismatches.push(format!("{wl}: schubert polynomial depends on the word"));
        }
        let GroupElement::A(p) = &w else { unreachable!() };
        report.checked += 1;
        if pipe_dream_polynomial(n, p)? != sp {
            report.mismatches.push(format!("{wl}: pipe-dream sum differs from divided differences"));
        }
        let words = weyl::all_reduced_words(&w)?;
        let faces = generate_sw(n, &words[0])?;
        report.checked += 1;
        if words[1..].iter().any(|word| generate_sw(n, word).map(|s| s != faces).unwrap_or(true)) {
            report.mismatches.push(format!("{wl}: generated face set depends on the word"));
        }
        let GroupElement::A(up) = &u else { unreachable!() };
        report.checked += 1;
        if faces.len() != pipedream::enumerate_reduced_pipe_dreams(n, up)?.len() {
            report.mismatches.push(format!("{wl}: face count differs from the pipe-dream count"));
        }
        report.checked += 1;
        if diagram_polynomial(n, &faces)? != schubert_polynomial(n, &u)? {
            report.mismatches.push(format!("{wl}: face monomial sum differs from the oracle"));
        }
    }
    Ok(report)
}
