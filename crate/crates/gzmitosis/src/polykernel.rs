//! Exact-rational polyhedral kernel: H-polytopes, vertex and face enumeration,
//! Cayley sums, admissible faces, and simple geometric mitosis.

use std::collections::BTreeSet;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Rat, Result};

/// One inequality a·x <= b with an optional display label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Row {
    pub a: Vec<Rat>,
    pub b: Rat,
    pub label: Option<String>,
}

/// Bounded intersection of half-spaces in R^dim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolytope {
    pub dim: usize,
    pub rows: Vec<Row>,
}

/// A face described by its closed tight-row set and its dimension (-1 for the empty face).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FaceHandle {
    pub tight: Vec<usize>,
    pub dim: i64,
}

const MAX_DIM: usize = 12;
const MAX_ROWS: usize = 26;
const MAX_HULL_POINTS: usize = 16;

impl Row {
    pub fn new(a: Vec<Rat>, b: Rat) -> Row {
        Row { a, b, label: None }
    }

    pub fn labeled(a: Vec<Rat>, b: Rat, label: &str) -> Row {
        Row { a, b, label: Some(label.to_string()) }
    }

    /// Scales so the entries of (a, b) are coprime integers, keeping orientation.
    pub fn canonical(&self) -> (Vec<Rat>, Rat) {
        let mut lcm = crate::Int::one();
        for c in self.a.iter().chain([&self.b]) {
            lcm = num::integer::lcm(lcm, c.denom().clone());
        }
        let scaled: Vec<crate::Int> = self
            .a
            .iter()
            .chain([&self.b])
            .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut gcd = crate::Int::zero();
        for v in &scaled {
            gcd = num::integer::gcd(gcd, v.abs());
        }
        if gcd.is_zero() {
            gcd = crate::Int::one();
        }
        let mut out: Vec<Rat> = scaled
            .into_iter()
            .map(|v| Rat::from_integer(v / gcd.clone()))
            .collect();
        let b = out.pop().expect("b entry present");
        (out, b)
    }
}

impl HPolytope {
    pub fn new(dim: usize, rows: Vec<Row>) -> Result<HPolytope> {
        if dim == 0 {
            return Err(Error::Domain("ambient dimension must be at least 1".into()));
        }
        for row in &rows {
            if row.a.len() != dim {
                return Err(Error::Domain(format!(
                    "row has {} coefficients in dimension {dim}",
                    row.a.len()
                )));
            }
        }
        Ok(HPolytope { dim, rows })
    }

    /// Sorted canonical (a, b) pairs; the basis of polytope equality.
    pub fn canonical_rows(&self) -> BTreeSet<(Vec<Rat>, Rat)> {
        self.rows.iter().map(Row::canonical).collect()
    }

    /// Equality as a subset of R^dim: same canonical rows and same vertices.
    pub fn same_body(&self, other: &HPolytope) -> Result<bool> {
        Ok(self.dim == other.dim
            && self.canonical_rows() == other.canonical_rows()
            && vertices(self)? == vertices(other)?)
    }

    /// Index of the unique row with the given label.
    pub fn row_by_label(&self, label: &str) -> Result<usize> {
        let hits: Vec<usize> = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.label.as_deref() == Some(label))
            .map(|(idx, _)| idx)
            .collect();
        match hits.as_slice() {
            [one] => Ok(*one),
            [] => Err(Error::Domain(format!("no row labeled {label:?}"))),
            _ => Err(Error::Domain(format!("label {label:?} is not unique"))),
        }
    }
}

fn dot(a: &[Rat], x: &[Rat]) -> Rat {
    a.iter().zip(x).map(|(c, v)| c * v).fold(Rat::zero(), |acc, t| acc + t)
}

/// Solves the square system given by the selected rows; None if singular.
fn solve_square(p: &HPolytope, picks: &[usize]) -> Option<Vec<Rat>> {
    let d = p.dim;
    let mut m: Vec<Vec<Rat>> = picks
        .iter()
        .map(|&r| {
            let mut row = p.rows[r].a.clone();
            row.push(p.rows[r].b.clone());
            row
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let lead = m[col][col].clone();
        for k in col..=d {
            m[col][k] = &m[col][k] / &lead;
        }
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for k in col..=d {
                    m[r][k] = &m[r][k] - &factor * &m[col][k];
                }
            }
        }
    }
    Some((0..d).map(|r| m[r][d].clone()).collect())
}

/// Row-reduces in place; returns the pivot columns. `width` counts the leading
/// columns that participate in elimination.
fn reduce(m: &mut Vec<Vec<Rat>>, width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let lead = m[rank][col].clone();
        for k in 0..m[rank].len() {
            m[rank][k] = &m[rank][k] / &lead;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for k in 0..m[r].len() {
                    m[r][k] = &m[r][k] - &factor * &m[rank][k];
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    pivots
}

fn matrix_rank(rows: &[Vec<Rat>], width: usize) -> usize {
    let mut m = rows.to_vec();
    reduce(&mut m, width).len()
}

/// A nonzero vector orthogonal to all given rows, if their rank is width-1.
fn nullspace_direction(rows: &[Vec<Rat>], width: usize) -> Option<Vec<Rat>> {
    let mut m = rows.to_vec();
    let pivots = reduce(&mut m, width);
    if pivots.len() + 1 != width {
        return None;
    }
    let free_col = (0..width).find(|c| !pivots.contains(c))?;
    let mut dir = vec![Rat::zero(); width];
    dir[free_col] = Rat::one();
    for (r, &pc) in pivots.iter().enumerate() {
        dir[pc] = -m[r][free_col].clone();
    }
    Some(dir)
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn contains_point(p: &HPolytope, x: &[Rat]) -> bool {
    p.rows.iter().all(|row| dot(&row.a, x) <= row.b)
}

fn negate(v: &[Rat]) -> Vec<Rat> {
    v.iter().map(|c| -c).collect()
}

/// A direction r with a·r <= 0 for every row, if one exists.
fn recession_ray(p: &HPolytope) -> Option<Vec<Rat>> {
    let all: Vec<Vec<Rat>> = p.rows.iter().map(|r| r.a.clone()).collect();
    if matrix_rank(&all, p.dim) < p.dim {
        return nullspace_of_all(&all, p.dim);
    }
    for picks in combinations(p.rows.len(), p.dim - 1) {
        let sub: Vec<Vec<Rat>> = picks.iter().map(|&r| p.rows[r].a.clone()).collect();
        let Some(ray) = nullspace_direction(&sub, p.dim) else {
            continue;
        };
        for dir in [&ray, &negate(&ray)] {
            if p.rows.iter().all(|row| !dot(&row.a, dir).is_positive()) {
                return Some(dir.clone());
            }
        }
    }
    None
}

/// Any nonzero vector in the common nullspace of the rows (rank < width assumed).
fn nullspace_of_all(rows: &[Vec<Rat>], width: usize) -> Option<Vec<Rat>> {
    let mut m = rows.to_vec();
    let pivots = reduce(&mut m, width);
    let free_col = (0..width).find(|c| !pivots.contains(c))?;
    let mut dir = vec![Rat::zero(); width];
    dir[free_col] = Rat::one();
    for (r, &pc) in pivots.iter().enumerate() {
        dir[pc] = -m[r][free_col].clone();
    }
    Some(dir)
}

/// All vertices, deduplicated and sorted, by solving every dim-subset of rows.
pub fn vertices(p: &HPolytope) -> Result<Vec<Vec<Rat>>> {
    if p.dim > MAX_DIM {
        return Err(Error::Capacity(format!(
            "vertex enumeration in dimension {} exceeds the limit {MAX_DIM}",
            p.dim
        )));
    }
    if p.rows.len() > MAX_ROWS {
        return Err(Error::Capacity(format!(
            "vertex enumeration over {} rows exceeds the limit {MAX_ROWS}",
            p.rows.len()
        )));
    }
    if recession_ray(p).is_some() {
        return Err(Error::Capacity("row system is unbounded".into()));
    }
    let mut out = BTreeSet::new();
    for picks in combinations(p.rows.len(), p.dim) {
        if let Some(x) = solve_square(p, &picks) {
            if contains_point(p, &x) {
                out.insert(x);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Whether the row system is bounded (has no recession direction).
pub fn is_bounded(p: &HPolytope) -> bool {
    recession_ray(p).is_none()
}

/// Caches the vertex list and per-vertex tight sets of one polytope.
#[derive(Debug, Clone)]
pub struct FaceContext {
    pub poly: HPolytope,
    pub verts: Vec<Vec<Rat>>,
    tight_sets: Vec<BTreeSet<usize>>,
}

impl FaceContext {
    pub fn new(poly: HPolytope) -> Result<FaceContext> {
        let verts = vertices(&poly)?;
        if verts.is_empty() {
            return Err(Error::Domain("polytope is empty".into()));
        }
        let tight_sets = verts
            .iter()
            .map(|v| {
                poly.rows
                    .iter()
                    .enumerate()
                    .filter(|(_, row)| dot(&row.a, v) == row.b)
                    .map(|(idx, _)| idx)
                    .collect()
            })
            .collect();
        Ok(FaceContext { poly, verts, tight_sets })
    }

    /// Vertex indices on the face where all the given rows are tight.
    pub fn face_vertices(&self, tight: &BTreeSet<usize>) -> Vec<usize> {
        (0..self.verts.len())
            .filter(|&vi| tight.is_subset(&self.tight_sets[vi]))
            .collect()
    }

    /// Closes a tight set: every row tight on all vertices the set selects.
    pub fn close(&self, tight: &BTreeSet<usize>) -> BTreeSet<usize> {
        let vis = self.face_vertices(tight);
        if vis.is_empty() {
            return (0..self.poly.rows.len()).collect();
        }
        let mut closed: BTreeSet<usize> = self.tight_sets[vis[0]].clone();
        for &vi in &vis[1..] {
            closed = closed.intersection(&self.tight_sets[vi]).copied().collect();
        }
        closed
    }

    fn dim_of_vertices(&self, vis: &[usize]) -> i64 {
        if vis.is_empty() {
            return -1;
        }
        let base = &self.verts[vis[0]];
        let dirs: Vec<Vec<Rat>> = vis[1..]
            .iter()
            .map(|&vi| self.verts[vi].iter().zip(base).map(|(x, y)| x - y).collect())
            .collect();
        matrix_rank(&dirs, self.poly.dim) as i64
    }

    /// The face generated by a tight set, with closure and dimension resolved.
    pub fn face(&self, tight: &BTreeSet<usize>) -> FaceHandle {
        let closed = self.close(tight);
        let vis = self.face_vertices(&closed);
        FaceHandle {
            tight: closed.iter().copied().collect(),
            dim: self.dim_of_vertices(&vis),
        }
    }

    /// The face whose tight set makes exactly the rows of one label tight.
    pub fn facet(&self, row: usize) -> FaceHandle {
        self.face(&BTreeSet::from([row]))
    }

    /// Sorted vertex coordinates of a face; the face-identity test used everywhere.
    pub fn vertex_set(&self, face: &FaceHandle) -> Vec<Vec<Rat>> {
        let tight: BTreeSet<usize> = face.tight.iter().copied().collect();
        self.face_vertices(&tight)
            .into_iter()
            .map(|vi| self.verts[vi].clone())
            .collect()
    }

    /// Sorted vertex indices of a face; a cheap face identity within one context.
    pub fn vertex_ids(&self, face: &FaceHandle) -> Vec<usize> {
        let tight: BTreeSet<usize> = face.tight.iter().copied().collect();
        self.face_vertices(&tight)
    }

    /// Every nonempty face: vertex tight-set closures saturated under
    /// intersection with single rows; sorted by (dim, tight rows).
    pub fn all_faces(&self) -> Vec<FaceHandle> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: Vec<BTreeSet<usize>> = vec![self.close(&BTreeSet::new())];
        for ts in &self.tight_sets {
            queue.push(ts.clone());
        }
        let mut faces = Vec::new();
        while let Some(tight) = queue.pop() {
            let key: Vec<usize> = tight.iter().copied().collect();
            if !seen.insert(key) {
                continue;
            }
            if self.face_vertices(&tight).is_empty() {
                continue;
            }
            faces.push(self.face(&tight));
            for row in 0..self.poly.rows.len() {
                if !tight.contains(&row) {
                    let mut bigger = tight.clone();
                    bigger.insert(row);
                    queue.push(self.close(&bigger));
                }
            }
        }
        faces.sort_by(|x, y| (x.dim, &x.tight).cmp(&(y.dim, &y.tight)));
        faces.dedup();
        faces
    }

    /// All faces containing the vertex v, v itself and the whole polytope included.
    pub fn faces_through(&self, v: &[Rat]) -> Result<Vec<FaceHandle>> {
        let vi = self
            .verts
            .iter()
            .position(|x| x.as_slice() == v)
            .ok_or_else(|| Error::Domain("point is not a vertex of the polytope".into()))?;
        let at_v = &self.tight_sets[vi];
        Ok(self
            .all_faces()
            .into_iter()
            .filter(|f| f.tight.iter().all(|r| at_v.contains(r)))
            .collect())
    }

    /// Intersection of two faces as a face (possibly empty, dim -1).
    pub fn intersect(&self, f: &FaceHandle, g: &FaceHandle) -> FaceHandle {
        let tight: BTreeSet<usize> = f.tight.iter().chain(g.tight.iter()).copied().collect();
        if self.face_vertices(&tight).is_empty() {
            return FaceHandle {
                tight: (0..self.poly.rows.len()).collect(),
                dim: -1,
            };
        }
        self.face(&tight)
    }

    /// Whether face f is contained in face g (compared by vertex sets).
    pub fn contains_face(&self, g: &FaceHandle, f: &FaceHandle) -> bool {
        let gv = self.vertex_ids(g);
        self.vertex_ids(f).iter().all(|v| gv.binary_search(v).is_ok())
    }

    /// Faces of the sub-lattice lying inside the given face.
    pub fn faces_within(&self, env: &FaceHandle) -> Vec<FaceHandle> {
        self.all_faces()
            .into_iter()
            .filter(|f| self.contains_face(env, f))
            .collect()
    }
}

/// Cayley sum conv(P x {0} ∪ Q x {1}) of two polytopes in the same ambient space.
pub fn cayley_sum(p: &HPolytope, q: &HPolytope) -> Result<HPolytope> {
    if p.dim != q.dim {
        return Err(Error::Domain(format!("ambient dimensions differ: {} vs {}", p.dim, q.dim)));
    }
    let d = p.dim + 1;
    let mut points: Vec<Vec<Rat>> = Vec::new();
    for (body, level) in [(p, Rat::zero()), (q, Rat::one())] {
        for v in vertices(body)? {
            let mut x = v;
            x.push(level.clone());
            points.push(x);
        }
    }
    if points.len() > MAX_HULL_POINTS {
        return Err(Error::Capacity(format!(
            "{} hull points exceed the limit {MAX_HULL_POINTS}",
            points.len()
        )));
    }
    let dirs: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|x| x.iter().zip(&points[0]).map(|(a, b)| a - b).collect())
        .collect();
    if matrix_rank(&dirs, d) != d {
        return Err(Error::Domain("Cayley sum is not full-dimensional".into()));
    }
    let mut facets: BTreeSet<(Vec<Rat>, Rat)> = BTreeSet::new();
    for picks in combinations(points.len(), d) {
        let span: Vec<Vec<Rat>> = picks[1..]
            .iter()
            .map(|&k| {
                points[k]
                    .iter()
                    .zip(&points[picks[0]])
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        let Some(normal) = nullspace_direction(&span, d) else {
            continue;
        };
        let offset = dot(&normal, &points[picks[0]]);
        let mut above = false;
        let mut below = false;
        for x in &points {
            match dot(&normal, x).cmp(&offset) {
                std::cmp::Ordering::Greater => above = true,
                std::cmp::Ordering::Less => below = true,
                std::cmp::Ordering::Equal => {}
            }
        }
        if above && below {
            continue;
        }
        let oriented = if above {
            Row::new(negate(&normal), -offset)
        } else {
            Row::new(normal, offset)
        };
        facets.insert(oriented.canonical());
    }
    let t = d - 1;
    let mut down = vec![Rat::zero(); d];
    down[t] = -Rat::one();
    let mut up = vec![Rat::zero(); d];
    up[t] = Rat::one();
    let p_row = Row::new(down, Rat::zero()).canonical();
    let q_row = Row::new(up, Rat::one()).canonical();
    let mut rows = vec![
        Row::labeled(p_row.0.clone(), p_row.1.clone(), "P"),
        Row::labeled(q_row.0.clone(), q_row.1.clone(), "Q"),
    ];
    for (a, b) in facets {
        if (a.clone(), b.clone()) != p_row && (a.clone(), b.clone()) != q_row {
            rows.push(Row::new(a, b));
        }
    }
    HPolytope::new(d, rows)
}

/// The unique face among `candidates` other than F whose intersection with the
/// face P equals F; None when F is not admissible. Its dimension is dim F + 1.
pub fn expand_over(
    ctx: &FaceContext,
    candidates: &[FaceHandle],
    p_face: &FaceHandle,
    f: &FaceHandle,
) -> Result<Option<FaceHandle>> {
    if !ctx.contains_face(p_face, f) {
        return Err(Error::Domain("face does not lie in the distinguished face".into()));
    }
    let f_ids = ctx.vertex_ids(f);
    let mut hits = Vec::new();
    for g in candidates {
        if ctx.vertex_ids(g) == f_ids {
            continue;
        }
        let meet = ctx.intersect(g, p_face);
        if ctx.vertex_ids(&meet) == f_ids {
            hits.push(g.clone());
        }
    }
    if hits.len() != 1 {
        return Ok(None);
    }
    let expansion = hits.pop().expect("one candidate");
    assert_eq!(
        expansion.dim,
        f.dim + 1,
        "a unique expansion always gains exactly one dimension"
    );
    Ok(Some(expansion))
}

/// Expansion within the full face lattice, relative to the facet P.
pub fn expand(ctx: &FaceContext, p_facet: &FaceHandle, f: &FaceHandle) -> Result<Option<FaceHandle>> {
    expand_over(ctx, &ctx.all_faces(), p_facet, f)
}

/// Simple geometric mitosis inside an explicit face family (the faces of the
/// ambient body under consideration): offsprings are the v-faces E in the family
/// with dim E = dim F + 1, E ⊄ P, E ⊄ Q, and E ∩ Q ⊆ exp(F) ∩ Q.
/// Returns None when F is not admissible relative to P.
pub fn geometric_mitosis_over(
    ctx: &FaceContext,
    family: &[FaceHandle],
    v: &[Rat],
    p_face: &FaceHandle,
    q_face: &FaceHandle,
    f: &FaceHandle,
) -> Result<Option<Vec<FaceHandle>>> {
    let Some(vi) = ctx.verts.iter().position(|x| x.as_slice() == v) else {
        return Err(Error::Domain("distinguished point is not a vertex".into()));
    };
    if ctx.vertex_ids(f).binary_search(&vi).is_err() {
        return Err(Error::Domain("face does not contain the distinguished vertex".into()));
    }
    let Some(expansion) = expand_over(ctx, family, p_face, f)? else {
        return Ok(None);
    };
    let bound = ctx.intersect(&expansion, q_face);
    let mut out = Vec::new();
    for e in family {
        if e.dim != f.dim + 1 || ctx.vertex_ids(e).binary_search(&vi).is_err() {
            continue;
        }
        if ctx.contains_face(p_face, e) || ctx.contains_face(q_face, e) {
            continue;
        }
        let meet = ctx.intersect(e, q_face);
        if ctx.contains_face(&bound, &meet) {
            out.push(e.clone());
        }
    }
    assert!(
        out.iter().any(|e| ctx.vertex_ids(e) == ctx.vertex_ids(&expansion)),
        "the expansion itself always satisfies the offspring conditions"
    );
    out.sort_by(|a, b| (a.dim, &a.tight).cmp(&(b.dim, &b.tight)));
    out.dedup();
    Ok(Some(out))
}

/// Simple geometric mitosis on the whole polytope at the vertex v.
pub fn geometric_mitosis(
    ctx: &FaceContext,
    v: &[Rat],
    p_facet: &FaceHandle,
    q_facet: &FaceHandle,
    f: &FaceHandle,
) -> Result<Option<Vec<FaceHandle>>> {
    geometric_mitosis_over(ctx, &ctx.all_faces(), v, p_facet, q_facet, f)
}

/// Serializes a rational as "p/q", or "p" for integers.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_from_string(s: &str) -> Result<Rat> {
    let parse_int = |t: &str| {
        t.parse::<crate::Int>()
            .map_err(|_| Error::Format(format!("bad integer {t:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::Format("zero denominator".into()));
            }
            Ok(Rat::new(parse_int(num)?, den))
        }
    }
}

/// Wire form of an H-polytope with rationals as strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HPolytopeJson {
    pub dim: usize,
    pub rows: Vec<RowJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RowJson {
    pub a: Vec<String>,
    pub b: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl From<&HPolytope> for HPolytopeJson {
    fn from(p: &HPolytope) -> Self {
        HPolytopeJson {
            dim: p.dim,
            rows: p
                .rows
                .iter()
                .map(|row| RowJson {
                    a: row.a.iter().map(rat_to_string).collect(),
                    b: rat_to_string(&row.b),
                    label: row.label.clone(),
                })
                .collect(),
        }
    }
}

impl HPolytopeJson {
    pub fn into_poly(self) -> Result<HPolytope> {
        let rows = self
            .rows
            .into_iter()
            .map(|row| {
                let a = row.a.iter().map(|s| rat_from_string(s)).collect::<Result<Vec<_>>>()?;
                Ok(Row { a, b: rat_from_string(&row.b)?, label: row.label })
            })
            .collect::<Result<Vec<_>>>()?;
        HPolytope::new(self.dim, rows)
    }
}

/// Builds a polytope from integer row data (a, b), unlabeled.
pub fn poly_from_int_rows(dim: usize, rows: &[(&[i64], i64)]) -> Result<HPolytope> {
    let rows = rows
        .iter()
        .map(|(a, b)| Row::new(a.iter().map(|&c| crate::rat(c)).collect(), crate::rat(*b)))
        .collect();
    HPolytope::new(dim, rows)
}
