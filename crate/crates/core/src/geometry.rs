//! Symmetric small polygons built from turning angles, plus the geometric
//! checks every construction must pass.
//!
//! Vertices use the labeling of the optimal diameter graph: `v_0` sits at the
//! origin, the pendant vertex `v_{n-1}` at `(0, 1)`, and the cycle
//! `v_0 - v_1 - ... - v_{n-2} - v_0` consists of unit-length steps. The
//! polygon is mirror-symmetric about the pendant edge, so `v_{n-k-1}` is the
//! reflection of `v_k` across `x = 0`.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for identities that hold exactly up to rounding.
pub const GEOM_TOL: f64 = 1e-12;

/// Default tolerance for user-facing verification.
pub const VERIFY_TOL: f64 = 1e-9;

/// Interior point used to order boundary vertices by polar angle.
const ORDER_CENTER: Point = Point { x: 0.0, y: 0.5 };

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Cross product of `b - a` and `c - b`.
fn turn(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)
}

/// Half-polygon turning angles `α_0 … α_{n/2-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleSequence {
    n: usize,
    angles: Vec<f64>,
}

impl AngleSequence {
    pub fn new(n: usize, angles: Vec<f64>) -> Result<Self> {
        if n < 6 || n % 2 != 0 {
            return Err(Error::MalformedSequence(format!(
                "vertex count must be even and at least 6, got {n}"
            )));
        }
        if angles.len() != n / 2 {
            return Err(Error::MalformedSequence(format!(
                "expected {} angles for n = {n}, got {}",
                n / 2,
                angles.len()
            )));
        }
        if let Some((k, a)) = angles
            .iter()
            .enumerate()
            .find(|(_, &a)| !(a > 0.0 && a < FRAC_PI_2))
        {
            return Err(Error::MalformedSequence(format!(
                "angle {k} = {a} is outside (0, pi/2)"
            )));
        }
        let sum: f64 = angles.iter().sum();
        if (sum - FRAC_PI_2).abs() > GEOM_TOL {
            return Err(Error::MalformedSequence(format!(
                "angles sum to {sum}, expected pi/2"
            )));
        }
        Ok(AngleSequence { n, angles })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }
}

/// Half-polygon coordinates `v_0 … v_{n/2-1}` from alternating partial sums.
///
/// Only the first `n/2 - 1` angles are used; the last angle is implied by the
/// angle sum.
pub(crate) fn half_vertices(angles: &[f64]) -> Vec<Point> {
    let m = angles.len();
    let mut pts = Vec::with_capacity(m);
    pts.push(Point::new(0.0, 0.0));
    let (mut x, mut y, mut partial) = (0.0, 0.0, 0.0);
    for (i, a) in angles.iter().take(m - 1).enumerate() {
        partial += a;
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        x += sign * partial.sin();
        y += sign * partial.cos();
        pts.push(Point::new(x, y));
    }
    pts
}

/// Signed closure defect `x_{n/2-1} - (-1)^{n/2}/2` of a half polygon.
pub(crate) fn closure_residual(angles: &[f64]) -> f64 {
    let m = angles.len();
    let half = half_vertices(angles);
    let target = if m % 2 == 0 { 0.5 } else { -0.5 };
    half[m - 1].x - target
}

/// Polygon area as twice the sum of the fan triangles `v_0 v_{k+1} v_{k-1}`
/// (plus the first triangle `v_0 v_1 v_{n-1}`), using only the half polygon.
pub fn fan_area(seq: &AngleSequence) -> f64 {
    let m = seq.n / 2;
    let mut pts = half_vertices(&seq.angles);
    // v_{m} is the mirror of v_{m-1}
    let last = pts[m - 1];
    pts.push(Point::new(-last.x, last.y));
    let mut area = pts[1].x;
    for k in 2..m {
        area += pts[k + 1].x * pts[k - 1].y - pts[k + 1].y * pts[k - 1].x;
    }
    area
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    pub fn new(vertices: Vec<Point>) -> Self {
        Polygon { vertices }
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, k: usize) -> Point {
        self.vertices[k]
    }

    /// Applies `f` to every vertex, keeping labels.
    pub fn map(&self, f: impl Fn(Point) -> Point) -> Polygon {
        Polygon::new(self.vertices.iter().copied().map(f).collect())
    }
}

/// Builds all `n` vertices from a symmetric angle sequence.
pub fn vertices_from_angles(seq: &AngleSequence) -> Polygon {
    let n = seq.n;
    let half = half_vertices(&seq.angles);
    let mut vertices = vec![Point::new(0.0, 0.0); n];
    vertices[..half.len()].copy_from_slice(&half);
    for k in 1..n / 2 {
        vertices[n - k - 1] = Point::new(-half[k].x, half[k].y);
    }
    vertices[n - 1] = Point::new(0.0, 1.0);
    Polygon::new(vertices)
}

/// Counterclockwise polar order about `(0, 1/2)`, measured from the downward
/// direction so that a vertex at the origin comes first.
fn polar_order(poly: &Polygon) -> Result<Vec<usize>> {
    let mut keyed = Vec::with_capacity(poly.n());
    for (i, p) in poly.vertices.iter().enumerate() {
        let (dx, dy) = (p.x - ORDER_CENTER.x, p.y - ORDER_CENTER.y);
        if dx.hypot(dy) <= GEOM_TOL {
            return Err(Error::NotConvexPosition { vertex: i });
        }
        let mut theta = dx.atan2(-dy);
        // v_0 at the bottom has theta = 0 exactly; keep a -0.0 there too
        if theta < 0.0 {
            theta += 2.0 * PI;
        }
        if theta >= 2.0 * PI - GEOM_TOL {
            theta = 0.0;
        }
        keyed.push((theta, i));
    }
    keyed.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(keyed.into_iter().map(|(_, i)| i).collect())
}

/// Index of the first vertex where the ordered cycle turns clockwise.
fn first_reflex(poly: &Polygon, order: &[usize]) -> Option<usize> {
    let n = order.len();
    (0..n).find_map(|i| {
        let a = poly.vertices[order[i]];
        let b = poly.vertices[order[(i + 1) % n]];
        let c = poly.vertices[order[(i + 2) % n]];
        (turn(a, b, c) < -GEOM_TOL).then_some(order[(i + 1) % n])
    })
}

/// Boundary cycle of a polygon in convex position.
pub fn boundary_order(poly: &Polygon) -> Result<Vec<usize>> {
    let order = polar_order(poly)?;
    match first_reflex(poly, &order) {
        Some(vertex) => Err(Error::NotConvexPosition { vertex }),
        None => Ok(order),
    }
}

fn signed_area(poly: &Polygon, order: &[usize]) -> f64 {
    let n = order.len();
    let twice: f64 = (0..n)
        .map(|i| {
            let p = poly.vertices[order[i]];
            let q = poly.vertices[order[(i + 1) % n]];
            p.x * q.y - p.y * q.x
        })
        .sum();
    0.5 * twice
}

/// Shoelace area over the boundary cycle.
pub fn shoelace_area(poly: &Polygon) -> Result<f64> {
    let order = boundary_order(poly)?;
    Ok(signed_area(poly, &order).abs())
}

/// Largest pairwise vertex distance and the first pair attaining it.
pub fn diameter(poly: &Polygon) -> (f64, (usize, usize)) {
    let v = &poly.vertices;
    let mut best = (0.0, (0, 0));
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let d = v[i].dist(v[j]);
            if d > best.0 {
                best = (d, (i, j));
            }
        }
    }
    best
}

/// Unit-distance graph of a small polygon.
#[derive(Debug, Clone, PartialEq)]
pub struct DiameterGraph {
    pub edges: Vec<(usize, usize)>,
    /// An `(n-1)`-cycle through every other vertex plus one pendant edge.
    pub optimal_structure: bool,
}

impl DiameterGraph {
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let optimal_structure = has_cycle_plus_pendant(n, &edges);
        DiameterGraph {
            edges,
            optimal_structure,
        }
    }
}

fn has_cycle_plus_pendant(n: usize, edges: &[(usize, usize)]) -> bool {
    if n < 4 || edges.len() != n {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let Some(pendant) = (0..n).find(|&v| adj[v].len() == 1) else {
        return false;
    };
    let anchor = adj[pendant][0];
    let degree = |v: usize| adj[v].len() - usize::from(v == anchor);
    if (0..n).filter(|&v| v != pendant).any(|v| degree(v) != 2) {
        return false;
    }
    // every remaining vertex has degree 2; the cycle is one piece iff a walk
    // from the anchor returns after visiting all n-1 of them
    let (mut prev, mut cur, mut len) = (anchor, anchor, 0usize);
    loop {
        let next = adj[cur]
            .iter()
            .copied()
            .find(|&w| w != pendant && (w != prev || len == 0))
            .expect("degree-2 vertex");
        prev = cur;
        cur = next;
        len += 1;
        if cur == anchor || len > n {
            break;
        }
    }
    cur == anchor && len == n - 1
}

/// All vertex pairs at unit distance within `tol`.
pub fn diameter_graph(poly: &Polygon, tol: f64) -> Result<DiameterGraph> {
    let (d, _) = diameter(poly);
    if d > 1.0 + tol {
        return Err(Error::NotSmall { diameter: d, tol });
    }
    let v = &poly.vertices;
    let mut edges = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if (v[i].dist(v[j]) - 1.0).abs() <= tol {
                edges.push((i, j));
            }
        }
    }
    Ok(DiameterGraph::from_edges(v.len(), edges))
}

/// True iff the polar-ordered boundary never turns clockwise; nearly
/// straight vertices (`|cross| < 1e-12`) count as convex.
pub fn is_convex(poly: &Polygon) -> bool {
    polar_order(poly)
        .map(|order| first_reflex(poly, &order).is_none() && signed_area(poly, &order) > 0.0)
        .unwrap_or(false)
}

/// Mirror symmetry about the pendant edge with `v_0` at the origin and
/// `v_{n-1}` at `(0, 1)`.
pub fn is_symmetric(poly: &Polygon, tol: f64) -> bool {
    let n = poly.n();
    if n < 4 {
        return false;
    }
    let v = &poly.vertices;
    let anchored = v[0].dist(Point::new(0.0, 0.0)) <= tol && v[n - 1].dist(Point::new(0.0, 1.0)) <= tol;
    anchored
        && (1..n - 1).all(|k| {
            let m = v[n - k - 1];
            (v[k].x + m.x).abs() <= tol && (v[k].y - m.y).abs() <= tol
        })
}

/// Named pass/fail results of the standard geometric checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolygonChecks {
    pub small: bool,
    pub convex: bool,
    pub symmetric: bool,
    pub diameter_graph_optimal: bool,
}

impl PolygonChecks {
    pub fn run(poly: &Polygon, tol: f64) -> Self {
        let (d, _) = diameter(poly);
        let small = (d - 1.0).abs() <= tol;
        let diameter_graph_optimal = diameter_graph(poly, tol)
            .map(|g| g.optimal_structure)
            .unwrap_or(false);
        PolygonChecks {
            small,
            convex: is_convex(poly),
            symmetric: is_symmetric(poly, tol),
            diameter_graph_optimal,
        }
    }

    pub fn as_pairs(&self) -> [(&'static str, bool); 4] {
        [
            ("small", self.small),
            ("convex", self.convex),
            ("symmetric", self.symmetric),
            ("diameter_graph_optimal", self.diameter_graph_optimal),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Polygon {
        // diameter-graph labeling: v_3 is the apex
        Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(0.5, 0.5),
            Point::new(-0.5, 0.5),
            Point::new(0.0, 1.0),
        ])
    }

    fn r5_plus() -> AngleSequence {
        AngleSequence::new(6, vec![PI / 10.0, PI / 5.0, PI / 5.0]).unwrap()
    }

    #[test]
    fn rejects_bad_sequences() {
        assert!(matches!(
            AngleSequence::new(6, vec![0.5, 0.5]),
            Err(Error::MalformedSequence(_))
        ));
        assert!(AngleSequence::new(6, vec![0.5, 0.5, 0.5]).is_err());
        assert!(AngleSequence::new(7, vec![0.5; 3]).is_err());
        assert!(AngleSequence::new(6, vec![-0.1, 0.9, FRAC_PI_2 - 0.8]).is_err());
    }

    #[test]
    fn r5_plus_first_vertex() {
        let poly = vertices_from_angles(&r5_plus());
        let v1 = poly.vertex(1);
        assert!((v1.x - (PI / 10.0).sin()).abs() < 1e-15);
        assert!((v1.y - (PI / 10.0).cos()).abs() < 1e-15);
        assert!((v1.x - 0.3090).abs() < 5e-5 && (v1.y - 0.9511).abs() < 5e-5);
    }

    #[test]
    fn mirror_is_exact() {
        let poly = vertices_from_angles(&r5_plus());
        for k in 1..5 {
            assert_eq!(poly.vertex(k).x + poly.vertex(5 - k).x, 0.0);
        }
    }

    #[test]
    fn square_order_area_diameter() {
        let sq = square();
        assert_eq!(boundary_order(&sq).unwrap(), vec![0, 1, 3, 2]);
        assert!((shoelace_area(&sq).unwrap() - 0.5).abs() < 1e-15);
        let g = diameter_graph(&sq, GEOM_TOL).unwrap();
        assert_eq!(g.edges, vec![(0, 3), (1, 2)]);
        assert!(!g.optimal_structure);
        assert!(is_convex(&sq));
    }

    #[test]
    fn square_listed_in_boundary_order() {
        let sq = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(0.5, 0.5),
            Point::new(0.0, 1.0),
            Point::new(-0.5, 0.5),
        ]);
        let (d, pair) = diameter(&sq);
        assert_eq!(d, 1.0);
        assert_eq!(pair, (0, 2));
    }

    #[test]
    fn collinear_diameter() {
        let p = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(0.0, 0.5),
            Point::new(0.0, 1.0),
        ]);
        assert_eq!(diameter(&p).0, 1.0);
    }

    #[test]
    fn reflex_vertex_detected() {
        let p = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(0.4, 0.3),
            Point::new(0.1, 0.5),
            Point::new(0.4, 0.7),
            Point::new(0.0, 1.0),
            Point::new(-0.4, 0.5),
        ]);
        assert!(!is_convex(&p));
        assert!(matches!(
            boundary_order(&p),
            Err(Error::NotConvexPosition { vertex: 2 })
        ));
    }

    #[test]
    fn vertex_at_order_center_rejected() {
        let mut v = square().vertices().to_vec();
        v.push(Point::new(0.0, 0.5));
        assert!(boundary_order(&Polygon::new(v)).is_err());
    }

    #[test]
    fn r5_plus_structure() {
        let poly = vertices_from_angles(&r5_plus());
        let g = diameter_graph(&poly, GEOM_TOL).unwrap();
        assert_eq!(g.edges.len(), 6);
        assert!(g.optimal_structure);
        let checks = PolygonChecks::run(&poly, VERIFY_TOL);
        assert!(checks.small && checks.convex && checks.symmetric);
        assert!((shoelace_area(&poly).unwrap() - fan_area(&r5_plus())).abs() < 1e-15);
    }

    #[test]
    fn not_small_is_an_error() {
        let p = square().map(|p| Point::new(1.1 * p.x, 1.1 * p.y));
        assert!(matches!(
            diameter_graph(&p, VERIFY_TOL),
            Err(Error::NotSmall { .. })
        ));
        assert!(!PolygonChecks::run(&p, VERIFY_TOL).small);
    }

    #[test]
    fn cycle_detection_rejects_two_triangles() {
        // pendant 6-0, plus two disjoint triangles: all degrees 2 but not one cycle
        let edges = vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 6)];
        assert!(!has_cycle_plus_pendant(7, &edges));
        let ring = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 6)];
        assert!(has_cycle_plus_pendant(7, &ring));
    }
}
