//! Polygon documents and figure output.
//!
//! JSON is the interchange format read back by `verify`; CSV, SVG and TikZ
//! are write-only renderings of the same construction.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::constructions::ConstructionResult;
use crate::error::{Error, Result};
use crate::geometry::{self, Point, Polygon, PolygonChecks, VERIFY_TOL};

pub const SCHEMA_VERSION: u32 = 1;

/// Decimals written for every numeric field of a document.
pub const DECIMALS: usize = 12;

/// Rounds to [`DECIMALS`] places, ties to even on the exact binary value.
pub fn round_emitted(x: f64) -> f64 {
    format!("{x:.DECIMALS$}").parse().expect("formatted float parses")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonDocument {
    pub schema_version: u32,
    pub family: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    /// `[x, y]` pairs indexed `v_0 … v_{n−1}`.
    pub vertices: Vec<[f64; 2]>,
    pub area: f64,
    pub diameter: f64,
    pub checks: BTreeMap<String, bool>,
}

impl PolygonDocument {
    pub fn from_construction(result: &ConstructionResult) -> Result<Self> {
        let polygon = result.polygon.as_ref().ok_or(Error::InvalidVertexCount {
            n: result.n,
            reason: "construction carries no polygon",
        })?;
        let checks = PolygonChecks::run(polygon, VERIFY_TOL)
            .as_pairs()
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        let alpha = result.alpha_star.or(result.params.map(|p| p.alpha));
        Ok(PolygonDocument {
            schema_version: SCHEMA_VERSION,
            family: result.family.name().to_string(),
            n: result.n,
            alpha: alpha.map(round_emitted),
            beta: result.params.map(|p| round_emitted(p.beta)),
            gamma: result.params.map(|p| round_emitted(p.gamma)),
            vertices: polygon
                .vertices()
                .iter()
                .map(|p| [round_emitted(p.x), round_emitted(p.y)])
                .collect(),
            area: round_emitted(result.area),
            diameter: round_emitted(geometry::diameter(polygon).0),
            checks,
        })
    }

    pub fn polygon(&self) -> Polygon {
        Polygon::new(self.vertices.iter().map(|&[x, y]| Point::new(x, y)).collect())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Parses and validates the vertex count.
    pub fn from_json(text: &str) -> std::result::Result<Self, String> {
        let doc: PolygonDocument = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(format!("unsupported schema_version {}", doc.schema_version));
        }
        if doc.vertices.len() != doc.n {
            return Err(format!("{} vertices listed for n = {}", doc.vertices.len(), doc.n));
        }
        if doc.n < 3 {
            return Err(format!("n = {} is too small for a polygon", doc.n));
        }
        Ok(doc)
    }

    /// One row per vertex; polygon-level fields repeat on every row.
    pub fn to_csv(&self) -> String {
        let opt = |v: Option<f64>| v.map(|x| format!("{x:.DECIMALS$}")).unwrap_or_default();
        let mut out = String::from("family,n,index,x,y,area,diameter,alpha,beta,gamma\n");
        for (i, [x, y]) in self.vertices.iter().enumerate() {
            writeln!(
                out,
                "{},{},{i},{x:.DECIMALS$},{y:.DECIMALS$},{:.DECIMALS$},{:.DECIMALS$},{},{},{}",
                self.family,
                self.n,
                self.area,
                self.diameter,
                opt(self.alpha),
                opt(self.beta),
                opt(self.gamma),
            )
            .unwrap();
        }
        out
    }
}

/// Boundary cycle and unit-distance edges shared by the figure formats.
struct Figure {
    boundary: Vec<Point>,
    diameters: Vec<(Point, Point)>,
}

impl Figure {
    fn new(poly: &Polygon) -> Result<Self> {
        let order = geometry::boundary_order(poly)?;
        let graph = geometry::diameter_graph(poly, VERIFY_TOL)?;
        Ok(Figure {
            boundary: order.iter().map(|&i| poly.vertex(i)).collect(),
            diameters: graph
                .edges
                .iter()
                .map(|&(i, j)| (poly.vertex(i), poly.vertex(j)))
                .collect(),
        })
    }
}

fn tikz_number(v: f64) -> String {
    let s = format!("{v:.4}");
    match s.as_str() {
        "0.0000" | "-0.0000" => "0".into(),
        "1.0000" => "1".into(),
        _ => s,
    }
}

fn tikz_point(p: Point) -> String {
    format!("({},{})", tikz_number(p.x), tikz_number(p.y))
}

/// TikZ fragment: dashed boundary cycle, one solid segment per unit-distance
/// pair, four decimals, `scale=4`.
pub fn to_tikz(poly: &Polygon) -> Result<String> {
    let fig = Figure::new(poly)?;
    let mut out = String::from("\\begin{tikzpicture}[scale=4]\n");
    let path: Vec<String> = fig.boundary.iter().map(|&p| tikz_point(p)).collect();
    writeln!(out, "\t\\draw[dashed] {} -- cycle;", path.join(" -- ")).unwrap();
    for (a, b) in &fig.diameters {
        writeln!(out, "\t\\draw {} -- {};", tikz_point(*a), tikz_point(*b)).unwrap();
    }
    out.push_str("\\end{tikzpicture}\n");
    Ok(out)
}

/// Standalone SVG 1.1 drawing with the same conventions as [`to_tikz`].
pub fn to_svg(poly: &Polygon) -> Result<String> {
    let fig = Figure::new(poly)?;
    // figure y grows upward; flip into SVG coordinates
    let xy = |p: Point| (p.x, 1.0 - p.y);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"480\" height=\"480\" \
         viewBox=\"-0.6 -0.1 1.2 1.2\">\n",
    );
    out.push_str("  <g fill=\"none\" stroke=\"black\" stroke-width=\"0.004\">\n");
    let n = fig.boundary.len();
    for i in 0..n {
        let (x1, y1) = xy(fig.boundary[i]);
        let (x2, y2) = xy(fig.boundary[(i + 1) % n]);
        writeln!(
            out,
            "    <line class=\"boundary\" stroke-dasharray=\"0.02 0.012\" x1=\"{x1:.6}\" y1=\"{y1:.6}\" x2=\"{x2:.6}\" y2=\"{y2:.6}\"/>"
        )
        .unwrap();
    }
    for (a, b) in &fig.diameters {
        let (x1, y1) = xy(*a);
        let (x2, y2) = xy(*b);
        writeln!(
            out,
            "    <line class=\"diameter\" x1=\"{x1:.6}\" y1=\"{y1:.6}\" x2=\"{x2:.6}\" y2=\"{y2:.6}\"/>"
        )
        .unwrap();
    }
    out.push_str("  </g>\n</svg>\n");
    Ok(out)
}
