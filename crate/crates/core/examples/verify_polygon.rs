//! Runs the geometric checks on a constructed polygon, on a JSON document
//! read back from disk, and on a copy with one vertex moved.

use smallgon::constructions::{construct, Family};
use smallgon::export::PolygonDocument;
use smallgon::geometry::{self, PolygonChecks, VERIFY_TOL};

fn report(label: &str, poly: &smallgon::Polygon) {
    let checks = PolygonChecks::run(poly, VERIFY_TOL);
    let (d, (i, j)) = geometry::diameter(poly);
    println!("{label}: diameter {d:.12} (v{i}, v{j})");
    for (name, ok) in checks.as_pairs() {
        println!("  {name:<24} {}", if ok { "pass" } else { "fail" });
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b12 = construct(Family::Bn, 12)?;
    let doc = PolygonDocument::from_construction(&b12)?;

    let path = std::env::temp_dir().join("smallgon-b12.json");
    std::fs::write(&path, doc.to_json())?;
    let back = PolygonDocument::from_json(&std::fs::read_to_string(&path)?)?;
    report("B_12 from disk", &back.polygon());

    let mut moved = back.clone();
    moved.vertices[4][1] -= 0.1;
    report("B_12 with v4 moved", &moved.polygon());

    let r6 = construct(Family::Regular, 6)?;
    report("R_6", r6.polygon.as_ref().unwrap());
    let graph = geometry::diameter_graph(r6.polygon.as_ref().unwrap(), VERIFY_TOL)?;
    println!("  unit-distance pairs {:?}", graph.edges);
    Ok(())
}
