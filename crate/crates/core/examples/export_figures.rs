//! Writes TikZ and SVG drawings of `B_n` and `M_n` into a directory.
//!
//! `cargo run --example export_figures -- figures/`

use std::path::PathBuf;

use smallgon::constructions::{construct, Family};
use smallgon::export::{to_svg, to_tikz};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("smallgon-figures"));
    std::fs::create_dir_all(&dir)?;
    for family in [Family::Bn, Family::Mossinghoff, Family::Regular] {
        for n in [6, 8, 10] {
            let result = construct(family, n)?;
            let poly = result.polygon.as_ref().unwrap();
            let stem = format!("{}-{n}", family.name());
            std::fs::write(dir.join(format!("{stem}.tex")), to_tikz(poly)?)?;
            std::fs::write(dir.join(format!("{stem}.svg")), to_svg(poly)?)?;
            println!("{stem}: area {:.10}", result.area);
        }
    }
    println!("figures written to {}", dir.display());
    print!("{}", to_tikz(construct(Family::Bn, 8)?.polygon.as_ref().unwrap())?);
    Ok(())
}
