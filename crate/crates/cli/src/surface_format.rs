//! The triangulation format:
//!
//! ```text
//! arcs: x, y, z
//! boundary: b1, b2, b3, b4, b5, b6
//! triangles: (b1, b2, x); (b3, b4, y); (b5, b6, z); (x, y, z)
//! ```
//!
//! Sides of each triangle are listed in its cyclic orientation.

use gentle_core::surface::{Side, Triangulation, TriangulationError};

use crate::syntax::{Kind, Sections, SyntaxError};

const KEYWORDS: &[&str] = &["arcs", "boundary", "triangles"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceFormatError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Invalid(#[from] TriangulationError),
}

pub fn parse_triangulation(text: &str) -> Result<Triangulation, SurfaceFormatError> {
    let mut s = Sections::new(text, KEYWORDS)?;
    let mut arcs = Vec::new();
    let mut boundary = Vec::new();
    let mut triangles: Vec<[String; 3]> = Vec::new();
    s.section("arcs")?;
    s.items(|s| {
        arcs.push(s.ident("an arc")?.0);
        Ok(())
    })?;
    s.section("boundary")?;
    s.items(|s| {
        boundary.push(s.ident("a boundary segment")?.0);
        Ok(())
    })?;
    s.section("triangles")?;
    s.items(|s| {
        s.expect(Kind::Open)?;
        let a = s.ident("a side")?.0;
        s.expect(Kind::Comma)?;
        let b = s.ident("a side")?.0;
        s.expect(Kind::Comma)?;
        let c = s.ident("a side")?.0;
        s.expect(Kind::Close)?;
        triangles.push([a, b, c]);
        Ok(())
    })?;
    s.finish()?;
    Ok(Triangulation::new(&arcs, &boundary, &triangles)?)
}

pub fn serialize_triangulation(t: &Triangulation) -> String {
    let tri = t
        .triangles()
        .iter()
        .map(|sides: &[Side; 3]| {
            let n: Vec<&str> = sides.iter().map(|&s| t.side_name(s)).collect();
            format!("({}, {}, {})", n[0], n[1], n[2])
        })
        .collect::<Vec<_>>()
        .join("; ");
    format!(
        "arcs: {}\nboundary: {}\ntriangles: {}\n",
        t.internal_arcs().join(", "),
        t.boundary_segments().join(", "),
        tri
    )
}
