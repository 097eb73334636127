//! The quiver presentation format:
//!
//! ```text
//! vertices: 1, 2, 3
//! arrows: a: 1 -> 2; b: 2 -> 3
//! relations: b*a
//! ```
//!
//! `b*a` is the path "first `a`, then `b`". Comments run from `#` to the end
//! of the line.

use gentle_core::quiver::{PresentationError, QuiverBuilder, QuiverPresentation};

use crate::syntax::{Kind, Location, Sections, SyntaxError};

const KEYWORDS: &[&str] = &["vertices", "arrows", "relations"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DslError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("{location}: {source}")]
    Presentation { location: Location, source: PresentationError },
}

impl DslError {
    pub fn location(&self) -> Location {
        match self {
            DslError::Syntax(e) => e.location,
            DslError::Presentation { location, .. } => *location,
        }
    }
}

pub fn parse_presentation(text: &str) -> Result<QuiverPresentation, DslError> {
    let mut s = Sections::new(text, KEYWORDS)?;
    let mut b = QuiverBuilder::new();
    let mut failure: Option<DslError> = None;
    let record = |at: Location, r: Result<(), PresentationError>, failure: &mut Option<DslError>| {
        if let Err(source) = r {
            failure.get_or_insert(DslError::Presentation { location: at, source });
        }
    };

    s.section("vertices")?;
    s.items(|s| {
        let (v, at) = s.ident("a vertex")?;
        record(at, b.vertex(&v).map(|_| ()), &mut failure);
        Ok(())
    })?;
    s.section("arrows")?;
    s.items(|s| {
        let (name, at) = s.ident("an arrow name")?;
        s.expect(Kind::Colon)?;
        let (src, _) = s.ident("a source vertex")?;
        s.expect(Kind::Arrow)?;
        let (tgt, _) = s.ident("a target vertex")?;
        if failure.is_none() {
            record(at, b.arrow(&name, &src, &tgt).map(|_| ()), &mut failure);
        }
        Ok(())
    })?;
    s.section("relations")?;
    s.items(|s| {
        let (second, at) = s.ident("an arrow")?;
        s.expect(Kind::Star)?;
        let (first, _) = s.ident("an arrow")?;
        if failure.is_none() {
            record(at, b.relation(&second, &first), &mut failure);
        }
        Ok(())
    })?;
    s.finish()?;
    match failure {
        Some(e) => Err(e),
        None => Ok(b.build()),
    }
}

/// Declaration order is kept, so the output re-parses to an equal presentation.
pub fn serialize_presentation(q: &QuiverPresentation) -> String {
    let vertices = q.vertices().join(", ");
    let arrows = q
        .arrows()
        .iter()
        .map(|a| format!("{}: {} -> {}", a.name, q.vertex_name(a.source), q.vertex_name(a.target)))
        .collect::<Vec<_>>()
        .join("; ");
    let relations = q
        .relations()
        .iter()
        .map(|r| format!("{}*{}", q.arrow_name(r.second), q.arrow_name(r.first)))
        .collect::<Vec<_>>()
        .join(", ");
    let line = |key: &str, body: String| if body.is_empty() { format!("{key}:\n") } else { format!("{key}: {body}\n") };
    line("vertices", vertices) + &line("arrows", arrows) + &line("relations", relations)
}
