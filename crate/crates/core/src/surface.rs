//! Triangulations of unpunctured marked surfaces and their gentle algebras.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::gentle::{validate_gentle, GentleViolation};
use crate::gp::singularity_descriptor;
use crate::quiver::{QuiverBuilder, QuiverPresentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// Index into the internal arcs.
    Internal(usize),
    /// Index into the boundary segments.
    Boundary(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TriangulationError {
    #[error("arc `{0}` declared twice")]
    DuplicateArc(String),
    #[error("triangle {triangle} uses undeclared side `{name}`")]
    UnknownSide { triangle: usize, name: String },
    #[error("triangle {triangle} is self-folded")]
    SelfFolded { triangle: usize },
    #[error("internal arc `{arc}` lies in {count} triangles, expected 2")]
    InternalMultiplicity { arc: String, count: usize },
    #[error("boundary segment `{segment}` lies in {count} triangles, expected 1")]
    BoundaryMultiplicity { segment: String, count: usize },
}

/// Triangles with sides listed in a fixed cyclic orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    internal: Vec<String>,
    boundary: Vec<String>,
    triangles: Vec<[Side; 3]>,
}

impl Triangulation {
    pub fn new<S: AsRef<str>>(
        internal: &[S],
        boundary: &[S],
        triangles: &[[S; 3]],
    ) -> Result<Self, TriangulationError> {
        let mut names: BTreeMap<&str, Side> = BTreeMap::new();
        for (i, a) in internal.iter().enumerate() {
            if names.insert(a.as_ref(), Side::Internal(i)).is_some() {
                return Err(TriangulationError::DuplicateArc(a.as_ref().into()));
            }
        }
        for (i, b) in boundary.iter().enumerate() {
            if names.insert(b.as_ref(), Side::Boundary(i)).is_some() {
                return Err(TriangulationError::DuplicateArc(b.as_ref().into()));
            }
        }
        let mut sides = Vec::with_capacity(triangles.len());
        for (k, t) in triangles.iter().enumerate() {
            let mut out = [Side::Boundary(0); 3];
            for (slot, name) in out.iter_mut().zip(t) {
                *slot = *names
                    .get(name.as_ref())
                    .ok_or_else(|| TriangulationError::UnknownSide { triangle: k, name: name.as_ref().into() })?;
            }
            if out[0] == out[1] || out[1] == out[2] || out[0] == out[2] {
                return Err(TriangulationError::SelfFolded { triangle: k });
            }
            sides.push(out);
        }
        let mut internal_count = alloc::vec![0; internal.len()];
        let mut boundary_count = alloc::vec![0; boundary.len()];
        for s in sides.iter().flatten() {
            match *s {
                Side::Internal(i) => internal_count[i] += 1,
                Side::Boundary(i) => boundary_count[i] += 1,
            }
        }
        if let Some(i) = internal_count.iter().position(|&c| c != 2) {
            return Err(TriangulationError::InternalMultiplicity {
                arc: internal[i].as_ref().into(),
                count: internal_count[i],
            });
        }
        if let Some(i) = boundary_count.iter().position(|&c| c != 1) {
            return Err(TriangulationError::BoundaryMultiplicity {
                segment: boundary[i].as_ref().into(),
                count: boundary_count[i],
            });
        }
        Ok(Triangulation {
            internal: internal.iter().map(|s| s.as_ref().into()).collect(),
            boundary: boundary.iter().map(|s| s.as_ref().into()).collect(),
            triangles: sides,
        })
    }

    pub fn internal_arcs(&self) -> &[String] {
        &self.internal
    }

    pub fn boundary_segments(&self) -> &[String] {
        &self.boundary
    }

    pub fn triangles(&self) -> &[[Side; 3]] {
        &self.triangles
    }

    pub fn side_name(&self, s: Side) -> &str {
        match s {
            Side::Internal(i) => &self.internal[i],
            Side::Boundary(i) => &self.boundary[i],
        }
    }
}

/// The quiver with relations of a triangulation: one vertex per internal arc,
/// an arrow `x -> y` whenever `y` follows `x` in the cyclic order of a
/// triangle, and a relation for each composable pair inside one triangle.
pub fn algebra_from_triangulation(t: &Triangulation) -> QuiverPresentation {
    let mut b = QuiverBuilder::new();
    for a in &t.internal {
        b.vertex(a).expect("arc names are distinct");
    }
    for (k, tri) in t.triangles.iter().enumerate() {
        let mut arrows: Vec<(String, usize, usize)> = Vec::new();
        for i in 0..3 {
            if let (Side::Internal(x), Side::Internal(y)) = (tri[i], tri[(i + 1) % 3]) {
                let name = format!("t{}.{}.{}", k + 1, t.internal[x], t.internal[y]);
                b.arrow(&name, &t.internal[x], &t.internal[y]).expect("fresh arrow");
                arrows.push((name, x, y));
            }
        }
        for (first, _, mid) in &arrows {
            for (second, from, _) in &arrows {
                if from == mid {
                    b.relation(second, first).expect("composable pair in one triangle");
                }
            }
        }
    }
    b.build()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerTriangleReport {
    pub count: usize,
    /// Indices into `Triangulation::triangles`.
    pub triangles: Vec<usize>,
}

/// Triangles all of whose sides are internal arcs.
pub fn inner_triangles(t: &Triangulation) -> InnerTriangleReport {
    let triangles: Vec<usize> =
        (0..t.triangles.len()).filter(|&k| t.triangles[k].iter().all(|s| matches!(s, Side::Internal(_)))).collect();
    InnerTriangleReport { count: triangles.len(), triangles }
}

/// Whether the singularity category has one factor per inner triangle, each
/// coming from a cycle of length three.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceReport {
    pub inner: InnerTriangleReport,
    pub descriptor: Vec<usize>,
    pub holds: bool,
}

pub fn verify_inner_triangle_count(t: &Triangulation) -> Result<SurfaceReport, Vec<GentleViolation>> {
    let alg = validate_gentle(&algebra_from_triangulation(t))?;
    let descriptor = singularity_descriptor(&alg).lengths;
    let inner = inner_triangles(t);
    let holds = descriptor.len() == inner.count && descriptor.iter().all(|&l| l == 3);
    Ok(SurfaceReport { inner, descriptor, holds })
}
