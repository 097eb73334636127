//! Quivers with length-two relations.
//!
//! A relation `(second, first)` stands for the path "first, then second",
//! written `second*first` in text. Elements of the path algebra are read
//! right to left, so `b*a` is the path `ba` that traverses `a` first.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` refers to unknown vertex `{vertex}`")]
    UnknownVertex { arrow: String, vertex: String },
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation `{second}*{first}` is not composable: `{first}` ends at `{first_target}` but `{second}` starts at `{second_source}`")]
    NonComposable { second: String, first: String, first_target: String, second_source: String },
    #[error("duplicate relation `{second}*{first}`")]
    DuplicateRelation { second: String, first: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// The length-two path "`first`, then `second`".
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relation {
    pub second: ArrowId,
    pub first: ArrowId,
}

/// A finite quiver with a set of length-two relations. Immutable once built.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct QuiverPresentation {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: Vec<Relation>,
}

/// Incremental construction with per-step validation, so a parser can attach
/// source positions to each failure.
#[derive(Debug, Default, Clone)]
pub struct QuiverBuilder {
    quiver: QuiverPresentation,
}

impl QuiverBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, name: &str) -> Result<VertexId, PresentationError> {
        if self.quiver.vertex_index(name).is_some() {
            return Err(PresentationError::DuplicateVertex(name.into()));
        }
        self.quiver.vertices.push(name.into());
        Ok(self.quiver.vertices.len() - 1)
    }

    pub fn arrow(&mut self, name: &str, source: &str, target: &str) -> Result<ArrowId, PresentationError> {
        if self.quiver.arrow_index(name).is_some() {
            return Err(PresentationError::DuplicateArrow(name.into()));
        }
        let lookup = |v: &str| {
            self.quiver
                .vertex_index(v)
                .ok_or_else(|| PresentationError::UnknownVertex { arrow: name.into(), vertex: v.into() })
        };
        let (source, target) = (lookup(source)?, lookup(target)?);
        self.quiver.arrows.push(Arrow { name: name.into(), source, target });
        Ok(self.quiver.arrows.len() - 1)
    }

    /// Adds the relation `second*first`.
    pub fn relation(&mut self, second: &str, first: &str) -> Result<(), PresentationError> {
        let q = &self.quiver;
        let find = |a: &str| q.arrow_index(a).ok_or_else(|| PresentationError::UnknownArrow(a.into()));
        let rel = Relation { second: find(second)?, first: find(first)? };
        let (s, f) = (&q.arrows[rel.second], &q.arrows[rel.first]);
        if f.target != s.source {
            return Err(PresentationError::NonComposable {
                second: second.into(),
                first: first.into(),
                first_target: q.vertices[f.target].clone(),
                second_source: q.vertices[s.source].clone(),
            });
        }
        if q.relations.contains(&rel) {
            return Err(PresentationError::DuplicateRelation { second: second.into(), first: first.into() });
        }
        self.quiver.relations.push(rel);
        Ok(())
    }

    pub fn build(self) -> QuiverPresentation {
        self.quiver
    }
}

impl QuiverPresentation {
    pub fn builder() -> QuiverBuilder {
        QuiverBuilder::new()
    }

    /// Convenience constructor from name lists; relations are `(second, first)` pairs.
    pub fn from_parts(
        vertices: &[&str],
        arrows: &[(&str, &str, &str)],
        relations: &[(&str, &str)],
    ) -> Result<Self, PresentationError> {
        let mut b = QuiverBuilder::new();
        for v in vertices {
            b.vertex(v)?;
        }
        for (name, s, t) in arrows {
            b.arrow(name, s, t)?;
        }
        for (second, first) in relations {
            b.relation(second, first)?;
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.arrows[a].name
    }

    pub fn vertex_index(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn has_relation(&self, second: ArrowId, first: ArrowId) -> bool {
        self.relations.contains(&Relation { second, first })
    }

    pub fn outgoing(&self, v: VertexId) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.source == v).map(|(i, _)| i)
    }

    pub fn incoming(&self, v: VertexId) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.target == v).map(|(i, _)| i)
    }

    /// The path through `arrows` (traversal order), if composable.
    pub fn path(&self, arrows: &[ArrowId]) -> Option<Path> {
        let (&first, rest) = arrows.split_first()?;
        let mut target = self.arrows[first].target;
        for &a in rest {
            if self.arrows[a].source != target {
                return None;
            }
            target = self.arrows[a].target;
        }
        Some(Path { arrows: arrows.to_vec(), source: self.arrows[first].source, target })
    }

    /// Reverses every arrow; `second*first` becomes `first*second`.
    /// Names and declaration order are kept, so this is an involution.
    pub fn opposite(&self) -> Self {
        QuiverPresentation {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
            relations: self.relations.iter().map(|r| Relation { second: r.first, first: r.second }).collect(),
        }
    }

    /// Equality of the named data, ignoring declaration order.
    pub fn same_up_to_order(&self, other: &Self) -> bool {
        type Named<'q> = (BTreeSet<&'q str>, BTreeSet<(&'q str, &'q str, &'q str)>, BTreeSet<(&'q str, &'q str)>);
        fn named(q: &QuiverPresentation) -> Named<'_> {
            (
                q.vertices.iter().map(String::as_str).collect(),
                q.arrows
                    .iter()
                    .map(|a| (a.name.as_str(), q.vertices[a.source].as_str(), q.vertices[a.target].as_str()))
                    .collect(),
                q.relations.iter().map(|r| (q.arrow_name(r.second), q.arrow_name(r.first))).collect(),
            )
        }
        self.vertices.len() == other.vertices.len()
            && self.arrows.len() == other.arrows.len()
            && self.relations.len() == other.relations.len()
            && named(self) == named(other)
    }

    /// Isomorphism up to renaming vertices and arrows.
    ///
    /// Returns the arrow correspondence `self -> other` when one exists.
    /// Backtracking over arrows with local invariants for pruning; adequate
    /// for the small quivers this crate deals with.
    pub fn isomorphism(&self, other: &Self) -> Option<Vec<ArrowId>> {
        if self.vertices.len() != other.vertices.len()
            || self.arrows.len() != other.arrows.len()
            || self.relations.len() != other.relations.len()
        {
            return None;
        }
        let inv_a = arrow_invariants(self);
        let inv_b = arrow_invariants(other);
        let mut sorted_a = inv_a.clone();
        let mut sorted_b = inv_b.clone();
        sorted_a.sort();
        sorted_b.sort();
        if sorted_a != sorted_b {
            return None;
        }
        let order = connected_arrow_order(self);
        let mut search = IsoSearch {
            a: self,
            b: other,
            inv_a,
            inv_b,
            order,
            vmap: vec![None; self.vertices.len()],
            vmap_back: vec![None; other.vertices.len()],
            amap: vec![None; self.arrows.len()],
            used: vec![false; other.arrows.len()],
        };
        if search.extend(0) {
            Some(search.amap.into_iter().map(|x| x.expect("complete assignment")).collect())
        } else {
            None
        }
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.isomorphism(other).is_some()
    }
}

type ArrowInvariant = (bool, usize, usize, usize, usize, usize, usize);

fn arrow_invariants(q: &QuiverPresentation) -> Vec<ArrowInvariant> {
    let indeg = |v| q.incoming(v).count();
    let outdeg = |v| q.outgoing(v).count();
    q.arrows
        .iter()
        .enumerate()
        .map(|(i, a)| {
            (
                a.source == a.target,
                outdeg(a.source),
                indeg(a.source),
                outdeg(a.target),
                indeg(a.target),
                q.relations.iter().filter(|r| r.first == i).count(),
                q.relations.iter().filter(|r| r.second == i).count(),
            )
        })
        .collect()
}

/// Arrow order in which every arrow after the first of its component shares
/// a vertex with an earlier one; keeps the backtracking constrained.
fn connected_arrow_order(q: &QuiverPresentation) -> Vec<ArrowId> {
    let mut order = Vec::with_capacity(q.arrows.len());
    let mut placed = vec![false; q.arrows.len()];
    let mut seen = vec![false; q.vertices.len()];
    while order.len() < q.arrows.len() {
        let next = (0..q.arrows.len())
            .filter(|&i| !placed[i])
            .find(|&i| seen[q.arrows[i].source] || seen[q.arrows[i].target])
            .or_else(|| (0..q.arrows.len()).find(|&i| !placed[i]))
            .expect("unplaced arrow remains");
        placed[next] = true;
        seen[q.arrows[next].source] = true;
        seen[q.arrows[next].target] = true;
        order.push(next);
    }
    order
}

struct IsoSearch<'q> {
    a: &'q QuiverPresentation,
    b: &'q QuiverPresentation,
    inv_a: Vec<ArrowInvariant>,
    inv_b: Vec<ArrowInvariant>,
    order: Vec<ArrowId>,
    vmap: Vec<Option<VertexId>>,
    vmap_back: Vec<Option<VertexId>>,
    amap: Vec<Option<ArrowId>>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&x) = self.order.get(depth) else {
            return true;
        };
        let ax = self.a.arrows[x].clone();
        for y in 0..self.b.arrows.len() {
            if self.used[y] || self.inv_a[x] != self.inv_b[y] {
                continue;
            }
            let by = &self.b.arrows[y];
            let mut bound = Vec::new();
            let ok = self.bind(ax.source, by.source, &mut bound) && self.bind(ax.target, by.target, &mut bound);
            let ok =
                ok && self.order[..depth].iter().all(|&x2| {
                    let y2 = self.amap[x2].expect("assigned");
                    self.a.has_relation(x, x2) == self.b.has_relation(y, y2)
                        && self.a.has_relation(x2, x) == self.b.has_relation(y2, y)
                }) && self.a.has_relation(x, x) == self.b.has_relation(y, y);
            if ok {
                self.amap[x] = Some(y);
                self.used[y] = true;
                if self.extend(depth + 1) {
                    return true;
                }
                self.amap[x] = None;
                self.used[y] = false;
            }
            for v in bound {
                if let Some(w) = self.vmap[v].take() {
                    self.vmap_back[w] = None;
                }
            }
        }
        false
    }

    fn bind(&mut self, v: VertexId, w: VertexId, bound: &mut Vec<VertexId>) -> bool {
        match (self.vmap[v], self.vmap_back[w]) {
            (Some(w2), _) => w2 == w,
            (None, Some(_)) => false,
            (None, None) => {
                self.vmap[v] = Some(w);
                self.vmap_back[w] = Some(v);
                bound.push(v);
                true
            }
        }
    }
}

/// A path in the quiver; `arrows` are in traversal order. An empty arrow
/// list is the lazy path at `source` (= `target`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub arrows: Vec<ArrowId>,
    pub source: VertexId,
    pub target: VertexId,
}

impl Path {
    pub fn lazy(v: VertexId) -> Self {
        Path { arrows: Vec::new(), source: v, target: v }
    }

    pub fn is_lazy(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn last_arrow(&self) -> Option<ArrowId> {
        self.arrows.last().copied()
    }

    /// This path followed by `arrow`. The caller guarantees composability.
    pub fn then(&self, arrow: ArrowId, target: VertexId) -> Self {
        let mut arrows = self.arrows.clone();
        arrows.push(arrow);
        Path { arrows, source: self.source, target }
    }

    /// Right-to-left notation: `e_v` for lazy paths, otherwise the arrow
    /// names with the last traversed arrow first.
    pub fn notation(&self, q: &QuiverPresentation) -> String {
        if self.is_lazy() {
            let mut s = String::from("e_");
            s.push_str(q.vertex_name(self.source));
            return s;
        }
        let mut s = String::new();
        for &a in self.arrows.iter().rev() {
            s.push_str(q.arrow_name(a));
        }
        s
    }
}
