//! String and band words and the modules they define.
//!
//! Words are written in walk order: the first letter is walked first. A
//! direct letter `a` walks from `s(a)` to `t(a)`, an inverse letter `a^-1`
//! from `t(a)` back to `s(a)`. Text form: `i,d,a,f,k`, `b,a^-1`; the lazy
//! word at vertex `v` is written `@v`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::gentle::GentleAlgebra;
use crate::linalg::{Field, Matrix};
use crate::quiver::{ArrowId, QuiverPresentation, VertexId};
use crate::representation::Representation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub arrow: ArrowId,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: ArrowId) -> Self {
        Letter { arrow, inverse: false }
    }

    pub fn inverse(arrow: ArrowId) -> Self {
        Letter { arrow, inverse: true }
    }

    pub fn is_direct(self) -> bool {
        !self.inverse
    }

    pub fn flipped(self) -> Self {
        Letter { arrow: self.arrow, inverse: !self.inverse }
    }

    /// Vertex the walk leaves from.
    pub fn start(self, q: &QuiverPresentation) -> VertexId {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.target
        } else {
            a.source
        }
    }

    /// Vertex the walk arrives at.
    pub fn end(self, q: &QuiverPresentation) -> VertexId {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.source
        } else {
            a.target
        }
    }

    pub fn to_text(self, q: &QuiverPresentation) -> String {
        let mut s = String::from(q.arrow_name(self.arrow));
        if self.inverse {
            s.push_str("^-1");
        }
        s
    }
}

/// Why a letter sequence is not a string.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("malformed letter `{0}`")]
    Malformed(String),
    #[error("letters {position} and {} do not form a walk", position + 1)]
    NotAWalk { position: usize },
    #[error("letter {} undoes letter {position}", position + 1)]
    Backtrack { position: usize },
    #[error("direct letters {position} and {} compose to a relation", position + 1)]
    DirectRelation { position: usize },
    #[error("inverse letters {position} and {} compose to a relation", position + 1)]
    InverseRelation { position: usize },
    #[error("band word must be a nonempty closed walk")]
    NotClosed,
    #[error("band word needs both direct and inverse letters")]
    OneSided,
    #[error("band word is a proper power")]
    ProperPower,
    #[error("band parameter must be nonzero")]
    ZeroParameter,
    #[error("band multiplicity must be positive")]
    ZeroMultiplicity,
}

/// Checks the pair `(x, y)` of consecutive letters.
fn check_pair(alg: &GentleAlgebra, x: Letter, y: Letter, position: usize) -> Result<(), WordError> {
    let q = alg.quiver();
    if x.end(q) != y.start(q) {
        return Err(WordError::NotAWalk { position });
    }
    if y == x.flipped() {
        return Err(WordError::Backtrack { position });
    }
    match (x.inverse, y.inverse) {
        (false, false) if alg.is_relation(y.arrow, x.arrow) => Err(WordError::DirectRelation { position }),
        // Walking back along x then y is the forward path y, x.
        (true, true) if alg.is_relation(x.arrow, y.arrow) => Err(WordError::InverseRelation { position }),
        _ => Ok(()),
    }
}

/// Whether `letters` is a string for `alg`; the error names the first failure.
pub fn is_valid_string(alg: &GentleAlgebra, letters: &[Letter]) -> Result<(), WordError> {
    for l in letters {
        if l.arrow >= alg.arrow_count() {
            return Err(WordError::UnknownArrow(alloc::format!("#{}", l.arrow)));
        }
    }
    letters.windows(2).enumerate().try_for_each(|(i, w)| check_pair(alg, w[0], w[1], i))
}

/// A string: a lazy word at a vertex, or a nonempty valid walk.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StringWord {
    start: VertexId,
    letters: Vec<Letter>,
}

impl StringWord {
    pub fn lazy(v: VertexId) -> Self {
        StringWord { start: v, letters: Vec::new() }
    }

    pub fn new(alg: &GentleAlgebra, letters: Vec<Letter>) -> Result<Self, WordError> {
        is_valid_string(alg, &letters)?;
        let start = letters.first().ok_or(WordError::Malformed(String::new()))?.start(alg.quiver());
        Ok(StringWord { start, letters })
    }

    /// For letter sequences already known to be valid.
    pub(crate) fn from_letters_unchecked(start: VertexId, letters: Vec<Letter>) -> Self {
        StringWord { start, letters }
    }

    /// Parses `a,b^-1,c` or `@v`.
    pub fn parse(alg: &GentleAlgebra, text: &str) -> Result<Self, WordError> {
        let q = alg.quiver();
        let text = text.trim();
        if let Some(v) = text.strip_prefix('@') {
            let v = v.trim();
            return q.vertex_index(v).map(StringWord::lazy).ok_or_else(|| WordError::UnknownVertex(v.into()));
        }
        let letters = parse_letters(q, text)?;
        StringWord::new(alg, letters)
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self, q: &QuiverPresentation) -> VertexId {
        self.letters.last().map_or(self.start, |l| l.end(q))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_lazy(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_directed(&self) -> bool {
        self.letters.iter().all(|l| l.is_direct())
    }

    /// The vertices visited by the walk, one per basis vector of `M(w)`.
    pub fn vertices(&self, q: &QuiverPresentation) -> Vec<VertexId> {
        let mut out = vec![self.start];
        out.extend(self.letters.iter().map(|l| l.end(q)));
        out
    }

    pub fn dimension_vector(&self, q: &QuiverPresentation) -> Vec<usize> {
        let mut dims = vec![0; q.vertex_count()];
        for v in self.vertices(q) {
            dims[v] += 1;
        }
        dims
    }

    /// The reversed walk.
    pub fn inverse(&self, q: &QuiverPresentation) -> Self {
        StringWord { start: self.end(q), letters: self.letters.iter().rev().map(|l| l.flipped()).collect() }
    }

    fn key(&self) -> (&[Letter], VertexId) {
        (&self.letters, self.start)
    }

    /// The lesser of `w` and `w^-1`; `M(w)` and `M(w^-1)` are isomorphic.
    pub fn canonical(&self, q: &QuiverPresentation) -> Self {
        let inv = self.inverse(q);
        if inv.key() < self.key() {
            inv
        } else {
            self.clone()
        }
    }

    pub fn to_text(&self, q: &QuiverPresentation) -> String {
        if self.is_lazy() {
            let mut s = String::from("@");
            s.push_str(q.vertex_name(self.start));
            return s;
        }
        self.letters.iter().map(|l| l.to_text(q)).collect::<Vec<_>>().join(",")
    }
}

impl PartialOrd for StringWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for StringWord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.letters.len(), self.key()).cmp(&(other.letters.len(), other.key()))
    }
}

fn parse_letters(q: &QuiverPresentation, text: &str) -> Result<Vec<Letter>, WordError> {
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (name, inverse) = match tok.strip_suffix("^-1") {
                Some(n) => (n.trim(), true),
                None => (tok, false),
            };
            if name.is_empty() || name.contains('^') {
                return Err(WordError::Malformed(tok.into()));
            }
            let arrow = q.arrow_index(name).ok_or_else(|| WordError::UnknownArrow(name.into()))?;
            Ok(Letter { arrow, inverse })
        })
        .collect()
}

/// Whether some direct letter is immediately followed by an inverse letter
/// of a different arrow: two arrows pointing into a common basis vector.
/// This pattern is its own mirror image, so it is the same test for `w^-1`.
pub fn contains_peak(w: &StringWord) -> bool {
    w.letters.windows(2).any(|p| p[0].is_direct() && p[1].inverse && p[0].arrow != p[1].arrow)
}

/// The string module `M(w)`: one basis vector per visited vertex, arrows
/// acting by 0/1 matrices along the walk.
pub fn string_module<F: Field>(alg: &GentleAlgebra, w: &StringWord) -> Representation<F> {
    let q = alg.quiver();
    let visits = w.vertices(q);
    let mut dims = vec![0; q.vertex_count()];
    let local: Vec<usize> = visits
        .iter()
        .map(|&v| {
            dims[v] += 1;
            dims[v] - 1
        })
        .collect();
    let mut actions: Vec<Matrix<F>> =
        q.arrows().iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
    for (i, l) in w.letters.iter().enumerate() {
        // Basis vectors i and i + 1 are joined by letter i.
        let (from, to) = if l.inverse { (i + 1, i) } else { (i, i + 1) };
        actions[l.arrow][(local[to], local[from])] = F::one();
    }
    Representation::new(q, dims, actions).expect("shapes built from the walk")
}

/// Every string with at most `max_letters` letters, one of each pair
/// `{w, w^-1}`, lazy words included; sorted by length, then letters.
pub fn enumerate_strings(alg: &GentleAlgebra, max_letters: usize) -> Vec<StringWord> {
    let q = alg.quiver();
    let mut out: Vec<StringWord> = (0..q.vertex_count()).map(StringWord::lazy).collect();
    let mut layer: Vec<Vec<Letter>> = Vec::new();
    if max_letters > 0 {
        for a in 0..q.arrow_count() {
            layer.push(vec![Letter::direct(a)]);
            layer.push(vec![Letter::inverse(a)]);
        }
    }
    let mut len = 1;
    while !layer.is_empty() {
        for letters in &layer {
            let w = StringWord { start: letters[0].start(q), letters: letters.clone() };
            if w.inverse(q).key() > w.key() {
                out.push(w);
            }
        }
        if len == max_letters {
            break;
        }
        let mut next = Vec::new();
        for letters in &layer {
            let last = *letters.last().expect("nonempty");
            for a in 0..q.arrow_count() {
                for l in [Letter::direct(a), Letter::inverse(a)] {
                    if check_pair(alg, last, l, letters.len() - 1).is_ok() {
                        let mut ext = letters.clone();
                        ext.push(l);
                        next.push(ext);
                    }
                }
            }
        }
        layer = next;
        len += 1;
    }
    out.sort();
    out
}

/// A band: a cyclic word all of whose rotations are strings, with letters of
/// both kinds, that is not a proper power. Stored in its least rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BandWord {
    letters: Vec<Letter>,
}

impl BandWord {
    pub fn new(alg: &GentleAlgebra, letters: Vec<Letter>) -> Result<Self, WordError> {
        let n = letters.len();
        if n == 0 {
            return Err(WordError::NotClosed);
        }
        is_valid_string(alg, &letters)?;
        check_pair(alg, letters[n - 1], letters[0], n - 1).map_err(|e| match e {
            WordError::NotAWalk { .. } => WordError::NotClosed,
            other => other,
        })?;
        if letters.iter().all(|l| l.is_direct()) || letters.iter().all(|l| l.inverse) {
            return Err(WordError::OneSided);
        }
        if (1..n).any(|p| n.is_multiple_of(p) && (0..n).all(|i| letters[i] == letters[(i + p) % n])) {
            return Err(WordError::ProperPower);
        }
        let best = (0..n)
            .min_by(|&i, &j| {
                let ri = letters[i..].iter().chain(&letters[..i]);
                let rj = letters[j..].iter().chain(&letters[..j]);
                ri.cmp(rj)
            })
            .expect("nonempty band");
        let mut rotated = letters[best..].to_vec();
        rotated.extend_from_slice(&letters[..best]);
        Ok(BandWord { letters: rotated })
    }

    pub fn parse(alg: &GentleAlgebra, text: &str) -> Result<Self, WordError> {
        BandWord::new(alg, parse_letters(alg.quiver(), text.trim())?)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// The letter carrying the Jordan block: the direct letter whose arrow
    /// name is least.
    pub fn jordan_letter(&self, q: &QuiverPresentation) -> usize {
        (0..self.letters.len())
            .filter(|&i| self.letters[i].is_direct())
            .min_by_key(|&i| (q.arrow_name(self.letters[i].arrow), i))
            .expect("a band has a direct letter")
    }
}

/// The band module `M(b, λ, n)`: `F^n` at each position of the cyclic walk,
/// identity maps along every letter except one direct letter, which acts by
/// the Jordan block `J_n(λ)`.
pub fn band_module<F: Field>(
    alg: &GentleAlgebra,
    band: &BandWord,
    lambda: &F,
    n: usize,
) -> Result<Representation<F>, WordError> {
    if lambda.is_zero() {
        return Err(WordError::ZeroParameter);
    }
    if n == 0 {
        return Err(WordError::ZeroMultiplicity);
    }
    let q = alg.quiver();
    let m = band.letters.len();
    let positions: Vec<VertexId> = band.letters.iter().map(|l| l.start(q)).collect();
    let mut dims = vec![0; q.vertex_count()];
    let offset: Vec<usize> = positions
        .iter()
        .map(|&v| {
            dims[v] += n;
            dims[v] - n
        })
        .collect();
    let mut jordan = Matrix::<F>::identity(n).scale(lambda);
    for i in 0..n.saturating_sub(1) {
        jordan[(i, i + 1)] = F::one();
    }
    let identity = Matrix::<F>::identity(n);
    let special = band.jordan_letter(q);
    let mut actions: Vec<Matrix<F>> =
        q.arrows().iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
    for (i, l) in band.letters.iter().enumerate() {
        let j = (i + 1) % m;
        let (from, to) = if l.inverse { (j, i) } else { (i, j) };
        let block = if i == special { &jordan } else { &identity };
        let act = &mut actions[l.arrow];
        for r in 0..n {
            for c in 0..n {
                act[(offset[to] + r, offset[from] + c)] = block[(r, c)].clone();
            }
        }
    }
    Ok(Representation::new(q, dims, actions).expect("shapes built from the band"))
}
