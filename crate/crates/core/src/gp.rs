//! Gorenstein-projective modules: the combinatorial classification, an
//! independent homological check, and the singularity-category data.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::gentle::{CriticalCycle, GentleAlgebra, RadicalSummand};
use crate::homology::{Certification, ExtProfile, ModuleCategory, Period};
use crate::linalg::Field;
use crate::quiver::{ArrowId, VertexId};
use crate::representation::Representation;
use crate::string::{enumerate_strings, string_module, StringWord};

/// A non-projective indecomposable GP module `R(α)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonProjectiveGp {
    /// Index into `GentleAlgebra::critical_cycles`.
    pub cycle: usize,
    pub arrow: ArrowId,
    pub summand: RadicalSummand,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GpClassification {
    pub projectives: Vec<VertexId>,
    pub cycles: Vec<CriticalCycle>,
    /// Cycle by cycle, in the arrow order of each cycle.
    pub nonprojective: Vec<NonProjectiveGp>,
    /// The string words of the projectives, by vertex.
    pub projective_words: Vec<StringWord>,
}

impl GpClassification {
    /// Every indecomposable GP as a string word.
    pub fn words(&self) -> impl Iterator<Item = &StringWord> {
        self.projective_words.iter().chain(self.nonprojective.iter().map(|g| &g.summand.word))
    }

    /// Whether `M(w)` is one of the classified modules.
    pub fn contains_word(&self, alg: &GentleAlgebra, w: &StringWord) -> bool {
        let q = alg.quiver();
        let w = w.canonical(q);
        self.words().any(|x| x.canonical(q) == w)
    }

    pub fn count(&self) -> usize {
        self.projectives.len() + self.nonprojective.len()
    }
}

/// The indecomposable GP modules: the projectives and one `R(α)` for each
/// arrow on a critical cycle. Purely combinatorial.
pub fn classify_gp(alg: &GentleAlgebra) -> GpClassification {
    let cycles = alg.critical_cycles();
    let projectives: Vec<VertexId> = (0..alg.vertex_count()).collect();
    let projective_words =
        projectives.iter().map(|&v| alg.indecomposable_projective(v).expect("vertex in range").word).collect();
    let nonprojective = cycles
        .iter()
        .enumerate()
        .flat_map(|(i, c)| {
            c.arrows().iter().map(move |&a| NonProjectiveGp {
                cycle: i,
                arrow: a,
                summand: alg.radical_summand(a).expect("arrow in range"),
            })
        })
        .collect();
    GpClassification { projectives, cycles, nonprojective, projective_words }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Gp,
    NotGp,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Gp => "GP",
            Verdict::NotGp => "not-GP",
            Verdict::Inconclusive => "inconclusive-to-bound",
        }
    }
}

/// The outcome of checking one module homologically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCertificate {
    pub profile: ExtProfile,
    pub embedding_obstruction: usize,
    pub projective: bool,
    pub verdict: Verdict,
}

impl OracleCertificate {
    pub fn period(&self) -> Option<Period> {
        self.profile.period
    }
}

/// Decides GP-ness from Ext dimensions and the embedding test alone.
///
/// `not-GP` needs a nonzero Ext or a nonzero obstruction; `GP` needs all
/// Ext zero and either `M` projective or a repeating syzygy.
pub fn gp_oracle<F: Field>(cat: &ModuleCategory<'_, F>, m: &Representation<F>, bound: usize) -> OracleCertificate {
    let profile = cat.ext_profile(m, bound);
    let embedding_obstruction = cat.embedding_obstruction(m);
    let projective = profile.projective_dimension == Some(0);
    let verdict = if embedding_obstruction > 0 || !profile.all_zero() {
        Verdict::NotGp
    } else if projective || profile.certification == Certification::CertifiedByPeriodicity {
        Verdict::Gp
    } else {
        Verdict::Inconclusive
    };
    OracleCertificate { profile, embedding_obstruction, projective, verdict }
}

/// The words an oracle sweep checks: every string up to `max_letters`
/// letters together with the words of all classified GP modules, one per
/// class `{w, w^-1}`, sorted.
pub fn sweep_words(alg: &GentleAlgebra, classification: &GpClassification, max_letters: usize) -> Vec<StringWord> {
    let q = alg.quiver();
    let mut words: Vec<StringWord> = enumerate_strings(alg, max_letters);
    for w in classification.words() {
        let c = w.canonical(q);
        if !words.iter().any(|x| x.canonical(q) == c) {
            words.push(c);
        }
    }
    words.sort();
    words
}

/// One line of a sweep: the classifier's prediction and the oracle's verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordCheck {
    pub word: StringWord,
    pub predicted_gp: bool,
    pub certificate: OracleCertificate,
}

impl WordCheck {
    /// The oracle reached a verdict that contradicts the classifier.
    pub fn disagrees(&self) -> bool {
        match self.certificate.verdict {
            Verdict::Gp => !self.predicted_gp,
            Verdict::NotGp => self.predicted_gp,
            Verdict::Inconclusive => false,
        }
    }
}

pub fn certify_word<F: Field>(
    cat: &ModuleCategory<'_, F>,
    classification: &GpClassification,
    w: &StringWord,
    bound: usize,
) -> WordCheck {
    let alg = cat.algebra();
    let m = string_module(alg, w);
    WordCheck {
        word: w.clone(),
        predicted_gp: classification.contains_word(alg, w),
        certificate: gp_oracle(cat, &m, bound),
    }
}

/// One factor `D^b(k-mod)/[l]` of the singularity category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityFactor {
    pub cycle: String,
    pub length: usize,
    pub label: String,
}

/// The cycle lengths `l(c)`, sorted, with one labelled factor per cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityDescriptor {
    pub lengths: Vec<usize>,
    pub factors: Vec<SingularityFactor>,
}

impl SingularityDescriptor {
    /// Number of indecomposable objects of the singularity category.
    pub fn object_count(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &l in &self.lengths {
            *m.entry(l).or_insert(0) += 1;
        }
        m
    }
}

pub fn singularity_descriptor(alg: &GentleAlgebra) -> SingularityDescriptor {
    let q = alg.quiver();
    let mut factors: Vec<SingularityFactor> = alg
        .critical_cycles()
        .iter()
        .map(|c| SingularityFactor {
            cycle: c.notation(q),
            length: c.len(),
            label: format!("{}-cluster category of type A_1", c.len() - 1),
        })
        .collect();
    factors.sort_by(|a, b| (a.length, &a.cycle).cmp(&(b.length, &b.cycle)));
    SingularityDescriptor { lengths: factors.iter().map(|f| f.length).collect(), factors }
}

/// Computed data that contradicts the classification.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct TheoremViolation(pub String);

/// The stable category of GP modules, restricted to its indecomposables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableTable {
    /// Arrows `α` with `R(α)` a non-projective GP, in classification order.
    pub objects: Vec<ArrowId>,
    /// `omega[i]`: index of `Ω R(objects[i])`, which is its shift by `[-1]`.
    pub omega: Vec<usize>,
    /// `shift[i]`: index of `R(objects[i])[1]`.
    pub shift: Vec<usize>,
    /// Orbits of the shift, each listed along `Ω`.
    pub orbits: Vec<Vec<usize>>,
    /// `stable_hom[i][j] = dim` of stable `Hom(R(objects[i]), R(objects[j]))`.
    pub stable_hom: Vec<Vec<usize>>,
}

/// Builds the table, checking it against the classification: `Ω R(α)` must
/// be `R(β)` for the arrow `β` with `βα` a relation, the orbits must have the
/// cycle lengths, and the stable homs must form an identity matrix.
pub fn stable_category_table<F: Field>(cat: &ModuleCategory<'_, F>) -> Result<StableTable, TheoremViolation> {
    let alg = cat.algebra();
    let q = alg.quiver();
    let objects: Vec<ArrowId> = classify_gp(alg).nonprojective.iter().map(|g| g.arrow).collect();
    let signatures: Vec<_> = objects.iter().map(|&a| cat.signature(cat.radical_summand(a))).collect();
    let mut omega = Vec::with_capacity(objects.len());
    for &a in &objects {
        let syz = cat.signature(&cat.syzygy(cat.radical_summand(a)));
        let found = signatures
            .iter()
            .position(|s| *s == syz)
            .ok_or_else(|| TheoremViolation(format!("syzygy of R({}) is not a listed GP module", q.arrow_name(a))))?;
        let expected = alg.relation_successor(a).and_then(|b| objects.iter().position(|&x| x == b));
        if expected != Some(found) {
            return Err(TheoremViolation(format!(
                "syzygy of R({}) is R({}), not the relation successor",
                q.arrow_name(a),
                q.arrow_name(objects[found])
            )));
        }
        omega.push(found);
    }
    let mut shift = alloc::vec![0; objects.len()];
    for (i, &j) in omega.iter().enumerate() {
        shift[j] = i;
    }
    let mut seen = alloc::vec![false; objects.len()];
    let mut orbits = Vec::new();
    for i in 0..objects.len() {
        if seen[i] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            orbit.push(j);
            j = omega[j];
        }
        orbits.push(orbit);
    }
    let mut sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    let descriptor = singularity_descriptor(alg);
    if sizes != descriptor.lengths {
        return Err(TheoremViolation(format!(
            "shift orbit sizes {:?} differ from cycle lengths {:?}",
            sizes, descriptor.lengths
        )));
    }
    let stable_hom: Vec<Vec<usize>> = objects
        .iter()
        .map(|&a| objects.iter().map(|&b| cat.stable_hom_dim(cat.radical_summand(a), cat.radical_summand(b))).collect())
        .collect();
    for (i, row) in stable_hom.iter().enumerate() {
        for (j, &d) in row.iter().enumerate() {
            if d != usize::from(i == j) {
                return Err(TheoremViolation(format!(
                    "stable Hom(R({}), R({})) has dimension {d}",
                    q.arrow_name(objects[i]),
                    q.arrow_name(objects[j])
                )));
            }
        }
    }
    Ok(StableTable { objects, omega, shift, orbits, stable_hom })
}

/// The first cycle length whose multiplicities differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LengthWitness {
    pub length: usize,
    pub left: usize,
    pub right: usize,
}

/// Equal descriptors are necessary for derived equivalence, not sufficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedComparison {
    pub left: SingularityDescriptor,
    pub right: SingularityDescriptor,
    pub witness: Option<LengthWitness>,
}

impl DerivedComparison {
    pub fn compatible(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn compare_derived_invariant(a: &GentleAlgebra, b: &GentleAlgebra) -> DerivedComparison {
    let left = singularity_descriptor(a);
    let right = singularity_descriptor(b);
    let (ml, mr) = (left.multiplicities(), right.multiplicities());
    let witness = ml
        .keys()
        .chain(mr.keys())
        .copied()
        .collect::<alloc::collections::BTreeSet<_>>()
        .into_iter()
        .map(|length| LengthWitness {
            length,
            left: ml.get(&length).copied().unwrap_or(0),
            right: mr.get(&length).copied().unwrap_or(0),
        })
        .find(|w| w.left != w.right);
    DerivedComparison { left, right, witness }
}
