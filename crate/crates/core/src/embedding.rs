//! Deciding (or honestly declining to decide) whether the monoid of
//! positive words embeds in a group.
//!
//! The positive route: complete the monoid presentation of the group under
//! a total order and inspect the result. If completion finished, every rule
//! with a positive left-hand side also has a positive right-hand side, and
//! every created positive rule arose from an ambiguity between positive
//! rules of earlier steps, then the monoid presented by the positive rules
//! embeds in the group. No failing leg ever means "does not embed"; the
//! criterion is one-directional, so the verdict degrades to `Inconclusive`.
//!
//! The classical first-letter/last-letter graph criterion is provided as an
//! independent, much weaker check.

use std::error::Error;
use std::fmt;

use crate::bfs::{self, BfsCaps, BfsOutcome};
use crate::completion::{
    BudgetKind, CompletionConfig, CompletionError, CompletionOutcome, CompletionStatus,
    knuth_bendix,
};
use crate::ordering::LetterOrder;
use crate::presentation::{Presentation, PresentationError, PresentationKind};
use crate::rewriting::{Confluence, Fuel, RewriteError, RewritingSystem, RuleId};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbedError {
    /// The completion outcome carries no trace, so provenance cannot be
    /// checked.
    MissingTrace,
    NonPositiveInput,
    FuelExhausted,
}

impl fmt::Display for EmbedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbedError::MissingTrace => write!(f, "completion outcome has no recorded trace"),
            EmbedError::NonPositiveInput => write!(f, "input word uses inverse letters"),
            EmbedError::FuelExhausted => write!(f, "reduction fuel exhausted"),
        }
    }
}

impl Error for EmbedError {}

impl From<RewriteError> for EmbedError {
    fn from(e: RewriteError) -> EmbedError {
        match e {
            RewriteError::FuelExhausted => EmbedError::FuelExhausted,
        }
    }
}

/// Whether every rule with positive left-hand side has a positive
/// right-hand side. The empty word counts as positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CPlusStatus {
    Holds,
    Violations(Vec<RuleId>),
    /// No rule has a positive left-hand side, so the condition has nothing
    /// to say.
    NotApplicable,
}

pub fn c_plus_status(rs: &RewritingSystem) -> CPlusStatus {
    if !rs.rules().iter().any(|r| r.positive) {
        return CPlusStatus::NotApplicable;
    }
    let violations: Vec<RuleId> = rs
        .rules()
        .iter()
        .filter(|r| r.positive && !r.rhs.is_positive())
        .map(|r| r.id)
        .collect();
    if violations.is_empty() {
        CPlusStatus::Holds
    } else {
        CPlusStatus::Violations(violations)
    }
}

/// The subsystem of rules with positive left-hand side, ids preserved.
/// Rules rewriting to the empty word are kept.
pub fn positive_subsystem(rs: &RewritingSystem) -> RewritingSystem {
    rs.filtered(|r| r.positive)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProvenanceStatus {
    Holds,
    /// The first created positive rule (by id) that was not produced by two
    /// positive rules of strictly earlier steps.
    Counterexample(RuleId),
}

/// Checks that every created rule with positive left-hand side descends
/// from an ambiguity between positive rules created at strictly earlier
/// steps (seed rules count as step 0).
pub fn positive_provenance(out: &CompletionOutcome) -> Result<ProvenanceStatus, EmbedError> {
    if out.trace.is_none() {
        return Err(EmbedError::MissingTrace);
    }
    for rule in out.system.rules() {
        if rule.step == 0 || !rule.positive {
            continue;
        }
        let Some((p1, p2)) = rule.parents else {
            return Ok(ProvenanceStatus::Counterexample(rule.id));
        };
        let ok = [p1, p2].into_iter().all(|p| {
            let parent = out.system.rule(p);
            parent.positive && parent.step < rule.step
        });
        if !ok {
            return Ok(ProvenanceStatus::Counterexample(rule.id));
        }
    }
    Ok(ProvenanceStatus::Holds)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InconclusiveReason {
    BudgetExhausted(BudgetKind),
    CPlusViolated(Vec<RuleId>),
    ProvenanceFailed(RuleId),
    /// Only for supplied systems: a critical pair did not resolve.
    NotLocallyConfluent,
}

impl fmt::Display for InconclusiveReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InconclusiveReason::BudgetExhausted(b) => {
                write!(f, "completion stopped at budget ({b})")
            }
            InconclusiveReason::CPlusViolated(ids) => {
                write!(f, "positive rule with non-positive right-hand side: rule ")?;
                for (i, id) in ids.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{id}")?;
                }
                Ok(())
            }
            InconclusiveReason::ProvenanceFailed(id) => {
                write!(
                    f,
                    "positive rule {id} not created by earlier positive rules"
                )
            }
            InconclusiveReason::NotLocallyConfluent => {
                write!(f, "supplied system is not locally confluent")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotApplicableReason {
    NoPositiveRules,
}

impl fmt::Display for NotApplicableReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotApplicableReason::NoPositiveRules => {
                write!(f, "no rule has a positive left-hand side")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictStatus {
    /// The monoid presented by the positive rules embeds in the group.
    Embeds,
    /// Some leg of the criterion failed; nothing can be concluded.
    Inconclusive(InconclusiveReason),
    NotApplicable(NotApplicableReason),
}

/// What the verdict was computed from.
#[derive(Debug, Clone)]
pub enum Evidence {
    Completed(CompletionOutcome),
    /// A system supplied as already complete; termination is taken on
    /// trust when the system carries no order.
    Supplied(RewritingSystem),
}

#[derive(Debug, Clone)]
pub struct EmbeddingVerdict {
    pub status: VerdictStatus,
    pub c_plus: CPlusStatus,
    /// `None` when no trace was available (supplied systems).
    pub provenance: Option<ProvenanceStatus>,
    /// The positive subsystem; present exactly when the status is `Embeds`.
    pub positive_system: Option<RewritingSystem>,
    pub evidence: Evidence,
}

impl EmbeddingVerdict {
    pub fn system(&self) -> &RewritingSystem {
        match &self.evidence {
            Evidence::Completed(out) => &out.system,
            Evidence::Supplied(rs) => rs,
        }
    }

    pub fn embeds(&self) -> bool {
        self.status == VerdictStatus::Embeds
    }
}

/// Runs the full criterion on a group presentation: convert to the monoid
/// presentation, orient the relations under `order`, complete, and inspect.
///
/// A trace is always recorded, regardless of `cfg.record_trace`, because the
/// provenance leg needs it.
pub fn embed_verdict(
    p: &Presentation,
    order: &LetterOrder,
    cfg: &CompletionConfig,
) -> Result<EmbeddingVerdict, EmbedVerdictError> {
    let monoid = p
        .to_monoid_presentation()
        .map_err(EmbedVerdictError::Presentation)?;
    let seed = RewritingSystem::from_presentation(&monoid, order.clone())
        .map_err(|e| EmbedVerdictError::Seed(e.to_string()))?;
    embed_verdict_from_seed(&seed, order, cfg).map_err(EmbedVerdictError::Completion)
}

/// Same criterion, starting from an explicit seed system. Used when the
/// seed is built by other means than orienting a presentation.
pub fn embed_verdict_from_seed(
    seed: &RewritingSystem,
    order: &LetterOrder,
    cfg: &CompletionConfig,
) -> Result<EmbeddingVerdict, CompletionError> {
    let cfg = CompletionConfig {
        record_trace: true,
        ..cfg.clone()
    };
    let out = knuth_bendix(seed, order, &cfg)?;
    let c_plus = c_plus_status(&out.system);
    let provenance = positive_provenance(&out).expect("trace was recorded");

    let status = match out.status {
        CompletionStatus::BudgetExhausted(kind) => {
            VerdictStatus::Inconclusive(InconclusiveReason::BudgetExhausted(kind))
        }
        CompletionStatus::Complete => match (&c_plus, &provenance) {
            (CPlusStatus::NotApplicable, _) => {
                VerdictStatus::NotApplicable(NotApplicableReason::NoPositiveRules)
            }
            (CPlusStatus::Violations(ids), _) => {
                VerdictStatus::Inconclusive(InconclusiveReason::CPlusViolated(ids.clone()))
            }
            (CPlusStatus::Holds, ProvenanceStatus::Counterexample(id)) => {
                VerdictStatus::Inconclusive(InconclusiveReason::ProvenanceFailed(*id))
            }
            (CPlusStatus::Holds, ProvenanceStatus::Holds) => VerdictStatus::Embeds,
        },
    };
    let positive_system =
        (status == VerdictStatus::Embeds).then(|| positive_subsystem(&out.system));
    Ok(EmbeddingVerdict {
        status,
        c_plus,
        provenance: Some(provenance),
        positive_system,
        evidence: Evidence::Completed(out),
    })
}

/// Judges a system supplied as already complete: local confluence is
/// verified (fuel-bounded for systems without an order, whose termination
/// is then taken on trust), then the positivity condition. Provenance
/// cannot be checked without a trace.
pub fn embed_verdict_precompleted(
    rs: &RewritingSystem,
    fuel: Fuel,
) -> Result<EmbeddingVerdict, RewriteError> {
    let confluence = rs.check_local_confluence(fuel)?;
    let c_plus = c_plus_status(rs);
    let status = match confluence {
        Confluence::Witness { .. } => {
            VerdictStatus::Inconclusive(InconclusiveReason::NotLocallyConfluent)
        }
        Confluence::Confluent => match &c_plus {
            CPlusStatus::NotApplicable => {
                VerdictStatus::NotApplicable(NotApplicableReason::NoPositiveRules)
            }
            CPlusStatus::Violations(ids) => {
                VerdictStatus::Inconclusive(InconclusiveReason::CPlusViolated(ids.clone()))
            }
            CPlusStatus::Holds => VerdictStatus::Embeds,
        },
    };
    let positive_system = (status == VerdictStatus::Embeds).then(|| positive_subsystem(rs));
    Ok(EmbeddingVerdict {
        status,
        c_plus,
        provenance: None,
        positive_system,
        evidence: Evidence::Supplied(rs.clone()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbedVerdictError {
    Presentation(PresentationError),
    Seed(String),
    Completion(CompletionError),
}

impl fmt::Display for EmbedVerdictError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbedVerdictError::Presentation(e) => write!(f, "{e}"),
            EmbedVerdictError::Seed(msg) => write!(f, "seed construction failed: {msg}"),
            EmbedVerdictError::Completion(e) => write!(f, "{e}"),
        }
    }
}

impl Error for EmbedVerdictError {}

/// Equality of positive words in the monoid presented by a complete
/// positive system: both normal forms are computed and compared.
pub fn monoid_equal(
    rs_plus: &RewritingSystem,
    w1: &Word,
    w2: &Word,
    fuel: Fuel,
) -> Result<bool, EmbedError> {
    if !w1.is_positive() || !w2.is_positive() {
        return Err(EmbedError::NonPositiveInput);
    }
    let n1 = rs_plus.normal_form(w1, fuel)?;
    let n2 = rs_plus.normal_form(w2, fuel)?;
    Ok(n1 == n2)
}

// ---------------------------------------------------------------------------
// First-letter / last-letter graphs
// ---------------------------------------------------------------------------

/// One edge per relation, joining a letter of the left side to the
/// corresponding letter of the right side. Unordered; self-loops allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdianEdge {
    pub a: u32,
    pub b: u32,
    pub relation: usize,
}

/// The left graph joins first letters, the right graph last letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdianGraphs {
    pub left_edges: Vec<AdianEdge>,
    pub right_edges: Vec<AdianEdge>,
}

/// Builds the two graphs from a positive monoid presentation in which no
/// relation side is empty.
pub fn adian_graphs(p: &Presentation) -> Result<AdianGraphs, PresentationError> {
    if p.kind != PresentationKind::Monoid {
        return Err(PresentationError::ExpectedMonoid);
    }
    let mut left_edges = Vec::new();
    let mut right_edges = Vec::new();
    for (i, rel) in p.relations.iter().enumerate() {
        if rel.left.is_empty() || rel.right.is_empty() {
            return Err(PresentationError::EmptyRelationSide { relation: i });
        }
        if !rel.left.is_positive() || !rel.right.is_positive() {
            return Err(PresentationError::NonPositiveRelations { relation: i });
        }
        let l = rel.left.letters();
        let r = rel.right.letters();
        left_edges.push(AdianEdge {
            a: l[0].generator,
            b: r[0].generator,
            relation: i,
        });
        right_edges.push(AdianEdge {
            a: l[l.len() - 1].generator,
            b: r[r.len() - 1].generator,
            relation: i,
        });
    }
    Ok(AdianGraphs {
        left_edges,
        right_edges,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdianReport {
    pub left_has_cycle: bool,
    pub right_has_cycle: bool,
    /// True iff neither graph has a cycle; the embedding conclusion of the
    /// first-letter/last-letter criterion.
    pub embeds_by_adian: bool,
}

/// An undirected multigraph has a cycle iff some connected component
/// carries at least as many edges as vertices. Parallel edges count, and a
/// self-loop is a cycle on its own.
fn multigraph_has_cycle(edges: &[AdianEdge]) -> bool {
    let mut parent: std::collections::BTreeMap<u32, u32> = std::collections::BTreeMap::new();
    fn find(parent: &mut std::collections::BTreeMap<u32, u32>, v: u32) -> u32 {
        let p = *parent.entry(v).or_insert(v);
        if p == v {
            v
        } else {
            let root = find(parent, p);
            parent.insert(v, root);
            root
        }
    }
    for e in edges {
        let ra = find(&mut parent, e.a);
        let rb = find(&mut parent, e.b);
        if ra != rb {
            parent.insert(ra, rb);
        }
    }
    let mut vertices: std::collections::BTreeMap<u32, usize> = std::collections::BTreeMap::new();
    let mut edge_count: std::collections::BTreeMap<u32, usize> = std::collections::BTreeMap::new();
    let keys: Vec<u32> = parent.keys().copied().collect();
    for v in keys {
        let root = find(&mut parent, v);
        *vertices.entry(root).or_insert(0) += 1;
    }
    for e in edges {
        let root = find(&mut parent, e.a);
        *edge_count.entry(root).or_insert(0) += 1;
    }
    edge_count
        .iter()
        .any(|(root, &edges)| edges >= *vertices.get(root).unwrap_or(&0))
}

pub fn adian_criterion(g: &AdianGraphs) -> AdianReport {
    let left_has_cycle = multigraph_has_cycle(&g.left_edges);
    let right_has_cycle = multigraph_has_cycle(&g.right_edges);
    AdianReport {
        left_has_cycle,
        right_has_cycle,
        embeds_by_adian: !left_has_cycle && !right_has_cycle,
    }
}

// ---------------------------------------------------------------------------
// Bounded presentation comparison
// ---------------------------------------------------------------------------

/// Result of the bounded comparison between a candidate monoid
/// presentation and a positive system. Never conclusive: `mismatch: None`
/// only says no disagreement was found below the caps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidComparison {
    pub checked_words: usize,
    /// Words whose oracle class hit a cap and could not be compared fully.
    pub undecided: usize,
    /// Two words the two sides disagree about.
    pub mismatch: Option<(Word, Word)>,
}

impl MonoidComparison {
    pub fn consistent(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Compares word equality up to `max_len` between the congruence generated
/// by `candidate`'s relations (decided by the breadth-first oracle) and
/// normal-form equality under `rs_plus`.
pub fn compare_monoid_presentations_bounded(
    candidate: &Presentation,
    rs_plus: &RewritingSystem,
    max_len: usize,
    caps: BfsCaps,
    fuel: Fuel,
) -> Result<MonoidComparison, EmbedError> {
    let alphabet = rs_plus.alphabet();
    let mut words: Vec<Word> = vec![Word::empty()];
    let mut frontier: Vec<Word> = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in alphabet.gens() {
                let mut ext = w.clone();
                ext.push(crate::alphabet::Letter::positive(g));
                next.push(ext);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }

    let mut undecided = 0usize;
    let mut classes: Vec<Option<(std::collections::BTreeSet<Word>, bool)>> = Vec::new();
    let mut nfs: Vec<Word> = Vec::new();
    for w in &words {
        nfs.push(rs_plus.normal_form(w, fuel)?);
        match bfs::equivalence_class(candidate, w, caps) {
            BfsOutcome::Closed { class, truncated } => {
                if truncated {
                    undecided += 1;
                }
                classes.push(Some((class, truncated)));
            }
            BfsOutcome::CapExceeded => {
                undecided += 1;
                classes.push(None);
            }
        }
    }

    // words the oracle merges must share a normal form; membership is
    // conclusive even for truncated closures
    for (i, w) in words.iter().enumerate() {
        let Some((class, _)) = &classes[i] else {
            continue;
        };
        for member in class {
            let member_nf = rs_plus.normal_form(member, fuel)?;
            if member_nf != nfs[i] {
                return Ok(MonoidComparison {
                    checked_words: words.len(),
                    undecided,
                    mismatch: Some((w.clone(), member.clone())),
                });
            }
        }
    }
    // words sharing a normal form must be merged by the oracle; only an
    // untruncated closure can certify non-membership
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            if nfs[i] != nfs[j] {
                continue;
            }
            if let Some((class, truncated)) = &classes[i]
                && !truncated
                && !class.contains(&words[j])
            {
                return Ok(MonoidComparison {
                    checked_words: words.len(),
                    undecided,
                    mismatch: Some((words[i].clone(), words[j].clone())),
                });
            }
        }
    }
    Ok(MonoidComparison {
        checked_words: words.len(),
        undecided,
        mismatch: None,
    })
}
