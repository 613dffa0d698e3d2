//! String rewriting and Knuth-Bendix completion over monoid and group
//! presentations, with a criterion for embedding the monoid of positive
//! words into the group, and a right-angled Artin group toolkit built on
//! top of it.
//!
//! The layers, bottom up:
//!
//! - [`alphabet`], [`word`], [`presentation`]: signed letters, words, free
//!   reduction, monoid/group presentations and their text formats.
//! - [`ordering`]: shortlex orders over the doubled alphabet and rule
//!   orientation.
//! - [`rewriting`]: rewriting systems, deterministic reduction, ambiguity
//!   enumeration, critical pairs, local-confluence checking.
//! - [`bfs`]: a brute-force congruence oracle, deliberately independent of
//!   the rewriting machinery, to test everything else against.
//! - [`completion`]: step-indexed Knuth-Bendix completion with budgets and
//!   a full provenance trace.
//! - [`embedding`]: the positivity condition on completed systems, the
//!   embedding verdict, and the first-letter/last-letter graph criterion.
//! - [`raag`]: defining graphs, commutation seed systems, bipartite
//!   coloring orders, structural verification of completions, and a
//!   bounded-completion word-problem solver.

pub mod alphabet;
pub mod bfs;
pub mod completion;
pub mod embedding;
pub mod ordering;
pub mod presentation;
pub mod raag;
pub mod rewriting;
pub mod text;
pub mod word;

pub use alphabet::{Alphabet, Letter, Sign};
pub use bfs::{BfsCaps, BfsOutcome, equivalence_class, equivalent};
pub use completion::{
    BudgetKind, CompletionConfig, CompletionError, CompletionEvent, CompletionOutcome,
    CompletionStatus, CompletionStep, EventOutcome, knuth_bendix,
};
pub use embedding::{
    AdianEdge, AdianGraphs, AdianReport, CPlusStatus, EmbedError, EmbedVerdictError,
    EmbeddingVerdict, Evidence, InconclusiveReason, MonoidComparison, NotApplicableReason,
    ProvenanceStatus, VerdictStatus, adian_criterion, adian_graphs, c_plus_status,
    compare_monoid_presentations_bounded, embed_verdict, embed_verdict_from_seed,
    embed_verdict_precompleted, monoid_equal, positive_provenance, positive_subsystem,
};
pub use ordering::{LetterOrder, Orientation};
pub use presentation::{Presentation, PresentationError, PresentationKind, Relation};
pub use raag::{
    ColorClass, Coloring, ColoringOutcome, ConditionCheck, DefiningGraph, RaagError, RaagSolver,
    StructureReport, prefix_condition_holds, raag_normal_form, verify_structure,
};
pub use rewriting::{
    Ambiguity, Confluence, CriticalPair, Fuel, Reduction, RewriteError, RewritingSystem, Rule,
    RuleId, SystemError,
};
pub use text::TextError;
pub use word::Word;
