//! Knuth-Bendix completion for string rewriting systems.
//!
//! The run is organised in steps. Step `n` examines every ambiguity among
//! the current rules that involves at least one rule created at step
//! `n - 1` (step 1 examines all seed ambiguities), in ascending
//! (rule id pair, split position) order. Both words of each critical pair
//! are reduced to their normal forms under all rules present at that
//! moment, including rules created earlier in the same step; equal normal
//! forms resolve the pair, unequal ones are oriented by the order and
//! added as a new rule. Reducing against the growing set matters: an
//! overlap between two rules created at the previous step resolves using
//! the rule that the leftward of them forms with a seed rule, and under
//! this processing order that rule is always created first. It also keeps
//! every rule's sides irreducible modulo all earlier rules, so no created
//! left-hand side contains another and inclusion ambiguities never arise
//! among created rules. A step that adds nothing ends the run as
//! `Complete`. Budgets bound runs on systems whose completion is infinite.
//!
//! Rules are never deleted or interreduced, so the step at which a rule was
//! created and the ambiguity that produced it stay meaningful for the
//! provenance checks built on top of the trace.

use std::error::Error;
use std::fmt;

use crate::ordering::{LetterOrder, Orientation};
use crate::rewriting::{Ambiguity, Fuel, RewritingSystem, Rule, RuleId};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionConfig {
    pub max_steps: u32,
    pub max_rules: usize,
    /// 0 means unlimited.
    pub max_rule_length: usize,
    pub record_trace: bool,
}

impl Default for CompletionConfig {
    fn default() -> CompletionConfig {
        CompletionConfig {
            max_steps: 10,
            max_rules: 10_000,
            max_rule_length: 32,
            record_trace: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetKind {
    MaxSteps,
    MaxRules,
    MaxRuleLength,
}

impl fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BudgetKind::MaxSteps => write!(f, "max steps"),
            BudgetKind::MaxRules => write!(f, "max rules"),
            BudgetKind::MaxRuleLength => write!(f, "max rule length"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionStatus {
    Complete,
    BudgetExhausted(BudgetKind),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EventOutcome {
    Resolved,
    NewRule(RuleId),
}

/// One critical pair processed during a step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionEvent {
    pub ambiguity: Ambiguity,
    /// The raw critical pair, before normalization.
    pub cp_before: (Word, Word),
    /// Both words reduced under the rules present when the pair was
    /// processed.
    pub cp_normalized: (Word, Word),
    pub outcome: EventOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionStep {
    /// 1-based; seed rules count as step 0.
    pub step_index: u32,
    pub events: Vec<CompletionEvent>,
}

#[derive(Debug, Clone)]
pub struct CompletionOutcome {
    pub status: CompletionStatus,
    pub system: RewritingSystem,
    /// Present iff the run recorded a trace.
    pub trace: Option<Vec<CompletionStep>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompletionError {
    InvalidConfig(String),
    /// A seed rule is not strictly decreasing under the supplied order.
    SeedNotDecreasing {
        rule: RuleId,
    },
    AlphabetMismatch,
}

impl fmt::Display for CompletionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompletionError::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            CompletionError::SeedNotDecreasing { rule } => {
                write!(f, "seed rule {rule} does not decrease under the order")
            }
            CompletionError::AlphabetMismatch => {
                write!(f, "order does not cover the system alphabet")
            }
        }
    }
}

impl Error for CompletionError {}

/// Runs completion on `seed` under `order`.
///
/// The returned system contains the seed rules unchanged (step 0) followed
/// by the created rules in creation order, and generates the same
/// congruence as the seed.
pub fn knuth_bendix(
    seed: &RewritingSystem,
    order: &LetterOrder,
    cfg: &CompletionConfig,
) -> Result<CompletionOutcome, CompletionError> {
    if cfg.max_steps == 0 {
        return Err(CompletionError::InvalidConfig(
            "max_steps must be at least 1".into(),
        ));
    }
    if cfg.max_rules == 0 {
        return Err(CompletionError::InvalidConfig(
            "max_rules must be at least 1".into(),
        ));
    }
    if order.signed_count() != seed.alphabet().signed_count() {
        return Err(CompletionError::AlphabetMismatch);
    }
    for rule in seed.rules() {
        if order.shortlex_cmp(&rule.lhs, &rule.rhs) != std::cmp::Ordering::Greater {
            return Err(CompletionError::SeedNotDecreasing { rule: rule.id });
        }
    }

    let mut system = seed.clone();
    system.set_order(Some(order.clone()));
    let mut trace: Option<Vec<CompletionStep>> = cfg.record_trace.then(Vec::new);
    let mut status = CompletionStatus::BudgetExhausted(BudgetKind::MaxSteps);

    'steps: for step in 1..=cfg.max_steps {
        let mut events: Vec<CompletionEvent> = Vec::new();
        let mut created = 0usize;

        let ambiguities: Vec<Ambiguity> = system.ambiguities_with_newest_step(step - 1);

        for amb in ambiguities {
            let cp = amb.critical_pair(&system);
            let nf_left = system
                .normal_form(&cp.left, Fuel::Unlimited)
                .expect("order-backed reduction terminates");
            let nf_right = system
                .normal_form(&cp.right, Fuel::Unlimited)
                .expect("order-backed reduction terminates");

            let outcome = if nf_left == nf_right {
                EventOutcome::Resolved
            } else {
                let Orientation::Oriented { lhs, rhs } = order.orient(&nf_left, &nf_right) else {
                    unreachable!("distinct words always orient")
                };
                if cfg.max_rule_length > 0 && lhs.len() > cfg.max_rule_length {
                    status = CompletionStatus::BudgetExhausted(BudgetKind::MaxRuleLength);
                    if let Some(t) = &mut trace {
                        t.push(CompletionStep {
                            step_index: step,
                            events,
                        });
                    }
                    break 'steps;
                }
                if system.len() >= cfg.max_rules {
                    status = CompletionStatus::BudgetExhausted(BudgetKind::MaxRules);
                    if let Some(t) = &mut trace {
                        t.push(CompletionStep {
                            step_index: step,
                            events,
                        });
                    }
                    break 'steps;
                }
                // both sides are irreducible under every rule present, so in
                // particular the pair cannot duplicate an existing rule
                let (left_id, right_id) = amb.rule_ids();
                let id = system
                    .push_rule(lhs, rhs, step, Some((left_id, right_id)))
                    .expect("validated rule");
                created += 1;
                EventOutcome::NewRule(id)
            };

            if cfg.record_trace {
                events.push(CompletionEvent {
                    ambiguity: amb,
                    cp_before: (cp.left, cp.right),
                    cp_normalized: (nf_left, nf_right),
                    outcome,
                });
            }
        }

        if let Some(t) = &mut trace {
            t.push(CompletionStep {
                step_index: step,
                events,
            });
        }
        if created == 0 {
            status = CompletionStatus::Complete;
            break;
        }
    }

    Ok(CompletionOutcome {
        status,
        system,
        trace,
    })
}

impl CompletionOutcome {
    /// Rules created at step `n`, in creation order; `n = 0` gives the seeds.
    pub fn rules_added_at_step(&self, n: u32) -> Vec<&Rule> {
        self.system.rules().iter().filter(|r| r.step == n).collect()
    }

    /// Number of created (non-seed) rules.
    pub fn created_count(&self) -> usize {
        self.system.rules().iter().filter(|r| r.step > 0).count()
    }

    /// The line-oriented trace log, one line per processed critical pair.
    ///
    /// Fields: `step`, `kind`, `left_rule`, `right_rule` (for inclusions:
    /// outer then inner), `pos` (start of the second lhs in the superposed
    /// word), `overlap_len`, `cp_left`/`cp_right` (the normalized pair),
    /// `outcome`, `new_rule_id` (`-` when nothing was created). Empty when
    /// no trace was recorded.
    pub fn log_lines(&self) -> Vec<String> {
        let Some(trace) = &self.trace else {
            return Vec::new();
        };
        let alphabet = self.system.alphabet();
        let mut out = Vec::new();
        for step in trace {
            for ev in &step.events {
                let (kind, first, second, pos) = match &ev.ambiguity {
                    Ambiguity::Overlap { left, right, u, .. } => {
                        ("overlap", left.0, right.0, u.len())
                    }
                    Ambiguity::Inclusion {
                        inner, outer, u, ..
                    } => ("inclusion", outer.0, inner.0, u.len()),
                };
                let outcome = match &ev.outcome {
                    EventOutcome::Resolved => ("resolved", "-".to_string()),
                    EventOutcome::NewRule(id) => ("new_rule", id.to_string()),
                };
                out.push(format!(
                    "step={} kind={} left_rule={} right_rule={} pos={} overlap_len={} cp_left=\"{}\" cp_right=\"{}\" outcome={} new_rule_id={}",
                    step.step_index,
                    kind,
                    first,
                    second,
                    pos,
                    ev.ambiguity.overlap_len(&self.system),
                    ev.cp_normalized.0.display(alphabet),
                    ev.cp_normalized.1.display(alphabet),
                    outcome.0,
                    outcome.1,
                ));
            }
        }
        out
    }
}
