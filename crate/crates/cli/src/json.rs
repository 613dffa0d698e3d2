//! JSON renderings of the library's report types. Field names are stable;
//! objects serialize with sorted keys, so output is deterministic.

use serde_json::{Value, json};

use rewr_core::{
    AdianReport, Ambiguity, CPlusStatus, CompletionOutcome, CompletionStatus, EmbeddingVerdict,
    EventOutcome, MonoidComparison, ProvenanceStatus, RewritingSystem, Rule, VerdictStatus,
};

pub fn rule_value(rs: &RewritingSystem, rule: &Rule) -> Value {
    json!({
        "id": rule.id.0,
        "step": rule.step,
        "lhs": rule.lhs.display(rs.alphabet()).to_string(),
        "rhs": rule.rhs.display(rs.alphabet()).to_string(),
        "parents": rule.parents.map(|(a, b)| vec![a.0, b.0]),
        "positive": rule.positive,
    })
}

pub fn rules_value(rs: &RewritingSystem) -> Value {
    Value::Array(rs.rules().iter().map(|r| rule_value(rs, r)).collect())
}

pub fn status_value(status: &CompletionStatus) -> Value {
    match status {
        CompletionStatus::Complete => json!("complete"),
        CompletionStatus::BudgetExhausted(kind) => {
            json!({ "budget_exhausted": kind.to_string() })
        }
    }
}

pub fn trace_value(out: &CompletionOutcome) -> Value {
    let Some(trace) = &out.trace else {
        return Value::Null;
    };
    let alphabet = out.system.alphabet();
    let steps: Vec<Value> = trace
        .iter()
        .map(|step| {
            let events: Vec<Value> = step
                .events
                .iter()
                .map(|ev| {
                    let (kind, left, right, pos) = match &ev.ambiguity {
                        Ambiguity::Overlap { left, right, u, .. } => {
                            ("overlap", left.0, right.0, u.len())
                        }
                        Ambiguity::Inclusion {
                            inner, outer, u, ..
                        } => ("inclusion", outer.0, inner.0, u.len()),
                    };
                    let (outcome, new_rule_id) = match &ev.outcome {
                        EventOutcome::Resolved => ("resolved", Value::Null),
                        EventOutcome::NewRule(id) => ("new_rule", json!(id.0)),
                    };
                    json!({
                        "step": step.step_index,
                        "kind": kind,
                        "left_rule": left,
                        "right_rule": right,
                        "pos": pos,
                        "overlap_len": ev.ambiguity.overlap_len(&out.system),
                        "cp_left": ev.cp_normalized.0.display(alphabet).to_string(),
                        "cp_right": ev.cp_normalized.1.display(alphabet).to_string(),
                        "outcome": outcome,
                        "new_rule_id": new_rule_id,
                    })
                })
                .collect();
            json!({ "step": step.step_index, "events": events })
        })
        .collect();
    Value::Array(steps)
}

pub fn c_plus_value(status: &CPlusStatus) -> Value {
    match status {
        CPlusStatus::Holds => json!("holds"),
        CPlusStatus::Violations(ids) => {
            json!({ "violations": ids.iter().map(|id| id.0).collect::<Vec<_>>() })
        }
        CPlusStatus::NotApplicable => json!("not_applicable"),
    }
}

pub fn provenance_value(status: &Option<ProvenanceStatus>) -> Value {
    match status {
        None => Value::Null,
        Some(ProvenanceStatus::Holds) => json!("holds"),
        Some(ProvenanceStatus::Counterexample(id)) => json!({ "counterexample": id.0 }),
    }
}

pub fn verdict_value(verdict: &EmbeddingVerdict) -> Value {
    let (status, reason) = match &verdict.status {
        VerdictStatus::Embeds => ("embeds", Value::Null),
        VerdictStatus::Inconclusive(reason) => ("inconclusive", json!(reason.to_string())),
        VerdictStatus::NotApplicable(reason) => ("not_applicable", json!(reason.to_string())),
    };
    let positive_rule_ids: Value = match &verdict.positive_system {
        None => Value::Null,
        Some(rs) => json!(rs.rules().iter().map(|r| r.id.0).collect::<Vec<_>>()),
    };
    json!({
        "status": status,
        "reason": reason,
        "c_plus": c_plus_value(&verdict.c_plus),
        "provenance": provenance_value(&verdict.provenance),
        "positive_rule_ids": positive_rule_ids,
    })
}

pub fn adian_value(report: &AdianReport) -> Value {
    json!({
        "left_cycle": report.left_has_cycle,
        "right_cycle": report.right_has_cycle,
        "embeds_by_adian": report.embeds_by_adian,
    })
}

pub fn monoid_comparison_value(cmp: &MonoidComparison, alphabet: &rewr_core::Alphabet) -> Value {
    json!({
        "checked_words": cmp.checked_words,
        "undecided": cmp.undecided,
        "mismatch": cmp.mismatch.as_ref().map(|(a, b)| {
            vec![a.display(alphabet).to_string(), b.display(alphabet).to_string()]
        }),
        "consistent_within_caps": cmp.consistent(),
    })
}
