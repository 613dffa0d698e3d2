//! Brute-force equivalence oracle.
//!
//! Explores the congruence class of a word by applying every relation of a
//! presentation in both directions at every position, breadth first. Slow
//! and cap-bounded, but completely independent of the rewriting machinery,
//! which is the point: it is the reference the fast paths are tested
//! against.

use std::collections::{BTreeSet, VecDeque};

use crate::presentation::Presentation;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BfsCaps {
    /// Words longer than this are discarded during the search.
    pub max_len: usize,
    /// Give up once the visited set would exceed this many words.
    pub max_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BfsOutcome {
    /// The closure under cap-bounded moves.
    Closed {
        class: BTreeSet<Word>,
        /// True when some applicable move was discarded for exceeding the
        /// length cap. An untruncated closure is the entire congruence
        /// class, so non-membership is decided; a truncated one only
        /// proves membership.
        truncated: bool,
    },
    CapExceeded,
}

/// One-step neighbours of `w`: every replacement of one side of one
/// relation by the other, at every position, both directions. A relation
/// side equal to the empty word matches at every boundary of `w`, so its
/// counterpart can be inserted anywhere. Returns true when an applicable
/// move was dropped because its result would exceed `max_len`.
fn neighbours(p: &Presentation, w: &Word, max_len: usize, out: &mut Vec<Word>) -> bool {
    let mut truncated = false;
    out.clear();
    for rel in &p.relations {
        for (from, to) in [(&rel.left, &rel.right), (&rel.right, &rel.left)] {
            if from.is_empty() {
                if w.len() + to.len() <= max_len {
                    for pos in 0..=w.len() {
                        out.push(w.splice(pos, 0, to));
                    }
                } else if !to.is_empty() {
                    truncated = true;
                }
                continue;
            }
            if from.len() > w.len() {
                continue;
            }
            let new_len = w.len() - from.len() + to.len();
            for pos in 0..=w.len() - from.len() {
                if &w.letters()[pos..pos + from.len()] == from.letters() {
                    if new_len > max_len {
                        truncated = true;
                    } else {
                        out.push(w.splice(pos, from.len(), to));
                    }
                }
            }
        }
    }
    truncated
}

/// Breadth-first closure of `{w}` under the relations of `p`, discarding
/// words longer than `caps.max_len`.
pub fn equivalence_class(p: &Presentation, w: &Word, caps: BfsCaps) -> BfsOutcome {
    let mut visited: BTreeSet<Word> = BTreeSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    let mut truncated = false;
    visited.insert(w.clone());
    queue.push_back(w.clone());
    let mut scratch = Vec::new();
    while let Some(current) = queue.pop_front() {
        truncated |= neighbours(p, &current, caps.max_len, &mut scratch);
        for next in scratch.drain(..) {
            if visited.contains(&next) {
                continue;
            }
            if visited.len() >= caps.max_count {
                return BfsOutcome::CapExceeded;
            }
            visited.insert(next.clone());
            queue.push_back(next);
        }
    }
    BfsOutcome::Closed {
        class: visited,
        truncated,
    }
}

/// Decides `w1 ~ w2` by searching from `w1`.
///
/// `Some(true)` as soon as `w2` is reached; `Some(false)` when the closure
/// finishes without reaching it and nothing was discarded for length (the
/// closure then is the whole class); `None` when a cap got in the way.
pub fn equivalent(p: &Presentation, w1: &Word, w2: &Word, caps: BfsCaps) -> Option<bool> {
    if w1 == w2 {
        return Some(true);
    }
    let mut visited: BTreeSet<Word> = BTreeSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    let mut truncated = false;
    visited.insert(w1.clone());
    queue.push_back(w1.clone());
    let mut scratch = Vec::new();
    while let Some(current) = queue.pop_front() {
        truncated |= neighbours(p, &current, caps.max_len, &mut scratch);
        for next in scratch.drain(..) {
            if next == *w2 {
                return Some(true);
            }
            if visited.contains(&next) {
                continue;
            }
            if visited.len() >= caps.max_count {
                return None;
            }
            visited.insert(next.clone());
            queue.push_back(next);
        }
    }
    if truncated { None } else { Some(false) }
}
