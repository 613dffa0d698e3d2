//! String rewriting systems: oriented rules over a free monoid, deterministic
//! reduction to normal form, ambiguity enumeration, and local-confluence
//! checking.
//!
//! Reduction strategy is fixed: the leftmost matching position wins, and
//! among rules matching there, the lowest rule id. On a confluent system the
//! choice cannot change normal forms; fixing it makes every run reproducible.

use std::collections::BTreeSet;
use std::error::Error;
use std::fmt;

use crate::alphabet::Alphabet;
use crate::ordering::{LetterOrder, Orientation};
use crate::presentation::Presentation;
use crate::text::{self, TextError};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RuleId(pub u32);

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An oriented rule `lhs -> rhs` with provenance metadata: the completion
/// step that created it (0 for seed rules) and, for created rules, the pair
/// of rules whose ambiguity produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub id: RuleId,
    pub lhs: Word,
    pub rhs: Word,
    pub step: u32,
    pub parents: Option<(RuleId, RuleId)>,
    /// Cached `lhs.is_positive()`.
    pub positive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SystemError {
    EmptyLhs,
    TrivialRule,
    DuplicateRule,
    NotDecreasing,
    ForeignLetter,
}

impl fmt::Display for SystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemError::EmptyLhs => write!(f, "rule left-hand side is empty"),
            SystemError::TrivialRule => write!(f, "rule has identical sides"),
            SystemError::DuplicateRule => write!(f, "rule already present"),
            SystemError::NotDecreasing => {
                write!(f, "rule does not decrease under the system order")
            }
            SystemError::ForeignLetter => write!(f, "rule uses a letter outside the alphabet"),
        }
    }
}

impl Error for SystemError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteError {
    FuelExhausted,
}

impl fmt::Display for RewriteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewriteError::FuelExhausted => write!(f, "reduction fuel exhausted"),
        }
    }
}

impl Error for RewriteError {}

/// Bound on the number of rule applications in one reduction.
/// `Unlimited` is safe on order-backed systems, where every application
/// strictly decreases shortlex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fuel {
    Unlimited,
    Bounded(u64),
}

impl Fuel {
    fn consume(&mut self) -> bool {
        match self {
            Fuel::Unlimited => true,
            Fuel::Bounded(n) => {
                if *n == 0 {
                    false
                } else {
                    *n -= 1;
                    true
                }
            }
        }
    }
}

/// One rewriting step: the result plus which rule fired where.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub word: Word,
    pub rule: RuleId,
    pub position: usize,
}

/// A place where two left-hand sides interact. `Overlap` is a nonempty
/// proper suffix of one lhs equal to a nonempty proper prefix of another
/// (self-overlaps included); `Inclusion` is one lhs occurring inside a
/// distinct rule's lhs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ambiguity {
    Overlap {
        left: RuleId,
        right: RuleId,
        /// `left.lhs = u v`, `right.lhs = v w`; `u`, `v`, `w` all nonempty.
        u: Word,
        v: Word,
        w: Word,
    },
    Inclusion {
        inner: RuleId,
        outer: RuleId,
        /// `outer.lhs = u inner.lhs w`.
        u: Word,
        w: Word,
    },
}

impl Ambiguity {
    /// The two rules involved, in `(left, right)` order for overlaps and
    /// `(inner, outer)` order for inclusions.
    pub fn rule_ids(&self) -> (RuleId, RuleId) {
        match self {
            Ambiguity::Overlap { left, right, .. } => (*left, *right),
            Ambiguity::Inclusion { inner, outer, .. } => (*inner, *outer),
        }
    }

    /// Length of the overlapping word, or of the included lhs.
    pub fn overlap_len(&self, rs: &RewritingSystem) -> usize {
        match self {
            Ambiguity::Overlap { v, .. } => v.len(),
            Ambiguity::Inclusion { inner, .. } => rs.rule(*inner).lhs.len(),
        }
    }

    /// Both one-step descendants of the superposed word.
    ///
    /// For an overlap `u v w` with `uv -> r1` and `vw -> r2` the pair is
    /// `(r1 w, u r2)`; for an inclusion of `v -> r1` inside `uvw -> r2` it
    /// is `(u r1 w, r2)`.
    pub fn critical_pair(&self, rs: &RewritingSystem) -> CriticalPair {
        match self {
            Ambiguity::Overlap {
                left, right, u, w, ..
            } => {
                let r1 = &rs.rule(*left).rhs;
                let r2 = &rs.rule(*right).rhs;
                CriticalPair {
                    left: r1.concat(w),
                    right: u.concat(r2),
                    source: self.clone(),
                }
            }
            Ambiguity::Inclusion { inner, outer, u, w } => {
                let r1 = &rs.rule(*inner).rhs;
                let r2 = &rs.rule(*outer).rhs;
                CriticalPair {
                    left: u.concat(r1).concat(w),
                    right: r2.clone(),
                    source: self.clone(),
                }
            }
        }
    }

    fn sort_key(&self) -> (u32, u32, usize, u8) {
        match self {
            Ambiguity::Overlap { left, right, u, .. } => (left.0, right.0, u.len(), 0),
            Ambiguity::Inclusion {
                inner, outer, u, ..
            } => (outer.0, inner.0, u.len(), 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair {
    pub left: Word,
    pub right: Word,
    pub source: Ambiguity,
}

/// Outcome of the local-confluence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Confluence {
    Confluent,
    /// The first critical pair (in enumeration order) whose two sides have
    /// distinct normal forms.
    Witness {
        pair: CriticalPair,
        nf_left: Word,
        nf_right: Word,
    },
}

/// A set of rules with an index over left-hand sides.
///
/// Rules are append-only and kept in ascending id order. When an order is
/// attached, every rule must be strictly decreasing under it, which makes
/// the system terminating.
#[derive(Debug, Clone)]
pub struct RewritingSystem {
    alphabet: Alphabet,
    order: Option<LetterOrder>,
    rules: Vec<Rule>,
    pairs: BTreeSet<(Word, Word)>,
    /// `Letter::code` of the first lhs letter -> positions into `rules`.
    buckets: Vec<Vec<usize>>,
    next_id: u32,
}

impl RewritingSystem {
    pub fn new(alphabet: Alphabet, order: Option<LetterOrder>) -> RewritingSystem {
        if let Some(o) = &order {
            assert_eq!(
                o.signed_count(),
                alphabet.signed_count(),
                "order and alphabet sizes differ"
            );
        }
        let buckets = vec![Vec::new(); alphabet.signed_count()];
        RewritingSystem {
            alphabet,
            order,
            rules: Vec::new(),
            pairs: BTreeSet::new(),
            buckets,
            next_id: 0,
        }
    }

    /// Orients every relation of a presentation into a seed system.
    /// Trivial relations are skipped; duplicate oriented pairs collapse.
    pub fn from_presentation(
        p: &Presentation,
        order: LetterOrder,
    ) -> Result<RewritingSystem, SystemError> {
        let mut rs = RewritingSystem::new(p.alphabet.clone(), Some(order));
        for rel in &p.relations {
            let orientation = rs
                .order
                .as_ref()
                .expect("constructed with an order")
                .orient(&rel.left, &rel.right);
            match orientation {
                Orientation::Trivial => continue,
                Orientation::Oriented { lhs, rhs } => {
                    if rs.pairs.contains(&(lhs.clone(), rhs.clone())) {
                        continue;
                    }
                    rs.push_rule(lhs, rhs, 0, None)?;
                }
            }
        }
        Ok(rs)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> Option<&LetterOrder> {
        self.order.as_ref()
    }

    /// Replaces the attached order without revalidating existing rules;
    /// callers must check decrease themselves.
    pub(crate) fn set_order(&mut self, order: Option<LetterOrder>) {
        self.order = order;
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn get_rule(&self, id: RuleId) -> Option<&Rule> {
        self.rules
            .binary_search_by_key(&id.0, |r| r.id.0)
            .ok()
            .map(|pos| &self.rules[pos])
    }

    /// Panics if the id is unknown.
    pub fn rule(&self, id: RuleId) -> &Rule {
        self.get_rule(id).expect("unknown rule id")
    }

    pub fn contains_pair(&self, lhs: &Word, rhs: &Word) -> bool {
        self.pairs.contains(&(lhs.clone(), rhs.clone()))
    }

    /// Adds a seed rule (step 0, no parents).
    pub fn add_rule(&mut self, lhs: Word, rhs: Word) -> Result<RuleId, SystemError> {
        self.push_rule(lhs, rhs, 0, None)
    }

    pub(crate) fn push_rule(
        &mut self,
        lhs: Word,
        rhs: Word,
        step: u32,
        parents: Option<(RuleId, RuleId)>,
    ) -> Result<RuleId, SystemError> {
        if lhs.is_empty() {
            return Err(SystemError::EmptyLhs);
        }
        if lhs == rhs {
            return Err(SystemError::TrivialRule);
        }
        let in_range = lhs
            .letters()
            .iter()
            .chain(rhs.letters())
            .all(|&l| self.alphabet.contains_letter(l));
        if !in_range {
            return Err(SystemError::ForeignLetter);
        }
        if self.pairs.contains(&(lhs.clone(), rhs.clone())) {
            return Err(SystemError::DuplicateRule);
        }
        if let Some(o) = &self.order
            && o.shortlex_cmp(&lhs, &rhs) != std::cmp::Ordering::Greater
        {
            return Err(SystemError::NotDecreasing);
        }
        let id = RuleId(self.next_id);
        self.next_id += 1;
        let positive = lhs.is_positive();
        self.pairs.insert((lhs.clone(), rhs.clone()));
        self.buckets[lhs.letters()[0].code()].push(self.rules.len());
        self.rules.push(Rule {
            id,
            lhs,
            rhs,
            step,
            parents,
            positive,
        });
        Ok(id)
    }

    /// The subsystem of rules satisfying `keep`, ids preserved.
    pub fn filtered(&self, keep: impl Fn(&Rule) -> bool) -> RewritingSystem {
        let mut rs = RewritingSystem::new(self.alphabet.clone(), self.order.clone());
        for rule in self.rules.iter().filter(|r| keep(r)) {
            rs.pairs.insert((rule.lhs.clone(), rule.rhs.clone()));
            rs.buckets[rule.lhs.letters()[0].code()].push(rs.rules.len());
            rs.rules.push(rule.clone());
        }
        rs.next_id = rs.rules.last().map_or(0, |r| r.id.0 + 1);
        rs
    }

    /// A presentation-only view dropping every rule whose left-hand side
    /// is rewritten by the rest of the system: rules whose lhs properly
    /// contains another rule's lhs, or shares its lhs with an
    /// earlier-created rule. The survivors generate the same congruence.
    ///
    /// Step and parent metadata on the full system stay authoritative;
    /// verdicts and provenance checks must not run on the pruned view.
    pub fn pruned(&self) -> RewritingSystem {
        let occurs = |needle: &Word, hay: &Word| {
            (0..=hay.len().saturating_sub(needle.len()))
                .any(|pos| &hay.letters()[pos..pos + needle.len()] == needle.letters())
        };
        self.filtered(|rule| {
            !self.rules.iter().any(|other| {
                other.id != rule.id
                    && ((other.lhs.len() < rule.lhs.len() && occurs(&other.lhs, &rule.lhs))
                        || (other.lhs == rule.lhs && other.id < rule.id))
            })
        })
    }

    /// All `(position, rule)` matches of any lhs inside `w`, sorted by
    /// position and then rule id.
    pub fn matches(&self, w: &Word) -> Vec<(usize, RuleId)> {
        let mut out = Vec::new();
        for pos in 0..w.len() {
            for &rpos in &self.buckets[w.letters()[pos].code()] {
                let rule = &self.rules[rpos];
                if self.lhs_matches_at(&rule.lhs, w, pos) {
                    out.push((pos, rule.id));
                }
            }
        }
        out
    }

    fn lhs_matches_at(&self, lhs: &Word, w: &Word, pos: usize) -> bool {
        pos + lhs.len() <= w.len() && &w.letters()[pos..pos + lhs.len()] == lhs.letters()
    }

    /// Applies exactly one rule at the leftmost matching position, lowest
    /// rule id first; `None` if `w` is irreducible.
    pub fn reduce_once(&self, w: &Word) -> Option<Reduction> {
        for pos in 0..w.len() {
            for &rpos in &self.buckets[w.letters()[pos].code()] {
                // bucket is ascending by creation order = id order
                if self.lhs_matches_at(&self.rules[rpos].lhs, w, pos) {
                    let rule = &self.rules[rpos];
                    return Some(Reduction {
                        word: w.splice(pos, rule.lhs.len(), &rule.rhs),
                        rule: rule.id,
                        position: pos,
                    });
                }
            }
        }
        None
    }

    /// Iterates `reduce_once` until irreducible.
    pub fn normal_form(&self, w: &Word, fuel: Fuel) -> Result<Word, RewriteError> {
        let mut current = w.clone();
        let mut fuel = fuel;
        while let Some(red) = self.reduce_once(&current) {
            if !fuel.consume() {
                return Err(RewriteError::FuelExhausted);
            }
            current = red.word;
        }
        Ok(current)
    }

    /// Normal form plus the sequence of rule ids applied.
    pub fn normal_form_traced(
        &self,
        w: &Word,
        fuel: Fuel,
    ) -> Result<(Word, Vec<RuleId>), RewriteError> {
        let mut current = w.clone();
        let mut applied = Vec::new();
        let mut fuel = fuel;
        while let Some(red) = self.reduce_once(&current) {
            if !fuel.consume() {
                return Err(RewriteError::FuelExhausted);
            }
            applied.push(red.rule);
            current = red.word;
        }
        Ok((current, applied))
    }

    /// Enumerates every overlap and inclusion ambiguity, in ascending
    /// (rule id pair, split position) order.
    pub fn ambiguities(&self) -> Vec<Ambiguity> {
        let mut out = Vec::new();
        for r1 in &self.rules {
            for r2 in &self.rules {
                self.pair_ambiguities(r1, r2, &mut out);
            }
        }
        out.sort_by_key(|a| a.sort_key());
        out
    }

    /// Ambiguities whose newer rule was created at `newest`, assuming every
    /// rule's step is at most `newest`. Same order as [`ambiguities`], but
    /// pairs of strictly older rules are never touched.
    ///
    /// [`ambiguities`]: RewritingSystem::ambiguities
    pub(crate) fn ambiguities_with_newest_step(&self, newest: u32) -> Vec<Ambiguity> {
        let fresh: Vec<&Rule> = self.rules.iter().filter(|r| r.step == newest).collect();
        let mut out = Vec::new();
        for r1 in &fresh {
            for r2 in &self.rules {
                self.pair_ambiguities(r1, r2, &mut out);
            }
        }
        for r1 in self.rules.iter().filter(|r| r.step != newest) {
            for r2 in &fresh {
                self.pair_ambiguities(r1, r2, &mut out);
            }
        }
        out.sort_by_key(|a| a.sort_key());
        out
    }

    fn pair_ambiguities(&self, r1: &Rule, r2: &Rule, out: &mut Vec<Ambiguity>) {
        let l1 = &r1.lhs;
        let l2 = &r2.lhs;
        // overlaps: v a nonempty proper suffix of l1 and proper prefix of l2
        let max_v = l1.len().min(l2.len()).saturating_sub(1);
        for v_len in 1..=max_v {
            let split = l1.len() - v_len;
            if l1.letters()[split..] == l2.letters()[..v_len] {
                out.push(Ambiguity::Overlap {
                    left: r1.id,
                    right: r2.id,
                    u: l1.subword(0, split),
                    v: l1.subword(split, l1.len()),
                    w: l2.subword(v_len, l2.len()),
                });
            }
        }
        // inclusions of l2 inside l1, distinct rules only
        if r1.id != r2.id && l2.len() <= l1.len() {
            for pos in 0..=l1.len() - l2.len() {
                if &l1.letters()[pos..pos + l2.len()] == l2.letters() {
                    out.push(Ambiguity::Inclusion {
                        inner: r2.id,
                        outer: r1.id,
                        u: l1.subword(0, pos),
                        w: l1.subword(pos + l2.len(), l1.len()),
                    });
                }
            }
        }
    }

    /// Checks whether every critical pair reduces to a common normal form.
    ///
    /// Sound as a confluence check only for terminating systems; `fuel`
    /// bounds each individual reduction for systems without an order.
    pub fn check_local_confluence(&self, fuel: Fuel) -> Result<Confluence, RewriteError> {
        for amb in self.ambiguities() {
            let cp = amb.critical_pair(self);
            let nf_left = self.normal_form(&cp.left, fuel)?;
            let nf_right = self.normal_form(&cp.right, fuel)?;
            if nf_left != nf_right {
                return Ok(Confluence::Witness {
                    pair: cp,
                    nf_left,
                    nf_right,
                });
            }
        }
        Ok(Confluence::Confluent)
    }

    /// Parses the system file format:
    ///
    /// ```text
    /// gens: a b c
    /// order: a > a^-1 > b > b^-1 > c > c^-1   # optional
    /// rule: a c -> c a
    /// ```
    ///
    /// A `kind:` header is accepted and ignored so presentation headers can
    /// be reused.
    pub fn parse(input: &str) -> Result<RewritingSystem, TextError> {
        let mut alphabet: Option<Alphabet> = None;
        let mut order_spec: Option<(usize, String)> = None;
        let mut pending: Vec<(usize, String, String)> = Vec::new();

        for (line, content) in text::logical_lines(input) {
            let Some((key, value)) = text::split_key(content) else {
                return Err(TextError::UnexpectedLine {
                    line,
                    content: content.to_string(),
                });
            };
            match key {
                "kind" => {}
                "gens" => alphabet = Some(Alphabet::new(value.split_whitespace())?),
                "order" => order_spec = Some((line, value.to_string())),
                "rule" => {
                    let Some((lhs, rhs)) = value.split_once("->") else {
                        return Err(TextError::InvalidValue {
                            line,
                            message: format!("rule `{value}` has no `->`"),
                        });
                    };
                    pending.push((line, lhs.trim().to_string(), rhs.trim().to_string()));
                }
                _ => {
                    return Err(TextError::UnexpectedLine {
                        line,
                        content: content.to_string(),
                    });
                }
            }
        }

        let alphabet = alphabet.ok_or(TextError::MissingKey { key: "gens" })?;
        let order = match order_spec {
            Some((_line, spec)) => Some(LetterOrder::parse_spec(&alphabet, &spec)?),
            None => None,
        };
        let mut rs = RewritingSystem::new(alphabet, order);
        for (line, lhs, rhs) in pending {
            let lhs = Word::parse(&lhs, rs.alphabet())?;
            let rhs = Word::parse(&rhs, rs.alphabet())?;
            rs.add_rule(lhs, rhs).map_err(|e| TextError::InvalidValue {
                line,
                message: e.to_string(),
            })?;
        }
        Ok(rs)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("gens: {}\n", self.alphabet));
        if let Some(o) = &self.order {
            out.push_str(&format!("order: {}\n", o.display_spec(&self.alphabet)));
        }
        for rule in &self.rules {
            out.push_str(&format!(
                "rule: {} -> {}\n",
                rule.lhs.display(&self.alphabet),
                rule.rhs.display(&self.alphabet)
            ));
        }
        out
    }

    /// `id: lhs -> rhs` for one rule, as used in reports.
    pub fn display_rule(&self, id: RuleId) -> String {
        let rule = self.rule(id);
        format!(
            "{}: {} -> {}",
            rule.id,
            rule.lhs.display(&self.alphabet),
            rule.rhs.display(&self.alphabet)
        )
    }
}
