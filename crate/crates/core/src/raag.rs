//! Right-angled Artin groups given by a defining graph: one commuting pair
//! of generators per edge.
//!
//! The seed system for such a group consists of the four signed commutation
//! rules per edge, oriented by the chosen order, plus the free reductions.
//! Completing it under a shortlex order produces systems whose created
//! rules all have the shape `u x -> x u` with `x` commuting letterwise with
//! `u`; rules created at step `n` have `n + 2` letters on each side.
//! [`verify_structure`] checks these facts on a recorded trace, and
//! [`raag_normal_form`] exploits the length law: to normalize a word of
//! length `L` only rules up to length `L` can ever apply, so completing
//! through step `L - 2` is enough even when the full system is infinite.
//!
//! When the graph is bipartite there is a shortcut: rank every signed
//! letter of one colour class above every signed letter of the other and
//! the seed system is already complete (see [`Coloring::letter_order`]).

use std::error::Error;
use std::fmt;

use crate::alphabet::{Alphabet, Letter, Sign};
use crate::completion::{CompletionConfig, CompletionOutcome, CompletionStatus, knuth_bendix};
use crate::embedding::EmbedError;
use crate::ordering::{LetterOrder, Orientation};
use crate::presentation::{Presentation, PresentationKind, Relation};
use crate::rewriting::{Ambiguity, Fuel, RewritingSystem, Rule, RuleId};
use crate::text::{self, TextError};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RaagError {
    SelfLoop {
        vertex: u32,
    },
    UnknownVertex {
        name: String,
    },
    /// The order interleaves the signed letters of two adjacent generators,
    /// so the four commutation rules of that edge would not orient
    /// consistently and the structural analysis breaks down.
    OrderNotEdgeSeparated {
        x: u32,
        y: u32,
    },
    ForeignLetter,
    InvalidColorList,
}

impl fmt::Display for RaagError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RaagError::SelfLoop { vertex } => write!(f, "self-loop on vertex #{vertex}"),
            RaagError::UnknownVertex { name } => write!(f, "unknown vertex `{name}`"),
            RaagError::OrderNotEdgeSeparated { x, y } => {
                write!(
                    f,
                    "order interleaves the letters of adjacent vertices #{x} and #{y}"
                )
            }
            RaagError::ForeignLetter => write!(f, "word uses a letter outside the graph"),
            RaagError::InvalidColorList => {
                write!(
                    f,
                    "class order must list the signed letters of its colour class exactly once"
                )
            }
        }
    }
}

impl Error for RaagError {}

/// A finite simple graph whose vertices are generators; each edge makes its
/// endpoints commute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningGraph {
    vertices: Alphabet,
    /// Normalized with the smaller index first.
    edges: std::collections::BTreeSet<(u32, u32)>,
}

impl DefiningGraph {
    pub fn new(
        vertices: Alphabet,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<DefiningGraph, RaagError> {
        let n = vertices.len() as u32;
        let mut set = std::collections::BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(RaagError::SelfLoop { vertex: a });
            }
            if a >= n || b >= n {
                return Err(RaagError::UnknownVertex {
                    name: format!("#{}", a.max(b)),
                });
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(DefiningGraph {
            vertices,
            edges: set,
        })
    }

    pub fn vertices(&self) -> &Alphabet {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        a != b && self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// True iff the vertices of `s` are pairwise adjacent. Empty sets and
    /// singletons count as cliques; repeated entries are ignored.
    pub fn is_clique(&self, s: &[u32]) -> bool {
        let set: std::collections::BTreeSet<u32> = s.iter().copied().collect();
        if set.iter().any(|&v| v as usize >= self.vertices.len()) {
            return false;
        }
        let vs: Vec<u32> = set.into_iter().collect();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if !self.has_edge(vs[i], vs[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// The group presentation: one relation `x y = y x` per edge.
    pub fn presentation(&self) -> Presentation {
        let relations = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (Letter::positive(a), Letter::positive(b));
                Relation {
                    left: Word::from(vec![x, y]),
                    right: Word::from(vec![y, x]),
                }
            })
            .collect();
        Presentation {
            alphabet: self.vertices.clone(),
            relations,
            kind: PresentationKind::Group,
        }
    }

    /// The seed system: per edge the four signed commutation rules oriented
    /// by `order`, then the free reductions for every generator.
    ///
    /// The order must rank the two signed letters of one endpoint of each
    /// edge above both signed letters of the other; otherwise the four
    /// rules of that edge would point in different directions.
    pub fn seed_system(&self, order: &LetterOrder) -> Result<RewritingSystem, RaagError> {
        let mut rs = RewritingSystem::new(self.vertices.clone(), Some(order.clone()));
        for &(a, b) in &self.edges {
            self.check_edge_separated(order, a, b)?;
            for sa in [Sign::Plus, Sign::Minus] {
                for sb in [Sign::Plus, Sign::Minus] {
                    let x = Letter {
                        generator: a,
                        sign: sa,
                    };
                    let y = Letter {
                        generator: b,
                        sign: sb,
                    };
                    let u = Word::from(vec![x, y]);
                    let v = Word::from(vec![y, x]);
                    let Orientation::Oriented { lhs, rhs } = order.orient(&u, &v) else {
                        unreachable!("distinct letters, distinct words")
                    };
                    rs.add_rule(lhs, rhs).expect("commutation rules are valid");
                }
            }
        }
        for g in self.vertices.gens() {
            let x = Letter::positive(g);
            rs.add_rule(Word::from(vec![x, x.inverse()]), Word::empty())
                .expect("free reduction is valid");
            rs.add_rule(Word::from(vec![x.inverse(), x]), Word::empty())
                .expect("free reduction is valid");
        }
        Ok(rs)
    }

    fn check_edge_separated(&self, order: &LetterOrder, a: u32, b: u32) -> Result<(), RaagError> {
        let ranks = |g: u32| {
            let plus = order.rank(Letter::positive(g));
            let minus = order.rank(Letter::negative(g));
            (plus.min(minus), plus.max(minus))
        };
        let (amin, amax) = ranks(a);
        let (bmin, bmax) = ranks(b);
        if amin > bmax || bmin > amax {
            Ok(())
        } else {
            Err(RaagError::OrderNotEdgeSeparated { x: a, y: b })
        }
    }

    /// Proper two-coloring by breadth-first search, or an odd closed path.
    ///
    /// Each component is rooted at its vertex of maximum degree (ties by
    /// declaration order) and the root is colored black.
    pub fn two_coloring(&self) -> ColoringOutcome {
        let n = self.vertices.len();
        let mut color: Vec<Option<ColorClass>> = vec![None; n];
        let mut parent: Vec<u32> = (0..n as u32).collect();
        let mut depth: Vec<usize> = vec![0; n];
        let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adjacency[a as usize].push(b);
            adjacency[b as usize].push(a);
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }

        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            // collect the component, then root it at the max-degree vertex
            let mut component = vec![start as u32];
            let mut seen = vec![false; n];
            seen[start] = true;
            let mut i = 0;
            while i < component.len() {
                let v = component[i] as usize;
                for &u in &adjacency[v] {
                    if !seen[u as usize] {
                        seen[u as usize] = true;
                        component.push(u);
                    }
                }
                i += 1;
            }
            let root = *component
                .iter()
                .max_by_key(|&&v| (self.degree(v), std::cmp::Reverse(v)))
                .expect("component is nonempty");

            color[root as usize] = Some(ColorClass::Black);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let vc = color[v as usize].expect("colored before enqueue");
                for &u in &adjacency[v as usize] {
                    match color[u as usize] {
                        None => {
                            color[u as usize] = Some(vc.other());
                            parent[u as usize] = v;
                            depth[u as usize] = depth[v as usize] + 1;
                            queue.push_back(u);
                        }
                        Some(uc) if uc == vc => {
                            return ColoringOutcome::OddCycle(odd_cycle(&parent, &depth, v, u));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let color = color
            .into_iter()
            .map(|c| c.expect("all vertices colored"))
            .collect();
        ColoringOutcome::Proper(Coloring { color })
    }

    /// Parses the graph file format:
    ///
    /// ```text
    /// vertices: a b c
    /// edge: a b
    /// edge: b c
    /// ```
    pub fn parse(input: &str) -> Result<DefiningGraph, TextError> {
        let mut vertices: Option<Alphabet> = None;
        let mut pending: Vec<(usize, String)> = Vec::new();
        for (line, content) in text::logical_lines(input) {
            let Some((key, value)) = text::split_key(content) else {
                return Err(TextError::UnexpectedLine {
                    line,
                    content: content.to_string(),
                });
            };
            match key {
                "vertices" => vertices = Some(Alphabet::new(value.split_whitespace())?),
                "edge" => pending.push((line, value.to_string())),
                _ => {
                    return Err(TextError::UnexpectedLine {
                        line,
                        content: content.to_string(),
                    });
                }
            }
        }
        let vertices = vertices.ok_or(TextError::MissingKey { key: "vertices" })?;
        let mut edges = Vec::new();
        for (line, value) in pending {
            let names: Vec<&str> = value.split_whitespace().collect();
            let [a, b] = names[..] else {
                return Err(TextError::InvalidValue {
                    line,
                    message: format!("edge needs exactly two vertices, got `{value}`"),
                });
            };
            let resolve = |name: &str| {
                vertices.index_of(name).ok_or(TextError::UnknownGenerator {
                    name: name.to_string(),
                })
            };
            edges.push((resolve(a)?, resolve(b)?));
        }
        DefiningGraph::new(vertices, edges).map_err(|e| TextError::InvalidValue {
            line: 0,
            message: e.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("vertices: {}\n", self.vertices);
        for &(a, b) in &self.edges {
            out.push_str(&format!(
                "edge: {} {}\n",
                self.vertices.name(a),
                self.vertices.name(b)
            ));
        }
        out
    }
}

/// Reconstructs the odd closed path exposed by a same-color edge `(v, u)`:
/// both tree paths up to the lowest common ancestor, joined through it.
fn odd_cycle(parent: &[u32], depth: &[usize], v: u32, u: u32) -> Vec<u32> {
    let mut pv = vec![v];
    let mut pu = vec![u];
    let (mut a, mut b) = (v, u);
    while depth[a as usize] > depth[b as usize] {
        a = parent[a as usize];
        pv.push(a);
    }
    while depth[b as usize] > depth[a as usize] {
        b = parent[b as usize];
        pu.push(b);
    }
    while a != b {
        a = parent[a as usize];
        pv.push(a);
        b = parent[b as usize];
        pu.push(b);
    }
    // pv runs v..=lca; append lca-exclusive path back down to u
    pv.extend(pu[..pu.len() - 1].iter().rev());
    pv
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorClass {
    Black,
    White,
}

impl ColorClass {
    pub fn other(self) -> ColorClass {
        match self {
            ColorClass::Black => ColorClass::White,
            ColorClass::White => ColorClass::Black,
        }
    }
}

impl fmt::Display for ColorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorClass::Black => write!(f, "black"),
            ColorClass::White => write!(f, "white"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringOutcome {
    Proper(Coloring),
    /// Vertices of an odd closed path, in order; consecutive entries and
    /// the wrap-around pair are edges.
    OddCycle(Vec<u32>),
}

/// A proper two-coloring of a defining graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    color: Vec<ColorClass>,
}

impl Coloring {
    pub fn color(&self, v: u32) -> ColorClass {
        self.color[v as usize]
    }

    pub fn class(&self, c: ColorClass) -> Vec<u32> {
        (0..self.color.len() as u32)
            .filter(|&v| self.color(v) == c)
            .collect()
    }

    /// The order that puts every signed letter of the black class above
    /// every signed letter of the white class. Within a class the optional
    /// lists give the order (greatest first) and must cover exactly the
    /// signed letters of that class; by default each class is interleaved
    /// in declaration order.
    ///
    /// Under the resulting order every commutation rule of the graph's
    /// seed system has a black lhs-leading letter, so no two commutation
    /// rules overlap and the seed system is already complete.
    pub fn letter_order(
        &self,
        alphabet: &Alphabet,
        black: Option<&[Letter]>,
        white: Option<&[Letter]>,
    ) -> Result<LetterOrder, RaagError> {
        let mut letters = Vec::with_capacity(alphabet.signed_count());
        for (class, supplied) in [(ColorClass::Black, black), (ColorClass::White, white)] {
            let default: Vec<Letter> = alphabet
                .signed_letters()
                .filter(|l| self.color(l.generator) == class)
                .collect();
            match supplied {
                None => letters.extend(default),
                Some(list) => {
                    let mut sorted: Vec<Letter> = list.to_vec();
                    sorted.sort_by_key(|l| l.code());
                    let mut expected = default.clone();
                    expected.sort_by_key(|l| l.code());
                    if sorted != expected {
                        return Err(RaagError::InvalidColorList);
                    }
                    letters.extend(list.iter().copied());
                }
            }
        }
        LetterOrder::from_letters_desc(alphabet, &letters).map_err(|_| RaagError::InvalidColorList)
    }

    /// One `color: <vertex> <black|white>` line per vertex.
    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        for g in alphabet.gens() {
            out.push_str(&format!("color: {} {}\n", alphabet.name(g), self.color(g)));
        }
        out
    }
}

/// True iff `rule` has the shape `u x -> x u` for a single letter `x` and a
/// nonempty `u = t1 t2 .. tk` such that `t1 x -> x t1` and `x ti -> ti x`
/// (for `i >= 2`) are rules of `re0`.
pub fn prefix_condition_holds(rule: &Rule, re0: &RewritingSystem) -> bool {
    if rule.lhs.len() < 2 || rule.rhs.len() != rule.lhs.len() {
        return false;
    }
    let letters = rule.lhs.letters();
    let x = letters[letters.len() - 1];
    let u = &letters[..letters.len() - 1];
    let mut expected_rhs = vec![x];
    expected_rhs.extend_from_slice(u);
    if rule.rhs.letters() != expected_rhs {
        return false;
    }
    let pair = |a: Letter, b: Letter| (Word::from(vec![a, b]), Word::from(vec![b, a]));
    let (lhs, rhs) = pair(u[0], x);
    if !re0.contains_pair(&lhs, &rhs) {
        return false;
    }
    for &t in &u[1..] {
        let (lhs, rhs) = pair(x, t);
        if !re0.contains_pair(&lhs, &rhs) {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionCheck {
    pub passed: bool,
    /// Rules violating the condition, when any.
    pub witnesses: Vec<RuleId>,
}

impl ConditionCheck {
    fn from_witnesses(witnesses: Vec<RuleId>) -> ConditionCheck {
        ConditionCheck {
            passed: witnesses.is_empty(),
            witnesses,
        }
    }
}

/// Structural facts checked over a completion run from a commutation seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    /// Every created rule has the shape `u x -> x u` and satisfies the
    /// prefix condition against the seed.
    pub rule_shape: ConditionCheck,
    /// Every created rule's right parent is a seed rule.
    pub right_parent_seed: ConditionCheck,
    /// Rules created at step `n` have `n + 2` letters on each side.
    pub step_lengths: ConditionCheck,
    /// Every rule-creating overlap has an overlapping word of length 1.
    pub overlap_length_one: ConditionCheck,
    /// Left side positive iff right side positive, for every rule except
    /// the free reductions (whose right side is empty).
    pub positive_both_sides: ConditionCheck,
}

impl StructureReport {
    pub fn all_passed(&self) -> bool {
        self.rule_shape.passed
            && self.right_parent_seed.passed
            && self.step_lengths.passed
            && self.overlap_length_one.passed
            && self.positive_both_sides.passed
    }
}

fn is_free_reduction(rule: &Rule) -> bool {
    rule.rhs.is_empty()
        && rule.lhs.len() == 2
        && rule.lhs.letters()[1] == rule.lhs.letters()[0].inverse()
}

/// Verifies the expected structure of a completion run against its seed.
/// Needs a recorded trace for the overlap-length condition.
pub fn verify_structure(
    out: &CompletionOutcome,
    re0: &RewritingSystem,
) -> Result<StructureReport, EmbedError> {
    let Some(trace) = &out.trace else {
        return Err(EmbedError::MissingTrace);
    };

    let mut shape = Vec::new();
    let mut right_parent = Vec::new();
    let mut lengths = Vec::new();
    let mut positive = Vec::new();
    for rule in out.system.rules() {
        if rule.step > 0 {
            if !prefix_condition_holds(rule, re0) {
                shape.push(rule.id);
            }
            match rule.parents {
                Some((_, right)) if out.system.rule(right).step == 0 => {}
                _ => right_parent.push(rule.id),
            }
            let want = rule.step as usize + 2;
            if rule.lhs.len() != want || rule.rhs.len() != want {
                lengths.push(rule.id);
            }
        }
        if !is_free_reduction(rule) && rule.positive != rule.rhs.is_positive() {
            positive.push(rule.id);
        }
    }

    let mut overlap = Vec::new();
    for step in trace {
        for ev in &step.events {
            let crate::completion::EventOutcome::NewRule(id) = ev.outcome else {
                continue;
            };
            let ok = matches!(&ev.ambiguity, Ambiguity::Overlap { v, .. } if v.len() == 1);
            if !ok {
                overlap.push(id);
            }
        }
    }
    overlap.dedup();

    Ok(StructureReport {
        rule_shape: ConditionCheck::from_witnesses(shape),
        right_parent_seed: ConditionCheck::from_witnesses(right_parent),
        step_lengths: ConditionCheck::from_witnesses(lengths),
        overlap_length_one: ConditionCheck::from_witnesses(overlap),
        positive_both_sides: ConditionCheck::from_witnesses(positive),
    })
}

fn budget_for_steps(steps: u32) -> CompletionConfig {
    CompletionConfig {
        max_steps: steps,
        max_rules: usize::MAX,
        max_rule_length: 0,
        record_trace: false,
    }
}

/// Normal form of `w` in the group defined by `g`, under the complete
/// (possibly infinite) system for `order`.
///
/// The word is freely reduced, the seed is completed through step
/// `len - 2`, and the word is reduced under the resulting rules. Rules
/// created later have more than `len` letters on each side and can never
/// apply to the word or to any of its (never longer) descendants, so the
/// truncation is exact.
pub fn raag_normal_form(
    g: &DefiningGraph,
    order: &LetterOrder,
    w: &Word,
) -> Result<Word, RaagError> {
    let mut solver = RaagSolver::new(g.clone(), order.clone())?;
    solver.normal_form(w)
}

/// Reusable word-problem solver for one graph and order: keeps the deepest
/// completion computed so far and extends it on demand.
#[derive(Debug, Clone)]
pub struct RaagSolver {
    order: LetterOrder,
    seed: RewritingSystem,
    system: RewritingSystem,
    completed_steps: u32,
    /// Set once a run finishes; no deeper completion can add anything.
    finished: bool,
}

impl RaagSolver {
    pub fn new(graph: DefiningGraph, order: LetterOrder) -> Result<RaagSolver, RaagError> {
        let seed = graph.seed_system(&order)?;
        Ok(RaagSolver {
            order,
            system: seed.clone(),
            finished: false,
            seed,
            completed_steps: 0,
        })
    }

    pub fn seed(&self) -> &RewritingSystem {
        &self.seed
    }

    /// The system completed as deeply as any query so far required.
    pub fn system(&self) -> &RewritingSystem {
        &self.system
    }

    pub fn normal_form(&mut self, w: &Word) -> Result<Word, RaagError> {
        if !w
            .letters()
            .iter()
            .all(|&l| self.seed.alphabet().contains_letter(l))
        {
            return Err(RaagError::ForeignLetter);
        }
        let reduced = w.freely_reduced();
        let steps = reduced.len().saturating_sub(2) as u32;
        self.ensure_steps(steps);
        Ok(self
            .system
            .normal_form(&reduced, Fuel::Unlimited)
            .expect("order-backed reduction terminates"))
    }

    /// Completes the seed through at least `steps` steps. A system
    /// completed deeper than needed is fine: its extra rules are longer
    /// than any word they would be asked about.
    pub fn ensure_steps(&mut self, steps: u32) {
        if self.finished || steps <= self.completed_steps {
            return;
        }
        let out = knuth_bendix(&self.seed, &self.order, &budget_for_steps(steps))
            .expect("seed system is order-backed");
        self.finished = out.status == CompletionStatus::Complete;
        self.system = out.system;
        self.completed_steps = steps;
    }
}
