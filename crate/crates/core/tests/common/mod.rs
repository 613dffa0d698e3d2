//! Shared fixtures and independent oracles for the integration suites.
//!
//! Everything here is deliberately written without touching the library's
//! internals: dumb quadratic scans and plain DFS, so the fast paths have
//! something honest to disagree with.

#![allow(dead_code)]

use rewr_core::{Alphabet, Ambiguity, DefiningGraph, Letter, RewritingSystem, Sign, Word};

/// The ten-rule complete system for the three-strand braid group on
/// generators a, b, c with a^3 = b^2 = c. Terminating, but not under any
/// shortlex order, so the file carries no order line.
pub const B3_SYSTEM: &str = "\
gens: a b c
rule: a^-1 -> c^-1 a a
rule: b^-1 -> c^-1 b
rule: a a a -> c
rule: b b -> c
rule: a c -> c a
rule: a c^-1 -> c^-1 a
rule: b c -> c b
rule: b c^-1 -> c^-1 b
rule: c c^-1 -> 1
rule: c^-1 c -> 1
";

pub const B3_PRESENTATION: &str = "\
kind: group
gens: a b c
rel: a a a = c
rel: b b = c
";

/// Small deterministic generator so randomized suites reproduce exactly.
pub struct XorShift64 {
    state: u64,
}

impl XorShift64 {
    pub fn new(seed: u64) -> XorShift64 {
        XorShift64 { state: seed | 1 }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        x
    }

    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }
}

pub fn random_positive_word(rng: &mut XorShift64, generators: u32, max_len: usize) -> Word {
    let len = rng.below(max_len as u64 + 1) as usize;
    (0..len)
        .map(|_| Letter::positive(rng.below(generators as u64) as u32))
        .collect()
}

pub fn random_signed_word(rng: &mut XorShift64, generators: u32, max_len: usize) -> Word {
    let len = rng.below(max_len as u64 + 1) as usize;
    (0..len)
        .map(|_| Letter {
            generator: rng.below(generators as u64) as u32,
            sign: if rng.coin() { Sign::Plus } else { Sign::Minus },
        })
        .collect()
}

/// A random simple graph on 2..=max_vertices vertices named g0, g1, ...
pub fn random_graph(rng: &mut XorShift64, max_vertices: u32) -> DefiningGraph {
    let n = 2 + rng.below(max_vertices as u64 - 1) as u32;
    let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let alphabet = Alphabet::new(names).unwrap();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.coin() {
                edges.push((i, j));
            }
        }
    }
    DefiningGraph::new(alphabet, edges).unwrap()
}

/// Canonical key for one ambiguity, comparable across enumerators:
/// `(first id, second id, split position, kind)` where kind 0 is an
/// overlap keyed by (left, right) and kind 1 an inclusion keyed by
/// (outer, inner).
pub type AmbKey = (u32, u32, usize, u8);

pub fn ambiguity_key(a: &Ambiguity) -> AmbKey {
    match a {
        Ambiguity::Overlap { left, right, u, .. } => (left.0, right.0, u.len(), 0),
        Ambiguity::Inclusion {
            inner, outer, u, ..
        } => (outer.0, inner.0, u.len(), 1),
    }
}

/// Quadratic reference enumerator: every ordered pair of rules, every
/// split position, letters compared one by one.
pub fn brute_force_ambiguities(rs: &RewritingSystem) -> Vec<AmbKey> {
    let mut out = Vec::new();
    for r1 in rs.rules() {
        for r2 in rs.rules() {
            let l1 = r1.lhs.letters();
            let l2 = r2.lhs.letters();
            // overlaps: proper nonempty suffix of l1 = proper nonempty prefix of l2
            for split in 1..l1.len() {
                let v_len = l1.len() - split;
                if v_len >= l2.len() {
                    continue;
                }
                let mut matches = true;
                for k in 0..v_len {
                    if l1[split + k] != l2[k] {
                        matches = false;
                        break;
                    }
                }
                if matches {
                    out.push((r1.id.0, r2.id.0, split, 0));
                }
            }
            // inclusions of l2 in l1, distinct rules
            if r1.id != r2.id && l2.len() <= l1.len() {
                for pos in 0..=l1.len() - l2.len() {
                    let mut matches = true;
                    for k in 0..l2.len() {
                        if l1[pos + k] != l2[k] {
                            matches = false;
                            break;
                        }
                    }
                    if matches {
                        out.push((r1.id.0, r2.id.0, pos, 1));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Plain DFS cycle detection on an undirected multigraph, tracking the edge
/// used to reach each vertex so parallel edges and self-loops count.
pub fn dfs_multigraph_has_cycle(vertices: &[u32], edges: &[(u32, u32)]) -> bool {
    use std::collections::BTreeMap;
    let mut adjacency: BTreeMap<u32, Vec<(u32, usize)>> = BTreeMap::new();
    for &v in vertices {
        adjacency.entry(v).or_default();
    }
    for (eid, &(a, b)) in edges.iter().enumerate() {
        if a == b {
            return true;
        }
        adjacency.entry(a).or_default().push((b, eid));
        adjacency.entry(b).or_default().push((a, eid));
    }
    let mut visited: BTreeMap<u32, bool> = BTreeMap::new();
    let keys: Vec<u32> = adjacency.keys().copied().collect();
    for start in keys {
        if visited.get(&start).copied().unwrap_or(false) {
            continue;
        }
        let mut stack: Vec<(u32, usize)> = vec![(start, usize::MAX)];
        visited.insert(start, true);
        while let Some((v, in_edge)) = stack.pop() {
            for &(next, eid) in &adjacency[&v] {
                if eid == in_edge {
                    continue;
                }
                if visited.get(&next).copied().unwrap_or(false) {
                    return true;
                }
                visited.insert(next, true);
                stack.push((next, eid));
            }
        }
    }
    false
}
