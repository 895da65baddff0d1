//! Constructive encoders, one per representability theorem. Each builds a
//! word whose decode under the scheme's language returns the input graph.
//!
//! All encoders relabel vertices to `1..n` by sorted label internally, so
//! "ascending" enumerations are deterministic, and emit original labels.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graphs::{validate_witness, ClassWitness, Graph, GraphClass, HostGraph, Indexed};
use crate::words::{Letter, Word};

fn to_word(gi: &Indexed, idxs: &[usize]) -> Word {
    idxs.iter().map(|&i| gi.letters[i].clone()).collect()
}

/// Palindrome scheme: w_1 = 11, w_i = i·u_i·w_{i-1}·i·u_iᴿ with u_i the
/// ascending non-neighbors of i below i. Decode under `pal`.
pub fn encode_palindrome(g: &Graph) -> Word {
    let gi = g.indexed();
    let mut w: Vec<usize> = vec![0, 0];
    for i in 1..gi.n() {
        let u: Vec<usize> = (0..i).filter(|&j| !gi.adj[i][j]).collect();
        let mut next = vec![i];
        next.extend(&u);
        next.extend(&w);
        next.push(i);
        next.extend(u.iter().rev());
        w = next;
    }
    to_word(&gi, &w)
}

/// Doubled-palindrome scheme: like the palindrome scheme but every letter
/// of u_i is written twice, seeded with w_1 = 11·(1 2 ⋯ n)·11. Decode
/// under `detp`.
pub fn encode_detp(g: &Graph) -> Word {
    let gi = g.indexed();
    let n = gi.n();
    let mut w: Vec<usize> = vec![0, 0];
    w.extend(0..n);
    w.extend([0, 0]);
    for i in 1..n {
        let u: Vec<usize> = (0..i)
            .filter(|&j| !gi.adj[i][j])
            .flat_map(|j| [j, j])
            .collect();
        let mut next = vec![i, i];
        next.extend(&u);
        next.extend(&w);
        next.extend([i, i]);
        next.extend(u.iter().rev());
        w = next;
    }
    to_word(&gi, &w)
}

fn copy_shape(gi: &Indexed, keep_neighbors: bool) -> Vec<usize> {
    let n = gi.n();
    let us: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..i).filter(|&j| gi.adj[i][j] == keep_neighbors).collect())
        .collect();
    let mut w = Vec::new();
    for (i, u) in us.iter().enumerate() {
        w.extend(u);
        w.push(i);
    }
    for (i, u) in us.iter().enumerate() {
        w.push(i);
        w.extend(u);
    }
    w
}

/// Copy scheme: w = u_1 1 ⋯ u_n n · 1 u_1 ⋯ n u_n with u_i the ascending
/// non-neighbors of i below i. Decode under `copy`.
pub fn encode_copy(g: &Graph) -> Word {
    let gi = g.indexed();
    to_word(&gi, &copy_shape(&gi, false))
}

/// Sparse scheme: the copy shape with u_i the ascending neighbors of i
/// below i, which is the copy construction of the complement. Decode under
/// `not(copy)`. The length is exactly 2n + 2m.
pub fn encode_sparse(g: &Graph) -> Word {
    let gi = g.indexed();
    to_word(&gi, &copy_shape(&gi, true))
}

/// Lyndon scheme: w = 1³2³⋯n³ · v_1²u_1 ⋯ v_n²u_n with v_i = i(i+1)⋯n and
/// u_i = i²·x_i·i²·y_i, x_i the ascending neighbors above i, y_i the
/// ascending non-neighbors above i. Decode under `lyndon`.
pub fn encode_lyndon(g: &Graph) -> Word {
    let gi = g.indexed();
    let n = gi.n();
    let mut w = Vec::new();
    for i in 0..n {
        w.extend([i, i, i]);
    }
    for i in 0..n {
        let v: Vec<usize> = (i..n).collect();
        w.extend(&v);
        w.extend(&v);
        w.extend([i, i]);
        w.extend(((i + 1)..n).filter(|&j| gi.adj[i][j]));
        w.extend([i, i]);
        w.extend(((i + 1)..n).filter(|&j| !gi.adj[i][j]));
    }
    to_word(&gi, &w)
}

/// Dyck scheme for comparability graphs. The order must be a valid witness
/// (edge iff comparable). A linear extension with smallest-label
/// tie-breaks fixes the enumeration; z lists V, z_v = y_v·v·x_v with x_v
/// the upper set of v, and w = z·z_{v_1}⋯z_{v_n}. Decode under `dyck`.
pub fn encode_dyck(g: &Graph, order: &BTreeSet<(Letter, Letter)>) -> Result<Word> {
    let witness = ClassWitness::Order(order.clone());
    if !validate_witness(g, &GraphClass::Comparability, &witness) {
        return Err(Error::invalid(
            "order is not a transitive orientation of the graph",
        ));
    }
    let gi = g.indexed();
    let n = gi.n();
    let pos: BTreeMap<&Letter, usize> = gi.letters.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let mut above = vec![vec![false; n]; n];
    for (u, v) in order {
        above[pos[u]][pos[v]] = true;
    }

    let mut lin = Vec::new();
    let mut placed = vec![false; n];
    while lin.len() < n {
        let v = (0..n)
            .find(|&v| !placed[v] && (0..n).all(|u| placed[u] || !above[u][v]))
            .expect("a validated strict order always has a minimal element");
        placed[v] = true;
        lin.push(v);
    }

    let mut w = lin.clone();
    for &v in &lin {
        let x: Vec<usize> = lin.iter().copied().filter(|&t| above[v][t]).collect();
        w.extend(lin.iter().copied().filter(|&t| t != v && !above[v][t]));
        w.push(v);
        w.extend(&x);
    }
    Ok(to_word(&gi, &w))
}

fn checked_sides<'a>(
    g: &Graph,
    a: &'a BTreeSet<Letter>,
    b: &'a BTreeSet<Letter>,
) -> Result<(Vec<&'a Letter>, Vec<&'a Letter>)> {
    let witness = ClassWitness::Bipartition {
        a: a.clone(),
        b: b.clone(),
    };
    if !validate_witness(g, &GraphClass::Bipartite, &witness) {
        return Err(Error::invalid("parts do not form a bipartition of the graph"));
    }
    // the construction iterates over side A, which must not be empty
    let (a, b) = if a.is_empty() { (b, a) } else { (a, b) };
    Ok((a.iter().collect(), b.iter().collect()))
}

/// Alternating-palindrome scheme for bipartite graphs: with A-side word
/// v_0 = a_1⋯a_s, w = v_0·u_1·v_1⋯u_s·v_s where u_i = x_i·a_i·y_i splits B
/// into neighbors x_i and non-neighbors y_i of a_i, and v_i drops a_i from
/// v_0. Decode under `and(classical,pal)`.
pub fn encode_bipartite_palindrome(
    g: &Graph,
    a: &BTreeSet<Letter>,
    b: &BTreeSet<Letter>,
) -> Result<Word> {
    let (a_side, b_side) = checked_sides(g, a, b)?;
    let mut letters: Vec<Letter> = a_side.iter().map(|l| (*l).clone()).collect();
    for ai in &a_side {
        for bj in &b_side {
            if g.has_edge(ai, bj) {
                letters.push((*bj).clone());
            }
        }
        letters.push((*ai).clone());
        for bj in &b_side {
            if !g.has_edge(ai, bj) {
                letters.push((*bj).clone());
            }
        }
        for other in &a_side {
            if other != ai {
                letters.push((*other).clone());
            }
        }
    }
    Ok(letters.into_iter().collect())
}

/// Lyndon scheme for bipartite graphs: w = a_1³⋯a_s³ · b_1²⋯b_t² ·
/// block_1⋯block_s · b_1²⋯b_t², block_i = a_i²·y_i·y_i·a_i² with y_i the
/// ascending neighbors of a_i. Decode under `lyndon-odd`.
///
/// The closing b-run is load-bearing: without it the cross projections end
/// in 00, which merges cyclically with the opening zeros and hands the
/// smallest rotation to a different start, so edge projections stop being
/// Lyndon words (see the module tests for the two-vertex failure).
pub fn encode_bipartite_lyndon(
    g: &Graph,
    a: &BTreeSet<Letter>,
    b: &BTreeSet<Letter>,
) -> Result<Word> {
    let (a_side, b_side) = checked_sides(g, a, b)?;
    let mut letters: Vec<Letter> = Vec::new();
    for ai in &a_side {
        for _ in 0..3 {
            letters.push((*ai).clone());
        }
    }
    let b_run = |letters: &mut Vec<Letter>| {
        for bj in &b_side {
            letters.push((*bj).clone());
            letters.push((*bj).clone());
        }
    };
    b_run(&mut letters);
    for ai in &a_side {
        let y: Vec<&&Letter> = b_side.iter().filter(|bj| g.has_edge(ai, bj)).collect();
        letters.push((*ai).clone());
        letters.push((*ai).clone());
        for _ in 0..2 {
            for bj in &y {
                letters.push((**bj).clone());
            }
        }
        letters.push((*ai).clone());
        letters.push((*ai).clone());
    }
    b_run(&mut letters);
    Ok(letters.into_iter().collect())
}

/// Host side of the mod scheme: a plain modulus (proper-coloring mode) or
/// a host graph on residues (homomorphism mode).
#[derive(Debug, Clone)]
pub enum ModHost {
    Clique(u32),
    Host(HostGraph),
}

impl ModHost {
    fn modulus(&self) -> u32 {
        match self {
            ModHost::Clique(k) => *k,
            ModHost::Host(h) => h.modulus(),
        }
    }

    fn allows(&self, a: u32, b: u32) -> bool {
        match self {
            ModHost::Clique(_) => a != b,
            ModHost::Host(h) => h.has_edge(a, b),
        }
    }
}

/// Mod scheme: w = x·u_1·1ᵏ·u_2·2ᵏ⋯u_n·nᵏ · x·1ᵏ·u_1·2ᵏ·u_2⋯nᵏ·u_n where
/// x writes each vertex i with its residue f(i) as a repeat count in 1..=k
/// (residue 0 becomes k repeats) and u_i writes tᵏ for every non-neighbor
/// t below i. Decode under `copy-mod:k` (clique mode) or `hgraph` (host
/// mode).
pub fn encode_mod_scheme(
    g: &Graph,
    host: &ModHost,
    f: &BTreeMap<Letter, u32>,
) -> Result<Word> {
    let k = host.modulus();
    if k == 0 {
        return Err(Error::invalid("mod scheme needs a modulus of at least 1"));
    }
    for v in g.vertices() {
        if !f.contains_key(v) {
            return Err(Error::invalid(format!("vertex {v} has no residue")));
        }
    }
    for (u, v) in g.edges() {
        if !host.allows(f[u] % k, f[v] % k) {
            return Err(Error::invalid(format!(
                "map is not valid for this host: edge {u} {v} lands on residues {} {}",
                f[u] % k,
                f[v] % k
            )));
        }
    }
    let gi = g.indexed();
    let n = gi.n();
    let kk = k as usize;
    let repeats: Vec<usize> = gi
        .letters
        .iter()
        .map(|v| {
            let r = (f[v] % k) as usize;
            if r == 0 {
                kk
            } else {
                r
            }
        })
        .collect();
    let x: Vec<usize> = (0..n).flat_map(|i| std::iter::repeat(i).take(repeats[i])).collect();
    let us: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..i)
                .filter(|&j| !gi.adj[i][j])
                .flat_map(|j| std::iter::repeat(j).take(kk))
                .collect()
        })
        .collect();
    let mut w = x.clone();
    for (i, u) in us.iter().enumerate() {
        w.extend(u);
        w.extend(std::iter::repeat(i).take(kk));
    }
    w.extend(&x);
    for (i, u) in us.iter().enumerate() {
        w.extend(std::iter::repeat(i).take(kk));
        w.extend(u);
    }
    Ok(to_word(&gi, &w))
}

/// Cluster scheme: part j's vertices are each written j times, parts in
/// the given order. Decode under `balanced` or `nested`.
pub fn encode_cluster(g: &Graph, parts: &[Vec<Letter>]) -> Result<Word> {
    let witness = ClassWitness::Partition(parts.to_vec());
    if !validate_witness(g, &GraphClass::Cluster, &witness) {
        return Err(Error::invalid("parts are not a partition into cliques"));
    }
    let mut letters = Vec::new();
    for (j, part) in parts.iter().enumerate() {
        let mut sorted = part.clone();
        sorted.sort();
        for v in sorted {
            for _ in 0..=j {
                letters.push(v.clone());
            }
        }
    }
    Ok(letters.into_iter().collect())
}

/// Union-of-co-interval scheme: family i contributes its letters in
/// endpoint order with each first occurrence written i times (so letters
/// of family i occur i+1 times). Decode under `nested`: edges join
/// equally-frequent letters whose position intervals are disjoint.
pub fn encode_interval_union(families: &[Vec<(Letter, i64, i64)>]) -> Result<Word> {
    if families.is_empty() {
        return Err(Error::invalid("need at least one interval family"));
    }
    let mut all_letters = BTreeSet::new();
    let mut word = Vec::new();
    for (idx, family) in families.iter().enumerate() {
        if family.is_empty() {
            return Err(Error::invalid(format!("interval family {idx} is empty")));
        }
        let mut endpoints: Vec<(i64, &Letter)> = Vec::new();
        for (v, l, r) in family {
            if !all_letters.insert(v.clone()) {
                return Err(Error::invalid(format!("letter {v} used twice")));
            }
            if l >= r {
                return Err(Error::invalid(format!("interval of {v} is empty: [{l}, {r}]")));
            }
            endpoints.push((*l, v));
            endpoints.push((*r, v));
        }
        endpoints.sort_by_key(|&(p, _)| p);
        for window in endpoints.windows(2) {
            if window[0].0 == window[1].0 {
                return Err(Error::invalid(format!(
                    "family {idx} repeats endpoint {}",
                    window[0].0
                )));
            }
        }
        let mut seen = BTreeSet::new();
        for (_, v) in endpoints {
            let reps = if seen.insert(v.clone()) { idx + 1 } else { 1 };
            for _ in 0..reps {
                word.push(v.clone());
            }
        }
    }
    Ok(word.into_iter().collect())
}
