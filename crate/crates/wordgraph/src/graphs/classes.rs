//! Brute-force class recognizers. Each search returns a witness that
//! [`validate_witness`] can check with independent code.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graphs::{ClassWitness, Graph, GraphClass, HostGraph, Indexed};
use crate::words::Letter;

/// Vertex-count cap for the exponential searches (comparability, colorings,
/// homomorphisms, interval models).
pub const SEARCH_BOUND: usize = 10;

pub fn recognize(g: &Graph, class: &GraphClass) -> Result<bool> {
    Ok(find_structure(g, class)?.is_some())
}

/// Recognizes and returns a verifying witness on success.
pub fn find_structure(g: &Graph, class: &GraphClass) -> Result<Option<ClassWitness>> {
    match class {
        GraphClass::Bipartite => Ok(bipartition(g)),
        GraphClass::Cobipartite => Ok(bipartition(&g.complement())),
        GraphClass::Split => Ok(split_parts(g)),
        GraphClass::Cluster => Ok(cluster_parts(g).map(ClassWitness::Partition)),
        GraphClass::CompleteMultipartite => {
            Ok(cluster_parts(&g.complement()).map(ClassWitness::Partition))
        }
        GraphClass::Comparability => {
            check_bound(g, "transitive orientation search")?;
            Ok(transitive_orientation(g))
        }
        GraphClass::KColorable(k) => {
            check_bound(g, "coloring search")?;
            Ok(coloring(g, *k).map(ClassWitness::Coloring))
        }
        GraphClass::HColorable { host, .. } => {
            check_bound(g, "homomorphism search")?;
            Ok(homomorphism(g, host).map(ClassWitness::Homomorphism))
        }
        GraphClass::CoInterval => {
            check_bound(g, "interval model search")?;
            Ok(interval_model(&g.complement()).map(|model| order_of_model(&model)))
        }
    }
}

fn check_bound(g: &Graph, what: &str) -> Result<()> {
    if g.n() > SEARCH_BOUND {
        return Err(Error::limit(format!(
            "{what} limited to {SEARCH_BOUND} vertices, got {}",
            g.n()
        )));
    }
    Ok(())
}

/// Checks a witness against a graph. The checker shares no code with the
/// searchers above.
pub fn validate_witness(g: &Graph, class: &GraphClass, w: &ClassWitness) -> bool {
    match (class, w) {
        (GraphClass::Bipartite, ClassWitness::Bipartition { a, b }) => {
            partitions_vertices(g, [a, b].into_iter())
                && g.edges()
                    .iter()
                    .all(|(u, v)| a.contains(u) != a.contains(v))
        }
        (GraphClass::Cobipartite, ClassWitness::Bipartition { a, b }) => {
            partitions_vertices(g, [a, b].into_iter())
                && is_clique(g, a)
                && is_clique(g, b)
        }
        (GraphClass::Split, ClassWitness::SplitParts { clique, independent }) => {
            partitions_vertices(g, [clique, independent].into_iter())
                && is_clique(g, clique)
                && is_independent(g, independent)
        }
        (GraphClass::Cluster, ClassWitness::Partition(parts)) => {
            validate_partition(g, parts, true)
        }
        (GraphClass::CompleteMultipartite, ClassWitness::Partition(parts)) => {
            validate_partition(g, parts, false)
        }
        (GraphClass::Comparability, ClassWitness::Order(o)) => validate_order(g, o),
        (GraphClass::CoInterval, ClassWitness::Order(o)) => {
            validate_order(g, o) && two_plus_two_free(o)
        }
        (GraphClass::KColorable(k), ClassWitness::Coloring(f)) => {
            let all_mapped = g.vertices().iter().all(|v| f.contains_key(v))
                && f.keys().all(|v| g.has_vertex(v));
            let palette: BTreeSet<u32> = f.values().copied().collect();
            all_mapped
                && palette.len() <= *k as usize
                && g.edges().iter().all(|(u, v)| f[u] != f[v])
        }
        (GraphClass::HColorable { host, .. }, ClassWitness::Homomorphism(f)) => {
            g.vertices().iter().all(|v| f.contains_key(v))
                && f.keys().all(|v| g.has_vertex(v))
                && f.values().all(|&r| r < host.modulus())
                && g.edges().iter().all(|(u, v)| host.has_edge(f[u], f[v]))
        }
        _ => false,
    }
}

fn partitions_vertices<'a>(g: &Graph, sides: impl Iterator<Item = &'a BTreeSet<Letter>>) -> bool {
    let mut seen = BTreeSet::new();
    let mut total = 0usize;
    for side in sides {
        for v in side {
            if !g.has_vertex(v) || !seen.insert(v.clone()) {
                return false;
            }
            total += 1;
        }
    }
    total == g.n()
}

fn is_clique(g: &Graph, side: &BTreeSet<Letter>) -> bool {
    let vs: Vec<&Letter> = side.iter().collect();
    for i in 0..vs.len() {
        for j in (i + 1)..vs.len() {
            if !g.has_edge(vs[i], vs[j]) {
                return false;
            }
        }
    }
    true
}

fn is_independent(g: &Graph, side: &BTreeSet<Letter>) -> bool {
    let vs: Vec<&Letter> = side.iter().collect();
    for i in 0..vs.len() {
        for j in (i + 1)..vs.len() {
            if g.has_edge(vs[i], vs[j]) {
                return false;
            }
        }
    }
    true
}

// parts must partition V; edges lie within parts (cliques = true) or
// exactly across parts (cliques = false).
fn validate_partition(g: &Graph, parts: &[Vec<Letter>], cliques: bool) -> bool {
    let mut seen = BTreeSet::new();
    for part in parts {
        if part.is_empty() {
            return false;
        }
        for v in part {
            if !g.has_vertex(v) || !seen.insert(v.clone()) {
                return false;
            }
        }
    }
    if seen.len() != g.n() {
        return false;
    }
    let part_of: BTreeMap<&Letter, usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, p)| p.iter().map(move |v| (v, i)))
        .collect();
    for i in 0..g.vertices().len() {
        for j in (i + 1)..g.vertices().len() {
            let (u, v) = (&g.vertices()[i], &g.vertices()[j]);
            let same = part_of[u] == part_of[v];
            let edge = g.has_edge(u, v);
            if cliques && edge != same {
                return false;
            }
            if !cliques && edge == same {
                return false;
            }
        }
    }
    true
}

fn validate_order(g: &Graph, o: &BTreeSet<(Letter, Letter)>) -> bool {
    for (u, v) in o {
        if u == v || !g.has_vertex(u) || !g.has_vertex(v) {
            return false;
        }
        if o.contains(&(v.clone(), u.clone())) {
            return false;
        }
    }
    // transitivity
    for (u, v) in o {
        for (x, w) in o {
            if x == v && !o.contains(&(u.clone(), w.clone())) {
                return false;
            }
        }
    }
    // edge iff comparable
    for i in 0..g.vertices().len() {
        for j in (i + 1)..g.vertices().len() {
            let (u, v) = (g.vertices()[i].clone(), g.vertices()[j].clone());
            let comparable =
                o.contains(&(u.clone(), v.clone())) || o.contains(&(v.clone(), u.clone()));
            if comparable != g.has_edge(&u, &v) {
                return false;
            }
        }
    }
    true
}

// Interval orders are exactly the 2+2-free orders: no a<b and c<d with
// neither a<d nor c<b.
fn two_plus_two_free(o: &BTreeSet<(Letter, Letter)>) -> bool {
    for (a, b) in o {
        for (c, d) in o {
            if !o.contains(&(a.clone(), d.clone())) && !o.contains(&(c.clone(), b.clone())) {
                return false;
            }
        }
    }
    true
}

fn bipartition(g: &Graph) -> Option<ClassWitness> {
    let gi = g.indexed();
    let n = gi.n();
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        // the smallest vertex of each component lands on side a
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &gi.neighbors[v] {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    let pick = |s: u8| -> BTreeSet<Letter> {
        (0..n)
            .filter(|&v| side[v] == s)
            .map(|v| gi.letters[v].clone())
            .collect()
    };
    Some(ClassWitness::Bipartition {
        a: pick(0),
        b: pick(1),
    })
}

// Degree-sequence test: with degrees sorted non-increasing and
// m = max{i : d_i >= i-1}, the graph is split iff
// sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, and then the m vertices of
// highest degree form the clique.
fn split_parts(g: &Graph) -> Option<ClassWitness> {
    let mut by_degree: Vec<(usize, &Letter)> =
        g.vertices().iter().map(|v| (g.degree(v), v)).collect();
    by_degree.sort_by(|(da, va), (db, vb)| db.cmp(da).then(va.cmp(vb)));
    let d: Vec<usize> = by_degree.iter().map(|(deg, _)| *deg).collect();
    let n = d.len();
    let m = (1..=n).filter(|&i| d[i - 1] >= i - 1).max().unwrap();
    let left: usize = d[..m].iter().sum();
    let right: usize = m * (m - 1) + d[m..].iter().sum::<usize>();
    if left != right {
        return None;
    }
    Some(ClassWitness::SplitParts {
        clique: by_degree[..m].iter().map(|(_, v)| (*v).clone()).collect(),
        independent: by_degree[m..].iter().map(|(_, v)| (*v).clone()).collect(),
    })
}

fn cluster_parts(g: &Graph) -> Option<Vec<Vec<Letter>>> {
    let gi = g.indexed();
    let n = gi.n();
    let mut comp = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = parts.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &gi.neighbors[v] {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        parts.push(members);
    }
    // a cluster graph is a disjoint union of cliques
    for part in &parts {
        for i in 0..part.len() {
            for j in (i + 1)..part.len() {
                if !gi.adj[part[i]][part[j]] {
                    return None;
                }
            }
        }
    }
    Some(
        parts
            .into_iter()
            .map(|p| p.into_iter().map(|v| gi.letters[v].clone()).collect())
            .collect(),
    )
}

fn transitive_orientation(g: &Graph) -> Option<ClassWitness> {
    let gi = g.indexed();
    let n = gi.n();
    let dir = vec![0u8; n * n];
    let solved = orient(&gi, dir)?;
    let mut order = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if solved[i * n + j] == 1 {
                order.insert((gi.letters[i].clone(), gi.letters[j].clone()));
            }
        }
    }
    Some(ClassWitness::Order(order))
}

fn orient(gi: &Indexed, dir: Vec<u8>) -> Option<Vec<u8>> {
    let n = gi.n();
    let mut pick = None;
    'outer: for i in 0..n {
        for j in (i + 1)..n {
            if gi.adj[i][j] && dir[i * n + j] == 0 && dir[j * n + i] == 0 {
                pick = Some((i, j));
                break 'outer;
            }
        }
    }
    let (i, j) = match pick {
        Some(p) => p,
        None => return Some(dir),
    };
    for (a, b) in [(i, j), (j, i)] {
        let mut next = dir.clone();
        if force(gi, &mut next, a, b) {
            if let Some(done) = orient(gi, next) {
                return Some(done);
            }
        }
    }
    None
}

// Orients a -> b and propagates transitivity; false on contradiction.
fn force(gi: &Indexed, dir: &mut [u8], a: usize, b: usize) -> bool {
    let n = gi.n();
    let mut queue = vec![(a, b)];
    while let Some((a, b)) = queue.pop() {
        if a == b || dir[b * n + a] == 1 {
            return false;
        }
        if dir[a * n + b] == 1 {
            continue;
        }
        dir[a * n + b] = 1;
        for c in 0..n {
            // a -> b -> c forces a -> c
            if dir[b * n + c] == 1 {
                if a != c && !gi.adj[a][c] {
                    return false;
                }
                queue.push((a, c));
            }
            // c -> a -> b forces c -> b
            if dir[c * n + a] == 1 {
                if c != b && !gi.adj[c][b] {
                    return false;
                }
                queue.push((c, b));
            }
        }
    }
    true
}

fn coloring(g: &Graph, k: u32) -> Option<BTreeMap<Letter, u32>> {
    let gi = g.indexed();
    let n = gi.n();
    if k as usize >= n {
        // enough colors for a rainbow
        return Some(
            gi.letters
                .iter()
                .enumerate()
                .map(|(i, v)| (v.clone(), i as u32))
                .collect(),
        );
    }
    let mut colors = vec![u32::MAX; n];
    fn go(v: usize, k: u32, gi: &Indexed, colors: &mut [u32]) -> bool {
        if v == gi.n() {
            return true;
        }
        for c in 0..k {
            if gi.neighbors[v].iter().all(|&w| colors[w] != c) {
                colors[v] = c;
                if go(v + 1, k, gi, colors) {
                    return true;
                }
                colors[v] = u32::MAX;
            }
        }
        false
    }
    if !go(0, k, &gi, &mut colors) {
        return None;
    }
    Some(
        gi.letters
            .iter()
            .zip(&colors)
            .map(|(v, &c)| (v.clone(), c))
            .collect(),
    )
}

fn homomorphism(g: &Graph, host: &HostGraph) -> Option<BTreeMap<Letter, u32>> {
    let gi = g.indexed();
    let n = gi.n();
    let k = host.modulus();
    let mut image = vec![u32::MAX; n];
    fn go(v: usize, k: u32, gi: &Indexed, host: &HostGraph, image: &mut [u32]) -> bool {
        if v == gi.n() {
            return true;
        }
        for r in 0..k {
            let ok = gi.neighbors[v]
                .iter()
                .filter(|&&w| w < v)
                .all(|&w| host.has_edge(image[w], r));
            if ok {
                image[v] = r;
                if go(v + 1, k, gi, host, image) {
                    return true;
                }
                image[v] = u32::MAX;
            }
        }
        false
    }
    if !go(0, k, &gi, host, &mut image) {
        return None;
    }
    Some(
        gi.letters
            .iter()
            .zip(&image)
            .map(|(v, &r)| (v.clone(), r))
            .collect(),
    )
}

/// An interval model of the complement of `g`, with all endpoints pairwise
/// distinct, or None when the complement is not an interval graph.
pub fn interval_model_of_complement(g: &Graph) -> Result<Option<Vec<(Letter, i64, i64)>>> {
    check_bound(g, "interval model search")?;
    Ok(interval_model(&g.complement()))
}

// Gilmore-Hoffman: a graph is interval iff its maximal cliques admit a
// linear order in which the cliques containing each vertex are consecutive.
fn interval_model(h: &Graph) -> Option<Vec<(Letter, i64, i64)>> {
    let hi = h.indexed();
    let n = hi.n();
    let mut adjmask = vec![0u16; n];
    for v in 0..n {
        for &w in &hi.neighbors[v] {
            adjmask[v] |= 1 << w;
        }
    }
    let full = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
    let mut cliques = Vec::new();
    bron_kerbosch(0, full, 0, &adjmask, &mut cliques);
    if cliques.len() > n {
        // interval graphs never have more maximal cliques than vertices
        return None;
    }
    let mut seq = Vec::new();
    let mut used = vec![false; cliques.len()];
    if !order_cliques(&cliques, &mut seq, &mut used, 0, 0) {
        return None;
    }
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0usize; n];
    for (pos, &ci) in seq.iter().enumerate() {
        for v in 0..n {
            if cliques[ci] >> v & 1 == 1 {
                if first[v] == usize::MAX {
                    first[v] = pos;
                }
                last[v] = pos;
            }
        }
    }
    // spread endpoints so that all 2n of them are pairwise distinct while
    // preserving the intersection pattern of the clique ranges
    let spread = (2 * n) as i64;
    Some(
        (0..n)
            .map(|v| {
                let left = first[v] as i64 * spread + v as i64;
                let right = last[v] as i64 * spread + n as i64 + v as i64;
                (hi.letters[v].clone(), left, right)
            })
            .collect(),
    )
}

fn bron_kerbosch(r: u16, mut p: u16, mut x: u16, adj: &[u16], out: &mut Vec<u16>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // pivot on the candidate covering most of p
    let pivot = (0..adj.len())
        .filter(|&v| (p | x) >> v & 1 == 1)
        .max_by_key(|&v| (p & adj[v]).count_ones())
        .unwrap();
    let mut rest = p & !adj[pivot];
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let bit = 1u16 << v;
        bron_kerbosch(r | bit, p & adj[v], x & adj[v], adj, out);
        p &= !bit;
        x |= bit;
        rest &= !bit;
    }
}

// Places cliques one by one; a clique containing an already-closed vertex
// cannot appear later.
fn order_cliques(
    cliques: &[u16],
    seq: &mut Vec<usize>,
    used: &mut [bool],
    started: u16,
    closed: u16,
) -> bool {
    if seq.len() == cliques.len() {
        return true;
    }
    for c in 0..cliques.len() {
        if used[c] || cliques[c] & closed != 0 {
            continue;
        }
        let now_closed = closed | (started & !cliques[c]);
        used[c] = true;
        seq.push(c);
        if order_cliques(cliques, seq, used, started | cliques[c], now_closed) {
            return true;
        }
        seq.pop();
        used[c] = false;
    }
    false
}

fn order_of_model(model: &[(Letter, i64, i64)]) -> ClassWitness {
    let mut order = BTreeSet::new();
    for (u, _, ru) in model {
        for (v, lv, _) in model {
            if ru < lv {
                order.insert((u.clone(), v.clone()));
            }
        }
    }
    ClassWitness::Order(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{canonical_graphs, union_graph};

    fn l(s: &str) -> Letter {
        Letter::new(s).unwrap()
    }

    fn set(names: &[&str]) -> BTreeSet<Letter> {
        names.iter().map(|s| l(s)).collect()
    }

    #[test]
    fn c4_bipartition_sides() {
        let w = find_structure(&Graph::cycle(4), &GraphClass::Bipartite)
            .unwrap()
            .unwrap();
        assert_eq!(
            w,
            ClassWitness::Bipartition {
                a: set(&["1", "3"]),
                b: set(&["2", "4"]),
            }
        );
        assert!(validate_witness(&Graph::cycle(4), &GraphClass::Bipartite, &w));
    }

    #[test]
    fn smallest_vertex_of_each_component_lands_in_side_a() {
        // two paths: 1-4 and 2-3
        let g = Graph::from_index_edges(4, &[(1, 4), (2, 3)]);
        let w = find_structure(&g, &GraphClass::Bipartite).unwrap().unwrap();
        assert_eq!(
            w,
            ClassWitness::Bipartition {
                a: set(&["1", "2"]),
                b: set(&["3", "4"]),
            }
        );
    }

    #[test]
    fn c4_transitive_orientation() {
        let w = find_structure(&Graph::cycle(4), &GraphClass::Comparability)
            .unwrap()
            .unwrap();
        let expect: BTreeSet<(Letter, Letter)> = [
            (l("1"), l("2")),
            (l("1"), l("4")),
            (l("3"), l("2")),
            (l("3"), l("4")),
        ]
        .into_iter()
        .collect();
        assert_eq!(w, ClassWitness::Order(expect));
        assert!(validate_witness(&Graph::cycle(4), &GraphClass::Comparability, &w));
    }

    #[test]
    fn c5_is_not_a_comparability_graph() {
        assert!(find_structure(&Graph::cycle(5), &GraphClass::Comparability)
            .unwrap()
            .is_none());
        assert!(!recognize(&Graph::cycle(5), &GraphClass::Bipartite).unwrap());
        assert!(!recognize(&Graph::cycle(5), &GraphClass::KColorable(2)).unwrap());
        assert!(recognize(&Graph::cycle(5), &GraphClass::KColorable(3)).unwrap());
    }

    #[test]
    fn split_examples() {
        for (g, expect) in [
            (Graph::path(3), true),
            (Graph::complete(4), true),
            (Graph::edgeless(4), true),
            (Graph::cycle(4), false),
            (Graph::from_index_edges(4, &[(1, 2), (3, 4)]), false),
            (Graph::cycle(5), false),
            // paw: triangle plus a pendant
            (Graph::from_index_edges(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]), true),
        ] {
            let found = find_structure(&g, &GraphClass::Split).unwrap();
            assert_eq!(found.is_some(), expect, "split({g})");
            if let Some(w) = found {
                assert!(validate_witness(&g, &GraphClass::Split, &w));
            }
        }
    }

    #[test]
    fn cluster_and_complete_multipartite() {
        let k1 = Graph::new([l("a")], []).unwrap();
        let k2 = Graph::new([l("b"), l("c")], [(l("b"), l("c"))]).unwrap();
        let g = union_graph(&k1, &k2).unwrap();
        let w = find_structure(&g, &GraphClass::Cluster).unwrap().unwrap();
        assert_eq!(
            w,
            ClassWitness::Partition(vec![vec![l("a")], vec![l("b"), l("c")]])
        );
        assert!(!recognize(&Graph::path(3), &GraphClass::Cluster).unwrap());

        // C4 = K2,2 is complete bipartite, so complete multipartite
        let w = find_structure(&Graph::cycle(4), &GraphClass::CompleteMultipartite)
            .unwrap()
            .unwrap();
        assert!(validate_witness(
            &Graph::cycle(4),
            &GraphClass::CompleteMultipartite,
            &w
        ));
        assert!(!recognize(&Graph::path(4), &GraphClass::CompleteMultipartite).unwrap());
    }

    #[test]
    fn complement_dualities_across_all_5_vertex_classes() {
        for g in canonical_graphs(5).unwrap() {
            let c = g.complement();
            assert_eq!(
                recognize(&g, &GraphClass::Cobipartite).unwrap(),
                recognize(&c, &GraphClass::Bipartite).unwrap(),
                "cobipartite duality on {g}"
            );
            assert_eq!(
                recognize(&g, &GraphClass::CompleteMultipartite).unwrap(),
                recognize(&c, &GraphClass::Cluster).unwrap(),
                "multipartite duality on {g}"
            );
        }
    }

    #[test]
    fn witnesses_revalidate_across_all_4_and_5_vertex_classes() {
        let k2 = HostGraph::complete_without_loops(2);
        let c5 = HostGraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let classes = [
            GraphClass::Bipartite,
            GraphClass::Split,
            GraphClass::Cobipartite,
            GraphClass::Cluster,
            GraphClass::CompleteMultipartite,
            GraphClass::Comparability,
            GraphClass::KColorable(2),
            GraphClass::KColorable(3),
            GraphClass::HColorable {
                source: "k2".into(),
                host: k2,
            },
            GraphClass::HColorable {
                source: "c5".into(),
                host: c5,
            },
            GraphClass::CoInterval,
        ];
        for n in [4usize, 5] {
            for g in canonical_graphs(n).unwrap() {
                for class in &classes {
                    if let Some(w) = find_structure(&g, class).unwrap() {
                        assert!(
                            validate_witness(&g, class, &w),
                            "witness for {class} fails on {g}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn corrupted_witnesses_fail_validation() {
        let c4 = Graph::cycle(4);
        let mut order: BTreeSet<(Letter, Letter)> = [
            (l("1"), l("2")),
            (l("1"), l("4")),
            (l("3"), l("2")),
        ]
        .into_iter()
        .collect();
        // {3,4} is an edge but incomparable here
        assert!(!validate_witness(&c4, &GraphClass::Comparability, &ClassWitness::Order(order.clone())));
        order.insert((l("4"), l("3")));
        order.insert((l("3"), l("4")));
        // now antisymmetry is broken
        assert!(!validate_witness(&c4, &GraphClass::Comparability, &ClassWitness::Order(order)));

        let bad_coloring: BTreeMap<Letter, u32> =
            [(l("1"), 0), (l("2"), 0), (l("3"), 1), (l("4"), 1)].into_iter().collect();
        assert!(!validate_witness(
            &c4,
            &GraphClass::KColorable(2),
            &ClassWitness::Coloring(bad_coloring)
        ));

        assert!(!validate_witness(
            &c4,
            &GraphClass::Split,
            &ClassWitness::SplitParts {
                clique: set(&["1", "2"]),
                independent: set(&["3", "4"]),
            }
        ));
        // payload kind mismatch
        assert!(!validate_witness(
            &c4,
            &GraphClass::Bipartite,
            &ClassWitness::Partition(vec![vec![l("1"), l("3")], vec![l("2"), l("4")]])
        ));
    }

    #[test]
    fn coloring_with_a_large_palette() {
        let w = find_structure(&Graph::cycle(5), &GraphClass::KColorable(100))
            .unwrap()
            .unwrap();
        assert!(validate_witness(&Graph::cycle(5), &GraphClass::KColorable(100), &w));
    }

    #[test]
    fn homomorphism_examples() {
        let k2 = GraphClass::HColorable {
            source: "k2".into(),
            host: HostGraph::complete_without_loops(2),
        };
        assert!(recognize(&Graph::cycle(4), &k2).unwrap());
        assert!(!recognize(&Graph::complete(3), &k2).unwrap());
        // a single looped residue absorbs everything
        let loop1 = GraphClass::HColorable {
            source: "loop".into(),
            host: HostGraph::new(1, [(0, 0)]).unwrap(),
        };
        assert!(recognize(&Graph::complete(3), &loop1).unwrap());
        let c5 = GraphClass::HColorable {
            source: "c5".into(),
            host: HostGraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap(),
        };
        assert!(recognize(&Graph::cycle(5), &c5).unwrap());
        assert!(!recognize(&Graph::complete(3), &c5).unwrap());
    }

    #[test]
    fn search_bounds_error_out() {
        let big = Graph::complete(11);
        assert!(find_structure(&big, &GraphClass::Comparability).is_err());
        assert!(find_structure(&big, &GraphClass::KColorable(2)).is_err());
        assert!(find_structure(&big, &GraphClass::CoInterval).is_err());
        // the polynomial recognizers stay available
        assert!(recognize(&big, &GraphClass::Split).unwrap());
        assert!(recognize(&big, &GraphClass::Cluster).unwrap());
    }

    // Exhaustive endpoint-sequence search, independent of the
    // clique-ordering recognizer. Opening a vertex next to an open
    // non-neighbor, or closing it while a neighbor is still unopened,
    // kills the branch.
    fn has_interval_model_by_endpoints(h: &Graph) -> bool {
        let hi = h.indexed();
        let n = hi.n();
        fn go(state: &mut [u8], placed: usize, n: usize, adj: &[Vec<bool>]) -> bool {
            if placed == 2 * n {
                return true;
            }
            for v in 0..n {
                match state[v] {
                    0 => {
                        if (0..n).all(|u| state[u] != 1 || adj[u][v]) {
                            state[v] = 1;
                            if go(state, placed + 1, n, adj) {
                                return true;
                            }
                            state[v] = 0;
                        }
                    }
                    1 => {
                        if (0..n).all(|u| !adj[v][u] || state[u] != 0) {
                            state[v] = 2;
                            if go(state, placed + 1, n, adj) {
                                return true;
                            }
                            state[v] = 1;
                        }
                    }
                    _ => {}
                }
            }
            false
        }
        let mut state = vec![0u8; n];
        go(&mut state, 0, n, &hi.adj)
    }

    #[test]
    fn co_interval_matches_endpoint_search_up_to_6_vertices() {
        for n in 1..=6 {
            for g in canonical_graphs(n).unwrap() {
                let direct = recognize(&g, &GraphClass::CoInterval).unwrap();
                let brute = has_interval_model_by_endpoints(&g.complement());
                assert_eq!(direct, brute, "co-interval disagreement on {g}");
            }
        }
    }

    #[test]
    fn co_interval_examples() {
        assert!(recognize(&Graph::cycle(4), &GraphClass::CoInterval).unwrap());
        assert!(!recognize(&Graph::cycle(4).complement(), &GraphClass::CoInterval).unwrap());
        assert!(!recognize(&Graph::cycle(5), &GraphClass::CoInterval).unwrap());
        let w = find_structure(&Graph::cycle(4), &GraphClass::CoInterval)
            .unwrap()
            .unwrap();
        assert!(validate_witness(&Graph::cycle(4), &GraphClass::CoInterval, &w));
    }

    #[test]
    fn interval_models_have_distinct_endpoints() {
        for g in canonical_graphs(5).unwrap() {
            if let Some(model) = interval_model_of_complement(&g).unwrap() {
                let mut endpoints = Vec::new();
                for (_, a, b) in &model {
                    assert!(a < b);
                    endpoints.push(*a);
                    endpoints.push(*b);
                }
                endpoints.sort_unstable();
                endpoints.dedup();
                assert_eq!(endpoints.len(), 2 * g.n());
                // intervals intersect exactly on the complement's edges
                for (u, lu, ru) in &model {
                    for (v, lv, rv) in &model {
                        if u < v {
                            let meet = lu.max(lv) <= ru.min(rv);
                            assert_eq!(meet, !g.has_edge(u, v), "{u} {v} in {g}");
                        }
                    }
                }
            }
        }
    }
}
