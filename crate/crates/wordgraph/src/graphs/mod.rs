//! Graph data model, class recognizers with witnesses, and small-graph
//! isomorphism. Everything here is brute force and sized for desk scale.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::words::Letter;

mod classes;
mod iso;

pub use classes::{find_structure, interval_model_of_complement, recognize, validate_witness};
pub use iso::{canonical_form, canonical_graphs, find_isomorphism, is_isomorphic};

/// A finite simple graph with labeled vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    verts: Vec<Letter>,
    edges: BTreeSet<(Letter, Letter)>,
}

impl Graph {
    /// Builds a graph. The vertex set must be nonempty, edges must not be
    /// loops, and every endpoint must be a declared vertex.
    pub fn new<VI, EI>(vertices: VI, edges: EI) -> Result<Graph>
    where
        VI: IntoIterator<Item = Letter>,
        EI: IntoIterator<Item = (Letter, Letter)>,
    {
        let vset: BTreeSet<Letter> = vertices.into_iter().collect();
        if vset.is_empty() {
            return Err(Error::invalid("graph needs at least one vertex"));
        }
        let mut eset = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            if !vset.contains(&u) || !vset.contains(&v) {
                return Err(Error::invalid(format!(
                    "edge {u} {v} uses an undeclared vertex"
                )));
            }
            eset.insert(if u < v { (u, v) } else { (v, u) });
        }
        Ok(Graph {
            verts: vset.into_iter().collect(),
            edges: eset,
        })
    }

    /// Complete graph on labels `1..=n`.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                edges.push((i, j));
            }
        }
        Graph::from_index_edges(n, &edges)
    }

    /// Edgeless graph on labels `1..=n`.
    pub fn edgeless(n: usize) -> Graph {
        Graph::from_index_edges(n, &[])
    }

    /// Cycle `1-2-...-n-1`; `n` must be at least 3.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((n, 1));
        Graph::from_index_edges(n, &edges)
    }

    /// Path `1-2-...-n`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_index_edges(n, &edges)
    }

    /// Small fixture constructor: vertices `1..=n`, edges by 1-based index.
    /// Panics on malformed input.
    pub fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        assert!(n >= 1, "graph needs at least one vertex");
        let verts: Vec<Letter> = (1..=n).map(|i| Letter::new(i.to_string()).unwrap()).collect();
        let es: Vec<(Letter, Letter)> = edges
            .iter()
            .map(|&(u, v)| {
                assert!(u >= 1 && u <= n && v >= 1 && v <= n && u != v, "bad edge {u} {v}");
                (verts[u - 1].clone(), verts[v - 1].clone())
            })
            .collect();
        Graph::new(verts, es).unwrap()
    }

    pub fn vertices(&self) -> &[Letter] {
        &self.verts
    }

    pub fn edges(&self) -> &BTreeSet<(Letter, Letter)> {
        &self.edges
    }

    pub fn n(&self) -> usize {
        self.verts.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: &Letter) -> bool {
        self.verts.binary_search(v).is_ok()
    }

    pub fn has_edge(&self, u: &Letter, v: &Letter) -> bool {
        if u == v {
            return false;
        }
        let key = if u < v {
            (u.clone(), v.clone())
        } else {
            (v.clone(), u.clone())
        };
        self.edges.contains(&key)
    }

    /// Sorted neighbor list; empty when `v` is not a vertex.
    pub fn neighbors(&self, v: &Letter) -> Vec<Letter> {
        let mut out = Vec::new();
        for (a, b) in &self.edges {
            if a == v {
                out.push(b.clone());
            } else if b == v {
                out.push(a.clone());
            }
        }
        out.sort();
        out
    }

    pub fn degree(&self, v: &Letter) -> usize {
        self.edges.iter().filter(|(a, b)| a == v || b == v).count()
    }

    /// Same vertices, complemented edge set.
    pub fn complement(&self) -> Graph {
        let mut edges = BTreeSet::new();
        for i in 0..self.verts.len() {
            for j in (i + 1)..self.verts.len() {
                let pair = (self.verts[i].clone(), self.verts[j].clone());
                if !self.edges.contains(&pair) {
                    edges.insert(pair);
                }
            }
        }
        Graph {
            verts: self.verts.clone(),
            edges,
        }
    }

    pub(crate) fn indexed(&self) -> Indexed {
        let letters = self.verts.clone();
        let pos: BTreeMap<&Letter, usize> =
            letters.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let n = letters.len();
        let mut adj = vec![vec![false; n]; n];
        let mut neighbors = vec![Vec::new(); n];
        for (a, b) in &self.edges {
            let (i, j) = (pos[a], pos[b]);
            adj[i][j] = true;
            adj[j][i] = true;
            neighbors[i].push(j);
            neighbors[j].push(i);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Indexed {
            letters,
            adj,
            neighbors,
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} vertices, {} edges)", self.n(), self.m())
    }
}

/// Index-space view of a graph used by the search code.
pub(crate) struct Indexed {
    pub letters: Vec<Letter>,
    pub adj: Vec<Vec<bool>>,
    pub neighbors: Vec<Vec<usize>>,
}

impl Indexed {
    pub fn n(&self) -> usize {
        self.letters.len()
    }
}

/// Disjoint union; the vertex sets must not overlap.
pub fn union_graph(g: &Graph, h: &Graph) -> Result<Graph> {
    for v in h.vertices() {
        if g.has_vertex(v) {
            return Err(Error::invalid(format!(
                "union requires disjoint vertex sets, {v} appears in both"
            )));
        }
    }
    let verts = g.verts.iter().chain(h.verts.iter()).cloned();
    let edges = g.edges.iter().chain(h.edges.iter()).cloned();
    Graph::new(verts, edges)
}

/// A host graph on residues `0..k`. Loops are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HostGraph {
    k: u32,
    edges: BTreeSet<(u32, u32)>,
}

impl HostGraph {
    pub fn new(k: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<HostGraph> {
        if k == 0 {
            return Err(Error::invalid("host graph needs at least one residue"));
        }
        let mut eset = BTreeSet::new();
        for (a, b) in edges {
            if a >= k || b >= k {
                return Err(Error::invalid(format!(
                    "host edge {a} {b} outside residues 0..{k}"
                )));
            }
            eset.insert(if a <= b { (a, b) } else { (b, a) });
        }
        Ok(HostGraph { k, edges: eset })
    }

    /// K_k on residues, no loops.
    pub fn complete_without_loops(k: u32) -> HostGraph {
        let mut edges = Vec::new();
        for a in 0..k {
            for b in (a + 1)..k {
                edges.push((a, b));
            }
        }
        HostGraph::new(k, edges).unwrap()
    }

    pub fn modulus(&self) -> u32 {
        self.k
    }

    pub fn edges(&self) -> &BTreeSet<(u32, u32)> {
        &self.edges
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.edges.contains(&key)
    }
}

/// The graph classes the recognizers understand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphClass {
    Bipartite,
    Split,
    Cobipartite,
    Cluster,
    CompleteMultipartite,
    Comparability,
    KColorable(u32),
    HColorable { source: String, host: HostGraph },
    CoInterval,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::Bipartite => write!(f, "bipartite"),
            GraphClass::Split => write!(f, "split"),
            GraphClass::Cobipartite => write!(f, "cobipartite"),
            GraphClass::Cluster => write!(f, "cluster"),
            GraphClass::CompleteMultipartite => write!(f, "complete-multipartite"),
            GraphClass::Comparability => write!(f, "comparability"),
            GraphClass::KColorable(k) => write!(f, "k-colorable:{k}"),
            GraphClass::HColorable { source, .. } => write!(f, "h-colorable:{source}"),
            GraphClass::CoInterval => write!(f, "co-interval"),
        }
    }
}

/// Parses a class id such as `bipartite`, `k-colorable:3`, or
/// `h-colorable:<file>`; host files go through `load_host`.
pub fn parse_class<F>(text: &str, load_host: &mut F) -> Result<GraphClass>
where
    F: FnMut(&str) -> Result<HostGraph>,
{
    let text = text.trim();
    match text {
        "bipartite" => return Ok(GraphClass::Bipartite),
        "split" => return Ok(GraphClass::Split),
        "cobipartite" => return Ok(GraphClass::Cobipartite),
        "cluster" => return Ok(GraphClass::Cluster),
        "complete-multipartite" => return Ok(GraphClass::CompleteMultipartite),
        "comparability" => return Ok(GraphClass::Comparability),
        "co-interval" => return Ok(GraphClass::CoInterval),
        _ => {}
    }
    if let Some(arg) = text.strip_prefix("k-colorable:") {
        let k: u32 = arg
            .parse()
            .map_err(|_| Error::syntax(format!("bad color count {arg:?}")))?;
        if k == 0 {
            return Err(Error::syntax("k-colorable needs k >= 1"));
        }
        return Ok(GraphClass::KColorable(k));
    }
    if let Some(path) = text.strip_prefix("h-colorable:") {
        if path.is_empty() {
            return Err(Error::syntax("h-colorable needs a host file"));
        }
        let host = load_host(path)?;
        return Ok(GraphClass::HColorable {
            source: path.to_string(),
            host,
        });
    }
    Err(Error::syntax(format!("unknown graph class {text:?}")))
}

/// Witness payloads returned by the recognizers. Interpretation depends on
/// the class being witnessed: a `Bipartition` names independent sides for
/// `bipartite` but clique sides for `cobipartite`, and a `Partition` lists
/// cliques for `cluster` but independent parts for `complete-multipartite`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassWitness {
    Bipartition {
        a: BTreeSet<Letter>,
        b: BTreeSet<Letter>,
    },
    SplitParts {
        clique: BTreeSet<Letter>,
        independent: BTreeSet<Letter>,
    },
    Coloring(BTreeMap<Letter, u32>),
    Order(BTreeSet<(Letter, Letter)>),
    Homomorphism(BTreeMap<Letter, u32>),
    Partition(Vec<Vec<Letter>>),
}
