//! Text formats: graph files, word files, host graphs, and the auxiliary
//! witness files the CLI accepts. Lines starting with `#` are comments
//! everywhere.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graphs::{Graph, HostGraph};
use crate::words::{Letter, Word};

fn meaningful_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Parses the edge-list format: `n <count>`, an optional
/// `vertices: <names>` line, then one `u v` line per edge. Without a
/// vertices line the vertices are `1..=n`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = meaningful_lines(text).peekable();
    let head = lines.next().ok_or_else(|| Error::format("empty graph file"))?;
    let n = parse_count(head)?;
    let verts = parse_vertex_line(&mut lines, n, false)?;

    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    for line in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::format(format!("expected an edge line, got {line:?}")));
        }
        let u = find_vertex(&verts, toks[0])?;
        let v = find_vertex(&verts, toks[1])?;
        if u == v {
            return Err(Error::format(format!("loop at vertex {u}")));
        }
        let key = if u < v { (u.clone(), v.clone()) } else { (v.clone(), u.clone()) };
        if !seen.insert(key) {
            return Err(Error::format(format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    Graph::new(verts, edges)
        .map_err(|e| Error::format(e.to_string()))
}

fn parse_count(line: &str) -> Result<usize> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != 2 || toks[0] != "n" {
        return Err(Error::format(format!(
            "expected \"n <count>\" first, got {line:?}"
        )));
    }
    let n: usize = toks[1]
        .parse()
        .map_err(|_| Error::format(format!("bad vertex count {:?}", toks[1])))?;
    if n == 0 {
        return Err(Error::format("graph needs at least one vertex"));
    }
    Ok(n)
}

fn parse_vertex_line<'a, I>(
    lines: &mut std::iter::Peekable<I>,
    n: usize,
    numeric: bool,
) -> Result<Vec<Letter>>
where
    I: Iterator<Item = &'a str>,
{
    let named = lines
        .peek()
        .and_then(|l| l.strip_prefix("vertices:"))
        .map(str::to_string);
    let names: Vec<String> = match named {
        Some(rest) => {
            lines.next();
            rest.split_whitespace().map(str::to_string).collect()
        }
        None => (1..=n).map(|i| i.to_string()).collect(),
    };
    if names.len() != n {
        return Err(Error::format(format!(
            "vertices line names {} vertices, expected {n}",
            names.len()
        )));
    }
    let mut verts = Vec::new();
    let mut seen = BTreeSet::new();
    for name in names {
        if numeric && name.parse::<u64>().is_err() {
            return Err(Error::format(format!(
                "host vertex {name:?} is not an integer"
            )));
        }
        let letter = Letter::new(&name).map_err(|e| Error::format(e.to_string()))?;
        if !seen.insert(letter.clone()) {
            return Err(Error::format(format!("vertex {name} declared twice")));
        }
        verts.push(letter);
    }
    Ok(verts)
}

fn find_vertex(verts: &[Letter], name: &str) -> Result<Letter> {
    verts
        .iter()
        .find(|v| v.as_str() == name)
        .cloned()
        .ok_or_else(|| Error::format(format!("undeclared vertex {name:?}")))
}

/// Serializes in the same format; vertices appear explicitly only when they
/// are not the implicit `1..=n`.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    let implicit = g
        .vertices()
        .iter()
        .enumerate()
        .all(|(i, v)| v.as_str() == (i + 1).to_string());
    if !implicit {
        out.push_str("vertices:");
        for v in g.vertices() {
            out.push(' ');
            out.push_str(v.as_str());
        }
        out.push('\n');
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Same edge-list format, but vertex labels must be integers and loops are
/// allowed. The modulus is the declared count and each label contributes
/// the residue `label mod n`; residues must be pairwise distinct.
pub fn parse_host_graph(text: &str) -> Result<HostGraph> {
    let mut lines = meaningful_lines(text).peekable();
    let head = lines.next().ok_or_else(|| Error::format("empty host file"))?;
    let n = parse_count(head)?;
    let verts = parse_vertex_line(&mut lines, n, true)?;
    let k = n as u32;
    let mut residue_of = BTreeMap::new();
    let mut used = BTreeSet::new();
    for v in &verts {
        let value: u64 = v.as_str().parse().unwrap();
        let r = (value % k as u64) as u32;
        if !used.insert(r) {
            return Err(Error::format(format!(
                "host vertices collide at residue {r} mod {k}"
            )));
        }
        residue_of.insert(v.clone(), r);
    }
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    for line in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::format(format!("expected an edge line, got {line:?}")));
        }
        let a = residue_of[&find_vertex(&verts, toks[0])?];
        let b = residue_of[&find_vertex(&verts, toks[1])?];
        let key = if a <= b { (a, b) } else { (b, a) };
        if !seen.insert(key) {
            return Err(Error::format(format!("duplicate host edge {} {}", toks[0], toks[1])));
        }
        edges.push((a, b));
    }
    HostGraph::new(k, edges).map_err(|e| Error::format(e.to_string()))
}

/// One meaningful line of letters; `compact` reads one contiguous string of
/// single-character letters instead.
pub fn parse_word(text: &str, compact: bool) -> Result<Word> {
    let mut lines = meaningful_lines(text);
    let line = lines.next().ok_or_else(|| Error::format("empty word file"))?;
    if lines.next().is_some() {
        return Err(Error::format("word file has more than one line"));
    }
    if compact {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 1 {
            return Err(Error::format("compact word must be one contiguous token"));
        }
        Word::compact(toks[0]).map_err(|e| Error::format(e.to_string()))
    } else {
        Word::from_tokens(line).map_err(|e| Error::format(e.to_string()))
    }
}

/// Renders a word; compact mode requires single-character letters.
pub fn serialize_word(w: &Word, compact: bool) -> Result<String> {
    if !compact {
        return Ok(w.to_string());
    }
    let mut out = String::new();
    for letter in w.letters() {
        if letter.as_str().chars().count() != 1 {
            return Err(Error::invalid(format!(
                "letter {letter} does not fit compact output"
            )));
        }
        out.push_str(letter.as_str());
    }
    Ok(out)
}

/// Order file: one `u v` line per related pair, meaning u precedes v.
pub fn parse_order(text: &str) -> Result<BTreeSet<(Letter, Letter)>> {
    let mut out = BTreeSet::new();
    for line in meaningful_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::format(format!("expected \"u v\", got {line:?}")));
        }
        out.insert((letter(toks[0])?, letter(toks[1])?));
    }
    Ok(out)
}

/// Bipartition file: two lines, one side per line; `-` stands for an empty
/// side.
pub fn parse_bipartition(text: &str) -> Result<(BTreeSet<Letter>, BTreeSet<Letter>)> {
    let lines: Vec<&str> = meaningful_lines(text).collect();
    if lines.len() != 2 {
        return Err(Error::format(format!(
            "bipartition file needs exactly two sides, got {}",
            lines.len()
        )));
    }
    Ok((parse_side(lines[0])?, parse_side(lines[1])?))
}

fn parse_side(line: &str) -> Result<BTreeSet<Letter>> {
    if line == "-" {
        return Ok(BTreeSet::new());
    }
    line.split_whitespace().map(letter).collect()
}

/// Coloring file: one `v c` line per vertex with a numeric color.
pub fn parse_coloring(text: &str) -> Result<BTreeMap<Letter, u32>> {
    let mut out = BTreeMap::new();
    for line in meaningful_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::format(format!("expected \"v color\", got {line:?}")));
        }
        let c: u32 = toks[1]
            .parse()
            .map_err(|_| Error::format(format!("bad color {:?}", toks[1])))?;
        if out.insert(letter(toks[0])?, c).is_some() {
            return Err(Error::format(format!("vertex {} colored twice", toks[0])));
        }
    }
    Ok(out)
}

/// Partition file: one part per line.
pub fn parse_partition(text: &str) -> Result<Vec<Vec<Letter>>> {
    let mut parts = Vec::new();
    for line in meaningful_lines(text) {
        let part: Vec<Letter> = line
            .split_whitespace()
            .map(letter)
            .collect::<Result<_>>()?;
        parts.push(part);
    }
    Ok(parts)
}

fn letter(name: &str) -> Result<Letter> {
    Letter::new(name).map_err(|e| Error::format(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn graph_roundtrip_with_implicit_vertices() {
        let text = "# a square\nn 4\n1 2\n2 3\n3 4\n1 4\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g, Graph::cycle(4));
        assert_eq!(serialize_graph(&g), "n 4\n1 2\n1 4\n2 3\n3 4\n");
    }

    #[test]
    fn graph_roundtrip_with_named_vertices() {
        let text = "n 3\nvertices: b a c\na b\n";
        let g = parse_graph(text).unwrap();
        let out = serialize_graph(&g);
        assert_eq!(out, "n 3\nvertices: a b c\na b\n");
        assert_eq!(parse_graph(&out).unwrap(), g);
    }

    #[test]
    fn graph_parse_errors() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("m 3\n").is_err());
        assert!(parse_graph("n 0\n").is_err());
        assert!(parse_graph("n 2\n1 1\n").is_err());
        assert!(parse_graph("n 2\n1 3\n").is_err());
        assert!(parse_graph("n 2\n1 2\n2 1\n").is_err());
        assert!(parse_graph("n 2\nvertices: a\n").is_err());
        assert!(parse_graph("n 2\nvertices: a a\n").is_err());
        assert!(parse_graph("n 2\n1 2 3\n").is_err());
    }

    #[test]
    fn host_parsing() {
        let h = parse_host_graph("n 2\n1 2\n").unwrap();
        assert_eq!(h.modulus(), 2);
        assert!(h.has_edge(0, 1));
        let looped = parse_host_graph("n 2\n1 1\n1 2\n").unwrap();
        assert!(looped.has_edge(1, 1));
        assert!(!looped.has_edge(0, 0));
        // explicit labels reduce mod k
        let h = parse_host_graph("n 3\nvertices: 0 4 2\n0 4\n").unwrap();
        assert!(h.has_edge(0, 1));
        assert!(parse_host_graph("n 2\nvertices: 1 3\n").is_err());
        assert!(parse_host_graph("n 2\nvertices: a b\n").is_err());
        assert!(parse_host_graph("n 2\n1 2\n2 1\n").is_err());
    }

    #[test]
    fn word_files() {
        let w = parse_word("# header\n1 2 10\n", false).unwrap();
        assert_eq!(w.to_string(), "1 2 10");
        let w = parse_word("4231\n", true).unwrap();
        assert_eq!(w.len(), 4);
        assert!(parse_word("", false).is_err());
        assert!(parse_word("a b\nc\n", false).is_err());
        assert!(parse_word("ab cd\n", true).is_err());

        assert_eq!(serialize_word(&w, true).unwrap(), "4231");
        let spaced = parse_word("1 2 10", false).unwrap();
        assert_eq!(serialize_word(&spaced, false).unwrap(), "1 2 10");
        assert!(serialize_word(&spaced, true).is_err());
    }

    #[test]
    fn witness_files() {
        let order = parse_order("1 2\n1 4\n# c\n3 2\n3 4\n").unwrap();
        assert_eq!(order.len(), 4);
        let (a, b) = parse_bipartition("1 3\n2 4\n").unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(b.len(), 2);
        let (a, b) = parse_bipartition("-\n1 2\n").unwrap();
        assert!(a.is_empty());
        assert_eq!(b.len(), 2);
        assert!(parse_bipartition("1 2\n").is_err());
        let coloring = parse_coloring("1 0\n2 1\n").unwrap();
        assert_eq!(coloring.len(), 2);
        assert!(parse_coloring("1 0\n1 1\n").is_err());
        assert!(parse_coloring("1 x\n").is_err());
        let parts = parse_partition("a\nb c\n").unwrap();
        assert_eq!(parts, vec![vec![Letter::new("a").unwrap()], vec![Letter::new("b").unwrap(), Letter::new("c").unwrap()]]);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..7, proptest::collection::vec(any::<bool>(), 21)).prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut t = 0;
            for i in 1..=n {
                for j in (i + 1)..=n {
                    if bits[t] {
                        edges.push((i, j));
                    }
                    t += 1;
                }
            }
            Graph::from_index_edges(n, &edges)
        })
    }

    proptest! {
        #[test]
        fn prop_graph_file_roundtrip(g in arb_graph()) {
            let text = serialize_graph(&g);
            prop_assert_eq!(parse_graph(&text).unwrap(), g);
        }

        #[test]
        fn prop_word_file_roundtrip(tokens in proptest::collection::vec("[a-z0-9]{1,3}", 1..12)) {
            let w = Word::from_tokens(&tokens.join(" ")).unwrap();
            let text = serialize_word(&w, false).unwrap();
            prop_assert_eq!(parse_word(&text, false).unwrap(), w);
        }
    }
}
