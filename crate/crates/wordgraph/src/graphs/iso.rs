//! Brute-force isomorphism tests and canonical codes for small graphs.

use crate::error::{Error, Result};
use crate::graphs::Graph;

/// Largest vertex count accepted by the isomorphism search and
/// [`canonical_form`].
pub const ISO_BOUND: usize = 9;
/// Largest vertex count for [`canonical_graphs`].
pub const CLASS_ENUM_BOUND: usize = 6;

/// Finds an edge-preserving bijection from `g` to `h`, as a map from
/// positions in `g.vertices()` to positions in `h.vertices()`. Vertices are
/// assigned in index order and candidates tried in index order, so the
/// returned map is the lexicographically first one.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    if g.n() > ISO_BOUND || h.n() > ISO_BOUND {
        return Err(Error::limit(format!(
            "isomorphism search limited to {ISO_BOUND} vertices"
        )));
    }
    if g.n() != h.n() || g.m() != h.m() {
        return Ok(None);
    }
    let gi = g.indexed();
    let hi = h.indexed();
    let n = gi.n();
    let mut gdeg: Vec<usize> = gi.neighbors.iter().map(Vec::len).collect();
    let mut hdeg: Vec<usize> = hi.neighbors.iter().map(Vec::len).collect();
    let degs = (gdeg.clone(), hdeg.clone());
    gdeg.sort_unstable();
    hdeg.sort_unstable();
    if gdeg != hdeg {
        return Ok(None);
    }
    let (gdeg, hdeg) = degs;

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(0, n, &gi.adj, &hi.adj, &gdeg, &hdeg, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn assign(
    v: usize,
    n: usize,
    gadj: &[Vec<bool>],
    hadj: &[Vec<bool>],
    gdeg: &[usize],
    hdeg: &[usize],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == n {
        return true;
    }
    'cand: for c in 0..n {
        if used[c] || gdeg[v] != hdeg[c] {
            continue;
        }
        for w in 0..v {
            if gadj[v][w] != hadj[c][map[w]] {
                continue 'cand;
            }
        }
        map[v] = c;
        used[c] = true;
        if assign(v + 1, n, gadj, hadj, gdeg, hdeg, map, used) {
            return true;
        }
        used[c] = false;
        map[v] = usize::MAX;
    }
    false
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

/// The upper triangle of the adjacency matrix, minimized over all vertex
/// permutations and rendered as a 0/1 string (row by row). Equal codes are
/// equivalent to isomorphism. K1 yields the empty string.
pub fn canonical_form(g: &Graph) -> Result<String> {
    if g.n() > ISO_BOUND {
        return Err(Error::limit(format!(
            "canonical form limited to {ISO_BOUND} vertices"
        )));
    }
    let gi = g.indexed();
    let n = gi.n();
    let tri = n * (n - 1) / 2;
    let mut best: Option<Vec<u8>> = None;
    let mut cur = vec![0u8; tri];
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let mut t = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                cur[t] = u8::from(gi.adj[p[i]][p[j]]);
                t += 1;
            }
        }
        match &best {
            Some(b) if cur >= *b => {}
            _ => best = Some(cur.clone()),
        }
    });
    let bits = best.unwrap_or_default();
    Ok(bits.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect())
}

fn permute<F: FnMut(&[usize])>(items: &mut [usize], k: usize, f: &mut F) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// One representative per isomorphism class of graphs on vertices `1..=n`,
/// ordered by their smallest edge bitmask.
pub fn canonical_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::invalid("graph needs at least one vertex"));
    }
    if n > CLASS_ENUM_BOUND {
        return Err(Error::limit(format!(
            "class enumeration limited to {CLASS_ENUM_BOUND} vertices"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let tri = pairs.len();
    let pair_pos = |a: usize, b: usize| -> usize {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        pairs.iter().position(|&p| p == (i, j)).unwrap()
    };

    // Precompute, for every permutation, where each pair position lands.
    let mut posmaps: Vec<Vec<usize>> = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        posmaps.push(pairs.iter().map(|&(i, j)| pair_pos(p[i], p[j])).collect());
    });

    let mut seen = vec![false; 1usize << tri];
    let mut reps = Vec::new();
    for mask in 0usize..(1 << tri) {
        if seen[mask] {
            continue;
        }
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(t, _)| mask >> t & 1 == 1)
            .map(|(_, &(i, j))| (i + 1, j + 1))
            .collect();
        reps.push(Graph::from_index_edges(n, &edges));
        for pm in &posmaps {
            let mut image = 0usize;
            for t in 0..tri {
                if mask >> t & 1 == 1 {
                    image |= 1 << pm[t];
                }
            }
            seen[image] = true;
        }
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Letter;

    fn l(s: &str) -> Letter {
        Letter::new(s).unwrap()
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = Graph::cycle(4);
        let abcd = Graph::new(
            [l("a"), l("b"), l("c"), l("d")],
            [
                (l("a"), l("b")),
                (l("b"), l("c")),
                (l("c"), l("d")),
                (l("d"), l("a")),
            ],
        )
        .unwrap();
        assert!(is_isomorphic(&c4, &abcd).unwrap());

        let p4 = Graph::path(4);
        let star = Graph::from_index_edges(4, &[(1, 2), (1, 3), (1, 4)]);
        assert!(!is_isomorphic(&p4, &star).unwrap());

        let c5 = Graph::cycle(5);
        assert!(is_isomorphic(&c5, &c5.complement()).unwrap());

        assert!(is_isomorphic(&Graph::complete(10), &Graph::complete(10)).is_err());
    }

    #[test]
    fn isomorphism_map_is_index_first() {
        let k2 = Graph::complete(2);
        let ab = Graph::new([l("a"), l("b")], [(l("a"), l("b"))]).unwrap();
        assert_eq!(find_isomorphism(&ab, &k2).unwrap(), Some(vec![0, 1]));
        // Distinguishable degrees force the only correct map.
        let p3 = Graph::path(3);
        let yxz = Graph::new(
            [l("x"), l("y"), l("z")],
            [(l("x"), l("y")), (l("x"), l("z"))],
        )
        .unwrap();
        // x is the center; p3's center is vertex 2 at index 1.
        assert_eq!(find_isomorphism(&p3, &yxz).unwrap(), Some(vec![1, 0, 2]));
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(canonical_form(&Graph::edgeless(1)).unwrap(), "");
        assert_eq!(canonical_form(&Graph::edgeless(2)).unwrap(), "0");
        assert_eq!(canonical_form(&Graph::complete(2)).unwrap(), "1");
        let p3 = Graph::path(3);
        let relabeled = Graph::new(
            [l("u"), l("v"), l("w")],
            [(l("v"), l("u")), (l("u"), l("w"))],
        )
        .unwrap();
        assert_eq!(
            canonical_form(&p3).unwrap(),
            canonical_form(&relabeled).unwrap()
        );
        assert_ne!(
            canonical_form(&p3).unwrap(),
            canonical_form(&Graph::complete(3)).unwrap()
        );
    }

    #[test]
    fn canonical_form_matches_isomorphism_on_4_vertex_graphs() {
        let reps = canonical_graphs(4).unwrap();
        for (i, g) in reps.iter().enumerate() {
            for (j, h) in reps.iter().enumerate() {
                let same_code = canonical_form(g).unwrap() == canonical_form(h).unwrap();
                assert_eq!(same_code, i == j);
                assert_eq!(is_isomorphic(g, h).unwrap(), i == j);
            }
        }
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| canonical_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
        assert!(canonical_graphs(7).is_err());
        assert!(canonical_graphs(0).is_err());
    }
}
