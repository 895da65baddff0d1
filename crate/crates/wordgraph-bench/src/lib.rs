//! Deterministic fixtures shared by the benchmark targets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wordgraph::words::Letter;
use wordgraph::{Graph, Word};

/// Graph on vertices 1..=n with every edge present at odds 1/2.
pub fn random_graph(seed: u64, n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if rng.gen_bool(0.5) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_index_edges(n, &edges)
}

/// Word of the given length over the first `n` lowercase letters.
pub fn random_word(seed: u64, n: usize, len: usize) -> Word {
    let letters: Vec<Letter> = (0..n)
        .map(|i| Letter::new(((b'a' + i as u8) as char).to_string()).unwrap())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Word::new(
        (0..len)
            .map(|_| letters[rng.gen_range(0..n)].clone())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_deterministic() {
        assert_eq!(random_graph(7, 12), random_graph(7, 12));
        assert_eq!(random_word(7, 4, 40), random_word(7, 4, 40));
        assert_eq!(random_word(7, 4, 40).len(), 40);
    }
}
