//! The universal decoder and the constructive encoders.
//!
//! `decode` turns a word into a graph by asking a membership oracle about
//! every pairwise projection. Each encoder inverts that for one target
//! language; see [`encode`].

use std::fmt;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::languages::LanguageOracle;
use crate::words::{project, Word};

mod encode;

pub use encode::{
    encode_bipartite_lyndon, encode_bipartite_palindrome, encode_cluster, encode_copy,
    encode_detp, encode_dyck, encode_interval_union, encode_lyndon, encode_mod_scheme,
    encode_palindrome, encode_sparse, ModHost,
};

/// Decodes the graph a word represents under a symmetric oracle: vertices
/// are the word's alphabet, and `{u,v}` is an edge exactly when the
/// projection of the word onto `u,v` belongs to the language.
pub fn decode(l: &LanguageOracle, w: &Word) -> Result<Graph> {
    if w.is_empty() {
        return Err(Error::invalid("cannot decode the empty word"));
    }
    if !l.is_symmetric() {
        return Err(Error::invalid(format!(
            "oracle {} is not flagged 0-1-symmetric; edges would depend on projection orientation",
            l.id()
        )));
    }
    let verts: Vec<_> = w.alphabet().into_iter().collect();
    let mut edges = Vec::new();
    for i in 0..verts.len() {
        for j in (i + 1)..verts.len() {
            let h = project(w, &verts[i], &verts[j])?;
            if l.member(&h) {
                edges.push((verts[i].clone(), verts[j].clone()));
            }
        }
    }
    Graph::new(verts, edges)
}

/// Size accounting for an encoded word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodingReport {
    pub word: Word,
    pub language: Option<String>,
    pub n: usize,
    pub m: Option<usize>,
    pub length: usize,
    pub bits: usize,
}

impl fmt::Display for EncodingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "length={} bits={}", self.length, self.bits)
    }
}

/// Computes length and bit counts for a nonempty word: `bits` is
/// `length * ceil(log2 n)` over the alphabet size n, and plain `length`
/// when the alphabet is a single letter.
pub fn report_size(w: &Word) -> Result<EncodingReport> {
    if w.is_empty() {
        return Err(Error::invalid("cannot size the empty word"));
    }
    let n = w.alphabet().len();
    let length = w.len();
    let bits = if n == 1 {
        length
    } else {
        length * (usize::BITS - (n - 1).leading_zeros()) as usize
    };
    Ok(EncodingReport {
        word: w.clone(),
        language: None,
        n,
        m: None,
        length,
        bits,
    })
}

impl EncodingReport {
    /// Attaches the language id and edge count an encoder knows about.
    pub fn with_context(mut self, language: impl Into<String>, m: usize) -> Self {
        self.language = Some(language.into());
        self.m = Some(m);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::languages::{make_oracle, LanguageOracle};

    fn w(s: &str) -> Word {
        Word::compact(s).unwrap()
    }

    #[test]
    fn hour_glass_vector() {
        let g = decode(&make_oracle("classical").unwrap(), &w("124534512")).unwrap();
        let expect = Graph::from_index_edges(
            5,
            &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)],
        );
        assert_eq!(g, expect);
    }

    #[test]
    fn pinned_vectors_for_pal_and_copy() {
        let c4 = Graph::cycle(4);
        assert_eq!(
            decode(&make_oracle("pal").unwrap(), &w("423121123142")).unwrap(),
            c4
        );
        assert_eq!(
            decode(&make_oracle("copy").unwrap(), &w("121324123142")).unwrap(),
            c4
        );
    }

    #[test]
    fn single_letter_decodes_to_k1() {
        let g = decode(&make_oracle("classical").unwrap(), &w("a")).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn decode_rejects_empty_and_asymmetric() {
        let l = make_oracle("pal").unwrap();
        assert!(decode(&l, &Word::empty()).is_err());
        let one_sided = LanguageOracle::custom("ones-only", false, true, |x| {
            x.iter().all(|&b| b == 1)
        });
        assert!(decode(&one_sided, &w("ab")).is_err());
    }

    #[test]
    fn size_reports() {
        let r = report_size(&w("11")).unwrap();
        assert_eq!((r.n, r.length, r.bits), (1, 2, 2));

        let c4 = Graph::cycle(4);
        let sparse = encode_sparse(&c4);
        let r = report_size(&sparse).unwrap().with_context("not(copy)", 4);
        assert_eq!(r.length, 16);
        assert_eq!(r.bits, 32);
        assert_eq!(r.to_string(), "length=16 bits=32");
        assert_eq!(r.m, Some(4));

        for n in [2usize, 3, 5, 8] {
            let word = encode_copy(&Graph::complete(n));
            assert_eq!(report_size(&word).unwrap().length, 2 * n);
        }

        // ceil(log2 n) steps at powers of two
        let r = report_size(&w("12345")).unwrap();
        assert_eq!(r.bits, 5 * 3);
        assert!(report_size(&Word::empty()).is_err());
    }
}
