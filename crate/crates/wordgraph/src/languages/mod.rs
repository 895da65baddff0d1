//! 0-1-symmetric binary languages as membership oracles.
//!
//! An oracle is built from a spec string (see [`LanguageSpec`]) or from a
//! custom predicate. Catalog oracles are always symmetric: the base entries
//! are symmetric languages, the combinators preserve symmetry, and `avoid`
//! factor lists are closed under bit-complement during canonicalization.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graphs::HostGraph;
use crate::words::BinaryWord;

mod catalog;
mod spec;

pub use spec::LanguageSpec;

/// Cap on `k + l` for [`unary_shuffle_subset`].
pub const UNARY_SHUFFLE_BOUND: usize = 16;
/// Cap on `max_len` for [`check_symmetry`].
pub const SYMMETRY_CHECK_BOUND: usize = 14;

#[derive(Clone)]
enum OracleImpl {
    Spec(LanguageSpec),
    Custom(Arc<dyn Fn(&[u8]) -> bool + Send + Sync>),
}

/// A binary-language membership oracle with its canonical id and the flags
/// the decoder and the property tests rely on.
#[derive(Clone)]
pub struct LanguageOracle {
    id: String,
    symmetric: bool,
    reversal_closed: bool,
    imp: OracleImpl,
}

impl fmt::Debug for LanguageOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LanguageOracle")
            .field("id", &self.id)
            .field("symmetric", &self.symmetric)
            .field("reversal_closed", &self.reversal_closed)
            .finish()
    }
}

impl LanguageOracle {
    /// Builds an oracle from an already-constructed spec.
    pub fn from_spec(spec: LanguageSpec) -> Self {
        let spec = spec.canonicalize();
        LanguageOracle {
            id: spec.to_string(),
            symmetric: spec.symmetric(),
            reversal_closed: spec.reversal_closed(),
            imp: OracleImpl::Spec(spec),
        }
    }

    /// Wraps an arbitrary predicate. The caller asserts the flags; nothing
    /// is checked beyond what [`check_symmetry`] can test after the fact.
    pub fn custom<F>(id: impl Into<String>, symmetric: bool, reversal_closed: bool, f: F) -> Self
    where
        F: Fn(&[u8]) -> bool + Send + Sync + 'static,
    {
        LanguageOracle {
            id: id.into(),
            symmetric,
            reversal_closed,
            imp: OracleImpl::Custom(Arc::new(f)),
        }
    }

    /// The canonicalized spec string (or the custom id).
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn is_reversal_closed(&self) -> bool {
        self.reversal_closed
    }

    /// The spec behind this oracle, when it was built from one.
    pub fn spec(&self) -> Option<&LanguageSpec> {
        match &self.imp {
            OracleImpl::Spec(s) => Some(s),
            OracleImpl::Custom(_) => None,
        }
    }

    pub fn member(&self, x: &BinaryWord) -> bool {
        self.member_bits(x.bits())
    }

    pub fn member_bits(&self, bits: &[u8]) -> bool {
        match &self.imp {
            OracleImpl::Spec(s) => s.member(bits),
            OracleImpl::Custom(f) => f(bits),
        }
    }
}

/// Parses a spec string into an oracle. `hgraph:<path>` reads the host graph
/// from the file system.
pub fn make_oracle(text: &str) -> Result<LanguageOracle> {
    let spec = spec::parse_spec(text, &mut |path| {
        let content = std::fs::read_to_string(path)
            .map_err(|e| Error::format(format!("cannot read host file {path}: {e}")))?;
        crate::files::parse_host_graph(&content)
    })?;
    Ok(LanguageOracle::from_spec(spec))
}

/// Like [`make_oracle`] but resolving host paths through a caller-supplied
/// loader (used by tests that keep hosts in memory).
pub fn make_oracle_with<F>(text: &str, mut load_host: F) -> Result<LanguageOracle>
where
    F: FnMut(&str) -> Result<HostGraph>,
{
    Ok(LanguageOracle::from_spec(spec::parse_spec(
        text,
        &mut load_host,
    )?))
}

/// True iff every interleaving of `0^k` and `1^l` belongs to the language.
pub fn unary_shuffle_subset(l: &LanguageOracle, k: usize, ln: usize) -> Result<bool> {
    let total = k + ln;
    if total > UNARY_SHUFFLE_BOUND {
        return Err(Error::limit(format!(
            "unary shuffle of sizes {k} + {ln} exceeds bound {UNARY_SHUFFLE_BOUND}"
        )));
    }
    // Interleavings of unary words are exactly the words with those symbol
    // counts, so enumerate bitmasks with l ones.
    let mut bits = vec![0u8; total];
    for mask in 0u32..(1 << total) {
        if mask.count_ones() as usize != ln {
            continue;
        }
        for (i, b) in bits.iter_mut().enumerate() {
            *b = ((mask >> i) & 1) as u8;
        }
        if !l.member_bits(&bits) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustively tests `member(x) == member(complement(x))` for all words up
/// to `max_len`.
pub fn check_symmetry(l: &LanguageOracle, max_len: usize) -> Result<bool> {
    if max_len > SYMMETRY_CHECK_BOUND {
        return Err(Error::limit(format!(
            "symmetry check length {max_len} exceeds bound {SYMMETRY_CHECK_BOUND}"
        )));
    }
    let mut bits = Vec::new();
    let mut comp = Vec::new();
    for len in 0..=max_len {
        for code in 0u32..(1 << len) {
            bits.clear();
            comp.clear();
            for i in 0..len {
                let b = ((code >> i) & 1) as u8;
                bits.push(b);
                comp.push(1 - b);
            }
            if l.member_bits(&bits) != l.member_bits(&comp) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One row of the `list-langs` catalog table.
pub struct CatalogEntry {
    pub name: &'static str,
    pub parameter: Option<&'static str>,
    pub reversal_closed: &'static str,
    pub summary: &'static str,
}

/// The base catalog, for display purposes.
pub fn catalog_entries() -> &'static [CatalogEntry] {
    &[
        CatalogEntry {
            name: "classical",
            parameter: None,
            reversal_closed: "yes",
            summary: "strictly alternating words (1|λ)(01)*(0|λ)",
        },
        CatalogEntry {
            name: "pal",
            parameter: None,
            reversal_closed: "yes",
            summary: "nonempty palindromes",
        },
        CatalogEntry {
            name: "detp",
            parameter: None,
            reversal_closed: "yes",
            summary: "doubled palindromes p·c·pᴿ, c in {01,10}, p from 00/11 blocks",
        },
        CatalogEntry {
            name: "copy",
            parameter: None,
            reversal_closed: "yes",
            summary: "copy-words vv (λ included)",
        },
        CatalogEntry {
            name: "copy-mod",
            parameter: Some("k"),
            reversal_closed: "yes",
            summary: "copy-words vv with |v|₀ and |v|₁ incongruent mod k",
        },
        CatalogEntry {
            name: "hgraph",
            parameter: Some("file"),
            reversal_closed: "yes",
            summary: "copy-words vv with {|v|₀ mod k, |v|₁ mod k} an edge of the host",
        },
        CatalogEntry {
            name: "lyndon",
            parameter: None,
            reversal_closed: "no",
            summary: "symmetric hull of binary Lyndon words under 0<1",
        },
        CatalogEntry {
            name: "lyndon-odd",
            parameter: None,
            reversal_closed: "no",
            summary: "odd-length members of lyndon",
        },
        CatalogEntry {
            name: "dyck",
            parameter: None,
            reversal_closed: "yes",
            summary: "symmetric hull of balanced words with prefix zeros ≤ ones",
        },
        CatalogEntry {
            name: "nested",
            parameter: None,
            reversal_closed: "yes",
            summary: "words 0ⁿ1ⁿ or 1ⁿ0ⁿ",
        },
        CatalogEntry {
            name: "balanced",
            parameter: None,
            reversal_closed: "yes",
            summary: "equal symbol counts",
        },
        CatalogEntry {
            name: "parity-odd",
            parameter: None,
            reversal_closed: "yes",
            summary: "both symbol counts odd",
        },
        CatalogEntry {
            name: "parity-even",
            parameter: None,
            reversal_closed: "yes",
            summary: "both symbol counts even",
        },
        CatalogEntry {
            name: "avoid",
            parameter: Some("f1,f2,..."),
            reversal_closed: "depends",
            summary: "words containing none of the factors (list closed under complement)",
        },
        CatalogEntry {
            name: "k11",
            parameter: Some("k"),
            reversal_closed: "yes",
            summary: "at most k adjacent equal-symbol positions",
        },
        CatalogEntry {
            name: "even-square-shuffle",
            parameter: None,
            reversal_closed: "yes",
            summary: "interleavings of (00)⁺ and (11)⁺: both counts even, ≥ 2",
        },
        CatalogEntry {
            name: "first-last-differ",
            parameter: None,
            reversal_closed: "yes",
            summary: "length ≥ 2 with differing first and last symbol",
        },
    ]
}
