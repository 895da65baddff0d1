//! Exhaustive desk-scale surveys: which graphs a language can represent,
//! and machine checks of soundness and completeness for class theorems.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::codec::{
    decode, encode_bipartite_lyndon, encode_bipartite_palindrome, encode_cluster, encode_dyck,
    encode_mod_scheme, ModHost,
};
use crate::error::{Error, Result};
use crate::graphs::{
    canonical_form, canonical_graphs, find_isomorphism, find_structure, recognize, ClassWitness,
    Graph, GraphClass,
};
use crate::languages::{LanguageOracle, LanguageSpec};
use crate::words::{Letter, Word};

/// Largest vertex count the atlas routines accept.
pub const MAX_ATLAS_N: usize = 5;

/// Largest word length the atlas routines accept.
pub const MAX_ATLAS_LEN: usize = 12;

/// How a recognizer-positive graph was shown to be representable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverageKind {
    Encoder,
    Enumerated,
    Searched,
}

impl fmt::Display for CoverageKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverageKind::Encoder => write!(f, "encoder"),
            CoverageKind::Enumerated => write!(f, "enumerated"),
            CoverageKind::Searched => write!(f, "searched"),
        }
    }
}

/// One completeness record: the graph with canonical code `code` on `n`
/// vertices is representable, established by `kind`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageLine {
    pub n: usize,
    pub code: String,
    pub kind: CoverageKind,
}

/// A violation discovered while checking a class theorem. Every variant
/// carries enough data to re-verify the claim independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    /// `word` decodes to a graph outside the class.
    Soundness { n: usize, code: String, word: Word },
    /// The graph is in the class but no witness word was found within the
    /// bounds. This does not refute the theorem; it only marks a gap the
    /// current bounds cannot close.
    Inconclusive { n: usize, code: String },
    /// A scheme produced `word` for the graph but the word decodes to
    /// something else.
    EncoderMismatch { n: usize, code: String, word: Word },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Soundness { n, code, word } => write!(
                f,
                "soundness: word {} decodes to {}:{} which is outside the class",
                word_text(word),
                n,
                code
            ),
            Counterexample::Inconclusive { n, code } => write!(
                f,
                "completeness: graph {n}:{code} was not reached within the bounds"
            ),
            Counterexample::EncoderMismatch { n, code, word } => write!(
                f,
                "encoder: word {} does not decode back to {}:{}",
                word_text(word),
                n,
                code
            ),
        }
    }
}

/// Result of a survey or a class check.
#[derive(Debug, Clone)]
pub struct AtlasReport {
    pub oracle_id: String,
    pub class_id: Option<String>,
    pub max_n: usize,
    pub max_len: usize,
    /// Representable graphs keyed by vertex count and canonical code, each
    /// with the first witness word the survey met.
    pub found: BTreeMap<(usize, String), Word>,
    pub coverage: Vec<CoverageLine>,
    pub counterexamples: Vec<Counterexample>,
}

impl AtlasReport {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Human-readable multi-line account of the run.
    pub fn summary(&self) -> String {
        let mut lines = vec![format!("language: {}", self.oracle_id)];
        if let Some(class) = &self.class_id {
            lines.push(format!("class: {class}"));
        }
        lines.push(format!(
            "bounds: n <= {}, len <= {}",
            self.max_n, self.max_len
        ));
        lines.push(format!("graphs found: {}", self.found.len()));
        if self.class_id.is_some() {
            let count = |k: CoverageKind| self.coverage.iter().filter(|c| c.kind == k).count();
            lines.push(format!(
                "coverage: {} by encoder, {} enumerated, {} searched",
                count(CoverageKind::Encoder),
                count(CoverageKind::Enumerated),
                count(CoverageKind::Searched)
            ));
        }
        if self.counterexamples.is_empty() {
            lines.push("counterexamples: none".to_string());
        } else {
            lines.push(format!("counterexamples: {}", self.counterexamples.len()));
            for c in &self.counterexamples {
                lines.push(format!("  {c}"));
            }
        }
        lines.join("\n")
    }

    /// Line-per-finding format: kind, word or code, verdict, tab-separated.
    pub fn tsv(&self) -> String {
        let mut out = String::new();
        for (n, code) in self.found.keys() {
            out.push_str(&format!("graph\t{n}:{code}\tfound\n"));
        }
        for line in &self.coverage {
            out.push_str(&format!("coverage\t{}:{}\t{}\n", line.n, line.code, line.kind));
        }
        for c in &self.counterexamples {
            match c {
                Counterexample::Soundness { word, .. } => {
                    out.push_str(&format!("soundness\t{}\trefuted\n", word_text(word)));
                }
                Counterexample::Inconclusive { n, code } => {
                    out.push_str(&format!("completeness\t{n}:{code}\tinconclusive\n"));
                }
                Counterexample::EncoderMismatch { word, .. } => {
                    out.push_str(&format!("encoder\t{}\tmismatch\n", word_text(word)));
                }
            }
        }
        out
    }
}

fn word_text(w: &Word) -> String {
    if w.letters().iter().all(|l| l.as_str().len() == 1) {
        w.letters().iter().map(|l| l.as_str()).collect()
    } else {
        let tokens: Vec<&str> = w.letters().iter().map(|l| l.as_str()).collect();
        tokens.join(" ")
    }
}

fn atlas_letter(i: usize) -> Letter {
    Letter::new(((b'a' + i as u8) as char).to_string()).expect("ascii letter")
}

fn check_bounds(max_n: usize, max_len: usize) -> Result<()> {
    if max_n == 0 || max_len == 0 {
        return Err(Error::invalid("atlas bounds must be at least 1"));
    }
    if max_n > MAX_ATLAS_N {
        return Err(Error::limit(format!(
            "atlas vertex bound {max_n} exceeds the supported maximum {MAX_ATLAS_N}"
        )));
    }
    if max_len > MAX_ATLAS_LEN {
        return Err(Error::limit(format!(
            "atlas length bound {max_len} exceeds the supported maximum {MAX_ATLAS_LEN}"
        )));
    }
    Ok(())
}

fn check_oracle(l: &LanguageOracle) -> Result<()> {
    if !l.is_symmetric() {
        return Err(Error::invalid(format!(
            "language {} is not marked 0-1-symmetric, so decoding is undefined",
            l.id()
        )));
    }
    Ok(())
}

/// Edge bits of the graph decoded from `word` restricted to letters
/// `0..used`, one bit per pair (i, j) with i < j in lexicographic order.
fn decode_mask(l: &LanguageOracle, word: &[u8], used: usize) -> u32 {
    let mut mask = 0u32;
    let mut bit = 0u32;
    let mut proj: Vec<u8> = Vec::with_capacity(word.len());
    for i in 0..used as u8 {
        for j in (i + 1)..used as u8 {
            proj.clear();
            for &c in word {
                if c == i {
                    proj.push(0);
                } else if c == j {
                    proj.push(1);
                }
            }
            if l.member_bits(&proj) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

fn graph_from_mask(used: usize, mask: u32) -> Graph {
    let letters: Vec<Letter> = (0..used).map(atlas_letter).collect();
    let mut edges = Vec::new();
    let mut bit = 0u32;
    for i in 0..used {
        for j in (i + 1)..used {
            if mask & (1 << bit) != 0 {
                edges.push((letters[i].clone(), letters[j].clone()));
            }
            bit += 1;
        }
    }
    Graph::new(letters, edges).expect("mask graphs are loop-free with declared endpoints")
}

fn index_word(indices: &[u8]) -> Word {
    Word::new(indices.iter().map(|&c| atlas_letter(c as usize)).collect())
}

struct Survey<'a> {
    l: &'a LanguageOracle,
    max_n: usize,
    max_len: usize,
    word: Vec<u8>,
    seen: BTreeSet<(usize, u32)>,
    found: BTreeMap<(usize, String), Word>,
}

impl Survey<'_> {
    fn extend(&mut self, used: usize) {
        if self.word.len() == self.max_len {
            return;
        }
        let cap = (used + 1).min(self.max_n);
        for c in 0..cap as u8 {
            self.word.push(c);
            let now = used.max(c as usize + 1);
            self.record(now);
            self.extend(now);
            self.word.pop();
        }
    }

    fn record(&mut self, used: usize) {
        let mask = decode_mask(self.l, &self.word, used);
        if !self.seen.insert((used, mask)) {
            return;
        }
        let g = graph_from_mask(used, mask);
        let code = canonical_form(&g).expect("atlas graphs stay inside the isomorphism bound");
        let word = &self.word;
        self.found
            .entry((used, code))
            .or_insert_with(|| index_word(word));
    }
}

/// Decodes every word up to `max_len` letters over alphabets of up to
/// `max_n` letters and collects the isomorphism classes that appear.
/// Renaming-equivalent words are enumerated once, so the witness words use
/// letters a, b, c, ... in order of first occurrence.
pub fn enumerate_class(l: &LanguageOracle, max_n: usize, max_len: usize) -> Result<AtlasReport> {
    check_bounds(max_n, max_len)?;
    check_oracle(l)?;
    let mut survey = Survey {
        l,
        max_n,
        max_len,
        word: Vec::with_capacity(max_len),
        seen: BTreeSet::new(),
        found: BTreeMap::new(),
    };
    survey.extend(0);
    Ok(AtlasReport {
        oracle_id: l.id().to_string(),
        class_id: None,
        max_n,
        max_len,
        found: survey.found,
        coverage: Vec::new(),
        counterexamples: Vec::new(),
    })
}

struct SearchCtx<'a> {
    l: &'a LanguageOracle,
    g: &'a Graph,
    n: usize,
    iso: BTreeMap<u32, Option<Vec<usize>>>,
}

impl SearchCtx<'_> {
    fn dfs(&mut self, word: &mut Vec<u8>, used: usize, len: usize) -> Result<Option<Word>> {
        if word.len() == len {
            if used < self.n {
                return Ok(None);
            }
            return self.accept(word);
        }
        if used + (len - word.len()) < self.n {
            return Ok(None);
        }
        let cap = (used + 1).min(self.n);
        for c in 0..cap as u8 {
            word.push(c);
            let now = used.max(c as usize + 1);
            if let Some(w) = self.dfs(word, now, len)? {
                return Ok(Some(w));
            }
            word.pop();
        }
        Ok(None)
    }

    fn accept(&mut self, word: &[u8]) -> Result<Option<Word>> {
        let mask = decode_mask(self.l, word, self.n);
        if mask.count_ones() as usize != self.g.m() {
            return Ok(None);
        }
        if !self.iso.contains_key(&mask) {
            let cand = graph_from_mask(self.n, mask);
            let map = find_isomorphism(&cand, self.g)?;
            self.iso.insert(mask, map);
        }
        match self.iso.get(&mask).expect("cached") {
            Some(map) => {
                let verts = self.g.vertices();
                let letters = word
                    .iter()
                    .map(|&c| verts[map[c as usize]].clone())
                    .collect();
                Ok(Some(Word::new(letters)))
            }
            None => Ok(None),
        }
    }
}

/// Finds a shortest word whose alphabet is exactly the vertex set of `g`
/// and which decodes to `g`, or reports that none exists within `max_len`.
pub fn search_word(l: &LanguageOracle, g: &Graph, max_len: usize) -> Result<Option<Word>> {
    check_bounds(g.n(), max_len.max(1))?;
    check_oracle(l)?;
    let n = g.n();
    let mut ctx = SearchCtx {
        l,
        g,
        n,
        iso: BTreeMap::new(),
    };
    for len in n..=max_len {
        let mut word = Vec::with_capacity(len);
        if let Some(w) = ctx.dfs(&mut word, 0, len)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn cross_edge_lyndon(g: &Graph, a: &BTreeSet<Letter>, b: &BTreeSet<Letter>) -> Result<Word> {
    let cross = g
        .edges()
        .iter()
        .filter(|(u, v)| a.contains(u) != a.contains(v))
        .cloned()
        .collect::<Vec<_>>();
    let h = Graph::new(g.vertices().iter().cloned(), cross)?;
    encode_bipartite_lyndon(&h, a, b)
}

/// Produces a witness word for `g` when a constructive scheme matches the
/// oracle and class, or `None` when no scheme applies.
///
/// The two or-languages ride on the bipartite Lyndon scheme applied to the
/// cross edges only: side-a letters end up with odd counts and side-b
/// letters with even counts, so the parity components decide every
/// same-side pair (forcing the cliques the class demands) while lyndon-odd
/// decides the cross pairs exactly as in the bipartite case.
pub fn encoder_witness(
    l: &LanguageOracle,
    class: &GraphClass,
    g: &Graph,
) -> Result<Option<Word>> {
    let id = l.id();
    match class {
        GraphClass::Comparability if id == "dyck" => {
            if let Some(ClassWitness::Order(ord)) = find_structure(g, class)? {
                return Ok(Some(encode_dyck(g, &ord)?));
            }
        }
        GraphClass::Bipartite if id == "and(classical,pal)" || id == "lyndon-odd" => {
            if let Some(ClassWitness::Bipartition { a, b }) = find_structure(g, class)? {
                let w = if id == "lyndon-odd" {
                    encode_bipartite_lyndon(g, &a, &b)?
                } else {
                    encode_bipartite_palindrome(g, &a, &b)?
                };
                return Ok(Some(w));
            }
        }
        GraphClass::Cluster if id == "balanced" || id == "nested" => {
            if let Some(ClassWitness::Partition(parts)) = find_structure(g, class)? {
                return Ok(Some(encode_cluster(g, &parts)?));
            }
        }
        GraphClass::KColorable(k) => {
            if let Some(LanguageSpec::CopyMod(km)) = l.spec() {
                if km == k {
                    if let Some(ClassWitness::Coloring(f)) = find_structure(g, class)? {
                        return Ok(Some(encode_mod_scheme(g, &ModHost::Clique(*km), &f)?));
                    }
                }
            }
        }
        GraphClass::HColorable { host, .. } => {
            if let Some(LanguageSpec::HGraph { host: lh, .. }) = l.spec() {
                if lh == host {
                    if let Some(ClassWitness::Homomorphism(f)) = find_structure(g, class)? {
                        return Ok(Some(encode_mod_scheme(
                            g,
                            &ModHost::Host(lh.clone()),
                            &f,
                        )?));
                    }
                }
            }
        }
        GraphClass::Split if id == "or(lyndon-odd,parity-odd)" => {
            if let Some(ClassWitness::SplitParts {
                clique,
                independent,
            }) = find_structure(g, class)?
            {
                return Ok(Some(cross_edge_lyndon(g, &clique, &independent)?));
            }
        }
        GraphClass::Cobipartite if id == "or(lyndon-odd,or(parity-even,parity-odd))" => {
            if let Some(ClassWitness::Bipartition { a, b }) = find_structure(g, class)? {
                return Ok(Some(cross_edge_lyndon(g, &a, &b)?));
            }
        }
        _ => {}
    }
    Ok(None)
}

/// Checks a class theorem at desk scale. Soundness: every decoded graph
/// lies in the class. Completeness: every class member with at most
/// `max_n` vertices is reached, preferably by a constructive scheme, else
/// by the survey or a direct search. Gaps are reported as inconclusive
/// rather than as refutations.
pub fn verify_class(
    l: &LanguageOracle,
    class: &GraphClass,
    max_n: usize,
    max_len: usize,
) -> Result<AtlasReport> {
    let mut report = enumerate_class(l, max_n, max_len)?;
    report.class_id = Some(class.to_string());

    for ((n, code), word) in &report.found {
        let g = decode(l, word)?;
        if !recognize(&g, class)? {
            report.counterexamples.push(Counterexample::Soundness {
                n: *n,
                code: code.clone(),
                word: word.clone(),
            });
        }
    }

    for n in 1..=max_n {
        for rep in canonical_graphs(n)? {
            if !recognize(&rep, class)? {
                continue;
            }
            let code = canonical_form(&rep)?;
            if let Some(word) = encoder_witness(l, class, &rep)? {
                if decode(l, &word)? == rep {
                    report.coverage.push(CoverageLine {
                        n,
                        code,
                        kind: CoverageKind::Encoder,
                    });
                } else {
                    report
                        .counterexamples
                        .push(Counterexample::EncoderMismatch { n, code, word });
                }
                continue;
            }
            if report.found.contains_key(&(n, code.clone())) {
                report.coverage.push(CoverageLine {
                    n,
                    code,
                    kind: CoverageKind::Enumerated,
                });
                continue;
            }
            if search_word(l, &rep, max_len)?.is_some() {
                report.coverage.push(CoverageLine {
                    n,
                    code,
                    kind: CoverageKind::Searched,
                });
                continue;
            }
            report
                .counterexamples
                .push(Counterexample::Inconclusive { n, code });
        }
    }

    report.coverage.sort_by(|x, y| (x.n, &x.code).cmp(&(y.n, &y.code)));
    Ok(report)
}
