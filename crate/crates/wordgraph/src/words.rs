//! Words over arbitrary finite alphabets, binary words, and the projection
//! operation that turns a word plus a pair of letters into a binary word.
//!
//! Letters are string tokens rather than single characters so that vertex
//! names like `v10` or `17` survive a round trip through word files. Tokens
//! that look like canonical decimal numbers sort numerically and before all
//! other tokens; everything else sorts lexicographically.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on `|u| + |v|` for [`shuffle_enumerate`].
pub const SHUFFLE_LEN_BOUND: usize = 16;

/// A single letter: a non-empty token without whitespace or `#`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Letter(String);

impl Letter {
    pub fn new(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        if token.is_empty() {
            return Err(Error::invalid("empty letter token"));
        }
        if token.chars().any(|c| c.is_whitespace() || c == '#') {
            return Err(Error::invalid(format!(
                "letter token {token:?} contains whitespace or '#'"
            )));
        }
        Ok(Letter(token))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// `Some` when the token is a canonical decimal integer (no sign, no
    /// leading zero except `"0"` itself).
    fn numeric_key(&self) -> Option<&str> {
        let s = &self.0;
        if s.bytes().all(|b| b.is_ascii_digit()) && (s.len() == 1 || !s.starts_with('0')) {
            Some(s)
        } else {
            None
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.numeric_key(), other.numeric_key()) {
            // Canonical numbers compare by value: shorter digit string first,
            // then lexicographic. No leading zeros, so this is numeric order.
            (Some(a), Some(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => self.0.cmp(&other.0),
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A finite word over [`Letter`]s. May be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from whitespace-separated tokens.
    pub fn from_tokens(text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(Letter::new)
            .collect::<Result<Vec<_>>>()?;
        Ok(Word(letters))
    }

    /// Builds a word treating every character of `text` as one letter.
    pub fn compact(text: &str) -> Result<Self> {
        let letters = text
            .chars()
            .map(|c| Letter::new(c.to_string()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn alphabet(&self) -> BTreeSet<Letter> {
        self.0.iter().cloned().collect()
    }

    /// Number of occurrences of `a`.
    pub fn count(&self, a: &Letter) -> usize {
        self.0.iter().filter(|x| *x == a).count()
    }

    /// Occurrence counts for every letter of the alphabet.
    pub fn letter_counts(&self) -> BTreeMap<Letter, usize> {
        let mut counts = BTreeMap::new();
        for a in &self.0 {
            *counts.entry(a.clone()).or_insert(0) += 1;
        }
        counts
    }

    /// Groups the alphabet by occurrence count: letters appearing equally
    /// often land in the same cell.
    pub fn frequentness_set(&self) -> BTreeMap<usize, BTreeSet<Letter>> {
        let mut cells: BTreeMap<usize, BTreeSet<Letter>> = BTreeMap::new();
        for (a, c) in self.letter_counts() {
            cells.entry(c).or_default().insert(a);
        }
        cells
    }

    /// True when every letter of the alphabet occurs exactly `k` times.
    pub fn is_uniform(&self, k: usize) -> bool {
        self.letter_counts().values().all(|&c| c == k)
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().cloned().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.0.len();
        (0..n / 2).all(|i| self.0[i] == self.0[n - 1 - i])
    }

    /// True when the word is `vv` for some `v` (the empty word qualifies).
    pub fn is_copy(&self) -> bool {
        let n = self.0.len();
        n % 2 == 0 && self.0[..n / 2] == self.0[n / 2..]
    }

    /// True when the word is not a proper power `v^k`, `k >= 2`.
    /// Errors on the empty word.
    pub fn is_primitive(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::invalid("is_primitive requires a non-empty word"));
        }
        Ok(is_primitive_slice(&self.0))
    }

    /// All `|w|` rotations in order, starting from the word itself.
    /// Duplicates are kept. Errors on the empty word.
    pub fn conjugates(&self) -> Result<Vec<Word>> {
        if self.is_empty() {
            return Err(Error::invalid("conjugates requires a non-empty word"));
        }
        let n = self.0.len();
        Ok((0..n)
            .map(|i| {
                let mut rot = self.0[i..].to_vec();
                rot.extend_from_slice(&self.0[..i]);
                Word(rot)
            })
            .collect())
    }

    /// Lyndon test under a total order on letters given as a sorted slice,
    /// smallest first. The order must cover the word's alphabet.
    pub fn is_lyndon(&self, order: &[Letter]) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::invalid("is_lyndon requires a non-empty word"));
        }
        let mut rank: BTreeMap<&Letter, usize> = BTreeMap::new();
        for (i, a) in order.iter().enumerate() {
            if rank.insert(a, i).is_some() {
                return Err(Error::invalid(format!("duplicate letter {a} in order")));
            }
        }
        let ranks = self
            .0
            .iter()
            .map(|a| {
                rank.get(a)
                    .copied()
                    .ok_or_else(|| Error::invalid(format!("letter {a} missing from order")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(is_lyndon_ranks(&ranks))
    }

    /// The word repeated `k` times.
    pub fn power(&self, k: usize) -> Word {
        let mut out = Vec::with_capacity(self.0.len() * k);
        for _ in 0..k {
            out.extend_from_slice(&self.0);
        }
        Word(out)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }
}

impl fmt::Display for Word {
    /// Space-separated tokens. Use [`crate::files::serialize_word`] for the
    /// compact form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// A word over `{0, 1}`, stored as bit values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::invalid("binary word bits must be 0 or 1"));
        }
        Ok(BinaryWord(bits))
    }

    /// Parses a string of `0` and `1` characters. The empty string is the
    /// empty word.
    pub fn parse(text: &str) -> Result<Self> {
        text.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::invalid(format!(
                    "binary word may only contain 0 and 1, found {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryWord)
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_zeros(&self) -> usize {
        self.0.iter().filter(|&&b| b == 0).count()
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    /// Letter-wise complement: swaps 0 and 1.
    pub fn complement(&self) -> BinaryWord {
        BinaryWord(self.0.iter().map(|&b| 1 - b).collect())
    }

    pub fn reverse(&self) -> BinaryWord {
        BinaryWord(self.0.iter().rev().copied().collect())
    }

    /// The lexicographically smaller of the word and its complement
    /// (under 0 < 1).
    pub fn normal_form(&self) -> BinaryWord {
        let comp = self.complement();
        if *self <= comp {
            self.clone()
        } else {
            comp
        }
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.0.len();
        (0..n / 2).all(|i| self.0[i] == self.0[n - 1 - i])
    }

    pub fn is_copy(&self) -> bool {
        let n = self.0.len();
        n % 2 == 0 && self.0[..n / 2] == self.0[n / 2..]
    }

    pub fn is_primitive(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::invalid("is_primitive requires a non-empty word"));
        }
        Ok(is_primitive_slice(&self.0))
    }

    /// Lyndon test under 0 < 1.
    pub fn is_lyndon(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::invalid("is_lyndon requires a non-empty word"));
        }
        Ok(is_lyndon_ranks(&self.0))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Erases every letter of `w` except `u` and `v`, then maps `u` to 0 and `v`
/// to 1. Errors when `u == v`.
pub fn project(w: &Word, u: &Letter, v: &Letter) -> Result<BinaryWord> {
    if u == v {
        return Err(Error::invalid("project requires two distinct letters"));
    }
    let bits = w
        .letters()
        .iter()
        .filter_map(|a| {
            if a == u {
                Some(0)
            } else if a == v {
                Some(1)
            } else {
                None
            }
        })
        .collect();
    Ok(BinaryWord(bits))
}

/// Index of the lexicographically least rotation (Booth's algorithm).
pub(crate) fn least_rotation_index<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n <= 1 {
        return 0;
    }
    let mut f: Vec<isize> = vec![-1; 2 * n];
    let mut k: usize = 0;
    for j in 1..2 * n {
        let sj = &s[j % n];
        let mut i = f[j - k - 1];
        while i != -1 && *sj != s[(k + i as usize + 1) % n] {
            if *sj < s[(k + i as usize + 1) % n] {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if i == -1 && *sj != s[k % n] {
            if *sj < s[k % n] {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    k
}

fn is_primitive_slice<T: Eq>(s: &[T]) -> bool {
    let n = s.len();
    // w is a proper power of its period-p prefix iff p properly divides n
    // and the word equals itself shifted by p.
    for p in 1..n {
        if n % p == 0 && (p..n).all(|i| s[i] == s[i - p]) {
            return false;
        }
    }
    true
}

/// A word is Lyndon iff it is primitive and its least rotation is itself.
pub(crate) fn is_lyndon_ranks<T: Ord + Eq>(ranks: &[T]) -> bool {
    if ranks.len() == 1 {
        return true;
    }
    is_primitive_slice(ranks) && least_rotation_index(ranks) == 0
}

/// All distinct shuffles (interleavings) of `u` and `v`.
///
/// Bounded by [`SHUFFLE_LEN_BOUND`] on `|u| + |v|`; use
/// [`shuffle_enumerate_bounded`] to pick another bound explicitly.
pub fn shuffle_enumerate(u: &Word, v: &Word) -> Result<BTreeSet<Word>> {
    shuffle_enumerate_bounded(u, v, SHUFFLE_LEN_BOUND)
}

pub fn shuffle_enumerate_bounded(u: &Word, v: &Word, bound: usize) -> Result<BTreeSet<Word>> {
    let total = u.len() + v.len();
    if total > bound {
        return Err(Error::limit(format!(
            "shuffle of lengths {} + {} exceeds bound {bound}",
            u.len(),
            v.len()
        )));
    }
    let mut out = BTreeSet::new();
    let mut buf: Vec<Letter> = Vec::with_capacity(total);
    fn go(
        u: &[Letter],
        v: &[Letter],
        buf: &mut Vec<Letter>,
        out: &mut BTreeSet<Word>,
    ) {
        if u.is_empty() && v.is_empty() {
            out.insert(Word::new(buf.clone()));
            return;
        }
        if let Some((first, rest)) = u.split_first() {
            buf.push(first.clone());
            go(rest, v, buf, out);
            buf.pop();
        }
        if let Some((first, rest)) = v.split_first() {
            buf.push(first.clone());
            go(u, rest, buf, out);
            buf.pop();
        }
    }
    go(u.letters(), v.letters(), &mut buf, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::compact(s).unwrap()
    }

    fn b(s: &str) -> BinaryWord {
        BinaryWord::parse(s).unwrap()
    }

    fn l(s: &str) -> Letter {
        Letter::new(s).unwrap()
    }

    #[test]
    fn letter_rejects_bad_tokens() {
        assert!(Letter::new("").is_err());
        assert!(Letter::new("a b").is_err());
        assert!(Letter::new("#x").is_err());
        assert!(Letter::new("v10").is_ok());
    }

    #[test]
    fn letters_sort_numerically_then_lexically() {
        let mut xs = vec![l("10"), l("2"), l("b"), l("a"), l("1"), l("v2")];
        xs.sort();
        let got: Vec<&str> = xs.iter().map(|x| x.as_str()).collect();
        assert_eq!(got, ["1", "2", "10", "a", "b", "v2"]);
        // "01" has a leading zero, so it is not numeric and sorts as text.
        assert!(l("01") > l("10"));
    }

    #[test]
    fn project_erases_and_maps() {
        let banana = w("banana");
        let p = project(&banana, &l("a"), &l("b")).unwrap();
        assert_eq!(p.to_string(), "1000");
        let q = project(&banana, &l("b"), &l("a")).unwrap();
        assert_eq!(q.to_string(), "0111");
        // Letters absent from the word simply give the empty projection of
        // the rest.
        let r = project(&banana, &l("a"), &l("z")).unwrap();
        assert_eq!(r.to_string(), "000");
        assert!(project(&banana, &l("a"), &l("a")).is_err());
    }

    #[test]
    fn complement_and_normal_form() {
        assert_eq!(b("100").complement().to_string(), "011");
        assert_eq!(b("100").normal_form().to_string(), "011");
        assert_eq!(b("011").normal_form().to_string(), "011");
        assert_eq!(b("010").normal_form().to_string(), "010");
        assert_eq!(b("").normal_form().to_string(), "");
    }

    #[test]
    fn palindrome_and_copy() {
        assert!(w("").is_palindrome());
        assert!(w("aba").is_palindrome());
        assert!(!w("ab").is_palindrome());
        assert!(w("").is_copy());
        assert!(w("abab").is_copy());
        assert!(!w("aba").is_copy());
        assert!(!w("abba").is_copy());
    }

    #[test]
    fn primitivity() {
        assert!(w("a").is_primitive().unwrap());
        assert!(w("ab").is_primitive().unwrap());
        assert!(!w("abab").is_primitive().unwrap());
        assert!(w("aab").is_primitive().unwrap());
        assert!(!w("aaa").is_primitive().unwrap());
        assert!(w("").is_primitive().is_err());
    }

    #[test]
    fn conjugates_keep_duplicates() {
        let cs = w("aa").conjugates().unwrap();
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0], w("aa"));
        assert_eq!(cs[1], w("aa"));
        let cs = w("abc").conjugates().unwrap();
        assert_eq!(cs, vec![w("abc"), w("bca"), w("cab")]);
        assert!(w("").conjugates().is_err());
    }

    #[test]
    fn lyndon_examples() {
        assert!(b("0").is_lyndon().unwrap());
        assert!(b("1").is_lyndon().unwrap());
        assert!(b("01").is_lyndon().unwrap());
        assert!(!b("10").is_lyndon().unwrap());
        assert!(b("001").is_lyndon().unwrap());
        // 010 has the smaller rotation 001.
        assert!(!b("010").is_lyndon().unwrap());
        // Not primitive.
        assert!(!b("0101").is_lyndon().unwrap());
        assert!(b("0011").is_lyndon().unwrap());
        let order = vec![l("a"), l("b"), l("c")];
        assert!(w("aab").is_lyndon(&order).unwrap());
        assert!(!w("aba").is_lyndon(&order).unwrap());
        // Reversed order flips the verdict of non-trivial words.
        let rev_order = vec![l("c"), l("b"), l("a")];
        assert!(!w("aab").is_lyndon(&rev_order).unwrap());
        assert!(w("ba").is_lyndon(&rev_order).unwrap());
        assert!(w("x").is_lyndon(&[l("x")]).unwrap());
        assert!(w("ax").is_lyndon(&[l("a")]).is_err());
    }

    // Booth's algorithm against plain enumeration of rotations, every binary
    // word up to length 12 and every ternary word up to length 8.
    #[test]
    fn least_rotation_matches_enumeration() {
        fn brute<T: Ord + Clone>(s: &[T]) -> Vec<T> {
            let n = s.len();
            (0..n)
                .map(|i| {
                    let mut rot = s[i..].to_vec();
                    rot.extend_from_slice(&s[..i]);
                    rot
                })
                .min()
                .unwrap()
        }
        for len in 1..=12usize {
            for code in 0..(1u32 << len) {
                let s: Vec<u8> = (0..len).map(|i| ((code >> i) & 1) as u8).collect();
                let k = least_rotation_index(&s);
                let mut rot = s[k..].to_vec();
                rot.extend_from_slice(&s[..k]);
                assert_eq!(rot, brute(&s), "binary word {s:?}");
            }
        }
        for len in 1..=8usize {
            for code in 0..3u32.pow(len as u32) {
                let mut c = code;
                let s: Vec<u8> = (0..len)
                    .map(|_| {
                        let d = (c % 3) as u8;
                        c /= 3;
                        d
                    })
                    .collect();
                let k = least_rotation_index(&s);
                let mut rot = s[k..].to_vec();
                rot.extend_from_slice(&s[..k]);
                assert_eq!(rot, brute(&s), "ternary word {s:?}");
            }
        }
    }

    #[test]
    fn shuffles() {
        let got = shuffle_enumerate(&w("00"), &w("1")).unwrap();
        let want: BTreeSet<Word> = [w("100"), w("010"), w("001")].into_iter().collect();
        assert_eq!(got, want);
        // Duplicate interleavings collapse.
        let got = shuffle_enumerate(&w("a"), &w("a")).unwrap();
        assert_eq!(got.len(), 1);
        assert!(shuffle_enumerate_bounded(&w("aaaa"), &w("bbb"), 6).is_err());
        let empty = shuffle_enumerate(&w(""), &w("")).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(empty.contains(&Word::empty()));
    }

    #[test]
    fn counts_and_frequentness() {
        let word = w("banana");
        assert_eq!(word.count(&l("a")), 3);
        assert_eq!(word.count(&l("n")), 2);
        assert_eq!(word.count(&l("z")), 0);
        let cells = word.frequentness_set();
        assert_eq!(cells[&3], [l("a")].into_iter().collect());
        assert_eq!(cells[&2], [l("n")].into_iter().collect());
        assert_eq!(cells[&1], [l("b")].into_iter().collect());
        assert!(w("abab").is_uniform(2));
        assert!(!w("aab").is_uniform(2));
        // Vacuously uniform.
        assert!(w("").is_uniform(7));
    }

    #[test]
    fn word_display_roundtrip() {
        let word = Word::from_tokens("v1 v2 v1").unwrap();
        assert_eq!(word.to_string(), "v1 v2 v1");
        assert_eq!(Word::from_tokens(&word.to_string()).unwrap(), word);
        assert_eq!(w("aba").reverse(), w("aba"));
        assert_eq!(w("ab").reverse(), w("ba"));
        assert_eq!(w("ab").power(3), w("ababab"));
        assert_eq!(w("ab").power(0), w(""));
    }
}
