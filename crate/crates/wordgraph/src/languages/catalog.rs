//! Membership predicates for the base languages. All of them operate on raw
//! bit slices so that the decoder and the atlas can avoid allocations.

use crate::graphs::HostGraph;
use crate::words::is_lyndon_ranks;

pub(crate) fn classical(x: &[u8]) -> bool {
    x.windows(2).all(|p| p[0] != p[1])
}

pub(crate) fn pal(x: &[u8]) -> bool {
    !x.is_empty() && is_palindrome(x)
}

pub(crate) fn is_palindrome(x: &[u8]) -> bool {
    let n = x.len();
    (0..n / 2).all(|i| x[i] == x[n - 1 - i])
}

// Doubled-palindrome words p·c·p^R with c ∈ {01, 10} and p built from 00/11
// blocks. The block condition forces |x| ≡ 2 (mod 4).
pub(crate) fn detp(x: &[u8]) -> bool {
    let n = x.len();
    if n < 2 || n % 2 != 0 {
        return false;
    }
    let m = (n - 2) / 2;
    if m % 2 != 0 {
        return false;
    }
    let p = &x[..m];
    let c = &x[m..m + 2];
    let q = &x[m + 2..];
    (c == [0, 1] || c == [1, 0])
        && q.iter().rev().eq(p.iter())
        && p.chunks(2).all(|b| b[0] == b[1])
}

pub(crate) fn copy(x: &[u8]) -> bool {
    let n = x.len();
    n % 2 == 0 && x[..n / 2] == x[n / 2..]
}

pub(crate) fn copy_mod(k: u32, x: &[u8]) -> bool {
    if !copy(x) {
        return false;
    }
    let half = &x[..x.len() / 2];
    let zeros = half.iter().filter(|&&b| b == 0).count();
    let ones = half.len() - zeros;
    zeros % k as usize != ones % k as usize
}

pub(crate) fn hgraph(host: &HostGraph, x: &[u8]) -> bool {
    if !copy(x) {
        return false;
    }
    let half = &x[..x.len() / 2];
    let zeros = half.iter().filter(|&&b| b == 0).count() as u32;
    let ones = half.len() as u32 - zeros;
    host.has_edge(zeros % host.modulus(), ones % host.modulus())
}

pub(crate) fn lyndon(x: &[u8]) -> bool {
    if x.is_empty() {
        return false;
    }
    if is_lyndon_ranks(x) {
        return true;
    }
    let comp: Vec<u8> = x.iter().map(|&b| 1 - b).collect();
    is_lyndon_ranks(&comp)
}

pub(crate) fn lyndon_odd(x: &[u8]) -> bool {
    x.len() % 2 == 1 && lyndon(x)
}

// The one-sided Dyck condition: balanced, and no prefix has more zeros than
// ones. Exposed separately so tests can build the non-hulled oracle.
pub(crate) fn dyck_one_sided(x: &[u8]) -> bool {
    let mut diff: i64 = 0;
    for &b in x {
        if b == 1 {
            diff += 1;
        } else {
            diff -= 1;
            if diff < 0 {
                return false;
            }
        }
    }
    diff == 0
}

pub(crate) fn dyck(x: &[u8]) -> bool {
    if dyck_one_sided(x) {
        return true;
    }
    // Complement pass without allocating: swap the roles of 0 and 1.
    let mut diff: i64 = 0;
    for &b in x {
        if b == 0 {
            diff += 1;
        } else {
            diff -= 1;
            if diff < 0 {
                return false;
            }
        }
    }
    diff == 0
}

// 0^n 1^n or 1^n 0^n.
pub(crate) fn nested(x: &[u8]) -> bool {
    if x.is_empty() {
        return true;
    }
    let first = x[0];
    let lead = x.iter().take_while(|&&b| b == first).count();
    let tail = &x[lead..];
    tail.len() == lead && tail.iter().all(|&b| b != first)
}

pub(crate) fn balanced(x: &[u8]) -> bool {
    let zeros = x.iter().filter(|&&b| b == 0).count();
    2 * zeros == x.len()
}

pub(crate) fn parity_odd(x: &[u8]) -> bool {
    let zeros = x.iter().filter(|&&b| b == 0).count();
    zeros % 2 == 1 && (x.len() - zeros) % 2 == 1
}

pub(crate) fn parity_even(x: &[u8]) -> bool {
    let zeros = x.iter().filter(|&&b| b == 0).count();
    zeros % 2 == 0 && (x.len() - zeros) % 2 == 0
}

pub(crate) fn avoid(factors: &[Vec<u8>], x: &[u8]) -> bool {
    factors.iter().all(|f| !has_factor(x, f))
}

fn has_factor(x: &[u8], f: &[u8]) -> bool {
    f.len() <= x.len() && x.windows(f.len()).any(|w| w == f)
}

pub(crate) fn k11(k: u32, x: &[u8]) -> bool {
    let repeats = x.windows(2).filter(|p| p[0] == p[1]).count();
    repeats <= k as usize
}

// Interleavings of (0²)⁺ and (1²)⁺: both counts even and at least 2.
pub(crate) fn even_square_shuffle(x: &[u8]) -> bool {
    let zeros = x.iter().filter(|&&b| b == 0).count();
    let ones = x.len() - zeros;
    zeros >= 2 && ones >= 2 && zeros % 2 == 0 && ones % 2 == 0
}

pub(crate) fn first_last_differ(x: &[u8]) -> bool {
    x.len() >= 2 && x[0] != x[x.len() - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Vec<u8> {
        s.chars().map(|c| c as u8 - b'0').collect()
    }

    #[test]
    fn classical_edges() {
        assert!(classical(&[]));
        assert!(classical(&bits("0")));
        assert!(classical(&bits("0101")));
        assert!(classical(&bits("1010")));
        assert!(!classical(&bits("00")));
    }

    #[test]
    fn detp_members() {
        assert!(detp(&bits("01")));
        assert!(detp(&bits("10")));
        // 1100 has c = "10"? no: m = 1, odd, rejected outright.
        assert!(!detp(&bits("0011")));
        assert!(!detp(&bits("1100")));
        // p = "11", c = "01", q = "11".
        assert!(detp(&bits("110111")));
        // q must be p reversed: p = "11", q = "00" fails.
        assert!(!detp(&bits("110100")));
        // p = "10" is not a 00/11 block.
        assert!(!detp(&bits("100101")));
        assert!(!detp(&bits("0")));
        assert!(!detp(&[]));
    }

    #[test]
    fn copy_family() {
        assert!(copy(&[]));
        assert!(copy(&bits("0101")));
        assert!(!copy(&bits("01")));
        // copy-mod: counts 1 vs 1 are congruent mod anything.
        assert!(!copy_mod(2, &bits("0101")));
        // v = 00: counts 2 vs 0 agree mod 2 but differ mod 3.
        assert!(!copy_mod(2, &bits("0000")));
        assert!(copy_mod(3, &bits("0000")));
        // k = 1 collapses every pair of counts.
        assert!(!copy_mod(1, &bits("0000")));
        assert!(!copy_mod(3, &bits("0100")));
    }

    #[test]
    fn hgraph_residues() {
        // Host: single edge {0,1} on k = 2 residues, no loops.
        let host = HostGraph::new(2, [(0, 1)]).unwrap();
        // v = 0: counts (1, 0), residues {1, 0}: edge.
        assert!(hgraph(&host, &bits("00")));
        // v = 01: counts (1, 1), residues {1, 1}: no loop at 1.
        assert!(!hgraph(&host, &bits("0101")));
        let loopy = HostGraph::new(2, [(1, 1)]).unwrap();
        assert!(hgraph(&loopy, &bits("0101")));
        assert!(!hgraph(&loopy, &bits("00")));
    }

    #[test]
    fn lyndon_hull() {
        assert!(lyndon(&bits("01")));
        // 10 is not Lyndon but its complement 01 is.
        assert!(lyndon(&bits("10")));
        assert!(!lyndon(&bits("010")));
        assert!(!lyndon(&bits("101")));
        assert!(lyndon(&bits("0011")));
        assert!(!lyndon(&[]));
        assert!(lyndon_odd(&bits("001")));
        assert!(!lyndon_odd(&bits("0011")));
    }

    #[test]
    fn dyck_hull() {
        assert!(dyck_one_sided(&bits("1100")));
        assert!(!dyck_one_sided(&bits("0011")));
        assert!(dyck(&bits("0011")));
        assert!(dyck(&bits("1100")));
        assert!(dyck(&[]));
        assert!(!dyck(&bits("0110")));
        // 01: one-sided fails on the prefix 0, the complement pass accepts.
        assert!(dyck(&bits("01")));
        assert!(dyck(&bits("10")));
        assert!(!dyck(&bits("0")));
    }

    #[test]
    fn nested_and_balanced() {
        assert!(nested(&[]));
        assert!(nested(&bits("01")));
        assert!(nested(&bits("0011")));
        assert!(nested(&bits("1100")));
        assert!(!nested(&bits("0101")));
        assert!(!nested(&bits("00")));
        assert!(!nested(&bits("0110")));
        assert!(balanced(&[]));
        assert!(balanced(&bits("0110")));
        assert!(!balanced(&bits("0")));
    }

    #[test]
    fn parity_and_shuffle() {
        assert!(parity_odd(&bits("01")));
        assert!(!parity_odd(&bits("0011")));
        assert!(parity_even(&[]));
        assert!(parity_even(&bits("0011")));
        assert!(!parity_even(&bits("001")));
        assert!(even_square_shuffle(&bits("0011")));
        assert!(even_square_shuffle(&bits("0101")));
        assert!(!even_square_shuffle(&bits("00")));
        assert!(!even_square_shuffle(&bits("000111")));
    }

    #[test]
    fn avoid_and_k11() {
        let fs = vec![bits("000"), bits("111")];
        assert!(avoid(&fs, &bits("00110")));
        assert!(!avoid(&fs, &bits("000")));
        assert!(!avoid(&fs, &bits("101110")));
        assert!(avoid(&fs, &[]));
        assert!(k11(0, &bits("0101")));
        assert!(!k11(0, &bits("00")));
        assert!(k11(2, &bits("00100")));
        assert!(!k11(2, &bits("000100")));
        assert!(first_last_differ(&bits("01")));
        assert!(first_last_differ(&bits("0111101")));
        assert!(!first_last_differ(&bits("010")));
        assert!(!first_last_differ(&bits("0")));
    }
}
