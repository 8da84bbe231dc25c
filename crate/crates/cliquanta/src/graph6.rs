//! graph6 encoder/decoder, bit-exact per the nauty format description.
//!
//! The size field N(n) is `n + 63` for `n <= 62`, `126` followed by three
//! 6-bit bytes for `n <= 258047`, and `126 126` followed by six 6-bit bytes
//! up to `68719476735`. Adjacency is the upper triangle in column order
//! (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), packed big-endian into 6-bit
//! groups, each offset by 63, zero-padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_N: u64 = 68_719_476_735;

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n() as u64;
    if n > MAX_N {
        return Err(Error::SizeCap {
            what: "graph6 vertex count",
            got: g.n(),
            cap: MAX_N as usize,
        });
    }
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else if n <= 258_047 {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        bytes.push(126);
        bytes.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            bytes.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for v in 1..g.n() {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            nbits += 1;
            if nbits == 6 {
                bytes.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push(63 + (acc << (6 - nbits)));
    }
    Ok(String::from_utf8(bytes).expect("graph6 bytes are ASCII"))
}

pub fn decode(s: &str) -> Result<Graph> {
    let bytes = s.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} outside 63..126")));
        }
    }
    let (n, mut idx) = if bytes[0] != 126 {
        ((bytes[0] - 63) as u64, 1)
    } else if bytes.len() > 1 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated length field".into()));
        }
        let mut n = 0u64;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - 63) as u64;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Error::Graph6("truncated length field".into()));
        }
        let mut n = 0u64;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - 63) as u64;
        }
        (n, 8)
    };
    let n = usize::try_from(n).map_err(|_| Error::Graph6("vertex count too large".into()))?;
    let nbits = n * (n.saturating_sub(1)) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() - idx != need {
        return Err(Error::Graph6(format!(
            "expected {need} adjacency bytes, found {}",
            bytes.len() - idx
        )));
    }
    let mut g = Graph::empty(n);
    let mut acc: u8 = 0;
    let mut have = 0;
    let mut pairs = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
    for bit in 0..need * 6 {
        if have == 0 {
            acc = bytes[idx] - 63;
            idx += 1;
            have = 6;
        }
        let set = acc & 0x20 != 0;
        acc <<= 1;
        have -= 1;
        if bit < nbits {
            let (u, v) = pairs.next().expect("pair iterator matches bit count");
            if set {
                g.insert_edge_unchecked(u, v);
            }
        } else if set {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;

    fn k(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        Graph::from_pairs(n, &pairs).unwrap()
    }

    #[test]
    fn k0_is_question_mark() {
        assert_eq!(encode(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(decode("?").unwrap().n(), 0);
    }

    #[test]
    fn k3_hand_packed() {
        // n=3 -> 'B' (66); bits 111 padded to 111000 -> 56+63=119 = 'w'
        assert_eq!(encode(&k(3)).unwrap(), "Bw");
        assert_eq!(decode("Bw").unwrap(), k(3));
    }

    #[test]
    fn large_n_escape() {
        let g = Graph::empty(100);
        let enc = encode(&g).unwrap();
        assert_eq!(enc.as_bytes()[0], 126);
        assert_eq!(decode(&enc).unwrap().n(), 100);
    }

    #[test]
    fn roundtrip_random() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..1000 {
            let n = rng.gen_range(0..=32);
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        pairs.push((u, v));
                    }
                }
            }
            let g = Graph::from_pairs(n, &pairs).unwrap();
            let back = decode(&encode(&g).unwrap()).unwrap();
            assert_eq!(back, g);
            assert!(back.check_invariants());
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!(decode("").is_err());
        assert!(decode("\x1f").is_err()); // byte below 63
        assert!(decode("B").is_err()); // missing adjacency byte
        assert!(decode("Bwz").is_err()); // trailing junk
        // nonzero padding: n=2 needs 1 bit; '~'-ish body with low bits set
        assert!(decode("Ao").is_err());
    }
}
