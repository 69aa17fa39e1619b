//! Text formats: graph6, plain edge lists, and the cover format.

use crate::cover::{Cover, EdgeMatch};
use crate::error::{Error, ParseError};
use crate::graph::Graph;

/// Guard against absurd allocations from hostile graph6 headers.
const MAX_PARSE_ORDER: usize = 1 << 20;

/// Parses one graph6 line; the `>>graph6<<` header is optional.
///
/// Strict: data bytes must lie in `63..=126`, the byte count must match the
/// order exactly, and padding bits must be zero.
pub fn parse_graph6(input: &str) -> Result<Graph, ParseError> {
    let line = input.trim_end_matches(['\r', '\n']);
    let data = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = data.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::new(1, "empty graph6 input"));
    }
    if bytes[0] == b':' || bytes[0] == b';' {
        return Err(ParseError::new(1, "sparse6 input is not supported"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::new(
                1,
                format!("invalid graph6 byte 0x{b:02x} at position {i}"),
            ));
        }
    }
    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(ParseError::new(1, "truncated graph6 order"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(ParseError::new(1, "truncated graph6 order"));
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 8)
    };
    if n > MAX_PARSE_ORDER {
        return Err(ParseError::new(1, format!("order {n} too large")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = header_len + nbits.div_ceil(6);
    if bytes.len() != expect {
        return Err(ParseError::new(
            1,
            format!("expected {expect} bytes for order {n}, got {}", bytes.len()),
        ));
    }
    let bit = |i: usize| -> bool {
        let byte = bytes[header_len + i / 6] - 63;
        byte >> (5 - i % 6) & 1 == 1
    };
    let mut g = Graph::empty(n);
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(i) {
                g.add_edge(u, v).expect("indices in range");
            }
            i += 1;
        }
    }
    // trailing padding must be zero
    for p in nbits..(expect - header_len) * 6 {
        if bit(p) {
            return Err(ParseError::new(1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Canonical graph6 encoding (no header, minimal-length order field).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else if n <= 258_047 {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        bytes.push(126);
        bytes.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            bytes.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc: u8 = 0;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are ASCII")
}

/// Parses the edge-list format: a header line `n <order>`, then one `u v`
/// pair per line.
pub fn parse_edge_list(input: &str) -> Result<Graph, ParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (lno, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "empty input"))?;
    let mut tok = header.split_whitespace();
    if tok.next() != Some("n") {
        return Err(ParseError::new(lno, "expected header line `n <order>`"));
    }
    let n: usize = tok
        .next()
        .ok_or_else(|| ParseError::new(lno, "missing order after `n`"))?
        .parse()
        .map_err(|_| ParseError::new(lno, "order is not an integer"))?;
    if tok.next().is_some() {
        return Err(ParseError::new(lno, "trailing tokens after order"));
    }
    if n > MAX_PARSE_ORDER {
        return Err(ParseError::new(lno, format!("order {n} too large")));
    }
    let mut g = Graph::empty(n);
    for (lno, line) in lines {
        let mut tok = line.split_whitespace();
        let (u, v) = match (tok.next(), tok.next(), tok.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(ParseError::new(lno, "expected `u v`")),
        };
        let u: usize = u
            .parse()
            .map_err(|_| ParseError::new(lno, "endpoint is not an integer"))?;
        let v: usize = v
            .parse()
            .map_err(|_| ParseError::new(lno, "endpoint is not an integer"))?;
        if g.has_edge(u, v) {
            return Err(ParseError::new(lno, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v)
            .map_err(|e| ParseError::new(lno, e.to_string()))?;
    }
    Ok(g)
}

/// Canonical edge-list encoding: ascending edges, one per line.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the cover format against a base graph.
///
/// Header `cover n=<n> m=<m>`, then one line per edge
/// `u v : a1 a2 ... am` where `ai` is the 1-based partner of `(u, i)` in
/// `L(v)` and `-` means unmatched. Lines starting with `#` are comments.
/// Lines over non-edges of the base parse fine; validation reports them.
pub fn parse_cover(input: &str, base: &Graph) -> Result<Cover, Error> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (lno, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "empty cover input"))?;
    let mut tok = header.split_whitespace();
    if tok.next() != Some("cover") {
        return Err(ParseError::new(lno, "expected header `cover n=<n> m=<m>`").into());
    }
    let n: usize = tok
        .next()
        .and_then(|t| t.strip_prefix("n="))
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| ParseError::new(lno, "missing or malformed n=<order>"))?;
    let m: u32 = tok
        .next()
        .and_then(|t| t.strip_prefix("m="))
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| ParseError::new(lno, "missing or malformed m=<fold>"))?;
    if tok.next().is_some() {
        return Err(ParseError::new(lno, "trailing tokens in header").into());
    }
    if n != base.order() {
        return Err(Error::OrderMismatch { expected: base.order(), found: n });
    }
    let mut cover = Cover::new(base.clone(), m)?;
    let mut seen: std::collections::BTreeSet<(usize, usize)> = Default::default();
    for (lno, line) in lines {
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| ParseError::new(lno, "expected `u v : entries`"))?;
        let mut tok = head.split_whitespace();
        let (u, v) = match (tok.next(), tok.next(), tok.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(ParseError::new(lno, "expected two endpoints before `:`").into()),
        };
        let u: usize = u
            .parse()
            .map_err(|_| ParseError::new(lno, "endpoint is not an integer"))?;
        let v: usize = v
            .parse()
            .map_err(|_| ParseError::new(lno, "endpoint is not an integer"))?;
        if u >= n || v >= n {
            return Err(ParseError::new(lno, "endpoint out of range").into());
        }
        if u == v {
            return Err(ParseError::new(lno, "self-loop").into());
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::new(lno, format!("duplicate line for edge {u} {v}")).into());
        }
        let entries: Vec<&str> = tail.split_whitespace().collect();
        if entries.len() != m as usize {
            return Err(ParseError::new(
                lno,
                format!("expected {m} entries, got {}", entries.len()),
            )
            .into());
        }
        let mut pairs = Vec::new();
        for (i, e) in entries.iter().enumerate() {
            if *e == "-" {
                continue;
            }
            let a: u32 = e
                .parse()
                .map_err(|_| ParseError::new(lno, format!("bad entry `{e}`")))?;
            if a < 1 || a > m {
                return Err(ParseError::new(
                    lno,
                    format!("entry {a} outside 1..={m}"),
                )
                .into());
            }
            pairs.push((i as u32, a - 1));
        }
        cover.set_match(u, v, EdgeMatch::from_pairs(pairs))?;
    }
    Ok(cover)
}

/// Canonical cover encoding: header, then every stored edge ascending with
/// its 1-based partner list. Fails on matches that repeat a source index or
/// reference out-of-range entries, which have no line form.
pub fn write_cover(c: &Cover) -> Result<String, Error> {
    let m = c.fold();
    let mut out = format!("cover n={} m={}\n", c.base().order(), m);
    for (&(u, v), em) in c.match_entries() {
        let mut partners: Vec<Option<u32>> = vec![None; m as usize];
        for &(a, b) in em.pairs() {
            if a >= m || b >= m || partners[a as usize].is_some() {
                return Err(Error::UnrepresentableMatch { u, v });
            }
            partners[a as usize] = Some(b);
        }
        let entries: Vec<String> = partners
            .iter()
            .map(|p| match p {
                Some(b) => (b + 1).to_string(),
                None => "-".to_string(),
            })
            .collect();
        out.push_str(&format!("{u} {v} : {}\n", entries.join(" ")));
    }
    Ok(out)
}
