//! digraph6 serialization: header `&`, size byte `chr(63+v)`, then the v*v
//! row-major adjacency bits packed big-endian into 6-bit chunks, each chunk
//! offset by 63. Also a plain-text matrix format for human inspection.

use crate::digraph::Digraph;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum D6Error {
    /// Single-byte size encoding covers v <= 62 only.
    TooLarge {
        v: usize,
    },
    BadHeader,
    BadSizeByte {
        byte: u8,
    },
    LengthMismatch {
        expected: usize,
        got: usize,
    },
    InvalidByte {
        pos: usize,
        byte: u8,
    },
    Loop {
        vertex: usize,
    },
    BadTextMatrix {
        line: usize,
    },
}

impl fmt::Display for D6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            D6Error::TooLarge { v } => write!(f, "{v} vertices exceed the digraph6 limit of 62"),
            D6Error::BadHeader => write!(f, "missing '&' digraph6 header"),
            D6Error::BadSizeByte { byte } => write!(f, "invalid size byte {byte}"),
            D6Error::LengthMismatch { expected, got } => {
                write!(f, "expected {expected} payload bytes, got {got}")
            }
            D6Error::InvalidByte { pos, byte } => {
                write!(f, "invalid byte {byte} at position {pos}")
            }
            D6Error::Loop { vertex } => write!(f, "encoded matrix has a loop at vertex {vertex}"),
            D6Error::BadTextMatrix { line } => write!(f, "malformed matrix text at line {line}"),
        }
    }
}

impl std::error::Error for D6Error {}

pub fn encode_digraph6(d: &Digraph) -> Result<String, D6Error> {
    let v = d.v();
    if v > 62 {
        return Err(D6Error::TooLarge { v });
    }
    let mut out = String::with_capacity(2 + (v * v).div_ceil(6));
    out.push('&');
    out.push((63 + v as u8) as char);
    let mut chunk = 0u8;
    let mut used = 0;
    for x in 0..v {
        for y in 0..v {
            chunk = chunk << 1 | d.has_arc(x, y) as u8;
            used += 1;
            if used == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(((chunk << (6 - used)) + 63) as char);
    }
    Ok(out)
}

pub fn decode_digraph6(s: &str) -> Result<Digraph, D6Error> {
    let bytes = s.trim_end().as_bytes();
    if bytes.first() != Some(&b'&') {
        return Err(D6Error::BadHeader);
    }
    let size = *bytes.get(1).ok_or(D6Error::BadSizeByte { byte: 0 })?;
    if !(63..=125).contains(&size) {
        return Err(D6Error::BadSizeByte { byte: size });
    }
    let v = (size - 63) as usize;
    let payload = &bytes[2..];
    let expected = (v * v).div_ceil(6);
    if payload.len() != expected {
        return Err(D6Error::LengthMismatch {
            expected,
            got: payload.len(),
        });
    }
    let mut d = Digraph::new(v);
    let mut pos = 0usize;
    for (i, &b) in payload.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(D6Error::InvalidByte {
                pos: i + 2,
                byte: b,
            });
        }
        let chunk = b - 63;
        for bit in 0..6 {
            if pos == v * v {
                break;
            }
            if chunk >> (5 - bit) & 1 == 1 {
                let (x, y) = (pos / v, pos % v);
                if x == y {
                    return Err(D6Error::Loop { vertex: x });
                }
                d.set_arc(x, y);
            }
            pos += 1;
        }
    }
    Ok(d)
}

/// Plain-text matrix format: vertex count on line 1, then `v` rows of 0/1
/// characters.
pub fn encode_text(d: &Digraph) -> String {
    let v = d.v();
    let mut out = format!("{v}\n");
    for x in 0..v {
        for y in 0..v {
            out.push(if d.has_arc(x, y) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

pub fn decode_text(s: &str) -> Result<Digraph, D6Error> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
    let v: usize = lines
        .next()
        .and_then(|l| l.parse().ok())
        .ok_or(D6Error::BadTextMatrix { line: 1 })?;
    let mut d = Digraph::new(v);
    for x in 0..v {
        let row = lines.next().ok_or(D6Error::BadTextMatrix { line: x + 2 })?;
        if row.len() != v {
            return Err(D6Error::BadTextMatrix { line: x + 2 });
        }
        for (y, ch) in row.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => {
                    if x == y {
                        return Err(D6Error::Loop { vertex: x });
                    }
                    d.set_arc(x, y);
                }
                _ => return Err(D6Error::BadTextMatrix { line: x + 2 }),
            }
        }
    }
    Ok(d)
}

/// Parse either format, keyed on the digraph6 header byte.
pub fn decode_auto(s: &str) -> Result<Digraph, D6Error> {
    if s.starts_with('&') {
        decode_digraph6(s)
    } else {
        decode_text(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_arc_on_two_vertices() {
        let mut d = Digraph::new(2);
        d.set_arc(0, 1);
        assert_eq!(encode_digraph6(&d).unwrap(), "&AO");
        assert_eq!(decode_digraph6("&AO").unwrap(), d);
    }

    #[test]
    fn empty_two_vertex_digraph() {
        let d = Digraph::new(2);
        assert_eq!(encode_digraph6(&d).unwrap(), "&A?");
        assert_eq!(decode_digraph6("&A?").unwrap(), d);
    }

    #[test]
    fn header_and_length_errors() {
        assert_eq!(decode_digraph6("AO"), Err(D6Error::BadHeader));
        assert_eq!(
            decode_digraph6("&AOO"),
            Err(D6Error::LengthMismatch {
                expected: 1,
                got: 2
            })
        );
        assert_eq!(
            decode_digraph6("&A"),
            Err(D6Error::LengthMismatch {
                expected: 1,
                got: 0
            })
        );
    }

    #[test]
    fn too_large_rejected() {
        let d = Digraph::new(63);
        assert_eq!(encode_digraph6(&d), Err(D6Error::TooLarge { v: 63 }));
    }

    #[test]
    fn text_round_trip() {
        let mut d = Digraph::new(3);
        d.set_arc(0, 1);
        d.set_arc(2, 0);
        let s = encode_text(&d);
        assert_eq!(s, "3\n010\n000\n100\n");
        assert_eq!(decode_text(&s).unwrap(), d);
        assert_eq!(decode_auto(&s).unwrap(), d);
    }
}
