//! String encodings of faces and flats.
//!
//! Type A: `13|2|4` for a composition and `{13,2,4}` for a partition
//! (elements are space separated when `d >= 10`). Type B: full block
//! sequence of `[±d]` with `-` for bars and `0:` marking the zero block,
//! e.g. `67|-2 4 -5|0:1 -1 3 -3|2 -4 5|-6 -7`; flats as `{0:1 -1,2 -3,-2 3}`.
//! Coordinate: sign strings such as `+0-` and flats `X_{1,3}`.

use super::{
    full_signed_blocks, norm_pair, signed_face_from_full, signed_flat, ArrangementKind, Face, Flat,
};
use crate::error::{input, Result};

fn join_elems(b: &[i32], compact: bool) -> String {
    if compact {
        b.iter().map(|x| x.to_string()).collect::<String>()
    } else {
        b.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn parse_elems(s: &str, compact_ok: bool) -> Result<Vec<i32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let toks: Vec<&str> = s.split_whitespace().collect();
    if toks.len() == 1
        && compact_ok
        && toks[0].len() > 1
        && toks[0].chars().all(|c| c.is_ascii_digit())
    {
        return Ok(toks[0]
            .chars()
            .map(|c| c.to_digit(10).unwrap() as i32)
            .collect());
    }
    toks.iter()
        .map(|t| {
            t.parse::<i32>()
                .or_else(|_| input(format!("bad element '{t}'")))
        })
        .collect()
}

impl ArrangementKind {
    pub fn face_to_string(&self, f: &Face) -> String {
        let compact = self.d() < 10;
        match f {
            Face::Composition(b) => b
                .iter()
                .map(|x| join_elems(x, compact))
                .collect::<Vec<_>>()
                .join("|"),
            Face::Signed { positive, zero } => {
                let mut parts: Vec<String> =
                    positive.iter().map(|b| join_elems(b, false)).collect();
                let mut z: Vec<i32> = zero.iter().flat_map(|&a| [a, -a]).collect();
                z.sort_by_key(|&x| (x.abs(), x < 0));
                parts.push(format!("0:{}", join_elems(&z, false)));
                let full = full_signed_blocks(positive, zero);
                let tail = &full[full.len() - positive.len()..];
                parts.extend(tail.iter().map(|b| join_elems(b, false)));
                parts.join("|")
            }
            Face::Signs(s) => s
                .iter()
                .map(|&x| match x {
                    1 => '+',
                    -1 => '-',
                    _ => '0',
                })
                .collect(),
        }
    }

    pub fn parse_face(&self, s: &str) -> Result<Face> {
        let s = s.trim();
        let f = match self {
            Self::BraidA(d) => {
                let blocks = s
                    .split('|')
                    .map(|b| {
                        let mut v = parse_elems(b, *d < 10)?;
                        v.sort_unstable();
                        Ok(v)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Face::Composition(blocks)
            }
            Self::TypeB(_) => {
                let mut blocks = Vec::new();
                for b in s.split('|') {
                    let b = b.trim();
                    let (is_zero, body) = match b.strip_prefix("0:") {
                        Some(rest) => (true, rest),
                        None => (false, b),
                    };
                    let v = parse_elems(body, false)?;
                    if v.is_empty() && !is_zero {
                        return input(format!("empty block in '{s}'"));
                    }
                    if !v.is_empty() {
                        blocks.push(v);
                    }
                }
                let face = signed_face_from_full(blocks.clone());
                if let Face::Signed { positive, zero } = &face {
                    let mut want = full_signed_blocks(positive, zero);
                    let mut got = blocks;
                    for b in want.iter_mut().chain(got.iter_mut()) {
                        b.sort_unstable();
                    }
                    if want != got {
                        return input(format!("'{s}' is not a symmetric signed composition"));
                    }
                }
                face
            }
            Self::Coordinate(_) => Face::Signs(
                s.chars()
                    .filter(|c| !c.is_whitespace() && *c != ',' && *c != '(' && *c != ')')
                    .map(|c| match c {
                        '+' => Ok(1),
                        '-' => Ok(-1),
                        '0' => Ok(0),
                        _ => input(format!("bad sign '{c}'")),
                    })
                    .collect::<Result<Vec<i8>>>()?,
            ),
        };
        self.validate_face(&f)
            .map_err(|e| crate::error::Error::Input(e.to_string()))?;
        Ok(f)
    }

    pub fn flat_to_string(&self, x: &Flat) -> String {
        let compact = self.d() < 10;
        match x {
            Flat::Partition(b) => {
                format!(
                    "{{{}}}",
                    b.iter()
                        .map(|x| join_elems(x, compact))
                        .collect::<Vec<_>>()
                        .join(",")
                )
            }
            Flat::Signed { zero, blocks } => {
                let mut parts = Vec::new();
                if !zero.is_empty() {
                    let mut z: Vec<i32> = zero.iter().flat_map(|&a| [a, -a]).collect();
                    z.sort_by_key(|&x| (x.abs(), x < 0));
                    parts.push(format!("0:{}", join_elems(&z, false)));
                }
                for b in blocks {
                    parts.push(join_elems(b, false));
                    let mut n: Vec<i32> = b.iter().map(|x| -x).collect();
                    n.sort_by_key(|&x| (x.abs(), x < 0));
                    parts.push(join_elems(&n, false));
                }
                format!("{{{}}}", parts.join(","))
            }
            Flat::Zeros(s) => format!(
                "X_{{{}}}",
                s.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        }
    }

    pub fn parse_flat(&self, s: &str) -> Result<Flat> {
        let s = s.trim();
        let x = match self {
            Self::BraidA(d) => {
                let body = strip_braces(s)?;
                let mut blocks = body
                    .split(',')
                    .map(|b| {
                        let mut v = parse_elems(b, *d < 10)?;
                        v.sort_unstable();
                        Ok(v)
                    })
                    .collect::<Result<Vec<_>>>()?;
                blocks.sort_by_key(|b| b.first().copied().unwrap_or(0));
                Flat::Partition(blocks)
            }
            Self::TypeB(_) => {
                let body = strip_braces(s)?;
                let mut zero = Vec::new();
                let mut pairs: Vec<Vec<i32>> = Vec::new();
                for b in body.split(',') {
                    let b = b.trim();
                    if let Some(rest) = b.strip_prefix("0:") {
                        let v = parse_elems(rest, false)?;
                        for e in v {
                            if !zero.contains(&e.abs()) {
                                zero.push(e.abs());
                            }
                        }
                    } else {
                        let v = parse_elems(b, false)?;
                        if v.is_empty() {
                            return input(format!("empty block in '{s}'"));
                        }
                        let n = norm_pair(&v);
                        if !pairs.contains(&n) {
                            pairs.push(n);
                        }
                    }
                }
                signed_flat(zero, pairs)
            }
            Self::Coordinate(_) => {
                let body = s.strip_prefix("X_").unwrap_or(s);
                let body = strip_braces(body)?;
                let mut v = Vec::new();
                for t in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                    v.push(
                        t.parse::<i32>()
                            .or_else(|_| input(format!("bad index '{t}'")))?,
                    );
                }
                v.sort_unstable();
                v.dedup();
                Flat::Zeros(v)
            }
        };
        self.validate_flat(&x)
            .map_err(|e| crate::error::Error::Input(e.to_string()))?;
        Ok(x)
    }
}

fn strip_braces(s: &str) -> Result<&str> {
    let s = s.trim();
    match s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
        Some(b) => Ok(b),
        None => input(format!("expected '{{...}}', got '{s}'")),
    }
}
