//! Text formats for triangulations.
//!
//! Gluing format:
//!
//! ```text
//! dim 2
//! facets 2
//! 0 1 0 1 2
//! 1 1 0 1 2
//! 2 1 0 1 2
//! ...
//! ```
//!
//! one line `<slot> <target> <pi(0)> .. <pi(n)>` per slot, facets in order.
//! Vertex format replaces `facets` by `vertexfacets <m>` followed by one
//! line of `n + 1` vertex identifiers per facet. `#` starts a comment.
//! Comment lines of the form `#@<name> <args..>` are directives; `#@coords`
//! carries coordinate labels and is handled here, others are returned to
//! the caller.

use super::{Gluing, Triangulation};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Directive {
    pub line: usize,
    pub name: String,
    pub args: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct Document {
    pub triangulation: Triangulation,
    pub directives: Vec<Directive>,
    /// Lines after the triangulation body (1-based numbering preserved).
    pub rest: Vec<(usize, String)>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Parses a triangulation document.
pub fn load(text: &str) -> Result<Triangulation> {
    let doc = load_document(text)?;
    if let Some((line, _)) = doc.rest.first() {
        return Err(perr(*line, "unexpected content after triangulation"));
    }
    Ok(doc.triangulation)
}

/// Parses a triangulation and returns its directives and any trailing
/// content lines (used by bundle formats that append blocks).
pub fn load_document(text: &str) -> Result<Document> {
    let mut directives = Vec::new();
    let mut lines: Vec<(usize, Vec<&str>)> = Vec::new();
    let mut raw_rest: Vec<(usize, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let no = idx + 1;
        if let Some(d) = raw.trim_start().strip_prefix("#@") {
            let mut parts = d.split_whitespace();
            if let Some(name) = parts.next() {
                directives.push(Directive {
                    line: no,
                    name: name.to_string(),
                    args: parts.map(str::to_string).collect(),
                });
            }
            continue;
        }
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        if !toks.is_empty() {
            lines.push((no, toks));
            raw_rest.push((no, body.trim()));
        }
    }
    let mut it = lines.iter().enumerate();
    let Some((_, (l0, h0))) = it.next() else {
        return Err(perr(0, "empty document"));
    };
    let dim = match h0.as_slice() {
        ["dim", n] => n.parse::<usize>().map_err(|_| perr(*l0, "bad dimension"))?,
        _ => return Err(perr(*l0, "expected `dim <n>`")),
    };
    if dim == 0 || dim > super::MAX_DIM {
        return Err(Error::DimensionMismatch(format!("dimension {dim} unsupported")));
    }
    let w = dim + 1;
    let Some((_, (l1, h1))) = it.next() else {
        return Err(perr(*l0, "missing facet count"));
    };
    let (vertex, m) = match h1.as_slice() {
        ["facets", m] => (false, m.parse::<usize>().map_err(|_| perr(*l1, "bad facet count"))?),
        ["vertexfacets", m] => (true, m.parse::<usize>().map_err(|_| perr(*l1, "bad facet count"))?),
        _ => return Err(perr(*l1, "expected `facets <m>` or `vertexfacets <m>`")),
    };
    let body_lines = if vertex { m } else { m * w };
    if lines.len() < 2 + body_lines {
        return Err(perr(lines.last().map_or(0, |l| l.0), "document ends early"));
    }
    let body = &lines[2..2 + body_lines];
    let mut t = if vertex {
        let mut facets = Vec::with_capacity(m);
        for (no, toks) in body {
            if toks.len() != w {
                return Err(Error::DimensionMismatch(format!(
                    "line {no}: {} vertices, expected {w}",
                    toks.len()
                )));
            }
            facets.push(toks.clone());
        }
        Triangulation::from_vertex_facets(dim, &facets)?
    } else {
        let mut facets: Vec<Vec<Option<Gluing>>> = vec![vec![None; w]; m];
        for (k, (no, toks)) in body.iter().enumerate() {
            if toks.len() != w + 2 {
                return Err(Error::DimensionMismatch(format!(
                    "line {no}: {} fields, expected {}",
                    toks.len(),
                    w + 2
                )));
            }
            let nums: Vec<usize> = toks
                .iter()
                .map(|s| s.parse::<usize>().map_err(|_| perr(*no, format!("not a number: {s}"))))
                .collect::<Result<_>>()?;
            let f = k / w;
            let slot = nums[0];
            if slot >= w || facets[f][slot].is_some() {
                return Err(perr(*no, format!("bad or repeated slot {slot} in facet {f}")));
            }
            if nums[1] >= m {
                return Err(Error::UngluedSlot { facet: f, slot });
            }
            if nums[2..].iter().any(|&x| x >= w) {
                return Err(Error::BadPermutation { facet: f, slot });
            }
            facets[f][slot] = Some(Gluing::new(nums[1], nums[2..].iter().map(|&x| x as u8).collect()));
        }
        let facets = facets
            .into_iter()
            .map(|s| s.into_iter().map(Option::unwrap).collect())
            .collect();
        Triangulation::from_gluings(dim, facets)?
    };
    let mut rest_directives = Vec::new();
    let mut coords: Option<Vec<u8>> = None;
    for d in directives {
        if d.name == "coords" {
            let nums: Vec<usize> = d
                .args
                .iter()
                .map(|s| s.parse::<usize>().map_err(|_| perr(d.line, "bad coords directive")))
                .collect::<Result<_>>()?;
            if nums.len() != w + 1 || nums[0] >= m || nums[1..].iter().any(|&x| x > 255) {
                return Err(perr(d.line, "bad coords directive"));
            }
            let c = coords.get_or_insert_with(|| vec![u8::MAX; m * w]);
            for (i, &x) in nums[1..].iter().enumerate() {
                c[nums[0] * w + i] = x as u8;
            }
        } else {
            rest_directives.push(d);
        }
    }
    if let Some(c) = coords {
        if c.contains(&u8::MAX) {
            return Err(perr(0, "coords directives do not cover every facet"));
        }
        t.set_coordinate_labels(Some(c));
    }
    let rest = raw_rest[2 + body_lines..].iter().map(|&(n, s)| (n, s.to_string())).collect();
    Ok(Document { triangulation: t, directives: rest_directives, rest })
}

/// Writes the vertex format when vertex identifiers are present, else the
/// gluing format. Coordinate labels are written as directives.
pub fn save(t: &Triangulation) -> String {
    if t.is_vertex_format() {
        save_vertex(t).unwrap()
    } else {
        save_gluing(t)
    }
}

pub fn save_gluing(t: &Triangulation) -> String {
    let w = t.dim() + 1;
    let mut out = format!("dim {}\nfacets {}\n", t.dim(), t.num_facets());
    for f in 0..t.num_facets() {
        for i in 0..w {
            out.push_str(&format!("{i} {}", t.target(f, i)));
            for &x in t.perm(f, i) {
                out.push_str(&format!(" {x}"));
            }
            out.push('\n');
        }
    }
    out.push_str(&coords_block(t));
    out
}

pub fn save_vertex(t: &Triangulation) -> Option<String> {
    t.vertex_ids()?;
    let w = t.dim() + 1;
    let mut out = format!("dim {}\nvertexfacets {}\n", t.dim(), t.num_facets());
    for f in 0..t.num_facets() {
        let names: Vec<&str> = (0..w).map(|c| t.corner_name(f, c).unwrap()).collect();
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out.push_str(&coords_block(t));
    Some(out)
}

fn coords_block(t: &Triangulation) -> String {
    let Some(c) = t.coordinate_labels() else {
        return String::new();
    };
    let w = t.dim() + 1;
    let mut out = String::new();
    for f in 0..t.num_facets() {
        out.push_str(&format!("#@coords {f}"));
        for x in &c[f * w..(f + 1) * w] {
            out.push_str(&format!(" {x}"));
        }
        out.push('\n');
    }
    out
}
