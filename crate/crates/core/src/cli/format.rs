//! Bundle format: a triangulation document optionally followed by a
//! partition block.
//!
//! ```text
//! dim 3
//! facets 2
//! ...
//! #@carrier 0:0 0 3
//! #@parent-color 0 1
//! #@scheme pairs
//! k 1
//! v 0:0 0
//! v 0:1 0
//! ...
//! ```
//!
//! `#@carrier <vertex-key> <dim> <face>` records the face whose barycentre
//! a vertex is, `#@parent-color` the two-coloring of the facets of the
//! subdivided triangulation. A partition block is `k <k>` followed by one
//! `v <vertex-key> <label>` line per vertex class; `<vertex-key>` is the
//! `f:c` key of the least incarnation, or a vertex identifier for vertex
//! format triangulations.

use std::collections::HashMap;

use crate::complex::io::{self, Directive};
use crate::complex::{FaceKey, Triangulation, VertexClasses};
use crate::error::{Error, Result};
use crate::partition::VertexPartition;
use crate::subdivide::CarrierLabels;

#[derive(Debug, Clone)]
pub struct Bundle {
    pub triangulation: Triangulation,
    pub partition: Option<VertexPartition>,
    pub carriers: Option<CarrierLabels>,
    pub parent_colors: Option<Vec<u8>>,
}

impl Bundle {
    pub fn new(t: Triangulation) -> Self {
        Self { triangulation: t, partition: None, carriers: None, parent_colors: None }
    }
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Resolves a vertex key (`f:c` or a vertex identifier) to its class.
fn vertex_resolver(t: &Triangulation) -> impl Fn(usize, &str) -> Result<usize> + '_ {
    let classes = t.vertex_classes();
    let mut by_name: HashMap<String, usize> = HashMap::new();
    if t.is_vertex_format() {
        for f in 0..t.num_facets() {
            for c in 0..=t.dim() {
                by_name.insert(t.corner_name(f, c).unwrap().to_string(), classes.of(f, c));
            }
        }
    }
    move |line, s| {
        if s.contains(':') {
            let key: FaceKey = s.parse().map_err(|_| perr(line, format!("bad vertex key {s}")))?;
            if key.dim() != 0 || key.facet as usize >= t.num_facets() || key.mask >> (t.dim() + 1) != 0 {
                return Err(perr(line, format!("bad vertex key {s}")));
            }
            let c = key.mask.trailing_zeros() as usize;
            Ok(classes.of(key.facet as usize, c))
        } else {
            by_name.get(s).copied().ok_or_else(|| perr(line, format!("unknown vertex {s}")))
        }
    }
}

fn vertex_key(classes: &VertexClasses, class: usize) -> String {
    let (f, c) = classes.key(class);
    format!("{f}:{c}")
}

/// Parses a partition block (`k` line then `v` lines).
pub fn parse_partition(t: &Triangulation, lines: &[(usize, String)], scheme: &str) -> Result<VertexPartition> {
    let mut it = lines.iter();
    let Some((l0, head)) = it.next() else {
        return Err(perr(0, "missing partition block"));
    };
    let toks: Vec<&str> = head.split_whitespace().collect();
    let k = match toks.as_slice() {
        ["k", k] => k.parse::<usize>().map_err(|_| perr(*l0, "bad class count"))?,
        _ => return Err(perr(*l0, "expected `k <k>`")),
    };
    let resolve = vertex_resolver(t);
    let nv = t.vertex_classes().count();
    let mut labels = vec![u8::MAX; nv];
    for (no, line) in it {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let ["v", key, label] = toks.as_slice() else {
            return Err(perr(*no, "expected `v <vertex> <label>`"));
        };
        let v = resolve(*no, key)?;
        let l = label.parse::<u8>().map_err(|_| perr(*no, format!("bad label {label}")))?;
        if labels[v] != u8::MAX {
            return Err(perr(*no, format!("vertex {key} labeled twice")));
        }
        labels[v] = l;
    }
    if let Some(v) = labels.iter().position(|&l| l == u8::MAX) {
        return Err(Error::Partition(format!("vertex {} has no label", vertex_key(&t.vertex_classes(), v))));
    }
    VertexPartition::new(k, labels, scheme)
}

pub fn render_partition(t: &Triangulation, p: &VertexPartition) -> String {
    let classes = t.vertex_classes();
    let mut out = format!("#@scheme {}\nk {}\n", p.scheme, p.k);
    for (v, l) in p.labels.iter().enumerate() {
        out.push_str(&format!("v {} {l}\n", vertex_key(&classes, v)));
    }
    out
}

fn parse_carriers(t: &Triangulation, ds: &[&Directive]) -> Result<CarrierLabels> {
    let resolve = vertex_resolver(t);
    let nv = t.vertex_classes().count();
    let mut dims = vec![u8::MAX; nv];
    let mut faces = vec![0u32; nv];
    for d in ds {
        let [key, dim, face] = d.args.as_slice() else {
            return Err(perr(d.line, "expected `#@carrier <vertex> <dim> <face>`"));
        };
        let v = resolve(d.line, key)?;
        dims[v] = dim.parse().map_err(|_| perr(d.line, "bad carrier dimension"))?;
        faces[v] = face.parse().map_err(|_| perr(d.line, "bad carrier face"))?;
    }
    if dims.contains(&u8::MAX) {
        return Err(perr(0, "carrier directives do not cover every vertex"));
    }
    Ok(CarrierLabels { dims, faces })
}

pub fn parse_bundle(text: &str) -> Result<Bundle> {
    let doc = io::load_document(text)?;
    let t = doc.triangulation;
    let carrier_ds: Vec<&Directive> = doc.directives.iter().filter(|d| d.name == "carrier").collect();
    let carriers = if carrier_ds.is_empty() { None } else { Some(parse_carriers(&t, &carrier_ds)?) };
    let mut parent_colors = None;
    let mut scheme = String::from("explicit");
    for d in &doc.directives {
        match d.name.as_str() {
            "parent-color" => {
                let colors: Vec<u8> = d
                    .args
                    .iter()
                    .map(|s| match s.as_str() {
                        "0" => Ok(0),
                        "1" => Ok(1),
                        _ => Err(perr(d.line, "parent colors must be 0 or 1")),
                    })
                    .collect::<Result<_>>()?;
                parent_colors = Some(colors);
            }
            "scheme" => {
                scheme = d.args.first().cloned().ok_or_else(|| perr(d.line, "missing scheme name"))?;
            }
            _ => {}
        }
    }
    let partition = if doc.rest.is_empty() { None } else { Some(parse_partition(&t, &doc.rest, &scheme)?) };
    Ok(Bundle { triangulation: t, partition, carriers, parent_colors })
}

pub fn render_bundle(b: &Bundle) -> String {
    let t = &b.triangulation;
    let mut out = io::save(t);
    if let Some(c) = &b.carriers {
        let classes = t.vertex_classes();
        for v in 0..c.dims.len() {
            out.push_str(&format!("#@carrier {} {} {}\n", vertex_key(&classes, v), c.dims[v], c.faces[v]));
        }
    }
    if let Some(colors) = &b.parent_colors {
        let s: Vec<String> = colors.iter().map(u8::to_string).collect();
        out.push_str(&format!("#@parent-color {}\n", s.join(" ")));
    }
    if let Some(p) = &b.partition {
        out.push_str(&render_partition(t, p));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{parse_blocks, scheme_partition, Scheme};
    use crate::subdivide::barycentric;
    use crate::zoo;

    #[test]
    fn bundle_round_trip() {
        let (t, c) = barycentric(&zoo::double_simplex(2).unwrap()).unwrap();
        let colors = t.dual_graph().coloring.unwrap();
        let p = scheme_partition(&t, Scheme::EvenBary(&c)).unwrap();
        let b = Bundle { triangulation: t, partition: Some(p.clone()), carriers: Some(c.clone()), parent_colors: Some(colors.clone()) };
        let text = render_bundle(&b);
        let back = parse_bundle(&text).unwrap();
        assert_eq!(back.partition, Some(p));
        assert_eq!(back.carriers, Some(c));
        assert_eq!(back.parent_colors, Some(colors));
        assert_eq!(render_bundle(&back), text);
    }

    #[test]
    fn vertex_names_as_keys() {
        let t = zoo::cross_sphere(2).unwrap();
        let mut text = io::save(&t);
        text.push_str("k 1\n");
        for v in 0..6 {
            text.push_str(&format!("v {v} {}\n", u8::from(v >= 3)));
        }
        let b = parse_bundle(&text).unwrap();
        let p = b.partition.unwrap();
        assert_eq!(p.sizes(), vec![3, 3]);
        assert_eq!(p.scheme, "explicit");
    }

    #[test]
    fn partition_errors() {
        let t = zoo::double_simplex(3).unwrap();
        let p = scheme_partition(&t, Scheme::Pairs(&parse_blocks("0,1/2,3").unwrap())).unwrap();
        let mut text = io::save(&t) + &render_partition(&t, &p);
        assert!(parse_bundle(&text).is_ok());
        text.push_str("v 0:0 1\n");
        assert!(matches!(parse_bundle(&text), Err(Error::Parse { .. })));
        let short = io::save(&t) + "k 1\nv 0:0 0\n";
        assert!(matches!(parse_bundle(&short), Err(Error::Partition(_))));
        let bad = io::save(&t) + "k 1\nv 0:9 0\n";
        assert!(matches!(parse_bundle(&bad), Err(Error::Parse { .. })));
    }
}
