//! Acceptance suite: one pass/fail line per criterion.
//!
//! Two criteria contain claims that cannot hold for the objects they name
//! (see the notes on criteria 5 and 7 below); they are evaluated as stated
//! and are expected to fail.

use std::io::Write;
use std::time::{Duration, Instant};

use multisect::cells::{
    canonical_form, cell_summary, collapse, extract, npc_check, rainbow_link, vertex_link, Ambient, CellComplex,
};
use multisect::complex::{io, isomorphism_signature};
use multisect::invariants::{
    euler_trisection_check, h1_onto, inclusion_epimorphism, multisection_report, report_ambient,
};
use multisect::partition::{parse_blocks, scheme_partition, validate_ambient, Scheme, VertexPartition};
use multisect::subdivide::{barycentric, pachner_2n_pass};
use multisect::{zoo, Triangulation};

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(checks: &[(&str, bool)]) -> Verdict {
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    Verdict {
        pass: failed.is_empty(),
        detail: if failed.is_empty() { String::new() } else { format!("failed: {}", failed.join(", ")) },
    }
}

fn pairs(t: &Triangulation, blocks: &str) -> VertexPartition {
    scheme_partition(t, Scheme::Pairs(&parse_blocks(blocks).unwrap())).unwrap()
}

fn top_count(c: &CellComplex<'_>) -> usize {
    c.cells.last().map_or(0, Vec::len)
}

fn links_agree(c: &CellComplex<'_>) -> bool {
    (0..c.cells[0].len()).all(|v| {
        let a = canonical_form(&vertex_link(c, v).unwrap());
        let b = canonical_form(&rainbow_link(c, v).unwrap());
        a.is_some() && a == b
    })
}

fn epimorphisms_hold(amb: &Ambient) -> bool {
    let c = extract(amb, amb.full()).unwrap();
    (0..=amb.k()).all(|i| match inclusion_epimorphism(&c, i) {
        Ok(e) => e.relators_die && e.surjective_gf2,
        Err(_) => false,
    })
}

fn s3_ambient() -> Ambient {
    let (t, c) = barycentric(&zoo::double_simplex(3).unwrap()).unwrap();
    let p = scheme_partition(&t, Scheme::OddBary(&c)).unwrap();
    Ambient::new(&t, &p).unwrap()
}

fn s5_ambient() -> Ambient {
    let t = zoo::double_simplex(5).unwrap();
    let p = pairs(&t, "0,1/2,3/4,5");
    Ambient::new(&t, &p).unwrap()
}

fn c1_three_sphere() -> Verdict {
    let amb = s3_ambient();
    let r = report_ambient(&amb);
    let c = extract(&amb, amb.full()).unwrap();
    let npc = npc_check(&c).unwrap();
    verdict(&[
        ("48 facets", amb.t.num_facets() == 48),
        ("supports multisection", r.supports_multisection),
        ("genera 3, 3", r.genera == vec![Some(3), Some(3)]),
        ("surface genus 3", r.surface.is_some_and(|s| s.orientable && s.genus == 3)),
        ("degrees 4 or 6", npc.degrees.keys().all(|&d| d == 4 || d == 6)),
        ("npc passes", npc.pass),
    ])
}

fn c2_projective_three() -> Verdict {
    let t = zoo::cross_projective(3).unwrap();
    let amb = Ambient::new(&t, &pairs(&t, "0,1/2,3")).unwrap();
    let r = report_ambient(&amb);
    let c = extract(&amb, amb.full()).unwrap();
    verdict(&[
        ("genera 1, 1", r.genera == vec![Some(1), Some(1)]),
        ("central euler 0", r.central.euler == 0),
        ("orientable", r.central.orientable == Some(true)),
        ("closed", r.central.closed),
        ("connected", r.central.connected),
        ("h1 onto", h1_onto(&c, 0).is_ok_and(|h| h.onto)),
    ])
}

fn c3_four_sphere() -> Verdict {
    let t = zoo::double_simplex(4).unwrap();
    let amb = Ambient::new(&t, &pairs(&t, "0,1/2,3/4")).unwrap();
    let r = report_ambient(&amb);
    let c = extract(&amb, amb.full()).unwrap();
    let check = euler_trisection_check(&r);
    verdict(&[
        ("trisection", r.supports_multisection),
        ("genera 0, 0, 0", r.genera == vec![Some(0); 3]),
        ("central euler 2", r.central.euler == 2),
        ("euler identity", check.as_ref().is_ok_and(|c| c.holds && c.euler == 2 && c.surface_genus == 0)),
        ("npc fails", npc_check(&c).is_ok_and(|n| !n.pass)),
    ])
}

fn c4_pachner_four_sphere() -> Verdict {
    let (t, c) = barycentric(&zoo::double_simplex(4).unwrap()).unwrap();
    let p = scheme_partition(&t, Scheme::EvenBary(&c)).unwrap();
    let (t2, p2) = pachner_2n_pass(&t, &p).unwrap();
    let amb = Ambient::new(&t2, &p2).unwrap();
    let v = validate_ambient(&amb);
    let two_apexes = p2.profiles(&t2).iter().all(|pr| pr[2] == 2);
    let pair_spines = v
        .subsets
        .iter()
        .filter(|s| s.labels.len() == 2)
        .all(|s| s.collapsed_dim.is_some_and(|d| d <= 1));
    verdict(&[
        ("240 facets", t.num_facets() == 240),
        ("480 facets", t2.num_facets() == 480),
        ("supports multisection", v.supports_multisection),
        ("two class-2 vertices per facet", two_apexes),
        ("pair spines of dimension at most 1", pair_spines),
    ])
}

/// The central complex has two 3-cubes glued along their boundaries, so
/// every vertex lies in exactly two cubes and its link is two triangles on
/// the same three vertices. Such a link is neither simplicial nor an
/// octahedron; the last two checks cannot hold.
fn c5_five_sphere() -> Verdict {
    let amb = s5_ambient();
    let r = report_ambient(&amb);
    let c = extract(&amb, amb.full()).unwrap();
    let squares_in_two = (0..c.cells[2].len()).all(|sq| {
        c.cells[3].iter().map(|cube| cube.boundary.iter().filter(|&&b| b as usize == sq).count()).sum::<usize>()
            == 2
    });
    let octahedra = (0..c.cells[0].len()).all(|v| {
        let l = vertex_link(&c, v).unwrap();
        l.simplicial && l.counts() == vec![6, 12, 8]
    });
    verdict(&[
        ("genera 0, 0, 0", r.genera == vec![Some(0); 3]),
        ("census 8 12 6 2", r.central.counts == vec![8, 12, 6, 2]),
        ("euler 0", r.central.euler == 0),
        ("closed", r.central.closed),
        ("connected", r.central.connected),
        ("squares in two cubes", squares_in_two),
        ("npc passes", npc_check(&c).is_ok_and(|n| n.pass)),
        ("octahedral links", octahedra),
    ])
}

fn c6_projective_five() -> Verdict {
    let t = zoo::cross_projective(5).unwrap();
    let amb = Ambient::new(&t, &pairs(&t, "0,1/2,3/4,5")).unwrap();
    let r = report_ambient(&amb);
    let v = validate_ambient(&amb);
    let c = extract(&amb, amb.full()).unwrap();
    verdict(&[
        ("genera 1, 1, 1", r.genera == vec![Some(1); 3]),
        ("7 subsets", v.subsets.len() == 7),
        ("subsets nonempty and connected", v.subsets.iter().all(|s| s.nonempty && s.connected)),
        ("h1 onto", h1_onto(&c, 0).is_ok_and(|h| h.onto)),
    ])
}

fn even_npc(n: usize) -> (Triangulation, VertexPartition) {
    let (t1, _) = barycentric(&zoo::double_simplex(n).unwrap()).unwrap();
    let colors = t1.dual_graph().coloring.unwrap();
    let (t2, c2) = barycentric(&t1).unwrap();
    let p = scheme_partition(&t2, Scheme::EvenNpc { carriers: &c2, colors: &colors }).unwrap();
    (t2, p)
}

/// In dimension two the class graph of label 1 is a disjoint union of
/// stars: its edges join the barycentres of old edges to barycentres of
/// color-1 triangles, and no two color-1 triangles share a subdivided edge
/// star. The first half cannot hold.
fn c7_even_scheme() -> Verdict {
    let (t2, p2) = even_npc(2);
    let small = validate_ambient(&Ambient::new(&t2, &p2).unwrap());
    let (t4, p4) = even_npc(4);
    let amb = Ambient::new(&t4, &p4).unwrap();
    let v = validate_ambient(&amb);
    let c = extract(&amb, amb.full()).unwrap();
    let singletons = p4.profiles(&t4).iter().all(|pr| {
        let ones: Vec<usize> = (0..pr.len()).filter(|&i| pr[i] == 1).collect();
        ones.len() == 1 && ones[0] <= 1
    });
    verdict(&[
        ("72 triangles", t2.num_facets() == 72),
        ("n = 2 supports multisection", small.supports_multisection),
        ("28800 facets", t4.num_facets() == 28_800),
        ("n = 4 supports multisection", v.supports_multisection),
        ("npc passes", npc_check(&c).is_ok_and(|n| n.pass)),
        ("singleton class 0 or 1", singletons),
    ])
}

fn c8_link_oracle() -> Verdict {
    let s3 = s3_ambient();
    let s5 = s5_ambient();
    verdict(&[
        ("three-sphere links", links_agree(&extract(&s3, s3.full()).unwrap())),
        ("five-sphere links", links_agree(&extract(&s5, s5.full()).unwrap())),
    ])
}

fn c9_generalized() -> Verdict {
    let t = zoo::double_simplex(6).unwrap();
    let r = multisection_report(&t, &pairs(&t, "0,1/2,3/4,5,6")).unwrap();
    let dims: Vec<Option<usize>> = r.spines.iter().filter(|s| s.labels.len() == 1).map(|s| s.dim).collect();
    verdict(&[
        ("supports generalized", r.supports_generalized),
        ("spine dimensions 1, 1, 2", dims == vec![Some(1), Some(1), Some(2)]),
    ])
}

fn c10_cube_counts() -> Verdict {
    let mut cases: Vec<(&str, Triangulation, VertexPartition)> = Vec::new();
    let s3 = s3_ambient();
    cases.push(("S3", s3.t.clone(), s3.partition.clone()));
    for (name, t, b) in [
        ("RP3", zoo::cross_projective(3).unwrap(), "0,1/2,3"),
        ("S4", zoo::double_simplex(4).unwrap(), "0,1/2,3/4"),
        ("S5", zoo::double_simplex(5).unwrap(), "0,1/2,3/4,5"),
        ("RP5", zoo::cross_projective(5).unwrap(), "0,1/2,3/4,5"),
        ("S6", zoo::double_simplex(6).unwrap(), "0,1/2,3/4,5,6"),
    ] {
        let p = pairs(&t, b);
        cases.push((name, t, p));
    }
    let (t, c) = barycentric(&zoo::double_simplex(4).unwrap()).unwrap();
    let p = scheme_partition(&t, Scheme::EvenBary(&c)).unwrap();
    let (t, p) = pachner_2n_pass(&t, &p).unwrap();
    cases.push(("S4 pachner", t, p));
    let (t, p) = even_npc(2);
    cases.push(("S2 even-npc", t, p));
    let (t, p) = even_npc(4);
    cases.push(("S4 even-npc", t, p));
    let checks: Vec<(String, bool)> = cases
        .iter()
        .map(|(name, t, p)| {
            let amb = Ambient::new(t, p).unwrap();
            let c = extract(&amb, amb.full()).unwrap();
            (name.to_string(), top_count(&c) == t.num_facets())
        })
        .collect();
    let refs: Vec<(&str, bool)> = checks.iter().map(|(n, b)| (n.as_str(), *b)).collect();
    verdict(&refs)
}

fn c11_epimorphisms() -> Verdict {
    let t2 = zoo::cross_projective(3).unwrap();
    let t6 = zoo::cross_projective(5).unwrap();
    verdict(&[
        ("three-sphere", epimorphisms_hold(&s3_ambient())),
        ("RP3", epimorphisms_hold(&Ambient::new(&t2, &pairs(&t2, "0,1/2,3")).unwrap())),
        ("RP5", epimorphisms_hold(&Ambient::new(&t6, &pairs(&t6, "0,1/2,3/4,5")).unwrap())),
    ])
}

fn c12_round_trip() -> Verdict {
    let mut zoo_outputs = Vec::new();
    for n in 1..=5 {
        zoo_outputs.push(zoo::double_simplex(n).unwrap());
        zoo_outputs.push(zoo::cross_sphere(n).unwrap());
        zoo_outputs.push(zoo::simplex_boundary(n).unwrap());
        if n >= 2 {
            zoo_outputs.push(zoo::cross_projective(n).unwrap());
        }
    }
    let mut iso = true;
    let mut deterministic = true;
    for t in &zoo_outputs {
        let sig = isomorphism_signature(t).unwrap();
        let gluing = io::save_gluing(t);
        iso &= isomorphism_signature(&io::load(&gluing).unwrap()).unwrap() == sig;
        if let Some(v) = io::save_vertex(t) {
            iso &= isomorphism_signature(&io::load(&v).unwrap()).unwrap() == sig;
        }
        deterministic &= io::save(t) == io::save(&io::load(&io::save(t)).unwrap());
        deterministic &= sig == isomorphism_signature(t).unwrap();
    }
    let t = zoo::cross_projective(3).unwrap();
    let p = pairs(&t, "0,1/2,3");
    let a = serde_json::to_string(&multisection_report(&t, &p).unwrap()).unwrap();
    let b = serde_json::to_string(&multisection_report(&t, &p).unwrap()).unwrap();
    deterministic &= a == b && report_ambient(&s3_ambient()) == report_ambient(&s3_ambient());
    verdict(&[("save/load isomorphism", iso), ("repeat runs identical", deterministic)])
}

type Criterion = (u32, &'static str, Duration, fn() -> Verdict);

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        (1, "S3 barycentric odd-bary bisection", Duration::from_secs(1), c1_three_sphere),
        (2, "RP3 genus one splitting", Duration::from_secs(1), c2_projective_three),
        (3, "S4 doubled simplex trisection", Duration::from_secs(1), c3_four_sphere),
        (4, "S4 barycentric plus Pachner pass", Duration::from_secs(10), c4_pachner_four_sphere),
        (5, "S5 doubled simplex multisection", Duration::from_secs(1), c5_five_sphere),
        (6, "RP5 genus one multisection", Duration::from_secs(5), c6_projective_five),
        (7, "even scheme on second barycentric subdivisions", Duration::from_secs(60), c7_even_scheme),
        (8, "vertex links equal rainbow links", Duration::from_secs(10), c8_link_oracle),
        (9, "generalized multisection of S6", Duration::from_secs(5), c9_generalized),
        (10, "central cubes equal ambient facets", Duration::from_secs(120), c10_cube_counts),
        (11, "inclusion epimorphisms", Duration::from_secs(10), c11_epimorphisms),
        (12, "format round trip and determinism", Duration::from_secs(30), c12_round_trip),
    ];
    // criteria whose statements contain claims that do not hold
    let expected_failures = [5, 7];
    let mut surprises = Vec::new();
    for (id, name, limit, f) in criteria {
        let start = Instant::now();
        let mut v = f();
        let elapsed = start.elapsed();
        if elapsed > limit {
            v.pass = false;
            v.detail = format!("{} runtime {:.2?} over {:.0?}", v.detail, elapsed, limit).trim().to_string();
        }
        let status = if v.pass { "PASS" } else { "FAIL" };
        // written to the handle so the lines survive output capture
        let line = format!("criterion {id:>2} {status} {name} ({elapsed:.2?}) {}\n", v.detail);
        std::io::stdout().lock().write_all(line.as_bytes()).unwrap();
        if v.pass == expected_failures.contains(&id) {
            surprises.push(id);
        }
    }
    assert!(surprises.is_empty(), "criteria with unexpected verdicts: {surprises:?}");
}

#[test]
fn central_summaries_match_extracts() {
    let amb = s5_ambient();
    let c = extract(&amb, amb.full()).unwrap();
    let s = cell_summary(&c);
    assert_eq!(s.counts, vec![8, 12, 6, 2]);
    assert_eq!(collapse(&c).steps, 0);
}
