use super::Triangulation;
use crate::error::{Error, Result};
use crate::perm;

/// Work budget (facet visits) for signature search.
const BUDGET: u128 = 2_000_000_000;

/// Relabeling-invariant signature: two triangulations have equal
/// signatures iff they are combinatorially isomorphic.
///
/// Each connected component is encoded by breadth-first relabeling from
/// every start facet and every corner ordering, keeping the least code;
/// component codes are then sorted.
pub fn isomorphism_signature(t: &Triangulation) -> Result<String> {
    let w = t.dim() + 1;
    let m = t.num_facets() as u128;
    let work = m * m * perm::factorial(w) * w as u128;
    if work > BUDGET {
        return Err(Error::Precondition(format!(
            "isomorphism signature of {m} facets in dimension {} exceeds the search budget",
            t.dim()
        )));
    }
    let mut codes: Vec<Vec<u32>> = components(t).iter().map(|c| component_code(t, c)).collect();
    codes.sort();
    let mut out = format!("d{}", t.dim());
    for code in codes {
        out.push('|');
        let parts: Vec<String> = code.iter().map(u32::to_string).collect();
        out.push_str(&parts.join("."));
    }
    Ok(out)
}

pub(crate) fn components(t: &Triangulation) -> Vec<Vec<usize>> {
    let m = t.num_facets();
    let w = t.dim() + 1;
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for s in 0..m {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut head = 0;
        while head < comp.len() {
            let f = comp[head];
            head += 1;
            for i in 0..w {
                let g = t.target(f, i);
                if !seen[g] {
                    seen[g] = true;
                    comp.push(g);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn component_code(t: &Triangulation, facets: &[usize]) -> Vec<u32> {
    let w = t.dim() + 1;
    let orderings = perm::all(w);
    let mut best: Option<Vec<u32>> = None;
    let mut new_index = vec![u32::MAX; t.num_facets()];
    let mut labels: Vec<Vec<u8>> = vec![Vec::new(); t.num_facets()];
    for &start in facets {
        for ord in &orderings {
            let code = encode(t, start, ord, &mut new_index, &mut labels);
            for &f in facets {
                new_index[f] = u32::MAX;
            }
            if best.as_ref().map_or(true, |b| code < *b) {
                best = Some(code);
            }
        }
    }
    best.unwrap_or_default()
}

/// Breadth-first code from `start` whose old corner `c` gets new label
/// `ord[c]`. Neighbors are labeled so that the tree gluings read as the
/// identity.
fn encode(
    t: &Triangulation,
    start: usize,
    ord: &[u8],
    new_index: &mut [u32],
    labels: &mut [Vec<u8>],
) -> Vec<u32> {
    let w = t.dim() + 1;
    let mut order = vec![start];
    new_index[start] = 0;
    labels[start] = ord.to_vec();
    let mut code = Vec::new();
    let mut head = 0;
    while head < order.len() {
        let f = order[head];
        head += 1;
        let lf = labels[f].clone();
        let lf_inv = perm::inverse(&lf);
        for j in 0..w {
            let i = lf_inv[j] as usize;
            let g = t.target(f, i);
            let p = t.perm(f, i);
            if new_index[g] == u32::MAX {
                new_index[g] = order.len() as u32;
                order.push(g);
                labels[g] = perm::compose(&lf, &perm::inverse(p));
            }
            code.push(new_index[g]);
            let sigma = perm::compose(&labels[g], &perm::compose(p, &lf_inv));
            code.push(perm::rank(&sigma) as u32);
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn relabeled_copies_agree() {
        let t = zoo::cross_projective(3).unwrap();
        // reverse facet order
        let m = t.num_facets();
        let g: Vec<Vec<super::super::Gluing>> = (0..m)
            .rev()
            .map(|f| {
                (0..4)
                    .map(|i| super::super::Gluing::new(m - 1 - t.target(f, i), t.perm(f, i).to_vec()))
                    .collect()
            })
            .collect();
        let u = Triangulation::from_gluings(3, g).unwrap();
        assert_eq!(isomorphism_signature(&t).unwrap(), isomorphism_signature(&u).unwrap());
    }

    #[test]
    fn distinct_spaces_differ() {
        let a = isomorphism_signature(&zoo::cross_projective(3).unwrap()).unwrap();
        let b = isomorphism_signature(&zoo::cross_sphere(2).unwrap()).unwrap();
        assert_ne!(a, b);
        let c = isomorphism_signature(&zoo::double_simplex(3).unwrap()).unwrap();
        assert_ne!(a, c);
    }
}
