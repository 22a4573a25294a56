//! Small permutations of `{0..n}` stored as byte slices.
//!
//! A permutation `p` maps `i` to `p[i]`. Composition follows function
//! notation: `compose(p, q)[i] = p[q[i]]`.

pub fn identity(len: usize) -> Vec<u8> {
    (0..len as u8).collect()
}

pub fn is_permutation(p: &[u8]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        let x = x as usize;
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub fn inverse(p: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

pub fn compose(p: &[u8], q: &[u8]) -> Vec<u8> {
    q.iter().map(|&x| p[x as usize]).collect()
}

pub fn is_identity(p: &[u8]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x as usize)
}

/// Sign of a permutation, +1 or -1.
pub fn sign(p: &[u8]) -> i8 {
    let mut seen = vec![false; p.len()];
    let mut s = 1i8;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

/// Sign of the order-matching between two equal-length sequences of
/// distinct values: +1 when sorting both induces an even bijection.
pub fn order_sign<T: Ord>(seq: &[T]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Lexicographic rank of a permutation (Lehmer code).
pub fn rank(p: &[u8]) -> usize {
    let n = p.len();
    let mut r = 0usize;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        r = r * (n - i) + smaller;
    }
    r
}

/// All permutations of `{0..len}` in lexicographic order, so that
/// `all(len)[rank(p)] == p`.
pub fn all(len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(factorial(len) as usize);
    let mut cur = identity(len);
    loop {
        out.push(cur.clone());
        // next permutation
        let Some(i) = (0..len.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..len).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_matches_enumeration() {
        for (i, p) in all(4).iter().enumerate() {
            assert_eq!(rank(p), i);
        }
        assert_eq!(all(5).len(), 120);
    }

    #[test]
    fn sign_and_inverse() {
        assert_eq!(sign(&[1, 0, 2]), -1);
        assert_eq!(sign(&[1, 2, 0]), 1);
        let p = [2u8, 0, 3, 1];
        assert!(is_identity(&compose(&p, &inverse(&p))));
        assert_eq!(order_sign(&[3, 1, 2]), 1);
        assert_eq!(order_sign(&[2, 1]), -1);
    }
}
