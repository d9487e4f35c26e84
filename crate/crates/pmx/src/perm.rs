//! Permutations on `0..n`, stored as image vectors.
//!
//! Throughout the crate the product of two permutations is taken in
//! diagrammatic order: `compose(a, b)` maps `x` to `b[a[x]]`, i.e. `a` acts
//! first.  This matches right actions, which is how automorphisms act on
//! premaniplexes.

/// `a` then `b`.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().map(|&x| b[x]).collect()
}

pub fn inverse(a: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len()];
    for (x, &y) in a.iter().enumerate() {
        out[y] = x;
    }
    out
}

pub fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

pub fn is_identity(a: &[usize]) -> bool {
    a.iter().enumerate().all(|(x, &y)| x == y)
}

/// Checks that `a` is a bijection on `0..a.len()`.
pub fn is_permutation(a: &[usize]) -> bool {
    let mut seen = vec![false; a.len()];
    for &y in a {
        if y >= a.len() || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    true
}

/// Closes `generators` into the full generated group.
///
/// Elements are discovered breadth-first from the identity, multiplying by
/// the generators in the given order, so the result is deterministic.
/// Returns `None` if the closure would exceed `bound` elements.
pub fn close_group(
    degree: usize,
    generators: &[Vec<usize>],
    bound: usize,
) -> Option<Vec<Vec<usize>>> {
    use std::collections::HashSet;
    let mut elements = vec![identity(degree)];
    let mut seen: HashSet<Vec<usize>> = elements.iter().cloned().collect();
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        head += 1;
        for g in generators {
            let next = compose(&current, g);
            if seen.insert(next.clone()) {
                if elements.len() >= bound {
                    return None;
                }
                elements.push(next);
            }
        }
    }
    Some(elements)
}
