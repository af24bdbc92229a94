//! Small enumeration helpers shared by the tree and facet code.

/// Compositions of `n` into at least `min_parts` positive parts, in
/// lexicographic order.
pub fn compositions(n: usize, min_parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            go(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, &mut Vec::new(), &mut out);
    }
    out.retain(|c| c.len() >= min_parts);
    out
}

/// All ways of picking one element from each list, leftmost list varying
/// slowest.
pub(crate) fn cartesian_product<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    lists.iter().fold(vec![Vec::new()], |acc, list| {
        acc.iter()
            .flat_map(|prefix| {
                list.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect()
    })
}
