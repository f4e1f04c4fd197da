use crate::graph::Graph;

/// Partition the vertices into classes of equal open neighborhood by
/// refining with every neighborhood in turn. `O(n + m)`.
///
/// Classes are sorted internally and ordered by their smallest vertex.
pub fn twin_partition(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut classes: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut class_of = vec![0usize; n];
    let mut pos: Vec<usize> = (0..n).collect();
    // Per pivot: class -> the class its marked members move into.
    let mut split_into: Vec<usize> = vec![usize::MAX];
    let mut touched = Vec::new();

    for v in 0..n {
        for &u in g.neighbors(v) {
            let c = class_of[u];
            if split_into[c] == usize::MAX {
                split_into[c] = classes.len();
                classes.push(Vec::new());
                split_into.push(usize::MAX);
                touched.push(c);
            }
            let target = split_into[c];
            // Swap-remove u from c.
            let i = pos[u];
            let last = *classes[c].last().unwrap();
            classes[c].swap_remove(i);
            if last != u {
                pos[last] = i;
            }
            pos[u] = classes[target].len();
            classes[target].push(u);
            class_of[u] = target;
        }
        for c in touched.drain(..) {
            let target = split_into[c];
            split_into[c] = usize::MAX;
            if classes[c].is_empty() {
                // Nothing was split off: move everyone back.
                let members = std::mem::take(&mut classes[target]);
                for (i, &u) in members.iter().enumerate() {
                    class_of[u] = c;
                    pos[u] = i;
                }
                classes[c] = members;
            }
        }
    }

    let mut out: Vec<Vec<usize>> = classes
        .into_iter()
        .filter(|c| !c.is_empty())
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    out.sort_unstable_by_key(|c| c[0]);
    out
}
