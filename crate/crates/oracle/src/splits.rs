use std::collections::BTreeSet;

fn stable(g: u32, n: usize) -> bool {
    2 * g as i64 - 2 + n as i64 > 0
}

/// Unordered-by-construction set of `(g1, labels1)` for which both
/// `(g1, |labels1| + 1)` and `(g - g1, rest + 1)` are stable. Each label is
/// assigned to a side by recursion rather than bitmask.
pub fn stable_splits(g: u32, labels: usize) -> BTreeSet<(u32, Vec<usize>)> {
    fn assign(next: usize, labels: usize, side1: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if next == labels {
            out.push(side1.clone());
            return;
        }
        side1.push(next);
        assign(next + 1, labels, side1, out);
        side1.pop();
        assign(next + 1, labels, side1, out);
    }
    let mut subsets = Vec::new();
    assign(0, labels, &mut Vec::new(), &mut subsets);
    let mut out = BTreeSet::new();
    for g1 in 0..=g {
        for s in &subsets {
            if stable(g1, s.len() + 1) && stable(g - g1, labels - s.len() + 1) {
                out.insert((g1, s.clone()));
            }
        }
    }
    out
}
