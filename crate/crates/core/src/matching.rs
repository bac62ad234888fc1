//! Systems of distinct representatives via augmenting paths (Kuhn).

/// Picks one distinct element from each option list, or `None` when no such
/// choice exists. Elements are tried in list order, so the answer is
/// deterministic.
pub(crate) fn distinct_representatives(options: &[&[usize]]) -> Option<Vec<usize>> {
    if options.iter().any(|o| o.is_empty()) {
        return None;
    }
    // owner[k] = position currently matched to the k-th distinct element
    let mut elements: Vec<usize> = options.iter().flat_map(|o| o.iter().copied()).collect();
    elements.sort_unstable();
    elements.dedup();
    if elements.len() < options.len() {
        return None;
    }
    let slot = |e: usize| elements.binary_search(&e).unwrap();
    let adj: Vec<Vec<usize>> = options.iter().map(|o| o.iter().map(|&e| slot(e)).collect()).collect();

    let mut owner: Vec<Option<usize>> = vec![None; elements.len()];
    for pos in 0..options.len() {
        let mut seen = vec![false; elements.len()];
        if !augment(pos, &adj, &mut owner, &mut seen) {
            return None;
        }
    }

    let mut chosen = vec![0; options.len()];
    for (k, o) in owner.iter().enumerate() {
        if let Some(pos) = o {
            chosen[*pos] = elements[k];
        }
    }
    Some(chosen)
}

fn augment(pos: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &k in &adj[pos] {
        if seen[k] {
            continue;
        }
        seen[k] = true;
        if owner[k].is_none_or(|other| augment(other, adj, owner, seen)) {
            owner[k] = Some(pos);
            return true;
        }
    }
    false
}
