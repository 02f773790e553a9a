use crate::{ElementId, FinitePoset, LatticeError, Result};

/// Per-element structural profile used to prune the (anti-)isomorphism
/// search: an order isomorphism must match profiles exactly, an
/// anti-isomorphism must match them with the two directions swapped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Profile {
    down: usize,
    up: usize,
    covers_down: usize,
    covers_up: usize,
}

fn profiles(p: &FinitePoset) -> Vec<Profile> {
    let covers = p.covers();
    (0..p.len())
        .map(|x| Profile {
            down: p.down_count(x),
            up: p.up_count(x),
            covers_down: covers.iter().filter(|&&(u, _)| u == x).count(),
            covers_up: covers.iter().filter(|&&(_, l)| l == x).count(),
        })
        .collect()
}

fn flip(p: Profile) -> Profile {
    Profile {
        down: p.up,
        up: p.down,
        covers_down: p.covers_up,
        covers_up: p.covers_down,
    }
}

/// Searches for an order isomorphism `a -> b`. Returns the element mapping
/// (`map[i]` is the image of `i`) or `None` if the posets are not isomorphic.
pub fn is_isomorphic(a: &FinitePoset, b: &FinitePoset) -> Result<Option<Vec<ElementId>>> {
    search(a, b, false)
}

/// Searches for an order anti-isomorphism `a -> b` (i.e. `x <= y` in `a` iff
/// `map[y] <= map[x]` in `b`).
pub fn is_antiisomorphic(a: &FinitePoset, b: &FinitePoset) -> Result<Option<Vec<ElementId>>> {
    search(a, b, true)
}

fn search(a: &FinitePoset, b: &FinitePoset, reverse: bool) -> Result<Option<Vec<ElementId>>> {
    if a.len() != b.len() {
        return Err(LatticeError::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let n = a.len();
    if n == 0 {
        return Ok(Some(vec![]));
    }
    let pa = profiles(a);
    let pb = profiles(b);
    // Candidate targets per source element, by profile compatibility.
    let cands: Vec<Vec<ElementId>> = (0..n)
        .map(|x| {
            let want = if reverse { flip(pa[x]) } else { pa[x] };
            (0..n).filter(|&y| pb[y] == want).collect()
        })
        .collect();
    if cands.iter().any(|c| c.is_empty()) {
        return Ok(None);
    }
    // Assign the most constrained elements first; ties broken by id so the
    // search (and the mapping it finds) is deterministic.
    let mut order: Vec<ElementId> = (0..n).collect();
    order.sort_by_key(|&x| (cands[x].len(), x));

    let mut map: Vec<Option<ElementId>> = vec![None; n];
    let mut used = vec![false; n];
    if assign(a, b, reverse, &order, 0, &cands, &mut map, &mut used) {
        Ok(Some(map.into_iter().map(Option::unwrap).collect()))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn assign(
    a: &FinitePoset,
    b: &FinitePoset,
    reverse: bool,
    order: &[ElementId],
    depth: usize,
    cands: &[Vec<ElementId>],
    map: &mut Vec<Option<ElementId>>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for &y in &cands[x] {
        if used[y] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&x2| {
            let y2 = map[x2].unwrap();
            let (fwd, bwd) = if reverse {
                (b.leq(y2, y), b.leq(y, y2))
            } else {
                (b.leq(y, y2), b.leq(y2, y))
            };
            a.leq(x, x2) == fwd && a.leq(x2, x) == bwd
        });
        if !consistent {
            continue;
        }
        map[x] = Some(y);
        used[y] = true;
        if assign(a, b, reverse, order, depth + 1, cands, map, used) {
            return true;
        }
        map[x] = None;
        used[y] = false;
    }
    false
}
