//! Small standard posets used by tests and benchmarks.

use crate::FinitePoset;

/// The Boolean lattice of subsets of a `k`-element set; element `i` is the
/// subset with bitmask `i`, ordered by inclusion.
pub fn boolean(k: u32) -> FinitePoset {
    let n = 1usize << k;
    let labels = (0..n)
        .map(|m| format!("{m:0width$b}", width = k as usize))
        .collect();
    let table = (0..n)
        .map(|i| (0..n).map(|j| i & !j == 0).collect())
        .collect();
    FinitePoset::new(labels, table).expect("subset order is a poset")
}

/// A chain `0 < 1 < ... < k-1`.
pub fn chain(k: usize) -> FinitePoset {
    let labels = (0..k).map(|i| i.to_string()).collect();
    let table = (0..k).map(|i| (0..k).map(|j| i <= j).collect()).collect();
    FinitePoset::new(labels, table).expect("chain is a poset")
}

/// The pentagon N5: elements `[0, a, b, c, 1]` with `0 < a < 1` and
/// `0 < b < c < 1`, `a` incomparable to `b` and `c`.
pub fn pentagon() -> FinitePoset {
    let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
    FinitePoset::from_covers(labels, &[(1, 0), (2, 0), (3, 2), (4, 1), (4, 3)])
        .expect("pentagon is a poset")
}

/// The diamond M3: `0` below three pairwise-incomparable atoms `a, b, c`,
/// all below `1`.
pub fn diamond_m3() -> FinitePoset {
    let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
    FinitePoset::from_covers(labels, &[(1, 0), (2, 0), (3, 0), (4, 1), (4, 2), (4, 3)])
        .expect("diamond is a poset")
}

/// Two minimal elements both below two maximal elements: a poset with
/// bounds-free extreme pairs, hence not a lattice.
pub fn two_by_two() -> FinitePoset {
    let labels = ["m1", "m2", "M1", "M2"].map(String::from).to_vec();
    FinitePoset::from_covers(labels, &[(2, 0), (2, 1), (3, 0), (3, 1)])
        .expect("two-by-two is a poset")
}
