//! Small named cycle sets that serve as reference points in tests,
//! benchmarks and documentation.

use crate::cycle_set::{CycleSet, PermTable};

fn cs(n: usize, rows: &[&str]) -> CycleSet {
    CycleSet::from_cycle_strings(n, rows).expect("reference table is a cycle set")
}

/// `ψ(s_1)=(1234), ψ(s_2)=(1432), ψ(s_3)=(24), ψ(s_4)=(13)`.
pub fn ex1() -> CycleSet {
    cs(4, &["(1234)", "(1432)", "(24)", "(13)"])
}

/// Size 4 with orbits `{1,2}` and `{3,4}`; rows in one-line notation
/// `2143, 2143, 2134, 2134`.
pub fn decomposable_n4() -> CycleSet {
    CycleSet::new(
        PermTable::from_one_line_rows(&[
            vec![2, 1, 4, 3],
            vec![2, 1, 4, 3],
            vec![2, 1, 3, 4],
            vec![2, 1, 3, 4],
        ])
        .unwrap(),
    )
    .expect("reference table is a cycle set")
}

/// Class-2 factor of the size-5 composition example.
pub fn zappa_left_n5() -> CycleSet {
    cs(5, &["(1234)", "(1432)", "(1234)", "(1432)", "id"])
}

/// Class-3 factor of the size-5 composition example.
pub fn zappa_right_n5() -> CycleSet {
    cs(5, &["(354)", "(354)", "(345)", "(345)", "(345)"])
}

/// The table produced by composing [`zappa_left_n5`] with
/// [`zappa_right_n5`]; it is not a cycle set.
pub fn zappa_candidate_n5() -> PermTable {
    PermTable::from_cycle_strings(5, &["(124)(35)", "(1532)", "(1254)", "(132)(45)", "(354)"])
        .unwrap()
}

/// Indecomposable, size 8, class 6.
pub fn exdec() -> CycleSet {
    cs(
        8,
        &[
            "(12)(36)(47)(58)",
            "(1658)(2347)",
            "(1834)(2765)",
            "(12)(38)(45)(67)",
            "(1438)(2567)",
            "(1856)(2743)",
            "(16)(23)(45)(78)",
            "(14)(25)(36)(78)",
        ],
    )
}

/// The class-2 Sylow factor of [`exdec`].
pub fn exdec_factor_2() -> CycleSet {
    let a = "(1476)(2583)";
    let b = "(18)(27)(36)(45)";
    let c = "(1674)(2385)";
    let e = "(12)(34)(56)(78)";
    cs(8, &[a, a, b, c, c, b, e, e])
}

/// The class-3 Sylow factor of [`exdec`].
pub fn exdec_factor_3() -> CycleSet {
    let a = "(135)(264)";
    let b = "(153)(246)";
    cs(8, &[a, b, a, b, a, b, a, b])
}
