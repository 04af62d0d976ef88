//! Inputs shared by the benchmarks under `benches/`.

use cyset_core::calculus::PiTuple;
use cyset_core::{examples, CycleSet, MonomialElement};

/// The sets the benchmarks run on, with a short label.
pub fn fixtures() -> Vec<(&'static str, CycleSet)> {
    vec![
        ("ex1", examples::ex1()),
        ("cyclic6", CycleSet::cyclic(6)),
        ("exdec", examples::exdec()),
    ]
}

/// A tuple of length `len` cycling through the generators.
pub fn tuple(n: usize, len: usize) -> PiTuple {
    PiTuple((0..len).map(|k| (k * 7 + 3) % n).collect())
}

/// Product of the first `len` generators of `s`, taken cyclically.
pub fn element(s: &CycleSet, len: usize) -> MonomialElement {
    (0..len).fold(MonomialElement::identity(s.n()), |g, k| {
        &g * &MonomialElement::theta(s, (k * 5 + 1) % s.n()).unwrap()
    })
}
