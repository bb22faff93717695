//! Fixtures shared by the criterion benches.

use idemfree::construct::{extremal_pair, ExtremalSpec};
use idemfree::{FiniteSemigroup, Seq};

/// Extremal pair of the given spec, e.g. `mono:3:2,gbn:2:3`.
pub fn extremal(spec: &str) -> (FiniteSemigroup, Seq) {
    let spec: ExtremalSpec = spec.parse().expect("valid spec");
    extremal_pair(&spec).expect("spec builds")
}

/// `Z_2` times the right-zero semigroup on `k` elements, as
/// `(g, x)(h, y) = (g + h, y)` with `(g, x)` at index `2x + g`.
pub fn group_by_right_zero(k: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(2 * k, |a, b| 2 * (b / 2) + (a % 2 + b % 2) % 2).expect("associative")
}
