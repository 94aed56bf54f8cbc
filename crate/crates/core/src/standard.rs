//! Small named acts and monoids that recur throughout the tests and examples.
//!
//! Over the two-element zero monoid `Z = {1, z}` (indices 0 and 1):
//! `SZ` is `Z` acting on itself, `A2 = {a, b}` with `a·z = b·z = b`, and
//! `Θ` is the one-element act. Over the cyclic group `C2`, `T` is the
//! one-element act, which `C2` itself cannot receive a map from.

use crate::act::{Act, Side};
use crate::monoid::FiniteMonoid;

pub fn z() -> FiniteMonoid {
    FiniteMonoid::two_element_zero()
}

pub fn c2() -> FiniteMonoid {
    FiniteMonoid::cyclic_group(2)
}

/// `Z` acting on itself on the right: carrier `{1, z}`.
pub fn sz() -> Act {
    Act::regular(&z(), Side::Right)
}

/// `SZ` as a left act.
pub fn sz_left() -> Act {
    Act::regular(&z(), Side::Left)
}

/// `{a, b}` with `a·z = b·z = b`.
pub fn a2() -> Act {
    Act::right(&z(), vec![vec![0, 1], vec![1, 1]]).expect("A2")
}

/// The one-element right act over `monoid`.
pub fn theta(monoid: &FiniteMonoid) -> Act {
    Act::terminal(monoid, Side::Right)
}

/// `C2` acting on itself on the right.
pub fn c2_regular() -> Act {
    Act::regular(&c2(), Side::Right)
}
