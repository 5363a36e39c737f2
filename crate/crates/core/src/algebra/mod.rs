//! The holomorphic algebra generated by `z[i,j]` and its *-extension by the
//! conjugate generators `zs[i,j]`, with a Wick-ordered normal form.

mod checks;
mod confluence;
mod element;
mod rules;
mod straighten;

pub use confluence::{ConfluenceFailure, ConfluenceReport, Strategy};
pub use element::{Element, FreeExpr, Word};
pub use rules::{Classification, CrossRow, RuleId};
pub use straighten::PolAlgebra;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    /// Holomorphic generator `z[i,j]`.
    Z,
    /// Conjugate generator `zs[i,j]`.
    ZStar,
}

impl Kind {
    pub fn flip(self) -> Self {
        match self {
            Kind::Z => Kind::ZStar,
            Kind::ZStar => Kind::Z,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Kind::Z => "z",
            Kind::ZStar => "zs",
        }
    }
}

/// A generator `z[i,j]` or `zs[i,j]` with `1 <= j <= i <= n`.
///
/// The derived order compares the kind first and then `(i, j)` row-major,
/// which is the generator order used by the normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub kind: Kind,
    pub i: u8,
    pub j: u8,
}

impl Gen {
    pub const fn z(i: u8, j: u8) -> Self {
        Self { kind: Kind::Z, i, j }
    }

    pub const fn zs(i: u8, j: u8) -> Self {
        Self {
            kind: Kind::ZStar,
            i,
            j,
        }
    }

    pub fn star(self) -> Self {
        Self {
            kind: self.kind.flip(),
            ..self
        }
    }

    pub fn is_z(self) -> bool {
        self.kind == Kind::Z
    }

    pub fn index(self) -> (usize, usize) {
        (self.i as usize, self.j as usize)
    }

    /// Row-major comparison of the index pairs, ignoring the kind.
    pub fn cmp_index(self, other: Self) -> Ordering {
        (self.i, self.j).cmp(&(other.i, other.j))
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.kind.tag(), self.i, self.j)
    }
}

/// True when the adjacent pair `a b` is already in normal order: holomorphic
/// letters weakly decreasing, then conjugate letters weakly increasing.
pub fn is_normal_pair(a: Gen, b: Gen) -> bool {
    match (a.kind, b.kind) {
        (Kind::Z, Kind::Z) => a.cmp_index(b) != Ordering::Less,
        (Kind::Z, Kind::ZStar) => true,
        (Kind::ZStar, Kind::Z) => false,
        (Kind::ZStar, Kind::ZStar) => a.cmp_index(b) != Ordering::Greater,
    }
}

pub fn is_normal_word(w: &[Gen]) -> bool {
    w.windows(2).all(|p| is_normal_pair(p[0], p[1]))
}
