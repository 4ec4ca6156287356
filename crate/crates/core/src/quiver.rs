//! The quiver of homogeneous bundles on P³.
//!
//! Vertices are the irreducible bundles `S^{l1,l2}Q(t)` with `Q = T(-1)` the
//! rank-3 quotient bundle. From each vertex there are up to three arrows:
//!
//! * `V0`: `S^{l1,l2}Q(t) -> S^{l1+1,l2+1}Q(t-2)`, always present,
//! * `V1`: `S^{l1,l2}Q(t) -> S^{l1-1,l2}Q(t-1)`, absent on the plane σ (`l1 = l2`),
//! * `V2`: `S^{l1,l2}Q(t) -> S^{l1,l2-1}Q(t-1)`, absent on the plane π (`l2 = 0`).
//!
//! Each arrow lowers the slope by exactly 4/3, so the slope modulo 4/3 splits
//! the quiver into four connected components. Inside a component the vertices
//! form a subset of Z³; [`LatticePoint`] gives those coordinates.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schur::{weyl_dim, Partition};

/// Exact slope value.
pub type Slope = Rational64;

/// The irreducible homogeneous bundle `S^{l1,l2}Q(t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawVertex", into = "RawVertex")]
pub struct QVertex {
    l1: i64,
    l2: i64,
    t: i64,
}

#[derive(Serialize, Deserialize)]
struct RawVertex {
    l1: i64,
    l2: i64,
    t: i64,
}

impl TryFrom<RawVertex> for QVertex {
    type Error = Error;

    fn try_from(r: RawVertex) -> Result<Self> {
        QVertex::new(r.l1, r.l2, r.t)
    }
}

impl From<QVertex> for RawVertex {
    fn from(v: QVertex) -> Self {
        RawVertex {
            l1: v.l1,
            l2: v.l2,
            t: v.t,
        }
    }
}

/// Arrow directions of the quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    V0,
    V1,
    V2,
}

impl Direction {
    pub const ALL: [Direction; 3] = [Direction::V0, Direction::V1, Direction::V2];

    /// Unit step in lattice coordinates `(m1, m2, m0)`.
    pub fn unit(self) -> [i64; 3] {
        match self {
            Direction::V1 => [1, 0, 0],
            Direction::V2 => [0, 1, 0],
            Direction::V0 => [0, 0, 1],
        }
    }

    /// Index into `(m1, m2, m0)` coordinates.
    pub fn axis(self) -> usize {
        match self {
            Direction::V1 => 0,
            Direction::V2 => 1,
            Direction::V0 => 2,
        }
    }

    /// The direction an arrow takes after dualizing (arrows also reverse).
    pub fn dual(self) -> Direction {
        match self {
            Direction::V0 => Direction::V1,
            Direction::V1 => Direction::V0,
            Direction::V2 => Direction::V2,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Direction::V0 => "V0",
            Direction::V1 => "V1",
            Direction::V2 => "V2",
        };
        f.write_str(s)
    }
}

impl QVertex {
    pub fn new(l1: i64, l2: i64, t: i64) -> Result<Self> {
        if l2 < 0 || l1 < l2 {
            return Err(Error::InvalidVertex { l1, l2, t });
        }
        Ok(QVertex { l1, l2, t })
    }

    /// `O(t)`.
    pub fn line(t: i64) -> Self {
        QVertex { l1: 0, l2: 0, t }
    }

    /// Reduces the three-row form `S^{a,b,c}Q(τ)` using `Λ³Q = O(1)`.
    pub fn from_three_rows(a: i64, b: i64, c: i64, tau: i64) -> Result<Self> {
        if c < 0 || b < c || a < b {
            return Err(Error::InvalidVertex {
                l1: a,
                l2: b,
                t: tau,
            });
        }
        QVertex::new(a - c, b - c, tau + c)
    }

    pub fn l1(&self) -> i64 {
        self.l1
    }

    pub fn l2(&self) -> i64 {
        self.l2
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    /// The Schur shape `(l1, l2)` of the vertex.
    pub fn shape(&self) -> Partition {
        Partition::new(vec![self.l1 as u32, self.l2 as u32]).expect("vertex invariant")
    }

    /// Target of the arrow in direction `d`, if the arrow exists.
    pub fn arrow_target(&self, d: Direction) -> Option<QVertex> {
        let (l1, l2, t) = (self.l1, self.l2, self.t);
        match d {
            Direction::V0 => Some(QVertex {
                l1: l1 + 1,
                l2: l2 + 1,
                t: t - 2,
            }),
            Direction::V1 if l1 > l2 => Some(QVertex {
                l1: l1 - 1,
                l2,
                t: t - 1,
            }),
            Direction::V2 if l2 >= 1 => Some(QVertex {
                l1,
                l2: l2 - 1,
                t: t - 1,
            }),
            _ => None,
        }
    }

    /// `(l1 + l2)/3 + t`.
    pub fn slope(&self) -> Slope {
        Slope::new(self.l1 + self.l2, 3) + Slope::from_integer(self.t)
    }

    /// `(l1-l2+1)(l2+1)(l1+2)/2`, the dimension of `S^{l1,l2}C³`.
    pub fn rank(&self) -> u64 {
        let (l1, l2) = (self.l1 as u64, self.l2 as u64);
        (l1 - l2 + 1) * (l2 + 1) * (l1 + 2) / 2
    }

    /// First Chern class, `rank · slope`.
    pub fn c1(&self) -> Result<i64> {
        let r = self.rank() as i64;
        let num = r * (self.l1 + self.l2);
        if num % 3 != 0 {
            return Err(Error::Internal(format!("c1 of {self} is not integral")));
        }
        Ok(num / 3 + r * self.t)
    }

    /// `c1` for call sites that rely on integrality already being checked.
    pub(crate) fn c1_unchecked(&self) -> i64 {
        let r = self.rank() as i64;
        r * (self.l1 + self.l2) / 3 + r * self.t
    }

    /// Connected component: `(l1 + l2 + 3t) mod 4`.
    pub fn component_class(&self) -> u8 {
        (self.l1 + self.l2 + 3 * self.t).rem_euclid(4) as u8
    }

    pub fn on_pi(&self) -> bool {
        self.l2 == 0
    }

    pub fn on_sigma(&self) -> bool {
        self.l1 == self.l2
    }

    /// `S^{h1,h2}Q(t)^∨ = S^{h1,h1-h2}Q(-t-h1)`.
    pub fn dual(&self) -> QVertex {
        QVertex {
            l1: self.l1,
            l2: self.l1 - self.l2,
            t: -self.t - self.l1,
        }
    }

    /// Lattice coordinates inside the vertex's component.
    pub fn lattice(&self) -> LatticePoint {
        let class = self.component_class();
        let m0 = (self.l1 + self.l2 - self.t - class as i64) / 4;
        LatticePoint {
            class,
            m: [m0 - self.l1, m0 - self.l2, m0],
        }
    }

    /// `self + Σ steps[d]·d`, if the result is a valid vertex.
    pub fn shifted(&self, steps: [i64; 3]) -> Option<QVertex> {
        self.lattice().offset(steps).vertex()
    }

    /// Sort key used for all user-facing output: component, slope
    /// descending, then `(l1, l2, t)`.
    pub fn output_cmp(&self, other: &QVertex) -> Ordering {
        self.component_class()
            .cmp(&other.component_class())
            .then_with(|| other.slope().cmp(&self.slope()))
            .then_with(|| (self.l1, self.l2, self.t).cmp(&(other.l1, other.l2, other.t)))
    }

    /// Rank via the generic Weyl formula, kept as a cross-check.
    pub fn rank_by_weyl(&self) -> u64 {
        weyl_dim(&self.shape(), 3).expect("two-row shape fits three rows")
    }
}

impl fmt::Display for QVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S^{{{},{}}}Q({})", self.l1, self.l2, self.t)
    }
}

impl FromStr for QVertex {
    type Err = Error;

    /// Parses `S^{l1,l2}Q(t)` (also `S^{l1}Q(t)`, `Q(t)` and `O(t)`).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Input(format!("cannot parse vertex '{s}'"));
        let s = s.trim();
        let int = |x: &str| x.trim().parse::<i64>().map_err(|_| bad());
        let twist = |rest: &str| -> Result<i64> {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(bad)?;
            int(inner)
        };
        if let Some(rest) = s.strip_prefix('O') {
            return Ok(QVertex::line(twist(rest)?));
        }
        if let Some(rest) = s.strip_prefix('Q') {
            return QVertex::new(1, 0, twist(rest)?);
        }
        let rest = s.strip_prefix("S^{").ok_or_else(bad)?;
        let (shape, rest) = rest.split_once('}').ok_or_else(bad)?;
        let rest = rest.strip_prefix('Q').ok_or_else(bad)?;
        let parts: Vec<&str> = shape.split(',').collect();
        let (l1, l2) = match parts.as_slice() {
            [a] => (int(a)?, 0),
            [a, b] => (int(a)?, int(b)?),
            _ => return Err(bad()),
        };
        QVertex::new(l1, l2, twist(rest)?)
    }
}

/// Position of a vertex in its component, in coordinates `(m1, m2, m0)`
/// counting steps along `V1`, `V2`, `V0`.
///
/// The vertex is recovered as `l1 = m0 - m1`, `l2 = m0 - m2`,
/// `t = -2·m0 - m1 - m2 - class`; it is valid iff `m1 <= m2 <= m0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub class: u8,
    pub m: [i64; 3],
}

impl LatticePoint {
    pub fn offset(&self, steps: [i64; 3]) -> LatticePoint {
        LatticePoint {
            class: self.class,
            m: [
                self.m[0] + steps[0],
                self.m[1] + steps[1],
                self.m[2] + steps[2],
            ],
        }
    }

    pub fn vertex(&self) -> Option<QVertex> {
        let [m1, m2, m0] = self.m;
        let l1 = m0 - m1;
        let l2 = m0 - m2;
        let t = -2 * m0 - m1 - m2 - self.class as i64;
        QVertex::new(l1, l2, t).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(l1: i64, l2: i64, t: i64) -> QVertex {
        QVertex::new(l1, l2, t).unwrap()
    }

    fn r(n: i64, d: i64) -> Slope {
        Slope::new(n, d)
    }

    #[test]
    fn arrow_examples() {
        assert_eq!(v(1, 0, 0).arrow_target(Direction::V1), Some(v(0, 0, -1)));
        assert_eq!(v(1, 1, 5).arrow_target(Direction::V1), None);
        assert_eq!(v(0, 0, 0).arrow_target(Direction::V0), Some(v(1, 1, -2)));
        assert_eq!(v(3, 0, 0).arrow_target(Direction::V2), None);
    }

    #[test]
    fn vertex_numbers() {
        assert_eq!(v(0, 0, 4).slope(), r(4, 1));
        assert_eq!(v(1, 0, 0).slope(), r(1, 3));
        assert_eq!(v(2, 1, -1).slope(), r(0, 1));
        assert_eq!(v(0, 0, 7).rank(), 1);
        assert_eq!(v(1, 0, 2).rank(), 3);
        assert_eq!(v(2, 1, 0).rank(), 8);
        assert_eq!(v(1, 0, 0).c1().unwrap(), 1);
        assert_eq!(v(0, 0, -3).c1().unwrap(), -3);
        assert_eq!(v(2, 1, 0).c1().unwrap(), 8);
    }

    #[test]
    fn components_and_planes() {
        assert_eq!(v(0, 0, 0).component_class(), 0);
        assert_eq!(v(1, 0, 0).component_class(), 1);
        assert_eq!(v(1, 1, -1).component_class(), 3);
        assert!(v(3, 0, 1).on_pi() && !v(3, 0, 1).on_sigma());
        assert!(!v(2, 2, 1).on_pi() && v(2, 2, 1).on_sigma());
        assert!(v(0, 0, 9).on_pi() && v(0, 0, 9).on_sigma());
    }

    #[test]
    fn duality_examples() {
        assert_eq!(v(0, 0, 3).dual(), v(0, 0, -3));
        assert_eq!(v(1, 0, 0).dual(), v(1, 1, -1));
    }

    #[test]
    fn invalid_vertex_rejected() {
        assert!(QVertex::new(1, 2, 0).is_err());
        assert!(QVertex::new(1, -1, 0).is_err());
    }

    #[test]
    fn text_form_round_trips() {
        for s in ["S^{2,1}Q(0)", "S^{0,0}Q(-3)", "S^{5,2}Q(7)"] {
            let x: QVertex = s.parse().unwrap();
            assert_eq!(x.to_string(), s);
        }
        assert_eq!("O(1)".parse::<QVertex>().unwrap(), v(0, 0, 1));
        assert_eq!("Q(-1)".parse::<QVertex>().unwrap(), v(1, 0, -1));
        assert_eq!("S^{3}Q(0)".parse::<QVertex>().unwrap(), v(3, 0, 0));
        assert!("S^{1,2}Q(0)".parse::<QVertex>().is_err());
        assert!("banana".parse::<QVertex>().is_err());
    }

    #[test]
    fn three_row_reduction() {
        assert_eq!(QVertex::from_three_rows(2, 1, 1, 0).unwrap(), v(1, 0, 1));
        assert_eq!(QVertex::from_three_rows(1, 1, 1, -1).unwrap(), v(0, 0, 0));
    }

    fn any_vertex() -> impl Strategy<Value = QVertex> {
        (0i64..30, 0i64..30, -40i64..40).prop_map(|(a, b, t)| v(a.max(b), a.min(b), t))
    }

    proptest! {
        #[test]
        fn arrows_drop_slope_by_four_thirds(x in any_vertex()) {
            for d in Direction::ALL {
                if let Some(y) = x.arrow_target(d) {
                    prop_assert_eq!(x.slope() - y.slope(), r(4, 3));
                    prop_assert_eq!(x.component_class(), y.component_class());
                    let [a, b, c] = d.unit();
                    let lx = x.lattice();
                    prop_assert_eq!(y.lattice(), lx.offset([a, b, c]));
                }
            }
            prop_assert_eq!(x.on_pi(), x.arrow_target(Direction::V2).is_none());
            prop_assert_eq!(x.on_sigma(), x.arrow_target(Direction::V1).is_none());
            prop_assert!(x.arrow_target(Direction::V0).is_some());
        }

        #[test]
        fn dual_is_involution_and_negates(x in any_vertex()) {
            let d = x.dual();
            prop_assert_eq!(d.dual(), x);
            prop_assert_eq!(d.rank(), x.rank());
            prop_assert_eq!(d.slope(), -x.slope());
            prop_assert_eq!(d.c1().unwrap(), -x.c1().unwrap());
        }

        #[test]
        fn dual_exchanges_directions(x in any_vertex()) {
            for d in Direction::ALL {
                if let Some(y) = x.arrow_target(d) {
                    // the arrow x -> y becomes y^∨ -> x^∨ in the dual direction
                    prop_assert_eq!(y.dual().arrow_target(d.dual()), Some(x.dual()));
                }
            }
        }

        #[test]
        fn rank_matches_weyl_and_c1_integral(x in any_vertex()) {
            prop_assert_eq!(x.rank(), x.rank_by_weyl());
            prop_assert!(x.c1().is_ok());
        }

        #[test]
        fn lattice_round_trip(x in any_vertex()) {
            prop_assert_eq!(x.lattice().vertex(), Some(x));
        }
    }
}
