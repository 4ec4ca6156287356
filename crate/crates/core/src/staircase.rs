//! Cylinder staircases: unions of up-sets of a box that are full along
//! `V0`.
//!
//! Inside the host box a column is a pair `(x, y)` of steps along `V1` and
//! `V2` from the max-slope corner. A staircase with steps
//! `(x_1, y_1), …, (x_r, y_r)` (x increasing, y decreasing) holds the
//! columns lying above at least one step, each with the full `V0` extent of
//! the host.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::quiver::QVertex;
use crate::support::{bounds, Parallelepiped, Support};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CylinderStaircase {
    host: Parallelepiped,
    steps: Vec<(u32, u32)>,
}

impl CylinderStaircase {
    /// Validates the steps and shrinks the host to the bounding box of the
    /// staircase, so that the first step has `x = 0` and the last `y = 0`.
    pub fn new(host: Parallelepiped, steps: Vec<(u32, u32)>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::NotACylinderStaircase("no steps".into()));
        }
        let [d1, d2, d0] = host.extents();
        for w in steps.windows(2) {
            if !(w[0].0 < w[1].0 && w[0].1 > w[1].1) {
                return Err(Error::NotACylinderStaircase(format!(
                    "steps {:?} and {:?}: x must increase and y decrease",
                    w[0], w[1]
                )));
            }
        }
        for &(x, y) in &steps {
            if x > d1 || y > d2 {
                return Err(Error::NotACylinderStaircase(format!(
                    "step ({x},{y}) lies outside the host extents ({d1},{d2})"
                )));
            }
        }
        let x0 = steps[0].0;
        let y0 = steps[steps.len() - 1].1;
        let host = Parallelepiped::new(host.vertex_at(x0, y0, 0), d1 - x0, d2 - y0, d0)?;
        let steps = steps.into_iter().map(|(x, y)| (x - x0, y - y0)).collect();
        Ok(CylinderStaircase { host, steps })
    }

    pub fn from_box(b: Parallelepiped) -> Self {
        CylinderStaircase {
            host: b,
            steps: vec![(0, 0)],
        }
    }

    /// The classical staircase with `r` steps `(i-1, r-i)` in the host
    /// with corner `vmax` and the given extents.
    pub fn classical(vmax: QVertex, r: u32, d1: u32, d2: u32, d0: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::NotACylinderStaircase("no steps".into()));
        }
        let host = Parallelepiped::new(vmax, d1, d2, d0)?;
        CylinderStaircase::new(host, (1..=r).map(|i| (i - 1, r - i)).collect())
    }

    pub fn host(&self) -> Parallelepiped {
        self.host
    }

    pub fn steps(&self) -> &[(u32, u32)] {
        &self.steps
    }

    pub fn num_steps(&self) -> usize {
        self.steps.len()
    }

    /// Extent along `V0`.
    pub fn height(&self) -> u32 {
        self.host.extents()[2]
    }

    /// Consecutive steps differ by `V1 - V2`.
    pub fn is_completely_regular(&self) -> bool {
        self.steps
            .windows(2)
            .all(|w| w[1].0 == w[0].0 + 1 && w[1].1 + 1 == w[0].1)
    }

    pub fn as_box(&self) -> Option<Parallelepiped> {
        (self.steps.len() == 1).then_some(self.host)
    }

    pub fn contains_column(&self, x: u32, y: u32) -> bool {
        let [d1, d2, _] = self.host.extents();
        x <= d1 && y <= d2 && self.steps.iter().any(|&(sx, sy)| x >= sx && y >= sy)
    }

    /// Columns of the staircase, by `x` then `y`.
    pub fn columns(&self) -> Vec<(u32, u32)> {
        let [d1, d2, _] = self.host.extents();
        (0..=d1)
            .flat_map(|x| (0..=d2).map(move |y| (x, y)))
            .filter(|&(x, y)| self.contains_column(x, y))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.columns().len() * (self.height() as usize + 1)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> Vec<QVertex> {
        let d0 = self.height();
        self.columns()
            .into_iter()
            .flat_map(|(x, y)| (0..=d0).map(move |m0| (x, y, m0)))
            .map(|(x, y, m0)| self.host.vertex_at(x, y, m0))
            .collect()
    }

    pub fn support(&self) -> Support {
        Support::from_vertices(self.vertices())
    }

    pub fn touches_pi(&self) -> bool {
        self.host.touches_pi()
    }

    pub fn touches_sigma(&self) -> bool {
        self.host.touches_sigma()
    }

    /// The box of vertices lying above step `i` (0-based).
    pub fn quadrant(&self, i: usize) -> Parallelepiped {
        let [d1, d2, d0] = self.host.extents();
        let (x, y) = self.steps[i];
        Parallelepiped::new(self.host.vertex_at(x, y, 0), d1 - x, d2 - y, d0)
            .expect("sub-box of a valid box")
    }

    /// Recognizes a multiplicity-free, full-arrow support that is a
    /// cylinder staircase.
    pub fn recognize(s: &Support) -> Option<Self> {
        if s.is_empty() || !s.is_multiplicity_free() || !s.is_full_arrow() {
            return None;
        }
        let pts = s.lattice_points()?;
        let (lo, hi) = bounds(pts.iter().map(|(p, _)| p.m));
        let height = hi[2] - lo[2] + 1;
        let mut cols: BTreeSet<(u32, u32)> = BTreeSet::new();
        for (p, _) in &pts {
            cols.insert(((p.m[0] - lo[0]) as u32, (p.m[1] - lo[1]) as u32));
        }
        if cols.len() as i64 * height != pts.len() as i64 {
            return None;
        }
        let (d1, d2) = ((hi[0] - lo[0]) as u32, (hi[1] - lo[1]) as u32);
        for &(x, y) in &cols {
            if (x < d1 && !cols.contains(&(x + 1, y))) || (y < d2 && !cols.contains(&(x, y + 1))) {
                return None;
            }
        }
        let mut steps: Vec<(u32, u32)> = cols
            .iter()
            .filter(|&&(x, y)| {
                (x == 0 || !cols.contains(&(x - 1, y))) && (y == 0 || !cols.contains(&(x, y - 1)))
            })
            .copied()
            .collect();
        steps.sort();
        let class = pts[0].0.class;
        let vmax = crate::quiver::LatticePoint { class, m: lo }.vertex()?;
        let host = Parallelepiped::new(vmax, d1, d2, (hi[2] - lo[2]) as u32).ok()?;
        CylinderStaircase::new(host, steps).ok()
    }
}

impl fmt::Display for CylinderStaircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "staircase[{} steps {:?}]", self.host, self.steps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(l1: i64, l2: i64, t: i64) -> QVertex {
        QVertex::new(l1, l2, t).unwrap()
    }

    #[test]
    fn classical_two_steps() {
        let s = CylinderStaircase::classical(v(4, 2, 0), 2, 1, 1, 0).unwrap();
        assert_eq!(s.columns(), vec![(0, 1), (1, 0), (1, 1)]);
        assert_eq!(s.len(), 3);
        assert!(s.is_completely_regular());
        assert_eq!(CylinderStaircase::recognize(&s.support()), Some(s));
    }

    #[test]
    fn host_is_normalized() {
        let host = Parallelepiped::new(v(5, 3, 0), 2, 3, 1).unwrap();
        let s = CylinderStaircase::new(host, vec![(1, 2), (2, 1)]).unwrap();
        assert_eq!(s.steps(), &[(0, 1), (1, 0)]);
        assert_eq!(s.host().extents(), [1, 2, 1]);
        assert_eq!(s.host().vmax(), host.vertex_at(1, 1, 0));
    }

    #[test]
    fn invalid_steps_rejected() {
        let host = Parallelepiped::new(v(5, 3, 0), 2, 3, 1).unwrap();
        assert!(CylinderStaircase::new(host, vec![(0, 1), (1, 1)]).is_err());
        assert!(CylinderStaircase::new(host, vec![(3, 0)]).is_err());
        assert!(CylinderStaircase::new(host, vec![]).is_err());
    }

    #[test]
    fn non_cylinder_not_recognized() {
        let b = Parallelepiped::new(v(3, 1, 0), 1, 0, 1).unwrap();
        let mut vs: Vec<QVertex> = b.vertices().collect();
        vs.retain(|x| *x != b.vmax());
        assert!(CylinderStaircase::recognize(&Support::from_vertices(vs)).is_none());
    }

    proptest! {
        #[test]
        fn recognize_round_trip(l1 in 0i64..8, l2 in 0i64..8, t in -2i64..3,
                                mask in 1u32..64, d0 in 0u32..3) {
            let (a, b) = (l1.max(l2), l1.min(l2));
            let d1 = ((a - b) as u32).min(3);
            let d2 = (b as u32).min(3);
            let host = Parallelepiped::new(v(a, b, t), d1, d2, d0).unwrap();
            // choose an antichain of steps from the mask bits along a diagonal walk
            let mut steps = Vec::new();
            let (mut x, mut y) = (0u32, d2);
            for bit in 0..6 {
                if mask & (1 << bit) != 0 {
                    steps.push((x, y));
                }
                if y == 0 || x == d1 { break; }
                if bit % 2 == 0 { x += 1 } else { y -= 1 }
            }
            steps.dedup();
            let ok = steps.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 > w[1].1);
            prop_assume!(ok && !steps.is_empty());
            let s = CylinderStaircase::new(host, steps).unwrap();
            let back = CylinderStaircase::recognize(&s.support()).unwrap();
            prop_assert_eq!(back.support(), s.support());
            prop_assert_eq!(back, s);
        }
    }
}
