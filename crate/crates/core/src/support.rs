//! Quiver supports: finite multisets of vertices together with the arrows
//! joining them.
//!
//! The rank and first Chern class of a homogeneous bundle are additive over
//! the vertices of its support, so all slope arithmetic happens here.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{Direction, LatticePoint, QVertex, Slope};
use crate::schur::{lr_tensor, Partition};

/// A quiver support with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Support {
    mult: BTreeMap<QVertex, u32>,
    arrows: BTreeSet<(QVertex, Direction)>,
}

impl Support {
    /// Support with every quiver arrow between its vertices. Repeated
    /// vertices add their multiplicities.
    pub fn full<I>(vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = (QVertex, u32)>,
    {
        let mut mult = BTreeMap::new();
        for (v, m) in vertices {
            if m == 0 {
                return Err(Error::InvalidSupport(format!("{v} has multiplicity 0")));
            }
            *mult.entry(v).or_insert(0) += m;
        }
        let arrows = full_arrows(&mult);
        Ok(Support { mult, arrows })
    }

    /// Multiplicity-free support on a vertex set, with all arrows.
    pub fn from_vertices<I>(vertices: I) -> Self
    where
        I: IntoIterator<Item = QVertex>,
    {
        let mult: BTreeMap<QVertex, u32> = vertices.into_iter().map(|v| (v, 1)).collect();
        let arrows = full_arrows(&mult);
        Support { mult, arrows }
    }

    /// Support with an explicit arrow set. Every arrow must be an arrow of
    /// the quiver whose target is one of the vertices.
    pub fn with_arrows<I, A>(vertices: I, arrows: A) -> Result<Self>
    where
        I: IntoIterator<Item = (QVertex, u32)>,
        A: IntoIterator<Item = (QVertex, Direction)>,
    {
        let mut s = Support::full(vertices)?;
        let mut chosen = BTreeSet::new();
        for (src, d) in arrows {
            if !s.mult.contains_key(&src) {
                return Err(Error::InvalidSupport(format!(
                    "arrow source {src} is not a vertex"
                )));
            }
            match src.arrow_target(d) {
                Some(tgt) if s.mult.contains_key(&tgt) => {
                    chosen.insert((src, d));
                }
                Some(tgt) => {
                    return Err(Error::InvalidSupport(format!(
                        "arrow {src} --{d}--> {tgt} leaves the support"
                    )))
                }
                None => {
                    return Err(Error::InvalidSupport(format!(
                        "{src} has no {d} arrow in the quiver"
                    )))
                }
            }
        }
        s.arrows = chosen;
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.mult.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn multiplicity(&self, v: &QVertex) -> u32 {
        self.mult.get(v).copied().unwrap_or(0)
    }

    pub fn contains(&self, v: &QVertex) -> bool {
        self.mult.contains_key(v)
    }

    /// Vertices with multiplicities, in `(l1, l2, t)` order.
    pub fn iter(&self) -> impl Iterator<Item = (&QVertex, &u32)> {
        self.mult.iter()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &QVertex> {
        self.mult.keys()
    }

    /// Vertices in output order (component, slope descending, `l1, l2, t`).
    pub fn sorted_vertices(&self) -> Vec<QVertex> {
        let mut vs: Vec<QVertex> = self.mult.keys().copied().collect();
        vs.sort_by(|a, b| a.output_cmp(b));
        vs
    }

    pub fn arrows(&self) -> &BTreeSet<(QVertex, Direction)> {
        &self.arrows
    }

    pub fn has_arrow(&self, src: &QVertex, d: Direction) -> bool {
        self.arrows.contains(&(*src, d))
    }

    /// Whether every quiver arrow between two vertices is present.
    pub fn is_full_arrow(&self) -> bool {
        self.arrows == full_arrows(&self.mult)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.mult.values().all(|&m| m == 1)
    }

    pub(crate) fn require_multiplicity_free(&self) -> Result<()> {
        match self.mult.values().find(|&&m| m != 1) {
            Some(&m) => Err(Error::MultiplicityNotOne(m)),
            None => Ok(()),
        }
    }

    /// Component classes met by the support.
    pub fn component_classes(&self) -> BTreeSet<u8> {
        self.mult.keys().map(|v| v.component_class()).collect()
    }

    pub fn rank(&self) -> u64 {
        self.mult.iter().map(|(v, &m)| m as u64 * v.rank()).sum()
    }

    pub fn c1(&self) -> i64 {
        self.mult
            .iter()
            .map(|(v, &m)| m as i64 * v.c1_unchecked())
            .sum()
    }

    pub fn slope(&self) -> Result<Slope> {
        let rank = self.rank();
        if rank == 0 {
            return Err(Error::EmptySupport);
        }
        Ok(Slope::new(self.c1(), rank as i64))
    }

    pub fn touches_pi(&self) -> bool {
        self.mult.keys().any(|v| v.on_pi())
    }

    pub fn touches_sigma(&self) -> bool {
        self.mult.keys().any(|v| v.on_sigma())
    }

    /// Vertex-wise dual. Arrows reverse, with `V0` and `V1` exchanged.
    pub fn dual(&self) -> Support {
        let mult = self.mult.iter().map(|(v, &m)| (v.dual(), m)).collect();
        let arrows = self
            .arrows
            .iter()
            .map(|(src, d)| {
                let tgt = src.arrow_target(*d).expect("stored arrows exist");
                (tgt.dual(), d.dual())
            })
            .collect();
        Support { mult, arrows }
    }

    /// The subgraph on `keep`: those vertices and the arrows of `self`
    /// joining two of them.
    pub fn induced(&self, keep: &BTreeSet<QVertex>) -> Support {
        let mult = self
            .mult
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(v, &m)| (*v, m))
            .collect();
        let arrows = self
            .arrows
            .iter()
            .filter(|(src, d)| {
                keep.contains(src)
                    && keep.contains(&src.arrow_target(*d).expect("stored arrows exist"))
            })
            .copied()
            .collect();
        Support { mult, arrows }
    }

    /// `A - B`: vertices of `self` not in `other`, with the arrows of `self`
    /// joining them.
    pub fn minus(&self, other: &Support) -> Support {
        let keep = self
            .mult
            .keys()
            .filter(|v| !other.contains(v))
            .copied()
            .collect();
        self.induced(&keep)
    }

    /// Multiset sum; arrows are the union of both arrow sets.
    pub fn sum(&self, other: &Support) -> Support {
        let mut out = self.clone();
        for (v, &m) in &other.mult {
            *out.mult.entry(*v).or_insert(0) += m;
        }
        out.arrows.extend(other.arrows.iter().copied());
        out
    }

    /// Lattice coordinates of all vertices, if they share one component.
    pub(crate) fn lattice_points(&self) -> Option<Vec<(LatticePoint, QVertex)>> {
        let mut class = None;
        let mut out = Vec::with_capacity(self.len());
        for v in self.mult.keys() {
            let p = v.lattice();
            match class {
                None => class = Some(p.class),
                Some(c) if c != p.class => return None,
                _ => {}
            }
            out.push((p, *v));
        }
        Some(out)
    }
}

fn full_arrows(mult: &BTreeMap<QVertex, u32>) -> BTreeSet<(QVertex, Direction)> {
    let mut arrows = BTreeSet::new();
    for v in mult.keys() {
        for d in Direction::ALL {
            if let Some(w) = v.arrow_target(d) {
                if mult.contains_key(&w) {
                    arrows.insert((*v, d));
                }
            }
        }
    }
    arrows
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.sorted_vertices().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let m = self.multiplicity(v);
            if m == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{m}·{v}")?;
            }
        }
        write!(f, "}}")
    }
}

/// A parallelepiped in the quiver: the vertices
/// `vmax + m1·V1 + m2·V2 + m0·V0` with `0 <= m_i <= d_i`, all of
/// multiplicity one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Parallelepiped {
    vmax: QVertex,
    d1: u32,
    d2: u32,
    d0: u32,
}

impl Parallelepiped {
    pub fn new(vmax: QVertex, d1: u32, d2: u32, d0: u32) -> Result<Self> {
        if vmax.l1() - (d1 as i64) < vmax.l2() {
            return Err(Error::InvalidBox(format!(
                "{vmax} cannot take {d1} steps along V1 (l1 - d1 < l2)"
            )));
        }
        if vmax.l2() < d2 as i64 {
            return Err(Error::InvalidBox(format!(
                "{vmax} cannot take {d2} steps along V2 (l2 < d2)"
            )));
        }
        Ok(Parallelepiped { vmax, d1, d2, d0 })
    }

    /// Corner of maximum slope.
    pub fn vmax(&self) -> QVertex {
        self.vmax
    }

    /// Extents along `V1`, `V2`, `V0`.
    pub fn extents(&self) -> [u32; 3] {
        [self.d1, self.d2, self.d0]
    }

    pub fn len(&self) -> usize {
        (self.d1 as usize + 1) * (self.d2 as usize + 1) * (self.d0 as usize + 1)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Vertex at offset `(m1, m2, m0)` from the max-slope corner.
    pub fn vertex_at(&self, m1: u32, m2: u32, m0: u32) -> QVertex {
        let (a, b, t) = (self.vmax.l1(), self.vmax.l2(), self.vmax.t());
        let (m1, m2, m0) = (m1 as i64, m2 as i64, m0 as i64);
        QVertex::new(a - m1 + m0, b - m2 + m0, t - m1 - m2 - 2 * m0)
            .expect("box invariants keep every vertex valid")
    }

    /// Corner of minimum slope.
    pub fn vmin(&self) -> QVertex {
        self.vertex_at(self.d1, self.d2, self.d0)
    }

    pub fn vertices(&self) -> impl Iterator<Item = QVertex> + '_ {
        (0..=self.d1).flat_map(move |m1| {
            (0..=self.d2)
                .flat_map(move |m2| (0..=self.d0).map(move |m0| self.vertex_at(m1, m2, m0)))
        })
    }

    pub fn support(&self) -> Support {
        Support::from_vertices(self.vertices())
    }

    /// Some vertex lies on π (`l2 = 0`).
    pub fn touches_pi(&self) -> bool {
        self.vmax.l2() == self.d2 as i64
    }

    /// Some vertex lies on σ (`l1 = l2`).
    pub fn touches_sigma(&self) -> bool {
        self.vmax.l1() - self.d1 as i64 == self.vmax.l2()
    }

    pub fn rank(&self) -> u64 {
        self.vertices().map(|v| v.rank()).sum()
    }

    pub fn c1(&self) -> i64 {
        self.vertices().map(|v| v.c1_unchecked()).sum()
    }

    /// The dual box: its max-slope corner is the dual of `vmin`, and the
    /// `V1` and `V0` extents swap.
    pub fn dual(&self) -> Parallelepiped {
        Parallelepiped::new(self.vmin().dual(), self.d0, self.d2, self.d1)
            .expect("dual of a box is a box")
    }

    /// Recognizes a multiplicity-free, full-arrow support filling a box.
    pub fn recognize(s: &Support) -> Option<Parallelepiped> {
        if s.is_empty() || !s.is_multiplicity_free() || !s.is_full_arrow() {
            return None;
        }
        let pts = s.lattice_points()?;
        let (lo, hi) = bounds(pts.iter().map(|(p, _)| p.m));
        let count: i64 = (0..3).map(|i| hi[i] - lo[i] + 1).product();
        if count != s.len() as i64 {
            return None;
        }
        let class = pts[0].0.class;
        let vmax = LatticePoint { class, m: lo }.vertex()?;
        Parallelepiped::new(
            vmax,
            (hi[0] - lo[0]) as u32,
            (hi[1] - lo[1]) as u32,
            (hi[2] - lo[2]) as u32,
        )
        .ok()
    }
}

pub(crate) fn bounds(points: impl Iterator<Item = [i64; 3]>) -> ([i64; 3], [i64; 3]) {
    let mut lo = [i64::MAX; 3];
    let mut hi = [i64::MIN; 3];
    for m in points {
        for i in 0..3 {
            lo[i] = lo[i].min(m[i]);
            hi[i] = hi[i].max(m[i]);
        }
    }
    (lo, hi)
}

impl fmt::Display for Parallelepiped {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "box[{} + ({},{},{})]",
            self.vmax, self.d1, self.d2, self.d0
        )
    }
}

/// The box supporting `gr S^{λ1,λ2,λ3}V(t)`.
pub fn gr_schur(lam1: u32, lam2: u32, lam3: u32, t: i64) -> Result<Parallelepiped> {
    if !(lam1 >= lam2 && lam2 >= lam3) {
        return Err(Error::InvalidPartition(vec![lam1, lam2, lam3]));
    }
    let vmax = QVertex::new((lam1 - lam3) as i64, (lam2 - lam3) as i64, t + lam3 as i64)?;
    Parallelepiped::new(vmax, lam1 - lam2, lam2 - lam3, lam3)
}

/// `gr(S^{v}Q ⊗ S^{w}Q)` with multiplicities given by Littlewood–Richardson
/// coefficients; columns of height three become twists.
pub fn tensor_gr(v: &QVertex, w: &QVertex) -> Support {
    let out = lr_tensor(&v.shape(), &w.shape(), 3).expect("two-row shapes fit three rows");
    let twist = v.t() + w.t();
    let summands = out.into_iter().map(|(nu, c)| {
        let p = nu.padded(3);
        let vertex = QVertex::from_three_rows(p[0] as i64, p[1] as i64, p[2] as i64, twist)
            .expect("partition rows are decreasing");
        (vertex, c as u32)
    });
    Support::full(summands).expect("LR coefficients are positive")
}

/// `gr(S^{v}Q ⊗ S^ρV(s))`: decompose `S^ρV(s)` into its box, then tensor
/// each summand with `v`.
pub fn tensor_with_rep(v: &QVertex, rho: &Partition, s: i64) -> Result<Support> {
    if rho.len() > 4 {
        return Err(Error::TooManyParts {
            parts: rho.parts().to_vec(),
            n: 4,
        });
    }
    // Λ⁴V is trivial on P(V): drop full columns of height four.
    let p = rho.padded(4);
    let b = gr_schur(p[0] - p[3], p[1] - p[3], p[2] - p[3], s)?;
    let mut acc = BTreeMap::<QVertex, u32>::new();
    for u in b.vertices() {
        for (x, m) in tensor_gr(v, &u).iter() {
            *acc.entry(*x).or_insert(0) += m;
        }
    }
    Support::full(acc)
}

/// JSON form of a support: vertices in output order and either `"full"` or
/// a list of `[source index, direction]` arrows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportJson {
    pub vertices: Vec<VertexJson>,
    #[serde(default = "ArrowsJson::full")]
    pub arrows: ArrowsJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub l1: i64,
    pub l2: i64,
    pub t: i64,
    #[serde(default = "one")]
    pub mult: u32,
}

fn one() -> u32 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ArrowsJson {
    Keyword(String),
    List(Vec<(usize, Direction)>),
}

impl ArrowsJson {
    fn full() -> Self {
        ArrowsJson::Keyword("full".into())
    }
}

impl From<&Support> for SupportJson {
    fn from(s: &Support) -> Self {
        let order = s.sorted_vertices();
        let vertices = order
            .iter()
            .map(|v| VertexJson {
                l1: v.l1(),
                l2: v.l2(),
                t: v.t(),
                mult: s.multiplicity(v),
            })
            .collect();
        let arrows = if s.is_full_arrow() {
            ArrowsJson::full()
        } else {
            let index: BTreeMap<QVertex, usize> =
                order.iter().enumerate().map(|(i, v)| (*v, i)).collect();
            let mut list: Vec<(usize, Direction)> =
                s.arrows.iter().map(|(src, d)| (index[src], *d)).collect();
            list.sort();
            ArrowsJson::List(list)
        };
        SupportJson { vertices, arrows }
    }
}

impl TryFrom<&SupportJson> for Support {
    type Error = Error;

    fn try_from(j: &SupportJson) -> Result<Self> {
        let mut vs = Vec::with_capacity(j.vertices.len());
        for x in &j.vertices {
            vs.push((QVertex::new(x.l1, x.l2, x.t)?, x.mult));
        }
        match &j.arrows {
            ArrowsJson::Keyword(k) if k == "full" => Support::full(vs),
            ArrowsJson::Keyword(k) => Err(Error::Input(format!("unknown arrows keyword '{k}'"))),
            ArrowsJson::List(list) => {
                let mut arrows = Vec::with_capacity(list.len());
                for &(i, d) in list {
                    let (src, _) = vs.get(i).ok_or_else(|| {
                        Error::Input(format!("arrow source index {i} out of range"))
                    })?;
                    arrows.push((*src, d));
                }
                Support::with_arrows(vs, arrows)
            }
        }
    }
}
