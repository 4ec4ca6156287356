//! Minimal free resolutions of box and cylinder-staircase bundles.
//!
//! Free terms are the bundles `S^λV(t)`. Their supports are exactly the
//! boxes touching both border planes, so a resolution can be built by
//! inclusion–exclusion of such boxes and checked by comparing the
//! alternating sum of the supports of its terms with the support being
//! resolved.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::QVertex;
use crate::schur::{weyl_dim, Partition};
use crate::staircase::CylinderStaircase;
use crate::support::{gr_schur, Parallelepiped, Support};

/// `S^{shape}V(twist)^{⊕ mult}` with at most three rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeTerm {
    shape: [u32; 3],
    twist: i64,
    mult: u32,
}

impl FreeTerm {
    /// Builds a term, dropping full columns of height four (`Λ⁴V` is
    /// trivial).
    pub fn new(shape: &Partition, twist: i64, mult: u32) -> Result<Self> {
        if shape.len() > 4 {
            return Err(Error::TooManyParts {
                parts: shape.parts().to_vec(),
                n: 4,
            });
        }
        if mult == 0 {
            return Err(Error::Input("free term with multiplicity 0".into()));
        }
        let p = shape.padded(4);
        Ok(FreeTerm {
            shape: [p[0] - p[3], p[1] - p[3], p[2] - p[3]],
            twist,
            mult,
        })
    }

    fn from_rows(l1: i64, l2: i64, l3: i64, twist: i64) -> Self {
        debug_assert!(l1 >= l2 && l2 >= l3 && l3 >= 0);
        FreeTerm {
            shape: [l1 as u32, l2 as u32, l3 as u32],
            twist,
            mult: 1,
        }
    }

    pub fn shape(&self) -> [u32; 3] {
        self.shape
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn mult(&self) -> u32 {
        self.mult
    }

    fn rows(&self) -> [i64; 3] {
        self.shape.map(|x| x as i64)
    }

    /// Support of one copy of the term.
    pub fn gr(&self) -> Parallelepiped {
        let [a, b, c] = self.shape;
        gr_schur(a, b, c, self.twist).expect("stored shapes are partitions")
    }

    pub fn rank(&self) -> u64 {
        let p = Partition::new(self.shape.to_vec()).expect("stored shapes are partitions");
        self.mult as u64 * weyl_dim(&p, 4).expect("three rows fit four")
    }

    /// `S^λV` is trivial, so only the twist contributes.
    pub fn c1(&self) -> i64 {
        self.rank() as i64 * self.twist
    }

    fn key(&self) -> ([u32; 3], i64) {
        (self.shape, self.twist)
    }
}

impl fmt::Display for FreeTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.shape;
        if self.mult > 1 {
            write!(f, "{}·", self.mult)?;
        }
        write!(f, "S^{{{a},{b},{c}}}V({})", self.twist)
    }
}

/// A resolution `0 → F_k → … → F_1 → F_0 → E → 0` stored head first:
/// `layers[0]` is `F_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    layers: Vec<Vec<FreeTerm>>,
    /// `(layer, source, target)`: the map from term `source` of `layer`
    /// to term `target` of `layer - 1` is nonzero.
    components: BTreeSet<(usize, usize, usize)>,
}

impl Resolution {
    pub fn new(
        layers: Vec<Vec<FreeTerm>>,
        components: BTreeSet<(usize, usize, usize)>,
    ) -> Result<Self> {
        if layers.is_empty() || layers.len() > 4 {
            return Err(Error::Input(format!(
                "{} layers; expected 1 to 4",
                layers.len()
            )));
        }
        if layers.iter().any(|l| l.is_empty()) {
            return Err(Error::Input("empty resolution layer".into()));
        }
        for &(layer, src, tgt) in &components {
            let ok = layer >= 1
                && layer < layers.len()
                && src < layers[layer].len()
                && tgt < layers[layer - 1].len();
            if !ok {
                return Err(Error::Input(format!(
                    "map component ({layer},{src},{tgt}) does not join two terms"
                )));
            }
        }
        Ok(Resolution { layers, components })
    }

    pub fn layers(&self) -> &[Vec<FreeTerm>] {
        &self.layers
    }

    pub fn components(&self) -> &BTreeSet<(usize, usize, usize)> {
        &self.components
    }

    pub fn rank(&self) -> i64 {
        self.alternating(|t| t.rank() as i64)
    }

    pub fn c1(&self) -> i64 {
        self.alternating(|t| t.c1())
    }

    fn alternating(&self, f: impl Fn(&FreeTerm) -> i64) -> i64 {
        self.layers
            .iter()
            .enumerate()
            .map(|(i, l)| sign(i) * l.iter().map(&f).sum::<i64>())
            .sum()
    }

    /// No term appears in two adjacent layers; necessary for minimality.
    pub fn has_no_adjacent_repeats(&self) -> bool {
        self.layers.windows(2).all(|w| {
            let a: BTreeSet<_> = w[0].iter().map(FreeTerm::key).collect();
            w[1].iter().all(|t| !a.contains(&t.key()))
        })
    }

    /// Swaps in a different twist for one term; used to check that the
    /// consistency test notices broken resolutions.
    pub fn with_twist(&self, layer: usize, index: usize, twist: i64) -> Resolution {
        let mut r = self.clone();
        r.layers[layer][index].twist = twist;
        r
    }
}

fn sign(layer: usize) -> i64 {
    if layer.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl fmt::Display for Resolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0")?;
        for layer in self.layers.iter().rev() {
            write!(f, " → ")?;
            for (i, t) in layer.iter().enumerate() {
                if i > 0 {
                    write!(f, " ⊕ ")?;
                }
                write!(f, "{t}")?;
            }
        }
        write!(f, " → E → 0")
    }
}

type Layers = Vec<Vec<FreeTerm>>;

/// Resolution of a box bundle.
///
/// With `(a, b, τ)` the max-slope corner and `(d1, d2, d0)` the extents,
/// the head is `S^λV(t)` with `λ = (a + d0, b + d0, d0)`, `t = τ - d0`;
/// `k = d2 + 1` and `l = d1 + 1` measure how far the box stays from π and
/// σ.
pub fn resolve_box(b: &Parallelepiped) -> Resolution {
    let [d1, d2, d0] = b.extents().map(|d| d as i64);
    let v = b.vmax();
    let (l1, l2, l3) = (v.l1() + d0, v.l2() + d0, d0);
    let t = v.t() - d0;
    let (k, l) = (d2 + 1, d1 + 1);
    let head = FreeTerm::from_rows(l1, l2, l3, t);
    let (layers, comps): (Layers, Vec<(usize, usize, usize)>) =
        match (b.touches_pi(), b.touches_sigma()) {
            (true, true) => (vec![vec![head]], vec![]),
            (true, false) => (
                vec![vec![head], vec![FreeTerm::from_rows(l1 - l, l2, l3, t - l)]],
                vec![(1, 0, 0)],
            ),
            (false, true) => (
                vec![
                    vec![head],
                    vec![FreeTerm::from_rows(l1, l2 - k, l3, t - k)],
                    vec![FreeTerm::from_rows(l2 - 1, l2 - k, l3, t - k - l1 + l2 - 1)],
                ],
                vec![(1, 0, 0), (2, 0, 0)],
            ),
            (false, false) => (
                vec![
                    vec![head],
                    vec![
                        FreeTerm::from_rows(l1, l2 - k, l3, t - k),
                        FreeTerm::from_rows(l1 - l, l2, l3, t - l),
                    ],
                    vec![FreeTerm::from_rows(l1 - l, l2 - k, l3, t - k - l)],
                ],
                vec![(1, 0, 0), (1, 1, 0), (2, 0, 0), (2, 0, 1)],
            ),
        };
    Resolution {
        layers,
        components: comps.into_iter().collect(),
    }
}

/// The free term whose support is the box touching σ and π with lower
/// column corner `(x, y)` in the host of `cs` and the full `V0` extent.
fn corner_term(cs: &CylinderStaircase, x: i64, y: i64) -> Option<FreeTerm> {
    let host = cs.host();
    let v = host.vmax();
    let (a, b, tau) = (v.l1(), v.l2(), v.t());
    let d0 = cs.height() as i64;
    if x > a - b + y || y > b {
        return None;
    }
    Some(FreeTerm::from_rows(
        a - x + d0,
        b - y + d0,
        d0,
        tau - x - y - d0,
    ))
}

/// Resolution of a cylinder-staircase bundle.
///
/// Each step contributes the box reaching both border planes from it; the
/// vertical slab under each step is cut back out by the next such box.
/// When the staircase does not reach π, one more box closes the region
/// beyond its far `V2` face, and its overlap is added back in the last
/// layer.
pub fn resolve_cylinder_staircase(cs: &CylinderStaircase) -> Result<Resolution> {
    let [d1, d2, _] = cs.host().extents().map(|d| d as i64);
    let steps: Vec<(i64, i64)> = cs
        .steps()
        .iter()
        .map(|&(x, y)| (x as i64, y as i64))
        .collect();
    let r = steps.len();
    let heads: Vec<FreeTerm> = steps
        .iter()
        .map(|&(x, y)| corner_term(cs, x, y).expect("steps lie in the quiver"))
        .collect();
    let mut middle = Vec::new();
    let mut comps = BTreeSet::new();
    let off_pi = !cs.touches_pi();
    if off_pi {
        let z = corner_term(cs, 0, d2 + 1).expect("the host stays off π");
        for i in 0..r {
            comps.insert((1, 0, i));
        }
        middle.push(z);
    }
    for i in 0..r {
        let corner = if i + 1 < r {
            (steps[i + 1].0, steps[i].1)
        } else {
            (d1 + 1, steps[i].1)
        };
        if let Some(t) = corner_term(cs, corner.0, corner.1) {
            let idx = middle.len();
            comps.insert((1, idx, i));
            if i + 1 < r {
                comps.insert((1, idx, i + 1));
            }
            middle.push(t);
        }
    }
    let mut layers = vec![heads];
    if !middle.is_empty() {
        layers.push(middle);
    }
    if off_pi {
        let tail = corner_term(cs, d1 + 1, d2 + 1).expect("the far corner box is nonempty");
        layers.push(vec![tail]);
        comps.insert((2, 0, 0));
        if r == 1 && layers[1].len() == 2 {
            // a single box: the last term meets both middle terms
            comps.insert((2, 0, 1));
        }
    }
    let res = Resolution {
        layers,
        components: comps,
    };
    if !euler_check(&res, &cs.support()) {
        return Err(Error::Internal(format!(
            "resolution of {cs} does not add up to its support"
        )));
    }
    Ok(res)
}

/// `Σ (-1)^layer · mult · gr(term)` as a signed vertex multiset; zero
/// entries are dropped.
pub fn gr_alternating_sum(r: &Resolution) -> BTreeMap<QVertex, i64> {
    let mut acc: BTreeMap<QVertex, i64> = BTreeMap::new();
    for (i, layer) in r.layers.iter().enumerate() {
        for t in layer {
            for v in t.gr().vertices() {
                *acc.entry(v).or_insert(0) += sign(i) * t.mult as i64;
            }
        }
    }
    acc.retain(|_, c| *c != 0);
    acc
}

/// Whether `r` is consistent with `s`: the signed supports cancel down to
/// `s`, and the alternating rank and `c1` agree.
pub fn euler_check(r: &Resolution, s: &Support) -> bool {
    let expect: BTreeMap<QVertex, i64> = s.iter().map(|(v, &m)| (*v, m as i64)).collect();
    gr_alternating_sum(r) == expect && r.rank() == s.rank() as i64 && r.c1() == s.c1()
}

/// Recognized resolution templates. Head layers are at twist `t + s`
/// (boxes) or `t + 1` (staircases) so that the listed parameters describe
/// the terms directly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ResolutionShape {
    /// `0 → S^λV(t) → S^{λ1+s,λ2,λ3}V(t+s) → E → 0`
    BoxTouchingPi {
        lambda: [u32; 3],
        s: u32,
        t: i64,
    },
    /// `0 → S^{λ2+s-1,λ2,λ3}V(t+λ2+s-1-λ1) → S^λV(t) → S^{λ1,λ2+s,λ3}V(t+s) → E → 0`
    BoxTouchingSigma {
        lambda: [u32; 3],
        s: u32,
        t: i64,
    },
    /// `0 → S^{λ1-l,λ2-k,λ3}V(t-k-l) → S^{λ1,λ2-k,λ3}V(t-k) ⊕ S^{λ1-l,λ2,λ3}V(t-l) → S^λV(t) → E → 0`
    BoxInterior {
        lambda: [u32; 3],
        k: u32,
        l: u32,
        t: i64,
    },
    /// heads `S^{λ1+i+1,λ2-i,λ3}V(t+1)` for `i = 1..=r`, middles
    /// `S^{λ1+i,λ2-i,λ3}V(t)` for `i = 1+ε..=r`
    StaircaseTouchingPi {
        lambda: [u32; 3],
        r: u32,
        epsilon: u32,
        t: i64,
    },
    /// as above, plus `Z = S^{λ1+r+1,λ2-r-k,λ3}V(t+1-k)` among the middles
    /// and a last layer `S^{λ1+r+1-m,λ2-r-k,λ3}V(t+1-k-m)` mapping only to
    /// `Z`
    StaircaseOffPi {
        lambda: [u32; 3],
        r: u32,
        epsilon: u32,
        k: u32,
        m: u32,
        t: i64,
    },
    Other,
}

impl ResolutionShape {
    pub fn is_box_template(&self) -> bool {
        matches!(
            self,
            ResolutionShape::BoxTouchingPi { .. }
                | ResolutionShape::BoxTouchingSigma { .. }
                | ResolutionShape::BoxInterior { .. }
        )
    }

    pub fn is_staircase_template(&self) -> bool {
        matches!(
            self,
            ResolutionShape::StaircaseTouchingPi { .. } | ResolutionShape::StaircaseOffPi { .. }
        )
    }
}

fn single_terms(r: &Resolution) -> Option<Vec<&FreeTerm>> {
    r.layers
        .iter()
        .map(|l| match l.as_slice() {
            [t] if t.mult == 1 => Some(t),
            _ => None,
        })
        .collect()
}

fn as_shape(rows: [i64; 3]) -> Option<[u32; 3]> {
    (rows[0] >= rows[1] && rows[1] >= rows[2] && rows[2] >= 0).then(|| rows.map(|x| x as u32))
}

fn components_of(list: &[(usize, usize, usize)]) -> BTreeSet<(usize, usize, usize)> {
    list.iter().copied().collect()
}

fn match_box(r: &Resolution) -> Option<ResolutionShape> {
    let n = r.layers.len();
    if n == 2 {
        let ts = single_terms(r)?;
        let (mu, nu) = (ts[0].rows(), ts[1].rows());
        let s = mu[0] - nu[0];
        if nu[1] == mu[1]
            && nu[2] == mu[2]
            && s >= 1
            && ts[1].twist == ts[0].twist - s
            && r.components == components_of(&[(1, 0, 0)])
        {
            return Some(ResolutionShape::BoxTouchingPi {
                lambda: as_shape(nu)?,
                s: s as u32,
                t: ts[1].twist,
            });
        }
        return None;
    }
    if n != 3 {
        return None;
    }
    if r.layers[1].len() == 1 {
        let ts = single_terms(r)?;
        let (mu, nu, rho) = (ts[0].rows(), ts[1].rows(), ts[2].rows());
        let s = mu[1] - nu[1];
        let w = ts[1].twist;
        let ok = nu[0] == mu[0]
            && nu[2] == mu[2]
            && s >= 1
            && w == ts[0].twist - s
            && rho == [nu[1] + s - 1, nu[1], nu[2]]
            && ts[2].twist == w + nu[1] + s - 1 - nu[0]
            && r.components == components_of(&[(1, 0, 0), (2, 0, 0)]);
        return ok.then(|| ResolutionShape::BoxTouchingSigma {
            lambda: nu.map(|x| x as u32),
            s: s as u32,
            t: w,
        });
    }
    if r.layers[0].len() != 1 || r.layers[1].len() != 2 || r.layers[2].len() != 1 {
        return None;
    }
    if r.layers.iter().flatten().any(|t| t.mult != 1) {
        return None;
    }
    let head = &r.layers[0][0];
    let tail = &r.layers[2][0];
    let lam = head.rows();
    let u = head.twist;
    let (first, second) = (&r.layers[1][0], &r.layers[1][1]);
    let (kt, lt, korder) = if first.rows()[0] == lam[0] {
        (first, second, 0)
    } else {
        (second, first, 1)
    };
    let k = lam[1] - kt.rows()[1];
    let l = lam[0] - lt.rows()[0];
    let ok = k >= 1
        && l >= 1
        && kt.rows() == [lam[0], lam[1] - k, lam[2]]
        && kt.twist == u - k
        && lt.rows() == [lam[0] - l, lam[1], lam[2]]
        && lt.twist == u - l
        && tail.rows() == [lam[0] - l, lam[1] - k, lam[2]]
        && tail.twist == u - k - l
        && r.components
            == components_of(&[(1, 0, 0), (1, 1, 0), (2, 0, korder), (2, 0, 1 - korder)]);
    ok.then(|| ResolutionShape::BoxInterior {
        lambda: lam.map(|x| x as u32),
        k: k as u32,
        l: l as u32,
        t: u,
    })
}

fn match_staircase(r: &Resolution) -> Option<ResolutionShape> {
    let n = r.layers.len();
    if !(n == 2 || n == 3) || r.layers.iter().flatten().any(|t| t.mult != 1) {
        return None;
    }
    let heads = &r.layers[0];
    let rr = heads.len() as i64;
    if rr < 2 {
        return None;
    }
    let u = heads[0].twist;
    if heads.iter().any(|h| h.twist != u) {
        return None;
    }
    let lowest = heads.iter().min_by_key(|h| h.shape[0])?.rows();
    let lam = [lowest[0] - 2, lowest[1] + 1, lowest[2]];
    if lam[2] <= 0 || lam[0] < 0 {
        return None;
    }
    let head_rows = |i: i64| [lam[0] + i + 1, lam[1] - i, lam[2]];
    let mid_rows = |i: i64| [lam[0] + i, lam[1] - i, lam[2]];
    let head_index: BTreeMap<[i64; 3], usize> = heads
        .iter()
        .enumerate()
        .map(|(j, h)| (h.rows(), j))
        .collect();
    let head_of = |i: i64| head_index.get(&head_rows(i)).copied();
    if (1..=rr).any(|i| head_of(i).is_none()) {
        return None;
    }
    let mids = &r.layers.get(1)?;
    let z_rows0 = lam[0] + rr + 1;
    let (z, plain): (Vec<_>, Vec<_>) = mids
        .iter()
        .enumerate()
        .partition(|(_, t)| t.rows()[0] == z_rows0);
    let epsilon = rr - plain.len() as i64;
    if !(epsilon == 0 || epsilon == 1) {
        return None;
    }
    let mut expect = BTreeSet::new();
    for &(idx, t) in &plain {
        let i = t.rows()[0] - lam[0];
        if !(1 + epsilon..=rr).contains(&i) || t.rows() != mid_rows(i) || t.twist != u - 1 {
            return None;
        }
        expect.insert((1, idx, head_of(i)?));
        if i > 1 {
            expect.insert((1, idx, head_of(i - 1)?));
        }
    }
    let distinct: BTreeSet<[i64; 3]> = plain.iter().map(|(_, t)| t.rows()).collect();
    if distinct.len() != plain.len() {
        return None;
    }
    let t = u - 1;
    let shape = lam.map(|x| x as u32);
    match (n, z.as_slice()) {
        (2, []) => (r.components == expect).then_some(ResolutionShape::StaircaseTouchingPi {
            lambda: shape,
            r: rr as u32,
            epsilon: epsilon as u32,
            t,
        }),
        (3, [(zi, zt)]) => {
            let zr = zt.rows();
            let k = lam[1] - rr - zr[1];
            let tail = &r.layers[2];
            let [tl] = tail.as_slice() else { return None };
            let m = z_rows0 - tl.rows()[0];
            let ok = k >= 1
                && m >= 1
                && zr[2] == lam[2]
                && zt.twist == u - k
                && tl.rows() == [z_rows0 - m, lam[1] - rr - k, lam[2]]
                && tl.twist == u - k - m;
            if !ok {
                return None;
            }
            for j in 0..heads.len() {
                expect.insert((1, *zi, j));
            }
            expect.insert((2, 0, *zi));
            (r.components == expect).then_some(ResolutionShape::StaircaseOffPi {
                lambda: shape,
                r: rr as u32,
                epsilon: epsilon as u32,
                k: k as u32,
                m: m as u32,
                t,
            })
        }
        _ => None,
    }
}

/// Matches `r` against the box and staircase resolution templates.
pub fn classify_resolution_shape(r: &Resolution) -> ResolutionShape {
    match_box(r)
        .or_else(|| match_staircase(r))
        .unwrap_or(ResolutionShape::Other)
}

/// JSON form: layers head first, and the nonzero map components as
/// `[layer, source, target]` triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionJson {
    pub layers: Vec<Vec<FreeTermJson>>,
    pub nonzero_components: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeTermJson {
    pub shape: Vec<u32>,
    pub twist: i64,
    pub mult: u32,
}

impl From<&Resolution> for ResolutionJson {
    fn from(r: &Resolution) -> Self {
        ResolutionJson {
            layers: r
                .layers
                .iter()
                .map(|l| {
                    l.iter()
                        .map(|t| FreeTermJson {
                            shape: t.shape.to_vec(),
                            twist: t.twist,
                            mult: t.mult,
                        })
                        .collect()
                })
                .collect(),
            nonzero_components: r.components.iter().map(|&(a, b, c)| [a, b, c]).collect(),
        }
    }
}

impl TryFrom<&ResolutionJson> for Resolution {
    type Error = Error;

    fn try_from(j: &ResolutionJson) -> Result<Self> {
        let mut layers = Vec::with_capacity(j.layers.len());
        for l in &j.layers {
            let mut terms = Vec::with_capacity(l.len());
            for t in l {
                terms.push(FreeTerm::new(
                    &Partition::new(t.shape.clone())?,
                    t.twist,
                    t.mult,
                )?);
            }
            layers.push(terms);
        }
        Resolution::new(
            layers,
            j.nonzero_components
                .iter()
                .map(|c| (c[0], c[1], c[2]))
                .collect(),
        )
    }
}
