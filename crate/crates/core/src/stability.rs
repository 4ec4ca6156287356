//! Subrepresentation supports and slope stability.
//!
//! For a multiplicity-one support the subbundles coming from
//! subrepresentations are exactly the arrow-closed vertex subsets
//! ("filters"): whenever a vertex is present, so is the target of every
//! arrow leaving it. A bundle is semistable when no proper filter has larger
//! slope and multistable when every proper filter has strictly smaller
//! slope.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{Direction, QVertex, Slope};
use crate::staircase::CylinderStaircase;
use crate::support::{Parallelepiped, Support};

/// An arrow-closed subset of a support's vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filter {
    vertices: BTreeSet<QVertex>,
}

impl Filter {
    pub fn vertices(&self) -> &BTreeSet<QVertex> {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The filter as a subsupport of `host`.
    pub fn support(&self, host: &Support) -> Support {
        host.induced(&self.vertices)
    }

    pub fn rank(&self) -> u64 {
        self.vertices.iter().map(|v| v.rank()).sum()
    }

    pub fn c1(&self) -> i64 {
        self.vertices.iter().map(|v| v.c1_unchecked()).sum()
    }

    /// Whether the set is closed under the arrows of `host`.
    pub fn is_arrow_closed(&self, host: &Support) -> bool {
        host.arrows().iter().all(|(src, d)| {
            !self.vertices.contains(src)
                || self
                    .vertices
                    .contains(&src.arrow_target(*d).expect("stored arrows exist"))
        })
    }
}

impl FromIterator<QVertex> for Filter {
    fn from_iter<I: IntoIterator<Item = QVertex>>(iter: I) -> Self {
        Filter {
            vertices: iter.into_iter().collect(),
        }
    }
}

/// Vertices ordered by ascending slope, so that arrow targets come first.
struct Poset {
    order: Vec<QVertex>,
    targets: Vec<Vec<usize>>,
    c1: Vec<i64>,
    rank: Vec<i64>,
}

impl Poset {
    fn new(s: &Support) -> Result<Self> {
        s.require_multiplicity_free()?;
        let mut order: Vec<QVertex> = s.vertices().copied().collect();
        order.sort_by(|a, b| a.slope().cmp(&b.slope()).then_with(|| a.cmp(b)));
        let index: BTreeMap<QVertex, usize> =
            order.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut targets = vec![Vec::new(); order.len()];
        for (src, d) in s.arrows() {
            let tgt = src.arrow_target(*d).expect("stored arrows exist");
            targets[index[src]].push(index[&tgt]);
        }
        let c1 = order.iter().map(|v| v.c1_unchecked()).collect();
        let rank = order.iter().map(|v| v.rank() as i64).collect();
        Ok(Poset {
            order,
            targets,
            c1,
            rank,
        })
    }

    fn walk<F: FnMut(&[usize], i64, i64)>(&self, visit: &mut F) {
        let mut inc = vec![false; self.order.len()];
        let mut chosen = Vec::with_capacity(self.order.len());
        self.rec(0, &mut inc, &mut chosen, 0, 0, visit);
    }

    fn rec<F: FnMut(&[usize], i64, i64)>(
        &self,
        i: usize,
        inc: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        c1: i64,
        rank: i64,
        visit: &mut F,
    ) {
        if i == self.order.len() {
            visit(chosen, c1, rank);
            return;
        }
        self.rec(i + 1, inc, chosen, c1, rank, visit);
        if self.targets[i].iter().all(|&j| inc[j]) {
            inc[i] = true;
            chosen.push(i);
            self.rec(
                i + 1,
                inc,
                chosen,
                c1 + self.c1[i],
                rank + self.rank[i],
                visit,
            );
            chosen.pop();
            inc[i] = false;
        }
    }
}

/// Calls `f` on every filter of `s`, in a fixed order. With
/// `proper_nonempty` the empty and the full set are skipped.
pub fn for_each_filter<F: FnMut(&[QVertex])>(
    s: &Support,
    proper_nonempty: bool,
    mut f: F,
) -> Result<()> {
    let poset = Poset::new(s)?;
    let n = poset.order.len();
    let mut buf = Vec::with_capacity(n);
    poset.walk(&mut |chosen, _, _| {
        if proper_nonempty && (chosen.is_empty() || chosen.len() == n) {
            return;
        }
        buf.clear();
        buf.extend(chosen.iter().map(|&i| poset.order[i]));
        f(&buf);
    });
    Ok(())
}

/// All filters of `s`. Intended for small supports; use
/// [`count_filters`] or [`for_each_filter`] otherwise.
pub fn enumerate_filters(s: &Support, proper_nonempty: bool) -> Result<Vec<Filter>> {
    let mut out = Vec::new();
    for_each_filter(s, proper_nonempty, |vs| {
        out.push(vs.iter().copied().collect())
    })?;
    Ok(out)
}

pub fn count_filters(s: &Support, proper_nonempty: bool) -> Result<u64> {
    let mut n = 0u64;
    for_each_filter(s, proper_nonempty, |_| n += 1)?;
    Ok(n)
}

/// Number of plane partitions in an `a × b × c` box, i.e. the number of
/// filters of a box with `a`, `b`, `c` vertices along its sides.
pub fn macmahon_count(a: u32, b: u32, c: u32) -> Result<u128> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::Input("box sides must be positive".into()));
    }
    // exponents of each integer in the product, then of each prime
    let top = (a + b + c) as usize;
    let mut exp = vec![0i64; top + 1];
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=c {
                exp[(i + j + k - 1) as usize] += 1;
                exp[(i + j + k - 2) as usize] -= 1;
            }
        }
    }
    let mut prime_exp = vec![0i64; top + 1];
    for (n, &e) in exp.iter().enumerate().skip(2) {
        let mut m = n;
        let mut p = 2;
        while m > 1 {
            while m % p == 0 {
                prime_exp[p] += e;
                m /= p;
            }
            p += 1;
        }
    }
    let mut out: u128 = 1;
    for (p, &e) in prime_exp.iter().enumerate() {
        if e < 0 {
            return Err(Error::Internal("box count is not integral".into()));
        }
        for _ in 0..e {
            out = out
                .checked_mul(p as u128)
                .ok_or_else(|| Error::Input("box count overflows 128 bits".into()))?;
        }
    }
    Ok(out)
}

/// A proper nonempty filter of maximal slope.
///
/// Ties are broken by fewer vertices, then by the lexicographically
/// smallest sorted vertex list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremal {
    pub slope: Slope,
    pub filter: Filter,
}

struct Best {
    c1: i64,
    rank: i64,
    card: usize,
    vertices: Vec<QVertex>,
}

/// `Greater` when the candidate beats the incumbent.
fn compare_candidate(
    c1: i64,
    rank: i64,
    card: usize,
    best: &Best,
    vertices: impl FnOnce() -> Vec<QVertex>,
) -> Ordering {
    let lhs = c1 as i128 * best.rank as i128;
    let rhs = best.c1 as i128 * rank as i128;
    lhs.cmp(&rhs)
        .then_with(|| best.card.cmp(&card))
        .then_with(|| best.vertices.cmp(&vertices()))
}

fn finish(best: Option<Best>) -> Option<Extremal> {
    best.map(|b| Extremal {
        slope: Slope::new(b.c1, b.rank),
        filter: b.vertices.into_iter().collect(),
    })
}

/// Maximal-slope proper nonempty filter by plain enumeration of the
/// filter lattice. Works for any multiplicity-one support.
pub fn max_slope_filter_generic(s: &Support) -> Result<Option<Extremal>> {
    let poset = Poset::new(s)?;
    let n = poset.order.len();
    let mut best: Option<Best> = None;
    poset.walk(&mut |chosen, c1, rank| {
        if chosen.is_empty() || chosen.len() == n {
            return;
        }
        let collect = || {
            let mut vs: Vec<QVertex> = chosen.iter().map(|&i| poset.order[i]).collect();
            vs.sort();
            vs
        };
        offer_with(&mut best, c1, rank, chosen.len(), collect);
    });
    Ok(finish(best))
}

/// Replaces `best` when the candidate beats it. The vertex list is only
/// built on a full tie or a win.
fn offer_with(
    best: &mut Option<Best>,
    c1: i64,
    rank: i64,
    card: usize,
    vertices: impl Fn() -> Vec<QVertex>,
) {
    let wins = match best {
        None => true,
        Some(b) => compare_candidate(c1, rank, card, b, &vertices) == Ordering::Greater,
    };
    if wins {
        *best = Some(Best {
            c1,
            rank,
            card,
            vertices: vertices(),
        });
    }
}

/// Walks the filters of a cylinder staircase as monotone height profiles:
/// each column keeps the vertices with `m0 >= g`, and `g` can only grow
/// when moving against the arrows.
pub struct ProfileWalker {
    host: Parallelepiped,
    cols: Vec<(u32, u32)>,
    up: Vec<[Option<usize>; 2]>,
    c1_tail: Vec<Vec<i64>>,
    rank_tail: Vec<Vec<i64>>,
    height: usize,
}

impl ProfileWalker {
    pub fn new(cs: &CylinderStaircase) -> Self {
        let host = cs.host();
        let d0 = cs.height();
        let height = d0 as usize + 1;
        let mut cols = cs.columns();
        cols.sort_by(|a, b| (b.0 + b.1).cmp(&(a.0 + a.1)).then(b.0.cmp(&a.0)));
        let index: BTreeMap<(u32, u32), usize> =
            cols.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let up = cols
            .iter()
            .map(|&(x, y)| {
                [
                    index.get(&(x + 1, y)).copied(),
                    index.get(&(x, y + 1)).copied(),
                ]
            })
            .collect();
        let mut c1_tail = Vec::with_capacity(cols.len());
        let mut rank_tail = Vec::with_capacity(cols.len());
        for &(x, y) in &cols {
            let mut ct = vec![0i64; height + 1];
            let mut rt = vec![0i64; height + 1];
            for m0 in (0..height).rev() {
                let v = host.vertex_at(x, y, m0 as u32);
                ct[m0] = ct[m0 + 1] + v.c1_unchecked();
                rt[m0] = rt[m0 + 1] + v.rank() as i64;
            }
            c1_tail.push(ct);
            rank_tail.push(rt);
        }
        ProfileWalker {
            host,
            cols,
            up,
            c1_tail,
            rank_tail,
            height,
        }
    }

    fn total(&self) -> usize {
        self.cols.len() * self.height
    }

    /// Visits every profile with its `c1`, rank and vertex count.
    pub fn walk<F: FnMut(&[usize], i64, i64, usize)>(&self, visit: &mut F) {
        let mut g = vec![0usize; self.cols.len()];
        self.rec(0, &mut g, 0, 0, 0, visit);
    }

    fn rec<F: FnMut(&[usize], i64, i64, usize)>(
        &self,
        k: usize,
        g: &mut Vec<usize>,
        c1: i64,
        rank: i64,
        card: usize,
        visit: &mut F,
    ) {
        if k == self.cols.len() {
            visit(g, c1, rank, card);
            return;
        }
        let lo = self.up[k]
            .iter()
            .flatten()
            .map(|&j| g[j])
            .max()
            .unwrap_or(0);
        for gk in (lo..=self.height).rev() {
            g[k] = gk;
            self.rec(
                k + 1,
                g,
                c1 + self.c1_tail[k][gk],
                rank + self.rank_tail[k][gk],
                card + (self.height - gk),
                visit,
            );
        }
    }

    pub fn vertices_of(&self, g: &[usize]) -> Vec<QVertex> {
        let mut vs = Vec::new();
        for (k, &(x, y)) in self.cols.iter().enumerate() {
            for m0 in g[k]..self.height {
                vs.push(self.host.vertex_at(x, y, m0 as u32));
            }
        }
        vs.sort();
        vs
    }

    pub fn count(&self, proper_nonempty: bool) -> u64 {
        let total = self.total();
        let mut n = 0u64;
        self.walk(&mut |_, _, _, card| {
            if !proper_nonempty || (card != 0 && card != total) {
                n += 1;
            }
        });
        n
    }

    pub fn max_slope_filter(&self) -> Option<Extremal> {
        let total = self.total();
        let mut best: Option<Best> = None;
        self.walk(&mut |g, c1, rank, card| {
            if card == 0 || card == total {
                return;
            }
            offer_with(&mut best, c1, rank, card, || self.vertices_of(g));
        });
        finish(best)
    }
}

/// Maximal-slope proper nonempty filter; `None` when there is none (a
/// single vertex). Cylinder staircases use the profile walker, everything
/// else the generic enumeration.
pub fn max_slope_filter(s: &Support) -> Result<Option<Extremal>> {
    s.require_multiplicity_free()?;
    if s.is_empty() {
        return Err(Error::EmptySupport);
    }
    match CylinderStaircase::recognize(s) {
        Some(cs) => Ok(ProfileWalker::new(&cs).max_slope_filter()),
        None => max_slope_filter_generic(s),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stable {
    Yes,
    No,
    Unknown,
}

/// Shape of a support as far as the stability criteria are concerned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShapeKind {
    SingleVertex,
    Box,
    BoxTouchingBothPlanes,
    ClassicalStaircase,
    ClassicalStaircaseHeightZero,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub mu: Slope,
    pub semistable: bool,
    pub multistable: bool,
    pub stable: Stable,
    pub shape: ShapeKind,
    /// Present unless multistable: a proper filter of maximal slope.
    pub witness: Option<Extremal>,
}

fn semi_multi(s: &Support) -> Result<(Slope, bool, bool, Option<Extremal>)> {
    let mu = s.slope()?;
    let ext = max_slope_filter(s)?;
    let semistable = ext.as_ref().is_none_or(|e| e.slope <= mu);
    let multistable = ext.as_ref().is_none_or(|e| e.slope < mu);
    let witness = if multistable { None } else { ext };
    Ok((mu, semistable, multistable, witness))
}

/// Semistability: `μ(F) <= μ(S)` for every proper nonempty filter.
/// Returns the verdict and, on failure, a filter of larger slope.
pub fn semistable(s: &Support) -> Result<(bool, Option<Extremal>)> {
    let (_, semi, _, w) = semi_multi(s)?;
    Ok((semi, if semi { None } else { w }))
}

/// Multistability: `μ(F) < μ(S)` for every proper nonempty filter.
pub fn multistable(s: &Support) -> Result<(bool, Option<Extremal>)> {
    let (_, _, multi, w) = semi_multi(s)?;
    Ok((multi, w))
}

pub fn shape_kind(s: &Support) -> ShapeKind {
    if let Some(b) = Parallelepiped::recognize(s) {
        return if b.len() == 1 {
            ShapeKind::SingleVertex
        } else if b.touches_pi() && b.touches_sigma() {
            ShapeKind::BoxTouchingBothPlanes
        } else {
            ShapeKind::Box
        };
    }
    match CylinderStaircase::recognize(s) {
        Some(cs) if cs.is_completely_regular() => {
            if cs.height() == 0 {
                ShapeKind::ClassicalStaircaseHeightZero
            } else {
                ShapeKind::ClassicalStaircase
            }
        }
        _ => ShapeKind::Other,
    }
}

/// Full verdict. Stability is decided only for boxes and classical
/// staircases; other shapes get [`Stable::Unknown`].
pub fn classify(s: &Support) -> Result<Verdict> {
    let (mu, semistable, multistable, witness) = semi_multi(s)?;
    let shape = shape_kind(s);
    let stable = match shape {
        ShapeKind::SingleVertex | ShapeKind::Box | ShapeKind::ClassicalStaircase => Stable::Yes,
        ShapeKind::BoxTouchingBothPlanes | ShapeKind::ClassicalStaircaseHeightZero => Stable::No,
        ShapeKind::Other => Stable::Unknown,
    };
    let expected_multistable = !matches!(shape, ShapeKind::Other);
    if expected_multistable && !multistable {
        return Err(Error::Internal(format!(
            "{s} should be multistable but has a filter of slope {}",
            witness
                .as_ref()
                .map(|w| w.slope.to_string())
                .unwrap_or_default()
        )));
    }
    Ok(Verdict {
        mu,
        semistable,
        multistable,
        stable,
        shape,
        witness,
    })
}

/// Pairs of directions spanning the triangles whose hypotenuses are summed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HypPair {
    V1V2,
    V0V1,
    V0V2,
}

impl HypPair {
    pub fn directions(self) -> (Direction, Direction) {
        match self {
            HypPair::V1V2 => (Direction::V1, Direction::V2),
            HypPair::V0V1 => (Direction::V0, Direction::V1),
            HypPair::V0V2 => (Direction::V0, Direction::V2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Forward,
    Backward,
}

/// The `c + 1` points `v ± (j·Vi + (c-j)·Vk)`, `j = 0..=c`.
pub fn hypotenuse(v: &QVertex, c: u32, pair: HypPair, sign: Orientation) -> Result<Vec<QVertex>> {
    let (di, dk) = pair.directions();
    let s = match sign {
        Orientation::Forward => 1,
        Orientation::Backward => -1,
    };
    let base = v.lattice();
    (0..=c as i64)
        .map(|j| {
            let mut steps = [0i64; 3];
            steps[di.axis()] += s * j;
            steps[dk.axis()] += s * (c as i64 - j);
            let p = base.offset(steps);
            p.vertex().ok_or(Error::InvalidHypotenuse {
                l1: p.m[2] - p.m[0],
                l2: p.m[2] - p.m[1],
            })
        })
        .collect()
}

/// Sum of the ranks along a hypotenuse.
pub fn hyp_rank_sum_brute(v: &QVertex, c: u32, pair: HypPair, sign: Orientation) -> Result<u64> {
    Ok(hypotenuse(v, c, pair, sign)?.iter().map(|p| p.rank()).sum())
}

/// The three closed forms for hypotenuse rank sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClosedForm {
    /// forward along `V1, V2`
    EV1V2,
    /// backward along `V1, V2`
    RV1V2,
    /// forward along `V0, V1`
    EV0V1,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 3] = [ClosedForm::EV1V2, ClosedForm::RV1V2, ClosedForm::EV0V1];

    pub fn hypotenuse(self) -> (HypPair, Orientation) {
        match self {
            ClosedForm::EV1V2 => (HypPair::V1V2, Orientation::Forward),
            ClosedForm::RV1V2 => (HypPair::V1V2, Orientation::Backward),
            ClosedForm::EV0V1 => (HypPair::V0V1, Orientation::Forward),
        }
    }
}

/// Evaluates the printed polynomial for a hypotenuse rank sum, with
/// `x = l1 - l2 + 1` and `z = l2 + 1`. These are compared against four
/// times the brute-force sum.
pub fn hyp_rank_sum_closed(v: &QVertex, c: u32, which: ClosedForm) -> Result<i64> {
    let (pair, sign) = which.hypotenuse();
    hypotenuse(v, c, pair, sign)?;
    let x = v.l1() - v.l2() + 1;
    let z = v.l2() + 1;
    let c = c as i64;
    Ok(match which {
        ClosedForm::EV1V2 => (c + 1) * (-c * x * (x + 2 * z + 1) + 2 * x * z * (x + z)),
        ClosedForm::RV1V2 => (c + 1) * (c * x * (x + 2 * z - 1) + 2 * z * x * (z + x)),
        ClosedForm::EV0V1 => -c * c + c * (x + z) * (x - z + 1) + 2 * x * z * (x + z),
    })
}

/// Translation of a shape: `+add - remove`, or a single `+add`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Translation {
    Difference { add: Direction, remove: Direction },
    Plus(Direction),
}

impl Translation {
    pub fn steps(self) -> [i64; 3] {
        let mut s = [0i64; 3];
        match self {
            Translation::Difference { add, remove } => {
                s[add.axis()] += 1;
                s[remove.axis()] -= 1;
            }
            Translation::Plus(add) => s[add.axis()] += 1,
        }
        s
    }
}

impl std::fmt::Display for Translation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Translation::Difference { add, remove } => write!(f, "{add} - {remove}"),
            Translation::Plus(add) => write!(f, "+ {add}"),
        }
    }
}

/// Configurations where a translated rectangle in a `⟨V1, V2⟩` plane is not
/// claimed to lose slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TranslateException {
    /// by `V0 - V1` with the `V2` side longer
    V2SideLonger,
    /// by `V0 - V2` with the `V1` side longer
    V1SideLonger,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslateReport {
    pub mu_before: Slope,
    pub mu_after: Slope,
    pub strict_greater: bool,
    pub exception: Option<TranslateException>,
}

/// Slopes of a segment or rectangle before and after a translation.
pub fn translate_compare(shape: &Parallelepiped, t: Translation) -> Result<TranslateReport> {
    let [d1, d2, d0] = shape.extents();
    if [d1, d2, d0].iter().filter(|&&d| d > 0).count() > 2 {
        return Err(Error::InvalidBox(format!(
            "{shape} is neither a segment nor a rectangle"
        )));
    }
    let vmax = shape
        .vmax()
        .shifted(t.steps())
        .ok_or(Error::InvalidTranslate)?;
    let image = Parallelepiped::new(vmax, d1, d2, d0).map_err(|_| Error::InvalidTranslate)?;
    let mu_before = shape.support().slope()?;
    let mu_after = image.support().slope()?;
    let in_v1v2_plane = d0 == 0 && d1 > 0 && d2 > 0;
    let exception = match t {
        Translation::Difference {
            add: Direction::V0,
            remove: Direction::V1,
        } if in_v1v2_plane && d2 > d1 => Some(TranslateException::V2SideLonger),
        Translation::Difference {
            add: Direction::V0,
            remove: Direction::V2,
        } if in_v1v2_plane && d1 > d2 => Some(TranslateException::V1SideLonger),
        _ => None,
    };
    Ok(TranslateReport {
        mu_before,
        mu_after,
        strict_greater: mu_before > mu_after,
        exception,
    })
}

fn difference(a: &[QVertex], b: &BTreeSet<QVertex>) -> Support {
    Support::from_vertices(a.iter().filter(|v| !b.contains(v)).copied())
}

/// Horizontal slabs `H_i = R_i - R_{i-1}` and vertical slabs
/// `E_i = R_i - R_{i+1}`, where `R_i` is the box above step `i`.
pub fn slab_decomposition(cs: &CylinderStaircase) -> (Vec<Support>, Vec<Support>) {
    let r = cs.num_steps();
    let boxes: Vec<Vec<QVertex>> = (0..r)
        .map(|i| cs.quadrant(i).vertices().collect())
        .collect();
    let sets: Vec<BTreeSet<QVertex>> = boxes.iter().map(|b| b.iter().copied().collect()).collect();
    let empty = BTreeSet::new();
    let h = (0..r)
        .map(|i| difference(&boxes[i], if i == 0 { &empty } else { &sets[i - 1] }))
        .collect();
    let e = (0..r)
        .map(|i| difference(&boxes[i], sets.get(i + 1).unwrap_or(&empty)))
        .collect();
    (h, e)
}

/// For each step, the vertices lying above that step and no other.
pub fn sticking_out_parts(cs: &CylinderStaircase) -> Vec<Support> {
    let r = cs.num_steps();
    let boxes: Vec<Vec<QVertex>> = (0..r)
        .map(|i| cs.quadrant(i).vertices().collect())
        .collect();
    (0..r)
        .map(|i| {
            let others: BTreeSet<QVertex> = (0..r)
                .filter(|&j| j != i)
                .flat_map(|j| boxes[j].iter().copied())
                .collect();
            difference(&boxes[i], &others)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(l1: i64, l2: i64, t: i64) -> QVertex {
        QVertex::new(l1, l2, t).unwrap()
    }

    fn bx(vmax: QVertex, d1: u32, d2: u32, d0: u32) -> Parallelepiped {
        Parallelepiped::new(vmax, d1, d2, d0).unwrap()
    }

    /// Arrow-closed subsets by scanning every subset.
    fn brute_filters(s: &Support) -> BTreeSet<BTreeSet<QVertex>> {
        let vs: Vec<QVertex> = s.vertices().copied().collect();
        let mut out = BTreeSet::new();
        for mask in 0u64..(1 << vs.len()) {
            let f: Filter = (0..vs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| vs[i])
                .collect();
            if f.is_arrow_closed(s) {
                out.insert(f.vertices().clone());
            }
        }
        out
    }

    #[test]
    fn filter_examples() {
        let single = Support::from_vertices([v(2, 1, 0)]);
        assert!(enumerate_filters(&single, true).unwrap().is_empty());
        let a = v(1, 0, 0);
        let b = v(0, 0, -1);
        let pair = Support::from_vertices([a, b]);
        let all = enumerate_filters(&pair, false).unwrap();
        assert_eq!(all.len(), 3);
        let proper = enumerate_filters(&pair, true).unwrap();
        assert_eq!(proper, vec![[b].into_iter().collect()]);
        let cube = bx(v(2, 1, 0), 1, 1, 1).support();
        assert_eq!(count_filters(&cube, false).unwrap(), 20);
        assert_eq!(brute_filters(&cube).len(), 20);
        let doubled = Support::full([(a, 2)]).unwrap();
        assert_eq!(
            count_filters(&doubled, false),
            Err(Error::MultiplicityNotOne(2))
        );
    }

    #[test]
    fn macmahon_examples() {
        assert_eq!(macmahon_count(1, 1, 1).unwrap(), 2);
        assert_eq!(macmahon_count(2, 2, 2).unwrap(), 20);
        assert_eq!(macmahon_count(2, 2, 1).unwrap(), 6);
        assert_eq!(macmahon_count(4, 4, 4).unwrap(), 232_848);
        assert!(macmahon_count(0, 1, 1).is_err());
    }

    #[test]
    fn stability_examples() {
        let split =
            Support::with_arrows([(QVertex::line(0), 1), (QVertex::line(1), 1)], []).unwrap();
        let (semi, w) = semistable(&split).unwrap();
        assert!(!semi);
        let w = w.unwrap();
        assert_eq!(w.filter, [QVertex::line(1)].into_iter().collect());
        assert_eq!(w.slope, Slope::from_integer(1));

        let b = gr_box_210();
        let verdict = classify(&b.support()).unwrap();
        assert!(verdict.multistable);
        assert_eq!(verdict.stable, Stable::No);

        let verdict = classify(&Support::from_vertices([v(2, 1, 0)])).unwrap();
        assert!(verdict.multistable);
        assert_eq!(verdict.stable, Stable::Yes);
        assert!(verdict.witness.is_none());
    }

    fn gr_box_210() -> Parallelepiped {
        crate::support::gr_schur(2, 1, 0, 0).unwrap()
    }

    #[test]
    fn height_zero_classical_staircase_is_not_stable() {
        let cs = CylinderStaircase::classical(v(4, 2, 0), 2, 1, 1, 0).unwrap();
        let verdict = classify(&cs.support()).unwrap();
        assert!(verdict.multistable);
        assert_eq!(verdict.shape, ShapeKind::ClassicalStaircaseHeightZero);
        assert_eq!(verdict.stable, Stable::No);
        let cs = CylinderStaircase::classical(v(4, 2, 0), 2, 1, 1, 1).unwrap();
        assert_eq!(classify(&cs.support()).unwrap().stable, Stable::Yes);
    }

    #[test]
    fn unknown_shape() {
        // two unrelated vertices of equal slope: semistable, not multistable
        let s = Support::from_vertices([v(3, 0, 0), v(2, 1, 0)]);
        let verdict = classify(&s).unwrap();
        assert!(verdict.semistable && !verdict.multistable);
        assert_eq!(verdict.stable, Stable::Unknown);
        assert_eq!(verdict.witness.unwrap().filter.len(), 1);
    }

    #[test]
    fn hypotenuse_examples() {
        let a = v(2, 1, 0);
        assert_eq!(
            hyp_rank_sum_brute(&a, 0, HypPair::V1V2, Orientation::Forward).unwrap(),
            8
        );
        assert_eq!(
            hyp_rank_sum_brute(&a, 1, HypPair::V1V2, Orientation::Forward).unwrap(),
            9
        );
        let q = v(1, 0, 0);
        assert_eq!(
            hyp_rank_sum_brute(&q, 1, HypPair::V1V2, Orientation::Backward).unwrap(),
            9
        );
        assert_eq!(hyp_rank_sum_closed(&a, 0, ClosedForm::EV1V2).unwrap(), 32);
        assert_eq!(hyp_rank_sum_closed(&a, 1, ClosedForm::EV1V2).unwrap(), 36);
        assert_eq!(hyp_rank_sum_closed(&q, 1, ClosedForm::RV1V2).unwrap(), 36);
        assert!(matches!(
            hyp_rank_sum_brute(&q, 1, HypPair::V1V2, Orientation::Forward),
            Err(Error::InvalidHypotenuse { .. })
        ));
    }

    #[test]
    fn translate_examples() {
        let seg = bx(v(2, 1, 0), 0, 1, 0);
        let r = translate_compare(&seg, Translation::Plus(Direction::V1)).unwrap();
        assert_eq!(r.mu_before, Slope::new(3, 7));
        assert_eq!(r.mu_after, Slope::from_integer(-1));
        assert!(r.strict_greater);
        let sq = bx(v(4, 2, 0), 2, 2, 0);
        let r = translate_compare(
            &sq,
            Translation::Difference {
                add: Direction::V0,
                remove: Direction::V1,
            },
        )
        .unwrap();
        assert!(r.strict_greater);
        assert_eq!(r.exception, None);
        let tall = bx(v(5, 3, 0), 1, 3, 0);
        let r = translate_compare(
            &tall,
            Translation::Difference {
                add: Direction::V0,
                remove: Direction::V1,
            },
        )
        .unwrap();
        assert_eq!(r.exception, Some(TranslateException::V2SideLonger));
        let edge = bx(v(1, 1, 0), 0, 0, 0);
        assert_eq!(
            translate_compare(&edge, Translation::Plus(Direction::V1)),
            Err(Error::InvalidTranslate)
        );
    }

    #[test]
    fn slabs_of_small_staircases() {
        let b = bx(v(3, 1, 0), 1, 1, 1);
        let (h, e) = slab_decomposition(&CylinderStaircase::from_box(b));
        assert_eq!(h, vec![b.support()]);
        assert_eq!(e, vec![b.support()]);
        let cs = CylinderStaircase::classical(v(5, 2, 0), 2, 2, 1, 1).unwrap();
        let (h, e) = slab_decomposition(&cs);
        for parts in [&h, &e] {
            let union = parts.iter().fold(Support::default(), |acc, p| acc.sum(p));
            assert!(union.is_multiplicity_free());
            assert!(union.vertices().eq(cs.support().vertices()));
        }
        assert!(h[1].slope().unwrap() > h[0].slope().unwrap());
        assert!(e[0].slope().unwrap() > e[1].slope().unwrap());
    }

    fn small_box() -> impl Strategy<Value = Parallelepiped> {
        (0i64..5, 0i64..5, -2i64..3, 0u32..3, 0u32..3, 0u32..3).prop_map(|(a, b, t, d1, d2, d0)| {
            let (l1, l2) = (a.max(b), a.min(b));
            let d1 = d1.min((l1 - l2) as u32);
            let d2 = d2.min(l2 as u32);
            bx(v(l1, l2, t), d1, d2, d0)
        })
    }

    proptest! {
        #[test]
        fn enumeration_matches_brute_force(b in small_box()) {
            prop_assume!(b.len() <= 14);
            let s = b.support();
            let listed: BTreeSet<BTreeSet<QVertex>> = enumerate_filters(&s, false).unwrap()
                .into_iter().map(|f| f.vertices().clone()).collect();
            prop_assert_eq!(&listed, &brute_filters(&s));
            let [d1, d2, d0] = b.extents();
            prop_assert_eq!(listed.len() as u128, macmahon_count(d1 + 1, d2 + 1, d0 + 1).unwrap());
        }

        #[test]
        fn walker_matches_generic(b in small_box(), mask in 0u32..16) {
            let host = b;
            let [d1, d2, _] = host.extents();
            let mut steps: Vec<(u32, u32)> = Vec::new();
            for i in 0..=d1.min(d2) {
                if mask >> i & 1 == 1 || i == 0 {
                    steps.push((i, d2 - i));
                }
            }
            let cs = CylinderStaircase::new(host, steps).unwrap();
            let s = cs.support();
            let w = ProfileWalker::new(&cs);
            prop_assert_eq!(w.count(false), count_filters(&s, false).unwrap());
            prop_assert_eq!(w.max_slope_filter(), max_slope_filter_generic(&s).unwrap());
        }

        #[test]
        fn dual_reverses_filters(b in small_box()) {
            prop_assume!(b.len() <= 12);
            let s = b.support();
            let d = s.dual();
            let all: BTreeSet<QVertex> = s.vertices().copied().collect();
            for f in enumerate_filters(&s, false).unwrap() {
                let complement: Filter = all.difference(f.vertices()).map(|x| x.dual()).collect();
                prop_assert!(complement.is_arrow_closed(&d));
            }
        }

        #[test]
        fn duality_preserves_verdicts(b in small_box()) {
            let s = b.support();
            prop_assert_eq!(semistable(&s).unwrap().0, semistable(&s.dual()).unwrap().0);
            prop_assert_eq!(multistable(&s).unwrap().0, multistable(&s.dual()).unwrap().0);
        }

        #[test]
        fn boxes_are_multistable(b in small_box()) {
            prop_assert!(multistable(&b.support()).unwrap().0);
        }

        #[test]
        fn hypotenuse_v1v2_forms_are_four_times_brute(l1 in 0i64..10, l2 in 0i64..10, c in 0u32..6) {
            let a = v(l1.max(l2), l1.min(l2), 0);
            for form in [ClosedForm::EV1V2, ClosedForm::RV1V2] {
                let (pair, sign) = form.hypotenuse();
                if let Ok(brute) = hyp_rank_sum_brute(&a, c, pair, sign) {
                    prop_assert_eq!(hyp_rank_sum_closed(&a, c, form).unwrap(), 4 * brute as i64);
                }
            }
        }
    }
}
