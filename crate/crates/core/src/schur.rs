//! Partitions and the representation-theoretic counting behind every rank
//! computation: Weyl's dimension formula, Pieri's rule, the
//! Littlewood–Richardson rule and duality of Schur modules.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of naturals, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

/// Partitions with multiplicities, ordered for deterministic output.
pub type PartitionMultiset = BTreeMap<Partition, u64>;

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(q)`.
    pub fn row(q: u32) -> Self {
        if q == 0 {
            Self::empty()
        } else {
            Partition(vec![q])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`, the number of boxes.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        (0..n.max(self.len())).map(|i| self.part(i)).collect()
    }

    fn check_rows(&self, n: usize) -> Result<()> {
        if self.len() > n {
            Err(Error::TooManyParts {
                parts: self.0.clone(),
                n,
            })
        } else {
            Ok(())
        }
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `dim S^λ C^n` by Weyl's product formula.
pub fn weyl_dim(lambda: &Partition, n: usize) -> Result<u64> {
    lambda.check_rows(n)?;
    let l = lambda.padded(n);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..n {
        for j in (i + 1)..n {
            num *= (l[i] - l[j]) as u128 + (j - i) as u128;
            den *= (j - i) as u128;
        }
    }
    if !num.is_multiple_of(den) {
        return Err(Error::Internal(format!(
            "Weyl dimension of {lambda} for n={n} is not integral"
        )));
    }
    u64::try_from(num / den).map_err(|_| Error::Internal("Weyl dimension overflow".into()))
}

/// All shapes obtained from `lambda` by adding a horizontal strip of `q`
/// boxes, keeping those with at most `max_rows` rows.
pub fn pieri_row(lambda: &Partition, q: u32, max_rows: usize) -> Result<PartitionMultiset> {
    lambda.check_rows(max_rows)?;
    let rows = lambda.len() + 1;
    let mut out = PartitionMultiset::new();
    let mut current = Vec::with_capacity(rows);
    fill_strip(lambda, 0, q, &mut current, &mut |nu| {
        if let Ok(p) = Partition::new(nu.to_vec()) {
            if p.len() <= max_rows {
                out.insert(p, 1);
            }
        }
    });
    Ok(out)
}

// Row i receives between 0 and (lambda[i-1] - lambda[i]) new boxes; the
// first row is unbounded.
fn fill_strip(
    lambda: &Partition,
    row: usize,
    remaining: u32,
    current: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    if row > lambda.len() {
        if remaining == 0 {
            emit(current);
        }
        return;
    }
    let base = lambda.part(row);
    let cap = if row == 0 {
        remaining
    } else {
        (lambda.part(row - 1) - base).min(remaining)
    };
    for add in 0..=cap {
        current.push(base + add);
        fill_strip(lambda, row + 1, remaining - add, current, emit);
        current.pop();
    }
}

/// Decomposes `S^λ ⊗ S^μ` by the Littlewood–Richardson rule and keeps the
/// summands with at most `max_rows` rows.
///
/// The skew tableaux are built label by label: the boxes labelled `k` form a
/// horizontal strip added after those labelled `k-1`, which makes rows weakly
/// increasing and columns strictly increasing. A filling counts when its
/// reverse reading word is a lattice word.
pub fn lr_tensor(lambda: &Partition, mu: &Partition, max_rows: usize) -> Result<PartitionMultiset> {
    lambda.check_rows(max_rows)?;
    mu.check_rows(max_rows)?;
    let rows = lambda.len() + mu.len();
    let mut grid: Vec<Vec<u32>> = vec![Vec::new(); rows];
    let shape: Vec<u32> = lambda.padded(rows);
    let mut out = PartitionMultiset::new();
    place_label(lambda, mu, 0, &shape, &mut grid, &mut |nu, grid| {
        if is_lattice(grid, mu.len()) {
            let p = Partition::new(nu.to_vec()).expect("strip addition keeps shapes partitions");
            if p.len() <= max_rows {
                *out.entry(p).or_insert(0) += 1;
            }
        }
    });
    Ok(out)
}

/// Receives a finished shape together with its labelled grid.
type TableauSink<'a> = dyn FnMut(&[u32], &[Vec<u32>]) + 'a;

fn place_label(
    lambda: &Partition,
    mu: &Partition,
    label: usize,
    shape: &[u32],
    grid: &mut Vec<Vec<u32>>,
    emit: &mut TableauSink,
) {
    if label == mu.len() {
        emit(shape, grid);
        return;
    }
    let count = mu.part(label);
    let mut next = shape.to_vec();
    add_labelled_strip(lambda, mu, label, shape, 0, count, &mut next, grid, emit);
}

#[allow(clippy::too_many_arguments)]
fn add_labelled_strip(
    lambda: &Partition,
    mu: &Partition,
    label: usize,
    shape: &[u32],
    row: usize,
    remaining: u32,
    next: &mut Vec<u32>,
    grid: &mut Vec<Vec<u32>>,
    emit: &mut TableauSink,
) {
    if row == shape.len() {
        if remaining == 0 {
            let snapshot = next.clone();
            place_label(lambda, mu, label + 1, &snapshot, grid, emit);
        }
        return;
    }
    // In a lattice filling, row r only holds labels <= r.
    let cap = if row < label {
        0
    } else if row == 0 {
        remaining
    } else {
        (shape[row - 1] - shape[row]).min(remaining)
    };
    for add in 0..=cap {
        next[row] = shape[row] + add;
        for _ in 0..add {
            grid[row].push(label as u32);
        }
        add_labelled_strip(
            lambda,
            mu,
            label,
            shape,
            row + 1,
            remaining - add,
            next,
            grid,
            emit,
        );
        for _ in 0..add {
            grid[row].pop();
        }
        next[row] = shape[row];
    }
}

fn is_lattice(grid: &[Vec<u32>], labels: usize) -> bool {
    let mut counts = vec![0u32; labels];
    for row in grid {
        for &x in row.iter().rev() {
            let x = x as usize;
            counts[x] += 1;
            if x > 0 && counts[x] > counts[x - 1] {
                return false;
            }
        }
    }
    true
}

/// The shape of `(S^λ C^n)^∨`: `(λ1-λn, λ1-λ(n-1), …, λ1-λ2)`.
pub fn dual_partition(lambda: &Partition, n: usize) -> Result<Partition> {
    lambda.check_rows(n)?;
    if n == 0 {
        return Ok(Partition::empty());
    }
    let l = lambda.padded(n);
    let parts: Vec<u32> = (1..n).rev().map(|i| l[0] - l[i]).collect();
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn set(parts: &[&[u32]]) -> PartitionMultiset {
        parts.iter().map(|x| (p(x), 1)).collect()
    }

    /// Semistandard tableaux of shape `lambda` with entries in `1..=n`,
    /// counted cell by cell.
    fn ssyt_count(lambda: &[u32], n: u32) -> u64 {
        fn go(n: u32, cells: &[(usize, usize)], k: usize, t: &mut Vec<Vec<u32>>) -> u64 {
            if k == cells.len() {
                return 1;
            }
            let (r, c) = cells[k];
            let lo_row = if c > 0 { t[r][c - 1] } else { 1 };
            let lo_col = if r > 0 { t[r - 1][c] + 1 } else { 1 };
            let lo = lo_row.max(lo_col);
            let mut total = 0;
            for v in lo..=n {
                t[r][c] = v;
                total += go(n, cells, k + 1, t);
            }
            t[r][c] = 0;
            total
        }
        let cells: Vec<(usize, usize)> = lambda
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
            .collect();
        let mut t: Vec<Vec<u32>> = lambda.iter().map(|&len| vec![0; len as usize]).collect();
        go(n, &cells, 0, &mut t)
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(weyl_dim(&p(&[]), 3).unwrap(), 1);
        assert_eq!(weyl_dim(&p(&[1]), 3).unwrap(), 3);
        assert_eq!(weyl_dim(&p(&[2, 1]), 3).unwrap(), 8);
        assert_eq!(weyl_dim(&p(&[2, 1]), 4).unwrap(), 20);
    }

    #[test]
    fn weyl_dim_rejects_too_many_parts() {
        assert!(matches!(
            weyl_dim(&p(&[1, 1, 1, 1]), 3),
            Err(Error::TooManyParts { .. })
        ));
    }

    #[test]
    fn weyl_dim_matches_ssyt_oracle() {
        for n in 1..=4usize {
            for l1 in 0..=5u32 {
                for l2 in 0..=l1 {
                    for l3 in 0..=l2 {
                        let parts = [l1, l2, l3];
                        let lam = p(&parts);
                        if lam.len() > n {
                            continue;
                        }
                        assert_eq!(
                            weyl_dim(&lam, n).unwrap(),
                            ssyt_count(lam.parts(), n as u32),
                            "{lam} n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn partition_rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_row(&p(&[1]), 1, 3).unwrap(), set(&[&[2], &[1, 1]]));
        assert_eq!(pieri_row(&p(&[]), 5, 3).unwrap(), set(&[&[5]]));
        assert_eq!(
            pieri_row(&p(&[2, 1]), 2, 3).unwrap(),
            set(&[&[4, 1], &[3, 2], &[3, 1, 1], &[2, 2, 1]])
        );
    }

    #[test]
    fn lr_examples() {
        let lam = p(&[3, 1]);
        assert_eq!(lr_tensor(&lam, &p(&[]), 3).unwrap(), set(&[&[3, 1]]));
        assert_eq!(
            lr_tensor(&p(&[1]), &p(&[1]), 3).unwrap(),
            set(&[&[2], &[1, 1]])
        );
        assert_eq!(
            lr_tensor(&p(&[1, 1]), &p(&[1, 1]), 3).unwrap(),
            set(&[&[2, 2], &[2, 1, 1]])
        );
    }

    #[test]
    fn lr_known_coefficient() {
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2
        let out = lr_tensor(&p(&[2, 1]), &p(&[2, 1]), 6).unwrap();
        assert_eq!(out[&p(&[3, 2, 1])], 2);
        assert_eq!(out.values().sum::<u64>(), 8);
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual_partition(&p(&[]), 4).unwrap(), p(&[]));
        assert_eq!(dual_partition(&p(&[1]), 4).unwrap(), p(&[1, 1, 1]));
        assert_eq!(dual_partition(&p(&[2, 1]), 4).unwrap(), p(&[2, 2, 1]));
    }

    fn small_partition(n: usize) -> impl Strategy<Value = Partition> {
        prop::collection::vec(0u32..5, n).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    fn dim_sum(m: &PartitionMultiset, n: usize) -> u64 {
        m.iter().map(|(nu, k)| weyl_dim(nu, n).unwrap() * k).sum()
    }

    proptest! {
        #[test]
        fn pieri_dimension_identity(n in 1usize..=4, lam in small_partition(4), q in 0u32..5) {
            prop_assume!(lam.len() <= n);
            let out = pieri_row(&lam, q, n).unwrap();
            prop_assert_eq!(
                dim_sum(&out, n),
                weyl_dim(&lam, n).unwrap() * weyl_dim(&Partition::row(q), n).unwrap()
            );
            prop_assert_eq!(out, lr_tensor(&lam, &Partition::row(q), n).unwrap());
        }

        #[test]
        fn lr_symmetric_and_dimensional(n in 3usize..=4, a in small_partition(3), b in small_partition(3)) {
            let ab = lr_tensor(&a, &b, n).unwrap();
            prop_assert_eq!(&ab, &lr_tensor(&b, &a, n).unwrap());
            prop_assert_eq!(dim_sum(&ab, n), weyl_dim(&a, n).unwrap() * weyl_dim(&b, n).unwrap());
        }

        #[test]
        fn dual_partition_involution(n in 1usize..=4, lam in small_partition(4)) {
            prop_assume!(lam.len() <= n);
            let back = dual_partition(&dual_partition(&lam, n).unwrap(), n).unwrap();
            let shift = lam.padded(n)[n - 1];
            let expect: Vec<u32> = lam.padded(n).iter().map(|x| x - shift).collect();
            prop_assert_eq!(back, Partition::new(expect).unwrap());
        }
    }

    #[test]
    fn dual_preserves_dimension() {
        for l1 in 0..=4u32 {
            for l2 in 0..=l1 {
                for l3 in 0..=l2 {
                    let lam = p(&[l1, l2, l3]);
                    let d = dual_partition(&lam, 4).unwrap();
                    assert_eq!(weyl_dim(&lam, 4).unwrap(), weyl_dim(&d, 4).unwrap());
                }
            }
        }
    }
}
