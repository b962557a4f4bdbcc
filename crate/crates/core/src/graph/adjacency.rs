//! Integer adjacency matrices stored row by row as sorted `(column, multiplicity)` lists.

use crate::error::{Error, Result};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjacency {
    rows: Vec<Vec<(u32, u32)>>,
}

impl Adjacency {
    /// Accumulates `(row, col, mult)` triples; repeated positions add up.
    pub fn from_entries(
        n: usize,
        entries: impl IntoIterator<Item = (usize, usize, u32)>,
    ) -> Result<Self> {
        let mut maps: Vec<BTreeMap<u32, u32>> = vec![BTreeMap::new(); n];
        for (r, c, m) in entries {
            if r >= n || c >= n {
                return Err(Error::Parse(format!("entry ({r},{c}) outside {n}x{n}")));
            }
            if m > 0 {
                *maps[r].entry(c as u32).or_insert(0) += m;
            }
        }
        Ok(Adjacency {
            rows: maps.into_iter().map(|m| m.into_iter().collect()).collect(),
        })
    }

    /// One edge per listed target, row by row.
    pub fn from_targets(targets: &[Vec<(usize, u32)>]) -> Self {
        let rows = targets
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<u32, u32> = BTreeMap::new();
                for &(c, m) in row {
                    *acc.entry(c as u32).or_insert(0) += m;
                }
                acc.into_iter().collect()
            })
            .collect();
        Adjacency { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, x: usize) -> &[(u32, u32)] {
        &self.rows[x]
    }

    pub fn get(&self, x: usize, y: usize) -> u32 {
        let row = &self.rows[x];
        match row.binary_search_by_key(&(y as u32), |&(c, _)| c) {
            Ok(pos) => row[pos].1,
            Err(_) => 0,
        }
    }

    pub fn row_sum(&self, x: usize) -> u32 {
        self.rows[x].iter().map(|&(_, m)| m).sum()
    }

    /// Common row sum, if every row has the same one.
    pub fn regular_degree(&self) -> Option<u32> {
        let d = if self.n() == 0 { 0 } else { self.row_sum(0) };
        (0..self.n()).all(|x| self.row_sum(x) == d).then_some(d)
    }

    pub fn trace(&self) -> u64 {
        (0..self.n()).map(|x| self.get(x, x) as u64).sum()
    }

    pub fn loop_vertices(&self) -> usize {
        (0..self.n()).filter(|&x| self.get(x, x) > 0).count()
    }

    /// First `(x, y)` in row-major order with `A[x,y] > A[y,x]`.
    pub fn first_asymmetry(&self) -> Option<(usize, usize)> {
        for x in 0..self.n() {
            for &(y, m) in &self.rows[x] {
                if m > self.get(y as usize, x) {
                    return Some((x, y as usize));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    /// `(row, col, mult)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |&(c, m)| (r, c as usize, m)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// `P A` for the permutation matrix with `P[x, m(x)] = 1`: row `x` becomes row `m(x)`.
    pub fn permute_rows(&self, map: &[usize]) -> Adjacency {
        Adjacency {
            rows: map.iter().map(|&mx| self.rows[mx].clone()).collect(),
        }
    }

    /// `A P` for the same `P` when `m` is an involution: `(A P)[x, y] = A[x, m(y)]`.
    pub fn permute_cols(&self, map: &[usize]) -> Adjacency {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut r: Vec<(u32, u32)> = row
                    .iter()
                    .map(|&(c, m)| (map[c as usize] as u32, m))
                    .collect();
                r.sort_unstable();
                r
            })
            .collect();
        Adjacency { rows }
    }

    /// Relabels vertices: the result has `B[phi(x), phi(y)] = A[x, y]`.
    pub fn relabel(&self, phi: &[usize]) -> Adjacency {
        let mut rows = vec![Vec::new(); self.n()];
        for (x, row) in self.rows.iter().enumerate() {
            let mut r: Vec<(u32, u32)> = row
                .iter()
                .map(|&(c, m)| (phi[c as usize] as u32, m))
                .collect();
            r.sort_unstable();
            rows[phi[x]] = r;
        }
        Adjacency { rows }
    }

    pub fn matmul(&self, other: &Adjacency) -> Adjacency {
        let n = self.n();
        let mut acc = vec![0u64; other.n()];
        let mut touched: Vec<u32> = Vec::new();
        let mut rows = Vec::with_capacity(n);
        for row in &self.rows {
            for &(k, a) in row {
                for &(c, b) in &other.rows[k as usize] {
                    if acc[c as usize] == 0 {
                        touched.push(c);
                    }
                    acc[c as usize] += a as u64 * b as u64;
                }
            }
            touched.sort_unstable();
            let r: Vec<(u32, u32)> = touched
                .iter()
                .map(|&c| {
                    let v = acc[c as usize];
                    acc[c as usize] = 0;
                    (c, u32::try_from(v).expect("walk count fits in u32"))
                })
                .collect();
            touched.clear();
            rows.push(r);
        }
        Adjacency { rows }
    }

    pub fn neighbors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[x].iter().map(|&(c, _)| c as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Adjacency {
        Adjacency::from_entries(
            n,
            (0..n).flat_map(|x| [(x, (x + 1) % n, 1), (x, (x + n - 1) % n, 1)]),
        )
        .unwrap()
    }

    #[test]
    fn cycle_basics() {
        let a = cycle(4);
        assert_eq!(a.regular_degree(), Some(2));
        assert!(a.is_symmetric());
        assert_eq!(a.trace(), 0);
        let sq = a.matmul(&a);
        assert_eq!(sq.get(0, 0), 2);
        assert_eq!(sq.get(0, 2), 2);
        assert_eq!(sq.get(0, 1), 0);
    }

    #[test]
    fn asymmetry_witness() {
        let a = Adjacency::from_entries(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        assert_eq!(a.first_asymmetry(), Some((0, 1)));
    }

    #[test]
    fn permutations() {
        let a = Adjacency::from_entries(3, [(0, 1, 2), (1, 2, 1), (2, 2, 3)]).unwrap();
        let swap = [1, 0, 2];
        let pa = a.permute_rows(&swap);
        assert_eq!(pa.get(0, 2), 1);
        assert_eq!(pa.get(1, 1), 2);
        let ap = a.permute_cols(&swap);
        assert_eq!(ap.get(0, 0), 2);
        let r = a.relabel(&swap);
        assert_eq!(r.get(1, 0), 2);
        assert_eq!(r.relabel(&swap), a);
    }

    #[test]
    fn duplicate_entries_accumulate() {
        let a = Adjacency::from_entries(2, [(0, 1, 1), (0, 1, 1), (1, 0, 2)]).unwrap();
        assert_eq!(a.get(0, 1), 2);
        assert!(Adjacency::from_entries(2, [(0, 2, 1)]).is_err());
    }
}
