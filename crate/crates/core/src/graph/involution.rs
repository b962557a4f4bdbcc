use super::adjacency::Adjacency;
use crate::algebra::GroupMap;
use crate::error::{Error, Result};

/// Permutation matrix `P[x, m(x)] = 1` of a vertex self-map with `m(m(x)) = x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionMatrix {
    map: Vec<usize>,
    fixed: usize,
}

pub fn involution_matrix(map: &[usize]) -> Result<InvolutionMatrix> {
    InvolutionMatrix::new(map.to_vec())
}

impl InvolutionMatrix {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        if let Some(x) = (0..n).find(|&x| map[x] >= n || map[map[x]] != x) {
            return Err(Error::hypothesis(
                "vertex map is not an involution",
                format!("vertex {x}"),
            ));
        }
        let fixed = (0..n).filter(|&x| map[x] == x).count();
        Ok(InvolutionMatrix { map, fixed })
    }

    pub fn from_group_map(m: &GroupMap) -> Result<Self> {
        InvolutionMatrix::new(m.table().to_vec())
    }

    pub fn identity(n: usize) -> Self {
        InvolutionMatrix {
            map: (0..n).collect(),
            fixed: n,
        }
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn fixed_rows(&self) -> usize {
        self.fixed
    }

    /// `P A`.
    pub fn left_mul(&self, a: &Adjacency) -> Adjacency {
        a.permute_rows(&self.map)
    }

    /// `A P`.
    pub fn right_mul(&self, a: &Adjacency) -> Adjacency {
        a.permute_cols(&self.map)
    }

    pub fn commutes_with(&self, other: &InvolutionMatrix) -> bool {
        (0..self.n()).all(|x| self.map[other.map[x]] == other.map[self.map[x]])
    }

    /// First entry where `P A != A P`, if any.
    pub fn commutator_witness(&self, a: &Adjacency) -> Option<(usize, usize)> {
        (0..a.n()).find_map(|x| {
            a.row(x).iter().find_map(|&(y, m)| {
                let y = y as usize;
                (a.get(self.map[x], self.map[y]) != m).then_some((x, y))
            })
        })
    }

    /// The product `self * other`, an involution when the two commute.
    pub fn product(&self, other: &InvolutionMatrix) -> Result<InvolutionMatrix> {
        InvolutionMatrix::new((0..self.n()).map(|x| self.map[other.map[x]]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Group;

    #[test]
    fn fixed_rows_examples() {
        let z4 = Group::parse("cyclic:4").unwrap();
        let p = InvolutionMatrix::from_group_map(&GroupMap::inversion(&z4)).unwrap();
        assert_eq!(p.fixed_rows(), 2);
        let s3 = Group::parse("sym:3").unwrap();
        let p = InvolutionMatrix::from_group_map(&GroupMap::inversion(&s3)).unwrap();
        assert_eq!(p.fixed_rows(), 4);
        let swap: Vec<usize> = (0..9).map(|i| (i % 3) * 3 + i / 3).collect();
        assert_eq!(involution_matrix(&swap).unwrap().fixed_rows(), 3);
    }

    #[test]
    fn rejects_non_involution() {
        assert!(involution_matrix(&[1, 2, 0]).is_err());
    }

    #[test]
    fn square_is_identity() {
        let p = involution_matrix(&[1, 0, 3, 2, 4]).unwrap();
        let id = Adjacency::from_entries(5, (0..5).map(|x| (x, x, 1))).unwrap();
        assert_eq!(p.left_mul(&p.left_mul(&id)), id);
    }
}
