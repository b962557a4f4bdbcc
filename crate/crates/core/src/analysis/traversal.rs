//! Breadth-first search: eccentricities, diameter, components and 2-colouring.

use crate::error::{Error, Result};
use crate::graph::Adjacency;
use serde::Serialize;
use std::collections::VecDeque;

/// Directed BFS distances from `src`; `None` marks unreachable vertices.
pub fn bfs_distances(a: &Adjacency, src: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; a.n()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(x) = queue.pop_front() {
        let dx = dist[x].expect("queued vertices have distances");
        for y in a.neighbors(x) {
            if dist[y].is_none() {
                dist[y] = Some(dx + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum Diameter {
    Finite(u32),
    /// Some vertex cannot reach another.
    Unreachable,
}

impl Diameter {
    pub fn value(self) -> Option<u32> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Unreachable => None,
        }
    }
}

/// Exact diameter by BFS from every vertex.
pub fn bfs_diameter(a: &Adjacency) -> Diameter {
    let mut best = 0;
    for src in 0..a.n() {
        for d in bfs_distances(a, src) {
            match d {
                Some(d) => best = best.max(d),
                None => return Diameter::Unreachable,
            }
        }
    }
    Diameter::Finite(best)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub components: usize,
    /// Every component admits a proper 2-colouring (loops forbid it).
    pub bipartite: bool,
    /// Component index per vertex.
    pub labels: Vec<usize>,
    /// A colour class witness when bipartite: `colour[x]` in {0, 1}.
    pub colour: Vec<u8>,
}

pub fn connectivity_bipartite(a: &Adjacency) -> Result<Connectivity> {
    if let Some((row, col)) = a.first_asymmetry() {
        return Err(Error::NotSymmetric { row, col });
    }
    let n = a.n();
    let mut labels = vec![usize::MAX; n];
    let mut colour = vec![0u8; n];
    let mut bipartite = true;
    let mut components = 0;
    for start in 0..n {
        if labels[start] != usize::MAX {
            continue;
        }
        labels[start] = components;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for y in a.neighbors(x) {
                if labels[y] == usize::MAX {
                    labels[y] = components;
                    colour[y] = 1 - colour[x];
                    queue.push_back(y);
                } else if colour[y] == colour[x] {
                    bipartite = false;
                }
            }
        }
        components += 1;
    }
    Ok(Connectivity {
        components,
        bipartite,
        labels,
        colour,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circulant(n: usize, s: &[usize]) -> Adjacency {
        Adjacency::from_entries(
            n,
            (0..n).flat_map(|x| s.iter().map(move |&t| (x, (x + t) % n, 1))),
        )
        .unwrap()
    }

    #[test]
    fn diameters() {
        assert_eq!(bfs_diameter(&circulant(4, &[1, 3])), Diameter::Finite(2));
        assert_eq!(
            bfs_diameter(&circulant(5, &[1, 2, 3, 4])),
            Diameter::Finite(1)
        );
        assert_eq!(bfs_diameter(&circulant(12, &[1, 11])), Diameter::Finite(6));
        assert_eq!(bfs_diameter(&circulant(8, &[2, 6])), Diameter::Unreachable);
        // directed 5-cycle is strongly connected with diameter 4
        assert_eq!(bfs_diameter(&circulant(5, &[1])), Diameter::Finite(4));
    }

    #[test]
    fn components_and_colouring() {
        let c = connectivity_bipartite(&circulant(8, &[2, 6])).unwrap();
        assert_eq!(c.components, 2);
        let c4 = connectivity_bipartite(&circulant(4, &[1, 3])).unwrap();
        assert_eq!((c4.components, c4.bipartite), (1, true));
        let loops = Adjacency::from_entries(2, [(0, 0, 1), (0, 1, 1), (1, 0, 1)]).unwrap();
        assert!(!connectivity_bipartite(&loops).unwrap().bipartite);
        assert!(connectivity_bipartite(&circulant(5, &[1])).is_err());
    }
}
