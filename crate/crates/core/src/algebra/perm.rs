//! Permutations of `{1..n}` stored as fixed-size image arrays (0-based internally).
//!
//! Products compose right to left: `(x * y)(i) = x(y(i))`.

use crate::error::{Error, Result};
use std::fmt;

pub const MAX_DEGREE: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    n: u8,
    img: [u8; MAX_DEGREE],
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DEGREE, "degree {n} exceeds {MAX_DEGREE}");
        let mut img = [0u8; MAX_DEGREE];
        for (i, v) in img.iter_mut().enumerate().take(n) {
            *v = i as u8;
        }
        Perm { n: n as u8, img }
    }

    /// From a 0-based image list; rejects non-bijections.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::InvalidParameter(format!(
                "degree {n} exceeds {MAX_DEGREE}"
            )));
        }
        let mut seen = [false; MAX_DEGREE];
        let mut img = [0u8; MAX_DEGREE];
        for (i, &v) in images.iter().enumerate() {
            if v >= n || seen[v] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[v] = true;
            img[i] = v as u8;
        }
        Ok(Perm { n: n as u8, img })
    }

    /// From 1-based cycles, e.g. `[[1,2,3]]`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut p = Perm::identity(n);
        let mut used = [false; MAX_DEGREE];
        for cycle in cycles {
            for (pos, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n {
                    return Err(Error::Parse(format!("point {a} outside 1..{n}")));
                }
                if used[a - 1] {
                    return Err(Error::Parse(format!("point {a} repeated in cycles")));
                }
                used[a - 1] = true;
                let b = cycle[(pos + 1) % cycle.len()];
                p.img[a - 1] = (b - 1) as u8;
            }
        }
        Ok(p)
    }

    /// Parses cycle notation such as `(1,2,3)(4,5)`, `()` or `e`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "e" || s == "()" || s.is_empty() {
            return Ok(Perm::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')').map(|end| (&r[..end], &r[end + 1..])))
                .ok_or_else(|| Error::Parse(format!("bad cycle notation '{s}'")))?;
            let cycle: Vec<usize> = body
                .0
                .split(',')
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(format!("bad cycle '{}'", body.0)))?;
            cycles.push(cycle);
            rest = body.1;
        }
        Perm::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    /// 0-based image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.img[..self.n as usize]
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.n, other.n);
        let mut img = [0u8; MAX_DEGREE];
        for (i, v) in img.iter_mut().enumerate().take(self.n as usize) {
            *v = self.img[other.img[i] as usize];
        }
        Perm { n: self.n, img }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = [0u8; MAX_DEGREE];
        for i in 0..self.n as usize {
            img[self.img[i] as usize] = i as u8;
        }
        Perm { n: self.n, img }
    }

    pub fn is_even(&self) -> bool {
        let n = self.n as usize;
        let mut seen = [false; MAX_DEGREE];
        let mut transpositions = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.img[i] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Nontrivial cycles, 1-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n as usize;
        let mut seen = [false; MAX_DEGREE];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.img[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.img[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Next permutation in lexicographic order of image arrays.
    pub fn next_lex(&self) -> Option<Perm> {
        let n = self.n as usize;
        let mut img = self.img;
        let a = &mut img[..n];
        let i = (0..n.saturating_sub(1)).rev().find(|&i| a[i] < a[i + 1])?;
        let j = (i + 1..n).rev().find(|&j| a[j] > a[i]).unwrap();
        a.swap(i, j);
        a[i + 1..].reverse();
        Some(Perm { n: self.n, img })
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}
