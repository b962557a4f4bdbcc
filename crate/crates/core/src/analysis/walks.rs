//! Loop vertices and closed-walk incidence from sparse walk counts.

use crate::algebra::{Group, GroupMap};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, ConnectionMultiset};
use serde::Serialize;
use std::collections::BTreeMap;

pub const MAX_WALK_LENGTH: usize = 4;

pub fn loop_vertex_count(a: &Adjacency) -> usize {
    a.loop_vertices()
}

/// `(A^l)[x][x]` for every vertex, by expanding sparse rows of `A^{l-1}`.
pub fn closed_walk_counts(a: &Adjacency, l: usize) -> Result<Vec<u64>> {
    if l == 0 || l > MAX_WALK_LENGTH {
        return Err(Error::InvalidParameter(format!(
            "walk length {l} outside 1..={MAX_WALK_LENGTH}"
        )));
    }
    let n = a.n();
    let mut out = Vec::with_capacity(n);
    let mut frontier: BTreeMap<usize, u64> = BTreeMap::new();
    let mut next: BTreeMap<usize, u64> = BTreeMap::new();
    for x in 0..n {
        frontier.clear();
        frontier.insert(x, 1);
        for _ in 0..l - 1 {
            next.clear();
            for (&y, &w) in &frontier {
                for &(z, m) in a.row(y) {
                    *next.entry(z as usize).or_insert(0) += w * m as u64;
                }
            }
            std::mem::swap(&mut frontier, &mut next);
        }
        let closing: u64 = frontier.iter().map(|(&y, &w)| w * a.get(y, x) as u64).sum();
        out.push(closing);
    }
    Ok(out)
}

pub fn closed_walk_vertex_count(a: &Adjacency, l: usize) -> Result<usize> {
    Ok(closed_walk_counts(a, l)?.iter().filter(|&&c| c > 0).count())
}

/// Loop vertices of `C(G,S)^sigma` predicted by `x^{-1} sigma(x) in S`.
pub fn twisted_loop_vertices(group: &Group, s: &ConnectionMultiset, sigma: &GroupMap) -> usize {
    (0..group.order())
        .filter(|&x| s.multiplicity(group.mul(group.inv(x), sigma.apply(x))) > 0)
        .count()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CountingReport {
    pub family: String,
    pub n: usize,
    pub loop_vertices: usize,
    pub closed3_vertices: usize,
    /// `(n - 2r)! / 4`.
    pub lower_bound: f64,
    /// `(n - r)!`, the scale of the upper envelope.
    pub envelope: f64,
    /// Observed `closed3_vertices / (n - r)!`.
    pub envelope_constant: f64,
    pub pass: bool,
}

/// Closed-3-walk incidence against `(n-2r)!/4`, with the `(n-r)!` envelope constant reported.
pub fn counting_report(
    family: &str,
    a: &Adjacency,
    n_points: u64,
    r: u64,
) -> Result<CountingReport> {
    if 2 * r > n_points {
        return Err(Error::InvalidParameter(format!(
            "r = {r} too large for n = {n_points}"
        )));
    }
    let closed3 = closed_walk_vertex_count(a, 3)?;
    let lower = crate::algebra::numtheory::factorial(n_points - 2 * r) as f64 / 4.0;
    let envelope = crate::algebra::numtheory::factorial(n_points - r) as f64;
    Ok(CountingReport {
        family: family.to_string(),
        n: a.n(),
        loop_vertices: a.loop_vertices(),
        closed3_vertices: closed3,
        lower_bound: lower,
        envelope,
        envelope_constant: closed3 as f64 / envelope,
        pass: closed3 as f64 >= lower,
    })
}
