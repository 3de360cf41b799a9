//! Exact chromatic numbers of small graphs: greedy clique lower bound,
//! DSATUR upper bound, then DSATUR branch and bound.

use serde::Serialize;

use super::graph::UnitDistanceGraph;
use crate::error::{Error, Result};

/// Search nodes explored before giving up on optimality. Comfortably covers
/// unit-distance graphs of around 60 vertices.
pub const NODE_BUDGET: u64 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ColoringSolution {
    pub k: usize,
    /// Color of each vertex, in `1..=k`.
    pub assignment: Vec<usize>,
    /// False when the node budget ran out before the bounds met.
    pub optimal: bool,
    pub lower_bound: usize,
    pub nodes: u64,
}

pub fn chromatic_number(g: &UnitDistanceGraph) -> ColoringSolution {
    chromatic_number_of(g.vertex_count(), &g.edges).expect("validated graphs have in-range edges")
}

/// Chromatic number of the graph on `0..n` with the given edges.
pub fn chromatic_number_of(n: usize, edges: &[(usize, usize)]) -> Result<ColoringSolution> {
    chromatic_number_with_budget(n, edges, NODE_BUDGET)
}

pub fn chromatic_number_with_budget(n: usize, edges: &[(usize, usize)], budget: u64) -> Result<ColoringSolution> {
    let mut adj = vec![vec![false; n]; n];
    for &(i, j) in edges {
        if i >= n || j >= n || i == j {
            return Err(Error::InvalidInput(format!("bad edge ({i}, {j}) for {n} vertices")));
        }
        adj[i][j] = true;
        adj[j][i] = true;
    }
    if n == 0 {
        return Ok(ColoringSolution { k: 0, assignment: vec![], optimal: true, lower_bound: 0, nodes: 0 });
    }
    let degree: Vec<usize> = adj.iter().map(|row| row.iter().filter(|&&b| b).count()).collect();
    let lower_bound = greedy_clique(&adj, &degree);
    let mut best = dsatur(&adj, &degree);
    let mut k = best.iter().max().map_or(0, |&c| c + 1);

    let mut search = Search { adj: &adj, degree: &degree, nodes: 0, budget, exhausted: false };
    while k > lower_bound {
        let mut colors = vec![usize::MAX; n];
        match search.color(&mut colors, 0, k - 1) {
            true => {
                best = colors;
                k = best.iter().max().map_or(0, |&c| c + 1);
            }
            false => break,
        }
    }
    Ok(ColoringSolution {
        k,
        assignment: best.iter().map(|c| c + 1).collect(),
        optimal: !search.exhausted,
        lower_bound,
        nodes: search.nodes,
    })
}

/// Largest clique found by growing one from each vertex, adding candidates
/// by decreasing degree (then index).
fn greedy_clique(adj: &[Vec<bool>], degree: &[usize]) -> usize {
    let n = adj.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(degree[v]), v));
    (0..n)
        .map(|seed| {
            let mut clique = vec![seed];
            for &v in &order {
                if v != seed && clique.iter().all(|&u| adj[u][v]) {
                    clique.push(v);
                }
            }
            clique.len()
        })
        .max()
        .unwrap_or(0)
}

/// Uncolored vertex of maximal saturation, then degree, then lowest index.
fn pick(adj: &[Vec<bool>], degree: &[usize], colors: &[usize]) -> Option<usize> {
    let n = adj.len();
    let mut best: Option<(usize, usize, usize)> = None;
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut seen = Vec::new();
        for u in 0..n {
            if adj[v][u] && colors[u] != usize::MAX && !seen.contains(&colors[u]) {
                seen.push(colors[u]);
            }
        }
        let key = (seen.len(), degree[v], v);
        if best.is_none_or(|b| (key.0, key.1) > (b.0, b.1)) {
            best = Some(key);
        }
    }
    best.map(|b| b.2)
}

fn free(adj: &[Vec<bool>], colors: &[usize], v: usize, c: usize) -> bool {
    (0..adj.len()).all(|u| !adj[v][u] || colors[u] != c)
}

fn dsatur(adj: &[Vec<bool>], degree: &[usize]) -> Vec<usize> {
    let mut colors = vec![usize::MAX; adj.len()];
    while let Some(v) = pick(adj, degree, &colors) {
        colors[v] = (0..).find(|&c| free(adj, &colors, v, c)).expect("some color is free");
    }
    colors
}

struct Search<'a> {
    adj: &'a [Vec<bool>],
    degree: &'a [usize],
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl Search<'_> {
    /// Tries to finish a proper coloring with colors `0..limit`, where
    /// `used` colors are already in play; a new color is only ever the next
    /// unused one, which removes color-permutation symmetry.
    fn color(&mut self, colors: &mut [usize], used: usize, limit: usize) -> bool {
        let Some(v) = pick(self.adj, self.degree, colors) else {
            return true;
        };
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return false;
        }
        for c in 0..(used + 1).min(limit) {
            if free(self.adj, colors, v, c) {
                colors[v] = c;
                if self.color(colors, used.max(c + 1), limit) {
                    return true;
                }
                colors[v] = usize::MAX;
                if self.exhausted {
                    return false;
                }
            }
        }
        false
    }
}
