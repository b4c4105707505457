//! Vertex colouring over simple edges (loops never constrain a colouring).

use fixedbitset::FixedBitSet;

use super::{clique, ColoringWitness, ExactBounds, GcdGraph};
use crate::error::{Error, Result};

const UNCOLORED: usize = usize::MAX;

pub fn is_proper_coloring(g: &GcdGraph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.simple_edges().all(|(a, b)| colors[a] != colors[b])
}

fn distinct_colors(colors: &[usize]) -> usize {
    let mut seen: Vec<usize> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// DSATUR pick: most distinct neighbour colours, then most uncoloured
/// neighbours, then smallest label.
fn pick_vertex(adj: &[FixedBitSet], colors: &[usize]) -> Option<usize> {
    let mut best: Option<(usize, usize, usize)> = None;
    for v in 0..colors.len() {
        if colors[v] != UNCOLORED {
            continue;
        }
        let mut seen = Vec::new();
        let mut free = 0;
        for w in adj[v].ones() {
            match colors[w] {
                UNCOLORED => free += 1,
                c if !seen.contains(&c) => seen.push(c),
                _ => {}
            }
        }
        let key = (seen.len(), free, v);
        let better = match best {
            None => true,
            Some((s, f, _)) => (key.0, key.1) > (s, f),
        };
        if better {
            best = Some(key);
        }
    }
    best.map(|(_, _, v)| v)
}

/// DSATUR heuristic colouring: an upper bound on the chromatic number.
pub fn greedy_coloring(g: &GcdGraph) -> ColoringWitness {
    let adj = g.adjacency();
    let mut colors = vec![UNCOLORED; g.n()];
    while let Some(v) = pick_vertex(adj, &colors) {
        let c = (0..)
            .find(|&c| adj[v].ones().all(|w| colors[w] != c))
            .expect("some colour is free");
        colors[v] = c;
    }
    ColoringWitness {
        color_count: distinct_colors(&colors),
        colors,
        exact: false,
    }
}

/// Backtracking k-colourability. Unused colours are interchangeable, so only
/// the first unused colour is ever tried.
fn extend_coloring(adj: &[FixedBitSet], colors: &mut [usize], k: usize, used: usize) -> bool {
    let Some(v) = pick_vertex(adj, colors) else {
        return true;
    };
    for c in 0..k.min(used + 1) {
        if adj[v].ones().any(|w| colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if extend_coloring(adj, colors, k, used.max(c + 1)) {
            return true;
        }
    }
    colors[v] = UNCOLORED;
    false
}

/// Exact chromatic number with a witness colouring.
///
/// A maximum clique gives the lower bound and is precoloured; DSATUR gives
/// the upper bound. Each colour count in between is decided by backtracking.
pub fn chromatic_number(g: &GcdGraph, bounds: &ExactBounds) -> Result<ColoringWitness> {
    if g.n() > bounds.chromatic {
        return Err(Error::BoundExceeded {
            search: "chromatic number search",
            n: g.n() as u64,
            bound: bounds.chromatic as u64,
        });
    }
    let clique_bounds = ExactBounds {
        clique: g.n(),
        ..*bounds
    };
    let clique = clique::max_clique(g, &clique_bounds)?;
    let greedy = greedy_coloring(g);
    let lower = clique.order().max(1);
    if greedy.color_count <= lower {
        return Ok(ColoringWitness {
            exact: true,
            ..greedy
        });
    }
    let adj = g.adjacency();
    for k in lower..greedy.color_count {
        let mut colors = vec![UNCOLORED; g.n()];
        for (c, &v) in clique.vertices.iter().enumerate() {
            colors[v] = c;
        }
        if extend_coloring(adj, &mut colors, k, clique.order()) {
            return Ok(ColoringWitness {
                color_count: distinct_colors(&colors),
                colors,
                exact: true,
            });
        }
    }
    Ok(ColoringWitness {
        exact: true,
        ..greedy
    })
}
