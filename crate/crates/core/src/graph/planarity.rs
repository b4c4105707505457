//! Left-right planarity test (testing phase only, no embedding).
//!
//! A DFS orients the graph and computes lowpoints; a second DFS visits
//! out-edges by nesting depth and maintains a stack of conflict pairs of
//! return-edge intervals. The graph is planar iff no conflict pair ever needs
//! both of its sides.

use super::GcdGraph;

type EdgeId = usize;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

impl Interval {
    fn single(e: EdgeId) -> Self {
        Self {
            low: Some(e),
            high: Some(e),
        }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState {
    // oriented edge e goes from tail[e] to head[e]
    tail: Vec<usize>,
    head: Vec<usize>,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<EdgeId>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    out_edges: Vec<Vec<EdgeId>>,
    reference: Vec<Option<EdgeId>>,
    lowpt_edge: Vec<Option<EdgeId>>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

impl LrState {
    fn conflicting(&self, iv: &Interval, e: EdgeId) -> bool {
        match iv.high {
            Some(h) => !iv.is_empty() && self.lowpt[h] > self.lowpt[e],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => unreachable!("empty conflict pair on the stack"),
        }
    }

    /// Orientation DFS: heights, lowpoints and nesting depths.
    fn orient(&mut self, v: usize, adj: &[Vec<(usize, EdgeId)>], oriented: &mut [bool]) {
        let parent = self.parent_edge[v];
        let hv = self.height[v].expect("visited");
        for &(w, e) in &adj[v] {
            if oriented[e] {
                continue;
            }
            oriented[e] = true;
            self.tail[e] = v;
            self.head[e] = w;
            self.out_edges[v].push(e);
            self.lowpt[e] = hv;
            self.lowpt2[e] = hv;
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(e);
                    self.height[w] = Some(hv + 1);
                    self.orient(w, adj, oriented);
                }
                Some(hw) => self.lowpt[e] = hw,
            }
            self.nesting_depth[e] = 2 * self.lowpt[e] + usize::from(self.lowpt2[e] < hv);
            if let Some(pe) = parent {
                if self.lowpt[e] < self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
                    self.lowpt[pe] = self.lowpt[e];
                } else if self.lowpt[e] > self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
                } else {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
                }
            }
        }
    }

    /// Testing DFS; false as soon as a conflict cannot be resolved.
    fn test(&mut self, v: usize) -> bool {
        let parent = self.parent_edge[v];
        let hv = self.height[v].expect("visited");
        let edges = self.out_edges[v].clone();
        for (i, &ei) in edges.iter().enumerate() {
            self.stack_bottom[ei] = self.stack.len();
            let w = self.head[ei];
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval::single(ei),
                });
            }
            if self.lowpt[ei] < hv {
                let pe = parent.expect("return edges imply a parent edge");
                if i == 0 {
                    self.lowpt_edge[pe] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, pe) {
                    return false;
                }
            }
        }
        if let Some(pe) = parent {
            self.remove_back_edges(pe);
        }
        true
    }

    fn add_constraints(&mut self, ei: EdgeId, e: EdgeId) -> bool {
        let mut p = ConflictPair::default();
        // merge return edges of ei into p.right
        loop {
            let mut q = self
                .stack
                .pop()
                .expect("return edges of ei are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("nonempty right interval");
            if self.lowpt[qlow] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low.expect("nonempty")] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[qlow] = self.lowpt_edge[e];
            }
            if self.stack.len() <= self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of earlier siblings into p.left
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("peeked");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(prl) = p.right.low {
                self.reference[prl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pll) = p.left.low {
                self.reference[pll] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: EdgeId) {
        let u = self.tail[e];
        let hu = self.height[u].expect("visited");
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.head[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(low) = p.left.low {
                    self.reference[low] = p.right.low;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.head[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(low) = p.right.low {
                    self.reference[low] = p.left.low;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            if let Some(top) = self.stack.last() {
                let hl = top.left.high;
                let hr = top.right.high;
                self.reference[e] = match (hl, hr) {
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => hl,
                    (Some(_), None) => hl,
                    _ => hr,
                };
            }
        }
    }
}

/// Planarity of a simple graph on vertices `0..n`. Self-loops and repeated
/// edges are ignored.
pub fn is_planar_edges(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut simple: Vec<(usize, usize)> = edges
        .iter()
        .filter(|(a, b)| a != b)
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    simple.sort_unstable();
    simple.dedup();
    let m = simple.len();
    if n > 2 && m > 3 * n - 6 {
        return false;
    }
    let mut adj: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
    for (id, &(a, b)) in simple.iter().enumerate() {
        adj[a].push((b, id));
        adj[b].push((a, id));
    }
    let mut state = LrState {
        tail: vec![0; m],
        head: vec![0; m],
        height: vec![None; n],
        parent_edge: vec![None; n],
        lowpt: vec![0; m],
        lowpt2: vec![0; m],
        nesting_depth: vec![0; m],
        out_edges: vec![Vec::new(); n],
        reference: vec![None; m],
        lowpt_edge: vec![None; m],
        stack_bottom: vec![0; m],
        stack: Vec::new(),
    };
    let mut oriented = vec![false; m];
    let mut roots = Vec::new();
    for v in 0..n {
        if state.height[v].is_none() {
            state.height[v] = Some(0);
            roots.push(v);
            state.orient(v, &adj, &mut oriented);
        }
    }
    for v in 0..n {
        let depth = &state.nesting_depth;
        state.out_edges[v].sort_by_key(|&e| depth[e]);
    }
    roots.into_iter().all(|r| state.test(r))
}

/// Planarity of G_n over its simple edges.
pub fn is_planar(g: &GcdGraph) -> bool {
    let edges: Vec<(usize, usize)> = g.simple_edges().collect();
    is_planar_edges(g.n(), &edges)
}
