//! Left-right planarity test with embedding extraction.
//!
//! Three DFS passes: orientation with lowpoints and nesting depths, testing
//! for a consistent left/right partition of back edges via a stack of conflict
//! pairs, and finally placing back edges into the rotation system.

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval { low: NONE, high: NONE };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    const EMPTY: ConflictPair = ConflictPair { left: Interval::EMPTY, right: Interval::EMPTY };

    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

/// Per-vertex cyclic neighbor order under construction, as doubly linked
/// lists over adjacency slots.
struct RotationBuilder<'a> {
    adj: &'a [Vec<usize>],
    cw: Vec<Vec<usize>>,
    ccw: Vec<Vec<usize>>,
    first: Vec<usize>,
}

impl<'a> RotationBuilder<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        RotationBuilder {
            adj,
            cw: adj.iter().map(|l| vec![NONE; l.len()]).collect(),
            ccw: adj.iter().map(|l| vec![NONE; l.len()]).collect(),
            first: vec![NONE; adj.len()],
        }
    }

    fn slot(&self, v: usize, w: usize) -> usize {
        self.adj[v].binary_search(&w).expect("half-edge exists")
    }

    /// Inserts `w` clockwise after `reference` around `v`.
    fn add_cw(&mut self, v: usize, w: usize, reference: Option<usize>) {
        let s = self.slot(v, w);
        match reference {
            None => {
                self.cw[v][s] = s;
                self.ccw[v][s] = s;
                self.first[v] = s;
            }
            Some(r) => {
                let r = self.slot(v, r);
                let next = self.cw[v][r];
                self.cw[v][s] = next;
                self.ccw[v][next] = s;
                self.cw[v][r] = s;
                self.ccw[v][s] = r;
            }
        }
    }

    /// Inserts `w` counter-clockwise before `reference` around `v`.
    fn add_ccw(&mut self, v: usize, w: usize, reference: Option<usize>) {
        match reference {
            None => self.add_cw(v, w, None),
            Some(r) => {
                let rs = self.slot(v, r);
                let prev = self.adj[v][self.ccw[v][rs]];
                self.add_cw(v, w, Some(prev));
                if self.first[v] == rs {
                    self.first[v] = self.slot(v, w);
                }
            }
        }
    }

    fn add_first(&mut self, v: usize, w: usize) {
        let reference = (self.first[v] != NONE).then(|| self.adj[v][self.first[v]]);
        self.add_ccw(v, w, reference);
    }

    fn finish(self) -> Vec<Vec<usize>> {
        (0..self.adj.len())
            .map(|v| {
                let mut order = Vec::with_capacity(self.adj[v].len());
                if self.first[v] != NONE {
                    let mut s = self.first[v];
                    loop {
                        order.push(self.adj[v][s]);
                        s = self.cw[v][s];
                        if s == self.first[v] {
                            break;
                        }
                    }
                }
                order
            })
            .collect()
    }
}

struct LrState<'a> {
    adj: &'a [Vec<usize>],
    /// Endpoint pairs of undirected edges; rewritten as `(tail, head)` once oriented.
    ends: Vec<(usize, usize)>,
    oriented: Vec<bool>,
    /// Undirected edge id for each adjacency slot.
    slot_edge: Vec<Vec<usize>>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    out_edges: Vec<Vec<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    roots: Vec<usize>,
    reference: Vec<usize>,
    side: Vec<i64>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
    left_ref: Vec<usize>,
    right_ref: Vec<usize>,
}

impl<'a> LrState<'a> {
    fn new(adj: &'a [Vec<usize>], edges: &[(usize, usize)]) -> Self {
        let n = adj.len();
        let m = edges.len();
        let slot_edge = adj
            .iter()
            .enumerate()
            .map(|(v, list)| {
                list.iter()
                    .map(|&w| edges.binary_search(&(v.min(w), v.max(w))).expect("edge listed"))
                    .collect()
            })
            .collect();
        LrState {
            adj,
            ends: edges.to_vec(),
            oriented: vec![false; m],
            slot_edge,
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            out_edges: vec![Vec::new(); n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            roots: Vec::new(),
            reference: vec![NONE; m],
            side: vec![1; m],
            lowpt_edge: vec![NONE; m],
            stack_bottom: vec![0; m],
            stack: Vec::new(),
            left_ref: vec![NONE; n],
            right_ref: vec![NONE; n],
        }
    }

    fn tail(&self, e: usize) -> usize {
        self.ends[e].0
    }

    fn head(&self, e: usize) -> usize {
        self.ends[e].1
    }

    fn orient(&mut self, v: usize) {
        let parent = self.parent_edge[v];
        for slot in 0..self.adj[v].len() {
            let e = self.slot_edge[v][slot];
            if self.oriented[e] {
                continue;
            }
            let w = self.adj[v][slot];
            self.oriented[e] = true;
            self.ends[e] = (v, w);
            self.out_edges[v].push(e);
            self.lowpt[e] = self.height[v];
            self.lowpt2[e] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = e;
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[e] = self.height[w];
            }

            self.nesting_depth[e] = 2 * self.lowpt[e] as i64;
            if self.lowpt2[e] < self.height[v] {
                self.nesting_depth[e] += 1;
            }

            if parent != NONE {
                if self.lowpt[e] < self.lowpt[parent] {
                    self.lowpt2[parent] = self.lowpt[parent].min(self.lowpt2[e]);
                    self.lowpt[parent] = self.lowpt[e];
                } else if self.lowpt[e] > self.lowpt[parent] {
                    self.lowpt2[parent] = self.lowpt2[parent].min(self.lowpt[e]);
                } else {
                    self.lowpt2[parent] = self.lowpt2[parent].min(self.lowpt2[e]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low];
        }
        self.lowpt[p.left.low].min(self.lowpt[p.right.low])
    }

    fn test(&mut self, v: usize) -> bool {
        let parent = self.parent_edge[v];
        let out = std::mem::take(&mut self.out_edges[v]);
        let mut ok = true;
        for (i, &e) in out.iter().enumerate() {
            let w = self.head(e);
            self.stack_bottom[e] = self.stack.len();
            if e == self.parent_edge[w] {
                if !self.test(w) {
                    ok = false;
                    break;
                }
            } else {
                self.lowpt_edge[e] = e;
                self.stack.push(ConflictPair { left: Interval::EMPTY, right: Interval { low: e, high: e } });
            }

            if self.lowpt[e] < self.height[v] {
                if i == 0 {
                    if parent != NONE {
                        self.lowpt_edge[parent] = self.lowpt_edge[e];
                    }
                } else if !self.add_constraints(e, parent) {
                    ok = false;
                    break;
                }
            }
        }
        self.out_edges[v] = out;
        if !ok {
            return false;
        }
        if parent != NONE {
            self.remove_back_edges(parent);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::EMPTY;
        loop {
            let mut q = self.stack.pop().expect("return edges of ei are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right.high = q.right.high;
                } else {
                    self.reference[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q.right.low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }

        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.reference[p.right.low] = q.right.high;
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left.high = q.left.high;
            } else {
                self.reference[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }

        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.tail(e);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if p.left.low != NONE {
                self.side[p.left.low] = -1;
            }
        }

        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.head(p.left.high) == u {
                p.left.high = self.reference[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.reference[p.left.low] = p.right.low;
                self.side[p.left.low] = -1;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.head(p.right.high) == u {
                p.right.high = self.reference[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.reference[p.right.low] = p.left.low;
                self.side[p.right.low] = -1;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }

        if self.lowpt[e] < self.height[u] {
            if let Some(top) = self.stack.last() {
                let hl = top.left.high;
                let hr = top.right.high;
                self.reference[e] = if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) { hl } else { hr };
            }
        }
    }

    /// Resolves the relative side of `e` to an absolute one, compressing the
    /// reference chain on the way.
    fn sign(&mut self, e: usize) -> i64 {
        let mut chain = Vec::new();
        let mut cur = e;
        while self.reference[cur] != NONE {
            chain.push(cur);
            cur = self.reference[cur];
        }
        let mut acc = self.side[cur];
        for &c in chain.iter().rev() {
            self.side[c] *= acc;
            self.reference[c] = NONE;
            acc = self.side[c];
        }
        self.side[e]
    }

    fn embed(&mut self, v: usize, rot: &mut RotationBuilder<'_>) {
        let out = std::mem::take(&mut self.out_edges[v]);
        for &e in &out {
            let w = self.head(e);
            if e == self.parent_edge[w] {
                rot.add_first(w, v);
                self.left_ref[v] = w;
                self.right_ref[v] = w;
                self.embed(w, rot);
            } else if self.side[e] == 1 {
                let r = self.right_ref[w];
                rot.add_cw(w, v, Some(r));
            } else {
                let r = self.left_ref[w];
                rot.add_ccw(w, v, Some(r));
                self.left_ref[w] = v;
            }
        }
        self.out_edges[v] = out;
    }
}

/// Runs the LR test; returns a clockwise rotation system when planar.
pub(crate) fn lr_planarity(adj: &[Vec<usize>], edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    if n > 2 && edges.len() > 3 * n - 6 {
        return None;
    }
    let mut st = LrState::new(adj, edges);
    for v in 0..n {
        if st.height[v] == NONE {
            st.height[v] = 0;
            st.roots.push(v);
            st.orient(v);
        }
    }

    for v in 0..n {
        let nd = &st.nesting_depth;
        st.out_edges[v].sort_by_key(|&e| nd[e]);
    }
    let roots = st.roots.clone();
    for &r in &roots {
        if !st.test(r) {
            return None;
        }
    }

    for e in 0..edges.len() {
        let s = st.sign(e);
        st.nesting_depth[e] *= s;
    }
    let mut rot = RotationBuilder::new(adj);
    for v in 0..n {
        let nd = &st.nesting_depth;
        st.out_edges[v].sort_by_key(|&e| nd[e]);
        let mut prev = None;
        for i in 0..st.out_edges[v].len() {
            let w = st.head(st.out_edges[v][i]);
            rot.add_cw(v, w, prev);
            prev = Some(w);
        }
    }
    for &r in &roots {
        st.embed(r, &mut rot);
    }
    Some(rot.finish())
}
