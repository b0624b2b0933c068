//! Backtracking over a flat constraint model.
//!
//! Elements (edges or vertices) are assigned in a fixed order. A color may
//! be introduced only after all smaller colors are in use, which is sound
//! because every constraint here is invariant under color permutation.
//!
//! The parallel driver expands the tree breadth-first into a frontier of
//! prefixes, in the same order a sequential search would visit them, and
//! hands prefixes to workers. The reported witness is the one from the
//! earliest satisfiable prefix, so it is identical to the sequential one.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

/// Per-face parity group: each color's total weight must be zero or odd.
#[derive(Debug, Clone)]
pub(crate) struct ParityGroup {
    pub members: Vec<(usize, u32)>,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct Model {
    pub n: usize,
    /// Pairs that must receive different colors.
    pub distinct: Vec<(usize, usize)>,
    pub groups: Vec<ParityGroup>,
    /// Windows that must not be pairwise distinct.
    pub rainbow: Vec<Vec<usize>>,
    /// Windows that must not be constant.
    pub mono: Vec<Vec<usize>>,
    /// Set when a constraint can never hold, e.g. an element paired with itself.
    pub infeasible: bool,
}

#[derive(Debug, Clone)]
struct Compiled {
    n: usize,
    order: Vec<usize>,
    neighbors: Vec<Vec<usize>>,
    groups: Vec<ParityGroup>,
    member_of: Vec<Vec<(usize, u32)>>,
    rainbow: Vec<Vec<usize>>,
    mono: Vec<Vec<usize>>,
    rainbow_of: Vec<Vec<usize>>,
    mono_of: Vec<Vec<usize>>,
}

impl Compiled {
    fn new(model: &Model) -> Self {
        let n = model.n;
        let mut neighbors = vec![Vec::new(); n];
        let mut weight = vec![0usize; n];
        for &(a, b) in &model.distinct {
            neighbors[a].push(b);
            neighbors[b].push(a);
            weight[a] += 1;
            weight[b] += 1;
        }
        for nb in &mut neighbors {
            nb.sort_unstable();
            nb.dedup();
        }
        let mut member_of = vec![Vec::new(); n];
        for (g, group) in model.groups.iter().enumerate() {
            for &(x, w) in &group.members {
                member_of[x].push((g, w));
                weight[x] += 1;
            }
        }
        let index = |windows: &[Vec<usize>], weight: &mut [usize]| {
            let mut of = vec![Vec::new(); n];
            for (i, w) in windows.iter().enumerate() {
                for &x in w {
                    of[x].push(i);
                    weight[x] += 1;
                }
            }
            of
        };
        let rainbow_of = index(&model.rainbow, &mut weight);
        let mono_of = index(&model.mono, &mut weight);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (std::cmp::Reverse(weight[x]), x));
        Compiled {
            n,
            order,
            neighbors,
            groups: model.groups.clone(),
            member_of,
            rainbow: model.rainbow.clone(),
            mono: model.mono.clone(),
            rainbow_of,
            mono_of,
        }
    }
}

/// Outcome of one fixed-color feasibility probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Probe {
    /// Colors indexed by element, `1..=colors`.
    Feasible(Vec<u32>),
    Infeasible,
    BudgetExhausted,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct ProbeLimits {
    pub workers: usize,
    /// Total node budget shared by all probes of a solve; 0 = unlimited.
    pub node_budget: u64,
}

struct Shared<'a> {
    nodes: &'a AtomicU64,
    budget: u64,
    abort: AtomicBool,
    /// Smallest frontier index with a witness so far.
    found: AtomicUsize,
}

impl Shared<'_> {
    /// Counts a node; false once the budget is spent or an earlier prefix
    /// already produced a witness.
    fn tick(&self, local: &mut u64, prefix: usize) -> bool {
        *local += 1;
        if *local & 0x3ff == 0 {
            let total = self.nodes.fetch_add(0x400, Ordering::Relaxed) + 0x400;
            if self.budget != 0 && total > self.budget {
                self.abort.store(true, Ordering::Relaxed);
            }
            if self.abort.load(Ordering::Relaxed) || self.found.load(Ordering::Relaxed) < prefix {
                return false;
            }
        }
        true
    }

    fn flush(&self, local: u64) {
        self.nodes.fetch_add(local & 0x3ff, Ordering::Relaxed);
        if self.budget != 0 && self.nodes.load(Ordering::Relaxed) > self.budget {
            self.abort.store(true, Ordering::Relaxed);
        }
    }
}

struct Search<'m> {
    m: &'m Compiled,
    cap: u32,
    colors: Vec<u32>,
    /// counts[g * (cap + 1) + c]
    counts: Vec<u32>,
    /// Colors with a positive even count, per group.
    bad: Vec<u32>,
    /// Uncolored members of odd weight, per group.
    odd_free: Vec<u32>,
    max_used: Vec<u32>,
}

enum Step {
    Found,
    Exhausted,
    Aborted,
}

impl<'m> Search<'m> {
    fn new(m: &'m Compiled, cap: u32) -> Self {
        let odd_free = m.groups.iter().map(|g| g.members.iter().filter(|(_, w)| w % 2 == 1).count() as u32).collect();
        Search {
            m,
            cap,
            colors: vec![0; m.n],
            counts: vec![0; m.groups.len() * (cap as usize + 1)],
            bad: vec![0; m.groups.len()],
            odd_free,
            max_used: vec![0; m.n + 1],
        }
    }

    fn slot(&self, g: usize, c: u32) -> usize {
        g * (self.cap as usize + 1) + c as usize
    }

    fn local_ok(&self, x: usize, c: u32) -> bool {
        if self.m.neighbors[x].iter().any(|&y| self.colors[y] == c) {
            return false;
        }
        for &w in &self.m.rainbow_of[x] {
            let win = &self.m.rainbow[w];
            let cols: Vec<u32> = win.iter().map(|&y| if y == x { c } else { self.colors[y] }).collect();
            if cols.iter().all(|&v| v != 0) && (0..cols.len()).all(|i| (i + 1..cols.len()).all(|j| cols[i] != cols[j]))
            {
                return false;
            }
        }
        for &w in &self.m.mono_of[x] {
            let win = &self.m.mono[w];
            if win.iter().all(|&y| y == x || self.colors[y] == c) {
                return false;
            }
        }
        true
    }

    /// Colors `x` with `c`; returns false (with state restored) on a
    /// parity dead end.
    fn assign(&mut self, x: usize, c: u32) -> bool {
        self.colors[x] = c;
        let mut ok = true;
        for &(g, w) in &self.m.member_of[x] {
            let s = self.slot(g, c);
            let old = self.counts[s];
            let new = old + w;
            self.counts[s] = new;
            if old > 0 && old.is_multiple_of(2) {
                self.bad[g] -= 1;
            }
            if new.is_multiple_of(2) {
                self.bad[g] += 1;
            }
            if w % 2 == 1 {
                self.odd_free[g] -= 1;
            }
            if self.bad[g] > self.odd_free[g] {
                ok = false;
            }
        }
        if !ok {
            self.unassign(x);
        }
        ok
    }

    fn unassign(&mut self, x: usize) {
        let c = self.colors[x];
        for &(g, w) in &self.m.member_of[x] {
            let s = self.slot(g, c);
            let old = self.counts[s];
            let new = old - w;
            self.counts[s] = new;
            if old.is_multiple_of(2) {
                self.bad[g] -= 1;
            }
            if new > 0 && new.is_multiple_of(2) {
                self.bad[g] += 1;
            }
            if w % 2 == 1 {
                self.odd_free[g] += 1;
            }
        }
        self.colors[x] = 0;
    }

    fn try_color(&mut self, depth: usize, c: u32) -> bool {
        let x = self.m.order[depth];
        if !self.local_ok(x, c) || !self.assign(x, c) {
            return false;
        }
        self.max_used[depth + 1] = self.max_used[depth].max(c);
        true
    }

    fn candidates(&self, depth: usize) -> u32 {
        (self.max_used[depth] + 1).min(self.cap)
    }

    /// Replays a prefix of colors (in order positions). Prefixes come from
    /// the frontier, so every step is known to succeed.
    fn replay(&mut self, prefix: &[u32]) {
        for (depth, &c) in prefix.iter().enumerate() {
            let ok = self.try_color(depth, c);
            debug_assert!(ok, "frontier prefix must replay");
        }
    }

    fn dfs(&mut self, depth: usize, prefix: usize, shared: &Shared, local: &mut u64) -> Step {
        if depth == self.m.n {
            return Step::Found;
        }
        if !shared.tick(local, prefix) {
            return Step::Aborted;
        }
        let x = self.m.order[depth];
        for c in 1..=self.candidates(depth) {
            if !self.try_color(depth, c) {
                continue;
            }
            match self.dfs(depth + 1, prefix, shared, local) {
                Step::Exhausted => self.unassign(x),
                other => return other,
            }
        }
        Step::Exhausted
    }

    fn witness(&self) -> Vec<u32> {
        self.colors.clone()
    }
}

/// Searches for a coloring with at most `cap` colors.
pub(crate) fn probe(model: &Model, cap: u32, limits: ProbeLimits, nodes: &AtomicU64) -> Probe {
    if model.infeasible || cap == 0 {
        return Probe::Infeasible;
    }
    if model.n == 0 {
        return Probe::Feasible(Vec::new());
    }
    let m = Compiled::new(model);
    let shared = Shared {
        nodes,
        budget: limits.node_budget,
        abort: AtomicBool::new(false),
        found: AtomicUsize::new(usize::MAX),
    };
    let workers = limits.workers.max(1);

    let frontier = if workers == 1 { vec![Vec::new()] } else { frontier(&m, cap, 8 * workers) };
    if frontier.is_empty() {
        return Probe::Infeasible;
    }

    let next = AtomicUsize::new(0);
    let best: Mutex<Option<(usize, Vec<u32>)>> = Mutex::new(None);
    let run = || {
        let mut local = 0u64;
        loop {
            let i = next.fetch_add(1, Ordering::Relaxed);
            if i >= frontier.len() || shared.abort.load(Ordering::Relaxed) {
                break;
            }
            if shared.found.load(Ordering::Relaxed) < i {
                break;
            }
            let prefix = &frontier[i];
            let mut s = Search::new(&m, cap);
            s.replay(prefix);
            match s.dfs(prefix.len(), i, &shared, &mut local) {
                Step::Found => {
                    let mut b = best.lock().unwrap();
                    if b.as_ref().is_none_or(|(j, _)| i < *j) {
                        *b = Some((i, s.witness()));
                        shared.found.fetch_min(i, Ordering::Relaxed);
                    }
                }
                // Aborted: out of budget or superseded by an earlier witness.
                Step::Aborted | Step::Exhausted => {}
            }
        }
        shared.flush(local);
    };
    if workers == 1 {
        run();
    } else {
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(run);
            }
        });
    }

    // Prefixes are claimed in increasing order and a subtree is only
    // abandoned once an earlier prefix has a witness, so without a budget
    // stop the kept witness is the sequential one.
    match best.into_inner().unwrap() {
        Some((_, w)) => Probe::Feasible(w),
        None if shared.abort.load(Ordering::Relaxed) => Probe::BudgetExhausted,
        None => Probe::Infeasible,
    }
}

/// Breadth-first expansion into at least `target` prefixes (or the full
/// tree depth), kept in sequential visiting order.
fn frontier(m: &Compiled, cap: u32, target: usize) -> Vec<Vec<u32>> {
    let mut level: Vec<Vec<u32>> = vec![Vec::new()];
    let mut depth = 0;
    while level.len() < target && depth < m.n && !level.is_empty() {
        let mut next = Vec::new();
        for prefix in &level {
            let mut s = Search::new(m, cap);
            s.replay(prefix);
            for c in 1..=s.candidates(depth) {
                if s.try_color(depth, c) {
                    let mut p = prefix.clone();
                    p.push(c);
                    next.push(p);
                    s.unassign(m.order[depth]);
                }
            }
        }
        level = next;
        depth += 1;
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_model(n: usize) -> Model {
        Model { n, distinct: (0..n - 1).map(|i| (i, i + 1)).collect(), ..Default::default() }
    }

    #[test]
    fn two_colors_suffice_for_a_path() {
        let nodes = AtomicU64::new(0);
        let limits = ProbeLimits { workers: 1, node_budget: 0 };
        assert_eq!(probe(&path_model(5), 1, limits, &nodes), Probe::Infeasible);
        // Inner elements have more constraints and are colored first.
        assert_eq!(probe(&path_model(5), 2, limits, &nodes), Probe::Feasible(vec![2, 1, 2, 1, 2]));
    }

    #[test]
    fn parity_group_forces_odd_counts() {
        // Four elements in one group, all pairwise distinct-free: need colors
        // with odd multiplicity summing to 4, so at least two colors.
        let model = Model {
            n: 4,
            groups: vec![ParityGroup { members: (0..4).map(|x| (x, 1)).collect() }],
            ..Default::default()
        };
        let nodes = AtomicU64::new(0);
        let limits = ProbeLimits { workers: 1, node_budget: 0 };
        assert_eq!(probe(&model, 1, limits, &nodes), Probe::Infeasible);
        assert_eq!(probe(&model, 2, limits, &nodes), Probe::Feasible(vec![1, 1, 1, 2]));
    }

    #[test]
    fn workers_agree_with_sequential_witness() {
        let mut model = path_model(9);
        model.groups.push(ParityGroup { members: (0..9).map(|x| (x, 1)).collect() });
        let nodes = AtomicU64::new(0);
        let one = probe(&model, 3, ProbeLimits { workers: 1, node_budget: 0 }, &nodes);
        for workers in [2, 3, 4, 8] {
            assert_eq!(probe(&model, 3, ProbeLimits { workers, node_budget: 0 }, &nodes), one);
        }
    }
}
