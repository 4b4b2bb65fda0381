//! Cycle and path searches inside induced subgraphs `G[within]`.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use crate::budget::{BudgetExceeded, Meter};
use crate::graph::{Graph, VertexSet};

/// A shortest cycle of `G[within]`, found as a shortest `u`-`v` path avoiding
/// the edge `uv` over all edges in lexicographic order.
pub fn shortest_cycle(g: &Graph, within: &VertexSet) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for u in within.iter() {
        for v in g
            .neighbors(u)
            .intersection(within)
            .iter()
            .filter(|&v| v > u)
        {
            let limit = best.as_ref().map_or(usize::MAX, |c| c.len() - 1);
            if let Some(path) = shortest_path_avoiding_edge(g, within, u, v, limit) {
                if best.as_ref().is_none_or(|c| path.len() < c.len()) {
                    best = Some(path);
                }
            }
        }
        if best.as_ref().is_some_and(|c| c.len() == 3) {
            break;
        }
    }
    best
}

/// BFS path from `u` to `v` in `G[within] - uv` with fewer than `limit`
/// vertices. The path (starting at `u`, ending at `v`) closes into a cycle
/// through the edge `vu`.
fn shortest_path_avoiding_edge(
    g: &Graph,
    within: &VertexSet,
    u: usize,
    v: usize,
    limit: usize,
) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    dist[u] = 0;
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        if dist[x] + 2 >= limit {
            break;
        }
        for y in g.neighbors(x).intersection(within).iter() {
            if dist[y] != usize::MAX || (x == u && y == v) {
                continue;
            }
            dist[y] = dist[x] + 1;
            parent[y] = x;
            if y == v {
                let mut path = vec![v];
                let mut cur = v;
                while cur != u {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(y);
        }
    }
    None
}

/// Calls `visit` once for every cycle of exactly `len` vertices in
/// `G[within]`. Each cycle starts at its smallest vertex and its second
/// vertex is smaller than its last.
pub fn for_each_cycle_of_length<F>(
    g: &Graph,
    within: &VertexSet,
    len: usize,
    meter: &mut Meter,
    mut visit: F,
) -> Result<(), BudgetExceeded>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if len < 3 {
        return Ok(());
    }
    let mut path = Vec::with_capacity(len);
    for start in within.iter() {
        let mut allowed = within.clone();
        for v in 0..=start {
            allowed.remove(v);
        }
        path.clear();
        path.push(start);
        let mut on_path = g.empty_set();
        if extend_cycle(g, &allowed, len, &mut path, &mut on_path, meter, &mut visit)?.is_break() {
            return Ok(());
        }
    }
    Ok(())
}

fn extend_cycle<F>(
    g: &Graph,
    allowed: &VertexSet,
    len: usize,
    path: &mut Vec<usize>,
    on_path: &mut VertexSet,
    meter: &mut Meter,
    visit: &mut F,
) -> Result<ControlFlow<()>, BudgetExceeded>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    meter.tick()?;
    let start = path[0];
    let last = *path.last().expect("path starts non-empty");
    if path.len() == len {
        if g.has_edge(last, start) && path[1] < last && visit(path).is_break() {
            return Ok(ControlFlow::Break(()));
        }
        return Ok(ControlFlow::Continue(()));
    }
    let mut next = g.neighbors(last).intersection(allowed);
    next.difference_with(on_path);
    for y in next.iter() {
        path.push(y);
        on_path.insert(y);
        let flow = extend_cycle(g, allowed, len, path, on_path, meter, visit)?;
        on_path.remove(y);
        path.pop();
        if flow.is_break() {
            return Ok(flow);
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// All chordless cycles of `G[within]` through `v`, each listed once,
/// starting at `v`.
pub fn chordless_cycles_through(
    g: &Graph,
    v: usize,
    within: &VertexSet,
    meter: &mut Meter,
) -> Result<Vec<Vec<usize>>, BudgetExceeded> {
    let mut out = Vec::new();
    let first_hops = g.neighbors(v).intersection(within);
    for p1 in first_hops.iter() {
        let mut path = vec![v, p1];
        let mut blocked = g.empty_set();
        blocked.insert(v);
        blocked.insert(p1);
        chordless_extend(g, within, &mut path, &blocked, meter, &mut out)?;
    }
    Ok(out)
}

fn chordless_extend(
    g: &Graph,
    within: &VertexSet,
    path: &mut Vec<usize>,
    blocked: &VertexSet,
    meter: &mut Meter,
    out: &mut Vec<Vec<usize>>,
) -> Result<(), BudgetExceeded> {
    meter.tick()?;
    let v = path[0];
    let last = *path.last().expect("non-empty path");
    let mut next = g.neighbors(last).intersection(within);
    next.difference_with(blocked);
    if next.is_empty() {
        return Ok(());
    }
    // Once `last` becomes interior, its neighbors are off limits.
    let deeper = blocked.union(g.neighbors(last));
    for y in next.iter() {
        if g.has_edge(y, v) {
            if path[1] < y {
                let mut cycle = path.clone();
                cycle.push(y);
                out.push(cycle);
            }
            continue;
        }
        path.push(y);
        let mut b = deeper.clone();
        b.insert(y);
        chordless_extend(g, within, path, &b, meter, out)?;
        path.pop();
    }
    Ok(())
}

/// Number of vertices on a longest path in `G[within]` (0 for an empty
/// set). On budget exhaustion the best length found so far is returned with
/// `exact = false`.
pub fn longest_path(g: &Graph, within: &VertexSet, limit: u64) -> (usize, bool) {
    let total = within.len();
    if total == 0 {
        return (0, true);
    }
    let mut meter = Meter::new("longest path", limit);
    let mut best = 1;
    let mut on_path = g.empty_set();
    for start in within.iter() {
        on_path.insert(start);
        let res = path_dfs(
            g,
            within,
            start,
            1,
            &mut on_path,
            &mut best,
            total,
            &mut meter,
        );
        on_path.remove(start);
        if res.is_err() {
            return (best, false);
        }
        if best == total {
            break;
        }
    }
    (best, true)
}

#[allow(clippy::too_many_arguments)]
fn path_dfs(
    g: &Graph,
    within: &VertexSet,
    last: usize,
    len: usize,
    on_path: &mut VertexSet,
    best: &mut usize,
    total: usize,
    meter: &mut Meter,
) -> Result<(), BudgetExceeded> {
    meter.tick()?;
    *best = (*best).max(len);
    if *best == total {
        return Ok(());
    }
    let mut next = g.neighbors(last).intersection(within);
    next.difference_with(on_path);
    for y in next.iter() {
        on_path.insert(y);
        path_dfs(g, within, y, len + 1, on_path, best, total, meter)?;
        on_path.remove(y);
        if *best == total {
            break;
        }
    }
    Ok(())
}

/// Whether `cycle` is a cycle of `g` on distinct vertices.
pub fn is_cycle(g: &Graph, cycle: &[usize]) -> bool {
    if cycle.len() < 3 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let distinct = g.set_of(cycle.iter().copied());
    distinct.len() == cycle.len()
        && (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
}
