//! Maximum clique by branch and bound with a greedy-coloring bound.

use crate::bitset::Bitset;

#[derive(Clone, Debug)]
pub struct CliqueResult {
    /// Best clique found, as vertex indices.
    pub clique: Vec<usize>,
    /// Proven upper bound on the clique number.
    pub upper: usize,
    pub nodes: u64,
    pub complete: bool,
}

struct Search<'a> {
    adj: &'a [Bitset],
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

/// Vertices of `p` in color-class order, with the running color count.
fn color_sort(adj: &[Bitset], p: &Bitset) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.count());
    let mut colors = Vec::with_capacity(order.capacity());
    let mut uncolored = p.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.first() {
            uncolored.remove(v);
            q.remove(v);
            q.difference_with(&adj[v]);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

impl Search<'_> {
    fn expand(&mut self, mut p: Bitset) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        let (order, colors) = color_sort(self.adj, &p);
        for k in (0..order.len()).rev() {
            if self.current.len() + colors[k] <= self.best.len() || self.aborted {
                return;
            }
            let v = order[k];
            self.current.push(v);
            let mut next = p.clone();
            next.intersect_with(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            p.remove(v);
        }
    }
}

/// Maximum clique of the graph with adjacency rows `adj` (symmetric, no
/// loops), exploring at most `node_budget` nodes.
pub fn max_clique(adj: &[Bitset], node_budget: u64) -> CliqueResult {
    let n = adj.len();
    if n == 0 {
        return CliqueResult {
            clique: Vec::new(),
            upper: 0,
            nodes: 0,
            complete: true,
        };
    }
    // Renumber by descending degree so the coloring is tighter.
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by_key(|&v| (std::cmp::Reverse(adj[v].count()), v));
    let mut pos = vec![0; n];
    for (i, &v) in perm.iter().enumerate() {
        pos[v] = i;
    }
    let local: Vec<Bitset> = perm
        .iter()
        .map(|&v| {
            let mut row = Bitset::new(n);
            for u in adj[v].iter() {
                row.insert(pos[u]);
            }
            row
        })
        .collect();
    let full = Bitset::full(n);
    let root_bound = *color_sort(&local, &full).1.last().unwrap();
    let mut s = Search {
        adj: &local,
        best: vec![0],
        current: Vec::new(),
        nodes: 0,
        budget: node_budget.max(1),
        aborted: false,
    };
    s.expand(full);
    let mut clique: Vec<usize> = s.best.iter().map(|&i| perm[i]).collect();
    clique.sort_unstable();
    let complete = !s.aborted;
    CliqueResult {
        upper: if complete {
            clique.len()
        } else {
            root_bound.max(clique.len())
        },
        clique,
        nodes: s.nodes,
        complete,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<Bitset> {
        let mut adj = vec![Bitset::new(n); n];
        for &(a, b) in edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj
    }

    #[test]
    fn small_graphs() {
        let tri = graph(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        let r = max_clique(&tri, 1000);
        assert_eq!(r.clique, vec![0, 1, 2]);
        assert!(r.complete);
        let empty = graph(3, &[]);
        assert_eq!(max_clique(&empty, 10).clique.len(), 1);
    }

    #[test]
    fn matches_brute_force() {
        // Paley-like circulant on 13 vertices.
        let n = 13;
        let residues = [1, 3, 4, 9, 10, 12];
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| residues.contains(&((b - a) % n)))
            .collect();
        let adj = graph(n, &edges);
        let mut best = 0;
        for mask in 0u32..1 << n {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if vs
                .iter()
                .all(|&a| vs.iter().all(|&b| a == b || adj[a].contains(b)))
            {
                best = best.max(vs.len());
            }
        }
        assert_eq!(max_clique(&adj, 1 << 20).clique.len(), best);
    }
}
