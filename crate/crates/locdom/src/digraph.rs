//! Loopless finite digraphs over dense integer vertex ids.
//!
//! The representation is immutable after construction: sorted in- and
//! out-adjacency lists per vertex, which gives `O(log d)` arc queries and
//! cheap whole-neighbourhood set operations. Multi-arcs are deduplicated on
//! construction; arc multiplicities never affect domination or location.

use crate::error::{Error, Result};
use crate::vset;

/// Neighbourhood direction selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    In,
    Out,
}

/// A loopless finite digraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

/// BFS layering from a source vertex: `layers[i]` holds the vertices whose
/// shortest directed path from the source has length `i`. Vertices that are
/// not reachable are reported separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layering {
    pub source: usize,
    pub layers: Vec<Vec<usize>>,
    pub unreachable: Vec<usize>,
}

impl Layering {
    /// Index of the last nonempty layer.
    pub fn last_index(&self) -> usize {
        self.layers.len() - 1
    }

    /// Layer index of `v`, if reachable.
    pub fn layer_of(&self, v: usize) -> Option<usize> {
        self.layers.iter().position(|l| vset::contains(l, v))
    }
}

/// Strong components in topological order of the condensation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    /// Each component sorted ascending; components listed in a topological
    /// order of the condensation (sources first).
    pub components: Vec<Vec<usize>>,
    /// Condensation digraph; vertex `i` is `components[i]`.
    pub condensation: Digraph,
}

impl SccDecomposition {
    /// Component index of each vertex.
    pub fn component_of(&self, v: usize) -> usize {
        self.components
            .iter()
            .position(|c| vset::contains(c, v))
            .expect("vertex in some component")
    }
}

impl Digraph {
    /// Builds a digraph from an arc list, deduplicating repeated arcs.
    /// Loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(u, v) in arcs {
            if u == v {
                return Err(Error::Input(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Input(format!(
                    "arc ({u},{v}) out of range for order {n}"
                )));
            }
            out[u].push(v);
            inn[v].push(u);
        }
        for v in 0..n {
            out[v].sort_unstable();
            out[v].dedup();
            inn[v].sort_unstable();
            inn[v].dedup();
        }
        Ok(Digraph { n, out, inn })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|l| l.len()).sum()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && vset::contains(&self.out[u], v)
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::with_capacity(self.arc_count());
        for u in 0..self.n {
            for &v in &self.out[u] {
                arcs.push((u, v));
            }
        }
        arcs
    }

    pub fn vertices(&self) -> Vec<usize> {
        (0..self.n).collect()
    }

    pub fn out_neighbours(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbours(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    /// Open or closed neighbourhood of `v` in the requested direction.
    pub fn neighbourhood(&self, v: usize, dir: Direction, closed: bool) -> Result<Vec<usize>> {
        if v >= self.n {
            return Err(Error::Input(format!(
                "vertex {v} out of range for order {}",
                self.n
            )));
        }
        let mut set = match dir {
            Direction::In => self.inn[v].clone(),
            Direction::Out => self.out[v].clone(),
        };
        if closed {
            vset::insert(&mut set, v);
        }
        Ok(set)
    }

    /// Subgraph induced by `w`, densely renumbered. The returned map sends
    /// each new id to the original id (`map[new] = old`).
    pub fn induced(&self, w: &[usize]) -> Result<(Digraph, Vec<usize>)> {
        let map = vset::normalize(w.to_vec());
        if let Some(&v) = map.iter().find(|&&v| v >= self.n) {
            return Err(Error::Input(format!(
                "vertex {v} out of range for order {}",
                self.n
            )));
        }
        let mut arcs = Vec::new();
        for (iu, &u) in map.iter().enumerate() {
            for &v in &self.out[u] {
                if let Ok(iv) = map.binary_search(&v) {
                    arcs.push((iu, iv));
                }
            }
        }
        Ok((Digraph::new(map.len(), &arcs)?, map))
    }

    /// Digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            n: self.n,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// `(connected, strong)`: undirected reachability covers all vertices /
    /// directed reachability is mutual for all pairs.
    pub fn connectivity(&self) -> (bool, bool) {
        (self.is_connected(), self.is_strong())
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in self.out[u].iter().chain(self.inn[u].iter()) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn is_strong(&self) -> bool {
        self.n <= 1 || self.strong_components().components.len() == 1
    }

    /// Tarjan's algorithm; components are returned in a topological order of
    /// the condensation (sources first), each sorted ascending.
    pub fn strong_components(&self) -> SccDecomposition {
        let n = self.n;
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack: Vec<usize> = Vec::new();
        let mut next_index = 0usize;
        let mut comps: Vec<Vec<usize>> = Vec::new();

        // Iterative Tarjan: (vertex, next out-neighbour position).
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            let mut call: Vec<(usize, usize)> = vec![(root, 0)];
            while let Some(&mut (u, ref mut pos)) = call.last_mut() {
                if *pos == 0 {
                    index[u] = next_index;
                    low[u] = next_index;
                    next_index += 1;
                    stack.push(u);
                    on_stack[u] = true;
                }
                if *pos < self.out[u].len() {
                    let v = self.out[u][*pos];
                    *pos += 1;
                    if index[v] == usize::MAX {
                        call.push((v, 0));
                    } else if on_stack[v] {
                        low[u] = low[u].min(index[v]);
                    }
                } else {
                    if low[u] == index[u] {
                        let mut comp = Vec::new();
                        loop {
                            let w = stack.pop().expect("tarjan stack");
                            on_stack[w] = false;
                            comp.push(w);
                            if w == u {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        comps.push(comp);
                    }
                    call.pop();
                    if let Some(&mut (p, _)) = call.last_mut() {
                        low[p] = low[p].min(low[u]);
                    }
                }
            }
        }

        // Tarjan emits components in reverse topological order.
        comps.reverse();
        let mut comp_of = vec![0usize; n];
        for (ci, comp) in comps.iter().enumerate() {
            for &v in comp {
                comp_of[v] = ci;
            }
        }
        let mut cond_arcs = Vec::new();
        for u in 0..n {
            for &v in &self.out[u] {
                if comp_of[u] != comp_of[v] {
                    cond_arcs.push((comp_of[u], comp_of[v]));
                }
            }
        }
        let condensation =
            Digraph::new(comps.len(), &cond_arcs).expect("condensation is loopless by construction");
        SccDecomposition {
            components: comps,
            condensation,
        }
    }

    /// BFS layering from `s` by shortest directed distance.
    pub fn bfs_layers(&self, s: usize) -> Result<Layering> {
        if s >= self.n {
            return Err(Error::Input(format!(
                "vertex {s} out of range for order {}",
                self.n
            )));
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(s);
        let mut maxd = 0;
        while let Some(u) = queue.pop_front() {
            for &v in &self.out[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    maxd = maxd.max(dist[v]);
                    queue.push_back(v);
                }
            }
        }
        let mut layers = vec![Vec::new(); maxd + 1];
        let mut unreachable = Vec::new();
        for v in 0..self.n {
            if dist[v] == usize::MAX {
                unreachable.push(v);
            } else {
                layers[dist[v]].push(v);
            }
        }
        Ok(Layering {
            source: s,
            layers,
            unreachable,
        })
    }

    /// True when the induced subgraph on `set` is a tournament: exactly one
    /// arc between every pair of distinct vertices of the set.
    pub fn is_tournament_on(&self, set: &[usize]) -> bool {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                let uv = self.has_arc(u, v);
                let vu = self.has_arc(v, u);
                if uv == vu {
                    return false;
                }
            }
        }
        true
    }

    /// True when the induced subgraph on `set` is semicomplete: at least one
    /// arc between every pair of distinct vertices of the set.
    pub fn is_semicomplete_on(&self, set: &[usize]) -> bool {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if !self.has_arc(u, v) && !self.has_arc(v, u) {
                    return false;
                }
            }
        }
        true
    }

    /// True when `set` induces a strongly connected tournament.
    pub fn is_strong_tournament_on(&self, set: &[usize]) -> bool {
        if !self.is_tournament_on(set) {
            return false;
        }
        match self.induced(set) {
            Ok((sub, _)) => sub.is_strong(),
            Err(_) => false,
        }
    }
}
