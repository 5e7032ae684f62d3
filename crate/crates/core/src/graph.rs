//! The partition graph `G_n` as sorted adjacency lists plus the conjugation permutation.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::Result;
use crate::partition::{conjugate, enumerate_partitions, transfer_neighbors, Partition};

/// Position of a partition in the canonical enumeration order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

#[derive(Clone, Debug)]
pub struct PartitionGraph {
    n: u32,
    vertices: Vec<Partition>,
    adjacency: Vec<Vec<VertexId>>,
    conj: Vec<VertexId>,
    index: HashMap<Partition, VertexId>,
}

impl PartitionGraph {
    /// Builds `G_n` by applying every elementary transfer to every partition.
    pub fn build(n: u32) -> Result<Self> {
        let vertices = enumerate_partitions(n)?;
        let index: HashMap<Partition, VertexId> = vertices
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), VertexId(i as u32)))
            .collect();
        let lookup = |p: &Partition| index[p];
        let adjacency = vertices
            .iter()
            .map(|p| {
                let mut adj: Vec<VertexId> = transfer_neighbors(p).iter().map(lookup).collect();
                adj.sort_unstable();
                adj
            })
            .collect();
        let conj = vertices.iter().map(|p| lookup(&conjugate(p))).collect();
        Ok(Self {
            n,
            vertices,
            adjacency,
            conj,
            index,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `p(n)`.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertex_ids(&self) -> impl ExactSizeIterator<Item = VertexId> + Clone {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn vertices(&self) -> &[Partition] {
        &self.vertices
    }

    pub fn partition(&self, v: VertexId) -> &Partition {
        &self.vertices[v.index()]
    }

    pub fn vertex_of(&self, p: &Partition) -> Option<VertexId> {
        self.index.get(p).copied()
    }

    /// Sorted open neighborhood `N(v)`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v.index()]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v.index()].len()
    }

    pub fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u.index()].binary_search(&v).is_ok()
    }

    /// Image of `v` under conjugation.
    pub fn conj(&self, v: VertexId) -> VertexId {
        self.conj[v.index()]
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertex_ids().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }

    /// Multi-source BFS. An empty source set leaves every vertex unreachable.
    pub fn bfs_distances<I>(&self, sources: I) -> Distances
    where
        I: IntoIterator<Item = VertexId>,
    {
        let mut dist = vec![Distances::UNREACHABLE; self.vertex_count()];
        let mut queue = VecDeque::new();
        for s in sources {
            if dist[s.index()] != 0 {
                dist[s.index()] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let next = dist[u.index()] + 1;
            for &w in self.neighbors(u) {
                if dist[w.index()] == Distances::UNREACHABLE {
                    dist[w.index()] = next;
                    queue.push_back(w);
                }
            }
        }
        Distances(dist)
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances([VertexId(0)]).all_reachable()
    }
}

/// Free-function form of [`PartitionGraph::build`].
pub fn build_graph(n: u32) -> Result<PartitionGraph> {
    PartitionGraph::build(n)
}

/// Per-vertex BFS distances with an explicit unreachable sentinel.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Distances(Vec<u32>);

impl Distances {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn get(&self, v: VertexId) -> Option<u32> {
        match self.0[v.index()] {
            Self::UNREACHABLE => None,
            d => Some(d),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn raw(&self) -> &[u32] {
        &self.0
    }

    pub fn all_reachable(&self) -> bool {
        !self.0.contains(&Self::UNREACHABLE)
    }

    /// Largest finite distance, if any vertex is reachable.
    pub fn max_finite(&self) -> Option<u32> {
        self.0
            .iter()
            .copied()
            .filter(|&d| d != Self::UNREACHABLE)
            .max()
    }

    /// Counts of vertices at each exact distance `0..=max_finite`.
    pub fn shell_counts(&self) -> Vec<usize> {
        let Some(max) = self.max_finite() else {
            return Vec::new();
        };
        let mut counts = vec![0; max as usize + 1];
        for &d in self.0.iter().filter(|&&d| d != Self::UNREACHABLE) {
            counts[d as usize] += 1;
        }
        counts
    }

    /// Vertices with distance at most `r`.
    pub fn within(&self, r: u32) -> Vec<VertexId> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &d)| d <= r)
            .map(|(i, _)| VertexId(i as u32))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(g: &PartitionGraph, s: &str) -> VertexId {
        g.vertex_of(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn small_graphs() {
        let g1 = build_graph(1).unwrap();
        assert_eq!((g1.vertex_count(), g1.edge_count()), (1, 0));
        assert_eq!(g1.conj(VertexId(0)), VertexId(0));
        assert_eq!(g1.degree(VertexId(0)), 0);

        let g2 = build_graph(2).unwrap();
        assert_eq!((g2.vertex_count(), g2.edge_count()), (2, 1));
        assert_eq!(g2.conj(VertexId(0)), VertexId(1));
        assert_eq!(g2.conj(VertexId(1)), VertexId(0));
    }

    #[test]
    fn max_degrees() {
        let max_deg = |n| {
            let g = build_graph(n).unwrap();
            let m = g.vertex_ids().map(|v| g.degree(v)).max().unwrap();
            let count = g.vertex_ids().filter(|&v| g.degree(v) == m).count();
            (m, count)
        };
        assert_eq!(max_deg(10).0, 12);
        assert_eq!(max_deg(6), (6, 1));
        assert_eq!(max_deg(30), (44, 1));
    }

    #[test]
    fn rejects_zero() {
        assert!(build_graph(0).is_err());
    }

    #[test]
    fn bfs_examples() {
        let g = build_graph(3).unwrap();
        let d = g.bfs_distances([v(&g, "2,1")]);
        assert_eq!(d.get(v(&g, "2,1")), Some(0));
        assert_eq!(d.get(v(&g, "3")), Some(1));
        assert_eq!(d.get(v(&g, "1,1,1")), Some(1));

        let g = build_graph(7).unwrap();
        let all = g.bfs_distances(g.vertex_ids());
        assert!(all.raw().iter().all(|&x| x == 0));

        let none = g.bfs_distances([]);
        assert!(g.vertex_ids().all(|x| none.get(x).is_none()));
        assert!(none.shell_counts().is_empty());
        assert_eq!(none.max_finite(), None);
    }

    #[test]
    fn structural_scan() {
        for n in 1..=20 {
            let g = build_graph(n).unwrap();
            let mut deg_sum = 0;
            for u in g.vertex_ids() {
                assert_eq!(g.conj(g.conj(u)), u);
                assert!(!g.is_adjacent(u, u));
                deg_sum += g.degree(u);
                for &w in g.neighbors(u) {
                    assert!(g.is_adjacent(w, u));
                    assert!(g.is_adjacent(g.conj(u), g.conj(w)));
                }
            }
            assert_eq!(deg_sum, 2 * g.edge_count());
            assert!(g.is_connected());
        }
    }

    #[test]
    fn bfs_edge_property_and_conj_invariance() {
        let g = build_graph(12).unwrap();
        let src = [v(&g, "6,4,2"), v(&g, "3,3,2,1,1,1,1")];
        let sym: Vec<_> = src.iter().flat_map(|&s| [s, g.conj(s)]).collect();
        let d = g.bfs_distances(sym);
        for (a, b) in g.edges() {
            let (x, y) = (d.get(a).unwrap() as i64, d.get(b).unwrap() as i64);
            assert!((x - y).abs() <= 1);
        }
        for u in g.vertex_ids() {
            assert_eq!(d.get(u), d.get(g.conj(u)));
        }
    }
}
