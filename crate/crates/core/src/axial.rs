//! Self-conjugate axis, axial interaction pairs and mediators, the thin spine,
//! and the axial/spinal distance filtrations built on them.

use crate::error::{Error, Result};
use crate::graph::{Distances, PartitionGraph, VertexId};

/// An interacting pair of distinct axial vertices with their common neighbors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxialPair {
    pub alpha: VertexId,
    pub beta: VertexId,
    /// `N(alpha) ∩ N(beta)`, sorted, never empty.
    pub mediators: Vec<VertexId>,
}

/// Shell sizes `s(n, k)` indexed densely by `k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShellCounts {
    pub ax: Vec<usize>,
    pub sp: Vec<usize>,
}

/// Fixed points of conjugation, in vertex order.
pub fn compute_axis(g: &PartitionGraph) -> Vec<VertexId> {
    g.vertex_ids().filter(|&v| g.conj(v) == v).collect()
}

fn sorted_intersection(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Edges of the axial interaction graph, each with its mediator set, in
/// lexicographic `(alpha, beta)` order.
pub fn interaction_graph(g: &PartitionGraph, axis: &[VertexId]) -> Vec<AxialPair> {
    let mut pairs = Vec::new();
    for (i, &alpha) in axis.iter().enumerate() {
        for &beta in &axis[i + 1..] {
            let mediators = sorted_intersection(g.neighbors(alpha), g.neighbors(beta));
            debug_assert!(mediators.iter().all(|&m| g.conj(m) != m), "axial mediator");
            if !mediators.is_empty() {
                pairs.push(AxialPair {
                    alpha,
                    beta,
                    mediators,
                });
            }
        }
    }
    pairs
}

/// Axis together with every mediator, sorted and deduplicated.
pub fn compute_spine(axis: &[VertexId], pairs: &[AxialPair]) -> Vec<VertexId> {
    let mut spine: Vec<VertexId> = axis
        .iter()
        .copied()
        .chain(pairs.iter().flat_map(|p| p.mediators.iter().copied()))
        .collect();
    spine.sort_unstable();
    spine.dedup();
    spine
}

/// Everything derived from the axis of one `G_n`.
///
/// For an axisless `n` the axis and spine are empty, both distance arrays are
/// entirely unreachable, and every size/region query returns [`Error::Axisless`].
#[derive(Clone, Debug)]
pub struct AxialGeometry {
    n: u32,
    axis: Vec<VertexId>,
    interactions: Vec<AxialPair>,
    spine: Vec<VertexId>,
    ax_dist: Distances,
    sp_dist: Distances,
}

impl AxialGeometry {
    pub fn compute(g: &PartitionGraph) -> Self {
        let axis = compute_axis(g);
        let interactions = interaction_graph(g, &axis);
        let spine = compute_spine(&axis, &interactions);
        let ax_dist = g.bfs_distances(axis.iter().copied());
        let sp_dist = g.bfs_distances(spine.iter().copied());
        Self {
            n: g.n(),
            axis,
            interactions,
            spine,
            ax_dist,
            sp_dist,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_axial(&self) -> bool {
        !self.axis.is_empty()
    }

    fn require_axial(&self) -> Result<()> {
        if self.is_axial() {
            Ok(())
        } else {
            Err(Error::Axisless(self.n))
        }
    }

    pub fn axis(&self) -> &[VertexId] {
        &self.axis
    }

    pub fn interactions(&self) -> &[AxialPair] {
        &self.interactions
    }

    pub fn spine(&self) -> &[VertexId] {
        &self.spine
    }

    pub fn ax_dist(&self) -> &Distances {
        &self.ax_dist
    }

    pub fn sp_dist(&self) -> &Distances {
        &self.sp_dist
    }

    pub fn is_on_axis(&self, v: VertexId) -> bool {
        self.axis.binary_search(&v).is_ok()
    }

    pub fn is_on_spine(&self, v: VertexId) -> bool {
        self.spine.binary_search(&v).is_ok()
    }

    /// `a_n`; zero is a legitimate answer here, unlike the spinal counts.
    pub fn axis_size(&self) -> usize {
        self.axis.len()
    }

    /// `σ_n`.
    pub fn spine_size(&self) -> Result<usize> {
        self.require_axial()?;
        Ok(self.spine.len())
    }

    /// `C_n^(r)`: vertices within axial distance `r`.
    pub fn central_region(&self, r: u32) -> Result<Vec<VertexId>> {
        self.require_axial()?;
        Ok(self.ax_dist.within(r))
    }

    /// `Sp_n^(r)`: vertices within distance `r` of the thin spine.
    pub fn thick_spine(&self, r: u32) -> Result<Vec<VertexId>> {
        self.require_axial()?;
        Ok(self.sp_dist.within(r))
    }

    pub fn shell_counts(&self) -> Result<ShellCounts> {
        self.require_axial()?;
        Ok(ShellCounts {
            ax: self.ax_dist.shell_counts(),
            sp: self.sp_dist.shell_counts(),
        })
    }

    /// `c_n^(r)` from partial sums of the axial shells.
    pub fn central_region_size(&self, r: u32) -> Result<usize> {
        let shells = self.shell_counts()?;
        Ok(shells.ax.iter().take(r as usize + 1).sum())
    }

    /// `σ_n^(r)`.
    pub fn thick_spine_size(&self, r: u32) -> Result<usize> {
        let shells = self.shell_counts()?;
        Ok(shells.sp.iter().take(r as usize + 1).sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn geom(n: u32) -> (PartitionGraph, AxialGeometry) {
        let g = build_graph(n).unwrap();
        let a = AxialGeometry::compute(&g);
        (g, a)
    }

    #[test]
    fn axis_sizes() {
        assert!(geom(2).1.axis().is_empty());
        assert_eq!(geom(8).1.axis_size(), 2);
        assert_eq!(geom(30).1.axis_size(), 18);
    }

    #[test]
    fn interaction_examples() {
        let (g, a) = geom(5);
        assert!(interaction_graph(&g, a.axis()).is_empty());
        let (_, a9) = geom(9);
        assert_eq!(a9.spine_size().unwrap(), 2);
        let (_, a8) = geom(8);
        let mediators: usize = a8.spine().iter().filter(|&&v| !a8.is_on_axis(v)).count();
        assert_eq!(mediators, 4);
    }

    #[test]
    fn spine_sizes() {
        let (_, a12) = geom(12);
        assert_eq!((a12.axis_size(), a12.spine_size().unwrap()), (3, 11));
        let (_, a11) = geom(11);
        assert_eq!(a11.spine(), a11.axis());
        assert_eq!(geom(29).1.spine_size().unwrap(), 121);
    }

    #[test]
    fn central_regions() {
        let (g8, a8) = geom(8);
        assert_eq!(a8.central_region(1).unwrap().len(), 10);
        assert_eq!(a8.central_region(0).unwrap(), a8.axis());
        let far = a8.ax_dist().max_finite().unwrap();
        assert_eq!(a8.central_region(far).unwrap().len(), g8.vertex_count());
        assert_eq!(geom(30).1.central_region_size(1).unwrap(), 276);
    }

    #[test]
    fn thick_spine_sandwich_n8() {
        let (_, a) = geom(8);
        assert_eq!(a.thick_spine(0).unwrap(), a.spine());
        let c1 = a.central_region(1).unwrap();
        let sp1 = a.thick_spine(1).unwrap();
        let c2 = a.central_region(2).unwrap();
        assert!(c1.iter().all(|v| sp1.contains(v)));
        assert!(sp1.iter().all(|v| c2.contains(v)));
    }

    #[test]
    fn shells_n8() {
        let (_, a) = geom(8);
        let s = a.shell_counts().unwrap();
        assert_eq!(s.ax[0], 2);
        assert_eq!(s.ax[1], 8);
        assert_eq!(s.ax.iter().sum::<usize>(), 22);
        assert_eq!(s.sp.iter().sum::<usize>(), 22);
    }

    #[test]
    fn axisless_is_undefined() {
        let (g, a) = geom(2);
        assert!(!a.is_axial());
        assert!(matches!(a.central_region(1), Err(Error::Axisless(2))));
        assert!(matches!(a.thick_spine(0), Err(Error::Axisless(2))));
        assert!(matches!(a.shell_counts(), Err(Error::Axisless(2))));
        assert!(matches!(a.spine_size(), Err(Error::Axisless(2))));
        assert!(g.vertex_ids().all(|v| a.ax_dist().get(v).is_none()));
    }

    #[test]
    fn spine_membership_rederived_from_adjacency() {
        for n in 1..=20 {
            let (g, a) = geom(n);
            for v in g.vertex_ids() {
                if a.is_on_axis(v) {
                    continue;
                }
                let axial_nbrs = g
                    .vertex_ids()
                    .filter(|&u| g.conj(u) == u && g.is_adjacent(u, v))
                    .count();
                assert_eq!(
                    a.is_on_spine(v),
                    axial_nbrs >= 2,
                    "n={n} {}",
                    g.partition(v)
                );
            }
        }
    }
}
