//! Local invariants `deg`, `ω_loc`, `dim_loc`, their maximizer sets, and the
//! axial/spinal concentration radii of those sets.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::axial::AxialGeometry;
use crate::clique::local_clique_number;
use crate::error::{Error, Result};
use crate::graph::{Distances, PartitionGraph, VertexId};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum InvariantId {
    Deg,
    OmegaLoc,
    DimLoc,
}

impl InvariantId {
    /// Report order: degree, then local clique number, then local dimension.
    pub const ALL: [InvariantId; 3] =
        [InvariantId::Deg, InvariantId::OmegaLoc, InvariantId::DimLoc];

    pub fn name(self) -> &'static str {
        match self {
            InvariantId::Deg => "deg",
            InvariantId::OmegaLoc => "omega_loc",
            InvariantId::DimLoc => "dim_loc",
        }
    }
}

impl fmt::Display for InvariantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InvariantId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InvariantId::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown invariant {s:?}")))
    }
}

/// Per-vertex degree and local clique number for one graph.
#[derive(Clone, Debug)]
pub struct LocalValues {
    pub deg: Vec<u32>,
    pub omega_loc: Vec<u32>,
}

impl LocalValues {
    /// Clique searches run on the rayon pool; results are collected in vertex order.
    pub fn compute(g: &PartitionGraph) -> Self {
        let deg = g.vertex_ids().map(|v| g.degree(v) as u32).collect();
        let ids: Vec<VertexId> = g.vertex_ids().collect();
        let omega_loc = ids
            .par_iter()
            .map(|&v| local_clique_number(g, v) as u32)
            .collect();
        Self { deg, omega_loc }
    }

    /// `dim_loc` is always derived as `ω_loc − 1`.
    pub fn values(&self, id: InvariantId) -> Vec<u32> {
        match id {
            InvariantId::Deg => self.deg.clone(),
            InvariantId::OmegaLoc => self.omega_loc.clone(),
            InvariantId::DimLoc => self.omega_loc.iter().map(|&w| w - 1).collect(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantProfile {
    pub invariant: InvariantId,
    pub values: Vec<u32>,
    pub max_value: u32,
    /// Sorted maximizer set, never empty.
    pub argmax: Vec<VertexId>,
    /// `|Argmax ∩ Ax_n|`; `None` when `n` is axisless.
    pub argmax_axis_count: Option<usize>,
    pub rho_ax: Option<u32>,
    pub rho_sp: Option<u32>,
}

impl InvariantProfile {
    pub fn from_values(invariant: InvariantId, values: Vec<u32>, geom: &AxialGeometry) -> Self {
        let max_value = values
            .iter()
            .copied()
            .max()
            .expect("graph has at least one vertex");
        let argmax: Vec<VertexId> = values
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == max_value)
            .map(|(i, _)| VertexId(i as u32))
            .collect();
        let axial = geom.is_axial();
        let argmax_axis_count =
            axial.then(|| argmax.iter().filter(|&&v| geom.is_on_axis(v)).count());
        let (rho_ax, rho_sp) = if axial {
            (
                enclosing_radius(&argmax, geom.ax_dist()),
                enclosing_radius(&argmax, geom.sp_dist()),
            )
        } else {
            (None, None)
        };
        Self {
            invariant,
            values,
            max_value,
            argmax,
            argmax_axis_count,
            rho_ax,
            rho_sp,
        }
    }
}

/// `min{r : set ⊆ ball(r)}`, i.e. the largest distance over the set; `None` if
/// some member is unreachable.
fn enclosing_radius(set: &[VertexId], dist: &Distances) -> Option<u32> {
    set.iter()
        .map(|&v| dist.get(v))
        .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
}

/// Profile of a single invariant; recomputes the local values.
pub fn profile(
    g: &PartitionGraph,
    geom: &AxialGeometry,
    invariant: InvariantId,
) -> InvariantProfile {
    let values = match invariant {
        InvariantId::Deg => g.vertex_ids().map(|v| g.degree(v) as u32).collect(),
        _ => LocalValues::compute(g).values(invariant),
    };
    InvariantProfile::from_values(invariant, values, geom)
}

/// Profiles for all three invariants in report order, sharing one clique pass.
pub fn profiles(g: &PartitionGraph, geom: &AxialGeometry) -> Vec<InvariantProfile> {
    let local = LocalValues::compute(g);
    InvariantId::ALL
        .into_iter()
        .map(|id| InvariantProfile::from_values(id, local.values(id), geom))
        .collect()
}

/// Argmax is closed under conjugation, and an odd-sized Argmax meets the axis.
pub fn argmax_symmetry_check(profile: &InvariantProfile, g: &PartitionGraph) -> bool {
    let closed = profile
        .argmax
        .iter()
        .all(|&v| profile.argmax.binary_search(&g.conj(v)).is_ok());
    let odd_ok = profile.argmax.len().is_multiple_of(2) || profile.argmax.iter().any(|&v| g.conj(v) == v);
    closed && odd_ok
}
