//! Exhaustive structural checks over a range of `n`.
//!
//! Each check re-derives its property from raw adjacency or from partition
//! arithmetic rather than trusting the geometry it is checking.

use std::fmt;

use rayon::prelude::*;

use crate::clique::{local_clique_number_oracle, ORACLE_MAX_DEGREE};
use crate::error::Result;
use crate::invariants::{argmax_symmetry_check, InvariantId};
use crate::partition::{corners, is_self_conjugate, CornerKind};
use crate::report::{analyze_range, Analysis, GOLDEN_MAX_N};

/// Largest `n` on which the subset oracle is cross-checked by default.
pub const ORACLE_MAX_N: u32 = 14;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Pass,
    /// Counterexample description.
    Fail(String),
    Skipped(String),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckOutcome {
    pub n: u32,
    pub property: &'static str,
    pub status: CheckStatus,
}

impl CheckOutcome {
    pub fn failed(&self) -> bool {
        matches!(self.status, CheckStatus::Fail(_))
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            CheckStatus::Pass => write!(f, "n={} {} PASS", self.n, self.property),
            CheckStatus::Fail(why) => write!(f, "n={} {} FAIL: {why}", self.n, self.property),
            CheckStatus::Skipped(why) => {
                write!(f, "n={} {} skipped ({why})", self.n, self.property)
            }
        }
    }
}

type Check = Result<(), String>;

fn first_failure<I: IntoIterator<Item = Check>>(checks: I) -> Check {
    checks.into_iter().find(Result::is_err).unwrap_or(Ok(()))
}

/// `p(n)` by the standard coin-change recurrence.
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

fn graph_checks(a: &Analysis) -> Vec<(&'static str, Check)> {
    let g = &a.graph;
    let label = |v| g.partition(v).to_string();
    let mut out = Vec::new();

    let p = partition_count(g.n());
    out.push((
        "partition_count",
        if g.vertex_count() as u64 == p {
            Ok(())
        } else {
            Err(format!("{} vertices, p(n) = {p}", g.vertex_count()))
        },
    ));
    out.push((
        "conjugation_involution",
        first_failure(g.vertex_ids().map(|v| {
            if g.conj(g.conj(v)) == v {
                Ok(())
            } else {
                Err(format!("conj(conj({})) != itself", label(v)))
            }
        })),
    ));
    out.push((
        "conjugation_automorphism",
        first_failure(g.edges().map(|(u, v)| {
            if g.is_adjacent(g.conj(u), g.conj(v)) {
                Ok(())
            } else {
                Err(format!("edge {} -- {} not preserved", label(u), label(v)))
            }
        })),
    ));
    out.push((
        "edge_symmetry_irreflexive",
        first_failure(g.vertex_ids().flat_map(|u| {
            g.neighbors(u).iter().map(move |&w| {
                if w == u {
                    Err(format!("self-loop at {}", label(u)))
                } else if !g.is_adjacent(w, u) {
                    Err(format!("{} -> {} not symmetric", label(u), label(w)))
                } else {
                    Ok(())
                }
            })
        })),
    ));
    let deg_sum: usize = g.vertex_ids().map(|v| g.degree(v)).sum();
    out.push((
        "degree_sum",
        if deg_sum == 2 * g.edge_count() {
            Ok(())
        } else {
            Err(format!("sum {deg_sum}, edges {}", g.edge_count()))
        },
    ));
    out.push((
        "corner_exclusivity",
        first_failure(g.vertices().iter().map(|lambda| {
            let cs = corners(lambda);
            let rem = cs
                .iter()
                .any(|c| c.diagonal && c.kind == CornerKind::Removable);
            let add = cs
                .iter()
                .any(|c| c.diagonal && c.kind == CornerKind::Addable);
            if rem && add {
                Err(format!("{lambda} has both diagonal corner kinds"))
            } else {
                Ok(())
            }
        })),
    ));
    let d0 = g.bfs_distances(g.vertex_ids().take(1));
    out.push((
        "bfs_edge_lipschitz",
        first_failure(g.edges().map(|(u, v)| match (d0.get(u), d0.get(v)) {
            (Some(x), Some(y)) if x.abs_diff(y) > 1 => {
                Err(format!("{} / {}: {x} vs {y}", label(u), label(v)))
            }
            (Some(_), None) | (None, Some(_)) => Err(format!(
                "edge {} -- {} crosses components",
                label(u),
                label(v)
            )),
            _ => Ok(()),
        })),
    ));
    out.push((
        "connected",
        match g.vertex_ids().find(|&v| d0.get(v).is_none()) {
            None => Ok(()),
            Some(v) => Err(format!(
                "{} unreachable from {}",
                label(v),
                label(g.vertex_ids().next().unwrap())
            )),
        },
    ));
    out
}

fn axial_checks(a: &Analysis) -> Vec<(&'static str, Check)> {
    let g = &a.graph;
    let geom = &a.geometry;
    let label = |v| g.partition(v).to_string();
    let ax = geom.ax_dist();
    let sp = geom.sp_dist();
    let mut out = Vec::new();

    out.push((
        "axis_fixed_points",
        first_failure(g.vertex_ids().map(|v| {
            if geom.is_on_axis(v) == is_self_conjugate(g.partition(v))
                && geom.is_on_axis(v) == (g.conj(v) == v)
            {
                Ok(())
            } else {
                Err(format!(
                    "axis membership of {} disagrees with conjugation",
                    label(v)
                ))
            }
        })),
    ));
    out.push((
        "axis_edgeless",
        first_failure(geom.axis().iter().flat_map(|&x| {
            geom.axis().iter().filter(move |&&y| x < y).map(move |&y| {
                if g.is_adjacent(x, y) {
                    Err(format!("{} -- {}", label(x), label(y)))
                } else {
                    Ok(())
                }
            })
        })),
    ));
    out.push((
        "mediators_off_axis",
        first_failure(geom.interactions().iter().flat_map(|pair| {
            pair.mediators.iter().map(|&m| {
                if ax.get(m) == Some(1) {
                    Ok(())
                } else {
                    Err(format!("mediator {} has ax_dist {:?}", label(m), ax.get(m)))
                }
            })
        })),
    ));
    out.push((
        "spine_sandwich",
        first_failure(
            geom.axis()
                .iter()
                .map(|&v| {
                    if geom.is_on_spine(v) {
                        Ok(())
                    } else {
                        Err(format!("axial {} not on spine", label(v)))
                    }
                })
                .chain(geom.spine().iter().map(|&v| {
                    if ax.get(v).is_some_and(|d| d <= 1) {
                        Ok(())
                    } else {
                        Err(format!("spine {} outside C^(1)", label(v)))
                    }
                })),
        ),
    ));
    out.push((
        "spine_conj_invariant",
        first_failure(geom.spine().iter().map(|&v| {
            if geom.is_on_spine(g.conj(v)) {
                Ok(())
            } else {
                Err(format!("conj of {} leaves spine", label(v)))
            }
        })),
    ));
    out.push((
        "distance_conj_invariant",
        first_failure(g.vertex_ids().map(|v| {
            let w = g.conj(v);
            if ax.get(v) == ax.get(w) && sp.get(v) == sp.get(w) {
                Ok(())
            } else {
                Err(format!(
                    "distances of {} and its conjugate differ",
                    label(v)
                ))
            }
        })),
    ));
    let r_max = ax.max_finite().unwrap_or(0).max(5);
    out.push((
        "filtration_sandwich",
        first_failure((0..=r_max).flat_map(|r| {
            g.vertex_ids().map(move |v| {
                let in_c = |r: u32| ax.get(v).is_some_and(|d| d <= r);
                let in_sp = sp.get(v).is_some_and(|d| d <= r);
                if in_c(r) && !in_sp {
                    Err(format!("{} in C^({r}) but not Sp^({r})", label(v)))
                } else if in_sp && !in_c(r + 1) {
                    Err(format!("{} in Sp^({r}) but not C^({})", label(v), r + 1))
                } else {
                    Ok(())
                }
            })
        })),
    ));
    out.push((
        "spine_membership",
        first_failure(g.vertex_ids().filter(|&v| g.conj(v) != v).map(|v| {
            let axial_nbrs = g.neighbors(v).iter().filter(|&&u| g.conj(u) == u).count();
            if geom.is_on_spine(v) == (axial_nbrs >= 2) {
                Ok(())
            } else {
                Err(format!(
                    "{} has {axial_nbrs} axial neighbours, spine = {}",
                    label(v),
                    geom.is_on_spine(v)
                ))
            }
        })),
    ));
    let shells = geom.shell_counts().expect("axial");
    let p = g.vertex_count();
    let (sa, ss) = (
        shells.ax.iter().sum::<usize>(),
        shells.sp.iter().sum::<usize>(),
    );
    out.push((
        "shells_sum",
        if sa == p && ss == p && shells.ax[0] == geom.axis_size() {
            Ok(())
        } else {
            Err(format!(
                "ax shells sum {sa}, sp shells sum {ss}, p(n) = {p}"
            ))
        },
    ));
    out
}

fn invariant_checks(a: &Analysis, oracle_max_n: u32) -> Vec<(&'static str, CheckStatus)> {
    let g = &a.graph;
    let axial = a.geometry.is_axial();
    let as_status = |c: Check| match c {
        Ok(()) => CheckStatus::Pass,
        Err(e) => CheckStatus::Fail(e),
    };
    let mut out = Vec::new();

    out.push((
        "radius_sandwich",
        if axial {
            as_status(first_failure(a.profiles.iter().map(|p| {
                match (p.rho_ax, p.rho_sp) {
                    (Some(ax), Some(sp)) if sp <= ax && ax <= sp + 1 => Ok(()),
                    other => Err(format!("{}: (rho_ax, rho_sp) = {other:?}", p.invariant)),
                }
            })))
        } else {
            CheckStatus::Skipped("axisless".into())
        },
    ));
    out.push((
        "argmax_symmetry",
        if axial {
            as_status(first_failure(a.profiles.iter().map(|p| {
                if argmax_symmetry_check(p, g) {
                    Ok(())
                } else {
                    Err(format!("{} argmax not symmetric", p.invariant))
                }
            })))
        } else {
            // Closure under conjugation still holds without an axis.
            as_status(first_failure(a.profiles.iter().map(|p| {
                let closed = p.argmax.iter().all(|&v| p.argmax.contains(&g.conj(v)));
                if closed {
                    Ok(())
                } else {
                    Err(format!("{} argmax not conj-closed", p.invariant))
                }
            })))
        },
    ));
    let omega = a.profile(InvariantId::OmegaLoc);
    let dim = a.profile(InvariantId::DimLoc);
    out.push((
        "dim_loc_shift",
        as_status(
            if dim.argmax == omega.argmax
                && dim.rho_ax == omega.rho_ax
                && dim.rho_sp == omega.rho_sp
                && dim
                    .values
                    .iter()
                    .zip(&omega.values)
                    .all(|(d, w)| d + 1 == *w)
            {
                Ok(())
            } else {
                Err("dim_loc is not omega_loc - 1 with the same argmax".into())
            },
        ),
    ));
    out.push((
        "omega_degree_bounds",
        as_status(first_failure(g.vertex_ids().map(|v| {
            let (w, d) = (omega.values[v.index()] as usize, g.degree(v));
            if w <= d + 1 && (d == 0 || w >= 2) && w >= 1 {
                Ok(())
            } else {
                Err(format!("{}: omega_loc {w}, deg {d}", g.partition(v)))
            }
        }))),
    ));
    out.push((
        "oracle_equivalence",
        if a.n() > oracle_max_n {
            CheckStatus::Skipped(format!("n > {oracle_max_n}"))
        } else {
            as_status(first_failure(g.vertex_ids().map(|v| {
                if g.degree(v) > ORACLE_MAX_DEGREE {
                    return Err(format!("{} degree above oracle bound", g.partition(v)));
                }
                let brute = local_clique_number_oracle(g, v).map_err(|e| e.to_string())?;
                let fast = omega.values[v.index()] as usize;
                if brute == fast {
                    Ok(())
                } else {
                    Err(format!("{}: search {fast}, oracle {brute}", g.partition(v)))
                }
            })))
        },
    ));
    out.push((
        "radius_bounds",
        if !axial {
            CheckStatus::Skipped("axisless".into())
        } else if a.n() > GOLDEN_MAX_N {
            CheckStatus::Skipped(format!("bounds established only for n <= {GOLDEN_MAX_N}"))
        } else {
            as_status(first_failure(a.profiles.iter().map(|p| {
                let bound = if p.invariant == InvariantId::Deg {
                    2
                } else {
                    4
                };
                match (p.rho_ax, p.rho_sp) {
                    (Some(x), Some(y)) if x <= bound && y <= bound => Ok(()),
                    other => Err(format!("{}: radii {other:?} exceed {bound}", p.invariant)),
                }
            })))
        },
    ));
    out
}

/// All checks for one analysed `n`, in a fixed order.
pub fn verify_analysis(a: &Analysis, oracle_max_n: u32) -> Vec<CheckOutcome> {
    let n = a.n();
    let to_status = |c: Check| match c {
        Ok(()) => CheckStatus::Pass,
        Err(e) => CheckStatus::Fail(e),
    };
    let mut out: Vec<CheckOutcome> = graph_checks(a)
        .into_iter()
        .map(|(property, c)| CheckOutcome {
            n,
            property,
            status: to_status(c),
        })
        .collect();
    if a.geometry.is_axial() {
        out.extend(
            axial_checks(a)
                .into_iter()
                .map(|(property, c)| CheckOutcome {
                    n,
                    property,
                    status: to_status(c),
                }),
        );
    } else {
        out.push(CheckOutcome {
            n,
            property: "axial_suite",
            status: CheckStatus::Skipped("axisless".into()),
        });
    }
    out.extend(
        invariant_checks(a, oracle_max_n)
            .into_iter()
            .map(|(property, status)| CheckOutcome {
                n,
                property,
                status,
            }),
    );
    out
}

/// Runs every check for `n_min..=n_max`; results are ordered by `n`.
pub fn verify_range(n_min: u32, n_max: u32) -> Result<Vec<CheckOutcome>> {
    let analyses = analyze_range(n_min, n_max)?;
    let per_n: Vec<Vec<CheckOutcome>> = analyses
        .par_iter()
        .map(|(a, _)| verify_analysis(a, ORACLE_MAX_N))
        .collect();
    Ok(per_n.into_iter().flatten().collect())
}
