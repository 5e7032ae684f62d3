//! DOT and GraphML export with per-vertex axial classes.

use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::invariants::InvariantId;
use crate::report::Analysis;

/// Position of a vertex relative to the axis, spine and narrow central region.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum VertexClass {
    Axis,
    SpineOffAxis,
    CentralOffSpine,
    Outer,
}

impl VertexClass {
    pub const ALL: [VertexClass; 4] = [
        VertexClass::Axis,
        VertexClass::SpineOffAxis,
        VertexClass::CentralOffSpine,
        VertexClass::Outer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VertexClass::Axis => "axis",
            VertexClass::SpineOffAxis => "spine_off_axis",
            VertexClass::CentralOffSpine => "central_off_spine",
            VertexClass::Outer => "outer",
        }
    }

    /// Every vertex of an axisless graph is `Outer`.
    pub fn of(analysis: &Analysis, v: VertexId) -> Self {
        let geom = &analysis.geometry;
        if geom.is_on_axis(v) {
            VertexClass::Axis
        } else if geom.is_on_spine(v) {
            VertexClass::SpineOffAxis
        } else if geom.ax_dist().get(v).is_some_and(|d| d <= 1) {
            VertexClass::CentralOffSpine
        } else {
            VertexClass::Outer
        }
    }
}

impl fmt::Display for VertexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sizes of the four classes, in [`VertexClass::ALL`] order.
pub fn class_counts(analysis: &Analysis) -> [usize; 4] {
    let mut counts = [0; 4];
    for v in analysis.graph.vertex_ids() {
        counts[VertexClass::of(analysis, v) as usize] += 1;
    }
    counts
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphFormat {
    Dot,
    GraphMl,
}

impl GraphFormat {
    pub fn extension(self) -> &'static str {
        match self {
            GraphFormat::Dot => "dot",
            GraphFormat::GraphMl => "graphml",
        }
    }
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(GraphFormat::Dot),
            "graphml" => Ok(GraphFormat::GraphMl),
            _ => Err(Error::UnsupportedFormat(s.to_string())),
        }
    }
}

struct VertexAttrs {
    label: String,
    class: VertexClass,
    deg: u32,
    omega_loc: u32,
    ax_dist: Option<u32>,
    sp_dist: Option<u32>,
}

fn vertex_attrs(analysis: &Analysis) -> Vec<VertexAttrs> {
    let omega = &analysis.profile(InvariantId::OmegaLoc).values;
    let geom = &analysis.geometry;
    analysis
        .graph
        .vertex_ids()
        .map(|v| VertexAttrs {
            label: analysis.graph.partition(v).to_string(),
            class: VertexClass::of(analysis, v),
            deg: analysis.graph.degree(v) as u32,
            omega_loc: omega[v.index()],
            ax_dist: geom.ax_dist().get(v),
            sp_dist: geom.sp_dist().get(v),
        })
        .collect()
}

/// Undefined distances are omitted rather than written as a number.
pub fn render_dot(analysis: &Analysis) -> String {
    let mut out = String::new();
    let n = analysis.n();
    writeln!(out, "graph G_{n} {{").unwrap();
    writeln!(
        out,
        "  graph [n={n}, axisless={}];",
        !analysis.geometry.is_axial()
    )
    .unwrap();
    for (i, a) in vertex_attrs(analysis).iter().enumerate() {
        write!(
            out,
            "  v{i} [label=\"{}\", class=\"{}\", deg={}, omega_loc={}",
            a.label, a.class, a.deg, a.omega_loc
        )
        .unwrap();
        if let Some(d) = a.ax_dist {
            write!(out, ", ax_dist={d}").unwrap();
        }
        if let Some(d) = a.sp_dist {
            write!(out, ", sp_dist={d}").unwrap();
        }
        out.push_str("];\n");
    }
    for (u, v) in analysis.graph.edges() {
        writeln!(out, "  v{} -- v{};", u.0, v.0).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn render_graphml(analysis: &Analysis) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str("<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n");
    out.push_str("  <key id=\"n\" for=\"graph\" attr.name=\"n\" attr.type=\"int\"/>\n");
    out.push_str(
        "  <key id=\"axisless\" for=\"graph\" attr.name=\"axisless\" attr.type=\"boolean\"/>\n",
    );
    for (id, ty) in [
        ("label", "string"),
        ("class", "string"),
        ("deg", "int"),
        ("omega_loc", "int"),
        ("ax_dist", "int"),
        ("sp_dist", "int"),
    ] {
        writeln!(
            out,
            "  <key id=\"{id}\" for=\"node\" attr.name=\"{id}\" attr.type=\"{ty}\"/>"
        )
        .unwrap();
    }
    let n = analysis.n();
    writeln!(out, "  <graph id=\"G_{n}\" edgedefault=\"undirected\">").unwrap();
    writeln!(out, "    <data key=\"n\">{n}</data>").unwrap();
    writeln!(
        out,
        "    <data key=\"axisless\">{}</data>",
        !analysis.geometry.is_axial()
    )
    .unwrap();
    for (i, a) in vertex_attrs(analysis).iter().enumerate() {
        writeln!(out, "    <node id=\"v{i}\">").unwrap();
        writeln!(out, "      <data key=\"label\">{}</data>", a.label).unwrap();
        writeln!(out, "      <data key=\"class\">{}</data>", a.class).unwrap();
        writeln!(out, "      <data key=\"deg\">{}</data>", a.deg).unwrap();
        writeln!(out, "      <data key=\"omega_loc\">{}</data>", a.omega_loc).unwrap();
        if let Some(d) = a.ax_dist {
            writeln!(out, "      <data key=\"ax_dist\">{d}</data>").unwrap();
        }
        if let Some(d) = a.sp_dist {
            writeln!(out, "      <data key=\"sp_dist\">{d}</data>").unwrap();
        }
        out.push_str("    </node>\n");
    }
    for (k, (u, v)) in analysis.graph.edges().enumerate() {
        writeln!(
            out,
            "    <edge id=\"e{k}\" source=\"v{}\" target=\"v{}\"/>",
            u.0, v.0
        )
        .unwrap();
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

pub fn render_graph(analysis: &Analysis, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dot => render_dot(analysis),
        GraphFormat::GraphMl => render_graphml(analysis),
    }
}

pub fn export_graph(analysis: &Analysis, format: GraphFormat, path: &Path) -> Result<()> {
    fs::write(path, render_graph(analysis, format))?;
    Ok(())
}
