//! Local clique numbers: a pivoting Bron–Kerbosch search on the induced
//! neighborhood, plus a brute-force subset oracle used for cross-checking.

use crate::error::{Error, Result};
use crate::graph::{PartitionGraph, VertexId};

/// Largest degree the subset-enumeration oracle accepts.
pub const ORACLE_MAX_DEGREE: usize = 25;

/// Fixed-width bitset over the local vertices of a neighborhood graph.
#[derive(Clone, PartialEq, Eq, Debug)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn empty(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &Self) -> Self {
        Self {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn and_not(&self, other: &Self) -> Self {
        Self {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    fn or(&self, other: &Self) -> Self {
        Self {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    fn intersection_len(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

/// Size of a maximum clique in the graph given by bitset rows.
///
/// Bron–Kerbosch with Tomita pivoting (pivot maximizes `|P ∩ N(u)|` over
/// `P ∪ X`), pruned when `|R| + |P|` cannot beat the best clique found.
fn max_clique_size(rows: &[BitSet]) -> usize {
    fn expand(rows: &[BitSet], r_len: usize, mut p: BitSet, mut x: BitSet, best: &mut usize) {
        if p.is_empty() {
            if x.is_empty() {
                *best = (*best).max(r_len);
            }
            return;
        }
        if r_len + p.len() <= *best {
            return;
        }
        let pivot = p
            .or(&x)
            .iter()
            .max_by_key(|&u| p.intersection_len(&rows[u]))
            .expect("P is nonempty");
        let candidates: Vec<usize> = p.and_not(&rows[pivot]).iter().collect();
        for v in candidates {
            expand(rows, r_len + 1, p.and(&rows[v]), x.and(&rows[v]), best);
            p.remove(v);
            x.insert(v);
        }
    }

    let mut best = 0;
    expand(
        rows,
        0,
        BitSet::full(rows.len()),
        BitSet::empty(rows.len()),
        &mut best,
    );
    best
}

/// `ω_loc(v) = 1 + ω(G_n[N(v)])`, the size of the largest clique containing `v`.
pub fn local_clique_number(g: &PartitionGraph, v: VertexId) -> usize {
    let nbrs = g.neighbors(v);
    let rows: Vec<BitSet> = nbrs
        .iter()
        .map(|&a| {
            let mut row = BitSet::empty(nbrs.len());
            // Both lists are sorted, so a merge walk finds N(a) ∩ N(v).
            let other = g.neighbors(a);
            let (mut i, mut j) = (0, 0);
            while i < nbrs.len() && j < other.len() {
                match nbrs[i].cmp(&other[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        row.insert(i);
                        i += 1;
                        j += 1;
                    }
                }
            }
            row
        })
        .collect();
    1 + max_clique_size(&rows)
}

/// Independent check of [`local_clique_number`]: scans subsets of `N(v)` by
/// increasing size and stops at the first size with no clique.
pub fn local_clique_number_oracle(g: &PartitionGraph, v: VertexId) -> Result<usize> {
    let nbrs = g.neighbors(v);
    let d = nbrs.len();
    if d > ORACLE_MAX_DEGREE {
        return Err(Error::OracleInfeasible {
            degree: d,
            bound: ORACLE_MAX_DEGREE,
        });
    }
    let is_clique = |mask: u32| {
        let members: Vec<VertexId> = (0..d)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| nbrs[i])
            .collect();
        members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| g.is_adjacent(a, b)))
    };
    let mut best = 0;
    for size in 1..=d {
        let found = masks_of_size(d, size).any(is_clique);
        if !found {
            break;
        }
        best = size;
    }
    Ok(best + 1)
}

/// All `width`-bit masks with exactly `size` bits set, in increasing order (Gosper's hack).
fn masks_of_size(width: usize, size: usize) -> impl Iterator<Item = u32> {
    let limit = 1u64 << width;
    let mut next = Some((1u64 << size) - 1).filter(|&m| m < limit);
    std::iter::from_fn(move || {
        let m = next?;
        next = (m != 0)
            .then(|| {
                let low = m & m.wrapping_neg();
                let ripple = m + low;
                (((ripple ^ m) >> 2) / low) | ripple
            })
            .filter(|&s| s < limit);
        Some(m as u32)
    })
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn rows_from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<BitSet> {
        let mut rows = vec![BitSet::empty(n); n];
        for &(a, b) in edges {
            rows[a].insert(b);
            rows[b].insert(a);
        }
        rows
    }

    fn brute_force_clique(n: usize, adj: &[Vec<bool>]) -> usize {
        (0u32..1 << n)
            .filter(|&m| {
                (0..n).all(|i| {
                    (0..n).all(|j| i == j || m >> i & 1 == 0 || m >> j & 1 == 0 || adj[i][j])
                })
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    proptest::proptest! {
        #[test]
        fn max_clique_matches_brute_force(n in 0usize..=12, bits in proptest::collection::vec(proptest::bool::weighted(0.6), 66)) {
            let mut adj = vec![vec![false; n]; n];
            let mut edges = Vec::new();
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        adj[a][b] = true;
                        adj[b][a] = true;
                        edges.push((a, b));
                    }
                    k += 1;
                }
            }
            proptest::prop_assert_eq!(max_clique_size(&rows_from_edges(n, &edges)), brute_force_clique(n, &adj));
        }
    }

    #[test]
    fn max_clique_small_shapes() {
        assert_eq!(max_clique_size(&[]), 0);
        assert_eq!(max_clique_size(&rows_from_edges(1, &[])), 1);
        assert_eq!(max_clique_size(&rows_from_edges(2, &[(0, 1)])), 2);
        assert_eq!(max_clique_size(&rows_from_edges(3, &[(0, 1), (1, 2)])), 2);
        assert_eq!(
            max_clique_size(&rows_from_edges(3, &[(0, 1), (1, 2), (0, 2)])),
            3
        );
        // K4 plus a pendant path.
        let k4 = [
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 3),
            (3, 4),
            (4, 5),
        ];
        assert_eq!(max_clique_size(&rows_from_edges(6, &k4)), 4);
    }

    #[test]
    fn bitset_spans_words() {
        let n = 130;
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a % 40 == b % 40)
            .collect();
        // Four residue classes have 4 members (0..10 mod 40 reach 120..129), the rest 3.
        assert_eq!(max_clique_size(&rows_from_edges(n, &edges)), 4);
    }

    #[test]
    fn graph_examples() {
        let g1 = build_graph(1).unwrap();
        assert_eq!(local_clique_number(&g1, VertexId(0)), 1);
        assert_eq!(local_clique_number_oracle(&g1, VertexId(0)).unwrap(), 1);
        let g2 = build_graph(2).unwrap();
        assert_eq!(local_clique_number(&g2, VertexId(0)), 2);
        let g3 = build_graph(3).unwrap();
        // (2,1) has two non-adjacent neighbors: a path, so ω_loc = 2.
        let mid = g3.vertex_of(&"2,1".parse().unwrap()).unwrap();
        assert_eq!(local_clique_number_oracle(&g3, mid).unwrap(), 2);
        assert_eq!(local_clique_number(&g3, mid), 2);
    }

    #[test]
    fn triangle_neighbourhood() {
        // In G_4, (2,1,1) is adjacent to (3,1), (2,2) and (1,1,1,1); (3,1)~(2,2).
        let g = build_graph(4).unwrap();
        let v = g.vertex_of(&"2,1,1".parse().unwrap()).unwrap();
        assert_eq!(g.degree(v), 3);
        assert_eq!(local_clique_number(&g, v), 3);
        assert_eq!(local_clique_number_oracle(&g, v).unwrap(), 3);
    }

    #[test]
    fn gosper_masks_match_filter() {
        for width in 0..=10 {
            for size in 0..=width {
                let fast: Vec<u32> = masks_of_size(width, size).collect();
                let slow: Vec<u32> = (0u32..1 << width)
                    .filter(|m| m.count_ones() as usize == size)
                    .collect();
                assert_eq!(fast, slow, "width={width} size={size}");
            }
        }
    }

    #[test]
    fn oracle_rejects_high_degree() {
        let g = build_graph(30).unwrap();
        let v = g.vertex_ids().max_by_key(|&v| g.degree(v)).unwrap();
        assert!(matches!(
            local_clique_number_oracle(&g, v),
            Err(Error::OracleInfeasible { degree: 44, .. })
        ));
    }

    #[test]
    fn search_agrees_with_oracle_small_n() {
        for n in 1..=10 {
            let g = build_graph(n).unwrap();
            for v in g.vertex_ids() {
                assert_eq!(
                    local_clique_number(&g, v),
                    local_clique_number_oracle(&g, v).unwrap()
                );
            }
        }
    }
}
