use super::bitset::{row_ones, words_for, BitSet};
use super::GraphError;

/// Undirected simple graph on `n` vertices with one bit row per vertex.
///
/// Rows are symmetric with an empty diagonal. The edge count is cached at
/// construction; a `Graph` is never mutated through the public API.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
    edge_count: usize,
}

/// Result of [`Graph::check_homogeneous`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Clique,
    IndependentSet,
    /// Sets of size at most one are both.
    Both,
    Neither,
}

impl Homogeneity {
    pub fn is_clique(self) -> bool {
        matches!(self, Homogeneity::Clique | Homogeneity::Both)
    }

    pub fn is_independent(self) -> bool {
        matches!(self, Homogeneity::IndependentSet | Homogeneity::Both)
    }
}

/// `n(n-1)/2`.
#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let stride = words_for(n);
        Graph { n, stride, rows: vec![0; n * stride], edge_count: 0 }
    }

    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    /// Builds a graph from unordered pairs; duplicates collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::InvalidInput(format!(
                    "edge ({u}, {v}) has an endpoint outside [0, {n})"
                )));
            }
            if u == v {
                return Err(GraphError::InvalidInput(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Number of unordered non-adjacent pairs.
    pub fn non_edge_count(&self) -> usize {
        pair_count(self.n) - self.edge_count
    }

    /// Words per adjacency row.
    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.row(u)[v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> BitSet {
        BitSet::from_words(self.row(v).to_vec(), self.n)
    }

    pub fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        row_ones(self.row(v))
    }

    /// All edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            row_ones(self.row(u)).filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let mut rows = Vec::with_capacity(self.rows.len());
        let tail = self.n % 64;
        for v in 0..self.n {
            let start = rows.len();
            rows.extend(self.row(v).iter().map(|w| !w));
            if tail != 0 {
                rows[start + self.stride - 1] &= (1u64 << tail) - 1;
            }
            rows[start + v / 64] &= !(1u64 << (v % 64));
        }
        Graph {
            n: self.n,
            stride: self.stride,
            rows,
            edge_count: pair_count(self.n) - self.edge_count,
        }
    }

    /// Subgraph induced by `vertices`, plus the map from local to original
    /// indices. Local order follows ascending original index; repeated
    /// vertices are taken once.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut map = vertices.to_vec();
        map.sort_unstable();
        map.dedup();
        if let Some(&bad) = map.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::InvalidInput(format!(
                "vertex {bad} outside [0, {})",
                self.n
            )));
        }
        Ok((self.induced_by_sorted(&map), map))
    }

    /// Subgraph induced by a strictly increasing list of valid vertices.
    pub(crate) fn induced_by_sorted(&self, map: &[usize]) -> Graph {
        let m = map.len();
        if m == self.n {
            return self.clone();
        }
        let mut sub = Graph::empty(m);
        let mut twice = 0usize;
        for (i, &u) in map.iter().enumerate() {
            let src = self.row(u);
            let dst = &mut sub.rows[i * sub.stride..(i + 1) * sub.stride];
            for (j, &w) in map.iter().enumerate() {
                if (src[w / 64] >> (w % 64)) & 1 == 1 {
                    dst[j / 64] |= 1u64 << (j % 64);
                    twice += 1;
                }
            }
        }
        sub.edge_count = twice / 2;
        sub
    }

    /// Classifies `vertices` as a clique, an independent set, both, or neither.
    pub fn check_homogeneous(&self, vertices: &[usize]) -> Result<Homogeneity, GraphError> {
        if let Some(&bad) = vertices.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::InvalidInput(format!(
                "vertex {bad} outside [0, {})",
                self.n
            )));
        }
        let mut set = vertices.to_vec();
        set.sort_unstable();
        set.dedup();
        if set.len() <= 1 {
            return Ok(Homogeneity::Both);
        }
        let mask = BitSet::from_indices(self.n, set.iter().copied());
        let mut all_adjacent = true;
        let mut none_adjacent = true;
        for &v in &set {
            let hits = mask.count_and(self.row(v));
            if hits != set.len() - 1 {
                all_adjacent = false;
            }
            if hits != 0 {
                none_adjacent = false;
            }
            if !all_adjacent && !none_adjacent {
                return Ok(Homogeneity::Neither);
            }
        }
        Ok(if all_adjacent { Homogeneity::Clique } else { Homogeneity::IndependentSet })
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        let had = self.has_edge(u, v);
        if had == present {
            return false;
        }
        let (su, sv) = (u * self.stride, v * self.stride);
        if present {
            self.rows[su + v / 64] |= 1u64 << (v % 64);
            self.rows[sv + u / 64] |= 1u64 << (u % 64);
            self.edge_count += 1;
        } else {
            self.rows[su + v / 64] &= !(1u64 << (v % 64));
            self.rows[sv + u / 64] &= !(1u64 << (u % 64));
            self.edge_count -= 1;
        }
        true
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.n <= 16 {
            f.debug_struct("Graph")
                .field("n", &self.n)
                .field("edges", &self.edges().collect::<Vec<_>>())
                .finish()
        } else {
            f.debug_struct("Graph")
                .field("n", &self.n)
                .field("edge_count", &self.edge_count)
                .finish()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn from_edges_examples() {
        assert_eq!(path3().edge_count(), 2);
        assert_eq!(Graph::from_edges(1, &[]).unwrap().edge_count(), 0);
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::InvalidInput(_))
        ));
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        let dup = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn complement_examples() {
        let c = path3().complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2)]);
        let k4c = Graph::complete(4).complement();
        assert_eq!(k4c, Graph::empty(4));
        assert_eq!(Graph::complete(4).edge_count(), 6);
        // tail masking across a word boundary
        let big = Graph::empty(65).complement();
        assert_eq!(big.edge_count(), 65 * 64 / 2);
        assert_eq!(big.degree(64), 64);
        assert!(!big.has_edge(64, 64));
    }

    #[test]
    fn induced_examples() {
        let (k3, map) = Graph::complete(4).induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(map, vec![0, 1, 2]);
        let (e, map) = cycle(5).induced_subgraph(&[]).unwrap();
        assert_eq!(e.n(), 0);
        assert!(map.is_empty());
        let (p, _) = cycle(5).induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p, path3());
        let (q, map) = cycle(5).induced_subgraph(&[4, 0, 2]).unwrap();
        assert_eq!(map, vec![0, 2, 4]);
        assert_eq!(q.edges().collect::<Vec<_>>(), vec![(0, 2)]);
        assert!(cycle(5).induced_subgraph(&[5]).is_err());
    }

    #[test]
    fn homogeneity_examples() {
        assert_eq!(Graph::complete(3).check_homogeneous(&[0, 1, 2]).unwrap(), Homogeneity::Clique);
        assert_eq!(Graph::empty(2).check_homogeneous(&[0, 1]).unwrap(), Homogeneity::IndependentSet);
        assert_eq!(path3().check_homogeneous(&[0, 1, 2]).unwrap(), Homogeneity::Neither);
        assert_eq!(path3().check_homogeneous(&[1]).unwrap(), Homogeneity::Both);
        assert_eq!(path3().check_homogeneous(&[]).unwrap(), Homogeneity::Both);
        assert!(path3().check_homogeneous(&[3]).is_err());
    }

    #[test]
    fn edges_are_sorted() {
        let g = Graph::from_edges(5, &[(4, 3), (0, 2), (2, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2), (3, 4)]);
    }
}
