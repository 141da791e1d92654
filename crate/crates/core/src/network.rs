//! Resistor networks, their Laplacians and the random-walk view.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rational::ExactRational;

/// One resistor between nodes `a` and `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub resistance: ExactRational,
}

/// An undirected multigraph of resistors. Parallel edges are kept as given;
/// their conductances are added when the Laplacian is assembled.
///
/// Resistances are stored exactly, so the same network feeds both the
/// floating-point and the rational solvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    n_nodes: usize,
    edges: Vec<Edge>,
}

/// Validate and build a network from `(i, j, r)` triples.
pub fn build_network<I>(n_nodes: usize, edges: I) -> Result<Network>
where
    I: IntoIterator<Item = (usize, usize, ExactRational)>,
{
    if n_nodes == 0 {
        return Err(Error::EmptyNetwork);
    }
    let mut out = Vec::new();
    for (k, (a, b, resistance)) in edges.into_iter().enumerate() {
        for node in [a, b] {
            if node >= n_nodes {
                return Err(Error::IndexOutOfRange { edge: k, node, n_nodes });
            }
        }
        if a == b {
            return Err(Error::SelfLoop { edge: k, node: a });
        }
        if !resistance.is_positive() {
            return Err(Error::NonPositiveResistance {
                edge: k,
                value: resistance.to_string(),
            });
        }
        out.push(Edge { a, b, resistance });
    }
    Ok(Network { n_nodes, edges: out })
}

impl Network {
    /// Build from floating-point resistances. Each value is converted to the
    /// exact rational of its binary representation.
    pub fn from_f64_edges<I>(n_nodes: usize, edges: I) -> Result<Network>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut exact = Vec::new();
        for (k, (a, b, r)) in edges.into_iter().enumerate() {
            let q = ExactRational::from_f64(r).ok_or_else(|| Error::NonPositiveResistance {
                edge: k,
                value: r.to_string(),
            })?;
            exact.push((a, b, q));
        }
        build_network(n_nodes, exact)
    }

    /// Every pair of `n` nodes joined by resistance `r`.
    pub fn complete_graph(n: usize, r: ExactRational) -> Result<Network> {
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, r.clone()));
        build_network(n, edges.collect::<Vec<_>>())
    }

    /// A copy with one more resistor.
    pub fn with_edge(&self, a: usize, b: usize, resistance: ExactRational) -> Result<Network> {
        let edges = self
            .edges
            .iter()
            .map(|e| (e.a, e.b, e.resistance.clone()))
            .chain(std::iter::once((a, b, resistance)));
        build_network(self.n_nodes, edges.collect::<Vec<_>>())
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Exact conductance between each connected pair `(i < j)`, parallel
    /// edges summed.
    pub fn merged_conductances(&self) -> BTreeMap<(usize, usize), ExactRational> {
        let mut map: BTreeMap<(usize, usize), ExactRational> = BTreeMap::new();
        for e in &self.edges {
            let key = (e.a.min(e.b), e.a.max(e.b));
            let c = e.resistance.recip();
            map.entry(key).and_modify(|v| *v = &*v + &c).or_insert(c);
        }
        map
    }

    /// The Kirchhoff matrix in floating point.
    ///
    /// Parallel conductances are merged exactly and each off-diagonal entry
    /// is rounded once. The diagonal is the negated row sum of the rounded
    /// off-diagonals, accumulated in column order, so the assembled matrix
    /// does not depend on the order of the edge list.
    pub fn laplacian(&self) -> Laplacian {
        let n = self.n_nodes;
        let mut data = vec![0.0; n * n];
        for ((i, j), c) in self.merged_conductances() {
            let c = c.to_f64();
            data[i * n + j] = -c;
            data[j * n + i] = -c;
        }
        for i in 0..n {
            let row = &data[i * n..(i + 1) * n];
            let s: f64 = row.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| -v).sum();
            data[i * n + i] = s;
        }
        Laplacian { n, data }
    }

    /// The Kirchhoff matrix in exact arithmetic, row-major.
    pub fn laplacian_exact(&self) -> Vec<Vec<ExactRational>> {
        let n = self.n_nodes;
        let mut m = vec![vec![ExactRational::zero(); n]; n];
        for ((i, j), c) in self.merged_conductances() {
            m[i][j] = -c.clone();
            m[j][i] = -c.clone();
            m[i][i] = &m[i][i] + &c;
            m[j][j] = &m[j][j] + &c;
        }
        m
    }

    /// Connected components, labelled in order of first appearance.
    pub fn components(&self) -> Components {
        let n = self.n_nodes;
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        let mut labels = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if labels[start] != usize::MAX {
                continue;
            }
            labels[start] = count;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    if labels[v] == usize::MAX {
                        labels[v] = count;
                        stack.push(v);
                    }
                }
            }
            count += 1;
        }
        Components { count, labels }
    }

    pub fn is_connected(&self) -> bool {
        self.components().count == 1
    }

    /// Errors with `Disconnected` unless the network is connected.
    pub fn require_connected(&self) -> Result<()> {
        let c = self.components();
        if c.count == 1 {
            Ok(())
        } else {
            Err(Error::Disconnected { components: c.count })
        }
    }

    pub fn random_walk(&self) -> RandomWalkView {
        RandomWalkView::new(self)
    }

    pub(crate) fn check_node(&self, node: usize) -> Result<()> {
        if node < self.n_nodes {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!(
                "node {node} is out of range for a {}-node network",
                self.n_nodes
            )))
        }
    }
}

/// Dense symmetric Laplacian, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Laplacian {
    n: usize,
    data: Vec<f64>,
}

impl Laplacian {
    /// Wrap a row-major matrix. Panics if `data.len() != n * n`.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), n * n, "matrix must be n x n");
        Laplacian { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Frobenius norm, an upper bound on the spectral norm.
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// Component labelling of a network.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    pub labels: Vec<usize>,
}

/// Hop probabilities `p(i→j) = c_ij / c_i` of the random walk on a network.
#[derive(Debug, Clone)]
pub struct RandomWalkView {
    conductance_sums: Vec<f64>,
    degrees: Vec<usize>,
    hops: Vec<Vec<(usize, f64)>>,
}

impl RandomWalkView {
    fn new(net: &Network) -> Self {
        let n = net.n_nodes();
        let mut sums = vec![ExactRational::zero(); n];
        let mut neighbours: Vec<Vec<(usize, ExactRational)>> = vec![Vec::new(); n];
        for ((i, j), c) in net.merged_conductances() {
            sums[i] = &sums[i] + &c;
            sums[j] = &sums[j] + &c;
            neighbours[i].push((j, c.clone()));
            neighbours[j].push((i, c));
        }
        let hops = neighbours
            .iter()
            .zip(&sums)
            .map(|(nb, total)| {
                let mut row: Vec<(usize, f64)> = nb.iter().map(|(j, c)| (*j, (c / total).to_f64())).collect();
                row.sort_by_key(|&(j, _)| j);
                row
            })
            .collect();
        RandomWalkView {
            conductance_sums: sums.iter().map(ExactRational::to_f64).collect(),
            degrees: neighbours.iter().map(Vec::len).collect(),
            hops,
        }
    }

    /// `c_i`, the total conductance at node `i`.
    pub fn conductance_sum(&self, i: usize) -> f64 {
        self.conductance_sums[i]
    }

    /// Number of distinct neighbours of `i`.
    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    /// Neighbours of `i` and the probability of hopping to each, sorted by
    /// neighbour index.
    pub fn hops(&self, i: usize) -> &[(usize, f64)] {
        &self.hops[i]
    }

    pub fn hop_probability(&self, i: usize, j: usize) -> f64 {
        self.hops[i]
            .binary_search_by_key(&j, |&(k, _)| k)
            .map(|k| self.hops[i][k].1)
            .unwrap_or(0.0)
    }
}

/// Probability that a walker leaving `alpha` reaches `beta` before returning
/// to `alpha`, given the resistance between them: `1 / (c_α R)`.
pub fn first_passage_probability(net: &Network, alpha: usize, beta: usize, resistance: f64) -> Result<f64> {
    net.check_node(alpha)?;
    net.check_node(beta)?;
    if alpha == beta {
        return Err(Error::SameNode(alpha));
    }
    net.require_connected()?;
    if !(resistance.is_finite() && resistance > 0.0) {
        return Err(Error::OutOfRange(format!("resistance {resistance} must be positive")));
    }
    let c_alpha: ExactRational = net
        .merged_conductances()
        .into_iter()
        .filter(|((i, j), _)| *i == alpha || *j == alpha)
        .map(|(_, c)| c)
        .sum();
    Ok(1.0 / (c_alpha.to_f64() * resistance))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExactRational {
        s.parse().unwrap()
    }

    fn example_one(r1: &str, r2: &str) -> Network {
        let (r1, r2) = (q(r1), q(r2));
        build_network(
            4,
            vec![
                (0, 1, r1.clone()),
                (1, 2, r1.clone()),
                (2, 3, r1.clone()),
                (3, 0, r1),
                (1, 3, r2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(build_network(0, vec![]), Err(Error::EmptyNetwork));
        assert!(matches!(
            build_network(2, vec![(0, 2, q("1"))]),
            Err(Error::IndexOutOfRange { node: 2, .. })
        ));
        assert!(matches!(
            build_network(2, vec![(1, 1, q("1"))]),
            Err(Error::SelfLoop { .. })
        ));
        assert!(matches!(
            build_network(2, vec![(0, 1, q("0"))]),
            Err(Error::NonPositiveResistance { .. })
        ));
        assert!(matches!(
            Network::from_f64_edges(2, vec![(0, 1, f64::INFINITY)]),
            Err(Error::NonPositiveResistance { .. })
        ));
    }

    #[test]
    fn parallel_edges_add_conductance() {
        let net = build_network(3, vec![(0, 1, q("1")), (0, 1, q("1"))]).unwrap();
        assert_eq!(net.edges().len(), 2);
        let l = net.laplacian();
        assert_eq!(l.get(0, 1), -2.0);
        assert_eq!(l.get(0, 0), 2.0);
        assert_eq!(l.get(2, 2), 0.0);
    }

    #[test]
    fn example_one_laplacian() {
        let net = example_one("2", "3");
        let l = net.laplacian_exact();
        let c1 = q("1/2");
        let c2 = q("1/3");
        assert_eq!(l[0][0], &c1 + &c1);
        assert_eq!(l[1][1], &(&c1 + &c1) + &c2);
        assert_eq!(l[1][3], -c2.clone());
        assert_eq!(l[0][2], ExactRational::zero());
        for row in &l {
            assert!(row.iter().sum::<ExactRational>().is_zero());
        }
    }

    #[test]
    fn two_node_and_complete_laplacians() {
        let l = build_network(2, vec![(0, 1, q("4"))]).unwrap().laplacian();
        assert_eq!(l.as_slice(), &[0.25, -0.25, -0.25, 0.25]);
        let k5 = Network::complete_graph(5, q("2")).unwrap().laplacian();
        for i in 0..5 {
            assert_eq!(k5.get(i, i), 2.0);
            assert_eq!(k5.row(i).iter().sum::<f64>(), 0.0);
        }
    }

    #[test]
    fn component_labels() {
        assert_eq!(example_one("1", "1").components().count, 1);
        let two = build_network(4, vec![(0, 1, q("1")), (2, 3, q("1"))]).unwrap();
        assert_eq!(
            two.components(),
            Components {
                count: 2,
                labels: vec![0, 0, 1, 1]
            }
        );
        assert_eq!(build_network(1, vec![]).unwrap().components().count, 1);
    }

    #[test]
    fn hop_probabilities() {
        let rw = example_one("1", "1").random_walk();
        assert_eq!(rw.degree(1), 3);
        assert_eq!(rw.degree(0), 2);
        let total: f64 = rw.hops(1).iter().map(|h| h.1).sum();
        assert!((total - 1.0).abs() < 1e-15);
        assert!((rw.hop_probability(0, 1) - 0.5).abs() < 1e-15);
        assert_eq!(rw.hop_probability(0, 2), 0.0);
    }

    #[test]
    fn first_passage_known_cases() {
        let pair = build_network(2, vec![(0, 1, q("3"))]).unwrap();
        assert!((first_passage_probability(&pair, 0, 1, 3.0).unwrap() - 1.0).abs() < 1e-15);
        let k4 = Network::complete_graph(4, q("1")).unwrap();
        assert!((first_passage_probability(&k4, 0, 1, 0.5).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        let ring = build_network(3, vec![(0, 1, q("1")), (1, 2, q("1")), (2, 0, q("1"))]).unwrap();
        assert!((first_passage_probability(&ring, 0, 1, 2.0 / 3.0).unwrap() - 0.75).abs() < 1e-15);
        assert_eq!(first_passage_probability(&ring, 1, 1, 1.0), Err(Error::SameNode(1)));
        let split = build_network(4, vec![(0, 1, q("1")), (2, 3, q("1"))]).unwrap();
        assert_eq!(
            first_passage_probability(&split, 0, 2, 1.0),
            Err(Error::Disconnected { components: 2 })
        );
    }
}
