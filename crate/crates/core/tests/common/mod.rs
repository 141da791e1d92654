#![allow(dead_code, clippy::needless_range_loop)]

use proptest::prelude::*;
use resistnet_core::{build_network, ExactRational, Network};

pub fn q(s: &str) -> ExactRational {
    s.parse().unwrap()
}

/// Connected networks on 2..=max_nodes nodes: a random spanning tree plus a
/// few extra (possibly parallel) edges, resistances p/q with 1 <= p, q <= 9.
pub fn connected_network(max_nodes: usize) -> impl Strategy<Value = Network> {
    (2..=max_nodes).prop_flat_map(|n| {
        let tree = proptest::collection::vec((any::<prop::sample::Index>(), 1u32..10, 1u32..10), n - 1);
        let extra = proptest::collection::vec((0..n, 0..n, 1u32..10, 1u32..10), 0..2 * n);
        (Just(n), tree, extra).prop_map(|(n, tree, extra)| {
            let mut edges = Vec::new();
            for (k, (parent, p, d)) in tree.into_iter().enumerate() {
                let child = k + 1;
                edges.push((parent.index(child), child, ExactRational::new(p, d)));
            }
            for (a, b, p, d) in extra {
                if a != b {
                    edges.push((a, b, ExactRational::new(p, d)));
                }
            }
            build_network(n, edges).unwrap()
        })
    })
}

/// Connected simple graphs with unit resistors.
pub fn unit_network(max_nodes: usize) -> impl Strategy<Value = Network> {
    (2..=max_nodes).prop_flat_map(|n| {
        let tree = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
        let extra = proptest::collection::vec((0..n, 0..n), 0..2 * n);
        (Just(n), tree, extra).prop_map(|(n, tree, extra)| {
            unit_graph(
                n,
                tree.iter()
                    .enumerate()
                    .map(|(k, p)| (p.index(k + 1), k + 1))
                    .chain(extra),
            )
        })
    })
}

pub fn unit_graph(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Network {
    let mut seen = std::collections::BTreeSet::new();
    let edges: Vec<_> = pairs
        .into_iter()
        .filter(|&(a, b)| a != b && seen.insert((a.min(b), a.max(b))))
        .map(|(a, b)| (a, b, ExactRational::one()))
        .collect();
    build_network(n, edges).unwrap()
}

/// Probability that a walk leaving `alpha` hits `beta` before returning,
/// by solving the hitting-probability equations with partial pivoting.
pub fn absorption_probability(net: &Network, alpha: usize, beta: usize) -> f64 {
    let n = net.n_nodes();
    let mut c = vec![vec![0.0; n]; n];
    for e in net.edges() {
        let g = 1.0 / e.resistance.to_f64();
        c[e.a][e.b] += g;
        c[e.b][e.a] += g;
    }
    let total: Vec<f64> = c.iter().map(|row| row.iter().sum()).collect();
    // h(beta) = 1, h(alpha) = 0, h(i) = sum_j p_ij h(j) elsewhere.
    let mut a = vec![vec![0.0; n + 1]; n];
    for i in 0..n {
        a[i][i] = 1.0;
        if i == beta {
            a[i][n] = 1.0;
        } else if i != alpha {
            for j in 0..n {
                a[i][j] -= c[i][j] / total[i];
            }
        }
    }
    for p in 0..n {
        let piv = (p..n).max_by(|&x, &y| a[x][p].abs().total_cmp(&a[y][p].abs())).unwrap();
        a.swap(p, piv);
        for i in 0..n {
            if i != p {
                let f = a[i][p] / a[p][p];
                for j in p..=n {
                    a[i][j] -= f * a[p][j];
                }
            }
        }
    }
    let h: Vec<f64> = (0..n).map(|i| a[i][n] / a[i][i]).collect();
    (0..n).map(|j| c[alpha][j] / total[alpha] * h[j]).sum()
}
