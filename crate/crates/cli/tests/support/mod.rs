#![allow(dead_code, clippy::needless_range_loop)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use resistnet_core::{build_network, ExactRational, Network};

/// A connected network: random spanning tree plus up to `n` extra edges
/// (parallel edges allowed), resistances p/q with 1 <= p, q <= 9.
pub fn random_network(rng: &mut ChaCha8Rng, max_nodes: usize) -> Network {
    let n = rng.random_range(2..=max_nodes);
    let mut edges = Vec::new();
    let res = |rng: &mut ChaCha8Rng| ExactRational::new(rng.random_range(1..10), rng.random_range(1..10));
    for child in 1..n {
        let parent = rng.random_range(0..child);
        edges.push((parent, child, res(rng)));
    }
    for _ in 0..rng.random_range(0..=n) {
        let (a, b) = (rng.random_range(0..n), rng.random_range(0..n));
        if a != b {
            edges.push((a, b, res(rng)));
        }
    }
    build_network(n, edges).unwrap()
}

/// A connected simple graph with unit resistors.
pub fn random_unit_graph(rng: &mut ChaCha8Rng, max_nodes: usize) -> Network {
    let n = rng.random_range(2..=max_nodes);
    let mut adj = vec![vec![false; n]; n];
    for child in 1..n {
        let parent = rng.random_range(0..child);
        adj[parent][child] = true;
    }
    let p: f64 = rng.random_range(0.0..0.6);
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                adj[a][b] = true;
            }
        }
    }
    let edges = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| adj[a][b])
        .map(|(a, b)| (a, b, ExactRational::one()))
        .collect::<Vec<_>>();
    build_network(n, edges).unwrap()
}

/// Chance that a walk started at `alpha` reaches `beta` before coming back,
/// from the hitting-probability equations of the walk's Markov chain.
pub fn absorption_probability(net: &Network, alpha: usize, beta: usize) -> f64 {
    let n = net.n_nodes();
    let mut c = vec![vec![0.0; n]; n];
    for e in net.edges() {
        let g = 1.0 / e.resistance.to_f64();
        c[e.a][e.b] += g;
        c[e.b][e.a] += g;
    }
    let deg: Vec<f64> = c.iter().map(|r| r.iter().sum()).collect();
    let mut m = vec![vec![0.0; n + 1]; n];
    for i in 0..n {
        m[i][i] = 1.0;
        if i == beta {
            m[i][n] = 1.0;
        } else if i != alpha {
            for j in 0..n {
                m[i][j] -= c[i][j] / deg[i];
            }
        }
    }
    for p in 0..n {
        let piv = (p..n).max_by(|&x, &y| m[x][p].abs().total_cmp(&m[y][p].abs())).unwrap();
        m.swap(p, piv);
        for i in 0..n {
            if i != p {
                let f = m[i][p] / m[p][p];
                for j in p..=n {
                    m[i][j] -= f * m[p][j];
                }
            }
        }
    }
    (0..n).map(|j| c[alpha][j] / deg[alpha] * m[j][n] / m[j][j]).sum()
}
