use super::{LatticeSpec, Wrap};
use crate::network::{build_network, Network};

/// Each node links to its successor along every axis. At the far end of a
/// closed axis the successor wraps around (reflecting y on a twisted seam).
/// Links from a node to itself are dropped, so an axis of length 2 yields a
/// doubled edge and a closed axis of length 1 yields none, exactly as in the
/// corresponding ring Laplacians.
pub(super) fn lattice_network(spec: &LatticeSpec) -> Network {
    let dims = spec.dims();
    let res = spec.resistances();
    let n = spec.n_nodes();
    let mut edges = Vec::new();
    for a in 0..n {
        let c = spec.coords(a).expect("index in range");
        for axis in 0..dims.len() {
            let next = if c[axis] + 1 < dims[axis] {
                let mut d = c.clone();
                d[axis] += 1;
                d
            } else {
                match spec.bc.wrap(axis) {
                    Wrap::Open => continue,
                    Wrap::Ring | Wrap::Twisted => spec.translate(&c, axis, 1).expect("closed axis"),
                }
            };
            let b = spec.index(&next).expect("index in range");
            if a != b {
                edges.push((a, b, res[axis].clone()));
            }
        }
    }
    build_network(n, edges).expect("lattice edges are valid")
}

#[cfg(test)]
mod tests {
    use crate::lattice::{BoundaryCondition as Bc, LatticeSpec};
    use crate::network::Network;
    use crate::rational::ExactRational;

    fn lattice(bc: Bc, dims: &[usize]) -> Network {
        LatticeSpec::new(bc, dims.to_vec(), vec![ExactRational::one(); dims.len()])
            .unwrap()
            .network()
    }

    #[test]
    fn edge_counts() {
        assert_eq!(lattice(Bc::Free1D, &[4]).edges().len(), 3);
        assert_eq!(lattice(Bc::Periodic1D, &[4]).edges().len(), 4);
        let torus = lattice(Bc::Periodic2D, &[5, 4]);
        assert_eq!(torus.edges().len(), 40);
        let rw = torus.random_walk();
        assert!((0..20).all(|i| rw.degree(i) == 4));
        assert_eq!(lattice(Bc::Free3D, &[2, 2, 2]).edges().len(), 12);
        assert_eq!(lattice(Bc::Cylinder, &[5, 4]).edges().len(), 35);
        assert_eq!(lattice(Bc::Moebius, &[5, 4]).edges().len(), 35);
        assert_eq!(lattice(Bc::Klein, &[5, 4]).edges().len(), 40);
    }

    #[test]
    fn moebius_2x2_is_k4() {
        let m = lattice(Bc::Moebius, &[2, 2]);
        let k4 = Network::complete_graph(4, ExactRational::one()).unwrap();
        assert_eq!(m.laplacian(), k4.laplacian());
    }

    #[test]
    fn short_rings_double_up() {
        let ring2 = lattice(Bc::Periodic1D, &[2]);
        assert_eq!(ring2.laplacian().get(0, 1), -2.0);
        let ring1 = lattice(Bc::Periodic1D, &[1]);
        assert!(ring1.edges().is_empty());
    }
}
