//! Exact resistances from the grounded Kirchhoff equations.
//!
//! One node is held at potential zero, which removes the Laplacian's null
//! space. Each row of the reduced system is scaled to integers and the system
//! is solved by Bareiss fraction-free elimination, so every intermediate is an
//! integer minor and the only division producing a fraction is the last one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::network::Network;
use crate::rational::ExactRational;

/// Kirchhoff's equations `L V = I` for unit current entering at `alpha` and
/// leaving at `beta`, solved with the `ground` node held at zero.
#[derive(Debug, Clone)]
pub struct KirchhoffSystem {
    pub alpha: usize,
    pub beta: usize,
    pub ground: usize,
    /// Full injection vector: `+1` at `alpha`, `−1` at `beta`.
    pub currents: Vec<ExactRational>,
    /// Node potentials, with `potentials[ground] == 0`.
    pub potentials: Vec<ExactRational>,
    laplacian: Vec<Vec<ExactRational>>,
}

impl KirchhoffSystem {
    /// Solve with an arbitrary ground node.
    pub fn solve(net: &Network, alpha: usize, beta: usize, ground: usize) -> Result<Self> {
        net.check_node(alpha)?;
        net.check_node(beta)?;
        net.check_node(ground)?;
        if alpha == beta {
            return Err(Error::SameNode(alpha));
        }
        net.require_connected()?;

        let n = net.n_nodes();
        let laplacian = net.laplacian_exact();
        let mut currents = vec![ExactRational::zero(); n];
        currents[alpha] = ExactRational::one();
        currents[beta] = -ExactRational::one();

        let keep: Vec<usize> = (0..n).filter(|&i| i != ground).collect();
        let reduced: Vec<Vec<BigRational>> = keep
            .iter()
            .map(|&i| {
                keep.iter()
                    .map(|&j| laplacian[i][j].as_big_rational().clone())
                    .collect()
            })
            .collect();
        let rhs: Vec<Vec<BigRational>> = keep
            .iter()
            .map(|&i| vec![currents[i].as_big_rational().clone()])
            .collect();
        let solution = solve_multi(reduced, rhs, Execution::default())?;

        let mut potentials = vec![ExactRational::zero(); n];
        for (k, &i) in keep.iter().enumerate() {
            potentials[i] = solution[k][0].clone().into();
        }
        Ok(KirchhoffSystem {
            alpha,
            beta,
            ground,
            currents,
            potentials,
            laplacian,
        })
    }

    /// `V_α − V_β` per unit current.
    pub fn resistance(&self) -> ExactRational {
        &self.potentials[self.alpha] - &self.potentials[self.beta]
    }

    /// `L V − I` over the full, ungrounded system.
    pub fn residual(&self) -> Vec<ExactRational> {
        self.laplacian
            .iter()
            .zip(&self.currents)
            .map(|(row, i)| {
                row.iter()
                    .zip(&self.potentials)
                    .map(|(l, v)| l * v)
                    .sum::<ExactRational>()
                    - i.clone()
            })
            .collect()
    }

    pub fn residual_is_zero(&self) -> bool {
        self.residual().iter().all(ExactRational::is_zero)
    }
}

/// Exact resistance between `alpha` and `beta`, grounding `beta`.
pub fn solve_exact(net: &Network, alpha: usize, beta: usize) -> Result<ExactRational> {
    net.check_node(alpha)?;
    net.check_node(beta)?;
    if alpha == beta {
        net.require_connected()?;
        return Ok(ExactRational::zero());
    }
    Ok(KirchhoffSystem::solve(net, alpha, beta, beta)?.resistance())
}

/// All-pairs exact resistances, row-major `n × n`.
///
/// Inverts the grounded Laplacian `L'` (node 0 grounded) and uses
/// `R_ab = X_aa + X_bb − 2 X_ab` with `X = L'^{-1}` padded by a zero row and
/// column for the ground. Back-substitution for the columns of `X` is spread
/// over `exec`.
pub fn resistance_matrix_exact(net: &Network, exec: Execution) -> Result<Vec<Vec<ExactRational>>> {
    net.require_connected()?;
    let n = net.n_nodes();
    if n == 1 {
        return Ok(vec![vec![ExactRational::zero()]]);
    }
    let lap = net.laplacian_exact();
    let m = n - 1;
    let reduced: Vec<Vec<BigRational>> = (1..n)
        .map(|i| (1..n).map(|j| lap[i][j].as_big_rational().clone()).collect())
        .collect();
    let identity: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let x = solve_multi(reduced, identity, exec)?;
    let inv = |a: usize, b: usize| -> BigRational {
        if a == 0 || b == 0 {
            BigRational::zero()
        } else {
            x[a - 1][b - 1].clone()
        }
    };
    let two = BigRational::from_integer(BigInt::from(2));
    let rows = exec.map(0..n, |a| {
        (0..n)
            .map(|b| ExactRational::from(inv(a, a) + inv(b, b) - &two * inv(a, b)))
            .collect::<Vec<_>>()
    });
    Ok(rows)
}

/// Solve `A X = B` exactly for square `A` (m × m) and `B` (m × k).
fn solve_multi(a: Vec<Vec<BigRational>>, b: Vec<Vec<BigRational>>, exec: Execution) -> Result<Vec<Vec<BigRational>>> {
    let m = a.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let k = b[0].len();

    // Scale each row of [A | B] by the lcm of its denominators.
    let mut aug: Vec<Vec<BigInt>> = a
        .into_iter()
        .zip(b)
        .map(|(row_a, row_b)| {
            let row: Vec<BigRational> = row_a.into_iter().chain(row_b).collect();
            let lcm = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            row.into_iter()
                .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
                .collect()
        })
        .collect();

    let det = bareiss(&mut aug, m, exec)?;

    // Fraction-free back substitution: y = det · x is integral.
    let columns = exec.map(0..k, |c| {
        let mut y = vec![BigInt::zero(); m];
        for i in (0..m).rev() {
            let mut acc = &det * &aug[i][m + c];
            for j in i + 1..m {
                acc -= &aug[i][j] * &y[j];
            }
            y[i] = acc / &aug[i][i];
        }
        y
    });
    let mut out = vec![Vec::with_capacity(k); m];
    for col in columns {
        for (i, yi) in col.into_iter().enumerate() {
            out[i].push(BigRational::new(yi, det.clone()));
        }
    }
    Ok(out)
}

/// In-place Bareiss elimination on the first `m` columns of `aug`. Returns
/// the last pivot, which is the determinant of the row-permuted leading block
/// (row swaps reorder equations, so the solution is unaffected).
fn bareiss(aug: &mut [Vec<BigInt>], m: usize, exec: Execution) -> Result<BigInt> {
    let width = aug[0].len();
    let mut prev = BigInt::one();
    for p in 0..m {
        if aug[p][p].is_zero() {
            let swap = (p + 1..m)
                .find(|&i| !aug[i][p].is_zero())
                .ok_or(Error::SingularReducedSystem)?;
            aug.swap(p, swap);
        }
        let (head, tail) = aug.split_at_mut(p + 1);
        let pivot_row = &head[p];
        let pivot = &pivot_row[p];
        let prev_ref = &prev;
        exec.for_each_mut(tail, |row| {
            let factor = std::mem::take(&mut row[p]);
            if factor.is_zero() {
                for x in &mut row[p + 1..width] {
                    *x = (&*x * pivot) / prev_ref;
                }
            } else {
                for j in p + 1..width {
                    row[j] = (&row[j] * pivot - &factor * &pivot_row[j]) / prev_ref;
                }
            }
        });
        prev = aug[p][p].clone();
    }
    Ok(prev)
}

/// A worked example with a known exact answer.
#[derive(Debug, Clone)]
pub struct GoldenExample {
    pub name: &'static str,
    pub description: String,
    pub network: Network,
    pub pair: (usize, usize),
    pub expected: ExactRational,
    pub computed: ExactRational,
}

impl GoldenExample {
    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }
}

fn q(s: &str) -> ExactRational {
    s.parse().expect("valid rational literal")
}

fn sum(parts: &[&str]) -> ExactRational {
    parts.iter().map(|p| q(p)).sum()
}

/// The published closed-form value for the 4-node network with rim
/// resistors `r1` and diagonal `r2`, between a diagonal end and its
/// neighbour, as printed.
pub fn example_one_r12_published(r1: &ExactRational, r2: &ExactRational) -> ExactRational {
    let three = q("3");
    let two = q("2");
    let four = q("4");
    r1 * &(&(&three * r1) + &(&two * r2)) / (&four * &(r1 + r2))
}

/// The value implied by the network's eigenpairs for the same pair.
pub fn example_one_r12_derived(r1: &ExactRational, r2: &ExactRational) -> ExactRational {
    let three = q("3");
    let two = q("2");
    let four = q("4");
    r1 * &(&(&two * r1) + &(&three * r2)) / (&four * &(r1 + r2))
}

/// The closed form for corner-to-corner resistance on a free 4 × 4 grid.
pub fn example_four_formula(r: &ExactRational, s: &ExactRational) -> ExactRational {
    let c = |k: i64| ExactRational::from_integer(k);
    let rr = r * r;
    let ss = s * s;
    let rs = r * s;
    let num = (r + s) * (&rr + &(&c(5) * &rs) + ss.clone()) * (&(&c(3) * &rr) + &(&c(7) * &rs) + &c(3) * &ss);
    let den = c(2) * (&(&c(2) * &rr) + &(&c(4) * &rs) + ss.clone()) * (&rr + &(&c(4) * &rs) + &c(2) * &ss);
    num / den
}

/// The 4-node network: a square of `r1` resistors with one diagonal `r2`
/// between nodes 1 and 3 (0-based).
pub fn example_one_network(r1: &ExactRational, r2: &ExactRational) -> Network {
    crate::network::build_network(
        4,
        vec![
            (0, 1, r1.clone()),
            (1, 2, r1.clone()),
            (2, 3, r1.clone()),
            (3, 0, r1.clone()),
            (1, 3, r2.clone()),
        ],
    )
    .expect("valid network")
}

/// Every worked example with an exact answer, solved by the oracle.
pub fn solve_exact_all_examples() -> Result<Vec<GoldenExample>> {
    use crate::lattice::{BoundaryCondition as Bc, LatticeSpec};

    let one = ExactRational::one();
    let mut out = Vec::new();
    let mut push = |name, description: String, network: Network, pair: (usize, usize), expected| -> Result<()> {
        let computed = solve_exact(&network, pair.0, pair.1)?;
        out.push(GoldenExample {
            name,
            description,
            network,
            pair,
            expected,
            computed,
        });
        Ok(())
    };

    let (r1, r2) = (q("2"), q("3"));
    push(
        "example-1-r13",
        "4-node network, r1 = 2, r2 = 3, nodes 1-3".into(),
        example_one_network(&r1, &r2),
        (0, 2),
        r1.clone(),
    )?;
    push(
        "example-1-r12",
        "4-node network, r1 = 2, r2 = 3, nodes 1-2".into(),
        example_one_network(&r1, &r2),
        (0, 1),
        example_one_r12_published(&r1, &r2),
    )?;
    push(
        "example-2",
        "complete graph on 6 nodes, unit resistors".into(),
        Network::complete_graph(6, one.clone())?,
        (0, 5),
        q("2/6"),
    )?;

    let lattice = |bc, dims: &[usize], res: &[&str]| -> Result<LatticeSpec> {
        LatticeSpec::new(bc, dims.to_vec(), res.iter().map(|r| q(r)).collect())
    };
    let mut lattice_case = |name, spec: LatticeSpec, from: &[usize], to: &[usize], expected| -> Result<()> {
        let pair = (spec.index(from)?, spec.index(to)?);
        push(name, spec.describe(from, to), spec.network(), pair, expected)
    };

    lattice_case(
        "example-3",
        lattice(Bc::Free2D, &[5, 4], &["1", "1"])?,
        &[0, 0],
        &[3, 3],
        sum(&["3/4", "3/5", "9877231/27600540"]),
    )?;
    let (r, s) = (q("1"), q("2"));
    lattice_case(
        "example-4",
        lattice(Bc::Free2D, &[4, 4], &["1", "2"])?,
        &[0, 0],
        &[3, 3],
        example_four_formula(&r, &s),
    )?;
    lattice_case(
        "example-6",
        lattice(Bc::Periodic2D, &[5, 4], &["1", "1"])?,
        &[0, 0],
        &[3, 3],
        sum(&["3/10", "3/20", "1799/7790"]),
    )?;
    lattice_case(
        "example-7",
        lattice(Bc::Cylinder, &[5, 4], &["1", "1"])?,
        &[0, 0],
        &[3, 3],
        sum(&["3/10", "3/5", "5023/8835"]),
    )?;
    lattice_case(
        "example-8",
        lattice(Bc::Moebius, &[2, 2], &["1", "1"])?,
        &[0, 0],
        &[1, 1],
        q("1/2"),
    )?;
    lattice_case(
        "example-9",
        lattice(Bc::Moebius, &[5, 4], &["1", "1"])?,
        &[0, 0],
        &[3, 3],
        sum(&["3/10", "1609/2698"]),
    )?;
    lattice_case(
        "example-10",
        lattice(Bc::Klein, &[5, 4], &["1", "1"])?,
        &[0, 0],
        &[3, 3],
        sum(&["3/10", "5/58", "56/209"]),
    )?;
    lattice_case(
        "example-11",
        lattice(Bc::Free3D, &[5, 5, 4], &["1", "1", "1"])?,
        &[0, 0, 0],
        &[3, 3, 3],
        q("327687658482872/352468567489225"),
    )?;
    Ok(out)
}
