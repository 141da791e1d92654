//! Every worked example, recomputed by each applicable method.

use std::f64::consts::PI;

use resistnet_core::exact::{example_four_formula, example_one_network, example_one_r12_published};
use resistnet_core::identities::{periodic_3d_sum, r_infinite_2d, r_infinite_3d};
use resistnet_core::{decompose, solve_exact, BoundaryCondition, ExactRational, LatticeSpec, Network};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::report::{float, fmt_float, Tabular};

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub example: String,
    pub description: String,
    pub method: String,
    /// Exact `p/q` when known, otherwise the decimal value.
    pub expected: String,
    #[serde(serialize_with = "float")]
    pub expected_float: f64,
    pub computed: String,
    #[serde(serialize_with = "float")]
    pub computed_float: f64,
    /// `|computed − expected| / |expected|`.
    #[serde(serialize_with = "float")]
    pub difference: f64,
    /// Zero means exact equality is required.
    #[serde(serialize_with = "float")]
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReproduceReport {
    #[serde(serialize_with = "float")]
    pub tolerance: f64,
    pub passed: usize,
    pub failed: usize,
    pub rows: Vec<Row>,
}

impl ReproduceReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

impl Tabular for ReproduceReport {
    fn header(&self) -> Vec<&'static str> {
        vec![
            "example",
            "description",
            "method",
            "expected",
            "expected_float",
            "computed",
            "computed_float",
            "difference",
            "tolerance",
            "pass",
        ]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                vec![
                    r.example.clone(),
                    r.description.clone(),
                    r.method.clone(),
                    r.expected.clone(),
                    fmt_float(r.expected_float),
                    r.computed.clone(),
                    fmt_float(r.computed_float),
                    fmt_float(r.difference),
                    fmt_float(r.tolerance),
                    r.pass.to_string(),
                ]
            })
            .collect()
    }
}

enum Expected {
    Exact(ExactRational),
    Float(f64),
}

impl Expected {
    fn value(&self) -> f64 {
        match self {
            Expected::Exact(q) => q.to_f64(),
            Expected::Float(x) => *x,
        }
    }

    fn label(&self) -> String {
        match self {
            Expected::Exact(q) => q.to_string(),
            Expected::Float(x) => fmt_float(*x),
        }
    }
}

struct Table {
    tol: f64,
    rows: Vec<Row>,
}

fn q(s: &str) -> ExactRational {
    s.parse().expect("valid literal")
}

fn sum(parts: &[&str]) -> ExactRational {
    parts.iter().map(|p| q(p)).sum()
}

fn relative(computed: f64, expected: f64) -> f64 {
    if expected == 0.0 {
        computed.abs()
    } else {
        (computed - expected).abs() / expected.abs()
    }
}

impl Table {
    fn exact(
        &mut self,
        example: &str,
        description: &str,
        net: &Network,
        pair: (usize, usize),
        expected: &ExactRational,
    ) -> CliResult<()> {
        let got = solve_exact(net, pair.0, pair.1)?;
        self.rows.push(Row {
            example: example.into(),
            description: description.into(),
            method: "oracle".into(),
            expected: expected.to_string(),
            expected_float: expected.to_f64(),
            computed: got.to_string(),
            computed_float: got.to_f64(),
            difference: relative(got.to_f64(), expected.to_f64()),
            tolerance: 0.0,
            pass: &got == expected,
        });
        Ok(())
    }

    fn approx(
        &mut self,
        example: &str,
        description: &str,
        method: &str,
        computed: f64,
        expected: &Expected,
        tolerance: f64,
    ) {
        let difference = relative(computed, expected.value());
        self.rows.push(Row {
            example: example.into(),
            description: description.into(),
            method: method.into(),
            expected: expected.label(),
            expected_float: expected.value(),
            computed: fmt_float(computed),
            computed_float: computed,
            difference,
            tolerance,
            pass: difference <= tolerance,
        });
    }

    fn spectral(
        &mut self,
        example: &str,
        description: &str,
        net: &Network,
        pair: (usize, usize),
        expected: &Expected,
    ) -> CliResult<()> {
        let v = decompose(&net.laplacian())?.two_point_resistance(pair.0, pair.1)?;
        self.approx(example, description, "spectral", v, expected, self.tol);
        Ok(())
    }

    /// Oracle, spectral and closed form on one lattice pair.
    fn lattice(
        &mut self,
        example: &str,
        spec: &LatticeSpec,
        from: &[usize],
        to: &[usize],
        expected: &ExactRational,
    ) -> CliResult<()> {
        let desc = spec.describe(from, to);
        let net = spec.network();
        let pair = (spec.index(from)?, spec.index(to)?);
        self.exact(example, &desc, &net, pair, expected)?;
        let e = Expected::Exact(expected.clone());
        self.spectral(example, &desc, &net, pair, &e)?;
        let cf = spec.closed_form(from, to)?;
        self.approx(example, &desc, "closed-form", cf, &e, self.tol);
        Ok(())
    }
}

fn lattice(bc: BoundaryCondition, dims: &[usize], res: &[&str]) -> CliResult<LatticeSpec> {
    LatticeSpec::new(bc, dims.to_vec(), res.iter().map(|r| q(r)).collect()).map_err(CliError::from)
}

fn free_centre(n: usize) -> CliResult<f64> {
    let spec = lattice(BoundaryCondition::Free2D, &[n, n], &["1", "1"])?;
    let c = (n - 1) / 2;
    Ok(spec.closed_form(&[c, c], &[c + 1, c])?)
}

/// Build the full table. `tol` is the relative tolerance for floating-point
/// methods checked against exact values.
pub fn reproduce(tol: f64) -> CliResult<ReproduceReport> {
    use BoundaryCondition::*;
    let mut t = Table { tol, rows: Vec::new() };

    let (r1, r2) = (q("2"), q("3"));
    let four = example_one_network(&r1, &r2);
    let d13 = "4-node network r1=2 r2=3, nodes 1-3";
    t.exact("Example 1", d13, &four, (0, 2), &r1)?;
    t.spectral("Example 1", d13, &four, (0, 2), &Expected::Exact(r1.clone()))?;
    let d12 = "4-node network r1=2 r2=3, nodes 1-2";
    let r12 = example_one_r12_published(&r1, &r2);
    t.exact("Example 1", d12, &four, (0, 1), &r12)?;
    t.spectral("Example 1", d12, &four, (0, 1), &Expected::Exact(r12))?;

    let k6 = Network::complete_graph(6, ExactRational::one())?;
    let dk = "complete graph K6 r=1, nodes 1-6";
    t.exact("Example 2", dk, &k6, (0, 5), &q("1/3"))?;
    t.spectral("Example 2", dk, &k6, (0, 5), &Expected::Exact(q("1/3")))?;

    t.lattice(
        "Example 3",
        &lattice(Free2D, &[5, 4], &["1", "1"])?,
        &[0, 0],
        &[3, 3],
        &sum(&["3/4", "3/5", "9877231/27600540"]),
    )?;
    t.lattice(
        "Example 4",
        &lattice(Free2D, &[4, 4], &["1", "2"])?,
        &[0, 0],
        &[3, 3],
        &example_four_formula(&q("1"), &q("2")),
    )?;

    let half = Expected::Exact(q("1/2"));
    let (c64, c128) = (free_centre(64)?, free_centre(128)?);
    t.approx(
        "Example 5",
        "free2d 64x64 and 128x128 centre bond, extrapolated as (4 R128 - R64)/3",
        "extrapolation",
        (4.0 * c128 - c64) / 3.0,
        &half,
        1e-6,
    );
    let bond = r_infinite_2d(1, 0, 1.0, 1.0)?;
    t.approx(
        "Example 5",
        "infinite square lattice r=s=1 (0,0)->(1,0)",
        "quadrature",
        bond,
        &half,
        1e-7,
    );
    let diag = r_infinite_2d(1, 1, 1.0, 1.0)?;
    t.approx(
        "Example 5",
        "infinite square lattice r=s=1 (0,0)->(1,1)",
        "quadrature",
        diag,
        &Expected::Float(2.0 / PI),
        1e-6,
    );
    let torus = |n| -> CliResult<f64> { Ok(lattice(Periodic2D, &[n, n], &["1", "1"])?.closed_form(&[0, 0], &[1, 1])?) };
    t.approx(
        "Example 5",
        "periodic2d 128x128 and 256x256 (0,0)->(1,1), extrapolated as (4 R256 - R128)/3",
        "extrapolation",
        (4.0 * torus(256)? - torus(128)?) / 3.0,
        &Expected::Float(diag),
        1e-6,
    );

    t.lattice(
        "Example 6",
        &lattice(Periodic2D, &[5, 4], &["1", "1"])?,
        &[0, 0],
        &[3, 3],
        &sum(&["3/10", "3/20", "1799/7790"]),
    )?;
    t.lattice(
        "Example 7",
        &lattice(Cylinder, &[5, 4], &["1", "1"])?,
        &[0, 0],
        &[3, 3],
        &sum(&["3/10", "3/5", "5023/8835"]),
    )?;

    let m22 = lattice(Moebius, &[2, 2], &["1", "1"])?;
    let net = m22.network();
    for a in 0..4 {
        for b in a + 1..4 {
            let (ca, cb) = (m22.coords(a)?, m22.coords(b)?);
            t.exact("Example 8", &m22.describe(&ca, &cb), &net, (a, b), &q("1/2"))?;
        }
    }
    let (ca, cb) = ([0, 0], [1, 1]);
    t.spectral("Example 8", &m22.describe(&ca, &cb), &net, (0, 3), &half)?;
    t.approx(
        "Example 8",
        &m22.describe(&ca, &cb),
        "closed-form",
        m22.closed_form(&ca, &cb)?,
        &half,
        tol,
    );

    t.lattice(
        "Example 9",
        &lattice(Moebius, &[5, 4], &["1", "1"])?,
        &[0, 0],
        &[3, 3],
        &sum(&["3/10", "1609/2698"]),
    )?;
    t.lattice(
        "Example 10",
        &lattice(Klein, &[5, 4], &["1", "1"])?,
        &[0, 0],
        &[3, 3],
        &sum(&["3/10", "5/58", "56/209"]),
    )?;
    t.lattice(
        "Example 11",
        &lattice(Free3D, &[5, 5, 4], &["1", "1", "1"])?,
        &[0, 0, 0],
        &[3, 3, 3],
        &q("327687658482872/352468567489225"),
    )?;

    let cubic = r_infinite_3d(1, 0, 0, 1.0, 1.0, 1.0)?;
    t.approx(
        "Example 12",
        "infinite cubic lattice r=s=t=1 (0,0,0)->(1,0,0)",
        "quadrature",
        cubic,
        &Expected::Exact(q("1/3")),
        1e-6,
    );
    let cubic_diag = r_infinite_3d(1, 1, 0, 1.0, 1.0, 1.0)?;
    let p = |n| periodic_3d_sum(n, (1, 1, 0), (1.0, 1.0, 1.0));
    t.approx(
        "Example 12",
        "infinite cubic lattice r=s=t=1 (0,0,0)->(1,1,0) against 16^3 and 32^3 tori, extrapolated as (8 R32 - R16)/7",
        "quadrature",
        cubic_diag,
        &Expected::Float((8.0 * p(32) - p(16)) / 7.0),
        1e-4,
    );

    let failed = t.rows.iter().filter(|r| !r.pass).count();
    Ok(ReproduceReport {
        tolerance: tol,
        passed: t.rows.len() - failed,
        failed,
        rows: t.rows,
    })
}
