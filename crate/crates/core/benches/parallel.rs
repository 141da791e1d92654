use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use resistnet_core::exact::resistance_matrix_exact;
use resistnet_core::identities::r_infinite_3d_with;
use resistnet_core::{decompose, BoundaryCondition, ExactRational, Execution, LatticeSpec};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn unit_lattice(bc: BoundaryCondition, dims: &[usize]) -> LatticeSpec {
    LatticeSpec::new(bc, dims.to_vec(), vec![ExactRational::one(); dims.len()]).unwrap()
}

fn spectral_table(c: &mut Criterion) {
    let spec = unit_lattice(BoundaryCondition::Klein, &[12, 10]);
    let spectrum = decompose(&spec.network().laplacian()).unwrap();
    let mut group = c.benchmark_group("spectral_all_pairs_klein_12x10");
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| black_box(spectrum.resistance_matrix_with(exec).unwrap()))
        });
    }
    group.finish();
}

fn closed_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("closed_form_far_corner");
    for (bc, dims) in [
        (BoundaryCondition::Free2D, vec![400, 300]),
        (BoundaryCondition::Moebius, vec![400, 300]),
        (BoundaryCondition::Free3D, vec![60, 50, 40]),
    ] {
        let spec = unit_lattice(bc, &dims);
        let far: Vec<usize> = dims.iter().map(|m| m - 1).collect();
        let origin = vec![0; dims.len()];
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, bc), &spec, |b, s| {
                b.iter(|| black_box(s.closed_form_with(&origin, &far, exec).unwrap()))
            });
        }
    }
    group.finish();
}

fn exact_table(c: &mut Criterion) {
    let net = unit_lattice(BoundaryCondition::Free3D, &[3, 3, 3]).network();
    let mut group = c.benchmark_group("exact_all_pairs_cube_3x3x3");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| black_box(resistance_matrix_exact(&net, exec).unwrap()))
        });
    }
    group.finish();
}

fn infinite_cubic(c: &mut Criterion) {
    let mut group = c.benchmark_group("infinite_cubic_2_1_1");
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| black_box(r_infinite_3d_with(2, 1, 1, 1.0, 1.0, 1.0, exec).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, spectral_table, closed_form, exact_table, infinite_cubic);
criterion_main!(benches);
