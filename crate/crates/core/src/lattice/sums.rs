/// `F_N(ℓ) = (1/N) Σ_{n=1}^{N−1} (1 − cos(ℓnπ/N)) / (1 − cos(nπ/N))`, in
/// closed form. `ℓ` is reduced modulo `2N`.
pub fn f_sum(n: usize, ell: i64) -> f64 {
    assert!(n >= 1, "F_N needs N >= 1");
    let l = ell.rem_euclid(2 * n as i64);
    let n = n as i64;
    (n * l - ((l * l + l) / 2 - l / 2)) as f64 / n as f64
}

/// `G_N(ℓ) = (1/N) Σ_{n=1}^{N−1} (1 − cos(2ℓnπ/N)) / (1 − cos(2nπ/N)) = |ℓ| − ℓ²/N`,
/// with `ℓ` reduced modulo `N`.
pub fn g_sum(n: usize, ell: i64) -> f64 {
    assert!(n >= 1, "G_N needs N >= 1");
    let n = n as i64;
    let l = ell.rem_euclid(n);
    (n * l - l * l) as f64 / n as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn f_direct(n: usize, l: i64) -> f64 {
        let nf = n as f64;
        (1..n)
            .map(|k| {
                let t = k as f64 * PI / nf;
                (1.0 - (l as f64 * t).cos()) / (1.0 - t.cos())
            })
            .sum::<f64>()
            / nf
    }

    #[test]
    fn small_values() {
        assert_eq!(f_sum(7, 0), 0.0);
        assert_eq!(f_sum(5, 1), 0.8);
        assert_eq!(f_sum(4, 2), 1.5);
        assert_eq!(g_sum(9, 0), 0.0);
        assert_eq!(g_sum(5, 1), 0.8);
        assert_eq!(g_sum(4, 2), 1.0);
    }

    #[test]
    fn symmetric_and_periodic() {
        for n in 1..12usize {
            for l in -30..30i64 {
                assert_eq!(f_sum(n, l), f_sum(n, -l));
                assert_eq!(g_sum(n, l), g_sum(n, -l));
                assert_eq!(f_sum(n, l), f_sum(n, l + 2 * n as i64));
            }
        }
    }

    #[test]
    fn matches_defining_sum() {
        for n in 1..20 {
            for l in 0..2 * n as i64 {
                assert!((f_sum(n, l) - f_direct(n, l)).abs() < 1e-11);
            }
        }
    }
}
