use crate::exec::Execution;

/// Neumaier's compensated sum.
pub fn neumaier_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    // An infinite term poisons the compensation with inf − inf.
    if sum.is_finite() {
        sum + comp
    } else {
        sum
    }
}

/// Accumulates `(eigenvalue, contribution)` pairs of a mode sum and reduces
/// them in descending-eigenvalue order with compensation.
///
/// The order is total (equal eigenvalues are ordered by contribution), so the
/// result does not depend on the order in which terms were pushed.
#[derive(Debug, Clone, Default)]
pub struct ModeSum {
    terms: Vec<(f64, f64)>,
}

impl ModeSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        Self {
            terms: Vec::with_capacity(n),
        }
    }

    pub fn push(&mut self, eigenvalue: f64, contribution: f64) {
        self.terms.push((eigenvalue, contribution));
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total(self) -> f64 {
        self.total_with(Execution::Sequential)
    }

    /// [`total`](Self::total) with the ordering sort scheduled by `exec`.
    /// Terms that compare equal are identical, so the result is the same.
    pub fn total_with(mut self, exec: Execution) -> f64 {
        exec.sort_by(&mut self.terms, |a, b| b.0.total_cmp(&a.0).then(a.1.total_cmp(&b.1)));
        neumaier_sum(self.terms.into_iter().map(|(_, c)| c))
    }
}

impl Extend<(f64, f64)> for ModeSum {
    fn extend<T: IntoIterator<Item = (f64, f64)>>(&mut self, iter: T) {
        self.terms.extend(iter);
    }
}

impl FromIterator<(f64, f64)> for ModeSum {
    fn from_iter<T: IntoIterator<Item = (f64, f64)>>(iter: T) -> Self {
        Self {
            terms: iter.into_iter().collect(),
        }
    }
}
