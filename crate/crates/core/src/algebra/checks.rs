use num_bigint::BigUint;

use super::{Element, PolAlgebra};
use crate::report::Report;
use crate::text::render_element;

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

impl PolAlgebra {
    /// `graded_dimension(d)` against the commutative count
    /// `binomial(N + d - 1, d)` for `d <= max_degree`.
    pub fn verify_flatness(&self, max_degree: usize) -> Report {
        let mut report = Report::new("flatness");
        let big_n = self.num_generators();
        for d in 0..=max_degree {
            let got = BigUint::from(self.graded_dimension(d));
            let want = binomial(big_n + d - 1, d);
            report.check(|| format!("graded_dimension(n={}, d={d})", self.rank()), &got, &want, ToString::to_string);
        }
        report
    }

    /// `(e*)* = e` on each element and `(ab)* = b* a*` on consecutive pairs.
    pub fn verify_involution(&self, battery: &[Element]) -> Report {
        let mut report = Report::new("involution");
        for e in battery {
            let back = self.involution(&self.involution(e));
            report.check(|| format!("** on {}", render_element(e)), &back, e, render_element);
        }
        for pair in battery.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            let lhs = self.involution(&self.multiply(a, b));
            let rhs = self.multiply(&self.involution(b), &self.involution(a));
            report.check(
                || format!("({}) ({})", render_element(a), render_element(b)),
                &lhs,
                &rhs,
                render_element,
            );
        }
        report
    }
}
