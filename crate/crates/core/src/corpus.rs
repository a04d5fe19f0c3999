//! The cross-realization corpus behind `selfcheck`.

use num_integer::Integer;

use crate::error::Result;
use crate::graph::AdeKind;
use crate::report::{compute_report, ObstructionReport, Verdict};
use crate::spec::SingularitySpec;

/// 100 specs: A_1..A_20, D_4..D_12, E_6..E_8, 57 cyclic quotients with
/// n = 2..58, and x²+y³+z^m for m ≤ 35 coprime to 6.
pub fn selfcheck_corpus() -> Vec<SingularitySpec> {
    let mut specs = Vec::with_capacity(100);
    let valid = "corpus parameters are in range";
    specs.extend((1..=20).map(|n| SingularitySpec::ade(AdeKind::A, n).expect(valid)));
    specs.extend((4..=12).map(|n| SingularitySpec::ade(AdeKind::D, n).expect(valid)));
    specs.extend((6..=8).map(|n| SingularitySpec::ade(AdeKind::E, n).expect(valid)));
    for n in 2u64..=58 {
        // smallest q ≥ 2n/5 coprime to n; hits 1/5(1,2)
        let q = ((2 * n).div_ceil(5)..n)
            .find(|q| q.gcd(&n) == 1)
            .expect("n - 1 is coprime to n");
        specs.push(SingularitySpec::cyclic_quotient(n, q).expect(valid));
    }
    specs.extend(
        (5u64..=35)
            .filter(|m| m.gcd(&6) == 1)
            .map(|m| SingularitySpec::brieskorn_pham(2, 3, m).expect(valid)),
    );
    specs
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfCheck {
    pub reports: Vec<ObstructionReport>,
}

impl SelfCheck {
    pub fn mismatches(&self) -> impl Iterator<Item = &ObstructionReport> {
        self.reports
            .iter()
            .filter(|r| r.verdict == Verdict::Mismatch)
    }

    pub fn passed(&self) -> bool {
        self.mismatches().next().is_none()
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.reports.iter().filter(|r| r.verdict == verdict).count()
    }
}

/// Computes every corpus report. Specs are independent, so they are spread
/// over scoped threads; the result keeps corpus order.
pub fn run_selfcheck(specs: &[SingularitySpec]) -> Result<SelfCheck> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = specs.len().div_ceil(workers).max(1);
    let results: Vec<Result<Vec<ObstructionReport>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = specs
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(compute_report).collect()))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("report computation panicked"))
            .collect()
    });
    let mut reports = Vec::with_capacity(specs.len());
    for part in results {
        reports.extend(part?);
    }
    Ok(SelfCheck { reports })
}
