use rayon::prelude::*;

use super::action::{ActionData, Mode};
use super::report::{quotient_report, QuotientReport};
use crate::error::{Error, Result};
use crate::lattice::LatticeVector;

/// Linearizations sharing one unstable locus, with the full report of a
/// representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepGroup {
    pub representative: LatticeVector,
    pub members: Vec<LatticeVector>,
    pub report: QuotientReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepResult {
    pub groups: Vec<SweepGroup>,
    pub failures: Vec<(LatticeVector, Error)>,
}

/// All `α` in the box `lo_i <= α_i <= hi_i`, in lex order.
pub fn box_points(ranges: &[(i64, i64)]) -> Vec<LatticeVector> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for &(lo, hi) in ranges {
        out = out
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.iter().map(|p| LatticeVector::from_i64s(p)).collect()
}

/// Runs the pipeline for every `α` in the box and groups the results by
/// unstable locus (lattice mode: one group per `α`).
///
/// Groups are ordered by unstable-locus dimension (empty locus first), then
/// component count, then representative. The representative is the first
/// member with an integral polytope, or the first member if none has one.
/// Per-`α` errors are collected in `failures`.
pub fn sweep(base: &ActionData, ranges: &[(i64, i64)], mode: Mode, degree_bound: u64) -> Result<SweepResult> {
    if ranges.len() != base.rank() {
        return Err(Error::DimensionMismatch {
            expected: base.rank(),
            found: ranges.len(),
        });
    }
    let alphas = box_points(ranges);
    let results: Vec<(LatticeVector, Result<QuotientReport>)> = alphas
        .into_par_iter()
        .map(|alpha| {
            let r = base
                .with_alpha(alpha.clone())
                .and_then(|a| quotient_report(&a, mode, degree_bound));
            (alpha, r)
        })
        .collect();

    let mut failures = Vec::new();
    let mut buckets: Vec<Vec<(LatticeVector, QuotientReport)>> = Vec::new();
    for (alpha, r) in results {
        match r {
            Ok(report) => {
                let slot = match mode {
                    Mode::Polynomial => buckets
                        .iter()
                        .position(|b| b[0].1.unstable == report.unstable),
                    Mode::Lattice => None,
                };
                match slot {
                    Some(i) => buckets[i].push((alpha, report)),
                    None => buckets.push(vec![(alpha, report)]),
                }
            }
            Err(e) => {
                log::debug!("sweep: α = {alpha} failed: {e}");
                failures.push((alpha, e));
            }
        }
    }

    let mut groups: Vec<SweepGroup> = buckets
        .into_iter()
        .map(|bucket| {
            let members: Vec<LatticeVector> = bucket.iter().map(|(a, _)| a.clone()).collect();
            let pick = bucket
                .iter()
                .position(|(_, r)| r.polytope.as_ref().is_some_and(|q| q.polytope.is_integral()))
                .unwrap_or(0);
            let (representative, report) = bucket.into_iter().nth(pick).expect("nonempty bucket");
            SweepGroup {
                representative,
                members,
                report,
            }
        })
        .collect();
    groups.sort_by_key(group_key);
    Ok(SweepResult { groups, failures })
}

fn group_key(g: &SweepGroup) -> (Option<usize>, usize, LatticeVector) {
    let (dim, count) = match &g.report.unstable {
        Some(u) => (u.dimension(), u.components().len()),
        None => (None, 0),
    };
    (dim, count, g.representative.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> ActionData {
        ActionData::from_i64s(&[&[1, 1, 1, 1], &[0, 0, 1, -1]], &[0, 0]).unwrap()
    }

    #[test]
    fn box_enumeration() {
        assert_eq!(box_points(&[(0, 1), (5, 5)]), vec![LatticeVector::from([0, 5]), LatticeVector::from([1, 5])]);
        assert!(box_points(&[(1, 0)]).is_empty());
    }

    #[test]
    fn empty_box() {
        let r = sweep(&base(), &[(1, 0), (0, 0)], Mode::Polynomial, 8).unwrap();
        assert!(r.groups.is_empty() && r.failures.is_empty());
        assert!(sweep(&base(), &[(1, 1)], Mode::Polynomial, 8).is_err());
    }

    #[test]
    fn small_sweep_groups_by_locus() {
        let r = sweep(&base(), &[(3, 3), (1, 1)], Mode::Polynomial, 8).unwrap();
        assert_eq!(r.groups.len(), 1);
        assert_eq!(r.groups[0].report.identification.as_ref().unwrap().name(), "CP_{1,1,2}");
    }
}
