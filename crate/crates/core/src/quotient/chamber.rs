use super::action::ActionData;
use crate::cone::{intersect, RationalCone};
use crate::lattice::rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChamberStatus {
    /// Strictly inside a full-dimensional chamber: semistable = stable.
    Generic,
    /// On at least one wall.
    OnWall,
    /// Outside the cone spanned by the columns: nothing is semistable.
    Outside,
}

impl ChamberStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ChamberStatus::Generic => "generic",
            ChamberStatus::OnWall => "on_wall",
            ChamberStatus::Outside => "outside",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberReport {
    pub status: ChamberStatus,
    /// Column subsets (of size `r - 1`) whose cones contain `α`.
    pub walls_hit: Vec<Vec<usize>>,
    /// The chamber containing `α` when it is generic.
    pub chamber: Option<RationalCone>,
}

/// Locates `α` in the wall-and-chamber decomposition of `R^r` cut out by the
/// cones on `r - 1` linearly independent columns of `A`.
pub fn chamber_test(action: &ActionData) -> ChamberReport {
    let a = action.matrix();
    let r = a.nrows();
    let cols = a.columns();
    let alpha = action.alpha();
    let cone_on = |subset: &[usize]| -> RationalCone {
        RationalCone::new(r, subset.iter().map(|&j| cols[j].clone()).collect()).expect("dimensions agree")
    };
    let rank_of = |subset: &[usize]| -> usize {
        let rows: Vec<_> = subset.iter().map(|&j| cols[j].to_vec()).collect();
        rational::rank_int(&rows)
    };

    let walls_hit: Vec<Vec<usize>> = subsets(cols.len(), r - 1)
        .filter(|s| rank_of(s) == r - 1 && cone_on(s).contains(alpha))
        .collect();
    if !walls_hit.is_empty() {
        return ChamberReport {
            status: ChamberStatus::OnWall,
            walls_hit,
            chamber: None,
        };
    }
    let chamber = subsets(cols.len(), r)
        .filter(|s| rank_of(s) == r)
        .map(|s| cone_on(&s))
        .filter(|c| c.contains(alpha))
        .reduce(|acc, c| intersect(&acc, &c));
    ChamberReport {
        status: if chamber.is_some() {
            ChamberStatus::Generic
        } else {
            ChamberStatus::Outside
        },
        walls_hit,
        chamber,
    }
}

fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if next[i] < n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                cur = Some(next);
                break;
            }
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn thm(alpha: &[i64]) -> ActionData {
        ActionData::from_i64s(&[&[1, 1, 1, 1], &[0, 0, 1, -1]], alpha).unwrap()
    }

    #[test]
    fn interior_linearization() {
        let c = chamber_test(&thm(&[3, 1]));
        assert_eq!(c.status, ChamberStatus::Generic);
        assert_eq!(c.chamber.unwrap(), RationalCone::from_i64s(2, &[&[1, 0], &[1, 1]]).unwrap());
    }

    #[test]
    fn linearization_on_a_column_is_on_a_wall() {
        let c = chamber_test(&thm(&[1, 1]));
        assert_eq!(c.status, ChamberStatus::OnWall);
        assert_eq!(c.walls_hit, vec![vec![2]]);
        let d = chamber_test(&thm(&[2, 0]));
        assert_eq!(d.walls_hit, vec![vec![0], vec![1]]);
    }

    #[test]
    fn rank_one_actions() {
        let a = ActionData::from_i64s(&[&[1, 1, 2]], &[2]).unwrap();
        assert_eq!(chamber_test(&a).status, ChamberStatus::Generic);
        let b = ActionData::from_i64s(&[&[1, 1, 2]], &[-1]).unwrap();
        assert_eq!(chamber_test(&b).status, ChamberStatus::Outside);
        let z = ActionData::from_i64s(&[&[1, 1, 2]], &[0]).unwrap();
        assert_eq!(chamber_test(&z).walls_hit, vec![Vec::<usize>::new()]);
        let out = ActionData::from_i64s(&[&[1, 1, 1, 1], &[0, 0, 1, -1]], &[1, 3]).unwrap();
        assert_eq!(chamber_test(&out).status, ChamberStatus::Outside);
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(3, 2).collect::<Vec<_>>(), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(2, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(subsets(1, 2).count(), 0);
    }
}
