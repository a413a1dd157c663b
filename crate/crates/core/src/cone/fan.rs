use std::fmt;

use super::cone::{faces, intersect, is_strongly_convex, RationalCone};
use crate::lattice::LatticeVector;

/// A finite collection of strongly convex lattice cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    ambient_dim: usize,
    cones: Vec<RationalCone>,
}

impl Fan {
    /// Builds a fan from the given cones as listed; no closure under faces.
    pub fn new(ambient_dim: usize, cones: Vec<RationalCone>) -> Self {
        Self { ambient_dim, cones }
    }

    /// Builds the fan generated by `maximal`: every face of every cone,
    /// deduplicated and sorted by dimension then generators.
    pub fn from_maximal(ambient_dim: usize, maximal: &[RationalCone]) -> Self {
        let mut cones: Vec<RationalCone> = Vec::new();
        for c in maximal {
            match faces(c) {
                Ok(fs) => cones.extend(fs),
                Err(_) => cones.push(c.clone()),
            }
        }
        sort_cones(&mut cones);
        Self { ambient_dim, cones }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn cones(&self) -> &[RationalCone] {
        &self.cones
    }

    /// Primitive ray generators of the one-dimensional cones.
    pub fn rays(&self) -> Vec<LatticeVector> {
        let mut rays: Vec<LatticeVector> = self
            .cones
            .iter()
            .filter(|c| c.dimension() == 1)
            .flat_map(|c| c.generators().to_vec())
            .collect();
        rays.sort();
        rays.dedup();
        rays
    }

    /// Cones not contained as a proper face in another listed cone.
    pub fn maximal_cones(&self) -> Vec<RationalCone> {
        self.cones
            .iter()
            .filter(|c| {
                !self.cones.iter().any(|d| {
                    d != *c && c.generators().iter().all(|g| d.generators().contains(g))
                })
            })
            .cloned()
            .collect()
    }
}

fn sort_cones(cones: &mut Vec<RationalCone>) {
    cones.sort_by(|a, b| a.dimension().cmp(&b.dimension()).then_with(|| a.cmp(b)));
    cones.dedup();
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FanViolation {
    WrongAmbientDimension { cone: RationalCone },
    NotStronglyConvex { cone: RationalCone },
    MissingFace { cone: RationalCone, face: RationalCone },
    IntersectionNotAFace { first: RationalCone, second: RationalCone, intersection: RationalCone },
}

impl fmt::Display for FanViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::WrongAmbientDimension { cone } => write!(f, "{cone} has the wrong ambient dimension"),
            Self::NotStronglyConvex { cone } => write!(f, "{cone} is not strongly convex"),
            Self::MissingFace { cone, face } => write!(f, "face {face} of {cone} is not in the fan"),
            Self::IntersectionNotAFace { first, second, intersection } => write!(
                f,
                "intersection {intersection} of {first} and {second} is not a face of both"
            ),
        }
    }
}

/// Checks the fan axioms; an empty list means the fan is valid.
pub fn validate_fan(fan: &Fan) -> Vec<FanViolation> {
    let mut out = Vec::new();
    let mut face_lists = Vec::new();
    for c in &fan.cones {
        if c.ambient_dim() != fan.ambient_dim {
            out.push(FanViolation::WrongAmbientDimension { cone: c.clone() });
            face_lists.push(None);
            continue;
        }
        if !is_strongly_convex(c) {
            out.push(FanViolation::NotStronglyConvex { cone: c.clone() });
            face_lists.push(None);
            continue;
        }
        let fs = faces(c).expect("strongly convex");
        for face in &fs {
            if !fan.cones.contains(face) {
                out.push(FanViolation::MissingFace {
                    cone: c.clone(),
                    face: face.clone(),
                });
            }
        }
        face_lists.push(Some(fs));
    }
    for i in 0..fan.cones.len() {
        for j in i + 1..fan.cones.len() {
            let (Some(fi), Some(fj)) = (&face_lists[i], &face_lists[j]) else {
                continue;
            };
            let meet = intersect(&fan.cones[i], &fan.cones[j]);
            if !fi.contains(&meet) || !fj.contains(&meet) {
                out.push(FanViolation::IntersectionNotAFace {
                    first: fan.cones[i].clone(),
                    second: fan.cones[j].clone(),
                    intersection: meet,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(gens: &[&[i64]]) -> RationalCone {
        RationalCone::from_i64s(gens[0].len(), gens).unwrap()
    }

    #[test]
    fn projective_line() {
        let fan = Fan::new(1, vec![RationalCone::zero(1), cone(&[&[1]]), cone(&[&[-1]])]);
        assert!(validate_fan(&fan).is_empty());
    }

    #[test]
    fn overlapping_cones_are_rejected() {
        let fan = Fan::from_maximal(2, &[cone(&[&[1, 0], &[1, 2]]), cone(&[&[1, 1], &[0, 1]])]);
        let v = validate_fan(&fan);
        assert!(v.iter().any(|x| matches!(x, FanViolation::IntersectionNotAFace { .. })));
    }

    #[test]
    fn weighted_plane_fan() {
        let fan = Fan::from_maximal(
            2,
            &[
                cone(&[&[1, 0], &[0, 1]]),
                cone(&[&[0, 1], &[-1, -2]]),
                cone(&[&[-1, -2], &[1, 0]]),
            ],
        );
        assert!(validate_fan(&fan).is_empty());
        assert_eq!(fan.cones().len(), 7);
        assert_eq!(fan.maximal_cones().len(), 3);
    }

    #[test]
    fn missing_face_is_reported() {
        let fan = Fan::new(2, vec![RationalCone::zero(2), cone(&[&[1, 0], &[0, 1]])]);
        let v = validate_fan(&fan);
        assert_eq!(v.iter().filter(|x| matches!(x, FanViolation::MissingFace { .. })).count(), 2);
    }

    #[test]
    fn non_convex_cone_is_reported() {
        let fan = Fan::new(1, vec![cone(&[&[1], &[-1]])]);
        assert!(matches!(validate_fan(&fan)[0], FanViolation::NotStronglyConvex { .. }));
    }
}
