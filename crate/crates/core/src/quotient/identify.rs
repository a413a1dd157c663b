use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cone::{lattice_equivalent, normal_fan, LatticePolytope, UnimodularAffineMap};
use crate::error::{Error, Result};
use crate::lattice::polyhedron::rational_root;
use crate::lattice::rational;
use crate::wps::{wps_polytope, WeightVector};

pub const DEFAULT_MAX_WEIGHT: u64 = 12;

/// A polytope recognized as a dilate of a weighted projective space
/// polytope: `witness` maps `source_scale · P` onto `target_scale · Q`,
/// where `Q = wps_polytope(weights)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WpsIdentification {
    pub weights: WeightVector,
    pub witness: UnimodularAffineMap,
    pub source_scale: BigInt,
    pub target_scale: BigInt,
}

impl WpsIdentification {
    pub fn name(&self) -> String {
        self.weights.name()
    }
}

/// Recognizes `p` as a dilate of `wps_polytope(w)` for some `w` with entries
/// at most `max_weight`.
///
/// Such a `p` is a simplex whose facet normals satisfy the linear relation
/// `Σ w_i u_i = 0`, which pins `w` down up to order; the weights are then
/// sorted and the equivalence is verified with an explicit witness.
pub fn identify_wps(p: &LatticePolytope, max_weight: u64) -> Result<Option<WpsIdentification>> {
    let k = p.ambient_dim();
    if k == 0 || !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            dim: p.dimension().unwrap_or(0),
            ambient: k,
        });
    }
    if p.vertices().len() != k + 1 {
        return Ok(None);
    }
    let rays = normal_fan(p)?.rays();
    // Columns are rays.
    let rows: Vec<Vec<BigInt>> = (0..k).map(|i| rays.iter().map(|r| r[i].clone()).collect()).collect();
    let kernel = rational::kernel_basis(&rows, rays.len());
    let [relation] = kernel.as_slice() else {
        return Ok(None);
    };
    let relation = if relation.iter().all(|x| x.is_negative()) {
        -relation
    } else {
        relation.clone()
    };
    if relation.iter().any(|x| !x.is_positive()) {
        return Ok(None);
    }
    let mut weights = Vec::with_capacity(relation.dim());
    for x in relation.iter() {
        match u64::try_from(x) {
            Ok(v) if v <= max_weight => weights.push(v),
            _ => return Ok(None),
        }
    }
    weights.sort_unstable();
    let weights = WeightVector::new(weights)?;
    let q = wps_polytope(&weights)?;

    let denom = p.denominator();
    let p_int = p.dilate(&rational::rat(&denom));
    let (Some(vp), Some(vq)) = (p_int.simplex_volume(), q.simplex_volume()) else {
        return Ok(None);
    };
    if vq.is_zero() {
        return Ok(None);
    }
    let Some(c) = rational_root(&(vp / vq), k as u32) else {
        return Ok(None);
    };
    let (t, s) = (c.numer().clone(), c.denom().clone());
    let source = p_int.dilate(&rational::rat(&s));
    let target = q.dilate(&rational::rat(&t));
    Ok(lattice_equivalent(&source, &target)?.map(|witness| WpsIdentification {
        weights,
        witness,
        source_scale: denom * s,
        target_scale: t,
    }))
}
