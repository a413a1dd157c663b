use super::action::{ActionData, Mode};
use super::chamber::{chamber_test, ChamberReport};
use super::identify::{identify_wps, WpsIdentification, DEFAULT_MAX_WEIGHT};
use super::invariants::invariant_ring;
use super::polytope::{generator_polytope, quotient_polytope, QuotientPolytope};
use super::unstable::{unstable_locus, UnstableLocus};
use crate::cone::{normal_fan, Fan};
use crate::error::{Error, Result};
use crate::semigroup::{chart_atlas, GradedMonomial, HilbertBasisResult, MonomialAlgebra};

pub const DEFAULT_DEGREE_BOUND: u64 = 8;

/// The same computation in the other mode, for comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeComparison {
    pub other_mode: Mode,
    pub other_generators: Option<Vec<GradedMonomial>>,
    pub other_error: Option<String>,
    pub agrees: bool,
}

/// Everything computed for one action and linearization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientReport {
    pub action: ActionData,
    pub mode: Mode,
    pub generators: HilbertBasisResult,
    /// One chart per generator, in generator order.
    pub charts: Vec<MonomialAlgebra>,
    /// Polynomial mode only.
    pub unstable: Option<UnstableLocus>,
    pub polytope: Option<QuotientPolytope>,
    pub fan: Option<Fan>,
    pub identification: Option<WpsIdentification>,
    pub chamber: ChamberReport,
    pub comparison: ModeComparison,
    pub notes: Vec<String>,
}

impl QuotientReport {
    pub fn format_generators(&self, gens: &[GradedMonomial]) -> String {
        let parts: Vec<String> = gens.iter().map(|g| g.display(self.action.names()).to_string()).collect();
        format!("C[{}]", parts.join(", "))
    }

    pub fn unstable_display(&self) -> Option<String> {
        self.unstable.as_ref().map(|u| u.display(self.action.names()).to_string())
    }
}

/// Runs the whole pipeline: generators, charts, unstable locus, polytope,
/// normal fan, identification and chamber position.
pub fn quotient_report(action: &ActionData, mode: Mode, degree_bound: u64) -> Result<QuotientReport> {
    let generators = invariant_ring(action, mode, degree_bound)?;
    let names = action.names();
    let charts = chart_atlas(names, &generators.generators)?;
    let mut notes = Vec::new();
    if !generators.complete {
        notes.push(format!(
            "generator list may be incomplete: no irreducible elements exist past degree {}, but the bound is {}",
            generators.certificate_degree, degree_bound
        ));
    }

    let unstable = match mode {
        Mode::Polynomial => Some(unstable_locus(action.nvars(), &generators.generators)?),
        Mode::Lattice => None,
    };

    let polytope = match mode {
        Mode::Polynomial => quotient_polytope(action),
        Mode::Lattice => generator_polytope(&generators.generators),
    };
    let polytope = match polytope {
        Ok(p) => Some(p),
        Err(Error::EmptyPolytope) => {
            notes.push("no invariant sections: the quotient is empty".into());
            None
        }
        Err(e) => return Err(e),
    };

    let mut fan = None;
    let mut identification = None;
    if let Some(q) = &polytope {
        let p = &q.polytope;
        if p.ambient_dim() == 0 || p.dimension() == Some(0) {
            notes.push("the quotient is a point".into());
        } else if !p.is_full_dimensional() {
            notes.push(format!(
                "the polytope has dimension {} in a {}-dimensional frame; no fan is built",
                p.dimension().unwrap_or(0),
                p.ambient_dim()
            ));
        } else {
            fan = Some(normal_fan(p)?);
            identification = identify_wps(p, DEFAULT_MAX_WEIGHT)?;
            if identification.is_none() {
                notes.push(format!("not a weighted projective space with weights up to {DEFAULT_MAX_WEIGHT}"));
            }
        }
    }

    let comparison = compare_modes(action, mode, degree_bound, &generators.generators);
    if !comparison.agrees {
        let other = match (&comparison.other_generators, &comparison.other_error) {
            (Some(g), _) => {
                let parts: Vec<String> = g.iter().map(|m| m.display(names).to_string()).collect();
                format!("C[{}]", parts.join(", "))
            }
            (None, Some(e)) => format!("an error ({e})"),
            (None, None) => "nothing".into(),
        };
        let own: Vec<String> = generators.generators.iter().map(|m| m.display(names).to_string()).collect();
        notes.push(format!(
            "{} mode gives C[{}] but {} mode gives {}",
            mode,
            own.join(", "),
            comparison.other_mode,
            other
        ));
    }

    Ok(QuotientReport {
        action: action.clone(),
        mode,
        generators,
        charts,
        unstable,
        polytope,
        fan,
        identification,
        chamber: chamber_test(action),
        comparison,
        notes,
    })
}

fn compare_modes(action: &ActionData, mode: Mode, degree_bound: u64, own: &[GradedMonomial]) -> ModeComparison {
    let other_mode = mode.other();
    match invariant_ring(action, other_mode, degree_bound) {
        Ok(r) => ModeComparison {
            other_mode,
            agrees: r.generators == own,
            other_generators: Some(r.generators),
            other_error: None,
        },
        Err(e) => ModeComparison {
            other_mode,
            other_generators: None,
            other_error: Some(e.to_string()),
            agrees: false,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::validate_fan;
    use crate::quotient::ChamberStatus;

    fn thm(alpha: &[i64]) -> ActionData {
        ActionData::from_i64s(&[&[1, 1, 1, 1], &[0, 0, 1, -1]], alpha).unwrap()
    }

    #[test]
    fn two_torus_report() {
        let r = quotient_report(&thm(&[3, 1]), Mode::Polynomial, 8).unwrap();
        assert_eq!(r.format_generators(&r.generators.generators), "C[X^2Z, XYZ, Y^2Z, Z^2W]");
        assert_eq!(r.charts.len(), 4);
        assert_eq!(r.identification.as_ref().unwrap().name(), "CP_{1,1,2}");
        assert!(validate_fan(r.fan.as_ref().unwrap()).is_empty());
        assert_eq!(r.chamber.status, ChamberStatus::Generic);
        assert_eq!(r.unstable_display().unwrap(), "{Z=0} ∪ {X=Y=W=0}");
    }

    #[test]
    fn degenerate_linearization_in_both_modes() {
        let p = quotient_report(&thm(&[1, 1]), Mode::Polynomial, 8).unwrap();
        assert_eq!(p.format_generators(&p.generators.generators), "C[Z]");
        assert!(p.identification.is_none());
        assert!(!p.comparison.agrees);
        assert!(p.notes.iter().any(|n| n == "the quotient is a point"));
        let l = quotient_report(&thm(&[1, 1]), Mode::Lattice, 8).unwrap();
        assert_eq!(l.charts.len(), 2);
        assert_eq!(l.charts[0].to_string(), "C[ZW/XY]");
        assert_eq!(l.charts[1].to_string(), "C[XY/ZW]");
        assert_eq!(l.identification.as_ref().unwrap().name(), "CP_1");
        assert!(l.unstable.is_none());
    }

    #[test]
    fn empty_quotient() {
        let r = quotient_report(&ActionData::from_i64s(&[&[1, 1]], &[-1]).unwrap(), Mode::Polynomial, 8).unwrap();
        assert!(r.generators.generators.is_empty());
        assert!(r.polytope.is_none());
        assert_eq!(r.unstable_display().unwrap(), "C^2");
    }
}
