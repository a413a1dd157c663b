use std::cmp::Ordering;
use std::fmt::Write as _;

use gitquot::report::point_label;
use gitquot::{QuotientReport, Rat};
use num_traits::{Signed, ToPrimitive, Zero};

const UNIT: f64 = 80.0;
const MARGIN: f64 = 60.0;

fn planar(v: &[Rat]) -> (Rat, Rat) {
    let get = |i: usize| v.get(i).cloned().unwrap_or_else(Rat::zero);
    (get(0), get(1))
}

/// Counterclockwise order around the centroid, decided exactly.
fn angular_order(points: &mut [(Rat, Rat)]) {
    if points.len() < 3 {
        return;
    }
    let n = Rat::from_integer(points.len().into());
    let cx = points.iter().map(|p| p.0.clone()).sum::<Rat>() / &n;
    let cy = points.iter().map(|p| p.1.clone()).sum::<Rat>() / &n;
    let half = |x: &Rat, y: &Rat| -> u8 {
        if y.is_positive() || (y.is_zero() && x.is_positive()) {
            0
        } else {
            1
        }
    };
    points.sort_by(|a, b| {
        let (ax, ay) = (&a.0 - &cx, &a.1 - &cy);
        let (bx, by) = (&b.0 - &cx, &b.1 - &cy);
        half(&ax, &ay).cmp(&half(&bx, &by)).then_with(|| {
            let cross = &ax * &by - &ay * &bx;
            if cross.is_positive() {
                Ordering::Less
            } else if cross.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        })
    });
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// The moment polytope with its lattice points labelled by monomials.
/// Returns `None` when there is no polytope or it lives in more than two
/// dimensions.
pub fn render_svg(report: &QuotientReport) -> Option<String> {
    let q = report.polytope.as_ref()?;
    if q.polytope.ambient_dim() > 2 {
        return None;
    }
    let mut verts: Vec<(Rat, Rat)> = q.polytope.vertices().iter().map(|v| planar(v)).collect();
    angular_order(&mut verts);
    let points = q.polytope.lattice_points().unwrap_or_default();
    let to_f = |x: &Rat| x.to_f64().unwrap_or(0.0);
    let xs: Vec<f64> = verts.iter().map(|p| to_f(&p.0)).collect();
    let ys: Vec<f64> = verts.iter().map(|p| to_f(&p.1)).collect();
    let (min_x, max_x) = xs.iter().fold((f64::MAX, f64::MIN), |(a, b), &x| (a.min(x), b.max(x)));
    let (min_y, max_y) = ys.iter().fold((f64::MAX, f64::MIN), |(a, b), &y| (a.min(y), b.max(y)));
    let width = (max_x - min_x) * UNIT + 2.0 * MARGIN;
    let height = (max_y - min_y) * UNIT + 2.0 * MARGIN;
    let px = |x: f64| (x - min_x) * UNIT + MARGIN;
    let py = |y: f64| height - ((y - min_y) * UNIT + MARGIN);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let m = verts.len();
    let edges = match m {
        0 | 1 => 0,
        2 => 1,
        _ => m,
    };
    for i in 0..edges {
        let (a, b) = (&verts[i], &verts[(i + 1) % m]);
        let _ = writeln!(
            s,
            r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="black" stroke-width="2"/>"#,
            px(to_f(&a.0)),
            py(to_f(&a.1)),
            px(to_f(&b.0)),
            py(to_f(&b.1))
        );
    }
    for p in &points {
        let coords: Vec<Rat> = p.iter().map(|x| Rat::from_integer(x.clone())).collect();
        let (x, y) = planar(&coords);
        let (cx, cy) = (px(to_f(&x)), py(to_f(&y)));
        let _ = writeln!(s, r#"<circle cx="{cx:.1}" cy="{cy:.1}" r="4" fill="black"/>"#);
        if let Some(label) = point_label(report, p) {
            let _ = writeln!(
                s,
                r#"<text x="{:.1}" y="{:.1}" font-family="serif" font-size="16">{}</text>"#,
                cx + 6.0,
                cy + 18.0,
                escape(&label)
            );
        }
    }
    s.push_str("</svg>\n");
    Some(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_ordering() {
        let r = |x: i64| Rat::from_integer(x.into());
        let mut pts = vec![(r(0), r(0)), (r(1), r(1)), (r(1), r(0)), (r(0), r(1))];
        angular_order(&mut pts);
        // Around the centre (1/2, 1/2), starting in the upper half-plane.
        assert_eq!(pts, vec![(r(1), r(1)), (r(0), r(1)), (r(0), r(0)), (r(1), r(0))]);
    }
}
