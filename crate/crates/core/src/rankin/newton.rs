use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::algebra::{ExactRational, MultiPoly, RationalFunction, Var};
use crate::error::{Error, Result};

use super::tensor::TensorHeckeElement;

/// Lower convex hull of `(degree, valuation)` points.
#[derive(Clone, Debug, PartialEq)]
pub struct NewtonPolygon {
    pub points: Vec<(i64, i64)>,
    pub vertices: Vec<(i64, i64)>,
    /// Slopes in increasing order, each with its horizontal length.
    pub slopes: Vec<(ExactRational, i64)>,
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i128 {
    (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
}

impl NewtonPolygon {
    pub fn from_points(points: &[(i64, i64)]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut pts = points.to_vec();
        pts.sort();
        // keep the lowest valuation per degree
        pts.dedup_by(|b, a| a.0 == b.0);
        let mut hull: Vec<(i64, i64)> = Vec::new();
        for &pt in &pts {
            while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], pt) <= 0 {
                hull.pop();
            }
            hull.push(pt);
        }
        let slopes = hull
            .windows(2)
            .map(|w| {
                let dx = w[1].0 - w[0].0;
                (ExactRational::new(w[1].1 - w[0].1, dx).expect("dx > 0"), dx)
            })
            .collect();
        Ok(NewtonPolygon {
            points: pts,
            vertices: hull,
            slopes,
        })
    }

    /// Slopes repeated by multiplicity.
    pub fn slope_list(&self) -> Vec<ExactRational> {
        self.slopes
            .iter()
            .flat_map(|(s, m)| std::iter::repeat_n(s.clone(), *m as usize))
            .collect()
    }

    pub fn all_slopes_integral(&self) -> bool {
        self.slopes.iter().all(|(s, _)| s.is_integer())
    }

    /// Valuation at the largest degree minus valuation at the smallest.
    pub fn height(&self) -> i64 {
        self.points.last().unwrap().1 - self.points[0].1
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("degree,valuation\n");
        for (x, v) in &self.points {
            writeln!(s, "{x},{v}").unwrap();
        }
        s
    }

    /// 40 px per lattice unit, vertical axis flipped, hull as one polyline.
    pub fn to_svg(&self) -> String {
        const UNIT: i64 = 40;
        const PAD: i64 = 20;
        let xmax = self.points.iter().map(|p| p.0).max().unwrap();
        let xmin = self.points.iter().map(|p| p.0).min().unwrap();
        let vmax = self.points.iter().map(|p| p.1).max().unwrap();
        let vmin = self.points.iter().map(|p| p.1).min().unwrap();
        let w = (xmax - xmin) * UNIT + 2 * PAD;
        let h = (vmax - vmin) * UNIT + 2 * PAD;
        let px = |x: i64| (x - xmin) * UNIT + PAD;
        let py = |v: i64| (vmax - v) * UNIT + PAD;
        let mut s = String::new();
        writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
        )
        .unwrap();
        for (x, v) in &self.points {
            writeln!(s, r#"  <circle cx="{}" cy="{}" r="3" fill="black"/>"#, px(*x), py(*v)).unwrap();
        }
        let pts: Vec<String> = self.vertices.iter().map(|(x, v)| format!("{},{}", px(*x), py(*v))).collect();
        writeln!(
            s,
            r#"  <polyline points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
            pts.join(" ")
        )
        .unwrap();
        s.push_str("</svg>\n");
        s
    }
}

/// Polygon of a polynomial in `X` whose coefficients are Laurent in `p`;
/// zero coefficients are skipped.
pub fn newton_polygon_rational(coeffs: &[RationalFunction]) -> Result<NewtonPolygon> {
    let mut pts = Vec::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let v = c
            .p_valuation()
            .ok_or_else(|| Error::InvalidInput(format!("coefficient {i} is not Laurent in p")))?;
        pts.push((i as i64, v));
    }
    NewtonPolygon::from_points(&pts)
}

pub fn newton_polygon_polys(coeffs: &[MultiPoly]) -> Result<NewtonPolygon> {
    let pts: Vec<(i64, i64)> = coeffs
        .iter()
        .enumerate()
        .filter_map(|(i, c)| c.min_degree_in(Var::P).map(|v| (i as i64, v as i64)))
        .collect();
    NewtonPolygon::from_points(&pts)
}

/// Polygon of a polynomial in `X` over the tensor Hecke algebra, with
/// `weights[slot]` the p-weight of each generator.
pub fn newton_polygon_tensor(coeffs: &[TensorHeckeElement], weights: &[i64; 4]) -> Result<NewtonPolygon> {
    let pts: Vec<(i64, i64)> = coeffs
        .iter()
        .enumerate()
        .filter_map(|(i, c)| c.p_valuation(weights).map(|v| (i as i64, v)))
        .collect();
    NewtonPolygon::from_points(&pts)
}

/// `p`-adic Newton polygon of an integer polynomial `Σ c_i X^i`.
pub fn newton_polygon_integers(coeffs: &[BigInt], p: u64) -> Result<NewtonPolygon> {
    let pts: Vec<(i64, i64)> = coeffs
        .iter()
        .enumerate()
        .filter_map(|(i, c)| {
            ExactRational::from_integer(c.clone())
                .padic_valuation(p)
                .map(|v| (i as i64, v))
        })
        .collect();
    NewtonPolygon::from_points(&pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus1_s_valuations() {
        let np = NewtonPolygon::from_points(&[(0, 0), (1, 0), (2, 1), (3, 2), (4, 4)]).unwrap();
        assert_eq!(np.vertices, vec![(0, 0), (1, 0), (3, 2), (4, 4)]);
        let sl: Vec<i64> = np.slope_list().iter().map(|s| s.floor().try_into().unwrap()).collect();
        assert_eq!(sl, vec![0, 1, 1, 2]);
        assert!(np.all_slopes_integral());
        assert_eq!(np.height(), 4);
    }

    #[test]
    fn degenerate_inputs() {
        let np = NewtonPolygon::from_points(&[(3, 5)]).unwrap();
        assert!(np.slopes.is_empty());
        assert_eq!(NewtonPolygon::from_points(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn fractional_slope() {
        let np = NewtonPolygon::from_points(&[(0, 0), (2, 1)]).unwrap();
        assert!(!np.all_slopes_integral());
        assert_eq!(np.slope_list().len(), 2);
    }

    #[test]
    fn svg_and_csv_are_stable() {
        let np = NewtonPolygon::from_points(&[(0, 0), (1, 0), (2, 2)]).unwrap();
        assert_eq!(np.to_csv(), "degree,valuation\n0,0\n1,0\n2,2\n");
        let svg = np.to_svg();
        assert!(svg.contains(r#"points="20,100 60,100 100,20""#));
        assert_eq!(svg.matches("<polyline").count(), 1);
    }
}
