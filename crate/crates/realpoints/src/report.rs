//! Structured text reports with stable key order.
//!
//! Exact values (fractions, coefficient lists) are authoritative; decimal
//! renderings are advisory only. The format round-trips: a written report
//! can be re-read and its boxes re-verified against the input system
//! offline.

use crate::interval::RatInterval;
use crate::poly::{parse_polynomial, Polynomial, Ring};
use crate::sampler::{DepthStatus, SampleReport};
use crate::upoly::UPoly;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("line {0}: malformed report entry: {1}")]
    Malformed(usize, String),
    #[error("missing section: {0}")]
    Missing(&'static str),
}

fn approx(x: &BigRational) -> f64 {
    let n = x.numer().to_f64().unwrap_or(f64::NAN);
    let d = x.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

fn coeff_list(p: &UPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

/// Renders a sample report as deterministic structured text.
pub fn render_sample_report(report: &SampleReport, ring: &Ring) -> String {
    let mut w = String::new();
    let _ = writeln!(w, "realpoints sample report v1");
    let _ = writeln!(w, "seed: {}", report.seed);
    let _ = writeln!(w, "width: {}", report.width);
    let _ = writeln!(w, "vars: {}", ring.var_names().join(" "));
    for p in &report.input_polys {
        let _ = writeln!(w, "input: {}", p);
    }
    let _ = writeln!(w, "dimension: {}", report.dimension);
    let _ = writeln!(w, "component-bound: {}", report.component_bound);
    for d in &report.depths {
        let _ = writeln!(w, "depth: {}", d.depth);
        match &d.status {
            DepthStatus::ZeroDimensional { degree } => {
                let _ = writeln!(w, "  status: zero-dimensional");
                let _ = writeln!(w, "  degree: {}", degree);
            }
            DepthStatus::Inconsistent => {
                let _ = writeln!(w, "  status: inconsistent");
            }
        }
        let _ = writeln!(w, "  retries: {}", d.retries);
        let _ = writeln!(w, "  bound: {}", d.bound);
        let _ = writeln!(w, "  real-points: {}", d.real_points);
        if let Some(param) = &d.parameterization {
            let _ = writeln!(
                w,
                "  separating-form: {}",
                param.separating.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
            );
            let _ = writeln!(w, "  f: {}", coeff_list(&param.f));
            let _ = writeln!(w, "  q0: {}", coeff_list(&param.q0));
            for (name, q) in param.coord_names.iter().zip(&param.coords) {
                let _ = writeln!(w, "  q[{}]: {}", name, coeff_list(q));
            }
        }
        if let Some(agree) = d.cross_check_agreed {
            let _ = writeln!(w, "  cross-check: {}", if agree { "agreed" } else { "DISAGREED" });
        }
    }
    for (i, p) in report.points.iter().enumerate() {
        let _ = writeln!(w, "point: {}", i);
        let _ = writeln!(w, "  depth: {}", p.fiber_depth);
        let _ = writeln!(w, "  root: {} {}", p.root.lo, p.root.hi);
        for (name, iv) in ring.var_names().iter().zip(&p.coords) {
            let _ = writeln!(
                w,
                "  coord[{}]: {} {} ~ {:.6}",
                name,
                iv.lo,
                iv.hi,
                approx(&iv.midpoint())
            );
        }
        let _ = writeln!(w, "  on-variety: {}", p.on_variety);
        let _ = writeln!(w, "  membership: {}", p.membership);
    }
    let _ = writeln!(w, "total-points: {}", report.points.len());
    w
}

/// The re-readable subset of a report: the input system and the boxes.
#[derive(Clone, Debug)]
pub struct ParsedReport {
    pub ring: Ring,
    pub input_polys: Vec<Polynomial>,
    pub points: Vec<Vec<RatInterval>>,
    pub total_points: usize,
}

fn parse_rat(s: &str, line: usize) -> Result<BigRational, ReportError> {
    s.parse()
        .map_err(|_| ReportError::Malformed(line, format!("bad rational `{}`", s)))
}

/// Parses the output of [`render_sample_report`] back into its verifiable
/// parts.
pub fn parse_sample_report(text: &str) -> Result<ParsedReport, ReportError> {
    let mut ring: Option<Ring> = None;
    let mut inputs: Vec<String> = Vec::new();
    let mut points: Vec<Vec<RatInterval>> = Vec::new();
    let mut total: Option<usize> = None;
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix("vars:") {
            ring = Some(Ring::new(
                rest.split_whitespace().map(str::to_string).collect::<Vec<_>>(),
            ));
        } else if let Some(rest) = line.strip_prefix("input:") {
            inputs.push(rest.trim().to_string());
        } else if line.strip_prefix("point:").is_some() {
            points.push(Vec::new());
        } else if let Some(rest) = line.strip_prefix("coord[") {
            let Some((_, tail)) = rest.split_once("]:") else {
                return Err(ReportError::Malformed(ln + 1, line.to_string()));
            };
            let exact: Vec<&str> = tail.split('~').next().unwrap().split_whitespace().collect();
            if exact.len() != 2 {
                return Err(ReportError::Malformed(ln + 1, line.to_string()));
            }
            let lo = parse_rat(exact[0], ln + 1)?;
            let hi = parse_rat(exact[1], ln + 1)?;
            let Some(last) = points.last_mut() else {
                return Err(ReportError::Malformed(ln + 1, "coord outside point".into()));
            };
            last.push(RatInterval::new(lo, hi));
        } else if let Some(rest) = line.strip_prefix("total-points:") {
            total = rest.trim().parse().ok();
        }
    }
    let ring = ring.ok_or(ReportError::Missing("vars"))?;
    if inputs.is_empty() {
        return Err(ReportError::Missing("input"));
    }
    let input_polys = inputs
        .iter()
        .map(|t| {
            parse_polynomial(t, &ring)
                .map_err(|e| ReportError::Malformed(0, format!("input poly: {}", e)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let total_points = total.ok_or(ReportError::Missing("total-points"))?;
    Ok(ParsedReport { ring, input_polys, points, total_points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::eval_poly_box;
    use crate::lagrange::InputSystem;
    use crate::sampler::sample_real_points;

    #[test]
    fn report_round_trips_and_reverifies() {
        let ring = Ring::new(vec!["x", "y"]);
        let f = parse_polynomial("x^2 + y^2 - 1", &ring).unwrap();
        let input = InputSystem::new(vec![f], true, true).unwrap();
        let width = BigRational::new(1.into(), 4096.into());
        let report = sample_real_points(&input, 42, &width).unwrap();
        let text = render_sample_report(&report, &ring);
        let parsed = parse_sample_report(&text).unwrap();
        assert_eq!(parsed.total_points, report.points.len());
        assert_eq!(parsed.points.len(), report.points.len());
        for cube in &parsed.points {
            for g in &parsed.input_polys {
                assert!(eval_poly_box(g, cube).contains_zero());
            }
        }
    }

    #[test]
    fn deterministic_output() {
        let ring = Ring::new(vec!["x", "y"]);
        let f = parse_polynomial("x^2 + y^2 - 1", &ring).unwrap();
        let input = InputSystem::new(vec![f], true, true).unwrap();
        let width = BigRational::new(1.into(), 4096.into());
        let a = render_sample_report(&sample_real_points(&input, 5, &width).unwrap(), &ring);
        let b = render_sample_report(&sample_real_points(&input, 5, &width).unwrap(), &ring);
        assert_eq!(a, b);
    }
}
