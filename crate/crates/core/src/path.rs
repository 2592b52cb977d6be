//! Piecewise-smooth paths in the punctured plane and integration of the
//! standard 1-forms along them.
//!
//! The branch of ∫ dz/z is tracked by accumulation: each segment is chopped
//! into pieces short enough that the argument change per piece is
//! unambiguous, and the principal logarithm increments are summed. No
//! principal-branch snapping ever happens across pieces, so winding is
//! preserved exactly — this is what the monodromy computation leans on.
//!
//! Segment contributions are evaluated in a canonical orientation and summed
//! in a canonical order, which makes orientation reversal an exact sign flip
//! at the floating-point level.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quad::{quad_finite_sided, QuadPoint, QuadValue, QuadratureConfig};
use crate::series::SeriesModel;

/// One smooth piece of a path: a straight segment or a circular arc.
#[derive(Debug, Clone)]
pub enum PathSegment {
    Line { start: Complex64, end: Complex64 },
    Arc {
        center: Complex64,
        radius: f64,
        angle_start: f64,
        angle_end: f64,
    },
}

impl PathSegment {
    pub fn line(start: Complex64, end: Complex64) -> Self {
        PathSegment::Line { start, end }
    }

    pub fn arc(center: Complex64, radius: f64, angle_start: f64, angle_end: f64) -> Self {
        PathSegment::Arc {
            center,
            radius,
            angle_start,
            angle_end,
        }
    }

    pub fn start(&self) -> Complex64 {
        match self {
            PathSegment::Line { start, .. } => *start,
            PathSegment::Arc {
                center,
                radius,
                angle_start,
                ..
            } => center + Complex64::from_polar(*radius, *angle_start),
        }
    }

    pub fn end(&self) -> Complex64 {
        match self {
            PathSegment::Line { end, .. } => *end,
            PathSegment::Arc {
                center,
                radius,
                angle_end,
                ..
            } => center + Complex64::from_polar(*radius, *angle_end),
        }
    }

    /// Point at local parameter t ∈ [0,1] (affine in t, or affine in angle).
    pub fn point(&self, t: f64) -> Complex64 {
        match self {
            PathSegment::Line { start, end } => start + (end - start) * t,
            PathSegment::Arc {
                center,
                radius,
                angle_start,
                angle_end,
            } => {
                let theta = angle_start + (angle_end - angle_start) * t;
                center + Complex64::from_polar(*radius, theta)
            }
        }
    }

    /// dγ/dt at local parameter t.
    pub fn velocity(&self, t: f64) -> Complex64 {
        match self {
            PathSegment::Line { start, end } => end - start,
            PathSegment::Arc {
                center: _,
                radius,
                angle_start,
                angle_end,
            } => {
                let span = angle_end - angle_start;
                let theta = angle_start + span * t;
                Complex64::new(0.0, span) * Complex64::from_polar(*radius, theta)
            }
        }
    }

    pub fn reversed(&self) -> PathSegment {
        match self {
            PathSegment::Line { start, end } => PathSegment::Line {
                start: *end,
                end: *start,
            },
            PathSegment::Arc {
                center,
                radius,
                angle_start,
                angle_end,
            } => PathSegment::Arc {
                center: *center,
                radius: *radius,
                angle_start: *angle_end,
                angle_end: *angle_start,
            },
        }
    }

    fn chord_length(&self) -> f64 {
        match self {
            PathSegment::Line { start, end } => (end - start).norm(),
            PathSegment::Arc {
                radius,
                angle_start,
                angle_end,
                ..
            } => radius * (angle_end - angle_start).abs(),
        }
    }

    /// Minimum distance from the segment to a point, sampled densely
    /// (used only to validate that paths avoid 0 and 1).
    fn min_distance_to(&self, p: Complex64) -> f64 {
        let n = 256;
        let mut best = f64::INFINITY;
        for j in 0..=n {
            let t = j as f64 / n as f64;
            best = best.min((self.point(t) - p).norm());
        }
        best
    }
}

/// The standard integrable 1-forms on the punctured plane.
#[derive(Debug, Clone)]
pub enum FormSpec {
    /// dz/z
    DzOverZ,
    /// dz/(1−z)
    DzOver1MinusZ,
    /// dz
    Dz,
    /// F(z)·dz/z for a series model F
    SeriesWeighted(SeriesModel),
}

impl FormSpec {
    /// Pointwise density ω(z) with ω = density·dz.
    pub fn density(&self, z: Complex64) -> Result<Complex64> {
        Ok(match self {
            FormSpec::DzOverZ => 1.0 / z,
            FormSpec::DzOver1MinusZ => 1.0 / (Complex64::new(1.0, 0.0) - z),
            FormSpec::Dz => Complex64::new(1.0, 0.0),
            FormSpec::SeriesWeighted(f) => f.eval_tol(z, 1e-12)? / z,
        })
    }
}

/// An oriented piecewise-smooth path.
#[derive(Debug, Clone)]
pub struct Path {
    pub segments: Vec<PathSegment>,
}

const CONTINUITY_TOL: f64 = 1e-12;

impl Path {
    pub fn new(segments: Vec<PathSegment>) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::InvalidConfig("path needs at least one segment".into()));
        }
        for w in segments.windows(2) {
            let gap = (w[0].end() - w[1].start()).norm();
            if gap > CONTINUITY_TOL * (1.0 + w[0].end().norm()) {
                return Err(Error::DiscontinuousConcat(w[0].end(), w[1].start()));
            }
        }
        // interior points must avoid 0 and 1 (tangential endpoints allowed)
        for seg in &segments {
            for p in [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)] {
                let d = seg.min_distance_to(p);
                if d < 1e-13 {
                    let at_endpoint = (seg.start() - p).norm() < 1e-12
                        || (seg.end() - p).norm() < 1e-12;
                    if !at_endpoint {
                        return Err(Error::PathThroughSingularity);
                    }
                }
            }
        }
        Ok(Self { segments })
    }

    pub fn line(from: Complex64, to: Complex64) -> Result<Self> {
        Self::new(vec![PathSegment::line(from, to)])
    }

    /// Straight path 0 → w.
    pub fn segment_to(w: Complex64) -> Result<Self> {
        Self::line(Complex64::new(0.0, 0.0), w)
    }

    /// Circle of radius r about the point c, traversed positively starting
    /// and ending at c − r (angles π → 3π).
    pub fn loop_about(c: Complex64, r: f64) -> Result<Self> {
        Self::new(vec![PathSegment::arc(c, r, PI, 3.0 * PI)])
    }

    pub fn start(&self) -> Complex64 {
        self.segments[0].start()
    }

    pub fn end(&self) -> Complex64 {
        self.segments.last().expect("non-empty").end()
    }

    pub fn reversed(&self) -> Path {
        Path {
            segments: self.segments.iter().rev().map(|s| s.reversed()).collect(),
        }
    }

    pub fn concat(&self, other: &Path) -> Result<Path> {
        let gap = (self.end() - other.start()).norm();
        if gap > CONTINUITY_TOL * (1.0 + self.end().norm()) {
            return Err(Error::DiscontinuousConcat(self.end(), other.start()));
        }
        let mut segments = self.segments.clone();
        segments.extend(other.segments.iter().cloned());
        Ok(Path { segments })
    }
}

/// Reverse a path (γ⁻¹(t) = γ(1−t)).
pub fn reverse(path: &Path) -> Path {
    path.reversed()
}

/// Concatenate two paths that share an endpoint.
pub fn concat(a: &Path, b: &Path) -> Result<Path> {
    a.concat(b)
}

// ---------------------------------------------------------------------------
// branch-tracked logarithm increments

/// Continuous increment of log(g(z)) along a segment, where g(z) = z or
/// g(z) = 1 − z, computed as a chain of principal-log differences over
/// pieces short enough that each piece turns by less than π.
fn chained_log_increment(
    seg: &PathSegment,
    t0: f64,
    t1: f64,
    map: impl Fn(Complex64) -> Complex64,
) -> Result<Complex64> {
    let a = map(seg.point(t0));
    let b = map(seg.point(t1));
    if a.norm() == 0.0 || b.norm() == 0.0 {
        return Err(Error::DivergentIntegral);
    }
    // enough pieces that |Δz| < |z| on every piece
    let scale = a.norm().min(b.norm());
    let length = seg.chord_length() * (t1 - t0).abs();
    let mut pieces = ((4.0 * length / scale).ceil() as usize).max(1);
    pieces = pieces.min(1 << 20);
    loop {
        let mut total = Complex64::new(0.0, 0.0);
        let mut ok = true;
        let mut prev = a;
        for j in 1..=pieces {
            let t = t0 + (t1 - t0) * j as f64 / pieces as f64;
            let cur = map(seg.point(t));
            if cur.norm() == 0.0 {
                return Err(Error::DivergentIntegral);
            }
            let dmag = prev.norm().ln() - cur.norm().ln();
            let mut darg = cur.arg() - prev.arg();
            if darg > PI {
                darg -= 2.0 * PI;
            } else if darg < -PI {
                darg += 2.0 * PI;
            }
            // a piece subtending π means the chain is too coarse
            if (cur - prev).norm() >= prev.norm().min(cur.norm()) {
                ok = false;
                break;
            }
            total += Complex64::new(-dmag, darg);
            prev = cur;
        }
        if ok {
            return Ok(total);
        }
        pieces *= 2;
        if pieces > (1 << 22) {
            return Err(Error::PathThroughSingularity);
        }
    }
}

/// ∫ dz/z over [t0, t1] of a segment, branch-continuous.
pub fn segment_log_increment(seg: &PathSegment, t0: f64, t1: f64) -> Result<Complex64> {
    if let PathSegment::Arc {
        center,
        angle_start,
        angle_end,
        ..
    } = seg
    {
        if center.norm() == 0.0 {
            // dz/z along an arc about 0 is exactly i·Δθ
            let span = angle_end - angle_start;
            return Ok(Complex64::new(0.0, span * (t1 - t0)));
        }
    }
    chained_log_increment(seg, t0, t1, |z| z)
}

/// ∫ dz/(1−z) over [t0, t1] of a segment, branch-continuous.
pub fn segment_log1m_increment(seg: &PathSegment, t0: f64, t1: f64) -> Result<Complex64> {
    if let PathSegment::Arc {
        center,
        angle_start,
        angle_end,
        ..
    } = seg
    {
        if (center - Complex64::new(1.0, 0.0)).norm() == 0.0 {
            // dz/(1−z) along an arc about 1 is exactly −i·Δθ
            let span = angle_end - angle_start;
            return Ok(Complex64::new(0.0, -span * (t1 - t0)));
        }
    }
    // d log(1−z) = −dz/(1−z)
    Ok(-chained_log_increment(seg, t0, t1, |z| Complex64::new(1.0, 0.0) - z)?)
}

// ---------------------------------------------------------------------------
// canonical segment evaluation (exact antisymmetry under reversal)

fn canonical_key(seg: &PathSegment) -> [f64; 7] {
    match seg {
        PathSegment::Line { start, end } => {
            let fwd = [start.re, start.im, end.re, end.im];
            let rev = [end.re, end.im, start.re, start.im];
            let canon = if fwd <= rev { fwd } else { rev };
            [0.0, canon[0], canon[1], canon[2], canon[3], 0.0, 0.0]
        }
        PathSegment::Arc {
            center,
            radius,
            angle_start,
            angle_end,
        } => {
            let (lo, hi) = if angle_start <= angle_end {
                (*angle_start, *angle_end)
            } else {
                (*angle_end, *angle_start)
            };
            [1.0, center.re, center.im, *radius, lo, hi, 0.0]
        }
    }
}

fn is_canonical_orientation(seg: &PathSegment) -> bool {
    match seg {
        PathSegment::Line { start, end } => {
            [start.re, start.im, end.re, end.im] <= [end.re, end.im, start.re, start.im]
        }
        PathSegment::Arc {
            angle_start,
            angle_end,
            ..
        } => angle_start <= angle_end,
    }
}

fn sum_in_canonical_order(mut parts: Vec<([f64; 7], Complex64, f64)>) -> QuadValue {
    parts.sort_by(|a, b| {
        a.0.iter()
            .zip(b.0.iter())
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut value = Complex64::new(0.0, 0.0);
    let mut error = 0.0;
    for (_, v, e) in parts {
        value += v;
        error += e;
    }
    QuadValue::new(value, error)
}

fn integrate_segment(seg: &PathSegment, form: &FormSpec, cfg: &QuadratureConfig) -> Result<QuadValue> {
    match form {
        FormSpec::Dz => Ok(QuadValue::new(seg.end() - seg.start(), 0.0)),
        FormSpec::DzOverZ => Ok(QuadValue::new(segment_log_increment(seg, 0.0, 1.0)?, 0.0)),
        FormSpec::DzOver1MinusZ => {
            Ok(QuadValue::new(segment_log1m_increment(seg, 0.0, 1.0)?, 0.0))
        }
        FormSpec::SeriesWeighted(_) => {
            let f = |p: QuadPoint| -> Complex64 {
                let z = seg.point(p.x);
                let v = seg.velocity(p.x);
                match form.density(z) {
                    Ok(d) => d * v,
                    Err(_) => Complex64::new(f64::NAN, f64::NAN),
                }
            };
            quad_finite_sided(f, 0.0, 1.0, cfg)
        }
    }
}

/// ∫_path ω for one of the standard forms.
///
/// dz/z and dz/(1−z) are evaluated by exact branch-continuous log
/// increments (arcs about their singular point reduce to angle spans);
/// series-weighted forms fall back to quadrature. Improper endpoints at 0
/// or 1 are admitted when the integral converges there.
pub fn integrate_form(path: &Path, form: &FormSpec, cfg: &QuadratureConfig) -> Result<QuadValue> {
    // reject the clearly non-integrable tangential cases
    divergence_precheck(path, form)?;
    let mut parts = Vec::with_capacity(path.segments.len());
    for seg in path.segments.iter() {
        let key = canonical_key(seg);
        let qv = if is_canonical_orientation(seg) {
            integrate_segment(seg, form, cfg)?
        } else {
            let r = integrate_segment(&seg.reversed(), form, cfg)?;
            QuadValue::new(-r.value, r.error)
        };
        parts.push((key, qv.value, qv.error));
    }
    Ok(sum_in_canonical_order(parts))
}

fn divergence_precheck(path: &Path, form: &FormSpec) -> Result<()> {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    for seg in &path.segments {
        for p in [seg.start(), seg.end()] {
            match form {
                FormSpec::DzOverZ if (p - zero).norm() == 0.0 => {
                    return Err(Error::DivergentIntegral)
                }
                FormSpec::DzOver1MinusZ if (p - one).norm() == 0.0 => {
                    return Err(Error::DivergentIntegral)
                }
                FormSpec::SeriesWeighted(f)
                    if (p - one).norm() == 0.0 && f.singular_at_1() =>
                {
                    return Err(Error::DivergentIntegral)
                }
                _ => {}
            }
        }
    }
    Ok(())
}

/// Cumulative integral B(t) = ∫₀^t γ*ω along the whole path, t ∈ [0,1]
/// with the global parameter split uniformly across segments.
///
/// B is continuous and additive across segment boundaries; for dz/z the
/// branch is carried by accumulation, never re-snapped.
pub struct CumulativeIntegral<'a> {
    path: &'a Path,
    form: &'a FormSpec,
    prefix: Vec<Complex64>,
    cfg: QuadratureConfig,
}

impl<'a> CumulativeIntegral<'a> {
    pub fn new(path: &'a Path, form: &'a FormSpec, cfg: &QuadratureConfig) -> Result<Self> {
        let mut prefix = vec![Complex64::new(0.0, 0.0)];
        let mut acc = Complex64::new(0.0, 0.0);
        for seg in &path.segments {
            let sub = Path {
                segments: vec![seg.clone()],
            };
            acc += integrate_form(&sub, form, cfg)?.value;
            prefix.push(acc);
        }
        Ok(Self {
            path,
            form,
            prefix,
            cfg: cfg.clone(),
        })
    }

    /// B(t) for global t ∈ [0,1].
    pub fn at(&self, t: f64) -> Result<Complex64> {
        let n = self.path.segments.len() as f64;
        let scaled = (t.clamp(0.0, 1.0)) * n;
        let idx = (scaled.floor() as usize).min(self.path.segments.len() - 1);
        let local = scaled - idx as f64;
        let seg = &self.path.segments[idx];
        let partial = match self.form {
            FormSpec::DzOverZ => segment_log_increment(seg, 0.0, local)?,
            FormSpec::DzOver1MinusZ => segment_log1m_increment(seg, 0.0, local)?,
            FormSpec::Dz => seg.point(local) - seg.start(),
            FormSpec::SeriesWeighted(_) => {
                if local == 0.0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    let form = self.form;
                    quad_finite_sided(
                        |p: QuadPoint| {
                            let z = seg.point(p.x);
                            let v = seg.velocity(p.x);
                            match form.density(z) {
                                Ok(d) => d * v,
                                Err(_) => Complex64::new(f64::NAN, f64::NAN),
                            }
                        },
                        0.0,
                        local,
                        &self.cfg,
                    )?
                    .value
                }
            }
        };
        Ok(self.prefix[idx] + partial)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn log_two_along_half_line_segment() {
        let p = Path::line(c(0.5, 0.0), c(1.0, 0.0)).unwrap();
        let v = integrate_form(&p, &FormSpec::DzOverZ, &cfg()).unwrap();
        assert!((v.value - c(2.0f64.ln(), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn small_loop_about_one_kills_dz_over_z() {
        let p = Path::loop_about(c(1.0, 0.0), 1e-3).unwrap();
        let v = integrate_form(&p, &FormSpec::DzOverZ, &cfg()).unwrap();
        assert!(v.value.norm() < 1e-12);
    }

    #[test]
    fn loop_about_one_for_dz_over_one_minus_z() {
        let p = Path::loop_about(c(1.0, 0.0), 0.25).unwrap();
        let v = integrate_form(&p, &FormSpec::DzOver1MinusZ, &cfg()).unwrap();
        assert!((v.value - c(0.0, -2.0 * PI)).norm() < 1e-12);
    }

    #[test]
    fn winding_of_polygonal_loop() {
        // square around 0 (and around 1, kept off both points)
        let pts = [c(2.0, 2.0), c(-2.0, 2.0), c(-2.0, -2.0), c(2.0, -2.0), c(2.0, 2.0)];
        let segs: Vec<_> = pts.windows(2).map(|w| PathSegment::line(w[0], w[1])).collect();
        let p = Path::new(segs).unwrap();
        let v = integrate_form(&p, &FormSpec::DzOverZ, &cfg()).unwrap();
        assert!((v.value - c(0.0, 2.0 * PI)).norm() < 1e-10);
    }

    #[test]
    fn reversal_is_exact_negation() {
        let pts = [c(0.3, 0.0), c(0.5, 0.2), c(0.8, -0.1), c(0.9, 0.3)];
        let segs: Vec<_> = pts.windows(2).map(|w| PathSegment::line(w[0], w[1])).collect();
        let p = Path::new(segs).unwrap();
        for form in [FormSpec::DzOverZ, FormSpec::DzOver1MinusZ, FormSpec::Dz] {
            let v = integrate_form(&p, &form, &cfg()).unwrap().value;
            let r = integrate_form(&p.reversed(), &form, &cfg()).unwrap().value;
            assert_eq!(v, -r, "{form:?}");
        }
    }

    #[test]
    fn additivity_over_concatenation() {
        let a = Path::line(c(0.2, 0.0), c(0.5, 0.1)).unwrap();
        let b = Path::line(c(0.5, 0.1), c(0.7, -0.2)).unwrap();
        let ab = concat(&a, &b).unwrap();
        for form in [FormSpec::DzOverZ, FormSpec::DzOver1MinusZ] {
            let whole = integrate_form(&ab, &form, &cfg()).unwrap().value;
            let parts = integrate_form(&a, &form, &cfg()).unwrap().value
                + integrate_form(&b, &form, &cfg()).unwrap().value;
            assert!((whole - parts).norm() < 1e-12);
        }
    }

    #[test]
    fn cumulative_midpoint() {
        let p = Path::line(c(0.25, 0.0), c(1.0, 0.0)).unwrap();
        let form = FormSpec::DzOverZ;
        let b = CumulativeIntegral::new(&p, &form, &cfg()).unwrap();
        assert_eq!(b.at(0.0).unwrap(), c(0.0, 0.0));
        let mid = b.at(0.5).unwrap();
        assert!((mid - c((0.625f64 / 0.25).ln(), 0.0)).norm() < 1e-13);
        let total = integrate_form(&p, &form, &cfg()).unwrap().value;
        assert!((b.at(1.0).unwrap() - total).norm() < 1e-13);
    }

    #[test]
    fn weighted_form_along_segment() {
        // F_Q(z) dz/z = dz/(1−z)
        let p = Path::line(c(0.1, 0.0), c(0.6, 0.0)).unwrap();
        let w = integrate_form(
            &p,
            &FormSpec::SeriesWeighted(crate::series::f_q()),
            &cfg(),
        )
        .unwrap()
        .value;
        let exact = integrate_form(&p, &FormSpec::DzOver1MinusZ, &cfg()).unwrap().value;
        assert!((w - exact).norm() < 1e-11);
    }

    #[test]
    fn tangential_divergence_rejected() {
        let p = Path::line(c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!(matches!(
            integrate_form(&p, &FormSpec::DzOverZ, &cfg()),
            Err(Error::DivergentIntegral)
        ));
        assert!(matches!(
            integrate_form(&p, &FormSpec::DzOver1MinusZ, &cfg()),
            Err(Error::DivergentIntegral)
        ));
        // F(z)dz/z with F(0) = 0 is integrable from 0
        let ok = integrate_form(
            &Path::line(c(0.0, 0.0), c(0.5, 0.0)).unwrap(),
            &FormSpec::SeriesWeighted(crate::series::monomial(1)),
            &cfg(),
        )
        .unwrap();
        assert!((ok.value - c(0.5, 0.0)).norm() < 1e-11);
    }

    #[test]
    fn path_through_singularity_rejected() {
        assert!(matches!(
            Path::line(c(-0.5, 0.0), c(0.5, 0.0)),
            Err(Error::PathThroughSingularity)
        ));
        assert!(matches!(
            Path::line(c(0.5, 0.0), c(1.5, 0.0)),
            Err(Error::PathThroughSingularity)
        ));
    }

    #[test]
    fn double_reversal_is_identity() {
        let p = Path::line(c(0.2, 0.1), c(0.5, -0.3)).unwrap();
        let rr = p.reversed().reversed();
        assert_eq!(p.start(), rr.start());
        assert_eq!(p.end(), rr.end());
    }

    #[test]
    fn discontinuous_concat_rejected() {
        let a = Path::line(c(0.2, 0.0), c(0.5, 0.0)).unwrap();
        let b = Path::line(c(0.6, 0.0), c(0.7, 0.0)).unwrap();
        assert!(matches!(concat(&a, &b), Err(Error::DiscontinuousConcat(_, _))));
    }
}
