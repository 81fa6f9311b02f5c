//! Grid verification of the registered inequalities.
//!
//! A scan evaluates `margin = lhs - bound` (or the smaller gap of a
//! two-sided statement) over every admissible `(n, a)` pair and every point
//! of an interior grid. Points with `margin < -VIOLATION_TOL` are
//! violations; points with `|margin| <= EQUALITY_TOL` are equality hits,
//! which are matched against the equality cases registered with the spec.

mod registry;
mod sharpness;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub use registry::{find_spec, registry, spec_ids};
pub use sharpness::{
    crossing_gap, crossing_point, search_counterexample_s, search_counterexample_theta,
    sharpness_probe_s, sharpness_probe_theta, sweep_a, CounterexampleS, CounterexampleTheta,
    SweepEntry, SweepReport, SweepTarget, COUNTEREXAMPLE_TOL,
};

pub const VIOLATION_TOL: f64 = 1e-9;
pub const EQUALITY_TOL: f64 = 1e-9;
/// Report schema tag.
pub const SCHEMA: &str = "v1";

const MAX_LISTED_VIOLATIONS: usize = 1000;
const MAX_LISTED_HITS_PER_PAIR: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Parity {
    OddN,
    EvenN,
    AnyN,
}

impl Parity {
    pub fn admits(self, n: usize) -> bool {
        match self {
            Parity::OddN => n % 2 == 1,
            Parity::EvenN => n.is_multiple_of(2),
            Parity::AnyN => true,
        }
    }
}

/// How the real parameter `a` enters a spec.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum AParam {
    /// Any real `a >= min`.
    Real { min: f64 },
    /// Integer `a = k >= min`.
    Integer { min: u32 },
    /// The statement has no parameter.
    Unused,
}

/// Open domain of the free variables.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Domain {
    Interval {
        lo: f64,
        hi: f64,
    },
    /// `(lo, hi)²`, symmetric in `(x, y)`; only `y <= x` is scanned.
    Square {
        lo: f64,
        hi: f64,
    },
}

impl Domain {
    pub fn lo(&self) -> f64 {
        match *self {
            Domain::Interval { lo, .. } | Domain::Square { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> f64 {
        match *self {
            Domain::Interval { hi, .. } | Domain::Square { hi, .. } => hi,
        }
    }

    pub fn is_2d(&self) -> bool {
        matches!(self, Domain::Square { .. })
    }

    fn contains(&self, v: f64) -> bool {
        v > self.lo() && v < self.hi()
    }
}

/// Where an equality case holds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum EqPoint {
    Any,
    At(f64),
    /// Every point with `lo <= x <= hi`.
    Range {
        lo: f64,
        hi: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KnownEquality {
    pub n: usize,
    /// `None` when the case holds for every admissible `a`.
    pub a: Option<f64>,
    pub point: EqPoint,
}

impl KnownEquality {
    pub const fn new(n: usize, a: Option<f64>, point: EqPoint) -> Self {
        KnownEquality { n, a, point }
    }

    fn matches_params(&self, n: usize, a: Option<f64>) -> bool {
        self.n == n
            && match (self.a, a) {
                (None, _) => true,
                (Some(ea), Some(a)) => (ea - a).abs() <= 1e-12,
                (Some(_), None) => false,
            }
    }

    fn matches(&self, n: usize, a: Option<f64>, x: f64, step: f64) -> bool {
        self.matches_params(n, a)
            && match self.point {
                EqPoint::Any => true,
                EqPoint::At(x0) => (x - x0).abs() <= step * (1.0 + 1e-9),
                EqPoint::Range { lo, hi } => x >= lo - step && x <= hi + step,
            }
    }
}

/// Value of both sides at one point. Either bound may be absent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub lhs: f64,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
}

impl Evaluation {
    pub fn at_least(lhs: f64, bound: f64) -> Self {
        Evaluation {
            lhs,
            lower: Some(bound),
            upper: None,
        }
    }

    pub fn at_most(lhs: f64, bound: f64) -> Self {
        Evaluation {
            lhs,
            lower: None,
            upper: Some(bound),
        }
    }

    pub fn between(lhs: f64, lower: f64, upper: f64) -> Self {
        Evaluation {
            lhs,
            lower: Some(lower),
            upper: Some(upper),
        }
    }

    /// `(margin, binding bound)`.
    pub fn margin(&self) -> (f64, f64) {
        let lo = self.lower.map(|b| (self.lhs - b, b));
        let hi = self.upper.map(|b| (b - self.lhs, b));
        match (lo, hi) {
            (Some(l), Some(h)) => {
                if h.0 < l.0 {
                    h
                } else {
                    l
                }
            }
            (Some(l), None) => l,
            (None, Some(h)) => h,
            (None, None) => (f64::INFINITY, f64::NAN),
        }
    }
}

/// Point evaluator for one `(n, a)` pair; `y` is ignored by 1D specs.
pub type PointEval = Box<dyn Fn(f64, f64) -> Evaluation + Send + Sync>;

/// A registered inequality.
pub struct InequalitySpec {
    pub id: &'static str,
    pub statement: &'static str,
    pub parity: Parity,
    pub n_min: usize,
    pub a_param: AParam,
    pub domain: Domain,
    pub strict: bool,
    pub known_equalities: Vec<KnownEquality>,
    prepare: fn(usize, f64) -> PointEval,
    default_grid: fn() -> ScanGrid,
}

impl std::fmt::Debug for InequalitySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("InequalitySpec")
            .field("id", &self.id)
            .field("statement", &self.statement)
            .field("parity", &self.parity)
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

impl InequalitySpec {
    /// Evaluator for one parameter pair. `a` is ignored when unused.
    pub fn evaluator(&self, n: usize, a: f64) -> PointEval {
        (self.prepare)(n, a)
    }

    pub fn evaluate(&self, n: usize, a: f64, x: f64, y: f64) -> Evaluation {
        self.evaluator(n, a)(x, y)
    }

    pub fn default_grid(&self) -> ScanGrid {
        (self.default_grid)()
    }

    pub fn uses_a(&self) -> bool {
        !matches!(self.a_param, AParam::Unused)
    }

    fn admits_a(&self, a: f64) -> bool {
        match self.a_param {
            AParam::Real { min } => a.is_finite() && a >= min,
            AParam::Integer { min } => a.fract() == 0.0 && a >= min as f64,
            AParam::Unused => true,
        }
    }

    /// Specific equality points in the domain, which every scan includes.
    fn pinned_points(&self) -> Vec<f64> {
        let mut pts: Vec<f64> = self
            .known_equalities
            .iter()
            .filter_map(|e| match e.point {
                EqPoint::At(x) if self.domain.contains(x) => Some(x),
                _ => None,
            })
            .collect();
        pts.sort_by(f64::total_cmp);
        pts.dedup();
        pts
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanGrid {
    pub n_values: Vec<usize>,
    pub a_values: Vec<f64>,
    /// Interior points per axis: `x_i = lo + i (hi - lo)/(x_steps + 1)`.
    pub x_steps: usize,
    /// Second axis for 2D specs; defaults to `x_steps`.
    pub y_steps: Option<usize>,
    /// Lifts the `a` hypothesis so the boundary can be probed.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub sharpness_probe: bool,
}

impl ScanGrid {
    pub fn new(n_values: Vec<usize>, a_values: Vec<f64>, x_steps: usize) -> Self {
        ScanGrid {
            n_values,
            a_values,
            x_steps,
            y_steps: None,
            sharpness_probe: false,
        }
    }

    pub fn with_y_steps(mut self, y_steps: usize) -> Self {
        self.y_steps = Some(y_steps);
        self
    }

    pub fn probing(mut self) -> Self {
        self.sharpness_probe = true;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridPoint {
    pub n: usize,
    pub a: Option<f64>,
    pub x: f64,
    pub y: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridHit {
    #[serde(flatten)]
    pub point: GridPoint,
    pub lhs: f64,
    pub bound: f64,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridEcho {
    pub n_values: Vec<usize>,
    pub a_values: Vec<f64>,
    pub x_steps: usize,
    pub y_steps: Option<usize>,
    /// Known equality points added on top of the regular grid.
    pub pinned_points: Vec<f64>,
    pub domain: Domain,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanReport {
    pub schema: &'static str,
    pub spec: String,
    pub grid: GridEcho,
    pub points_evaluated: u64,
    pub min_margin: f64,
    pub argmin: GridPoint,
    pub violation_count: u64,
    /// At most 1000 entries; `violation_count` is exact.
    pub violations: Vec<GridHit>,
    pub equality_hit_count: u64,
    /// At most 8 entries per `(n, a)` pair; `equality_hit_count` is exact.
    pub equality_hits: Vec<GridHit>,
    /// Hits matching no registered equality case (all listed).
    pub unexpected_equality_hits: Vec<GridHit>,
    /// Registered cases inside the grid that were never hit.
    pub missed_equalities: Vec<KnownEquality>,
    pub wall_time_s: f64,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    /// Equal-up-to-timing comparison.
    pub fn without_timing(&self) -> ScanReport {
        ScanReport {
            wall_time_s: 0.0,
            ..self.clone()
        }
    }
}

/// One row of a margin dump.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MarginRow {
    pub n: usize,
    pub a: Option<f64>,
    pub x: f64,
    pub y: Option<f64>,
    pub lhs: f64,
    pub bound: f64,
    pub margin: f64,
}

struct ResolvedGrid {
    pairs: Vec<(usize, Option<f64>)>,
    xs: Vec<f64>,
    ys: Vec<f64>,
    x_step: f64,
    y_step: f64,
    triangle: bool,
    n_values: Vec<usize>,
    a_values: Vec<f64>,
    pinned: Vec<f64>,
}

fn axis(lo: f64, hi: f64, steps: usize, pinned: &[f64]) -> Vec<f64> {
    let h = (hi - lo) / (steps + 1) as f64;
    let mut pts: Vec<f64> = (1..=steps).map(|i| lo + i as f64 * h).collect();
    pts.extend_from_slice(pinned);
    pts.sort_by(f64::total_cmp);
    pts.dedup_by(|a, b| (*a - *b).abs() <= 1e-15 * (1.0 + b.abs()));
    pts
}

fn resolve(spec: &InequalitySpec, grid: &ScanGrid) -> Result<ResolvedGrid> {
    if grid.x_steps == 0 || grid.y_steps == Some(0) {
        return Err(Error::domain(
            "grid needs at least one interior point per axis",
        ));
    }
    let n_values: Vec<usize> = grid
        .n_values
        .iter()
        .copied()
        .filter(|&n| n >= spec.n_min && spec.parity.admits(n))
        .collect();
    if n_values.is_empty() {
        return Err(Error::domain(format!(
            "no admissible n for {} (parity {:?}, n >= {})",
            spec.id, spec.parity, spec.n_min
        )));
    }
    let a_values: Vec<f64> = if spec.uses_a() {
        if grid.a_values.is_empty() {
            return Err(Error::domain(format!(
                "{} needs at least one value of a",
                spec.id
            )));
        }
        for &a in &grid.a_values {
            if !a.is_finite() {
                return Err(Error::domain(format!("a must be finite, got {a}")));
            }
            if !grid.sharpness_probe && !spec.admits_a(a) {
                return Err(Error::domain(format!(
                    "a={a} violates the hypothesis {:?} of {}; use a sharpness probe grid",
                    spec.a_param, spec.id
                )));
            }
        }
        grid.a_values.clone()
    } else {
        Vec::new()
    };
    let pairs = if spec.uses_a() {
        n_values
            .iter()
            .flat_map(|&n| a_values.iter().map(move |&a| (n, Some(a))))
            .collect()
    } else {
        n_values.iter().map(|&n| (n, None)).collect()
    };

    let (lo, hi) = (spec.domain.lo(), spec.domain.hi());
    let pinned = spec.pinned_points();
    let xs = axis(lo, hi, grid.x_steps, &pinned);
    let x_step = (hi - lo) / (grid.x_steps + 1) as f64;
    let (ys, y_step, triangle) = if spec.domain.is_2d() {
        let y_steps = grid.y_steps.unwrap_or(grid.x_steps);
        let ys = axis(lo, hi, y_steps, &pinned);
        (
            ys,
            (hi - lo) / (y_steps + 1) as f64,
            y_steps == grid.x_steps,
        )
    } else {
        (vec![f64::NAN], 0.0, false)
    };
    Ok(ResolvedGrid {
        pairs,
        xs,
        ys,
        x_step,
        y_step,
        triangle,
        n_values,
        a_values,
        pinned,
    })
}

impl ResolvedGrid {
    /// Grid points in a fixed order: x outer, y inner (y <= x for triangles).
    fn points(&self) -> impl Iterator<Item = (f64, Option<f64>)> + '_ {
        let is_2d = self.y_step > 0.0;
        self.xs.iter().flat_map(move |&x| {
            self.ys
                .iter()
                .filter(move |&&y| !is_2d || !self.triangle || y <= x)
                .map(move |&y| (x, if is_2d { Some(y) } else { None }))
        })
    }
}

// NaN margins sort below everything and are reported as violations.
fn order_key(margin: f64) -> f64 {
    if margin.is_nan() {
        f64::NEG_INFINITY
    } else {
        margin
    }
}

struct PairOutcome {
    points: u64,
    min: Option<GridHit>,
    violation_count: u64,
    violations: Vec<GridHit>,
    hit_count: u64,
    hits: Vec<GridHit>,
    unexpected: Vec<GridHit>,
    matched: Vec<bool>,
}

fn scan_pair(spec: &InequalitySpec, grid: &ResolvedGrid, n: usize, a: Option<f64>) -> PairOutcome {
    let eval = spec.evaluator(n, a.unwrap_or(0.0));
    let mut out = PairOutcome {
        points: 0,
        min: None,
        violation_count: 0,
        violations: Vec::new(),
        hit_count: 0,
        hits: Vec::new(),
        unexpected: Vec::new(),
        matched: vec![false; spec.known_equalities.len()],
    };
    for (x, y) in grid.points() {
        let e = eval(x, y.unwrap_or(0.0));
        let (margin, bound) = e.margin();
        let hit = GridHit {
            point: GridPoint { n, a, x, y },
            lhs: e.lhs,
            bound,
            margin,
        };
        out.points += 1;
        if out
            .min
            .is_none_or(|m| order_key(margin) < order_key(m.margin))
        {
            out.min = Some(hit);
        }
        if margin.is_nan() || margin < -VIOLATION_TOL {
            out.violation_count += 1;
            if out.violations.len() < MAX_LISTED_VIOLATIONS {
                out.violations.push(hit);
            }
        }
        if margin.abs() <= EQUALITY_TOL {
            out.hit_count += 1;
            if out.hits.len() < MAX_LISTED_HITS_PER_PAIR {
                out.hits.push(hit);
            }
            let mut any = false;
            for (k, eq) in spec.known_equalities.iter().enumerate() {
                if eq.matches(n, a, x, grid.x_step) {
                    out.matched[k] = true;
                    any = true;
                }
            }
            if !any {
                out.unexpected.push(hit);
            }
        }
    }
    out
}

/// Scans `spec` over `grid`. Work items are `(n, a)` pairs, run in parallel
/// and merged in grid order, so the report does not depend on scheduling.
pub fn scan_inequality(spec: &InequalitySpec, grid: &ScanGrid) -> Result<ScanReport> {
    let start = Instant::now();
    let resolved = resolve(spec, grid)?;
    let outcomes: Vec<PairOutcome> = resolved
        .pairs
        .par_iter()
        .map(|&(n, a)| scan_pair(spec, &resolved, n, a))
        .collect();

    let mut points = 0;
    let mut min: Option<GridHit> = None;
    let mut violation_count = 0;
    let mut violations = Vec::new();
    let mut hit_count = 0;
    let mut hits = Vec::new();
    let mut unexpected = Vec::new();
    let mut matched = vec![false; spec.known_equalities.len()];
    for o in outcomes {
        points += o.points;
        if let Some(m) = o.min {
            if min.is_none_or(|cur| order_key(m.margin) < order_key(cur.margin)) {
                min = Some(m);
            }
        }
        violation_count += o.violation_count;
        for v in o.violations {
            if violations.len() < MAX_LISTED_VIOLATIONS {
                violations.push(v);
            }
        }
        hit_count += o.hit_count;
        hits.extend(o.hits);
        unexpected.extend(o.unexpected);
        for (m, k) in matched.iter_mut().zip(o.matched) {
            *m |= k;
        }
    }
    let min = min.ok_or_else(|| Error::Internal("scan produced no points".into()))?;

    // cases whose parameters were scanned but which never showed up
    let missed_equalities = spec
        .known_equalities
        .iter()
        .zip(&matched)
        .filter(|(eq, hit)| {
            !**hit
                && resolved.pairs.iter().any(|&(n, a)| eq.matches_params(n, a))
                && match eq.point {
                    EqPoint::At(x) => spec.domain.contains(x),
                    _ => true,
                }
        })
        .map(|(eq, _)| *eq)
        .collect();

    Ok(ScanReport {
        schema: SCHEMA,
        spec: spec.id.to_string(),
        grid: GridEcho {
            n_values: resolved.n_values,
            a_values: resolved.a_values,
            x_steps: grid.x_steps,
            y_steps: if spec.domain.is_2d() {
                Some(grid.y_steps.unwrap_or(grid.x_steps))
            } else {
                None
            },
            pinned_points: resolved.pinned,
            domain: spec.domain,
        },
        points_evaluated: points,
        min_margin: min.margin,
        argmin: min.point,
        violation_count,
        violations,
        equality_hit_count: hit_count,
        equality_hits: hits,
        unexpected_equality_hits: unexpected,
        missed_equalities,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

/// Every grid point with both sides and the margin, in scan order.
pub fn margin_rows(spec: &InequalitySpec, grid: &ScanGrid) -> Result<Vec<MarginRow>> {
    let resolved = resolve(spec, grid)?;
    let rows: Vec<Vec<MarginRow>> = resolved
        .pairs
        .par_iter()
        .map(|&(n, a)| {
            let eval = spec.evaluator(n, a.unwrap_or(0.0));
            resolved
                .points()
                .map(|(x, y)| {
                    let e = eval(x, y.unwrap_or(0.0));
                    let (margin, bound) = e.margin();
                    MarginRow {
                        n,
                        a,
                        x,
                        y,
                        lhs: e.lhs,
                        bound,
                        margin,
                    }
                })
                .collect()
        })
        .collect();
    Ok(rows.into_iter().flatten().collect())
}

/// Writes rows as CSV with header `n,a,x,y,lhs,bound,margin`; absent `a` or
/// `y` are empty fields.
pub fn write_margin_csv<W: std::io::Write>(rows: &[MarginRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)
            .map_err(|e| Error::Internal(format!("csv write failed: {e}")))?;
    }
    w.flush()
        .map_err(|e| Error::Internal(format!("csv flush failed: {e}")))?;
    Ok(())
}
