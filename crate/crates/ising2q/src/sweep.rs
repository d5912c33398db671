//! 1-D and 2-D parameter sweeps, argmax extraction, and the figure presets.
//!
//! A sweep is described declaratively by a [`SweepSpec`]: base parameters, one
//! or two swept axes, and optional coupling rules that tie a parameter to a
//! swept one (`B2 = r * B1`, `theta2 = theta1 + d`). Every grid point is an
//! independent pure computation, so evaluation is parallel but writes into a
//! preallocated slot per point: results are bit-identical to a sequential run
//! regardless of thread count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::entanglement::concurrence;
use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::thermal::{ground_state, thermal_state};

/// Identifiers of the sweepable parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepParam {
    B1,
    B2,
    #[serde(rename = "theta1")]
    Theta1,
    #[serde(rename = "theta2")]
    Theta2,
    T,
}

impl SweepParam {
    /// Column name used in CSV output. The swept field magnitude is reported
    /// as plain `B`, matching the figure captions where B = B1.
    pub fn column_name(&self) -> &'static str {
        match self {
            SweepParam::B1 => "B",
            SweepParam::B2 => "B2",
            SweepParam::Theta1 => "theta1",
            SweepParam::Theta2 => "theta2",
            SweepParam::T => "T",
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            SweepParam::B1 => "B1",
            SweepParam::B2 => "B2",
            SweepParam::Theta1 => "theta1",
            SweepParam::Theta2 => "theta2",
            SweepParam::T => "T",
        }
    }
}

impl std::str::FromStr for SweepParam {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B1" | "b1" => Ok(SweepParam::B1),
            "B2" | "b2" => Ok(SweepParam::B2),
            "theta1" => Ok(SweepParam::Theta1),
            "theta2" => Ok(SweepParam::Theta2),
            "T" | "t" => Ok(SweepParam::T),
            other => Err(Error::InvalidSpec {
                path: "param".into(),
                message: format!("unknown parameter id `{other}`"),
            }),
        }
    }
}

/// One swept axis: an inclusive linear grid with at least two points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub param: SweepParam,
    #[serde(deserialize_with = "crate::piexpr::deserialize_scalar")]
    pub start: f64,
    #[serde(deserialize_with = "crate::piexpr::deserialize_scalar")]
    pub stop: f64,
    pub count: usize,
}

impl Axis {
    pub fn new(param: SweepParam, start: f64, stop: f64, count: usize) -> Self {
        Axis {
            param,
            start,
            stop,
            count,
        }
    }

    fn validate(&self, path: &str) -> Result<()> {
        if self.count < 2 {
            return Err(Error::InvalidSpec {
                path: format!("{path}.count"),
                message: format!("need at least 2 grid points, got {}", self.count),
            });
        }
        if !(self.start.is_finite() && self.stop.is_finite()) || self.start >= self.stop {
            return Err(Error::InvalidSpec {
                path: format!("{path}.start"),
                message: format!("need start < stop, got [{}, {}]", self.start, self.stop),
            });
        }
        Ok(())
    }

    /// Inclusive linear grid value at index `k`.
    pub fn value(&self, k: usize) -> f64 {
        self.start + k as f64 * (self.stop - self.start) / (self.count - 1) as f64
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.count).map(|k| self.value(k)).collect()
    }
}

/// How a derived parameter follows its source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CouplingExpr {
    /// target = value * source
    Ratio,
    /// target = source + value
    Offset,
}

/// Derived-parameter binding applied after the axis values are set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Coupling {
    pub target: SweepParam,
    pub expr: CouplingExpr,
    pub source: SweepParam,
    #[serde(deserialize_with = "crate::piexpr::deserialize_scalar")]
    pub value: f64,
}

/// Declarative sweep description. Serializes to/from the JSON spec format the
/// CLI accepts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub base: ModelParams,
    pub axis1: Axis,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axis2: Option<Axis>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub couplings: Vec<Coupling>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        self.axis1.validate("axis1")?;
        if let Some(axis2) = &self.axis2 {
            axis2.validate("axis2")?;
            if axis2.param == self.axis1.param {
                return Err(Error::InvalidSpec {
                    path: "axis2.param".into(),
                    message: "axis2 must sweep a different parameter than axis1".into(),
                });
            }
        }
        let mut bound: Vec<SweepParam> = Vec::new();
        for (i, c) in self.couplings.iter().enumerate() {
            let path = format!("couplings[{i}]");
            if c.target == self.axis1.param
                || self.axis2.as_ref().is_some_and(|a| a.param == c.target)
            {
                return Err(Error::InvalidSpec {
                    path: format!("{path}.target"),
                    message: format!("`{}` is swept by an axis", c.target.id()),
                });
            }
            if c.target == c.source {
                return Err(Error::InvalidSpec {
                    path: format!("{path}.source"),
                    message: "coupling cannot reference its own target".into(),
                });
            }
            if bound.contains(&c.source) {
                return Err(Error::InvalidSpec {
                    path: format!("{path}.source"),
                    message: format!(
                        "`{}` is itself coupled; reference only swept or base parameters",
                        c.source.id()
                    ),
                });
            }
            if bound.contains(&c.target) {
                return Err(Error::InvalidSpec {
                    path: format!("{path}.target"),
                    message: format!("`{}` is bound twice", c.target.id()),
                });
            }
            bound.push(c.target);
        }
        if !c_finite(&self.couplings) {
            return Err(Error::InvalidSpec {
                path: "couplings".into(),
                message: "coupling values must be finite".into(),
            });
        }
        Ok(())
    }

    /// Model parameters at one grid point.
    fn resolve(&self, x1: f64, x2: Option<f64>) -> Result<ModelParams> {
        let mut vals = RawValues::from(&self.base);
        vals.set(self.axis1.param, x1);
        if let (Some(axis2), Some(x2)) = (&self.axis2, x2) {
            vals.set(axis2.param, x2);
        }
        for c in &self.couplings {
            let s = vals.get(c.source);
            let v = match c.expr {
                CouplingExpr::Ratio => c.value * s,
                CouplingExpr::Offset => s + c.value,
            };
            vals.set(c.target, v);
        }
        vals.into_params()
    }
}

fn c_finite(couplings: &[Coupling]) -> bool {
    couplings.iter().all(|c| c.value.is_finite())
}

/// Mutable scratch copy of the six model parameters.
#[derive(Clone, Copy)]
struct RawValues {
    j: f64,
    b1: f64,
    b2: f64,
    theta1: f64,
    theta2: f64,
    t: f64,
}

impl RawValues {
    fn from(p: &ModelParams) -> Self {
        RawValues {
            j: p.j(),
            b1: p.b1(),
            b2: p.b2(),
            theta1: p.theta1(),
            theta2: p.theta2(),
            t: p.temperature(),
        }
    }

    fn get(&self, p: SweepParam) -> f64 {
        match p {
            SweepParam::B1 => self.b1,
            SweepParam::B2 => self.b2,
            SweepParam::Theta1 => self.theta1,
            SweepParam::Theta2 => self.theta2,
            SweepParam::T => self.t,
        }
    }

    fn set(&mut self, p: SweepParam, v: f64) {
        match p {
            SweepParam::B1 => self.b1 = v,
            SweepParam::B2 => self.b2 = v,
            SweepParam::Theta1 => self.theta1 = v,
            SweepParam::Theta2 => self.theta2 = v,
            SweepParam::T => self.t = v,
        }
    }

    fn into_params(self) -> Result<ModelParams> {
        ModelParams::new(self.j, self.b1, self.b2, self.theta1, self.theta2, self.t)
    }
}

/// Grid axes plus the concurrence at every point, row-major with axis1 as the
/// major (slow) index.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub axis1: Vec<f64>,
    pub axis2: Option<Vec<f64>>,
    pub values: Vec<f64>,
    /// The spec that produced this result, fully resolved.
    pub spec: SweepSpec,
    /// Preset id when the spec came from [`figure_preset`].
    pub preset: Option<String>,
}

/// Location and value of the grid maximum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ArgMax {
    /// Row-major index into `values`.
    pub index: usize,
    pub i1: usize,
    pub i2: Option<usize>,
    pub coord1: f64,
    pub coord2: Option<f64>,
    pub value: f64,
}

/// Evaluates the concurrence at one fully resolved parameter point, using the
/// ground state at T = 0 and the Gibbs state otherwise.
pub fn concurrence_at(p: &ModelParams) -> Result<f64> {
    let rho = if p.temperature() == 0.0 {
        ground_state(p)?
    } else {
        thermal_state(p)?
    };
    Ok(concurrence(&rho)?.concurrence)
}

/// Runs a sweep. Grid points are evaluated in parallel; the result is
/// deterministic and independent of the thread count.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepResult> {
    spec.validate()?;
    let axis1 = spec.axis1.values();
    let axis2 = spec.axis2.as_ref().map(|a| a.values());
    let n2 = axis2.as_ref().map_or(1, Vec::len);
    let n = axis1.len() * n2;

    let evaluated: Vec<std::result::Result<f64, (usize, Error)>> = (0..n)
        .into_par_iter()
        .map(|idx| {
            let i1 = idx / n2;
            let i2 = idx % n2;
            let x1 = axis1[i1];
            let x2 = axis2.as_ref().map(|a| a[i2]);
            spec.resolve(x1, x2)
                .and_then(|p| concurrence_at(&p))
                .map_err(|e| (idx, e))
        })
        .collect();

    let mut values = Vec::with_capacity(n);
    for r in evaluated {
        match r {
            Ok(v) => values.push(v),
            Err((idx, e)) => {
                let i1 = idx / n2;
                let i2 = idx % n2;
                let mut coords = format!("{} = {}", spec.axis1.param.id(), axis1[i1]);
                if let (Some(a2), Some(vals2)) = (&spec.axis2, &axis2) {
                    coords.push_str(&format!(", {} = {}", a2.param.id(), vals2[i2]));
                }
                return Err(Error::SweepPoint {
                    index: idx,
                    coords,
                    source: Box::new(e),
                });
            }
        }
    }

    Ok(SweepResult {
        axis1,
        axis2,
        values,
        spec: spec.clone(),
        preset: None,
    })
}

/// First-encountered maximum in row-major order; exact ties keep the earliest
/// grid point, so regression output is stable.
pub fn argmax(result: &SweepResult) -> ArgMax {
    let n2 = result.axis2.as_ref().map_or(1, Vec::len);
    let mut best = 0usize;
    for (idx, &v) in result.values.iter().enumerate() {
        if v > result.values[best] {
            best = idx;
        }
    }
    let i1 = best / n2;
    let i2 = best % n2;
    ArgMax {
        index: best,
        i1,
        i2: result.axis2.as_ref().map(|_| i2),
        coord1: result.axis1[i1],
        coord2: result.axis2.as_ref().map(|a| a[i2]),
        value: result.values[best],
    }
}

/// Default 1-D grid: 401 points over B in [0.01, 4] J. Starting at 0.01 J
/// keeps the degenerate B = 0 point out of the curves; the B -> 0+ behavior is
/// covered by its own invariant.
pub const FIELD_AXIS_START: f64 = 0.01;
pub const FIELD_AXIS_STOP: f64 = 4.0;
pub const FIELD_AXIS_COUNT: usize = 401;
/// Default 2-D grid: 201 x 201 over [0, pi]^2.
pub const ANGLE_AXIS_COUNT: usize = 201;

/// Identifiers of the built-in figure presets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PresetId {
    Fig1a,
    Fig1b,
    Fig1c,
    Fig1d,
    Fig2a,
    Fig2b,
    Fig2c,
    Fig2d,
    Fig3a,
    Fig3b,
    Fig4a,
    Fig4b,
    Fig4c,
    Fig4d,
    Fig5a,
    Fig5b,
    Fig6a,
    Fig6b,
}

pub const ALL_PRESETS: [PresetId; 18] = [
    PresetId::Fig1a,
    PresetId::Fig1b,
    PresetId::Fig1c,
    PresetId::Fig1d,
    PresetId::Fig2a,
    PresetId::Fig2b,
    PresetId::Fig2c,
    PresetId::Fig2d,
    PresetId::Fig3a,
    PresetId::Fig3b,
    PresetId::Fig4a,
    PresetId::Fig4b,
    PresetId::Fig4c,
    PresetId::Fig4d,
    PresetId::Fig5a,
    PresetId::Fig5b,
    PresetId::Fig6a,
    PresetId::Fig6b,
];

impl PresetId {
    pub fn name(&self) -> &'static str {
        match self {
            PresetId::Fig1a => "fig1a",
            PresetId::Fig1b => "fig1b",
            PresetId::Fig1c => "fig1c",
            PresetId::Fig1d => "fig1d",
            PresetId::Fig2a => "fig2a",
            PresetId::Fig2b => "fig2b",
            PresetId::Fig2c => "fig2c",
            PresetId::Fig2d => "fig2d",
            PresetId::Fig3a => "fig3a",
            PresetId::Fig3b => "fig3b",
            PresetId::Fig4a => "fig4a",
            PresetId::Fig4b => "fig4b",
            PresetId::Fig4c => "fig4c",
            PresetId::Fig4d => "fig4d",
            PresetId::Fig5a => "fig5a",
            PresetId::Fig5b => "fig5b",
            PresetId::Fig6a => "fig6a",
            PresetId::Fig6b => "fig6b",
        }
    }
}

impl std::str::FromStr for PresetId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ALL_PRESETS
            .iter()
            .find(|p| p.name() == s)
            .copied()
            .ok_or_else(|| Error::UnknownPreset(s.to_string()))
    }
}

/// One curve (or contour panel) of a figure preset.
#[derive(Debug, Clone, PartialEq)]
pub struct PresetCurve {
    /// Short label used in output file names.
    pub label: String,
    pub spec: SweepSpec,
}

/// A figure preset: one or more sweeps sharing an id.
#[derive(Debug, Clone, PartialEq)]
pub struct FigurePreset {
    pub id: PresetId,
    pub curves: Vec<PresetCurve>,
}

fn base(theta1: f64, theta2: f64, b1: f64, b2: f64, t: f64) -> ModelParams {
    ModelParams::new(1.0, b1, b2, theta1, theta2, t).expect("preset parameters are valid")
}

/// Field-magnitude sweep: B1 over the default grid, B2 = ratio * B1, angles
/// fixed per curve. Angle pairs are given as multiples of pi so the labels
/// stay exact.
fn field_curves(pairs: &[(f64, f64)], ratio: f64, t: f64) -> Vec<PresetCurve> {
    pairs
        .iter()
        .map(|&(m1, m2)| {
            let spec = SweepSpec {
                base: base(m1 * std::f64::consts::PI, m2 * std::f64::consts::PI, 0.0, 0.0, t),
                axis1: Axis::new(
                    SweepParam::B1,
                    FIELD_AXIS_START,
                    FIELD_AXIS_STOP,
                    FIELD_AXIS_COUNT,
                ),
                axis2: None,
                couplings: vec![Coupling {
                    target: SweepParam::B2,
                    expr: CouplingExpr::Ratio,
                    source: SweepParam::B1,
                    value: ratio,
                }],
            };
            PresetCurve {
                label: format!("theta1_{m1}pi_theta2_{m2}pi"),
                spec,
            }
        })
        .collect()
}

/// Contour sweep over both field angles at fixed magnitudes.
fn angle_grid(b1: f64, b2: f64, t: f64) -> Vec<PresetCurve> {
    let spec = SweepSpec {
        base: base(0.0, 0.0, b1, b2, t),
        axis1: Axis::new(SweepParam::Theta1, 0.0, std::f64::consts::PI, ANGLE_AXIS_COUNT),
        axis2: Some(Axis::new(
            SweepParam::Theta2,
            0.0,
            std::f64::consts::PI,
            ANGLE_AXIS_COUNT,
        )),
        couplings: Vec::new(),
    };
    vec![PresetCurve {
        label: "grid".into(),
        spec,
    }]
}

const EQUAL_ANGLES: [(f64, f64); 3] = [(0.01, 0.01), (0.1, 0.1), (0.5, 0.5)];
const TILTED_ANGLES: [(f64, f64); 3] = [(0.01, 0.011), (0.1, 0.11), (0.5, 0.51)];
/// theta2 = theta1 + 0.01 pi, listed explicitly to keep labels exact.
const OFFSET_001: [(f64, f64); 3] = [(0.01, 0.02), (0.1, 0.11), (0.5, 0.51)];
/// theta2 = theta1 + 0.1 pi.
const OFFSET_01: [(f64, f64); 3] = [(0.01, 0.11), (0.1, 0.2), (0.5, 0.6)];

/// Builds the sweep(s) reproducing one panel of the figures: concurrence
/// against field magnitude for panels 1-4 (three angle pairs each) and the
/// two-angle contour grids for panels 5-6.
pub fn figure_preset(id: PresetId) -> FigurePreset {
    let curves = match id {
        PresetId::Fig1a => field_curves(&EQUAL_ANGLES, 1.0, 0.0),
        PresetId::Fig1b => field_curves(&EQUAL_ANGLES, 1.0005, 0.0),
        PresetId::Fig1c => field_curves(&TILTED_ANGLES, 1.0, 0.0),
        PresetId::Fig1d => field_curves(&EQUAL_ANGLES, 1.05, 0.0),
        PresetId::Fig2a => field_curves(&OFFSET_001, 1.0005, 0.0),
        PresetId::Fig2b => field_curves(&OFFSET_01, 1.0005, 0.0),
        PresetId::Fig2c => field_curves(&OFFSET_001, 1.05, 0.0),
        PresetId::Fig2d => field_curves(&OFFSET_01, 1.05, 0.0),
        PresetId::Fig3a => field_curves(&EQUAL_ANGLES, 1.0, 0.01),
        PresetId::Fig3b => field_curves(&EQUAL_ANGLES, 1.05, 0.01),
        PresetId::Fig4a => field_curves(&OFFSET_001, 1.0005, 0.1),
        PresetId::Fig4b => field_curves(&OFFSET_01, 1.0005, 0.1),
        PresetId::Fig4c => field_curves(&OFFSET_001, 1.05, 0.1),
        PresetId::Fig4d => field_curves(&OFFSET_01, 1.05, 0.1),
        PresetId::Fig5a => angle_grid(2.1, 2.1, 0.0),
        PresetId::Fig5b => angle_grid(2.1, 6.3, 0.0),
        PresetId::Fig6a => angle_grid(2.1, 2.1, 1.0),
        PresetId::Fig6b => angle_grid(2.1, 6.3, 1.0),
    };
    FigurePreset { id, curves }
}

/// Runs every curve of a preset, tagging results with the preset id.
pub fn run_preset(id: PresetId) -> Result<Vec<(PresetCurve, SweepResult)>> {
    figure_preset(id)
        .curves
        .into_iter()
        .map(|curve| {
            let mut result = run_sweep(&curve.spec)?;
            result.preset = Some(id.name().to_string());
            Ok((curve, result))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn transverse_spec(count: usize) -> SweepSpec {
        SweepSpec {
            base: base(FRAC_PI_2, FRAC_PI_2, 0.0, 0.0, 0.0),
            axis1: Axis::new(SweepParam::B1, 0.01, 4.0, count),
            axis2: None,
            couplings: vec![Coupling {
                target: SweepParam::B2,
                expr: CouplingExpr::Ratio,
                source: SweepParam::B1,
                value: 1.0,
            }],
        }
    }

    #[test]
    fn transverse_sweep_matches_closed_form() {
        let result = run_sweep(&transverse_spec(41)).unwrap();
        for (b, c) in result.axis1.iter().zip(result.values.iter()) {
            let exact = 1.0 / (1.0 + b * b).sqrt();
            assert!((c - exact).abs() <= 1e-9, "B={b}: {c} vs {exact}");
        }
    }

    #[test]
    fn axial_first_field_gives_zero_everywhere() {
        let spec = SweepSpec {
            base: base(0.0, 0.7, 0.0, 1.3, 0.4),
            axis1: Axis::new(SweepParam::B1, 0.0, 5.0, 21),
            axis2: Some(Axis::new(SweepParam::Theta2, 0.0, PI, 11)),
            couplings: Vec::new(),
        };
        let result = run_sweep(&spec).unwrap();
        assert!(result.values.iter().all(|&v| v <= 1e-10));
    }

    #[test]
    fn two_angle_grid_is_swap_symmetric() {
        let spec = SweepSpec {
            base: base(0.0, 0.0, 2.1, 2.1, 0.0),
            axis1: Axis::new(SweepParam::Theta1, 0.0, PI, 21),
            axis2: Some(Axis::new(SweepParam::Theta2, 0.0, PI, 21)),
            couplings: Vec::new(),
        };
        let result = run_sweep(&spec).unwrap();
        for i in 0..21 {
            for j in 0..21 {
                let a = result.values[i * 21 + j];
                let b = result.values[j * 21 + i];
                assert!((a - b).abs() <= 1e-12, "({i},{j}): {a} vs {b}");
            }
        }
    }

    #[test]
    fn argmax_tie_breaks_to_first_point() {
        let spec = SweepSpec {
            base: base(0.0, 0.5, 0.0, 1.0, 0.5),
            axis1: Axis::new(SweepParam::B1, 0.0, 2.0, 5),
            axis2: None,
            couplings: Vec::new(),
        };
        // theta1 = 0 everywhere: all-zero grid
        let result = run_sweep(&spec).unwrap();
        assert!(result.values.iter().all(|&v| v == 0.0));
        let m = argmax(&result);
        assert_eq!(m.index, 0);
        assert_eq!(m.i1, 0);
        assert_eq!(m.value, 0.0);
    }

    #[test]
    fn refinement_keeps_shared_points() {
        let coarse = run_sweep(&transverse_spec(11)).unwrap();
        let fine = run_sweep(&transverse_spec(21)).unwrap();
        for k in 0..11 {
            let a = coarse.values[k];
            let b = fine.values[2 * k];
            assert!((a - b).abs() <= 1e-12, "point {k}: {a} vs {b}");
        }
    }

    #[test]
    fn parallel_evaluation_is_deterministic() {
        let spec = transverse_spec(101);
        let a = run_sweep(&spec).unwrap();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let b = pool.install(|| run_sweep(&spec)).unwrap();
        assert_eq!(a.values, b.values);
        let c = run_sweep(&spec).unwrap();
        assert_eq!(a.values, c.values);
    }

    #[test]
    fn errors_carry_grid_coordinates() {
        let spec = SweepSpec {
            base: base(0.1, 0.1, 0.0, 0.0, 0.0),
            axis1: Axis::new(SweepParam::B1, -1.0, 1.0, 5),
            axis2: None,
            couplings: Vec::new(),
        };
        match run_sweep(&spec) {
            Err(Error::SweepPoint { index, coords, .. }) => {
                assert_eq!(index, 0);
                assert!(coords.contains("B1 = -1"));
            }
            other => panic!("expected SweepPoint error, got {other:?}"),
        }
    }

    #[test]
    fn validation_rejects_bad_axes_and_couplings() {
        let mut spec = transverse_spec(41);
        spec.axis1.count = 1;
        assert!(matches!(run_sweep(&spec), Err(Error::InvalidSpec { .. })));
        let mut spec = transverse_spec(41);
        spec.axis1.stop = spec.axis1.start;
        assert!(matches!(run_sweep(&spec), Err(Error::InvalidSpec { .. })));
        let mut spec = transverse_spec(41);
        spec.couplings[0].target = SweepParam::B1;
        assert!(matches!(run_sweep(&spec), Err(Error::InvalidSpec { .. })));
    }

    #[test]
    fn preset_table_matches_captions() {
        let p = figure_preset(PresetId::Fig1a);
        assert_eq!(p.curves.len(), 3);
        assert_eq!(p.curves[0].spec.base.theta1(), 0.01 * PI);
        assert_eq!(p.curves[0].spec.base.temperature(), 0.0);
        assert_eq!(p.curves[0].spec.couplings[0].value, 1.0);

        let p = figure_preset(PresetId::Fig1b);
        assert_eq!(p.curves[1].spec.couplings[0].value, 1.0005);

        let p = figure_preset(PresetId::Fig1c);
        assert_eq!(p.curves[2].spec.base.theta1(), 0.5 * PI);
        assert_eq!(p.curves[2].spec.base.theta2(), 0.51 * PI);

        // fig3a is fig1a at T = 0.01; fig3b is fig1d at T = 0.01
        let p = figure_preset(PresetId::Fig3a);
        assert_eq!(p.curves[0].spec.base.temperature(), 0.01);
        assert_eq!(p.curves[0].spec.couplings[0].value, 1.0);
        let p = figure_preset(PresetId::Fig3b);
        assert_eq!(p.curves[0].spec.couplings[0].value, 1.05);

        // fig4 panels are fig2 at T = 0.1
        let p = figure_preset(PresetId::Fig4b);
        assert_eq!(p.curves[0].spec.base.temperature(), 0.1);
        assert_eq!(p.curves[0].spec.base.theta2(), 0.11 * PI);

        // contours
        let p = figure_preset(PresetId::Fig5b);
        assert_eq!(p.curves.len(), 1);
        assert_eq!(p.curves[0].spec.base.b1(), 2.1);
        assert_eq!(p.curves[0].spec.base.b2(), 6.3);
        assert!(p.curves[0].spec.axis2.is_some());
        let p = figure_preset(PresetId::Fig6a);
        assert_eq!(p.curves[0].spec.base.temperature(), 1.0);
    }

    #[test]
    fn preset_ids_round_trip_through_names() {
        for id in ALL_PRESETS {
            let parsed: PresetId = id.name().parse().unwrap();
            assert_eq!(parsed, id);
        }
        assert!(matches!(
            "fig9z".parse::<PresetId>(),
            Err(Error::UnknownPreset(_))
        ));
    }
}
