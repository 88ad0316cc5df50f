//! Physics-free articulated safe.
//!
//! A safe is three joints (knob, handle, door) with ranges and lock flags.
//! The only discretization anywhere in the pipeline is the *part-phase*: a
//! joint is open iff its normalized displacement reaches the joint's open
//! threshold. All operations are pure functions over value types.

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SafeError {
    /// A manipulation attempt on a locked joint; motion rejected, state unchanged.
    #[error("joint {0} is locked")]
    JointLocked(JointName),
    #[error("invalid joint spec for {joint}: {reason}")]
    InvalidSpec { joint: String, reason: String },
    #[error("unknown asset preset '{0}'")]
    UnknownAsset(String),
    #[error("failed to read asset file: {0}")]
    AssetFile(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JointName {
    Knob,
    Handle,
    Door,
}

impl JointName {
    pub const ALL: [JointName; 3] = [JointName::Knob, JointName::Handle, JointName::Door];

    pub fn index(self) -> usize {
        match self {
            JointName::Knob => 0,
            JointName::Handle => 1,
            JointName::Door => 2,
        }
    }
}

impl std::fmt::Display for JointName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            JointName::Knob => "knob",
            JointName::Handle => "handle",
            JointName::Door => "door",
        };
        write!(f, "{name}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JointKind {
    /// Angular joint, values in radians.
    Revolute,
    /// Translational joint, values in meters.
    Prismatic,
}

/// One joint of a safe: kind, value range, open threshold, initial value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JointSpec {
    pub name: JointName,
    pub kind: JointKind,
    pub range_lo: f64,
    pub range_hi: f64,
    /// Fraction of the range at which the joint counts as open, in (0, 1).
    pub open_threshold: f64,
    pub initial_value: f64,
}

impl JointSpec {
    pub fn new(
        name: JointName,
        kind: JointKind,
        range_lo: f64,
        range_hi: f64,
        open_threshold: f64,
        initial_value: f64,
    ) -> Result<Self, SafeError> {
        let spec = JointSpec {
            name,
            kind,
            range_lo,
            range_hi,
            open_threshold,
            initial_value,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<(), SafeError> {
        let fail = |reason: &str| {
            Err(SafeError::InvalidSpec {
                joint: self.name.to_string(),
                reason: reason.to_string(),
            })
        };
        if !(self.range_lo < self.range_hi) {
            return fail("range_lo must be < range_hi");
        }
        if !(self.open_threshold > 0.0 && self.open_threshold < 1.0) {
            return fail("open_threshold must lie in (0, 1)");
        }
        if self.initial_value < self.range_lo || self.initial_value > self.range_hi {
            return fail("initial_value outside range");
        }
        Ok(())
    }

    pub fn span(&self) -> f64 {
        self.range_hi - self.range_lo
    }
}

/// Planar placement of a safe on the desk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pose {
    pub x: f64,
    pub y: f64,
    pub yaw: f64,
}

/// Uniform sampling ranges for [`randomize_pose`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoseBounds {
    pub x: [f64; 2],
    pub y: [f64; 2],
    pub yaw: [f64; 2],
}

impl PoseBounds {
    fn validate(&self) -> bool {
        self.x[0] <= self.x[1] && self.y[0] <= self.y[1] && self.yaw[0] <= self.yaw[1]
    }
}

/// A concrete safe instance: asset preset joints plus a pose.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SafeModel {
    pub asset_id: String,
    /// Exactly one spec per joint, indexed by [`JointName::index`].
    pub joints: [JointSpec; 3],
    pub pose: Pose,
    pub pose_bounds: PoseBounds,
}

impl SafeModel {
    pub fn joint(&self, name: JointName) -> &JointSpec {
        &self.joints[name.index()]
    }
}

/// Continuous joint values plus per-joint lock flags.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SafeState {
    pub values: [f64; 3],
    pub locks: [bool; 3],
}

impl SafeState {
    /// State at reset: every joint at its initial value, locks as given.
    pub fn reset(model: &SafeModel, locks: [bool; 3]) -> Self {
        SafeState {
            values: [
                model.joints[0].initial_value,
                model.joints[1].initial_value,
                model.joints[2].initial_value,
            ],
            locks,
        }
    }

    pub fn value(&self, joint: JointName) -> f64 {
        self.values[joint.index()]
    }

    pub fn locked(&self, joint: JointName) -> bool {
        self.locks[joint.index()]
    }
}

/// Discretized open/closed status of the three joints.
///
/// Derived from `(SafeState, SafeModel)` by [`part_phase`]; nothing else in
/// the pipeline is allowed to invent one for a concrete state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartPhaseVector {
    pub knob_open: bool,
    pub handle_open: bool,
    pub door_open: bool,
}

impl PartPhaseVector {
    pub const ALL_CLOSED: PartPhaseVector = PartPhaseVector {
        knob_open: false,
        handle_open: false,
        door_open: false,
    };

    pub fn get(&self, joint: JointName) -> bool {
        match joint {
            JointName::Knob => self.knob_open,
            JointName::Handle => self.handle_open,
            JointName::Door => self.door_open,
        }
    }

    pub fn with(&self, joint: JointName, open: bool) -> PartPhaseVector {
        let mut next = *self;
        match joint {
            JointName::Knob => next.knob_open = open,
            JointName::Handle => next.handle_open = open,
            JointName::Door => next.door_open = open,
        }
        next
    }

    pub fn as_array(&self) -> [bool; 3] {
        [self.knob_open, self.handle_open, self.door_open]
    }
}

/// Normalized displacement of a joint, in [0, 1].
pub fn openness(state: &SafeState, joint: JointName, model: &SafeModel) -> f64 {
    let spec = model.joint(joint);
    (state.value(joint) - spec.range_lo) / spec.span()
}

/// Joint j is open iff its openness reaches the joint's threshold.
pub fn part_phase(state: &SafeState, model: &SafeModel) -> PartPhaseVector {
    let open = |j: JointName| openness(state, j, model) >= model.joint(j).open_threshold;
    PartPhaseVector {
        knob_open: open(JointName::Knob),
        handle_open: open(JointName::Handle),
        door_open: open(JointName::Door),
    }
}

/// Moves a joint by `delta`, clamping to its range.
///
/// A locked joint rejects the motion and the state is returned unchanged
/// inside the error.
pub fn apply_joint_delta(
    state: &SafeState,
    joint: JointName,
    delta: f64,
    model: &SafeModel,
) -> Result<SafeState, SafeError> {
    if state.locked(joint) {
        return Err(SafeError::JointLocked(joint));
    }
    let spec = model.joint(joint);
    let mut next = *state;
    next.values[joint.index()] =
        (state.value(joint) + delta).clamp(spec.range_lo, spec.range_hi);
    Ok(next)
}

/// Returns a copy of the model with a pose drawn uniformly from `bounds`.
///
/// Joints are untouched. Bit-reproducible for a given generator state.
pub fn randomize_pose<R: Rng>(model: &SafeModel, rng: &mut R, bounds: &PoseBounds) -> SafeModel {
    assert!(bounds.validate(), "degenerate pose bounds");
    let draw = |rng: &mut R, range: [f64; 2]| {
        if range[0] == range[1] {
            range[0]
        } else {
            rng.gen_range(range[0]..=range[1])
        }
    };
    let mut out = model.clone();
    out.pose = Pose {
        x: draw(rng, bounds.x),
        y: draw(rng, bounds.y),
        yaw: draw(rng, bounds.yaw),
    };
    out
}

// ---------------------------------------------------------------------------
// Asset presets
// ---------------------------------------------------------------------------

const DEG: f64 = std::f64::consts::PI / 180.0;

/// Serialized form of one asset preset, also the JSON file schema.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AssetPreset {
    pub asset_id: String,
    pub joints: Vec<PresetJoint>,
    pub pose_bounds: PoseBounds,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PresetJoint {
    pub name: JointName,
    pub kind: JointKind,
    pub lo: f64,
    pub hi: f64,
    pub threshold: f64,
    pub init: f64,
}

impl AssetPreset {
    pub fn build(&self) -> Result<SafeModel, SafeError> {
        let mut specs: [Option<JointSpec>; 3] = [None, None, None];
        for joint in &self.joints {
            let spec = JointSpec::new(
                joint.name,
                joint.kind,
                joint.lo,
                joint.hi,
                joint.threshold,
                joint.init,
            )?;
            let slot = &mut specs[joint.name.index()];
            if slot.is_some() {
                return Err(SafeError::InvalidSpec {
                    joint: joint.name.to_string(),
                    reason: "duplicate joint in preset".to_string(),
                });
            }
            *slot = Some(spec);
        }
        let [knob, handle, door] = specs;
        let missing = |j: &str| SafeError::InvalidSpec {
            joint: j.to_string(),
            reason: "missing from preset".to_string(),
        };
        Ok(SafeModel {
            asset_id: self.asset_id.clone(),
            joints: [
                knob.ok_or_else(|| missing("knob"))?,
                handle.ok_or_else(|| missing("handle"))?,
                door.ok_or_else(|| missing("door"))?,
            ],
            pose: Pose {
                x: 0.0,
                y: 0.0,
                yaw: 0.0,
            },
            pose_bounds: self.pose_bounds,
        })
    }
}

const DEFAULT_POSE_BOUNDS: PoseBounds = PoseBounds {
    x: [-0.12, 0.12],
    y: [0.38, 0.55],
    yaw: [-0.35, 0.35],
};

/// The ten built-in safes. Knob/handle ranges sit around 60 degrees and the
/// door around 90 degrees, with per-asset spread in spans and thresholds;
/// two assets use a prismatic (drawer style) door.
pub fn builtin_assets() -> Vec<AssetPreset> {
    // (knob_hi_deg, knob_thr, handle_hi_deg, handle_thr, door_kind, door_hi, door_thr)
    let rows: [(f64, f64, f64, f64, JointKind, f64, f64); 10] = [
        (60.0, 0.50, 60.0, 0.50, JointKind::Revolute, 90.0 * DEG, 0.50),
        (52.0, 0.45, 66.0, 0.55, JointKind::Revolute, 84.0 * DEG, 0.45),
        (70.0, 0.55, 55.0, 0.42, JointKind::Revolute, 96.0 * DEG, 0.55),
        (48.0, 0.40, 72.0, 0.48, JointKind::Revolute, 80.0 * DEG, 0.40),
        (66.0, 0.58, 49.0, 0.52, JointKind::Revolute, 104.0 * DEG, 0.58),
        (55.0, 0.52, 63.0, 0.60, JointKind::Revolute, 88.0 * DEG, 0.52),
        (63.0, 0.47, 58.0, 0.46, JointKind::Revolute, 100.0 * DEG, 0.47),
        (58.0, 0.60, 68.0, 0.44, JointKind::Prismatic, 0.32, 0.50),
        (50.0, 0.43, 53.0, 0.57, JointKind::Prismatic, 0.28, 0.45),
        (68.0, 0.54, 61.0, 0.41, JointKind::Revolute, 92.0 * DEG, 0.54),
    ];
    rows.iter()
        .enumerate()
        .map(|(i, row)| AssetPreset {
            asset_id: format!("asset_{i:03}"),
            joints: vec![
                PresetJoint {
                    name: JointName::Knob,
                    kind: JointKind::Revolute,
                    lo: 0.0,
                    hi: row.0 * DEG,
                    threshold: row.1,
                    init: 0.0,
                },
                PresetJoint {
                    name: JointName::Handle,
                    kind: JointKind::Revolute,
                    lo: 0.0,
                    hi: row.2 * DEG,
                    threshold: row.3,
                    init: 0.0,
                },
                PresetJoint {
                    name: JointName::Door,
                    kind: row.4,
                    lo: 0.0,
                    hi: row.5,
                    threshold: row.6,
                    init: 0.0,
                },
            ],
            pose_bounds: DEFAULT_POSE_BOUNDS,
        })
        .collect()
}

/// Resolves a registered preset to a model at the identity pose.
pub fn asset(asset_id: &str) -> Result<SafeModel, SafeError> {
    builtin_assets()
        .iter()
        .find(|preset| preset.asset_id == asset_id)
        .ok_or_else(|| SafeError::UnknownAsset(asset_id.to_string()))?
        .build()
}

/// Loads presets from a JSON file (same schema as the built-in table).
pub fn load_assets(path: &std::path::Path) -> Result<Vec<AssetPreset>, SafeError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| SafeError::AssetFile(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| SafeError::AssetFile(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn model() -> SafeModel {
        asset("asset_000").unwrap()
    }

    #[test]
    fn ten_assets_register_and_build() {
        let presets = builtin_assets();
        assert_eq!(presets.len(), 10);
        for preset in &presets {
            let model = preset.build().unwrap();
            assert_eq!(model.asset_id, preset.asset_id);
        }
        assert!(matches!(
            asset("asset_999"),
            Err(SafeError::UnknownAsset(_))
        ));
    }

    #[test]
    fn part_phase_at_range_ends() {
        let model = model();
        let state = SafeState::reset(&model, [false; 3]);
        let phase = part_phase(&state, &model);
        assert_eq!(phase, PartPhaseVector::ALL_CLOSED);

        let mut open = state;
        open.values[0] = model.joint(JointName::Knob).range_hi;
        assert!(part_phase(&open, &model).knob_open);
    }

    #[test]
    fn part_phase_threshold_boundary() {
        // Threshold 0.5 on asset_000's knob: 49% of range is closed, 50% open.
        let model = model();
        let spec = model.joint(JointName::Knob);
        assert_eq!(spec.open_threshold, 0.5);
        let mut state = SafeState::reset(&model, [false; 3]);
        state.values[0] = spec.range_lo + 0.49 * spec.span();
        assert!(!part_phase(&state, &model).knob_open);
        state.values[0] = spec.range_lo + 0.50 * spec.span();
        assert!(part_phase(&state, &model).knob_open);
    }

    #[test]
    fn openness_is_linear_in_value() {
        let model = model();
        let spec = model.joint(JointName::Handle);
        let mut state = SafeState::reset(&model, [false; 3]);
        state.values[1] = spec.range_lo;
        assert_eq!(openness(&state, JointName::Handle, &model), 0.0);
        state.values[1] = spec.range_hi;
        assert_eq!(openness(&state, JointName::Handle, &model), 1.0);
        state.values[1] = spec.range_lo + 0.5 * spec.span();
        assert!((openness(&state, JointName::Handle, &model) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn openness_agrees_with_part_phase() {
        let model = model();
        let mut state = SafeState::reset(&model, [false; 3]);
        for step in 0..=100 {
            let frac = step as f64 / 100.0;
            for joint in JointName::ALL {
                let spec = model.joint(joint);
                state.values[joint.index()] = spec.range_lo + frac * spec.span();
            }
            let phase = part_phase(&state, &model);
            for joint in JointName::ALL {
                let open = openness(&state, joint, &model) >= model.joint(joint).open_threshold;
                assert_eq!(open, phase.get(joint));
            }
        }
    }

    #[test]
    fn delta_clamps_and_respects_locks() {
        let model = model();
        let state = SafeState::reset(&model, [false, false, true]);
        let spec = model.joint(JointName::Knob);

        let moved = apply_joint_delta(&state, JointName::Knob, spec.span(), &model).unwrap();
        assert_eq!(moved.value(JointName::Knob), spec.range_hi);

        // Saturation: pushing past the end stays at the end.
        let still = apply_joint_delta(&moved, JointName::Knob, 1.0, &model).unwrap();
        assert_eq!(still.value(JointName::Knob), spec.range_hi);

        let err = apply_joint_delta(&state, JointName::Door, 0.1, &model).unwrap_err();
        assert_eq!(err, SafeError::JointLocked(JointName::Door));
    }

    #[test]
    fn pose_randomization_is_seeded_and_bounded() {
        let model = model();
        let bounds = PoseBounds {
            x: [-0.2, 0.2],
            y: [0.3, 0.5],
            yaw: [-0.4, 0.4],
        };
        let mut rng_a = ChaCha8Rng::seed_from_u64(11);
        let mut rng_b = ChaCha8Rng::seed_from_u64(11);
        let a = randomize_pose(&model, &mut rng_a, &bounds);
        let b = randomize_pose(&model, &mut rng_b, &bounds);
        assert_eq!(a.pose, b.pose);
        assert_eq!(a.joints, model.joints);

        let point = PoseBounds {
            x: [0.05, 0.05],
            y: [0.4, 0.4],
            yaw: [0.0, 0.0],
        };
        let fixed = randomize_pose(&model, &mut rng_a, &point);
        assert_eq!(
            fixed.pose,
            Pose {
                x: 0.05,
                y: 0.4,
                yaw: 0.0
            }
        );
    }

    #[test]
    fn pose_randomization_empirical_moments() {
        // 10k draws: min/max inside bounds, mean within 3 sigma of center.
        let model = model();
        let bounds = PoseBounds {
            x: [-0.1, 0.3],
            y: [0.2, 0.6],
            yaw: [-0.5, 0.5],
        };
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let n = 10_000;
        let mut sum = [0.0f64; 3];
        let mut lo = [f64::INFINITY; 3];
        let mut hi = [f64::NEG_INFINITY; 3];
        for _ in 0..n {
            let m = randomize_pose(&model, &mut rng, &bounds);
            for (i, v) in [m.pose.x, m.pose.y, m.pose.yaw].into_iter().enumerate() {
                sum[i] += v;
                lo[i] = lo[i].min(v);
                hi[i] = hi[i].max(v);
            }
        }
        let ranges = [bounds.x, bounds.y, bounds.yaw];
        for i in 0..3 {
            assert!(lo[i] >= ranges[i][0] && hi[i] <= ranges[i][1]);
            let center = 0.5 * (ranges[i][0] + ranges[i][1]);
            let width = ranges[i][1] - ranges[i][0];
            let sigma_mean = width / (12.0f64).sqrt() / (n as f64).sqrt();
            assert!(
                (sum[i] / n as f64 - center).abs() < 3.0 * sigma_mean,
                "axis {i} mean off-center"
            );
        }
    }

    #[test]
    fn preset_json_round_trip() {
        let presets = builtin_assets();
        let json = serde_json::to_string(&presets).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("assets.json");
        std::fs::write(&path, json).unwrap();
        let loaded = load_assets(&path).unwrap();
        assert_eq!(loaded.len(), presets.len());
        assert_eq!(loaded[3].build().unwrap(), presets[3].build().unwrap());
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(JointSpec::new(JointName::Knob, JointKind::Revolute, 1.0, 0.0, 0.5, 0.0).is_err());
        assert!(JointSpec::new(JointName::Knob, JointKind::Revolute, 0.0, 1.0, 1.5, 0.0).is_err());
        assert!(JointSpec::new(JointName::Knob, JointKind::Revolute, 0.0, 1.0, 0.5, 2.0).is_err());
    }
}
