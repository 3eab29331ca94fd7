//! Scene document loading.
//!
//! Scenes are JSON snapshots of perceived instances. Every value is checked
//! against the model's domain registry and converted to base units here, so
//! the engine never sees an unknown dimension or a non-base quantity.

use std::path::Path;

use serde::{Deserialize, Serialize};

use rpsl_core::analyzer::ResolvedModel;
use rpsl_core::model::{DimRef, Knoxel, Quantity, Unit};
use rpsl_core::query::{InstanceRecord, Pose, Scene};

use crate::app::Failure;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SceneDoc {
    frame: String,
    stamp_ms: u64,
    instances: Vec<InstanceDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceDoc {
    id: String,
    #[serde(default)]
    values: Vec<ValueDoc>,
    pose: Option<PoseDoc>,
    stamp_ms: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ValueDoc {
    /// Qualified dimension, `Domain.Dimension`.
    dim: String,
    value: f64,
    unit: String,
}

/// Position in mm, orientation as a unit quaternion.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoseDoc {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub qx: f64,
    pub qy: f64,
    pub qz: f64,
    pub qw: f64,
}

impl From<Pose> for PoseDoc {
    fn from(p: Pose) -> Self {
        PoseDoc {
            x: p.x,
            y: p.y,
            z: p.z,
            qx: p.qx,
            qy: p.qy,
            qz: p.qz,
            qw: p.qw,
        }
    }
}

pub fn load_scene(path: &Path, model: &ResolvedModel) -> Result<Scene, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::runtime(format!("cannot read {}: {e}", path.display())))?;
    parse_scene(&text, model)
        .map_err(|reason| Failure::runtime(format!("scene {}: {reason}", path.display())))
}

fn parse_scene(text: &str, model: &ResolvedModel) -> Result<Scene, String> {
    let doc: SceneDoc = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let mut instances = Vec::with_capacity(doc.instances.len());
    let mut seen_ids = std::collections::BTreeSet::new();
    for inst in doc.instances {
        if !seen_ids.insert(inst.id.clone()) {
            return Err(format!("duplicate instance id `{}`", inst.id));
        }
        let mut knoxel = Knoxel::new();
        for v in &inst.values {
            let (dim, quantity) = check_value(v, model)
                .map_err(|reason| format!("instance `{}`: {reason}", inst.id))?;
            knoxel.insert(dim, quantity.in_base_unit());
        }
        let pose = match inst.pose {
            None => None,
            Some(p) => Some(check_pose(&p).map_err(|reason| {
                format!("instance `{}`: {reason}", inst.id)
            })?),
        };
        instances.push(InstanceRecord {
            id: inst.id,
            knoxel,
            pose,
            stamp_ms: inst.stamp_ms,
        });
    }
    Ok(Scene {
        frame: doc.frame,
        stamp_ms: doc.stamp_ms,
        instances,
    })
}

fn check_value(v: &ValueDoc, model: &ResolvedModel) -> Result<(DimRef, Quantity), String> {
    let (domain_name, dim_name) = v
        .dim
        .split_once('.')
        .ok_or_else(|| format!("value dim `{}` is not of the form Domain.Dimension", v.dim))?;
    let dimension = model
        .domains
        .get(domain_name)
        .and_then(|d| d.dimension(dim_name))
        .ok_or_else(|| format!("unknown dimension `{}`", v.dim))?;
    let unit = Unit::parse_symbol(&v.unit)
        .ok_or_else(|| format!("unknown unit `{}` on `{}`", v.unit, v.dim))?;
    if unit.kind() != dimension.unit_kind {
        return Err(format!(
            "unit `{unit}` on `{}` is a {} unit; the dimension is {}",
            v.dim,
            unit.kind(),
            dimension.unit_kind
        ));
    }
    Ok((
        DimRef::new(domain_name, dim_name),
        Quantity::new(v.value, unit),
    ))
}

fn check_pose(p: &PoseDoc) -> Result<Pose, String> {
    let norm = (p.qx * p.qx + p.qy * p.qy + p.qz * p.qz + p.qw * p.qw).sqrt();
    if (norm - 1.0).abs() > 1e-6 {
        return Err(format!("quaternion norm {norm} is not 1"));
    }
    Ok(Pose {
        x: p.x,
        y: p.y,
        z: p.z,
        qx: p.qx,
        qy: p.qy,
        qz: p.qz,
        qw: p.qw,
    })
}
