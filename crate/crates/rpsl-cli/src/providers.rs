//! Provider configuration loading and the wall clock.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Deserialize;

use rpsl_core::analyzer::ResolvedModel;
use rpsl_core::exec::{Clock, InMemoryProvider};

use crate::app::Failure;
use crate::scene::load_scene;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProvidersDoc {
    #[serde(default)]
    default_latency_ms: u64,
    /// Scene answered for specs without a `per_spec` entry.
    default_scene: Option<PathBuf>,
    #[serde(default)]
    per_spec: BTreeMap<String, PerSpecDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PerSpecDoc {
    latency_ms: Option<u64>,
    scene: Option<PathBuf>,
}

/// Reads a provider configuration and eagerly loads every scene it names,
/// so malformed scenes fail the command up front rather than mid-plan.
/// Scene paths are relative to the working directory.
pub fn load_providers(path: &Path, model: &ResolvedModel) -> Result<InMemoryProvider, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::runtime(format!("cannot read {}: {e}", path.display())))?;
    let doc: ProvidersDoc = serde_json::from_str(&text)
        .map_err(|e| Failure::runtime(format!("providers {}: {e}", path.display())))?;
    let mut provider = InMemoryProvider::new(doc.default_latency_ms);
    if let Some(scene_path) = &doc.default_scene {
        provider = provider.with_default_scene(load_scene(scene_path, model)?);
    }
    for (spec, entry) in &doc.per_spec {
        let scene = match &entry.scene {
            Some(scene_path) => Some(load_scene(scene_path, model)?),
            None => None,
        };
        provider = provider.with_spec(spec, entry.latency_ms, scene);
    }
    Ok(provider)
}

/// Milliseconds since process start. `advance` sleeps, so configured
/// provider latencies take real time under `--clock real`.
pub struct RealTimeClock {
    origin: Instant,
}

impl RealTimeClock {
    pub fn new() -> Self {
        RealTimeClock {
            origin: Instant::now(),
        }
    }
}

impl Clock for RealTimeClock {
    fn now(&mut self) -> u64 {
        self.origin.elapsed().as_millis() as u64
    }

    fn advance(&mut self, ms: u64) {
        std::thread::sleep(std::time::Duration::from_millis(ms));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_clock_advance_takes_real_time() {
        let mut clock = RealTimeClock::new();
        let before = clock.now();
        clock.advance(15);
        assert!(clock.now() >= before + 15);
    }
}
