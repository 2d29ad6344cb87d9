//! Simulation parameters and deployment options.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::SimError;
use crate::nfv::resources::ResourceProfile;

/// How the 3GPP Management System and NFV-MANO are deployed relative to the
/// zero-touch management fabric.
///
/// * `OneA` — 3GPP MS and MANO both integrated as fabric services.
/// * `OneB` — 3GPP MS integrated, MANO standalone behind an adapter.
/// * `Two`  — fabric complementary; 3GPP MS and MANO standalone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DeploymentOption {
    OneA,
    OneB,
    Two,
}

impl fmt::Display for DeploymentOption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeploymentOption::OneA => write!(f, "1A"),
            DeploymentOption::OneB => write!(f, "1B"),
            DeploymentOption::Two => write!(f, "2"),
        }
    }
}

impl FromStr for DeploymentOption {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "1A" => Ok(DeploymentOption::OneA),
            "1B" => Ok(DeploymentOption::OneB),
            "2" => Ok(DeploymentOption::Two),
            other => Err(SimError::Config(format!("unknown deployment option `{other}`"))),
        }
    }
}

/// Tunable thresholds and model constants. Defaults match the reference
/// configuration used throughout the test suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimParams {
    /// Short-term forecast horizon limit (ticks). At or below this the
    /// control-plane NWDAF answers; above it the management-plane analytics do.
    pub h_short: u64,
    /// Moving-average window for the control-plane forecaster.
    pub w_short: usize,
    /// Baseline window length for anomaly detection.
    pub w_base: usize,
    /// Consecutive confirmations required before an anomaly event is raised.
    pub k: usize,
    /// Absolute response-time threshold (ms) that counts as a breach on its own.
    pub t_abs_ms: f64,
    /// Utilization at or above which a detected anomaly is treated as load-driven.
    pub u_hi: f64,
    /// Post-scaling utilization target used to size scale requests.
    pub u_target: f64,
    /// Requests/s one vCPU can serve.
    pub capacity_per_vcpu: f64,
    /// Idle response time (ms) of a modeled NF.
    pub base_rt_ms: f64,
    /// Zero-mean uniform jitter amplitude (ms) added to response-time samples.
    /// Zero keeps every derived value exact.
    pub jitter_ms: f64,
    /// Collapse all per-PoP Virtualization domains into a single one.
    pub single_virt_domain: bool,
    /// Resources a fresh VNF starts with.
    pub vnf_initial: ResourceProfile,
    /// Lifecycle ceiling for any VNF.
    pub vnf_max: ResourceProfile,
}

/// Utilization is capped at `1 - UTIL_EPS` so the response-time curve stays finite.
pub const UTIL_EPS: f64 = 0.01;

impl Default for SimParams {
    fn default() -> Self {
        SimParams {
            h_short: 10,
            w_short: 5,
            w_base: 20,
            k: 3,
            t_abs_ms: 100.0,
            u_hi: 0.8,
            u_target: 0.5,
            capacity_per_vcpu: 10.0,
            base_rt_ms: 10.0,
            jitter_ms: 0.0,
            single_virt_domain: false,
            vnf_initial: ResourceProfile { vcpu: 1, memory_mib: 1024, storage_gib: 10 },
            vnf_max: ResourceProfile { vcpu: 8, memory_mib: 8192, storage_gib: 80 },
        }
    }
}

impl SimParams {
    /// Window length the anomaly detector operates on.
    pub fn detection_window(&self) -> usize {
        self.w_base + self.k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn option_round_trips_through_display() {
        for opt in [DeploymentOption::OneA, DeploymentOption::OneB, DeploymentOption::Two] {
            assert_eq!(opt.to_string().parse::<DeploymentOption>().unwrap(), opt);
        }
    }

    #[test]
    fn option_parse_rejects_garbage() {
        assert!(matches!("3C".parse::<DeploymentOption>(), Err(SimError::Config(_))));
    }
}
