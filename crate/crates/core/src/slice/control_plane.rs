//! Control-plane halves of the management overlaps: NWDAF short-term
//! forecasting, UDSF localized storage, and PCF policy enforcement.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::config::SimParams;
use crate::error::{Result, SimError};
use crate::zsm::telemetry::TelemetrySample;

/// Where a stored sample ended up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StorageLocation {
    Udsf,
    DomainDataStorage,
}

/// Storage class of a sample offered to the UDSF: data for localized
/// (control-plane) functionality stays here, management data is passed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StorageClass {
    Localized,
    Management,
}

/// Per-slice unstructured data store. Only localized data is retained;
/// management-class samples are forwarded to Domain Data Storage by the
/// caller, which receives `DomainDataStorage` as the location.
#[derive(Debug, Default, Clone)]
pub struct UdsfStore {
    entries: BTreeMap<String, TelemetrySample>,
}

impl UdsfStore {
    pub fn store(&mut self, key: &str, sample: TelemetrySample, class: StorageClass) -> StorageLocation {
        match class {
            StorageClass::Localized => {
                self.entries.insert(key.to_string(), sample);
                StorageLocation::Udsf
            }
            StorageClass::Management => StorageLocation::DomainDataStorage,
        }
    }

    pub fn get(&self, key: &str) -> Option<&TelemetrySample> {
        self.entries.get(key)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Response-time series for one NF, in tick order.
    pub fn response_time_series(&self, nf_id: &str) -> Vec<f64> {
        let mut rows: Vec<(&TelemetrySample, f64)> = self
            .entries
            .values()
            .filter(|s| s.nf_id == nf_id)
            .map(|s| (s, s.value))
            .collect();
        rows.sort_by_key(|(s, _)| s.tick);
        rows.into_iter().map(|(_, v)| v).collect()
    }
}

/// NWDAF short-term forecast: a moving average over the last `w_short`
/// samples. Horizons beyond `h_short` belong to the management-plane
/// analytics and are refused here so the caller can re-route.
pub fn nwdaf_forecast(samples: &[f64], horizon: u64, params: &SimParams) -> Result<f64> {
    if horizon > params.h_short {
        return Err(SimError::HorizonTooLong { horizon, h_short: params.h_short });
    }
    if samples.len() < params.w_short {
        return Err(SimError::InsufficientData { needed: params.w_short, got: samples.len() });
    }
    let window = &samples[samples.len() - params.w_short..];
    Ok(window.iter().sum::<f64>() / window.len() as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PolicyKind {
    Static,
    Dynamic,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ControlPlanePolicy {
    pub policy_id: String,
    pub kind: PolicyKind,
    pub target_nf: String,
    pub body: String,
    pub installed_at: u64,
    /// Decision id that produced the policy; mandatory for dynamic policies.
    pub provenance: Option<String>,
}

impl ControlPlanePolicy {
    /// Policy identity without the `-v<N>` version suffix. Dynamic policies
    /// sharing a stem replace each other.
    pub fn stem(&self) -> &str {
        stem_of(&self.policy_id)
    }
}

pub fn stem_of(policy_id: &str) -> &str {
    if let Some(pos) = policy_id.rfind("-v") {
        if policy_id[pos + 2..].chars().all(|c| c.is_ascii_digit())
            && !policy_id[pos + 2..].is_empty()
        {
            return &policy_id[..pos];
        }
    }
    policy_id
}

/// PCF-side active policy set of one slice.
#[derive(Debug, Default, Clone)]
pub struct PcfState {
    statics: BTreeMap<String, ControlPlanePolicy>,
    dynamics: BTreeMap<String, ControlPlanePolicy>,
}

impl PcfState {
    /// Installs a policy. Static policies are install-once; a dynamic policy
    /// replaces any prior dynamic policy with the same id stem. The target NF
    /// must exist (checked by the caller against the slice) before calling.
    pub fn install(&mut self, policy: ControlPlanePolicy) -> Result<()> {
        if policy.kind == PolicyKind::Dynamic && policy.provenance.is_none() {
            return Err(SimError::InvariantViolation(format!(
                "dynamic policy `{}` lacks decision provenance",
                policy.policy_id
            )));
        }
        match policy.kind {
            PolicyKind::Static => {
                if self.statics.contains_key(&policy.policy_id) {
                    return Err(SimError::StaticReinstall(policy.policy_id));
                }
                self.statics.insert(policy.policy_id.clone(), policy);
            }
            PolicyKind::Dynamic => {
                self.dynamics.insert(policy.stem().to_string(), policy);
            }
        }
        Ok(())
    }

    pub fn active_set(&self) -> Vec<&ControlPlanePolicy> {
        self.statics.values().chain(self.dynamics.values()).collect()
    }

    pub fn active_ids(&self) -> Vec<&str> {
        self.active_set().into_iter().map(|p| p.policy_id.as_str()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zsm::telemetry::{Metric, TelemetrySample};

    fn sample(nf: &str, tick: u64, value: f64) -> TelemetrySample {
        TelemetrySample::new(nf, Metric::ResponseTimeMs, value, tick).unwrap()
    }

    #[test]
    fn nwdaf_constant_series() {
        let params = SimParams::default();
        let f = nwdaf_forecast(&[10.0, 10.0, 10.0, 10.0, 10.0], 5, &params).unwrap();
        assert_eq!(f, 10.0);
    }

    #[test]
    fn nwdaf_moving_average() {
        let params = SimParams::default();
        let f = nwdaf_forecast(&[8.0, 9.0, 10.0, 11.0, 12.0], 3, &params).unwrap();
        assert_eq!(f, 10.0);
    }

    #[test]
    fn nwdaf_long_horizon_is_rerouted() {
        let params = SimParams::default();
        assert_eq!(
            nwdaf_forecast(&[10.0; 5], 50, &params).unwrap_err(),
            SimError::HorizonTooLong { horizon: 50, h_short: 10 }
        );
    }

    #[test]
    fn nwdaf_needs_a_full_window() {
        let params = SimParams::default();
        assert_eq!(
            nwdaf_forecast(&[10.0, 10.0], 5, &params).unwrap_err(),
            SimError::InsufficientData { needed: 5, got: 2 }
        );
    }

    #[test]
    fn udsf_retains_localized_only() {
        let mut store = UdsfStore::default();
        let loc = store.store("rt:smf:1", sample("smf", 1, 10.0), StorageClass::Localized);
        assert_eq!(loc, StorageLocation::Udsf);
        assert_eq!(store.len(), 1);
        let loc = store.store("rt:smf:2", sample("smf", 2, 11.0), StorageClass::Management);
        assert_eq!(loc, StorageLocation::DomainDataStorage);
        assert_eq!(store.len(), 1);
    }

    #[test]
    fn udsf_round_trip() {
        let mut store = UdsfStore::default();
        let s = sample("smf", 3, 12.5);
        store.store("rt:smf:3", s.clone(), StorageClass::Localized);
        assert_eq!(store.get("rt:smf:3"), Some(&s));
    }

    #[test]
    fn stems_strip_version_suffixes() {
        assert_eq!(stem_of("d1-v2"), "d1");
        assert_eq!(stem_of("d1-v"), "d1-v");
        assert_eq!(stem_of("plain"), "plain");
        assert_eq!(stem_of("rate-cap-smf-a-v12"), "rate-cap-smf-a");
    }

    #[test]
    fn pcf_static_install_once() {
        let mut pcf = PcfState::default();
        let p1 = ControlPlanePolicy {
            policy_id: "p1".to_string(),
            kind: PolicyKind::Static,
            target_nf: "smf".to_string(),
            body: "rate_cap=100".to_string(),
            installed_at: 1,
            provenance: None,
        };
        pcf.install(p1.clone()).unwrap();
        assert_eq!(pcf.active_ids(), vec!["p1"]);
        assert_eq!(pcf.install(p1).unwrap_err(), SimError::StaticReinstall("p1".to_string()));
    }

    #[test]
    fn pcf_dynamic_replacement_by_stem() {
        let mut pcf = PcfState::default();
        for version in 1..=2 {
            pcf.install(ControlPlanePolicy {
                policy_id: format!("d1-v{version}"),
                kind: PolicyKind::Dynamic,
                target_nf: "smf".to_string(),
                body: "rate_cap=50".to_string(),
                installed_at: version,
                provenance: Some(format!("dec-{version}")),
            })
            .unwrap();
        }
        assert_eq!(pcf.active_ids(), vec!["d1-v2"]);
    }

    #[test]
    fn dynamic_without_provenance_is_rejected() {
        let mut pcf = PcfState::default();
        let bad = ControlPlanePolicy {
            policy_id: "d2-v1".to_string(),
            kind: PolicyKind::Dynamic,
            target_nf: "smf".to_string(),
            body: String::new(),
            installed_at: 0,
            provenance: None,
        };
        assert!(matches!(pcf.install(bad), Err(SimError::InvariantViolation(_))));
    }
}
