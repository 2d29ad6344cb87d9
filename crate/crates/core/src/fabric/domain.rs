//! Management domains and the services they expose.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::fabric::policy::ExposurePolicy;

/// Identifier of a management domain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DomainId(pub String);

impl DomainId {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for DomainId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for DomainId {
    fn from(s: &str) -> Self {
        DomainId(s.to_string())
    }
}

impl From<String> for DomainId {
    fn from(s: String) -> Self {
        DomainId(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DomainLevel {
    E2eService,
    SliceSpecific,
    SharedNfs,
    OverarchingNfs,
    Virtualization,
    External3gpp,
}

/// One management service offered by a domain. `service_based = false` marks
/// endpoints that speak a native protocol (the MANO reference points) and are
/// reachable only through an adapter binding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ServiceDescriptor {
    pub capability: String,
    pub provider_domain: DomainId,
    pub service_based: bool,
}

/// A node in the recursive domain forest.
///
/// `children` records the composition declared when the domain was registered
/// (or explicitly recomposed). Domains attached later — slices arriving at
/// runtime — live only in the registry's edge table, so growing the forest
/// never changes the serialized form of a pre-existing domain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManagementDomain {
    pub domain_id: DomainId,
    pub level: DomainLevel,
    pub owner: String,
    pub services: BTreeMap<String, ServiceDescriptor>,
    pub children: Vec<DomainId>,
    pub exposure_policy: ExposurePolicy,
}

impl ManagementDomain {
    pub fn new(domain_id: impl Into<DomainId>, level: DomainLevel, owner: impl Into<String>) -> Self {
        ManagementDomain {
            domain_id: domain_id.into(),
            level,
            owner: owner.into(),
            services: BTreeMap::new(),
            children: Vec::new(),
            exposure_policy: ExposurePolicy::default(),
        }
    }

    pub fn with_children(mut self, children: Vec<DomainId>) -> Self {
        self.children = children;
        self
    }

    pub fn with_policy(mut self, policy: ExposurePolicy) -> Self {
        self.exposure_policy = policy;
        self
    }

    pub fn with_service(mut self, capability: &str, service_based: bool) -> Self {
        let descriptor = ServiceDescriptor {
            capability: capability.to_string(),
            provider_domain: self.domain_id.clone(),
            service_based,
        };
        self.services.insert(capability.to_string(), descriptor);
        self
    }

    /// MANO-role capabilities are the orchestration endpoints a
    /// Virtualization domain is allowed to contain.
    pub fn is_mano_role(capability: &str) -> bool {
        capability.starts_with("mano.") || capability.starts_with("Os-Ma-nfvo")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mano_role_detection() {
        assert!(ManagementDomain::is_mano_role("mano.nfvo.scale_vnf"));
        assert!(ManagementDomain::is_mano_role("Os-Ma-nfvo.ScaleVnf"));
        assert!(!ManagementDomain::is_mano_role("zsm.domain.control.resource_lifecycle"));
    }

    #[test]
    fn serialization_is_stable() {
        let d = ManagementDomain::new("md-cn", DomainLevel::E2eService, "operator")
            .with_service("3gpp.nssmf.subnet_provisioning", true);
        let a = serde_json::to_string(&d).unwrap();
        let b = serde_json::to_string(&d.clone()).unwrap();
        assert_eq!(a, b);
    }
}
