//! Domain registry and composition forest.
//!
//! The forest has two layers: the `children` list frozen into each domain at
//! registration, and a live edge table for domains attached afterwards.
//! Growth therefore never rewrites a registered domain — adding the fifty-first
//! slice leaves the other fifty byte-identical under serialization — while the
//! edge table remains the single authoritative view of the composition.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Result, SimError};
use crate::fabric::adapter::AdapterBinding;
use crate::fabric::domain::{DomainId, DomainLevel, ManagementDomain, ServiceDescriptor};

#[derive(Debug, Default, Clone)]
pub struct Registry {
    domains: BTreeMap<DomainId, ManagementDomain>,
    parent_of: BTreeMap<DomainId, DomainId>,
    children_of: BTreeMap<DomainId, Vec<DomainId>>,
    adapters: BTreeMap<String, AdapterBinding>,
}

impl Registry {
    pub fn new() -> Self {
        Registry::default()
    }

    pub fn register_domain(&mut self, domain: ManagementDomain) -> Result<DomainId> {
        let id = domain.domain_id.clone();
        if self.domains.contains_key(&id) {
            return Err(SimError::DuplicateDomain(id));
        }
        for child in &domain.children {
            if !self.domains.contains_key(child) {
                return Err(SimError::UnknownChild(child.clone()));
            }
            if let Some(parent) = self.parent_of.get(child) {
                return Err(SimError::ForestViolation {
                    child: child.clone(),
                    parent: parent.clone(),
                });
            }
        }
        if domain.level == DomainLevel::Virtualization {
            for capability in domain.services.keys() {
                if !ManagementDomain::is_mano_role(capability) {
                    return Err(SimError::InvariantViolation(format!(
                        "virtualization domain `{id}` carries non-MANO capability `{capability}`"
                    )));
                }
            }
        }
        if domain.level == DomainLevel::SliceSpecific && domain.owner.is_empty() {
            return Err(SimError::InvariantViolation(format!(
                "slice-specific domain `{id}` has no owner tenant"
            )));
        }
        for child in &domain.children {
            self.parent_of.insert(child.clone(), id.clone());
        }
        self.children_of.insert(id.clone(), domain.children.clone());
        self.domains.insert(id.clone(), domain);
        self.check_forest()?;
        Ok(id)
    }

    /// Wires an already-registered domain under a parent without touching the
    /// parent's registered descriptor.
    pub fn attach_child(&mut self, parent: &DomainId, child: &DomainId) -> Result<()> {
        if !self.domains.contains_key(parent) {
            return Err(SimError::UnknownDomain(parent.clone()));
        }
        if !self.domains.contains_key(child) {
            return Err(SimError::UnknownChild(child.clone()));
        }
        if let Some(existing) = self.parent_of.get(child) {
            return Err(SimError::ForestViolation { child: child.clone(), parent: existing.clone() });
        }
        if child == parent || self.is_ancestor(child, parent) {
            return Err(SimError::CycleDetected(child.clone()));
        }
        self.parent_of.insert(child.clone(), parent.clone());
        self.children_of.entry(parent.clone()).or_default().push(child.clone());
        self.check_forest()
    }

    /// Replaces a parent's composition with the given list. This is the one
    /// operation allowed to rewrite a registered domain, and it returns the
    /// updated descriptor.
    pub fn compose(&mut self, parent: &DomainId, children: Vec<DomainId>) -> Result<ManagementDomain> {
        if !self.domains.contains_key(parent) {
            return Err(SimError::UnknownDomain(parent.clone()));
        }
        for child in &children {
            if !self.domains.contains_key(child) {
                return Err(SimError::UnknownChild(child.clone()));
            }
            if child == parent || self.is_ancestor(child, parent) {
                return Err(SimError::CycleDetected(child.clone()));
            }
            match self.parent_of.get(child) {
                Some(existing) if existing != parent => {
                    return Err(SimError::ForestViolation {
                        child: child.clone(),
                        parent: existing.clone(),
                    })
                }
                _ => {}
            }
        }
        let old = self.children_of.get(parent).cloned().unwrap_or_default();
        for child in &old {
            self.parent_of.remove(child);
        }
        for child in &children {
            self.parent_of.insert(child.clone(), parent.clone());
        }
        self.children_of.insert(parent.clone(), children.clone());
        let domain = self.domains.get_mut(parent).expect("checked above");
        domain.children = children;
        let snapshot = domain.clone();
        self.check_forest()?;
        Ok(snapshot)
    }

    pub fn domain(&self, id: &DomainId) -> Result<&ManagementDomain> {
        self.domains.get(id).ok_or_else(|| SimError::UnknownDomain(id.clone()))
    }

    pub fn contains(&self, id: &DomainId) -> bool {
        self.domains.contains_key(id)
    }

    pub fn domains(&self) -> impl Iterator<Item = &ManagementDomain> {
        self.domains.values()
    }

    pub fn len(&self) -> usize {
        self.domains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domains.is_empty()
    }

    pub fn children(&self, id: &DomainId) -> &[DomainId] {
        self.children_of.get(id).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn parent(&self, id: &DomainId) -> Option<&DomainId> {
        self.parent_of.get(id)
    }

    fn is_ancestor(&self, candidate: &DomainId, of: &DomainId) -> bool {
        let mut cursor = self.parent_of.get(of);
        while let Some(parent) = cursor {
            if parent == candidate {
                return true;
            }
            cursor = self.parent_of.get(parent);
        }
        false
    }

    /// Longest root-to-leaf node count under `id`.
    pub fn depth(&self, id: &DomainId) -> usize {
        1 + self
            .children(id)
            .iter()
            .map(|c| self.depth(c))
            .max()
            .unwrap_or(0)
    }

    /// Full-traversal forest validation: every domain visited at most once,
    /// no cycles, every edge endpoint registered.
    pub fn check_forest(&self) -> Result<()> {
        let mut visited: BTreeSet<&DomainId> = BTreeSet::new();
        let roots: Vec<&DomainId> = self
            .domains
            .keys()
            .filter(|id| !self.parent_of.contains_key(*id))
            .collect();
        let mut stack: Vec<&DomainId> = roots;
        while let Some(id) = stack.pop() {
            if !visited.insert(id) {
                return Err(SimError::InvariantViolation(format!(
                    "domain `{id}` reachable twice in composition forest"
                )));
            }
            for child in self.children(id) {
                if !self.domains.contains_key(child) {
                    return Err(SimError::UnknownChild(child.clone()));
                }
                stack.push(child);
            }
        }
        if visited.len() != self.domains.len() {
            return Err(SimError::InvariantViolation(
                "composition forest contains a cycle (unreachable domains)".to_string(),
            ));
        }
        Ok(())
    }

    pub fn lookup_capability(&self, domain: &DomainId, capability: &str) -> Result<&ServiceDescriptor> {
        let d = self.domain(domain)?;
        d.services.get(capability).ok_or_else(|| SimError::CapabilityNotFound {
            domain: domain.clone(),
            capability: capability.to_string(),
        })
    }

    /// Governance check for a service-based invocation. Performs the
    /// existence, service-based and exposure-policy checks in that order.
    pub fn authorize(&self, caller_domain: &DomainId, provider: &DomainId, capability: &str) -> Result<()> {
        let descriptor = self.lookup_capability(provider, capability)?;
        if !descriptor.service_based {
            return Err(SimError::NotServiceBased(capability.to_string()));
        }
        let caller_tenant = self
            .domains
            .get(caller_domain)
            .map(|d| d.owner.clone())
            .unwrap_or_default();
        let provider_domain = self.domain(provider)?;
        if caller_domain == provider
            || provider_domain
                .exposure_policy
                .allows(caller_domain, &caller_tenant, capability)
        {
            Ok(())
        } else {
            Err(SimError::AccessDenied {
                caller: caller_domain.to_string(),
                capability: capability.to_string(),
            })
        }
    }

    pub fn register_adapter(&mut self, binding: AdapterBinding) {
        self.adapters.insert(binding.adapter_id.clone(), binding);
    }

    pub fn adapter(&self, adapter_id: &str) -> Result<&AdapterBinding> {
        self.adapters
            .get(adapter_id)
            .ok_or_else(|| SimError::UnknownAdapter(adapter_id.to_string()))
    }

    pub fn adapter_for_capability(&self, zsm_capability: &str) -> Option<&AdapterBinding> {
        self.adapters.values().find(|b| b.zsm_capability == zsm_capability)
    }

    /// Stable serialized form of one domain, used for growth-immutability checks.
    pub fn snapshot_json(&self, id: &DomainId) -> Result<String> {
        let domain = self.domain(id)?;
        serde_json::to_string(domain)
            .map_err(|e| SimError::InvariantViolation(format!("serialization failed: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fabric::policy::ExposurePolicy;

    fn domain(id: &str, level: DomainLevel) -> ManagementDomain {
        ManagementDomain::new(id, level, "operator")
    }

    #[test]
    fn register_base_case() {
        let mut reg = Registry::new();
        reg.register_domain(domain("md-e2e", DomainLevel::E2eService)).unwrap();
        assert_eq!(reg.len(), 1);
    }

    #[test]
    fn register_unknown_child() {
        let mut reg = Registry::new();
        let d = domain("md-e2e", DomainLevel::E2eService).with_children(vec!["cn-x".into()]);
        assert_eq!(reg.register_domain(d).unwrap_err(), SimError::UnknownChild("cn-x".into()));
    }

    #[test]
    fn duplicate_registration_rejected() {
        let mut reg = Registry::new();
        reg.register_domain(domain("md-cn", DomainLevel::E2eService)).unwrap();
        assert_eq!(
            reg.register_domain(domain("md-cn", DomainLevel::E2eService)).unwrap_err(),
            SimError::DuplicateDomain("md-cn".into())
        );
    }

    #[test]
    fn growth_leaves_existing_domains_byte_identical() {
        let mut reg = Registry::new();
        reg.register_domain(domain("md-cn", DomainLevel::E2eService)).unwrap();
        reg.register_domain(
            domain("md-e2e", DomainLevel::E2eService).with_children(vec!["md-cn".into()]),
        )
        .unwrap();

        for i in 0..50 {
            let before: Vec<(DomainId, String)> = reg
                .domains()
                .map(|d| (d.domain_id.clone(), reg.snapshot_json(&d.domain_id).unwrap()))
                .collect();
            let id: DomainId = format!("md-sl-{i:02}").into();
            reg.register_domain(
                ManagementDomain::new(id.clone(), DomainLevel::SliceSpecific, format!("tenant-{i}")),
            )
            .unwrap();
            reg.attach_child(&"md-cn".into(), &id).unwrap();
            for (existing, snapshot) in before {
                assert_eq!(reg.snapshot_json(&existing).unwrap(), snapshot, "{existing} changed");
            }
        }
        assert_eq!(reg.len(), 52);
    }

    #[test]
    fn compose_self_loop_is_a_cycle() {
        let mut reg = Registry::new();
        reg.register_domain(domain("md-e2e", DomainLevel::E2eService)).unwrap();
        assert_eq!(
            reg.compose(&"md-e2e".into(), vec!["md-e2e".into()]).unwrap_err(),
            SimError::CycleDetected("md-e2e".into())
        );
    }

    #[test]
    fn compose_deep_cycle_detected() {
        let mut reg = Registry::new();
        reg.register_domain(domain("md-a", DomainLevel::E2eService)).unwrap();
        reg.register_domain(domain("md-b", DomainLevel::E2eService).with_children(vec!["md-a".into()]))
            .unwrap();
        assert_eq!(
            reg.compose(&"md-a".into(), vec!["md-b".into()]).unwrap_err(),
            SimError::CycleDetected("md-b".into())
        );
    }

    #[test]
    fn three_deep_nesting_has_depth_three() {
        let mut reg = Registry::new();
        reg.register_domain(domain("md-sl-a", DomainLevel::SliceSpecific)).unwrap();
        reg.register_domain(domain("md-cn", DomainLevel::E2eService).with_children(vec!["md-sl-a".into()]))
            .unwrap();
        reg.register_domain(domain("md-e2e", DomainLevel::E2eService).with_children(vec!["md-cn".into()]))
            .unwrap();
        assert_eq!(reg.depth(&"md-e2e".into()), 3);
    }

    #[test]
    fn double_parent_rejected() {
        let mut reg = Registry::new();
        reg.register_domain(domain("md-x", DomainLevel::E2eService)).unwrap();
        reg.register_domain(domain("md-p", DomainLevel::E2eService).with_children(vec!["md-x".into()]))
            .unwrap();
        reg.register_domain(domain("md-q", DomainLevel::E2eService)).unwrap();
        assert!(matches!(
            reg.attach_child(&"md-q".into(), &"md-x".into()),
            Err(SimError::ForestViolation { .. })
        ));
    }

    #[test]
    fn virtualization_domains_only_carry_mano_roles() {
        let mut reg = Registry::new();
        let bad = ManagementDomain::new("md-virt", DomainLevel::Virtualization, "infra")
            .with_service("zsm.domain.data.collection", true);
        assert!(matches!(reg.register_domain(bad), Err(SimError::InvariantViolation(_))));
        let good = ManagementDomain::new("md-virt", DomainLevel::Virtualization, "infra")
            .with_service("mano.nfvo.scale_vnf", true);
        reg.register_domain(good).unwrap();
    }

    #[test]
    fn authorize_enforces_policy_and_service_basing() {
        let mut reg = Registry::new();
        reg.register_domain(domain("md-b", DomainLevel::SliceSpecific)).unwrap();
        let provider = ManagementDomain::new("md-a", DomainLevel::SliceSpecific, "tenant-a")
            .with_service("zsm.domain.data.collection", true)
            .with_service("Os-Ma-nfvo.ScaleVnf", false)
            .with_policy(ExposurePolicy::default().allow_domain("md-a", "*"));
        reg.register_domain(provider).unwrap();

        assert!(matches!(
            reg.authorize(&"md-b".into(), &"md-a".into(), "zsm.domain.data.collection"),
            Err(SimError::AccessDenied { .. })
        ));
        assert!(reg.authorize(&"md-a".into(), &"md-a".into(), "zsm.domain.data.collection").is_ok());
        assert_eq!(
            reg.authorize(&"md-a".into(), &"md-a".into(), "Os-Ma-nfvo.ScaleVnf").unwrap_err(),
            SimError::NotServiceBased("Os-Ma-nfvo.ScaleVnf".to_string())
        );
        assert!(matches!(
            reg.authorize(&"md-a".into(), &"md-a".into(), "zsm.domain.nope"),
            Err(SimError::CapabilityNotFound { .. })
        ));
    }
}
