//! Exposure governance: who may invoke which capabilities of a domain.
//!
//! Rules are evaluated first-match; with no matching rule the result is deny.

use serde::{Deserialize, Serialize};

use crate::fabric::domain::DomainId;

/// Who a rule applies to: a specific consumer domain, or any domain owned by
/// a given tenant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Consumer {
    Domain(DomainId),
    Tenant(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RuleAction {
    Allow,
    Deny,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolicyRule {
    pub consumer: Consumer,
    pub pattern: String,
    pub action: RuleAction,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ExposurePolicy {
    pub rules: Vec<PolicyRule>,
}

impl ExposurePolicy {
    pub fn allow_domain(mut self, domain: impl Into<DomainId>, pattern: &str) -> Self {
        self.rules.push(PolicyRule {
            consumer: Consumer::Domain(domain.into()),
            pattern: pattern.to_string(),
            action: RuleAction::Allow,
        });
        self
    }

    pub fn allow_tenant(mut self, tenant: &str, pattern: &str) -> Self {
        self.rules.push(PolicyRule {
            consumer: Consumer::Tenant(tenant.to_string()),
            pattern: pattern.to_string(),
            action: RuleAction::Allow,
        });
        self
    }

    pub fn deny_domain(mut self, domain: impl Into<DomainId>, pattern: &str) -> Self {
        self.rules.push(PolicyRule {
            consumer: Consumer::Domain(domain.into()),
            pattern: pattern.to_string(),
            action: RuleAction::Deny,
        });
        self
    }

    /// First-match evaluation against the caller's domain and its owner tenant.
    pub fn allows(&self, caller_domain: &DomainId, caller_tenant: &str, capability: &str) -> bool {
        for rule in &self.rules {
            let consumer_matches = match &rule.consumer {
                Consumer::Domain(d) => d == caller_domain,
                Consumer::Tenant(t) => t == caller_tenant,
            };
            if consumer_matches && capability_matches(&rule.pattern, capability) {
                return rule.action == RuleAction::Allow;
            }
        }
        false
    }
}

/// Dotted-segment glob match. `*` matches exactly one segment, except in the
/// trailing position where it matches any remainder (including none).
pub fn capability_matches(pattern: &str, capability: &str) -> bool {
    if pattern == "*" {
        return true;
    }
    let pat: Vec<&str> = pattern.split('.').collect();
    let cap: Vec<&str> = capability.split('.').collect();
    for (i, p) in pat.iter().enumerate() {
        if *p == "*" && i == pat.len() - 1 {
            return true;
        }
        match cap.get(i) {
            Some(c) if c == p || *p == "*" => {}
            _ => return false,
        }
    }
    pat.len() == cap.len()
}
