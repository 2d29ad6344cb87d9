//! Resource accounting for NFVI points of presence.

use serde::{Deserialize, Serialize};

/// Absolute resource amounts. All components are non-negative by type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ResourceProfile {
    pub vcpu: u64,
    pub memory_mib: u64,
    pub storage_gib: u64,
}

/// Signed resource change.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ResourceDelta {
    pub vcpu: i64,
    pub memory_mib: i64,
    pub storage_gib: i64,
}

impl ResourceProfile {
    pub fn new(vcpu: u64, memory_mib: u64, storage_gib: u64) -> Self {
        ResourceProfile { vcpu, memory_mib, storage_gib }
    }

    pub fn le(&self, other: &ResourceProfile) -> bool {
        self.vcpu <= other.vcpu
            && self.memory_mib <= other.memory_mib
            && self.storage_gib <= other.storage_gib
    }

    /// Component-wise `self + delta`; `None` if any component would go negative.
    pub fn apply(&self, delta: &ResourceDelta) -> Option<ResourceProfile> {
        Some(ResourceProfile {
            vcpu: checked(self.vcpu, delta.vcpu)?,
            memory_mib: checked(self.memory_mib, delta.memory_mib)?,
            storage_gib: checked(self.storage_gib, delta.storage_gib)?,
        })
    }

    pub fn add(&self, other: &ResourceProfile) -> ResourceProfile {
        ResourceProfile {
            vcpu: self.vcpu + other.vcpu,
            memory_mib: self.memory_mib + other.memory_mib,
            storage_gib: self.storage_gib + other.storage_gib,
        }
    }

    /// Component-wise `self - other`, saturating at zero.
    pub fn headroom(&self, used: &ResourceProfile) -> ResourceProfile {
        ResourceProfile {
            vcpu: self.vcpu.saturating_sub(used.vcpu),
            memory_mib: self.memory_mib.saturating_sub(used.memory_mib),
            storage_gib: self.storage_gib.saturating_sub(used.storage_gib),
        }
    }
}

impl ResourceDelta {
    pub fn vcpu_only(vcpu: i64) -> Self {
        ResourceDelta { vcpu, memory_mib: 0, storage_gib: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.vcpu == 0 && self.memory_mib == 0 && self.storage_gib == 0
    }

    /// Clamps a (positive) delta to the given headroom, component-wise.
    pub fn clamp_to(&self, headroom: &ResourceProfile) -> ResourceDelta {
        ResourceDelta {
            vcpu: clamp_component(self.vcpu, headroom.vcpu),
            memory_mib: clamp_component(self.memory_mib, headroom.memory_mib),
            storage_gib: clamp_component(self.storage_gib, headroom.storage_gib),
        }
    }

    pub fn le(&self, other: &ResourceDelta) -> bool {
        self.vcpu <= other.vcpu
            && self.memory_mib <= other.memory_mib
            && self.storage_gib <= other.storage_gib
    }
}

fn checked(base: u64, delta: i64) -> Option<u64> {
    if delta >= 0 {
        base.checked_add(delta as u64)
    } else {
        base.checked_sub(delta.unsigned_abs())
    }
}

fn clamp_component(delta: i64, headroom: u64) -> i64 {
    if delta <= 0 {
        delta
    } else {
        delta.min(headroom.min(i64::MAX as u64) as i64)
    }
}

/// A point of presence with finite capacity. `allocated` tracks the sum of
/// all hosted VNF resources and never exceeds `capacity`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NfviPop {
    pub pop_id: String,
    pub capacity: ResourceProfile,
    pub allocated: ResourceProfile,
}

impl NfviPop {
    pub fn new(pop_id: impl Into<String>, capacity: ResourceProfile) -> Self {
        NfviPop { pop_id: pop_id.into(), capacity, allocated: ResourceProfile::default() }
    }

    pub fn free(&self) -> ResourceProfile {
        self.capacity.headroom(&self.allocated)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn apply_rejects_negative_results() {
        let p = ResourceProfile::new(1, 100, 10);
        assert!(p.apply(&ResourceDelta { vcpu: -2, memory_mib: 0, storage_gib: 0 }).is_none());
        assert_eq!(
            p.apply(&ResourceDelta::vcpu_only(1)).unwrap(),
            ResourceProfile::new(2, 100, 10)
        );
    }

    #[test]
    fn clamp_caps_positive_components_only() {
        let delta = ResourceDelta { vcpu: 6, memory_mib: -10, storage_gib: 0 };
        let headroom = ResourceProfile::new(4, 1000, 0);
        assert_eq!(
            delta.clamp_to(&headroom),
            ResourceDelta { vcpu: 4, memory_mib: -10, storage_gib: 0 }
        );
    }

    #[test]
    fn pop_free_is_capacity_minus_allocated() {
        let mut pop = NfviPop::new("pop1", ResourceProfile::new(10, 1000, 100));
        pop.allocated = ResourceProfile::new(5, 400, 20);
        assert_eq!(pop.free(), ResourceProfile::new(5, 600, 80));
    }
}
