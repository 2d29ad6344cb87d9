//! VNF instances and the MANO scaling procedure.
//!
//! State transitions here are pure; the engine layer drives them in order and
//! writes the trace. The full chain for one scale request is
//! validate → feasibility (with clamping) → VNFM prepare → scale-resource →
//! VIM modify, and a failure at any stage leaves VNF and PoP state exactly as
//! it was before the request.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Result, SimError};
use crate::nfv::resources::{NfviPop, ResourceDelta, ResourceProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LifecycleState {
    Instantiated,
    Scaling,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VnfInstance {
    pub vnf_id: String,
    pub hosted_nf: String,
    pub pop: String,
    pub resources: ResourceProfile,
    pub lifecycle_state: LifecycleState,
    pub max_resources: ResourceProfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScaleOrigin {
    Nssmf,
    Adapter,
    OsMaNfvo,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleRequest {
    pub request_id: String,
    pub vnf_id: String,
    pub delta: ResourceDelta,
    pub origin: ScaleOrigin,
    pub correlation_id: String,
}

/// A request that passed the VNFM lifecycle check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreparedRequest {
    pub request: ScaleRequest,
    pub lifecycle_note: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VimTicket {
    pub ticket_id: String,
    pub vnf_id: String,
    pub delta: ResourceDelta,
    pub correlation_id: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleOutcome {
    pub request_id: String,
    pub vnf_id: String,
    pub applied_delta: ResourceDelta,
    pub resources: ResourceProfile,
}

/// A scale accepted by the NFVO, waiting for VNFM/VIM execution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendingScale {
    pub request: ScaleRequest,
    /// Granted (possibly clamped) delta from the feasibility check.
    pub granted: ResourceDelta,
    pub slice_scope: Option<String>,
}

#[derive(Debug, Default, Clone)]
pub struct NfvInfra {
    pops: BTreeMap<String, NfviPop>,
    vnfs: BTreeMap<String, VnfInstance>,
    pub pending: VecDeque<PendingScale>,
    ticket_seq: u64,
}

impl NfvInfra {
    pub fn new() -> Self {
        NfvInfra::default()
    }

    pub fn add_pop(&mut self, pop: NfviPop) -> Result<()> {
        if self.pops.contains_key(&pop.pop_id) {
            return Err(SimError::Config(format!("pop `{}` already exists", pop.pop_id)));
        }
        self.pops.insert(pop.pop_id.clone(), pop);
        Ok(())
    }

    pub fn create_vnf(
        &mut self,
        vnf_id: &str,
        hosted_nf: &str,
        pop_id: &str,
        resources: ResourceProfile,
        max_resources: ResourceProfile,
    ) -> Result<()> {
        let pop = self
            .pops
            .get_mut(pop_id)
            .ok_or_else(|| SimError::UnknownPop(pop_id.to_string()))?;
        let allocated = pop.allocated.add(&resources);
        if !allocated.le(&pop.capacity) {
            return Err(SimError::CapacityExceeded(pop_id.to_string()));
        }
        pop.allocated = allocated;
        self.vnfs.insert(
            vnf_id.to_string(),
            VnfInstance {
                vnf_id: vnf_id.to_string(),
                hosted_nf: hosted_nf.to_string(),
                pop: pop_id.to_string(),
                resources,
                lifecycle_state: LifecycleState::Instantiated,
                max_resources,
            },
        );
        Ok(())
    }

    pub fn vnf(&self, vnf_id: &str) -> Result<&VnfInstance> {
        self.vnfs.get(vnf_id).ok_or_else(|| SimError::ValidationFailed(vnf_id.to_string()))
    }

    pub fn pop(&self, pop_id: &str) -> Result<&NfviPop> {
        self.pops.get(pop_id).ok_or_else(|| SimError::UnknownPop(pop_id.to_string()))
    }

    pub fn pops(&self) -> impl Iterator<Item = &NfviPop> {
        self.pops.values()
    }

    pub fn vnfs(&self) -> impl Iterator<Item = &VnfInstance> {
        self.vnfs.values()
    }

    pub fn vnf_for_nf(&self, nf_id: &str) -> Option<&VnfInstance> {
        self.vnfs.values().find(|v| v.hosted_nf == nf_id)
    }

    /// NFVO request validation: the VNF must exist and the delta must move
    /// something.
    pub fn validate(&self, request: &ScaleRequest) -> Result<()> {
        if request.delta.is_zero() {
            return Err(SimError::ValidationFailed(format!(
                "{}: zero delta",
                request.vnf_id
            )));
        }
        self.vnf(&request.vnf_id)?;
        Ok(())
    }

    /// NFVO feasibility check. Determines the extent of the scaling: a
    /// scale-out past the PoP headroom is clamped to the headroom when at
    /// least one vCPU can still be granted, otherwise the request is
    /// infeasible.
    pub fn feasibility(&self, request: &ScaleRequest) -> Result<ResourceDelta> {
        let vnf = self.vnf(&request.vnf_id)?;
        let pop = self.pop(&vnf.pop)?;
        let granted = request.delta.clamp_to(&pop.free());
        if request.delta.vcpu > 0 && granted.vcpu < 1 {
            return Err(SimError::Infeasible { pop: pop.pop_id.clone(), headroom: pop.free().vcpu });
        }
        Ok(granted)
    }

    /// VNFM preparation: evaluates lifecycle constraints and takes the
    /// per-VNF scaling lock.
    pub fn vnfm_prepare(&mut self, request: &ScaleRequest, granted: &ResourceDelta) -> Result<PreparedRequest> {
        let max = self.vnf(&request.vnf_id)?.max_resources;
        let vnf = self.vnfs.get_mut(&request.vnf_id).expect("existence checked");
        if vnf.lifecycle_state == LifecycleState::Scaling {
            return Err(SimError::AlreadyScaling(request.vnf_id.clone()));
        }
        let target = vnf
            .resources
            .apply(granted)
            .ok_or_else(|| SimError::BelowMinimum(request.vnf_id.clone()))?;
        if !target.le(&max) {
            return Err(SimError::LifecycleViolation(request.vnf_id.clone()));
        }
        vnf.lifecycle_state = LifecycleState::Scaling;
        Ok(PreparedRequest { request: request.clone(), lifecycle_note: "lifecycle_ok".to_string() })
    }

    /// VNFM invokes the NFVO scale-resource operation, producing the ticket
    /// the NFVO forwards to the VIM of the hosting PoP.
    pub fn vnfm_scale_resource(&mut self, prepared: &PreparedRequest, granted: &ResourceDelta) -> VimTicket {
        self.ticket_seq += 1;
        VimTicket {
            ticket_id: format!("tk-{:04}", self.ticket_seq),
            vnf_id: prepared.request.vnf_id.clone(),
            delta: *granted,
            correlation_id: prepared.request.correlation_id.clone(),
        }
    }

    /// VIM resource modification. Applies the delta to the VNF and its PoP
    /// atomically; on any error nothing changes and the VNF returns to
    /// `Instantiated`.
    pub fn vim_modify_resources(&mut self, vnf_id: &str, delta: &ResourceDelta) -> Result<ResourceProfile> {
        let outcome = self.vim_apply(vnf_id, delta);
        if let Some(vnf) = self.vnfs.get_mut(vnf_id) {
            vnf.lifecycle_state = LifecycleState::Instantiated;
        }
        outcome
    }

    fn vim_apply(&mut self, vnf_id: &str, delta: &ResourceDelta) -> Result<ResourceProfile> {
        let vnf = self
            .vnfs
            .get(vnf_id)
            .ok_or_else(|| SimError::ValidationFailed(vnf_id.to_string()))?;
        let new_resources = match vnf.resources.apply(delta) {
            Some(r) if r.vcpu >= 1 => r,
            _ => return Err(SimError::BelowMinimum(vnf_id.to_string())),
        };
        if !new_resources.le(&vnf.max_resources) {
            return Err(SimError::LifecycleViolation(vnf_id.to_string()));
        }
        let pop = self
            .pops
            .get(&vnf.pop)
            .ok_or_else(|| SimError::UnknownPop(vnf.pop.clone()))?;
        let new_allocated = pop
            .allocated
            .headroom(&vnf.resources)
            .add(&new_resources);
        if !new_allocated.le(&pop.capacity) {
            return Err(SimError::CapacityExceeded(vnf.pop.clone()));
        }
        let pop_id = vnf.pop.clone();
        self.pops.get_mut(&pop_id).expect("looked up above").allocated = new_allocated;
        let vnf = self.vnfs.get_mut(vnf_id).expect("looked up above");
        vnf.resources = new_resources;
        Ok(new_resources)
    }

    /// Conservation invariant: per PoP, the sum of hosted VNF resources must
    /// equal the PoP's allocation and fit its capacity.
    pub fn check_conservation(&self) -> Result<()> {
        for pop in self.pops.values() {
            let mut total = ResourceProfile::default();
            for vnf in self.vnfs.values().filter(|v| v.pop == pop.pop_id) {
                total = total.add(&vnf.resources);
            }
            if total != pop.allocated {
                return Err(SimError::InvariantViolation(format!(
                    "pop `{}`: allocated {:?} != hosted sum {:?}",
                    pop.pop_id, pop.allocated, total
                )));
            }
            if !pop.allocated.le(&pop.capacity) {
                return Err(SimError::InvariantViolation(format!(
                    "pop `{}`: allocated {:?} exceeds capacity {:?}",
                    pop.pop_id, pop.allocated, pop.capacity
                )));
            }
        }
        Ok(())
    }

    /// Stable serialized form of all PoP and VNF state, for atomicity checks.
    pub fn snapshot_json(&self) -> String {
        serde_json::to_string(&(&self.pops, &self.vnfs)).expect("serializable state")
    }
}
