//! Slice instances and the NF inventory shared across them.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Result, SimError};
use crate::fabric::domain::DomainId;
use crate::slice::control_plane::{PcfState, UdsfStore};
use crate::slice::nf::{NetworkFunction, NfType, Sharing};

/// One entry of a slice template: an NF type plus the optional sharing hint
/// for deployment-dependent types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateEntry {
    pub nf_type: NfType,
    pub hint: Option<Sharing>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SliceInstance {
    pub slice_id: String,
    pub owner: String,
    pub dedicated_nfs: BTreeSet<String>,
    pub shared_nfs: BTreeSet<String>,
    pub overarching_nfs: BTreeSet<String>,
    pub mgmt_domain: DomainId,
}

/// Inventory of slices, their NFs and the per-slice control-plane state
/// (UDSF store and PCF policy set).
#[derive(Debug, Default, Clone)]
pub struct SliceSet {
    slices: BTreeMap<String, SliceInstance>,
    nfs: BTreeMap<String, NetworkFunction>,
    udsf: BTreeMap<String, UdsfStore>,
    pcf: BTreeMap<String, PcfState>,
}

impl SliceSet {
    pub fn new() -> Self {
        SliceSet::default()
    }

    pub fn insert_slice(&mut self, slice: SliceInstance) {
        self.udsf.entry(slice.slice_id.clone()).or_default();
        self.pcf.entry(slice.slice_id.clone()).or_default();
        self.slices.insert(slice.slice_id.clone(), slice);
    }

    pub fn insert_nf(&mut self, nf: NetworkFunction) {
        self.nfs.insert(nf.nf_id.clone(), nf);
    }

    pub fn slice(&self, slice_id: &str) -> Result<&SliceInstance> {
        self.slices
            .get(slice_id)
            .ok_or_else(|| SimError::UnknownSliceInstance(slice_id.to_string()))
    }

    pub fn slices(&self) -> impl Iterator<Item = &SliceInstance> {
        self.slices.values()
    }

    pub fn slice_count(&self) -> usize {
        self.slices.len()
    }

    pub fn nf(&self, nf_id: &str) -> Result<&NetworkFunction> {
        self.nfs.get(nf_id).ok_or_else(|| SimError::UnknownTarget(nf_id.to_string()))
    }

    pub fn nf_exists(&self, nf_id: &str) -> bool {
        self.nfs.contains_key(nf_id)
    }

    pub fn nfs(&self) -> impl Iterator<Item = &NetworkFunction> {
        self.nfs.values()
    }

    /// The slice an NF belongs to. Dedicated NFs map to their owning slice;
    /// shared and overarching NFs belong to every slice that lists them, so
    /// they resolve to `None`.
    pub fn slice_of_dedicated_nf(&self, nf_id: &str) -> Option<&SliceInstance> {
        self.slices.values().find(|s| s.dedicated_nfs.contains(nf_id))
    }

    pub fn udsf_mut(&mut self, slice_id: &str) -> Result<&mut UdsfStore> {
        self.udsf
            .get_mut(slice_id)
            .ok_or_else(|| SimError::UnknownSliceInstance(slice_id.to_string()))
    }

    pub fn udsf(&self, slice_id: &str) -> Result<&UdsfStore> {
        self.udsf
            .get(slice_id)
            .ok_or_else(|| SimError::UnknownSliceInstance(slice_id.to_string()))
    }

    pub fn pcf_mut(&mut self, slice_id: &str) -> Result<&mut PcfState> {
        self.pcf
            .get_mut(slice_id)
            .ok_or_else(|| SimError::UnknownSliceInstance(slice_id.to_string()))
    }

    pub fn pcf(&self, slice_id: &str) -> Result<&PcfState> {
        self.pcf
            .get(slice_id)
            .ok_or_else(|| SimError::UnknownSliceInstance(slice_id.to_string()))
    }

    /// Dedicated NF sets of distinct slices never intersect.
    pub fn check_dedicated_disjoint(&self) -> Result<()> {
        let mut seen: BTreeMap<&String, &String> = BTreeMap::new();
        for slice in self.slices.values() {
            for nf in &slice.dedicated_nfs {
                if let Some(other) = seen.insert(nf, &slice.slice_id) {
                    return Err(SimError::InvariantViolation(format!(
                        "dedicated NF `{nf}` appears in slices `{other}` and `{}`",
                        slice.slice_id
                    )));
                }
            }
        }
        Ok(())
    }
}
