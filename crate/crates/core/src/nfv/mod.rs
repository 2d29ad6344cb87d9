//! Simulated NFV layer: capacity-bounded PoPs, VNF instances, and the
//! NFVO/VNFM/VIM scaling procedure.

pub mod mano;
pub mod resources;

pub use mano::{
    LifecycleState, NfvInfra, PendingScale, PreparedRequest, ScaleOrigin, ScaleOutcome,
    ScaleRequest, VimTicket, VnfInstance,
};
pub use resources::{NfviPop, ResourceDelta, ResourceProfile};
