//! 3GPP slice instances, their control-plane NFs, and the control-plane
//! halves of the analytics/storage/policy overlaps.

pub mod control_plane;
pub mod instance;
pub mod nf;

pub use control_plane::{
    nwdaf_forecast, ControlPlanePolicy, PcfState, PolicyKind, StorageClass, StorageLocation,
    UdsfStore,
};
pub use instance::{SliceInstance, SliceSet, TemplateEntry};
pub use nf::{classify_nf, NetworkFunction, NfType, Sharing};
