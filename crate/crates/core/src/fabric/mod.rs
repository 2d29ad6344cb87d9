//! Service-based integration fabric: the domain registry, exposure
//! governance, and adapter bindings toward non-service-based systems.

pub mod adapter;
pub mod domain;
pub mod policy;
pub mod registry;

pub use adapter::{payload_from, render_payload, AdapterBinding, Codec, Payload};
pub use domain::{DomainId, DomainLevel, ManagementDomain, ServiceDescriptor};
pub use policy::{capability_matches, Consumer, ExposurePolicy, PolicyRule, RuleAction};
pub use registry::Registry;
