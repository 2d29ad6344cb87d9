//! Crate-wide error type. Every operation that can refuse work returns one
//! of these variants; tests match on them by name.

use thiserror::Error;

use crate::fabric::domain::DomainId;
use crate::slice::nf::NfType;

#[derive(Debug, Error, PartialEq)]
pub enum SimError {
    // -- fabric --
    #[error("domain `{0}` is already registered")]
    DuplicateDomain(DomainId),
    #[error("child domain `{0}` is not registered")]
    UnknownChild(DomainId),
    #[error("domain `{0}` is not registered")]
    UnknownDomain(DomainId),
    #[error("composing `{0}` would create a cycle")]
    CycleDetected(DomainId),
    #[error("domain `{child}` already has parent `{parent}`")]
    ForestViolation { child: DomainId, parent: DomainId },
    #[error("caller `{caller}` is not allowed to invoke `{capability}`")]
    AccessDenied { caller: String, capability: String },
    #[error("capability `{capability}` not found in domain `{domain}`")]
    CapabilityNotFound { domain: DomainId, capability: String },
    #[error("`{0}` is not service-based and is reachable only through an adapter binding")]
    NotServiceBased(String),
    #[error("field `{field}` has no codec mapping")]
    CodecMismatch { field: String },
    #[error("adapter binding `{0}` is not registered")]
    UnknownAdapter(String),
    #[error("codec field map is not bijective (duplicate `{0}`)")]
    CodecNotBijective(String),

    // -- slice model --
    #[error("sharing hint required for {0}")]
    HintRequired(NfType),
    #[error("slice template is empty")]
    EmptyTemplate,
    #[error("target NF `{0}` does not exist in the slice")]
    UnknownTarget(String),
    #[error("static policy `{0}` is already installed")]
    StaticReinstall(String),
    #[error("horizon {horizon} exceeds short-term limit {h_short}")]
    HorizonTooLong { horizon: u64, h_short: u64 },
    #[error("need at least {needed} samples, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("NF `{0}` has no management interface")]
    NoMgmtInterface(String),
    #[error("slice `{0}` is not registered")]
    UnknownSliceInstance(String),

    // -- closed loop --
    #[error("context snapshot at tick {snapshot} is older than event onset {onset}")]
    StaleContext { snapshot: u64, onset: u64 },
    #[error("domain service model snapshot at tick {snapshot} does not match decision tick {decision}")]
    StaleModel { snapshot: u64, decision: u64 },

    // -- NFV / MANO --
    #[error("scale request validation failed: unknown VNF `{0}`")]
    ValidationFailed(String),
    #[error("scaling infeasible: PoP `{pop}` headroom {headroom} vCPU below minimum useful grant")]
    Infeasible { pop: String, headroom: u64 },
    #[error("scaling VNF `{0}` would exceed its lifecycle resource limits")]
    LifecycleViolation(String),
    #[error("VNF `{0}` is already scaling")]
    AlreadyScaling(String),
    #[error("PoP `{0}` capacity exceeded")]
    CapacityExceeded(String),
    #[error("scaling VNF `{0}` below the 1 vCPU minimum profile")]
    BelowMinimum(String),
    #[error("PoP `{0}` is not registered")]
    UnknownPop(String),

    // -- 3GPP management system --
    #[error("subnet `{0}` is not managed by this NSSMF")]
    UnknownSubnet(String),
    #[error("NSSMF rejected the request: {0}")]
    NotPossible(String),
    #[error("slice `{0}` is not managed by this NSMF")]
    UnknownSlice(String),
    #[error("capability `{0}` is not exposed to this consumer")]
    NotExposed(String),

    // -- engine / IO --
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("malformed trace line {line}: {reason}")]
    MalformedTrace { line: usize, reason: String },
    #[error("{0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, SimError>;
