//! Control-plane network functions and their sharing classification.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SimError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NfType {
    Amf,
    Nrf,
    Smf,
    Pcf,
    Nwdaf,
    Nssf,
    Udm,
    Udr,
    Udsf,
}

impl fmt::Display for NfType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NfType::Amf => "AMF",
            NfType::Nrf => "NRF",
            NfType::Smf => "SMF",
            NfType::Pcf => "PCF",
            NfType::Nwdaf => "NWDAF",
            NfType::Nssf => "NSSF",
            NfType::Udm => "UDM",
            NfType::Udr => "UDR",
            NfType::Udsf => "UDSF",
        };
        f.write_str(s)
    }
}

impl FromStr for NfType {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "AMF" => Ok(NfType::Amf),
            "NRF" => Ok(NfType::Nrf),
            "SMF" => Ok(NfType::Smf),
            "PCF" => Ok(NfType::Pcf),
            "NWDAF" => Ok(NfType::Nwdaf),
            "NSSF" => Ok(NfType::Nssf),
            "UDM" => Ok(NfType::Udm),
            "UDR" => Ok(NfType::Udr),
            "UDSF" => Ok(NfType::Udsf),
            other => Err(SimError::Config(format!("unknown NF type `{other}`"))),
        }
    }
}

impl NfType {
    pub fn lowercase(&self) -> String {
        self.to_string().to_ascii_lowercase()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sharing {
    Dedicated,
    Shared,
    Overarching,
}

impl FromStr for Sharing {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dedicated" => Ok(Sharing::Dedicated),
            "shared" => Ok(Sharing::Shared),
            "overarching" => Ok(Sharing::Overarching),
            other => Err(SimError::Config(format!("unknown sharing class `{other}`"))),
        }
    }
}

/// Sharing classification. AMF/NRF are optionally shared, SMF/PCF/NWDAF are
/// slice-dedicated and NSSF is common to all slices; those assignments are
/// fixed and a hint cannot override them. UDM/UDR/UDSF depend on the
/// deployment and require a hint.
pub fn classify_nf(nf_type: NfType, deployment_hint: Option<Sharing>) -> Result<Sharing> {
    match nf_type {
        NfType::Amf | NfType::Nrf => Ok(Sharing::Shared),
        NfType::Smf | NfType::Pcf | NfType::Nwdaf => Ok(Sharing::Dedicated),
        NfType::Nssf => Ok(Sharing::Overarching),
        NfType::Udm | NfType::Udr | NfType::Udsf => {
            deployment_hint.ok_or(SimError::HintRequired(nf_type))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkFunction {
    pub nf_id: String,
    pub nf_type: NfType,
    pub sharing: Sharing,
    pub hosting_vnf: String,
    /// Management Function interface present: required for any NF whose
    /// telemetry is streamed to Domain Data Collection.
    pub mgmt_interface: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_classifications() {
        assert_eq!(classify_nf(NfType::Amf, None).unwrap(), Sharing::Shared);
        assert_eq!(classify_nf(NfType::Nrf, None).unwrap(), Sharing::Shared);
        assert_eq!(classify_nf(NfType::Smf, None).unwrap(), Sharing::Dedicated);
        assert_eq!(classify_nf(NfType::Pcf, None).unwrap(), Sharing::Dedicated);
        assert_eq!(classify_nf(NfType::Nwdaf, None).unwrap(), Sharing::Dedicated);
        assert_eq!(classify_nf(NfType::Nssf, None).unwrap(), Sharing::Overarching);
    }

    #[test]
    fn fixed_types_ignore_hints() {
        assert_eq!(classify_nf(NfType::Amf, Some(Sharing::Dedicated)).unwrap(), Sharing::Shared);
    }

    #[test]
    fn deployment_dependent_types_require_a_hint() {
        assert_eq!(classify_nf(NfType::Udm, None).unwrap_err(), SimError::HintRequired(NfType::Udm));
        assert_eq!(
            classify_nf(NfType::Udsf, Some(Sharing::Dedicated)).unwrap(),
            Sharing::Dedicated
        );
        assert_eq!(classify_nf(NfType::Udr, Some(Sharing::Shared)).unwrap(), Sharing::Shared);
    }
}
