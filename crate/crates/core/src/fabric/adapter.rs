//! Management-services adapter: bridges service-based invocations to systems
//! with native interfaces, translating payload fields in both directions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SimError};

/// Flat request/response payload. String-valued on purpose: the interesting
/// property is lossless field translation, not typing.
pub type Payload = BTreeMap<String, String>;

pub fn payload_from(pairs: &[(&str, &str)]) -> Payload {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

/// Renders a payload as deterministic `k=v` pairs for trace details.
pub fn render_payload(payload: &Payload) -> String {
    payload
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Declarative bidirectional field map. Both name columns must be free of
/// duplicates, which makes translate-back ∘ translate the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Codec {
    fields: Vec<(String, String)>,
}

impl Codec {
    pub fn new(fields: &[(&str, &str)]) -> Result<Self> {
        let mut seen_local = BTreeMap::new();
        let mut seen_external = BTreeMap::new();
        for (local, external) in fields {
            if seen_local.insert(local.to_string(), ()).is_some() {
                return Err(SimError::CodecNotBijective(local.to_string()));
            }
            if seen_external.insert(external.to_string(), ()).is_some() {
                return Err(SimError::CodecNotBijective(external.to_string()));
            }
        }
        Ok(Codec {
            fields: fields.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        })
    }

    fn map_field(&self, name: &str, to_external: bool) -> Option<&str> {
        self.fields.iter().find_map(|(local, external)| {
            if to_external && local == name {
                Some(external.as_str())
            } else if !to_external && external == name {
                Some(local.as_str())
            } else {
                None
            }
        })
    }

    /// Local schema → external schema. Every field must be mapped.
    pub fn translate(&self, request: &Payload) -> Result<Payload> {
        self.convert(request, true)
    }

    /// External schema → local schema.
    pub fn translate_back(&self, response: &Payload) -> Result<Payload> {
        self.convert(response, false)
    }

    fn convert(&self, payload: &Payload, to_external: bool) -> Result<Payload> {
        let mut out = Payload::new();
        for (key, value) in payload {
            let mapped = self
                .map_field(key, to_external)
                .ok_or_else(|| SimError::CodecMismatch { field: key.clone() })?;
            out.insert(mapped.to_string(), value.clone());
        }
        Ok(out)
    }
}

/// Binding of one fabric-side capability to one external operation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdapterBinding {
    pub adapter_id: String,
    pub zsm_capability: String,
    pub external_operation: String,
    pub codec: Codec,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scale_codec() -> Codec {
        Codec::new(&[
            ("op", "operationType"),
            ("vnf", "vnfInstanceId"),
            ("delta_vcpu", "vcpuDelta"),
        ])
        .unwrap()
    }

    #[test]
    fn round_trip_is_identity() {
        let codec = scale_codec();
        let request = payload_from(&[("op", "ScaleVnf"), ("vnf", "smf-1"), ("delta_vcpu", "+1")]);
        let external = codec.translate(&request).unwrap();
        assert_eq!(external.get("vnfInstanceId").map(String::as_str), Some("smf-1"));
        assert_eq!(codec.translate_back(&external).unwrap(), request);
    }

    #[test]
    fn unmapped_field_is_a_mismatch() {
        let codec = scale_codec();
        let request = payload_from(&[("op", "ScaleVnf"), ("foo", "bar")]);
        assert_eq!(
            codec.translate(&request).unwrap_err(),
            SimError::CodecMismatch { field: "foo".to_string() }
        );
    }

    #[test]
    fn duplicate_names_are_rejected() {
        assert!(Codec::new(&[("a", "x"), ("a", "y")]).is_err());
        assert!(Codec::new(&[("a", "x"), ("b", "x")]).is_err());
    }
}
