//! Versioned JSON envelope shared by every document the tools read or
//! write. Keys are emitted in sorted order so output is byte-stable.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Scalar;

pub const SCHEMA: &str = "hingekit/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arithmetic {
    Exact,
    Approx,
}

impl Arithmetic {
    pub fn of<S: Scalar>() -> Arithmetic {
        if S::EXACT {
            Arithmetic::Exact
        } else {
            Arithmetic::Approx
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub schema: String,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arithmetic: Option<Arithmetic>,
}

#[derive(Serialize, Deserialize)]
struct Envelope<T> {
    #[serde(flatten)]
    header: Header,
    data: T,
}

/// Wraps `data` in the envelope and renders it with sorted keys.
pub fn write_document<T: Serialize>(kind: &str, arithmetic: Option<Arithmetic>, data: &T) -> Result<String> {
    let env = Envelope { header: Header { schema: SCHEMA.into(), kind: kind.into(), arithmetic }, data };
    // Round-tripping through `Value` sorts object keys.
    let v = serde_json::to_value(&env)?;
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

/// Reads the header of a document without decoding its payload.
pub fn read_header(text: &str) -> Result<Header> {
    #[derive(Deserialize)]
    struct Only {
        #[serde(flatten)]
        header: Header,
    }
    let h = serde_json::from_str::<Only>(text)?.header;
    if h.schema != SCHEMA {
        return Err(Error::Schema { expected: SCHEMA.into(), found: h.schema });
    }
    Ok(h)
}

/// Parses a document of the given kind. The payload type decides the
/// arithmetic, which must match the header when the header names one.
pub fn read_document<T: DeserializeOwned>(text: &str, kind: &str, arithmetic: Option<Arithmetic>) -> Result<T> {
    let h = read_header(text)?;
    if h.kind != kind {
        return Err(Error::Schema { expected: kind.into(), found: h.kind });
    }
    if let (Some(want), Some(got)) = (arithmetic, h.arithmetic) {
        if want != got {
            return Err(Error::Schema { expected: format!("{want:?}"), found: format!("{got:?}") });
        }
    }
    let env: Envelope<T> = serde_json::from_str(text)?;
    Ok(env.data)
}
