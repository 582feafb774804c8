//! Client for the OEIS search endpoint.
//!
//! Only the sequence number and name of each hit are read. The endpoint has
//! answered both with a bare array of results and with an object holding a
//! `results` field; both are accepted, as is `null` for no hits.

use serde_json::Value;

use crate::error::{Error, Result};

pub const DEFAULT_URL: &str = "https://oeis.org/search";
pub const OEIS_URL_ENV: &str = "GRIDCYCLES_OEIS_URL";
pub const MIN_TERMS: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OeisHit {
    /// `A` followed by six digits.
    pub id: String,
    pub name: String,
}

/// The endpoint from the environment override, else the public one.
pub fn endpoint() -> String {
    std::env::var(OEIS_URL_ENV)
        .ok()
        .filter(|s| !s.is_empty())
        .unwrap_or_else(|| DEFAULT_URL.to_string())
}

pub fn check_terms<T>(terms: &[T]) -> Result<()> {
    if terms.len() < MIN_TERMS {
        return Err(Error::Domain(format!(
            "an OEIS lookup needs at least {MIN_TERMS} terms, got {}",
            terms.len()
        )));
    }
    Ok(())
}

pub fn query_url(base: &str, terms: &[String]) -> String {
    let sep = if base.contains('?') { '&' } else { '?' };
    format!("{base}{sep}q={}&fmt=json", terms.join(","))
}

pub fn parse_response(body: &str) -> Result<Vec<OeisHit>> {
    let malformed = |message: String| Error::MalformedResponse {
        message,
        raw_body: body.to_string(),
    };
    let json: Value =
        serde_json::from_str(body).map_err(|e| malformed(format!("not JSON: {e}")))?;
    let results = match &json {
        Value::Object(map) => map.get("results").unwrap_or(&Value::Null),
        other => other,
    };
    let items = match results {
        Value::Null => return Ok(Vec::new()),
        Value::Array(items) => items,
        _ => return Err(malformed("expected an array of results".into())),
    };
    items
        .iter()
        .map(|item| {
            let number = item
                .get("number")
                .and_then(Value::as_u64)
                .ok_or_else(|| malformed("result without a numeric `number`".into()))?;
            let name = item
                .get("name")
                .and_then(Value::as_str)
                .ok_or_else(|| malformed("result without a string `name`".into()))?;
            Ok(OeisHit {
                id: format!("A{number:06}"),
                name: name.to_string(),
            })
        })
        .collect()
}

/// Queries `base` for `terms`.
#[cfg(feature = "network")]
pub fn query(base: &str, terms: &[String]) -> Result<Vec<OeisHit>> {
    use std::time::Duration;

    check_terms(terms)?;
    let config = ureq::Agent::config_builder()
        .timeout_global(Some(Duration::from_secs(30)))
        .http_status_as_error(false)
        .build();
    let agent = ureq::Agent::new_with_config(config);
    let url = query_url(base, terms);
    let mut response = agent
        .get(&url)
        .call()
        .map_err(|e| Error::Network(format!("GET {url}: {e}")))?;
    let status = response.status();
    let body = response
        .body_mut()
        .read_to_string()
        .map_err(|e| Error::Network(format!("reading body from {url}: {e}")))?;
    if !status.is_success() {
        return Err(Error::Network(format!(
            "GET {url}: HTTP {}",
            status.as_u16()
        )));
    }
    parse_response(&body)
}

#[cfg(not(feature = "network"))]
pub fn query(_base: &str, terms: &[String]) -> Result<Vec<OeisHit>> {
    check_terms(terms)?;
    Err(Error::Network("built without the `network` feature".into()))
}
