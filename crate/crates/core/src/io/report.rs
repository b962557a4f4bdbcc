use super::config::RunConfig;
use crate::error::Result;
use serde::Serialize;
use serde_json::Value;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// One certificate inside a report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Payload {
    pub kind: String,
    pub inputs: Vec<String>,
    pub pass: bool,
    pub numbers: Value,
}

impl Payload {
    pub fn new<T: Serialize>(
        kind: &str,
        inputs: Vec<String>,
        pass: bool,
        data: &T,
    ) -> Result<Self> {
        Ok(Payload {
            kind: kind.into(),
            inputs,
            pass,
            numbers: serde_json::to_value(data)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertificateReport {
    pub tool_version: String,
    pub config: RunConfig,
    pub inputs: Vec<String>,
    pub payloads: Vec<Payload>,
    pub pass: bool,
}

impl CertificateReport {
    /// The overall flag is the conjunction of the payload flags.
    pub fn new(config: &RunConfig, payloads: Vec<Payload>) -> Self {
        let mut inputs: Vec<String> = payloads
            .iter()
            .flat_map(|p| p.inputs.iter().cloned())
            .collect();
        inputs.dedup();
        let pass = payloads.iter().all(|p| p.pass);
        CertificateReport {
            tool_version: TOOL_VERSION.into(),
            config: config.clone(),
            inputs,
            payloads,
            pass,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub analysis: String,
    pub inputs: Vec<String>,
    pub numbers: Value,
    /// Subsets or edges as vertex index lists.
    pub witnesses: Value,
    pub pass: bool,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_pass_is_conjunction() {
        let cfg = RunConfig {
            workers: 1,
            ..Default::default()
        };
        let ok = Payload::new("x", vec!["a".into()], true, &1).unwrap();
        let bad = Payload::new("y", vec!["a".into()], false, &2).unwrap();
        assert!(CertificateReport::new(&cfg, vec![ok.clone()]).pass);
        let r = CertificateReport::new(&cfg, vec![ok, bad]);
        assert!(!r.pass);
        assert_eq!(r.inputs, vec!["a".to_string()]);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["payloads"][1]["numbers"], 2);
        assert!(CertificateReport::new(&cfg, vec![]).pass);
    }
}
