//! JSON report envelope. Field order is fixed by struct order and every
//! number is a decimal string, so identical runs emit identical bytes.

use serde::Serialize;

#[derive(Serialize)]
pub struct Envelope<T: Serialize> {
    pub tool_version: &'static str,
    pub command: &'static str,
    pub inputs: serde_json::Value,
    pub results: Vec<T>,
    pub all_pass: bool,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &'static str, inputs: serde_json::Value, results: Vec<T>, all_pass: bool) -> Self {
        Envelope {
            tool_version: env!("CARGO_PKG_VERSION"),
            command,
            inputs,
            results,
            all_pass,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

#[derive(Serialize)]
pub struct SigmaResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma_upper_bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s18: Option<symcover::witness::Sigma18Report>,
}

#[derive(Serialize)]
pub struct WitnessClassOut {
    pub index: i32,
    #[serde(rename = "type")]
    pub cycle_type: String,
    pub size: String,
}

#[derive(Serialize)]
pub struct FamilyOut {
    pub spec: String,
    pub members: String,
    pub per_member_intersections: Vec<String>,
}

#[derive(Serialize)]
pub struct WitnessResult {
    pub n: u32,
    pub classes: Vec<WitnessClassOut>,
    pub families: Vec<FamilyOut>,
    pub identities: Vec<symcover::witness::IdentityCheck>,
}

#[derive(Serialize)]
pub struct CoverCheckResult {
    pub n: u32,
    pub families: Vec<String>,
    pub dropped: Vec<String>,
    pub total_size: String,
    pub uncovered: Vec<String>,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct CountResult {
    pub n: u32,
    pub family: String,
    #[serde(rename = "type")]
    pub cycle_type: String,
    pub class_size: String,
    pub member_count: String,
    pub member_order: String,
    pub count_in_member: String,
}

#[derive(Serialize)]
pub struct ExactResult {
    pub group: String,
    pub degree: u32,
    pub universe: usize,
    pub subsets: usize,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<usize>,
    pub nodes: u64,
    pub certificate: Vec<String>,
    pub certificate_verified: bool,
}
