use serde::Serialize;

use arboreal::report::SCHEMA_VERSION;

/// Adds the schema version to any report.
#[derive(Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub schema: u32,
    #[serde(flatten)]
    pub body: &'a T,
}

pub fn to_json<T: Serialize>(body: &T) -> String {
    serde_json::to_string_pretty(&Envelope {
        schema: SCHEMA_VERSION,
        body,
    })
    .expect("report serializes")
}

/// Edges as space-separated `u-v` tokens, safe inside a CSV field.
pub fn edge_tokens(tree: &arboreal::LabeledTree) -> String {
    tree.edges()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
