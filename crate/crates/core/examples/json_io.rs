//! Loading an instance from JSON, computing its TCI, and writing it back in a
//! form `tropeci` re-checks on load.

use tropeci::io::{instance_json, parse_str, to_pretty, Instance};
use tropeci::matroid::tci_from_mci;

const MCI: &str = r#"{
  "description": "a line and a conic in the plane",
  "points": [
    {"id": "l0", "a": [0, 0]}, {"id": "l1", "a": [1, 0]}, {"id": "l2", "a": [0, 1]},
    {"id": "q0", "a": [0, 0]}, {"id": "q1", "a": [2, 0]}, {"id": "q2", "a": [0, 2]}
  ],
  "matrix": [[1, 1, 1, 0, 0, 0], [0, 0, 0, 1, "2/3", -1]],
  "codim": 2
}"#;

fn main() -> tropeci::Result<()> {
    let loaded = parse_str(MCI)?;
    println!("loaded a{} {}: {}", if loaded.instance.kind() == "mci" { "n" } else { "" }, loaded.instance.kind(), loaded.metadata.unwrap_or_default());
    let Instance::Mci(mci) = loaded.instance else { unreachable!() };
    let tci = tci_from_mci(&mci)?;
    let text = to_pretty(&instance_json(&Instance::Tci(tci), Some("TCI of a line and a conic")));
    // parsing re-derives every corner locus and rejects tampered files
    let back = parse_str(&text)?;
    println!("round trip ok: {}", back.instance.kind() == "tci");
    println!("{}", text.lines().take(12).collect::<Vec<_>>().join("\n"));
    Ok(())
}
