//! Loading a JSON instance, running it and replaying its witnesses.
//!
//! `cargo run --example instance_run -- instances/prop35.json`

use std::path::PathBuf;

use pconvex::cli::{replay_witnesses, run_instance};
use pconvex::Instance;

fn main() -> pconvex::Result<()> {
    let path = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances/remark53.json"));
    let instance = Instance::load(&path)?;
    println!("{} (sha256 {})", instance.description.as_deref().unwrap_or("unnamed instance"), &instance.digest[..12]);

    let report = run_instance(&instance, 42);
    for r in &report.records {
        println!("  {:<28} {:<10} {:?}", r.name, r.kind, r.status);
    }
    println!("exit code {}", report.exit_code());

    let text = serde_json::to_string(&report).expect("report serializes");
    for r in replay_witnesses(&instance, &text)? {
        println!("  replay {:<21} reproduced {}", r.check, r.reproduced);
    }
    Ok(())
}
