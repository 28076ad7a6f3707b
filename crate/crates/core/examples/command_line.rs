//! Drives the batch front end in-process: writes a request, runs the `cech`
//! command and reads the result document back.
//!
//! Run with `cargo run --example command_line`. The same request works with
//! `hodge1d --command cech --input request.json --output result.json`.

use dirichlet_hodge::cli::{parse_output, run, Command, CommandResult, RunConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("hodge1d-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let input = dir.join("request.json");
    std::fs::write(
        &input,
        r#"{ "builder": { "family": "cycle", "level_or_size": 4 },
             "cover": { "sets": [[0, 1], [1, 2], [2, 3], [3, 0]] } }"#,
    )?;
    let output = dir.join("result.json");
    let outcome = run(&RunConfig { command: Command::Cech, input, output: output.clone(), tolerance: None, seed: None });
    println!("exit code {}", outcome.exit_code);

    let doc = parse_output(&std::fs::read_to_string(&output)?)?;
    if let CommandResult::Cech(r) = doc.result {
        println!("dim Ȟ¹ = {}, dim ker ∂* = {}, agree = {}", r.h1.h1, r.correspondence.harmonic_dimension, r.correspondence.agree);
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
