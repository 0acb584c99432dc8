// A TOML run description written to CSV and a JSON sidecar, the same path
// `ionpair simulate` takes.

use std::error::Error;

use ionpair::cli::{run_config, RunConfig};

const CONFIG: &str = r#"
[model]
lambda1 = [1.0, 0.0]
lambda2 = [0.01, 0.0]
eta = 0.202
epsilon = 0.01
nbar = 5.0
phi = 0.0

[measure]
name = "relative_entropy"
side_a = ["ion1"]
side_b = ["ion2"]

[grid]
theta = [0.7853981633974483]
time = { start = 0.0, stop = 30.0, points = 61 }
gamma = [0.0, 0.05, 0.1]

[run]
output = "relative_entropy_vs_gamma"
"#;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let config = RunConfig::from_toml_str(CONFIG)?;
    let prefix = std::env::temp_dir().join("ionpair-example").join(&config.run.output);
    let (dataset, csv, json) = run_config(&config, None, Some(&prefix), Some(2)).map_err(|f| f.message)?;
    println!("{} rows -> {}", dataset.sidecar.rows, csv.display());
    println!("sidecar -> {}", json.display());
    println!(
        "fock cutoff {}, dropped weight {:.2e}",
        dataset.sidecar.truncation.fock_cutoff, dataset.sidecar.truncation.norm_deficit
    );
    for s in &dataset.series {
        println!("γ = {:<5} mean R = {:.6}", s.params.gamma, s.mean());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
