//! Running command-line jobs from code. The same jobs work with the binary:
//! `cargo run --bin qsheaf -- check --input job.json`.
//!
//! Run with `cargo run --example jobs`.

use qsheaf::cli::{execute_job, Command, Format, LimitMode};

const QSC: &str = r#"{
  "variety": {"type": "product_projective", "dims": [1, 1]},
  "bundle": {"type": "tangent_deformation_p1p1", "epsilon": ["1", "0", "0"], "gamma": ["0", "0", "0"]},
  "ring": "qsc",
  "queries": [["psi", "psi", "psit^2"]]
}"#;

fn main() {
    let commands = [
        Command::Present,
        Command::Gb,
        Command::Correlator { exprs: vec![] },
        Command::Pairing,
        Command::Check,
        Command::Limit { mode: LimitMode::Undeform },
    ];
    for command in commands {
        let outcome = execute_job(&command, QSC, Format::Text);
        println!("## {command:?} -> exit {}", outcome.status.code());
        print!("{}", outcome.report.unwrap_or_default());
        if let Some(e) = outcome.error {
            println!("error: {e}");
        }
    }
    let json = execute_job(&Command::Present, QSC, Format::Json);
    print!("{}", json.report.unwrap_or_default());
}
