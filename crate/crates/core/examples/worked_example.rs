// Reproduces the bundled 3x3 worked example and prints the transcript.

use quatinv::cli::{demo, Golden, GOLDEN};
use quatinv::Result;

pub fn run_example() -> Result<bool> {
    let golden: Golden = serde_json::from_str(GOLDEN).expect("bundled fixture parses");
    let transcript = demo(&golden)?;
    print!("{}", transcript.to_text());
    Ok(transcript.passed())
}

fn main() -> Result<()> {
    assert!(run_example()?);
    Ok(())
}
