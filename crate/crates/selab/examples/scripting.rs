//! Drive the workbench from its script language; the same text works as
//! a file passed to the `selab` binary.
//!
//! ```bash
//! cargo run -p selab --example scripting
//! ```

use selab::script::{parse_script, print_script, run_script, RunOptions};

const SCRIPT: &str = r#"
# build S3 as a twisted product of C3 by C2
group X = cyclic(3)
group B = cyclic(2)
action inv = by_images(B; X; 0 1)   # 1 = the inversion automorphism
ext E = semidirect(inv)

# subgroup queries inside S3 directly
group G = symmetric(3)
sub T = generate(G; (0 1))
sub A = generate(G; (0 1 2))
core normal(T)
core normal(A)

# cores relative to the extension
sub K = generate(X; 1)
core splitext(K; E)

# a few checkers
check higgins(G)
check clots(A)
check core_adjunction(E)
check omega_witness()
"#;

fn main() -> selab::Result<()> {
    let script = parse_script(SCRIPT)?;
    println!("canonical form:\n{}", print_script(&script));

    let outcome = run_script(&script, &RunOptions::default())?;
    println!("run output:");
    for line in &outcome.lines {
        println!("  {line}");
    }
    let fails = outcome.reports.iter().filter(|r| r.verdict == selab::Verdict::Fails).count();
    println!("\n{} checks, {} failures", outcome.reports.len(), fails);
    Ok(())
}
