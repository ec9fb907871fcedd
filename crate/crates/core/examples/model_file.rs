//! Loading a model file and running its tasks, as the command line does.

use gproj::cli::{parse_model_file, run_report, Format};
use gproj::ring::DEFAULT_DEGREE_GUARD;

const MODEL: &str = "\
ring R2 = GF(2)[x] / (x^2)
module I = R2^1 / [x]
ring Q = QQ[x]
module k = Q^1 / [x]
task pd I
task gclass k
";

pub fn main() -> gproj::Result<()> {
    let model = parse_model_file(MODEL, DEFAULT_DEGREE_GUARD)?;
    print!("{}", model.serialize());
    let (out, code) = run_report(&model, 4, Format::Machine);
    print!("{out}");
    println!("exit code {code}");
    Ok(())
}
