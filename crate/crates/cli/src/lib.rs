//! Library side of the `klcf` command-line tool.

pub mod args;
pub mod bench;
pub mod error;
pub mod gen;
pub mod input;
pub mod run;
pub mod select;

pub use args::{AlgoChoice, BenchArgs, Cli, Command, GenArgs, OutputFormat, RunArgs};
pub use error::{CliError, Result};
pub use input::{load_inputs, InputFormat};
pub use run::{run, run_text, Report};
pub use select::select_algorithm;

/// Sizes the global rayon pool; a no-op in builds without the `parallel`
/// feature.
pub fn set_threads(threads: Option<usize>) -> Result<()> {
    #[cfg(feature = "parallel")]
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Usage(format!("--threads: {e}")))?;
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    Ok(())
}
