//! Command-line front end for `twistfree-core`: the curve-system file
//! format, JSON certificate reports and the `twistfree` subcommands.

pub mod cli;
pub mod format;
pub mod report;
pub mod text;

pub use cli::{run, Cli, Outcome};
pub use format::CurveSystemFile;
pub use report::CertificateReport;
