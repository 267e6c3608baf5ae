//! Command-line front end for [`escrit_core`], with file IO and a parallel
//! driver for the characterization scan.

pub mod cli;
pub mod edgelist;
pub mod input;
pub mod parallel;
pub mod summary;

pub use cli::{run, CommandOutcome};
pub use edgelist::{parse_edge_list, write_edge_list, EdgeListError};
pub use parallel::{scan_lines_parallel, scan_range_parallel};
