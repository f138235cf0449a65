//! File formats, parallel drivers and the command-line front end for `compcs-core`.

pub mod cli;
pub mod golden;
pub mod io;
pub mod pipeline;
