//! File formats, report documents, and check batteries backing the
//! `hopfint` command-line tool.

pub mod format;
pub mod report;
pub mod suite;
