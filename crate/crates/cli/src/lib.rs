//! Library surface of the command line tool, so the report and the
//! command renderers can be driven from tests.

pub mod commands;
pub mod report;
