//! Library half of the command-line front end: the polynomial expression
//! parser, report emission (JSON, CSV, verification tables), the defining-
//! equation scan, and the full verification harness.

pub mod expr;
pub mod report;
pub mod scan;
pub mod verify;
