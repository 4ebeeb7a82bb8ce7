//! File formats, certificate verification, engine dispatch and benchmarking
//! for the `colclust` command-line tool.

pub mod bench;
pub mod corpus;
pub mod format;
pub mod solve;
pub mod verify;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const NO: i32 = 1;
    pub const NO_WITH_CONFIDENCE: i32 = 2;
    pub const USAGE: i32 = 64;
    pub const DATA: i32 = 65;
    pub const NO_INPUT: i32 = 66;
    pub const IO: i32 = 74;
}
