//! Std companion to `kspath-core`: edge-list files, the benchmark harness,
//! and the pieces the `kspath` binary is built from.

pub mod bench;
pub mod edgelist;
