//! Rendering layer of the `anth` binary, exposed for integration tests.

pub mod output;
