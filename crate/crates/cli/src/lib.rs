//! Front end for the `wclean` tool: the ring specification language, spec
//! files, and the command implementations.

pub mod commands;
pub mod dsl;
pub mod eval;
