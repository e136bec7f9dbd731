//! File formats, rendering and the command-line front end over `demazure-core`.

pub mod cli;
pub mod golden;
pub mod json;
pub mod latex;
pub mod verify;

pub use cli::run;
