//! Document format, command dispatch and reporting for the `homlie` tool.

pub mod document;
pub mod render;
pub mod run;

pub use document::{parse_document, AlgebraDocument, DocumentError, Entry};
pub use render::{render_machine, render_text};
pub use run::{run_command, Artifact, ArtifactData, Command, RunReport, Section};

/// Exit status for unusable input.
pub const EXIT_INPUT: u8 = 2;
