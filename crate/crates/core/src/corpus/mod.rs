//! Instance generation and the text instance format.

pub mod format;
pub mod generate;

pub use format::{InstanceFile, ParseError};
pub use generate::{
    fig1_configuration, generate, CorpusParams, CorpusSpec, Family, Generated, JITTER_DEN,
};
