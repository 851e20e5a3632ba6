pub mod arrays;
pub mod bounds;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod potentials;
