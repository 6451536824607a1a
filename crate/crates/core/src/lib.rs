pub mod curves;
pub mod error;
pub mod exact;
pub mod family;
pub mod invariants;
pub mod loci;
pub mod oracle;
pub mod pipeline;
pub mod sampling;
pub mod subfields;
pub mod verify;

pub use error::{Error, Result};
