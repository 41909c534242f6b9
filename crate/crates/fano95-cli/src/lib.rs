//! Persistent record schema and database construction for the family
//! catalog.  The binary in this package exposes the data on the command
//! line; this library holds the serialization layer so tests and other
//! tools can round-trip the exported files.

pub mod record;

pub use record::{build_database, BasketEntry, ChainEventRecord, FamilyRecord};
