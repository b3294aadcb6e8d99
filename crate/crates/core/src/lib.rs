pub mod abelian;
pub mod arith;
pub mod bley_boltje;
pub mod catalog;
pub mod cochain;
pub mod error;
pub mod gmodule;
pub mod group;
pub mod lattice;
pub mod mackey;
pub mod norm;

pub use error::{Error, Result};
