pub mod enumeration;
pub mod error;
pub mod harness;
pub mod labeled;
pub mod planar_map;
pub mod schaeffer;
pub mod snake;
pub mod trees;

pub use error::{Error, Result};
