pub mod algebra;
pub mod bench;
pub mod cli;
pub mod descriptor;
pub mod engines;
pub mod error;
pub mod fixtures;
pub mod grid;
pub mod implications;
pub mod lia;
