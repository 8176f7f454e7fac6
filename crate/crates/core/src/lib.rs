pub mod apps;
pub mod cli;
pub mod epsilon;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod partition;
pub mod rational;
pub mod roots;
