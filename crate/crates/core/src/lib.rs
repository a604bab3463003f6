pub mod scalar;
pub mod linalg;
pub mod report;
pub mod hopf;
pub mod constructions;
pub mod integrals;
pub mod radford;
pub mod bicross;
pub mod qsl2;
pub mod io;
pub mod cli;
