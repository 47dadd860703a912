pub mod cli;
pub mod coassoc;
pub mod error;
pub mod field;
pub mod ghspace;
pub mod lattices;
pub mod quaternions;
pub mod resdata;
pub mod rootsys;
