pub mod alphabet;
pub mod error;
pub mod group;
pub mod cayley;
pub mod triangulate;
pub mod profile;
pub mod cli;
