pub mod exact;
pub mod graph;
pub mod perm;
pub mod designs;
pub mod lp;
pub mod switching;
pub mod catalog;
pub mod classify;
pub mod geometry;
pub mod cli;
