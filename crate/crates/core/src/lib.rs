pub mod bench;
pub mod gtpattern;
pub mod lattice;
pub mod mprod;
pub mod poly;
pub mod schur;
pub mod verify;
