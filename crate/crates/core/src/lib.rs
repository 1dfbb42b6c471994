pub mod cli;
pub mod expand;
pub mod fock;
pub mod laurent;
pub mod partition;
pub mod polyring;
pub mod symfunc;
pub mod verify;
