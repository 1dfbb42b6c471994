#![allow(dead_code)]

pub mod checks;
pub mod golden;
pub mod oracle;
