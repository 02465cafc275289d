#![no_std]
extern crate alloc;

pub mod algebraic;
pub mod fricke;
pub mod interval;
pub mod poly;
mod textpoly;
pub mod tracering;
pub mod variety;
pub mod words;
