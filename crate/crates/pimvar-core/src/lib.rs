//! A toolkit for checking encodings of synchronous pi-calculus channels
//! into MVar-based shared memory.

pub mod pi;

pub mod gstb;
