//! The guide under `book/`, mounted as rustdoc modules so that every code
//! block in a chapter compiles and runs under `cargo test`. The book is the
//! human-facing rendering (`mdbook build book`); this crate is what keeps
//! its examples honest.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/hypervectors.md")]
pub mod hypervectors {}

#[doc = include_str!("../../../book/src/encoding.md")]
pub mod encoding {}

#[doc = include_str!("../../../book/src/similarity.md")]
pub mod similarity {}

#[doc = include_str!("../../../book/src/baselines.md")]
pub mod baselines {}

#[doc = include_str!("../../../book/src/benchmarks.md")]
pub mod benchmarks {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
