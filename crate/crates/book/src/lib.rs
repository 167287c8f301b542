//! The guide in `book/`, compiled so its examples run as doctests.
//!
//! mdbook cannot link its snippets against workspace crates, so each chapter
//! is included here as module docs. One module per chapter keeps a failing
//! doctest traceable to its chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/measure.md")]
pub mod measure {}

#[doc = include_str!("../../../book/src/hermite.md")]
pub mod hermite {}

#[doc = include_str!("../../../book/src/gram.md")]
pub mod gram {}

#[doc = include_str!("../../../book/src/building.md")]
pub mod building {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
