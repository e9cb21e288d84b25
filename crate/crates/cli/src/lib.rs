//! Document types and text rendering behind the `sphmod` binary, exposed as
//! a library so integration tests can parse reports in their typed form.

pub mod doc;
pub mod text;
