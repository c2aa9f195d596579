//! Certifying maximum-cardinality matching in general graphs.
//!
//! The engine is Edmonds' blossom-shrinking algorithm, layered as
//!
//! * [`certify::find_max_matching`]: augment from the empty matching until
//!   no augmenting path is left, then emit an odd-set cover;
//! * [`contraction::find_aug_path`]: search, contract any blossom found and
//!   recurse on the quotient, lifting the path back out with
//!   [`contraction::refine`];
//! * [`blossom::compute_blossom`]: turn two tree ascents into an augmenting
//!   path or a blossom;
//! * [`search::compute_alt_path`]: the alternating-forest search itself.
//!
//! [`certify::check_max_card_matching`] verifies a result from the graph,
//! the matching and the cover alone, and [`oracle`] provides brute-force
//! answers for small graphs.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod blossom;
pub mod certify;
pub mod contraction;
pub mod error;
pub mod graph;
pub mod observe;
pub mod oracle;
pub mod search;

pub use certify::{
    check_certificate, check_max_card_matching, find_max_matching, find_max_matching_with,
    CertifiedMatching, OddSetCover, RejectReason, Verdict,
};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, Matching, Vertex};
pub use observe::{Observer, SolveOptions};
