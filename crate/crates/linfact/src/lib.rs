//! Linear-time LZ78 factorization and position-heap construction.
//!
//! The crate builds both structures by superimposing a growing trie on a
//! suffix tree: each insertion is answered by a nearest-marked-ancestor
//! query, extended one symbol with a level-ancestor query, and recorded
//! as a mark. All substrate construction (suffix array, LCP array,
//! suffix tree, ancestor indexes) is worst-case linear on integer
//! alphabets.

pub mod lcp;
pub mod level_ancestor;
pub mod oracle;
pub mod suffix_array;
pub mod suffix_tree;
pub mod text;
pub mod tree;

pub use text::{Alphabet, Text};
