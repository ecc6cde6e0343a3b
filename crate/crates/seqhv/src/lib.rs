//! Similarity-preserving hypervector encoding of symbol sequences.
//!
//! A sequence is turned into one fixed-width vector of unit complex phasors:
//! each symbol is bound to a window of positional vectors, and the bound
//! pairs are superimposed. Nearby positions share most of their window, so
//! similarity between encoded sequences degrades gracefully with symbol
//! displacement instead of collapsing at the first misalignment. Shifting a
//! whole sequence corresponds to binding a positional power onto its code,
//! which makes alignment search cheap.
//!
//! The crate also ships classic string baselines (Levenshtein and bigram
//! kernels) and a reproducible benchmark harness over a bundled constraint
//! dataset, so encoder variants can be compared against known orderings.
//!
//! ```
//! use seqhv::{Codebook, EncoderConfig, ShiftRange, SimilarityMeasure, sim, sim_shifted};
//!
//! let cb = Codebook::new(EncoderConfig::new(2048, 3, 42, false)?);
//! let x = cb.encode_str("abcde")?;
//! let y = cb.encode_str("abde")?;  // one deletion
//! let same = sim(SimilarityMeasure::Cosine, &x, &x)?;
//! assert!((same - 1.0).abs() < 1e-12);
//!
//! // shift search finds the alignment that best explains the edit
//! let (best, _shift) = sim_shifted(&cb, SimilarityMeasure::Cosine, &y, &x, ShiftRange::new(2))?;
//! assert!(best > sim(SimilarityMeasure::Cosine, &y, &x)? - 1e-12);
//! # Ok::<(), seqhv::Error>(())
//! ```

pub mod baselines;
pub mod bench;
pub mod encode;
pub mod error;
pub mod fhrr;
pub mod sim;

pub use encode::{realization_seed, Codebook, EncoderConfig, PositionedSequence};
pub use error::{Error, Result};
pub use fhrr::Hypervector;
pub use sim::{sim, sim_shifted, ShiftRange, SimilarityMeasure};
