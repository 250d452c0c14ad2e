//! Exact minimum distance of binary linear codes.
//!
//! The Brouwer-Zimmermann method enumerates, for growing g, all codewords
//! generated by g rows of several systematic generator matrices Γ built on
//! disjoint information sets, until the lower bound implied by the
//! enumeration meets the lightest codeword found.
//!
//! ```
//! use mindist_core::{minimum_distance, BitMatrix, EngineConfig};
//!
//! let hamming = BitMatrix::<u32>::from_strs(&["1000110", "0100011", "0010111", "0001101"]);
//! let report = minimum_distance(&hamming, &EngineConfig::default()).unwrap();
//! assert_eq!(report.distance, 3);
//! ```

pub mod combinatorics;
pub mod constructions;
pub mod engine;
pub mod enumeration;
mod error;
pub mod gf2;
pub mod random;

pub use combinatorics::{binomial, BigCount, Combination};
pub use engine::{
    brute_force_distance, initial_bounds, lower_bound_update, minimum_distance,
    minimum_distance_with_stop, Bounds, BoundsStep, Checkpoint, Counters, DistanceReport,
    EngineConfig, GammaSummary, Outcome, BRUTE_FORCE_MAX_K,
};
pub use enumeration::{EnumerationResult, SavedAdditionsStore, Strategy};
pub use error::{Error, Result};
pub use gf2::{build_gamma_set, BitMatrix, Gamma, GammaSet, Word, WordWidth};
