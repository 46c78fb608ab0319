//! Subword complexity, recurrence and completions of infinite partial words.
//!
//! Infinite words are described by a [`FamilySpec`] and analysed through
//! finite prefixes. Quantities that only make sense in the limit are reported
//! together with the horizon they were computed at.

pub mod analysis;
pub mod completion;
pub mod error;
pub mod exact;
pub mod family;
pub mod manifest;
pub mod verify;
pub mod word;

pub use analysis::{ComplexityProfile, OccurrenceIndex, RecurrenceVerdict, SubwordSet};
pub use error::{Error, Result};
pub use family::{preset, FamilySpec};
pub use word::{Alphabet, FullWord, PartialWord, Symbol};
