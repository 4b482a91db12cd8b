//! Minimum-movement chord voicings.
//!
//! Triads are modeled as points in a 3-dimensional integer pitch lattice
//! (one axis per voice, one semitone per unit). Voicing a chord near an
//! anchor chord then becomes a nearest-point search, and voicing a whole
//! diatonic scale this way yields three inversion sets whose cumulative
//! movement away from the tonic triad is the same constant, 9 + 2*sqrt(5),
//! in every key, major or natural minor.
//!
//! Note on terminology: inversions here are numbered by which chord member
//! is lowest (1 = root, 2 = third, 3 = fifth). Standard theory instead
//! calls the root-lowest form "root position"; the numbering used by this
//! crate is shifted by one relative to that convention.

pub mod diatonic;
pub mod midi;
pub mod optimizer;
pub mod oracle;
pub mod output;
pub mod pitch_space;

pub use diatonic::{ChordQuality, DiatonicTriad, Scale, ScaleKind};
pub use optimizer::{
    AnchorChoice, FirstNote, InversionLabel, ProgressionMode, ProgressionSpec, VoicingRow,
    VoicingTable,
};
pub use pitch_space::{NoteIndex, PitchClass, TriadPlacement};

/// Cumulative distance from the tonic triad to the other six diatonic
/// triads: 9 + 2*sqrt(5), identical for every key, scale kind, and anchor
/// choice.
pub fn cumulative_constant() -> f64 {
    9.0 + 2.0 * 5.0_f64.sqrt()
}
