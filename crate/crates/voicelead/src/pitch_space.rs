//! Integer pitch encoding, note naming, and the chord-distance metric.
//!
//! Pitch is an unbounded semitone count with C of the reference octave at 0,
//! so 12 is the C one octave up and -1 the B just below. A chord voicing is
//! a strictly ascending integer triple, and the movement between two
//! voicings is the Euclidean distance between those triples.

use std::fmt;

use thiserror::Error;

/// Canonical pitch-class spellings, sharps only.
pub const NOTE_NAMES: [&str; 12] = [
    "C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B",
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PitchError {
    #[error("unknown note name '{0}'")]
    UnknownNoteName(String),
    #[error("placement must be strictly ascending, got ({0}, {1}, {2})")]
    NotAscending(i32, i32, i32),
    #[error("placement must cover three distinct pitch classes, got ({0}, {1}, {2})")]
    RepeatedPitchClass(i32, i32, i32),
}

/// A pitch class, 0 = C through 11 = B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PitchClass(u8);

impl PitchClass {
    /// Wraps an arbitrary semitone count onto 0..=11.
    pub fn from_semitones(semitones: i32) -> Self {
        PitchClass(semitones.rem_euclid(12) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// Canonical sharp spelling.
    pub fn name(self) -> &'static str {
        NOTE_NAMES[self.0 as usize]
    }

    /// Parses a note name: the 12 sharp spellings, or the five flat
    /// spellings (Db, Eb, Gb, Ab, Bb) normalized to their sharp equivalent.
    pub fn parse(name: &str) -> Result<Self, PitchError> {
        let trimmed = name.trim();
        let mut chars = trimmed.chars();
        let letter = chars
            .next()
            .ok_or_else(|| PitchError::UnknownNoteName(name.to_string()))?
            .to_ascii_uppercase();
        let rest = chars.as_str();
        let base = match letter {
            'C' => 0,
            'D' => 2,
            'E' => 4,
            'F' => 5,
            'G' => 7,
            'A' => 9,
            'B' => 11,
            _ => return Err(PitchError::UnknownNoteName(name.to_string())),
        };
        let value = match rest {
            "" => base,
            "#" => base + 1,
            "b" => base - 1,
            _ => return Err(PitchError::UnknownNoteName(name.to_string())),
        };
        // E#, Fb, B#, Cb are outside the accepted vocabulary.
        if (rest == "#" && (letter == 'E' || letter == 'B'))
            || (rest == "b" && (letter == 'F' || letter == 'C'))
        {
            return Err(PitchError::UnknownNoteName(name.to_string()));
        }
        Ok(PitchClass::from_semitones(value))
    }

    pub fn transpose(self, semitones: i32) -> Self {
        PitchClass::from_semitones(self.0 as i32 + semitones)
    }

    /// Ascending interval from `self` to `other`, in 0..=11.
    pub fn interval_to(self, other: PitchClass) -> u8 {
        (other.0 as i32 - self.0 as i32).rem_euclid(12) as u8
    }
}

impl fmt::Display for PitchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A pitch as a semitone offset from the reference C. Unbounded in both
/// directions; negative values lie below the reference octave.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NoteIndex(pub i32);

impl NoteIndex {
    pub fn pitch_class(self) -> PitchClass {
        PitchClass::from_semitones(self.0)
    }

    /// Octaves above the reference octave; floor division, so -1 maps to -1.
    pub fn octave_offset(self) -> i32 {
        self.0.div_euclid(12)
    }

    /// Canonical name and octave offset, e.g. 12 -> ("C", 1), -1 -> ("B", -1).
    pub fn name(self) -> (&'static str, i32) {
        (self.pitch_class().name(), self.octave_offset())
    }
}

impl fmt::Display for NoteIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, octave) = self.name();
        write!(f, "{name}{octave}")
    }
}

/// A concrete voicing of a triad: three strictly ascending pitches covering
/// three distinct pitch classes.
///
/// Construction does not constrain the span; the optimizer only ever emits
/// close-position placements (span at most an octave), and with three
/// distinct pitch classes a close placement in fact spans at most 11
/// semitones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriadPlacement {
    x: NoteIndex,
    y: NoteIndex,
    z: NoteIndex,
}

impl TriadPlacement {
    pub fn new(x: i32, y: i32, z: i32) -> Result<Self, PitchError> {
        if !(x < y && y < z) {
            return Err(PitchError::NotAscending(x, y, z));
        }
        let pcs = [x.rem_euclid(12), y.rem_euclid(12), z.rem_euclid(12)];
        if pcs[0] == pcs[1] || pcs[0] == pcs[2] || pcs[1] == pcs[2] {
            return Err(PitchError::RepeatedPitchClass(x, y, z));
        }
        Ok(TriadPlacement {
            x: NoteIndex(x),
            y: NoteIndex(y),
            z: NoteIndex(z),
        })
    }

    pub fn x(&self) -> NoteIndex {
        self.x
    }

    pub fn y(&self) -> NoteIndex {
        self.y
    }

    pub fn z(&self) -> NoteIndex {
        self.z
    }

    pub fn coords(&self) -> [i32; 3] {
        [self.x.0, self.y.0, self.z.0]
    }

    pub fn notes(&self) -> [NoteIndex; 3] {
        [self.x, self.y, self.z]
    }

    pub fn pitch_classes(&self) -> [PitchClass; 3] {
        [
            self.x.pitch_class(),
            self.y.pitch_class(),
            self.z.pitch_class(),
        ]
    }

    pub fn span(&self) -> i32 {
        self.z.0 - self.x.0
    }

    /// Outer notes within an octave.
    pub fn is_close_position(&self) -> bool {
        self.span() <= 12
    }

    /// Shifts all three notes by the same number of semitones.
    pub fn translate(&self, semitones: i32) -> Self {
        TriadPlacement {
            x: NoteIndex(self.x.0 + semitones),
            y: NoteIndex(self.y.0 + semitones),
            z: NoteIndex(self.z.0 + semitones),
        }
    }
}

impl fmt::Display for TriadPlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x.0, self.y.0, self.z.0)
    }
}

/// Squared Euclidean distance, exact in integer arithmetic. All ordering
/// decisions in the crate compare these, never floats.
pub fn squared_distance(a: TriadPlacement, b: TriadPlacement) -> i64 {
    let [ax, ay, az] = a.coords();
    let [bx, by, bz] = b.coords();
    let dx = (bx - ax) as i64;
    let dy = (by - ay) as i64;
    let dz = (bz - az) as i64;
    dx * dx + dy * dy + dz * dz
}

/// Euclidean distance between two voicings.
pub fn distance(a: TriadPlacement, b: TriadPlacement) -> f64 {
    (squared_distance(a, b) as f64).sqrt()
}
