//! Major and natural-minor scales and their seven diatonic triads.

use std::fmt;

use thiserror::Error;

use crate::pitch_space::PitchClass;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("invalid degree {0}: expected 1 through 7")]
pub struct InvalidDegree(pub u8);

/// Scale flavor. Only the natural form of the minor scale is modeled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScaleKind {
    Major,
    NaturalMinor,
}

impl ScaleKind {
    /// Semitone offsets of the seven degrees from the tonic.
    pub fn intervals(self) -> [u8; 7] {
        match self {
            ScaleKind::Major => [0, 2, 4, 5, 7, 9, 11],
            ScaleKind::NaturalMinor => [0, 2, 3, 5, 7, 8, 10],
        }
    }

    /// Triad quality on each degree, root upward.
    pub fn quality_row(self) -> [ChordQuality; 7] {
        use ChordQuality::{Diminished, Major, Minor};
        match self {
            ScaleKind::Major => [Major, Minor, Minor, Major, Major, Minor, Diminished],
            ScaleKind::NaturalMinor => [Minor, Diminished, Major, Minor, Minor, Major, Major],
        }
    }
}

impl fmt::Display for ScaleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScaleKind::Major => f.write_str("major"),
            ScaleKind::NaturalMinor => f.write_str("minor"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChordQuality {
    Major,
    Minor,
    Diminished,
}

impl ChordQuality {
    pub fn label(self) -> &'static str {
        match self {
            ChordQuality::Major => "Major",
            ChordQuality::Minor => "Minor",
            ChordQuality::Diminished => "Diminished",
        }
    }

    fn from_intervals(third: u8, fifth: u8) -> Self {
        match (third, fifth) {
            (4, 7) => ChordQuality::Major,
            (3, 7) => ChordQuality::Minor,
            (3, 6) => ChordQuality::Diminished,
            other => unreachable!("non-triadic interval pair {other:?}"),
        }
    }
}

impl fmt::Display for ChordQuality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A seven-degree scale: tonic, kind, and the degree pitch classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scale {
    tonic: PitchClass,
    kind: ScaleKind,
    degrees: [PitchClass; 7],
}

impl Scale {
    pub fn new(tonic: PitchClass, kind: ScaleKind) -> Self {
        let degrees = kind
            .intervals()
            .map(|step| tonic.transpose(step as i32));
        Scale {
            tonic,
            kind,
            degrees,
        }
    }

    pub fn tonic(&self) -> PitchClass {
        self.tonic
    }

    pub fn kind(&self) -> ScaleKind {
        self.kind
    }

    pub fn degrees(&self) -> [PitchClass; 7] {
        self.degrees
    }

    pub fn contains(&self, pc: PitchClass) -> bool {
        self.degrees.contains(&pc)
    }

    /// The diatonic triad on `degree` (1-based): the degree note plus the
    /// next two alternating scale degrees.
    pub fn triad(&self, degree: u8) -> Result<DiatonicTriad, InvalidDegree> {
        if !(1..=7).contains(&degree) {
            return Err(InvalidDegree(degree));
        }
        let i = (degree - 1) as usize;
        let root = self.degrees[i];
        let third = self.degrees[(i + 2) % 7];
        let fifth = self.degrees[(i + 4) % 7];
        let quality =
            ChordQuality::from_intervals(root.interval_to(third), root.interval_to(fifth));
        Ok(DiatonicTriad {
            degree,
            quality,
            pitch_classes: [root, third, fifth],
        })
    }

    /// All seven triads, degree order.
    pub fn triads(&self) -> [DiatonicTriad; 7] {
        [1, 2, 3, 4, 5, 6, 7].map(|d| self.triad(d).expect("degree in range"))
    }
}

/// A scale-degree chord: 1-based degree, quality, and the pitch classes of
/// root, third, and fifth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiatonicTriad {
    degree: u8,
    quality: ChordQuality,
    pitch_classes: [PitchClass; 3],
}

impl DiatonicTriad {
    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn quality(&self) -> ChordQuality {
        self.quality
    }

    /// Root, third, fifth.
    pub fn pitch_classes(&self) -> [PitchClass; 3] {
        self.pitch_classes
    }

    pub fn root(&self) -> PitchClass {
        self.pitch_classes[0]
    }

    pub fn third(&self) -> PitchClass {
        self.pitch_classes[1]
    }

    pub fn fifth(&self) -> PitchClass {
        self.pitch_classes[2]
    }

    /// Display name in the style "D minor", "B diminished".
    pub fn name(&self) -> String {
        let quality = match self.quality {
            ChordQuality::Major => "major",
            ChordQuality::Minor => "minor",
            ChordQuality::Diminished => "diminished",
        };
        format!("{} {}", self.root(), quality)
    }
}

impl fmt::Display for DiatonicTriad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
