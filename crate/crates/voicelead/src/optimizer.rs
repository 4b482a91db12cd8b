//! Close-position placement enumeration, nearest-placement search, voicing
//! tables, inversion sets, and progression voicing.
//!
//! The search is exhaustive over a bounded window. Any close placement of a
//! triad is one of its three stackings (root, third, or fifth lowest)
//! shifted by whole octaves, so enumeration walks stackings and octave
//! shifts rather than scanning raw triples. All minimization compares exact
//! integer squared distances; floats appear only in reported values.

use std::fmt;

use thiserror::Error;

use crate::diatonic::{ChordQuality, DiatonicTriad, InvalidDegree, Scale, ScaleKind};
use crate::pitch_space::{distance, squared_distance, NoteIndex, PitchClass, TriadPlacement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OptimizerError {
    #[error("no placement fits in window [{low}, {high}]")]
    EmptyWindow { low: i32, high: i32 },
    #[error(transparent)]
    Degree(#[from] InvalidDegree),
    #[error("progression must contain at least one chord")]
    EmptyProgression,
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("invalid inversion set {0}: expected 1, 2, or 3")]
pub struct InvalidInversion(pub u8);

/// Which chord member is the lowest note of a placement. Numbered 1 (root
/// lowest), 2 (third lowest), 3 (fifth lowest); note that this count starts
/// one earlier than the conventional one, which calls root-lowest "root
/// position" and third-lowest the first inversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InversionLabel {
    Root = 1,
    Third = 2,
    Fifth = 3,
}

impl InversionLabel {
    pub const ALL: [InversionLabel; 3] =
        [InversionLabel::Root, InversionLabel::Third, InversionLabel::Fifth];

    pub fn number(self) -> u8 {
        self as u8
    }

    pub fn from_number(n: u8) -> Result<Self, InvalidInversion> {
        match n {
            1 => Ok(InversionLabel::Root),
            2 => Ok(InversionLabel::Third),
            3 => Ok(InversionLabel::Fifth),
            other => Err(InvalidInversion(other)),
        }
    }
}

impl fmt::Display for InversionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// Which inversion the tonic triad is anchored in. Set 2 (third lowest)
/// puts the key-center on top of the tonic triad and is the default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AnchorChoice {
    tonic_inversion: InversionLabel,
}

impl AnchorChoice {
    pub fn new(tonic_inversion: InversionLabel) -> Self {
        AnchorChoice { tonic_inversion }
    }

    pub fn from_set_number(n: u8) -> Result<Self, InvalidInversion> {
        InversionLabel::from_number(n).map(AnchorChoice::new)
    }

    pub fn tonic_inversion(self) -> InversionLabel {
        self.tonic_inversion
    }

    pub fn set_number(self) -> u8 {
        self.tonic_inversion.number()
    }
}

impl Default for AnchorChoice {
    fn default() -> Self {
        AnchorChoice::new(InversionLabel::Third)
    }
}

/// First-note labels as they appear in the inversion-set tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FirstNote {
    Tonic,
    Minor3rd,
    Major3rd,
    Dominant,
    Flat5th,
}

impl FirstNote {
    /// Label for the given lowest member in a chord of the given quality.
    pub fn of(label: InversionLabel, quality: ChordQuality) -> Self {
        match label {
            InversionLabel::Root => FirstNote::Tonic,
            InversionLabel::Third => match quality {
                ChordQuality::Major => FirstNote::Major3rd,
                ChordQuality::Minor | ChordQuality::Diminished => FirstNote::Minor3rd,
            },
            InversionLabel::Fifth => match quality {
                ChordQuality::Diminished => FirstNote::Flat5th,
                _ => FirstNote::Dominant,
            },
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            FirstNote::Tonic => "Tonic",
            FirstNote::Minor3rd => "Minor 3rd",
            FirstNote::Major3rd => "Major 3rd",
            FirstNote::Dominant => "Dominant",
            FirstNote::Flat5th => "The flat 5th",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "Tonic" => Some(FirstNote::Tonic),
            "Minor 3rd" => Some(FirstNote::Minor3rd),
            "Major 3rd" => Some(FirstNote::Major3rd),
            "Dominant" => Some(FirstNote::Dominant),
            "The flat 5th" => Some(FirstNote::Flat5th),
            _ => None,
        }
    }

    /// The chord member this label stands for.
    pub fn inversion_label(self) -> InversionLabel {
        match self {
            FirstNote::Tonic => InversionLabel::Root,
            FirstNote::Minor3rd | FirstNote::Major3rd => InversionLabel::Third,
            FirstNote::Dominant | FirstNote::Flat5th => InversionLabel::Fifth,
        }
    }
}

impl fmt::Display for FirstNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One voiced degree of a [`VoicingTable`].
#[derive(Debug, Clone, PartialEq)]
pub struct VoicingRow {
    pub degree: u8,
    pub triad: DiatonicTriad,
    pub placement: TriadPlacement,
    pub label: InversionLabel,
    pub distance: f64,
}

impl VoicingRow {
    pub fn first_note(&self) -> FirstNote {
        FirstNote::of(self.label, self.triad.quality())
    }
}

/// All seven diatonic triads of a scale voiced at minimal distance from the
/// tonic anchor, with the cumulative distance of the six non-tonic rows.
#[derive(Debug, Clone, PartialEq)]
pub struct VoicingTable {
    pub scale: Scale,
    pub choice: AnchorChoice,
    pub anchor: TriadPlacement,
    pub rows: Vec<VoicingRow>,
    pub cumulative: f64,
}

impl VoicingTable {
    pub fn row(&self, degree: u8) -> Result<&VoicingRow, InvalidDegree> {
        if !(1..=7).contains(&degree) {
            return Err(InvalidDegree(degree));
        }
        Ok(&self.rows[(degree - 1) as usize])
    }
}

/// How successive chords of a progression are anchored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProgressionMode {
    /// Every chord keeps the voicing-table placement for its degree, so a
    /// recurring chord is always voiced identically.
    Anchor,
    /// Each chord is placed nearest to the previous chord's placement.
    Chain,
}

/// A diatonic chord progression to voice: key, degree sequence, and mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProgressionSpec {
    pub tonic: PitchClass,
    pub kind: ScaleKind,
    pub degrees: Vec<u8>,
    pub mode: ProgressionMode,
}

fn rotations(triad: &DiatonicTriad) -> [(InversionLabel, [PitchClass; 3]); 3] {
    let [root, third, fifth] = triad.pitch_classes();
    [
        (InversionLabel::Root, [root, third, fifth]),
        (InversionLabel::Third, [third, fifth, root]),
        (InversionLabel::Fifth, [fifth, root, third]),
    ]
}

/// Stacks three pitch classes upward from the first, lowest note in 0..=11.
fn stack(ordered: [PitchClass; 3]) -> [i32; 3] {
    let x = ordered[0].value() as i32;
    let y = x + ordered[0].interval_to(ordered[1]) as i32;
    let z = y + ordered[1].interval_to(ordered[2]) as i32;
    [x, y, z]
}

/// Every close-position placement of `triad` with all notes inside
/// `[window_low, window_high]`, ascending coordinate order. Each octave
/// shift contributes at most the three stackings of the triad.
pub fn enumerate_placements(
    triad: &DiatonicTriad,
    window_low: NoteIndex,
    window_high: NoteIndex,
) -> Result<Vec<TriadPlacement>, OptimizerError> {
    let (lo, hi) = (window_low.0, window_high.0);
    let mut out = Vec::new();
    for (_, ordered) in rotations(triad) {
        let [bx, by, bz] = stack(ordered);
        // Smallest octave shift with bx + 12k >= lo.
        let mut k = (lo - bx + 11).div_euclid(12);
        while bz + 12 * k <= hi {
            let placement = TriadPlacement::new(bx + 12 * k, by + 12 * k, bz + 12 * k)
                .expect("stacked placement is ascending with distinct pitch classes");
            out.push(placement);
            k += 1;
        }
    }
    if out.is_empty() {
        return Err(OptimizerError::EmptyWindow { low: lo, high: hi });
    }
    out.sort_by_key(|p| p.coords());
    Ok(out)
}

/// The tonic-triad placement with the chosen chord member lowest, registered
/// so the lowest note lies in 0..=11.
pub fn tonic_anchor(scale: &Scale, choice: AnchorChoice) -> TriadPlacement {
    let tonic_triad = scale.triad(1).expect("degree 1 is valid");
    let ordered = rotations(&tonic_triad)
        .into_iter()
        .find(|(label, _)| *label == choice.tonic_inversion())
        .map(|(_, ordered)| ordered)
        .expect("all three inversions are produced");
    let [x, y, z] = stack(ordered);
    TriadPlacement::new(x, y, z).expect("stacked placement is valid")
}

/// Which chord member is the lowest note of `placement`.
pub fn inversion_of(placement: TriadPlacement, triad: &DiatonicTriad) -> InversionLabel {
    let lowest = placement.x().pitch_class();
    if lowest == triad.root() {
        InversionLabel::Root
    } else if lowest == triad.third() {
        InversionLabel::Third
    } else {
        debug_assert_eq!(lowest, triad.fifth());
        InversionLabel::Fifth
    }
}

/// The placement of `triad` closest to `anchor`, searched over the window
/// `[anchor.x - 12, anchor.z + 12]`. Any placement outside that window is
/// dominated by one of its octave shifts inside it. Ties (equal squared
/// distance) resolve to the lower top note, then the lexicographically
/// smaller triple.
pub fn nearest_placement(
    anchor: TriadPlacement,
    triad: &DiatonicTriad,
) -> (TriadPlacement, InversionLabel, f64) {
    let low = NoteIndex(anchor.x().0 - 12);
    let high = NoteIndex(anchor.z().0 + 12);
    let candidates =
        enumerate_placements(triad, low, high).expect("window spans more than two octaves");
    let best = candidates
        .into_iter()
        .min_by_key(|p| {
            let [x, y, z] = p.coords();
            (squared_distance(anchor, *p), z, x, y)
        })
        .expect("candidate list is non-empty");
    (best, inversion_of(best, triad), distance(anchor, best))
}

/// Voices all seven diatonic triads of `scale` at minimal distance from the
/// tonic anchor. The tonic row is the anchor itself at distance zero;
/// `cumulative` sums the six other distances.
pub fn voicing_table(scale: &Scale, choice: AnchorChoice) -> VoicingTable {
    let anchor = tonic_anchor(scale, choice);
    let mut rows = Vec::with_capacity(7);
    let mut cumulative = 0.0;
    for triad in scale.triads() {
        let (placement, label, dist) = if triad.degree() == 1 {
            (anchor, choice.tonic_inversion(), 0.0)
        } else {
            nearest_placement(anchor, &triad)
        };
        cumulative += dist;
        rows.push(VoicingRow {
            degree: triad.degree(),
            triad,
            placement,
            label,
            distance: dist,
        });
    }
    VoicingTable {
        scale: *scale,
        choice,
        anchor,
        rows,
        cumulative,
    }
}

/// First-note labels of the chosen inversion set, one per degree. The rows
/// are key-independent, so any tonic stands in for all twelve.
pub fn inversion_set(kind: ScaleKind, choice: AnchorChoice) -> [FirstNote; 7] {
    let scale = Scale::new(PitchClass::from_semitones(0), kind);
    let table = voicing_table(&scale, choice);
    std::array::from_fn(|i| table.rows[i].first_note())
}

/// Voices a chord progression. Anchor mode reuses each degree's
/// voicing-table placement; chain mode starts there and then follows the
/// previous chord.
pub fn voice_progression(
    spec: &ProgressionSpec,
    choice: AnchorChoice,
) -> Result<Vec<TriadPlacement>, OptimizerError> {
    let (&first, rest) = spec
        .degrees
        .split_first()
        .ok_or(OptimizerError::EmptyProgression)?;
    let scale = Scale::new(spec.tonic, spec.kind);
    let table = voicing_table(&scale, choice);
    let mut out = Vec::with_capacity(spec.degrees.len());
    out.push(table.row(first)?.placement);
    for &degree in rest {
        match spec.mode {
            ProgressionMode::Anchor => out.push(table.row(degree)?.placement),
            ProgressionMode::Chain => {
                let triad = scale.triad(degree)?;
                let previous = *out.last().expect("progression is non-empty");
                let (placement, _, _) = nearest_placement(previous, &triad);
                out.push(placement);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(name: &str) -> PitchClass {
        PitchClass::parse(name).unwrap()
    }

    fn placement(x: i32, y: i32, z: i32) -> TriadPlacement {
        TriadPlacement::new(x, y, z).unwrap()
    }

    fn c_major() -> Scale {
        Scale::new(pc("C"), ScaleKind::Major)
    }

    fn a_minor() -> Scale {
        Scale::new(pc("A"), ScaleKind::NaturalMinor)
    }

    fn set(n: u8) -> AnchorChoice {
        AnchorChoice::from_set_number(n).unwrap()
    }

    #[test]
    fn enumerate_d_minor_over_two_octaves() {
        let triad = c_major().triad(2).unwrap();
        let got = enumerate_placements(&triad, NoteIndex(0), NoteIndex(23)).unwrap();
        for expected in [(2, 5, 9), (5, 9, 14), (9, 14, 17)] {
            assert!(got.contains(&placement(expected.0, expected.1, expected.2)));
        }
        assert_eq!(got.len(), 4); // plus the octave shift (14, 17, 21)
        assert!(got.contains(&placement(14, 17, 21)));
    }

    #[test]
    fn enumerate_c_major_over_two_octaves() {
        let triad = c_major().triad(1).unwrap();
        let got = enumerate_placements(&triad, NoteIndex(0), NoteIndex(23)).unwrap();
        for expected in [(0, 4, 7), (4, 7, 12), (7, 12, 16)] {
            assert!(got.contains(&placement(expected.0, expected.1, expected.2)));
        }
    }

    #[test]
    fn single_octave_admits_only_root_position() {
        let triad = c_major().triad(1).unwrap();
        let got = enumerate_placements(&triad, NoteIndex(0), NoteIndex(11)).unwrap();
        assert_eq!(got, vec![placement(0, 4, 7)]);
    }

    #[test]
    fn three_stackings_per_octave() {
        for degree in 1..=7 {
            let triad = c_major().triad(degree).unwrap();
            let got = enumerate_placements(&triad, NoteIndex(0), NoteIndex(22)).unwrap();
            let base_octave = got.iter().filter(|p| p.x().0 < 12).count();
            assert_eq!(base_octave, 3, "degree {degree}");
            for p in got {
                assert!(p.is_close_position());
            }
        }
    }

    #[test]
    fn too_narrow_window_is_an_error() {
        let triad = c_major().triad(1).unwrap();
        let err = enumerate_placements(&triad, NoteIndex(0), NoteIndex(5)).unwrap_err();
        assert_eq!(err, OptimizerError::EmptyWindow { low: 0, high: 5 });
    }

    #[test]
    fn tonic_anchor_positions() {
        assert_eq!(tonic_anchor(&c_major(), set(2)), placement(4, 7, 12));
        assert_eq!(tonic_anchor(&c_major(), set(1)), placement(0, 4, 7));
        assert_eq!(tonic_anchor(&c_major(), set(3)), placement(7, 12, 16));
        // The A-minor anchor normalizes an octave below the published
        // (12, 16, 21); distances are translation-invariant.
        assert_eq!(tonic_anchor(&a_minor(), set(2)), placement(0, 4, 9));
        assert_eq!(
            tonic_anchor(&a_minor(), set(2)).translate(12),
            placement(12, 16, 21)
        );
        assert_eq!(tonic_anchor(&a_minor(), set(1)), placement(9, 12, 16));
    }

    #[test]
    fn nearest_placement_matches_published_rows() {
        let anchor = placement(4, 7, 12);

        let d_minor = c_major().triad(2).unwrap();
        assert_eq!(
            nearest_placement(anchor, &d_minor),
            (placement(5, 9, 14), InversionLabel::Third, 3.0)
        );

        let e_minor = c_major().triad(3).unwrap();
        assert_eq!(
            nearest_placement(anchor, &e_minor),
            (placement(4, 7, 11), InversionLabel::Root, 1.0)
        );

        let c_triad = c_major().triad(1).unwrap();
        assert_eq!(
            nearest_placement(anchor, &c_triad),
            (placement(4, 7, 12), InversionLabel::Third, 0.0)
        );

        // Anchors need not be register-normalized.
        let g_major = a_minor().triad(7).unwrap();
        assert_eq!(
            nearest_placement(placement(12, 16, 21), &g_major),
            (placement(11, 14, 19), InversionLabel::Third, 3.0)
        );
    }

    #[test]
    fn c_major_set_2_table() {
        let table = voicing_table(&c_major(), set(2));
        assert_eq!(table.anchor, placement(4, 7, 12));
        assert_eq!(table.rows[0].placement, table.anchor);
        assert_eq!(table.rows[0].distance, 0.0);

        let expected = [
            ((5, 9, 14), 3.0),
            ((4, 7, 11), 1.0),
            ((5, 9, 12), 5.0_f64.sqrt()),
            ((2, 7, 11), 5.0_f64.sqrt()),
            ((4, 9, 12), 2.0),
            ((2, 5, 11), 3.0),
        ];
        for (row, ((x, y, z), dist)) in table.rows[1..].iter().zip(expected) {
            assert_eq!(row.placement, placement(x, y, z));
            assert!((row.distance - dist).abs() < 1e-12);
        }
        assert!((table.cumulative - crate::cumulative_constant()).abs() < 1e-9);
    }

    #[test]
    fn a_minor_set_2_table_matches_published_rows_up_an_octave() {
        let table = voicing_table(&a_minor(), set(2));
        assert_eq!(table.anchor.translate(12), placement(12, 16, 21));
        let published = [
            (14, 17, 23),
            (12, 16, 19),
            (14, 17, 21),
            (11, 16, 19),
            (12, 17, 21),
            (11, 14, 19),
        ];
        for (row, (x, y, z)) in table.rows[1..].iter().zip(published) {
            assert_eq!(row.placement.translate(12), placement(x, y, z));
        }
        let distances: Vec<f64> = table.rows[1..].iter().map(|r| r.distance).collect();
        let expected = [3.0, 2.0, 5.0_f64.sqrt(), 5.0_f64.sqrt(), 1.0, 3.0];
        for (got, want) in distances.iter().zip(expected) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn cumulative_is_constant_across_anchor_choices_and_keys() {
        for kind in [ScaleKind::Major, ScaleKind::NaturalMinor] {
            for tonic in 0..12 {
                for n in 1..=3 {
                    let scale = Scale::new(PitchClass::from_semitones(tonic), kind);
                    let table = voicing_table(&scale, set(n));
                    assert!(
                        (table.cumulative - crate::cumulative_constant()).abs() < 1e-9,
                        "tonic {tonic} {kind:?} set {n}: {}",
                        table.cumulative
                    );
                }
            }
        }
    }

    #[test]
    fn inversion_sets_match_published_columns() {
        use FirstNote::{Dominant, Flat5th, Major3rd, Minor3rd, Tonic};

        assert_eq!(
            inversion_set(ScaleKind::Major, set(2)),
            [Major3rd, Minor3rd, Tonic, Tonic, Dominant, Dominant, Minor3rd]
        );
        assert_eq!(
            inversion_set(ScaleKind::Major, set(1)),
            [Tonic, Tonic, Dominant, Dominant, Major3rd, Minor3rd, Tonic]
        );
        assert_eq!(
            inversion_set(ScaleKind::Major, set(3)),
            [Dominant, Dominant, Minor3rd, Major3rd, Tonic, Tonic, Flat5th]
        );
        assert_eq!(
            inversion_set(ScaleKind::NaturalMinor, set(2)),
            [Minor3rd, Minor3rd, Tonic, Tonic, Dominant, Dominant, Major3rd]
        );
    }

    #[test]
    fn anchor_mode_progression_reuses_table_placements() {
        let spec = ProgressionSpec {
            tonic: pc("C"),
            kind: ScaleKind::Major,
            degrees: vec![1, 4, 5, 1],
            mode: ProgressionMode::Anchor,
        };
        let voiced = voice_progression(&spec, set(2)).unwrap();
        assert_eq!(
            voiced,
            vec![
                placement(4, 7, 12),
                placement(5, 9, 12),
                placement(2, 7, 11),
                placement(4, 7, 12),
            ]
        );
    }

    #[test]
    fn chain_mode_progression_follows_previous_chord() {
        let spec = ProgressionSpec {
            tonic: pc("C"),
            kind: ScaleKind::Major,
            degrees: vec![1, 2, 5],
            mode: ProgressionMode::Chain,
        };
        let voiced = voice_progression(&spec, set(2)).unwrap();
        // Third chord sits nearest to (5, 9, 14), not to the anchor.
        assert_eq!(
            voiced,
            vec![
                placement(4, 7, 12),
                placement(5, 9, 14),
                placement(7, 11, 14),
            ]
        );
    }

    #[test]
    fn single_chord_chain_is_the_table_placement() {
        let spec = ProgressionSpec {
            tonic: pc("C"),
            kind: ScaleKind::Major,
            degrees: vec![1],
            mode: ProgressionMode::Chain,
        };
        assert_eq!(
            voice_progression(&spec, set(2)).unwrap(),
            vec![placement(4, 7, 12)]
        );
    }

    #[test]
    fn empty_progression_is_rejected() {
        let spec = ProgressionSpec {
            tonic: pc("C"),
            kind: ScaleKind::Major,
            degrees: vec![],
            mode: ProgressionMode::Anchor,
        };
        assert_eq!(
            voice_progression(&spec, set(2)).unwrap_err(),
            OptimizerError::EmptyProgression
        );
    }

    #[test]
    fn invalid_degree_in_progression_is_rejected() {
        let spec = ProgressionSpec {
            tonic: pc("C"),
            kind: ScaleKind::Major,
            degrees: vec![1, 8],
            mode: ProgressionMode::Anchor,
        };
        assert_eq!(
            voice_progression(&spec, set(2)).unwrap_err(),
            OptimizerError::Degree(InvalidDegree(8))
        );
    }
}
