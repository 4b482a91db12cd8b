//! Table rendering and parsing: text, CSV, and JSON.
//!
//! CSV and JSON round-trip: a table parsed back from either format equals
//! the original exactly. Distances are printed to five decimal places but
//! re-derived from the integer placements on parse, with the printed value
//! checked against the derived one.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diatonic::{ChordQuality, Scale, ScaleKind};
use crate::optimizer::{
    inversion_of, inversion_set, AnchorChoice, FirstNote, ProgressionSpec, VoicingRow,
    VoicingTable,
};
use crate::oracle::VerifySummary;
use crate::pitch_space::{distance, PitchClass, TriadPlacement};

pub const TABLE_CSV_HEADER: [&str; 8] = [
    "degree",
    "chord",
    "quality",
    "first_note",
    "x",
    "y",
    "z",
    "distance",
];

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad header: expected {expected:?}")]
    Header { expected: Vec<String> },
    #[error("expected 7 rows, found {0}")]
    RowCount(usize),
    #[error("row {row}: {detail}")]
    Row { row: usize, detail: String },
    #[error("{0}")]
    Invalid(String),
}

/// The paper-style degree-row labels of the two scale kinds.
pub fn degree_label(kind: ScaleKind, degree: u8) -> &'static str {
    const MAJOR: [&str; 7] = [
        "Tonic",
        "Supertonic",
        "Major 3rd",
        "Subdominant",
        "Dominant",
        "Major 6th",
        "Leading Tone",
    ];
    const MINOR: [&str; 7] = [
        "Tonic",
        "Major 2nd",
        "Minor 3rd",
        "Subdominant",
        "Dominant",
        "Minor 6th",
        "The seventh",
    ];
    let i = (degree - 1) as usize;
    match kind {
        ScaleKind::Major => MAJOR[i],
        ScaleKind::NaturalMinor => MINOR[i],
    }
}

pub fn roman_numeral(degree: u8) -> &'static str {
    ["I", "II", "III", "IV", "V", "VI", "VII"][(degree - 1) as usize]
}

fn fmt_distance(d: f64) -> String {
    format!("{d:.5}")
}

// ---------------------------------------------------------------------------
// Voicing tables
// ---------------------------------------------------------------------------

pub fn table_text(table: &VoicingTable) -> String {
    let kind = table.scale.kind();
    let mut out = format!(
        "Key: {} {} | Anchor set {} | Anchor: {}\n\n",
        table.scale.tonic(),
        kind,
        table.choice.set_number(),
        table.anchor,
    );
    let _ = writeln!(
        out,
        "{:<14} {:<16} {:<14} {:<14} {:>9}",
        "Degree", "Chord", "First note", "Placement", "Distance"
    );
    for row in &table.rows {
        let _ = writeln!(
            out,
            "{:<14} {:<16} {:<14} {:<14} {:>9}",
            degree_label(kind, row.degree),
            row.triad.name(),
            row.first_note().label(),
            row.placement.to_string(),
            fmt_distance(row.distance),
        );
    }
    let _ = writeln!(out, "\nCumulative distance: {}", fmt_distance(table.cumulative));
    out
}

pub fn table_csv(table: &VoicingTable) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(TABLE_CSV_HEADER)
        .expect("write to memory");
    for row in &table.rows {
        let [x, y, z] = row.placement.coords();
        writer
            .write_record([
                row.degree.to_string(),
                row.triad.name(),
                row.triad.quality().label().to_string(),
                row.first_note().label().to_string(),
                x.to_string(),
                y.to_string(),
                z.to_string(),
                fmt_distance(row.distance),
            ])
            .expect("write to memory");
    }
    let bytes = writer.into_inner().expect("flush to memory");
    String::from_utf8(bytes).expect("csv output is utf-8")
}

struct RawRow {
    degree: u8,
    chord: String,
    quality: String,
    first_note: String,
    placement: [i32; 3],
    distance: f64,
}

pub fn parse_table_csv(input: &str) -> Result<VoicingTable, ParseError> {
    let mut reader = csv::Reader::from_reader(input.as_bytes());
    let headers = reader.headers()?.clone();
    if headers.iter().ne(TABLE_CSV_HEADER) {
        return Err(ParseError::Header {
            expected: TABLE_CSV_HEADER.iter().map(|s| s.to_string()).collect(),
        });
    }
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let row_err = |detail: String| ParseError::Row { row: i + 1, detail };
        let field = |idx: usize| -> Result<&str, ParseError> {
            record
                .get(idx)
                .ok_or_else(|| row_err(format!("missing field {idx}")))
        };
        let degree: u8 = field(0)?
            .parse()
            .map_err(|e| row_err(format!("degree: {e}")))?;
        let coord = |idx: usize| -> Result<i32, ParseError> {
            field(idx)?
                .parse()
                .map_err(|e| row_err(format!("coordinate: {e}")))
        };
        rows.push(RawRow {
            degree,
            chord: field(1)?.to_string(),
            quality: field(2)?.to_string(),
            first_note: field(3)?.to_string(),
            placement: [coord(4)?, coord(5)?, coord(6)?],
            distance: field(7)?
                .parse()
                .map_err(|e| row_err(format!("distance: {e}")))?,
        });
    }
    // Key, kind, and anchor set are all recoverable from the tonic row.
    let tonic_row = rows.first().ok_or(ParseError::RowCount(0))?;
    let (root, _) = chord_name_parts(&tonic_row.chord, 1)?;
    let kind = match quality_from_label(&tonic_row.quality, 1)? {
        ChordQuality::Major => ScaleKind::Major,
        ChordQuality::Minor => ScaleKind::NaturalMinor,
        ChordQuality::Diminished => {
            return Err(ParseError::Invalid(
                "tonic row cannot be a diminished chord".into(),
            ))
        }
    };
    let first = FirstNote::parse(&tonic_row.first_note).ok_or_else(|| ParseError::Row {
        row: 1,
        detail: format!("unknown first-note label '{}'", tonic_row.first_note),
    })?;
    let choice = AnchorChoice::new(first.inversion_label());
    assemble_table(root, kind, choice, rows, 1e-5)
}

/// JSON document for a voicing table. The schema is fixed:
/// `{"key","kind","set","anchor":[x,y,z],"rows":[...],"cumulative"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableDoc {
    pub key: String,
    pub kind: String,
    pub set: u8,
    pub anchor: [i32; 3],
    pub rows: Vec<RowDoc>,
    pub cumulative: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RowDoc {
    pub degree: u8,
    pub chord: String,
    pub quality: String,
    pub first_note: String,
    pub placement: [i32; 3],
    pub distance: f64,
}

impl TableDoc {
    pub fn from_table(table: &VoicingTable) -> Self {
        TableDoc {
            key: table.scale.tonic().name().to_string(),
            kind: table.scale.kind().to_string(),
            set: table.choice.set_number(),
            anchor: table.anchor.coords(),
            rows: table
                .rows
                .iter()
                .map(|row| RowDoc {
                    degree: row.degree,
                    chord: row.triad.name(),
                    quality: row.triad.quality().label().to_string(),
                    first_note: row.first_note().label().to_string(),
                    placement: row.placement.coords(),
                    distance: row.distance,
                })
                .collect(),
            cumulative: table.cumulative,
        }
    }

    pub fn into_table(self) -> Result<VoicingTable, ParseError> {
        let tonic = PitchClass::parse(&self.key)
            .map_err(|e| ParseError::Invalid(e.to_string()))?;
        let kind = kind_from_str(&self.kind)?;
        let choice = AnchorChoice::from_set_number(self.set)
            .map_err(|e| ParseError::Invalid(e.to_string()))?;
        let anchor = self.anchor;
        let declared_cumulative = self.cumulative;
        let rows: Vec<RawRow> = self
            .rows
            .into_iter()
            .map(|r| RawRow {
                degree: r.degree,
                chord: r.chord,
                quality: r.quality,
                first_note: r.first_note,
                placement: r.placement,
                distance: r.distance,
            })
            .collect();
        if rows.first().map(|r| r.placement) != Some(anchor) {
            return Err(ParseError::Invalid(
                "anchor does not match the tonic row placement".into(),
            ));
        }
        let table = assemble_table(tonic, kind, choice, rows, 1e-9)?;
        if (table.cumulative - declared_cumulative).abs() > 1e-9 {
            return Err(ParseError::Invalid(format!(
                "cumulative {} disagrees with rows (derived {})",
                declared_cumulative, table.cumulative
            )));
        }
        Ok(table)
    }
}

pub fn table_json(table: &VoicingTable) -> String {
    serde_json::to_string_pretty(&TableDoc::from_table(table)).expect("serializable")
}

pub fn parse_table_json(input: &str) -> Result<VoicingTable, ParseError> {
    serde_json::from_str::<TableDoc>(input)?.into_table()
}

fn kind_from_str(s: &str) -> Result<ScaleKind, ParseError> {
    match s {
        "major" => Ok(ScaleKind::Major),
        "minor" => Ok(ScaleKind::NaturalMinor),
        other => Err(ParseError::Invalid(format!("unknown scale kind '{other}'"))),
    }
}

fn quality_from_label(s: &str, row: usize) -> Result<ChordQuality, ParseError> {
    match s {
        "Major" => Ok(ChordQuality::Major),
        "Minor" => Ok(ChordQuality::Minor),
        "Diminished" => Ok(ChordQuality::Diminished),
        other => Err(ParseError::Row {
            row,
            detail: format!("unknown quality '{other}'"),
        }),
    }
}

fn chord_name_parts(chord: &str, row: usize) -> Result<(PitchClass, ChordQuality), ParseError> {
    let err = |detail: String| ParseError::Row { row, detail };
    let (root, quality) = chord
        .split_once(' ')
        .ok_or_else(|| err(format!("malformed chord name '{chord}'")))?;
    let root = PitchClass::parse(root).map_err(|e| err(e.to_string()))?;
    let quality = match quality {
        "major" => ChordQuality::Major,
        "minor" => ChordQuality::Minor,
        "diminished" => ChordQuality::Diminished,
        other => return Err(err(format!("unknown chord quality '{other}'"))),
    };
    Ok((root, quality))
}

/// Validates raw rows against the scale they claim to voice and rebuilds
/// the table. Distances are re-derived from the placements; the printed
/// ones must agree within `distance_tol`.
fn assemble_table(
    tonic: PitchClass,
    kind: ScaleKind,
    choice: AnchorChoice,
    raw: Vec<RawRow>,
    distance_tol: f64,
) -> Result<VoicingTable, ParseError> {
    if raw.len() != 7 {
        return Err(ParseError::RowCount(raw.len()));
    }
    let scale = Scale::new(tonic, kind);
    let anchor_coords = raw[0].placement;
    let anchor = TriadPlacement::new(anchor_coords[0], anchor_coords[1], anchor_coords[2])
        .map_err(|e| ParseError::Row {
            row: 1,
            detail: e.to_string(),
        })?;

    let mut rows = Vec::with_capacity(7);
    let mut cumulative = 0.0;
    for (i, row) in raw.into_iter().enumerate() {
        let row_no = i + 1;
        let err = |detail: String| ParseError::Row {
            row: row_no,
            detail,
        };
        if row.degree as usize != row_no {
            return Err(err(format!("expected degree {row_no}, found {}", row.degree)));
        }
        let triad = scale.triad(row.degree).map_err(|e| err(e.to_string()))?;
        let (root, chord_quality) = chord_name_parts(&row.chord, row_no)?;
        if root != triad.root() || chord_quality != triad.quality() {
            return Err(err(format!(
                "chord '{}' is not the degree-{} triad of {} {} ({})",
                row.chord,
                row.degree,
                tonic,
                kind,
                triad.name()
            )));
        }
        if quality_from_label(&row.quality, row_no)? != triad.quality() {
            return Err(err(format!("quality '{}' does not match chord", row.quality)));
        }
        let [x, y, z] = row.placement;
        let placement = TriadPlacement::new(x, y, z).map_err(|e| err(e.to_string()))?;
        let mut placement_pcs = placement.pitch_classes();
        let mut triad_pcs = triad.pitch_classes();
        placement_pcs.sort();
        triad_pcs.sort();
        if placement_pcs != triad_pcs {
            return Err(err(format!("placement {placement} is not a voicing of {}", triad.name())));
        }
        let label = inversion_of(placement, &triad);
        let declared_first = FirstNote::parse(&row.first_note)
            .ok_or_else(|| err(format!("unknown first-note label '{}'", row.first_note)))?;
        if declared_first != FirstNote::of(label, triad.quality()) {
            return Err(err(format!(
                "first note '{}' does not match placement {placement}",
                row.first_note
            )));
        }
        let derived = distance(anchor, placement);
        if (row.distance - derived).abs() > distance_tol {
            return Err(err(format!(
                "distance {} disagrees with placement (derived {derived})",
                row.distance
            )));
        }
        cumulative += derived;
        rows.push(VoicingRow {
            degree: row.degree,
            triad,
            placement,
            label,
            distance: derived,
        });
    }
    if rows[0].label != choice.tonic_inversion() {
        return Err(ParseError::Invalid(
            "tonic row inversion does not match the anchor set".into(),
        ));
    }
    Ok(VoicingTable {
        scale,
        choice,
        anchor,
        rows,
        cumulative,
    })
}

// ---------------------------------------------------------------------------
// Inversion-set tables
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct InversionsDoc {
    pub kind: String,
    pub rows: Vec<InversionRowDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InversionRowDoc {
    pub degree: u8,
    pub degree_label: String,
    pub chord_type: String,
    pub set_1: String,
    pub set_2: String,
    pub set_3: String,
}

fn inversion_rows(kind: ScaleKind) -> Vec<InversionRowDoc> {
    let columns: Vec<[FirstNote; 7]> = (1..=3)
        .map(|n| inversion_set(kind, AnchorChoice::from_set_number(n).expect("set in range")))
        .collect();
    let qualities = kind.quality_row();
    (0..7)
        .map(|i| InversionRowDoc {
            degree: i as u8 + 1,
            degree_label: degree_label(kind, i as u8 + 1).to_string(),
            chord_type: qualities[i].label().to_string(),
            set_1: columns[0][i].label().to_string(),
            set_2: columns[1][i].label().to_string(),
            set_3: columns[2][i].label().to_string(),
        })
        .collect()
}

pub fn inversions_text(kind: ScaleKind) -> String {
    let mut out = format!("Voicing sets with the least tonal movement ({kind} scale)\n\n");
    let _ = writeln!(
        out,
        "{:<21} {:<12} {:<28} {:<28} {:<28}",
        "Tonic of the chord",
        "Chord Type",
        "First note of inversion - 1",
        "First note of inversion - 2",
        "First note of inversion - 3"
    );
    for row in inversion_rows(kind) {
        let _ = writeln!(
            out,
            "{:<21} {:<12} {:<28} {:<28} {:<28}",
            row.degree_label, row.chord_type, row.set_1, row.set_2, row.set_3
        );
    }
    out
}

pub fn inversions_csv(kind: ScaleKind) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["degree", "degree_label", "chord_type", "set_1", "set_2", "set_3"])
        .expect("write to memory");
    for row in inversion_rows(kind) {
        writer
            .write_record([
                row.degree.to_string(),
                row.degree_label,
                row.chord_type,
                row.set_1,
                row.set_2,
                row.set_3,
            ])
            .expect("write to memory");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("utf-8")
}

pub fn inversions_json(kind: ScaleKind) -> String {
    let doc = InversionsDoc {
        kind: kind.to_string(),
        rows: inversion_rows(kind),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

// ---------------------------------------------------------------------------
// Progressions
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct ProgressionDoc {
    pub key: String,
    pub kind: String,
    pub set: u8,
    pub mode: String,
    pub chords: Vec<ProgressionChordDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProgressionChordDoc {
    pub position: usize,
    pub degree: u8,
    pub numeral: String,
    pub chord: String,
    pub placement: [i32; 3],
    pub notes: Vec<String>,
}

fn mode_name(spec: &ProgressionSpec) -> &'static str {
    match spec.mode {
        crate::optimizer::ProgressionMode::Anchor => "anchor",
        crate::optimizer::ProgressionMode::Chain => "chain",
    }
}

fn progression_chords(
    spec: &ProgressionSpec,
    placements: &[TriadPlacement],
) -> Vec<ProgressionChordDoc> {
    let scale = Scale::new(spec.tonic, spec.kind);
    spec.degrees
        .iter()
        .zip(placements)
        .enumerate()
        .map(|(i, (&degree, placement))| {
            let triad = scale.triad(degree).expect("voiced degrees are valid");
            ProgressionChordDoc {
                position: i + 1,
                degree,
                numeral: roman_numeral(degree).to_string(),
                chord: triad.name(),
                placement: placement.coords(),
                notes: placement.notes().iter().map(|n| n.to_string()).collect(),
            }
        })
        .collect()
}

pub fn progression_text(
    spec: &ProgressionSpec,
    choice: AnchorChoice,
    placements: &[TriadPlacement],
) -> String {
    let mut out = format!(
        "Key: {} {} | Mode: {} | Set {}\n\n",
        spec.tonic,
        spec.kind,
        mode_name(spec),
        choice.set_number(),
    );
    for chord in progression_chords(spec, placements) {
        let _ = writeln!(
            out,
            "{:>3}  {:<4} {:<16} {:<14} {}",
            chord.position,
            chord.numeral,
            chord.chord,
            format!("({}, {}, {})", chord.placement[0], chord.placement[1], chord.placement[2]),
            chord.notes.join(" "),
        );
    }
    out
}

pub fn progression_csv(spec: &ProgressionSpec, placements: &[TriadPlacement]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["position", "degree", "numeral", "chord", "x", "y", "z", "notes"])
        .expect("write to memory");
    for chord in progression_chords(spec, placements) {
        writer
            .write_record([
                chord.position.to_string(),
                chord.degree.to_string(),
                chord.numeral,
                chord.chord,
                chord.placement[0].to_string(),
                chord.placement[1].to_string(),
                chord.placement[2].to_string(),
                chord.notes.join(" "),
            ])
            .expect("write to memory");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("utf-8")
}

pub fn progression_json(
    spec: &ProgressionSpec,
    choice: AnchorChoice,
    placements: &[TriadPlacement],
) -> String {
    let doc = ProgressionDoc {
        key: spec.tonic.name().to_string(),
        kind: spec.kind.to_string(),
        set: choice.set_number(),
        mode: mode_name(spec).to_string(),
        chords: progression_chords(spec, placements),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

// ---------------------------------------------------------------------------
// Verification summaries
// ---------------------------------------------------------------------------

pub fn verify_text(summary: &VerifySummary) -> String {
    let failures = summary.mismatches.len() + summary.cumulative_failures.len();
    let mut out = format!(
        "{} cases, {} mismatches, cumulative = {:.5}\n",
        summary.cases_checked, failures, summary.cumulative_major,
    );
    let _ = writeln!(
        out,
        "tables: {} (12 keys x 2 kinds x 3 anchor sets), window half-width {}",
        summary.tables_checked, summary.window_half_width,
    );
    let _ = writeln!(
        out,
        "cumulative major = {:.5}, minor = {:.5}, expected = {:.5} (9 + 2*sqrt(5))",
        summary.cumulative_major, summary.cumulative_minor, summary.expected_cumulative,
    );
    let _ = writeln!(
        out,
        "max |cumulative - expected| = {:.3e}",
        summary.max_cumulative_error
    );
    let _ = writeln!(out, "ties: {}", summary.ties.len());
    for tie in &summary.ties {
        let _ = writeln!(
            out,
            "TIE  {}: {} optima at distance {:.5}",
            tie.case.describe(),
            tie.optima.len(),
            tie.distance
        );
    }
    for failure in &summary.mismatches {
        let _ = writeln!(out, "FAIL {}: {}", failure.case.describe(), failure.detail);
    }
    for failure in &summary.cumulative_failures {
        let _ = writeln!(
            out,
            "FAIL {} {} set {}: cumulative {:.9} != {:.9}",
            failure.key, failure.kind, failure.set, failure.cumulative, summary.expected_cumulative
        );
    }
    out
}

pub fn verify_json(summary: &VerifySummary) -> String {
    serde_json::to_string_pretty(summary).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimizer::voicing_table;

    fn table(key: &str, kind: ScaleKind, set: u8) -> VoicingTable {
        let scale = Scale::new(PitchClass::parse(key).unwrap(), kind);
        voicing_table(&scale, AnchorChoice::from_set_number(set).unwrap())
    }

    #[test]
    fn csv_has_fixed_header_and_seven_rows() {
        let rendered = table_csv(&table("C", ScaleKind::Major, 2));
        let mut lines = rendered.lines();
        assert_eq!(
            lines.next().unwrap(),
            "degree,chord,quality,first_note,x,y,z,distance"
        );
        assert_eq!(lines.count(), 7);
        assert!(rendered.contains("2,D minor,Minor,Minor 3rd,5,9,14,3.00000"));
        assert!(rendered.contains("4,F major,Major,Tonic,5,9,12,2.23607"));
    }

    #[test]
    fn csv_round_trips_exactly() {
        let original = table("E", ScaleKind::NaturalMinor, 3);
        let parsed = parse_table_csv(&table_csv(&original)).unwrap();
        assert_eq!(parsed, original);
    }

    #[test]
    fn json_round_trips_exactly() {
        let original = table("F#", ScaleKind::Major, 1);
        let parsed = parse_table_json(&table_json(&original)).unwrap();
        assert_eq!(parsed, original);
    }

    #[test]
    fn csv_parse_rejects_tampered_rows() {
        let original = table("C", ScaleKind::Major, 2);
        let good = table_csv(&original);

        let bad_distance = good.replace("3.00000", "2.50000");
        assert!(parse_table_csv(&bad_distance).is_err());

        let bad_header = good.replace("first_note", "first");
        assert!(matches!(
            parse_table_csv(&bad_header),
            Err(ParseError::Header { .. })
        ));

        let truncated: String = good.lines().take(5).collect::<Vec<_>>().join("\n");
        assert!(matches!(
            parse_table_csv(&truncated),
            Err(ParseError::RowCount(4))
        ));
    }

    #[test]
    fn json_parse_rejects_inconsistent_anchor() {
        let mut doc = TableDoc::from_table(&table("C", ScaleKind::Major, 2));
        doc.anchor = [0, 4, 7];
        let err = serde_json::to_string(&doc)
            .map(|s| parse_table_json(&s))
            .unwrap()
            .unwrap_err();
        assert!(err.to_string().contains("anchor"));
    }

    #[test]
    fn text_table_mirrors_published_layout() {
        let rendered = table_text(&table("C", ScaleKind::Major, 2));
        assert!(rendered.contains("Key: C major | Anchor set 2 | Anchor: (4, 7, 12)"));
        assert!(rendered.contains("Supertonic"));
        assert!(rendered.contains("D minor"));
        assert!(rendered.contains("2.23607"));
        assert!(rendered.contains("Cumulative distance: 13.47214"));
    }

    #[test]
    fn inversions_text_reproduces_published_labels() {
        let major = inversions_text(ScaleKind::Major);
        for label in [
            "Tonic of the chord",
            "Leading Tone",
            "Diminished",
            "The flat 5th",
            "Major 6th",
        ] {
            assert!(major.contains(label), "missing {label}");
        }
        let minor = inversions_text(ScaleKind::NaturalMinor);
        assert!(minor.contains("The seventh"));
        assert!(minor.contains("Major 2nd"));
    }

    #[test]
    fn progression_text_lists_notes() {
        let spec = ProgressionSpec {
            tonic: PitchClass::parse("C").unwrap(),
            kind: ScaleKind::Major,
            degrees: vec![1, 4],
            mode: crate::optimizer::ProgressionMode::Anchor,
        };
        let placements =
            crate::optimizer::voice_progression(&spec, AnchorChoice::default()).unwrap();
        let rendered = progression_text(&spec, AnchorChoice::default(), &placements);
        assert!(rendered.contains("I    C major"));
        assert!(rendered.contains("(4, 7, 12)"));
        assert!(rendered.contains("E0 G0 C1"));
    }
}
