//! Brute-force verification of the optimizer.
//!
//! The oracle re-derives every nearest placement by scanning raw integer
//! triples over a wide window, sharing none of the optimizer's enumeration
//! shortcuts, so agreement between the two is evidence rather than
//! tautology. Speed is a non-goal here.

use serde::Serialize;

use crate::diatonic::{DiatonicTriad, Scale, ScaleKind};
use crate::optimizer::{self, AnchorChoice};
use crate::pitch_space::{squared_distance, PitchClass, TriadPlacement};

/// Result of one exhaustive nearest-placement search.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub degree: u8,
    /// Every placement of minimal distance, ascending coordinate order.
    pub optima: Vec<TriadPlacement>,
    pub squared_distance: i64,
    pub distance: f64,
    pub tie_count: usize,
}

impl OracleReport {
    /// The optimum that survives the documented tie-break: lowest top note,
    /// then lexicographically smallest triple.
    pub fn tie_broken(&self) -> TriadPlacement {
        *self
            .optima
            .iter()
            .min_by_key(|p| {
                let [x, y, z] = p.coords();
                (z, x, y)
            })
            .expect("at least one optimum")
    }
}

/// Exhaustively scans every strictly ascending triple over the triad's
/// pitch classes with coordinates in `[anchor.x - w, anchor.z + w]` and
/// span at most 12, returning all argmin placements.
pub fn brute_force_nearest(
    anchor: TriadPlacement,
    triad: &DiatonicTriad,
    window_half_width: i32,
) -> OracleReport {
    assert!(window_half_width >= 24, "window half-width below 24");
    let lo = anchor.x().0 - window_half_width;
    let hi = anchor.z().0 + window_half_width;
    let chord_pcs = triad.pitch_classes();
    let in_chord = |n: i32| chord_pcs.contains(&PitchClass::from_semitones(n));

    let mut best = i64::MAX;
    let mut optima = Vec::new();
    for x in lo..=hi {
        if !in_chord(x) {
            continue;
        }
        for y in (x + 1)..=hi {
            if y - x > 11 {
                break;
            }
            if !in_chord(y) || y.rem_euclid(12) == x.rem_euclid(12) {
                continue;
            }
            for z in (y + 1)..=hi {
                if z - x > 12 {
                    break;
                }
                if !in_chord(z)
                    || z.rem_euclid(12) == x.rem_euclid(12)
                    || z.rem_euclid(12) == y.rem_euclid(12)
                {
                    continue;
                }
                let candidate = TriadPlacement::new(x, y, z).expect("scan yields valid triples");
                let d2 = squared_distance(anchor, candidate);
                if d2 < best {
                    best = d2;
                    optima.clear();
                }
                if d2 == best {
                    optima.push(candidate);
                }
            }
        }
    }
    assert!(!optima.is_empty(), "window always admits a placement");
    let tie_count = optima.len();
    OracleReport {
        degree: triad.degree(),
        optima,
        squared_distance: best,
        distance: (best as f64).sqrt(),
        tie_count,
    }
}

/// Identifies one of the 504 standard verification cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseId {
    pub key: String,
    pub kind: String,
    pub set: u8,
    pub degree: u8,
}

impl CaseId {
    fn new(tonic: PitchClass, kind: ScaleKind, set: u8, degree: u8) -> Self {
        CaseId {
            key: tonic.name().to_string(),
            kind: kind.to_string(),
            set,
            degree,
        }
    }

    pub fn describe(&self) -> String {
        format!(
            "{} {} set {} degree {}",
            self.key, self.kind, self.set, self.degree
        )
    }
}

/// A case where optimizer and oracle disagree.
#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    pub case: CaseId,
    pub detail: String,
}

/// A per-table violation of the constant cumulative distance.
#[derive(Debug, Clone, Serialize)]
pub struct CumulativeFailure {
    pub key: String,
    pub kind: String,
    pub set: u8,
    pub cumulative: f64,
}

/// A case whose argmin is not unique, recorded so the reach of the
/// tie-break rule stays documented empirically.
#[derive(Debug, Clone, Serialize)]
pub struct TieCase {
    pub case: CaseId,
    pub optima: Vec<[i32; 3]>,
    pub distance: f64,
}

/// Machine-readable outcome of [`verify_all`].
#[derive(Debug, Clone, Serialize)]
pub struct VerifySummary {
    pub window_half_width: i32,
    pub cases_checked: usize,
    pub tables_checked: usize,
    pub mismatches: Vec<Mismatch>,
    pub cumulative_failures: Vec<CumulativeFailure>,
    pub ties: Vec<TieCase>,
    pub cumulative_major: f64,
    pub cumulative_minor: f64,
    pub expected_cumulative: f64,
    pub max_cumulative_error: f64,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.cumulative_failures.is_empty()
    }
}

/// Brute-force reports for all 12 tonics x 2 kinds x 3 anchor sets x 7
/// degrees, in that fixed case order.
pub fn case_reports(window_half_width: i32) -> Vec<(CaseId, OracleReport)> {
    let mut out = Vec::with_capacity(504);
    for kind in [ScaleKind::Major, ScaleKind::NaturalMinor] {
        for tonic in 0..12 {
            let scale = Scale::new(PitchClass::from_semitones(tonic), kind);
            for set in 1..=3 {
                let choice = AnchorChoice::from_set_number(set).expect("set in range");
                let anchor = optimizer::tonic_anchor(&scale, choice);
                for triad in scale.triads() {
                    let id = CaseId::new(scale.tonic(), kind, set, triad.degree());
                    out.push((id, brute_force_nearest(anchor, &triad, window_half_width)));
                }
            }
        }
    }
    out
}

/// Checks the optimizer against the oracle on every standard case: the
/// optimizer's placement must be the oracle's tie-broken argmin at the same
/// exact squared distance, and each table's cumulative distance must equal
/// 9 + 2*sqrt(5) to within 1e-9.
pub fn verify_all(window_half_width: i32) -> VerifySummary {
    let expected = crate::cumulative_constant();
    let mut summary = VerifySummary {
        window_half_width,
        cases_checked: 0,
        tables_checked: 0,
        mismatches: Vec::new(),
        cumulative_failures: Vec::new(),
        ties: Vec::new(),
        cumulative_major: 0.0,
        cumulative_minor: 0.0,
        expected_cumulative: expected,
        max_cumulative_error: 0.0,
    };

    for kind in [ScaleKind::Major, ScaleKind::NaturalMinor] {
        for tonic in 0..12 {
            let scale = Scale::new(PitchClass::from_semitones(tonic), kind);
            for set in 1..=3 {
                let choice = AnchorChoice::from_set_number(set).expect("set in range");
                let table = optimizer::voicing_table(&scale, choice);
                summary.tables_checked += 1;
                let mut oracle_cumulative = 0.0;
                for row in &table.rows {
                    summary.cases_checked += 1;
                    let id = CaseId::new(scale.tonic(), kind, set, row.degree);
                    let report = brute_force_nearest(table.anchor, &row.triad, window_half_width);
                    if row.degree != 1 {
                        oracle_cumulative += report.distance;
                    }
                    if report.tie_count > 1 {
                        summary.ties.push(TieCase {
                            case: id.clone(),
                            optima: report.optima.iter().map(|p| p.coords()).collect(),
                            distance: report.distance,
                        });
                    }
                    let chosen = row.placement;
                    if !report.optima.contains(&chosen) {
                        summary.mismatches.push(Mismatch {
                            case: id.clone(),
                            detail: format!(
                                "optimizer chose {chosen} but oracle optima are {:?}",
                                report.optima
                            ),
                        });
                        continue;
                    }
                    if report.squared_distance != squared_distance(table.anchor, chosen) {
                        summary.mismatches.push(Mismatch {
                            case: id.clone(),
                            detail: format!(
                                "optimizer distance^2 {} but oracle found {}",
                                squared_distance(table.anchor, chosen),
                                report.squared_distance
                            ),
                        });
                        continue;
                    }
                    if report.tie_broken() != chosen {
                        summary.mismatches.push(Mismatch {
                            case: id,
                            detail: format!(
                                "tie-break selects {} but optimizer chose {chosen}",
                                report.tie_broken()
                            ),
                        });
                    }
                }
                let error = (oracle_cumulative - expected).abs();
                summary.max_cumulative_error = summary.max_cumulative_error.max(error);
                if error > 1e-9 {
                    summary.cumulative_failures.push(CumulativeFailure {
                        key: scale.tonic().name().to_string(),
                        kind: kind.to_string(),
                        set,
                        cumulative: oracle_cumulative,
                    });
                }
                if tonic == 0 && set == 1 {
                    match kind {
                        ScaleKind::Major => summary.cumulative_major = oracle_cumulative,
                        ScaleKind::NaturalMinor => summary.cumulative_minor = oracle_cumulative,
                    }
                }
            }
        }
    }
    summary
}
