//! The full pipeline for one space, rendered as text or JSON.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::bar_ss::{Bucket, DifferentialSpec, InferenceOptions, ModuleClass};
use crate::bounds::{assemble_bracket, BoundKind, BoundsLedger, Bracket, LedgerEntry, Quantity};
use crate::error::{Error, Result};
use crate::fixtures::{Attestation, SpacePresentation};
use crate::space::Space;
use crate::weights::{mwgt_lower_bound, weight_assignment, ObstructionWitness, WeightEntry};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Default)]
pub struct ReportOptions {
    pub degree_cap: Option<u32>,
    pub truncate: Vec<u32>,
    pub inference: InferenceOptions,
    /// Largest height searched for obstructions; defaults to the degree cap.
    pub m_max: Option<u32>,
    pub timings: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certified {
    pub value: u32,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MwgtSummary {
    pub value: u32,
    pub provenance: String,
    /// Bound from Steenrod obstructions alone.
    pub obstruction_bound: u32,
    pub searched_through: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralSequenceSummary {
    pub differentials: Vec<DifferentialSpec>,
    pub e2_dims: Vec<usize>,
    pub e_infinity_dims: Vec<usize>,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PmSummary {
    pub m: u32,
    pub a_m: usize,
    pub partial_products: usize,
    pub s_m_candidates: usize,
    pub classes: Vec<ModuleClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Timings {
    pub spectral_sequence_ms: u128,
    pub weights_ms: u128,
    pub obstructions_ms: u128,
    pub total_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub schema_version: u32,
    pub space: String,
    pub degree_cap: u32,
    pub cohomology_dims: Vec<usize>,
    pub cuplen: Certified,
    pub wgt: Certified,
    pub mwgt_lower: MwgtSummary,
    pub weights: Vec<WeightEntry>,
    pub spectral_sequence: SpectralSequenceSummary,
    pub pm_reports: Vec<PmSummary>,
    pub witnesses: Vec<ObstructionWitness>,
    pub ledger: BoundsLedger,
    pub bracket: Bracket,
    pub attestations: Vec<Attestation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

pub fn run(presentation: SpacePresentation, options: &ReportOptions) -> Result<InvariantReport> {
    let start = Instant::now();
    let presentation = match options.degree_cap {
        Some(cap) => presentation.with_degree_cap(cap),
        None => presentation,
    };
    let space = Space::build(presentation, &options.inference)?;
    let t_ss = start.elapsed();

    let a = space.cohomology();
    let cuplen = a.cup_length();
    let weights = weight_assignment(&space)?;
    let wgt = weights.max();
    let t_w = start.elapsed();

    let m_max = options.m_max.unwrap_or(a.degree_cap());
    let mwgt = mwgt_lower_bound(&space, m_max)?;
    let t_ob = start.elapsed();

    let mut ledger = BoundsLedger::new();
    ledger.push(LedgerEntry::new(Quantity::CupLength, BoundKind::Exact, cuplen, "longest nonzero product of generators"));
    ledger.push(LedgerEntry::new(Quantity::Wgt, BoundKind::Exact, wgt, "largest E-infinity filtration of a basis class"));
    let witness_note = match mwgt.witnesses.last() {
        Some(w) => format!("Steenrod obstruction at P^{} (Sq^{} on {})", w.m, w.k, w.z),
        None => format!("no Steenrod obstruction found for m <= {m_max}"),
    };
    ledger.push(LedgerEntry::new(Quantity::Mwgt, BoundKind::Lower, mwgt.value, witness_note));
    for b in &space.presentation().bounds {
        ledger.push(b.entry()?);
    }
    let bracket = assemble_bracket(&ledger)?;
    let mwgt_rung = &bracket.ladder[2];
    let mwgt_source = mwgt_rung.lower_from.map(|i| ledger.entries[i].to_string()).unwrap_or_default();

    let mut pm_reports = Vec::new();
    for &m in &options.truncate {
        let r = space.pm_report(m)?;
        pm_reports.push(PmSummary {
            m,
            a_m: r.truncated,
            partial_products: r.partial_products,
            s_m_candidates: r.residual,
            classes: r.classes,
        });
    }

    let e_inf = space.e_infinity();
    let timings = options.timings.then(|| Timings {
        spectral_sequence_ms: t_ss.as_millis(),
        weights_ms: (t_w - t_ss).as_millis(),
        obstructions_ms: (t_ob - t_w).as_millis(),
        total_ms: start.elapsed().as_millis(),
    });
    Ok(InvariantReport {
        schema_version: REPORT_SCHEMA_VERSION,
        space: space.name().to_string(),
        degree_cap: a.degree_cap(),
        cohomology_dims: a.poincare_series(),
        cuplen: Certified { value: cuplen, provenance: "cup_length: maximal factor count of a basis monomial".into() },
        wgt: Certified {
            value: wgt,
            provenance: format!(
                "compute_wgt_space: E-infinity filtration, differentials inferred from permanent cycles {}",
                space.presentation().permanent_cycles.join(", ")
            ),
        },
        mwgt_lower: MwgtSummary {
            value: mwgt_rung.lower,
            provenance: format!("ladder from {mwgt_source}"),
            obstruction_bound: mwgt.value,
            searched_through: mwgt.searched_through,
        },
        weights: weights.entries,
        spectral_sequence: SpectralSequenceSummary {
            differentials: space.differentials().to_vec(),
            e2_dims: space.e2().dims_by_total_degree(),
            e_infinity_dims: e_inf.dims_by_total_degree(),
            provenance: "infer_differentials: unique assignment matching the cohomology in every degree".into(),
        },
        pm_reports,
        witnesses: mwgt.witnesses,
        ledger,
        bracket,
        attestations: space.presentation().attestations.clone(),
        timings,
    })
}

impl InvariantReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "space {} (degree cap {})", self.space, self.degree_cap);
        let total: usize = self.cohomology_dims.iter().sum();
        let _ = writeln!(w, "  total dimension      {total}");
        let _ = writeln!(w, "  cuplen               {}", self.cuplen.value);
        let _ = writeln!(w, "  wgt                  {}", self.wgt.value);
        let _ = writeln!(
            w,
            "  Mwgt >=              {} (obstructions give {}, searched m <= {})",
            self.mwgt_lower.value, self.mwgt_lower.obstruction_bound, self.mwgt_lower.searched_through
        );
        let _ = writeln!(w, "  cat in               {}", self.bracket);
        let _ = writeln!(w);
        let _ = writeln!(w, "differentials");
        if self.spectral_sequence.differentials.is_empty() {
            let _ = writeln!(w, "  none");
        }
        for d in &self.spectral_sequence.differentials {
            for a in &d.assignments {
                let _ = writeln!(w, "  d{}({}) = {}", d.r, a.generator, a.value.join(" + "));
            }
        }
        for p in &self.pm_reports {
            let _ = writeln!(w);
            let _ = writeln!(
                w,
                "P^{}: {} classes of A[m], {} partial products, {} S_m candidates",
                p.m, p.a_m, p.partial_products, p.s_m_candidates
            );
            for c in &p.classes {
                let tag = match c.bucket {
                    Bucket::Truncated => "A",
                    Bucket::PartialProduct => "x",
                    Bucket::Residual => "S",
                };
                let _ = writeln!(w, "  {:>3} {:<9} {tag}  {}", c.degree, format!("({}, {})", c.s, c.t), c.label);
            }
        }
        for wit in &self.witnesses {
            let _ = writeln!(w);
            let _ = writeln!(w, "obstruction at m = {}", wit.m);
            for f in &wit.facts {
                let _ = writeln!(w, "  {f}");
            }
        }
        let _ = writeln!(w);
        let _ = writeln!(w, "ledger");
        for e in &self.ledger.entries {
            let _ = writeln!(w, "  {e}");
        }
        if let Some(t) = &self.timings {
            let _ = writeln!(w);
            let _ = writeln!(
                w,
                "timings (ms): spectral sequence {}, weights {}, obstructions {}, total {}",
                t.spectral_sequence_ms, t.weights_ms, t.obstructions_ms, t.total_ms
            );
        }
        out
    }
}

/// Process exit status for a failed run.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InconsistentBounds { .. } => 2,
        Error::Validation(_) | Error::Json(_) | Error::Fixture(_) => 3,
        _ => 1,
    }
}
