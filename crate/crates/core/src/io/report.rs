//! Report assembly: run the whole invariant pipeline on one curve
//! description and emit a stable machine-readable report plus a
//! human-readable rendering.

use serde::Serialize;

use crate::alexander::{global_bound, milnor_fiber_betti, zariski_filter, BettiSummary, CyclotomicProduct};
use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::invariants::{
    classification_consistent, classify_freeness, CurveAlgebra, FreenessClass, H2LowerBound,
    NfProfile,
};
use crate::local::{genus, SingularityRecord};

use super::curvefile::CurveFile;

#[derive(Debug, Clone, Serialize)]
pub struct SingularityReport {
    pub kind: String,
    pub pairs: Option<Vec<(u32, u32)>>,
    pub mu: u64,
    pub delta: Option<u64>,
    pub branches: u32,
    pub local_alexander: CyclotomicProduct,
}

#[derive(Debug, Clone, Serialize)]
pub struct AlexanderBound {
    pub before_filter: CyclotomicProduct,
    pub after_filter: CyclotomicProduct,
    pub after_filter_expanded: String,
}

/// The assembled invariants of one curve. Field order fixes the JSON key
/// order, and all maps are ordered, so reports are byte-stable.
#[derive(Debug, Clone, Serialize)]
pub struct CurveReport {
    pub degree: u32,
    pub tau: u64,
    pub freeness: FreenessClass,
    pub nf_dims: NfProfile,
    pub genus: Option<i64>,
    pub singularities: Vec<SingularityReport>,
    pub alexander_bound: AlexanderBound,
    pub h2_lower_bounds: Vec<H2LowerBound>,
    pub betti: Option<BettiSummary>,
    pub warnings: Vec<String>,
}

impl CurveReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Run the full pipeline on a validated curve file.
pub fn analyze(file: &CurveFile, budget: Budget) -> Result<CurveReport> {
    let (curve, sings) = file.resolve()?;
    let d = curve.degree();
    let mut warnings: Vec<String> = Vec::new();

    let algebra = CurveAlgebra::compute(&curve, budget)?;
    let tau = algebra.total_tjurina(d)?;
    let nf = algebra.nf_dims(d);
    let freeness = classify_freeness(d, tau);
    if !classification_consistent(&freeness, &nf) {
        return Err(Error::Inconsistent(format!(
            "exponent classification {:?} disagrees with the N(f) profile {:?}",
            freeness.kind, nf.dims
        )));
    }
    let h2 = algebra.h2_lower_bounds(d);

    if tau < sings.len() as u64 {
        warnings.push(format!(
            "total Tjurina number {} is smaller than the {} declared singularities",
            tau,
            sings.len()
        ));
    }

    let sing_reports: Vec<SingularityReport> = sings
        .iter()
        .map(|s| SingularityReport {
            kind: match s {
                SingularityRecord::Unibranch { .. } => "unibranch".to_string(),
                SingularityRecord::Node { .. } => "node".to_string(),
            },
            pairs: match s {
                SingularityRecord::Unibranch { pairs, .. } => Some(pairs.pairs().to_vec()),
                SingularityRecord::Node { .. } => None,
            },
            mu: s.mu(),
            delta: s.delta().ok(),
            branches: s.branches(),
            local_alexander: s.local_alexander(),
        })
        .collect();

    let locals: Vec<CyclotomicProduct> = sings.iter().map(|s| s.local_alexander()).collect();
    let before_filter = global_bound(&locals, d);
    let after_filter = zariski_filter(&before_filter, curve.irreducible());
    let after_filter_expanded = after_filter
        .expand()
        .expect("filtered bound is polynomial-valued")
        .to_string();

    let parity_trouble = sings.iter().any(|s| s.delta().is_err());
    if parity_trouble {
        warnings.push(
            "local Milnor-number parity conflicts with genus integrality; genus omitted".into(),
        );
    }

    let (genus_val, betti) = if !curve.irreducible() {
        warnings.push(
            "genus and Betti numbers are computed for irreducible curves only; omitted".into(),
        );
        (None, None)
    } else if parity_trouble {
        (None, None)
    } else {
        let g = genus(d, &sings)?;
        let delta1_degree = after_filter.degree();
        if delta1_degree > 0 {
            warnings.push(
                "b1 uses the degree of the Alexander-polynomial bound; the true value may be smaller"
                    .into(),
            );
        }
        let b = milnor_fiber_betti(d, g, &sings, delta1_degree)?;
        (Some(g), Some(b))
    };

    Ok(CurveReport {
        degree: d,
        tau,
        freeness,
        nf_dims: nf,
        genus: genus_val,
        singularities: sing_reports,
        alexander_bound: AlexanderBound {
            before_filter,
            after_filter,
            after_filter_expanded,
        },
        h2_lower_bounds: h2,
        betti,
        warnings,
    })
}

/// Human-readable rendering of a report.
pub fn render_text(name: &str, r: &CurveReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "curve: {}", name);
    let _ = writeln!(out, "degree: {}", r.degree);
    let _ = writeln!(out, "total Tjurina number: {}", r.tau);
    let freeness = match r.freeness.kind {
        crate::invariants::FreenessKind::Free { d1, d2 } => {
            format!("free with exponents ({}, {})", d1, d2)
        }
        crate::invariants::FreenessKind::NearlyFree { d1, d2 } => {
            format!("nearly free with exponents ({}, {})", d1, d2)
        }
        crate::invariants::FreenessKind::Neither => "neither free nor nearly free".to_string(),
    };
    let _ = writeln!(out, "classification: {}", freeness);
    let _ = writeln!(out, "N(f) dimensions (k = 0..{}): {:?}", r.nf_dims.dims.len() - 1, r.nf_dims.dims);
    match r.genus {
        Some(g) => {
            let _ = writeln!(out, "genus: {}", g);
        }
        None => {
            let _ = writeln!(out, "genus: not computed");
        }
    }
    if r.singularities.is_empty() {
        let _ = writeln!(out, "singularities: none declared");
    } else {
        let _ = writeln!(out, "singularities:");
        for s in &r.singularities {
            let pairs = s
                .pairs
                .as_ref()
                .map(|p| format!(" pairs {:?}", p))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "  - {}{}: mu = {}, delta = {}, local Alexander = {}",
                s.kind,
                pairs,
                s.mu,
                s.delta.map(|d| d.to_string()).unwrap_or_else(|| "?".into()),
                s.local_alexander
            );
        }
    }
    let _ = writeln!(
        out,
        "Alexander bound before filter: {}",
        r.alexander_bound.before_filter
    );
    let _ = writeln!(
        out,
        "Alexander bound after filter:  {} = {}",
        r.alexander_bound.after_filter, r.alexander_bound.after_filter_expanded
    );
    let h2: Vec<String> = r
        .h2_lower_bounds
        .iter()
        .map(|b| format!("j={} (order {}): {}", b.j, b.eigenvalue_order, b.dim))
        .collect();
    let _ = writeln!(out, "H^2 eigenspace lower bounds: {}", h2.join(", "));
    match &r.betti {
        Some(b) => {
            let _ = writeln!(
                out,
                "Milnor fiber: chi(U) = {}, chi(F) = {}, b1 = {}, b2 = {}",
                b.chi_u, b.chi_f, b.b1_f, b.b2_f
            );
        }
        None => {
            let _ = writeln!(out, "Milnor fiber: not computed");
        }
    }
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {}", w);
    }
    out
}
