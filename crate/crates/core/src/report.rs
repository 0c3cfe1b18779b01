//! Classification reports for single algebras and deterministic sweeps over
//! all signatures up to a dimension bound.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::autoclass::{
    classify_complex, classify_rep, semisimple_outer_set, table_strings, sign_table, Abc, Admissible, AdmissibleEntry,
    Conformance, Cover, EChoice, Order4Group, RepClassification, SymmetrySplit, admissible_set,
};
use crate::blade_core::AlgebraSig;
use crate::coverings::{pin_descriptor, PinDescriptor};
use crate::error::{CliffError, Result};
use crate::kmatrix::MatrixOps;
use crate::repgen::{build_rep, enumerate_idempotents, IdempotentDesc, IdempotentSpec};
use crate::structure::{complex_structure, mod8_type, semisimple_decomposition, DecompositionVariant, RingTag};

/// The summand a semisimple algebra was classified through.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SummandRef {
    pub variant: DecompositionVariant,
    pub p: u32,
    pub q: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Checks {
    /// Transpose corollary for E and C.
    pub condt: bool,
    /// E·C against C·E versus the expected law, where one applies.
    pub commutation: Option<bool>,
    /// W² = ω²·I, for even real types.
    pub w_square: Option<bool>,
    /// The computed cover agrees with the table row of (a,b,c).
    pub table_consistent: bool,
    pub com1: bool,
    pub com2: bool,
}

fn checks_of<M: MatrixOps>(cls: &RepClassification<M>) -> Checks {
    Checks {
        condt: cls.condt,
        commutation: cls.commutation,
        w_square: cls.w_square,
        table_consistent: cls.table_consistent,
        com1: cls.aut.com1,
        com2: cls.aut.com2,
    }
}

/// Full report for one representation, with the W, E, C matrices.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub p: u32,
    pub q: u32,
    pub complex: bool,
    /// `None` for the Pauli-matrix representation of an even complex algebra.
    pub idempotent: Option<IdempotentDesc>,
    #[serde(rename = "type")]
    pub h_type: u32,
    pub ring: RingTag,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub summand: Option<SummandRef>,
    pub k_basis: Vec<String>,
    /// Generator matrices, entries as K-element labels.
    pub generators: Vec<Vec<Vec<String>>>,
    pub abc: Abc,
    pub order4_group: Order4Group,
    pub order8_cover: Cover,
    pub abelian: bool,
    pub cliffordian: bool,
    pub degenerate: bool,
    pub e_choice: EChoice,
    /// W, E, C multiplied by the central unit ζ (types 3, 7 and complex).
    pub phase: [bool; 3],
    pub split: SymmetrySplit,
    pub table: Vec<Vec<String>>,
    #[serde(rename = "W")]
    pub w: Vec<Vec<String>>,
    #[serde(rename = "E")]
    pub e: Vec<Vec<String>>,
    #[serde(rename = "C")]
    pub c: Vec<Vec<String>>,
    pub pin: PinDescriptor,
    pub checks: Checks,
    /// Signatures allowed for a semisimple algebra as a whole.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub outer: Option<Vec<Abc>>,
    pub conformance: Conformance,
}

fn build_report<M: MatrixOps>(
    sig: AlgebraSig,
    idempotent: Option<IdempotentDesc>,
    k_basis: Vec<String>,
    generators: Vec<Vec<Vec<String>>>,
    cls: &RepClassification<M>,
) -> Result<ClassificationReport> {
    let info = if sig.complex { complex_structure(sig.n()) } else { mod8_type(sig.p, sig.q) };
    let g = &cls.group;
    let pin = pin_descriptor(sig, g)?;
    Ok(ClassificationReport {
        p: sig.p,
        q: sig.q,
        complex: sig.complex,
        idempotent,
        h_type: info.h_type,
        ring: info.ring,
        summand: None,
        k_basis,
        generators,
        abc: g.abc,
        order4_group: g.order4,
        order8_cover: g.order8_cover,
        abelian: g.abelian,
        cliffordian: !g.abelian,
        degenerate: g.degenerate,
        e_choice: cls.aut.e_choice,
        phase: cls.aut.phase,
        split: cls.split.clone(),
        table: table_strings(&sign_table(&cls.aut)?),
        w: cls.aut.w.to_kmatrix().entry_strings(),
        e: cls.aut.e.to_kmatrix().entry_strings(),
        c: cls.aut.c.to_kmatrix().entry_strings(),
        pin,
        checks: checks_of(cls),
        outer: None,
        conformance: cls.conformance.clone(),
    })
}

fn simple_real_report(sig: AlgebraSig, spec: &IdempotentSpec) -> Result<ClassificationReport> {
    let rep = build_rep(sig, spec)?;
    let cls = classify_rep(&rep)?;
    let gens = rep.gens.iter().map(|g| g.to_kmatrix().entry_strings()).collect();
    build_report(sig, Some(IdempotentDesc::new(spec, &rep.f)), rep.k_labels(), gens, &cls)
}

fn even_complex_report(n: u32) -> Result<ClassificationReport> {
    let (gens, cls) = classify_complex(n)?;
    let gens = gens.iter().map(|g| g.entry_strings()).collect();
    build_report(AlgebraSig::complex(n), None, vec!["Id".into()], gens, &cls)
}

/// Re-labels a summand report as a report on the semisimple algebra and
/// intersects its verdict with the algebra's outer signature set.
fn lift_summand(outer_sig: AlgebraSig, summand: SummandRef, mut r: ClassificationReport, outer: Vec<Abc>) -> ClassificationReport {
    let inside = outer.contains(&r.abc);
    let info = if outer_sig.complex { complex_structure(outer_sig.n()) } else { mod8_type(outer_sig.p, outer_sig.q) };
    r.conformance = Conformance {
        pass: r.conformance.pass && inside,
        case: format!("summand {} Cl({},{}): {}", summand.variant, summand.p, summand.q, r.conformance.case),
        admissible: r.conformance.admissible,
    };
    r.p = outer_sig.p;
    r.q = outer_sig.q;
    r.h_type = info.h_type;
    r.ring = info.ring;
    r.summand = Some(summand);
    r.outer = Some(outer);
    r
}

/// Outer signature set of odd Cₙ: both complex kinds.
fn complex_odd_outer(n: u32) -> Result<Vec<Abc>> {
    let Admissible { entries, .. } = admissible_set(AlgebraSig::complex(n), None)?;
    Ok(entries.into_iter().map(|e: AdmissibleEntry| e.abc).collect())
}

/// Every report for one algebra: all enumerated idempotents (or the
/// override) for simple real types, both summand splittings for semisimple
/// types, and the Pauli-matrix representation for complex algebras.
pub fn classify_algebra(sig: AlgebraSig, idempotent: Option<&IdempotentSpec>) -> Result<Vec<ClassificationReport>> {
    if sig.complex {
        if idempotent.is_some() {
            return Err(CliffError::Precondition("idempotent overrides apply to real algebras only".into()));
        }
        let n = sig.n();
        if n.is_multiple_of(2) {
            return Ok(vec![even_complex_report(n)?]);
        }
        let mut r = even_complex_report(n - 1)?;
        let outer = complex_odd_outer(n)?;
        let inside = outer.contains(&r.abc);
        r.conformance.pass &= inside;
        r.conformance.case = format!("C{n} = C{m} ⊕ C{m}: {}", r.conformance.case, m = n - 1);
        r.p = n;
        r.h_type = 1;
        r.outer = Some(outer);
        return Ok(vec![r]);
    }
    if matches!(sig.h_ring(), 1 | 5) {
        if idempotent.is_some() {
            return Err(CliffError::Precondition(format!("{sig} is semisimple; classify a summand to override the idempotent")));
        }
        let outer = semisimple_outer_set(sig);
        let mut out = Vec::new();
        for (variant, sub) in semisimple_decomposition(sig.p, sig.q)?.variants() {
            let summand = SummandRef { variant, p: sub.p, q: sub.q };
            for spec in enumerate_idempotents(sub)? {
                let r = simple_real_report(sub, &spec)?;
                out.push(lift_summand(sig, summand, r, outer.clone()));
            }
        }
        return Ok(out);
    }
    let specs = match idempotent {
        Some(s) => vec![s.clone()],
        None => enumerate_idempotents(sig)?,
    };
    specs.iter().map(|s| simple_real_report(sig, s)).collect()
}

/// Classification fields of a compact summary.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Classified {
    pub abc: Abc,
    pub order4_group: Order4Group,
    pub order8_cover: Cover,
    pub skew: usize,
    pub case: String,
    pub checks: Checks,
}

/// One line of a sweep: a representation and its verdicts, without matrices.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RepSummary {
    pub p: u32,
    pub q: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub summand: Option<SummandRef>,
    pub idempotent: String,
    pub conformance: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub classified: Option<Classified>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SweepRow {
    pub p: u32,
    pub q: u32,
    #[serde(rename = "type")]
    pub h_type: u32,
    pub ring: RingTag,
    pub reps: usize,
    pub failures: usize,
    /// Representation counts per "(a,b,c) cover".
    pub kinds: BTreeMap<String, usize>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SweepTotals {
    pub reps: usize,
    pub conformance_failures: usize,
    pub errors: usize,
    pub condt_failures: usize,
    pub commutation_failures: usize,
    pub w_square_failures: usize,
    pub table_failures: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SweepReport {
    pub max_n: u32,
    pub rows: Vec<SweepRow>,
    pub totals: SweepTotals,
    pub reps: Vec<RepSummary>,
}

impl SweepReport {
    pub fn all_conformant(&self) -> bool {
        self.totals.conformance_failures == 0 && self.totals.errors == 0
    }

    /// Union of computed signatures per mod-8 type.
    pub fn signatures_by_type(&self) -> BTreeMap<u32, Vec<Abc>> {
        let mut out: BTreeMap<u32, std::collections::BTreeSet<Abc>> = BTreeMap::new();
        for r in &self.reps {
            if let Some(c) = &r.classified {
                let t = AlgebraSig::real(r.p, r.q).h_ring();
                out.entry(t).or_default().insert(c.abc);
            }
        }
        out.into_iter().map(|(t, s)| (t, s.into_iter().collect())).collect()
    }
}

type Outcome = std::result::Result<Classified, String>;

fn classify_job(sig: AlgebraSig, spec: &IdempotentSpec) -> (bool, Outcome) {
    let run = || -> Result<(bool, Classified)> {
        let rep = build_rep(sig, spec)?;
        let cls = classify_rep(&rep)?;
        Ok((
            cls.conformance.pass,
            Classified {
                abc: cls.group.abc,
                order4_group: cls.group.order4,
                order8_cover: cls.group.order8_cover,
                skew: cls.split.skew.len(),
                case: cls.conformance.case.clone(),
                checks: checks_of(&cls),
            },
        ))
    };
    match run() {
        Ok((pass, c)) => (pass, Ok(c)),
        Err(e) => (false, Err(e.to_string())),
    }
}

/// Signatures (p,q) with p + q = n, in increasing p.
fn signatures(max_n: u32) -> impl Iterator<Item = AlgebraSig> {
    (0..=max_n).flat_map(|n| (0..=n).map(move |p| AlgebraSig::real(p, n - p)))
}

/// Classifies every idempotent of every Cl(p,q) with p + q ≤ max_n on a pool
/// of `jobs` threads (0 picks the rayon default). Semisimple algebras reuse
/// the summand results. The output does not depend on `jobs`.
pub fn sweep(max_n: u32, jobs: usize) -> Result<SweepReport> {
    let mut work: Vec<(AlgebraSig, IdempotentSpec)> = Vec::new();
    for sig in signatures(max_n) {
        if !matches!(sig.h_ring(), 1 | 5) {
            work.extend(enumerate_idempotents(sig)?.into_iter().map(|s| (sig, s)));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliffError::Precondition(format!("thread pool: {e}")))?;
    let outcomes: Vec<(bool, Outcome)> = pool.install(|| work.par_iter().map(|(sig, s)| classify_job(*sig, s)).collect());

    let mut by_sig: HashMap<AlgebraSig, Vec<(&IdempotentSpec, &(bool, Outcome))>> = HashMap::new();
    for ((sig, spec), out) in work.iter().zip(&outcomes) {
        by_sig.entry(*sig).or_default().push((spec, out));
    }

    let mut rows = Vec::new();
    let mut reps = Vec::new();
    for sig in signatures(max_n) {
        let info = mod8_type(sig.p, sig.q);
        let start = reps.len();
        let summarize = |summand: Option<SummandRef>, spec: &IdempotentSpec, out: &(bool, Outcome), outer: Option<&[Abc]>| {
            let (pass, res) = out;
            let inside = match (outer, res) {
                (Some(set), Ok(c)) => set.contains(&c.abc),
                _ => true,
            };
            RepSummary {
                p: sig.p,
                q: sig.q,
                summand,
                idempotent: spec.to_string(),
                conformance: *pass && inside,
                classified: res.as_ref().ok().cloned(),
                error: res.as_ref().err().cloned(),
            }
        };
        if matches!(sig.h_ring(), 1 | 5) {
            let outer = semisimple_outer_set(sig);
            for (variant, sub) in semisimple_decomposition(sig.p, sig.q)?.variants() {
                let summand = SummandRef { variant, p: sub.p, q: sub.q };
                for (spec, out) in by_sig.get(&sub).map(Vec::as_slice).unwrap_or_default() {
                    reps.push(summarize(Some(summand), spec, out, Some(&outer)));
                }
            }
        } else {
            for (spec, out) in by_sig.get(&sig).map(Vec::as_slice).unwrap_or_default() {
                reps.push(summarize(None, spec, out, None));
            }
        }
        let mine = &reps[start..];
        let mut kinds = BTreeMap::new();
        for r in mine {
            if let Some(c) = &r.classified {
                *kinds.entry(format!("{} {}", c.abc, c.order8_cover)).or_insert(0) += 1;
            }
        }
        rows.push(SweepRow {
            p: sig.p,
            q: sig.q,
            h_type: info.h_type,
            ring: info.ring,
            reps: mine.len(),
            failures: mine.iter().filter(|r| !r.conformance).count(),
            kinds,
        });
    }
    let count = |f: &dyn Fn(&Checks) -> bool| reps.iter().filter(|r| r.classified.as_ref().is_some_and(|c| f(&c.checks))).count();
    let totals = SweepTotals {
        reps: reps.len(),
        conformance_failures: reps.iter().filter(|r| !r.conformance).count(),
        errors: reps.iter().filter(|r| r.error.is_some()).count(),
        condt_failures: count(&|c| !c.condt),
        commutation_failures: count(&|c| c.commutation == Some(false)),
        w_square_failures: count(&|c| c.w_square == Some(false)),
        table_failures: count(&|c| !c.table_consistent),
    };
    Ok(SweepReport { max_n, rows, totals, reps })
}
