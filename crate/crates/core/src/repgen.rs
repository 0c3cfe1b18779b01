//! Primitive idempotents, minimal left ideals and spinor representations.
//!
//! Every idempotent used here has the form f = ∏ ½(1 + sᵢ·e_{αᵢ}) with
//! commuting blades of square +1. The blades generate a sign group G whose
//! elements act on f by e_g·f = λ_g·f, so e_B·f for any blade B is ± the
//! element of a fixed representative of the coset B·G. This turns ideal and
//! division-ring bases into coset bookkeeping over blade masks; the results
//! are identical to row-reducing the products e_B·f in blade order.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::blade_core::{
    blade_label, blade_key, blade_mul, blade_order, blade_square, blades_commute, parse_blade, AlgebraSig,
    BladeMask, Multivector,
};
use crate::error::{CliffError, Result};
use crate::kmatrix::{KElem, KMatrix, KRing, MatrixOps, MonoEntry, MonoMatrix};
use crate::scalar::Scalar;
use crate::structure::{idem_factor_count, ring_of_type, RingTag};

/// Largest algebra for which spinor representations are built.
pub const MAX_REP_GENERATORS: u32 = 16;

/// Commuting blades and their signs: f = ∏ ½(1 + signs[i]·e_{blades[i]}).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IdempotentSpec {
    pub blades: Vec<BladeMask>,
    pub signs: Vec<i8>,
}

impl IdempotentSpec {
    pub fn new(blades: Vec<BladeMask>, signs: Vec<i8>) -> Self {
        assert_eq!(blades.len(), signs.len(), "one sign per blade");
        IdempotentSpec { blades, signs }
    }

    pub fn positive(blades: Vec<BladeMask>) -> Self {
        let signs = vec![1; blades.len()];
        IdempotentSpec { blades, signs }
    }

    /// Parses `e1,e34` with `+,+` (signs may also be written `++`). An empty
    /// blade list stands for f = 1.
    pub fn parse(blades: &str, signs: &str) -> Result<Self> {
        let blade_list: Vec<BladeMask> = if blades.trim().is_empty() {
            Vec::new()
        } else {
            blades.split(',').map(parse_blade).collect::<Result<_>>()?
        };
        let sign_list: Vec<i8> = signs
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(CliffError::Parse(format!("invalid sign `{c}`"))),
            })
            .collect::<Result<_>>()?;
        if blade_list.len() != sign_list.len() {
            return Err(CliffError::InvalidIdempotent(format!(
                "{} blades but {} signs",
                blade_list.len(),
                sign_list.len()
            )));
        }
        Ok(IdempotentSpec { blades: blade_list, signs: sign_list })
    }

    pub fn blade_labels(&self) -> Vec<String> {
        self.blades.iter().map(|&b| blade_label(b)).collect()
    }

    pub fn sign_string(&self) -> String {
        self.signs.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect()
    }
}

/// `(1+e1)(1+e34)/4`; `1` for the empty product.
impl fmt::Display for IdempotentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blades.is_empty() {
            return write!(f, "1");
        }
        for (b, s) in self.blades.iter().zip(&self.signs) {
            write!(f, "(1{}{})", if *s > 0 { '+' } else { '-' }, blade_label(*b))?;
        }
        write!(f, "/{}", 1u64 << self.blades.len())
    }
}

/// Number of idempotent factors for the simple algebras handled directly:
/// q − r_{q−p} for real types, n/2 for even complex algebras.
pub fn expected_factor_count(sig: AlgebraSig) -> Result<u32> {
    if sig.complex {
        if sig.n() % 2 == 1 {
            return Err(CliffError::Precondition(format!("{sig} is not simple")));
        }
        return Ok(sig.n() / 2);
    }
    if matches!(sig.h_ring(), 1 | 5) {
        return Err(CliffError::Precondition(format!("{sig} is semisimple; use a decomposition summand")));
    }
    Ok(idem_factor_count(sig.p, sig.q))
}

/// The 2^k elements of the group generated by the idempotent blades, each
/// with its eigenvalue λ on f (e_g·f = λ·f).
pub fn sign_group(spec: &IdempotentSpec, sig: AlgebraSig) -> Vec<(BladeMask, i8)> {
    let mut out: Vec<(BladeMask, i8)> = vec![(0, 1)];
    for (&b, &s) in spec.blades.iter().zip(&spec.signs) {
        let extra: Vec<(BladeMask, i8)> = out
            .iter()
            .map(|&(g, lam)| {
                let (m, sign) = blade_mul(g, b, sig);
                (m, lam * s * sign)
            })
            .collect();
        out.extend(extra);
    }
    out
}

fn span_contains(span: &[BladeMask], mask: BladeMask) -> bool {
    span.contains(&mask)
}

fn extend_span(span: &mut Vec<BladeMask>, mask: BladeMask) {
    let extra: Vec<BladeMask> = span.iter().map(|&s| s ^ mask).collect();
    span.extend(extra);
}

/// Checks the blades and signs against `sig` and the expected factor count.
pub fn validate_spec(spec: &IdempotentSpec, sig: AlgebraSig) -> Result<()> {
    let k = expected_factor_count(sig)?;
    let bad = |msg: String| Err(CliffError::InvalidIdempotent(msg));
    if spec.blades.len() != spec.signs.len() {
        return bad("blade and sign counts differ".into());
    }
    if spec.blades.len() as u32 != k {
        return bad(format!("{sig} needs {k} commuting blades, got {}", spec.blades.len()));
    }
    if spec.signs.iter().any(|s| s.abs() != 1) {
        return bad("signs must be ±1".into());
    }
    let mut span = vec![0];
    for (i, &b) in spec.blades.iter().enumerate() {
        if !sig.contains(b) {
            return bad(format!("{} lies outside {sig}", blade_label(b)));
        }
        if blade_square(b, sig) != 1 {
            return bad(format!("{} does not square to +1", blade_label(b)));
        }
        if let Some(&o) = spec.blades[..i].iter().find(|&&o| !blades_commute(o, b)) {
            return bad(format!("{} and {} anticommute", blade_label(o), blade_label(b)));
        }
        if span_contains(&span, b) {
            return bad(format!("{} is generated by the other blades", blade_label(b)));
        }
        extend_span(&mut span, b);
    }
    Ok(())
}

/// All groups of k mutually commuting blades of square +1 that are
/// independent over GF(2), each given by its canonical generators: the
/// greedy basis of the group in (grade, mask) order. Deterministic order.
pub fn commuting_blade_sets(sig: AlgebraSig) -> Result<Vec<Vec<BladeMask>>> {
    let k = expected_factor_count(sig)? as usize;
    let candidates: Vec<BladeMask> =
        blade_order(sig.n()).iter().copied().filter(|&m| m != 0 && blade_square(m, sig) == 1).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    let mut span = vec![0];
    search_sets(&candidates, 0, k, &mut chosen, &mut span, &mut out);
    Ok(out)
}

fn search_sets(
    candidates: &[BladeMask],
    start: usize,
    k: usize,
    chosen: &mut Vec<BladeMask>,
    span: &mut Vec<BladeMask>,
    out: &mut Vec<Vec<BladeMask>>,
) {
    if chosen.len() == k {
        out.push(chosen.clone());
        return;
    }
    for (idx, &b) in candidates.iter().enumerate().skip(start) {
        if !chosen.iter().all(|&c| blades_commute(c, b)) {
            continue;
        }
        // b must be the smallest element of its coset b·span, which makes the
        // chosen list the greedy basis of the final group.
        let key = blade_key(b);
        if span.iter().any(|&s| s != 0 && blade_key(s ^ b) < key) || span_contains(span, b) {
            continue;
        }
        let mark = span.len();
        extend_span(span, b);
        chosen.push(b);
        search_sets(candidates, idx + 1, k, chosen, span, out);
        chosen.pop();
        span.truncate(mark);
    }
}

/// Every primitive idempotent of the recipe: each commuting set with all 2^k
/// sign patterns, `+` before `-`, first blade most significant.
pub fn enumerate_idempotents(sig: AlgebraSig) -> Result<Vec<IdempotentSpec>> {
    let sets = commuting_blade_sets(sig)?;
    let mut out = Vec::with_capacity(sets.len() << sets.first().map_or(0, |s| s.len()));
    for blades in sets {
        let k = blades.len();
        for pattern in 0..(1u32 << k) {
            let signs = (0..k).map(|i| if pattern >> (k - 1 - i) & 1 == 1 { -1 } else { 1 }).collect();
            out.push(IdempotentSpec { blades: blades.clone(), signs });
        }
    }
    Ok(out)
}

/// The first enumerated idempotent; used when no override is given.
pub fn default_idempotent(sig: AlgebraSig) -> Result<IdempotentSpec> {
    let sets = commuting_blade_sets(sig)?;
    let blades = sets.into_iter().next().ok_or_else(|| CliffError::Construction(format!("{sig} has no idempotent")))?;
    Ok(IdempotentSpec::positive(blades))
}

/// f = ∏ ½(1 + sᵢ·e_{αᵢ}), checked to be a nonzero idempotent.
pub fn primitive_idempotent(spec: &IdempotentSpec, sig: AlgebraSig) -> Result<Multivector> {
    validate_spec(spec, sig)?;
    let half = Scalar::frac(1, 2);
    let mut f = Multivector::one(sig);
    for (&b, &s) in spec.blades.iter().zip(&spec.signs) {
        let factor = Multivector::from_terms(sig, [(0, half), (b, half.scale_int(s as i64))]);
        f = f.gp(&factor)?;
    }
    if f.is_zero() || f.gp(&f)? != f {
        return Err(CliffError::InvalidIdempotent(format!("{spec} is not idempotent in {sig}")));
    }
    Ok(f)
}

/// Where e_B·f lands: e_B·f = sign·u_ideal·κ_k.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Slot {
    ideal: u32,
    k: u8,
    sign: i8,
}

/// A spinor representation of a simple algebra on the minimal left ideal
/// Cl·f, with generator matrices over K = f·Cl·f.
#[derive(Clone, Debug)]
pub struct SpinorRep {
    pub sig: AlgebraSig,
    pub spec: IdempotentSpec,
    pub f: Multivector,
    /// Blades A_i with ideal basis u_i = e_{A_i}·f.
    pub ideal_masks: Vec<BladeMask>,
    pub ring: Arc<KRing>,
    pub gens: Vec<MonoMatrix>,
    slots: Vec<Slot>,
}

struct Cosets<'a> {
    sig: AlgebraSig,
    centralizer: &'a [BladeMask],
    kslot: &'a [Option<(u8, i8)>],
}

impl Cosets<'_> {
    fn slots(&self, reps: &[BladeMask]) -> Vec<Slot> {
        let mut slots = vec![Slot { ideal: u32::MAX, k: 0, sign: 0 }; self.sig.dim()];
        for (i, &m) in reps.iter().enumerate() {
            for &h in self.centralizer {
                let (b, rho) = blade_mul(m, h, self.sig);
                let (a, sigma) = self.kslot[h as usize].expect("centralizer element has a K slot");
                slots[b as usize] = Slot { ideal: i as u32, k: a, sign: rho * sigma };
            }
        }
        debug_assert!(slots.iter().all(|s| s.sign != 0));
        slots
    }
}

fn generator_matrices(sig: AlgebraSig, ring: &Arc<KRing>, reps: &[BladeMask], slots: &[Slot]) -> Vec<MonoMatrix> {
    (1..=sig.n())
        .map(|i| {
            let cols = reps
                .iter()
                .map(|&a| {
                    let (b, s) = blade_mul(1 << (i - 1), a, sig);
                    let slot = slots[b as usize];
                    MonoEntry { row: slot.ideal as u16, k: slot.k, sign: s * slot.sign }
                })
                .collect();
            MonoMatrix::new(ring.clone(), cols)
        })
        .collect()
}

/// Symmetry of one generator under positional transpose: `Some(1)` for
/// symmetric, `Some(-1)` for skew, `None` for neither.
pub fn transpose_parity(m: &MonoMatrix) -> Option<i8> {
    let t = m.transpose();
    if t == *m {
        Some(1)
    } else if t == m.neg() {
        Some(-1)
    } else {
        None
    }
}

/// Searches right rescalings u_i → u_i·κ_{h_i} (h_0 = 0) that make every
/// generator symmetric or skew. Returns the first h in lexicographic order.
fn symmetrizing_shift(ring: &KRing, gens: &[MonoMatrix]) -> Option<Vec<usize>> {
    let side = gens.first().map_or(0, |g| g.side());
    let mut h = vec![0usize; side];
    let mut parity = vec![0i8; gens.len()];
    if shift_search(ring, gens, 1, &mut h, &mut parity) {
        Some(h)
    } else {
        None
    }
}

/// κ_{h_r}⁻¹·(±κ_k)·κ_{h_c} as (basis index, sign).
fn rescaled(ring: &KRing, e: MonoEntry, hr: usize, hc: usize) -> (usize, i8) {
    let inv_sign = if hr == 0 { 1 } else { -1 };
    let (a, s1) = ring.basis_product(hr, e.k as usize);
    let (b, s2) = ring.basis_product(a, hc);
    (b, inv_sign * s1 * s2 * e.sign)
}

fn shift_search(ring: &KRing, gens: &[MonoMatrix], next: usize, h: &mut [usize], parity: &mut [i8]) -> bool {
    if next == h.len() {
        return true;
    }
    let saved = parity.to_vec();
    'choice: for a in 0..ring.dim() {
        h[next] = a;
        parity.copy_from_slice(&saved);
        for (g, m) in gens.iter().enumerate() {
            let cols = m.cols();
            // Pairs (next, r) with r already assigned; π is an involution.
            let e = cols[next];
            let r = e.row as usize;
            if r > next {
                continue;
            }
            let rel = if r == next {
                1
            } else {
                let (k1, s1) = rescaled(ring, e, h[r], h[next]);
                let back = cols[r];
                debug_assert_eq!(back.row as usize, next);
                let (k2, s2) = rescaled(ring, back, h[next], h[r]);
                if k1 != k2 {
                    continue 'choice;
                }
                s1 * s2
            };
            if parity[g] == 0 {
                parity[g] = rel;
            } else if parity[g] != rel {
                continue 'choice;
            }
        }
        if shift_search(ring, gens, next + 1, h, parity) {
            return true;
        }
    }
    parity.copy_from_slice(&saved);
    false
}

pub fn build_rep(sig: AlgebraSig, spec: &IdempotentSpec) -> Result<SpinorRep> {
    if sig.n() > MAX_REP_GENERATORS {
        return Err(CliffError::Precondition(format!("representations are limited to {MAX_REP_GENERATORS} generators")));
    }
    let f = primitive_idempotent(spec, sig)?;
    let group = sign_group(spec, sig);
    let all = blade_order(sig.n());

    // K classes: blades commuting with every factor, modulo the sign group.
    let mut kslot: Vec<Option<(u8, i8)>> = vec![None; sig.dim()];
    let mut k_masks: Vec<BladeMask> = Vec::new();
    let mut centralizer: Vec<BladeMask> = Vec::new();
    for &m in all {
        if !spec.blades.iter().all(|&b| blades_commute(b, m)) {
            continue;
        }
        centralizer.push(m);
        if kslot[m as usize].is_some() {
            continue;
        }
        let a = k_masks.len() as u8;
        k_masks.push(m);
        for &(g, lam) in &group {
            let (b, tau) = blade_mul(m, g, sig);
            kslot[b as usize] = Some((a, tau * lam));
        }
    }
    let d = k_masks.len();
    let expected_ring = if sig.complex { RingTag::R } else { ring_of_type(sig.h_ring()) };
    if d as u32 != expected_ring.real_dim() {
        return Err(CliffError::InvalidIdempotent(format!(
            "{spec} gives a K of dimension {d} in {sig}; the idempotent is not primitive"
        )));
    }

    let mut table = vec![vec![(0usize, 0i8); d]; d];
    for a in 0..d {
        for b in 0..d {
            let (m, s) = blade_mul(k_masks[a], k_masks[b], sig);
            let (c, sigma) = kslot[m as usize].expect("centralizer is closed under products");
            table[a][b] = (c as usize, s * sigma);
        }
    }
    let ring = Arc::new(KRing::new(sig, k_masks, table)?);

    // Ideal basis: first blade of every coset of the centralizer.
    let mut seen = vec![false; sig.dim()];
    let mut ideal_masks = Vec::new();
    for &m in all {
        if seen[m as usize] {
            continue;
        }
        ideal_masks.push(m);
        for &h in &centralizer {
            seen[(m ^ h) as usize] = true;
        }
    }
    let side = ideal_masks.len();
    if (side * d) as u64 != 1u64 << (sig.n() - spec.blades.len() as u32) {
        return Err(CliffError::RankDeficiency(format!("ideal of {side} × {d} in {sig}")));
    }
    let cosets = Cosets { sig, centralizer: &centralizer, kslot: &kslot };
    let mut slots = cosets.slots(&ideal_masks);
    let mut gens = generator_matrices(sig, &ring, &ideal_masks, &slots);

    // Over ℂ and ℍ the first representatives may leave a generator neither
    // symmetric nor skew; move to other representatives of the same cosets.
    if d > 1 && gens.iter().any(|g| transpose_parity(g).is_none()) {
        if let Some(h) = symmetrizing_shift(&ring, &gens) {
            for (m, &a) in ideal_masks.iter_mut().zip(&h) {
                *m ^= ring.masks[a];
            }
            slots = cosets.slots(&ideal_masks);
            gens = generator_matrices(sig, &ring, &ideal_masks, &slots);
            debug_assert!(gens.iter().all(|g| transpose_parity(g).is_some()));
        }
    }

    Ok(SpinorRep { sig, spec: spec.clone(), f, ideal_masks, ring, gens, slots })
}

impl SpinorRep {
    pub fn side(&self) -> usize {
        self.ideal_masks.len()
    }

    pub fn ideal_basis(&self) -> Vec<Multivector> {
        self.ideal_masks.iter().map(|&m| &Multivector::blade(self.sig, m) * &self.f).collect()
    }

    pub fn k_basis(&self) -> Vec<Multivector> {
        self.ring.masks.iter().map(|&m| &Multivector::blade(self.sig, m) * &self.f).collect()
    }

    pub fn k_labels(&self) -> Vec<String> {
        self.ring.labels()
    }

    fn add_blade(&self, m: &mut KMatrix, blade: BladeMask, coeff: Scalar) {
        for (j, &a) in self.ideal_masks.iter().enumerate() {
            let (b, s) = blade_mul(blade, a, self.sig);
            let slot = self.slots[b as usize];
            let entry = KElem::basis(slot.k as usize).scale(coeff.scale_int((s * slot.sign) as i64));
            let cell = m.get_mut(slot.ideal as usize, j);
            *cell = cell.add(&entry);
        }
    }

    /// Dense form of the generator matrices.
    pub fn generator_matrices(&self) -> Vec<KMatrix> {
        self.gens.iter().map(MatrixOps::to_kmatrix).collect()
    }

    /// Matrix of left multiplication by x on the ideal, in K coordinates:
    /// x·u_j = Σ_i u_i·M_ij.
    pub fn spinor_matrix(&self, x: &Multivector) -> Result<KMatrix> {
        if x.sig() != self.sig {
            return Err(CliffError::SignatureMismatch(x.sig(), self.sig));
        }
        let mut m = KMatrix::zero(self.ring.clone(), self.side());
        for &(blade, c) in x.terms() {
            self.add_blade(&mut m, blade, c);
        }
        Ok(m)
    }

    /// Element of the ideal with K coordinates given column-wise by `col`:
    /// Σ_i u_i·col_i, used to check the representation against the algebra.
    pub fn ideal_element(&self, col: &[KElem]) -> Multivector {
        let ideal = self.ideal_basis();
        let kb = self.k_basis();
        let mut acc = Multivector::zero(self.sig);
        for (u, k) in ideal.iter().zip(col) {
            for (a, kappa) in kb.iter().enumerate() {
                if !k.c[a].is_zero() {
                    acc = &acc + &(u * kappa).scale(k.c[a]);
                }
            }
        }
        acc
    }

    pub fn dump(&self) -> RepDump {
        RepDump {
            p: self.sig.p,
            q: self.sig.q,
            complex: self.sig.complex,
            idempotent: IdempotentDesc::new(&self.spec, &self.f),
            ideal_basis: self.ideal_masks.iter().map(|&m| blade_label(m)).collect(),
            k_basis: self.k_labels(),
            generators: self.gens.iter().map(|g| g.to_kmatrix().entry_strings()).collect(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IdempotentDesc {
    pub blades: Vec<String>,
    pub signs: String,
    pub f: String,
}

impl IdempotentDesc {
    pub fn new(spec: &IdempotentSpec, f: &Multivector) -> Self {
        IdempotentDesc { blades: spec.blade_labels(), signs: spec.sign_string(), f: f.to_string() }
    }
}

/// JSON form of a representation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RepDump {
    pub p: u32,
    pub q: u32,
    pub complex: bool,
    pub idempotent: IdempotentDesc,
    pub ideal_basis: Vec<String>,
    pub k_basis: Vec<String>,
    pub generators: Vec<Vec<Vec<String>>>,
}

/// Generators of C_{2m} as Kronecker products of Pauli matrices: the first m
/// are symmetric (σ₃…σ₃σ₁), the last m skew (σ₃…σ₃σ₂).
pub fn brauer_weyl_generators(n: u32) -> Result<Vec<KMatrix>> {
    if n % 2 == 1 {
        return Err(CliffError::Precondition(format!("C{n} has odd dimension")));
    }
    let m = (n / 2) as usize;
    let sig = AlgebraSig::complex(n);
    let ring = Arc::new(KRing::scalar_field(sig));
    let zero = Scalar::zero();
    let one = Scalar::one();
    let i = Scalar::i();
    let id = [[one, zero], [zero, one]];
    let s1 = [[zero, one], [one, zero]];
    let s2 = [[zero, -i], [i, zero]];
    let s3 = [[one, zero], [zero, -one]];
    let side = 1usize << m;
    let build = |factors: Vec<[[Scalar; 2]; 2]>| {
        let mut mat = KMatrix::zero(ring.clone(), side);
        for r in 0..side {
            for c in 0..side {
                let mut v = one;
                for (pos, fct) in factors.iter().enumerate() {
                    let shift = m - 1 - pos;
                    v *= fct[(r >> shift) & 1][(c >> shift) & 1];
                    if v.is_zero() {
                        break;
                    }
                }
                *mat.get_mut(r, c) = KElem::scalar(v);
            }
        }
        mat
    };
    let mut gens = Vec::with_capacity(n as usize);
    for pauli in [s1, s2] {
        for j in 0..m {
            let factors = (0..m).map(|pos| if pos < j { s3 } else if pos == j { pauli } else { id }).collect();
            gens.push(build(factors));
        }
    }
    Ok(gens)
}
