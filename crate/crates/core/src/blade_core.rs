//! Multivector arithmetic over Cl(p,q) and the complex algebras Cₙ.
//!
//! Generators e₁…e_p square to +1 and e_{p+1}…e_{p+q} square to −1. In
//! complex mode every generator squares to +1. Blades are bitmasks with bit
//! `i-1` standing for e_i; a blade is always stored in ascending index order.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{CliffError, Result};
use crate::scalar::Scalar;

pub type BladeMask = u32;

/// Largest supported number of generators.
pub const MAX_GENERATORS: u32 = 24;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct AlgebraSig {
    pub p: u32,
    pub q: u32,
    pub complex: bool,
}

impl AlgebraSig {
    pub fn real(p: u32, q: u32) -> Self {
        assert!(p + q <= MAX_GENERATORS, "at most {MAX_GENERATORS} generators");
        AlgebraSig { p, q, complex: false }
    }

    pub fn complex(n: u32) -> Self {
        assert!(n <= MAX_GENERATORS, "at most {MAX_GENERATORS} generators");
        AlgebraSig { p: n, q: 0, complex: true }
    }

    pub fn n(&self) -> u32 {
        self.p + self.q
    }

    pub fn dim(&self) -> usize {
        1usize << self.n()
    }

    pub fn full_mask(&self) -> BladeMask {
        if self.n() == 32 {
            u32::MAX
        } else {
            (1u32 << self.n()) - 1
        }
    }

    /// Bits of the generators squaring to −1.
    pub fn neg_mask(&self) -> BladeMask {
        if self.complex {
            0
        } else {
            self.full_mask() & !((1u32 << self.p) - 1)
        }
    }

    /// (p − q) mod 8 for real algebras; n mod 2 for complex ones.
    pub fn h_ring(&self) -> u32 {
        if self.complex {
            self.n() % 2
        } else {
            (self.p as i64 - self.q as i64).rem_euclid(8) as u32
        }
    }

    /// Square of the generator e_i (1-based).
    pub fn generator_square(&self, i: u32) -> i8 {
        if !self.complex && i > self.p {
            -1
        } else {
            1
        }
    }

    pub fn contains(&self, mask: BladeMask) -> bool {
        mask & !self.full_mask() == 0
    }
}

impl fmt::Display for AlgebraSig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complex {
            write!(f, "C{}", self.n())
        } else {
            write!(f, "Cl({},{})", self.p, self.q)
        }
    }
}

pub fn grade(mask: BladeMask) -> u32 {
    mask.count_ones()
}

/// Parity of the number of transpositions needed to bring `a·b` into
/// ascending order.
fn reorder_is_odd(a: BladeMask, b: BladeMask) -> bool {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    swaps % 2 == 1
}

/// Product of two basis blades: the resulting blade and its sign.
pub fn blade_mul(a: BladeMask, b: BladeMask, sig: AlgebraSig) -> (BladeMask, i8) {
    let mut odd = reorder_is_odd(a, b);
    if (a & b & sig.neg_mask()).count_ones() % 2 == 1 {
        odd = !odd;
    }
    (a ^ b, if odd { -1 } else { 1 })
}

pub fn blade_square(a: BladeMask, sig: AlgebraSig) -> i8 {
    blade_mul(a, a, sig).1
}

/// Two blades commute iff |A|·|B| − |A∩B| is even.
pub fn blades_commute(a: BladeMask, b: BladeMask) -> bool {
    (grade(a) * grade(b) + grade(a & b)).is_multiple_of(2)
}

/// Total order on blades used everywhere a deterministic scan is needed:
/// ascending grade, then ascending mask.
pub fn blade_key(mask: BladeMask) -> (u32, BladeMask) {
    (grade(mask), mask)
}

/// All blades of an n-generator algebra in (grade, mask) order.
/// All masks of an n-generator algebra in (grade, mask) order, cached per n.
pub fn blade_order(n: u32) -> &'static [BladeMask] {
    static CACHE: [OnceLock<Vec<BladeMask>>; 25] = [const { OnceLock::new() }; 25];
    assert!(n <= 24, "blade enumeration is limited to 24 generators");
    CACHE[n as usize].get_or_init(|| {
        let mut all: Vec<BladeMask> = (0..(1u64 << n)).map(|m| m as BladeMask).collect();
        all.sort_by_key(|&m| blade_key(m));
        all
    })
}

pub fn blade_indices(mask: BladeMask) -> Vec<u32> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// `Id` for the unit, `e134` for small indices, `e[3,11]` once an index
/// exceeds 9.
pub fn blade_label(mask: BladeMask) -> String {
    if mask == 0 {
        return "Id".to_string();
    }
    let idx = blade_indices(mask);
    if idx.iter().all(|&i| i <= 9) {
        let digits: String = idx.iter().map(|i| char::from(b'0' + *i as u8)).collect();
        format!("e{digits}")
    } else {
        let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
        format!("e[{}]", parts.join(","))
    }
}

pub fn parse_blade(text: &str) -> Result<BladeMask> {
    let t = text.trim();
    let bad = || CliffError::Parse(format!("invalid blade `{text}`"));
    if t == "Id" || t == "1" {
        return Ok(0);
    }
    let body = t.strip_prefix('e').ok_or_else(bad)?;
    let indices: Vec<u32> = if let Some(list) = body.strip_prefix('[') {
        let list = list.strip_suffix(']').ok_or_else(bad)?;
        list.split(',')
            .map(|s| s.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<_>>()?
    } else {
        if body.is_empty() {
            return Err(bad());
        }
        body.chars()
            .map(|c| c.to_digit(10).ok_or_else(bad))
            .collect::<Result<_>>()?
    };
    let mut mask = 0u32;
    let mut last = 0u32;
    for i in indices {
        if i == 0 || i > MAX_GENERATORS || i <= last {
            return Err(bad());
        }
        mask |= 1 << (i - 1);
        last = i;
    }
    Ok(mask)
}

/// Element of the algebra: blade terms sorted by mask, no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Multivector {
    sig: AlgebraSig,
    terms: Vec<(BladeMask, Scalar)>,
}

impl Multivector {
    pub fn zero(sig: AlgebraSig) -> Self {
        Multivector { sig, terms: Vec::new() }
    }

    pub fn scalar(sig: AlgebraSig, s: Scalar) -> Self {
        Multivector::from_terms(sig, [(0, s)])
    }

    pub fn one(sig: AlgebraSig) -> Self {
        Multivector::scalar(sig, Scalar::one())
    }

    pub fn blade(sig: AlgebraSig, mask: BladeMask) -> Self {
        assert!(sig.contains(mask), "blade outside {sig}");
        Multivector { sig, terms: vec![(mask, Scalar::one())] }
    }

    /// The generator e_i, 1-based.
    pub fn generator(sig: AlgebraSig, i: u32) -> Self {
        assert!(i >= 1 && i <= sig.n(), "generator index out of range");
        Multivector::blade(sig, 1 << (i - 1))
    }

    /// Canonicalizes arbitrary terms: sums duplicates and drops zeros.
    pub fn from_terms(sig: AlgebraSig, terms: impl IntoIterator<Item = (BladeMask, Scalar)>) -> Self {
        let mut raw: Vec<(BladeMask, Scalar)> = terms.into_iter().collect();
        for (m, _) in &raw {
            assert!(sig.contains(*m), "blade outside {sig}");
        }
        Multivector { sig, terms: merge_sorted(&mut raw) }
    }

    pub fn sig(&self) -> AlgebraSig {
        self.sig
    }

    pub fn terms(&self) -> &[(BladeMask, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: BladeMask) -> Scalar {
        match self.terms.binary_search_by_key(&mask, |t| t.0) {
            Ok(i) => self.terms[i].1,
            Err(_) => Scalar::zero(),
        }
    }

    pub fn scalar_part(&self) -> Scalar {
        self.coeff(0)
    }

    pub fn scale(&self, s: Scalar) -> Self {
        if s.is_zero() {
            return Multivector::zero(self.sig);
        }
        Multivector { sig: self.sig, terms: self.terms.iter().map(|&(m, c)| (m, c * s)).collect() }
    }

    fn check_sig(&self, other: &Multivector) -> Result<()> {
        if self.sig != other.sig {
            return Err(CliffError::SignatureMismatch(self.sig, other.sig));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Multivector) -> Result<Self> {
        self.check_sig(other)?;
        let mut raw: Vec<(BladeMask, Scalar)> =
            self.terms.iter().chain(other.terms.iter()).copied().collect();
        Ok(Multivector { sig: self.sig, terms: merge_sorted(&mut raw) })
    }

    /// Geometric product.
    pub fn gp(&self, other: &Multivector) -> Result<Self> {
        self.check_sig(other)?;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(ma, ca) in &self.terms {
            for &(mb, cb) in &other.terms {
                let (m, s) = blade_mul(ma, mb, self.sig);
                raw.push((m, (ca * cb).scale_int(s as i64)));
            }
        }
        Ok(Multivector { sig: self.sig, terms: merge_sorted(&mut raw) })
    }

    fn map_grades(&self, sign: impl Fn(u32) -> bool) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|&(m, c)| (m, if sign(grade(m)) { -c } else { c }))
            .collect();
        Multivector { sig: self.sig, terms }
    }

    /// x ↦ x★: grade-k parts scaled by (−1)^k.
    pub fn grade_involution(&self) -> Self {
        self.map_grades(|k| k % 2 == 1)
    }

    /// x ↦ x̃: grade-k parts scaled by (−1)^{k(k−1)/2}.
    pub fn reversion(&self) -> Self {
        self.map_grades(|k| (k * k.saturating_sub(1) / 2) % 2 == 1)
    }

    /// x ↦ x̃★: grade-k parts scaled by (−1)^{k(k+1)/2}.
    pub fn conjugation(&self) -> Self {
        self.map_grades(|k| (k * (k + 1) / 2) % 2 == 1)
    }

    /// Inverse of a single signed blade; `None` for anything else.
    pub fn blade_inverse(&self) -> Option<Self> {
        match self.terms.as_slice() {
            [(m, c)] => {
                let s = blade_square(*m, self.sig);
                let inv = c.inv()?.scale_int(s as i64);
                Some(Multivector { sig: self.sig, terms: vec![(*m, inv)] })
            }
            _ => None,
        }
    }
}

/// Sorts by mask, sums equal masks, drops zeros.
fn merge_sorted(raw: &mut Vec<(BladeMask, Scalar)>) -> Vec<(BladeMask, Scalar)> {
    raw.sort_unstable_by_key(|t| t.0);
    let mut out: Vec<(BladeMask, Scalar)> = Vec::with_capacity(raw.len());
    for &(m, c) in raw.iter() {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 += c,
            _ => out.push((m, c)),
        }
    }
    out.retain(|t| !t.1.is_zero());
    out
}

impl std::ops::Mul for &Multivector {
    type Output = Multivector;
    /// Panics on signature mismatch; use [`Multivector::gp`] for a checked product.
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.gp(rhs).expect("geometric product of mismatched algebras")
    }
}

impl std::ops::Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.try_add(rhs).expect("sum of mismatched algebras")
    }
}

impl std::ops::Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.try_add(&-rhs).expect("difference of mismatched algebras")
    }
}

impl std::ops::Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-Scalar::one())
    }
}

/// ω = e₁e₂…e_n.
pub fn volume_element(sig: AlgebraSig) -> Multivector {
    Multivector::blade(sig, sig.full_mask())
}

/// ω² = (−1)^{n(n−1)/2 + q}; equivalently +1 iff (p−q) mod 8 ∈ {0,1,4,5}.
pub fn omega_square(sig: AlgebraSig) -> i8 {
    blade_square(sig.full_mask(), sig)
}

/// Basis of the center: {1} for even n, {1, ω} for odd n.
pub fn center_basis(sig: AlgebraSig) -> Vec<Multivector> {
    let mut out = vec![Multivector::one(sig)];
    if sig.n() % 2 == 1 {
        out.push(volume_element(sig));
    }
    out
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<&(BladeMask, Scalar)> = self.terms.iter().collect();
        ordered.sort_by_key(|t| blade_key(t.0));
        for (i, &&(m, c)) in ordered.iter().enumerate() {
            let negative = if c.re.is_zero() { c.im.is_negative() } else { c.is_real() && c.re.is_negative() };
            let mag = if negative { -c } else { c };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let label = blade_label(m);
            if mag.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{mag}*{label}")?;
            }
        }
        Ok(())
    }
}

/// Splits a sum into signed terms at top-level `+`/`-`.
fn split_terms(text: &str) -> Vec<(bool, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    let mut negative = false;
    let bytes = text.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                let piece = text[start..i].trim();
                // A sign directly after `*` or at the very start belongs to the term.
                let prev = text[..i].trim_end();
                if piece.is_empty() && (prev.is_empty() || prev.ends_with('*')) && start == i {
                    if b == b'-' {
                        negative = !negative;
                    }
                    start = i + 1;
                    continue;
                }
                if !piece.is_empty() {
                    out.push((negative, piece));
                }
                negative = b == b'-';
                start = i + 1;
            }
            _ => {}
        }
    }
    let piece = text[start..].trim();
    if !piece.is_empty() {
        out.push((negative, piece));
    }
    out
}

fn parse_term(text: &str) -> Result<(BladeMask, Scalar)> {
    let t = text.trim();
    if let Some(pos) = t.rfind('*') {
        let coeff: Scalar = t[..pos].parse()?;
        return Ok((parse_blade(&t[pos + 1..])?, coeff));
    }
    if t.starts_with('e') || t == "Id" {
        return Ok((parse_blade(t)?, Scalar::one()));
    }
    Ok((0, t.parse()?))
}

/// Parses the textual form produced by `Display`, e.g. `1/2*Id + 1/2*e234`.
pub fn parse_multivector(text: &str, sig: AlgebraSig) -> Result<Multivector> {
    let t = text.trim();
    if t == "0" {
        return Ok(Multivector::zero(sig));
    }
    let pieces = split_terms(t);
    if pieces.is_empty() {
        return Err(CliffError::Parse(format!("empty multivector `{text}`")));
    }
    let mut raw = Vec::with_capacity(pieces.len());
    for (negative, piece) in pieces {
        let (m, c) = parse_term(piece)?;
        if !sig.contains(m) {
            return Err(CliffError::Parse(format!("blade {} outside {sig}", blade_label(m))));
        }
        if !sig.complex && !c.is_real() {
            return Err(CliffError::Parse(format!("complex coefficient in real algebra {sig}")));
        }
        raw.push((m, if negative { -c } else { c }));
    }
    Ok(Multivector::from_terms(sig, raw))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_squares_follow_signature() {
        let sig = AlgebraSig::real(3, 1);
        assert_eq!(blade_mul(0b0001, 0b0001, sig), (0, 1));
        assert_eq!(blade_mul(0b1000, 0b1000, sig), (0, -1));
        let e2 = AlgebraSig::real(2, 0);
        assert_eq!(blade_mul(0b11, 0b11, e2), (0, -1));
    }

    #[test]
    fn anticommuting_generators() {
        let sig = AlgebraSig::real(2, 1);
        assert_eq!(blade_mul(0b001, 0b010, sig), (0b011, 1));
        assert_eq!(blade_mul(0b010, 0b001, sig), (0b011, -1));
    }

    #[test]
    fn labels_and_parsing() {
        assert_eq!(blade_label(0), "Id");
        assert_eq!(blade_label(0b1110), "e234");
        assert_eq!(blade_label((1 << 2) | (1 << 10)), "e[3,11]");
        assert_eq!(parse_blade("e[3,11]").unwrap(), (1 << 2) | (1 << 10));
        assert_eq!(parse_blade("e34").unwrap(), 0b1100);
        assert!(parse_blade("e43").is_err());
        assert!(parse_blade("x1").is_err());
    }

    #[test]
    fn text_form() {
        let sig = AlgebraSig::real(1, 3);
        let f = parse_multivector("1/2*Id + 1/2*e234", sig).unwrap();
        assert_eq!(f.to_string(), "1/2*Id + 1/2*e234");
        let g = parse_multivector("-e2 - 3/4*e13 + 2", sig).unwrap();
        assert_eq!(g.to_string(), "2*Id - e2 - 3/4*e13");
        assert_eq!(parse_multivector("0", sig).unwrap(), Multivector::zero(sig));
        let c = AlgebraSig::complex(2);
        let z = parse_multivector("(1/2+1/2i)*e1 - i*e12", c).unwrap();
        assert_eq!(parse_multivector(&z.to_string(), c).unwrap(), z);
        assert!(parse_multivector("i*e1", sig).is_err());
    }
}
