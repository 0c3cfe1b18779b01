//! Mod-8 structure theory: division rings, simplicity, Radon–Hurwitz counts,
//! the two-summand splitting of semisimple types and the complex reduction of
//! types 3 and 7.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::blade_core::{blade_mul, AlgebraSig, Multivector};
use crate::error::{CliffError, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingTag {
    #[serde(rename = "R")]
    R,
    #[serde(rename = "C")]
    C,
    #[serde(rename = "H")]
    H,
    #[serde(rename = "R⊕R")]
    RR,
    #[serde(rename = "H⊕H")]
    HH,
}

impl RingTag {
    /// Real dimension of the division ring (of one summand for ⊕ types).
    pub fn real_dim(self) -> u32 {
        match self {
            RingTag::R | RingTag::RR => 1,
            RingTag::C => 2,
            RingTag::H | RingTag::HH => 4,
        }
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RingTag::R => "R",
            RingTag::C => "C",
            RingTag::H => "H",
            RingTag::RR => "R⊕R",
            RingTag::HH => "H⊕H",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StructureInfo {
    /// (p − q) mod 8.
    pub h_type: u32,
    pub ring: RingTag,
    pub simple: bool,
    pub k_idem: u32,
    /// Real dimension of a minimal left ideal, 2^{p+q−k_idem}.
    pub ideal_real_dim: u64,
    /// Side of the matrix algebra over the division ring (per summand for
    /// semisimple types).
    pub matrix_side: u64,
}

pub fn ring_of_type(h_type: u32) -> RingTag {
    match h_type % 8 {
        0 | 2 => RingTag::R,
        3 | 7 => RingTag::C,
        4 | 6 => RingTag::H,
        1 => RingTag::RR,
        _ => RingTag::HH,
    }
}

/// r_0…r_7 = 0,1,2,2,3,3,3,3 and r_{i+8} = r_i + 4 in both directions.
pub fn radon_hurwitz(i: i64) -> i64 {
    const TABLE: [i64; 8] = [0, 1, 2, 2, 3, 3, 3, 3];
    TABLE[i.rem_euclid(8) as usize] + 4 * i.div_euclid(8)
}

/// k = q − r_{q−p}: the number of factors in a primitive idempotent.
pub fn idem_factor_count(p: u32, q: u32) -> u32 {
    let k = q as i64 - radon_hurwitz(q as i64 - p as i64);
    debug_assert!(k >= 0);
    k as u32
}

pub fn mod8_type(p: u32, q: u32) -> StructureInfo {
    let h_type = AlgebraSig::real(p, q).h_ring();
    let ring = ring_of_type(h_type);
    let k_idem = idem_factor_count(p, q);
    let ideal_real_dim = 1u64 << (p + q - k_idem);
    StructureInfo {
        h_type,
        ring,
        simple: !matches!(h_type, 1 | 5),
        k_idem,
        ideal_real_dim,
        matrix_side: ideal_real_dim / ring.real_dim() as u64,
    }
}

/// Structure of Cₙ: simple for even n (M_{2^{n/2}}(ℂ)), a sum of two copies of
/// C_{n−1} for odd n.
pub fn complex_structure(n: u32) -> StructureInfo {
    let m = n / 2;
    StructureInfo {
        h_type: n % 2,
        ring: RingTag::C,
        simple: n.is_multiple_of(2),
        k_idem: m,
        ideal_real_dim: 2u64 << (n - m),
        matrix_side: 1u64 << m,
    }
}

/// The two ways of splitting a semisimple Cl(p,q) into equal summands.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Decomposition {
    /// Cl(p, q−1) ⊕ Cl(p, q−1), available for q ≥ 1.
    pub variant_a: Option<AlgebraSig>,
    /// Cl(q, p−1) ⊕ Cl(q, p−1), available for p ≥ 1.
    pub variant_b: Option<AlgebraSig>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DecompositionVariant {
    #[serde(rename = "D1")]
    A,
    #[serde(rename = "D1'")]
    B,
}

impl fmt::Display for DecompositionVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecompositionVariant::A => "D1",
            DecompositionVariant::B => "D1'",
        })
    }
}

impl Decomposition {
    pub fn variants(&self) -> Vec<(DecompositionVariant, AlgebraSig)> {
        let mut out = Vec::new();
        if let Some(a) = self.variant_a {
            out.push((DecompositionVariant::A, a));
        }
        if let Some(b) = self.variant_b {
            out.push((DecompositionVariant::B, b));
        }
        out
    }
}

pub fn semisimple_decomposition(p: u32, q: u32) -> Result<Decomposition> {
    let t = AlgebraSig::real(p, q).h_ring();
    if !matches!(t, 1 | 5) {
        return Err(CliffError::Precondition(format!("Cl({p},{q}) is simple (type {t})")));
    }
    Ok(Decomposition {
        variant_a: (q >= 1).then(|| AlgebraSig::real(p, q - 1)),
        variant_b: (p >= 1).then(|| AlgebraSig::real(q, p - 1)),
    })
}

/// Images inside Cl(p,q) of the generators of one summand algebra, realized
/// in the even subalgebra: e_i·e_n for variant A, e_i·e_1 for variant B.
pub fn summand_generator_images(p: u32, q: u32, variant: DecompositionVariant) -> Result<Vec<Multivector>> {
    let sig = AlgebraSig::real(p, q);
    let n = sig.n();
    let (pivot, rest): (u32, Vec<u32>) = match variant {
        DecompositionVariant::A if q >= 1 => (n, (1..n).collect()),
        DecompositionVariant::B if p >= 1 => (1, (2..=n).collect()),
        _ => return Err(CliffError::Precondition(format!("variant {variant} unavailable for Cl({p},{q})"))),
    };
    let pv = Multivector::generator(sig, pivot);
    let mut images: Vec<(i8, Multivector)> = rest
        .into_iter()
        .map(|i| {
            let x = &Multivector::generator(sig, i) * &pv;
            (blade_mul(x.terms()[0].0, x.terms()[0].0, sig).1, x)
        })
        .collect();
    // Present the images in signature order: +1 squares first.
    images.sort_by_key(|(s, _)| -*s);
    Ok(images.into_iter().map(|(_, x)| x).collect())
}

/// The two central idempotents ½(1 ± ω) splitting a semisimple algebra.
pub fn central_idempotents(p: u32, q: u32) -> Result<[Multivector; 2]> {
    semisimple_decomposition(p, q)?;
    let sig = AlgebraSig::real(p, q);
    let half = Scalar::frac(1, 2);
    let one = Multivector::scalar(sig, half);
    let w = crate::blade_core::volume_element(sig).scale(half);
    Ok([&one + &w, &one - &w])
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ComplexReduction {
    /// n − 1 = p + q − 1: the complex algebra C_{n−1} isomorphic to Cl(p,q).
    pub complex_n: u32,
    pub m: u32,
    pub m_even: bool,
}

/// Cl(p,q) ≅ C_{p+q−1} for types 3 and 7.
pub fn complexification_iso(p: u32, q: u32) -> Result<ComplexReduction> {
    let t = AlgebraSig::real(p, q).h_ring();
    if !matches!(t, 3 | 7) {
        return Err(CliffError::Precondition(format!("Cl({p},{q}) is type {t}, not 3 or 7")));
    }
    let complex_n = p + q - 1;
    let m = complex_n / 2;
    Ok(ComplexReduction { complex_n, m, m_even: m.is_multiple_of(2) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radon_hurwitz_values() {
        let first: Vec<i64> = (0..8).map(radon_hurwitz).collect();
        assert_eq!(first, vec![0, 1, 2, 2, 3, 3, 3, 3]);
        assert_eq!(radon_hurwitz(8), 4);
        assert_eq!(radon_hurwitz(-2), -1);
        assert_eq!(radon_hurwitz(-8), -4);
    }

    #[test]
    fn idempotent_counts() {
        assert_eq!(idem_factor_count(3, 1), 2);
        assert_eq!(idem_factor_count(1, 3), 1);
        assert_eq!(idem_factor_count(0, 8), 4);
        assert_eq!(idem_factor_count(2, 0), 1);
    }

    #[test]
    fn types_and_rings() {
        let s = mod8_type(3, 1);
        assert_eq!((s.h_type, s.ring, s.simple), (2, RingTag::R, true));
        assert_eq!(s.matrix_side, 4);
        let s = mod8_type(1, 3);
        assert_eq!((s.h_type, s.ring, s.simple, s.matrix_side), (6, RingTag::H, true, 2));
        let s = mod8_type(0, 3);
        assert_eq!((s.h_type, s.ring, s.simple), (5, RingTag::HH, false));
    }

    #[test]
    fn decompositions() {
        let d = semisimple_decomposition(0, 3).unwrap();
        assert_eq!(d.variant_a, Some(AlgebraSig::real(0, 2)));
        assert_eq!(d.variant_b, None);
        let d = semisimple_decomposition(1, 0).unwrap();
        assert_eq!((d.variant_a, d.variant_b), (None, Some(AlgebraSig::real(0, 0))));
        let d = semisimple_decomposition(2, 1).unwrap();
        assert_eq!(d.variant_a, Some(AlgebraSig::real(2, 0)));
        assert_eq!(d.variant_b, Some(AlgebraSig::real(1, 1)));
        assert!(semisimple_decomposition(3, 1).is_err());
    }

    #[test]
    fn complex_reduction() {
        let r = complexification_iso(3, 0).unwrap();
        assert_eq!((r.complex_n, r.m, r.m_even), (2, 1, false));
        let r = complexification_iso(4, 1).unwrap();
        assert_eq!((r.complex_n, r.m, r.m_even), (4, 2, true));
        assert!(complexification_iso(0, 3).is_err());
    }
}
