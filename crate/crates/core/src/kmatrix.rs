//! Matrices over the division ring K = f·Cl·f.
//!
//! A K element is a coordinate vector over the basis κ₀ = f, κ₁, … of K.
//! Every product κ_a·κ_b is ±κ_c, so the ring is stored as a signed
//! permutation table. Matrix products keep the order of K factors:
//! (XY)_ij = Σ_l X_il·Y_lj.

use std::fmt;
use std::sync::Arc;

use crate::blade_core::{AlgebraSig, BladeMask, Multivector};
use crate::error::{CliffError, Result};
use crate::scalar::Scalar;
use crate::structure::RingTag;

pub const MAX_K_DIM: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KRing {
    pub tag: RingTag,
    pub sig: AlgebraSig,
    /// Blade representing each basis element: κ_a = e_{masks[a]}·f.
    pub masks: Vec<BladeMask>,
    table: Vec<Vec<(usize, i8)>>,
}

impl KRing {
    /// Builds a ring from its basis blades and signed product table.
    /// Checks that κ₀ is the unit and that every other basis element squares
    /// to −κ₀, which is what makes [`KElem::inverse`] valid.
    pub fn new(sig: AlgebraSig, masks: Vec<BladeMask>, table: Vec<Vec<(usize, i8)>>) -> Result<Self> {
        let d = masks.len();
        let tag = match d {
            1 => RingTag::R,
            2 => RingTag::C,
            4 => RingTag::H,
            _ => return Err(CliffError::RankDeficiency(format!("K of dimension {d}"))),
        };
        if table.len() != d || table.iter().any(|r| r.len() != d) {
            return Err(CliffError::Construction("malformed K product table".into()));
        }
        for a in 0..d {
            if table[0][a] != (a, 1) || table[a][0] != (a, 1) {
                return Err(CliffError::Construction("κ₀ is not the unit of K".into()));
            }
            if a > 0 && table[a][a] != (0, -1) {
                return Err(CliffError::Construction(format!("κ{a} does not square to −1")));
            }
        }
        Ok(KRing { tag, sig, masks, table })
    }

    /// K = ℝ (or ℂ for complex algebras, where scalars are already complex).
    pub fn scalar_field(sig: AlgebraSig) -> Self {
        KRing { tag: if sig.complex { RingTag::C } else { RingTag::R }, sig, masks: vec![0], table: vec![vec![(0, 1)]] }
    }

    pub fn dim(&self) -> usize {
        self.masks.len()
    }

    pub fn basis_product(&self, a: usize, b: usize) -> (usize, i8) {
        self.table[a][b]
    }

    pub fn labels(&self) -> Vec<String> {
        self.masks.iter().map(|&m| crate::blade_core::blade_label(m)).collect()
    }

    pub fn mul(&self, x: &KElem, y: &KElem) -> KElem {
        let d = self.dim();
        if d == 1 {
            return KElem::scalar(x.c[0] * y.c[0]);
        }
        let mut out = KElem::zero();
        for a in 0..d {
            if x.c[a].is_zero() {
                continue;
            }
            for b in 0..d {
                if y.c[b].is_zero() {
                    continue;
                }
                let (c, s) = self.table[a][b];
                out.c[c] += (x.c[a] * y.c[b]).scale_int(s as i64);
            }
        }
        out
    }

    /// Whether x commutes with every element of K.
    pub fn is_central(&self, x: &KElem) -> bool {
        (0..self.dim()).all(|b| {
            let k = KElem::basis(b);
            self.mul(x, &k) == self.mul(&k, x)
        })
    }

    /// The multivector e_{C_a} coefficients as an element of the algebra.
    pub fn to_multivector(&self, x: &KElem) -> Multivector {
        Multivector::from_terms(self.sig, (0..self.dim()).map(|a| (self.masks[a], x.c[a])))
    }

    /// Text form of an entry, e.g. `Id`, `-e2`, `1/2*Id + e23`, `i*Id`.
    pub fn format(&self, x: &KElem) -> String {
        self.to_multivector(x).to_string()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct KElem {
    pub c: [Scalar; MAX_K_DIM],
}

impl KElem {
    pub fn zero() -> Self {
        KElem::default()
    }

    pub fn scalar(s: Scalar) -> Self {
        let mut e = KElem::zero();
        e.c[0] = s;
        e
    }

    pub fn one() -> Self {
        KElem::scalar(Scalar::one())
    }

    pub fn basis(a: usize) -> Self {
        KElem::signed_basis(a, 1)
    }

    pub fn signed_basis(a: usize, sign: i8) -> Self {
        let mut e = KElem::zero();
        e.c[a] = Scalar::int(sign as i64);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    pub fn neg(&self) -> Self {
        KElem { c: self.c.map(|s| -s) }
    }

    pub fn add(&self, other: &KElem) -> Self {
        let mut out = *self;
        for (o, s) in out.c.iter_mut().zip(other.c.iter()) {
            *o += *s;
        }
        out
    }

    pub fn scale(&self, s: Scalar) -> Self {
        KElem { c: self.c.map(|x| x * s) }
    }

    /// Quaternion-style conjugate: negates every non-unit coordinate.
    pub fn conj(&self) -> Self {
        let mut out = self.neg();
        out.c[0] = self.c[0];
        out
    }

    /// x⁻¹ = x̄ / N(x) with N(x) = Σ c_a², valid because every non-unit basis
    /// element squares to −1 and distinct ones anticommute (ℂ, ℍ) or the
    /// ring has dimension ≤ 2.
    pub fn inverse(&self, ring: &KRing) -> Option<Self> {
        if ring.dim() == 1 {
            return self.c[0].inv().map(KElem::scalar);
        }
        let norm = ring.mul(self, &self.conj());
        if norm.c[1..].iter().any(|s| !s.is_zero()) {
            return None;
        }
        let inv = norm.c[0].inv()?;
        Some(self.conj().scale(inv))
    }
}

/// Dense square matrix over K.
#[derive(Clone)]
pub struct KMatrix {
    ring: Arc<KRing>,
    side: usize,
    data: Vec<KElem>,
}

impl PartialEq for KMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side && self.data == other.data
    }
}

impl Eq for KMatrix {}

impl KMatrix {
    pub fn zero(ring: Arc<KRing>, side: usize) -> Self {
        KMatrix { ring, side, data: vec![KElem::zero(); side * side] }
    }

    pub fn identity(ring: Arc<KRing>, side: usize) -> Self {
        KMatrix::scalar(ring, side, KElem::one())
    }

    pub fn scalar(ring: Arc<KRing>, side: usize, k: KElem) -> Self {
        let mut m = KMatrix::zero(ring, side);
        for i in 0..side {
            m.data[i * side + i] = k;
        }
        m
    }

    /// Builds a matrix of signed basis entries from a row-major table of
    /// `(basis index, sign)`, with sign 0 meaning a zero entry.
    pub fn from_signed(ring: Arc<KRing>, rows: &[Vec<(usize, i8)>]) -> Self {
        let side = rows.len();
        let mut m = KMatrix::zero(ring, side);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), side, "matrix must be square");
            for (j, &(a, s)) in row.iter().enumerate() {
                if s != 0 {
                    m.data[i * side + j] = KElem::signed_basis(a, s);
                }
            }
        }
        m
    }

    /// Matrix of real integers over κ₀.
    pub fn from_ints(ring: Arc<KRing>, rows: &[Vec<i64>]) -> Self {
        let side = rows.len();
        let mut m = KMatrix::zero(ring, side);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), side, "matrix must be square");
            for (j, &v) in row.iter().enumerate() {
                m.data[i * side + j] = KElem::scalar(Scalar::int(v));
            }
        }
        m
    }

    pub fn ring(&self) -> &Arc<KRing> {
        &self.ring
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn get(&self, i: usize, j: usize) -> &KElem {
        &self.data[i * self.side + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut KElem {
        &mut self.data[i * self.side + j]
    }

    pub fn entries(&self) -> &[KElem] {
        &self.data
    }

    pub fn mul(&self, other: &KMatrix) -> KMatrix {
        assert_eq!(self.side, other.side, "matrix side mismatch");
        let n = self.side;
        let mut out = KMatrix::zero(self.ring.clone(), n);
        for i in 0..n {
            for l in 0..n {
                let x = &self.data[i * n + l];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = &other.data[l * n + j];
                    if y.is_zero() {
                        continue;
                    }
                    let prod = self.ring.mul(x, y);
                    let slot = &mut out.data[i * n + j];
                    *slot = slot.add(&prod);
                }
            }
        }
        out
    }

    pub fn neg(&self) -> KMatrix {
        KMatrix { ring: self.ring.clone(), side: self.side, data: self.data.iter().map(KElem::neg).collect() }
    }

    pub fn add(&self, other: &KMatrix) -> KMatrix {
        assert_eq!(self.side, other.side, "matrix side mismatch");
        let data = self.data.iter().zip(other.data.iter()).map(|(a, b)| a.add(b)).collect();
        KMatrix { ring: self.ring.clone(), side: self.side, data }
    }

    /// Multiplies every entry by k on the left: k·M.
    pub fn scale_left(&self, k: &KElem) -> KMatrix {
        let data = self.data.iter().map(|x| if x.is_zero() { *x } else { self.ring.mul(k, x) }).collect();
        KMatrix { ring: self.ring.clone(), side: self.side, data }
    }

    /// Multiplies every entry by k on the right: M·k.
    pub fn scale_right(&self, k: &KElem) -> KMatrix {
        let data = self.data.iter().map(|x| if x.is_zero() { *x } else { self.ring.mul(x, k) }).collect();
        KMatrix { ring: self.ring.clone(), side: self.side, data }
    }

    /// Positional transpose; K entries are not conjugated.
    pub fn transpose(&self) -> KMatrix {
        let n = self.side;
        let mut out = KMatrix::zero(self.ring.clone(), n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j];
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(KElem::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == KMatrix::identity(self.ring.clone(), self.side)
    }

    /// `Some(s)` when the matrix equals s·I with s = ±1.
    pub fn unit_sign(&self) -> Option<i8> {
        let id = KMatrix::identity(self.ring.clone(), self.side);
        if *self == id {
            Some(1)
        } else if *self == id.neg() {
            Some(-1)
        } else {
            None
        }
    }

    /// `Some(λ)` with self = other·λ for a central λ of K, if one exists.
    pub fn ratio_to(&self, other: &KMatrix) -> Option<KElem> {
        if self.side != other.side {
            return None;
        }
        let pos = other.data.iter().position(|x| !x.is_zero())?;
        let lambda = self.ring.mul(&other.data[pos].inverse(&self.ring)?, &self.data[pos]);
        if lambda.is_zero() || !self.ring.is_central(&lambda) {
            return None;
        }
        (other.scale_right(&lambda) == *self).then_some(lambda)
    }

    pub fn is_proportional(&self, other: &KMatrix) -> bool {
        self.ratio_to(other).is_some()
    }

    /// Rows of entry strings in the multivector text form.
    pub fn entry_strings(&self) -> Vec<Vec<String>> {
        (0..self.side)
            .map(|i| (0..self.side).map(|j| self.ring.format(self.get(i, j))).collect())
            .collect()
    }
}

impl fmt::Debug for KMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Bracket layout, one row per line, columns right-aligned.
impl fmt::Display for KMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.entry_strings();
        let width = rows.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        for (i, row) in rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            write!(f, "[{}]", cells.join("  "))?;
            if i + 1 < rows.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Operations the automorphism construction needs from a matrix type.
pub trait MatrixOps: Clone + PartialEq {
    fn identity_like(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn transpose(&self) -> Self;
    /// `Some(s)` when the matrix is s·I with s = ±1.
    fn unit_sign(&self) -> Option<i8>;
    /// self = other·λ for some central λ of K.
    fn is_proportional(&self, other: &Self) -> bool;
    /// Left multiplication by the basis element κ_a.
    fn scale_left_basis(&self, a: usize) -> Self;
    fn side(&self) -> usize;
    fn to_kmatrix(&self) -> KMatrix;
}

impl MatrixOps for KMatrix {
    fn identity_like(&self) -> Self {
        KMatrix::identity(self.ring.clone(), self.side)
    }
    fn mul(&self, other: &Self) -> Self {
        KMatrix::mul(self, other)
    }
    fn neg(&self) -> Self {
        KMatrix::neg(self)
    }
    fn transpose(&self) -> Self {
        KMatrix::transpose(self)
    }
    fn unit_sign(&self) -> Option<i8> {
        KMatrix::unit_sign(self)
    }
    fn is_proportional(&self, other: &Self) -> bool {
        KMatrix::is_proportional(self, other)
    }
    fn scale_left_basis(&self, a: usize) -> Self {
        self.scale_left(&KElem::basis(a))
    }
    fn side(&self) -> usize {
        self.side
    }
    fn to_kmatrix(&self) -> KMatrix {
        self.clone()
    }
}

/// Entry ±κ_k of a monomial matrix.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MonoEntry {
    pub row: u16,
    pub k: u8,
    pub sign: i8,
}

/// Invertible matrix with exactly one nonzero entry ±κ_k per column.
/// Generator images and all their products have this shape, which makes
/// every product O(side).
#[derive(Clone)]
pub struct MonoMatrix {
    ring: Arc<KRing>,
    cols: Vec<MonoEntry>,
}

impl PartialEq for MonoMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.cols == other.cols
    }
}

impl Eq for MonoMatrix {}

impl fmt::Debug for MonoMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_kmatrix())
    }
}

impl MonoMatrix {
    pub fn new(ring: Arc<KRing>, cols: Vec<MonoEntry>) -> Self {
        MonoMatrix { ring, cols }
    }

    pub fn identity(ring: Arc<KRing>, side: usize) -> Self {
        let cols = (0..side).map(|j| MonoEntry { row: j as u16, k: 0, sign: 1 }).collect();
        MonoMatrix { ring, cols }
    }

    pub fn ring(&self) -> &Arc<KRing> {
        &self.ring
    }

    pub fn cols(&self) -> &[MonoEntry] {
        &self.cols
    }

    /// Converts a dense matrix of signed basis entries; `None` if it is not
    /// monomial.
    pub fn from_kmatrix(m: &KMatrix) -> Option<Self> {
        let n = m.side();
        let mut cols = Vec::with_capacity(n);
        let mut used = vec![false; n];
        for j in 0..n {
            let mut found = None;
            for i in 0..n {
                let x = m.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let nz: Vec<usize> = (0..m.ring().dim()).filter(|&a| !x.c[a].is_zero()).collect();
                if found.is_some() || nz.len() != 1 || used[i] {
                    return None;
                }
                let c = x.c[nz[0]];
                let sign = if c == Scalar::one() {
                    1
                } else if c == -Scalar::one() {
                    -1
                } else {
                    return None;
                };
                used[i] = true;
                found = Some(MonoEntry { row: i as u16, k: nz[0] as u8, sign });
            }
            cols.push(found?);
        }
        Some(MonoMatrix { ring: m.ring().clone(), cols })
    }

    fn entry_product(&self, x: MonoEntry, y: MonoEntry) -> (u8, i8) {
        let (c, t) = self.ring.basis_product(x.k as usize, y.k as usize);
        (c as u8, x.sign * y.sign * t)
    }

    /// Inverse of ±κ_k: κ₀ is its own inverse, every other κ inverts to −κ.
    fn entry_inverse(e: MonoEntry) -> MonoEntry {
        MonoEntry { sign: if e.k == 0 { e.sign } else { -e.sign }, ..e }
    }
}

impl MatrixOps for MonoMatrix {
    fn identity_like(&self) -> Self {
        MonoMatrix::identity(self.ring.clone(), self.cols.len())
    }

    fn mul(&self, other: &Self) -> Self {
        let cols = other
            .cols
            .iter()
            .map(|&y| {
                let x = self.cols[y.row as usize];
                let (k, sign) = self.entry_product(x, y);
                MonoEntry { row: x.row, k, sign }
            })
            .collect();
        MonoMatrix { ring: self.ring.clone(), cols }
    }

    fn neg(&self) -> Self {
        let cols = self.cols.iter().map(|&e| MonoEntry { sign: -e.sign, ..e }).collect();
        MonoMatrix { ring: self.ring.clone(), cols }
    }

    fn transpose(&self) -> Self {
        let mut cols = self.cols.clone();
        for (j, e) in self.cols.iter().enumerate() {
            cols[e.row as usize] = MonoEntry { row: j as u16, ..*e };
        }
        MonoMatrix { ring: self.ring.clone(), cols }
    }

    fn unit_sign(&self) -> Option<i8> {
        let s = self.cols.first().map_or(1, |e| e.sign);
        self.cols
            .iter()
            .enumerate()
            .all(|(j, e)| e.row as usize == j && e.k == 0 && e.sign == s)
            .then_some(s)
    }

    fn is_proportional(&self, other: &Self) -> bool {
        let (Some(&a), Some(&b)) = (self.cols.first(), other.cols.first()) else {
            return self.cols.is_empty() && other.cols.is_empty();
        };
        if a.row != b.row {
            return false;
        }
        // λ = b⁻¹·a, which must be central.
        let (k, sign) = self.entry_product(MonoMatrix::entry_inverse(b), a);
        if !self.ring.is_central(&KElem::basis(k as usize)) {
            return false;
        }
        let lambda = MonoEntry { row: 0, k, sign };
        other.cols.iter().zip(&self.cols).all(|(&o, &s)| {
            let (k2, s2) = self.entry_product(o, lambda);
            o.row == s.row && k2 == s.k && s2 == s.sign
        })
    }

    fn scale_left_basis(&self, a: usize) -> Self {
        let z = MonoEntry { row: 0, k: a as u8, sign: 1 };
        let cols = self
            .cols
            .iter()
            .map(|&e| {
                let (k, sign) = self.entry_product(z, e);
                MonoEntry { row: e.row, k, sign }
            })
            .collect();
        MonoMatrix { ring: self.ring.clone(), cols }
    }

    fn side(&self) -> usize {
        self.cols.len()
    }

    fn to_kmatrix(&self) -> KMatrix {
        let n = self.cols.len();
        let mut m = KMatrix::zero(self.ring.clone(), n);
        for (j, e) in self.cols.iter().enumerate() {
            *m.get_mut(e.row as usize, j) = KElem::signed_basis(e.k as usize, e.sign);
        }
        m
    }
}
