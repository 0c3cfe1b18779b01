//! Matrices W, E, C of the fundamental automorphisms, their signature
//! (a,b,c), the order-8 group they generate, and conformance with the real
//! and complex classification rules.
//!
//! W is the product of the generator matrices. E realizes reversion through
//! Ã = E·Aᵀ·E⁻¹, so it commutes with symmetric generators and anticommutes
//! with skew ones; C realizes Clifford conjugation with the opposite rule.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::blade_core::{omega_square, AlgebraSig};
use crate::error::{CliffError, Result};
use crate::kmatrix::{KElem, KMatrix, KRing, MatrixOps, MonoMatrix};
use crate::repgen::{brauer_weyl_generators, SpinorRep};
use crate::scalar::Scalar;

/// Signs of (W², E², C²).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Abc(pub [i8; 3]);

impl Abc {
    pub const fn new(a: i8, b: i8, c: i8) -> Self {
        Abc([a, b, c])
    }

    pub fn a(&self) -> i8 {
        self.0[0]
    }

    pub fn all() -> Vec<Abc> {
        let mut out = Vec::with_capacity(8);
        for a in [1, -1] {
            for b in [1, -1] {
                for c in [1, -1] {
                    out.push(Abc([a, b, c]));
                }
            }
        }
        out
    }
}

impl fmt::Display for Abc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |x: i8| if x > 0 { '+' } else { '-' };
        write!(f, "({},{},{})", s(self.0[0]), s(self.0[1]), s(self.0[2]))
    }
}

impl std::str::FromStr for Abc {
    type Err = CliffError;
    fn from_str(text: &str) -> Result<Self> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<i8> = inner
            .split(',')
            .map(|p| match p.trim() {
                "+" => Ok(1),
                "-" | "−" => Ok(-1),
                other => Err(CliffError::Parse(format!("invalid sign `{other}` in signature"))),
            })
            .collect::<Result<_>>()?;
        match parts.as_slice() {
            [a, b, c] => Ok(Abc([*a, *b, *c])),
            _ => Err(CliffError::Parse(format!("invalid signature `{text}`"))),
        }
    }
}

impl Serialize for Abc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Abc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Order4Group {
    #[serde(rename = "Z2⊗Z2")]
    Z2Z2,
    #[serde(rename = "Z4")]
    Z4,
    #[serde(rename = "Q4/Z2")]
    Q4Quot,
    #[serde(rename = "D4/Z2")]
    D4Quot,
}

impl fmt::Display for Order4Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Order4Group::Z2Z2 => "Z2⊗Z2",
            Order4Group::Z4 => "Z4",
            Order4Group::Q4Quot => "Q4/Z2",
            Order4Group::D4Quot => "D4/Z2",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Cover {
    #[serde(rename = "Z2⊗Z2⊗Z2")]
    Z2Z2Z2,
    #[serde(rename = "Z2⊗Z4")]
    Z2Z4,
    #[serde(rename = "Q4")]
    Q4,
    #[serde(rename = "D4")]
    D4,
}

impl Cover {
    pub fn quotient(self) -> Order4Group {
        match self {
            Cover::Z2Z2Z2 => Order4Group::Z2Z2,
            Cover::Z2Z4 => Order4Group::Z4,
            Cover::Q4 => Order4Group::Q4Quot,
            Cover::D4 => Order4Group::D4Quot,
        }
    }

    pub fn abelian(self) -> bool {
        matches!(self, Cover::Z2Z2Z2 | Cover::Z2Z4)
    }
}

impl fmt::Display for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cover::Z2Z2Z2 => "Z2⊗Z2⊗Z2",
            Cover::Z2Z4 => "Z2⊗Z4",
            Cover::Q4 => "Q4",
            Cover::D4 => "D4",
        })
    }
}

/// The cover determined by (a,b,c) alone, and whether PT = TP.
pub fn dabrowski_row(abc: Abc) -> (Cover, bool) {
    match abc.0 {
        [1, 1, 1] => (Cover::Z2Z2Z2, true),
        [1, -1, -1] | [-1, 1, -1] | [-1, -1, 1] => (Cover::Z2Z4, true),
        [-1, -1, -1] => (Cover::Q4, false),
        _ => (Cover::D4, false),
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SymmetrySplit {
    /// 1-based generator indices with Mᵀ = M.
    pub sym: Vec<usize>,
    /// 1-based generator indices with Mᵀ = −M.
    pub skew: Vec<usize>,
    pub l: u32,
    pub t: u32,
    pub h: u32,
    pub g: u32,
}

/// Splits generators by positional transpose and records their squares.
/// A generator that is neither symmetric nor skew is an error.
pub fn symmetry_split<M: MatrixOps>(gens: &[M]) -> Result<SymmetrySplit> {
    let mut s = SymmetrySplit { sym: Vec::new(), skew: Vec::new(), l: 0, t: 0, h: 0, g: 0 };
    for (i, m) in gens.iter().enumerate() {
        let sq = m
            .mul(m)
            .unit_sign()
            .ok_or_else(|| CliffError::Relation(format!("generator {} does not square to ±I", i + 1)))?;
        let tr = m.transpose();
        if tr == *m {
            s.sym.push(i + 1);
            if sq > 0 {
                s.h += 1
            } else {
                s.g += 1
            }
        } else if tr == m.neg() {
            s.skew.push(i + 1);
            if sq > 0 {
                s.l += 1
            } else {
                s.t += 1
            }
        } else {
            return Err(CliffError::Construction(format!("generator {} is neither symmetric nor skew", i + 1)));
        }
    }
    Ok(s)
}

/// Product of the selected generators (1-based) in the given order.
fn product<M: MatrixOps>(gens: &[M], idx: &[usize], unit: &M) -> M {
    idx.iter().fold(unit.clone(), |acc, &i| acc.mul(&gens[i - 1]))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum EChoice {
    #[serde(rename = "prod_sym")]
    ProdSym,
    #[serde(rename = "prod_skew")]
    ProdSkew,
    #[serde(rename = "identity")]
    Identity,
    #[serde(rename = "W")]
    W,
    #[serde(rename = "W*prod_sym")]
    WProdSym,
    #[serde(rename = "W*prod_skew")]
    WProdSkew,
    /// E = ℰ₁…ℰ_m or ℰ_{m+1}…ℰ_{2m} by the parity of m (complex algebras).
    #[serde(rename = "theorem")]
    Theorem,
}

#[derive(Clone, Debug)]
pub struct AutMatrices<M = KMatrix> {
    pub w: M,
    pub e: M,
    pub c: M,
    pub e_choice: EChoice,
    /// 1-based generators used (all of them for even n).
    pub generating_set: Vec<usize>,
    /// Signature before any complex phase is applied.
    pub raw_abc: Abc,
    /// Which of W, E, C were multiplied by the central unit ζ.
    pub phase: [bool; 3],
    /// Ẽ relation E·Xᵀ = X·E on the generating set.
    pub com1: bool,
    /// C·Xᵀ = −X·C on the generating set.
    pub com2: bool,
}

fn satisfies<M: MatrixOps>(m: &M, set: &[&M], sign: i8) -> bool {
    set.iter().all(|x| {
        let lhs = m.mul(&x.transpose());
        let rhs = x.mul(m);
        if sign > 0 {
            lhs == rhs
        } else {
            lhs == rhs.neg()
        }
    })
}

fn square_sign<M: MatrixOps>(m: &M) -> Result<i8> {
    m.mul(m).unit_sign().ok_or_else(|| CliffError::Relation("automorphism matrix does not square to ±I".into()))
}

fn abc_of<M: MatrixOps>(w: &M, e: &M, c: &M) -> Result<Abc> {
    Ok(Abc([square_sign(w)?, square_sign(e)?, square_sign(c)?]))
}

/// Chooses E among {∏sym, ∏skew, I, W, W∏sym, W∏skew} on a generating set of
/// even size and sets C = E·W.
fn select_ec<M: MatrixOps>(gens: &[M], set: &[usize], split: &SymmetrySplit) -> Result<(M, M, M, EChoice)> {
    let unit = gens[0].identity_like();
    let members: Vec<&M> = set.iter().map(|&i| &gens[i - 1]).collect();
    let sym: Vec<usize> = set.iter().copied().filter(|i| split.sym.contains(i)).collect();
    let skew: Vec<usize> = set.iter().copied().filter(|i| split.skew.contains(i)).collect();
    let w = product(gens, set, &unit);
    let psym = product(gens, &sym, &unit);
    let pskew = product(gens, &skew, &unit);
    let candidates = [
        (EChoice::ProdSym, psym.clone()),
        (EChoice::ProdSkew, pskew.clone()),
        (EChoice::Identity, unit.clone()),
        (EChoice::W, w.clone()),
        (EChoice::WProdSym, w.mul(&psym)),
        (EChoice::WProdSkew, w.mul(&pskew)),
    ];
    let valid: Vec<&(EChoice, M)> = candidates.iter().filter(|(_, m)| satisfies(m, &members, 1)).collect();
    let (choice, e) = valid.first().ok_or_else(|| CliffError::Construction("no E candidate satisfies Ẽ relation".into()))?;
    if let Some((other, _)) = valid.iter().find(|(_, m)| !m.is_proportional(e)) {
        return Err(CliffError::Construction(format!("E candidates {choice:?} and {other:?} are not proportional")));
    }
    let c = e.mul(&w);
    if !satisfies(&c, &members, -1) {
        return Err(CliffError::Construction("C = E·W fails the conjugation relation".into()));
    }
    if ![&psym, &pskew, &candidates[4].1, &candidates[5].1].iter().any(|m| c.is_proportional(m)) {
        return Err(CliffError::Construction("C is not proportional to a generator product".into()));
    }
    Ok((w, e.clone(), c, *choice))
}

/// Multiplies each of W, E, C by ζ (ζ² = −1, central) as needed so that all
/// three squares agree: +I when E and C commute, −I otherwise.
fn normalize_phase<M: MatrixOps>(am: &mut AutMatrices<M>, zeta: impl Fn(&M) -> M) -> Result<()> {
    let commute = am.e.mul(&am.c) == am.c.mul(&am.e);
    let target = if commute { 1 } else { -1 };
    for (slot, m) in [&mut am.w, &mut am.e, &mut am.c].into_iter().enumerate() {
        if square_sign(m)? != target {
            *m = zeta(m);
            am.phase[slot] = true;
        }
    }
    Ok(())
}

/// W, E, C for a spinor representation of a real algebra of type 0, 2, 4,
/// 6 (all generators) or 3, 7 (all but the last symmetric generator, giving
/// a generating set of the complex algebra, then a phase by ζ = ωf).
pub fn construct_wec(rep: &SpinorRep) -> Result<AutMatrices<MonoMatrix>> {
    let sig = rep.sig;
    if sig.complex {
        return Err(CliffError::Precondition("complex algebras use construct_wec_complex".into()));
    }
    let split = symmetry_split(&rep.gens)?;
    let n = sig.n() as usize;
    if n == 0 {
        let unit = MonoMatrix::identity(rep.ring.clone(), rep.side());
        return Ok(AutMatrices {
            w: unit.clone(),
            e: unit.clone(),
            c: unit,
            e_choice: EChoice::Identity,
            generating_set: Vec::new(),
            raw_abc: Abc::new(1, 1, 1),
            phase: [false; 3],
            com1: true,
            com2: true,
        });
    }
    let odd = n % 2 == 1;
    let set: Vec<usize> = if odd {
        let drop = *split
            .sym
            .last()
            .ok_or_else(|| CliffError::Construction(format!("{sig} has no symmetric generator to drop")))?;
        (1..=n).filter(|&i| i != drop).collect()
    } else {
        (1..=n).collect()
    };
    let (w, e, c, choice) = if set.is_empty() {
        let unit = MonoMatrix::identity(rep.ring.clone(), rep.side());
        (unit.clone(), unit.clone(), unit, EChoice::Identity)
    } else {
        select_ec(&rep.gens, &set, &split)?
    };
    let raw_abc = abc_of(&w, &e, &c)?;
    let mut am =
        AutMatrices { w, e, c, e_choice: choice, generating_set: set, raw_abc, phase: [false; 3], com1: true, com2: true };
    if odd {
        // K = span{f, ωf}; its non-unit basis element is ±ωf.
        normalize_phase(&mut am, |m: &MonoMatrix| m.scale_left_basis(1))?;
    }
    Ok(am)
}

/// W, E, C for C_n (n even) on the Brauer–Weyl generators with E, C the
/// products of the first and last m generators, swapped for even m.
pub fn construct_wec_complex(n: u32) -> Result<(Vec<KMatrix>, AutMatrices)> {
    let gens = brauer_weyl_generators(n)?;
    let m = (n / 2) as usize;
    let unit = match gens.first() {
        Some(g) => g.identity_like(),
        None => KMatrix::identity(Arc::new(KRing::scalar_field(AlgebraSig::complex(n))), 1),
    };
    let first: Vec<usize> = (1..=m).collect();
    let last: Vec<usize> = (m + 1..=2 * m).collect();
    let all: Vec<usize> = (1..=2 * m).collect();
    let (ei, ci) = if m % 2 == 1 { (&first, &last) } else { (&last, &first) };
    let w = product(&gens, &all, &unit);
    let e = product(&gens, ei, &unit);
    let c = product(&gens, ci, &unit);
    let refs: Vec<&KMatrix> = gens.iter().collect();
    let com1 = satisfies(&e, &refs, 1);
    let com2 = satisfies(&c, &refs, -1);
    let raw_abc = abc_of(&w, &e, &c)?;
    let mut am =
        AutMatrices { w, e, c, e_choice: EChoice::Theorem, generating_set: all, raw_abc, phase: [false; 3], com1, com2 };
    let zeta = KElem::scalar(Scalar::i());
    normalize_phase(&mut am, |m: &KMatrix| m.scale_left(&zeta))?;
    Ok((gens, am))
}

/// Signs of the products among {I, W, E, C}: X·Y = table[x][y]·Z with the
/// labels multiplying like Z2⊗Z2 (W·E ~ C).
pub type SignTable = [[i8; 4]; 4];

pub const GROUP_LABELS: [&str; 4] = ["I", "W", "E", "C"];

pub fn sign_table<M: MatrixOps>(am: &AutMatrices<M>) -> Result<SignTable> {
    let unit = am.w.identity_like();
    let mats = [&unit, &am.w, &am.e, &am.c];
    let mut t = [[0i8; 4]; 4];
    for x in 0..4 {
        for y in 0..4 {
            let prod = mats[x].mul(mats[y]);
            let z = mats[x ^ y];
            t[x][y] = if prod == *z {
                1
            } else if prod == z.neg() {
                -1
            } else {
                return Err(CliffError::NotClosed(format!("{}·{} is not ±{}", GROUP_LABELS[x], GROUP_LABELS[y], GROUP_LABELS[x ^ y])));
            };
        }
    }
    for x in 0..4 {
        for y in 0..4 {
            for z in 0..4 {
                if t[x][y] * t[x ^ y][z] != t[y][z] * t[x][y ^ z] {
                    return Err(CliffError::NotClosed("sign table is not associative".into()));
                }
            }
        }
    }
    Ok(t)
}

/// Multiplication table as strings, row factor on the left: `-C`, `I`, ...
pub fn table_strings(t: &SignTable) -> Vec<Vec<String>> {
    (0..4)
        .map(|x| (0..4).map(|y| format!("{}{}", if t[x][y] < 0 { "-" } else { "" }, GROUP_LABELS[x ^ y])).collect())
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GroupClass {
    pub order4: Order4Group,
    pub order8_cover: Cover,
    pub abc: Abc,
    pub abelian: bool,
    /// W, E, C are not pairwise distinct up to sign, so the eight matrices
    /// ±I, ±W, ±E, ±C coincide in part; the group is read from the signs.
    pub degenerate: bool,
}

/// Census of the order-8 group {±I, ±W, ±E, ±C} built from the sign table.
pub fn classify_group<M: MatrixOps>(am: &AutMatrices<M>) -> Result<GroupClass> {
    let t = sign_table(am)?;
    let abelian = (0..4).all(|x| (0..4).all(|y| t[x][y] == t[y][x]));
    // −I plus ±X for every X whose square is +I.
    let involutions = 1 + 2 * (1..4).filter(|&x| t[x][x] > 0).count();
    let cover = match (abelian, involutions) {
        (true, 7) => Cover::Z2Z2Z2,
        (true, 3) => Cover::Z2Z4,
        (false, 1) => Cover::Q4,
        (false, 5) => Cover::D4,
        _ => return Err(CliffError::NotClosed(format!("unexpected census: abelian={abelian}, {involutions} involutions"))),
    };
    let abc = Abc([t[1][1], t[2][2], t[3][3]]);
    let unit = am.w.identity_like();
    let mats = [&unit, &am.w, &am.e, &am.c];
    let degenerate = (0..4).any(|x| (0..x).any(|y| mats[x].is_proportional(mats[y])));
    Ok(GroupClass { order4: cover.quotient(), order8_cover: cover, abc, abelian, degenerate })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AdmissibleEntry {
    pub group: Order4Group,
    pub abc: Abc,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Admissible {
    pub case: String,
    pub entries: Vec<AdmissibleEntry>,
}

fn entry(group: Order4Group, abc: Abc) -> AdmissibleEntry {
    AdmissibleEntry { group, abc }
}

/// +1 when r mod 8 ∈ {0,1,4,5}.
fn residue_sign(r: i64) -> i8 {
    if matches!(r.rem_euclid(8), 0 | 1 | 4 | 5) {
        1
    } else {
        -1
    }
}

/// Admissible (group, abc) pairs for a simple real algebra. Types 4 and 6
/// need the symmetry split of the representation.
pub fn admissible_set(sig: AlgebraSig, split: Option<&SymmetrySplit>) -> Result<Admissible> {
    use Order4Group::*;
    if sig.complex {
        let n = sig.n();
        return Ok(if n.is_multiple_of(4) {
            Admissible { case: format!("C{n}: n≡0,4 (mod 8)"), entries: vec![entry(Z2Z2, Abc::new(1, 1, 1))] }
        } else if n.is_multiple_of(2) {
            Admissible { case: format!("C{n}: n≡2,6 (mod 8)"), entries: vec![entry(Q4Quot, Abc::new(-1, -1, -1))] }
        } else {
            Admissible {
                case: format!("C{n}: odd"),
                entries: vec![entry(Z2Z2, Abc::new(1, 1, 1)), entry(Q4Quot, Abc::new(-1, -1, -1))],
            }
        });
    }
    let (p, q) = (sig.p, sig.q);
    let t = sig.h_ring();
    let (pm, qm) = (p % 4, q % 4);
    let adm = match t {
        0 | 2 => {
            let (case, e) = match (t, pm, qm) {
                (0, 0, 0) => ("type 0, p,q≡0 (mod 4)", entry(Z2Z2, Abc::new(1, 1, 1))),
                (0, 2, 2) => ("type 0, p,q≡2 (mod 4)", entry(Z4, Abc::new(1, -1, -1))),
                (0, 3, 3) => ("type 0, p,q≡3 (mod 4)", entry(D4Quot, Abc::new(1, -1, 1))),
                (0, 1, 1) => ("type 0, p,q≡1 (mod 4)", entry(D4Quot, Abc::new(1, 1, -1))),
                (2, 0, 2) => ("type 2, p≡0, q≡2 (mod 4)", entry(Z4, Abc::new(-1, -1, 1))),
                (2, 2, 0) => ("type 2, p≡2, q≡0 (mod 4)", entry(Z4, Abc::new(-1, 1, -1))),
                (2, 3, 1) => ("type 2, p≡3, q≡1 (mod 4)", entry(Q4Quot, Abc::new(-1, -1, -1))),
                (2, 1, 3) => ("type 2, p≡1, q≡3 (mod 4)", entry(D4Quot, Abc::new(-1, 1, 1))),
                _ => unreachable!("residues of type {t}"),
            };
            Admissible { case: case.into(), entries: vec![e] }
        }
        4 | 6 => {
            let s = split.ok_or_else(|| CliffError::Precondition("quaternionic types need a symmetry split".into()))?;
            let k = s.skew.len();
            let lt = residue_sign(s.l as i64 - s.t as i64);
            let hg = residue_sign(s.h as i64 - s.g as i64);
            let mut entries = Vec::new();
            let parity = if k % 2 == 0 { "even" } else { "odd" };
            match (t, k % 2) {
                (4, 0) => {
                    if lt > 0 && hg > 0 {
                        entries.push(entry(Z2Z2, Abc::new(1, 1, 1)));
                    }
                    if lt < 0 && hg < 0 {
                        entries.push(entry(Z4, Abc::new(1, -1, -1)));
                    }
                }
                (6, 0) => {
                    if lt > 0 && hg < 0 {
                        entries.push(entry(Z4, Abc::new(-1, 1, -1)));
                    }
                    if lt < 0 && hg > 0 {
                        entries.push(entry(Z4, Abc::new(-1, -1, 1)));
                    }
                }
                (4, _) => {
                    if hg < 0 && lt > 0 {
                        entries.push(entry(D4Quot, Abc::new(1, -1, 1)));
                    }
                    if hg > 0 && lt < 0 {
                        entries.push(entry(D4Quot, Abc::new(1, 1, -1)));
                    }
                }
                _ => {
                    if hg < 0 && lt < 0 {
                        entries.push(entry(Q4Quot, Abc::new(-1, -1, -1)));
                    }
                    if hg > 0 && lt > 0 {
                        entries.push(entry(D4Quot, Abc::new(-1, 1, 1)));
                    }
                }
            }
            Admissible {
                case: format!(
                    "type {t}, k={k} ({parity}), l−t≡{}, h−g≡{} (mod 8)",
                    (s.l as i64 - s.t as i64).rem_euclid(8),
                    (s.h as i64 - s.g as i64).rem_euclid(8)
                ),
                entries,
            }
        }
        3 | 7 => {
            if p % 2 == 0 {
                Admissible { case: format!("type {t}, p even, q odd"), entries: vec![entry(Z2Z2, Abc::new(1, 1, 1))] }
            } else {
                Admissible { case: format!("type {t}, p odd, q even"), entries: vec![entry(Q4Quot, Abc::new(-1, -1, -1))] }
            }
        }
        _ => return Err(CliffError::Precondition(format!("{sig} is semisimple"))),
    };
    Ok(adm)
}

/// Signatures allowed for a semisimple Cl(p,q) by its boundary position:
/// a = − for Cl(0,q), a = + for Cl(p,0), all eight otherwise.
pub fn semisimple_outer_set(sig: AlgebraSig) -> Vec<Abc> {
    Abc::all()
        .into_iter()
        .filter(|abc| match (sig.p, sig.q) {
            (0, _) => abc.a() < 0,
            (_, 0) => abc.a() > 0,
            _ => true,
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Conformance {
    pub pass: bool,
    pub case: String,
    pub admissible: Vec<AdmissibleEntry>,
}

pub fn theorem_conformance(sig: AlgebraSig, gc: &GroupClass, split: Option<&SymmetrySplit>) -> Result<Conformance> {
    let adm = admissible_set(sig, split)?;
    let pass = adm.entries.iter().any(|e| e.group == gc.order4 && e.abc == gc.abc);
    Ok(Conformance { pass, case: adm.case, admissible: adm.entries })
}

/// Eᵀ = (−1)^{m(m−1)/2}·E and Cᵀ = (−1)^{m(m+1)/2}·C for side 2^m.
pub fn check_transpose_corollary<M: MatrixOps>(am: &AutMatrices<M>) -> bool {
    let side = am.e.side();
    if !side.is_power_of_two() {
        return false;
    }
    let m = side.trailing_zeros() as u64;
    let want = |m: &M, odd: bool| if odd { m.neg() } else { m.clone() };
    am.e.transpose() == want(&am.e, (m * m.saturating_sub(1) / 2) % 2 == 1)
        && am.c.transpose() == want(&am.c, (m * (m + 1) / 2) % 2 == 1)
}

/// Expected commutation sign of E and C for simple even real types:
/// (−1)^{m²} for type 0, (−1)^{pq} for type 2, (−1)^{k(n−k)} for types 4, 6.
pub fn expected_ec_sign(sig: AlgebraSig, split: &SymmetrySplit) -> Option<i8> {
    if sig.complex {
        return None;
    }
    let n = sig.n() as u64;
    let odd = match sig.h_ring() {
        0 => (n / 2) % 2 == 1,
        2 => (sig.p as u64 * sig.q as u64) % 2 == 1,
        4 | 6 => {
            let k = split.skew.len() as u64;
            (k * (n - k)) % 2 == 1
        }
        _ => return None,
    };
    Some(if odd { -1 } else { 1 })
}

pub fn ec_sign<M: MatrixOps>(am: &AutMatrices<M>) -> Option<i8> {
    let ec = am.e.mul(&am.c);
    let ce = am.c.mul(&am.e);
    if ec == ce {
        Some(1)
    } else if ec == ce.neg() {
        Some(-1)
    } else {
        None
    }
}

/// Full classification of one representation.
#[derive(Clone, Debug)]
pub struct RepClassification<M = MonoMatrix> {
    pub split: SymmetrySplit,
    pub aut: AutMatrices<M>,
    pub group: GroupClass,
    pub conformance: Conformance,
    /// Transpose corollary for E and C.
    pub condt: bool,
    /// E·C versus C·E against the expected law; `None` where no law applies.
    pub commutation: Option<bool>,
    /// W² = ω²·I; checked for even real types only.
    pub w_square: Option<bool>,
    /// The cover from the matrices agrees with the Dąbrowski row of (a,b,c).
    pub table_consistent: bool,
}

pub fn classify_rep(rep: &SpinorRep) -> Result<RepClassification<MonoMatrix>> {
    let aut = construct_wec(rep)?;
    let split = symmetry_split(&rep.gens)?;
    let group = classify_group(&aut)?;
    let conformance = theorem_conformance(rep.sig, &group, Some(&split))?;
    let even = rep.sig.n().is_multiple_of(2);
    let commutation = if even {
        expected_ec_sign(rep.sig, &split).map(|want| ec_sign(&aut) == Some(want))
    } else {
        None
    };
    let w_square = even.then(|| square_sign(&aut.w).ok() == Some(omega_square(rep.sig)));
    let (cover, pt) = dabrowski_row(group.abc);
    Ok(RepClassification {
        condt: check_transpose_corollary(&aut),
        table_consistent: cover == group.order8_cover && pt == group.abelian,
        split,
        aut,
        group,
        conformance,
        commutation,
        w_square,
    })
}

/// Classification of C_n (n even) on the Brauer–Weyl representation.
pub fn classify_complex(n: u32) -> Result<(Vec<KMatrix>, RepClassification<KMatrix>)> {
    let (gens, aut) = construct_wec_complex(n)?;
    let split = symmetry_split(&gens)?;
    let group = classify_group(&aut)?;
    let conformance = theorem_conformance(AlgebraSig::complex(n), &group, None)?;
    let (cover, pt) = dabrowski_row(group.abc);
    let m = n / 2;
    let commutation = Some(ec_sign(&aut) == Some(if m.is_multiple_of(2) { 1 } else { -1 }));
    let cls = RepClassification {
        condt: check_transpose_corollary(&aut),
        table_consistent: cover == group.order8_cover && pt == group.abelian,
        split,
        aut,
        group,
        conformance,
        commutation,
        w_square: None,
    };
    Ok((gens, cls))
}
