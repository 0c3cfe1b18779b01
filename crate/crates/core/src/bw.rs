//! Graded tensor products, Brauer–Wall classes and the clock tables.
//!
//! A⊗̂B has basis a⊗b over blade pairs with
//! (a⊗b)(a′⊗b′) = (−1)^{deg b·deg a′}·aa′⊗bb′.
//! Basis elements are packed as `a | b << n_A`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::autoclass::Abc;
use crate::blade_core::{blade_mul, AlgebraSig, BladeMask};
use crate::error::{CliffError, Result};
use crate::structure::mod8_type;

/// Largest total generator count for the full structure-constant check.
pub const MAX_VERIFIED_GENERATORS: u32 = 8;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GradedGen {
    /// 0 for a generator of A (aᵢ⊗1), 1 for B (1⊗bⱼ).
    pub factor: u8,
    /// 1-based index inside its factor.
    pub index: u32,
    pub square: i8,
}

/// A⊗̂B with its generators listed in the order of Cl(p+p′, q+q′):
/// positive squares first, A before B within each group.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    pub a: AlgebraSig,
    pub b: AlgebraSig,
    pub gens: Vec<GradedGen>,
}

impl GradedAlgebra {
    pub fn dim(&self) -> usize {
        1usize << (self.a.n() + self.b.n())
    }

    /// Signature of the Clifford algebra the product should be isomorphic to.
    pub fn target(&self) -> AlgebraSig {
        if self.a.complex {
            AlgebraSig::complex(self.a.n() + self.b.n())
        } else {
            AlgebraSig::real(self.a.p + self.b.p, self.a.q + self.b.q)
        }
    }

    /// Product of two packed basis elements.
    pub fn basis_product(&self, x: BladeMask, y: BladeMask) -> (BladeMask, i8) {
        let na = self.a.n();
        let low = (1u32 << na) - 1;
        let (xa, xb) = (x & low, x >> na);
        let (ya, yb) = (y & low, y >> na);
        let (ma, sa) = blade_mul(xa, ya, self.a);
        let (mb, sb) = blade_mul(xb, yb, self.b);
        let swap = if (xb.count_ones() * ya.count_ones()) % 2 == 1 { -1 } else { 1 };
        (ma | (mb << na), sa * sb * swap)
    }

    fn gen_element(&self, g: GradedGen) -> BladeMask {
        let bit = 1 << (g.index - 1);
        if g.factor == 0 {
            bit
        } else {
            bit << self.a.n()
        }
    }

    /// Squares and pairwise anticommutation of the generators match the
    /// target algebra.
    pub fn verify_relations(&self) -> Result<()> {
        let target = self.target();
        for (i, &g) in self.gens.iter().enumerate() {
            let x = self.gen_element(g);
            let (m, s) = self.basis_product(x, x);
            let want = target.generator_square(i as u32 + 1);
            if m != 0 || s != want {
                return Err(CliffError::Relation(format!("generator {} squares to {s}, expected {want}", i + 1)));
            }
            for &h in &self.gens[..i] {
                let y = self.gen_element(h);
                let (m1, s1) = self.basis_product(x, y);
                let (m2, s2) = self.basis_product(y, x);
                if m1 != m2 || s1 != -s2 {
                    return Err(CliffError::Relation(format!("generators {g:?} and {h:?} do not anticommute")));
                }
            }
        }
        Ok(())
    }

    /// Image of every target blade: the ordered product of generator images.
    fn blade_images(&self) -> Vec<(BladeMask, i8)> {
        let n = self.gens.len();
        let mut images = vec![(0, 1i8); 1 << n];
        for mask in 1..(1u32 << n) {
            let top = 31 - mask.leading_zeros();
            let (m, s) = images[(mask & !(1 << top)) as usize];
            let (m2, s2) = self.basis_product(m, self.gen_element(self.gens[top as usize]));
            images[mask as usize] = (m2, s * s2);
        }
        images
    }

    /// Checks that generator images extend to an isomorphism from the target
    /// algebra: a bijection on basis elements that preserves every product.
    pub fn verify_isomorphism(&self) -> Result<()> {
        let n = self.gens.len() as u32;
        if n > MAX_VERIFIED_GENERATORS {
            return Err(CliffError::Precondition(format!(
                "structure constants are checked up to {MAX_VERIFIED_GENERATORS} generators"
            )));
        }
        let target = self.target();
        let images = self.blade_images();
        let mut hit = vec![false; images.len()];
        for &(m, _) in &images {
            if std::mem::replace(&mut hit[m as usize], true) {
                return Err(CliffError::Relation("generator images are not independent".into()));
            }
        }
        for s in 0..(1u32 << n) {
            for t in 0..(1u32 << n) {
                let (st, sign) = blade_mul(s, t, target);
                let (im, isign) = images[st as usize];
                let (x, sx) = images[s as usize];
                let (y, sy) = images[t as usize];
                let (prod, ps) = self.basis_product(x, y);
                if prod != im || sx * sy * ps != sign * isign {
                    return Err(CliffError::Relation(format!("product of target blades {s:#b}, {t:#b} is not preserved")));
                }
            }
        }
        Ok(())
    }
}

/// Builds A⊗̂B and verifies its generator relations against Cl(p+p′, q+q′)
/// (or C_{n+n′}).
pub fn graded_tensor(a: AlgebraSig, b: AlgebraSig) -> Result<GradedAlgebra> {
    if a.complex != b.complex {
        return Err(CliffError::Precondition("graded tensor of a real and a complex algebra".into()));
    }
    let side = |factor: u8, sig: AlgebraSig, positive: bool| {
        (1..=sig.n())
            .filter(move |&i| (sig.generator_square(i) > 0) == positive)
            .map(move |i| GradedGen { factor, index: i, square: sig.generator_square(i) })
    };
    let gens = side(0, a, true)
        .chain(side(1, b, true))
        .chain(side(0, a, false))
        .chain(side(1, b, false))
        .collect();
    let g = GradedAlgebra { a, b, gens };
    g.verify_relations()?;
    Ok(g)
}

/// Brauer–Wall class: (q − p) mod 8 over ℝ, n mod 2 over ℂ.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BwClass {
    pub h: u32,
    pub modulus: u32,
}

impl BwClass {
    pub fn add(self, other: BwClass) -> Result<BwClass> {
        if self.modulus != other.modulus {
            return Err(CliffError::Precondition("classes over different fields".into()));
        }
        Ok(BwClass { h: (self.h + other.h) % self.modulus, modulus: self.modulus })
    }
}

impl fmt::Display for BwClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.h, self.modulus)
    }
}

pub fn bw_class_real(p: u32, q: u32) -> BwClass {
    BwClass { h: (q as i64 - p as i64).rem_euclid(8) as u32, modulus: 8 }
}

pub fn bw_class_complex(n: u32) -> BwClass {
    BwClass { h: n % 2, modulus: 2 }
}

pub fn bw_class(sig: AlgebraSig) -> BwClass {
    if sig.complex {
        bw_class_complex(sig.n())
    } else {
        bw_class_real(sig.p, sig.q)
    }
}

/// Cl(p,q) and Cl(p′,q′) are of the same class when p + q′ ≡ p′ + q (mod 8).
pub fn same_class(p: u32, q: u32, p2: u32, q2: u32) -> bool {
    (p + q2) % 8 == (p2 + q) % 8
}

/// Result of tensoring two algebras, as reported by the command line.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TensorReport {
    pub a: AlgebraSig,
    pub b: AlgebraSig,
    pub target: AlgebraSig,
    pub relations: bool,
    /// Full structure-constant check; `None` above the size cap.
    pub isomorphism: Option<bool>,
    pub class_a: BwClass,
    pub class_b: BwClass,
    pub class_sum: BwClass,
    pub class_target: BwClass,
}

impl TensorReport {
    pub fn verified(&self) -> bool {
        self.relations && self.isomorphism != Some(false) && self.class_sum == self.class_target
    }
}

pub fn tensor_report(a: AlgebraSig, b: AlgebraSig) -> Result<TensorReport> {
    let (relations, target) = match graded_tensor(a, b) {
        Ok(g) => (true, Some(g)),
        Err(CliffError::Relation(_)) => (false, None),
        Err(e) => return Err(e),
    };
    let target_sig = if a.complex { AlgebraSig::complex(a.n() + b.n()) } else { AlgebraSig::real(a.p + b.p, a.q + b.q) };
    let isomorphism = match &target {
        Some(g) if target_sig.n() <= MAX_VERIFIED_GENERATORS => Some(g.verify_isomorphism().is_ok()),
        _ => None,
    };
    let (ca, cb) = (bw_class(a), bw_class(b));
    Ok(TensorReport {
        a,
        b,
        target: target_sig,
        relations,
        isomorphism,
        class_a: ca,
        class_b: cb,
        class_sum: ca.add(cb)?,
        class_target: bw_class(target_sig),
    })
}

/// Cl(p+8,q) ≅ Cl(p,q)⊗Cl(8,0) and Cl(p,q+8) ≅ Cl(p,q)⊗Cl(0,8), checked on
/// division rings, simplicity and classes.
pub fn abs_periodicity(p: u32, q: u32) -> bool {
    let base = mod8_type(p, q);
    let same = |s: crate::structure::StructureInfo| s.ring == base.ring && s.simple == base.simple && s.h_type == base.h_type;
    same(mod8_type(p + 8, q))
        && same(mod8_type(p, q + 8))
        && bw_class_real(p + 8, q) == bw_class_real(p, q)
        && bw_class_real(8, 0).h == 0
        && bw_class_real(0, 8).h == 0
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClockKind {
    Real,
    Complex,
}

impl std::str::FromStr for ClockKind {
    type Err = CliffError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "real" => Ok(ClockKind::Real),
            "complex" => Ok(ClockKind::Complex),
            _ => Err(CliffError::Parse(format!("unknown clock kind `{s}`"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClockPosition {
    /// (p − q) mod 8 for the real clock, n mod 2 for the complex one.
    pub residue: u32,
    pub ring: String,
    pub signatures: Vec<Abc>,
}

fn abcs(list: &[[i8; 3]]) -> Vec<Abc> {
    list.iter().map(|&s| Abc(s)).collect()
}

/// Positions of the clock with their rings and admissible signatures.
pub fn trautman_clock(kind: ClockKind) -> Vec<ClockPosition> {
    let plus = abcs(&[[1, 1, -1], [1, -1, 1], [1, -1, -1], [1, 1, 1]]);
    let minus = abcs(&[[-1, -1, -1], [-1, 1, 1], [-1, -1, 1], [-1, 1, -1]]);
    let complex = abcs(&[[1, 1, 1], [-1, -1, -1]]);
    let all = Abc::all();
    let pos = |residue: u32, ring: &str, signatures: &Vec<Abc>| ClockPosition {
        residue,
        ring: ring.into(),
        signatures: signatures.clone(),
    };
    match kind {
        ClockKind::Real => vec![
            pos(0, "R", &plus),
            pos(1, "R⊕R", &all),
            pos(2, "R", &minus),
            pos(3, "C", &complex),
            pos(4, "H", &plus),
            pos(5, "H⊕H", &all),
            pos(6, "H", &minus),
            pos(7, "C", &complex),
        ],
        ClockKind::Complex => vec![pos(0, "C", &complex), pos(1, "C⊕C", &complex)],
    }
}

/// Aligned text form of a clock table.
pub fn clock_text(kind: ClockKind) -> String {
    let modulus = if kind == ClockKind::Real { "p−q ≡ {} (mod 8)" } else { "n ≡ {} (mod 2)" };
    let mut out = String::new();
    for p in trautman_clock(kind) {
        let label = modulus.replace("{}", &p.residue.to_string());
        let sigs: Vec<String> = p.signatures.iter().map(Abc::to_string).collect();
        out.push_str(&format!("{label:<18} {:<5} {}\n", p.ring, sigs.join(" ")));
    }
    out
}
