//! Pin group descriptors built from the order-8 covers: Cliffordian labels,
//! the comparison of Cl(p,q) with Cl(q,p), and the complex classification.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::autoclass::{classify_complex, Abc, Cover, GroupClass, Order4Group};
pub use crate::autoclass::dabrowski_row;
use crate::blade_core::{blade_mul, AlgebraSig};
use crate::error::{CliffError, Result};
use crate::report::classify_algebra;

/// Names one of the groups Pin^{a,b,c}(p,q) or Pin^{a,b,c}(n,ℂ).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PinDescriptor {
    pub name: String,
    pub abc: Abc,
    pub cover: Cover,
    /// PT = −TP, i.e. the cover is non-abelian.
    pub cliffordian: bool,
    pub semidirect: String,
}

impl fmt::Display for PinDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.cliffordian { "Cliffordian" } else { "non-Cliffordian" };
        write!(f, "{} ≅ {}, cover {}, {kind}", self.name, self.semidirect, self.cover)
    }
}

fn signs(abc: Abc) -> String {
    abc.0.iter().map(|&s| if s > 0 { "+" } else { "-" }).collect::<Vec<_>>().join(",")
}

fn descriptor(abc: Abc, space: &str) -> PinDescriptor {
    let (cover, pt_commutes) = dabrowski_row(abc);
    PinDescriptor {
        name: format!("Pin^{{{}}}({space})", signs(abc)),
        abc,
        cover,
        cliffordian: !pt_commutes,
        semidirect: format!("(Spin0({space}) ⊙ {cover})/Z2"),
    }
}

/// Descriptor for a classified real representation. The cover is always
/// taken from the table row of (a,b,c); a disagreement with the computed
/// group is reported as an error.
pub fn pin_descriptor(sig: AlgebraSig, group: &GroupClass) -> Result<PinDescriptor> {
    let space = if sig.complex { format!("{},C", sig.n()) } else { format!("{},{}", sig.p, sig.q) };
    let d = descriptor(group.abc, &space);
    if d.cover != group.order8_cover {
        return Err(CliffError::Relation(format!(
            "computed cover {} contradicts the table row {} for {}",
            group.order8_cover, d.cover, group.abc
        )));
    }
    Ok(d)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Isomorphic,
    Distinct,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OppositeComparison {
    pub type_pq: u32,
    pub type_qp: u32,
    pub relation: Relation,
    /// Covers realized by the representations of Cl(p,q).
    pub covers_pq: Vec<Cover>,
    pub covers_qp: Vec<Cover>,
}

/// (p − q) mod 8 ∈ {0, 4}.
pub fn is_neutral(p: u32, q: u32) -> bool {
    matches!((p as i64 - q as i64).rem_euclid(8), 0 | 4)
}

fn realized_covers(sig: AlgebraSig) -> Result<Vec<Cover>> {
    let reports = classify_algebra(sig, None)?;
    let set: BTreeSet<Cover> = reports.iter().map(|r| r.order8_cover).collect();
    Ok(set.into_iter().collect())
}

/// Compares Cl(p,q) with Cl(q,p). Semisimple sides aggregate both summand
/// splittings.
pub fn opposite_comparison(p: u32, q: u32) -> Result<OppositeComparison> {
    let (a, b) = (AlgebraSig::real(p, q), AlgebraSig::real(q, p));
    Ok(OppositeComparison {
        type_pq: a.h_ring(),
        type_qp: b.h_ring(),
        relation: if is_neutral(p, q) { Relation::Isomorphic } else { Relation::Distinct },
        covers_pq: realized_covers(a)?,
        covers_qp: realized_covers(b)?,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ComplexAut {
    pub group: Order4Group,
    pub abc: Abc,
    /// The constructed Cₙ representation reproduces (group, abc).
    pub verified: bool,
}

/// Automorphism group of Cₙ for even n: Z2⊗Z2 with (+,+,+) for n ≡ 0, 4 and
/// Q4/Z2 with (−,−,−) for n ≡ 2, 6 (mod 8).
pub fn complex_aut(n: u32) -> Result<ComplexAut> {
    if n % 2 == 1 {
        return Err(CliffError::Precondition(format!("C{n} is not simple")));
    }
    let (group, abc) = if n.is_multiple_of(4) {
        (Order4Group::Z2Z2, Abc::new(1, 1, 1))
    } else {
        (Order4Group::Q4Quot, Abc::new(-1, -1, -1))
    };
    let (_, cls) = classify_complex(n)?;
    let verified = cls.group.order4 == group && cls.group.abc == abc && cls.aut.com1 && cls.aut.com2;
    Ok(ComplexAut { group, abc, verified })
}

pub fn complex_pin(n: u32) -> Result<PinDescriptor> {
    let aut = complex_aut(n)?;
    Ok(descriptor(aut.abc, &format!("{n},C")))
}

/// The group {±e_A} of signed basis blades (order 2^{n+1}), reported for
/// n = 1 as the order-4 group it forms: Z2⊗Z2 for Cl(1,0), Z4 for Cl(0,1).
pub fn salingaros_vee_group(sig: AlgebraSig) -> Result<Order4Group> {
    if sig.complex || sig.n() != 1 {
        return Err(CliffError::Precondition("the order-4 vee group needs a real algebra on one generator".into()));
    }
    // Count elements of order ≤ 2 among ±1, ±e1.
    let involutions = [0u32, 1]
        .iter()
        .filter(|&&m| blade_mul(m, m, sig).1 > 0)
        .count()
        * 2;
    Ok(if involutions == 4 { Order4Group::Z2Z2 } else { Order4Group::Z4 })
}
