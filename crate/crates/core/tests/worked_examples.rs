//! Small worked examples for each module, checked exactly.

use cliffsym::autoclass::{admissible_set, classify_rep, dabrowski_row, symmetry_split, SymmetrySplit};
use cliffsym::blade_core::{blade_mul, center_basis, omega_square, parse_blade, parse_multivector, volume_element};
use cliffsym::coverings::{complex_aut, opposite_comparison, pin_descriptor, Relation};
use cliffsym::kmatrix::{KMatrix, KRing};
use cliffsym::repgen::{build_rep, commuting_blade_sets, expected_factor_count, primitive_idempotent, IdempotentSpec};
use cliffsym::structure::{
    complexification_iso, idem_factor_count, mod8_type, radon_hurwitz, semisimple_decomposition, RingTag,
};
use cliffsym::{Abc, AlgebraSig, Cover, GroupClass, MatrixOps, Multivector, Order4Group};
use std::sync::Arc;

fn mv(text: &str, sig: AlgebraSig) -> Multivector {
    parse_multivector(text, sig).unwrap()
}

fn b(label: &str) -> u32 {
    parse_blade(label).unwrap()
}

#[test]
fn blade_products() {
    let st = AlgebraSig::real(3, 1);
    assert_eq!(blade_mul(b("e1"), b("e1"), st), (0, 1));
    assert_eq!(blade_mul(b("e4"), b("e4"), st), (0, -1));
    assert_eq!(blade_mul(b("e12"), b("e12"), AlgebraSig::real(2, 0)), (0, -1));
}

#[test]
fn geometric_products() {
    let e2 = AlgebraSig::real(2, 0);
    let x = mv("3*e1 - 1/2*e12", e2);
    assert_eq!(&Multivector::one(e2) * &x, x);
    assert_eq!(&mv("e1 + e2", e2) * &mv("e1 - e2", e2), mv("-2*e12", e2));

    let st = AlgebraSig::real(3, 1);
    let f = primitive_idempotent(&IdempotentSpec::parse("e1,e34", "++").unwrap(), st).unwrap();
    assert_eq!(&f * &f, f);
    assert_eq!(f, mv("1/4*Id + 1/4*e1 + 1/4*e34 + 1/4*e134", st));
}

#[test]
fn involutions() {
    let s = AlgebraSig::real(3, 0);
    assert_eq!(mv("e1", s).grade_involution(), mv("-e1", s));
    assert_eq!(mv("e12", s).grade_involution(), mv("e12", s));
    assert_eq!(mv("3 + e123", s).grade_involution(), mv("3 - e123", s));
    assert_eq!(mv("e12", s).reversion(), mv("-e12", s));
    assert_eq!(mv("e1", s).reversion(), mv("e1", s));
    assert_eq!(mv("e123", s).reversion(), mv("-e123", s));
    assert_eq!(mv("e1", s).conjugation(), mv("-e1", s));
    assert_eq!(mv("e12", s).conjugation(), mv("-e12", s));
    assert_eq!(mv("e123", s).conjugation(), mv("e123", s));
}

#[test]
fn volume_squares_and_centers() {
    assert_eq!(omega_square(AlgebraSig::real(3, 1)), -1);
    assert_eq!(omega_square(AlgebraSig::real(1, 3)), -1);
    assert_eq!(omega_square(AlgebraSig::real(0, 8)), 1);
    assert_eq!(center_basis(AlgebraSig::real(2, 0)).len(), 1);
    let s = AlgebraSig::real(3, 0);
    assert_eq!(center_basis(s), vec![Multivector::one(s), volume_element(s)]);
    assert_eq!(center_basis(AlgebraSig::real(1, 3)).len(), 1);
}

#[test]
fn structure_types() {
    let t = mod8_type(3, 1);
    assert_eq!((t.h_type, t.ring, t.simple), (2, RingTag::R, true));
    let t = mod8_type(1, 3);
    assert_eq!((t.h_type, t.ring, t.simple), (6, RingTag::H, true));
    let t = mod8_type(0, 3);
    assert_eq!((t.h_type, t.ring, t.simple), (5, RingTag::HH, false));
    assert_eq!(radon_hurwitz(3), 2);
    assert_eq!(radon_hurwitz(8), 4);
    assert_eq!(radon_hurwitz(-2), radon_hurwitz(6) - 4);
    assert_eq!(radon_hurwitz(-2), -1);
    assert_eq!(idem_factor_count(3, 1), 2);
    assert_eq!(idem_factor_count(1, 3), 1);
    assert_eq!(idem_factor_count(0, 8), 4);
    assert_eq!(mod8_type(0, 8).matrix_side, 16);
}

#[test]
fn semisimple_splittings() {
    let d = semisimple_decomposition(0, 3).unwrap();
    assert_eq!(d.variant_a, Some(AlgebraSig::real(0, 2)));
    let d = semisimple_decomposition(1, 0).unwrap();
    assert_eq!(d.variant_b, Some(AlgebraSig::real(0, 0)));
    let d = semisimple_decomposition(2, 1).unwrap();
    assert_eq!(d.variant_a, Some(AlgebraSig::real(2, 0)));
    assert_eq!(d.variant_b, Some(AlgebraSig::real(1, 1)));
    assert_eq!(AlgebraSig::real(2, 0).h_ring(), 2);
    assert_eq!(AlgebraSig::real(1, 1).h_ring(), 0);
    assert!(semisimple_decomposition(3, 1).is_err());
}

#[test]
fn complex_reductions() {
    let r = complexification_iso(3, 0).unwrap();
    assert_eq!((r.complex_n, r.m, r.m_even), (2, 1, false));
    assert!(complexification_iso(0, 3).is_err());
    assert!(complexification_iso(2, 1).is_err());
    let r = complexification_iso(4, 1).unwrap();
    assert_eq!((r.complex_n, r.m, r.m_even), (4, 2, true));
}

#[test]
fn commuting_sets() {
    let singles: Vec<u32> = commuting_blade_sets(AlgebraSig::real(1, 3)).unwrap().into_iter().map(|s| s[0]).collect();
    for label in ["e14", "e1", "e12", "e13", "e234"] {
        assert!(singles.contains(&b(label)), "{label}");
    }
    let pairs = commuting_blade_sets(AlgebraSig::real(3, 1)).unwrap();
    assert!(pairs.contains(&vec![b("e1"), b("e34")]));
    let e2 = commuting_blade_sets(AlgebraSig::real(2, 0)).unwrap();
    assert_eq!(expected_factor_count(AlgebraSig::real(2, 0)).unwrap(), 1);
    assert_eq!(e2, vec![vec![b("e1")], vec![b("e2")]]);
}

#[test]
fn idempotents() {
    let st = AlgebraSig::real(1, 3);
    let f = primitive_idempotent(&IdempotentSpec::parse("e234", "+").unwrap(), st).unwrap();
    assert_eq!(f, mv("1/2*Id + 1/2*e234", st));
    let s = AlgebraSig::real(1, 1);
    let f = primitive_idempotent(&IdempotentSpec::parse("e1", "+").unwrap(), s).unwrap();
    assert_eq!(&f * &f, f);
    assert_eq!(f, mv("1/2 + 1/2*e1", s));
}

#[test]
fn unit_maps_to_identity() {
    let rep = build_rep(AlgebraSig::real(1, 3), &IdempotentSpec::parse("e14", "+").unwrap()).unwrap();
    let one = rep.spinor_matrix(&Multivector::one(rep.sig)).unwrap();
    assert_eq!(one, KMatrix::identity(rep.ring.clone(), 2));
}

#[test]
fn symmetry_splits() {
    let rep = build_rep(AlgebraSig::real(3, 1), &IdempotentSpec::parse("e1,e34", "++").unwrap()).unwrap();
    let s = symmetry_split(&rep.gens).unwrap();
    assert_eq!((s.sym.clone(), s.skew.clone()), (vec![1, 2, 3], vec![4]));
    assert_eq!((s.h, s.g, s.l, s.t), (3, 0, 0, 1));

    let rep = build_rep(AlgebraSig::real(1, 3), &IdempotentSpec::parse("e234", "+").unwrap()).unwrap();
    assert_eq!(symmetry_split(&rep.gens).unwrap().sym, vec![1, 2, 3, 4]);

    let ring = Arc::new(KRing::scalar_field(AlgebraSig::real(2, 0)));
    let g1 = KMatrix::from_ints(ring.clone(), &[vec![1, 0], vec![0, -1]]);
    let g2 = KMatrix::from_ints(ring, &[vec![0, 1], vec![1, 0]]);
    assert_eq!(symmetry_split(&[g1, g2]).unwrap().skew, Vec::<usize>::new());
}

#[test]
fn plane_signature() {
    // Cl(2,0) on diag(1,−1), σ₁: W = [[0,1],[−1,0]], E = I, C = W.
    let rep = build_rep(AlgebraSig::real(2, 0), &IdempotentSpec::parse("e1", "+").unwrap()).unwrap();
    let cls = classify_rep(&rep).unwrap();
    let ring = rep.ring.clone();
    let w = KMatrix::from_ints(ring.clone(), &[vec![0, 1], vec![-1, 0]]);
    assert_eq!(cls.aut.w.to_kmatrix(), w);
    assert_eq!(cls.aut.e.to_kmatrix(), KMatrix::identity(ring, 2));
    assert_eq!(cls.aut.c.to_kmatrix(), w);
    assert_eq!(cls.group.abc, Abc::new(-1, 1, -1));
}

#[test]
fn group_census() {
    let cls = classify_rep(&build_rep(AlgebraSig::real(3, 1), &IdempotentSpec::parse("e1,e34", "++").unwrap()).unwrap())
        .unwrap();
    assert_eq!((cls.group.order8_cover, cls.group.order4, cls.group.abelian), (Cover::Q4, Order4Group::Q4Quot, false));
    let cls = classify_rep(&build_rep(AlgebraSig::real(1, 3), &IdempotentSpec::parse("e234", "+").unwrap()).unwrap())
        .unwrap();
    assert_eq!((cls.group.order8_cover, cls.group.abelian), (Cover::Z2Z4, true));
    let trivial = classify_rep(&build_rep(AlgebraSig::real(0, 0), &IdempotentSpec::parse("", "").unwrap()).unwrap())
        .unwrap();
    assert_eq!((trivial.group.abc, trivial.group.order8_cover), (Abc::new(1, 1, 1), Cover::Z2Z2Z2));
}

fn split(sym: usize, skew: usize, h: u32, g: u32, l: u32, t: u32) -> SymmetrySplit {
    SymmetrySplit { sym: (1..=sym).collect(), skew: (sym + 1..=sym + skew).collect(), l, t, h, g }
}

#[test]
fn admissible_sets() {
    let adm = admissible_set(AlgebraSig::real(3, 1), None).unwrap();
    assert_eq!(adm.entries.len(), 1);
    assert_eq!((adm.entries[0].group, adm.entries[0].abc), (Order4Group::Q4Quot, Abc::new(-1, -1, -1)));

    // One skew generator with square −1, three symmetric with square −1.
    let st = AlgebraSig::real(1, 3);
    let adm = admissible_set(st, Some(&split(3, 1, 1, 2, 0, 1))).unwrap();
    assert!(adm.entries.iter().any(|e| e.group == Order4Group::Q4Quot && e.abc == Abc::new(-1, -1, -1)));
    let adm = admissible_set(st, Some(&split(4, 0, 1, 3, 0, 0))).unwrap();
    assert!(adm.entries.iter().any(|e| e.group == Order4Group::Z4 && e.abc == Abc::new(-1, 1, -1)));

    // Both degenerate splittings of Cl(0,4).
    let q4 = AlgebraSig::real(0, 4);
    for s in [split(4, 0, 0, 4, 0, 0), split(0, 4, 0, 0, 0, 4)] {
        let adm = admissible_set(q4, Some(&s)).unwrap();
        assert_eq!(adm.entries.len(), 1, "{}", adm.case);
        assert_eq!((adm.entries[0].group, adm.entries[0].abc), (Order4Group::Z2Z2, Abc::new(1, 1, 1)));
    }
}

#[test]
fn dabrowski_table() {
    assert_eq!(dabrowski_row(Abc::new(1, 1, 1)), (Cover::Z2Z2Z2, true));
    assert_eq!(dabrowski_row(Abc::new(-1, -1, -1)), (Cover::Q4, false));
    assert_eq!(dabrowski_row(Abc::new(1, 1, -1)), (Cover::D4, false));
}

#[test]
fn pin_groups() {
    let rep = build_rep(AlgebraSig::real(3, 1), &IdempotentSpec::parse("e1,e34", "++").unwrap()).unwrap();
    let d = pin_descriptor(rep.sig, &classify_rep(&rep).unwrap().group).unwrap();
    assert_eq!(d.name, "Pin^{-,-,-}(3,1)");
    assert!(d.cliffordian);

    let rep = build_rep(AlgebraSig::real(1, 3), &IdempotentSpec::parse("e234", "+").unwrap()).unwrap();
    let d = pin_descriptor(rep.sig, &classify_rep(&rep).unwrap().group).unwrap();
    assert_eq!(d.name, "Pin^{-,+,-}(1,3)");
    assert!(!d.cliffordian);

    let degenerate = GroupClass {
        order4: Order4Group::Z2Z2,
        order8_cover: Cover::Z2Z2Z2,
        abc: Abc::new(1, 1, 1),
        abelian: true,
        degenerate: true,
    };
    assert_eq!(pin_descriptor(AlgebraSig::real(0, 4), &degenerate).unwrap().name, "Pin^{+,+,+}(0,4)");
}

#[test]
fn opposite_signatures() {
    let c = opposite_comparison(3, 1).unwrap();
    assert_eq!(c.relation, Relation::Distinct);
    assert_eq!(c.covers_pq, vec![Cover::Q4]);
    assert_eq!(c.covers_qp, vec![Cover::Z2Z4, Cover::Q4]);
    assert_eq!(opposite_comparison(4, 0).unwrap().relation, Relation::Isomorphic);
    let c = opposite_comparison(1, 0).unwrap();
    assert_eq!((c.type_pq, c.type_qp, c.relation), (1, 7, Relation::Distinct));
}

#[test]
fn complex_automorphisms() {
    for (n, group, abc) in [
        (2, Order4Group::Q4Quot, Abc::new(-1, -1, -1)),
        (4, Order4Group::Z2Z2, Abc::new(1, 1, 1)),
        (6, Order4Group::Q4Quot, Abc::new(-1, -1, -1)),
    ] {
        let a = complex_aut(n).unwrap();
        assert_eq!((a.group, a.abc, a.verified), (group, abc, true), "C{n}");
    }
    assert!(complex_aut(3).is_err());
}
