//! Ideal and division-ring dimensions recomputed by floating-point Gaussian
//! elimination on the span of {e_A·f} and {f·e_A·f}, independent of the
//! coset bookkeeping in the representation builder.

use cliffsym::repgen::{build_rep, enumerate_idempotents};
use cliffsym::structure::mod8_type;
use cliffsym::{AlgebraSig, Multivector};

fn dense(x: &Multivector) -> Vec<f64> {
    let mut v = vec![0.0; 1 << x.sig().n()];
    for (m, c) in x.terms() {
        v[*m as usize] = *c.re.numer() as f64 / *c.re.denom() as f64;
    }
    v
}

fn rank(mut rows: Vec<Vec<f64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).max_by(|&a, &b| rows[a][c].abs().total_cmp(&rows[b][c].abs())) else { break };
        if rows[pivot][c].abs() < 1e-9 {
            continue;
        }
        rows.swap(r, pivot);
        for i in 0..rows.len() {
            if i != r {
                let k = rows[i][c] / rows[r][c];
                if k != 0.0 {
                    for j in c..cols {
                        rows[i][j] -= k * rows[r][j];
                    }
                }
            }
        }
        r += 1;
    }
    r
}

fn check(sig: AlgebraSig) {
    let info = mod8_type(sig.p, sig.q);
    for spec in enumerate_idempotents(sig).unwrap().iter().take(4) {
        let rep = build_rep(sig, spec).unwrap();
        let f = &rep.f;
        let blades: Vec<Multivector> = (0..1u32 << sig.n()).map(|m| Multivector::blade(sig, m)).collect();
        let ideal = rank(blades.iter().map(|b| dense(&(b * f))).collect());
        let k = rank(blades.iter().map(|b| dense(&(&(f * b) * f))).collect());
        assert_eq!(ideal as u64, info.ideal_real_dim, "{sig} {spec}");
        assert_eq!(k as u32, info.ring.real_dim(), "{sig} {spec}");
        assert_eq!(rep.side() * rep.ring.dim(), ideal, "{sig} {spec}");
        assert_eq!(rep.ring.dim(), k, "{sig} {spec}");
        assert_eq!(rank(rep.ideal_basis().iter().map(dense).collect()), rep.side(), "{sig} {spec}");
    }
}

#[test]
fn majorana_ideal_is_four_dimensional() {
    let sig = AlgebraSig::real(3, 1);
    let rep = build_rep(sig, &cliffsym::IdempotentSpec::parse("e1,e34", "++").unwrap()).unwrap();
    assert_eq!(rep.side(), 4);
    assert_eq!(rep.ring.dim(), 1);
    check(sig);
}

#[test]
fn ranks_match_structure_up_to_six() {
    for n in 0..=6u32 {
        for p in 0..=n {
            let sig = AlgebraSig::real(p, n - p);
            if !matches!(sig.h_ring(), 1 | 5) {
                check(sig);
            }
        }
    }
}
