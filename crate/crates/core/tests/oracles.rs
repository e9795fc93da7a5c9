//! Independent cross-checks of the built-in tables and the equalizer.

use std::collections::BTreeMap;

use dfchow_core::lattice::{lattice_canonical_basis, IntVector};
use dfchow_core::pushout::{blow_up, build_equalizer, BlownUpChow, TwistorChow};
use dfchow_core::ring::RingElement;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Restriction to the quadric in (b, w, pt) coordinates, written out from
/// the rules directly rather than read from the map matrices. `v` holds the
/// coefficients of a degree-`k` class in the blown-up basis, with `[Q]`
/// (resp. `j_*b`) last in degree 1 (resp. 2).
fn restrict_by_rules(degrees: &[i64], k: usize, v: &[i64]) -> [i64; 3] {
    match k {
        0 => [0, 0, 0],
        1 => {
            let q = *v.last().unwrap();
            let b: i64 = degrees.iter().zip(v).map(|(d, c)| d * c).sum::<i64>() - q;
            [b, -q, 0]
        }
        2 => [0, 0, -*v.last().unwrap()],
        _ => [0, 0, 0],
    }
}

fn restrict_degree0(v: &[i64]) -> i64 {
    v[0]
}

fn matches(degrees1: &[i64], degrees2: &[i64], k: usize, v: &[i64], r1: usize) -> bool {
    if k == 0 {
        return restrict_degree0(&v[..r1]) == restrict_degree0(&v[r1..]);
    }
    let a = restrict_by_rules(degrees1, k, &v[..r1]);
    let c = restrict_by_rules(degrees2, k, &v[r1..]);
    // σ* swaps b and w.
    a == [c[1], c[0], c[2]]
}

fn enumerate(n: usize, bound: i64, mut f: impl FnMut(&[i64])) {
    let mut v = vec![-bound; n];
    loop {
        f(&v);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if v[i] < bound {
                v[i] += 1;
                break;
            }
            v[i] = -bound;
            i += 1;
        }
    }
}

fn degrees(b: &BlownUpChow) -> Vec<i64> {
    b.base().twistor_degrees().iter().map(|d| d.to_i64().unwrap()).collect()
}

fn brute_force_lattices(b1: &BlownUpChow, b2: &BlownUpChow, bound: i64) -> Vec<Vec<IntVector>> {
    let (d1, d2) = (degrees(b1), degrees(b2));
    (0..=3)
        .map(|k| {
            let r1 = b1.ring().rank(k);
            let n = r1 + b2.ring().rank(k);
            let mut found = Vec::new();
            enumerate(n, bound, |v| {
                if v.iter().any(|&x| x != 0) && matches(&d1, &d2, k, v, r1) {
                    found.push(v.iter().map(|&x| BigInt::from(x)).collect());
                }
            });
            lattice_canonical_basis(&found, n).unwrap()
        })
        .collect()
}

fn check_against_brute_force(z1: &TwistorChow, z2: &TwistorChow) {
    let (b1, b2) = (blow_up(z1).unwrap(), blow_up(z2).unwrap());
    let e = build_equalizer(&b1, &b2).unwrap();
    let brute = brute_force_lattices(&b1, &b2, 3);
    for (k, expect) in brute.iter().enumerate() {
        let n = b1.ring().rank(k) + b2.ring().rank(k);
        let got = lattice_canonical_basis(e.lattice(k), n).unwrap();
        assert_eq!(&got, expect, "degree {k} lattice differs from brute force");
    }
}

#[test]
fn p3_equalizer_matches_brute_force() {
    let z = TwistorChow::projective_space();
    check_against_brute_force(&z, &z);
    let e = build_equalizer(&blow_up(&z).unwrap(), &blow_up(&z).unwrap()).unwrap();
    assert_eq!(e.ranks(), vec![1, 2, 3, 2]);
}

#[test]
fn flag_equalizer_matches_brute_force() {
    let z = TwistorChow::flag_threefold();
    check_against_brute_force(&z, &z);
}

#[test]
fn mixed_equalizer_matches_brute_force() {
    check_against_brute_force(&TwistorChow::projective_space(), &TwistorChow::flag_threefold());
}

/// Polynomials in `x, y` as `(i, j) -> coeff` for `x^i y^j`.
type Poly = BTreeMap<(u32, u32), i64>;

/// Normal form in `ℤ[x,y]/(x²+xy+y², x³)` using the Gröbner basis
/// `{x² + xy + y², y³}` for lex order with `x > y`.
fn normal_form(p: &Poly) -> Poly {
    let mut p = p.clone();
    loop {
        let reducible = p
            .iter()
            .find(|(&(i, j), &c)| c != 0 && (i >= 2 || j >= 3))
            .map(|(&m, &c)| (m, c));
        let Some(((i, j), c)) = reducible else { break };
        p.remove(&(i, j));
        if i >= 2 {
            *p.entry((i - 1, j + 1)).or_default() -= c;
            *p.entry((i - 2, j + 2)).or_default() -= c;
        }
    }
    p.retain(|_, c| *c != 0);
    p
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&(i, j), &c) in a {
        for (&(k, l), &d) in b {
            *out.entry((i + k, j + l)).or_default() += c * d;
        }
    }
    out
}

fn mono(i: u32, j: u32) -> Poly {
    Poly::from([((i, j), 1)])
}

#[test]
fn generators_of_the_presentation_reduce_to_zero() {
    let g1: Poly = Poly::from([((2, 0), 1), ((1, 1), 1), ((0, 2), 1)]);
    assert!(normal_form(&g1).is_empty());
    assert!(normal_form(&mono(3, 0)).is_empty());
    assert!(normal_form(&mono(0, 3)).is_empty());
}

#[test]
fn flag_table_agrees_with_normal_form_reduction() {
    let z = TwistorChow::flag_threefold();
    let r = z.ring();
    // Basis of the built-in table as polynomials.
    let basis: Vec<Vec<Poly>> = vec![
        vec![mono(0, 0)],
        vec![mono(1, 0), mono(0, 1)],
        vec![mono(2, 0), mono(0, 2)],
        vec![mono(1, 2)],
    ];
    let as_poly = |d: usize, v: &[BigInt]| -> Poly {
        let mut out = Poly::new();
        for (c, m) in v.iter().zip(&basis[d]) {
            for (&k, &x) in m {
                *out.entry(k).or_default() += c.to_i64().unwrap() * x;
            }
        }
        normal_form(&out)
    };
    for d1 in 0..=3 {
        for d2 in 0..=3 - d1 {
            for i1 in 0..r.rank(d1) {
                for i2 in 0..r.rank(d2) {
                    let table = r.basis_product(d1, i1, d2, i2).unwrap();
                    let oracle = normal_form(&mul(&basis[d1][i1], &basis[d2][i2]));
                    assert_eq!(
                        as_poly(d1 + d2, table),
                        oracle,
                        "{} * {}",
                        r.label(d1, i1),
                        r.label(d2, i2)
                    );
                }
            }
        }
    }
    // Twistor degrees: x·[ℓ] and y·[ℓ] with [ℓ] = y² − x² reduce to xy².
    let line: Poly = Poly::from([((0, 2), 1), ((2, 0), -1)]);
    assert_eq!(normal_form(&mul(&mono(1, 0), &line)), mono(1, 2));
    assert_eq!(normal_form(&mul(&mono(0, 1), &line)), mono(1, 2));
}

#[test]
fn blown_up_rings_are_consistent() {
    for z in [TwistorChow::projective_space(), TwistorChow::flag_threefold()] {
        let b = blow_up(&z).unwrap();
        let r = b.ring();
        assert!(r.commutativity_defects().is_empty());
        assert!(r.associativity_defects().is_empty());
        assert!(b.projection_formula_defects().is_empty());
        assert!(b.restriction_map().homomorphism_defects().is_empty());
        assert!(b.pullback_map().homomorphism_defects().is_empty());
        let q = b.q_class();
        assert_eq!(q.pow(3).degree_of_cycle().unwrap(), BigInt::from(2));
        // j* of the self-intersection is ξ².
        let xi2 = b.restrict_to_quadric(&q.mul(&q).unwrap()).unwrap();
        assert_eq!(xi2.degree(), BigInt::from(2));
        let one = RingElement::one(r);
        assert_eq!(b.restrict_to_quadric(&one).unwrap().unit_coeff(), &BigInt::from(1));
    }
}
