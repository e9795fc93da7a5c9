//! Acceptance suite: one PASS/FAIL line per criterion, with the individual
//! checks listed under it. All tolerances are exact equality.
//!
//! Two identities of the blow-up ring are inconsistent with `j*` being a
//! ring homomorphism together with `j*[Q] = -ξ` (see the README). They are
//! reported as FAIL. The process exits nonzero if any other check fails, or
//! if either of those two unexpectedly holds.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use dfchow_core::charges::{obstruction_dim, CentralFibre, ComponentPair, IntPolynomial};
use dfchow_core::lattice::{lattice_rank, IntVector};
use dfchow_core::neck::{
    fibre_pairing_raw, kn_fixed_phase_bundle, lens_space_of, phase_solve, quotient_over_fibre,
    restrict_to_curve, restrict_to_ruling_fibre_bundle, ThreeManifoldTag,
};
use dfchow_core::pushout::{blow_up, build_equalizer, equalizer_membership, BlownUpChow};
use dfchow_core::quadric::{
    arithmetic_genus, canonical_class, cohomology_dims, intersection_number, sigma_map,
    sigma_pullback, sigma_pushforward, Bidegree, QuadricClass,
};
use dfchow_core::realstruct::{
    base_locus, evaluate_section, fixed_space_embedding, invariant_section_basis, is_fixed_point,
    is_invariant_section, pencil_value, tau, tau_tilde, PencilValue, QuadricPoint, Section11,
};
use dfchow_core::ring::RingElement;
use dfchow_core::surfaces::{classify_all, trace_class, Configuration, SurfaceData};
use dfchow_core::{GaussianScalar, TwistorChow};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOLERANCE: &str = "exact";
const TIME_LIMIT: Duration = Duration::from_secs(5);
const EQUALIZER_TIME_LIMIT: Duration = Duration::from_secs(1);
const SEED: u64 = 20_261_016;

/// Checks known to fail; each must fail for the suite to succeed.
const KNOWN_FAILURES: &[&str] = &["P3: j_*(ξ) = f*[ℓ]", "P3: [Q]^2 = -f*[ℓ]", "flag: j_*(ξ) = f*[ℓ]", "flag: [Q]^2 = -f*[ℓ]"];

struct Check {
    name: String,
    holds: bool,
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, name: impl Into<String>, holds: bool) {
        self.0.push(Check {
            name: name.into(),
            holds,
        });
    }
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

fn bi(x: i64) -> BigInt {
    BigInt::from(x)
}

fn criterion_1(c: &mut Checks) {
    let (b, w, z, xi, pt) = (
        QuadricClass::b(),
        QuadricClass::w(),
        QuadricClass::z(),
        QuadricClass::xi(),
        QuadricClass::point(),
    );
    c.add("b^2 = 0", b.mul(&b).is_zero());
    c.add("w^2 = 0", w.mul(&w).is_zero());
    c.add("bw = [pt]", b.mul(&w) == pt);
    c.add("z^2 + 2zw = 0", z.mul(&z).add(&z.mul(&w).scale(2)).is_zero());
    c.add("ξ = b + w", xi == b.add(&w));
    c.add("ξ = z + 2w", xi == z.add(&w.scale(2)));
    c.add("σ_*(z) = -z", sigma_pushforward(&z) == z.neg());
    c.add("σ_*(w) = b", sigma_pushforward(&w) == b);
    c.add("σ_*(ξ) = ξ", sigma_pushforward(&xi) == xi);
    c.add("σ multiplicative on all basis pairs", sigma_map().homomorphism_defects().is_empty());
}

fn criterion_2(c: &mut Checks) {
    for (name, z) in [("P3", TwistorChow::projective_space()), ("flag", TwistorChow::flag_threefold())] {
        let b = blow_up(&z).unwrap();
        let r = b.ring();
        c.add(format!("{name}: commutativity"), r.commutativity_defects().is_empty());
        c.add(format!("{name}: associativity"), r.associativity_defects().is_empty());
        c.add(format!("{name}: projection formula"), b.projection_formula_defects().is_empty());
        c.add(format!("{name}: j* is a ring homomorphism"), b.restriction_map().homomorphism_defects().is_empty());
        let line = b.pulled_line_class();
        let push_xi = b.push_from_quadric(&QuadricClass::xi()).unwrap();
        c.add(format!("{name}: j_*(ξ) = f*[ℓ]"), push_xi == line);
        c.add(format!("{name}: [Q]^2 = -f*[ℓ]"), b.self_intersection() == line.neg());
    }
}

/// Matching pairs in degree `k` with coefficients in `[-bound, bound]`,
/// tested by applying the restriction maps to each candidate.
fn brute_force_rank(b1: &BlownUpChow, b2: &BlownUpChow, k: usize, bound: i64) -> usize {
    let (r1, r2) = (b1.ring().rank(k), b2.ring().rank(k));
    let n = r1 + r2;
    let mut v = vec![-bound; n];
    let mut found: Vec<IntVector> = Vec::new();
    loop {
        if v.iter().any(|&x| x != 0) {
            let a1 = RingElement::homogeneous(b1.ring(), k, v[..r1].iter().map(|&x| bi(x)).collect()).unwrap();
            let a2 = RingElement::homogeneous(b2.ring(), k, v[r1..].iter().map(|&x| bi(x)).collect()).unwrap();
            let lhs = b1.restrict_to_quadric(&a1).unwrap();
            let rhs = sigma_pullback(&b2.restrict_to_quadric(&a2).unwrap());
            if lhs == rhs {
                found.push(v.iter().map(|&x| bi(x)).collect());
            }
        }
        let mut i = 0;
        while i < n && v[i] == bound {
            v[i] = -bound;
            i += 1;
        }
        if i == n {
            break;
        }
        v[i] += 1;
    }
    lattice_rank(&found, n).unwrap()
}

fn criterion_3(c: &mut Checks) {
    let start = Instant::now();
    let b = blow_up(&TwistorChow::projective_space()).unwrap();
    let e = build_equalizer(&b, &b).unwrap();
    c.add("([Q1], [Q2]) is a member", equalizer_membership(&e, &b.q_class(), &b.q_class()).unwrap());
    c.add("product-closed on all basis pairs", e.closure_defects().is_empty());
    for k in 0..=3 {
        let brute = brute_force_rank(&b, &b, k, 3);
        c.add(format!("degree {k}: rank {} = enumeration rank {brute}", e.ranks()[k]), e.ranks()[k] == brute);
    }
    c.add("ranks are (1, 2, 3, 2)", e.ranks() == vec![1, 2, 3, 2]);
    let elapsed = start.elapsed();
    c.add(format!("under {:?} ({:.3}s)", EQUALIZER_TIME_LIMIT, elapsed.as_secs_f64()), elapsed < EQUALIZER_TIME_LIMIT);
}

fn criterion_4(c: &mut Checks) {
    let s = |d, i| SurfaceData::new(d, i).unwrap();
    let expected: BTreeSet<String> = [
        Configuration { first: s(2, true), second: s(2, true) },
        Configuration { first: s(1, true), second: s(1, false) },
        Configuration { first: s(1, false), second: s(1, true) },
    ]
    .iter()
    .map(|x| x.to_string())
    .collect();
    let found = classify_all(50).unwrap();
    let got: BTreeSet<String> = found.iter().map(|x| x.to_string()).collect();
    c.add("classify_all(50) is exactly the three configurations", found.len() == 3 && got == expected);
    let xi = QuadricClass::xi();
    let mut traces_ok = true;
    let mut genus_ok = true;
    for d in 1..=50 {
        for inc in [true, false] {
            let t = trace_class(&s(d, inc)).unwrap();
            traces_ok &= intersection_number(&t, &xi).unwrap() == bi(d);
        }
    }
    for conf in &found {
        for x in [conf.first, conf.second] {
            if x.contains_line {
                let (m, n) = trace_class(&x).unwrap().bw_coords();
                let bd = Bidegree::new(i64::try_from(&m).unwrap(), i64::try_from(&n).unwrap());
                genus_ok &= arithmetic_genus(bd) == 0;
            }
        }
    }
    c.add("trace·ξ = d for every surface with d <= 50", traces_ok);
    c.add("contained-line traces of gluable surfaces have genus 0", genus_ok);
}

fn criterion_5(c: &mut Checks) {
    let k = canonical_class();
    let mut ok = true;
    for m in 0..=10 {
        for n in 0..=10 {
            let d = QuadricClass::divisor(m, n);
            let twice = d.mul(&d.add(&k)).degree();
            ok &= bi((m - 1) * (n - 1)) == twice / 2 + 1 && arithmetic_genus(Bidegree::new(m, n)) == (m - 1) * (n - 1);
        }
    }
    c.add("(m-1)(n-1) = D·(D+K)/2 + 1 for 0 <= m, n <= 10", ok);
}

/// `h^q(ℙ¹, O(a))`.
fn h_p1(q: usize, a: i64) -> i64 {
    match q {
        0 => (a + 1).max(0),
        _ => (-a - 1).max(0),
    }
}

fn criterion_6(c: &mut Checks) {
    c.add(
        "h1(O(m+1, m+1)) = 0 for 0 <= m <= 20",
        (0..=20).all(|m| cohomology_dims(m + 1, m + 1).h1 == 0),
    );
    let o = cohomology_dims(0, 0);
    c.add("h0(O) = 1, h1(O) = h2(O) = 0", (o.h0, o.h1, o.h2) == (1, 0, 0));
    let mut serre = true;
    let mut euler = true;
    let mut kunneth = true;
    for a in -6..=6 {
        for b in -6..=6 {
            let h = cohomology_dims(a, b);
            let dual = cohomology_dims(-a - 2, -b - 2);
            serre &= (h.h0, h.h1, h.h2) == (dual.h2, dual.h1, dual.h0);
            euler &= h.h0 - h.h1 + h.h2 == (a + 1) * (b + 1);
            let k = |q: usize| -> i64 {
                (0..=q).filter(|&i| q - i <= 1 && i <= 1).map(|i| h_p1(i, a) * h_p1(q - i, b)).sum()
            };
            kunneth &= (h.h0, h.h1, h.h2) == (k(0), k(1), k(2));
        }
    }
    c.add("Serre duality over -6 <= a, b <= 6", serre);
    c.add("Euler characteristic (a+1)(b+1) over -6 <= a, b <= 6", euler);
    c.add("agrees with the Künneth formula over -6 <= a, b <= 6", kunneth);
}

fn criterion_7(c: &mut Checks) {
    let mut rng = rng();
    let mut ok = 0;
    let total = 200;
    let bases = [blow_up(&TwistorChow::projective_space()).unwrap(), blow_up(&TwistorChow::flag_threefold()).unwrap()];
    for trial in 0..total {
        let b = &bases[trial % 2];
        let e = build_equalizer(b, b).unwrap();
        let fibre = CentralFibre::new(b.clone(), b.clone()).unwrap();
        let gens: Vec<(RingElement, RingElement)> = (0..e.lattice(1).len()).map(|i| e.basis_pair(1, i)).collect();
        let n_inputs = rng.gen_range(1..=3);
        let inputs: Vec<ComponentPair> = (0..n_inputs)
            .map(|_| {
                let mut a1 = RingElement::zero(b.ring());
                let mut a2 = RingElement::zero(b.ring());
                for (g1, g2) in &gens {
                    let k = bi(rng.gen_range(-3..=3));
                    a1 = a1.add(&g1.scale(&k)).unwrap();
                    a2 = a2.add(&g2.scale(&k)).unwrap();
                }
                ComponentPair::new(a1, a2).unwrap()
            })
            .collect();
        let terms = (0..rng.gen_range(1..=4))
            .map(|_| {
                let exps = (0..n_inputs).map(|_| rng.gen_range(0..=2)).collect();
                (bi(rng.gen_range(-4..=4)), exps)
            })
            .collect();
        let p = IntPolynomial::new(n_inputs, terms).unwrap();
        let lifted = fibre.practical_lift(&p, &inputs).unwrap();
        let lhs = b.restrict_to_quadric(&lifted.pair.alpha1).unwrap();
        let rhs = sigma_pullback(&b.restrict_to_quadric(&lifted.pair.alpha2).unwrap());
        if lifted.matched && lhs == rhs {
            ok += 1;
        }
    }
    c.add(format!("{ok}/{total} lifts satisfy the matching condition"), ok == total);
}

fn criterion_8(c: &mut Checks) {
    let b = blow_up(&TwistorChow::projective_space()).unwrap();
    let fibre = CentralFibre::new(b.clone(), b.clone()).unwrap();
    let zero = RingElement::zero(b.ring());
    let zero_pair = || ComponentPair::new(zero.clone(), zero.clone()).unwrap();
    let trivial = fibre.bundle(2, zero_pair(), zero_pair(), true, (0, 0)).unwrap();
    c.add("obstruction_dim(0, 0) = 0", obstruction_dim(&trivial).unwrap() == 0);

    let h = b.element("f*h").unwrap();
    let h_pair = ComponentPair::new(h.clone(), h.add(&b.q_class()).unwrap().neg()).unwrap();
    let c2 = b.element("f*h^2").unwrap().add(&b.exceptional_line()).unwrap();
    let data = fibre
        .bundle(2, zero_pair(), ComponentPair::new(c2.clone(), zero.clone()).unwrap(), false, (0, 0))
        .unwrap();
    let ch = fibre.polarized_charge(&data, &h_pair).unwrap();
    // Independent count: deg(f*h^2 · f*h) = 1 and E·f*h = 0.
    let by_hand = (c2.mul(&h).unwrap()).degree_of_cycle().unwrap();
    c.add(format!("worked example charge = 1 (got {})", ch.total), ch.total == bi(1) && by_hand == bi(1));
    c.add("charge = sum of branch degrees", ch.total == &ch.branch1 + &ch.branch2);
}

fn criterion_9(c: &mut Checks) {
    let kn = kn_fixed_phase_bundle();
    let raw = fibre_pairing_raw(&kn).unwrap();
    c.add("|KN fibre restriction| = 1", raw == bi(1) || raw == bi(-1));
    let oriented = restrict_to_ruling_fibre_bundle(&kn).unwrap();
    c.add("KN fibre restriction = +1 with the orientation convention", oriented.degree() == Some(&bi(1)));
    let (anti, tag) = quotient_over_fibre((1, 1)).unwrap();
    c.add("anti-diagonal quotient: c1 = 2, RP3", anti == 2 && tag == ThreeManifoldTag::RP3);
    let (diag, tag) = quotient_over_fibre((1, -1)).unwrap();
    c.add("diagonal character: c1 = 0, S2xS1", diag == 0 && tag == ThreeManifoldTag::S2xS1);
    c.add("lens_space_of(2) = RP3", lens_space_of(&bi(2)) == ThreeManifoldTag::RP3);
    let mut curve_ok = true;
    for a in 0..=20 {
        for b in 0..=20 {
            let d = restrict_to_curve(&kn, Bidegree::new(a, b)).unwrap().degree().unwrap().clone();
            curve_ok &= d == bi(-(a + b)) && ((a, b) == (0, 0) || !d.is_zero());
        }
    }
    c.add("curve restriction = -(a+b), nonzero for effective (a,b) != 0, a, b <= 20", curve_ok);
    let mut rng = rng();
    let unit = |rng: &mut ChaCha8Rng| loop {
        let (m, n) = (rng.gen_range(-40..=40), rng.gen_range(-40..=40));
        if (m, n) != (0, 0) {
            return GaussianScalar::pythagorean_unit(m, n);
        }
    };
    let mut phase_ok = 0;
    for _ in 0..1000 {
        let theta = unit(&mut rng);
        let eta = unit(&mut rng);
        let p = phase_solve(&theta, &eta).unwrap();
        if &p.rho1 * &p.rho2 == theta && p.rho1.is_unit_modulus() {
            phase_ok += 1;
        }
    }
    c.add(format!("ρ1ρ2 = e^(iθ) on {phase_ok}/1000 random unit pairs"), phase_ok == 1000);
}

fn gaussian(rng: &mut ChaCha8Rng) -> GaussianScalar {
    GaussianScalar::from_fractions(rng.gen_range(-9..=9), rng.gen_range(1..=7), rng.gen_range(-9..=9), rng.gen_range(1..=7))
}

fn random_point(rng: &mut ChaCha8Rng) -> QuadricPoint {
    loop {
        if let Ok(p) = QuadricPoint::new(gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng)) {
            return p;
        }
    }
}

fn criterion_10(c: &mut Checks) {
    let grid_values = [
        GaussianScalar::from_ints(0, 0),
        GaussianScalar::from_ints(1, 0),
        GaussianScalar::from_ints(-1, 0),
        GaussianScalar::from_ints(0, 1),
        GaussianScalar::from_ints(2, -1),
    ];
    let mut grid = 0;
    let mut grid_fixed = 0;
    for a in &grid_values {
        for b in &grid_values {
            for x in &grid_values {
                for y in &grid_values {
                    if let Ok(p) = QuadricPoint::new(a.clone(), b.clone(), x.clone(), y.clone()) {
                        grid += 1;
                        grid_fixed += usize::from(is_fixed_point(&p));
                    }
                }
            }
        }
    }
    c.add(format!("τ fixed-point-free on the {grid}-point grid"), grid_fixed == 0);
    let mut rng = rng();
    let fixed = (0..1000).filter(|_| is_fixed_point(&random_point(&mut rng))).count();
    c.add("τ fixed-point-free on 1000 random points", fixed == 0);
    let involution = (0..200).all(|_| {
        let s = Section11::new(gaussian(&mut rng), gaussian(&mut rng), gaussian(&mut rng), gaussian(&mut rng));
        tau_tilde(&tau_tilde(&s)) == s
    });
    c.add("τ̃² = id on 200 random sections", involution);

    let basis = invariant_section_basis();
    let coords: Vec<IntVector> = basis
        .iter()
        .map(|s| s.real_coordinates().iter().map(|x| x.to_integer()).collect())
        .collect();
    let integral = basis.iter().all(|s| s.real_coordinates().iter().all(BigRational::is_integer));
    let spans = (0..100).all(|_| {
        let r = |rng: &mut ChaCha8Rng| BigRational::new(bi(rng.gen_range(-9..=9)), bi(rng.gen_range(1..=5)));
        let (a1, a2, b1, b2) = (r(&mut rng), r(&mut rng), r(&mut rng), r(&mut rng));
        match fixed_space_embedding(&a1, &a2, &b1, &b2) {
            Ok(s) => is_invariant_section(&s),
            Err(_) => [&a1, &a2, &b1, &b2].iter().all(|x| x.is_zero()),
        }
    });
    c.add(
        "fixed space has rational dimension 4",
        integral && lattice_rank(&coords, 8).unwrap() == 4 && basis.iter().all(is_invariant_section) && spans,
    );

    let locus = base_locus();
    let vanish = locus.iter().all(|p| {
        evaluate_section(&Section11::s1(), p).is_zero() && evaluate_section(&Section11::s2(), p).is_zero()
    });
    let i = GaussianScalar::i();
    let one = GaussianScalar::one();
    let expect = [
        QuadricPoint::new(one.clone(), i.clone(), one.clone(), i.clone()).unwrap(),
        QuadricPoint::new(one.clone(), -&i, one.clone(), -&i).unwrap(),
    ];
    c.add("base locus is ([1:i],[1:i]), ([1:-i],[1:-i])", locus.len() == 2 && vanish && locus[..] == expect[..]);
    c.add("τ swaps the base points", tau(&locus[0]) == locus[1] && tau(&locus[1]) == locus[0]);

    let mut equivariant = 0;
    let mut tried = 0;
    while tried < 100 {
        let p = random_point(&mut rng);
        let (PencilValue::Value(h), PencilValue::Value(ht)) = (pencil_value(&p), pencil_value(&tau(&p))) else {
            continue;
        };
        tried += 1;
        equivariant += usize::from(ht == h.conj());
    }
    c.add(format!("h∘τ = conj∘h on {equivariant}/100 random non-base points"), equivariant == 100);
}

fn criterion_11(c: &mut Checks) {
    let bin = env!("CARGO_BIN_EXE_dfchow");
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../scenarios");
    let scen = |f: &str| format!("{dir}/{f}");
    let mut runs: Vec<Vec<String>> = Vec::new();
    let files = ["p3_p3.json", "flag_flag.json", "blp3_charge.json", "charge_3_5.json"];
    for f in files {
        for args in [
            vec!["ring-show", "--branch", "1"],
            vec!["ring-show", "--branch", "2"],
            vec!["ring-show", "--branch", "q"],
            vec!["equalizer"],
            vec!["surfaces"],
            vec!["surfaces", "--dmax", "50"],
            vec!["surfaces", "--pair", "1", "out", "1", "out"],
            vec!["neck", "--curve", "3", "1", "--character", "1", "-1"],
            vec!["real", "--samples", "50"],
        ] {
            let mut v: Vec<String> = args.iter().map(|s| s.to_string()).collect();
            v.push(scen(f));
            runs.push(v);
        }
    }
    runs.push(vec!["equalizer".into(), "--member".into(), scen("pair_q.json"), scen("p3_p3.json")]);
    runs.push(vec!["neck".into(), "--decorate".into(), scen("decoration.json")]);
    for f in ["blp3_charge.json", "charge_3_5.json"] {
        runs.push(vec!["charge".into(), scen(f)]);
    }
    let mut identical = 0;
    let mut clean = 0;
    for args in &runs {
        let go = || Command::new(bin).arg("--json").args(args).output().expect("binary runs");
        let (a, b) = (go(), go());
        identical += usize::from(a.stdout == b.stdout && !a.stdout.is_empty());
        clean += usize::from(matches!(a.status.code(), Some(0 | 1)));
    }
    c.add(format!("{identical}/{} invocations byte-identical across two runs", runs.len()), identical == runs.len());
    c.add(format!("{clean}/{} invocations produced a report", runs.len()), clean == runs.len());
}

type Criterion = (u32, &'static str, fn(&mut Checks));

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "quadric ring", criterion_1),
        (2, "blow-up rings", criterion_2),
        (3, "equalizer", criterion_3),
        (4, "surfaces", criterion_4),
        (5, "genus oracle", criterion_5),
        (6, "cohomology", criterion_6),
        (7, "specialization", criterion_7),
        (8, "charges", criterion_8),
        (9, "neck", criterion_9),
        (10, "real structure", criterion_10),
        (11, "determinism", criterion_11),
    ];
    let mut unexpected = Vec::new();
    for (id, name, run) in criteria {
        let mut checks = Checks::default();
        let start = Instant::now();
        run(&mut checks);
        let elapsed = start.elapsed();
        let in_time = elapsed < TIME_LIMIT;
        let pass = in_time && checks.0.iter().all(|c| c.holds);
        println!(
            "{} criterion {id:>2} {name} (tolerance: {TOLERANCE}, {:.2}s)",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        for ch in &checks.0 {
            let known = KNOWN_FAILURES.contains(&ch.name.as_str());
            let tag = match (ch.holds, known) {
                (true, false) => "ok",
                (false, true) => "FAIL (known inconsistency)",
                (false, false) => "FAIL",
                (true, true) => "ok (expected to fail)",
            };
            println!("    {tag}: {}", ch.name);
            if ch.holds == known {
                unexpected.push(format!("criterion {id}: {}", ch.name));
            }
        }
        if !in_time {
            println!("    FAIL: exceeded {TIME_LIMIT:?}");
            unexpected.push(format!("criterion {id}: time limit"));
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcomes:\n  {}", unexpected.join("\n  "));
        std::process::exit(1);
    }
}
