//! One function per subcommand. Each returns a [`Report`]; load and input
//! errors propagate as `anyhow` errors.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use dfchow_core::charges::{
    formal_triviality_obstructions, obstruction_dim, ward_gluing_space_dim,
};
use dfchow_core::lattice::{lattice_rank, IntVector};
use dfchow_core::neck::{
    antidiagonal_quotient_over_fibre, fibre_pairing_raw, kn_fixed_phase_bundle, quotient_over_fibre,
    restrict_to_curve, restrict_to_ruling_fibre_bundle, Decoration, DecorationRequest,
};
use dfchow_core::pushout::{build_equalizer, equalizer_membership, BlownUpChow};
use dfchow_core::quadric::{
    arithmetic_genus, intersection_number, quadric_ring, sigma_map, sigma_pushforward, Bidegree,
    QuadricClass,
};
use dfchow_core::realstruct::{
    base_locus, evaluate_section, invariant_section_basis, is_fixed_point, is_invariant_section,
    pencil_value, tau, tau_tilde, PencilValue, QuadricPoint, Section11,
};
use dfchow_core::ring::{GradedRing, RingElement};
use dfchow_core::surfaces::{classify_all, glue_comparison, trace_class, Configuration, SurfaceData};
use dfchow_core::{Error as CoreError, GaussianScalar};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::report::Report;
use crate::scenario::{load_decoration, load_pair_spec, parse_incidence, PairSpec, Scenario};

/// Seed for `real`; fixed so reports are reproducible.
pub const REAL_SEED: u64 = 0x7a75_2d71;

/// Half-width of the coefficient box for the equalizer cross-check.
pub const BRUTE_FORCE_BOUND: i64 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    One,
    Two,
    Quadric,
}

impl std::str::FromStr for Branch {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "1" => Ok(Branch::One),
            "2" => Ok(Branch::Two),
            "q" | "Q" => Ok(Branch::Quadric),
            other => Err(format!("unknown branch {other:?} (expected 1, 2 or q)")),
        }
    }
}

fn basis_table(r: &GradedRing) -> Vec<Vec<String>> {
    r.basis_labels().to_vec()
}

fn product_table(r: &std::sync::Arc<GradedRing>) -> Vec<String> {
    let mut out = Vec::new();
    let top = r.top_degree();
    for d1 in 0..=top {
        for d2 in d1..=top - d1 {
            for i1 in 0..r.rank(d1) {
                let start = if d1 == d2 { i1 } else { 0 };
                for i2 in start..r.rank(d2) {
                    let x = RingElement::basis(r, d1, i1);
                    let y = RingElement::basis(r, d2, i2);
                    let p = x.mul(&y).expect("same ring");
                    out.push(format!("{} * {} = {}", r.label(d1, i1), r.label(d2, i2), p));
                }
            }
        }
    }
    out
}

fn equal_check(report: &mut Report, name: &str, lhs: &dyn std::fmt::Display, rhs: &dyn std::fmt::Display, holds: bool) {
    report.check(name, holds, format!("{lhs} vs {rhs}"));
}

pub fn ring_show(s: &Scenario, branch: Branch, cmd: &str) -> Result<Report> {
    let mut r = Report::new(cmd, Some(s.name.clone()));
    match branch {
        Branch::Quadric => quadric_show(&mut r),
        Branch::One => blow_up_show(&mut r, &s.branch1),
        Branch::Two => blow_up_show(&mut r, &s.branch2),
    }
    Ok(r)
}

fn quadric_show(r: &mut Report) {
    let q = quadric_ring();
    r.put("ring", "Q = P1 x P1");
    r.put("ranks", q.ranks());
    r.put("basis", basis_table(q));
    r.put("products", product_table(q));
    let (b, w, z, xi, pt) = (
        QuadricClass::b(),
        QuadricClass::w(),
        QuadricClass::z(),
        QuadricClass::xi(),
        QuadricClass::point(),
    );
    let zero = QuadricClass::zero();
    let checks: Vec<(&str, QuadricClass, QuadricClass)> = vec![
        ("b^2 = 0", b.mul(&b), zero.clone()),
        ("w^2 = 0", w.mul(&w), zero.clone()),
        ("b·w = [pt]", b.mul(&w), pt),
        ("z^2 + 2zw = 0", z.mul(&z).add(&z.mul(&w).scale(2)), zero),
        ("ξ = b + w", xi.clone(), b.add(&w)),
        ("ξ = z + 2w", xi.clone(), z.add(&w.scale(2))),
        ("σ_*(z) = -z", sigma_pushforward(&z), z.neg()),
        ("σ_*(w) = b", sigma_pushforward(&w), b),
        ("σ_*(ξ) = ξ", sigma_pushforward(&xi), xi),
    ];
    for (name, lhs, rhs) in checks {
        let holds = lhs == rhs;
        equal_check(r, name, &lhs, &rhs, holds);
    }
    let defects = sigma_map().homomorphism_defects();
    r.check("σ is multiplicative", defects.is_empty(), defects.join("; "));
}

fn blow_up_show(r: &mut Report, b: &BlownUpChow) {
    let ring = b.ring();
    r.put("base", b.base().name());
    r.put("ranks", ring.ranks());
    r.put("basis", basis_table(ring));
    r.put("products", product_table(ring));
    let mut restrictions = Vec::new();
    for d in 0..=ring.top_degree() {
        for i in 0..ring.rank(d) {
            let x = RingElement::basis(ring, d, i);
            let img = b.restrict_to_quadric(&x).expect("restriction is total");
            restrictions.push(format!("j*({}) = {}", ring.label(d, i), img));
        }
    }
    r.put("restriction_to_Q", restrictions);
    let mut pushes = Vec::new();
    for (name, g) in [
        ("1", QuadricClass::one()),
        ("b", QuadricClass::b()),
        ("w", QuadricClass::w()),
        ("pt", QuadricClass::point()),
    ] {
        let img = b.push_from_quadric(&g).expect("pushforward is total");
        pushes.push(format!("j_*({name}) = {img}"));
    }
    r.put("pushforward_from_Q", pushes);

    let comm = ring.commutativity_defects();
    r.check("commutativity", comm.is_empty(), comm.join("; "));
    let assoc = ring.associativity_defects();
    r.check("associativity", assoc.is_empty(), assoc.join("; "));
    let proj = b.projection_formula_defects();
    r.check("projection formula j_*(j*x · y) = x · j_*y", proj.is_empty(), proj.join("; "));
    let hom = b.restriction_map().homomorphism_defects();
    r.check("j* is a ring homomorphism", hom.is_empty(), hom.join("; "));

    let jq = b.restrict_to_quadric(&b.q_class()).expect("degree 1");
    let minus_xi = QuadricClass::xi().neg();
    let holds = jq == minus_xi;
    equal_check(r, "j*[Q] = -ξ", &jq, &minus_xi, holds);

    let line = b.pulled_line_class();
    let push_xi = b.push_from_quadric(&QuadricClass::xi()).expect("pushforward is total");
    let holds = push_xi == line;
    equal_check(r, "j_*(ξ) = f*[ℓ]", &push_xi, &line, holds);

    let q2 = b.self_intersection();
    let minus_line = line.neg();
    let holds = q2 == minus_line;
    equal_check(r, "[Q]^2 = -f*[ℓ]", &q2, &minus_line, holds);
}

fn i64_matrix(e: &dfchow_core::EqualizerRing, k: usize) -> Vec<Vec<i64>> {
    let m = e.matching_matrix(k);
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| i64::try_from(m.get(i, j)).expect("matching entries are small"))
                .collect()
        })
        .collect()
}

/// Rank of the integral solutions of `M·v = 0` with entries in `[-bound, bound]`.
pub fn brute_force_rank(m: &[Vec<i64>], cols: usize, bound: i64) -> Result<usize> {
    let mut v = vec![-bound; cols];
    let mut found: Vec<IntVector> = Vec::new();
    'outer: loop {
        if v.iter().any(|&x| x != 0) && m.iter().all(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum::<i64>() == 0) {
            found.push(v.iter().map(|&x| BigInt::from(x)).collect());
        }
        for x in v.iter_mut() {
            if *x < bound {
                *x += 1;
                continue 'outer;
            }
            *x = -bound;
        }
        break;
    }
    Ok(lattice_rank(&found, cols)?)
}

pub fn equalizer(s: &Scenario, member: Option<&Path>, cmd: &str) -> Result<Report> {
    let mut r = Report::new(cmd, Some(s.name.clone()));
    let e = build_equalizer(&s.branch1, &s.branch2).context("building the equalizer")?;
    r.put("ranks", e.ranks());
    let mut bases = Vec::new();
    for k in 0..e.ranks().len() {
        let pairs: Vec<String> = (0..e.lattice(k).len())
            .map(|i| {
                let (a1, a2) = e.basis_pair(k, i);
                format!("({a1} | {a2})")
            })
            .collect();
        bases.push(pairs);
    }
    r.put("basis", bases);

    let closure = e.closure_defects();
    r.put(
        "closure",
        json!({ "basis_products_checked": closure_pairs(&e), "defects": closure.len() }),
    );
    r.check("equalizer is closed under products", closure.is_empty(), closure.join("; "));

    let mut brute = Vec::new();
    for k in 0..e.ranks().len() {
        let m = i64_matrix(&e, k);
        brute.push(brute_force_rank(&m, e.matching_matrix(k).cols(), BRUTE_FORCE_BOUND)?);
    }
    r.put("brute_force_ranks", &brute);
    r.check(
        "ranks agree with bounded enumeration",
        brute == e.ranks(),
        format!("kernel {:?}, enumeration in [-{b}, {b}] {:?}", e.ranks(), brute, b = BRUTE_FORCE_BOUND),
    );

    let (q1, q2) = (s.branch1.q_class(), s.branch2.q_class());
    let qq = equalizer_membership(&e, &q1, &q2)?;
    r.check("([Q1], [Q2]) is in the equalizer", qq, "");

    if let Some(path) = member {
        let spec: PairSpec = load_pair_spec(path)?;
        let p = s.pair(&spec)?;
        let is_member = equalizer_membership(&e, &p.alpha1, &p.alpha2)?;
        let mut out = json!({
            "pair": format!("({} | {})", p.alpha1, p.alpha2),
            "member": is_member,
        });
        if is_member {
            if let Some((k, c)) = e.coordinates(&p.alpha1, &p.alpha2)? {
                out["degree"] = json!(k);
                out["coordinates"] = json!(c.iter().map(|x| x.to_string()).collect::<Vec<_>>());
            }
        } else {
            let d = e.matching_defect(&p.alpha1, &p.alpha2)?;
            out["matching_defect"] = json!(d.to_string());
        }
        r.put("membership", out);
    }
    Ok(r)
}

fn closure_pairs(e: &dfchow_core::EqualizerRing) -> usize {
    let ranks = e.ranks();
    let top = ranks.len() - 1;
    let mut n = 0;
    for d1 in 0..=top {
        for d2 in 0..=top - d1 {
            n += ranks[d1] * ranks[d2];
        }
    }
    n
}

fn config_json(c: &Configuration) -> serde_json::Value {
    json!(c.to_string())
}

pub fn expected_configurations() -> Vec<Configuration> {
    let s = |d, i| SurfaceData { twistor_degree: d, contains_line: i };
    vec![
        Configuration { first: s(2, true), second: s(2, true) },
        Configuration { first: s(1, true), second: s(1, false) },
        Configuration { first: s(1, false), second: s(1, true) },
    ]
}

fn surface_traces(r: &mut Report, ss: &[SurfaceData]) -> Result<()> {
    let xi = QuadricClass::xi();
    for s in ss {
        let t = trace_class(s)?;
        let deg = intersection_number(&t, &xi)?;
        r.check(
            format!("trace of {s} pairs to {} against ξ", s.twistor_degree),
            deg == BigInt::from(s.twistor_degree),
            format!("[S∩Q] = {t}, [S∩Q]·ξ = {deg}"),
        );
        if s.contains_line {
            let (m, n) = t.bw_coords();
            let bd = Bidegree::new(i64::try_from(&m)?, i64::try_from(&n)?);
            let g = arithmetic_genus(bd);
            r.check(format!("trace of {s} is rational"), g == 0, format!("bidegree {bd}, genus {g}"));
        }
    }
    Ok(())
}

pub fn surfaces(s: Option<&Scenario>, d_max: Option<i64>, pair: Option<(SurfaceData, SurfaceData)>, cmd: &str) -> Result<Report> {
    let mut r = Report::new(cmd, s.map(|x| x.name.clone()));
    let listed: Vec<(SurfaceData, SurfaceData)> = s
        .map(|x| x.file.surfaces.iter().map(|p| (p.first, p.second)).collect())
        .unwrap_or_default();
    let d_max = match (d_max, &pair) {
        (Some(d), _) => Some(d),
        (None, None) if listed.is_empty() => Some(50),
        _ => None,
    };
    if let Some(d) = d_max {
        let found = classify_all(d)?;
        r.put("d_max", d);
        r.put("configurations", found.iter().map(config_json).collect::<Vec<_>>());
        let expected: Vec<Configuration> = expected_configurations()
            .into_iter()
            .filter(|c| c.first.twistor_degree <= d && c.second.twistor_degree <= d)
            .collect();
        let same = found.len() == expected.len() && expected.iter().all(|c| found.contains(c));
        r.check(
            "gluable pairs are (2,in)~(2,in), (1,in)~(1,out), (1,out)~(1,in)",
            same,
            format!("{} configuration(s) found", found.len()),
        );
        let mut seen: Vec<SurfaceData> = Vec::new();
        for c in &found {
            for x in [c.first, c.second] {
                if !seen.contains(&x) {
                    seen.push(x);
                }
            }
        }
        surface_traces(&mut r, &seen)?;
    }
    let mut pairs = listed;
    pairs.extend(pair);
    if !pairs.is_empty() {
        let mut rows = Vec::new();
        for (a, b) in &pairs {
            let (lhs, rhs) = glue_comparison(a, b)?;
            rows.push(json!({
                "first": a.to_string(),
                "second": b.to_string(),
                "sigma_trace_first": lhs.to_string(),
                "trace_second": rhs.to_string(),
                "glues": lhs == rhs,
            }));
        }
        r.put("pairs", rows);
    }
    Ok(r)
}

pub fn parse_surface_pair(v: &[String]) -> Result<(SurfaceData, SurfaceData)> {
    let [d1, i1, d2, i2] = v else {
        bail!("--pair takes four values: d1 in|out d2 in|out");
    };
    let first = SurfaceData::new(d1.parse().context("d1")?, parse_incidence(i1)?)?;
    let second = SurfaceData::new(d2.parse().context("d2")?, parse_incidence(i2)?)?;
    Ok((first, second))
}

/// Range of twists checked for formal triviality.
const FORMAL_M_MAX: u32 = 20;

pub fn charge(s: &Scenario, cmd: &str) -> Result<Report> {
    let mut r = Report::new(cmd, Some(s.name.clone()));
    let pol = s
        .file
        .polarization
        .as_ref()
        .ok_or_else(|| anyhow!("scenario has no polarization block"))?;
    if s.file.bundles.is_empty() {
        bail!("scenario has no bundle block");
    }
    let fibre = s.central_fibre()?;
    let h = s.pair(pol).context("polarization")?;
    if !fibre.is_matched(&h)? {
        let d = fibre.matching_defect(&h)?;
        bail!("polarization pair is not matched on the double locus (defect {d})");
    }
    let label = if s.file.assumption_DEF {
        "smooth-fibre charge"
    } else {
        "central-fibre degree"
    };
    r.put("assumption_DEF", s.file.assumption_DEF);
    r.put("hypotheses", &s.file.hypotheses);
    r.put("polarization", format!("({} | {})", h.alpha1, h.alpha2));
    let mut rows = Vec::new();
    for (idx, spec) in s.file.bundles.iter().enumerate() {
        let name = spec.name.clone().unwrap_or_else(|| format!("bundle {}", idx + 1));
        let data = s.bundle(spec).with_context(|| name.clone())?;
        let c2 = fibre.glued_c2_cycle(&data)?;
        let ch = fibre.polarized_charge(&data, &h)?;
        let obstruction = match obstruction_dim(&data) {
            Ok(n) => json!(n),
            Err(CoreError::RestrictionNotTrivial) => {
                json!("not computed: restriction to Q is not trivial")
            }
            Err(e) => return Err(e.into()),
        };
        let formal = formal_triviality_obstructions(FORMAL_M_MAX, spec.rank)?;
        let ward = ward_gluing_space_dim(spec.rank)?;
        r.check(
            format!("{name}: charge is the sum of branch degrees"),
            ch.total == &ch.branch1 + &ch.branch2,
            format!("{} + {} = {}", ch.branch1, ch.branch2, ch.total),
        );
        r.check(
            format!("{name}: h1(O_Q(m+1,m+1)) obstructions vanish for m <= {FORMAL_M_MAX}"),
            formal.iter().all(|&x| x == 0),
            "",
        );
        let r2 = i64::from(spec.rank) * i64::from(spec.rank);
        r.check(
            format!("{name}: gluings of trivial bundles form a space of dimension r^2"),
            ward == r2,
            format!("{ward} vs {r2}"),
        );
        rows.push(json!({
            "name": name,
            "rank": spec.rank,
            "c2": format!("({} | {})", data.c2_pair.alpha1, data.c2_pair.alpha2),
            "c2_matched": c2.matched,
            "trivial_on_Q": spec.trivial_on_Q,
            "label": label,
            "branch1": ch.branch1.to_string(),
            "branch2": ch.branch2.to_string(),
            label: ch.total.to_string(),
            "obstruction_dim": obstruction,
            "ward_gluing_dim": ward,
        }));
    }
    r.put("bundles", rows);
    if !s.file.assumption_DEF {
        r.note("assumption_DEF is off: totals are central-fibre degrees, not smooth-fibre charges");
    }
    Ok(r)
}

pub struct NeckArgs {
    pub curve: Option<(i64, i64)>,
    pub character: Option<(i64, i64)>,
    pub decorate: Option<std::path::PathBuf>,
}

pub fn neck(s: Option<&Scenario>, args: &NeckArgs, cmd: &str) -> Result<Report> {
    let mut r = Report::new(cmd, s.map(|x| x.name.clone()));
    let kn = kn_fixed_phase_bundle();
    let raw = fibre_pairing_raw(&kn)?;
    let fibre = restrict_to_ruling_fibre_bundle(&kn)?;
    let oriented = fibre.degree().expect("fibre bundle").clone();
    let (anti_c1, _) = quotient_over_fibre((1, 1))?;
    let anti = antidiagonal_quotient_over_fibre();
    r.put("kn_c1", kn.quadric_c1()?.to_string());
    r.put("fibre_pairing_raw", raw.to_string());
    r.put("fibre_restriction", oriented.to_string());
    r.put("antidiagonal_quotient", json!({ "c1": anti_c1, "manifold": anti }));
    let one = BigInt::from(1);
    r.check("|c1 of KN bundle on a ruling fibre| = 1", raw.magnitude() == one.magnitude(), format!("raw {raw}"));
    r.check("KN bundle restricts to the Hopf fibration (c1 = +1)", oriented == one, format!("{oriented}"));
    r.check(
        "anti-diagonal quotient has c1 = 2 and is RP3",
        anti_c1 == 2 && anti.to_string() == "RP3",
        format!("c1 = {anti_c1}, {anti}"),
    );
    if let Some((a, b)) = args.curve {
        let c = restrict_to_curve(&kn, Bidegree::new(a, b))?;
        let deg = c.degree().expect("curve bundle").clone();
        r.put("curve", json!({ "bidegree": [a, b], "c1": deg.to_string() }));
        let expect = BigInt::from(-(a + b));
        r.check(format!("KN c1 on a ({a}, {b}) curve is -(a+b)"), deg == expect, format!("{deg}"));
    }
    if let Some(ch) = args.character {
        let (c1, tag) = quotient_over_fibre(ch)?;
        r.put("character", json!({ "character": [ch.0, ch.1], "c1": c1, "manifold": tag }));
    }
    let request: Option<DecorationRequest> = match &args.decorate {
        Some(p) => Some(load_decoration(p)?),
        None => s.and_then(|x| x.file.decoration.clone()),
    };
    if let Some(req) = request {
        let dec: Decoration = req.solve().context("solving the phase decoration")?;
        for p in &dec.points {
            r.check(
                format!("ρ1·ρ2 = e^(iθ) at {}", p.id),
                &p.rho1 * &p.rho2 == dec.theta,
                format!("ρ1 = {}, ρ2 = {}", p.rho1, p.rho2),
            );
        }
        r.put("decoration", &dec);
    }
    Ok(r)
}

fn random_scalar(rng: &mut ChaCha8Rng) -> GaussianScalar {
    GaussianScalar::from_fractions(
        rng.gen_range(-9..=9),
        rng.gen_range(1..=6),
        rng.gen_range(-9..=9),
        rng.gen_range(1..=6),
    )
}

pub fn random_point(rng: &mut ChaCha8Rng) -> QuadricPoint {
    loop {
        let c = [0; 4].map(|_| random_scalar(rng));
        let [a, b, c2, d] = c;
        if let Ok(p) = QuadricPoint::new(a, b, c2, d) {
            return p;
        }
    }
}

fn grid_points() -> Vec<QuadricPoint> {
    let mut out = Vec::new();
    let g = |x: i64| GaussianScalar::from_ints(x, 0);
    for a in -2..=2 {
        for b in -2..=2 {
            for c in -2..=2 {
                for d in -2..=2 {
                    if let Ok(p) = QuadricPoint::new(g(a), g(b), g(c), g(d)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn integral_coordinates(s: &Section11) -> Result<IntVector> {
    s.real_coordinates()
        .iter()
        .map(|x| {
            x.is_integer()
                .then(|| x.to_integer())
                .ok_or_else(|| anyhow!("non-integral basis section"))
        })
        .collect()
}

pub fn real(samples: usize, cmd: &str, scenario: Option<&Scenario>) -> Result<Report> {
    let mut r = Report::new(cmd, scenario.map(|x| x.name.clone()));
    let mut rng = ChaCha8Rng::seed_from_u64(REAL_SEED);
    let locus = base_locus();
    r.put("base_locus", &locus);
    let vanish = locus.iter().all(|p| {
        evaluate_section(&Section11::s1(), p).is_zero() && evaluate_section(&Section11::s2(), p).is_zero()
    });
    r.check("base locus has two points where s1 = s2 = 0", locus.len() == 2 && vanish, format!("{} point(s)", locus.len()));
    let swapped = locus.len() == 2 && tau(&locus[0]) == locus[1] && tau(&locus[1]) == locus[0];
    r.check("τ swaps the base points", swapped, "");

    let basis = invariant_section_basis();
    r.put("fixed_space_basis", &basis);
    let coords = basis.iter().map(integral_coordinates).collect::<Result<Vec<_>>>()?;
    let dim = lattice_rank(&coords, 8)?;
    r.put("fixed_space_dimension", dim);
    r.check("invariant sections form a real 4-dimensional space", dim == 4 && basis.iter().all(is_invariant_section), format!("rank {dim}"));
    let inv = [Section11::s1(), Section11::s2()].iter().all(is_invariant_section);
    r.check("s1 and s2 are τ-invariant", inv, "");
    let tt = basis.iter().chain([Section11::s1(), Section11::s2()].iter()).all(|s| tau_tilde(&tau_tilde(s)) == *s);
    r.check("τ̃ is an involution", tt, "");

    let grid = grid_points();
    let grid_fixed = grid.iter().filter(|p| is_fixed_point(p)).count();
    r.check("τ has no fixed point on the 5^4 grid", grid_fixed == 0, format!("{} points", grid.len()));

    let mut fixed = 0;
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut sample_rows = Vec::new();
    while checked < samples {
        let p = random_point(&mut rng);
        if is_fixed_point(&p) {
            fixed += 1;
        }
        let (v, vt) = (pencil_value(&p), pencil_value(&tau(&p)));
        let (PencilValue::Value(a), PencilValue::Value(b)) = (&v, &vt) else {
            continue;
        };
        checked += 1;
        if *b != a.conj() {
            failures.push(serde_json::to_string(&p)?);
        }
        if sample_rows.len() < 3 {
            sample_rows.push(json!({ "point": p, "h": a, "h_tau": b }));
        }
    }
    r.put("samples", json!({ "seed": REAL_SEED, "count": samples, "first": sample_rows }));
    r.check("τ has no fixed point on random samples", fixed == 0, format!("{samples} samples"));
    r.check(
        "h∘τ = conj∘h on random non-base points",
        failures.is_empty(),
        if failures.is_empty() { format!("{samples} samples") } else { failures.join("; ") },
    );
    Ok(r)
}
