//! One line per acceptance criterion, then a nonzero exit if any failed, so
//! that every criterion reports even when an earlier one fails.

use std::time::Instant;

use leech_cusp::field::{rat, CycloElem, EisensteinInt, FieldElem, RealQuad};
use leech_cusp::leech::{self, build_leech, LeechPoint};
use leech_cusp::lorentz::{
    decompose, height, in_lattice, ip, is_leech_root, project_to_mirror, triflection, AmbientVector, HeisenbergElement, Root, Zeta,
};
use leech_cusp::reduction::{
    self, overlap_constants, random_leech_root, reduce_to_leech, sample_roots, verify_region_corners, verify_trace, y_formula, y_in_lattice, y_param,
    CornerClass, Recipe, ReductionError,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    id: u8,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn run(id: u8, name: &'static str, f: impl FnOnce() -> Result<String, String>) -> Outcome {
    let start = Instant::now();
    let (pass, detail) = match f() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    let o = Outcome { id, name, pass, detail };
    println!(
        "criterion {} [{}] {}: {} ({} ms)",
        o.id,
        if o.pass { "PASS" } else { "FAIL" },
        o.name,
        o.detail,
        start.elapsed().as_millis()
    );
    o
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lattice_suite() -> Result<String, String> {
    let l = build_leech().map_err(|e| e.to_string())?;
    let c = l.verify();
    check(c.min_norm_is_6(), || format!("minimal norm check failed: {c:?}"))?;
    check(c.theta_dual(), || "not theta times its dual".into())?;
    check(c.det_is_729(), || format!("det = {}", c.det))?;
    check(c.all_pass(), || format!("{c:?}"))?;
    Ok(format!("min norm 6 (0 short vectors), Λ = θΛ*, det {}", c.det))
}

fn norm6_count() -> Result<String, String> {
    let n = leech::standard().min_vectors(6);
    check(n == 196_560, || format!("{n} vectors of norm 6"))?;
    Ok(format!("{n} vectors of norm 6"))
}

fn mirror_projection_heights() -> Result<String, String> {
    let rho = AmbientVector::rho();
    let roots = sample_roots(1000, 8, 41);
    let mut leech_count = 0;
    for s in &roots {
        let p = project_to_mirror(&rho, s);
        let h = height(&rho, &p).map_err(|e| e.to_string())?;
        let expected = ip(&rho, s.vector()).abs_sq() * RealQuad::from_rational(rat(1, 3));
        check(h == expected, || format!("ht_rho(p) = {h}, |<rho,s>|^2/3 = {expected} for {s}"))?;
        check(h >= RealQuad::one(), || format!("height {h} below 1 for {s}"))?;
        check((h == RealQuad::one()) == is_leech_root(s), || format!("equality case mismatch for {s}"))?;
        leech_count += usize::from(is_leech_root(s));
    }
    Ok(format!("1000 roots, {leech_count} Leech roots at height exactly 1, all others above"))
}

fn overlap_constant_table() -> Result<String, String> {
    let checks = overlap_constants().map_err(|e| e.to_string())?;
    let bad: Vec<_> = checks.iter().filter(|c| !c.matches).collect();
    check(bad.is_empty(), || format!("mismatches: {bad:?}"))?;
    Ok(format!("{} exact constants match", checks.len()))
}

fn corner_table() -> Result<String, String> {
    for m_sq in [8, 9, 12, 13] {
        let r = verify_region_corners(m_sq);
        check(r.all_inside(), || format!("|m|^2 = {m_sq}: {:?}", r.corners))?;
    }
    let r7 = verify_region_corners(7);
    for v in ["v1", "v2", "v3", "v4"] {
        check(r7.class_of(v) == Some(CornerClass::Inside), || format!("|m|^2 = 7: {v} not strictly inside"))?;
    }
    check(r7.class_of("v5") == Some(CornerClass::Boundary), || "|m|^2 = 7: v5 not on the boundary".into())?;
    let r4 = verify_region_corners(4);
    check(r4.class_of("v4") == Some(CornerClass::Outside), || "|m|^2 = 4: v4 not outside".into())?;
    check(r4.class_of("v5") == Some(CornerClass::Outside), || "|m|^2 = 4: v5 not outside".into())?;
    let cert = r4.excluded_disks.ok_or("no excluded-disk certificate at |m|^2 = 4")?;
    check(cert.holds, || format!("excluded disks do not cover: {cert:?}"))?;
    Ok("|m|^2 in {8,9,12,13} inside; 7 has v5 on the boundary; 4 covered by the disks about -3/4 ± θ/2".into())
}

fn y_cross_check() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(59);
    let roots = sample_roots(1000, 6, 58);
    let mut pairs = 0;
    for s in &roots {
        let Ok(d) = decompose(s.vector()) else { continue };
        let l = random_leech_root(&mut rng);
        let spec = l.leech_spec().ok_or("sampled Leech root without m = 1")?;
        let yp = y_param(&d, &spec);
        let yf = y_formula(&d, &spec);
        check(yp == yf, || format!("y_param {yp} != y_formula {yf} for {s}, {l}"))?;
        check(y_in_lattice(&yp, &d.m), || format!("y = {yp} not in -3/|m|^2 + (θ/m)E for {s}"))?;
        pairs += 1;
    }
    check(pairs == 1000, || format!("only {pairs} pairs"))?;
    Ok(format!("{pairs} pairs agree and satisfy the lattice membership"))
}

fn end_to_end() -> Result<String, String> {
    let roots = sample_roots(200, 8, 2024);
    let mut steps = 0;
    let mut fallbacks = 0;
    let mut failures = Vec::new();
    let mut max_height = RealQuad::zero();
    for s in &roots {
        match reduce_to_leech(s) {
            Ok(trace) => {
                verify_trace(&trace).map_err(|e| format!("{s}: {e}"))?;
                let h = trace.heights();
                check(h.windows(2).all(|w| w[1] < w[0]), || format!("heights not decreasing: {h:?}"))?;
                check(is_leech_root(&trace.final_root), || "final root not a Leech root".into())?;
                for st in &trace.steps {
                    if st.recipe == Recipe::Canonical && st.witnesses.overlap.is_none() {
                        let m_sq = st.working_root().vector().y.abs_sq();
                        let rc = reduction::ycalc::rectangle_check(&st.y_value, &m_sq);
                        check(rc.all(), || format!("canonical y = {} outside the rectangle: {rc:?}", st.y_value))?;
                    }
                }
                if h[0] > max_height {
                    max_height = h[0].clone();
                }
                steps += trace.steps.len();
                fallbacks += trace.fallback_count();
            }
            Err(ReductionError::RecipeFailed { root, y, steps_done }) => {
                println!("RecipeFailed after {steps_done} steps: root {root}, y = {y}");
                failures.push(y);
            }
            Err(e) => return Err(format!("{s}: {e}")),
        }
    }
    check(failures.is_empty(), || format!("{} RecipeFailed occurrences", failures.len()))?;
    Ok(format!("200 roots, {steps} certified steps, {fallbacks} fallback steps, 0 RecipeFailed, max initial height {max_height}"))
}

fn random_vector(rng: &mut ChaCha8Rng) -> AmbientVector {
    let sigma: Vec<EisensteinInt> = (0..12).map(|_| EisensteinInt::new(rng.gen_range(-3..=3), rng.gen_range(-3..=3))).collect();
    // σ need not lie in Λ for the form and order checks
    let sigma: [FieldElem; 12] = std::array::from_fn(|i| FieldElem::from(&sigma[i]));
    AmbientVector::new(
        sigma,
        FieldElem::from(EisensteinInt::new(rng.gen_range(-3..=3), rng.gen_range(-3..=3))),
        FieldElem::from(EisensteinInt::new(rng.gen_range(-3..=3), rng.gen_range(-3..=3))),
    )
}

fn lattice_vector(rng: &mut ChaCha8Rng, roots: &[Root]) -> AmbientVector {
    let a = &roots[rng.gen_range(0..roots.len())];
    let b = &roots[rng.gen_range(0..roots.len())];
    let c = FieldElem::from(EisensteinInt::new(rng.gen_range(-2..=2), rng.gen_range(-2..=2)));
    a.vector() + &b.vector().scale(&c)
}

fn isometries() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let rho = AmbientVector::rho();
    let roots = sample_roots(60, 4, 88);
    for i in 0..100 {
        let s = &roots[i % roots.len()];
        let zeta = if i % 2 == 0 { Zeta::Omega } else { Zeta::OmegaBar };
        let (x, y) = (random_vector(&mut rng), random_vector(&mut rng));
        let (rx, ry) = (triflection(s, zeta, &x), triflection(s, zeta, &y));
        check(ip(&rx, &ry) == ip(&x, &y), || "triflection does not preserve the form".into())?;
        let r3 = triflection(s, zeta, &triflection(s, zeta, &rx));
        check(r3 == x, || "triflection does not have order 3".into())?;
        let v = lattice_vector(&mut rng, &roots);
        check(in_lattice(&triflection(s, zeta, &v)), || "triflection leaves L".into())?;
    }
    for _ in 0..100 {
        let lam_a = reduction_lambda(&mut rng);
        let lam_b = reduction_lambda(&mut rng);
        let a = HeisenbergElement::with_offset(lam_a, rng.gen_range(-3..=3));
        let b = HeisenbergElement::with_offset(lam_b, rng.gen_range(-3..=3));
        check(a.validate().is_ok() && b.validate().is_ok(), || "invalid Heisenberg element".into())?;
        let (x, y) = (random_vector(&mut rng), random_vector(&mut rng));
        check(ip(&a.apply(&x), &a.apply(&y)) == ip(&x, &y), || "translation does not preserve the form".into())?;
        check(a.apply(&rho) == rho, || "translation moves rho".into())?;
        check(a.compose(&b).apply(&x) == a.apply(&b.apply(&x)), || "composition law fails".into())?;
        let v = lattice_vector(&mut rng, &roots);
        check(in_lattice(&a.apply(&v)), || "translation leaves L".into())?;
        let l = random_leech_root(&mut rng);
        check(Root::new(a.apply(l.vector())).is_ok_and(|r| is_leech_root(&r)), || "translation does not permute Leech roots".into())?;
    }
    let lattice = leech::standard();
    let mut worst = rat(0, 1);
    for _ in 0..500 {
        let target: Vec<CycloElem> = (0..12)
            .map(|_| {
                let d = rng.gen_range(1..=12);
                CycloElem::new(rat(rng.gen_range(-40..=40), d), rat(rng.gen_range(-40..=40), d))
            })
            .collect();
        let (_, dist) = lattice.cvp_cyclo(&target, &RealQuad::from_int(3)).map_err(|e| e.to_string())?;
        check(dist <= rat(3, 1), || format!("distance^2 {dist} > 3"))?;
        if dist > worst {
            worst = dist;
        }
    }
    Ok(format!("200 triflection and translation checks; 500 CVP targets, worst distance^2 {worst}"))
}

fn reduction_lambda(rng: &mut ChaCha8Rng) -> LeechPoint {
    let basis = leech::standard().basis();
    let a = &basis[rng.gen_range(0..basis.len())];
    let b = &basis[rng.gen_range(0..basis.len())];
    a + &b.scale(&EisensteinInt::new(rng.gen_range(-1..=1), rng.gen_range(-1..=1)))
}

fn main() -> std::process::ExitCode {
    let outcomes = [
        run(1, "lattice suite", lattice_suite),
        run(2, "norm-6 vector count", norm6_count),
        run(3, "mirror projection heights", mirror_projection_heights),
        run(4, "ball-overlap constants", overlap_constant_table),
        run(5, "region corner table", corner_table),
        run(6, "y-calculus cross-check", y_cross_check),
        run(7, "end-to-end reduction", end_to_end),
        run(8, "isometry property suite", isometries),
    ];
    let failed: Vec<u8> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    println!("acceptance: {}/{} criteria pass", outcomes.len() - failed.len(), outcomes.len());
    if failed.is_empty() {
        std::process::ExitCode::SUCCESS
    } else {
        let names: Vec<&str> = outcomes.iter().filter(|o| !o.pass).map(|o| o.name).collect();
        eprintln!("failing criteria: {failed:?} ({})", names.join(", "));
        std::process::ExitCode::FAILURE
    }
}
