//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero if any fails.
//!
//! Run with `cargo test -p tamedef --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use tamedef::catalog::{integer_det, list_families, Family};
use tamedef::character::{gen_decomp, is_maximally_ordinary_index, orbits};
use tamedef::classifier::{completeness_search, verify_biglist, verify_claim2, verify_tube, Instance};
use tamedef::deformation::{
    build_rprime, build_sprime, c_n, theorem_presentation, verify_h_iso, verify_theta_iso, ModuleStructure,
};
use tamedef::scalars::{minpoly_nu, q_poly, q_poly_z, WittRing, ZPoly};
use tamedef::DefectType;

const N: u32 = 24;

type Outcome = Result<(), Vec<String>>;

struct Check {
    failures: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Check { failures: Vec::new() }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn done(self) -> Outcome {
        if self.failures.is_empty() {
            Ok(())
        } else {
            Err(self.failures)
        }
    }
}

fn m(n: u32) -> usize {
    1 << (n - 2)
}

fn module_instances() -> Vec<(Family, u32)> {
    let mut out = Vec::new();
    for f in list_families() {
        if f.defect_type() == DefectType::Q && f.n_min() <= 3 {
            out.push((f, 3));
        }
        out.push((f, 4));
    }
    out
}

// ---- criterion 1 -------------------------------------------------------------------------

/// ∏ (t − r) over the conjugates r of the generalized decomposition values, in floating point.
fn q_from_roots(n: u32, ty: DefectType) -> Vec<(f64, f64)> {
    let order = (1u64 << (n - 1)) as f64;
    let half = 1u64 << (n - 3);
    let mut poly = vec![(1.0, 0.0)];
    for i in 1..(1u64 << (n - 2)) {
        let th = 2.0 * std::f64::consts::PI * i as f64 / order;
        let root = if ty == DefectType::SD && i % 2 == 1 {
            let s = if i < half { 1.0 } else { -1.0 };
            (0.0, s * 2.0 * th.sin())
        } else {
            (2.0 * th.cos(), 0.0)
        };
        let mut next = vec![(0.0, 0.0); poly.len() + 1];
        for (k, &(re, im)) in poly.iter().enumerate() {
            next[k + 1].0 += re;
            next[k + 1].1 += im;
            next[k].0 -= re * root.0 - im * root.1;
            next[k].1 -= re * root.1 + im * root.0;
        }
        poly = next;
    }
    poly
}

fn criterion_1() -> Outcome {
    let mut c = Check::new();
    for n in 3..=8 {
        for ty in DefectType::ALL {
            if n < ty.n_min().max(3) {
                continue;
            }
            let q = q_poly_z(n, ty).expect("q_n");
            let d = m(n) - 1;
            c.expect(q.degree() == Some(d), || format!("deg q_{n}^{ty} = {:?}", q.degree()));
            c.expect(q.is_monic(), || format!("q_{n}^{ty} not monic"));
            let even_tail = q.coeffs()[..d].iter().all(|a| (a % 2u32).is_zero());
            c.expect(even_tail, || format!("q_{n}^{ty} is not t^{d} mod 2"));
            if n <= 7 {
                let approx = q_from_roots(n, ty);
                for (k, a) in q.coeffs().iter().enumerate() {
                    let exact: f64 = a.to_string().parse().unwrap();
                    let (re, im) = approx[k];
                    let ok = (re - exact).abs() < 1e-6 * (1.0 + exact.abs()) && im.abs() < 1e-6 * (1.0 + exact.abs());
                    c.expect(ok, || format!("q_{n}^{ty} coefficient {k}: {exact} vs root product {re}+{im}i"));
                }
            }
        }
    }
    for (ty, want) in [(DefectType::D, [0, -2, 0, 1]), (DefectType::Q, [0, -2, 0, 1]), (DefectType::SD, [0, 2, 0, 1])] {
        let q = q_poly_z(4, ty).unwrap();
        c.expect(q == ZPoly::from_i64(&want), || format!("q_4^{ty} = {q:?}"));
    }
    c.done()
}

// ---- criterion 2 -------------------------------------------------------------------------

/// Cyclic convolution modulo 2^N, written independently of the library's group ring.
fn conv(a: &[u64], b: &[u64]) -> Vec<u64> {
    let len = a.len();
    let mask = (1u64 << N) - 1;
    let mut out = vec![0u64; len];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let k = (i + j) % len;
            out[k] = (out[k].wrapping_add(x.wrapping_mul(y))) & mask;
        }
    }
    out
}

fn criterion_2() -> Outcome {
    let mut c = Check::new();
    let ring = WittRing::new(N).unwrap();
    let mask = (1u64 << N) - 1;
    for (flavour, ty) in [("semidihedral", DefectType::SD), ("inversion", DefectType::D), ("inversion", DefectType::Q)] {
        let mut expected = BigInt::from(if ty == DefectType::SD { 3 } else { 1 });
        for n in 4..=6u32 {
            let order = 1usize << (n - 1);
            let tau_exp = if ty == DefectType::SD { order / 2 - 1 } else { order - 1 };
            let mut h = vec![0u64; order];
            h[1] += 1;
            h[tau_exp] += 1;
            let q = q_poly(n, ty, ring).unwrap();
            // Horner evaluation of q at h.
            let mut val = vec![0u64; order];
            for k in (0..=q.degree().unwrap()).rev() {
                val = conv(&val, &h);
                val[0] = (val[0] + q.coeff(k)) & mask;
            }
            let cn = ring.from_bigint(&expected);
            let rhs: Vec<u64> = (0..order).map(|k| if k % 2 == 1 { cn } else { 0 }).collect();
            c.expect(val == rhs, || format!("{flavour} {ty} n={n}: q_n(σ+τσ) ≠ {expected}·σT(σ²)"));
            c.expect((&expected % 2u32).is_one(), || format!("c_{n} = {expected} is even"));
            let lib = if ty == DefectType::SD { c_n(n, N).ok() } else { verify_h_iso(n, ty, N).unwrap().c_n };
            let want = Some(ring.to_signed(cn));
            c.expect(lib == want, || format!("{flavour} n={n}: library c_n {lib:?}, expected {want:?}"));
            if n == 4 {
                let c4 = if ty == DefectType::SD { 3 } else { 1 };
                c.expect(expected == BigInt::from(c4), || format!("{flavour}: c_4 = {expected}"));
            }
            expected = 2 * &expected * &expected - 1;
        }
    }
    c.done()
}

// ---- criterion 3 -------------------------------------------------------------------------

fn criterion_3() -> Outcome {
    let mut c = Check::new();
    for n in 3..=5 {
        for ty in DefectType::ALL {
            if n < ty.n_min().max(3) {
                continue;
            }
            let cert = verify_h_iso(n, ty, N).unwrap();
            c.expect(cert.valid, || format!("h-iso {ty} n={n} invalid: {cert:?}"));
            c.expect(cert.rank == m(n) - 1, || format!("h-iso {ty} n={n} rank {}", cert.rank));
            let rp = build_rprime(n, ty, N).unwrap().rank();
            let sp = build_sprime(n, ty, N).unwrap().rank();
            c.expect(rp == Some(m(n) - 1) && sp == rp, || format!("{ty} n={n}: ranks R′ {rp:?}, S′ {sp:?}"));
        }
    }
    for n in 4..=5 {
        let cert = verify_theta_iso(n, N).unwrap();
        c.expect(cert.valid, || format!("θ-iso n={n} invalid: {cert:?}"));
        c.expect(cert.theta_rank == Some(m(n)), || format!("Θ rank at n={n}: {:?}", cert.theta_rank));
    }
    c.done()
}

// ---- criterion 4 -------------------------------------------------------------------------

fn catalog_range(f: Family) -> std::ops::RangeInclusive<u32> {
    f.n_min()..=5
}

fn criterion_4a() -> Outcome {
    let mut c = Check::new();
    c.expect(list_families().len() == 24, || format!("{} families registered", list_families().len()));
    let mut off = BTreeSet::new();
    for f in list_families() {
        for n in catalog_range(f) {
            let det = integer_det(&f.cartan(n).unwrap()).unwrap();
            if det != 1i128 << n {
                off.insert(f.name());
                c.expect(false, || format!("{} n={n}: det(DᵀD) = {det} ≠ 2^{n}", f.name()));
            }
        }
    }
    if !off.is_empty() {
        c.failures.insert(0, format!("{} families deviate: {}", off.len(), off.into_iter().collect::<Vec<_>>().join(", ")));
    }
    c.done()
}

fn criterion_4b() -> Outcome {
    let mut c = Check::new();
    for f in list_families() {
        for n in catalog_range(f) {
            let dm = f.decomposition_matrix(n).unwrap();
            let h1 = dm.rows_of_height(1).len();
            let ok = if f.defect_type() == DefectType::Q && n == 3 {
                h1 == 3
            } else if n == 3 {
                // Rows of height n − 2 = 1 add to the family χ_{5,i} here.
                dm.height_one_family().len() == m(n) - 1
            } else {
                h1 == m(n) - 1
            };
            c.expect(ok, || format!("{} n={n}: {h1} height-one rows", f.name()));
        }
    }
    c.done()
}

fn criterion_4c() -> Outcome {
    let mut c = Check::new();
    for f in list_families() {
        for n in catalog_range(f) {
            let cartan = f.cartan(n).unwrap();
            let sum: u64 = cartan.iter().flatten().sum();
            let alg = f.default_algebra(n).unwrap();
            c.expect(alg.dim() as u64 == sum, || format!("{} n={n}: dim {} vs ΣC {sum}", f.name(), alg.dim()));
        }
    }
    c.done()
}

// ---- criterion 5 -------------------------------------------------------------------------

fn criterion_5() -> Outcome {
    let mut c = Check::new();
    for (f, n) in module_instances() {
        let inst = Instance::default_for(f, n).unwrap();
        let report = verify_biglist(&inst).unwrap();
        let ext = if inst.is_q8() { 0 } else { 1 };
        let labels: Vec<String> = f.mo_recipes(n).unwrap().into_iter().map(|r| r.label).collect();
        let got: Vec<String> = report.recipes.iter().map(|r| r.recipe.clone()).collect();
        c.expect(got == labels, || format!("{} n={n}: recipes {got:?}", f.name()));
        for r in &report.recipes {
            let ok = r.error.is_none()
                && r.indecomposable == Some(true)
                && r.stable_end_dim == Some(1)
                && r.ext1_dim == Some(ext);
            c.expect(ok, || format!("{} n={n} {}: {r:?}", f.name(), r.recipe));
        }
    }

    let f = tamedef::catalog::family("SD(3A)₁").unwrap();
    let inst = Instance::default_for(f, 4).unwrap();
    let search = completeness_search(&inst, None).unwrap();
    for shape in ["0⊕2|1|0", "0⊕1|2|0", "0|1⊕2|0"] {
        let hits: Vec<_> = search.rejected.iter().filter(|r| r.module.shape == shape).collect();
        c.expect(!hits.is_empty(), || format!("rejected shape {shape} not found"));
        c.expect(hits.iter().all(|r| r.stable_end_dim == 2), || format!("rejected shape {shape}: {hits:?}"));
    }
    c.done()
}

// ---- criterion 6 -------------------------------------------------------------------------

fn criterion_6() -> Outcome {
    let mut c = Check::new();
    for f in list_families() {
        let inst = Instance::default_for(f, 4).unwrap();
        let s = completeness_search(&inst, None).unwrap();
        let accepted: BTreeSet<String> = s.accepted.iter().filter_map(|a| a.recipe.clone()).collect();
        let expected: BTreeSet<String> = f.mo_recipes(4).unwrap().into_iter().map(|r| r.label).collect();
        c.expect(s.exhaustive, || format!("{}: search not exhaustive", f.name()));
        c.expect(s.accepted.iter().all(|a| a.recipe.is_some()), || format!("{}: unmatched accepted module", f.name()));
        c.expect(s.accepted.len() == expected.len() && accepted == expected, || {
            format!("{}: accepted {accepted:?}, recipes {expected:?}", f.name())
        });
    }
    c.done()
}

// ---- criteria 7 and 8 --------------------------------------------------------------------

/// Recipes whose module lies in a 3-tube, by family alias; `None` means every recipe.
fn tube_table(alias: &str) -> Option<&'static [&'static str]> {
    match alias {
        "D2A" | "D2B" | "D3A_1" | "D3B_1" | "D3K" => None,
        "SD2A_2" | "SD2B_1" | "SD3B_1" | "SD3C_21" => None,
        "SD3A_1" => Some(&["u0201", "u1020"]),
        "SD3C_22" => Some(&["top-T0", "soc-T0"]),
        "SD3H_1" => Some(&["u12"]),
        "SD3H_2" => Some(&["u01"]),
        _ => Some(&[]),
    }
}

fn in_tube(f: Family, label: &str) -> bool {
    tube_table(f.alias()).is_none_or(|t| t.contains(&label))
}

fn criterion_7() -> Outcome {
    let mut c = Check::new();
    for f in list_families() {
        let inst = Instance::default_for(f, 4).unwrap();
        for r in f.mo_recipes(4).unwrap() {
            let cert = verify_tube(&f, 4, &r, &inst.algebra, 7).unwrap();
            let want = in_tube(f, &r.label);
            let mut ok = cert.pass && cert.tube_found == want && cert.rule_says_tube == want;
            if want {
                ok &= cert.stable_end_dim == Some(1)
                    && cert.ext1_dim == Some(0)
                    && cert.candidates.iter().any(|k| k.omega3_iso == Some(true));
            }
            c.expect(ok, || format!("{} {}: expected tube={want}, got {cert:?}", f.name(), r.label));
        }
    }
    c.done()
}

fn criterion_8() -> Outcome {
    let mut c = Check::new();
    let n = 4;
    for f in list_families() {
        let inst = Instance::default_for(f, n).unwrap();
        for r in f.mo_recipes(n).unwrap() {
            let cert = verify_claim2(&f, n, &r, &inst.algebra, 7).unwrap();
            let mp = m(n) - 1;
            let mut ok = cert.pass
                && cert.end_dim == mp
                && cert.generator_index == Some(mp)
                && cert.top_quotient_indecomposable == Some(true);
            if in_tube(f, &r.label) {
                ok &= cert.truncation_iso == Some(true);
            }
            c.expect(ok, || format!("{} {}: {cert:?}", f.name(), r.label));
        }
    }
    c.done()
}

// ---- criterion 9 -------------------------------------------------------------------------

fn criterion_9() -> Outcome {
    let mut c = Check::new();
    let ring = WittRing::new(N).unwrap();
    for n in 4..=6 {
        for ty in DefectType::ALL {
            if n < ty.n_min() {
                continue;
            }
            let count = m(n) - 1;
            let os = orbits(n, ty).unwrap();
            let mut seen = BTreeSet::new();
            for o in &os {
                c.expect(o.members.len() == 1 << (o.level - 2), || format!("{ty} n={n}: orbit {o:?}"));
                for &i in &o.members {
                    c.expect(seen.insert(i), || format!("{ty} n={n}: index {i} in two orbits"));
                    c.expect(n - 1 - i.trailing_zeros() == o.level, || format!("{ty} n={n}: {i} at level {}", o.level));
                }
            }
            c.expect(seen == (1..=count as u64).collect(), || format!("{ty} n={n}: orbits cover {seen:?}"));
            for i in 1..=count as u64 {
                let g = gen_decomp(i, n, ty, ring).unwrap();
                let p = minpoly_nu(g.level(), ty, n, ring).unwrap();
                let r = g.ring.eval_poly(&p, &g.value);
                c.expect(g.ring.is_zero(&r), || format!("{ty} n={n} i={i}: minimal polynomial does not vanish"));
                let mo = i != 1 << (n - 3);
                c.expect(is_maximally_ordinary_index(i, n) == mo, || format!("n={n} i={i}: index set"));
                c.expect(g.is_trivial() != mo, || format!("{ty} n={n} i={i}: value trivial={}", g.is_trivial()));
            }
        }
    }
    c.expect(!is_maximally_ordinary_index(1, 3), || "n=3 has a maximally ordinary index".into());
    let g = gen_decomp(1, 3, DefectType::Q, ring).unwrap();
    c.expect(g.is_trivial(), || "n=3 value is not in {0, ±1}".into());
    c.done()
}

// ---- criterion 10 ------------------------------------------------------------------------

fn criterion_10() -> Outcome {
    let mut c = Check::new();
    for n in 4..=5 {
        for f in list_families() {
            if n < f.n_min() {
                continue;
            }
            let inst = Instance::default_for(f, n).unwrap();
            for r in f.mo_recipes(n).unwrap() {
                let tp = theorem_presentation(&f, n, &r, N).unwrap();
                let tube = verify_tube(&f, n, &r, &inst.algebra, 7).unwrap().tube_found;
                let d = m(n) - 1;
                let (fiber, structure) = if tube {
                    (d + 1, ModuleStructure { free_rank: d, torsion: vec![1] })
                } else {
                    (d, ModuleStructure { free_rank: d, torsion: vec![] })
                };
                let ok = tp.complete_intersection == !tube
                    && tp.fiber_dim == fiber
                    && tp.presentation.structure == structure
                    && tp.witness.certificate_valid
                    && tp.witness.matches;
                c.expect(ok, || format!("{} n={n} {}: tube={tube}, {tp:?}", f.name(), r.label));
            }
        }
    }
    c.done()
}

type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("1", "q-polynomials", criterion_1),
        ("2", "c_n identity", criterion_2),
        ("3", "ring isomorphisms", criterion_3),
        ("4a", "catalog: 24 families, det(DᵀD) = 2^n", criterion_4a),
        ("4b", "catalog: height-one rows", criterion_4b),
        ("4c", "catalog: algebra dimension = Σ Cartan", criterion_4c),
        ("5", "maximally ordinary recipes", criterion_5),
        ("6", "completeness at the height-one multiset", criterion_6),
        ("7", "tube dichotomy", criterion_7),
        ("8", "End(Ū′) and truncations", criterion_8),
        ("9", "character gate", criterion_9),
        ("10", "theorem dichotomy", criterion_10),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS  criterion {id:<3} {name} ({secs:.2}s)"),
            Err(msgs) => {
                failed += 1;
                println!("FAIL  criterion {id:<3} {name} ({secs:.2}s)");
                for msg in msgs.iter().take(8) {
                    println!("        {msg}");
                }
                if msgs.len() > 8 {
                    println!("        … {} more", msgs.len() - 8);
                }
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
