//! Acceptance criteria 1 to 12, one test each. Every test prints a single
//! `criterion N: PASS` or `criterion N: FAIL ...` line after running all of
//! its sub-checks, then fails if any of them did.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tdesign::code::{
    code_gf4_17, columns_as_points, elliptic_quadric, family_cyclic, family_nega,
    family_ovoid_constacyclic, low_weight_dual_words, no_three_collinear, plane_sections,
    points_matrix, subfield_subcode, trace_code, weight_distribution, EnumOptions,
    GeneratorMatrix, MatrixCode, WeightDistribution,
};
use tdesign::design::{
    supports_from, supports_of_weight, verify_design_direct, IncidenceStructure, Verdict,
};
use tdesign::field::{build_field, gcd_pm, Elem, ExtField, Sign};
use tdesign::theory::{
    assmus_mattson_either, bridge_counts, classify_code, conjugate_ratio_set,
    count_kernel_solutions, kernel_count_allowed, known_counts, pair_ratio_set, pless_check,
    solve_wd_from_moments, unit_circle_points, CodeClass, Side,
};
use tdesign_cli::{cmd_family, Analysis, FamilyArgs, RunConfig};

struct Criterion {
    id: u32,
    failures: Vec<String>,
}

impl Criterion {
    fn new(id: u32) -> Self {
        Criterion {
            id,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        if got != want {
            self.failures.push(format!("{label}: expected {want:?}, got {got:?}"));
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("criterion {}: PASS", self.id);
        } else {
            println!("criterion {}: FAIL {}", self.id, self.failures.join("; "));
            panic!("criterion {} failed: {}", self.id, self.failures.join("; "));
        }
    }
}

fn opts() -> EnumOptions {
    EnumOptions::default()
}

fn run(args: FamilyArgs, t: usize) -> Analysis {
    let cfg = RunConfig {
        t,
        ..RunConfig::default()
    };
    cmd_family(&args, &cfg).unwrap()
}

const EX1: FamilyArgs = FamilyArgs::Cyclic { p: 3, m: 4, s: 3 };
const EX2: FamilyArgs = FamilyArgs::Cyclic { p: 5, m: 3, s: 1 };

fn ex1() -> &'static Analysis {
    static CELL: OnceLock<Analysis> = OnceLock::new();
    CELL.get_or_init(|| run(EX1, 3))
}

fn ex2() -> &'static Analysis {
    static CELL: OnceLock<Analysis> = OnceLock::new();
    CELL.get_or_init(|| run(EX2, 3))
}

/// Family, printed nonzero weights, code-side lambda.
type NegaCase = (FamilyArgs, &'static [(usize, u128)], u128);

fn nega_cases() -> [NegaCase; 4] {
    [
        (
            FamilyArgs::Nega { q: 5, sign: Sign::Plus, force: false },
            &[(20, 3120), (24, 156000), (25, 75504), (26, 156000)],
            57,
        ),
        (
            FamilyArgs::Nega { q: 9, sign: Sign::Plus, force: false },
            &[(72, 59040), (80, 19128960), (81, 4729760), (82, 19128960)],
            497,
        ),
        (
            FamilyArgs::Nega { q: 7, sign: Sign::Minus, force: false },
            &[(42, 16800), (48, 2469600), (49, 808800), (50, 2469600)],
            205,
        ),
        (
            FamilyArgs::Nega { q: 11, sign: Sign::Minus, force: false },
            &[(110, 161040), (120, 97429200), (121, 19339440), (122, 97429200)],
            981,
        ),
    ]
}

fn nega() -> &'static Vec<Analysis> {
    static CELL: OnceLock<Vec<Analysis>> = OnceLock::new();
    CELL.get_or_init(|| nega_cases().iter().map(|c| run(c.0, 3)).collect())
}

fn with_zero(printed: &[(usize, u128)]) -> Vec<(usize, u128)> {
    std::iter::once((0, 1)).chain(printed.iter().copied()).collect()
}

fn lambda(a: &Analysis, side: Side, weight: usize) -> Option<u128> {
    a.report
        .designs
        .iter()
        .find(|d| d.side == side && d.weight == weight)
        .and_then(|d| d.report.as_ref())
        .map(|r| r.lambda.parse().unwrap())
}

fn subcode_q7() -> GeneratorMatrix {
    let gf7 = build_field(7, 1).unwrap();
    let code = family_nega(7, Sign::Minus, false).unwrap();
    subfield_subcode(&code.generator_matrix(), &gf7).unwrap()
}

fn dual_distance(gen: &GeneratorMatrix) -> Option<usize> {
    (1..=5).find(|&w| low_weight_dual_words(gen, w, &opts()).unwrap().count() > 0)
}

#[test]
fn criterion_01_cyclic_3_4_3() {
    let mut c = Criterion::new(1);
    let a = ex1();
    let r = &a.report;
    let printed = [(78, 1771200), (80, 1158560), (81, 14176160), (82, 15940800)];
    for (w, count) in printed {
        let got = r.weight_distribution.get(w);
        c.check(got == count, format!("A{w} printed {count}, enumerated {got}"));
    }
    c.eq("total", r.weight_distribution.total(), 81u128.pow(4));
    c.eq("dual minimum distance", r.dual.d, Some(4));
    let code78 = r.designs.iter().find(|d| d.side == Side::Code && d.weight == 78);
    c.check(
        code78.and_then(|d| d.report.as_ref()).is_some_and(|rep| rep.source.complemented),
        "weight-78 design not verified through its complement",
    );
    c.eq("weight-78 complement lambda", code78.and_then(|d| d.complement_lambda.clone()), Some("1".into()));
    c.eq("weight-78 lambda", lambda(a, Side::Code, 78), Some(19019));
    c.eq("dual weight-4 lambda", lambda(a, Side::Dual, 4), Some(1));
    c.check(r.pass, "internal consistency checks");
    c.finish();
}

#[test]
fn criterion_02_cyclic_5_3_1() {
    let mut c = Criterion::new(2);
    let a = ex2();
    let r = &a.report;
    c.eq("parameters", (r.code.n, r.code.k, r.weight_distribution.min_distance()), (126, 4, Some(120)));
    c.eq(
        "weight distribution",
        r.weight_distribution.pairs(),
        with_zero(&[(120, 2018100), (124, 92767500), (125, 48450024), (126, 100905000)]),
    );
    c.eq("lambda", lambda(a, Side::Code, 120), Some(14042));
    c.eq("dual lambda", lambda(a, Side::Dual, 4), Some(3));
    c.check(r.pass, "internal consistency checks");
    c.finish();
}

#[test]
fn criterion_03_negacyclic_families() {
    let mut c = Criterion::new(3);
    for ((args, printed, lam), a) in nega_cases().iter().zip(nega()) {
        let FamilyArgs::Nega { q, .. } = *args else { unreachable!() };
        let r = &a.report;
        let d = printed[0].0;
        c.eq(&format!("q = {q} weights"), r.weight_distribution.pairs(), with_zero(printed));
        c.eq(&format!("q = {q} lambda"), lambda(a, Side::Code, d), Some(*lam));
        c.eq(&format!("q = {q} dual lambda"), lambda(a, Side::Dual, 4), Some(q as u128 - 2));
        c.check(r.pass, format!("q = {q} internal checks"));
    }
    c.finish();
}

#[test]
fn criterion_04_plus_subfield_subcode_is_zero() {
    let mut c = Criterion::new(4);
    let gf5 = build_field(5, 1).unwrap();
    let code = family_nega(5, Sign::Plus, false).unwrap();
    let sub = subfield_subcode(&code.generator_matrix(), &gf5).unwrap();
    c.eq("generators", sub.rows().len(), 0);
    c.finish();
}

#[test]
fn criterion_05_minus_subfield_subcode() {
    let mut c = Criterion::new(5);
    let sub = subcode_q7();
    c.eq("length and dimension", (sub.len(), sub.k()), (50, 4));
    let wd = MatrixCode::new(sub.clone()).weight_distribution(&opts()).unwrap();
    c.eq("weight distribution", wd.pairs(), vec![(0, 1), (42, 2100), (49, 300)]);
    c.check(classify_code(50, 4, 42, 7).griesmer_tight, "not Griesmer-tight");
    c.eq("dual", (sub.dual().k(), dual_distance(&sub)), (46, Some(4)));
    c.finish();
}

fn sections(field: &ExtField, pts: &[Vec<Elem>], size: usize) -> Vec<Vec<usize>> {
    plane_sections(field, pts)
        .into_iter()
        .filter(|s| s.len() == size)
        .collect()
}

#[test]
fn criterion_06_ovoid_codes_and_quadric() {
    let mut c = Criterion::new(6);
    for q in [3u64, 5] {
        let code = family_ovoid_constacyclic(q).unwrap();
        let n = (q * q + 1) as usize;
        let qn = q as usize;
        let wd = weight_distribution(&code, &opts()).unwrap();
        let (a, b) = ((q * q - q) as u128 * n as u128, (q - 1) as u128 * n as u128);
        c.eq(&format!("q = {q} weights"), wd.pairs(), vec![(0, 1), (n - qn - 1, a), (n - 1, b)]);

        let steiner = supports_of_weight(&code, n - qn - 1, &opts()).unwrap().complement();
        let verdict = verify_design_direct(&steiner, 3, &opts()).unwrap();
        c.eq(&format!("q = {q} Steiner system"), verdict, Verdict::Design { lambda: 1 });

        // the code's generator columns are an ovoid with those plane sections
        let cols: Vec<Vec<Elem>> = columns_as_points(&code.generator_matrix())
            .into_iter()
            .map(Option::unwrap)
            .collect();
        c.check(no_three_collinear(code.alphabet(), &cols), format!("q = {q} columns collinear"));
        let from_cols = IncidenceStructure::new(n, sections(code.alphabet(), &cols, qn + 1)).unwrap();
        c.check(from_cols == steiner, format!("q = {q} column sections differ"));

        // the quadric's plane sections are the same system on the quadric's code
        let quad = elliptic_quadric(q).unwrap();
        c.check(no_three_collinear(&quad.field, &quad.points), format!("q = {q} quadric collinear"));
        let planes = IncidenceStructure::new(n, sections(&quad.field, &quad.points, qn + 1)).unwrap();
        let v = verify_design_direct(&planes, 3, &opts()).unwrap();
        c.eq(&format!("q = {q} plane sections"), v, Verdict::Design { lambda: 1 });
        let qcode = MatrixCode::new(points_matrix(&quad.field, &quad.points).unwrap());
        let mins = supports_from(&qcode, n - qn - 1, &opts()).unwrap().complement();
        c.check(mins == planes, format!("q = {q} quadric code complements differ"));
    }
    c.finish();
}

#[test]
fn criterion_07_gf4_code() {
    let mut c = Criterion::new(7);
    let a = run(FamilyArgs::Gf4, 4);
    let r = &a.report;
    c.eq("parameters", (r.code.n, r.code.k, r.weight_distribution.min_distance()), (17, 8, Some(8)));
    c.eq("dual", (r.dual.k, r.dual.d), (9, Some(7)));
    c.eq(
        "weight distribution",
        r.weight_distribution.pairs(),
        vec![(0, 1), (8, 1530), (10, 8160), (12, 25704), (14, 24480), (16, 5661)],
    );
    c.eq("total", r.weight_distribution.total(), 65536);
    c.eq("4-design lambda", lambda(&a, Side::Code, 8), Some(15));
    let ext = MatrixCode::new(code_gf4_17().unwrap().generator_matrix().extended());
    let wd = ext.weight_distribution(&opts()).unwrap();
    for w in wd.support_weights().into_iter().filter(|&w| w > 0) {
        let blocks = supports_from(&ext, w, &opts()).unwrap();
        let v = verify_design_direct(&blocks, 1, &opts()).unwrap();
        c.check(matches!(v, Verdict::NotDesign { .. }), format!("extended weight {w} is a 1-design"));
    }
    c.finish();
}

#[test]
fn criterion_08_trace_codes() {
    let mut c = Criterion::new(8);
    let gf3 = build_field(3, 1).unwrap();
    for (m, want) in [(2, (10, 8, Some(2))), (3, (28, 12, Some(8)))] {
        let code = family_cyclic(3, m, 1).unwrap();
        let tr = trace_code(&code.generator_matrix(), &gf3).unwrap();
        let d = MatrixCode::new(tr.clone()).weight_distribution(&opts()).unwrap().min_distance();
        c.eq(&format!("m = {m}"), (tr.len(), tr.k(), d), want);
    }
    c.finish();
}

#[test]
fn criterion_09_mds_case() {
    let mut c = Criterion::new(9);
    let code = family_cyclic(3, 2, 2).unwrap();
    let d = weight_distribution(&code, &opts()).unwrap().min_distance();
    c.eq("parameters", (code.len(), code.dimension(), d), (10, 3, Some(8)));
    c.eq("class", classify_code(10, 3, 8, 9).class, CodeClass::Mds);
    c.finish();
}

/// The support weights, padded with unused weights so the solver gets four.
fn solver_weights(wd: &WeightDistribution, n: usize) -> [usize; 4] {
    let mut ws: Vec<usize> = wd.support_weights().into_iter().filter(|&w| w > 0).collect();
    let mut pad = n;
    while ws.len() < 4 {
        if !ws.contains(&pad) {
            ws.push(pad);
        }
        pad -= 1;
    }
    ws.sort_unstable();
    [ws[0], ws[1], ws[2], ws[3]]
}

/// Moment solve, zero residuals, fifth-moment A4 against search, and
/// Assmus-Mattson promises equal to the designs that verified.
fn oracle_agreement(c: &mut Criterion, label: &str, a: &Analysis) {
    let r = &a.report;
    let wd = &r.weight_distribution;
    let (n, k, q) = (wd.n, wd.k, wd.q);
    let solved = solve_wd_from_moments(n, k, q, solver_weights(wd, n)).ok();
    c.check(solved.as_ref() == Some(wd), format!("{label}: moment solve"));
    c.check(r.moments.consistent, format!("{label}: nonzero moment residuals"));
    let searched = a.dual_words.iter().find(|w| w.weight == 4).map(|w| w.count().to_string());
    c.check(
        searched.is_some() && r.moments.a4_dual == searched,
        format!("{label}: A4 dual {:?} vs search {searched:?}", r.moments.a4_dual),
    );
    let promised: BTreeSet<(Side, usize)> = r.promises.iter().map(|p| (p.side, p.weight)).collect();
    let verified: BTreeSet<(Side, usize)> = r
        .designs
        .iter()
        .filter(|d| d.holds == Some(true))
        .map(|d| (d.side, d.weight))
        .collect();
    c.check(!promised.is_empty(), format!("{label}: no promises"));
    c.check(promised == verified, format!("{label}: promised {promised:?}, verified {verified:?}"));
}

#[test]
fn criterion_10_oracle_agreement() {
    let mut c = Criterion::new(10);
    oracle_agreement(&mut c, "cyclic (3,4,3)", ex1());
    oracle_agreement(&mut c, "cyclic (5,3,1)", ex2());
    for ((args, _, _), a) in nega_cases().iter().zip(nega()) {
        oracle_agreement(&mut c, &format!("{args:?}"), a);
    }
    for q in [3, 5] {
        oracle_agreement(&mut c, &format!("ovoid q = {q}"), &run(FamilyArgs::Ovoid { q }, 3));
    }

    // the GF(7) subfield subcode is not constacyclic-built, so it is checked directly
    let sub = subcode_q7();
    let (n, q) = (50, 7);
    let code = MatrixCode::new(sub.clone());
    let wd = code.weight_distribution(&opts()).unwrap();
    let solved = solve_wd_from_moments(n, 4, q, solver_weights(&wd, n)).ok();
    c.check(solved.as_ref() == Some(&wd), "subcode: moment solve");
    let words: Vec<_> = (1..=5).map(|w| low_weight_dual_words(&sub, w, &opts()).unwrap()).collect();
    let low = [0, 1, 2].map(|i| words[i].count());
    let m = pless_check(&wd, low).unwrap();
    c.check(m.consistent(), "subcode: nonzero moment residuals");
    c.eq("subcode A4 dual", m.a4_dual, Some(words[3].count().into()));
    let mut dual = vec![None; n + 1];
    dual[0] = Some(1);
    for w in &words {
        dual[w.weight] = Some(w.count());
    }
    let promises = assmus_mattson_either(n, q, &known_counts(&wd), &dual, 3).unwrap();
    c.check(!promises.is_empty(), "subcode: no promises");
    for p in &promises {
        let blocks = match p.side {
            Side::Code => supports_from(&code, p.weight, &opts()).unwrap(),
            Side::Dual => IncidenceStructure::new(n, words[p.weight - 1].supports()).unwrap(),
        };
        let v = verify_design_direct(&blocks, p.strength, &opts()).unwrap();
        c.check(v.lambda().is_some(), format!("subcode: promise {p:?} fails"));
    }
    c.finish();
}

fn subfield_sample(rng: &mut ChaCha8Rng, f: &ExtField, deg: u32) -> Elem {
    loop {
        let x = Elem(rng.gen_range(0..f.order()) as u32);
        if f.in_subfield(x, deg) {
            return x;
        }
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn criterion_11_identity_suites() {
    let mut c = Criterion::new(11);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);

    // kernel solution counts
    for (p, m, s) in [(3u64, 4u32, 3u32), (5, 3, 1)] {
        let f = build_field(p, 2 * m).unwrap();
        let allowed = kernel_count_allowed(p, m, s);
        let mut samples = 0;
        while samples < 1000 {
            let t = [(); 4].map(|_| Elem(rng.gen_range(0..f.order()) as u32));
            if t.iter().all(|x| x.is_zero()) {
                continue;
            }
            samples += 1;
            let n = count_kernel_solutions(&f, s, t).unwrap();
            c.check(allowed.contains(&n), format!("({p},{m},{s}) {t:?} gives {n}"));
        }
    }

    // gcd closed form
    for a in [3u64, 5, 7] {
        for u in 1..=8u32 {
            for v in 1..=8u32 {
                let au = (a as u128).pow(u) + 1;
                let minus = gcd(au, (a as u128).pow(v) - 1);
                let plus = gcd(au, (a as u128).pow(v) + 1);
                c.eq(&format!("gcd minus {a} {u} {v}"), gcd_pm(a, u, v, Sign::Minus).unwrap(), minus);
                c.eq(&format!("gcd plus {a} {u} {v}"), gcd_pm(a, u, v, Sign::Plus).unwrap(), plus);
            }
        }
    }

    // substitution bridges N0 = 2 N1 and T0 = 2 T1
    for (q, sign) in [(5u64, Sign::Plus), (9, Sign::Plus), (3, Sign::Minus), (7, Sign::Minus)] {
        let (p, m) = if q == 9 { (3, 2) } else { (q, 1) };
        let ext = build_field(p, 4 * m).unwrap();
        for _ in 0..100 {
            let a = [(); 4].map(|_| subfield_sample(&mut rng, &ext, 2 * m));
            let b = bridge_counts(&ext, sign, a).unwrap();
            c.check(b.lifted == 2 * b.reduced_derived, format!("q = {q} bridge at {a:?}"));
        }
    }

    // unit circle parameterizations
    for (p, m) in [(3u64, 1u32), (5, 1), (7, 1), (3, 2)] {
        let f = build_field(p, 2 * m).unwrap();
        let q = p.pow(m);
        let circle = unit_circle_points(&f).unwrap();
        c.eq(&format!("q = {q} circle size"), circle.len() as u64, q + 1);
        let without = |x: Elem| circle.iter().copied().filter(|&y| y != x).collect::<Vec<_>>();
        let minus_one = f.neg(Elem::ONE);
        for z in f.elements().filter(|&z| f.pow(z, q) != z) {
            let got = conjugate_ratio_set(&f, z).unwrap();
            c.check(got == without(Elem::ONE), format!("q = {q} ratio set at {z:?}"));
        }
        for &beta in circle.iter().filter(|&&b| b != Elem::ONE && b != minus_one) {
            let got = pair_ratio_set(&f, beta).unwrap();
            c.check(got == without(beta), format!("q = {q} pair set at {beta:?}"));
        }
    }
    c.finish();
}

#[test]
fn criterion_12_reports_ignore_worker_count() {
    let mut c = Criterion::new(12);
    let reports: Vec<String> = [1, 2, 8]
        .map(|w| {
            let cfg = RunConfig {
                opts: EnumOptions::default().with_workers(w),
                ..RunConfig::default()
            };
            serde_json::to_string_pretty(&cmd_family(&EX1, &cfg).unwrap().report).unwrap()
        })
        .to_vec();
    c.check(reports[0] == reports[1], "1 and 2 workers differ");
    c.check(reports[0] == reports[2], "1 and 8 workers differ");
    c.finish();
}
