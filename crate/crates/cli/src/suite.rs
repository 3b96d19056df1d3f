//! The published reference instances replayed as one pass/fail matrix.

use anyhow::{ensure, Result};
use serde::Serialize;

use tdesign::code::{
    code_gf4_17, elliptic_quadric, family_cyclic, family_nega, family_ovoid_constacyclic,
    low_weight_dual_words, plane_sections, points_matrix, subfield_subcode, trace_code,
    EnumOptions, GeneratorMatrix, MatrixCode, WeightDistribution,
};
use tdesign::design::{
    supports_from, supports_of_weight, verify_design_direct, IncidenceStructure, Verdict,
};
use tdesign::field::{build_field, Sign};
use tdesign::theory::{classify_code, CodeClass, Side};

use crate::analysis::{cmd_family, Analysis, FamilyArgs, RunConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteRow {
    pub id: String,
    pub citation: String,
    pub status: SuiteStatus,
    pub detail: String,
}

/// Collects named sub-checks; the row passes when all of them do.
#[derive(Default)]
struct Findings(Vec<String>);

impl Findings {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        if got != want {
            self.0.push(format!("{label}: expected {want:?}, got {got:?}"));
        }
    }

    fn weights(&mut self, wd: &WeightDistribution, printed: &[(usize, u128)]) {
        for &(w, c) in printed {
            let got = wd.get(w);
            self.expect(got == c, || format!("A{w}: printed {c}, enumerated {got}"));
        }
        let listed: u128 = printed.iter().map(|p| p.1).sum::<u128>() + 1;
        self.expect(listed == wd.total(), || {
            format!("printed counts sum to {listed}, enumerated total is {}", wd.total())
        });
    }
}

fn design_lambda(a: &Analysis, side: Side, weight: usize) -> Option<u128> {
    a.report
        .designs
        .iter()
        .find(|d| d.side == side && d.weight == weight)
        .and_then(|d| d.report.as_ref())
        .and_then(|r| r.lambda.parse().ok())
}

struct FamilyCase {
    args: FamilyArgs,
    t: usize,
    /// nonzero weights and counts as printed
    printed: &'static [(usize, u128)],
    dual_d: usize,
    code_design: (usize, u128),
    dual_design: (usize, u128),
}

fn family_row(case: &FamilyCase, opts: &EnumOptions) -> Result<Findings> {
    let cfg = RunConfig {
        opts: *opts,
        t: case.t,
        ..RunConfig::default()
    };
    let a = cmd_family(&case.args, &cfg)?;
    let mut f = Findings::default();
    f.weights(&a.report.weight_distribution, case.printed);
    f.eq("dual minimum distance", a.report.dual.d, Some(case.dual_d));
    let (w, l) = case.code_design;
    f.eq(&format!("lambda at code weight {w}"), design_lambda(&a, Side::Code, w), Some(l));
    let (w, l) = case.dual_design;
    f.eq(&format!("lambda at dual weight {w}"), design_lambda(&a, Side::Dual, w), Some(l));
    for c in a.report.checks.iter().filter(|c| !c.pass) {
        f.0.push(format!("internal check {} failed", c.name));
    }
    Ok(f)
}

fn gf4_17(opts: &EnumOptions) -> Result<Findings> {
    let cfg = RunConfig {
        opts: *opts,
        t: 4,
        ..RunConfig::default()
    };
    let a = cmd_family(&FamilyArgs::Gf4, &cfg)?;
    let r = &a.report;
    let mut f = Findings::default();
    f.eq("length and dimension", (r.code.n, r.code.k), (17, 8));
    f.eq("minimum distance", r.weight_distribution.min_distance(), Some(8));
    f.eq("dual", (r.dual.k, r.dual.d), (9, Some(7)));
    f.weights(
        &r.weight_distribution,
        &[(8, 1530), (10, 8160), (12, 25704), (14, 24480), (16, 5661)],
    );
    f.eq("lambda at weight 8", design_lambda(&a, Side::Code, 8), Some(15));
    for c in r.checks.iter().filter(|c| !c.pass) {
        f.0.push(format!("internal check {} failed", c.name));
    }
    // no weight class of the extended code is a 1-design
    let ext = MatrixCode::new(code_gf4_17()?.generator_matrix().extended());
    let wd = ext.weight_distribution(opts)?;
    for w in wd.support_weights().into_iter().filter(|&w| w > 0) {
        let blocks = supports_from(&ext, w, opts)?;
        let v = verify_design_direct(&blocks, 1, opts)?;
        f.expect(matches!(v, Verdict::NotDesign { .. }), || {
            format!("extended code weight {w} is a 1-design")
        });
    }
    Ok(f)
}

fn dual_distance(gen: &GeneratorMatrix, opts: &EnumOptions) -> Result<Option<usize>> {
    for w in 1..=5 {
        if low_weight_dual_words(gen, w, opts)?.count() > 0 {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn plus_subcode(_: &EnumOptions) -> Result<Findings> {
    let gf5 = build_field(5, 1)?;
    let code = family_nega(5, Sign::Plus, false)?;
    let sub = subfield_subcode(&code.generator_matrix(), &gf5)?;
    let mut f = Findings::default();
    f.eq("subcode dimension", sub.k(), 0);
    Ok(f)
}

fn minus_subcode(opts: &EnumOptions) -> Result<Findings> {
    let gf7 = build_field(7, 1)?;
    let code = family_nega(7, Sign::Minus, false)?;
    let sub = subfield_subcode(&code.generator_matrix(), &gf7)?;
    let mut f = Findings::default();
    f.eq("length and dimension", (sub.len(), sub.k()), (50, 4));
    let wd = MatrixCode::new(sub.clone()).weight_distribution(opts)?;
    f.eq("weight distribution", wd.pairs(), vec![(0, 1), (42, 2100), (49, 300)]);
    let class = classify_code(50, 4, 42, 7);
    f.expect(class.griesmer_tight, || format!("not Griesmer-tight: {class:?}"));
    f.eq("dual", (sub.dual().k(), dual_distance(&sub, opts)?), (46, Some(4)));
    Ok(f)
}

fn trace_codes(opts: &EnumOptions) -> Result<Findings> {
    let gf3 = build_field(3, 1)?;
    let mut f = Findings::default();
    for (m, n, k, d) in [(2, 10, 8, 2), (3, 28, 12, 8)] {
        let code = family_cyclic(3, m, 1)?;
        let tr = trace_code(&code.generator_matrix(), &gf3)?;
        let wd = MatrixCode::new(tr.clone()).weight_distribution(opts)?;
        f.eq(&format!("m = {m}"), (tr.len(), tr.k(), wd.min_distance()), (n, k, Some(d)));
    }
    Ok(f)
}

fn mds(opts: &EnumOptions) -> Result<Findings> {
    let code = family_cyclic(3, 2, 2)?;
    let wd = tdesign::code::weight_distribution(&code, opts)?;
    let mut f = Findings::default();
    let d = wd.min_distance();
    f.eq("parameters", (code.len(), code.dimension(), d), (10, 3, Some(8)));
    if let Some(d) = d {
        f.eq("class", classify_code(10, 3, d, 9).class, CodeClass::Mds);
    }
    Ok(f)
}

/// Ovoid code enumerator, the Steiner system on its minimum-weight
/// complements, and the same system from plane sections of the quadric.
fn ovoid(q: u64, opts: &EnumOptions) -> Result<Findings> {
    let code = family_ovoid_constacyclic(q)?;
    let n = (q * q + 1) as usize;
    let qn = q as usize;
    let mut f = Findings::default();
    let wd = tdesign::code::weight_distribution(&code, opts)?;
    let (a, b) = ((q * q - q) as u128 * n as u128, (q - 1) as u128 * n as u128);
    f.eq("weight distribution", wd.pairs(), vec![(0, 1), (n - qn - 1, a), (n - 1, b)]);
    let low = supports_of_weight(&code, n - qn - 1, opts)?.complement();
    f.eq("code Steiner system", verify_design_direct(&low, 3, opts)?, Verdict::Design { lambda: 1 });

    let quad = elliptic_quadric(q)?;
    ensure!(quad.points.len() == n, "quadric has {} points", quad.points.len());
    let sections: Vec<Vec<usize>> = plane_sections(&quad.field, &quad.points)
        .into_iter()
        .filter(|s| s.len() == qn + 1)
        .collect();
    let planes = IncidenceStructure::new(n, sections)?;
    f.eq("plane sections", verify_design_direct(&planes, 3, opts)?, Verdict::Design { lambda: 1 });
    let qcode = MatrixCode::new(points_matrix(&quad.field, &quad.points)?);
    let from_code = supports_from(&qcode, n - qn - 1, opts)?.complement();
    f.expect(from_code == planes, || "quadric code complements differ from plane sections".into());
    Ok(f)
}

type Runner = fn(&EnumOptions) -> Result<Findings>;

fn family_cases() -> Vec<(&'static str, &'static str, FamilyCase)> {
    vec![
        (
            "cyclic-3-4-3",
            "cyclic code (p, m, s) = (3, 4, 3): [82, 4, 78], designs 3-(82,78,19019) and 3-(82,4,1)",
            FamilyCase {
                args: FamilyArgs::Cyclic { p: 3, m: 4, s: 3 },
                t: 3,
                printed: &[(78, 1771200), (80, 1158560), (81, 14176160), (82, 15940800)],
                dual_d: 4,
                code_design: (78, 19019),
                dual_design: (4, 1),
            },
        ),
        (
            "cyclic-5-3-1",
            "cyclic code (p, m, s) = (5, 3, 1): [126, 4, 120], designs 3-(126,120,14042) and 3-(126,4,3)",
            FamilyCase {
                args: FamilyArgs::Cyclic { p: 5, m: 3, s: 1 },
                t: 3,
                printed: &[(120, 2018100), (124, 92767500), (125, 48450024), (126, 100905000)],
                dual_d: 4,
                code_design: (120, 14042),
                dual_design: (4, 3),
            },
        ),
        (
            "nega-plus-5",
            "negacyclic code, plus family, q = 5: [26, 4, 20], designs 3-(26,20,57) and 3-(26,4,3)",
            FamilyCase {
                args: FamilyArgs::Nega { q: 5, sign: Sign::Plus, force: false },
                t: 3,
                printed: &[(20, 3120), (24, 156000), (25, 75504), (26, 156000)],
                dual_d: 4,
                code_design: (20, 57),
                dual_design: (4, 3),
            },
        ),
        (
            "nega-plus-9",
            "negacyclic code, plus family, q = 9: [82, 4, 72], designs 3-(82,72,497) and 3-(82,4,7)",
            FamilyCase {
                args: FamilyArgs::Nega { q: 9, sign: Sign::Plus, force: false },
                t: 3,
                printed: &[(72, 59040), (80, 19128960), (81, 4729760), (82, 19128960)],
                dual_d: 4,
                code_design: (72, 497),
                dual_design: (4, 7),
            },
        ),
        (
            "nega-minus-7",
            "negacyclic code, minus family, q = 7: [50, 4, 42], designs 3-(50,42,205) and 3-(50,4,5)",
            FamilyCase {
                args: FamilyArgs::Nega { q: 7, sign: Sign::Minus, force: false },
                t: 3,
                printed: &[(42, 16800), (48, 2469600), (49, 808800), (50, 2469600)],
                dual_d: 4,
                code_design: (42, 205),
                dual_design: (4, 5),
            },
        ),
        (
            "nega-minus-11",
            "negacyclic code, minus family, q = 11: [122, 4, 110], designs 3-(122,110,981) and 3-(122,4,9)",
            FamilyCase {
                args: FamilyArgs::Nega { q: 11, sign: Sign::Minus, force: false },
                t: 3,
                printed: &[(110, 161040), (120, 97429200), (121, 19339440), (122, 97429200)],
                dual_d: 4,
                code_design: (110, 981),
                dual_design: (4, 9),
            },
        ),
    ]
}

fn other_cases() -> Vec<(&'static str, &'static str, Runner)> {
    vec![
        (
            "gf4-17",
            "GF(4) constacyclic [17, 8, 8] code: enumerator, 4-(17,8,15) design, extended code without a 1-design",
            gf4_17 as Runner,
        ),
        ("subcode-plus-5", "subfield subcode over GF(5) of the plus negacyclic code, q = 5: zero code", plus_subcode),
        ("subcode-minus-7", "subfield subcode over GF(7) of the minus negacyclic code, q = 7: [50, 4, 42] ovoid code", minus_subcode),
        ("trace-codes", "ternary trace codes of the cyclic family: [10, 8, 2] and [28, 12, 8]", trace_codes),
        ("mds-3-2-2", "cyclic family with s = m, (3, 2, 2): MDS [10, 3, 8]", mds),
        ("ovoid-3", "constacyclic ovoid code q = 3 and the elliptic quadric: S(3, 4, 10)", |o| ovoid(3, o)),
        ("ovoid-5", "constacyclic ovoid code q = 5 and the elliptic quadric: S(3, 6, 26)", |o| ovoid(5, o)),
    ]
}

/// Row ids in suite order.
pub const SUITE_IDS: [&str; 13] = [
    "cyclic-3-4-3",
    "cyclic-5-3-1",
    "nega-plus-5",
    "nega-plus-9",
    "nega-minus-7",
    "nega-minus-11",
    "gf4-17",
    "subcode-plus-5",
    "subcode-minus-7",
    "trace-codes",
    "mds-3-2-2",
    "ovoid-3",
    "ovoid-5",
];

/// Skip tokens: a row id, or `q11` for the slowest row.
fn skipped(id: &str, skip: &[String]) -> bool {
    skip.iter().any(|s| s == id || (s == "q11" && id == "nega-minus-11"))
}

fn finish(id: &str, citation: &str, res: Result<Findings>) -> SuiteRow {
    let (status, detail) = match res {
        Ok(f) if f.0.is_empty() => (SuiteStatus::Pass, String::new()),
        Ok(f) => (SuiteStatus::Fail, f.0.join("; ")),
        Err(e) => (SuiteStatus::Fail, format!("error: {e:#}")),
    };
    SuiteRow {
        id: id.into(),
        citation: citation.into(),
        status,
        detail,
    }
}

/// Runs every item not named in `skip`, recording failures per row.
pub fn paper_suite(opts: &EnumOptions, skip: &[String]) -> Vec<SuiteRow> {
    let mut rows = Vec::new();
    for (id, citation, case) in family_cases() {
        rows.push(if skipped(id, skip) {
            skipped_row(id, citation)
        } else {
            finish(id, citation, family_row(&case, opts))
        });
    }
    for (id, citation, run) in other_cases() {
        rows.push(if skipped(id, skip) {
            skipped_row(id, citation)
        } else {
            finish(id, citation, run(opts))
        });
    }
    rows
}

fn skipped_row(id: &str, citation: &str) -> SuiteRow {
    SuiteRow {
        id: id.into(),
        citation: citation.into(),
        status: SuiteStatus::Skipped,
        detail: "skipped on request".into(),
    }
}
