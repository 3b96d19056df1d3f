//! One family instance end to end: enumerate, cross-check, verify designs.

use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;

use tdesign::code::{
    code_gf4_17, dual_code, family_cyclic, family_nega, family_ovoid_constacyclic,
    low_weight_dual_words, weight_distribution, CodeDescriptor, ConstacyclicCode, EnumOptions,
    LowWeightWords, WeightDistribution,
};
use tdesign::design::{
    supports_of_weight, verify_design_auto, verify_design_direct, DesignReport, DesignSource,
    IncidenceStructure, Verdict, DEFAULT_DESIGN_BUDGET,
};
use tdesign::field::Sign;
use tdesign::theory::{
    assmus_mattson_either, classify_code, pless_check, predicted_profile, weight_bound,
    Classification, DesignPromise, Family, Side,
};

/// Duals with at most this many coordinate evaluations are enumerated in full.
const FULL_DUAL_LIMIT: u128 = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArgs {
    Cyclic { p: u64, m: u32, s: u32 },
    Nega { q: u64, sign: Sign, force: bool },
    Ovoid { q: u64 },
    Gf4,
}

impl FamilyArgs {
    pub fn build(&self) -> Result<ConstacyclicCode> {
        Ok(match *self {
            FamilyArgs::Cyclic { p, m, s } => family_cyclic(p, m, s)?,
            FamilyArgs::Nega { q, sign, force } => family_nega(q, sign, force)?,
            FamilyArgs::Ovoid { q } => family_ovoid_constacyclic(q)?,
            FamilyArgs::Gf4 => code_gf4_17()?,
        })
    }

    /// The closed-form family, when its theorem covers these parameters.
    pub fn prediction(&self) -> Option<Family> {
        match *self {
            FamilyArgs::Cyclic { p, m, s } => Some(Family::Cyclic { p, m, s }),
            FamilyArgs::Nega { q, sign: Sign::Plus, .. } if q % 4 == 1 => Some(Family::NegaPlus { q }),
            FamilyArgs::Nega { q, sign: Sign::Minus, .. } if q % 4 == 3 => Some(Family::NegaMinus { q }),
            FamilyArgs::Nega { .. } => None,
            FamilyArgs::Ovoid { q } => Some(Family::Ovoid { q }),
            FamilyArgs::Gf4 => None,
        }
    }

    pub fn from_descriptor(d: &CodeDescriptor) -> Result<Self> {
        Ok(match d.family.as_str() {
            "cyclic" => FamilyArgs::Cyclic {
                p: d.p,
                m: d.m,
                s: d.s.context("cyclic descriptor without s")?,
            },
            "nega_plus" | "nega_minus" => {
                let sign = if d.family == "nega_plus" { Sign::Plus } else { Sign::Minus };
                FamilyArgs::Nega {
                    q: d.q,
                    sign,
                    force: true,
                }
            }
            "ovoid" => FamilyArgs::Ovoid { q: d.q },
            "gf4_17" => FamilyArgs::Gf4,
            other => bail!("unknown family {other:?}"),
        })
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub opts: EnumOptions,
    pub t: usize,
    pub verify_designs: bool,
    pub design_budget: u128,
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            opts: EnumOptions::default(),
            t: 3,
            verify_designs: true,
            design_budget: DEFAULT_DESIGN_BUDGET,
            timing: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualSummary {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    /// [[w, count]] for every weight whose count is known
    pub known: Vec<(usize, String)>,
    pub fully_enumerated: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MomentSummary {
    pub residuals: Vec<String>,
    pub consistent: bool,
    pub a4_dual: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PredictedSummary {
    pub weight_distribution: WeightDistribution,
    pub agrees: bool,
    pub designs: Vec<PredictedDesignJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PredictedDesignJson {
    pub side: Side,
    pub weight: usize,
    pub t: usize,
    pub lambda: String,
    pub formula: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DesignEntry {
    pub side: Side,
    pub weight: usize,
    pub t: usize,
    pub holds: Option<bool>,
    pub report: Option<DesignReport>,
    pub predicted_lambda: Option<String>,
    /// lambda of the complementary structure, when it is expected to be Steiner
    pub complement_lambda: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Classifications {
    pub code: Classification,
    pub dual: Option<Classification>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BudgetUsage {
    pub coordinate_evaluations: String,
    pub budget: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub code: CodeDescriptor,
    pub weight_distribution: WeightDistribution,
    pub enumerator: String,
    pub dual: DualSummary,
    pub moments: MomentSummary,
    pub predicted: Option<PredictedSummary>,
    pub promises: Vec<DesignPromise>,
    pub designs: Vec<DesignEntry>,
    pub classifications: Classifications,
    pub budget: BudgetUsage,
    pub checks: Vec<Check>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

/// A finished run with the block sets it verified.
pub struct Analysis {
    pub report: RunReport,
    pub structures: Vec<(Side, usize, IncidenceStructure)>,
    pub dual_words: Vec<LowWeightWords>,
}

/// Projective classes of a k-dimensional code, None past u128.
fn classes(q: u64, k: usize) -> Option<u128> {
    let total = u32::try_from(k).ok().and_then(|k| (q as u128).checked_pow(k))?;
    Some((total - 1) / (q as u128 - 1))
}

pub fn cmd_family(args: &FamilyArgs, cfg: &RunConfig) -> Result<Analysis> {
    let code = args.build()?;
    analyze(&code, args.prediction(), cfg)
}

pub fn analyze(code: &ConstacyclicCode, family: Option<Family>, cfg: &RunConfig) -> Result<Analysis> {
    let start = Instant::now();
    let n = code.len();
    let k = code.dimension();
    let q = code.alphabet().order();
    let opts = cfg.opts;
    let mut checks = Vec::new();
    let mut check = |name: &str, pass: bool| {
        checks.push(Check {
            name: name.into(),
            pass,
        })
    };

    let wd = weight_distribution(code, &opts)?;
    check("weight_total", wd.is_consistent());
    let d = wd.min_distance();

    // dual counts: full enumeration when small, otherwise support-first search
    let dual = dual_code(code)?;
    let gen = code.generator_matrix();
    let mut dual_counts: Vec<Option<u128>> = vec![None; n + 1];
    dual_counts[0] = Some(1);
    let mut dual_words = Vec::new();
    let full_dual = classes(q, n - k)
        .and_then(|c| c.checked_mul(n as u128))
        .is_some_and(|cost| cost <= FULL_DUAL_LIMIT);
    if full_dual {
        let dwd = weight_distribution(&dual, &opts)?;
        for (w, slot) in dual_counts.iter_mut().enumerate() {
            *slot = Some(dwd.get(w));
        }
    }
    let mut dual_d = None;
    for w in 1..=5.min(n) {
        if dual_d.is_some_and(|dd| w > weight_bound(n, q, dd).min(n.saturating_sub(cfg.t))) {
            break;
        }
        match low_weight_dual_words(&gen, w, &opts) {
            Ok(words) => {
                let c = words.count();
                if let Some(known) = dual_counts[w] {
                    check(&format!("dual_search_w{w}"), known == c);
                }
                dual_counts[w] = Some(c);
                if c > 0 && dual_d.is_none() {
                    dual_d = Some(w);
                }
                dual_words.push(words);
            }
            Err(_) => break,
        }
    }
    if dual_d.is_none() {
        dual_d = (1..=n).find(|&w| dual_counts[w].is_some_and(|c| c > 0));
    }

    let low = [1, 2, 3].map(|w| dual_counts.get(w).copied().flatten());
    let moments = match low {
        [Some(a), Some(b), Some(c)] => Some(pless_check(&wd, [a, b, c])?),
        _ => None,
    };
    let moment_summary = match &moments {
        Some(m) => {
            check("moments", m.consistent());
            if let (Some(a4), Some(found)) = (&m.a4_dual, dual_counts.get(4).copied().flatten()) {
                check("a4_dual", a4 == &found.into());
            }
            MomentSummary {
                residuals: m.residuals.iter().map(|r| r.to_string()).collect(),
                consistent: m.consistent(),
                a4_dual: m.a4_dual.as_ref().map(|x| x.to_string()),
            }
        }
        None => MomentSummary {
            residuals: Vec::new(),
            consistent: false,
            a4_dual: None,
        },
    };

    let code_counts: Vec<Option<u128>> = (0..=n).map(|w| Some(wd.get(w))).collect();
    let promises = assmus_mattson_either(n, q, &code_counts, &dual_counts, cfg.t).unwrap_or_default();

    let profile = family.map(|f| predicted_profile(&f)).transpose()?;
    let predicted = profile.as_ref().map(|p| {
        let agrees = p.wd == wd;
        PredictedSummary {
            weight_distribution: p.wd.clone(),
            agrees,
            designs: p
                .designs
                .iter()
                .map(|x| PredictedDesignJson {
                    side: x.side,
                    weight: x.weight,
                    t: x.t,
                    lambda: x.lambda.to_string(),
                    formula: x.formula.clone(),
                })
                .collect(),
        }
    });
    if let Some(p) = &profile {
        check("predicted_wd", p.wd == wd);
        check("predicted_dual_d", Some(p.dual_d) == dual_d);
        if let (Some(a4), Some(found)) = (p.dual_a4, dual_counts.get(4).copied().flatten()) {
            check("predicted_a4_dual", a4 == found);
        }
        let covered = p
            .designs
            .iter()
            .filter(|x| x.t == cfg.t)
            .all(|x| promises.iter().any(|pr| pr.side == x.side && pr.weight == x.weight));
        check("promises_cover_predicted", covered);
    }

    let mut designs = Vec::new();
    let mut structures = Vec::new();
    if cfg.verify_designs {
        let dopts = EnumOptions {
            budget: cfg.design_budget,
            workers: opts.workers,
        };
        for pr in &promises {
            let blocks = match pr.side {
                Side::Code => Some(supports_of_weight(code, pr.weight, &opts)?),
                Side::Dual => match dual_words.iter().find(|w| w.weight == pr.weight) {
                    Some(words) => Some(IncidenceStructure::new(n, words.supports())?),
                    None if full_dual => Some(supports_of_weight(&dual, pr.weight, &opts)?),
                    None => None,
                },
            };
            let predicted = profile.as_ref().and_then(|p| {
                p.designs
                    .iter()
                    .find(|x| x.side == pr.side && x.weight == pr.weight && x.t == pr.strength)
            });
            let mut entry = DesignEntry {
                side: pr.side,
                weight: pr.weight,
                t: pr.strength,
                holds: None,
                report: None,
                predicted_lambda: predicted.map(|x| x.lambda.to_string()),
                complement_lambda: None,
            };
            let Some(blocks) = blocks else {
                designs.push(entry);
                continue;
            };
            let res = verify_design_auto(&blocks, pr.strength, &dopts)?;
            entry.holds = Some(res.params.is_some());
            let label = format!("{}-{}", if pr.side == Side::Code { "code" } else { "dual" }, pr.weight);
            check(&format!("design_{label}"), res.params.is_some());
            if let Some(params) = res.params {
                check(&format!("counting_{label}"), params.counts_agree());
                let count = match pr.side {
                    Side::Code => Some(wd.get(pr.weight)),
                    Side::Dual => dual_counts[pr.weight],
                };
                if let Some(c) = count {
                    check(&format!("blocks_{label}"), params.b * (q as u128 - 1) == c);
                }
                if let Some(x) = predicted {
                    check(&format!("predicted_lambda_{label}"), x.lambda == params.lambda);
                }
                entry.report = Some(DesignReport::new(
                    &params,
                    DesignSource {
                        code: CodeDescriptor::of(code).family,
                        weight: pr.weight,
                        complemented: res.via_complement,
                    },
                ));
            }
            if predicted.is_some_and(|x| x.complement_steiner) {
                let comp = blocks.complement();
                let v = verify_design_direct(&comp, pr.strength, &dopts)?;
                check(&format!("steiner_complement_{label}"), v == Verdict::Design { lambda: 1 });
                entry.complement_lambda = v.lambda().map(|l| l.to_string());
            }
            designs.push(entry);
            structures.push((pr.side, pr.weight, blocks));
        }
    }

    let d = d.ok_or_else(|| anyhow!("zero code has no minimum distance"))?;
    let classifications = Classifications {
        code: classify_code(n, k, d, q),
        dual: dual_d.map(|dd| classify_code(n, n - k, dd, q)),
    };
    let pass = checks.iter().all(|c| c.pass);
    let report = RunReport {
        code: CodeDescriptor::of(code),
        enumerator: wd.enumerator_text(),
        weight_distribution: wd,
        dual: DualSummary {
            n,
            k: n - k,
            d: dual_d,
            known: dual_counts
                .iter()
                .enumerate()
                .filter_map(|(w, c)| c.map(|c| (w, c.to_string())))
                .filter(|(w, c)| *w == 0 || c != "0" || !full_dual)
                .collect(),
            fully_enumerated: full_dual,
        },
        moments: moment_summary,
        predicted,
        promises,
        designs,
        classifications,
        budget: BudgetUsage {
            coordinate_evaluations: classes(q, k)
                .and_then(|c| c.checked_mul(n as u128))
                .map_or("overflow".into(), |c| c.to_string()),
            budget: opts.budget.to_string(),
        },
        checks,
        pass,
        timing_ms: cfg.timing.then(|| start.elapsed().as_millis()),
    };
    Ok(Analysis {
        report,
        structures,
        dual_words,
    })
}

/// Plain-text digest of a report.
pub fn summary(r: &RunReport) -> String {
    let mut out = String::new();
    let c = &r.code;
    let d = r.weight_distribution.min_distance().map_or("-".into(), |d| d.to_string());
    out += &format!("code      {} [{}, {}, {}] over GF({})\n", c.family, c.n, c.k, d, c.alphabet);
    out += &format!("enumerator {}\n", r.enumerator);
    let dd = r.dual.d.map_or("-".into(), |d| d.to_string());
    out += &format!("dual      [{}, {}, {}]\n", r.dual.n, r.dual.k, dd);
    if let Some(a4) = &r.moments.a4_dual {
        out += &format!("moments   consistent={} A4 dual={a4}\n", r.moments.consistent);
    }
    if let Some(p) = &r.predicted {
        out += &format!("predicted agrees={}\n", p.agrees);
    }
    for e in &r.designs {
        let side = if e.side == Side::Code { "code" } else { "dual" };
        match &e.report {
            Some(d) => {
                out += &format!(
                    "design    {side} weight {}: {}-({},{},{}) b={}{}\n",
                    e.weight,
                    d.t,
                    d.v,
                    d.k,
                    d.lambda,
                    d.b,
                    if d.source.complemented { " via complement" } else { "" }
                )
            }
            None => {
                let what = if e.holds == Some(false) { "not a design" } else { "unverified" };
                out += &format!("design    {side} weight {}: {}-design {what}\n", e.weight, e.t)
            }
        }
    }
    out += &format!(
        "class     code {:?}, dual {}\n",
        r.classifications.code.class,
        r.classifications.dual.as_ref().map_or("unknown".to_string(), |c| format!("{:?}", c.class))
    );
    for ch in r.checks.iter().filter(|c| !c.pass) {
        out += &format!("FAILED    {}\n", ch.name);
    }
    out += &format!("status    {}\n", if r.pass { "pass" } else { "fail" });
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct DesignVerifyReport {
    pub v: usize,
    pub b: usize,
    pub k: Option<usize>,
    pub t: usize,
    pub is_design: bool,
    pub lambda: Option<String>,
    pub min: Option<String>,
    pub max: Option<String>,
    pub via_complement: bool,
    pub counts_agree: Option<bool>,
}

/// Checks a block file as a t-design on `v` points (default: one past the largest label).
pub fn cmd_design_verify(
    text: &str,
    t: usize,
    v: Option<usize>,
    opts: &EnumOptions,
) -> Result<DesignVerifyReport> {
    let d = tdesign::design::parse_blocks(text, v)?;
    let res = verify_design_auto(&d, t, opts)?;
    let (min, max) = match res.verdict {
        Verdict::NotDesign { min, max } => (Some(min.to_string()), Some(max.to_string())),
        Verdict::Design { .. } => (None, None),
    };
    Ok(DesignVerifyReport {
        v: d.points(),
        b: d.len(),
        k: d.block_size(),
        t,
        is_design: res.params.is_some(),
        lambda: res.verdict.lambda().map(|l| l.to_string()),
        min,
        max,
        via_complement: res.via_complement,
        counts_agree: res.params.map(|p| p.counts_agree()),
    })
}

/// Rebuilds the code named by a descriptor and insists it matches field for field.
pub fn cmd_analyze(descriptor: &CodeDescriptor, cfg: &RunConfig) -> Result<Analysis> {
    let args = FamilyArgs::from_descriptor(descriptor)?;
    let code = args.build()?;
    let rebuilt = CodeDescriptor::of(&code);
    if &rebuilt != descriptor {
        bail!("descriptor does not match the rebuilt {} code", rebuilt.family);
    }
    analyze(&code, args.prediction(), cfg)
}
