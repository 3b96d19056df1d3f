use std::collections::BTreeMap;

use tdesign::code::{
    code_gf4_17, dual_code, family_cyclic, family_nega, family_ovoid_constacyclic,
    low_weight_dual_words, min_distance, subfield_subcode, subfield_subcode_direct, trace_code,
    trace_codeword, weight_distribution, ConstacyclicCode, EnumOptions, GeneratorMatrix,
    MatrixCode, WeightDistribution,
};
use tdesign::field::{build_field, Elem, Sign};

fn opts() -> EnumOptions {
    EnumOptions::default()
}

/// Weight counts by walking every message through the generator matrix.
fn brute_counts(gen: &GeneratorMatrix) -> BTreeMap<usize, u128> {
    let q = gen.field().order();
    let k = gen.k();
    let mut out = BTreeMap::new();
    for idx in 0..q.pow(k as u32) {
        let mut rest = idx;
        let msg: Vec<Elem> = (0..k)
            .map(|_| {
                let d = Elem((rest % q) as u32);
                rest /= q;
                d
            })
            .collect();
        let word = gen.encode(&msg).unwrap();
        let w = word.iter().filter(|x| !x.is_zero()).count();
        *out.entry(w).or_insert(0) += 1;
    }
    out
}

fn as_map(wd: &WeightDistribution) -> BTreeMap<usize, u128> {
    wd.pairs().into_iter().collect()
}

fn small_codes() -> Vec<ConstacyclicCode> {
    vec![
        family_cyclic(3, 2, 1).unwrap(),
        family_cyclic(3, 2, 2).unwrap(),
        family_nega(3, Sign::Minus, false).unwrap(),
        family_ovoid_constacyclic(3).unwrap(),
        family_ovoid_constacyclic(4).unwrap(),
    ]
}

#[test]
fn generator_times_check_is_binomial() {
    for code in small_codes().into_iter().chain([code_gf4_17().unwrap()]) {
        let f = code.alphabet();
        let prod = code.gen_poly().mul(code.check_poly()).unwrap();
        let mut want = vec![Elem::ZERO; code.len() + 1];
        want[0] = f.neg(code.lambda());
        want[code.len()] = Elem::ONE;
        assert_eq!(prod.coeffs(), &want[..]);
        assert_eq!(code.dimension(), code.check_poly().degree().unwrap());
    }
}

#[test]
fn trace_words_lie_in_the_code() {
    for code in small_codes() {
        let e = code.extension();
        let da = code.alphabet().degree();
        // a handful of messages with entries in the component fields
        for seed in 1..6u64 {
            let msg: Vec<Elem> = (0..code.nonzeros().len())
                .map(|j| {
                    let deg = da * code.component_degree(j) as u32;
                    e.elements()
                        .filter(|&x| e.in_subfield(x, deg))
                        .nth((seed as usize * (j + 3)) % (e.order() as usize).min(7))
                        .unwrap()
                })
                .collect();
            let word = trace_codeword(&msg, &code).unwrap();
            assert!(code.contains(&word), "{:?}", code.tag());
            assert!(code.contains(&code.shift(&word)));
        }
    }
}

#[test]
fn projective_enumeration_matches_brute_force() {
    for code in small_codes() {
        let wd = weight_distribution(&code, &opts()).unwrap();
        assert_eq!(as_map(&wd), brute_counts(&code.generator_matrix()), "{:?}", code.tag());
        assert!(wd.is_consistent());
    }
}

#[test]
fn matrix_code_matches_brute_force() {
    let code = family_nega(3, Sign::Minus, false).unwrap();
    let gen = dual_code(&code).unwrap().generator_matrix();
    let wd = MatrixCode::new(gen.clone()).weight_distribution(&opts()).unwrap();
    assert_eq!(as_map(&wd), brute_counts(&gen));
}

#[test]
fn duals_are_orthogonal_with_complementary_dimension() {
    for code in small_codes().into_iter().chain([code_gf4_17().unwrap()]) {
        let dual = dual_code(&code).unwrap();
        assert_eq!(dual.dimension() + code.dimension(), code.len());
        let f = code.alphabet();
        assert_eq!(dual.lambda(), f.inv(code.lambda()).unwrap());
        assert!(code.generator_matrix().orthogonal_to(&dual.generator_matrix()));
        assert!(dual.generator_matrix().same_code(&code.generator_matrix().dual()));
    }
}

#[test]
fn cyclic_family_dimensions() {
    let c = family_cyclic(3, 2, 1).unwrap();
    assert_eq!((c.len(), c.dimension()), (10, 4));
    let mds = family_cyclic(3, 2, 2).unwrap();
    assert_eq!((mds.len(), mds.dimension()), (10, 3));
    assert_eq!(min_distance(&mds, &opts()).unwrap(), Some(8));
    assert_eq!(dual_code(&c).unwrap().dimension(), 6);
}

#[test]
fn nega_plus_q5() {
    let code = family_nega(5, Sign::Plus, false).unwrap();
    assert_eq!((code.len(), code.dimension()), (26, 4));
    assert_eq!(code.nonzero_exponents(), &[1, 31]);
    let wd = weight_distribution(&code, &opts()).unwrap();
    assert_eq!(
        wd.pairs(),
        vec![(0, 1), (20, 3120), (24, 156000), (25, 75504), (26, 156000)]
    );
}

#[test]
fn nega_congruence_is_enforced() {
    assert!(family_nega(5, Sign::Minus, false).is_err());
    assert!(family_nega(7, Sign::Plus, false).is_err());
    assert!(family_nega(7, Sign::Plus, true).is_ok());
}

#[test]
fn ovoid_code_enumerators() {
    let c3 = family_ovoid_constacyclic(3).unwrap();
    let wd = weight_distribution(&c3, &opts()).unwrap();
    assert_eq!(wd.pairs(), vec![(0, 1), (6, 60), (9, 20)]);
    let c5 = family_ovoid_constacyclic(5).unwrap();
    let wd = weight_distribution(&c5, &opts()).unwrap();
    assert_eq!(wd.pairs(), vec![(0, 1), (20, 520), (25, 104)]);
    // lambda generates GF(q)* for q = 5
    let f = c5.alphabet();
    assert_eq!(f.multiplicative_order(c5.lambda()), Some(4));
    assert!(family_ovoid_constacyclic(2).is_err());
}

#[test]
fn gf4_code_enumerator() {
    let code = code_gf4_17().unwrap();
    assert_eq!((code.len(), code.dimension()), (17, 8));
    let wd = weight_distribution(&code, &opts()).unwrap();
    assert_eq!(
        wd.pairs(),
        vec![(0, 1), (8, 1530), (10, 8160), (12, 25704), (14, 24480), (16, 5661)]
    );
    let dual = dual_code(&code).unwrap();
    assert_eq!(dual.dimension(), 9);
    assert_eq!(min_distance(&dual, &opts()).unwrap(), Some(7));
}

#[test]
fn low_weight_words_of_small_duals() {
    let code = family_nega(3, Sign::Minus, false).unwrap();
    let gen = code.generator_matrix();
    let dual_gen = gen.dual();
    let dual_wd = MatrixCode::new(dual_gen.clone()).weight_distribution(&opts()).unwrap();
    for w in 0..=5 {
        let found = low_weight_dual_words(&gen, w, &opts()).unwrap();
        if w > 0 {
            assert_eq!(found.count(), dual_wd.get(w), "weight {w}");
        }
        for word in found.words(code.len()) {
            assert!(dual_gen.contains(&word));
            assert_eq!(word.iter().filter(|x| !x.is_zero()).count(), w);
        }
    }
    assert!(low_weight_dual_words(&gen, 6, &opts()).is_err());
}

#[test]
fn nega_plus_q5_dual_weight_four() {
    let code = family_nega(5, Sign::Plus, false).unwrap();
    let gen = code.generator_matrix();
    assert_eq!(low_weight_dual_words(&gen, 2, &opts()).unwrap().count(), 0);
    assert_eq!(low_weight_dual_words(&gen, 3, &opts()).unwrap().count(), 0);
    assert_eq!(low_weight_dual_words(&gen, 4, &opts()).unwrap().count(), 46800);
}

#[test]
fn subfield_routes_agree() {
    let gf3 = build_field(3, 1).unwrap();
    for code in [
        family_cyclic(3, 2, 1).unwrap(),
        family_nega(3, Sign::Minus, false).unwrap(),
        family_nega(5, Sign::Plus, false).unwrap(),
    ] {
        let gen = code.generator_matrix();
        let sub = code.alphabet().characteristic();
        let gf = if sub == 3 { gf3.clone() } else { build_field(5, 1).unwrap() };
        let a = subfield_subcode(&gen, &gf).unwrap();
        let b = subfield_subcode_direct(&gen, &gf).unwrap();
        assert!(a.same_code(&b), "{:?}", code.tag());
    }
}

#[test]
fn nega_subfield_subcodes() {
    let gf5 = build_field(5, 1).unwrap();
    let plus = family_nega(5, Sign::Plus, false).unwrap();
    assert_eq!(subfield_subcode(&plus.generator_matrix(), &gf5).unwrap().k(), 0);

    let gf7 = build_field(7, 1).unwrap();
    let minus = family_nega(7, Sign::Minus, false).unwrap();
    let sub = subfield_subcode(&minus.generator_matrix(), &gf7).unwrap();
    assert_eq!(sub.k(), 4);
    let wd = MatrixCode::new(sub).weight_distribution(&opts()).unwrap();
    assert_eq!(wd.pairs(), vec![(0, 1), (42, 2100), (49, 300)]);
}

#[test]
fn trace_codes_over_gf3() {
    let gf3 = build_field(3, 1).unwrap();
    for (m, n, k, d) in [(2, 10, 8, 2), (3, 28, 12, 8)] {
        let code = family_cyclic(3, m, 1).unwrap();
        let tr = trace_code(&code.generator_matrix(), &gf3).unwrap();
        assert_eq!((tr.len(), tr.k()), (n, k));
        let wd = MatrixCode::new(tr).weight_distribution(&opts()).unwrap();
        assert_eq!(wd.min_distance(), Some(d));
    }
}

#[test]
fn budget_is_reported() {
    let code = family_nega(5, Sign::Plus, false).unwrap();
    let err = weight_distribution(&code, &EnumOptions::default().with_budget(10)).unwrap_err();
    assert!(err.to_string().contains("budget"), "{err}");
}
