use tdesign::field::{
    build_field, build_field_with_threshold, gcd_pm, rel_trace, unity_root, unity_set, v2, Elem,
    Embedding, ExtField, FieldElement, FieldError, Sign, Tower,
};
use tdesign::poly::{all_cosets, cyclotomic_coset, min_poly, Polynomial, PolyError};

#[test]
fn gf3_is_prime_field_with_generator_two() {
    let f = build_field(3, 1).unwrap();
    assert_eq!(f.modulus(), &[1, 1]);
    assert_eq!(f.primitive(), Elem(2));
    assert_eq!(f.multiplicative_order(f.primitive()), Some(2));
}

#[test]
fn rejects_bad_parameters() {
    assert_eq!(build_field(9, 1).unwrap_err(), FieldError::NotPrime(9));
    assert_eq!(build_field(3, 0).unwrap_err(), FieldError::ZeroDegree);
    assert!(matches!(
        build_field(2, 3),
        Err(FieldError::UnsupportedBinaryDegree(3))
    ));
}

#[test]
fn table_and_coordinate_paths_agree() {
    let fast = build_field(5, 3).unwrap();
    let slow = build_field_with_threshold(5, 3, 0).unwrap();
    assert!(fast.has_tables() && !slow.has_tables());
    assert_eq!(*fast, *slow);
    for a in (0..125).step_by(7).map(Elem) {
        for b in (0..125).step_by(3).map(Elem) {
            assert_eq!(fast.add(a, b), slow.add(a, b));
            assert_eq!(fast.mul(a, b), slow.mul(a, b));
        }
        assert_eq!(fast.inv(a), slow.inv(a));
        assert_eq!(fast.pow(a, 17), slow.pow(a, 17));
    }
}

#[test]
fn descriptor_round_trip() {
    let f = build_field(3, 4).unwrap();
    let text = f.descriptor();
    assert!(text.starts_with("p=3 m=4 modulus=["));
    assert_eq!(*ExtField::from_descriptor(&text).unwrap(), *f);
    assert!(ExtField::from_descriptor("p=3 m=4 modulus=[1,1,1,1,1]").is_err());
}

#[test]
fn cross_field_ops_are_errors() {
    let a = FieldElement::one(&build_field(3, 2).unwrap());
    let b = FieldElement::one(&build_field(3, 4).unwrap());
    assert!(matches!(a.checked_add(&b), Err(FieldError::Mismatch { .. })));
}

#[test]
fn roots_of_unity() {
    let f = build_field(3, 2).unwrap();
    assert_eq!(unity_root(&f, 1).unwrap(), FieldElement::one(&f));
    let minus_one = unity_root(&f, 2).unwrap();
    assert_eq!(minus_one, -FieldElement::one(&f));
    assert!(unity_root(&f, 5).is_err());
    assert_eq!(unity_set(&f, 1).unwrap().len(), 1);
}

#[test]
fn two_adic_order() {
    assert_eq!(v2(1), Ok(0));
    assert_eq!(v2(12), Ok(2));
    assert_eq!(v2(0), Err(FieldError::ZeroArgument));
    for q in [5u64, 9, 13, 17] {
        assert_eq!(v2(2 * (q * q + 1)), Ok(2));
    }
}

#[test]
fn gcd_closed_form_examples() {
    assert_eq!(gcd_pm(3, 1, 2, Sign::Minus), Ok(4));
    assert_eq!(gcd_pm(3, 2, 2, Sign::Minus), Ok(2));
    assert_eq!(gcd_pm(5, 1, 3, Sign::Plus), Ok(6));
    assert_eq!(gcd_pm(4, 1, 1, Sign::Plus), Err(FieldError::EvenBase(4)));
}

#[test]
fn rel_trace_identities() {
    let f = build_field(3, 2).unwrap();
    for x in f.elements() {
        let fx = FieldElement::new(&f, x);
        assert_eq!(rel_trace(&fx, 1, 2, 2).unwrap(), fx);
        let t = rel_trace(&fx, 1, 2, 1).unwrap();
        assert_eq!(t, &fx + &fx.pow(3));
        assert!(f.is_prime_subfield(t.value()));
    }
    assert!(rel_trace(&FieldElement::one(&f), 1, 2, 3).is_err());
}

#[test]
fn embedding_is_a_ring_homomorphism() {
    let sub = build_field(3, 2).unwrap();
    let sup = build_field(3, 4).unwrap();
    let e = Embedding::new(&sub, &sup).unwrap();
    assert_eq!(e.apply(Elem::ZERO), Elem::ZERO);
    assert_eq!(e.apply(Elem::ONE), Elem::ONE);
    for a in sub.elements() {
        for b in sub.elements() {
            assert_eq!(e.apply(sub.add(a, b)), sup.add(e.apply(a), e.apply(b)));
            assert_eq!(e.apply(sub.mul(a, b)), sup.mul(e.apply(a), e.apply(b)));
        }
        assert_eq!(e.pull(e.apply(a)), Some(a));
    }
}

#[test]
fn rejects_non_subfields() {
    let a = build_field(3, 2).unwrap();
    let b = build_field(3, 3).unwrap();
    let c = build_field(5, 2).unwrap();
    assert!(Embedding::new(&a, &b).is_err());
    assert!(Embedding::new(&a, &c).is_err());
}

#[test]
fn tower_composition_is_consistent() {
    let t = Tower::new(vec![
        build_field(3, 1).unwrap(),
        build_field(3, 2).unwrap(),
        build_field(3, 4).unwrap(),
        build_field(3, 8).unwrap(),
    ])
    .unwrap();
    for i in 0..t.len() {
        for j in i..t.len() {
            for k in j..t.len() {
                let direct = t.embedding(i, k).unwrap();
                let via = t.embedding(i, j).unwrap().then(&t.embedding(j, k).unwrap()).unwrap();
                for x in t.level(i).elements() {
                    assert_eq!(direct.apply(x), via.apply(x));
                }
            }
        }
    }
}

#[test]
fn divmod_and_gcd() {
    let f = build_field(5, 1).unwrap();
    let x2m1 = Polynomial::binomial(&f, 2, Elem::ONE);
    let xm1 = Polynomial::linear(&f, Elem::ONE);
    let (q, r) = x2m1.divmod(&xm1).unwrap();
    assert_eq!(q, Polynomial::new(&f, vec![Elem::ONE, Elem::ONE]));
    assert!(r.is_zero());
    assert_eq!(
        x2m1.divmod(&Polynomial::zero(&f)).unwrap_err(),
        PolyError::DivisionByZero
    );
}

#[test]
fn gcd_of_binomials_over_gf_q2() {
    // gcd(x^(q+1) - 1, x^(q-1) - 1) = x^2 - 1 over GF(q^2), q = 9
    let f = build_field(3, 4).unwrap();
    let a = Polynomial::binomial(&f, 10, Elem::ONE);
    let b = Polynomial::binomial(&f, 8, Elem::ONE);
    assert_eq!(a.gcd(&b).unwrap(), Polynomial::binomial(&f, 2, Elem::ONE));
}

#[test]
fn root_of_binomial_evaluates_to_zero() {
    let f = build_field(5, 2).unwrap();
    let g = f.primitive();
    let lambda = f.pow(g, 26);
    assert!(Polynomial::binomial(&f, 26, lambda).eval(g).is_zero());
}

#[test]
fn text_round_trip() {
    let f = build_field(3, 2).unwrap();
    let p = Polynomial::new(&f, vec![Elem(5), Elem::ZERO, Elem::ONE]);
    assert_eq!(p.to_text(), "[[2,1],[0,0],[1,0]]");
    assert_eq!(Polynomial::from_text(&f, &p.to_text()).unwrap(), p);
    let g = build_field(7, 1).unwrap();
    let p = Polynomial::new(&g, vec![Elem(3), Elem(6)]);
    assert_eq!(p.to_text(), "[3,6]");
    assert_eq!(Polynomial::from_text(&g, "[3, 6]").unwrap(), p);
}

#[test]
fn coset_examples() {
    for (p, m, s) in [(3u64, 2u32, 1u32), (3, 4, 3), (5, 3, 1), (7, 2, 1)] {
        let q = p.pow(m);
        let h = (p.pow(s) - 1) / 2;
        let c = cyclotomic_coset(h, q, q + 1).unwrap();
        assert_eq!(c.members, {
            let mut v = vec![h, q + 1 - h];
            v.sort();
            v
        });
    }
    for q in [5u64, 9, 13] {
        let n2 = 2 * (q * q + 1);
        assert_eq!(cyclotomic_coset(1, q * q, n2).unwrap().members, vec![1, q * q]);
        let c = cyclotomic_coset(q * q + 2, q, n2).unwrap();
        let mut expect = vec![q * q + 2, q * q + q + 1, 2 * q * q - q + 2, 2 * q * q + 1];
        expect.sort();
        assert_eq!(c.members, expect);
    }
    assert_eq!(cyclotomic_coset(0, 7, 50).unwrap().members, vec![0]);
    assert!(cyclotomic_coset(1, 3, 6).is_err());
}

#[test]
fn cosets_partition_residues() {
    for (q, n) in [(3u64, 10u64), (25, 52), (4, 51), (81, 164)] {
        let cosets = all_cosets(q, n).unwrap();
        let mut all: Vec<u64> = cosets.iter().flat_map(|c| c.members.clone()).collect();
        all.sort();
        assert_eq!(all, (0..n).collect::<Vec<_>>());
    }
}

#[test]
fn min_poly_of_unit_circle_element() {
    // beta^i of order dividing q+1 and not in GF(q): t^2 - Tr(beta^i) t + 1
    let sub = build_field(3, 2).unwrap();
    let ext = build_field(3, 4).unwrap();
    let beta = unity_root(&ext, 10).unwrap();
    let emb = Embedding::new(&sub, &ext).unwrap();
    for i in [1u64, 2, 3, 4] {
        let b = beta.pow(i);
        let mp = min_poly(&b, &sub).unwrap();
        let tr = ext.trace_to(b.value(), 2).unwrap();
        let expect = Polynomial::new(
            &sub,
            vec![Elem::ONE, sub.neg(emb.pull(tr).unwrap()), Elem::ONE],
        );
        assert_eq!(mp, expect);
    }
    assert_eq!(
        min_poly(&FieldElement::one(&ext), &sub).unwrap(),
        Polynomial::linear(&sub, Elem::ONE)
    );
    assert_eq!(min_poly(&beta.pow(5), &sub).unwrap().degree(), Some(1));
}
