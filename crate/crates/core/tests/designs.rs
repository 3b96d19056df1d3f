use tdesign::code::{
    code_gf4_17, columns_as_points, dual_code, elliptic_quadric, family_nega,
    family_ovoid_constacyclic, low_weight_dual_words, no_three_collinear, plane_sections,
    points_matrix, EnumOptions, MatrixCode,
};
use tdesign::design::{
    block_count, complement_design, complement_lambda, derived_lambda, parse_blocks,
    supports_from, supports_of_weight, verify_design, verify_design_auto, write_blocks,
    DesignParams, IncidenceStructure, Verdict,
};
use tdesign::field::{Elem, Sign};

fn opts() -> EnumOptions {
    EnumOptions::default()
}

fn sections_of_size(field: &tdesign::field::ExtField, pts: &[Vec<Elem>], size: usize) -> Vec<Vec<usize>> {
    plane_sections(field, pts)
        .into_iter()
        .filter(|s| s.len() == size)
        .collect()
}

#[test]
fn trivial_structures() {
    let single = IncidenceStructure::new(5, vec![vec![4, 0, 2, 1, 3]]).unwrap();
    for t in 1..=5 {
        assert_eq!(verify_design(&single, t).unwrap(), Verdict::Design { lambda: 1 });
    }
    let d = IncidenceStructure::new(7, vec![vec![0, 1, 2]]).unwrap();
    assert_eq!(complement_design(&d).blocks(), &[vec![3, 4, 5, 6]]);
    assert!(IncidenceStructure::new(3, vec![vec![0, 3]]).is_err());
    let mixed = IncidenceStructure::new(4, vec![vec![0, 1], vec![1, 2, 3]]).unwrap();
    assert!(verify_design(&mixed, 1).is_err());
}

#[test]
fn fano_plane() {
    let lines = vec![
        vec![0, 1, 3],
        vec![1, 2, 4],
        vec![2, 3, 5],
        vec![3, 4, 6],
        vec![4, 5, 0],
        vec![5, 6, 1],
        vec![6, 0, 2],
    ];
    let d = IncidenceStructure::new(7, lines.clone()).unwrap();
    assert_eq!(verify_design(&d, 2).unwrap(), Verdict::Design { lambda: 1 });
    assert_eq!(verify_design(&d, 1).unwrap(), Verdict::Design { lambda: 3 });
    assert!(matches!(verify_design(&d, 3).unwrap(), Verdict::NotDesign { min: 0, max: 1 }));
    let mut fewer = lines;
    fewer.pop();
    let d = IncidenceStructure::new(7, fewer).unwrap();
    assert!(matches!(verify_design(&d, 2).unwrap(), Verdict::NotDesign { .. }));
}

#[test]
fn parameter_arithmetic() {
    let p = DesignParams { t: 3, v: 26, k: 20, lambda: 57, b: 130 };
    assert!(p.counts_agree());
    assert_eq!(derived_lambda(&p, 3).unwrap(), 57);
    assert_eq!(derived_lambda(&p, 2).unwrap(), 76);
    let g = DesignParams { t: 4, v: 17, k: 8, lambda: 15, b: 1530 / 3 };
    assert!(g.counts_agree());
    assert_eq!(derived_lambda(&g, 3).unwrap(), 42);
    assert_eq!(block_count(3, 82, 4, 1).unwrap(), 22140);
    assert_eq!(block_count(3, 26, 20, 57).unwrap(), 130);
    assert_eq!(block_count(3, 26, 20, 0).unwrap(), 0);
    assert!(block_count(3, 26, 20, 1).is_err());
    // complement of S(3,4,82) back to 3-(82,78,19019)
    let s = DesignParams { t: 3, v: 82, k: 4, lambda: 1, b: 22140 };
    assert_eq!(complement_lambda(&s).unwrap(), 19019);
}

#[test]
fn nega_plus_q5_designs() {
    let code = family_nega(5, Sign::Plus, false).unwrap();
    let d = supports_of_weight(&code, 20, &opts()).unwrap();
    assert_eq!(d.len(), 3120 / 24);
    assert_eq!(d.block_size(), Some(20));
    let direct = verify_design(&d, 3).unwrap();
    assert_eq!(direct, Verdict::Design { lambda: 57 });
    let via = verify_design_auto(&d, 3, &EnumOptions::default().with_budget(1000)).unwrap();
    assert!(via.via_complement);
    assert_eq!(via.verdict, direct);
    let steiner = complement_design(&d);
    assert_eq!(verify_design(&steiner, 3).unwrap(), Verdict::Design { lambda: 1 });

    let dual_words = low_weight_dual_words(&code.generator_matrix(), 4, &opts()).unwrap();
    let dd = IncidenceStructure::new(26, dual_words.supports()).unwrap();
    assert_eq!(dd.len(), 46800 / 24);
    assert_eq!(verify_design(&dd, 3).unwrap(), Verdict::Design { lambda: 3 });
}

#[test]
fn gf4_designs() {
    let code = code_gf4_17().unwrap();
    let d = supports_of_weight(&code, 8, &opts()).unwrap();
    assert_eq!(verify_design(&d, 4).unwrap(), Verdict::Design { lambda: 15 });
    assert_eq!(verify_design(&d, 3).unwrap(), Verdict::Design { lambda: 42 });
    let dual = dual_code(&code).unwrap();
    let dd = supports_of_weight(&dual, 7, &opts()).unwrap();
    assert!(dd.block_size() == Some(7));
}

#[test]
fn gf4_extended_code_supports_no_1_design() {
    let code = code_gf4_17().unwrap();
    let ext = MatrixCode::new(code.generator_matrix().extended());
    let wd = ext.weight_distribution(&opts()).unwrap();
    assert_eq!(wd.total(), 65536);
    assert_eq!(wd.get(8) + wd.get(9), 1530);
    let weights: Vec<usize> = wd.support_weights().into_iter().filter(|&w| w > 0).collect();
    assert!(!weights.is_empty());
    for w in weights {
        let d = supports_from(&ext, w, &opts()).unwrap();
        assert!(
            matches!(verify_design(&d, 1).unwrap(), Verdict::NotDesign { .. }),
            "weight {w}"
        );
    }
}

#[test]
fn ovoid_steiner_systems_agree_with_geometry() {
    for q in [3u64, 5] {
        let code = family_ovoid_constacyclic(q).unwrap();
        let n = (q * q + 1) as usize;
        let d = supports_of_weight(&code, n - q as usize - 1, &opts()).unwrap();
        assert_eq!(d.len() as u64, q * (q * q + 1));
        let steiner = complement_design(&d);
        assert_eq!(verify_design(&steiner, 3).unwrap(), Verdict::Design { lambda: 1 });

        // the generator columns of C[q] form an ovoid whose plane sections are those blocks
        let gen = code.generator_matrix();
        let cols: Vec<Vec<Elem>> = columns_as_points(&gen).into_iter().map(Option::unwrap).collect();
        assert!(no_three_collinear(code.alphabet(), &cols));
        let from_cols =
            IncidenceStructure::new(n, sections_of_size(code.alphabet(), &cols, q as usize + 1)).unwrap();
        assert_eq!(from_cols, steiner);

        // the quadric's own code produces the same system on its own labels
        let quad = elliptic_quadric(q).unwrap();
        assert_eq!(quad.points.len(), n);
        assert!(no_three_collinear(&quad.field, &quad.points));
        let sections = plane_sections(&quad.field, &quad.points);
        assert!(sections.iter().all(|s| s.len() == 1 || s.len() == q as usize + 1));
        let planes =
            IncidenceStructure::new(n, sections_of_size(&quad.field, &quad.points, q as usize + 1)).unwrap();
        assert_eq!(verify_design(&planes, 3).unwrap(), Verdict::Design { lambda: 1 });
        let qcode = MatrixCode::new(points_matrix(&quad.field, &quad.points).unwrap());
        let qd = supports_from(&qcode, n - q as usize - 1, &opts()).unwrap();
        assert_eq!(complement_design(&qd), planes);
        assert_eq!(
            qcode.weight_distribution(&opts()).unwrap().pairs(),
            vec![(0, 1), (n - q as usize - 1, (q * q - q) as u128 * n as u128), (n - 1, 0)]
                .into_iter()
                .filter(|p| p.1 > 0)
                .chain([(q as usize * q as usize, (q as u128 - 1) * n as u128)])
                .collect::<Vec<_>>()
        );
    }
}

#[test]
fn block_file_round_trip() {
    let code = family_ovoid_constacyclic(3).unwrap();
    let d = supports_of_weight(&code, 6, &opts()).unwrap();
    let mut buf = Vec::new();
    write_blocks(&d, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(text.lines().count(), d.len());
    assert_eq!(parse_blocks(&text, Some(10)).unwrap(), d);
    assert!(parse_blocks("1 2 x\n", None).is_err());
}
