use g2maps::exact::{ratio, Rational};
use g2maps::singularities::{
    classify_germ, germ_signature, intersection_multiplicity, mutate_presentation, ribbon_genus,
    tailed_ribbon_local_ideal, type_i_presentation, type_ii_presentation, verify_presentation,
    Contact, PlanarBranch, SingularityType,
};
use num_traits::{One, Zero};

mod oracles;
use oracles::germs::{branch_delta, fixtures, substitute};
use oracles::presentations::{all_presentations, oracle_verifies, shift_first_generator};
use oracles::ribbons::{multiplicity_vectors, oracle_genus};

#[test]
fn gorenstein_presentations_verify() {
    for p in all_presentations(8) {
        assert!(verify_presentation(&p), "{}", p.kind);
        assert!(oracle_verifies(&p), "oracle disagrees on {}", p.kind);
    }
}

#[test]
fn presentation_kinds_and_branches() {
    for m in 1..=8 {
        let p = type_i_presentation(m).unwrap();
        assert_eq!(p.kind, SingularityType::GenusTwoTypeI { branches: m });
        assert_eq!(p.generators[0].1.branch_count(), m as usize);
    }
    for m in 2..=8 {
        let p = type_ii_presentation(m).unwrap();
        assert_eq!(p.kind, SingularityType::GenusTwoTypeII { branches: m });
        assert_eq!(p.generators[0].1.branch_count(), m as usize);
    }
    assert!(type_i_presentation(0).is_err());
    assert!(type_ii_presentation(1).is_err());
}

#[test]
fn mutants_fail() {
    for p in all_presentations(8) {
        let m = mutate_presentation(&p);
        assert!(!verify_presentation(&m), "mutant of {} verified", p.kind);
        assert!(!oracle_verifies(&m), "oracle accepted mutant of {}", p.kind);
        let s = shift_first_generator(&p);
        assert!(!verify_presentation(&s), "shifted {} verified", p.kind);
        assert!(!oracle_verifies(&s));
    }
}

#[test]
fn small_cases_are_planar_ade() {
    // Type I with one branch is y^2 = x^5.
    let a4 = type_i_presentation(1).unwrap();
    assert_eq!(a4.equations[0].to_string(), "x^5 - y^2");
    let ii2 = type_ii_presentation(2).unwrap();
    assert_eq!(ii2.generators.len(), 2);
    assert_eq!(
        SingularityType::GenusTwoTypeI { branches: 2 }.milnor_number(),
        Some(5)
    );
    assert_eq!(
        SingularityType::GenusTwoTypeII { branches: 2 }.milnor_number(),
        Some(5)
    );
}

#[test]
fn tailed_ribbons_have_genus_two() {
    let mut count = 0;
    for k in 1..=4u32 {
        for ms in multiplicity_vectors(k as usize, 4) {
            assert_eq!(oracle_genus(k, &ms), 2, "oracle k={k} {ms:?}");
            assert_eq!(ribbon_genus(k, &ms), 2, "k={k} {ms:?}");
            count += 1;
        }
    }
    assert_eq!(count, 4 + 16 + 64 + 256);
}

#[test]
fn tailed_point_equations() {
    for m in 1..=5u32 {
        let ideal = tailed_ribbon_local_ideal(m);
        assert_eq!(ideal.len() as u32, m * (m - 1));
        // Every generator vanishes on each x_i-axis and on the y-axis.
        for g in &ideal {
            assert!(g.is_homogeneous());
            assert_eq!(g.total_degree(), Some(2));
            for i in 0..m as usize {
                let mut pt = vec![Rational::zero(); m as usize + 1];
                pt[i] = ratio(3, 1);
                assert!(g.eval(&pt).is_zero());
            }
            let mut pt = vec![Rational::zero(); m as usize + 1];
            pt[m as usize] = Rational::one();
            assert!(g.eval(&pt).is_zero());
        }
    }
}

#[test]
fn germ_fixtures_classify() {
    for fx in fixtures() {
        let branches: Vec<PlanarBranch> = fx
            .branches
            .iter()
            .map(|(x, y, _)| PlanarBranch::from_i64(x, y).unwrap())
            .collect();
        assert_eq!(
            classify_germ(&branches).unwrap(),
            fx.expected,
            "{}",
            fx.name
        );
        assert_eq!(fx.expected.to_string(), fx.name);

        for (x, y, eq) in &fx.branches {
            let b = PlanarBranch::from_i64(x, y).unwrap();
            assert!(
                substitute(eq, b.x(), b.y()).is_zero(),
                "{}: equation does not vanish",
                fx.name
            );
        }
        let mut delta = 0;
        for (i, (x, y, _)) in fx.branches.iter().enumerate() {
            delta += branch_delta(x, y);
            for (j, (_, _, eq)) in fx.branches.iter().enumerate().skip(i + 1) {
                let (bi, bj) = (&branches[i], &branches[j]);
                let oracle = substitute(eq, bi.x(), bi.y()).ord().unwrap() as u32;
                assert_eq!(
                    intersection_multiplicity(bi, bj),
                    Contact::Finite(oracle),
                    "{} ({i},{j})",
                    fx.name
                );
                delta += oracle;
            }
        }
        let r = branches.len() as i64;
        let mu = 2 * delta as i64 - r + 1;
        assert_eq!(Some(mu as u32), fx.expected.milnor_number(), "{}", fx.name);
        let sig = germ_signature(&branches).unwrap();
        assert_eq!((sig.delta, sig.milnor), (delta, mu), "{}", fx.name);
    }
}

#[test]
fn classification_is_linear_invariant() {
    let (a, b, c, d) = (ratio(2, 1), ratio(1, 3), ratio(-1, 1), ratio(5, 2));
    for fx in fixtures() {
        let moved: Vec<PlanarBranch> = fx
            .branches
            .iter()
            .map(|(x, y, _)| {
                PlanarBranch::from_i64(x, y)
                    .unwrap()
                    .transform(&a, &b, &c, &d)
                    .unwrap()
            })
            .collect();
        assert_eq!(classify_germ(&moved).unwrap(), fx.expected, "{}", fx.name);
    }
}

#[test]
fn contact_of_line_and_cusp() {
    let line = PlanarBranch::from_i64(&[0, 1], &[]).unwrap();
    let cusp = PlanarBranch::from_i64(&[0, 0, 1], &[0, 0, 0, 1]).unwrap();
    assert_eq!(intersection_multiplicity(&line, &cusp), Contact::Finite(3));
    let axis = PlanarBranch::from_i64(&[], &[0, 1]).unwrap();
    assert_eq!(intersection_multiplicity(&axis, &cusp), Contact::Finite(2));
}
