mod common;

use common::{a_poly, model_bracket, model_circles, Convention};
use pretzel_core::{
    bracket_closed_general, bracket_closed_p11n, bracket_statesum, bracket_tangle_eval,
    build_diagram, KauffmanState, LaurentPoly, PretzelSpec, DEFAULT_MAX_CROSSINGS,
};

fn spec(t: &[i64]) -> PretzelSpec {
    PretzelSpec::new(t.to_vec()).unwrap()
}

fn statesum(t: &[i64]) -> LaurentPoly {
    bracket_statesum(&spec(t), DEFAULT_MAX_CROSSINGS)
        .unwrap()
        .polynomial
}

#[test]
fn smoothing_convention_calibration() {
    let trefoil = spec(&[1, 1, 1]);
    let golden = a_poly(&[(7, 1), (3, -1), (-5, -1)]);
    assert_eq!(model_bracket(&trefoil, Convention::VerticalA), golden);
    assert_eq!(statesum(&[1, 1, 1]), golden);

    // The mirrored convention fails both anchors.
    let mirrored = model_bracket(&trefoil, Convention::HorizontalA);
    assert_ne!(mirrored, golden);
    assert_eq!(mirrored, golden.substitute_inverse());
    let p114 = spec(&[1, 1, 4]);
    let all_a = KauffmanState::all_a(6);
    assert_eq!(model_circles(&p114, &all_a, Convention::VerticalA), 3);
    assert_ne!(model_circles(&p114, &all_a, Convention::HorizontalA), 3);
    assert_eq!(build_diagram(&p114).count_circles(&all_a), 3);
}

#[test]
fn union_find_agrees_with_column_model() {
    for t in [
        &[1][..],
        &[-1],
        &[1, 1],
        &[1, 1, 1],
        &[2, -3],
        &[1, 1, 5],
        &[-2, 3, 3],
        &[1, -1, 2, -2],
        &[3, 1, 1, 1, 2],
    ] {
        let s = spec(t);
        let d = build_diagram(&s);
        for state in KauffmanState::enumerate(s.crossing_count()) {
            let got = d.count_circles(&state);
            assert_eq!(
                got,
                model_circles(&s, &state, Convention::VerticalA),
                "{t:?} {state}"
            );
            assert!(got >= 1 && got <= s.crossing_count() + 1, "{t:?} {state}");
        }
    }
}

#[test]
fn statesum_agrees_with_model_bracket() {
    for t in [
        &[1, 1][..],
        &[1, 1, 2],
        &[2, 3, 7],
        &[-2, 3, 3],
        &[1, 1, 1, 2],
        &[-1, -1, -1],
        &[4],
    ] {
        assert_eq!(
            statesum(t),
            model_bracket(&spec(t), Convention::VerticalA),
            "{t:?}"
        );
    }
}

// Values frozen from an exhaustive enumeration run outside this crate.
#[test]
fn frozen_values() {
    assert_eq!(statesum(&[1, 1]), a_poly(&[(4, -1), (-4, -1)]));
    assert_eq!(
        statesum(&[1, 1, 2]),
        a_poly(&[(8, 1), (4, -1), (0, 1), (-4, -1), (-8, 1)])
    );
    assert_eq!(
        statesum(&[1, 1, 3]),
        a_poly(&[(9, 1), (5, -1), (1, 1), (-3, -2), (-7, 1), (-11, -1)])
    );
    assert_eq!(
        statesum(&[1, 1, 4]),
        a_poly(&[
            (10, 1),
            (6, -1),
            (2, 1),
            (-2, -2),
            (-6, 2),
            (-10, -1),
            (-14, 1)
        ])
    );
    assert_eq!(statesum(&[-2, 3, 3]), a_poly(&[(12, 1), (4, 1), (-8, -1)]));
    assert_eq!(
        statesum(&[1, 1, 1, 2]),
        a_poly(&[(11, -1), (7, 1), (3, -2), (-1, 1), (-5, -1), (-9, 1)])
    );
    assert_eq!(
        statesum(&[2, 3, 7]),
        a_poly(&[
            (16, 1),
            (12, -1),
            (8, 3),
            (4, -3),
            (0, 4),
            (-4, -5),
            (-8, 5),
            (-12, -5),
            (-16, 4),
            (-20, -4),
            (-24, 3),
            (-28, -2),
            (-32, 1)
        ])
    );
}

#[test]
fn all_methods_agree_on_the_families() {
    for n in 2..=9 {
        let s = statesum(&[1, 1, n]);
        assert_eq!(bracket_closed_p11n(n).unwrap().polynomial, s, "n={n}");
        assert_eq!(
            bracket_tangle_eval(&spec(&[1, 1, n])).polynomial,
            s,
            "n={n}"
        );
    }
    for m in 1..=3usize {
        for n in 1..=5 {
            let s = PretzelSpec::ones_then(m, n).unwrap();
            let expected = bracket_statesum(&s, DEFAULT_MAX_CROSSINGS)
                .unwrap()
                .polynomial;
            assert_eq!(
                bracket_closed_general(m as i64, n).unwrap().polynomial,
                expected,
                "m={m} n={n}"
            );
        }
    }
}
