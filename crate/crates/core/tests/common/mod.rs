//! Test-only reference implementations, kept independent of the port
//! wiring and union-find used by the library.

#![allow(dead_code)]

use num_bigint::BigInt;
use pretzel_core::{KauffmanState, LaurentPoly, Marker, PretzelSpec, Variable};
use rand::Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// A-smoothing of a positive crossing keeps the two strands vertical.
    VerticalA,
    /// The globally mirrored choice.
    HorizontalA,
}

/// Circle count from the column-level picture.
///
/// A twist column with `h >= 1` horizontal smoothings traps `h - 1` circles
/// and acts as a cap over a cup; with none it is two vertical strands. Around
/// the pretzel closure, `v >= 1` vertical columns close into `v` circles,
/// while `v = 0` leaves a top and a bottom circle.
pub fn model_circles(spec: &PretzelSpec, state: &KauffmanState, convention: Convention) -> usize {
    let mut idx = 0;
    let mut inner = 0;
    let mut vertical_columns = 0;
    for &p in spec.tangles() {
        let mut horizontal = 0;
        for _ in 0..p.unsigned_abs() {
            let b = state.marker(idx) == Marker::B;
            idx += 1;
            let flip = convention == Convention::HorizontalA;
            if (b == (p > 0)) != flip {
                horizontal += 1;
            }
        }
        if horizontal == 0 {
            vertical_columns += 1;
        } else {
            inner += horizontal - 1;
        }
    }
    inner
        + if vertical_columns == 0 {
            2
        } else {
            vertical_columns
        }
}

/// Dense coefficient vector over exponents `[-offset, offset]`, used to sum
/// the bracket without the library's polynomial type.
pub struct DenseA {
    offset: i64,
    coeffs: Vec<BigInt>,
}

impl DenseA {
    pub fn new(max_abs_exp: i64) -> Self {
        Self {
            offset: max_abs_exp,
            coeffs: vec![BigInt::from(0); (2 * max_abs_exp + 1) as usize],
        }
    }

    /// Adds `count * A^exp * (-A^2 - A^-2)^k`, expanding the power by the
    /// binomial theorem: `(-1)^k sum_i C(k,i) A^(2i - 2(k-i))`.
    pub fn add_state(&mut self, count: i64, exp: i64, k: u32) {
        let sign = if k.is_multiple_of(2) { 1 } else { -1 };
        let mut binom = BigInt::from(1);
        for i in 0..=k as i64 {
            let e = exp + 2 * i - 2 * (k as i64 - i);
            let slot = (e + self.offset) as usize;
            self.coeffs[slot] += &binom * sign * count;
            binom = binom * (k as i64 - i) / (i + 1);
        }
    }

    pub fn into_poly(self) -> LaurentPoly {
        let offset = self.offset;
        LaurentPoly::from_terms(
            Variable::A,
            self.coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| (i as i64 - offset, c)),
        )
    }
}

/// Bracket by enumerating states against [`model_circles`].
pub fn model_bracket(spec: &PretzelSpec, convention: Convention) -> LaurentPoly {
    let c = spec.crossing_count();
    let mut dense = DenseA::new(3 * c as i64 + 4);
    for state in KauffmanState::enumerate(c) {
        let exp = state.a_count() as i64 - state.b_count() as i64;
        let circles = model_circles(spec, &state, convention);
        dense.add_state(1, exp, circles as u32 - 1);
    }
    dense.into_poly()
}

pub fn random_spec<R: Rng>(rng: &mut R, max_columns: usize, max_abs: i64) -> PretzelSpec {
    let k = rng.random_range(1..=max_columns);
    let tangles: Vec<i64> = (0..k)
        .map(|_| {
            let magnitude = rng.random_range(1..=max_abs);
            if rng.random_bool(0.5) {
                magnitude
            } else {
                -magnitude
            }
        })
        .collect();
    PretzelSpec::new(tangles).unwrap()
}

pub fn a_poly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(Variable::A, terms.iter().copied())
}
