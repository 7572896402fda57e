//! Kauffman bracket of pretzel diagrams.
//!
//! Three independent routes to the same polynomial:
//!
//! * [`bracket_statesum`] enumerates all `2^c` Kauffman states and counts
//!   circles on the explicit diagram.
//! * [`bracket_closed_p11n`] and [`bracket_closed_general`] evaluate the
//!   binomial closed forms for `P(1,1,n)` and `P(1,...,1,n)`.
//! * [`bracket_tangle_eval`] reduces every twist column to a combination of
//!   the two crossingless 2-tangles and closes the result up, in time linear
//!   in the number of crossings.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Variable};
use crate::pretzel::{Diagram, KauffmanState, PretzelSpec, MAX_STATE_CROSSINGS};

/// Default cap on the crossing count accepted by exhaustive enumeration.
pub const DEFAULT_MAX_CROSSINGS: usize = 24;

/// Masks per parallel work item in the state sum.
const CHUNK_BITS: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BracketMethod {
    #[serde(rename = "statesum")]
    StateSum,
    ClosedP11n,
    ClosedGeneral,
    Tangle,
}

impl BracketMethod {
    pub fn name(self) -> &'static str {
        match self {
            BracketMethod::StateSum => "statesum",
            BracketMethod::ClosedP11n => "closed_p11n",
            BracketMethod::ClosedGeneral => "closed_general",
            BracketMethod::Tangle => "tangle",
        }
    }
}

impl fmt::Display for BracketMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketResult {
    pub polynomial: LaurentPoly,
    pub method: BracketMethod,
    /// Number of states summed; only set by the state sum.
    pub state_count: Option<u64>,
}

impl BracketResult {
    fn new(polynomial: LaurentPoly, method: BracketMethod) -> Self {
        Self {
            polynomial,
            method,
            state_count: None,
        }
    }
}

/// The loop value `-A^2 - A^-2`.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms(Variable::A, [(2, -1), (-2, -1)])
}

fn a_mono(coeff: impl Into<BigInt>, exp: i64) -> LaurentPoly {
    LaurentPoly::monomial(Variable::A, coeff, exp)
}

/// Powers of the loop value, computed once up to a fixed exponent.
struct LoopPowers(Vec<LaurentPoly>);

impl LoopPowers {
    fn up_to(max: usize) -> Self {
        let delta = loop_value();
        let mut powers = Vec::with_capacity(max + 1);
        powers.push(LaurentPoly::one(Variable::A));
        for k in 1..=max {
            let next = &powers[k - 1] * &delta;
            powers.push(next);
        }
        Self(powers)
    }

    fn get(&self, k: usize) -> &LaurentPoly {
        &self.0[k]
    }

    /// `coeff * A^a_exp * delta^delta_exp`.
    fn term(&self, coeff: &BigInt, a_exp: i64, delta_exp: usize) -> LaurentPoly {
        self.get(delta_exp).shift(a_exp).scale(coeff)
    }
}

/// `C(a, b)`, zero whenever `b < 0` or `b > a`.
fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::from(0);
    }
    num_integer::binomial(BigInt::from(a), BigInt::from(b))
}

pub fn bracket_statesum(spec: &PretzelSpec, max_crossings: usize) -> Result<BracketResult> {
    bracket_statesum_diagram(&Diagram::from_spec(spec), max_crossings)
}

/// Sums `A^(#A - #B) * delta^(|D_s| - 1)` over every state of `diagram`.
///
/// The mask space is cut into disjoint ranges that are summed in parallel
/// and combined by polynomial addition, so the result does not depend on
/// scheduling.
pub fn bracket_statesum_diagram(diagram: &Diagram, max_crossings: usize) -> Result<BracketResult> {
    let c = diagram.crossing_count();
    let limit = max_crossings.min(MAX_STATE_CROSSINGS);
    if c > limit {
        return Err(Error::BudgetExceeded {
            crossings: c,
            limit,
        });
    }
    let total: u64 = 1 << c;
    let chunk: u64 = 1 << CHUNK_BITS.min(c as u32);
    let powers = LoopPowers::up_to(c + diagram.free_loops());

    let blocks = total / chunk;
    let sum_block = |block: u64| sum_states(diagram, block * chunk..(block + 1) * chunk, &powers);
    let polynomial = if blocks == 1 {
        sum_block(0)
    } else {
        (0..blocks)
            .into_par_iter()
            .map(sum_block)
            .reduce(|| LaurentPoly::zero(Variable::A), |a, b| &a + &b)
    };

    Ok(BracketResult {
        polynomial,
        method: BracketMethod::StateSum,
        state_count: Some(total),
    })
}

fn sum_states(diagram: &Diagram, masks: std::ops::Range<u64>, powers: &LoopPowers) -> LaurentPoly {
    let c = diagram.crossing_count();
    let counter = diagram.circle_counter();
    let mut histogram: HashMap<(i64, usize), u64> = HashMap::new();
    for mask in masks {
        let state = KauffmanState::from_mask(mask, c);
        let b = state.b_count() as i64;
        let circles = counter.count(&state);
        *histogram.entry((c as i64 - 2 * b, circles)).or_default() += 1;
    }
    histogram.into_iter().fold(
        LaurentPoly::zero(Variable::A),
        |acc, ((exp, circles), n)| &acc + &powers.term(&BigInt::from(n), exp, circles - 1),
    )
}

/// Closed form for `<P(1,1,n)>`, valid for integers `n >= 2`.
pub fn bracket_closed_p11n(n: i64) -> Result<BracketResult> {
    if n < 2 {
        return Err(Error::UnsupportedParameter(format!(
            "the P(1,1,n) closed form needs n >= 2, got n={n}"
        )));
    }
    let powers = LoopPowers::up_to(n as usize + 2);
    let mut sum = powers.term(&BigInt::from(1), n + 2, 2);
    sum = &sum + &powers.term(&BigInt::from(n + 2), n, 1);
    for j in 2..=n + 2 {
        let coeff = binomial(n + 1, j - 1) + binomial(n, j - 1);
        sum = &sum + &powers.term(&coeff, n + 2 * (1 - j), (j - 2) as usize);
    }
    for j in 2..=n {
        sum = &sum + &powers.term(&binomial(n, j), n + 2 * (1 - j), j as usize);
    }
    Ok(BracketResult::new(sum, BracketMethod::ClosedP11n))
}

/// Closed form for `<P(1,...,1,n)>` with `m` single-crossing tangles,
/// `m >= 1`, `n >= 1`.
///
/// Terms are grouped by `p`, the number of A markers among the single
/// crossings, and `q`, the number of B markers in the long tangle.
pub fn bracket_closed_general(m: i64, n: i64) -> Result<BracketResult> {
    if m < 1 || n < 1 {
        return Err(Error::UnsupportedParameter(format!(
            "the P(1,...,1,n) closed form needs m >= 1 and n >= 1, got m={m}, n={n}"
        )));
    }
    let powers = LoopPowers::up_to((m + n) as usize);
    let mut sum = a_mono(1, n - m);
    for p in 1..=m {
        for q in 1..=n {
            let coeff = binomial(m, p) * binomial(n, q);
            sum = &sum + &powers.term(&coeff, 2 * (p - q) + n - m, (p + q - 2) as usize);
        }
    }
    for p in 1..=m {
        sum = &sum + &powers.term(&binomial(m, p), 2 * p + n - m, p as usize);
    }
    for q in 1..=n {
        sum = &sum + &powers.term(&binomial(n, q), -2 * q + n - m, q as usize);
    }
    Ok(BracketResult::new(sum, BracketMethod::ClosedGeneral))
}

/// A linear combination of the two crossingless 2-tangles: two vertical
/// strands and a cap over a cup.
#[derive(Clone, Debug, PartialEq, Eq)]
struct TwoTangle {
    vertical: LaurentPoly,
    horizontal: LaurentPoly,
}

impl TwoTangle {
    fn identity() -> Self {
        Self {
            vertical: LaurentPoly::one(Variable::A),
            horizontal: LaurentPoly::zero(Variable::A),
        }
    }

    /// A single crossing expanded by the bracket skein rule. The A-smoothing
    /// of a positive crossing is vertical, of a negative one horizontal.
    fn crossing(positive: bool) -> Self {
        let (a, a_inv) = (a_mono(1, 1), a_mono(1, -1));
        if positive {
            Self {
                vertical: a,
                horizontal: a_inv,
            }
        } else {
            Self {
                vertical: a_inv,
                horizontal: a,
            }
        }
    }

    /// Stacks `self` on top of `below`. Stacking two horizontals traps a
    /// loop between them.
    fn stack(&self, below: &Self, delta: &LaurentPoly) -> Self {
        let hh = &(&self.horizontal * &below.horizontal) * delta;
        Self {
            vertical: &self.vertical * &below.vertical,
            horizontal: &(&(&self.vertical * &below.horizontal)
                + &(&self.horizontal * &below.vertical))
                + &hh,
        }
    }

    fn twist_column(p: i64, delta: &LaurentPoly) -> Self {
        let crossing = Self::crossing(p > 0);
        (0..p.unsigned_abs()).fold(Self::identity(), |acc, _| acc.stack(&crossing, delta))
    }
}

/// Bracket via column-wise 2-tangle reduction.
///
/// Under the pretzel closure a choice of basis tangle per column with `v`
/// vertical columns closes into `v` circles, or 2 circles when `v = 0`.
/// Expanding the product over columns by `v` gives the bracket directly.
pub fn bracket_tangle_eval(spec: &PretzelSpec) -> BracketResult {
    let delta = loop_value();
    // by_vertical[v]: weight of all basis choices with v vertical columns.
    let mut by_vertical = vec![LaurentPoly::one(Variable::A)];
    for &p in spec.tangles() {
        let column = TwoTangle::twist_column(p, &delta);
        let mut next = vec![LaurentPoly::zero(Variable::A); by_vertical.len() + 1];
        for (v, weight) in by_vertical.iter().enumerate() {
            next[v] = &next[v] + &(weight * &column.horizontal);
            next[v + 1] = &next[v + 1] + &(weight * &column.vertical);
        }
        by_vertical = next;
    }
    let mut sum = &by_vertical[0] * &delta;
    let mut delta_power = LaurentPoly::one(Variable::A);
    for weight in &by_vertical[1..] {
        sum = &sum + &(weight * &delta_power);
        delta_power = &delta_power * &delta;
    }
    BracketResult::new(sum, BracketMethod::Tangle)
}
