//! Closed-form circle counts for the `P(1,1,n)` and `P(1,...,1,n)` families,
//! read off from marker statistics instead of tracing the smoothed diagram.

use super::state::{KauffmanState, Marker};
use super::PretzelSpec;
use crate::error::{Error, Result};

/// Marker statistics of a state on `P(1, ..., 1, n)` with `m` leading
/// single-crossing tangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StateClassification {
    pub b_total: usize,
    /// `B` on the crossing of the first tangle (`v_1`).
    pub b_on_v1: bool,
    /// `B` on the crossing of the second tangle (`v_2`); false when `m < 2`.
    pub b_on_v2: bool,
    /// `A` markers among the `m` single-crossing tangles.
    pub p: usize,
    /// `B` markers in the length-`n` tangle.
    pub q: usize,
}

fn check_len(spec: &PretzelSpec, state: &KauffmanState) -> Result<()> {
    if state.len() != spec.crossing_count() {
        return Err(Error::StateMismatch {
            expected: spec.crossing_count(),
            got: state.len(),
        });
    }
    Ok(())
}

/// Extracts the classification of `state` on `spec = P(1, ..., 1, n)` with
/// `n >= 1`.
pub fn classify_state(spec: &PretzelSpec, state: &KauffmanState) -> Result<StateClassification> {
    let (m, n) = match spec.as_ones_then_n() {
        Some((m, n)) if n >= 1 => (m, n),
        _ => {
            return Err(Error::UnsupportedFamily {
                spec: spec.to_string(),
                family: "P(1,...,1,n) with n >= 1",
            })
        }
    };
    check_len(spec, state)?;
    let is_b = |i: usize| state.marker(i) == Marker::B;
    let p = (0..m).filter(|&i| !is_b(i)).count();
    let q = (m..m + n as usize).filter(|&i| is_b(i)).count();
    Ok(StateClassification {
        b_total: state.b_count(),
        b_on_v1: is_b(0),
        b_on_v2: m >= 2 && is_b(1),
        p,
        q,
    })
}

/// Predicted circle count for a state of `P(1, 1, n)`, `n > 1`, from the
/// number of `B` markers and whether `v_1` or `v_2` carries one.
pub fn classify_state_p11n(spec: &PretzelSpec, state: &KauffmanState) -> Result<usize> {
    match spec.as_p11n() {
        Some(n) if n > 1 => {}
        _ => {
            return Err(Error::UnsupportedFamily {
                spec: spec.to_string(),
                family: "P(1,1,n) with n > 1",
            })
        }
    }
    let c = classify_state(spec, state)?;
    let b = c.b_total;
    Ok(match b {
        0 => 3,
        1 => 2,
        _ if c.b_on_v1 || c.b_on_v2 => b - 1,
        _ => b + 1,
    })
}

/// Predicted circle count for `P(1, ..., 1, n)` from `p` (A markers among
/// the `m` single crossings) and `q` (B markers in the long tangle).
pub fn classify_state_general(m: usize, n: usize, p: usize, q: usize) -> Result<usize> {
    if m == 0 || n == 0 {
        return Err(Error::Domain(format!(
            "need m >= 1 and n >= 1, got m={m}, n={n}"
        )));
    }
    if p > m || q > n {
        return Err(Error::Domain(format!(
            "need 0 <= p <= m and 0 <= q <= n, got p={p}, q={q} for m={m}, n={n}"
        )));
    }
    Ok(match (p > 0, q > 0) {
        (true, true) => p + q - 1,
        (true, false) => p + 1,
        (false, true) => q + 1,
        (false, false) => 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p11(n: i64) -> PretzelSpec {
        PretzelSpec::p11n(n).unwrap()
    }

    fn st(s: &str) -> KauffmanState {
        s.parse().unwrap()
    }

    #[test]
    fn classifier_cases_on_p114() {
        let spec = p11(4);
        assert_eq!(classify_state_p11n(&spec, &st("AAAAAA")).unwrap(), 3);
        assert_eq!(classify_state_p11n(&spec, &st("AAABAA")).unwrap(), 2);
        assert_eq!(classify_state_p11n(&spec, &st("BAAAAA")).unwrap(), 2);
        // v_1 = B plus two B markers in the long tangle.
        assert_eq!(classify_state_p11n(&spec, &st("BABBAA")).unwrap(), 2);
        // Two B markers, both in the long tangle.
        assert_eq!(classify_state_p11n(&spec, &st("AAABBA")).unwrap(), 3);
    }

    #[test]
    fn p11n_classifier_rejects_other_shapes() {
        let trefoil = p11(1);
        assert!(matches!(
            classify_state_p11n(&trefoil, &st("AAA")),
            Err(Error::UnsupportedFamily { .. })
        ));
        assert!(classify_state_p11n(&p11(-3), &st("AAAAA")).is_err());
        let other = PretzelSpec::new(vec![1, 2, 3]).unwrap();
        assert!(classify_state_p11n(&other, &st("AAAAAA")).is_err());
        let hopf = PretzelSpec::new(vec![1, 1]).unwrap();
        assert!(classify_state_p11n(&hopf, &st("AA")).is_err());
        assert!(matches!(
            classify_state_p11n(&p11(3), &st("AAAA")),
            Err(Error::StateMismatch {
                expected: 5,
                got: 4
            })
        ));
    }

    #[test]
    fn general_classifier_cases() {
        assert_eq!(classify_state_general(3, 5, 2, 3).unwrap(), 4);
        assert_eq!(classify_state_general(3, 5, 2, 0).unwrap(), 3);
        assert_eq!(classify_state_general(3, 5, 0, 4).unwrap(), 5);
        assert_eq!(classify_state_general(3, 5, 0, 0).unwrap(), 1);
        assert!(matches!(
            classify_state_general(3, 5, 4, 0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            classify_state_general(3, 5, 0, 6),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            classify_state_general(0, 5, 0, 0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn extracts_p_and_q() {
        let spec = PretzelSpec::ones_then(3, 4).unwrap();
        let c = classify_state(&spec, &st("ABABBAB")).unwrap();
        assert_eq!(c.p, 2);
        assert_eq!(c.q, 3);
        assert_eq!(c.b_total, 4);
        assert!(!c.b_on_v1);
        assert!(c.b_on_v2);
    }
}
