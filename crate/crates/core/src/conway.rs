//! Alexander-Conway polynomial of `P(1,1,n)`.
//!
//! [`conway_closed_p11n`] evaluates the closed form directly.
//! [`conway_skein_p11n`] gets the same value by running the skein relation
//! `∇(L+) = ∇(L-) + z ∇(L0)` at the top crossing of the third tangle,
//! which moves `n` two steps towards `{0, 1}`.
//!
//! Orientations are not computed from diagrams. The smoothed diagram `L0` of
//! each step is the Hopf link formed by the first two tangles; it is
//! left-handed when `n` is odd and right-handed when `n` is even. For
//! positive `n` the diagram `P(1,1,n)` plays `L-` and `P(1,1,n-2)` plays
//! `L+`; for negative `n` the roles flip, with `P(1,1,n+2)` as `L-`.

use crate::error::{Result, SpecError};
use crate::laurent::{LaurentPoly, Variable};

/// Terminal diagrams of the skein recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseDiagram {
    Unknot,
    /// Two split unknotted components.
    SplitUnlink,
    RightHandedHopf,
    LeftHandedHopf,
    /// `P(1,1,1)`, the right-handed trefoil.
    Trefoil,
}

pub struct ConwayBaseCases;

impl ConwayBaseCases {
    pub const ALL: [BaseDiagram; 5] = [
        BaseDiagram::Unknot,
        BaseDiagram::SplitUnlink,
        BaseDiagram::RightHandedHopf,
        BaseDiagram::LeftHandedHopf,
        BaseDiagram::Trefoil,
    ];

    pub fn value(diagram: BaseDiagram) -> LaurentPoly {
        let z = |terms: &[(i64, i64)]| LaurentPoly::from_terms(Variable::Z, terms.iter().copied());
        match diagram {
            BaseDiagram::Unknot => z(&[(0, 1)]),
            BaseDiagram::SplitUnlink => z(&[]),
            BaseDiagram::RightHandedHopf => z(&[(1, 1)]),
            BaseDiagram::LeftHandedHopf => z(&[(1, -1)]),
            BaseDiagram::Trefoil => z(&[(0, 1), (2, 1)]),
        }
    }
}

fn base(diagram: BaseDiagram) -> LaurentPoly {
    ConwayBaseCases::value(diagram)
}

fn z() -> LaurentPoly {
    LaurentPoly::monomial(Variable::Z, 1, 1)
}

fn check_n(n: i64) -> Result<()> {
    if n == 0 {
        return Err(SpecError::ZeroTangle { index: 2 }.into());
    }
    Ok(())
}

/// `1 + ((n+1)/2) z^2` for odd `n`, `1 - (n/2) z^2` for even `n`.
pub fn conway_closed_p11n(n: i64) -> Result<LaurentPoly> {
    check_n(n)?;
    let z2 = if n % 2 != 0 { (n + 1) / 2 } else { -(n / 2) };
    Ok(LaurentPoly::from_terms(Variable::Z, [(0, 1), (2, z2)]))
}

/// The Hopf link left behind by smoothing a third-tangle crossing.
fn smoothed_hopf(n: i64) -> BaseDiagram {
    if n % 2 != 0 {
        BaseDiagram::LeftHandedHopf
    } else {
        BaseDiagram::RightHandedHopf
    }
}

/// Skein recursion for `∇(P(1,1,n))`.
pub fn conway_skein_p11n(n: i64) -> Result<LaurentPoly> {
    check_n(n)?;
    Ok(skein(n))
}

fn skein(n: i64) -> LaurentPoly {
    // Each step changes one third-tangle crossing and smooths it; the L0
    // term is the same Hopf link all the way down.
    let l0 = &z() * &base(smoothed_hopf(n));
    let mut k = n;
    let mut acc = LaurentPoly::zero(Variable::Z);
    while k > 1 {
        // L- = P(1,1,k), L+ = P(1,1,k-2): ∇(L-) = ∇(L+) - z ∇(L0).
        acc = &acc - &l0;
        k -= 2;
    }
    while k < 0 {
        // L+ = P(1,1,k), L- = P(1,1,k+2).
        acc = &acc + &l0;
        k += 2;
    }
    let terminal = if k == 1 {
        base(BaseDiagram::Trefoil)
    } else {
        // The third tangle is empty: the remaining two-crossing twist closes
        // up as a connected sum of two one-crossing unknots.
        base(BaseDiagram::Unknot)
    };
    &terminal + &acc
}

/// The right-handed trefoil worked out from the unknot and the split unlink
/// alone: one crossing change gives the unknot with the Hopf link as `L0`,
/// and one more on the Hopf link gives the unlink with the unknot as `L0`.
pub fn trefoil_by_skein() -> LaurentPoly {
    let hopf = &base(BaseDiagram::SplitUnlink) + &(&z() * &base(BaseDiagram::Unknot));
    &base(BaseDiagram::Unknot) + &(&z() * &hopf)
}
