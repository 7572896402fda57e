//! Kauffman bracket and Alexander-Conway polynomials of pretzel links.
//!
//! Every polynomial is an exact [`LaurentPoly`] with big-integer
//! coefficients. The bracket can be computed by exhaustive state sum, by
//! closed formulas for the `P(1,1,n)` and `P(1,...,1,n)` families, or by a
//! linear-time tangle reduction; the Conway polynomial of `P(1,1,n)` by its
//! closed form or by skein recursion.

pub mod bracket;
pub mod conway;
pub mod error;
pub mod laurent;
pub mod pretzel;

pub use bracket::{
    bracket_closed_general, bracket_closed_p11n, bracket_statesum, bracket_statesum_diagram,
    bracket_tangle_eval, loop_value, BracketMethod, BracketResult, DEFAULT_MAX_CROSSINGS,
};
pub use conway::{conway_closed_p11n, conway_skein_p11n, BaseDiagram, ConwayBaseCases};
pub use error::{Error, LaurentError, Result, SpecError};
pub use laurent::{LaurentPoly, Variable};
pub use pretzel::{
    build_diagram, classify_state, classify_state_general, classify_state_p11n, count_circles,
    Diagram, KauffmanState, Marker, PretzelSpec, StateClassification,
};
