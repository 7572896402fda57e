use std::io::Write;
use std::time::Instant;

use clap::{Args, ValueEnum};
use pretzel_core::{
    bracket_closed_general, bracket_closed_p11n, bracket_statesum, bracket_tangle_eval,
    conway_closed_p11n, conway_skein_p11n, BracketResult, LaurentPoly, PretzelSpec,
    DEFAULT_MAX_CROSSINGS,
};

use crate::error::{CliError, CliResult};
use crate::render::{render_poly, Format, OutputRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Invariant {
    Bracket,
    Conway,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Bracket => "bracket",
            Invariant::Conway => "conway",
        }
    }

    /// Concrete methods, in `auto` resolution order.
    pub fn methods(self) -> &'static [Method] {
        match self {
            Invariant::Bracket => &[Method::Closed, Method::Tangle, Method::Statesum],
            Invariant::Conway => &[Method::Closed, Method::Skein],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Statesum,
    Tangle,
    Closed,
    Skein,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Statesum => "statesum",
            Method::Tangle => "tangle",
            Method::Closed => "closed",
            Method::Skein => "skein",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub polynomial: LaurentPoly,
    /// The method that actually ran, e.g. `closed_p11n` or `skein`.
    pub method: &'static str,
    pub state_count: Option<u64>,
}

impl From<BracketResult> for Evaluation {
    fn from(r: BracketResult) -> Self {
        Self {
            polynomial: r.polynomial,
            method: r.method.name(),
            state_count: r.state_count,
        }
    }
}

/// The closed bracket formula covering `spec`, if any. `P(1,1,1)` lies
/// outside the `P(1,1,n)` formula and is answered by the state sum.
fn bracket_closed(spec: &PretzelSpec, max_crossings: usize) -> Option<CliResult<BracketResult>> {
    let result = match (spec.as_p11n(), spec.as_ones_then_n()) {
        (Some(1), _) => bracket_statesum(spec, max_crossings),
        (Some(n), _) if n >= 2 => bracket_closed_p11n(n),
        (_, Some((m, n))) if n >= 1 => bracket_closed_general(m as i64, n),
        _ => return None,
    };
    Some(result.map_err(Into::into))
}

fn conway(spec: &PretzelSpec, method: &'static str) -> CliResult<Evaluation> {
    let n = spec.as_p11n().ok_or_else(|| {
        CliError::Precondition(format!(
            "conway {method} needs a spec of the form 1,1,n; got {spec}"
        ))
    })?;
    let polynomial = if method == "skein" {
        conway_skein_p11n(n)?
    } else {
        conway_closed_p11n(n)?
    };
    Ok(Evaluation {
        polynomial,
        method,
        state_count: None,
    })
}

/// Computes `invariant` of `spec` with `method`, resolving `auto` as closed
/// formula, then tangle, then state sum.
pub fn evaluate(
    invariant: Invariant,
    spec: &PretzelSpec,
    method: Method,
    max_crossings: usize,
) -> CliResult<Evaluation> {
    match (invariant, method) {
        (Invariant::Bracket, Method::Auto) => match bracket_closed(spec, max_crossings) {
            Some(result) => result.map(Into::into),
            None => Ok(bracket_tangle_eval(spec).into()),
        },
        (Invariant::Bracket, Method::Closed) => bracket_closed(spec, max_crossings)
            .ok_or_else(|| {
                CliError::Precondition(format!(
                    "no closed bracket formula for {spec}; closed forms cover 1,...,1,n with n >= 1"
                ))
            })?
            .map(Into::into),
        (Invariant::Bracket, Method::Tangle) => Ok(bracket_tangle_eval(spec).into()),
        (Invariant::Bracket, Method::Statesum) => Ok(bracket_statesum(spec, max_crossings)?.into()),
        (Invariant::Conway, Method::Auto | Method::Closed) => conway(spec, "closed"),
        (Invariant::Conway, Method::Skein) => conway(spec, "skein"),
        (invariant, method) => Err(CliError::Usage(format!(
            "method {} is not available for {}; choose one of auto, {}",
            method.name(),
            invariant.name(),
            invariant
                .methods()
                .iter()
                .map(|m| m.name())
                .collect::<Vec<_>>()
                .join(", ")
        ))),
    }
}

#[derive(Args, Debug, Clone)]
pub struct ComputeArgs {
    #[arg(value_enum)]
    pub invariant: Invariant,
    /// Comma-separated tangle crossing numbers, e.g. `1,1,-3`.
    #[arg(long, allow_hyphen_values = true)]
    pub pretzel: String,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest diagram the state sum will enumerate.
    #[arg(long, default_value_t = DEFAULT_MAX_CROSSINGS)]
    pub max_crossings: usize,
}

pub fn run_compute(args: &ComputeArgs, out: &mut dyn Write, diag: &mut dyn Write) -> CliResult<()> {
    let spec: PretzelSpec = args.pretzel.parse()?;
    let start = Instant::now();
    let eval = evaluate(args.invariant, &spec, args.method, args.max_crossings)?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    match args.format {
        Format::Json => {
            let record = OutputRecord {
                spec: spec.to_string(),
                invariant: args.invariant.name().to_string(),
                method: eval.method.to_string(),
                polynomial: (&eval.polynomial).into(),
                elapsed_ms,
                state_count: eval.state_count,
            };
            writeln!(out, "{}", serde_json::to_string(&record)?)?;
        }
        format => writeln!(out, "{}", render_poly(&eval.polynomial, format))?,
    }
    write!(
        diag,
        "{} of P({spec}) by {} in {elapsed_ms:.3} ms",
        args.invariant.name(),
        eval.method
    )?;
    if let Some(states) = eval.state_count {
        write!(diag, " over {states} states")?;
    }
    writeln!(diag)?;
    Ok(())
}
