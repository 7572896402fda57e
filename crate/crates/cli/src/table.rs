use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Args, ValueEnum};
use pretzel_core::{LaurentPoly, PretzelSpec, DEFAULT_MAX_CROSSINGS};
use serde::{Deserialize, Serialize};

use crate::compute::{evaluate, Invariant, Method};
use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum Family {
    /// `P(1, 1, n)`.
    #[value(name = "p11n")]
    #[serde(rename = "p11n")]
    P11n,
    /// `P(1, ..., 1, n)` with `--m` leading ones.
    #[value(name = "p1m_n")]
    #[serde(rename = "p1m_n")]
    P1mN,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    #[default]
    Text,
    Csv,
    Json,
    Latex,
}

#[derive(Args, Debug, Clone)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub invariant: Invariant,
    #[arg(long, value_enum)]
    pub family: Family,
    /// Inclusive range of `n`, e.g. `2..8` or `-3..3`; `n = 0` is skipped.
    #[arg(long, allow_hyphen_values = true)]
    pub range: String,
    /// Number of leading ones for `p1m_n`.
    #[arg(long)]
    pub m: Option<usize>,
    /// Methods to tabulate side by side; defaults to every method of the invariant.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub methods: Vec<Method>,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    pub format: TableFormat,
    #[arg(long, default_value_t = DEFAULT_MAX_CROSSINGS)]
    pub max_crossings: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub n: i64,
    pub spec: String,
    /// One entry per method; `None` where the method does not apply.
    pub values: Vec<Option<LaurentPoly>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub invariant: String,
    pub family: Family,
    pub m: Option<usize>,
    pub methods: Vec<String>,
    pub rows: Vec<Row>,
}

pub fn parse_range(s: &str) -> CliResult<RangeInclusive<i64>> {
    let bad = || CliError::Usage(format!("invalid range {s:?}, expected a..b"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().parse().map_err(|_| bad())?;
    Ok(lo..=hi)
}

fn family_spec(family: Family, m: Option<usize>, n: i64) -> CliResult<PretzelSpec> {
    Ok(match family {
        Family::P11n => PretzelSpec::p11n(n)?,
        Family::P1mN => PretzelSpec::ones_then(m.unwrap_or(0), n)?,
    })
}

pub fn build_table(args: &TableArgs) -> CliResult<Table> {
    match (args.family, args.m) {
        (Family::P1mN, None | Some(0)) => {
            return Err(CliError::Usage("family p1m_n needs --m >= 1".into()))
        }
        (Family::P11n, Some(_)) => {
            return Err(CliError::Usage("--m only applies to family p1m_n".into()))
        }
        _ => {}
    }
    let methods: Vec<Method> = if args.methods.is_empty() {
        args.invariant.methods().to_vec()
    } else {
        args.methods.clone()
    };

    let ns: Vec<i64> = parse_range(&args.range)?.filter(|&n| n != 0).collect();
    if ns.is_empty() {
        return Err(CliError::Usage(format!(
            "range {} holds no valid n (n = 0 is excluded)",
            args.range
        )));
    }

    let mut rows = Vec::with_capacity(ns.len());
    for n in ns {
        let spec = family_spec(args.family, args.m, n)?;
        let mut values = Vec::with_capacity(methods.len());
        for &method in &methods {
            match evaluate(args.invariant, &spec, method, args.max_crossings) {
                Ok(e) => values.push(Some(e.polynomial)),
                Err(e @ CliError::Precondition(_) | e @ CliError::Budget(_)) => {
                    eprintln!("n={n} {}: n/a ({e})", method.name());
                    values.push(None);
                }
                Err(e) => return Err(e),
            }
        }
        rows.push(Row {
            n,
            spec: spec.to_string(),
            values,
        });
    }

    Ok(Table {
        invariant: args.invariant.name().to_string(),
        family: args.family,
        m: args.m,
        methods: methods.iter().map(|m| m.name().to_string()).collect(),
        rows,
    })
}

fn cell(value: &Option<LaurentPoly>, render: impl Fn(&LaurentPoly) -> String) -> String {
    value
        .as_ref()
        .map(render)
        .unwrap_or_else(|| "n/a".to_string())
}

pub fn write_table(table: &Table, format: TableFormat, out: &mut dyn Write) -> CliResult<()> {
    let header: Vec<String> = ["n", "spec"]
        .into_iter()
        .map(String::from)
        .chain(table.methods.iter().cloned())
        .collect();

    match format {
        TableFormat::Json => writeln!(out, "{}", serde_json::to_string(table)?)?,
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&header)?;
            for row in &table.rows {
                let mut record = vec![row.n.to_string(), row.spec.clone()];
                record.extend(row.values.iter().map(|v| cell(v, LaurentPoly::to_text)));
                w.write_record(&record)?;
            }
            w.flush()?;
        }
        TableFormat::Latex => {
            writeln!(
                out,
                "\\begin{{tabular}}{{rl{}}}",
                "l".repeat(table.methods.len())
            )?;
            writeln!(out, "$n$ & spec & {} \\\\", table.methods.join(" & "))?;
            writeln!(out, "\\hline")?;
            for row in &table.rows {
                let cells: Vec<String> = row
                    .values
                    .iter()
                    .map(|v| cell(v, |p| format!("${}$", p.to_latex())))
                    .collect();
                writeln!(
                    out,
                    "{} & $P({})$ & {} \\\\",
                    row.n,
                    row.spec,
                    cells.join(" & ")
                )?;
            }
            writeln!(out, "\\end{{tabular}}")?;
        }
        TableFormat::Text => {
            let mut lines = vec![header];
            for row in &table.rows {
                let mut line = vec![row.n.to_string(), row.spec.clone()];
                line.extend(row.values.iter().map(|v| cell(v, LaurentPoly::to_text)));
                lines.push(line);
            }
            let widths: Vec<usize> = (0..lines[0].len())
                .map(|c| lines.iter().map(|l| l[c].len()).max().unwrap_or(0))
                .collect();
            for line in lines {
                let padded: Vec<String> = line
                    .iter()
                    .zip(&widths)
                    .map(|(s, &w)| format!("{s:<w$}"))
                    .collect();
                writeln!(out, "{}", padded.join("  ").trim_end())?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(invariant: Invariant, range: &str) -> TableArgs {
        TableArgs {
            invariant,
            family: Family::P11n,
            range: range.into(),
            m: None,
            methods: vec![],
            format: TableFormat::Text,
            max_crossings: DEFAULT_MAX_CROSSINGS,
        }
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..4").unwrap(), 1..=4);
        assert_eq!(parse_range("-3..=3").unwrap(), -3..=3);
        assert!(parse_range("1-4").is_err());
        assert!(parse_range("a..4").is_err());
    }

    #[test]
    fn conway_rows() {
        let t = build_table(&args(Invariant::Conway, "1..4")).unwrap();
        let texts: Vec<String> = t
            .rows
            .iter()
            .map(|r| r.values[0].as_ref().unwrap().to_text())
            .collect();
        assert_eq!(texts, ["1 + z^2", "1 - z^2", "1 + 2z^2", "1 - 2z^2"]);
        assert!(t.rows.iter().all(|r| r.values[0] == r.values[1]));
    }

    #[test]
    fn zero_is_skipped_and_empty_ranges_fail() {
        let t = build_table(&args(Invariant::Conway, "-1..1")).unwrap();
        assert_eq!(t.rows.iter().map(|r| r.n).collect::<Vec<_>>(), [-1, 1]);
        for r in ["0..0", "3..2"] {
            assert_eq!(
                build_table(&args(Invariant::Conway, r))
                    .unwrap_err()
                    .exit_code(),
                2
            );
        }
    }

    #[test]
    fn inapplicable_cells_are_na() {
        let t = build_table(&args(Invariant::Bracket, "-2..2")).unwrap();
        // Columns are closed, tangle, statesum; no closed form covers n < 0.
        for r in &t.rows {
            assert_eq!(r.values[0].is_none(), r.n < 0, "n={}", r.n);
            assert!(r.values[1].is_some() && r.values[1] == r.values[2]);
        }
    }
}
