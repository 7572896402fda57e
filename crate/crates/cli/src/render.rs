use clap::ValueEnum;
use pretzel_core::LaurentPoly;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

pub fn render_poly(p: &LaurentPoly, format: Format) -> String {
    match format {
        Format::Text => p.to_text(),
        Format::Json => p.to_json(),
        Format::Latex => p.to_latex(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyForms {
    pub text: String,
    pub json: LaurentPoly,
}

impl From<&LaurentPoly> for PolyForms {
    fn from(p: &LaurentPoly) -> Self {
        Self {
            text: p.to_text(),
            json: p.clone(),
        }
    }
}

/// One computed invariant, as printed by `compute --format json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub spec: String,
    pub invariant: String,
    pub method: String,
    pub polynomial: PolyForms,
    pub elapsed_ms: f64,
    pub state_count: Option<u64>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use pretzel_core::Variable;

    #[test]
    fn renders_each_format() {
        let p = LaurentPoly::from_terms(Variable::A, [(7, 1), (3, -1), (-5, -1)]);
        assert_eq!(render_poly(&p, Format::Text), "A^7 - A^3 - A^-5");
        assert_eq!(render_poly(&p, Format::Latex), "A^{7} - A^{3} - A^{-5}");
        assert_eq!(
            render_poly(&p, Format::Json),
            r#"{"variable":"A","terms":[{"exp":7,"coeff":"1"},{"exp":3,"coeff":"-1"},{"exp":-5,"coeff":"-1"}]}"#
        );
        assert_eq!(
            render_poly(&LaurentPoly::zero(Variable::A), Format::Text),
            "0"
        );
        let z = LaurentPoly::from_terms(Variable::Z, [(0, 1), (2, 2)]);
        assert_eq!(render_poly(&z, Format::Latex), "1 + 2z^{2}");
    }

    #[test]
    fn record_round_trips_byte_identically() {
        let p = LaurentPoly::from_terms(Variable::Z, [(0, 1), (2, -3)]);
        let record = OutputRecord {
            spec: "1,1,6".into(),
            invariant: "conway".into(),
            method: "closed".into(),
            polynomial: (&p).into(),
            elapsed_ms: 0.012_345_678_9,
            state_count: None,
        };
        let json = serde_json::to_string(&record).unwrap();
        let back: OutputRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, record);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}
