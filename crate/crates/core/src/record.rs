//! JSON description of a code: `{p, n, s, form, g, p_poly, abar}` with
//! polynomials in the text grammar of [`crate::text`].

use serde::{Deserialize, Serialize};

use crate::codes::{GeneratorForm, SkewCyclicCode};
use crate::error::{Error, Result};
use crate::ring::Automorphism;
use crate::text::{format_fp_polynomial, format_polynomial, parse_fp_polynomial, parse_polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Nonmonic,
    Monic,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeRecord {
    pub p: u32,
    pub n: usize,
    pub s: u32,
    pub form: FormKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_poly: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abar: Option<String>,
}

impl CodeRecord {
    pub fn from_code(code: &SkewCyclicCode) -> Self {
        let (form, g, p_poly, abar) = match code.form() {
            GeneratorForm::NonMonic { abar } => (FormKind::Nonmonic, None, None, Some(format_fp_polynomial(abar))),
            GeneratorForm::Monic { g } => (FormKind::Monic, Some(format_polynomial(g)), None, None),
            GeneratorForm::Mixed { g, pp, abar } => (
                FormKind::Mixed,
                Some(format_polynomial(g)),
                Some(format_fp_polynomial(pp)),
                Some(format_fp_polynomial(abar)),
            ),
        };
        CodeRecord { p: code.field().p(), n: code.n(), s: code.aut().s(), form, g, p_poly, abar }
    }

    pub fn to_code(&self) -> Result<SkewCyclicCode> {
        let aut = Automorphism::new(self.p, self.s)?;
        let need = |field: &Option<String>, name: &str| -> Result<String> {
            field.clone().ok_or_else(|| Error::Record(format!("form {:?} requires `{name}`", self.form)))
        };
        let form = match self.form {
            FormKind::Nonmonic => GeneratorForm::NonMonic { abar: parse_fp_polynomial(&need(&self.abar, "abar")?, &aut)? },
            FormKind::Monic => GeneratorForm::Monic { g: parse_polynomial(&need(&self.g, "g")?, &aut)? },
            FormKind::Mixed => GeneratorForm::Mixed {
                g: parse_polynomial(&need(&self.g, "g")?, &aut)?,
                pp: parse_fp_polynomial(&need(&self.p_poly, "p_poly")?, &aut)?,
                abar: parse_fp_polynomial(&need(&self.abar, "abar")?, &aut)?,
            },
        };
        SkewCyclicCode::construct(&aut, self.n, form)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Record(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}
