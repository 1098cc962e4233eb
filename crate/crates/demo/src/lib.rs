//! Browser bindings: analyze an instance, expand a Hilbert series, or build
//! a member of the staircase family. Every export returns a JSON string.

use cmreg::staircase::StaircaseInstance;
use cmreg::{analyze, parse_instance, AnalyzeOptions, HilbertSeries, Instance};
use num_bigint::BigInt;
use serde_json::json;
use wasm_bindgen::prelude::*;

pub fn analyze_text(text: &str, window: Option<usize>) -> Result<String, String> {
    let instance = parse_instance(text).map_err(|e| e.to_string())?;
    let report = analyze(&instance, &AnalyzeOptions { window, declared_b: None }).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

pub fn series_text(numerator: &str, dim: u32, terms: usize) -> Result<String, String> {
    let coeffs = numerator
        .split(',')
        .map(|c| c.trim().parse::<BigInt>().map_err(|_| format!("bad coefficient `{}`", c.trim())))
        .collect::<Result<Vec<_>, _>>()?;
    let series = HilbertSeries::new(coeffs, dim);
    let e: Vec<String> = series.hilbert_coefficients(dim as usize + 1).iter().map(BigInt::to_string).collect();
    let h: Vec<String> = (0..terms as i64).map(|t| series.expand(t).to_string()).collect();
    Ok(json!({
        "series": series.to_string(),
        "e": e,
        "postulation": series.postulation(),
        "h": h,
    })
    .to_string())
}

pub fn family_text(s: u32, u: u32, v: u32) -> Result<String, String> {
    let inst = StaircaseInstance::family(s, u, v).map_err(|e| e.to_string())?;
    Ok(Instance::Bivariate(inst).to_text())
}

#[wasm_bindgen(js_name = analyzeInstance)]
pub fn analyze_instance(text: &str, window: Option<usize>) -> Result<String, JsValue> {
    analyze_text(text, window).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = expandSeries)]
pub fn expand_series(numerator: &str, dim: u32, terms: usize) -> Result<String, JsValue> {
    series_text(numerator, dim, terms).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = familyInstance)]
pub fn family_instance(s: u32, u: u32, v: u32) -> Result<String, JsValue> {
    family_text(s, u, v).map_err(|e| JsValue::from_str(&e))
}
