//! Text and JSON renderings of core results. JSON objects use sorted keys.

use axial_core::extension::{Cocycle, SplitVerdict};
use axial_core::spectral::{AxisReport, EigenData, Violation};
use axial_core::{Algebra, FusionLaw, Scalar, Subspace};
use serde_json::{json, Value};

pub fn scalars(xs: &[Scalar]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn set_text(xs: &[Scalar]) -> String {
    let v: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

pub fn law_json(law: &FusionLaw) -> Value {
    let (values, cells) = law.canonical_cells();
    json!({
        "values": scalars(&values),
        "cells": cells
            .iter()
            .map(|(a, b, c)| json!({ "a": a.to_string(), "b": b.to_string(), "product": scalars(c) }))
            .collect::<Vec<_>>(),
    })
}

pub fn law_text(law: &FusionLaw) -> String {
    let (values, cells) = law.canonical_cells();
    let cs: Vec<String> = cells.iter().map(|(a, b, c)| format!("{a}*{b}={}", set_text(c))).collect();
    format!("{} with {}", set_text(&values), if cs.is_empty() { "no products".into() } else { cs.join(", ") })
}

pub fn subspace_json(s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.basis().iter().map(|v| scalars(v)).collect::<Vec<_>>(),
    })
}

pub fn subspace_text(alg: &Algebra, s: &Subspace) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let b: Vec<String> = s.basis().iter().map(|v| alg.format_element(v)).collect();
    format!("span{{{}}}", b.join(", "))
}

/// Nonzero upper-triangle entries of each coordinate form.
pub fn cocycle_json(alg: &Algebra, c: &Cocycle) -> Value {
    let labels = alg.labels();
    let n = alg.dim();
    let coords: Vec<Value> = c
        .forms()
        .iter()
        .map(|f| {
            let mut entries = Vec::new();
            for i in 0..n {
                for j in i..n {
                    let x = &f.gram()[(i, j)];
                    if !x.is_zero() {
                        entries.push(json!({ "x": labels[i], "y": labels[j], "value": x.to_string() }));
                    }
                }
            }
            Value::Array(entries)
        })
        .collect();
    Value::Array(coords)
}

pub fn cocycle_text(alg: &Algebra, c: &Cocycle) -> String {
    let labels = alg.labels();
    let n = alg.dim();
    let mut parts = Vec::new();
    for (k, f) in c.forms().iter().enumerate() {
        for i in 0..n {
            for j in i..n {
                let x = &f.gram()[(i, j)];
                if !x.is_zero() {
                    let coord = if c.coords() > 1 { format!("[{}]", k + 1) } else { String::new() };
                    parts.push(format!("theta{coord}({},{})={x}", labels[i], labels[j]));
                }
            }
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(", ")
    }
}

pub fn violation_json(alg: &Algebra, v: &Violation) -> Value {
    match v {
        Violation::NotIdempotent { square } => {
            json!({ "kind": "not_idempotent", "square": alg.format_element(square) })
        }
        Violation::SpectrumUndetermined { residual } => {
            json!({ "kind": "spectrum_undetermined", "residual": format!("{residual:?}") })
        }
        Violation::NotSemisimple { eigen_dim_sum, dim } => {
            json!({ "kind": "not_semisimple", "eigen_dim_sum": eigen_dim_sum, "dim": dim })
        }
        Violation::EigenvalueOutsideLaw { value } => {
            json!({ "kind": "eigenvalue_outside_law", "value": value.to_string() })
        }
        Violation::FusionViolation { lambda, mu, nu, x, y } => json!({
            "kind": "fusion",
            "lambda": lambda.to_string(),
            "mu": mu.to_string(),
            "nu": nu.to_string(),
            "x": alg.format_element(x),
            "y": alg.format_element(y),
        }),
        Violation::GenerationFailure { closure_dim, dim } => {
            json!({ "kind": "generation", "closure_dim": closure_dim, "dim": dim })
        }
    }
}

pub fn violation_text(alg: &Algebra, v: &Violation) -> String {
    match v {
        Violation::NotIdempotent { square } => format!("not idempotent, square = {}", alg.format_element(square)),
        Violation::SpectrumUndetermined { residual } => format!("spectrum not in the field, residual {residual:?}"),
        Violation::NotSemisimple { eigen_dim_sum, dim } => {
            format!("not semisimple, eigenspaces span {eigen_dim_sum} of {dim}")
        }
        Violation::EigenvalueOutsideLaw { value } => format!("eigenvalue {value} outside the law"),
        Violation::FusionViolation { lambda, mu, nu, x, y } => {
            format!("{lambda}*{mu} has a {nu} component: x = {}, y = {}", alg.format_element(x), alg.format_element(y))
        }
        Violation::GenerationFailure { closure_dim, dim } => {
            format!("axes generate a subalgebra of dimension {closure_dim} < {dim}")
        }
    }
}

pub fn eigen_json(alg: &Algebra, e: &EigenData) -> Value {
    json!({
        "element": alg.format_element(&e.element),
        "spectrum": e.spaces.iter().map(|(l, s)| json!({ "value": l.to_string(), "dim": s.dim() })).collect::<Vec<_>>(),
        "semisimple": e.semisimple,
        "undetermined": e.undetermined,
        "char_poly": format!("{:?}", e.char_poly),
    })
}

pub fn spectrum_text(e: &EigenData) -> String {
    let s: Vec<String> = e.spaces.iter().map(|(l, sp)| format!("{l} (dim {})", sp.dim())).collect();
    s.join(", ")
}

pub fn axis_json(alg: &Algebra, r: &AxisReport) -> Value {
    json!({
        "element": alg.format_element(&r.eigen.element),
        "idempotent": r.idempotent,
        "primitive": r.primitive,
        "spectrum": r.eigen.spaces.iter().map(|(l, s)| json!({ "value": l.to_string(), "dim": s.dim() })).collect::<Vec<_>>(),
        "semisimple": r.eigen.semisimple,
        "observed": r.observed.iter().map(|(a, b, c)| json!({ "a": a.to_string(), "b": b.to_string(), "product": scalars(c) })).collect::<Vec<_>>(),
        "axis": r.is_axis(),
        "violations": r.violations.iter().map(|v| violation_json(alg, v)).collect::<Vec<_>>(),
    })
}

pub fn split_json(v: &SplitVerdict) -> Value {
    match v {
        SplitVerdict::Split { coeffs } => json!({ "verdict": "split", "coboundary_combination": scalars(coeffs) }),
        SplitVerdict::NonSplit => json!({ "verdict": "non_split" }),
        SplitVerdict::Indeterminate => json!({ "verdict": "indeterminate" }),
    }
}

pub fn split_text(v: &SplitVerdict) -> String {
    match v {
        SplitVerdict::Split { coeffs } => format!("split (coboundary combination {})", set_text(coeffs)),
        SplitVerdict::NonSplit => "non-split".into(),
        SplitVerdict::Indeterminate => "indeterminate".into(),
    }
}
