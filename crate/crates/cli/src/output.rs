//! Rendering of fractions and exact coefficient values.

use ffdesign::cyclotomic::Cyc;
use ffdesign::design::{DesignSpace, Exponent, Fraction};
use ffdesign::Int;

/// Exponent in the command-line literal form: digit string when every level
/// is at most 10, comma-separated otherwise.
pub fn exponent_literal(alpha: &Exponent, space: &DesignSpace) -> String {
    if space.levels().iter().all(|&n| n <= 10) {
        alpha.entries().iter().map(|e| e.to_string()).collect()
    } else {
        alpha
            .entries()
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Canonical numerator vector over the basis 1, w, ..., w^{s-1}: the
/// representative reduced mod the s-th cyclotomic polynomial, zero-padded.
pub fn numerator_vector(value: &Cyc<Int>, s: usize) -> Vec<String> {
    let reduced = value.reduced();
    (0..s).map(|k| reduced.coeff(k).to_string()).collect()
}

fn vector_display(v: &[String]) -> String {
    format!("[{}]", v.join(" "))
}

/// Numerator for human output: a bare integer when real, a vector otherwise.
pub fn numerator_display(value: &Cyc<Int>, s: usize) -> String {
    match value.to_int() {
        Some(n) => n.to_string(),
        None => vector_display(&numerator_vector(value, s)),
    }
}

/// The plain-text design-file form of a fraction, rows ordered by rank.
pub fn design_file(fraction: &Fraction) -> String {
    let space = fraction.space();
    let mut out = String::new();
    out.push_str("levels:");
    for n in space.levels() {
        out.push_str(&format!(" {n}"));
    }
    out.push('\n');
    for (point, count) in fraction.support() {
        let row: Vec<String> = point.entries().iter().map(|e| e.to_string()).collect();
        out.push_str(&row.join(" "));
        if count > 1 {
            out.push_str(&format!(" x{count}"));
        }
        out.push('\n');
    }
    out
}
