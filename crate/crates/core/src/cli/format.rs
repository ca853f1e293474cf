use std::fmt::Write;

use num_traits::{One, Signed};

use crate::poly::{Poly, Ring};
use crate::threaded::LineageTable;

/// Renders a polynomial as `x_1^2-x_0*x_2`: terms in descending order, unit
/// coefficients omitted on non-constant terms, `*` between factors.
///
/// The output parses back to the same polynomial.
pub fn render_poly(p: &Poly, ring: &Ring) -> String {
    if p.is_zero() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (i, t) in p.terms().iter().enumerate() {
        let negative = t.coeff.is_negative();
        if negative {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let abs = t.coeff.abs();
        let factors: Vec<String> = t
            .mono
            .exponents()
            .iter()
            .zip(ring.variables())
            .filter(|(&e, _)| e > 0)
            .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if factors.is_empty() {
            write!(out, "{abs}").unwrap();
        } else {
            if !abs.is_one() {
                write!(out, "{abs}*").unwrap();
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

/// One `KEY => VALUE` line per entry in canonical key order.
pub fn format_lineage_table(table: &LineageTable) -> String {
    let mut out = String::new();
    for (key, value) in table.iter() {
        let value = value.map_or_else(|| "null".to_owned(), |p| render_poly(p, table.ring()));
        writeln!(out, "{} => {}", key.spaced(), value).unwrap();
    }
    out
}

/// Non-null values, one per line.
pub fn format_matrix(table: &LineageTable) -> String {
    table
        .matrix()
        .iter()
        .map(|p| render_poly(p, table.ring()) + "\n")
        .collect()
}
