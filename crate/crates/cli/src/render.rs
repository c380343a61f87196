use std::fmt::Write as _;
use std::str::FromStr;

use homfly_core::invariants::Reduction;
use homfly_core::laurent::json::{q_to_json_value, to_json_value};
use homfly_core::laurent::{BiLaurent, QLaurent, RationalFn};
use homfly_core::numeric::MpReal;
use homfly_core::scalar::Real;
use homfly_core::Rational;
use num_rational::Ratio;
use serde_json::{json, Number, Value};

/// Decimal digits printed for a value computed at `bits` of precision.
pub fn digits_for(bits: u32) -> usize {
    let d = (bits as f64 * std::f64::consts::LOG10_2).floor() as i64 - 8;
    d.clamp(0, 30) as usize
}

pub fn fixed(x: &MpReal, bits: u32) -> String {
    x.to_fixed(digits_for(bits))
}

pub fn number(s: &str) -> Value {
    Value::Number(Number::from_str(s).expect("decimal literal"))
}

pub fn ratio_parts(m: &Ratio<i64>) -> (i64, i64) {
    (*m.numer(), *m.denom())
}

fn monomial(out: &mut String, var: &str, e: i32) {
    match e {
        0 => {}
        1 => {
            let _ = write!(out, "*{var}");
        }
        _ => {
            let _ = write!(out, "*{var}^{e}");
        }
    }
}

/// `3*a^2*q^-1 - a^-2 + 1/2*q^4`; terms in increasing (a, q) order.
pub fn poly_text(p: &BiLaurent<Rational>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (ea, eq, c)) in p.terms().enumerate() {
        let neg = *c < Rational::from_integer(0.into());
        let mag = if neg { -c.clone() } else { c.clone() };
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut body = String::new();
        monomial(&mut body, "a", ea);
        monomial(&mut body, "q", eq);
        let one = mag == Rational::from_integer(1.into());
        if body.is_empty() {
            let _ = write!(out, "{mag}");
        } else if one {
            out.push_str(&body[1..]);
        } else {
            let _ = write!(out, "{mag}{body}");
        }
    }
    out
}

pub fn q_text(p: &QLaurent<Rational>) -> String {
    poly_text(&BiLaurent::from_q(p.clone()))
}

pub fn ratfn_text(r: &RationalFn<Rational>) -> String {
    if r.den().is_one() {
        return poly_text(r.num());
    }
    format!("({}) / ({})", poly_text(r.num()), q_text(r.den()))
}

/// A plain array for knots, `{polynomial, clearing_factor}` when the value
/// keeps a denominator.
pub fn reduction_json(r: &Reduction<Rational>) -> Value {
    if r.is_polynomial() {
        to_json_value(&r.polynomial)
    } else {
        json!({
            "polynomial": to_json_value(&r.polynomial),
            "clearing_factor": q_to_json_value(&r.clearing_factor),
        })
    }
}

pub fn reduction_text(r: &Reduction<Rational>) -> String {
    if r.is_polynomial() {
        poly_text(&r.polynomial)
    } else {
        format!("({}) / ({})", poly_text(&r.polynomial), q_text(&r.clearing_factor))
    }
}

/// Comma-separated rows with a header, LF endings.
pub struct Csv {
    buf: String,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        Csv { buf: format!("{}\n", header.join(",")) }
    }

    pub fn row<I: IntoIterator<Item = String>>(&mut self, fields: I) {
        let fields: Vec<String> = fields.into_iter().collect();
        self.buf.push_str(&fields.join(","));
        self.buf.push('\n');
    }

    pub fn finish(self) -> String {
        self.buf
    }
}
