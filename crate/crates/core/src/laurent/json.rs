//! JSON encoding of polynomials as sorted term records.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

use super::bi::BiLaurent;
use super::ratfn::RationalFn;
use super::uni::QLaurent;
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// One term `coeff_num / coeff_den * a^e_a q^e_q`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    pub e_a: i32,
    pub e_q: i32,
    pub coeff_num: Number,
    pub coeff_den: Number,
}

fn big_number(x: &BigInt) -> Number {
    Number::from_str(&x.to_string()).expect("integer literal")
}

fn parse_big(n: &Number) -> Result<BigInt> {
    BigInt::from_str(&n.to_string())
        .map_err(|_| Error::Domain(format!("coefficient `{n}` is not an integer")))
}

/// Term records sorted by `(e_a, e_q)`.
pub fn to_records<C: Coefficient>(p: &BiLaurent<C>) -> Vec<TermRecord> {
    p.terms()
        .map(|(e_a, e_q, c)| {
            let r = c.to_big_rational().expect("finite coefficient");
            TermRecord {
                e_a,
                e_q,
                coeff_num: big_number(r.numer()),
                coeff_den: big_number(r.denom()),
            }
        })
        .collect()
}

pub fn from_records(records: &[TermRecord]) -> Result<BiLaurent<BigRational>> {
    let mut terms = Vec::with_capacity(records.len());
    for r in records {
        let den = parse_big(&r.coeff_den)?;
        if den == BigInt::from(0) {
            return Err(Error::Domain("zero coefficient denominator".into()));
        }
        terms.push((r.e_a, r.e_q, BigRational::new(parse_big(&r.coeff_num)?, den)));
    }
    Ok(BiLaurent::from_terms(terms))
}

pub fn to_json_value<C: Coefficient>(p: &BiLaurent<C>) -> Value {
    serde_json::to_value(to_records(p)).expect("records serialize")
}

pub fn to_json_string<C: Coefficient>(p: &BiLaurent<C>) -> String {
    serde_json::to_string(&to_records(p)).expect("records serialize")
}

pub fn from_json_str(s: &str) -> Result<BiLaurent<BigRational>> {
    let records: Vec<TermRecord> = serde_json::from_str(s)?;
    from_records(&records)
}

/// `{"num": [...], "den": [...]}`.
pub fn rational_to_json_value<C: Coefficient>(r: &RationalFn<C>) -> Value {
    serde_json::json!({
        "num": to_json_value(r.num()),
        "den": to_json_value(&BiLaurent::from_q(r.den().clone())),
    })
}

pub fn q_to_json_value<C: Coefficient>(p: &QLaurent<C>) -> Value {
    to_json_value(&BiLaurent::from_q(p.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_coefficients_round_trip() {
        let big = BigInt::from(10).pow(40u32) + BigInt::from(7);
        let p = BiLaurent::from_terms([
            (1, -3, BigRational::new(big.clone(), BigInt::from(3))),
            (-2, 0, BigRational::from_integer(BigInt::from(-5))),
        ]);
        let s = to_json_string(&p);
        assert!(s.contains(&big.to_string()));
        assert!(s.find("\"e_a\":-2").unwrap() < s.find("\"e_a\":1").unwrap());
        assert_eq!(from_json_str(&s).unwrap(), p);
    }
}
