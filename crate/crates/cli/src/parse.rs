use homfly_core::invariants::KnotId;
use num_rational::Ratio;

pub fn parse_knot(s: &str) -> Result<KnotId, String> {
    s.parse().map_err(|e: homfly_core::Error| e.to_string())
}

/// `p/q`, an integer, or a decimal. Decimals are read exactly, so `1.3` is
/// 13/10.
pub fn parse_m(s: &str) -> Result<Ratio<i64>, String> {
    let s = s.trim();
    let bad = || format!("`{s}` is not a rational number");
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(format!("`{s}` has a zero denominator"));
        }
        return Ok(Ratio::new(p, q));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) || frac.len() > 15 {
        return Err(bad());
    }
    let digits: i64 = format!("{whole}{frac}").parse().map_err(|_| bad())?;
    let r = Ratio::new(digits, 10i64.pow(frac.len() as u32));
    Ok(if neg { -r } else { r })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub from: u32,
    pub to: u32,
    pub step: u32,
}

/// `from:to:step`, or `from:to` with step 1.
pub fn parse_range(s: &str) -> Result<NRange, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let num = |p: &str| p.trim().parse::<u32>().map_err(|_| format!("bad N range `{s}`"));
    let r = match parts.as_slice() {
        [a, b] => NRange { from: num(a)?, to: num(b)?, step: 1 },
        [a, b, c] => NRange { from: num(a)?, to: num(b)?, step: num(c)? },
        _ => return Err(format!("N range must be from:to[:step] (got `{s}`)")),
    };
    if r.step == 0 {
        return Err("N step must be at least 1".into());
    }
    if r.from > r.to {
        return Err(format!("empty N range `{s}`"));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_m("1.3").unwrap(), Ratio::new(13, 10));
        assert_eq!(parse_m("2").unwrap(), Ratio::from_integer(2));
        assert_eq!(parse_m("13/10").unwrap(), Ratio::new(13, 10));
        assert_eq!(parse_m("0.25").unwrap(), Ratio::new(1, 4));
        assert_eq!(parse_m("-1.5").unwrap(), Ratio::new(-3, 2));
        assert_eq!(parse_m(".5").unwrap(), Ratio::new(1, 2));
        for bad in ["", ".", "1e3", "1/0", "x", "1.2.3"] {
            assert!(parse_m(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("80:175:5").unwrap(), NRange { from: 80, to: 175, step: 5 });
        assert_eq!(parse_range("3:4").unwrap().step, 1);
        assert!(parse_range("5:4:1").is_err());
        assert!(parse_range("1:4:0").is_err());
        assert!(parse_range("1").is_err());
    }
}
