//! Text form of ring elements.
//!
//! Modular elements print as integers, products as tuples `(a,b)`, matrices as
//! row-major bracket lists `[[a,b],[c,d]]`, dual numbers as `a+bt` and
//! elements of table rings as `e<index>`. A bare integer `k` always parses as
//! the image of `k` under `Z -> R`.

use super::{Backend, Elem, FiniteRing, RingError};

impl FiniteRing {
    pub fn display(&self, a: Elem) -> String {
        match &self.inner.backend {
            Backend::Modular { .. } => a.to_string(),
            Backend::Product { factors, radix } => {
                let parts: Vec<String> = factors
                    .iter()
                    .zip(super::decode_digits(radix, a))
                    .map(|(r, d)| r.display(d))
                    .collect();
                format!("({})", parts.join(","))
            }
            Backend::Matrix { k, .. } => {
                let digits = self.components(a);
                let rows: Vec<String> = digits
                    .chunks(*k)
                    .map(|row| {
                        let entries: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                        format!("[{}]", entries.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
            Backend::Dual { n } => {
                let (c, t) = (a % n, a / n);
                let t_part = if t == 1 { "t".to_string() } else { format!("{t}t") };
                match (c, t) {
                    (c, 0) => c.to_string(),
                    (0, _) => t_part,
                    (c, _) => format!("{c}+{t_part}"),
                }
            }
            Backend::Tables => format!("e{a}"),
        }
    }

    pub fn parse_element(&self, text: &str) -> Result<Elem, RingError> {
        let text = text.trim();
        let bad = |reason: &str| RingError::BadElement {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        if let Ok(k) = text.parse::<i64>() {
            return Ok(self.from_int(k));
        }
        match &self.inner.backend {
            Backend::Product { factors, .. } => {
                let body = strip_outer(text, '(', ')').ok_or_else(|| bad("expected a tuple"))?;
                let parts = split_top_level(body, ',');
                if parts.len() != factors.len() {
                    return Err(bad(&format!("expected {} components", factors.len())));
                }
                let digits = factors
                    .iter()
                    .zip(parts)
                    .map(|(r, p)| r.parse_element(p))
                    .collect::<Result<Vec<_>, _>>()?;
                self.from_components(&digits)
            }
            Backend::Matrix { k, p } => {
                let rows: Vec<Vec<i64>> =
                    serde_json::from_str(text).map_err(|_| bad("expected [[..],..] rows"))?;
                if rows.len() != *k || rows.iter().any(|r| r.len() != *k) {
                    return Err(bad(&format!("expected a {k}x{k} matrix")));
                }
                let p = *p as i64;
                let digits: Vec<Elem> = rows
                    .iter()
                    .flatten()
                    .map(|e| e.rem_euclid(p) as Elem)
                    .collect();
                self.from_components(&digits)
            }
            Backend::Dual { n } => parse_dual(text, *n).ok_or_else(|| bad("expected a+bt")),
            Backend::Tables => {
                let idx = text
                    .strip_prefix('e')
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| bad("expected e<index>"))?;
                if idx >= self.size() {
                    return Err(bad("index out of range"));
                }
                Ok(idx)
            }
            Backend::Modular { .. } => match strip_outer(text, '(', ')') {
                Some(inner) => self.parse_element(inner),
                None => Err(bad("expected an integer")),
            },
        }
    }
}

fn strip_outer(text: &str, open: char, close: char) -> Option<&str> {
    let t = text.trim();
    if t.starts_with(open) && t.ends_with(close) && t.len() >= 2 {
        Some(&t[1..t.len() - 1])
    } else {
        None
    }
}

pub(crate) fn split_top_level(text: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

fn parse_dual(text: &str, n: usize) -> Option<Elem> {
    let body = strip_outer(text, '(', ')').unwrap_or(text);
    let body: String = body.chars().filter(|c| !c.is_whitespace()).collect();
    if body.is_empty() {
        return None;
    }
    let n_i = n as i64;
    let (mut c, mut t) = (0i64, 0i64);
    let mut rest = body.as_str();
    while !rest.is_empty() {
        let (sign, after) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ => (1, rest),
        };
        let end = after[1.min(after.len())..]
            .find(['+', '-'])
            .map(|i| i + 1)
            .unwrap_or(after.len());
        let term = &after[..end];
        rest = &after[end..];
        if let Some(coef) = term.strip_suffix('t') {
            let coef = coef.strip_suffix('*').unwrap_or(coef);
            let k = if coef.is_empty() { 1 } else { coef.parse::<i64>().ok()? };
            t += sign * k;
        } else {
            c += sign * term.parse::<i64>().ok()?;
        }
    }
    Some(c.rem_euclid(n_i) as usize + (t.rem_euclid(n_i) as usize) * n)
}

#[cfg(test)]
mod tests {
    use crate::finring::{FiniteRing, RingDescriptor};

    #[test]
    fn display_and_parse_roundtrip_on_every_backend() {
        let rings = [
            RingDescriptor::Modular(6),
            RingDescriptor::Product(vec![RingDescriptor::Modular(2), RingDescriptor::Modular(3)]),
            RingDescriptor::matrix(2, 2),
            RingDescriptor::dual(3),
            RingDescriptor::Product(vec![
                RingDescriptor::dual(2),
                RingDescriptor::matrix(2, 2),
            ]),
        ];
        for d in &rings {
            let r = FiniteRing::build(d).unwrap();
            for a in r.elements() {
                let s = r.display(a);
                assert_eq!(r.parse_element(&s).unwrap(), a, "{d} element {s}");
            }
        }
    }

    #[test]
    fn display_formats() {
        let m = FiniteRing::build(&RingDescriptor::matrix(2, 2)).unwrap();
        let e12 = m.from_components(&[0, 1, 0, 0]).unwrap();
        assert_eq!(m.display(e12), "[[0,1],[0,0]]");
        let p = FiniteRing::build(&RingDescriptor::Product(vec![
            RingDescriptor::Modular(2),
            RingDescriptor::Modular(2),
        ]))
        .unwrap();
        assert_eq!(p.display(1), "(1,0)");
        let d = FiniteRing::build(&RingDescriptor::dual(5)).unwrap();
        assert_eq!(d.display(d.parse_element("3+2t").unwrap()), "3+2t");
        assert_eq!(d.display(d.parse_element("-t").unwrap()), "4t");
        assert_eq!(d.parse_element("(1 + t)").unwrap(), d.parse_element("1+1*t").unwrap());
    }

    #[test]
    fn integers_map_to_multiples_of_one() {
        let m = FiniteRing::build(&RingDescriptor::matrix(2, 3)).unwrap();
        assert_eq!(m.parse_element("1").unwrap(), m.one());
        assert_eq!(m.display(m.parse_element("-1").unwrap()), "[[2,0],[0,2]]");
    }

    #[test]
    fn malformed_elements() {
        let m = FiniteRing::build(&RingDescriptor::matrix(2, 2)).unwrap();
        assert!(m.parse_element("[[1,0]]").is_err());
        assert!(m.parse_element("x").is_err());
        let z = FiniteRing::modular(4);
        assert!(z.parse_element("t").is_err());
    }
}
