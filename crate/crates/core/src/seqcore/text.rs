//! Plain-text sequence files.
//!
//! ```text
//! COMPLEX <n>
//! <re> <im>            (n lines, 17 significant digits)
//! ```
//! or
//! ```text
//! UNIMODULAR-PHASE <L> <n>
//! <p_j>                (n integer lines, entry_j = exp(πi·p_j/L))
//! ```

use num_complex::Complex64;

use super::sequence::Sequence;
use crate::error::{Error, Result};
use crate::numeric::fmt17;

/// Phase-exact sequences are written as `UNIMODULAR-PHASE`, everything else as `COMPLEX`.
pub fn write_text(s: &Sequence) -> String {
    let mut out = String::new();
    match s.phase_exact() {
        Some(pe) => {
            out.push_str(&format!("UNIMODULAR-PHASE {} {}\n", pe.modulus(), s.len()));
            for p in pe.phases() {
                out.push_str(&format!("{p}\n"));
            }
        }
        None => {
            out.push_str(&format!("COMPLEX {}\n", s.len()));
            for z in s.entries() {
                out.push_str(&format!("{} {}\n", fmt17(z.re), fmt17(z.im)));
            }
        }
    }
    out
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what}: {tok:?}")))
}

pub fn parse_text(text: &str) -> Result<Sequence> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let mut toks = header.split_whitespace();
    let kind = toks.next().unwrap_or_default();
    let seq = match kind {
        "COMPLEX" => {
            let n: usize = field(toks.next(), hl, "length")?;
            if toks.next().is_some() {
                return Err(parse_err(hl, "trailing tokens in header"));
            }
            let mut entries = Vec::with_capacity(n);
            for _ in 0..n {
                let (ln, l) = lines
                    .next()
                    .ok_or_else(|| parse_err(hl, format!("expected {n} entries")))?;
                let mut t = l.split_whitespace();
                let re: f64 = field(t.next(), ln, "real part")?;
                let im: f64 = field(t.next(), ln, "imaginary part")?;
                if t.next().is_some() {
                    return Err(parse_err(ln, "expected exactly two numbers"));
                }
                entries.push(Complex64::new(re, im));
            }
            Sequence::new(entries)?
        }
        "UNIMODULAR-PHASE" => {
            let modulus: u64 = field(toks.next(), hl, "modulus")?;
            let n: usize = field(toks.next(), hl, "length")?;
            if toks.next().is_some() {
                return Err(parse_err(hl, "trailing tokens in header"));
            }
            let mut phases = Vec::with_capacity(n);
            for _ in 0..n {
                let (ln, l) = lines
                    .next()
                    .ok_or_else(|| parse_err(hl, format!("expected {n} phases")))?;
                phases.push(field::<i64>(Some(l), ln, "phase")?);
            }
            Sequence::from_phases(modulus, &phases)?
        }
        other => return Err(parse_err(hl, format!("unknown header {other:?}"))),
    };
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "unexpected trailing content"));
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phase_format_layout() {
        let s = Sequence::from_phases(4, &[0, 1, 4, 9]).unwrap();
        assert_eq!(write_text(&s), "UNIMODULAR-PHASE 4 4\n0\n1\n4\n1\n");
    }

    #[test]
    fn complex_format_round_trip() {
        let s = Sequence::new(vec![Complex64::new(0.1, -2.0), Complex64::new(1.0 / 3.0, 0.0)])
            .unwrap();
        let txt = write_text(&s);
        assert!(txt.starts_with("COMPLEX 2\n1.0000000000000001e-1 -2.0000000000000000e0\n"));
        assert_eq!(parse_text(&txt).unwrap(), s);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_text("").is_err());
        assert!(parse_text("COMPLEX 2\n1 0\n").is_err());
        assert!(parse_text("COMPLEX 1\n1 0\n2 0\n").is_err());
        assert!(parse_text("UNIMODULAR-PHASE 0 1\n0\n").is_err());
        assert!(parse_text("UNIMODULAR-PHASE 2 1\nx\n").is_err());
        assert!(parse_text("BINARY 1\n1\n").is_err());
        assert!(matches!(
            parse_text("COMPLEX 1\n0 0\n"),
            Err(Error::DegenerateSequence { .. })
        ));
    }
}
