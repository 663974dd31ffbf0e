//! Whitespace-separated hexadecimal symbol I/O.

use anyhow::{bail, Result};
use rs_plotkin::{FieldElement, GaloisField};

pub fn parse(input: &str, field: &GaloisField, expected: usize) -> Result<Vec<FieldElement>> {
    let mut out = Vec::with_capacity(expected);
    for (pos, token) in input.split_whitespace().enumerate() {
        let digits = token
            .strip_prefix("0x")
            .or_else(|| token.strip_prefix("0X"))
            .unwrap_or(token);
        let value = match u32::from_str_radix(digits, 16) {
            Ok(v) if (v as usize) < field.size() => v,
            Ok(_) => bail!(
                "symbol {token:?} at position {pos} is not an element of GF({})",
                field.size()
            ),
            Err(_) => bail!("invalid hexadecimal symbol {token:?} at position {pos}"),
        };
        out.push(FieldElement::from_raw(value as u16));
    }
    if out.len() != expected {
        bail!("expected {expected} symbols, got {}", out.len());
    }
    Ok(out)
}

pub fn format(symbols: &[FieldElement]) -> String {
    symbols
        .iter()
        .map(|s| format!("{s:x}"))
        .collect::<Vec<_>>()
        .join(" ")
}
