//! Coefficient fields for homology: the rationals or a prime field.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    /// F_p for a prime p < 2^31.
    Prime(u32),
}

impl FieldSpec {
    pub const F2: FieldSpec = FieldSpec::Prime(2);
    pub const F3: FieldSpec = FieldSpec::Prime(3);
    pub const F5: FieldSpec = FieldSpec::Prime(5);

    pub fn prime(p: u64) -> Result<FieldSpec> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    /// Parses `q`, `f2`, `f3`, `f65537`, ...
    pub fn parse(s: &str) -> Result<FieldSpec> {
        match s {
            "q" | "Q" => Ok(FieldSpec::Rationals),
            _ => {
                let p = s
                    .strip_prefix('f')
                    .or_else(|| s.strip_prefix('F'))
                    .and_then(|t| t.parse::<u64>().ok())
                    .ok_or_else(|| Error::BadFieldSpec(s.to_string()))?;
                FieldSpec::prime(p)
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            FieldSpec::Rationals => "q".to_string(),
            FieldSpec::Prime(p) => format!("f{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
