//! Preset ring families and the standard catalog.
//!
//! Grammar for preset names:
//!
//! * `M(n,p)`: full `n × n` matrices over `F_p`, basis `e{r}{c}`
//!   (1-based);
//! * `T(n,p)`: upper triangular `n × n` matrices over `F_p`;
//! * `FpC(n,p)`: the group algebra `F_p[C_n]` of the cyclic group of
//!   order `n`, basis `g0 .. g{n-1}`;
//! * `prod(S1,S2,...)`: direct product of presets over one modulus,
//!   labels prefixed `0.`, `1.`, ...
//!
//! Every preset is kept small enough that full element enumeration
//! stays under the crate-wide cap.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{AlgebraError, FiniteAlgebra};
use crate::linalg::{checked_power, PrimeField};

/// A parsed preset description; build with [`Preset::build`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preset {
    Matrix { n: usize, p: u32 },
    UpperTriangular { n: usize, p: u32 },
    GroupAlgebra { n: usize, p: u32 },
    Product(Vec<Preset>),
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::Matrix { n, p } => write!(f, "M({n},{p})"),
            Preset::UpperTriangular { n, p } => write!(f, "T({n},{p})"),
            Preset::GroupAlgebra { n, p } => write!(f, "FpC({n},{p})"),
            Preset::Product(parts) => {
                write!(f, "prod(")?;
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{part}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl Preset {
    /// Parses a preset name like `M(2,2)` or `prod(M(2,2),T(2,2))`.
    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        let mut p = Parser {
            bytes: text.as_bytes(),
            pos: 0,
        };
        let preset = p.preset()?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(AlgebraError::PresetParse(format!(
                "trailing input at byte {}",
                p.pos
            )));
        }
        Ok(preset)
    }

    pub fn modulus(&self) -> u32 {
        match self {
            Preset::Matrix { p, .. }
            | Preset::UpperTriangular { p, .. }
            | Preset::GroupAlgebra { p, .. } => *p,
            Preset::Product(parts) => parts.first().map_or(0, Preset::modulus),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Preset::Matrix { n, .. } => n * n,
            Preset::UpperTriangular { n, .. } => n * (n + 1) / 2,
            Preset::GroupAlgebra { n, .. } => *n,
            Preset::Product(parts) => parts.iter().map(Preset::dim).sum(),
        }
    }

    /// Constructs the algebra, validating parameters and the size cap.
    pub fn build(&self) -> Result<FiniteAlgebra, AlgebraError> {
        let p = self.modulus();
        let field = PrimeField::new(p)?;
        if checked_power(p as u64, self.dim() as u32).is_none() {
            return Err(AlgebraError::ParameterOutOfRange(format!(
                "{self} has more elements than the enumeration cap"
            )));
        }
        match self {
            Preset::Matrix { n, .. } => build_matrix(field, *n, false),
            Preset::UpperTriangular { n, .. } => build_matrix(field, *n, true),
            Preset::GroupAlgebra { n, .. } => build_group_algebra(field, *n),
            Preset::Product(parts) => build_product(field, parts),
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, ch: u8) -> Result<(), AlgebraError> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&ch) {
            self.pos += 1;
            Ok(())
        } else {
            Err(AlgebraError::PresetParse(format!(
                "expected '{}' at byte {}",
                ch as char, self.pos
            )))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric())
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn number(&mut self) -> Result<u64, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(AlgebraError::PresetParse(format!(
                "expected a number at byte {start}"
            )));
        }
        core::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| AlgebraError::PresetParse(format!("bad number at byte {start}")))
    }

    fn preset(&mut self) -> Result<Preset, AlgebraError> {
        let name = self.ident();
        self.expect(b'(')?;
        let preset = match name.as_str() {
            "M" | "T" | "FpC" => {
                let n = self.number()?;
                self.expect(b',')?;
                let p = self.number()?;
                if n == 0 || n > 16 {
                    return Err(AlgebraError::ParameterOutOfRange(format!(
                        "size {n} must be between 1 and 16"
                    )));
                }
                let (n, p) = (n as usize, p.try_into().map_err(|_| {
                    AlgebraError::ParameterOutOfRange(format!("modulus {p} is too large"))
                })?);
                match name.as_str() {
                    "M" => Preset::Matrix { n, p },
                    "T" => Preset::UpperTriangular { n, p },
                    _ => Preset::GroupAlgebra { n, p },
                }
            }
            "prod" => {
                let mut parts = vec![self.preset()?];
                loop {
                    self.skip_ws();
                    if self.bytes.get(self.pos) == Some(&b',') {
                        self.pos += 1;
                        parts.push(self.preset()?);
                    } else {
                        break;
                    }
                }
                Preset::Product(parts)
            }
            other => return Err(AlgebraError::UnknownPreset(String::from(other))),
        };
        self.expect(b')')?;
        Ok(preset)
    }
}

/// Matrix units `e_{rc}`; for the triangular case only pairs with
/// `r <= c`. Labels are 1-based.
fn build_matrix(field: PrimeField, n: usize, upper: bool) -> Result<FiniteAlgebra, AlgebraError> {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for r in 0..n {
        for c in 0..n {
            if !upper || r <= c {
                pairs.push((r, c));
            }
        }
    }
    let dim = pairs.len();
    let mut index = vec![vec![usize::MAX; n]; n];
    for (idx, &(r, c)) in pairs.iter().enumerate() {
        index[r][c] = idx;
    }
    let mut table = vec![0u32; dim * dim * dim];
    for (i, &(r1, c1)) in pairs.iter().enumerate() {
        for (j, &(r2, c2)) in pairs.iter().enumerate() {
            if c1 == r2 {
                let k = index[r1][c2];
                debug_assert_ne!(k, usize::MAX, "product leaves the span");
                table[(i * dim + j) * dim + k] = 1;
            }
        }
    }
    let mut one = vec![0u32; dim];
    for r in 0..n {
        one[index[r][r]] = 1;
    }
    let labels = pairs
        .iter()
        .map(|&(r, c)| {
            if n < 10 {
                format!("e{}{}", r + 1, c + 1)
            } else {
                format!("e{}_{}", r + 1, c + 1)
            }
        })
        .collect();
    FiniteAlgebra::new(field, dim, table, one, Some(labels))
}

/// Group algebra of the cyclic group of order `n`: `g_i · g_j =
/// g_{(i+j) mod n}`.
fn build_group_algebra(field: PrimeField, n: usize) -> Result<FiniteAlgebra, AlgebraError> {
    let mut table = vec![0u32; n * n * n];
    for i in 0..n {
        for j in 0..n {
            table[(i * n + j) * n + (i + j) % n] = 1;
        }
    }
    let mut one = vec![0u32; n];
    one[0] = 1;
    let labels = (0..n).map(|i| format!("g{i}")).collect();
    FiniteAlgebra::new(field, n, table, one, Some(labels))
}

/// Direct product, componentwise operations; all parts must share the
/// modulus.
fn build_product(field: PrimeField, parts: &[Preset]) -> Result<FiniteAlgebra, AlgebraError> {
    let built: Vec<FiniteAlgebra> = parts
        .iter()
        .map(Preset::build)
        .collect::<Result<_, _>>()?;
    if built
        .iter()
        .any(|b| b.field().modulus() != field.modulus())
    {
        return Err(AlgebraError::ParameterOutOfRange(String::from(
            "product components must share one modulus",
        )));
    }
    let dim: usize = built.iter().map(FiniteAlgebra::dim).sum();
    let mut table = vec![0u32; dim * dim * dim];
    let mut one = Vec::with_capacity(dim);
    let mut labels = Vec::with_capacity(dim);
    let mut offset = 0;
    for (part_idx, comp) in built.iter().enumerate() {
        let d = comp.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    table[((offset + i) * dim + offset + j) * dim + offset + k] =
                        comp.structure_table()[(i * d + j) * d + k];
                }
            }
        }
        one.extend_from_slice(comp.one().coords());
        labels.extend(comp.labels().iter().map(|l| format!("{part_idx}.{l}")));
        offset += d;
    }
    FiniteAlgebra::new(field, dim, table, one, Some(labels))
}

/// Builds a preset ring straight from its name.
pub fn preset(name: &str) -> Result<FiniteAlgebra, AlgebraError> {
    Preset::parse(name)?.build()
}

/// The fixed ring catalog used by the exhaustive cross-checking suites.
pub fn standard_catalog() -> Vec<Preset> {
    [
        "M(2,2)",
        "M(3,2)",
        "T(2,2)",
        "T(3,2)",
        "T(2,3)",
        "FpC(2,2)",
        "FpC(3,3)",
        "prod(M(2,2),T(2,2))",
    ]
    .iter()
    .map(|s| Preset::parse(s).expect("catalog entries parse"))
    .collect()
}
