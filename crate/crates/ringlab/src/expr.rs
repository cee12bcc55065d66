//! Element literals for the command line.
//!
//! Three forms are accepted:
//!
//! * coordinate vectors: `[0,1,0,0]` with one residue per basis
//!   element, least index first;
//! * basis-label sums: `e12+e23`, `1+g1`, `2*g0+g1`, where a bare
//!   integer means that multiple of the ring identity;
//! * `J`: the superdiagonal sum `e12 + e23 + ...` for rings labeled
//!   with matrix units.
//!
//! Integers reduce modulo p.

use ringlab_core::algebra::{Element, FiniteAlgebra};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError(pub String);

impl std::fmt::Display for ExprError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "bad element expression: {}", self.0)
    }
}

impl std::error::Error for ExprError {}

fn err(msg: impl Into<String>) -> ExprError {
    ExprError(msg.into())
}

pub fn parse_element(alg: &FiniteAlgebra, text: &str) -> Result<Element, ExprError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(err("empty expression"));
    }
    if trimmed.starts_with('[') {
        return parse_vector(alg, trimmed);
    }
    if trimmed == "J" {
        return parse_jordan(alg);
    }
    parse_sum(alg, trimmed)
}

fn parse_vector(alg: &FiniteAlgebra, text: &str) -> Result<Element, ExprError> {
    let inner = text
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| err("coordinate vector must be of the form [c0,c1,...]"))?;
    let p = alg.field().modulus();
    let mut coords = Vec::new();
    let body = inner.trim();
    if !body.is_empty() {
        for piece in body.split(',') {
            let value: u32 = piece
                .trim()
                .parse()
                .map_err(|_| err(format!("`{}` is not a coordinate", piece.trim())))?;
            coords.push(value % p);
        }
    }
    if coords.len() != alg.dim() {
        return Err(err(format!(
            "expected {} coordinates, got {}",
            alg.dim(),
            coords.len()
        )));
    }
    Ok(Element::from_coords(coords))
}

/// `J` adds up `e12, e23, ...` as far as those labels exist.
fn parse_jordan(alg: &FiniteAlgebra) -> Result<Element, ExprError> {
    let mut coords = vec![0u32; alg.dim()];
    let mut r = 1usize;
    loop {
        let plain = format!("e{}{}", r, r + 1);
        let wide = format!("e{}_{}", r, r + 1);
        let Some(i) = alg
            .basis_index_of(&plain)
            .or_else(|| alg.basis_index_of(&wide))
        else {
            break;
        };
        coords[i] = 1;
        r += 1;
    }
    if r == 1 {
        return Err(err(
            "`J` needs a ring labeled with matrix units e12, e23, ...",
        ));
    }
    Ok(Element::from_coords(coords))
}

fn parse_sum(alg: &FiniteAlgebra, text: &str) -> Result<Element, ExprError> {
    let f = alg.field();
    let p = f.modulus();
    let mut coords = vec![0u32; alg.dim()];
    for raw in text.split('+') {
        let term = raw.trim();
        if term.is_empty() {
            return Err(err("empty term in sum"));
        }
        let (coeff, label) = match term.split_once('*') {
            Some((c, l)) => {
                let value: u32 = c
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("`{}` is not a coefficient", c.trim())))?;
                (value % p, Some(l.trim()))
            }
            None => match term.parse::<u32>() {
                Ok(value) => (value % p, None),
                Err(_) => (1, Some(term)),
            },
        };
        match label {
            // a bare integer contributes that multiple of the identity
            None => {
                for (acc, &c) in coords.iter_mut().zip(alg.one().coords()) {
                    *acc = f.add(*acc, f.mul(coeff, c));
                }
            }
            Some(name) => {
                let i = alg.basis_index_of(name).ok_or_else(|| {
                    err(format!(
                        "unknown basis label `{name}`; known labels: {}",
                        alg.labels().join(", ")
                    ))
                })?;
                coords[i] = f.add(coords[i], coeff);
            }
        }
    }
    Ok(Element::from_coords(coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ringlab_core::algebra::preset;

    #[test]
    fn label_sums() {
        let r = preset("M(2,2)").unwrap();
        let e = parse_element(&r, "e12+e21").unwrap();
        assert_eq!(e.coords(), &[0, 1, 1, 0]);
        assert_eq!(parse_element(&r, " e11 + e22 ").unwrap(), r.one());
    }

    #[test]
    fn scalars_and_coefficients() {
        let r = preset("FpC(3,3)").unwrap();
        assert_eq!(parse_element(&r, "1").unwrap(), r.one());
        assert_eq!(parse_element(&r, "0").unwrap(), r.zero());
        let e = parse_element(&r, "2*g0+g1").unwrap();
        assert_eq!(e.coords(), &[2, 1, 0]);
        // reduction mod p
        assert_eq!(parse_element(&r, "4*g1").unwrap().coords(), &[0, 1, 0]);
        assert_eq!(parse_element(&r, "3").unwrap(), r.zero());
    }

    #[test]
    fn coordinate_vectors() {
        let r = preset("M(2,2)").unwrap();
        let e = parse_element(&r, "[0, 1, 0, 0]").unwrap();
        assert_eq!(e, r.basis_element(1));
        assert!(parse_element(&r, "[1,2]").is_err());
        assert!(parse_element(&r, "[1,2,x,0]").is_err());
    }

    #[test]
    fn jordan_literal() {
        let r = preset("M(3,2)").unwrap();
        let j = parse_element(&r, "J").unwrap();
        let by_hand = parse_element(&r, "e12+e23").unwrap();
        assert_eq!(j, by_hand);
        let g = preset("FpC(2,2)").unwrap();
        assert!(parse_element(&g, "J").is_err());
    }

    #[test]
    fn bad_labels_are_reported() {
        let r = preset("M(2,2)").unwrap();
        let e = parse_element(&r, "e13").unwrap_err();
        assert!(e.0.contains("e13"));
    }
}
