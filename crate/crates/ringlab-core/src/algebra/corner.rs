//! Corner rings `eRe` cut out by an idempotent `e`.

use alloc::vec::Vec;

use super::{AlgebraError, Element, FiniteAlgebra};
use crate::linalg::Subspace;

/// The ring `eRe` with identity `e`, plus the data needed to move
/// between corner coordinates and ambient coordinates.
#[derive(Debug, Clone)]
pub struct CornerData {
    idempotent: Element,
    algebra: FiniteAlgebra,
    /// `eRe` as a subspace of the ambient ring; its canonical basis is
    /// the corner's basis.
    space: Subspace,
}

impl FiniteAlgebra {
    /// Builds the corner ring `eRe`. Fails unless `e` is idempotent.
    /// `e = 0` gives the zero ring.
    pub fn corner_algebra(&self, e: &Element) -> Result<CornerData, AlgebraError> {
        if !self.is_idempotent(e) {
            return Err(AlgebraError::NotIdempotent);
        }
        let f = self.field();
        let rows: Vec<Vec<u32>> = (0..self.dim())
            .map(|i| {
                self.mul(&self.mul(e, &self.basis_element(i)), e)
                    .coords()
                    .to_vec()
            })
            .collect();
        let space = Subspace::from_rows(f, self.dim(), &rows);
        let d = space.dim();
        let mut table = Vec::with_capacity(d * d * d);
        for s in 0..d {
            let bs = Element::from_coords(space.basis().row(s).to_vec());
            for t in 0..d {
                let bt = Element::from_coords(space.basis().row(t).to_vec());
                let product = self.mul(&bs, &bt);
                let coords = space
                    .coords_of(f, product.coords())
                    .expect("corner is closed under multiplication");
                table.extend_from_slice(&coords);
            }
        }
        // flatten from (s, t) blocks of length d into c[s][t][k] layout:
        // the blocks were pushed in exactly that order already
        let one = space
            .coords_of(f, e.coords())
            .expect("e = e·e·e lies in the corner");
        let algebra = FiniteAlgebra::new(f.clone(), d, table, one, None)?;
        Ok(CornerData {
            idempotent: e.clone(),
            algebra,
            space,
        })
    }
}

impl CornerData {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// The corner as an algebra in its own right; its identity is the
    /// idempotent.
    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn idempotent(&self) -> &Element {
        &self.idempotent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Corner coordinates to ambient coordinates.
    pub fn embed(&self, c: &Element) -> Element {
        let f = self.algebra.field();
        Element::from_coords(self.space.linear_combination(f, c.coords()))
    }

    /// `r` compressed to the corner: `e r e` in corner coordinates.
    /// `ambient` must be the ring this corner was cut from.
    pub fn project(&self, ambient: &FiniteAlgebra, r: &Element) -> Element {
        let ere = ambient.mul(&ambient.mul(&self.idempotent, r), &self.idempotent);
        let coords = self
            .space
            .coords_of(ambient.field(), ere.coords())
            .expect("e·r·e lies in the corner");
        Element::from_coords(coords)
    }

    /// Whether an ambient element lies inside `eRe`.
    pub fn contains(&self, ambient: &FiniteAlgebra, r: &Element) -> bool {
        self.space.contains(ambient.field(), r.coords())
    }
}
