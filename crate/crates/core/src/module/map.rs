use std::sync::Arc;

use super::fpmodule::{subquotient, unit, FPModule, SubmoduleOfFree};
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::ring::linalg::{self, Column, Span};
use crate::ring::{Poly, QuotRing};

/// A homomorphism between finitely presented modules. Column `j` of the
/// matrix is the image of source generator `j`.
///
/// Construction certifies well-definedness: every source relation is sent
/// into the span of the target relations.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleMap {
    source: FPModule,
    target: FPModule,
    matrix: Matrix,
}

impl ModuleMap {
    pub fn new(source: FPModule, target: FPModule, matrix: Matrix) -> Result<Self> {
        source.ring().check_same(target.ring())?;
        if matrix.nrows() != target.ngens() || matrix.ncols() != source.ngens() {
            return Err(Error::Shape(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.nrows(),
                matrix.ncols(),
                target.ngens(),
                source.ngens()
            )));
        }
        let ring = source.ring().clone();
        let matrix = matrix.normalize(&ring);
        if source.relations().ncols() > 0 {
            let span = target.relation_span()?;
            for (j, rel) in source.relations().columns().iter().enumerate() {
                if !span.contains(&matrix.apply(&ring, rel)) {
                    return Err(Error::MapNotWellDefined { column: j });
                }
            }
        }
        Ok(ModuleMap {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(module: &FPModule) -> Self {
        ModuleMap {
            source: module.clone(),
            target: module.clone(),
            matrix: Matrix::identity(module.ring(), module.ngens()),
        }
    }

    /// Multiplication by a ring element.
    pub fn multiplication(module: &FPModule, a: &Poly) -> Self {
        ModuleMap {
            source: module.clone(),
            target: module.clone(),
            matrix: Matrix::scalar(module.ring(), module.ngens(), a),
        }
    }

    pub fn source(&self) -> &FPModule {
        &self.source
    }

    pub fn target(&self) -> &FPModule {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn ring(&self) -> &Arc<QuotRing> {
        self.source.ring()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.target != other.source {
            return Err(Error::Shape("composition of non-composable maps".into()));
        }
        let m = other.matrix.mul(self.ring(), &self.matrix)?;
        ModuleMap::new(self.source.clone(), other.target.clone(), m)
    }

    /// Equality as homomorphisms: every column of the difference is zero in
    /// the target.
    pub fn equals(&self, other: &ModuleMap) -> Result<bool> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Shape("comparing maps with different endpoints".into()));
        }
        let diff = self.matrix.sub(self.ring(), &other.matrix)?;
        let span = self.target.relation_span()?;
        Ok(diff.columns().iter().all(|c| span.contains(c)))
    }

    pub fn is_zero(&self) -> Result<bool> {
        let span = self.target.relation_span()?;
        Ok(self.matrix.columns().iter().all(|c| span.contains(c)))
    }

    /// Generators of the preimage of the target relations, i.e. the
    /// coordinate vectors in `R^{source.ngens}` mapping to zero.
    pub fn kernel_preimage(&self) -> Result<Vec<Column>> {
        let n = self.source.ngens();
        let mut cols: Vec<Column> = self.matrix.columns().to_vec();
        cols.extend(self.target.relations().columns().iter().cloned());
        let syz = linalg::syzygies(self.ring(), self.target.ngens(), &cols)?;
        let pre: Vec<Column> = syz
            .into_iter()
            .map(|c| c[..n].to_vec())
            .filter(|c| !linalg::is_zero_column(c))
            .collect();
        linalg::canonical_generators(self.ring(), n, &pre)
    }

    pub fn is_injective(&self) -> Result<bool> {
        let pre = self.kernel_preimage()?;
        let span = self.source.relation_span()?;
        Ok(pre.iter().all(|v| span.contains(v)))
    }

    pub fn is_surjective(&self) -> Result<bool> {
        let n = self.target.ngens();
        let mut cols = self.matrix.columns().to_vec();
        cols.extend(self.target.relations().columns().iter().cloned());
        let span = Span::new(self.ring(), n, &cols)?;
        Ok((0..n).all(|i| span.contains(&unit(self.ring(), n, i))))
    }

    pub fn is_isomorphism(&self) -> Result<bool> {
        Ok(self.is_injective()? && self.is_surjective()?)
    }

    /// `ker(self)` presented on the preimage generators.
    pub fn kernel(&self) -> Result<FPModule> {
        let pre = self.kernel_preimage()?;
        subquotient(
            self.ring(),
            self.source.ngens(),
            &pre,
            self.source.relations().columns(),
        )
    }

    pub fn cokernel(&self) -> Result<FPModule> {
        let rel = self.matrix.hstack(self.target.relations())?;
        FPModule::new(self.ring().clone(), self.target.ngens(), rel)
    }

    /// The image as a submodule of the target's free cover, together with
    /// the target relations.
    pub fn image_with_relations(&self) -> Vec<Column> {
        let mut cols = self.matrix.columns().to_vec();
        cols.extend(self.target.relations().columns().iter().cloned());
        cols
    }
}

/// `ker(g) / im(f)` for `X --f--> Y --g--> Z`.
pub fn homology(f: &ModuleMap, g: &ModuleMap) -> Result<FPModule> {
    if f.target != g.source {
        return Err(Error::Shape("homology of non-composable maps".into()));
    }
    let y = &f.target;
    let z = g.kernel_preimage()?;
    let mut sub = f.matrix.columns().to_vec();
    sub.extend(y.relations().columns().iter().cloned());
    subquotient(y.ring(), y.ngens(), &z, &sub)
}

/// Kernel of a map between free modules, as a submodule of the source.
pub fn kernel_of_map(f: &ModuleMap) -> Result<SubmoduleOfFree> {
    if !f.source.has_free_presentation() || !f.target.has_free_presentation() {
        return Err(Error::Shape("kernel_of_map expects free source and target".into()));
    }
    SubmoduleOfFree::new(f.ring().clone(), f.source.ngens(), f.kernel_preimage()?)
}
