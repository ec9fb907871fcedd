use super::free::{free_resolution, FreeResolution};
use crate::error::{Error, Result};
use crate::module::{homology, FPModule, Matrix, ModuleMap};
use crate::ring::linalg::{Column, Lifter, Span};
use crate::ring::Poly;

/// `... -> F_1 -> F_0 --ε--> M -> 0` with free `F_i`; `augmentation` is
/// the matrix of `ε` in the generators of `M`.
#[derive(Debug, Clone)]
pub struct AugmentedComplex {
    pub module: FPModule,
    pub augmentation: Matrix,
    pub maps: Vec<Matrix>,
}

impl AugmentedComplex {
    pub fn from_resolution(res: &FreeResolution) -> Self {
        AugmentedComplex {
            module: res.module.clone(),
            augmentation: Matrix::identity(res.ring(), res.module.ngens()),
            maps: res.maps.clone(),
        }
    }

    fn free_map(&self, m: &Matrix) -> ModuleMap {
        let ring = self.module.ring();
        ModuleMap::new(
            FPModule::free(ring.clone(), m.ncols()),
            FPModule::free(ring.clone(), m.nrows()),
            m.clone(),
        )
        .expect("maps between free modules are well defined")
    }
}

/// Verifies exactness of an augmented complex: `ε` surjective, `ker ε =
/// im d_1`, and vanishing homology at every interior position. Returns the
/// number of interior positions checked.
pub fn check_exact(c: &AugmentedComplex) -> Result<usize> {
    let ring = c.module.ring();
    let eps = ModuleMap::new(
        FPModule::free(ring.clone(), c.augmentation.ncols()),
        c.module.clone(),
        c.augmentation.clone(),
    )?;
    if !eps.is_surjective()? {
        return Err(Error::NotExact("augmentation is not surjective".into()));
    }
    let ker = eps.kernel_preimage()?;
    let img: Vec<Column> = c.maps.first().map(|m| m.columns().to_vec()).unwrap_or_default();
    let n0 = c.augmentation.ncols();
    let img_span = Span::new(ring, n0, &img)?;
    if !ker.iter().all(|v| img_span.contains(v)) {
        return Err(Error::NotExact("position 0".into()));
    }
    let rel = c.module.relation_span()?;
    if !img.iter().all(|v| rel.contains(&eps.matrix().apply(ring, v))) {
        return Err(Error::NotExact("ε d_1 != 0".into()));
    }
    let mut checked = 0;
    for i in 1..c.maps.len() {
        let d = c.free_map(&c.maps[i - 1]);
        let e = c.free_map(&c.maps[i]);
        if !e.then(&d)?.is_zero()? || !homology(&e, &d)?.is_zero()? {
            return Err(Error::NotExact(format!("position {i}")));
        }
        checked += 1;
    }
    Ok(checked)
}

fn map_or_zero(res: &FreeResolution, i: usize) -> Matrix {
    if i <= res.len() {
        res.maps[i - 1].clone()
    } else {
        Matrix::zero(res.rank(i - 1), res.rank(i))
    }
}

/// Resolution of the middle term of `0 -> M' --f--> M --g--> M'' -> 0`
/// assembled from resolutions of the ends, with `depth` maps.
pub fn horseshoe_resolution(f: &ModuleMap, g: &ModuleMap, depth: usize) -> Result<AugmentedComplex> {
    if f.target() != g.source() {
        return Err(Error::Shape("maps do not compose".into()));
    }
    if !f.is_injective()?
        || !g.is_surjective()?
        || !f.then(g)?.is_zero()?
        || !homology(f, g)?.is_zero()?
    {
        return Err(Error::NotExact("the input sequence is not short exact".into()));
    }
    let ring = f.ring().clone();
    let m = f.target();
    let left = free_resolution(f.source(), depth)?;
    let right = free_resolution(g.target(), depth)?;
    let (n1, n, n2) = (f.source().ngens(), m.ngens(), g.target().ngens());

    // λ: F''_0 -> M lifting the generators of M''
    let mut cols = g.matrix().columns().to_vec();
    cols.extend(g.target().relations().columns().iter().cloned());
    let lifter = Lifter::new(&ring, n2, &cols)?;
    let mut lambda = Vec::with_capacity(n2);
    for j in 0..n2 {
        let c = lifter
            .lift(&crate::module::unit(&ring, n2, j))
            .ok_or_else(|| Error::NotExact("g is not surjective".into()))?;
        lambda.push(c[..n].to_vec());
    }
    let lambda = Matrix::from_columns(n, lambda)?;
    let augmentation = f.matrix().hstack(&lambda)?;

    let mut into_m = f.matrix().columns().to_vec();
    into_m.extend(m.relations().columns().iter().cloned());
    let level0 = Lifter::new(&ring, n, &into_m)?;

    let mut maps = Vec::new();
    let mut sigma_prev: Option<Matrix> = None;
    for i in 1..=depth {
        let d1 = map_or_zero(&left, i);
        let d2 = map_or_zero(&right, i);
        let (r1_prev, r1, r2) = (left.rank(i - 1), left.rank(i), right.rank(i));
        if d2.ncols() == 0 && d1.ncols() == 0 {
            break;
        }
        let mut sigma = Vec::with_capacity(r2);
        for y in d2.columns() {
            let z = match &sigma_prev {
                None => {
                    let w: Column = lambda.apply(&ring, y).iter().map(|e| ring.neg(e)).collect();
                    let c = level0
                        .lift(&w)
                        .ok_or_else(|| Error::NotExact("lift into M' failed".into()))?;
                    c[..n1].to_vec()
                }
                Some(s) => {
                    let w: Column = s.apply(&ring, y).iter().map(|e| ring.neg(e)).collect();
                    let prev = map_or_zero(&left, i - 1);
                    if prev.ncols() == 0 {
                        if !w.iter().all(Poly::is_zero) {
                            return Err(Error::NotExact(format!("position {}", i - 1)));
                        }
                        Vec::new()
                    } else {
                        Lifter::new(&ring, prev.nrows(), prev.columns())?
                            .lift(&w)
                            .ok_or_else(|| Error::NotExact(format!("position {}", i - 1)))?
                    }
                }
            };
            let mut z = z;
            z.resize(r1_prev, Poly::zero());
            sigma.push(z);
        }
        let sigma = Matrix::from_columns(r1_prev, sigma)?;
        let rows = r1_prev + right.rank(i - 1);
        let mut dcols = Vec::with_capacity(r1 + r2);
        for c in d1.columns() {
            let mut v = c.clone();
            v.resize(rows, Poly::zero());
            dcols.push(v);
        }
        for (s, c) in sigma.columns().iter().zip(d2.columns()) {
            let mut v = s.clone();
            v.extend(c.iter().cloned());
            dcols.push(v);
        }
        maps.push(Matrix::from_columns(rows, dcols)?);
        sigma_prev = Some(sigma);
    }
    Ok(AugmentedComplex {
        module: m.clone(),
        augmentation,
        maps,
    })
}
