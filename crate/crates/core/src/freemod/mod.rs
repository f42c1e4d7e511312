//! Finitely presented modules: presentations, maps, kernels, cokernels,
//! images, annihilators, Fitting ideals and free resolutions.
//!
//! A module is `coker(A: R^m -> R^n)`; the columns of `A` are relations
//! among `n` generators. All constructions reduce to syzygy computations
//! in the underlying ring.

mod resolution;

pub use resolution::FreeResolution;

use crate::base::{self, combinations, determinant, BaseRing};
use crate::error::{Error, Result};
use crate::exactarith::Matrix;

/// `coker(relations)`, optionally with a degree attached to each generator.
#[derive(Clone, Debug)]
pub struct FPModule<R: BaseRing> {
    ring: R,
    ngens: usize,
    relations: Matrix<R::Elem>,
    degrees: Option<Vec<i64>>,
}

/// A homomorphism given by its matrix on generators (codomain gens x domain gens).
#[derive(Clone, Debug)]
pub struct ModuleMap<R: BaseRing> {
    domain: FPModule<R>,
    codomain: FPModule<R>,
    matrix: Matrix<R::Elem>,
}

impl<R: BaseRing> FPModule<R> {
    pub fn new(ring: R, relations: Matrix<R::Elem>) -> Self {
        let relations = relations.map(|x| ring.canon(x));
        FPModule {
            ngens: relations.rows(),
            ring,
            relations,
            degrees: None,
        }
    }

    pub fn free(ring: R, n: usize) -> Self {
        let zero = ring.zero();
        FPModule::new(ring, Matrix::filled(n, 0, zero))
    }

    pub fn zero(ring: R) -> Self {
        Self::free(ring, 0)
    }

    /// `R/(gens)`.
    pub fn cyclic(ring: R, gens: &[R::Elem]) -> Self {
        let m = Matrix::from_rows(vec![gens.to_vec()], gens.len()).expect("one row");
        FPModule::new(ring, m)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn num_generators(&self) -> usize {
        self.ngens
    }

    pub fn relations(&self) -> &Matrix<R::Elem> {
        &self.relations
    }

    pub fn degrees(&self) -> Option<&[i64]> {
        self.degrees.as_deref()
    }

    pub(crate) fn with_degrees_unchecked(mut self, degrees: Vec<i64>) -> Self {
        self.degrees = Some(degrees);
        self
    }

    pub fn direct_sum(&self, other: &FPModule<R>) -> Result<FPModule<R>> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let (n1, m1) = (self.ngens, self.relations.cols());
        let (n2, m2) = (other.ngens, other.relations.cols());
        let mut a = Matrix::filled(n1 + n2, m1 + m2, self.ring.zero());
        for i in 0..n1 {
            for j in 0..m1 {
                a.set(i, j, self.relations.get(i, j).clone());
            }
        }
        for i in 0..n2 {
            for j in 0..m2 {
                a.set(n1 + i, m1 + j, other.relations.get(i, j).clone());
            }
        }
        let mut out = FPModule::new(self.ring.clone(), a);
        if let (Some(d1), Some(d2)) = (&self.degrees, &other.degrees) {
            out.degrees = Some(d1.iter().chain(d2).copied().collect());
        }
        Ok(out)
    }

    /// True when every generator is killed by the relations.
    pub fn is_zero(&self) -> bool {
        (0..self.ngens).all(|i| {
            let mut e = vec![self.ring.zero(); self.ngens];
            e[i] = self.ring.one();
            self.ring.submodule_contains(&self.relations, &e)
        })
    }

    /// `{ r : r M = 0 }`, the intersection over generators of `(im A : e_i)`.
    pub fn annihilator(&self) -> R::Ideal {
        let ring = &self.ring;
        let mut acc = ring.unit_ideal();
        for i in 0..self.ngens {
            let mut e = Matrix::filled(self.ngens, 1, ring.zero());
            e.set(i, 0, ring.one());
            let joined = e.hconcat(&self.relations).expect("same rows");
            let syz = ring.syzygies(&joined);
            let gens: Vec<R::Elem> = (0..syz.cols()).map(|j| syz.get(0, j).clone()).collect();
            acc = ring.ideal_intersection(&acc, &ring.ideal(&gens));
        }
        acc
    }

    /// Ideal of maximal (`n x n`) minors of the presentation matrix.
    pub fn fitting0(&self) -> R::Ideal {
        let ring = &self.ring;
        let (n, m) = (self.ngens, self.relations.cols());
        if n == 0 {
            return ring.unit_ideal();
        }
        if m < n {
            return ring.zero_ideal();
        }
        let rows: Vec<usize> = (0..n).collect();
        let mut minors = Vec::new();
        for cols in combinations(m, n) {
            let d = determinant(ring, &self.relations.select_rows(&rows).select_cols(&cols));
            if !ring.is_zero(&d) && !minors.contains(&d) {
                minors.push(d);
            }
        }
        ring.ideal(&minors)
    }

    pub fn identity_map(&self) -> ModuleMap<R> {
        ModuleMap {
            domain: self.clone(),
            codomain: self.clone(),
            matrix: base::identity(&self.ring, self.ngens),
        }
    }

    /// Multiplication by a ring element.
    pub fn scalar_map(&self, r: &R::Elem) -> ModuleMap<R> {
        let mut m = Matrix::filled(self.ngens, self.ngens, self.ring.zero());
        for i in 0..self.ngens {
            m.set(i, i, r.clone());
        }
        ModuleMap {
            domain: self.clone(),
            codomain: self.clone(),
            matrix: m,
        }
    }

    /// `M / a M` for an ideal `a` given by generators.
    pub fn tensor_quotient(&self, gens: &[R::Elem]) -> FPModule<R> {
        let mut out = self.relations.clone();
        for g in gens {
            let mut block = Matrix::filled(self.ngens, self.ngens, self.ring.zero());
            for i in 0..self.ngens {
                block.set(i, i, g.clone());
            }
            out = out.hconcat(&block).expect("same rows");
        }
        let mut m = FPModule::new(self.ring.clone(), out);
        m.degrees = self.degrees.clone();
        m
    }

    /// Drops relation columns that vanish.
    pub fn trimmed(&self) -> FPModule<R> {
        let keep: Vec<usize> = (0..self.relations.cols())
            .filter(|&j| (0..self.ngens).any(|i| !self.ring.is_zero(self.relations.get(i, j))))
            .collect();
        FPModule {
            ring: self.ring.clone(),
            ngens: self.ngens,
            relations: self.relations.select_cols(&keep),
            degrees: self.degrees.clone(),
        }
    }
}

/// Relations presenting `(im K + im N) / im N` on the columns of `K`.
pub(crate) fn subquotient_relations<R: BaseRing>(
    ring: &R,
    k: &Matrix<R::Elem>,
    n: &Matrix<R::Elem>,
) -> Matrix<R::Elem> {
    let s = k.cols();
    let syz = ring.syzygies(&k.hconcat(n).expect("same ambient rank"));
    let rows: Vec<usize> = (0..s).collect();
    let proj = syz.select_rows(&rows);
    let keep: Vec<usize> = (0..proj.cols())
        .filter(|&j| (0..s).any(|i| !ring.is_zero(proj.get(i, j))))
        .collect();
    proj.select_cols(&keep)
}

/// Generators of `{ u : K u in im N }` as columns.
pub(crate) fn preimage<R: BaseRing>(ring: &R, k: &Matrix<R::Elem>, n: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    subquotient_relations(ring, k, n)
}

impl<R: BaseRing> ModuleMap<R> {
    pub fn new(domain: FPModule<R>, codomain: FPModule<R>, matrix: Matrix<R::Elem>) -> Result<Self> {
        if domain.ring != codomain.ring {
            return Err(Error::RingMismatch);
        }
        if matrix.rows() != codomain.ngens || matrix.cols() != domain.ngens {
            return Err(Error::InvalidMap(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                codomain.ngens,
                domain.ngens
            )));
        }
        let ring = &domain.ring;
        let image = base::mat_mul(ring, &matrix, &domain.relations);
        for j in 0..image.cols() {
            if !ring.submodule_contains(&codomain.relations, &image.column(j)) {
                return Err(Error::InvalidMap(format!(
                    "relation {j} of the domain does not map into the codomain relations"
                )));
            }
        }
        Ok(ModuleMap {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn domain(&self) -> &FPModule<R> {
        &self.domain
    }

    pub fn codomain(&self) -> &FPModule<R> {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix<R::Elem> {
        &self.matrix
    }

    fn ring(&self) -> &R {
        &self.domain.ring
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &ModuleMap<R>) -> Result<ModuleMap<R>> {
        if first.codomain.ngens != self.domain.ngens {
            return Err(Error::InvalidMap("maps are not composable".into()));
        }
        Ok(ModuleMap {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: base::mat_mul(self.ring(), &self.matrix, &first.matrix),
        })
    }

    /// Presented by `[codomain relations | matrix]` on the codomain generators.
    pub fn cokernel(&self) -> FPModule<R> {
        let a = self
            .codomain
            .relations
            .hconcat(&self.matrix)
            .expect("codomain rows");
        let mut m = FPModule::new(self.ring().clone(), a).trimmed();
        m.degrees = self.codomain.degrees.clone();
        m
    }

    /// Submodule of the codomain spanned by the images of the domain generators.
    pub fn image(&self) -> FPModule<R> {
        let rel = subquotient_relations(self.ring(), &self.matrix, &self.codomain.relations);
        FPModule::new(self.ring().clone(), rel)
    }

    /// Presented on generators of `{ x : f x in im B }` modulo the domain relations.
    pub fn kernel(&self) -> FPModule<R> {
        let ring = self.ring();
        let k = preimage(ring, &self.matrix, &self.codomain.relations);
        let ambient = self.domain.ngens;
        if k.cols() == 0 {
            return FPModule::zero(ring.clone());
        }
        // Columns of k live in R^{domain gens}; drop those already in im A.
        let cols: Vec<Vec<R::Elem>> = k
            .columns()
            .into_iter()
            .filter(|c| !ring.submodule_contains(&self.domain.relations, c))
            .collect();
        if cols.is_empty() {
            return FPModule::zero(ring.clone());
        }
        let k = Matrix::from_columns(ambient, &cols, &ring.zero());
        let rel = subquotient_relations(ring, &k, &self.domain.relations);
        FPModule::new(ring.clone(), rel)
    }

    /// Generators of the kernel as elements of the domain (columns over the
    /// domain generators).
    pub fn kernel_generators(&self) -> Matrix<R::Elem> {
        preimage(self.ring(), &self.matrix, &self.codomain.relations)
    }
}
