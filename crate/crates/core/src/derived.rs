//! Bounded complexes of finitely generated free modules (homological
//! grading, differentials lower degree) and thick subcategories of perfect
//! complexes, classified by the union of homology supports.

use crate::base::{self, combinations, BaseRing};
use crate::error::{Error, Result};
use crate::exactarith::Matrix;
use crate::freemod::{subquotient_relations, FPModule};
use crate::polyring::PolyRing;
use crate::spectrum::ClosedLocus;

/// `C_low <- C_{low+1} <- ... <- C_high`; `diffs[k]` is `d_{low+k+1}`.
#[derive(Clone, Debug)]
pub struct FreeComplex<R: BaseRing> {
    ring: R,
    low: i64,
    ranks: Vec<usize>,
    diffs: Vec<Matrix<R::Elem>>,
}

/// Degreewise matrices `f_n: X_n -> Y_n`; degrees without an entry are zero.
#[derive(Clone, Debug)]
pub struct ChainMap<R: BaseRing> {
    source: FreeComplex<R>,
    target: FreeComplex<R>,
    low: i64,
    comps: Vec<Matrix<R::Elem>>,
}

impl<R: BaseRing> FreeComplex<R> {
    /// Checks shapes and `d_n d_{n+1} = 0`.
    pub fn new(ring: R, low: i64, ranks: Vec<usize>, diffs: Vec<Matrix<R::Elem>>) -> Result<Self> {
        if ranks.is_empty() && !diffs.is_empty() || !ranks.is_empty() && diffs.len() + 1 != ranks.len() {
            return Err(Error::NotAComplex(format!(
                "{} ranks need {} differentials, got {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.rows() != ranks[k] || d.cols() != ranks[k + 1] {
                return Err(Error::NotAComplex(format!(
                    "d{} is {}x{}, expected {}x{}",
                    low + k as i64 + 1,
                    d.rows(),
                    d.cols(),
                    ranks[k],
                    ranks[k + 1]
                )));
            }
        }
        let diffs: Vec<Matrix<R::Elem>> = diffs.into_iter().map(|d| d.map(|x| ring.canon(x))).collect();
        for k in 1..diffs.len() {
            let sq = base::mat_mul(&ring, &diffs[k - 1], &diffs[k]);
            if !base::is_zero_matrix(&ring, &sq) {
                return Err(Error::NotAComplex(format!(
                    "d{} d{} is nonzero",
                    low + k as i64,
                    low + k as i64 + 1
                )));
            }
        }
        Ok(FreeComplex {
            ring,
            low,
            ranks,
            diffs,
        })
    }

    /// `R^n` concentrated in degree 0.
    pub fn free_in_degree_zero(ring: R, n: usize) -> Self {
        FreeComplex {
            ring,
            low: 0,
            ranks: vec![n],
            diffs: Vec::new(),
        }
    }

    /// The zero complex.
    pub fn zero(ring: R) -> Self {
        FreeComplex {
            ring,
            low: 0,
            ranks: Vec::new(),
            diffs: Vec::new(),
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.ranks.len() as i64 - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn differentials(&self) -> &[Matrix<R::Elem>] {
        &self.diffs
    }

    pub fn rank(&self, n: i64) -> usize {
        if n < self.low {
            return 0;
        }
        self.ranks.get((n - self.low) as usize).copied().unwrap_or(0)
    }

    /// `d_n: C_n -> C_{n-1}`, zero outside the stored range.
    pub fn differential(&self, n: i64) -> Matrix<R::Elem> {
        let k = n - self.low - 1;
        if k >= 0 && (k as usize) < self.diffs.len() {
            self.diffs[k as usize].clone()
        } else {
            Matrix::filled(self.rank(n - 1), self.rank(n), self.ring.zero())
        }
    }

    /// Builds a complex from a degree range, filling differentials from `d`.
    fn from_fn(
        ring: R,
        low: i64,
        high: i64,
        rank: impl Fn(i64) -> usize,
        d: impl Fn(i64) -> Matrix<R::Elem>,
    ) -> Self {
        if high < low {
            return FreeComplex::zero(ring);
        }
        FreeComplex {
            ranks: (low..=high).map(&rank).collect(),
            diffs: (low + 1..=high).map(d).collect(),
            ring,
            low,
        }
    }

    /// `H_n = ker d_n / im d_{n+1}`.
    pub fn homology(&self, n: i64) -> FPModule<R> {
        let ring = &self.ring;
        let r = self.rank(n);
        if r == 0 {
            return FPModule::zero(ring.clone());
        }
        let dn = self.differential(n);
        let cycles = if dn.rows() == 0 {
            base::identity(ring, r)
        } else {
            ring.syzygies(&dn)
        };
        if cycles.cols() == 0 {
            return FPModule::zero(ring.clone());
        }
        let boundaries = self.differential(n + 1);
        FPModule::new(ring.clone(), subquotient_relations(ring, &cycles, &boundaries))
    }

    /// `(ΣᵏX)_n = X_{n-k}` with differential `(-1)ᵏ d`.
    pub fn shift(&self, k: i64) -> Self {
        let ring = self.ring.clone();
        let diffs = if k % 2 == 0 {
            self.diffs.clone()
        } else {
            self.diffs.iter().map(|d| d.map(|x| ring.neg(x))).collect()
        };
        FreeComplex {
            ring,
            low: self.low + k,
            ranks: self.ranks.clone(),
            diffs,
        }
    }

    /// Two-term complex `R^m --A--> R^n` in degrees 1 and 0.
    pub fn presentation_complex(module: &FPModule<R>) -> Self {
        let a = module.relations().clone();
        let ring = module.ring().clone();
        if a.cols() == 0 {
            return FreeComplex::free_in_degree_zero(ring, module.num_generators());
        }
        FreeComplex {
            low: 0,
            ranks: vec![a.rows(), a.cols()],
            diffs: vec![a],
            ring,
        }
    }

    /// Koszul complex on `f_1..f_k`: `C_i` has basis the `i`-subsets of
    /// `{1..k}` in lexicographic order and
    /// `d(e_S) = Σ_j (-1)^j f_{s_j} e_{S \ s_j}`.
    pub fn koszul(ring: R, elems: &[R::Elem]) -> Self {
        let k = elems.len();
        let bases: Vec<Vec<Vec<usize>>> = (0..=k).map(|i| combinations(k, i)).collect();
        let mut diffs = Vec::with_capacity(k);
        for i in 1..=k {
            let (src, dst) = (&bases[i], &bases[i - 1]);
            let mut d = Matrix::filled(dst.len(), src.len(), ring.zero());
            for (col, s) in src.iter().enumerate() {
                for (j, &idx) in s.iter().enumerate() {
                    let face: Vec<usize> = s.iter().copied().filter(|&t| t != idx).collect();
                    let row = dst.binary_search(&face).expect("faces are listed");
                    let v = if j % 2 == 0 {
                        elems[idx].clone()
                    } else {
                        ring.neg(&elems[idx])
                    };
                    d.set(row, col, ring.canon(&v));
                }
            }
            diffs.push(d);
        }
        FreeComplex {
            ranks: bases.iter().map(Vec::len).collect(),
            diffs,
            ring,
            low: 0,
        }
    }

    /// Union over `n` of the supports of `H_n`.
    pub fn support(&self) -> ClosedLocus<R> {
        let mut acc = ClosedLocus::empty(self.ring.clone());
        for n in self.low..=self.high() {
            let h = self.homology(n);
            acc = acc.union(&ClosedLocus::support_of(&h)).expect("same ring");
        }
        acc
    }

    pub fn is_acyclic(&self) -> bool {
        (self.low..=self.high()).all(|n| self.homology(n).is_zero())
    }

    pub fn identity_map(&self) -> ChainMap<R> {
        ChainMap {
            source: self.clone(),
            target: self.clone(),
            low: self.low,
            comps: self
                .ranks
                .iter()
                .map(|&r| base::identity(&self.ring, r))
                .collect(),
        }
    }

    /// Degreewise direct sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let ring = self.ring.clone();
        Ok(FreeComplex::from_fn(
            ring.clone(),
            low,
            high,
            |n| self.rank(n) + other.rank(n),
            |n| block_diag(&ring, &self.differential(n), &other.differential(n)),
        ))
    }
}

fn block_diag<R: BaseRing>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let mut out = Matrix::filled(a.rows() + b.rows(), a.cols() + b.cols(), ring.zero());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            out.set(a.rows() + i, a.cols() + j, b.get(i, j).clone());
        }
    }
    out
}

impl<R: BaseRing> ChainMap<R> {
    /// `comps[k]` is `f_{low+k}`; checks shapes and `d f = f d`.
    pub fn new(
        source: FreeComplex<R>,
        target: FreeComplex<R>,
        low: i64,
        comps: Vec<Matrix<R::Elem>>,
    ) -> Result<Self> {
        if source.ring != target.ring {
            return Err(Error::RingMismatch);
        }
        for (k, f) in comps.iter().enumerate() {
            let n = low + k as i64;
            if f.rows() != target.rank(n) || f.cols() != source.rank(n) {
                return Err(Error::NotAChainMap(format!(
                    "f{n} is {}x{}, expected {}x{}",
                    f.rows(),
                    f.cols(),
                    target.rank(n),
                    source.rank(n)
                )));
            }
        }
        let map = ChainMap {
            source,
            target,
            low,
            comps,
        };
        let ring = &map.source.ring;
        let lo = map.source.low.min(map.target.low);
        let hi = map.source.high().max(map.target.high());
        for n in lo..=hi + 1 {
            let left = base::mat_mul(ring, &map.target.differential(n), &map.component(n));
            let right = base::mat_mul(ring, &map.component(n - 1), &map.source.differential(n));
            let diff = Matrix::from_vec(
                left.rows(),
                left.cols(),
                left.entries()
                    .iter()
                    .zip(right.entries())
                    .map(|(a, b)| ring.sub(a, b))
                    .collect(),
            )
            .expect("same shape");
            if !base::is_zero_matrix(ring, &diff) {
                return Err(Error::NotAChainMap(format!("d f{n} differs from f{} d", n - 1)));
            }
        }
        Ok(map)
    }

    /// The zero map.
    pub fn zero(source: FreeComplex<R>, target: FreeComplex<R>) -> Self {
        ChainMap {
            source,
            target,
            low: 0,
            comps: Vec::new(),
        }
    }

    pub fn source(&self) -> &FreeComplex<R> {
        &self.source
    }

    pub fn target(&self) -> &FreeComplex<R> {
        &self.target
    }

    pub fn component(&self, n: i64) -> Matrix<R::Elem> {
        let k = n - self.low;
        if k >= 0 && (k as usize) < self.comps.len() {
            self.comps[k as usize].clone()
        } else {
            Matrix::filled(self.target.rank(n), self.source.rank(n), self.source.ring.zero())
        }
    }

    /// `Cone_n = X_{n-1} ⊕ Y_n` with `d(x, y) = (-d x, f x + d y)`.
    pub fn cone(&self) -> FreeComplex<R> {
        let (x, y) = (&self.source, &self.target);
        let ring = x.ring.clone();
        let empty = x.ranks.is_empty() && y.ranks.is_empty();
        if empty {
            return FreeComplex::zero(ring);
        }
        let low = if x.ranks.is_empty() {
            y.low
        } else if y.ranks.is_empty() {
            x.low + 1
        } else {
            (x.low + 1).min(y.low)
        };
        let high = if x.ranks.is_empty() {
            y.high()
        } else if y.ranks.is_empty() {
            x.high() + 1
        } else {
            (x.high() + 1).max(y.high())
        };
        FreeComplex::from_fn(
            ring.clone(),
            low,
            high,
            |n| x.rank(n - 1) + y.rank(n),
            |n| {
                let (xa, xb) = (x.rank(n - 1), x.rank(n - 2));
                let (ya, yb) = (y.rank(n), y.rank(n - 1));
                let mut d = Matrix::filled(xb + yb, xa + ya, ring.zero());
                let dx = x.differential(n - 1);
                let dy = y.differential(n);
                let f = self.component(n - 1);
                for i in 0..xb {
                    for j in 0..xa {
                        d.set(i, j, ring.neg(dx.get(i, j)));
                    }
                }
                for i in 0..yb {
                    for j in 0..xa {
                        d.set(xb + i, j, f.get(i, j).clone());
                    }
                    for j in 0..ya {
                        d.set(xb + i, xa + j, dy.get(i, j).clone());
                    }
                }
                d
            },
        )
    }
}

impl FreeComplex<PolyRing> {
    /// The minimal free resolution of a graded module, as a complex
    /// quasi-isomorphic to the module in degree 0.
    pub fn perfectize(module: &FPModule<PolyRing>, cap: usize) -> Result<Self> {
        let res = module.minimal_free_resolution(cap)?;
        FreeComplex::new(
            module.ring().clone(),
            0,
            res.ranks().to_vec(),
            res.maps().to_vec(),
        )
    }
}

/// A thick subcategory of perfect complexes, held as generators plus the
/// union of their supports.
#[derive(Clone, Debug)]
pub struct ThickSubcat<R: BaseRing> {
    ring: R,
    generators: Vec<FreeComplex<R>>,
    datum: ClosedLocus<R>,
}

impl<R: BaseRing> ThickSubcat<R> {
    pub fn generated_by(ring: R, generators: Vec<FreeComplex<R>>) -> Result<Self> {
        let mut datum = ClosedLocus::empty(ring.clone());
        for g in &generators {
            if g.ring() != &ring {
                return Err(Error::RingMismatch);
            }
            datum = datum.union(&g.support())?;
        }
        Ok(ThickSubcat {
            ring,
            generators,
            datum,
        })
    }

    /// The thick subcategory with the given datum, generated by the Koszul
    /// complex on the datum's ideal generators.
    pub fn from_datum(datum: ClosedLocus<R>) -> Self {
        let ring = datum.ring().clone();
        let gen = FreeComplex::koszul(ring.clone(), &datum.generators());
        ThickSubcat {
            ring,
            generators: vec![gen],
            datum,
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn generators(&self) -> &[FreeComplex<R>] {
        &self.generators
    }

    pub fn datum(&self) -> &ClosedLocus<R> {
        &self.datum
    }

    /// `X` belongs iff its support lies in the datum.
    pub fn contains(&self, x: &FreeComplex<R>) -> Result<bool> {
        if x.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        x.support().contained_in(&self.datum)
    }

    pub fn contained_in(&self, other: &Self) -> Result<bool> {
        self.datum.contained_in(&other.datum)
    }
}
