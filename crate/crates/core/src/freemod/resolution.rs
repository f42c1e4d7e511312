//! Free resolutions. Minimal resolutions are only claimed for graded
//! modules over (quotients of) polynomial rings with homogeneous data.

use super::FPModule;
use crate::base::BaseRing;
use crate::error::{Error, Result};
use crate::exactarith::Matrix;
use crate::polyring::{Poly, PolyRing};

/// `0 <- F_0 <- F_1 <- ... <- F_L`, where `maps[k-1]` is `d_k: F_k -> F_{k-1}`.
#[derive(Clone, Debug)]
pub struct FreeResolution<R: BaseRing> {
    ring: R,
    ranks: Vec<usize>,
    maps: Vec<Matrix<R::Elem>>,
    degrees: Option<Vec<Vec<i64>>>,
    minimal: bool,
}

impl<R: BaseRing> FreeResolution<R> {
    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// Index of the last nonzero free module.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn maps(&self) -> &[Matrix<R::Elem>] {
        &self.maps
    }

    /// Generator degrees of each `F_k` (graded resolutions only).
    pub fn degrees(&self) -> Option<&[Vec<i64>]> {
        self.degrees.as_deref()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }
}

fn nonzero_columns<R: BaseRing>(ring: &R, m: &Matrix<R::Elem>) -> Vec<Vec<R::Elem>> {
    m.columns()
        .into_iter()
        .filter(|c| c.iter().any(|x| !ring.is_zero(x)))
        .collect()
}

/// Greedy pruning: keep a column only if it is not already in the span of
/// the columns kept before it.
fn prune_columns<R: BaseRing>(ring: &R, rank: usize, cols: Vec<Vec<R::Elem>>) -> Vec<Vec<R::Elem>> {
    let mut kept: Vec<Vec<R::Elem>> = Vec::new();
    for c in cols {
        let span = Matrix::from_columns(rank, &kept, &ring.zero());
        if !ring.submodule_contains(&span, &c) {
            kept.push(c);
        }
    }
    kept
}

impl<R: BaseRing> FPModule<R> {
    /// A free resolution without minimality claims; redundant syzygies are
    /// pruned greedily. Fails when it does not close up within `max_len` steps.
    pub fn free_resolution(&self, max_len: usize) -> Result<FreeResolution<R>> {
        let ring = self.ring().clone();
        let mut ranks = vec![self.num_generators()];
        let mut maps = Vec::new();
        let first = prune_columns(
            &ring,
            self.num_generators(),
            nonzero_columns(&ring, self.relations()),
        );
        let mut current = Matrix::from_columns(self.num_generators(), &first, &ring.zero());
        while current.cols() > 0 {
            if maps.len() == max_len {
                return Err(Error::PdBoundExceeded { cap: max_len });
            }
            ranks.push(current.cols());
            let syz = ring.syzygies(&current);
            maps.push(current);
            let rank = syz.rows();
            let next = prune_columns(&ring, rank, nonzero_columns(&ring, &syz));
            current = Matrix::from_columns(rank, &next, &ring.zero());
        }
        Ok(FreeResolution {
            ring,
            ranks,
            maps,
            degrees: None,
            minimal: false,
        })
    }
}

/// Degree of a homogeneous column against generator degrees; `None` for a
/// zero column, an error if the column is not homogeneous.
fn column_degree(col: &[Poly], degrees: &[i64]) -> Result<Option<i64>> {
    let mut found: Option<i64> = None;
    for (p, &d) in col.iter().zip(degrees) {
        if p.is_zero() {
            continue;
        }
        if !p.is_homogeneous() {
            return Err(Error::NotGraded("entry of mixed degree in a column".to_string()));
        }
        let deg = p.total_degree().unwrap_or(0) as i64 + d;
        match found {
            None => found = Some(deg),
            Some(e) if e != deg => {
                return Err(Error::NotGraded("column entries of inconsistent degree".into()))
            }
            _ => {}
        }
    }
    Ok(found)
}

/// Sorts homogeneous columns by degree (stably) and keeps a minimal
/// generating set of their span.
fn minimal_generators(
    ring: &PolyRing,
    degrees: &[i64],
    cols: Vec<Vec<Poly>>,
) -> Result<(Vec<Vec<Poly>>, Vec<i64>)> {
    let mut tagged: Vec<(i64, Vec<Poly>)> = Vec::new();
    for c in cols {
        if let Some(d) = column_degree(&c, degrees)? {
            tagged.push((d, c));
        }
    }
    tagged.sort_by_key(|(d, _)| *d);
    let rank = degrees.len();
    let mut kept: Vec<Vec<Poly>> = Vec::new();
    let mut kept_deg = Vec::new();
    for (d, c) in tagged {
        let span = Matrix::from_columns(rank, &kept, &Poly::zero());
        if !ring.submodule_contains(&span, &c) {
            kept.push(c);
            kept_deg.push(d);
        }
    }
    Ok((kept, kept_deg))
}

impl FPModule<PolyRing> {
    /// Attaches generator degrees after checking that every relation is
    /// homogeneous and the ring's defining ideal is homogeneous.
    pub fn graded(self, degrees: Vec<i64>) -> Result<Self> {
        if degrees.len() != self.num_generators() {
            return Err(Error::DimensionMismatch(format!(
                "{} degrees for {} generators",
                degrees.len(),
                self.num_generators()
            )));
        }
        if !self.ring().is_graded() {
            return Err(Error::NotGraded(
                "the ring's defining ideal is not homogeneous".into(),
            ));
        }
        for c in self.relations().columns() {
            column_degree(&c, &degrees)?;
        }
        Ok(self.with_degrees_unchecked(degrees))
    }

    /// Degrees all zero; fails if the presentation is not homogeneous.
    pub fn graded_standard(self) -> Result<Self> {
        let n = self.num_generators();
        self.graded(vec![0; n])
    }

    /// Removes generators that a relation expresses through the others
    /// (a relation with a unit entry), repeating until none is left.
    pub fn minimal_presentation(&self) -> FPModule<PolyRing> {
        let ring = self.ring().clone();
        let mut a = self.relations().clone();
        let mut degrees: Option<Vec<i64>> = self.degrees().map(|d| d.to_vec());
        loop {
            let pivot = (0..a.rows())
                .flat_map(|i| (0..a.cols()).map(move |j| (i, j)))
                .find(|&(i, j)| a.get(i, j).is_constant());
            let Some((pi, pj)) = pivot else { break };
            let inv = a.get(pi, pj).leading_coeff().and_then(|c| c.inv()).expect("unit");
            let inv = ring.constant(inv);
            let pivot_col = a.column(pj);
            for k in 0..a.cols() {
                if k == pj || a.get(pi, k).is_zero() {
                    continue;
                }
                let factor = ring.mul(a.get(pi, k), &inv);
                for i in 0..a.rows() {
                    let v = ring.sub(a.get(i, k), &ring.mul(&factor, &pivot_col[i]));
                    a.set(i, k, v);
                }
            }
            let rows: Vec<usize> = (0..a.rows()).filter(|&i| i != pi).collect();
            let cols: Vec<usize> = (0..a.cols()).filter(|&j| j != pj).collect();
            a = a.select_rows(&rows).select_cols(&cols);
            if let Some(d) = degrees.as_mut() {
                d.remove(pi);
            }
        }
        let m = FPModule::new(ring, a).trimmed();
        match degrees {
            Some(d) => m.with_degrees_unchecked(d),
            None => m,
        }
    }

    /// Graded minimal free resolution. Terminates at the projective
    /// dimension when it is at most `max_len`, otherwise reports
    /// `pd-bound-exceeded`; the two causes (infinite projective dimension
    /// or a cap that is too small) are not told apart.
    pub fn minimal_free_resolution(&self, max_len: usize) -> Result<FreeResolution<PolyRing>> {
        let degrees0 = self
            .degrees()
            .ok_or_else(|| Error::NotGraded("minimal resolutions need generator degrees".into()))?
            .to_vec();
        let ring = self.ring().clone();
        let pruned = self.minimal_presentation();
        let mut deg_prev = pruned.degrees().map(|d| d.to_vec()).unwrap_or(degrees0);
        let mut ranks = vec![pruned.num_generators()];
        let mut maps = Vec::new();
        let mut all_degrees = vec![deg_prev.clone()];

        let (cols, mut deg_cur) = minimal_generators(&ring, &deg_prev, pruned.relations().columns())?;
        let mut current = Matrix::from_columns(deg_prev.len(), &cols, &Poly::zero());
        while current.cols() > 0 {
            if maps.len() == max_len {
                return Err(Error::PdBoundExceeded { cap: max_len });
            }
            ranks.push(current.cols());
            all_degrees.push(deg_cur.clone());
            let syz = ring.syzygies(&current);
            maps.push(current);
            deg_prev = deg_cur;
            let (cols, next_deg) = minimal_generators(&ring, &deg_prev, syz.columns())?;
            deg_cur = next_deg;
            current = Matrix::from_columns(deg_prev.len(), &cols, &Poly::zero());
        }
        Ok(FreeResolution {
            ring,
            ranks,
            maps,
            degrees: Some(all_degrees),
            minimal: true,
        })
    }

    pub fn projective_dimension(&self, cap: usize) -> Result<usize> {
        Ok(self.minimal_free_resolution(cap)?.length())
    }
}
