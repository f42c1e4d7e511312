use num_bigint::BigInt;
use num_integer::gcd;
use rand::Rng;

use super::group::FinAbGroup;
use crate::exactarith::{IntRing, Matrix};
use crate::freemod::ModuleMap;

/// A homomorphism between diagonal presentations: generator `i` of the
/// source goes to `Σ_j matrix[j][i] f_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hom {
    source: FinAbGroup,
    target: FinAbGroup,
    matrix: Vec<Vec<u64>>,
}

/// Admissible images of a generator of order `a` in `Z/b`: multiples of
/// `b / gcd(a, b)`.
fn admissible(a: u64, b: u64) -> Vec<u64> {
    let step = b / gcd(a, b);
    (0..b).step_by(step as usize).collect()
}

impl Hom {
    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.matrix
    }

    /// Uniformly random homomorphism.
    pub fn random(source: &FinAbGroup, target: &FinAbGroup, rng: &mut impl Rng) -> Hom {
        let (a, b) = (source.factors(), target.factors());
        let matrix = b
            .iter()
            .map(|&bj| {
                a.iter()
                    .map(|&ai| {
                        let opts = admissible(ai, bj);
                        opts[rng.gen_range(0..opts.len())]
                    })
                    .collect()
            })
            .collect();
        Hom {
            source: source.clone(),
            target: target.clone(),
            matrix,
        }
    }

    pub fn identity(g: &FinAbGroup) -> Hom {
        let n = g.factors().len();
        Hom {
            source: g.clone(),
            target: g.clone(),
            matrix: (0..n)
                .map(|j| (0..n).map(|i| u64::from(i == j)).collect())
                .collect(),
        }
    }

    /// Multiplication by `k`.
    pub fn scalar(g: &FinAbGroup, k: u64) -> Hom {
        let f = g.factors();
        Hom {
            source: g.clone(),
            target: g.clone(),
            matrix: (0..f.len())
                .map(|j| (0..f.len()).map(|i| if i == j { k % f[j] } else { 0 }).collect())
                .collect(),
        }
    }

    fn module_map(&self) -> ModuleMap<IntRing> {
        let z = IntRing::integers();
        let m = Matrix::from_rows(
            self.matrix
                .iter()
                .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
            self.source.factors().len(),
        )
        .expect("rectangular");
        ModuleMap::new(self.source.to_module(&z), self.target.to_module(&z), m).expect("admissible entries")
    }
}

/// Every homomorphism `A -> B`, in lexicographic order of the entries.
/// There are `Π gcd(a_i, b_j)` of them.
pub fn all_homs(a: &FinAbGroup, b: &FinAbGroup) -> Vec<Hom> {
    let (fa, fb) = (a.factors(), b.factors());
    let cells: Vec<(usize, usize, Vec<u64>)> = (0..fb.len())
        .flat_map(|j| (0..fa.len()).map(move |i| (j, i)))
        .map(|(j, i)| (j, i, admissible(fa[i], fb[j])))
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; cells.len()];
    loop {
        let mut matrix = vec![vec![0u64; fa.len()]; fb.len()];
        for (c, (j, i, opts)) in cells.iter().enumerate() {
            matrix[*j][*i] = opts[idx[c]];
        }
        out.push(Hom {
            source: a.clone(),
            target: b.clone(),
            matrix,
        });
        let mut c = cells.len();
        loop {
            if c == 0 {
                return out;
            }
            c -= 1;
            idx[c] += 1;
            if idx[c] < cells[c].2.len() {
                break;
            }
            idx[c] = 0;
        }
    }
}

/// Kernel via integer syzygies and Smith normal form.
pub fn kernel_of(f: &Hom) -> FinAbGroup {
    FinAbGroup::of_module(&f.module_map().kernel()).expect("subgroup of a finite group")
}

pub fn cokernel_of(f: &Hom) -> FinAbGroup {
    FinAbGroup::of_module(&f.module_map().cokernel()).expect("quotient of a finite group")
}
