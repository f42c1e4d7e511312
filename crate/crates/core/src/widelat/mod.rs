//! Wide subcategories of finitely presented modules, represented by their
//! classifying closed locus: membership, lattice operations, the maps to and
//! from thick subcategories, transfer along a quotient ring, and the
//! coproduct-closed variant over the integers.

mod coproduct;

pub use coproduct::{CoproductWideSubcatZ, ZModuleDescriptor, ZSummand};

use std::fmt;

use crate::base::BaseRing;
use crate::derived::ThickSubcat;
use crate::error::{Error, Result};
use crate::freemod::FPModule;
use crate::polyring::{IdealGB, Poly, PolyRing};
use crate::spectrum::{ClosedLocus, OrderIdealView};

/// Which lattice a value is viewed in. On the supported rings the three
/// agree at the level of data, so the tag never changes a decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Wide,
    Serre,
    Torsion,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Wide => "wide",
            Flavor::Serre => "serre",
            Flavor::Torsion => "torsion",
        })
    }
}

/// The finitely presented modules whose support lies in `datum`.
#[derive(Clone, Debug)]
pub struct WideSubcat<R: BaseRing> {
    ring: R,
    generators: Vec<FPModule<R>>,
    datum: ClosedLocus<R>,
    flavor: Flavor,
}

impl<R: BaseRing> WideSubcat<R> {
    pub fn generated_by(ring: R, generators: Vec<FPModule<R>>) -> Result<Self> {
        let mut datum = ClosedLocus::empty(ring.clone());
        for m in &generators {
            if m.ring() != &ring {
                return Err(Error::RingMismatch);
            }
            datum = datum.union(&ClosedLocus::support_of(m))?;
        }
        Ok(WideSubcat {
            ring,
            generators,
            datum,
            flavor: Flavor::Wide,
        })
    }

    /// Generated by the cyclic module `R/a` for `datum = V(a)`.
    pub fn from_datum(datum: ClosedLocus<R>) -> Self {
        let ring = datum.ring().clone();
        let gens = if datum.is_empty() {
            Vec::new()
        } else {
            vec![FPModule::cyclic(ring.clone(), &datum.generators())]
        };
        WideSubcat {
            ring,
            generators: gens,
            datum,
            flavor: Flavor::Wide,
        }
    }

    /// The zero subcategory.
    pub fn zero(ring: R) -> Self {
        Self::from_datum(ClosedLocus::empty(ring))
    }

    /// All finitely presented modules, generated by `R`.
    pub fn everything(ring: R) -> Self {
        Self::from_datum(ClosedLocus::whole(ring))
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn generators(&self) -> &[FPModule<R>] {
        &self.generators
    }

    pub fn datum(&self) -> &ClosedLocus<R> {
        &self.datum
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn with_flavor(mut self, flavor: Flavor) -> Self {
        self.flavor = flavor;
        self
    }

    pub fn member(&self, m: &FPModule<R>) -> Result<bool> {
        if m.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        ClosedLocus::support_of(m).contained_in(&self.datum)
    }

    pub fn contained_in(&self, other: &Self) -> Result<bool> {
        self.datum.contained_in(&other.datum)
    }

    /// Equality of the represented subcategories.
    pub fn same_as(&self, other: &Self) -> Result<bool> {
        self.datum.same_locus(&other.datum)
    }

    /// The subcategory generated by both.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let datum = self.datum.union(&other.datum)?;
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        Ok(WideSubcat {
            ring: self.ring.clone(),
            generators,
            datum,
            flavor: self.flavor,
        })
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_datum(self.datum.intersect(&other.datum)?).with_flavor(self.flavor))
    }

    /// Perfect complexes whose homology lies in `self`.
    pub fn f_map(&self) -> ThickSubcat<R> {
        ThickSubcat::from_datum(self.datum.clone())
    }

    /// The wide subcategory generated by all homology of the generators of `t`.
    pub fn g_map(t: &ThickSubcat<R>) -> Self {
        let ring = t.ring().clone();
        let mut gens = Vec::new();
        for x in t.generators() {
            for n in x.low()..=x.high() {
                let h = x.homology(n);
                if !h.is_zero() {
                    gens.push(h);
                }
            }
        }
        Self::generated_by(ring, gens).expect("homology lives over the same ring")
    }

    /// The torsion-theory and Serre-class views; both carry the same datum.
    pub fn views_chain(&self) -> (Self, Self) {
        (
            self.clone().with_flavor(Flavor::Torsion),
            self.clone().with_flavor(Flavor::Serre),
        )
    }

    /// `Spec R \ supp`, the open set of primes where every member vanishes.
    pub fn r_map(&self) -> OrderIdealView<R> {
        self.datum.complement()
    }

    /// Modules vanishing at every prime of the view.
    pub fn i_map(view: &OrderIdealView<R>) -> Self {
        Self::from_datum(view.complement().clone()).with_flavor(Flavor::Torsion)
    }
}

impl WideSubcat<PolyRing> {
    /// `u`: a subcategory over `R/a` viewed inside `R`-modules. The datum
    /// is the preimage locus inside `V(a)`.
    pub fn inflate_u(&self) -> Result<WideSubcat<PolyRing>> {
        let amb = self.ring.ambient();
        let ideal = self.datum.ideal().transport(&amb)?;
        let modulus: Vec<Poly> = self.ring.modulus().to_vec();
        let generators: Vec<FPModule<PolyRing>> = self
            .generators
            .iter()
            .map(|m| FPModule::new(amb.clone(), m.relations().clone()).tensor_quotient(&modulus))
            .collect();
        Ok(WideSubcat {
            ring: amb.clone(),
            generators,
            datum: ClosedLocus::new(amb, ideal),
            flavor: self.flavor,
        })
    }

    /// `v`: the members on which `a` acts trivially, as modules over `R/a`.
    /// The datum is cut down to `V(a)`; generators become `M / aM`.
    pub fn restrict_v(&self, a: &[Poly]) -> Result<WideSubcat<PolyRing>> {
        let q = self.ring.quotient(a);
        let ideal: IdealGB = self.datum.ideal().transport(&q)?;
        let generators: Vec<FPModule<PolyRing>> = self
            .generators
            .iter()
            .map(|m| FPModule::new(q.clone(), m.relations().clone()))
            .filter(|m| !m.is_zero())
            .collect();
        Ok(WideSubcat {
            ring: q.clone(),
            generators,
            datum: ClosedLocus::new(q, ideal),
            flavor: self.flavor,
        })
    }
}

/// Whether every element of `a` kills `m`.
pub fn acts_trivially<R: BaseRing>(m: &FPModule<R>, a: &[R::Elem]) -> bool {
    let ring = m.ring();
    let ann = m.annihilator();
    let a_ideal = ring.ideal(a);
    ring.ideal_sum(&ann, &a_ideal) == ann
}
