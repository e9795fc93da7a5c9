//! Cycles on the central fibre as component pairs, glued bundle data and
//! the charge and obstruction counts built from them.
//!
//! A cycle on the central fibre is represented by the pair of its
//! components on the two blown-up branches (codimension-graded, via
//! Poincaré duality on each smooth branch) together with a flag recording
//! whether the pair satisfies the matching condition on the double locus.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pushout::{cycle_degree, BlownUpChow};
use crate::quadric::{cohomology_dims, quadric_ring, sigma_pullback, QuadricClass};
use crate::ring::{same_ring, RingElement};

/// Components `(α₁, α₂)` on the two branches.
///
/// Homogeneous components must share a codimension. Inhomogeneous pairs
/// (for example values of a non-homogeneous polynomial) are allowed and
/// stand for their homogeneous parts taken together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPair {
    pub alpha1: RingElement,
    pub alpha2: RingElement,
}

impl ComponentPair {
    pub fn new(alpha1: RingElement, alpha2: RingElement) -> Result<Self> {
        if let (Some(d1), Some(d2)) = (alpha1.homogeneous_degree(), alpha2.homogeneous_degree()) {
            if d1 != d2 {
                return Err(Error::CodimensionMismatch(d1, d2));
            }
        }
        Ok(ComponentPair { alpha1, alpha2 })
    }

    /// Common codimension; `None` for inhomogeneous pairs. The zero pair
    /// has no codimension of its own and reports `None` as well.
    pub fn codimension(&self) -> Option<usize> {
        match (self.alpha1.homogeneous_degree(), self.alpha2.homogeneous_degree()) {
            (Some(d), None) if self.alpha2.is_zero() => Some(d),
            (None, Some(d)) if self.alpha1.is_zero() => Some(d),
            (Some(d1), Some(d2)) if d1 == d2 => Some(d1),
            _ => None,
        }
    }

    fn is_of_codimension(&self, k: usize) -> bool {
        self.alpha1.is_homogeneous_of(k) && self.alpha2.is_homogeneous_of(k)
    }
}

/// A specialized cycle: its component pair and whether it matches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralFibreCycle {
    pub pair: ComponentPair,
    pub matched: bool,
}

/// The two branches of the central fibre.
#[derive(Clone, Debug)]
pub struct CentralFibre {
    branch1: BlownUpChow,
    branch2: BlownUpChow,
}

impl CentralFibre {
    pub fn new(branch1: BlownUpChow, branch2: BlownUpChow) -> Result<Self> {
        let q = quadric_ring();
        if !same_ring(branch1.restriction_map().target(), q)
            || !same_ring(branch2.restriction_map().target(), q)
        {
            return Err(Error::IncompatibleBranches(
                "branches must restrict to the shared quadric".into(),
            ));
        }
        Ok(CentralFibre { branch1, branch2 })
    }

    pub fn branch1(&self) -> &BlownUpChow {
        &self.branch1
    }

    pub fn branch2(&self) -> &BlownUpChow {
        &self.branch2
    }

    fn check_rings(&self, p: &ComponentPair) -> Result<()> {
        if same_ring(p.alpha1.ring(), self.branch1.ring())
            && same_ring(p.alpha2.ring(), self.branch2.ring())
        {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `j₁*α₁ − σ*j₂*α₂`, degree by degree.
    pub fn matching_defect(&self, p: &ComponentPair) -> Result<QuadricClass> {
        self.check_rings(p)?;
        let r1 = self.branch1.restrict_to_quadric(&p.alpha1)?;
        let r2 = sigma_pullback(&self.branch2.restrict_to_quadric(&p.alpha2)?);
        Ok(r1.sub(&r2))
    }

    pub fn is_matched(&self, p: &ComponentPair) -> Result<bool> {
        Ok(self.matching_defect(p)?.is_zero())
    }

    pub fn specialize(&self, pair: ComponentPair) -> Result<CentralFibreCycle> {
        let matched = self.is_matched(&pair)?;
        Ok(CentralFibreCycle { pair, matched })
    }

    /// Evaluates `P` on the two branches separately.
    ///
    /// Each input must be a matched codimension-1 pair; the output is then
    /// matched because `j*` and `σ*` are ring homomorphisms, and this is
    /// asserted.
    pub fn practical_lift(&self, p: &IntPolynomial, inputs: &[ComponentPair]) -> Result<CentralFibreCycle> {
        if inputs.len() != p.num_vars() {
            return Err(Error::LengthMismatch(p.num_vars(), inputs.len()));
        }
        for (i, pair) in inputs.iter().enumerate() {
            if !pair.is_of_codimension(1) {
                return Err(Error::InvalidArgument(format!("input {i} is not of codimension 1")));
            }
            if !self.is_matched(pair)? {
                return Err(Error::Unmatched(format!("input {i}")));
            }
        }
        let xs1: Vec<_> = inputs.iter().map(|p| p.alpha1.clone()).collect();
        let xs2: Vec<_> = inputs.iter().map(|p| p.alpha2.clone()).collect();
        // Cancellation can leave the two sides homogeneous of different
        // degrees, so this is an inhomogeneous pair in general.
        let pair = ComponentPair {
            alpha1: p.evaluate(self.branch1.ring(), &xs1)?,
            alpha2: p.evaluate(self.branch2.ring(), &xs2)?,
        };
        let cycle = self.specialize(pair)?;
        assert!(cycle.matched, "ring homomorphisms preserve matching");
        Ok(cycle)
    }

    /// Validates glued bundle data against these branches.
    pub fn bundle(
        &self,
        rank: u32,
        c1_pair: ComponentPair,
        c2_pair: ComponentPair,
        restriction_to_q_trivial: bool,
        h2_end_dims: (u64, u64),
    ) -> Result<GluedBundleData> {
        self.check_rings(&c1_pair)?;
        self.check_rings(&c2_pair)?;
        if !c1_pair.is_of_codimension(1) {
            return Err(Error::InvalidArgument("c1 pair must have codimension 1".into()));
        }
        if !c2_pair.is_of_codimension(2) {
            return Err(Error::InvalidArgument("c2 pair must have codimension 2".into()));
        }
        if restriction_to_q_trivial {
            for (name, pair) in [("c1", &c1_pair), ("c2", &c2_pair)] {
                let d = self.matching_defect(pair)?;
                if !d.is_zero() {
                    return Err(Error::Unmatched(format!(
                        "{name} pair restricts differently to the double locus (defect {d})"
                    )));
                }
            }
        }
        Ok(GluedBundleData {
            rank,
            c1_pair,
            c2_pair,
            restriction_to_q_trivial,
            h2_end_dims,
        })
    }

    /// The specialized second Chern cycle: the branch classes, with no
    /// contribution from the neck.
    pub fn glued_c2_cycle(&self, b: &GluedBundleData) -> Result<CentralFibreCycle> {
        self.specialize(b.c2_pair.clone())
    }

    /// `deg(c₂·H)` on each branch and their sum.
    pub fn polarized_charge(&self, b: &GluedBundleData, h: &ComponentPair) -> Result<ChargeBreakdown> {
        if !h.is_of_codimension(1) {
            return Err(Error::InvalidArgument("polarization must have codimension 1".into()));
        }
        let d = self.matching_defect(h)?;
        if !d.is_zero() {
            return Err(Error::Unmatched(format!("polarization (defect {d})")));
        }
        self.check_rings(&b.c2_pair)?;
        let branch1 = cycle_degree(&self.branch1, &b.c2_pair.alpha1.mul(&h.alpha1)?)?;
        let branch2 = cycle_degree(&self.branch2, &b.c2_pair.alpha2.mul(&h.alpha2)?)?;
        let total = &branch1 + &branch2;
        Ok(ChargeBreakdown {
            branch1,
            branch2,
            total,
        })
    }
}

/// Data of a bundle glued from the two branches.
#[derive(Clone, Debug)]
pub struct GluedBundleData {
    pub rank: u32,
    pub c1_pair: ComponentPair,
    pub c2_pair: ComponentPair,
    pub restriction_to_q_trivial: bool,
    /// `dim H²(Z̃ᵢ, End)` on each branch.
    pub h2_end_dims: (u64, u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeBreakdown {
    pub branch1: BigInt,
    pub branch2: BigInt,
    pub total: BigInt,
}

/// `dim H²(Z₀, End)`, the sum of the branch dimensions.
///
/// Only an upper bound is available when the restriction to the double
/// locus is not trivial, so that case is refused.
pub fn obstruction_dim(b: &GluedBundleData) -> Result<u64> {
    if !b.restriction_to_q_trivial {
        return Err(Error::RestrictionNotTrivial);
    }
    Ok(b.h2_end_dims.0 + b.h2_end_dims.1)
}

/// Obstruction dimensions `r²·h¹(O_Q(m+1, m+1))` for `m = 0..=m_max`.
pub fn formal_triviality_obstructions(m_max: u32, r: u32) -> Result<Vec<i64>> {
    if r < 1 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    let r2 = i64::from(r) * i64::from(r);
    Ok((0..=i64::from(m_max))
        .map(|m| r2 * cohomology_dims(m + 1, m + 1).h1)
        .collect())
}

/// `dim H⁰(Q, End(O^r)) = r²`: gluings of trivial bundles are constant.
pub fn ward_gluing_space_dim(r: u32) -> Result<i64> {
    if r < 1 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    Ok(i64::from(r) * i64::from(r) * cohomology_dims(0, 0).h0)
}

/// Chern classes of a Hartshorne–Serre bundle: `(c₁(L), [C])`.
pub fn hs_chern(l_c1: &RingElement, c_class: &RingElement) -> Result<(RingElement, RingElement)> {
    if !same_ring(l_c1.ring(), c_class.ring()) {
        return Err(Error::RingMismatch);
    }
    l_c1.expect_degree(1)?;
    c_class.expect_degree(2)?;
    Ok((l_c1.clone(), c_class.clone()))
}

/// A polynomial with integer coefficients in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntPolynomial {
    num_vars: usize,
    /// `(coefficient, exponents)`.
    terms: Vec<(BigInt, Vec<u32>)>,
}

impl IntPolynomial {
    pub fn new(num_vars: usize, terms: Vec<(BigInt, Vec<u32>)>) -> Result<Self> {
        for (_, e) in &terms {
            if e.len() != num_vars {
                return Err(Error::LengthMismatch(num_vars, e.len()));
            }
        }
        Ok(IntPolynomial { num_vars, terms })
    }

    pub fn constant(num_vars: usize, c: impl Into<BigInt>) -> Self {
        IntPolynomial {
            num_vars,
            terms: vec![(c.into(), vec![0; num_vars])],
        }
    }

    /// The monomial `t_1^{e_1} ⋯ t_m^{e_m}`.
    pub fn monomial(exponents: Vec<u32>) -> Self {
        IntPolynomial {
            num_vars: exponents.len(),
            terms: vec![(BigInt::one(), exponents)],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &[(BigInt, Vec<u32>)] {
        &self.terms
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .filter(|(c, _)| !c.is_zero())
            .map(|(_, e)| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn evaluate(&self, ring: &std::sync::Arc<crate::ring::GradedRing>, xs: &[RingElement]) -> Result<RingElement> {
        if xs.len() != self.num_vars {
            return Err(Error::LengthMismatch(self.num_vars, xs.len()));
        }
        let mut acc = RingElement::zero(ring);
        for (c, e) in &self.terms {
            let mut m = RingElement::one(ring);
            for (x, &k) in xs.iter().zip(e) {
                m = m.mul(&x.pow(k))?;
            }
            acc = acc.add(&m.scale(c))?;
        }
        Ok(acc)
    }
}
