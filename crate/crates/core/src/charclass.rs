//! The characteristic classes `q_i(E) = θ_E^{-1} Q_i(θ_E)`.
//!
//! In terms of Stiefel-Whitney roots `q_i` is the odd power sum
//! `Σ_j x_j^{2^{i+1}-1}`. [`qi_universal`] writes it in the `w_k` by running
//! Newton's identities over `Z` and reducing mod 2 at the end.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::ring::{Degree, Monomial, RingElement, RingPresentation};
use crate::steenrod::{milnor_degree, SteenrodEvaluator};
use crate::{Error, Result};

type IntPoly = BTreeMap<Monomial, i128>;

fn add_scaled(acc: &mut IntPoly, p: &IntPoly, scale: i128, shift_var: Option<usize>) {
    for (m, c) in p {
        let mut m = m.clone();
        if let Some(v) = shift_var {
            m.0[v] += 1;
        }
        let entry = acc.entry(m).or_insert(0);
        *entry += scale * c;
    }
    acc.retain(|_, c| *c != 0);
}

/// Power sums `p_1, …, p_k` in the elementary symmetric polynomials
/// `e_1, …, e_rank` over `Z`.
fn power_sums_over_z(k: usize, rank: usize) -> Vec<IntPoly> {
    let unit = Monomial::unit(rank);
    let mut p: Vec<IntPoly> = Vec::with_capacity(k + 1);
    p.push(IntPoly::new());
    for n in 1..=k {
        let mut acc = IntPoly::new();
        // p_n = Σ_{j=1}^{n-1} (-1)^{j-1} e_j p_{n-j} + (-1)^{n-1} n e_n.
        for j in 1..n.min(rank + 1) {
            let sign = if j % 2 == 1 { 1 } else { -1 };
            add_scaled(&mut acc, &p[n - j], sign, Some(j - 1));
        }
        if n <= rank {
            let sign: i128 = if n % 2 == 1 { 1 } else { -1 };
            let mut m = unit.clone();
            m.0[n - 1] = 1;
            *acc.entry(m).or_insert(0) += sign * n as i128;
            acc.retain(|_, c| *c != 0);
        }
        p.push(acc);
    }
    p
}

/// The universal `q_i` in `F_2[w_1, …, w_max_rank]`. Stable once
/// `max_rank ≥ 2^{i+1} - 1`.
pub fn qi_universal(i: u32, max_rank: usize) -> RingElement {
    let pres = RingPresentation::stiefel_whitney(max_rank);
    let k = milnor_degree(i) as usize;
    let sums = power_sums_over_z(k, max_rank);
    let odd = sums[k].iter().filter(|(_, c)| c.rem_euclid(2) == 1).map(|(m, _)| m.clone());
    RingElement::from_monomials(&pres, odd)
}

/// A (virtual) vector bundle, described by enough data to evaluate `q_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BundleDescriptor {
    /// A sum of line bundles, given by their degree-one roots with
    /// multiplicities, plus trivial summands.
    Split { roots: Vec<(RingElement, u32)>, trivial: u32 },
    /// A total Stiefel-Whitney class `1 + w_1 + w_2 + …`. `known_through`
    /// bounds the degrees in which it is known; `None` means complete.
    Formal { total: RingElement, known_through: Option<u32> },
    /// `plus - minus`.
    Virtual { plus: Box<BundleDescriptor>, minus: Box<BundleDescriptor> },
}

impl BundleDescriptor {
    /// A single line bundle with root `w_1 = root`.
    pub fn line(root: RingElement) -> Self {
        BundleDescriptor::Split { roots: alloc::vec![(root, 1)], trivial: 0 }
    }

    /// `T RP^n ⊕ R ≅ O(1)^{n+1}`.
    pub fn tangent_rp(n: u32) -> Self {
        let p = RingPresentation::rp(n);
        let x = RingElement::generator(&p, "x").expect("rp has x");
        BundleDescriptor::Virtual {
            plus: Box::new(BundleDescriptor::Split { roots: alloc::vec![(x, n + 1)], trivial: 0 }),
            minus: Box::new(BundleDescriptor::Split { roots: Vec::new(), trivial: 1 }),
        }
    }

    pub fn whitney_sum(self, other: BundleDescriptor) -> Result<Self> {
        match (self, other) {
            (BundleDescriptor::Split { mut roots, trivial }, BundleDescriptor::Split { roots: r2, trivial: t2 }) => {
                if let (Some(a), Some(b)) = (roots.first(), r2.first()) {
                    if !a.0.presentation().same_shape(b.0.presentation()) {
                        return Err(Error::PresentationMismatch);
                    }
                }
                roots.extend(r2);
                Ok(BundleDescriptor::Split { roots, trivial: trivial + t2 })
            }
            (a, b) => Ok(BundleDescriptor::Virtual {
                plus: Box::new(a),
                minus: Box::new(BundleDescriptor::Virtual {
                    plus: Box::new(BundleDescriptor::Split { roots: Vec::new(), trivial: 0 }),
                    minus: Box::new(b),
                }),
            }),
        }
    }

    /// Checks that split roots are homogeneous of degree one.
    pub fn validate(&self) -> Result<()> {
        match self {
            BundleDescriptor::Split { roots, .. } => {
                for (r, _) in roots {
                    if !matches!(r.degree(), Degree::Homogeneous(1) | Degree::Zero) {
                        return Err(Error::InvalidArgument(format!("split root `{r}` is not of degree one")));
                    }
                }
                Ok(())
            }
            BundleDescriptor::Formal { total, .. } => {
                if total.part(0) != RingElement::one(total.presentation()) {
                    return Err(Error::InvalidArgument("a total Stiefel-Whitney class starts with 1".into()));
                }
                Ok(())
            }
            BundleDescriptor::Virtual { plus, minus } => {
                plus.validate()?;
                minus.validate()
            }
        }
    }
}

/// `q_i(E)`. Returns `None` for a descriptor that carries no classes at all
/// (only trivial summands), which evaluates to zero in any ring.
fn qi_of(i: u32, b: &BundleDescriptor) -> Result<Option<RingElement>> {
    let k = milnor_degree(i);
    match b {
        BundleDescriptor::Split { roots, .. } => {
            let mut acc: Option<RingElement> = None;
            for (root, mult) in roots {
                let sum = acc.get_or_insert_with(|| RingElement::zero(root.presentation()));
                if mult % 2 == 1 {
                    *sum = sum.try_add(&root.pow(k))?;
                } else if !sum.presentation().same_shape(root.presentation()) {
                    return Err(Error::PresentationMismatch);
                }
            }
            Ok(acc)
        }
        BundleDescriptor::Formal { total, known_through } => {
            if let Some(known) = known_through {
                if *known < k {
                    return Err(Error::MissingClasses { needed: k, known: *known });
                }
            }
            let universal = qi_universal(i, k as usize);
            let images: Vec<RingElement> = (1..=k).map(|j| total.part(j)).collect();
            universal.substitute(&images, total.presentation()).map(Some)
        }
        BundleDescriptor::Virtual { plus, minus } => {
            // q_i(-E) = q_i(E) mod 2, so a difference is a sum.
            match (qi_of(i, plus)?, qi_of(i, minus)?) {
                (Some(a), Some(b)) => a.try_add(&b).map(Some),
                (a, b) => Ok(a.or(b)),
            }
        }
    }
}

/// `q_i` of a bundle, in the ring `pres` where its classes live.
pub fn qi_of_bundle(i: u32, b: &BundleDescriptor, pres: &Arc<RingPresentation>) -> Result<RingElement> {
    b.validate()?;
    match qi_of(i, b)? {
        Some(v) if !v.presentation().same_shape(pres) => Err(Error::PresentationMismatch),
        Some(v) => Ok(v),
        None => Ok(RingElement::zero(pres)),
    }
}

/// A rank shift together with the classes `χ_i = q_i(ξ)` of a twisting
/// bundle over a base ring. Dividing the Steenrod action on the Thom module
/// by the Thom class gives `u ↦ χ_i u + Q_i u`.
#[derive(Clone, Debug)]
pub struct ThomTwist {
    base: Arc<RingPresentation>,
    rank_shift: i64,
    classes: BTreeMap<u32, RingElement>,
}

impl ThomTwist {
    pub fn new(base: &Arc<RingPresentation>, rank_shift: i64, classes: BTreeMap<u32, RingElement>) -> Result<Self> {
        for (&i, chi) in &classes {
            if !chi.presentation().same_shape(base) {
                return Err(Error::PresentationMismatch);
            }
            match chi.degree() {
                Degree::Zero => {}
                Degree::Homogeneous(d) if d == milnor_degree(i) => {}
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "twist class for Q_{i} must have degree {}",
                        milnor_degree(i)
                    )))
                }
            }
        }
        Ok(ThomTwist { base: base.clone(), rank_shift, classes })
    }

    /// The trivial twist of the given rank.
    pub fn trivial(base: &Arc<RingPresentation>, rank_shift: i64) -> Self {
        ThomTwist { base: base.clone(), rank_shift, classes: BTreeMap::new() }
    }

    pub fn base(&self) -> &Arc<RingPresentation> {
        &self.base
    }

    pub fn rank_shift(&self) -> i64 {
        self.rank_shift
    }

    pub fn class(&self, i: u32) -> Option<&RingElement> {
        self.classes.get(&i)
    }

    /// `θ^{-1} Q_i(θ u) = χ_i u + Q_i u`.
    pub fn apply(&self, ev: &mut SteenrodEvaluator, i: u32, u: &RingElement) -> Result<RingElement> {
        let chi = self.classes.get(&i).ok_or(Error::MissingTwistClass { i })?;
        let qu = ev.apply_q(i, u)?;
        chi.multiply(u)?.try_add(&qu)
    }

    /// Whether `Q_i χ_i = χ_i^2`, the condition for the twisted action to
    /// square to zero.
    pub fn is_consistent(&self, ev: &mut SteenrodEvaluator, i: u32) -> Result<bool> {
        let chi = self.classes.get(&i).ok_or(Error::MissingTwistClass { i })?;
        Ok(ev.apply_q(i, chi)? == chi.square())
    }
}

/// [`ThomTwist::apply`] with a fresh evaluator over the twist's base.
pub fn thom_apply(tw: &ThomTwist, i: u32, u: &RingElement) -> Result<RingElement> {
    tw.apply(&mut SteenrodEvaluator::new(&tw.base), i, u)
}
