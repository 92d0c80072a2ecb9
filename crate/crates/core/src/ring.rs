//! Truncated graded-commutative rings over `F_2`.
//!
//! A [`RingPresentation`] is a list of polynomial generators with positive
//! degrees, optional nilpotency exponents (`t^e = 0`) and an optional global
//! degree cap. Elements are finite sets of monomials, since every
//! coefficient is `1 ∈ F_2`. Characteristic two means no sign bookkeeping.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign};

use crate::{Error, Result};

/// `C(k, i) mod 2`, by Lucas' theorem: the bits of `i` must be contained in
/// the bits of `k`.
#[inline]
pub fn binomial_mod2(k: u64, i: u64) -> bool {
    i & k == i
}

/// An exponent vector, indexed like the generators of its presentation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn unit(len: usize) -> Self {
        Monomial(vec![0; len])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// How the Steenrod algebra acts on a generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorAction {
    /// `Sq^0 t = t`, `Sq^d t = t^2` for `d = |t|`, and every other square
    /// vanishes. This is the rule for `H^*(RP^∞)` and `H^*(CP^∞)`.
    Polynomial,
    /// Only the Milnor primitives are known, through their images on this
    /// generator (`i ↦ Q_i t`), each stored as a set of monomials.
    Primitives(BTreeMap<u32, BTreeSet<Monomial>>),
    /// No action is known.
    Unspecified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    pub truncation: Option<u32>,
    pub action: GeneratorAction,
}

impl Generator {
    /// A free generator. Degrees 1 and 2 default to the polynomial square
    /// rule, every other degree has no action.
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        let action = if degree <= 2 {
            GeneratorAction::Polynomial
        } else {
            GeneratorAction::Unspecified
        };
        Generator { name: name.into(), degree, truncation: None, action }
    }

    /// Impose `t^exponent = 0`.
    pub fn truncated(mut self, exponent: u32) -> Self {
        self.truncation = Some(exponent);
        self
    }

    pub fn with_action(mut self, action: GeneratorAction) -> Self {
        self.action = action;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    generators: Vec<Generator>,
    top_degree: Option<u32>,
}

impl RingPresentation {
    /// Checks the invariants: positive degrees, exponents at least one and
    /// unique names.
    pub fn new(generators: Vec<Generator>, top_degree: Option<u32>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if g.degree == 0 {
                return Err(Error::InvalidPresentation(format!("generator `{}` has degree 0", g.name)));
            }
            if g.truncation == Some(0) {
                return Err(Error::InvalidPresentation(format!(
                    "generator `{}` has truncation exponent 0",
                    g.name
                )));
            }
            if !is_identifier(&g.name) {
                return Err(Error::InvalidPresentation(format!("bad generator name `{}`", g.name)));
            }
            if !seen.insert(g.name.as_str()) {
                return Err(Error::InvalidPresentation(format!("duplicate generator `{}`", g.name)));
            }
        }
        let p = RingPresentation { generators, top_degree };
        for g in &p.generators {
            if let GeneratorAction::Primitives(table) = &g.action {
                for (&i, image) in table {
                    p.check_primitive_image(g, i, image)?;
                }
            }
        }
        Ok(p)
    }

    /// `H^*(RP^n; F_2) = F_2[x]/(x^{n+1})`.
    pub fn rp(n: u32) -> Arc<Self> {
        Arc::new(Self::new(vec![Generator::new("x", 1).truncated(n + 1)], None).expect("valid"))
    }

    /// `H^*(CP^n; F_2) = F_2[c]/(c^{n+1})`, `|c| = 2`.
    pub fn cp(n: u32) -> Arc<Self> {
        Arc::new(Self::new(vec![Generator::new("c", 2).truncated(n + 1)], None).expect("valid"))
    }

    /// `F_2[t1, …, tm]` with all `|t_j| = 1`.
    pub fn poly(m: usize) -> Arc<Self> {
        let gens = (1..=m).map(|j| Generator::new(format!("t{j}"), 1)).collect();
        Arc::new(Self::new(gens, None).expect("valid"))
    }

    /// `F_2[w1, …, wm]` with `|w_j| = j` and no Steenrod action.
    pub fn stiefel_whitney(m: usize) -> Arc<Self> {
        let gens = (1..=m)
            .map(|j| Generator::new(format!("w{j}"), j as u32).with_action(GeneratorAction::Unspecified))
            .collect();
        Arc::new(Self::new(gens, None).expect("valid"))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn top_degree(&self) -> Option<u32> {
        self.top_degree
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Same generators, degrees and relations. Action tables are ignored, so
    /// elements of a presentation remain usable after actions are attached.
    pub fn same_shape(&self, other: &RingPresentation) -> bool {
        self.top_degree == other.top_degree
            && self.generators.len() == other.generators.len()
            && self
                .generators
                .iter()
                .zip(&other.generators)
                .all(|(a, b)| a.name == b.name && a.degree == b.degree && a.truncation == b.truncation)
    }

    /// Attach `Q_i t = image` to the generator `name`.
    pub fn with_primitive(mut self, name: &str, i: u32, image: &RingElement) -> Result<Self> {
        if !self.same_shape(image.presentation()) {
            return Err(Error::PresentationMismatch);
        }
        let idx = self
            .index_of(name)
            .ok_or_else(|| Error::InvalidPresentation(format!("unknown generator `{name}`")))?;
        self.check_primitive_image(&self.generators[idx], i, &image.terms)?;
        let g = &mut self.generators[idx];
        match &mut g.action {
            GeneratorAction::Primitives(table) => {
                table.insert(i, image.terms.clone());
            }
            other => {
                let mut table = BTreeMap::new();
                table.insert(i, image.terms.clone());
                *other = GeneratorAction::Primitives(table);
            }
        }
        Ok(self)
    }

    fn check_primitive_image(&self, g: &Generator, i: u32, image: &BTreeSet<Monomial>) -> Result<()> {
        let want = g.degree + (2u32 << i) - 1;
        for m in image {
            if m.0.len() != self.len() || self.monomial_degree(m) != want {
                return Err(Error::InvalidPresentation(format!(
                    "image of Q_{i} on `{}` must be homogeneous of degree {want}",
                    g.name
                )));
            }
        }
        Ok(())
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.0.iter().zip(&self.generators).map(|(&e, g)| e * g.degree).sum()
    }

    /// Whether a monomial survives the truncation relations.
    pub fn is_nonzero(&self, m: &Monomial) -> bool {
        let bounded = m
            .0
            .iter()
            .zip(&self.generators)
            .all(|(&e, g)| g.truncation.is_none_or(|t| e < t));
        bounded && self.top_degree.is_none_or(|top| self.monomial_degree(m) <= top)
    }

    /// All nonzero monomials of degree `d`, in ascending monomial order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        if self.top_degree.is_some_and(|top| d > top) {
            return out;
        }
        let mut exps = vec![0u32; self.len()];
        self.enumerate(0, d, &mut exps, &mut out);
        out.sort();
        out
    }

    fn enumerate(&self, idx: usize, remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if idx == self.len() {
            if remaining == 0 {
                out.push(Monomial(exps.clone()));
            }
            return;
        }
        let g = &self.generators[idx];
        let mut e = 0;
        while e * g.degree <= remaining && g.truncation.is_none_or(|t| e < t) {
            exps[idx] = e;
            self.enumerate(idx + 1, remaining - e * g.degree, exps, out);
            e += 1;
        }
        exps[idx] = 0;
    }
}

/// Number of nonzero monomials of degree `d`.
pub fn graded_dimension(p: &RingPresentation, d: u32) -> u64 {
    if p.top_degree.is_some_and(|top| d > top) {
        return 0;
    }
    let d = d as usize;
    let mut counts = vec![0u64; d + 1];
    counts[0] = 1;
    for g in &p.generators {
        let deg = g.degree as usize;
        let mut next = vec![0u64; d + 1];
        for (base, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut e = 0usize;
            while base + e * deg <= d && g.truncation.is_none_or(|t| (e as u32) < t) {
                next[base + e * deg] += c;
                e += 1;
            }
        }
        counts = next;
    }
    counts[d]
}

/// The degree of an element, if it has one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Zero,
    Homogeneous(u32),
    Mixed,
}

/// An element of a truncated ring: a normalized set of monomials.
#[derive(Clone, Debug)]
pub struct RingElement {
    pres: Arc<RingPresentation>,
    terms: BTreeSet<Monomial>,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.pres.same_shape(&other.pres)
    }
}

impl Eq for RingElement {}

impl RingElement {
    pub fn zero(pres: &Arc<RingPresentation>) -> Self {
        RingElement { pres: pres.clone(), terms: BTreeSet::new() }
    }

    pub fn one(pres: &Arc<RingPresentation>) -> Self {
        Self::monomial(pres, Monomial::unit(pres.len()))
    }

    /// The generator called `name`.
    pub fn generator(pres: &Arc<RingPresentation>, name: &str) -> Result<Self> {
        let idx = pres
            .index_of(name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown generator `{name}`")))?;
        let mut m = Monomial::unit(pres.len());
        m.0[idx] = 1;
        Ok(Self::monomial(pres, m))
    }

    /// A single monomial, or zero if it is killed by a relation.
    pub fn monomial(pres: &Arc<RingPresentation>, m: Monomial) -> Self {
        assert_eq!(m.0.len(), pres.len(), "exponent vector length must match the presentation");
        let mut terms = BTreeSet::new();
        if pres.is_nonzero(&m) {
            terms.insert(m);
        }
        RingElement { pres: pres.clone(), terms }
    }

    /// Sum of monomials with `F_2` cancellation of repeats.
    pub fn from_monomials(pres: &Arc<RingPresentation>, ms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut e = Self::zero(pres);
        for m in ms {
            assert_eq!(m.0.len(), pres.len(), "exponent vector length must match the presentation");
            if pres.is_nonzero(&m) {
                toggle(&mut e.terms, m);
            }
        }
        e
    }

    pub fn presentation(&self) -> &Arc<RingPresentation> {
        &self.pres
    }

    pub fn terms(&self) -> &BTreeSet<Monomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Degree {
        let mut iter = self.terms.iter().map(|m| self.pres.monomial_degree(m));
        let Some(first) = iter.next() else { return Degree::Zero };
        if iter.all(|d| d == first) {
            Degree::Homogeneous(first)
        } else {
            Degree::Mixed
        }
    }

    /// The degree-`d` component.
    pub fn part(&self, d: u32) -> Self {
        let terms = self.terms.iter().filter(|m| self.pres.monomial_degree(m) == d).cloned().collect();
        RingElement { pres: self.pres.clone(), terms }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.pres, &other.pres) || self.pres.same_shape(&other.pres) {
            Ok(())
        } else {
            Err(Error::PresentationMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let terms = self.terms.symmetric_difference(&other.terms).cloned().collect();
        Ok(RingElement { pres: self.pres.clone(), terms })
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut terms = BTreeSet::new();
        for a in &self.terms {
            for b in &other.terms {
                let m = Monomial(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect());
                if self.pres.is_nonzero(&m) {
                    toggle(&mut terms, m);
                }
            }
        }
        Ok(RingElement { pres: self.pres.clone(), terms })
    }

    /// Frobenius: `(Σ m)^2 = Σ m^2` in characteristic two.
    pub fn square(&self) -> Self {
        let ms = self.terms.iter().map(|m| Monomial(m.0.iter().map(|e| 2 * e).collect()));
        Self::from_monomials(&self.pres, ms)
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.pres);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.multiply(&base).expect("same presentation");
            }
            base = base.square();
            k >>= 1;
        }
        acc
    }

    /// Ring homomorphism determined by `gen_j ↦ images[j]`, all images in
    /// one target presentation.
    pub fn substitute(&self, images: &[RingElement], target: &Arc<RingPresentation>) -> Result<Self> {
        if images.len() != self.pres.len() {
            return Err(Error::InvalidArgument(format!(
                "substitution needs {} images, got {}",
                self.pres.len(),
                images.len()
            )));
        }
        for img in images {
            if !img.pres.same_shape(target) {
                return Err(Error::PresentationMismatch);
            }
        }
        let mut out = Self::zero(target);
        for m in &self.terms {
            let mut term = Self::one(target);
            for (e, img) in m.0.iter().zip(images) {
                if *e > 0 {
                    term = term.multiply(&img.pow(*e))?;
                }
            }
            out += &term;
        }
        Ok(out)
    }

    /// Parse `"x^4"`, `"w1^3 + w1*w2 + w3"`, `"1"` or `"0"`.
    pub fn parse(pres: &Arc<RingPresentation>, input: &str) -> Result<Self> {
        let err = |position: usize, message: &str| Error::Parse {
            input: input.to_string(),
            position,
            message: message.to_string(),
        };
        let mut out = Self::zero(pres);
        let mut offset = 0;
        for term in input.split('+') {
            let start = offset;
            offset += term.len() + 1;
            let trimmed = term.trim();
            if trimmed.is_empty() {
                return Err(err(start, "empty term"));
            }
            if trimmed == "0" {
                continue;
            }
            let mut m = Monomial::unit(pres.len());
            for factor in trimmed.split('*') {
                let factor = factor.trim();
                if factor == "1" {
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => {
                        let e: u32 = e.trim().parse().map_err(|_| err(start, "bad exponent"))?;
                        (n.trim(), e)
                    }
                    None => (factor, 1),
                };
                let idx = pres.index_of(name).ok_or_else(|| err(start, "unknown generator"))?;
                m.0[idx] += exp;
            }
            if pres.is_nonzero(&m) {
                toggle(&mut out.terms, m);
            }
        }
        Ok(out)
    }

    pub(crate) fn add_monomial(&mut self, m: Monomial) {
        if self.pres.is_nonzero(&m) {
            toggle(&mut self.terms, m);
        }
    }
}

pub(crate) fn toggle(set: &mut BTreeSet<Monomial>, m: Monomial) {
    if !set.remove(&m) {
        set.insert(m);
    }
}

impl AddAssign<&RingElement> for RingElement {
    /// Panics if the presentations differ; use [`RingElement::try_add`] to
    /// get an error instead.
    fn add_assign(&mut self, rhs: &RingElement) {
        self.check(rhs).expect("ring elements from different presentations");
        for m in &rhs.terms {
            toggle(&mut self.terms, m.clone());
        }
    }
}

impl Add<&RingElement> for &RingElement {
    type Output = RingElement;

    fn add(self, rhs: &RingElement) -> RingElement {
        self.try_add(rhs).expect("ring elements from different presentations")
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, pres: &RingPresentation, m: &Monomial) -> fmt::Result {
    if m.is_unit() {
        return write!(f, "1");
    }
    let mut first = true;
    for (g, &e) in pres.generators.iter().zip(&m.0) {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{}", g.name)?;
        } else {
            write!(f, "{}^{}", g.name, e)?;
        }
    }
    Ok(())
}

impl fmt::Display for RingElement {
    /// Terms in descending monomial order, so `w1^3 + w1*w2 + w3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, m) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write_monomial(f, &self.pres, m)?;
        }
        Ok(())
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn el(p: &Arc<RingPresentation>, s: &str) -> RingElement {
        RingElement::parse(p, s).unwrap()
    }

    #[test]
    fn multiply_in_truncated_polynomial_ring() {
        let p = RingPresentation::rp(3);
        assert_eq!(el(&p, "x").multiply(&el(&p, "x")).unwrap(), el(&p, "x^2"));
        assert!(el(&p, "x^3").multiply(&el(&p, "x")).unwrap().is_zero());
        let a = el(&p, "1 + x");
        assert_eq!(a.multiply(&a).unwrap(), el(&p, "1 + x^2"));
    }

    #[test]
    fn mismatched_presentations_are_rejected() {
        let a = el(&RingPresentation::rp(3), "x");
        let b = el(&RingPresentation::cp(3), "c");
        assert_eq!(a.multiply(&b), Err(Error::PresentationMismatch));
        assert_eq!(a.try_add(&b), Err(Error::PresentationMismatch));
    }

    #[test]
    fn binomials_mod_two() {
        assert!(!binomial_mod2(2, 1));
        assert!(binomial_mod2(3, 1));
        for k in 0..50 {
            assert!(binomial_mod2(k, 0));
        }
    }

    #[test]
    fn graded_dimensions() {
        assert_eq!(graded_dimension(&RingPresentation::rp(5), 3), 1);
        assert_eq!(graded_dimension(&RingPresentation::rp(5), 6), 0);
        assert_eq!(graded_dimension(&RingPresentation::cp(3), 3), 0);
        assert_eq!(graded_dimension(&RingPresentation::cp(3), 6), 1);
        // t1^2, t1*t2, t2^2
        assert_eq!(graded_dimension(&RingPresentation::poly(2), 2), 3);
        let p = RingPresentation::poly(4);
        for d in 0..12 {
            assert_eq!(graded_dimension(&p, d), p.monomials_of_degree(d).len() as u64);
        }
    }

    #[test]
    fn display_and_parse() {
        let p = RingPresentation::stiefel_whitney(3);
        let q = el(&p, "w3 + w1*w2 + w1^3");
        assert_eq!(q.to_string(), "w1^3 + w1*w2 + w3");
        assert_eq!(el(&p, "w1 + w1").to_string(), "0");
        assert_eq!(RingElement::one(&p).to_string(), "1");
        assert!(RingElement::parse(&p, "w4").is_err());
        assert!(RingElement::parse(&p, "w1 + ").is_err());
    }

    #[test]
    fn degree_and_parts() {
        let p = RingPresentation::stiefel_whitney(3);
        let total = el(&p, "1 + w1 + w2 + w1^2");
        assert_eq!(total.degree(), Degree::Mixed);
        assert_eq!(total.part(2), el(&p, "w2 + w1^2"));
        assert_eq!(total.part(2).degree(), Degree::Homogeneous(2));
        assert_eq!(RingElement::zero(&p).degree(), Degree::Zero);
    }

    #[test]
    fn top_degree_cap() {
        let gens = vec![Generator::new("y1", 1), Generator::new("y2", 2)];
        let p = Arc::new(RingPresentation::new(gens, Some(3)).unwrap());
        assert!(el(&p, "y1*y2").multiply(&el(&p, "y1")).unwrap().is_zero());
        assert_eq!(graded_dimension(&p, 3), 2);
        assert_eq!(graded_dimension(&p, 4), 0);
    }

    #[test]
    fn invalid_presentations() {
        assert!(RingPresentation::new(vec![Generator::new("x", 0)], None).is_err());
        assert!(RingPresentation::new(vec![Generator::new("x", 1).truncated(0)], None).is_err());
        assert!(RingPresentation::new(vec![Generator::new("x", 1), Generator::new("x", 2)], None).is_err());
    }

    #[test]
    fn substitution_is_a_ring_map() {
        let w = RingPresentation::stiefel_whitney(2);
        let t = RingPresentation::poly(2);
        let e1 = el(&t, "t1 + t2");
        let e2 = el(&t, "t1*t2");
        let f = el(&w, "w1^2 + w2");
        assert_eq!(f.substitute(&[e1, e2], &t).unwrap(), el(&t, "t1^2 + t1*t2 + t2^2"));
    }

    fn arb_element(m: usize, max_deg: u32) -> impl Strategy<Value = Vec<Vec<u32>>> {
        prop::collection::vec(prop::collection::vec(0..=max_deg, m), 0..6)
    }

    fn build(p: &Arc<RingPresentation>, raw: Vec<Vec<u32>>) -> RingElement {
        RingElement::from_monomials(p, raw.into_iter().map(Monomial))
    }

    proptest! {
        #[test]
        fn commutative_and_associative(a in arb_element(3, 3), b in arb_element(3, 3), c in arb_element(3, 3)) {
            let gens = vec![
                Generator::new("a", 1).truncated(5),
                Generator::new("b", 2),
                Generator::new("c", 1).truncated(3),
            ];
            let p = Arc::new(RingPresentation::new(gens, None).unwrap());
            let (a, b, c) = (build(&p, a), build(&p, b), build(&p, c));
            prop_assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap());
            prop_assert_eq!(
                a.multiply(&b).unwrap().multiply(&c).unwrap(),
                a.multiply(&b.multiply(&c).unwrap()).unwrap()
            );
            let left = a.multiply(&(&b + &c)).unwrap();
            prop_assert_eq!(left, &a.multiply(&b).unwrap() + &a.multiply(&c).unwrap());
        }

        #[test]
        fn squares_of_degree_one_classes_are_frobenius(raw in prop::collection::vec(any::<bool>(), 4)) {
            let p = RingPresentation::poly(4);
            let ms = raw.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| {
                let mut m = Monomial::unit(4);
                m.0[j] = 1;
                m
            });
            let a = RingElement::from_monomials(&p, ms);
            let sq = a.multiply(&a).unwrap();
            prop_assert_eq!(&sq, &a.square());
            if !a.is_zero() {
                prop_assert_eq!(sq.degree(), Degree::Homogeneous(2));
            }
        }

        #[test]
        fn parse_display_round_trip(a in arb_element(3, 4)) {
            let p = RingPresentation::poly(3);
            let a = build(&p, a);
            prop_assert_eq!(RingElement::parse(&p, &a.to_string()).unwrap(), a);
        }
    }
}
