//! The mod-2 Steenrod algebra.
//!
//! Elements are sums of admissible monomials `Sq^{i_1}⋯Sq^{i_k}` with
//! `i_j ≥ 2 i_{j+1}`. Arbitrary words are brought into that basis by the
//! Adem relations. The Milnor primitives are generated by the recursion
//! `Q_0 = Sq^1`, `Q_{i+1} = Sq^{2^{i+1}} Q_i + Q_i Sq^{2^{i+1}}`.
//!
//! [`SteenrodEvaluator`] applies elements to truncated polynomial rings
//! through the Cartan formula, and applies `Q_i` as a derivation when only
//! primitive images of the generators are known.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::ring::{binomial_mod2, toggle, Degree, GeneratorAction, Monomial, RingElement, RingPresentation};
use crate::{Error, Result};

/// A word `Sq^{i_1}⋯Sq^{i_k}` with all `i_j ≥ 1`. The empty word is `Sq^0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SqMonomial(Vec<u32>);

impl SqMonomial {
    /// Drops `Sq^0` factors.
    pub fn new(seq: impl IntoIterator<Item = u32>) -> Self {
        SqMonomial(seq.into_iter().filter(|&i| i > 0).collect())
    }

    pub fn identity() -> Self {
        SqMonomial(Vec::new())
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_admissible(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= 2 * w[1])
    }

    pub fn then(&self, other: &SqMonomial) -> SqMonomial {
        SqMonomial(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for SqMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        write!(f, "Sq(")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ")")
    }
}

/// An `F_2`-sum of admissible monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SteenrodElement {
    terms: BTreeSet<SqMonomial>,
}

impl SteenrodElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::from_admissible([SqMonomial::identity()])
    }

    /// `Sq^n`, admissible on its own.
    pub fn sq(n: u32) -> Self {
        Self::from_admissible([SqMonomial::new([n])])
    }

    /// Panics unless every monomial is admissible.
    pub fn from_admissible(ms: impl IntoIterator<Item = SqMonomial>) -> Self {
        let mut terms = BTreeSet::new();
        for m in ms {
            assert!(m.is_admissible(), "{m} is not admissible");
            if !terms.remove(&m) {
                terms.insert(m);
            }
        }
        SteenrodElement { terms }
    }

    pub fn terms(&self) -> &BTreeSet<SqMonomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Degree {
        let mut it = self.terms.iter().map(SqMonomial::degree);
        let Some(first) = it.next() else { return Degree::Zero };
        if it.all(|d| d == first) {
            Degree::Homogeneous(first)
        } else {
            Degree::Mixed
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        SteenrodElement { terms: self.terms.symmetric_difference(&other.terms).cloned().collect() }
    }

    /// The composite `self ∘ other`, normalized.
    pub fn compose(&self, other: &Self) -> Self {
        let words: Vec<SqMonomial> =
            self.terms.iter().flat_map(|a| other.terms.iter().map(move |b| a.then(b))).collect();
        adem_normalize(&words)
    }

    /// Parse `"Sq(3) + Sq(2,1)"`. Factors may also be written `Sq3` or `Q1`,
    /// and juxtaposed or joined by `*` to compose.
    pub fn parse(input: &str) -> Result<Self> {
        parse_words(input).map(|w| adem_normalize(&w))
    }
}

impl fmt::Display for SteenrodElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, m) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Rewrites words into the admissible basis, memoizing per word.
#[derive(Default)]
pub struct AdemNormalizer {
    memo: BTreeMap<Vec<u32>, BTreeSet<SqMonomial>>,
}

impl AdemNormalizer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn normalize(&mut self, words: &[SqMonomial]) -> SteenrodElement {
        let mut terms = BTreeSet::new();
        for w in words {
            for m in self.normalize_word(&w.0).clone() {
                if !terms.remove(&m) {
                    terms.insert(m);
                }
            }
        }
        SteenrodElement { terms }
    }

    fn normalize_word(&mut self, word: &[u32]) -> &BTreeSet<SqMonomial> {
        if !self.memo.contains_key(word) {
            let value = self.compute(word);
            self.memo.insert(word.to_vec(), value);
        }
        &self.memo[word]
    }

    fn compute(&mut self, word: &[u32]) -> BTreeSet<SqMonomial> {
        let Some(j) = (0..word.len().saturating_sub(1)).find(|&j| word[j] < 2 * word[j + 1]) else {
            return [SqMonomial(word.to_vec())].into_iter().collect();
        };
        let (a, b) = (word[j] as u64, word[j + 1] as u64);
        let mut out = BTreeSet::new();
        // Sq^a Sq^b = Σ_c C(b-1-c, a-2c) Sq^{a+b-c} Sq^c  for a < 2b.
        for c in 0..=a / 2 {
            if !binomial_mod2(b - 1 - c, a - 2 * c) {
                continue;
            }
            let mut w = Vec::with_capacity(word.len());
            w.extend_from_slice(&word[..j]);
            w.push((a + b - c) as u32);
            if c > 0 {
                w.push(c as u32);
            }
            w.extend_from_slice(&word[j + 2..]);
            for m in self.normalize_word(&w).clone() {
                if !out.remove(&m) {
                    out.insert(m);
                }
            }
        }
        out
    }
}

/// Admissible form of a raw sum of words.
pub fn adem_normalize(words: &[SqMonomial]) -> SteenrodElement {
    AdemNormalizer::new().normalize(words)
}

/// The Milnor primitive `Q_i`, of degree `2^{i+1} - 1`.
pub fn milnor_q(i: u32) -> SteenrodElement {
    let mut norm = AdemNormalizer::new();
    let mut q = SteenrodElement::sq(1);
    for j in 0..i {
        let p = SqMonomial::new([2u32 << j]);
        let words: Vec<SqMonomial> = q.terms.iter().flat_map(|m| [p.then(m), m.then(&p)]).collect();
        q = norm.normalize(&words);
    }
    q
}

/// Degree of `Q_i`.
pub fn milnor_degree(i: u32) -> u32 {
    (2u32 << i) - 1
}

/// A ring spectrum over which one asks for lifts of `Q_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TruncationGate {
    MU,
    /// The Postnikov truncation `τ_{≤r} MU`.
    TauMU(u32),
    HFp(u32),
    HZ,
}

/// Whether `Q_i` is guaranteed to act on mod-2 cohomology over the gate.
/// Over `τ_{≤r} MU` this needs `r ≥ 2^{i+1} - 2`.
pub fn q_available(gate: TruncationGate, i: u32) -> bool {
    match gate {
        TruncationGate::MU | TruncationGate::HFp(_) => true,
        TruncationGate::TauMU(r) => (2u64 << i) - 2 <= r as u64,
        TruncationGate::HZ => i == 0,
    }
}

/// `{ i : 2^{i+1} ≤ n - 1 }`, the primitives acting on the Floer cohomology
/// of `RP^n ⊂ CP^n` through its `τ_{≤n-3} MU` structure.
pub fn available_qs_for_lagrangian(n: i64) -> Result<Vec<u32>> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::BraneInfeasible { n });
    }
    Ok((0..62u32).take_while(|&i| (2i64 << i) <= n - 1).collect())
}

/// Applies Steenrod operations to elements of one presentation. Results of
/// `Sq^k` on monomials are memoized for the lifetime of the evaluator.
pub struct SteenrodEvaluator {
    pres: Arc<RingPresentation>,
    sq_memo: BTreeMap<(u32, Monomial), BTreeSet<Monomial>>,
    q_images: BTreeMap<(u32, usize), RingElement>,
}

impl SteenrodEvaluator {
    pub fn new(pres: &Arc<RingPresentation>) -> Self {
        SteenrodEvaluator { pres: pres.clone(), sq_memo: BTreeMap::new(), q_images: BTreeMap::new() }
    }

    pub fn presentation(&self) -> &Arc<RingPresentation> {
        &self.pres
    }

    fn check(&self, a: &RingElement) -> Result<()> {
        if !self.pres.same_shape(a.presentation()) {
            return Err(Error::PresentationMismatch);
        }
        if a.degree() == Degree::Mixed {
            return Err(Error::Inhomogeneous);
        }
        Ok(())
    }

    /// A single square `Sq^k(a)` by the Cartan formula.
    pub fn sq(&mut self, k: u32, a: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.sq_unchecked(k, a)
    }

    fn sq_unchecked(&mut self, k: u32, a: &RingElement) -> Result<RingElement> {
        if k == 0 {
            return Ok(a.clone());
        }
        let mut out = RingElement::zero(&self.pres);
        for m in a.terms() {
            for t in self.sq_monomial(k, m)?.clone() {
                out.add_monomial(t);
            }
        }
        Ok(out)
    }

    fn sq_monomial(&mut self, k: u32, m: &Monomial) -> Result<&BTreeSet<Monomial>> {
        let key = (k, m.clone());
        if !self.sq_memo.contains_key(&key) {
            for (g, &e) in self.pres.generators().iter().zip(m.exponents()) {
                if e > 0 && g.action != GeneratorAction::Polynomial {
                    return Err(Error::MissingAction { generator: g.name.clone(), operation: format!("Sq^{k}") });
                }
            }
            let mut out = BTreeSet::new();
            let mut exps = m.exponents().to_vec();
            self.cartan(0, k, m.exponents(), &mut exps, &mut out);
            self.sq_memo.insert(key.clone(), out);
        }
        Ok(&self.sq_memo[&key])
    }

    /// Distributes `k` over the generators: `Sq^{|t| j}(t^e) = C(e, j) t^{e+j}`.
    fn cartan(&self, idx: usize, remaining: u32, base: &[u32], exps: &mut Vec<u32>, out: &mut BTreeSet<Monomial>) {
        let gens = self.pres.generators();
        if idx == gens.len() {
            if remaining == 0 {
                let m = Monomial(exps.clone());
                if self.pres.is_nonzero(&m) {
                    toggle(out, m);
                }
            }
            return;
        }
        let (e, deg, trunc) = (base[idx], gens[idx].degree, gens[idx].truncation);
        let mut j = 0;
        while j <= e && j * deg <= remaining {
            if binomial_mod2(e as u64, j as u64) && trunc.is_none_or(|t| e + j < t) {
                exps[idx] = e + j;
                self.cartan(idx + 1, remaining - j * deg, base, exps, out);
            }
            j += 1;
        }
        exps[idx] = e;
    }

    /// Applies each admissible word right to left.
    pub fn apply(&mut self, op: &SteenrodElement, a: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        let mut out = RingElement::zero(&self.pres);
        for word in op.terms() {
            let mut v = a.clone();
            for &s in word.indices().iter().rev() {
                if v.is_zero() {
                    break;
                }
                v = self.sq_unchecked(s, &v)?;
            }
            out += &v;
        }
        Ok(out)
    }

    /// Applies a raw word sum without normalizing it first.
    pub fn apply_words(&mut self, words: &[SqMonomial], a: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        let mut out = RingElement::zero(&self.pres);
        for word in words {
            let mut v = a.clone();
            for &s in word.indices().iter().rev() {
                v = self.sq_unchecked(s, &v)?;
            }
            out += &v;
        }
        Ok(out)
    }

    /// Total square `Sq = Σ_k Sq^k`.
    pub fn total_square(&mut self, a: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        let mut out = RingElement::zero(&self.pres);
        let Degree::Homogeneous(d) = a.degree() else { return Ok(out) };
        for k in 0..=d {
            out += &self.sq_unchecked(k, a)?;
        }
        Ok(out)
    }

    /// `Q_i(a)` as a derivation: `Q_i(m) = Σ_g e_g g^{e_g - 1} Q_i(g) · rest`.
    /// Generator images come from primitive tables, or from the Cartan
    /// route for generators with the polynomial rule.
    pub fn apply_q(&mut self, i: u32, a: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        let mut out = RingElement::zero(&self.pres);
        for m in a.terms() {
            for (g, &e) in m.exponents().iter().enumerate() {
                if e % 2 == 0 {
                    continue;
                }
                let image = self.q_image(i, g)?.clone();
                let mut rest = m.clone();
                rest.0[g] -= 1;
                let rest = RingElement::monomial(&self.pres, rest);
                out += &rest.multiply(&image)?;
            }
        }
        Ok(out)
    }

    fn q_image(&mut self, i: u32, g: usize) -> Result<&RingElement> {
        if !self.q_images.contains_key(&(i, g)) {
            let gen = &self.pres.generators()[g];
            let image = match &gen.action {
                GeneratorAction::Primitives(table) => match table.get(&i) {
                    Some(ms) => RingElement::from_monomials(&self.pres, ms.iter().cloned()),
                    None => {
                        return Err(Error::MissingAction { generator: gen.name.clone(), operation: format!("Q_{i}") })
                    }
                },
                GeneratorAction::Polynomial => {
                    let t = RingElement::generator(&self.pres, &gen.name.clone())?;
                    self.apply(&milnor_q(i), &t)?
                }
                GeneratorAction::Unspecified => {
                    return Err(Error::MissingAction { generator: gen.name.clone(), operation: format!("Q_{i}") })
                }
            };
            self.q_images.insert((i, g), image);
        }
        Ok(&self.q_images[&(i, g)])
    }
}

/// `op(a)` in the presentation `p`, with a fresh evaluator.
pub fn apply(op: &SteenrodElement, a: &RingElement, p: &Arc<RingPresentation>) -> Result<RingElement> {
    SteenrodEvaluator::new(p).apply(op, a)
}

fn parse_words(input: &str) -> Result<Vec<SqMonomial>> {
    let err = |position: usize, message: &str| Error::Parse {
        input: input.to_string(),
        position,
        message: message.to_string(),
    };
    let mut words = Vec::new();
    let mut offset = 0;
    for term in input.split('+') {
        let start = offset;
        offset += term.len() + 1;
        let bytes = term.as_bytes();
        // Product of factors, each factor a sum of words.
        let mut product: Vec<SqMonomial> = vec![SqMonomial::identity()];
        let mut pos = 0;
        let mut saw_factor = false;
        let mut zero = false;
        while pos < bytes.len() {
            let c = bytes[pos];
            if c.is_ascii_whitespace() || c == b'*' {
                pos += 1;
                continue;
            }
            saw_factor = true;
            let factor: Vec<SqMonomial> = if term[pos..].starts_with("Sq(") {
                let close = term[pos..].find(')').ok_or_else(|| err(start + pos, "missing `)`"))? + pos;
                let mut seq = Vec::new();
                for part in term[pos + 3..close].split(',') {
                    let v: u32 = part.trim().parse().map_err(|_| err(start + pos, "bad Sq index"))?;
                    seq.push(v);
                }
                pos = close + 1;
                vec![SqMonomial::new(seq)]
            } else if term[pos..].starts_with("Sq") || c == b'Q' {
                let skip = if c == b'Q' { 1 } else { 2 };
                let digits_start = pos + skip;
                let mut end = digits_start;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
                let v: u32 = term[digits_start..end].parse().map_err(|_| err(start + pos, "expected an index"))?;
                pos = end;
                if c == b'Q' {
                    if v > 20 {
                        return Err(err(start + pos, "Q index too large"));
                    }
                    milnor_q(v).terms.into_iter().collect()
                } else {
                    vec![SqMonomial::new([v])]
                }
            } else if c == b'1' || c == b'0' {
                pos += 1;
                if c == b'0' {
                    zero = true;
                }
                vec![SqMonomial::identity()]
            } else {
                return Err(err(start + pos, "unexpected character"));
            };
            product = product.iter().flat_map(|a| factor.iter().map(move |b| a.then(b))).collect();
        }
        if !saw_factor {
            return Err(err(start, "empty term"));
        }
        if !zero {
            words.extend(product);
        }
    }
    Ok(words)
}
