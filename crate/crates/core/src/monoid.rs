//! Numerical monoids and bounded checks of the prime, primary and primal
//! properties in them and in their power monoids.
//!
//! The universal statements behind these properties cannot be decided by a
//! finite scan. Every checker here inspects the pairs `(b, c)` up to a bound
//! and either returns a concrete violation or reports that none exists up to
//! that bound.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::divisibility::quotient_candidates;
use crate::error::{Error, Result};
use crate::set::{interval, normalize, sumset, FiniteSet, NormalizedSet, DEFAULT_CAP};

/// Largest bound accepted by pair scans in power-monoid contexts.
pub const POWER_SCAN_LIMIT: usize = 16;

/// Largest element count of `p` whose decompositions are enumerated.
const DECOMPOSITION_LIMIT: usize = 14;

/// A co-finite submonoid of ℕ₀, given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalMonoid {
    generators: Vec<u64>,
    minimal: Vec<u64>,
    // membership below the conductor; everything from the conductor on is in
    table: Vec<bool>,
}

impl NumericalMonoid {
    /// ```
    /// use power_monoid::NumericalMonoid;
    ///
    /// let n = NumericalMonoid::new(&[3, 5]).unwrap();
    /// assert_eq!(n.frobenius(), Some(7));
    /// assert_eq!(n.gaps(), vec![1, 2, 4, 7]);
    /// assert!(NumericalMonoid::new(&[4, 6]).is_err());
    /// ```
    pub fn new(generators: &[u64]) -> Result<Self> {
        if generators.is_empty() || generators.contains(&0) {
            return Err(Error::BadGenerators);
        }
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if gens.iter().fold(0, |g, &x| g.gcd(&x)) != 1 {
            return Err(Error::NotCofinite(gens));
        }
        let a1 = gens[0] as usize;
        let mut table = Vec::new();
        let mut run = 0usize;
        let conductor = loop {
            let x = table.len();
            let member = x == 0 || gens.iter().any(|&g| g as usize <= x && table[x - g as usize]);
            table.push(member);
            run = if member { run + 1 } else { 0 };
            if run >= a1 {
                break x + 1 - a1;
            }
        };
        table.truncate(conductor);
        let mut monoid = NumericalMonoid {
            generators: gens,
            minimal: Vec::new(),
            table,
        };
        monoid.minimal = monoid
            .generators
            .iter()
            .copied()
            .filter(|&g| !(1..g).any(|x| monoid.contains(x) && monoid.contains(g - x)))
            .collect();
        Ok(monoid)
    }

    pub fn naturals() -> Self {
        Self::new(&[1]).expect("1 generates ℕ₀")
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// The atoms of the monoid.
    pub fn minimal_generators(&self) -> &[u64] {
        &self.minimal
    }

    pub fn contains(&self, x: u64) -> bool {
        self.table.get(x as usize).copied().unwrap_or(true)
    }

    /// Least `c` with `[c, ∞) ⊆ N`.
    pub fn conductor(&self) -> u64 {
        self.table.len() as u64
    }

    /// `max ℕ₀ \ N`, absent for ℕ₀.
    pub fn frobenius(&self) -> Option<u64> {
        self.conductor().checked_sub(1)
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor()).filter(|&x| !self.contains(x)).collect()
    }

    pub fn is_naturals(&self) -> bool {
        self.table.is_empty()
    }

    /// `a |_N b`.
    pub fn divides(&self, a: u64, b: u64) -> bool {
        b >= a && self.contains(b - a)
    }
}

impl fmt::Display for NumericalMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.minimal.iter().map(u64::to_string).collect();
        write!(f, "<{}>", gens.join(","))
    }
}

impl Serialize for NumericalMonoid {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn parse_generators(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|g| {
            g.trim().parse().map_err(|_| Error::Parse {
                input: s.to_string(),
                reason: format!("{g:?} is not a nonnegative integer"),
            })
        })
        .collect()
}

/// The monoid in which a check runs: a numerical monoid `N`, or
/// `P_fin,0(N)` / `P_fin(N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Context {
    Numerical(NumericalMonoid),
    Power { restricted: bool, base: NumericalMonoid },
}

/// An element of a [`Context`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Int(u64),
    Set(FiniteSet),
}

impl Element {
    fn size(&self) -> usize {
        match self {
            Element::Int(v) => *v as usize,
            Element::Set(s) => s.max(),
        }
    }

    #[cfg(test)]
    fn as_int(&self) -> u64 {
        match self {
            Element::Int(v) => *v,
            Element::Set(_) => unreachable!("set in a numerical-monoid context"),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Int(v) => write!(f, "{v}"),
            Element::Set(s) => write!(f, "{s}"),
        }
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Element::Int(v) => serializer.serialize_u64(*v),
            Element::Set(s) => serializer.collect_str(s),
        }
    }
}

impl From<u64> for Element {
    fn from(v: u64) -> Self {
        Element::Int(v)
    }
}

impl From<FiniteSet> for Element {
    fn from(s: FiniteSet) -> Self {
        Element::Set(s)
    }
}

impl From<NormalizedSet> for Element {
    fn from(s: NormalizedSet) -> Self {
        Element::Set(s.into_set())
    }
}

impl FromStr for Context {
    type Err = Error;

    /// `fin0`, `fin`, `nm:G1,G2,...`, and `fin0:G1,...` / `fin:G1,...` for
    /// power monoids of a numerical monoid.
    fn from_str(s: &str) -> Result<Self> {
        let (head, gens) = match s.split_once(':') {
            Some((h, g)) => (h, Some(NumericalMonoid::new(&parse_generators(g)?)?)),
            None => (s, None),
        };
        match (head, gens) {
            ("nm", Some(n)) => Ok(Context::Numerical(n)),
            ("fin0" | "fin", base) => Ok(Context::Power {
                restricted: head == "fin0",
                base: base.unwrap_or_else(NumericalMonoid::naturals),
            }),
            _ => Err(Error::Parse {
                input: s.to_string(),
                reason: "expected fin0, fin, nm:GENS, fin0:GENS or fin:GENS".into(),
            }),
        }
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = |n: &NumericalMonoid| {
            n.minimal_generators()
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Context::Numerical(n) => write!(f, "nm:{}", gens(n)),
            Context::Power { restricted, base } => {
                write!(f, "{}", if *restricted { "fin0" } else { "fin" })?;
                if !base.is_naturals() {
                    write!(f, ":{}", gens(base))?;
                }
                Ok(())
            }
        }
    }
}

impl Context {
    pub fn naturals() -> Self {
        Context::Numerical(NumericalMonoid::naturals())
    }

    pub fn fin0() -> Self {
        Context::Power {
            restricted: true,
            base: NumericalMonoid::naturals(),
        }
    }

    pub fn fin() -> Self {
        Context::Power {
            restricted: false,
            base: NumericalMonoid::naturals(),
        }
    }

    /// Parses an integer or a set literal, whichever this context holds.
    pub fn parse_element(&self, s: &str) -> Result<Element> {
        match self {
            Context::Numerical(_) => s.trim().parse().map(Element::Int).map_err(|_| Error::Parse {
                input: s.to_string(),
                reason: "expected a nonnegative integer".into(),
            }),
            Context::Power { .. } => s.parse().map(Element::Set),
        }
    }

    pub fn contains(&self, e: &Element) -> bool {
        match (self, e) {
            (Context::Numerical(n), Element::Int(v)) => n.contains(*v),
            (Context::Power { restricted, base }, Element::Set(s)) => {
                (!restricted || s.contains(0)) && s.iter().all(|x| base.contains(x as u64))
            }
            _ => false,
        }
    }

    /// The only unit of every supported context is its identity.
    pub fn is_unit(&self, e: &Element) -> bool {
        match e {
            Element::Int(v) => *v == 0,
            Element::Set(s) => s.len() == 1 && s.contains(0),
        }
    }

    pub fn base(&self) -> &NumericalMonoid {
        match self {
            Context::Numerical(n) => n,
            Context::Power { base, .. } => base,
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        match (a, b) {
            (Element::Int(x), Element::Int(y)) => Ok(Element::Int(x + y)),
            (Element::Set(x), Element::Set(y)) => Ok(Element::Set(sumset(x, y)?)),
            _ => Err(Error::Domain("cannot add an integer and a set".into())),
        }
    }

    /// `n·a`, the `n`-fold sum `a + ... + a`.
    pub fn multiple(&self, n: usize, a: &Element) -> Result<Element> {
        match a {
            Element::Int(x) => Ok(Element::Int(n as u64 * x)),
            Element::Set(s) => {
                let mut acc = FiniteSet::singleton(0)?;
                for _ in 0..n {
                    acc = sumset(&acc, s)?;
                }
                Ok(Element::Set(acc))
            }
        }
    }

    /// `a | b` in this context.
    ///
    /// In a power monoid over `N` the candidates `Q(a, b) ∩ N` contain every
    /// quotient lying in `N`, so `a | b` iff `a + (Q(a, b) ∩ N) = b`.
    pub fn divides(&self, a: &Element, b: &Element) -> bool {
        match (self, a, b) {
            (Context::Numerical(n), Element::Int(x), Element::Int(y)) => n.divides(*x, *y),
            (Context::Power { restricted, base }, Element::Set(t), Element::Set(s)) => {
                let Some(mut q) = quotient_candidates(t, s) else {
                    return false;
                };
                if !base.is_naturals() {
                    let kept = q.iter().filter(|&x| base.contains(x as u64));
                    match FiniteSet::with_cap(kept, q.cap()) {
                        Ok(k) => q = k,
                        Err(_) => return false,
                    }
                }
                if *restricted && !q.contains(0) {
                    return false;
                }
                sumset(t, &q).is_ok_and(|sum| sum == *s)
            }
            _ => false,
        }
    }

    /// Every ordered pair `(b', c')` of context elements with `b' + c' = p`.
    pub fn decompositions(&self, p: &Element) -> Result<Vec<(Element, Element)>> {
        match (self, p) {
            (Context::Numerical(n), Element::Int(v)) => Ok((0..=*v)
                .filter(|&x| n.contains(x) && n.contains(v - x))
                .map(|x| (Element::Int(x), Element::Int(v - x)))
                .collect()),
            (Context::Power { .. }, Element::Set(s)) => {
                let (shift, p0) = normalize(s);
                let mut out = Vec::new();
                for (b0, c0) in normalized_decompositions(&p0)? {
                    for sb in 0..=shift {
                        let b = Element::Set(b0.shift_up(sb)?);
                        let c = Element::Set(c0.shift_up(shift - sb)?);
                        if self.contains(&b) && self.contains(&c) {
                            out.push((b, c));
                        }
                    }
                }
                Ok(out)
            }
            _ => Err(Error::Domain(format!("{p} is not an element of {self}"))),
        }
    }

    /// Context elements with maximum (or value) at most `bound`, grouped by
    /// maximum and in ascending packed order inside each group.
    fn elements_by_max(&self, bound: usize) -> Result<Vec<Vec<Element>>> {
        match self {
            Context::Numerical(n) => Ok((0..=bound as u64)
                .map(|v| if n.contains(v) { vec![Element::Int(v)] } else { vec![] })
                .collect()),
            Context::Power { restricted, base } => {
                if bound > POWER_SCAN_LIMIT {
                    return Err(Error::Domain(format!(
                        "bound {bound} exceeds the pair-scan limit {POWER_SCAN_LIMIT} for power monoids"
                    )));
                }
                let allowed = (0..=bound as u64)
                    .filter(|&x| base.contains(x))
                    .fold(0u64, |acc, x| acc | 1 << x);
                Ok((0..=bound)
                    .map(|m| {
                        if allowed >> m & 1 == 0 {
                            return vec![];
                        }
                        let top = 1u64 << m;
                        let (fixed, free) = if *restricted {
                            (top | 1, allowed & (top - 1) & !1)
                        } else {
                            (top, allowed & (top - 1))
                        };
                        ascending_submasks(free)
                            .map(|sub| Element::Set(FiniteSet::from_mask(fixed | sub).expect("nonempty")))
                            .collect()
                    })
                    .collect())
            }
        }
    }

    fn check_candidate(&self, p: &Element) -> Result<()> {
        if !self.contains(p) {
            return Err(Error::Precondition(format!("{p} is not an element of {self}")));
        }
        if self.is_unit(p) {
            return Err(Error::Precondition(format!("{p} is invertible in {self}")));
        }
        Ok(())
    }

    /// First pair `(b, c)` in scan order for which `test` reports a failure.
    /// Pairs are ordered by `max b + max c`, then by `b`, then by `c`.
    fn scan<F>(&self, bound: usize, test: F) -> Result<Option<(Element, Element, String)>>
    where
        F: Fn(&Element, &Element) -> Option<String> + Sync,
    {
        let by_max = self.elements_by_max(bound)?;
        for total in 0..=2 * bound {
            let lo = total.saturating_sub(bound);
            let hi = total.min(bound);
            let firsts: Vec<&Element> = (lo..=hi).flat_map(|m| by_max[m].iter()).collect();
            let found = firsts.par_iter().find_map_first(|&b| {
                by_max[total - b.size()]
                    .iter()
                    .find_map(|c| test(b, c).map(|note| (b.clone(), c.clone(), note)))
            });
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

/// Ordered pairs `(B, C)` of normalized sets with `B + C = p`.
fn normalized_decompositions(p: &NormalizedSet) -> Result<Vec<(FiniteSet, FiniteSet)>> {
    if p.len() > DECOMPOSITION_LIMIT {
        return Err(Error::Domain(format!(
            "{p} has more than {DECOMPOSITION_LIMIT} elements; decompositions are not enumerated"
        )));
    }
    let cap = p.cap();
    let rest: Vec<usize> = p.iter().skip(1).collect();
    let pick = |elems: &[usize], mask: u64| {
        let chosen = elems.iter().enumerate().filter(move |(i, _)| mask >> i & 1 == 1);
        FiniteSet::with_cap(std::iter::once(0).chain(chosen.map(|(_, &x)| x)), cap)
    };
    let mut out = Vec::new();
    for bm in 0u64..1 << rest.len() {
        let b = pick(&rest, bm)?;
        let Some(q) = quotient_candidates(&b, p) else {
            continue;
        };
        if !q.contains(0) {
            continue;
        }
        let qrest: Vec<usize> = q.iter().skip(1).collect();
        for cm in 0u64..1 << qrest.len() {
            let c = pick(&qrest, cm)?;
            if sumset(&b, &c)? == **p {
                out.push((b.clone(), c));
            }
        }
    }
    Ok(out)
}

fn ascending_submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = (cur != mask).then(|| cur.wrapping_sub(mask) & mask);
        Some(cur)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "property")]
pub enum Property {
    Prime,
    Primary { n_max: usize },
    Primal,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Prime => f.write_str("prime"),
            Property::Primary { .. } => f.write_str("primary"),
            Property::Primal => f.write_str("primal"),
        }
    }
}

/// A pair `(b, c)` showing that `p` lacks a property in `context`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    #[serde(flatten)]
    pub property: Property,
    pub context: String,
    pub p: Element,
    pub b: Element,
    pub c: Element,
    pub note: String,
}

/// The violation type returned by the primal checks.
pub type PrimalViolation = Violation;

impl Violation {
    /// Re-checks the violation from scratch in `context`.
    pub fn verify(&self, context: &Context) -> bool {
        let Ok(sum) = context.add(&self.b, &self.c) else {
            return false;
        };
        if !context.divides(&self.p, &sum) {
            return false;
        }
        match self.property {
            Property::Prime => {
                !context.divides(&self.p, &self.b) && !context.divides(&self.p, &self.c)
            }
            Property::Primary { n_max } => {
                !context.divides(&self.p, &self.b)
                    && (1..=n_max).all(|n| {
                        context
                            .multiple(n, &self.c)
                            .map_or(true, |nc| !context.divides(&self.p, &nc))
                    })
            }
            Property::Primal => context.decompositions(&self.p).is_ok_and(|ds| {
                !ds.iter()
                    .any(|(b1, c1)| context.divides(b1, &self.b) && context.divides(c1, &self.c))
            }),
        }
    }
}

/// Outcome of a bounded scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum BoundedVerdict {
    Violation(Violation),
    NoViolation { bound: usize },
}

impl BoundedVerdict {
    pub fn violation(&self) -> Option<&Violation> {
        match self {
            BoundedVerdict::Violation(v) => Some(v),
            BoundedVerdict::NoViolation { .. } => None,
        }
    }

    pub fn is_violation(&self) -> bool {
        self.violation().is_some()
    }
}

fn verdict(
    property: Property,
    context: &Context,
    p: &Element,
    bound: usize,
    found: Option<(Element, Element, String)>,
) -> BoundedVerdict {
    match found {
        Some((b, c, note)) => BoundedVerdict::Violation(Violation {
            property,
            context: context.to_string(),
            p: p.clone(),
            b,
            c,
            note,
        }),
        None => BoundedVerdict::NoViolation { bound },
    }
}

/// Looks for `b, c` with `p | b + c`, `p ∤ b` and `p ∤ c`.
///
/// ```
/// use power_monoid::{is_prime_bounded, Context, Element};
///
/// let ctx: Context = "nm:3,5".parse().unwrap();
/// let v = is_prime_bounded(&Element::Int(3), &ctx, 40).unwrap();
/// let w = v.violation().unwrap();
/// assert_eq!((&w.b, &w.c), (&Element::Int(5), &Element::Int(10)));
/// ```
pub fn is_prime_bounded(p: &Element, context: &Context, bound: usize) -> Result<BoundedVerdict> {
    context.check_candidate(p)?;
    let found = context.scan(bound, |b, c| {
        let sum = context.add(b, c).ok()?;
        (context.divides(p, &sum) && !context.divides(p, b) && !context.divides(p, c))
            .then(|| "p divides b + c but neither b nor c".to_string())
    })?;
    Ok(verdict(Property::Prime, context, p, bound, found))
}

/// Looks for `b, c` with `p | b + c`, `p ∤ b` and `p ∤ n·c` for every
/// `1 <= n <= n_max`.
pub fn is_primary_bounded(
    p: &Element,
    context: &Context,
    bound: usize,
    n_max: usize,
) -> Result<BoundedVerdict> {
    context.check_candidate(p)?;
    let found = context.scan(bound, |b, c| {
        let sum = context.add(b, c).ok()?;
        if !context.divides(p, &sum) || context.divides(p, b) {
            return None;
        }
        let hit = (1..=n_max).any(|n| {
            context
                .multiple(n, c)
                .is_ok_and(|nc| context.divides(p, &nc))
        });
        (!hit).then(|| format!("p divides b + c, not b, and no n·c with n <= {n_max}"))
    })?;
    Ok(verdict(Property::Primary { n_max }, context, p, bound, found))
}

/// Looks for `b, c` with `p | b + c` such that no decomposition
/// `p = b' + c'` has `b' | b` and `c' | c`.
pub fn is_primal_bounded(p: &Element, context: &Context, bound: usize) -> Result<BoundedVerdict> {
    context.check_candidate(p)?;
    let decompositions = context.decompositions(p)?;
    let found = context.scan(bound, |b, c| {
        let sum = context.add(b, c).ok()?;
        if !context.divides(p, &sum) {
            return None;
        }
        let splits = decompositions
            .iter()
            .any(|(b1, c1)| context.divides(b1, b) && context.divides(c1, c));
        (!splits).then(|| {
            format!(
                "p divides b + c but none of its {} decompositions p = b' + c' has b' | b and c' | c",
                decompositions.len()
            )
        })
    })?;
    Ok(verdict(Property::Primal, context, p, bound, found))
}

/// Both sides of `P + [0, M] = [0, 2M] = {0, M} + [0, M]` for `M = max P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalIdentity {
    pub p: NormalizedSet,
    pub left: FiniteSet,
    pub middle: FiniteSet,
    pub right: FiniteSet,
}

impl IntervalIdentity {
    pub fn holds(&self) -> bool {
        self.left == self.middle && self.middle == self.right
    }
}

pub fn primal_witness_interval_identity(p: &NormalizedSet) -> Result<IntervalIdentity> {
    let m = p.max();
    if m == 0 {
        return Err(Error::Precondition("max P must be at least 1".into()));
    }
    let block = interval_like(p, 0, m)?;
    let ends = FiniteSet::with_cap([0, m], p.cap())?;
    Ok(IntervalIdentity {
        p: p.clone(),
        left: sumset(p, &block)?,
        middle: interval_like(p, 0, 2 * m)?,
        right: sumset(&ends, &block)?,
    })
}

fn interval_like(p: &FiniteSet, lo: usize, hi: usize) -> Result<FiniteSet> {
    crate::set::interval_with_cap(lo, hi, p.cap().max(DEFAULT_CAP))
}

/// `{0, b−1} + ([m, 2m] \ {m+b})` next to `[m, 2m+b−1]`.
///
/// The two agree exactly when `m ≥ 2b − 1`. Below that, `m + 2b − 1` is
/// missing from the sum: it would need `m + b` from the punctured interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapIdentity {
    pub b: usize,
    pub m: usize,
    pub pair: FiniteSet,
    pub punctured: FiniteSet,
    pub sum: FiniteSet,
    pub interval: FiniteSet,
}

impl GapIdentity {
    pub fn holds(&self) -> bool {
        self.sum == self.interval
    }
}

/// ```
/// use power_monoid::primal_witness_gap_identity;
///
/// let g = primal_witness_gap_identity(2, 5).unwrap();
/// assert_eq!(g.punctured.to_string(), "{5,6,8,9,10}");
/// assert_eq!(g.sum.to_string(), "{5,6,7,8,9,10,11}");
/// assert!(g.holds());
/// ```
pub fn primal_witness_gap_identity(b: usize, m: usize) -> Result<GapIdentity> {
    if !(b >= 2 && m > b) {
        return Err(Error::Precondition(format!("need m > b >= 2, got b = {b}, m = {m}")));
    }
    let pair = FiniteSet::new([0, b - 1])?;
    let punctured = interval(m, 2 * m)?
        .without(m + b)
        .expect("[m, 2m] has more than one element");
    Ok(GapIdentity {
        b,
        m,
        sum: sumset(&pair, &punctured)?,
        interval: interval(m, 2 * m + b - 1)?,
        pair,
        punctured,
    })
}

/// Result of the search for a non-primal element of a numerical monoid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum NumericalPrimality {
    /// `N = ℕ₀`, where every nonzero element is primal.
    PreSchreier,
    NotPrimal { m: u64, violation: Violation },
}

/// For `N ≠ ℕ₀`, takes its two smallest atoms `a₁ < a₂`, the least `m` with
/// `a₁ |_N m·a₂`, and returns `p = a₁`, `b = a₂`, `c = (m−1)·a₂`.
pub fn non_primal_in_numerical_monoid(n: &NumericalMonoid) -> NumericalPrimality {
    if n.is_naturals() {
        return NumericalPrimality::PreSchreier;
    }
    let atoms = n.minimal_generators();
    let (a1, a2) = (atoms[0], atoms[1]);
    let m = (2..).find(|&m| n.divides(a1, m * a2)).expect("m·a2 passes the conductor");
    let context = Context::Numerical(n.clone());
    let violation = Violation {
        property: Property::Primal,
        context: context.to_string(),
        p: Element::Int(a1),
        b: Element::Int(a2),
        c: Element::Int((m - 1) * a2),
        note: format!("{a1} is an atom dividing {m}·{a2} but neither {a2} nor {}", (m - 1) * a2),
    };
    debug_assert!(violation.verify(&context));
    NumericalPrimality::NotPrimal { m, violation }
}

/// The split `p = b' + c'` with `b' ≤ b`, `c' ≤ c` that makes every nonzero
/// element of a nonnegative cone `G_{≥0}` of a subgroup of ℚ primal. Values
/// are integers at a common scale; `None` when `p > b + c`.
pub fn rank_one_split(p: u64, b: u64, c: u64) -> Option<(u64, u64)> {
    if p > b + c {
        None
    } else if p > b {
        Some((b, p - b))
    } else {
        Some((p, 0))
    }
}
