//! Sparse multivariate Laurent polynomials over arbitrary-precision integers.
//!
//! A [`LaurentPoly`] is a finite map from exponent vectors (possibly negative)
//! to nonzero [`BigInt`] coefficients, tied to a [`VarContext`] that fixes the
//! variable order. The map is a `BTreeMap`, so iteration always follows the
//! lexicographic monomial order on the declared variable order. That order is
//! used for exact division, unit normalization and every serialized form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Name of the monomial order recorded in serialized output.
pub const MONOMIAL_ORDER: &str = "lex";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("operands live in different variable contexts")]
    ContextMismatch,
    #[error("expected a single monomial with coefficient 1")]
    NotMonomial,
    #[error("geometric sum length must be nonnegative, got {0}")]
    NegativeLength(i64),
    #[error("no image given for variable `{0}`")]
    MissingImage(String),
    #[error("image given for unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("image of `{0}` is not a monomial with coefficient +1 or -1")]
    NonMonomialImage(String),
    #[error("divisor does not divide the dividend exactly")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero polynomial has no unit normalization")]
    ZeroPolynomial,
    #[error("invalid variable context: {0}")]
    InvalidContext(String),
    #[error("exponent vector has length {got}, context has {expected} variables")]
    ExponentLength { expected: usize, got: usize },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, LaurentError>;

/// Ordered, immutable list of distinct variable names.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Vec<String>,
}

/// Shared handle to a [`VarContext`].
pub type Ctx = Arc<VarContext>;

impl VarContext {
    pub fn new<I, S>(names: I) -> Result<Ctx>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(LaurentError::InvalidContext("empty variable name".into()));
            }
            if !n.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(LaurentError::InvalidContext(format!("bad variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(LaurentError::InvalidContext(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Arc::new(VarContext { names }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn same_ctx(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

/// Exponent vector of a monomial. Ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(exps: Vec<i64>) -> Self {
        ExponentVector(exps)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

/// A signed monomial `±x^e`, i.e. a unit of the Laurent ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Unit {
    pub negative: bool,
    pub exponent: ExponentVector,
}

impl Unit {
    pub fn one(n: usize) -> Self {
        Unit {
            negative: false,
            exponent: ExponentVector::zero(n),
        }
    }

    pub fn is_one(&self) -> bool {
        !self.negative && self.exponent.is_zero()
    }

    pub fn to_poly(&self, ctx: &Ctx) -> LaurentPoly {
        let c = if self.negative { -BigInt::one() } else { BigInt::one() };
        LaurentPoly::monomial(ctx, self.exponent.clone(), c)
    }

    pub fn inverse(&self) -> Unit {
        Unit {
            negative: self.negative,
            exponent: self.exponent.neg(),
        }
    }

    pub fn mul(&self, other: &Unit) -> Unit {
        Unit {
            negative: self.negative ^ other.negative,
            exponent: self.exponent.add(&other.exponent),
        }
    }

    /// Renders the unit in the polynomial text format of `ctx`.
    pub fn display(&self, ctx: &Ctx) -> String {
        self.to_poly(ctx).to_string()
    }
}

/// Exact sparse Laurent polynomial in the variables of its context.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    ctx: Ctx,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ctx(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl LaurentPoly {
    pub fn zero(ctx: &Ctx) -> Self {
        LaurentPoly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, BigInt::one())
    }

    pub fn constant(ctx: &Ctx, c: impl Into<BigInt>) -> Self {
        Self::monomial(ctx, ExponentVector::zero(ctx.len()), c)
    }

    /// `c * x^e`. Panics if `e` does not match the context length.
    pub fn monomial(ctx: &Ctx, e: impl Into<ExponentVector>, c: impl Into<BigInt>) -> Self {
        let e = e.into();
        assert_eq!(e.len(), ctx.len(), "exponent vector does not match context");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// The variable `name` raised to the first power.
    pub fn var(ctx: &Ctx, name: &str) -> Result<Self> {
        let i = ctx
            .index_of(name)
            .ok_or_else(|| LaurentError::UnknownVariable(name.to_string()))?;
        let mut e = vec![0; ctx.len()];
        e[i] = 1;
        Ok(Self::monomial(ctx, e, 1))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, E, C>(ctx: &Ctx, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, C)>,
        E: Into<ExponentVector>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(ctx);
        for (e, c) in terms {
            let e = e.into();
            if e.len() != ctx.len() {
                return Err(LaurentError::ExponentLength {
                    expected: ctx.len(),
                    got: e.len(),
                });
            }
            p.add_term(e, c.into());
        }
        Ok(p)
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(e, c)| e.is_zero() && c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExponentVector) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    /// Order-least term.
    pub fn least_term(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.iter().next()
    }

    /// Order-greatest term.
    pub fn greatest_term(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// The single term, if this is a monomial.
    pub fn as_monomial(&self) -> Option<(&ExponentVector, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn add_term(&mut self, e: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ctx(&self, other: &Self) -> Result<()> {
        if same_ctx(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(LaurentError::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        let (mut acc, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (e, c) in &small.terms {
            acc.add_term(e.clone(), c.clone());
        }
        Ok(acc)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        let mut acc = self.clone();
        for (e, c) in &other.terms {
            acc.add_term(e.clone(), -c);
        }
        Ok(acc)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        let mut acc = Self::zero(&self.ctx);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                acc.add_term(ea.add(eb), ca * cb);
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(&self.ctx);
        }
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &ExponentVector) -> Self {
        assert_eq!(shift.len(), self.ctx.len());
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.add(shift), c.clone())).collect(),
        }
    }

    pub fn mul_unit(&self, u: &Unit) -> Self {
        let p = self.shift(&u.exponent);
        if u.negative {
            -p
        } else {
            p
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power of a signed monomial; negative exponents are allowed.
    pub fn monomial_pow(&self, k: i64) -> Result<Self> {
        let (e, c) = self.as_monomial().ok_or(LaurentError::NotMonomial)?;
        let c = if c.is_one() {
            BigInt::one()
        } else if *c == -BigInt::one() {
            if k % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            }
        } else {
            return Err(LaurentError::NotMonomial);
        };
        Ok(Self::monomial(&self.ctx, e.scale(k), c))
    }

    /// Ring homomorphism sending each variable to a signed monomial of `target`.
    ///
    /// Every variable of `self`'s context needs an image; each image must be a
    /// single term with coefficient ±1.
    pub fn subst(&self, target: &Ctx, images: &[(&str, &LaurentPoly)]) -> Result<Self> {
        let mut table: Vec<Option<(ExponentVector, bool)>> = vec![None; self.ctx.len()];
        for (name, img) in images {
            let i = self
                .ctx
                .index_of(name)
                .ok_or_else(|| LaurentError::UnknownVariable(name.to_string()))?;
            if !same_ctx(img.ctx(), target) {
                return Err(LaurentError::ContextMismatch);
            }
            let (e, c) = img
                .as_monomial()
                .ok_or_else(|| LaurentError::NonMonomialImage(name.to_string()))?;
            let negative = if c.is_one() {
                false
            } else if *c == -BigInt::one() {
                true
            } else {
                return Err(LaurentError::NonMonomialImage(name.to_string()));
            };
            table[i] = Some((e.clone(), negative));
        }
        let table: Vec<(ExponentVector, bool)> = table
            .into_iter()
            .enumerate()
            .map(|(i, t)| t.ok_or_else(|| LaurentError::MissingImage(self.ctx.names[i].clone())))
            .collect::<Result<_>>()?;

        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut img = ExponentVector::zero(target.len());
            let mut negative = false;
            for (k, (ie, ineg)) in e.as_slice().iter().zip(&table) {
                if *k != 0 {
                    img = img.add(&ie.scale(*k));
                    negative ^= *ineg && k % 2 != 0;
                }
            }
            out.add_term(img, if negative { -c } else { c.clone() });
        }
        Ok(out)
    }

    /// Exact quotient `self / den`.
    ///
    /// Repeatedly cancels the order-least term of the running remainder
    /// against the order-least term of `den`. Every quotient exponent is
    /// confined to the box spanned by the per-variable degree ranges of the
    /// operands, so the loop is finite; leaving the box or meeting a
    /// non-divisible coefficient means no exact quotient exists.
    pub fn div_exact(&self, den: &Self) -> Result<Self> {
        self.check_ctx(den)?;
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        let n = self.ctx.len();
        let (num_lo, num_hi) = self.degree_box();
        let (den_lo, den_hi) = den.degree_box();
        let lo: Vec<i64> = (0..n).map(|i| num_lo[i] - den_lo[i]).collect();
        let hi: Vec<i64> = (0..n).map(|i| num_hi[i] - den_hi[i]).collect();
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Err(LaurentError::NotDivisible);
        }

        let (d_exp, d_coef) = den.least_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((r_exp, r_coef)) = rem.pop_first() {
            let q_exp = r_exp.sub(&d_exp);
            let in_box = q_exp
                .as_slice()
                .iter()
                .enumerate()
                .all(|(i, &e)| lo[i] <= e && e <= hi[i]);
            if !in_box {
                return Err(LaurentError::NotDivisible);
            }
            let (q_coef, r) = r_coef.div_rem(&d_coef);
            if !r.is_zero() {
                return Err(LaurentError::NotDivisible);
            }
            // the least term of den cancels r_exp exactly; subtract the rest
            for (e, c) in den.terms.iter().skip(1) {
                let key = q_exp.add(e);
                let v = rem.entry(key.clone()).or_insert_with(BigInt::zero);
                *v -= &q_coef * c;
                if v.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.insert(q_exp, q_coef);
        }
        Ok(LaurentPoly {
            ctx: self.ctx.clone(),
            terms: quot,
        })
    }

    /// Per-variable minimum and maximum exponents. Panics on zero.
    pub fn degree_box(&self) -> (Vec<i64>, Vec<i64>) {
        let n = self.ctx.len();
        let mut lo = vec![i64::MAX; n];
        let mut hi = vec![i64::MIN; n];
        assert!(!self.is_zero(), "degree box of zero polynomial");
        for e in self.terms.keys() {
            for i in 0..n {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        (lo, hi)
    }

    /// The bar involution: every exponent vector negated.
    pub fn invert_vars(&self) -> Self {
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.neg(), c.clone())).collect(),
        }
    }

    /// Canonical representative of the unit class of `self`.
    ///
    /// Divides by the monomial of the order-least term, with the sign chosen
    /// so that the order-greatest coefficient is positive. Returns the
    /// canonical form `q` and the unit `u` with `self = u * q`.
    pub fn normalize_unit(&self) -> Result<(Self, Unit)> {
        let (least, _) = self.least_term().ok_or(LaurentError::ZeroPolynomial)?;
        let (_, top) = self.greatest_term().unwrap();
        let unit = Unit {
            negative: top.is_negative(),
            exponent: least.clone(),
        };
        Ok((self.mul_unit(&unit.inverse()), unit))
    }

    /// Returns `u` with `self = u * other` when the two differ by a unit.
    pub fn unit_equivalent(&self, other: &Self) -> Result<Option<Unit>> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(if self.is_zero() && other.is_zero() {
                Some(Unit::one(self.ctx.len()))
            } else {
                None
            });
        }
        let (a, ua) = self.normalize_unit()?;
        let (b, ub) = other.normalize_unit()?;
        Ok((a == b).then(|| ua.mul(&ub.inverse())))
    }

    /// Largest absolute coefficient, zero for the zero polynomial.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Parses the text format produced by `Display`.
    pub fn parse(ctx: &Ctx, text: &str) -> Result<Self> {
        let s: String = text.split_whitespace().collect();
        if s.is_empty() {
            return Err(LaurentError::Parse("empty input".into()));
        }
        let mut p = Self::zero(ctx);
        let mut rest = s.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' if !first => (false, &rest[1..]),
                _ if first => (false, rest),
                _ => return Err(LaurentError::Parse(format!("expected sign before `{rest}`"))),
            };
            first = false;
            // a sign directly after `^` belongs to the exponent
            let bytes = body.as_bytes();
            let mut end = body.len();
            for i in 1..bytes.len() {
                if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                    end = i;
                    break;
                }
            }
            let (term, tail) = body.split_at(end);
            let (e, c) = parse_term(ctx, term)?;
            p.add_term(e, if negative { -c } else { c });
            rest = tail;
        }
        Ok(p)
    }
}

fn parse_term(ctx: &Ctx, term: &str) -> Result<(ExponentVector, BigInt)> {
    if term.is_empty() {
        return Err(LaurentError::Parse("empty term".into()));
    }
    let mut coef = BigInt::one();
    let mut exps = vec![0i64; ctx.len()];
    for (k, factor) in term.split('*').enumerate() {
        if factor.is_empty() {
            return Err(LaurentError::Parse(format!("empty factor in `{term}`")));
        }
        if factor.as_bytes()[0].is_ascii_digit() {
            if k != 0 {
                return Err(LaurentError::Parse(format!("coefficient must lead in `{term}`")));
            }
            coef = factor
                .parse()
                .map_err(|_| LaurentError::Parse(format!("bad coefficient `{factor}`")))?;
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => (
                n,
                e.parse::<i64>()
                    .map_err(|_| LaurentError::Parse(format!("bad exponent `{e}`")))?,
            ),
            None => (factor, 1),
        };
        let i = ctx
            .index_of(name)
            .ok_or_else(|| LaurentError::Parse(format!("unknown variable `{name}`")))?;
        exps[i] += exp;
    }
    Ok((ExponentVector(exps), coef))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{}", c.abs())?;
            for (name, x) in self.ctx.names.iter().zip(e.as_slice()) {
                if *x != 0 {
                    write!(f, "*{name}^{x}")?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    order: String,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    e: Vec<i64>,
    c: String,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            vars: self.ctx.names.clone(),
            order: MONOMIAL_ORDER.to_string(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    e: e.0.clone(),
                    c: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let raw = PolyJson::deserialize(deserializer)?;
        if raw.order != MONOMIAL_ORDER {
            return Err(D::Error::custom(format!("unsupported monomial order `{}`", raw.order)));
        }
        let ctx = VarContext::new(raw.vars).map_err(D::Error::custom)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                t.c.parse::<BigInt>()
                    .map(|c| (t.e, c))
                    .map_err(|_| D::Error::custom(format!("bad coefficient `{}`", t.c)))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        LaurentPoly::from_terms(&ctx, terms).map_err(D::Error::custom)
    }
}

/// `1 + u + ... + u^(k-1)` for a monomial `u` with coefficient 1.
pub fn gsum(u: &LaurentPoly, k: i64) -> Result<LaurentPoly> {
    let (e, c) = u.as_monomial().ok_or(LaurentError::NotMonomial)?;
    if !c.is_one() {
        return Err(LaurentError::NotMonomial);
    }
    if k < 0 {
        return Err(LaurentError::NegativeLength(k));
    }
    let mut out = LaurentPoly::zero(u.ctx());
    for i in 0..k {
        out.add_term(e.scale(i), BigInt::one());
    }
    Ok(out)
}

macro_rules! impl_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics if the operands have different contexts.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("context mismatch")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, checked_add);
impl_binop!(Sub, sub, checked_sub);
impl_binop!(Mul, mul, checked_mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}
