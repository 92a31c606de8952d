//! Seiberg-Witten invariant of the link surgery manifolds `L_{m,p}(D')`.
//!
//! Two independent routes produce the invariant as an element of the group
//! ring in the classes `sigma = [S¹ × μ(B)]` and `tau = [S¹ × μ(C)]`:
//!
//! * [`sw_pipeline`] multiplies the relative invariants of the pieces: the
//!   symmetrized Alexander polynomial at `(ξ², σ², τ²)` with
//!   `ξ = σ^p τ^{mp-1}`, divided by `σ^{-1} - σ` (the torus `T² × pt` is
//!   identified with `σ`).
//! * [`sw_closed_form`] expands the closed form with four geometric blocks.
//!
//! The two agree up to a unit and per-term signs; see
//! [`compare_pipeline_closed`].

use std::collections::BTreeSet;
use std::ops::RangeInclusive;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::alexander::{delta_sym_sq, FamilyParams};
use crate::error::{Error, Result};
use crate::laurent::{gsum, Ctx, LaurentPoly, VarContext};

/// The ring `Z[sigma^±1, tau^±1]`.
pub fn sw_ring() -> Ctx {
    static CTX: OnceLock<Ctx> = OnceLock::new();
    CTX.get_or_init(|| VarContext::new(["sigma", "tau"]).unwrap()).clone()
}

fn mono(e: [i64; 2]) -> LaurentPoly {
    LaurentPoly::monomial(&sw_ring(), e.to_vec(), 1)
}

/// A class `sigma^a tau^b` with nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicClass {
    pub exponent: [i64; 2],
    #[serde(with = "crate::serde_util")]
    pub coefficient: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwResult {
    pub params: FamilyParams,
    pub poly: LaurentPoly,
    /// Support of `poly` with coefficients, in lexicographic order.
    pub basic_classes: Vec<BasicClass>,
}

impl SwResult {
    pub fn new(params: FamilyParams, poly: LaurentPoly) -> Self {
        let basic_classes = poly
            .terms()
            .map(|(e, c)| BasicClass {
                exponent: [e[0], e[1]],
                coefficient: c.clone(),
            })
            .collect();
        SwResult {
            params,
            poly,
            basic_classes,
        }
    }

    pub fn count(&self) -> usize {
        self.basic_classes.len()
    }
}

/// `ξ = σ^p τ^{mp-1}` as a monomial of [`sw_ring`].
pub fn xi(params: FamilyParams) -> LaurentPoly {
    mono([params.p(), params.mp() - 1])
}

/// Invariant from the gluing product. Requires `p >= 2`.
pub fn sw_pipeline(params: FamilyParams) -> Result<SwResult> {
    params.require_p_at_least_2()?;
    let ring = sw_ring();
    let sym = delta_sym_sq(params)?;
    // Δ^sym(ξ², σ², τ²) is the squared-variable form evaluated at (ξ, σ, τ)
    let xi = xi(params);
    let sigma = mono([1, 0]);
    let tau = mono([0, 1]);
    let glued = sym.subst(&ring, &[("x", &xi), ("s", &sigma), ("t", &tau)])?;
    let torus = &sigma.invert_vars() - &sigma;
    let poly = glued.div_exact(&torus)?;
    Ok(SwResult::new(params, poly))
}

/// The two summands of the closed form, each already multiplied by the
/// prefactor `σ^{-mp+2+2p} τ^{-mp²+mp}`. Requires `m, p >= 2`.
pub fn closed_form_summands(params: FamilyParams) -> Result<(LaurentPoly, LaurentPoly)> {
    params.require_m_at_least_2()?;
    params.require_p_at_least_2()?;
    let (m, p, mp) = (params.m(), params.p(), params.mp());
    let prefactor = mono([-mp + 2 + 2 * p, -mp * p + mp]);
    let step = mono([2 * p, 2 * mp]);
    let first = &gsum(&mono([2, 0]), mp - p - 1)? * &gsum(&step, m)?;
    let second = &(&mono([0, 2]) * &gsum(&mono([2, 2]), mp - 1)?) * &gsum(&step, m - 1)?;
    Ok((&prefactor * &first, &prefactor * &second))
}

/// Invariant transcribed from the expanded closed form. Requires `m, p >= 2`.
pub fn sw_closed_form(params: FamilyParams) -> Result<SwResult> {
    let (first, second) = closed_form_summands(params)?;
    Ok(SwResult::new(params, &first + &second))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignPair {
    pub pipeline_class: [i64; 2],
    pub pipeline: i8,
    pub closed: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompareReport {
    pub params: FamilyParams,
    pub support_match_up_to_translation: bool,
    /// `closed = pipeline + translation` on supports.
    pub translation: Option<[i64; 2]>,
    pub magnitude_match: bool,
    pub sign_pattern: Vec<SignPair>,
}

impl CompareReport {
    pub fn pass(&self) -> bool {
        self.support_match_up_to_translation && self.magnitude_match
    }
}

fn sign(c: &BigInt) -> i8 {
    if c.is_negative() {
        -1
    } else {
        1
    }
}

/// Compares the two routes up to a translation of supports and coefficient
/// magnitudes.
pub fn compare_pipeline_closed(params: FamilyParams) -> Result<CompareReport> {
    let pipe = sw_pipeline(params)?;
    let closed = sw_closed_form(params)?;
    Ok(compare_results(&pipe, &closed))
}

/// Support/magnitude comparison of two invariants in [`sw_ring`].
pub fn compare_results(pipe: &SwResult, closed: &SwResult) -> CompareReport {
    let mut report = CompareReport {
        params: pipe.params,
        support_match_up_to_translation: false,
        translation: None,
        magnitude_match: false,
        sign_pattern: Vec::new(),
    };
    let (Some((pl, _)), Some((cl, _))) = (pipe.poly.least_term(), closed.poly.least_term()) else {
        let both_zero = pipe.poly.is_zero() && closed.poly.is_zero();
        report.support_match_up_to_translation = both_zero;
        report.magnitude_match = both_zero;
        return report;
    };
    let shift = cl.sub(pl);
    let shifted = pipe.poly.shift(&shift);
    let same_support =
        shifted.len() == closed.poly.len() && shifted.support().zip(closed.poly.support()).all(|(a, b)| a == b);
    if !same_support {
        return report;
    }
    report.support_match_up_to_translation = true;
    report.translation = Some([shift[0], shift[1]]);
    report.magnitude_match = shifted
        .terms()
        .zip(closed.poly.terms())
        .all(|((_, a), (_, b))| a.abs() == b.abs());
    report.sign_pattern = pipe
        .poly
        .terms()
        .zip(closed.poly.terms())
        .map(|((e, a), (_, b))| SignPair {
            pipeline_class: [e[0], e[1]],
            pipeline: sign(a),
            closed: sign(b),
        })
        .collect();
    report
}

/// `2pm² - 2(p+1)m + 1`.
pub fn count_formula(params: FamilyParams) -> i64 {
    let (m, p) = (params.m(), params.p());
    2 * p * m * m - 2 * (p + 1) * m + 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BasicClassCount {
    pub params: FamilyParams,
    pub enumerated: usize,
    /// Only defined for `m >= 2`.
    pub formula: Option<i64>,
}

/// Number of basic classes of the pipeline invariant, the zero class
/// included. For `m >= 2` it must equal [`count_formula`].
pub fn basic_class_count(params: FamilyParams) -> Result<BasicClassCount> {
    let enumerated = sw_pipeline(params)?.count();
    let formula = (params.m() >= 2).then(|| count_formula(params));
    if let Some(f) = formula {
        if f != enumerated as i64 {
            return Err(Error::CountMismatch { enumerated, formula: f });
        }
    }
    Ok(BasicClassCount {
        params,
        enumerated,
        formula,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisjointReport {
    pub params: FamilyParams,
    pub first_terms: usize,
    pub second_terms: usize,
    pub common: Vec<[i64; 2]>,
    pub pass: bool,
}

/// The two summands of the closed form share no monomial.
pub fn disjoint_support_check(params: FamilyParams) -> Result<DisjointReport> {
    let (first, second) = closed_form_summands(params)?;
    let a: BTreeSet<_> = first.support().collect();
    let common: Vec<[i64; 2]> = second
        .support()
        .filter(|e| a.contains(e))
        .map(|e| [e[0], e[1]])
        .collect();
    Ok(DisjointReport {
        params,
        first_terms: first.len(),
        second_terms: second.len(),
        pass: common.is_empty(),
        common,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub m: u32,
    pub enumerated: usize,
    pub formula: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistinguishReport {
    pub p: u32,
    pub rows: Vec<CountRow>,
    pub strictly_increasing: bool,
    pub pairwise_distinct: bool,
}

impl DistinguishReport {
    pub fn pass(&self) -> bool {
        self.strictly_increasing && self.pairwise_distinct
    }
}

/// Basic-class counts over `ms` for fixed `p`.
pub fn distinguishability_report(p: u32, ms: RangeInclusive<u32>) -> Result<DistinguishReport> {
    if ms.is_empty() || *ms.start() < 2 {
        return Err(Error::InvalidParams(format!(
            "m range must be non-empty and start at 2 or above, got {}..={}",
            ms.start(),
            ms.end()
        )));
    }
    let mut rows = Vec::new();
    for m in ms {
        let params = FamilyParams::new(m, p)?;
        params.require_p_at_least_2()?;
        let count = basic_class_count(params)?;
        rows.push(CountRow {
            m,
            enumerated: count.enumerated,
            formula: count_formula(params),
        });
    }
    let strictly_increasing = rows.windows(2).all(|w| w[0].enumerated < w[1].enumerated);
    let distinct: BTreeSet<_> = rows.iter().map(|r| r.enumerated).collect();
    Ok(DistinguishReport {
        p,
        pairwise_distinct: distinct.len() == rows.len(),
        strictly_increasing,
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub pass: bool,
    /// Classes `g` whose partner `-g` is missing or has a different magnitude.
    pub asymmetric: Vec<[i64; 2]>,
}

/// Support invariant under `g ↦ -g` with `|a_g| = |a_{-g}|`.
pub fn conjugation_symmetry_check(r: &SwResult) -> SymmetryReport {
    conjugation_symmetry(&r.poly)
}

pub fn conjugation_symmetry(poly: &LaurentPoly) -> SymmetryReport {
    let asymmetric: Vec<[i64; 2]> = poly
        .terms()
        .filter(|(e, c)| poly.coeff(&e.neg()).abs() != c.abs())
        .map(|(e, _)| [e[0], e[1]])
        .collect();
    SymmetryReport {
        pass: asymmetric.is_empty(),
        asymmetric,
    }
}
