//! Integral homology bookkeeping for the link surgery gluings.
//!
//! Boundary curves are integer vectors over the generators
//! `(μ(A), μ(B), μ(C), λ(A), λ(B), λ(C))`. In the first homology of a link
//! exterior the longitudes are expressed through the meridians by linking
//! numbers, `λ(K) = Σ_{J≠K} lk(K, J) μ(J)`; for the Hopf link `A ∪ B` this
//! gives `λ(A) = μ(B)` and `λ(B) = μ(A)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::alexander::{linking_numbers, FamilyParams};
use crate::error::{Error, Result};
use crate::matrix::{content, snf, IntMatrix};

pub const GENERATORS: [&str; 6] = ["mu_A", "mu_B", "mu_C", "lambda_A", "lambda_B", "lambda_C"];

/// Index of a component: 0 = A, 1 = B, 2 = C.
pub type Component = usize;

pub const A: Component = 0;
pub const B: Component = 1;
pub const C: Component = 2;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveClass {
    pub coeffs: [i64; 6],
}

impl CurveClass {
    pub fn zero() -> Self {
        CurveClass { coeffs: [0; 6] }
    }

    pub fn meridian(k: Component) -> Self {
        let mut c = Self::zero();
        c.coeffs[k] = 1;
        c
    }

    pub fn longitude(k: Component) -> Self {
        let mut c = Self::zero();
        c.coeffs[3 + k] = 1;
        c
    }

    /// `a * self + b * other`
    pub fn combine(&self, a: i64, other: &CurveClass, b: i64) -> Self {
        let mut c = Self::zero();
        for i in 0..6 {
            c.coeffs[i] = a * self.coeffs[i] + b * other.coeffs[i];
        }
        c
    }

    /// Components whose meridian or longitude appears.
    fn components(&self) -> Vec<Component> {
        (0..3)
            .filter(|&k| self.coeffs[k] != 0 || self.coeffs[3 + k] != 0)
            .collect()
    }
}

impl std::fmt::Display for CurveClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (c, g) in self.coeffs.iter().zip(GENERATORS) {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if *c < 0 { '-' } else { '+' })?;
            } else if *c < 0 {
                write!(f, "-")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{g}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Linking numbers of a link with at most three components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkModel {
    pub components: usize,
    /// Symmetric, zero diagonal.
    pub linking: [[i64; 3]; 3],
}

impl LinkModel {
    /// `A ∪ B` with `lk(A, B) = 1`.
    pub fn hopf() -> Self {
        LinkModel {
            components: 2,
            linking: [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
        }
    }

    /// `L_{m,p} = A ∪ B ∪ C`.
    pub fn l_mp(params: FamilyParams) -> Self {
        let (ab, ac, bc) = linking_numbers(params);
        LinkModel {
            components: 3,
            linking: [[0, ab, ac], [ab, 0, bc], [ac, bc, 0]],
        }
    }

    /// Class of `curve` in `H₁` of the exterior, over the meridians.
    pub fn in_meridians(&self, curve: &CurveClass) -> Vec<i64> {
        let mut out = vec![0; self.components];
        for k in 0..self.components {
            out[k] += curve.coeffs[k];
            for (o, lk) in out.iter_mut().zip(&self.linking[k]) {
                *o += curve.coeffs[3 + k] * lk;
            }
        }
        out
    }
}

/// What is glued into the `i`-th boundary torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Piece {
    /// `E(1) \ νf`, with `H¹ = 0`.
    EllipticComplement,
    /// `T² × S² \ ν(T² × pt) = T² × D²`, with `H¹ = Z²`.
    TorusTimesDisk,
}

impl Piece {
    pub fn tag(&self) -> &'static str {
        match self {
            Piece::EllipticComplement => "(E(1), f = C1 x C2)",
            Piece::TorusTimesDisk => "(T^2 x S^2, T^2 x {pt})",
        }
    }

    /// Whether `S¹ × β` bounds in the piece, i.e. whether the piece has
    /// nonzero `H¹` and so contributes to the kernel of the inclusion.
    pub fn kills_beta(&self) -> bool {
        matches!(self, Piece::TorusTimesDisk)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GluingKind {
    /// Hopf link data producing `E(1)_p`.
    D,
    /// Three-component data producing the fiber sum `L_{m,p}(D')`.
    DPrime,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GluingPair {
    pub alpha: CurveClass,
    pub beta: CurveClass,
    /// `α · β` on the boundary torus; always 1.
    pub intersection: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GluingData {
    pub kind: GluingKind,
    pub pairs: Vec<GluingPair>,
    pub pieces: Vec<Piece>,
    pub piece_tags: Vec<String>,
}

impl GluingData {
    /// Validates that pair `i` lives on the `i`-th boundary torus and that
    /// `α_i · β_i = 1` there.
    pub fn new(kind: GluingKind, pairs: Vec<(CurveClass, CurveClass)>, pieces: Vec<Piece>) -> Result<Self> {
        if pairs.len() != pieces.len() {
            return Err(Error::AssertionFailure("one piece per link component".into()));
        }
        let mut out = Vec::with_capacity(pairs.len());
        for (i, (alpha, beta)) in pairs.into_iter().enumerate() {
            for c in [&alpha, &beta] {
                if c.components().iter().any(|&k| k != i) {
                    return Err(Error::AssertionFailure(format!(
                        "curve {c} is not on boundary torus {i}"
                    )));
                }
            }
            let (a_mu, a_la) = (alpha.coeffs[i], alpha.coeffs[3 + i]);
            let (b_mu, b_la) = (beta.coeffs[i], beta.coeffs[3 + i]);
            let intersection = a_mu * b_la - a_la * b_mu;
            if intersection != 1 {
                return Err(Error::AssertionFailure(format!(
                    "pair {i}: α·β = {intersection}, expected 1"
                )));
            }
            out.push(GluingPair {
                alpha,
                beta,
                intersection,
            });
        }
        let piece_tags = pieces.iter().map(|p| p.tag().to_string()).collect();
        Ok(GluingData {
            kind,
            pairs: out,
            pieces,
            piece_tags,
        })
    }
}

/// The gluing data `D` (two pairs) or `D'` (three pairs).
pub fn build_gluing_data(kind: GluingKind, params: FamilyParams) -> Result<GluingData> {
    let p = params.p();
    let mu = CurveClass::meridian;
    let la = CurveClass::longitude;
    let mut pairs = vec![(mu(A), la(A)), (mu(B), la(B).combine(1, &mu(B), -p))];
    let mut pieces = vec![Piece::EllipticComplement, Piece::TorusTimesDisk];
    if kind == GluingKind::DPrime {
        pairs.push((la(C), mu(C).combine(-1, &CurveClass::zero(), 0)));
        pieces.push(Piece::EllipticComplement);
    }
    GluingData::new(kind, pairs, pieces)
}

/// Finitely presented abelian group `Z^n / (row span of relations)`.
#[derive(Clone, Debug)]
pub struct AbelianPresentation {
    pub generators: Vec<String>,
    pub relations: IntMatrix,
}

impl AbelianPresentation {
    pub fn new(generators: Vec<String>, relations: Vec<Vec<i64>>) -> Self {
        let n = generators.len();
        let relations = if relations.is_empty() {
            IntMatrix::zeros(0, n)
        } else {
            IntMatrix::from_rows(&relations)
        };
        assert_eq!(relations.ncols(), n, "relation width must match generator count");
        AbelianPresentation { generators, relations }
    }

    /// Free rank and torsion coefficients (those greater than 1).
    pub fn structure(&self) -> (usize, Vec<BigInt>) {
        let s = snf(&self.relations);
        let torsion = s.diagonal().into_iter().filter(|d| d > &BigInt::from(1)).collect();
        (self.generators.len() - s.rank(), torsion)
    }

    /// Rank of the relation lattice.
    pub fn relation_rank(&self) -> usize {
        snf(&self.relations).rank()
    }

    /// Whether `v` lies in the relation lattice.
    pub fn is_relation(&self, v: &[i64]) -> bool {
        if self.relations.nrows() == 0 {
            return v.iter().all(|&x| x == 0);
        }
        let s = snf(&self.relations);
        let v: Vec<BigInt> = v.iter().map(|&x| x.into()).collect();
        let w = s.v.apply_row(&v);
        let diag = s.diagonal();
        w.iter().enumerate().all(|(i, wi)| match diag.get(i) {
            Some(d) if !d.is_zero() => wi.is_multiple_of(d),
            _ => wi.is_zero(),
        })
    }

    pub fn equivalent(&self, a: &[i64], b: &[i64]) -> bool {
        let diff: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.is_relation(&diff)
    }

    /// Rewrites `v` without generator `g`, using a relation whose `g`
    /// coefficient is a unit.
    pub fn eliminate(&self, v: &[i64], g: usize) -> Result<Vec<i64>> {
        let rows = self.relations.to_i64_rows();
        let rel = rows
            .iter()
            .find(|r| r[g].abs() == 1)
            .ok_or_else(|| Error::AssertionFailure(format!("no unit relation for {}", self.generators[g])))?;
        let k = v[g] * rel[g];
        Ok(v.iter().zip(rel).map(|(x, r)| x - k * r).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TcClassReport {
    pub params: FamilyParams,
    /// `[C]` over `(μ(A), μ(B))` in the Hopf link exterior.
    pub c_class: [i64; 2],
    /// The relation imposed by the gluing, over `(μ(A), μ(B))`.
    pub relation: [i64; 2],
    /// `[C]` after eliminating `μ(A)`.
    pub reduced: CurveClass,
    pub equals_mu_b: bool,
}

/// `[T_C] = [S¹ × C]` reduces to `[S¹ × μ(B)] = [f_p]`.
pub fn class_of_tc(params: FamilyParams) -> Result<TcClassReport> {
    let hopf = LinkModel::hopf();
    let data = build_gluing_data(GluingKind::D, params)?;
    let relations: Vec<Vec<i64>> = data
        .pairs
        .iter()
        .zip(&data.pieces)
        .filter(|(_, piece)| piece.kills_beta())
        .map(|(pair, _)| hopf.in_meridians(&pair.beta))
        .collect();
    let pres = AbelianPresentation::new(vec!["mu_A".into(), "mu_B".into()], relations);

    // C is a curve in the Hopf exterior; its class is its linking with A and B
    let lk = LinkModel::l_mp(params).linking;
    let c = [lk[C][A], lk[C][B]];
    let reduced_vec = pres.eliminate(&c, A)?;
    let mut reduced = CurveClass::zero();
    reduced.coeffs[..2].copy_from_slice(&reduced_vec);
    let equals_mu_b = reduced == CurveClass::meridian(B) && pres.equivalent(&c, &[0, 1]);
    if !equals_mu_b {
        return Err(Error::AssertionFailure(format!("[C] reduces to {reduced}, not mu_B")));
    }
    let r = pres.relations.to_i64_rows();
    Ok(TcClassReport {
        params,
        c_class: c,
        relation: [r[0][0], r[0][1]],
        reduced,
        equals_mu_b,
    })
}

/// Presentation of `H₁(N)`, `N` the exterior of `L_{m,p}`, modulo the
/// curves bounding in the glued pieces of `D'`.
fn dprime_presentation(params: FamilyParams) -> Result<AbelianPresentation> {
    let model = LinkModel::l_mp(params);
    let data = build_gluing_data(GluingKind::DPrime, params)?;
    let relations = data
        .pairs
        .iter()
        .zip(&data.pieces)
        .filter(|(_, piece)| piece.kills_beta())
        .map(|(pair, _)| model.in_meridians(&pair.beta))
        .collect();
    Ok(AbelianPresentation::new(
        vec!["mu_A".into(), "mu_B".into(), "mu_C".into()],
        relations,
    ))
}

/// `(a, b)` with `ξ = σ^a τ^b`: `μ(A)` rewritten over `μ(B)`, `μ(C)`.
pub fn xi_relation(params: FamilyParams) -> Result<(i64, i64)> {
    let pres = dprime_presentation(params)?;
    let v = pres.eliminate(&[1, 0, 0], A)?;
    let out = (v[1], v[2]);
    let expected = (params.p(), params.mp() - 1);
    if v[0] != 0 || out != expected {
        return Err(Error::AssertionFailure(format!("xi = {out:?}, expected {expected:?}")));
    }
    Ok(out)
}

/// `true` iff the entries have gcd 1.
pub fn primitivity_check(v: &[i64]) -> Result<bool> {
    match content(v) {
        0 => Err(Error::ZeroVector),
        g => Ok(g == 1),
    }
}

/// Matrix induced on `H₁(T³)` by the logarithmic-transform gluing map.
pub fn framing_matrix(p: i64) -> IntMatrix {
    IntMatrix::from_rows(&[vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, -p]])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FramingReport {
    pub p: i64,
    pub matrix: Vec<Vec<i64>>,
    pub det: i64,
    pub unimodular: bool,
}

pub fn framing_matrix_check(p: i64) -> Result<FramingReport> {
    if p < 1 {
        return Err(Error::InvalidParams(format!("need p >= 1, got {p}")));
    }
    let m = framing_matrix(p);
    let det = i64::try_from(m.det()).expect("3x3 determinant fits");
    Ok(FramingReport {
        p,
        matrix: m.to_i64_rows(),
        det,
        unimodular: det.abs() == 1,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelRankReport {
    pub params: FamilyParams,
    /// Relations over `(μ(A), μ(B), μ(C))`.
    pub relations: Vec<Vec<i64>>,
    pub snf_diagonal: Vec<i64>,
    /// Rank of the kernel of `H₁(N) → H₂` through `γ ↦ S¹ × γ`.
    pub kernel_rank: usize,
    pub quotient_free_rank: usize,
    pub quotient_torsion: Vec<i64>,
    /// `σ` and `τ` (images of `μ(B)`, `μ(C)`) are linearly independent.
    pub sigma_tau_independent: bool,
}

pub fn kernel_rank_check(params: FamilyParams) -> Result<KernelRankReport> {
    params.require_p_at_least_2()?;
    let pres = dprime_presentation(params)?;
    let s = snf(&pres.relations);
    let kernel_rank = s.rank();
    let (free, torsion) = pres.structure();
    let with_images = pres
        .relations
        .vstack(&IntMatrix::from_rows(&[vec![0, 1, 0], vec![0, 0, 1]]));
    let sigma_tau_independent = with_images.rank() == kernel_rank + 2;
    Ok(KernelRankReport {
        params,
        relations: pres.relations.to_i64_rows(),
        snf_diagonal: s.diagonal().iter().map(|d| i64::try_from(d).unwrap()).collect(),
        kernel_rank,
        quotient_free_rank: free,
        quotient_torsion: torsion.iter().map(|d| i64::try_from(d).unwrap()).collect(),
        sigma_tau_independent,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub tc_class: TcClassReport,
    pub xi_exponents: (i64, i64),
    pub framing_det: i64,
    /// Absent for `p = 1`.
    pub kernel_rank: Option<KernelRankReport>,
    pub primitivity: PrimitivityReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimitivityReport {
    /// `[T_C]` over `(f, f_p)`: `(0, 1)`.
    pub tc_primitive: bool,
    /// `[f] = p [f_p]`.
    pub f_primitive: bool,
}

impl HomologyReport {
    pub fn pass(&self) -> bool {
        self.tc_class.equals_mu_b
            && self.framing_det.abs() == 1
            && self.primitivity.tc_primitive
            && (self.primitivity.f_primitive == (self.tc_class.params.p() == 1))
            && self
                .kernel_rank
                .as_ref()
                .is_none_or(|k| k.kernel_rank == 1 && k.sigma_tau_independent)
    }
}

/// Runs every homology check for one parameter pair.
pub fn homology_report(params: FamilyParams) -> Result<HomologyReport> {
    let tc_class = class_of_tc(params)?;
    let xi_exponents = xi_relation(params)?;
    let framing_det = framing_matrix_check(params.p())?.det;
    let kernel_rank = if params.p() >= 2 {
        Some(kernel_rank_check(params)?)
    } else {
        None
    };
    // T_C ~ S¹ × μ(B) = f_p; f = S¹ × μ(A) = p f_p
    let tc = tc_class.reduced.coeffs[B];
    let primitivity = PrimitivityReport {
        tc_primitive: primitivity_check(&[0, tc])?,
        f_primitive: primitivity_check(&[params.p()])?,
    };
    Ok(HomologyReport {
        tc_class,
        xi_exponents,
        framing_det,
        kernel_rank,
        primitivity,
    })
}
