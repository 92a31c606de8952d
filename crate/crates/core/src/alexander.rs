//! Closed form of the Alexander polynomial of the three-component link
//! `L_{m,p} = A ∪ B ∪ C` and its symmetrization.
//!
//! Variables are ordered `(x, s, t)` and belong to the components `A`, `B`,
//! `C`. The sublink `A ∪ B` is a Hopf link and `C` winds `m` times around `A`
//! and `1 - mp` times around `B`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{gsum, Ctx, LaurentPoly, Unit, VarContext};

/// The pair `(m, p)` indexing the link `L_{m,p}` and the torus `T_C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct FamilyParams {
    m: u32,
    p: u32,
}

#[derive(Deserialize)]
struct RawParams {
    m: u32,
    p: u32,
}

impl TryFrom<RawParams> for FamilyParams {
    type Error = Error;
    fn try_from(r: RawParams) -> Result<Self> {
        FamilyParams::new(r.m, r.p)
    }
}

impl FamilyParams {
    pub fn new(m: u32, p: u32) -> Result<Self> {
        if m < 1 || p < 1 {
            return Err(Error::InvalidParams(format!(
                "need m >= 1 and p >= 1, got m = {m}, p = {p}"
            )));
        }
        Ok(FamilyParams { m, p })
    }

    pub fn m(&self) -> i64 {
        self.m as i64
    }

    pub fn p(&self) -> i64 {
        self.p as i64
    }

    /// `m * p`
    pub fn mp(&self) -> i64 {
        self.m() * self.p()
    }

    /// Fails unless `p >= 2`.
    pub fn require_p_at_least_2(&self) -> Result<()> {
        if self.p < 2 {
            return Err(Error::InvalidParams(format!("need p >= 2, got p = {}", self.p)));
        }
        Ok(())
    }

    /// Fails unless `m >= 2`.
    pub fn require_m_at_least_2(&self) -> Result<()> {
        if self.m < 2 {
            return Err(Error::InvalidParams(format!("need m >= 2, got m = {}", self.m)));
        }
        Ok(())
    }
}

impl std::fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(m={}, p={})", self.m, self.p)
    }
}

/// The ring `Z[x^±1, s^±1, t^±1]`.
pub fn link_ring() -> Ctx {
    static CTX: OnceLock<Ctx> = OnceLock::new();
    CTX.get_or_init(|| VarContext::new(["x", "s", "t"]).unwrap()).clone()
}

/// The ring `Z[x^±1, s^±1]` of the Hopf sublink `A ∪ B`.
pub fn hopf_ring() -> Ctx {
    static CTX: OnceLock<Ctx> = OnceLock::new();
    CTX.get_or_init(|| VarContext::new(["x", "s"]).unwrap()).clone()
}

fn mono(ctx: &Ctx, e: [i64; 3]) -> LaurentPoly {
    LaurentPoly::monomial(ctx, e.to_vec(), 1)
}

/// `Δ_{L_{m,p}}(x, s, t)`.
///
/// The fraction `((st)^{1-mp} - 1)/(st - 1)` is evaluated as
/// `-(st)^{1-mp} * gsum(st, mp - 1)`, so no geometric sum of negative
/// length is ever formed.
pub fn delta_lmp(params: FamilyParams) -> Result<LaurentPoly> {
    let ctx = link_ring();
    let (m, mp) = (params.m(), params.mp());
    let one = LaurentPoly::one(&ctx);
    let s = mono(&ctx, [0, 1, 0]);
    let st = mono(&ctx, [0, 1, 1]);
    let xt = mono(&ctx, [1, 0, 1]);
    // x (st)^{1-mp}
    let x_st = mono(&ctx, [1, 1 - mp, 1 - mp]);
    let st_neg = mono(&ctx, [0, 1 - mp, 1 - mp]);

    let h = -(&st_neg * &gsum(&st, mp - 1)?);
    let bracket = &(&one + &(&(&s - &one) * &h)) - &x_st;
    let tail = &(&xt * &gsum(&xt, m - 1)?) * &bracket;
    Ok(&(&one - &x_st) + &tail)
}

/// `Δ^sym` at squared variables: `x^{-m} s^{mp-1} t^{mp-m} Δ(x², s², t²)`.
///
/// This is the symmetrized polynomial with every variable squared, which
/// keeps all exponents integral.
pub fn delta_sym_sq(params: FamilyParams) -> Result<LaurentPoly> {
    let ctx = link_ring();
    let (m, mp) = (params.m(), params.mp());
    let delta = delta_lmp(params)?;
    let x2 = mono(&ctx, [2, 0, 0]);
    let s2 = mono(&ctx, [0, 2, 0]);
    let t2 = mono(&ctx, [0, 0, 2]);
    let squared = delta.subst(&ctx, &[("x", &x2), ("s", &s2), ("t", &t2)])?;
    Ok(squared.shift(&vec![-m, mp - 1, mp - m].into()))
}

/// Sign `ε` with `bar(P) = ε P`, if there is one.
pub fn inversion_sign(p: &LaurentPoly) -> Option<i8> {
    let inv = p.invert_vars();
    if inv == *p {
        Some(1)
    } else if inv == -p {
        Some(-1)
    } else {
        None
    }
}

/// Linking numbers `(lk(A,B), lk(A,C), lk(B,C))` of `L_{m,p}`, read off from
/// `[C] = m[μ(A)] + (1 - mp)[μ(B)]` in the Hopf link exterior.
pub fn linking_numbers(params: FamilyParams) -> (i64, i64, i64) {
    (1, params.m(), 1 - params.mp())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorresReport {
    pub params: FamilyParams,
    /// `Δ(x, s, 1)` in `(x, s)`.
    pub specialization: LaurentPoly,
    /// `(x^{lk(A,C)} s^{lk(B,C)} - 1) Δ_{A∪B}` with `Δ_{A∪B} = 1`.
    pub target: LaurentPoly,
    pub pass: bool,
    /// `u` with `specialization = u * target`.
    pub residual: Option<Unit>,
    /// Same test after reversing the orientation of `B` (`s ↦ s^{-1}`),
    /// where the target becomes `x^m s^{mp-1} - 1`.
    pub reoriented_pass: bool,
}

/// Torres condition at `t = 1`: removing `C` leaves the Hopf link, whose
/// Alexander polynomial is 1.
pub fn torres_check(params: FamilyParams) -> Result<TorresReport> {
    let hopf = hopf_ring();
    let x = LaurentPoly::var(&hopf, "x")?;
    let s = LaurentPoly::var(&hopf, "s")?;
    let one = LaurentPoly::one(&hopf);
    let delta = delta_lmp(params)?;
    let specialization = delta.subst(&hopf, &[("x", &x), ("s", &s), ("t", &one)])?;

    let (_, lk_ac, lk_bc) = linking_numbers(params);
    let target = &LaurentPoly::monomial(&hopf, vec![lk_ac, lk_bc], BigInt::one()) - &one;
    let residual = specialization.unit_equivalent(&target)?;

    let s_inv = s.invert_vars();
    let reoriented = specialization.subst(&hopf, &[("x", &x), ("s", &s_inv)])?;
    let reoriented_target = &LaurentPoly::monomial(&hopf, vec![lk_ac, -lk_bc], BigInt::one()) - &one;
    let reoriented_pass = reoriented.unit_equivalent(&reoriented_target)?.is_some();

    Ok(TorresReport {
        params,
        specialization,
        target,
        pass: residual.is_some(),
        residual,
        reoriented_pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(m: u32, p: u32) -> FamilyParams {
        FamilyParams::new(m, p).unwrap()
    }

    fn parse(s: &str) -> LaurentPoly {
        LaurentPoly::parse(&link_ring(), s).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(FamilyParams::new(0, 2).is_err());
        assert!(FamilyParams::new(2, 0).is_err());
        assert!(fp(1, 1).require_p_at_least_2().is_err());
        assert!(fp(1, 2).require_m_at_least_2().is_err());
        assert!(serde_json::from_str::<FamilyParams>(r#"{"m":0,"p":1}"#).is_err());
        assert_eq!(
            serde_json::from_str::<FamilyParams>(r#"{"m":3,"p":2}"#).unwrap(),
            fp(3, 2)
        );
    }

    #[test]
    fn delta_m1() {
        assert_eq!(delta_lmp(fp(1, 2)).unwrap(), parse("1 - x*s^-1*t^-1"));
        for p in 1..7 {
            let d = delta_lmp(fp(1, p)).unwrap();
            let e = 1 - p as i64;
            assert_eq!(
                d,
                &LaurentPoly::one(&link_ring()) - &LaurentPoly::monomial(&link_ring(), vec![1, e, e], 1)
            );
        }
    }

    #[test]
    fn delta_2_2_hand_expansion() {
        let expected = parse(
            "1 - x*s^-3*t^-3 + x*t - x*s^-2*t^-2 - x*s^-1*t^-1 - x + x*s^-3*t^-2 \
             + x*s^-2*t^-1 + x*s^-1 - x^2*s^-3*t^-2",
        );
        assert_eq!(delta_lmp(fp(2, 2)).unwrap(), expected);
    }

    #[test]
    fn delta_sym_sq_m1() {
        assert_eq!(delta_sym_sq(fp(1, 2)).unwrap(), parse("x^-1*s*t - x*s^-1*t^-1"));
    }

    #[test]
    fn torres_examples() {
        let r = torres_check(fp(2, 2)).unwrap();
        assert!(r.pass);
        assert!(r.reoriented_pass);
        assert_eq!(
            r.residual,
            Some(Unit {
                negative: true,
                exponent: vec![0, 0].into()
            })
        );
        assert_eq!(
            r.specialization,
            LaurentPoly::parse(&hopf_ring(), "1 - x^2*s^-3").unwrap()
        );
        assert!(torres_check(fp(3, 2)).unwrap().pass);
        for p in 1..6 {
            assert!(torres_check(fp(1, p)).unwrap().pass);
        }
    }

    #[test]
    fn inversion_sign_of_small_cases() {
        // bar(x^-1 s t - x s^-1 t^-1) = -(...)
        assert_eq!(inversion_sign(&delta_sym_sq(fp(1, 2)).unwrap()), Some(-1));
        assert_eq!(inversion_sign(&parse("x + 1")), None);
        assert_eq!(inversion_sign(&parse("x + x^-1")), Some(1));
    }
}
