#![allow(dead_code)]

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use swlink::braid::BraidWord;
use swlink::matrix::IntMatrix;
use swlink::{Ctx, LaurentPoly, VarContext};

pub fn ring() -> Ctx {
    static CTX: OnceLock<Ctx> = OnceLock::new();
    CTX.get_or_init(|| VarContext::new(["x", "y", "z"]).unwrap()).clone()
}

pub fn poly_with(max_terms: usize, exp: i64, coeff: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::array::uniform3(-exp..=exp), -coeff..=coeff), 0..=max_terms).prop_map(|terms| {
        LaurentPoly::from_terms(&ring(), terms.into_iter().map(|(e, c)| (e.to_vec(), BigInt::from(c)))).unwrap()
    })
}

pub fn poly() -> impl Strategy<Value = LaurentPoly> {
    poly_with(6, 3, 5)
}

pub fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly_with(4, 2, 4).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn monomial() -> impl Strategy<Value = LaurentPoly> {
    (prop::array::uniform3(-3i64..=3), prop_oneof![Just(1i64), Just(-1)])
        .prop_map(|(e, c)| LaurentPoly::monomial(&ring(), e.to_vec(), c))
}

/// Nonconstant monomial with coefficient 1.
pub fn unit_base() -> impl Strategy<Value = LaurentPoly> {
    prop::array::uniform3(-3i64..=3)
        .prop_filter("nonconstant", |e| e.iter().any(|&v| v != 0))
        .prop_map(|e| LaurentPoly::monomial(&ring(), e.to_vec(), 1))
}

pub fn braid(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let letter = (1..n as i32, prop_oneof![Just(1i32), Just(-1)]).prop_map(|(i, s)| i * s);
        prop::collection::vec(letter, 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

pub fn int_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-20i64..=20, c), r).prop_map(|rows| IntMatrix::from_rows(&rows))
    })
}

pub fn eval(p: &LaurentPoly, point: &[BigRational]) -> BigRational {
    p.terms()
        .map(|(e, c)| {
            e.as_slice()
                .iter()
                .zip(point)
                .fold(BigRational::from_integer(c.clone()), |acc, (&k, v)| {
                    acc * v.pow(k as i32)
                })
        })
        .sum()
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
