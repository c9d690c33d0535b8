#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use sigma_lcd::algebra::{Field, FieldRef, Matrix, Poly};
use sigma_lcd::codes::{LinearCode, SemiLinearMap};

pub fn field(q: u32) -> FieldRef {
    Field::with_order(q as u64).unwrap()
}

/// Random code over GF(q), length `1..=max_n`, any dimension.
pub fn code(qs: &'static [u32], max_n: usize) -> impl Strategy<Value = LinearCode> {
    (prop::sample::select(qs), 1..=max_n)
        .prop_flat_map(|(q, n)| (Just(q), Just(n), 0..=n))
        .prop_flat_map(|(q, n, k)| (Just(q), Just(n), prop::collection::vec(prop::collection::vec(0..q, n), k)))
        .prop_map(|(q, n, rows)| LinearCode::from_rows(&field(q), n, &rows).unwrap())
}

/// A monomial map times a Frobenius power, for the given field and length.
pub fn sigma(f: FieldRef, n: usize) -> impl Strategy<Value = SemiLinearMap> {
    let q = f.order();
    let e = f.degree();
    (
        Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        prop::collection::vec(1..q, n),
        0..e,
    )
        .prop_map(move |(perm, diag, frob)| SemiLinearMap::new(&f, perm, diag, frob).unwrap())
}

pub fn code_and_sigma(qs: &'static [u32], max_n: usize) -> impl Strategy<Value = (LinearCode, SemiLinearMap)> {
    code(qs, max_n).prop_flat_map(|c| {
        let s = sigma(c.field().clone(), c.n());
        (Just(c), s)
    })
}

pub fn matrix(qs: &'static [u32], max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (prop::sample::select(qs), 1..=max_rows, 1..=max_cols)
        .prop_flat_map(|(q, r, c)| (Just(q), Just(c), prop::collection::vec(prop::collection::vec(0..q, c), r)))
        .prop_map(|(q, c, rows)| Matrix::from_rows(&field(q), c, &rows).unwrap())
}

pub fn poly(f: &FieldRef, max_deg: usize) -> impl Strategy<Value = Poly> {
    let f = f.clone();
    prop::collection::vec(0..f.order(), 0..=max_deg + 1).prop_map(move |c| Poly::new(&f, c).unwrap())
}

pub fn random_rows(rng: &mut impl Rng, q: u32, n: usize, k: usize) -> Vec<Vec<u32>> {
    (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect()).collect()
}

pub fn random_code(rng: &mut impl Rng, f: &FieldRef, n: usize, k: usize) -> LinearCode {
    LinearCode::from_rows(f, n, &random_rows(rng, f.order(), n, k)).unwrap()
}

/// Random code of exact dimension `k`.
pub fn random_code_exact(rng: &mut impl Rng, f: &FieldRef, n: usize, k: usize) -> LinearCode {
    loop {
        let c = random_code(rng, f, n, k);
        if c.k() == k {
            return c;
        }
    }
}

pub fn random_poly(rng: &mut impl Rng, f: &FieldRef, m: usize) -> Poly {
    Poly::new(f, (0..m).map(|_| rng.gen_range(0..f.order())).collect()).unwrap()
}
