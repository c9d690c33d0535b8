//! μ_a-LCD, self-orthogonality and self-duality tests for GQC codes.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::code::GqcCode;
use super::constituent::{active_blocks, block_weights, check_context, constituent, Constituent};
use super::cyclotomic::{gcd, CyclotomicContext};
use crate::algebra::{FieldRef, Poly};
use crate::codes::{hull_dim, is_sigma_lcd, SemiLinearMap};
use crate::error::{Error, Result};

fn check_a(m: usize, a: i64) -> Result<()> {
    if m > 1 && gcd(a.rem_euclid(m as i64) as u64, m as u64) != 1 {
        return Err(Error::GcdNotOne(a, m as i64));
    }
    Ok(())
}

fn indices(ctx: &CyclotomicContext, all: bool) -> Vec<usize> {
    if all {
        (0..ctx.m()).collect()
    } else {
        ctx.leaders()
    }
}

/// Pairs `(C_i, C_{−ai}^{⊥′})` over the chosen indices.
fn pairs(c: &GqcCode, ctx: &CyclotomicContext, a: i64, all: bool) -> Result<Vec<(Constituent, Constituent)>> {
    check_context(c, ctx)?;
    check_a(ctx.m(), a)?;
    indices(ctx, all)
        .into_iter()
        .map(|i| {
            let ci = constituent(c, ctx, i as i64)?;
            let partner = constituent(c, ctx, -a * i as i64)?.v_dual();
            Ok((ci, partner))
        })
        .collect()
}

/// `C_i ∩ C_{−ai}^{⊥′} = {0}` at every coset leader. Leaders suffice:
/// the condition at `iq^k` is the `q^k`-th power of the one at `i`.
pub fn is_mua_lcd(c: &GqcCode, ctx: &CyclotomicContext, a: i64) -> Result<bool> {
    is_mua_lcd_over(c, ctx, a, false)
}

/// [`is_mua_lcd`], optionally checking every `i ∈ Z_m`.
pub fn is_mua_lcd_over(c: &GqcCode, ctx: &CyclotomicContext, a: i64, all: bool) -> Result<bool> {
    for (ci, dual) in pairs(c, ctx, a, all)? {
        if ci.intersection_dim(&dual)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `C_i ⊆ C_{−ai}^{⊥′}` at every coset leader.
pub fn is_mua_self_orthogonal(c: &GqcCode, ctx: &CyclotomicContext, a: i64) -> Result<bool> {
    Ok(pairs(c, ctx, a, false)?
        .iter()
        .all(|(ci, dual)| ci.is_subspace_of(dual)))
}

/// `C_i = C_{−ai}^{⊥′}` at every coset leader.
pub fn is_mua_self_dual(c: &GqcCode, ctx: &CyclotomicContext, a: i64) -> Result<bool> {
    Ok(pairs(c, ctx, a, false)?
        .iter()
        .all(|(ci, dual)| ci.space() == dual.space()))
}

/// Hull dimension of the flat code under `μ_a`, the brute-force side of
/// every constituent criterion.
pub fn flat_mua_hull(c: &GqcCode, a: i64) -> Result<usize> {
    hull_dim(c.flat(), &c.mu_a_map(a)?)
}

/// For codes whose constituents are all `{0}` or `V_i`: `S = −aS`, where
/// `S` collects the `i` with `C_i ≠ {0}`.
pub fn trivial_constituent_lcd(c: &GqcCode, ctx: &CyclotomicContext, a: i64) -> Result<bool> {
    check_context(c, ctx)?;
    check_a(ctx.m(), a)?;
    let mut support = vec![false; ctx.m()];
    for leader in ctx.leaders() {
        let ci = constituent(c, ctx, leader as i64)?;
        if !ci.is_zero() && !ci.is_full() {
            return Err(Error::ConstituentNotTrivial(leader));
        }
        for &i in ctx.coset_of(leader as i64) {
            support[i] = !ci.is_zero();
        }
    }
    Ok((0..ctx.m()).all(|i| support[i] == support[ctx.reduce(-a * i as i64)]))
}

/// σ-LCD test of a cyclic code under full coordinate reversal.
pub fn reversal_sigma_lcd(c: &GqcCode) -> Result<bool> {
    if c.l() != 1 {
        return Err(Error::NotCyclic(c.l()));
    }
    is_sigma_lcd(c.flat(), &SemiLinearMap::reversal(c.field(), c.n()))
}

/// For pairwise coprime block lengths: every block projection is a
/// μ_a-LCD cyclic code and `C_0` is LCD in `F_q^l` (under the block
/// weights `1/m_j`).
pub fn cross_block_lcd(c: &GqcCode, ctx: &CyclotomicContext, a: i64) -> Result<bool> {
    check_context(c, ctx)?;
    let b = c.blocks();
    for x in 0..b.len() {
        for y in x + 1..b.len() {
            if gcd(b[x] as u64, b[y] as u64) != 1 {
                return Err(Error::BlocksNotCoprime);
            }
        }
    }
    check_a(ctx.m(), a)?;
    for j in 0..c.l() {
        let proj = c.projection(j)?;
        let pctx = proj.context()?;
        if !is_mua_lcd(&proj, &pctx, a)? {
            return Ok(false);
        }
    }
    let c0 = constituent(c, ctx, 0)?;
    Ok(c0.intersection_dim(&c0.v_dual())? == 0)
}

/// A single generator tuple `(c_1(x), …, c_l(x))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneGenerator {
    field: FieldRef,
    blocks: Vec<usize>,
    polys: Vec<Poly>,
}

impl OneGenerator {
    pub fn new(field: &FieldRef, blocks: &[usize], polys: Vec<Poly>) -> Result<Self> {
        let code = GqcCode::from_generators(field, blocks, vec![polys])?;
        Ok(OneGenerator {
            field: Arc::clone(field),
            blocks: blocks.to_vec(),
            polys: code.generators()[0].clone(),
        })
    }

    /// Quasi-cyclic shape: `l` blocks of length `m`.
    pub fn quasi_cyclic(field: &FieldRef, m: usize, polys: Vec<Poly>) -> Result<Self> {
        let blocks = vec![m; polys.len()];
        OneGenerator::new(field, &blocks, polys)
    }

    pub fn from_code(c: &GqcCode) -> Result<Self> {
        let polys = match c.generators() {
            [g] => g.clone(),
            _ => return Err(Error::Parse("expected exactly one generator".into())),
        };
        OneGenerator::new(c.field(), c.blocks(), polys)
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn code(&self) -> GqcCode {
        GqcCode::from_generators(&self.field, &self.blocks, vec![self.polys.clone()])
            .expect("validated at construction")
    }

    fn qc_m(&self) -> Result<usize> {
        match self.blocks.first() {
            Some(&m) if self.blocks.iter().all(|&b| b == m) => Ok(m),
            _ => Err(Error::NotQuasiCyclic),
        }
    }

    /// `(δ_{j,i} c_j(ξ^i))_j`.
    fn eval(&self, ctx: &CyclotomicContext, i: i64) -> Result<Vec<u32>> {
        let idx = ctx.reduce(i);
        let active = active_blocks(ctx, &self.blocks, idx);
        let alpha = ctx.xi_pow(idx as i64);
        self.polys
            .iter()
            .zip(active)
            .map(|(p, on)| if on { p.eval_ext(ctx.embedding(), alpha) } else { Ok(0) })
            .collect()
    }

    /// `Σ_j c_j(ξ^i) c_j(ξ^{−ai}) / m_j` and whether the first factor vanishes.
    fn pairing(&self, ctx: &CyclotomicContext, i: usize, a: i64) -> Result<(bool, u32)> {
        if ctx.base() != &self.field || crate::gqc::cyclotomic::lcm(&self.blocks) != ctx.m() {
            return Err(Error::FieldMismatch);
        }
        let ext = ctx.ext();
        let w = block_weights(ctx, &self.blocks);
        let u = self.eval(ctx, i as i64)?;
        let v = self.eval(ctx, -a * i as i64)?;
        let s = (0..u.len()).fold(0, |acc, j| ext.add(acc, ext.mul(w[j], ext.mul(u[j], v[j]))));
        Ok((u.iter().all(|&x| x == 0), s))
    }

    /// `Σ_j c_j(x) c_j(x^{−a}) mod (x^m − 1)` (quasi-cyclic shape).
    fn cross_sum(&self, a: i64) -> Result<Poly> {
        let m = self.qc_m()?;
        let mut acc = Poly::zero(&self.field);
        for p in &self.polys {
            acc = acc.add(&p.mul_cyclic(&p.compose_power(-a, m), m)?)?;
        }
        Ok(acc)
    }

    fn gcd_with_all(&self) -> Result<Poly> {
        let m = self.qc_m()?;
        let mut g = Poly::x_pow_minus_one(&self.field, m);
        for p in &self.polys {
            g = g.gcd(p)?;
        }
        Ok(g)
    }
}

/// Evaluation form: at each leader with a nonzero evaluation vector, the
/// weighted pairing `Σ_j c_j(ξ^i) c_j(ξ^{−ai}) / m_j` is nonzero.
pub fn one_gen_lcd(g: &OneGenerator, ctx: &CyclotomicContext, a: i64) -> Result<bool> {
    check_a(ctx.m(), a)?;
    for i in ctx.leaders() {
        let (zero, s) = g.pairing(ctx, i, a)?;
        if !zero && s == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Polynomial form for quasi-cyclic generators:
/// `gcd(Σ c_j(x) c_j(x^{−a}), x^m − 1) = gcd(c_1, …, c_l, x^m − 1)`.
pub fn one_gen_lcd_gcd(g: &OneGenerator, a: i64) -> Result<bool> {
    let m = g.qc_m()?;
    check_a(m, a)?;
    let lhs = g.cross_sum(a)?.gcd(&Poly::x_pow_minus_one(&g.field, m))?;
    Ok(lhs == g.gcd_with_all()?)
}

/// Evaluation form: the pairing vanishes at every leader.
pub fn one_gen_self_orthogonal(g: &OneGenerator, ctx: &CyclotomicContext, a: i64) -> Result<bool> {
    check_a(ctx.m(), a)?;
    for i in ctx.leaders() {
        if g.pairing(ctx, i, a)?.1 != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Polynomial form: `Σ c_j(x) c_j(x^{−a}) ≡ 0 mod (x^m − 1)`.
pub fn one_gen_self_orthogonal_gcd(g: &OneGenerator, a: i64) -> Result<bool> {
    let m = g.qc_m()?;
    check_a(m, a)?;
    Ok(g.cross_sum(a)?.is_zero())
}

/// `S_j = {i ∈ Z_m : c_j(ξ^i) ≠ 0}` for each block.
pub fn supports(g: &OneGenerator, ctx: &CyclotomicContext) -> Result<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new(); g.polys.len()];
    for i in 0..ctx.m() {
        for (j, v) in g.eval(ctx, i as i64)?.into_iter().enumerate() {
            if v != 0 {
                out[j].push(i);
            }
        }
    }
    Ok(out)
}

/// True when the supports `S_j` are pairwise disjoint, in which case the
/// code is μ_{−1}-LCD; false means the criterion does not apply.
pub fn disjoint_support_lcd(g: &OneGenerator, ctx: &CyclotomicContext) -> Result<bool> {
    g.qc_m()?;
    let sup = supports(g, ctx)?;
    let mut seen = HashSet::new();
    for s in &sup {
        for &i in s {
            if !seen.insert(i) {
                return Ok(false);
            }
        }
    }
    if !one_gen_lcd(g, ctx, -1)? {
        return Err(Error::VerificationFailed("disjoint supports but not μ₋₁-LCD"));
    }
    Ok(true)
}

/// Verdicts for a quasi-cyclic 1-generator code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalCheck {
    pub lcd: bool,
    pub maximal: bool,
    /// `c(x)` with `C = F_q[x](c(x), c(x) + 1)`, for index-2 codes over
    /// even q with `a ≡ −1` that are LCD and maximal.
    pub canonical: Option<Poly>,
}

pub fn maximal_one_gen_check(g: &OneGenerator, a: i64) -> Result<MaximalCheck> {
    let m = g.qc_m()?;
    check_a(m, a)?;
    let maximal = g.gcd_with_all()?.degree() == Some(0);
    let lcd = one_gen_lcd_gcd(g, a)?;
    let f = &g.field;
    let mut canonical = None;
    let minus_one = (a + 1).rem_euclid(m as i64) == 0;
    if f.characteristic() == 2 && g.polys.len() == 2 && m % 2 == 1 && minus_one && lcd && maximal {
        let (c1, c2) = (&g.polys[0], &g.polys[1]);
        let modulus = Poly::x_pow_minus_one(f, m);
        let inv = c1.add(c2)?.inverse_mod(&modulus)?.ok_or(Error::InverseMissing)?;
        canonical = Some(c1.mul(&inv)?.rem(&modulus)?);
    }
    Ok(MaximalCheck {
        lcd,
        maximal,
        canonical,
    })
}

/// Census of μ₋₁-LCD maximal 1-generator index-2 QC codes in
/// `(F_q[x]/(x^m + 1))^2`, q even, m odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalCensus {
    /// Distinct codes found.
    pub codes: usize,
    /// Distinct canonical polynomials over those codes.
    pub canonical_forms: usize,
    /// Every code equals `F_q[x](c, c + 1)` for its canonical `c`, and
    /// equal codes give equal `c`.
    pub canonical_consistent: bool,
    /// Every counted code passed the flat-code hull check.
    pub oracle_agrees: bool,
}

pub fn maximal_qc_census(field: &FieldRef, m: usize) -> Result<MaximalCensus> {
    let q = field.order() as usize;
    let total = q.checked_pow(m as u32).ok_or(Error::BudgetExceeded {
        words: u128::MAX,
        budget: 0,
    })?;
    let poly_of = |mut idx: usize| -> Poly {
        let mut c = Vec::with_capacity(m);
        for _ in 0..m {
            c.push((idx % q) as u32);
            idx /= q;
        }
        Poly::from_raw(field, c)
    };
    let mut codes: HashMap<Vec<Vec<u32>>, Poly> = HashMap::new();
    let mut consistent = true;
    let mut oracle_agrees = true;
    for i1 in 0..total {
        for i2 in 0..total {
            let g = OneGenerator::quasi_cyclic(field, m, vec![poly_of(i1), poly_of(i2)])?;
            let check = maximal_one_gen_check(&g, -1)?;
            if !(check.lcd && check.maximal) {
                continue;
            }
            let c = check.canonical.ok_or(Error::VerificationFailed("missing canonical form"))?;
            let code = g.code();
            let key = code.flat().generator().row_vecs();
            match codes.get(&key) {
                Some(prev) => consistent &= *prev == c,
                None => {
                    let c1 = c.add(&Poly::one(field))?;
                    let canon = OneGenerator::quasi_cyclic(field, m, vec![c.clone(), c1])?.code();
                    consistent &= canon.flat() == code.flat();
                    oracle_agrees &= flat_mua_hull(&code, -1)? == 0;
                    codes.insert(key, c);
                }
            }
        }
    }
    let forms: HashSet<&[u32]> = codes.values().map(Poly::coeffs).collect();
    Ok(MaximalCensus {
        codes: codes.len(),
        canonical_forms: forms.len(),
        canonical_consistent: consistent,
        oracle_agrees,
    })
}

/// Every cyclic code of length `m` over the context's base field, as
/// `(zero-set leaders, generator polynomial)` with the generator the
/// product of the minimal polynomials over the zero set.
pub fn all_cyclic_codes(ctx: &CyclotomicContext) -> Result<Vec<(Vec<usize>, GqcCode)>> {
    let leaders = ctx.leaders();
    let minimal: Vec<Poly> = leaders
        .iter()
        .map(|&l| ctx.minimal_polynomial(l as i64))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(1 << leaders.len());
    for mask in 0u64..(1 << leaders.len()) {
        let mut g = Poly::one(ctx.base());
        let mut zeros = Vec::new();
        for (k, mp) in minimal.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g = g.mul(mp)?;
                zeros.push(leaders[k]);
            }
        }
        out.push((zeros, GqcCode::cyclic(&g, ctx.m())?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    fn p(f: &FieldRef, c: &[u32]) -> Poly {
        Poly::new(f, c.to_vec()).unwrap()
    }

    fn hamming() -> GqcCode {
        let f2 = Field::prime(2).unwrap();
        GqcCode::cyclic(&p(&f2, &[1, 1, 0, 1]), 7).unwrap()
    }

    #[test]
    fn hamming_verdicts() {
        let c = hamming();
        let ctx = c.context().unwrap();
        assert!(is_mua_lcd(&c, &ctx, -1).unwrap());
        assert!(is_mua_lcd_over(&c, &ctx, -1, true).unwrap());
        assert!(!is_mua_lcd(&c, &ctx, 1).unwrap());
        assert_eq!(flat_mua_hull(&c, -1).unwrap(), 0);
        assert!(flat_mua_hull(&c, 1).unwrap() > 0);
        assert!(reversal_sigma_lcd(&c).unwrap());
        assert!(trivial_constituent_lcd(&c, &ctx, -1).unwrap());
        assert!(!trivial_constituent_lcd(&c, &ctx, 1).unwrap());
        assert_eq!(is_mua_lcd(&c, &ctx, 7).unwrap_err(), Error::GcdNotOne(7, 7));
    }

    #[test]
    fn zero_and_full_codes() {
        let f3 = Field::prime(3).unwrap();
        let blocks = [4, 4];
        let zero = GqcCode::zero(&f3, &blocks).unwrap();
        let full = GqcCode::full(&f3, &blocks).unwrap();
        let ctx = zero.context().unwrap();
        assert!(is_mua_lcd(&zero, &ctx, 1).unwrap());
        assert!(is_mua_self_orthogonal(&zero, &ctx, 1).unwrap());
        assert!(!is_mua_self_dual(&zero, &ctx, 1).unwrap());
        assert!(!is_mua_self_orthogonal(&full, &ctx, 1).unwrap());
        assert!(trivial_constituent_lcd(&full, &ctx, 3).unwrap());
    }

    #[test]
    fn cyclic_repetition_s_set() {
        // S = C₁ ∪ {0}: generator M_{ξ^3}; a = 1 gives −S = C₃ ∪ {0} ≠ S.
        let f2 = Field::prime(2).unwrap();
        let ctx = CyclotomicContext::new(&f2, 7).unwrap();
        let g = ctx.minimal_polynomial(3).unwrap();
        let c = GqcCode::cyclic(&g, 7).unwrap();
        assert!(!trivial_constituent_lcd(&c, &ctx, 1).unwrap());
        assert!(!is_mua_lcd(&c, &ctx, 1).unwrap());
    }

    #[test]
    fn reversal_requires_cyclic() {
        let f2 = Field::prime(2).unwrap();
        let c = GqcCode::zero(&f2, &[3, 3]).unwrap();
        assert_eq!(reversal_sigma_lcd(&c).unwrap_err(), Error::NotCyclic(2));
    }

    #[test]
    fn cross_block_example() {
        let f2 = Field::prime(2).unwrap();
        // C₀ = span{(1,1)}: both blocks evaluate to 1 at x = 1.
        let c = GqcCode::from_generators(&f2, &[3, 5], vec![vec![p(&f2, &[1]), p(&f2, &[1])]]).unwrap();
        let ctx = c.context().unwrap();
        assert!(!cross_block_lcd(&c, &ctx, -1).unwrap());
        assert!(!is_mua_lcd(&c, &ctx, -1).unwrap());
        let zero = GqcCode::zero(&f2, &[3, 5]).unwrap();
        assert!(cross_block_lcd(&zero, &ctx, -1).unwrap());
        let bad = GqcCode::zero(&f2, &[3, 9]).unwrap();
        let bctx = bad.context().unwrap();
        assert_eq!(cross_block_lcd(&bad, &bctx, 1).unwrap_err(), Error::BlocksNotCoprime);
    }

    #[test]
    fn weighted_pairing_for_unequal_blocks() {
        // q = 3, m = (2, 7): C₀ = span{(1,1)} is self-orthogonal under the
        // weights (1/2, 1/7) = (2, 1), though (1,1)·(1,1) = 2 ≠ 0.
        let f3 = Field::prime(3).unwrap();
        let c = GqcCode::from_generators(&f3, &[2, 7], vec![vec![p(&f3, &[1]), p(&f3, &[1])]]).unwrap();
        let ctx = c.context().unwrap();
        assert!(flat_mua_hull(&c, -1).unwrap() > 0);
        assert!(!is_mua_lcd(&c, &ctx, -1).unwrap());
        assert!(!cross_block_lcd(&c, &ctx, -1).unwrap());
        let g = OneGenerator::from_code(&c).unwrap();
        assert!(!one_gen_lcd(&g, &ctx, -1).unwrap());
    }

    #[test]
    fn one_generator_examples() {
        let f2 = Field::prime(2).unwrap();
        let g = OneGenerator::quasi_cyclic(&f2, 3, vec![p(&f2, &[1, 1]), p(&f2, &[1, 0, 1])]).unwrap();
        let ctx = CyclotomicContext::new(&f2, 3).unwrap();
        assert!(one_gen_lcd(&g, &ctx, -1).unwrap());
        assert!(one_gen_lcd_gcd(&g, -1).unwrap());
        assert!(is_mua_lcd(&g.code(), &ctx, -1).unwrap());

        let zero = OneGenerator::quasi_cyclic(&f2, 3, vec![Poly::zero(&f2), Poly::zero(&f2)]).unwrap();
        assert!(one_gen_lcd(&zero, &ctx, -1).unwrap());
        assert!(one_gen_lcd_gcd(&zero, -1).unwrap());
        assert!(one_gen_self_orthogonal(&zero, &ctx, -1).unwrap());
        assert!(one_gen_self_orthogonal_gcd(&zero, -1).unwrap());
    }

    #[test]
    fn qr_idempotents() {
        let f2 = Field::prime(2).unwrap();
        let g = OneGenerator::quasi_cyclic(
            &f2,
            7,
            vec![p(&f2, &[1, 1, 1, 0, 1]), p(&f2, &[1, 0, 0, 1, 0, 1, 1])],
        )
        .unwrap();
        let ctx = CyclotomicContext::new(&f2, 7).unwrap();
        assert!(disjoint_support_lcd(&g, &ctx).unwrap());
        assert!(one_gen_lcd_gcd(&g, -1).unwrap());
        assert!(is_mua_lcd(&g.code(), &ctx, -1).unwrap());

        let same = OneGenerator::quasi_cyclic(&f2, 7, vec![Poly::one(&f2), Poly::one(&f2)]).unwrap();
        assert!(!disjoint_support_lcd(&same, &ctx).unwrap());
        let single = OneGenerator::quasi_cyclic(&f2, 7, vec![p(&f2, &[1, 1])]).unwrap();
        assert!(disjoint_support_lcd(&single, &ctx).unwrap());
    }

    #[test]
    fn maximal_examples() {
        let f2 = Field::prime(2).unwrap();
        let g = OneGenerator::quasi_cyclic(&f2, 3, vec![Poly::one(&f2), p(&f2, &[0, 1])]).unwrap();
        let r = maximal_one_gen_check(&g, -1).unwrap();
        assert!(r.maximal && !r.lcd && r.canonical.is_none());

        let g = OneGenerator::quasi_cyclic(&f2, 3, vec![p(&f2, &[0, 1]), p(&f2, &[1, 1])]).unwrap();
        let r = maximal_one_gen_check(&g, -1).unwrap();
        assert!(r.maximal && r.lcd);
        assert_eq!(r.canonical, Some(p(&f2, &[0, 1])));
    }

    #[test]
    fn census_small() {
        let f2 = Field::prime(2).unwrap();
        let census = maximal_qc_census(&f2, 3).unwrap();
        assert_eq!(census.codes, 8);
        assert_eq!(census.canonical_forms, 8);
        assert!(census.canonical_consistent && census.oracle_agrees);
    }

    #[test]
    fn cyclic_code_listing() {
        let f2 = Field::prime(2).unwrap();
        let ctx = CyclotomicContext::new(&f2, 7).unwrap();
        let all = all_cyclic_codes(&ctx).unwrap();
        assert_eq!(all.len(), 8);
        let dims: HashSet<usize> = all.iter().map(|(_, c)| c.flat().k()).collect();
        assert_eq!(dims, [0, 1, 3, 4, 6, 7].into_iter().collect());
    }
}
