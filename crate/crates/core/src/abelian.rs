//! Group algebras `F_q[G]` of finite Abelian groups and their ideals.
//!
//! Elements of `G = Z_{n_1} × … × Z_{n_r}` are indexed in mixed radix with
//! the first factor least significant, so for a single cyclic factor the
//! index of `x^i` is `i` and ideals are cyclic codes.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::algebra::{FieldRef, Matrix, Poly};
use crate::codes::{hull_dim, LinearCode, SemiLinearMap};
use crate::error::{Error, Result};
use crate::gqc::CyclotomicContext;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    factors: Vec<usize>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<usize>) -> Result<Self> {
        if factors.is_empty() || factors.contains(&0) {
            return Err(Error::Parse("cyclic orders must be positive".into()));
        }
        Ok(AbelianGroup { factors })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        AbelianGroup::new(vec![n])
    }

    /// `"23"` or `"3,3"`.
    pub fn parse(text: &str) -> Result<Self> {
        let factors = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad cyclic order '{t}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        AbelianGroup::new(factors)
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product()
    }

    pub fn tuple(&self, mut g: usize) -> Vec<usize> {
        self.factors
            .iter()
            .map(|&n| {
                let d = g % n;
                g /= n;
                d
            })
            .collect()
    }

    pub fn index(&self, tuple: &[usize]) -> usize {
        self.factors
            .iter()
            .zip(tuple)
            .rev()
            .fold(0, |acc, (&n, &d)| acc * n + d % n)
    }

    pub fn add(&self, g: usize, h: usize) -> usize {
        let (a, b) = (self.tuple(g), self.tuple(h));
        let sum: Vec<usize> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        self.index(&sum)
    }

    pub fn neg(&self, g: usize) -> usize {
        let t: Vec<usize> = self
            .tuple(g)
            .iter()
            .zip(&self.factors)
            .map(|(&d, &n)| (n - d) % n)
            .collect();
        self.index(&t)
    }

    /// The unit vectors, one per cyclic factor.
    pub fn generators(&self) -> Vec<usize> {
        (0..self.factors.len())
            .map(|k| {
                let mut t = vec![0; self.factors.len()];
                t[k] = 1;
                self.index(&t)
            })
            .collect()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|n| n.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `Σ_g c_g g`, dense over the mixed-radix index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    field: FieldRef,
    group: AbelianGroup,
    coeffs: Vec<u32>,
}

impl GroupAlgebraElement {
    pub fn new(field: &FieldRef, group: &AbelianGroup, coeffs: Vec<u32>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::LengthMismatch {
                expected: group.order(),
                got: coeffs.len(),
            });
        }
        if let Some(&bad) = coeffs.iter().find(|&&c| c as u64 >= field.order() as u64) {
            return Err(Error::InvalidElement(bad as u64));
        }
        Ok(GroupAlgebraElement {
            field: Arc::clone(field),
            group: group.clone(),
            coeffs,
        })
    }

    pub fn zero(field: &FieldRef, group: &AbelianGroup) -> Self {
        GroupAlgebraElement {
            field: Arc::clone(field),
            group: group.clone(),
            coeffs: vec![0; group.order()],
        }
    }

    pub fn one(field: &FieldRef, group: &AbelianGroup) -> Self {
        GroupAlgebraElement::basis(field, group, 0)
    }

    /// The group element `g` itself.
    pub fn basis(field: &FieldRef, group: &AbelianGroup, g: usize) -> Self {
        let mut e = GroupAlgebraElement::zero(field, group);
        e.coeffs[g] = 1;
        e
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        self.check_same(other)?;
        let f = &self.field;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(GroupAlgebraElement { coeffs, ..self.clone() })
    }

    /// `g · self`.
    pub fn translate(&self, g: usize) -> GroupAlgebraElement {
        let mut coeffs = vec![0; self.coeffs.len()];
        for (h, &c) in self.coeffs.iter().enumerate() {
            coeffs[self.group.add(g, h)] = c;
        }
        GroupAlgebraElement { coeffs, ..self.clone() }
    }

    fn check_same(&self, other: &GroupAlgebraElement) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Space-separated coefficients.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        parts.join(" ")
    }

    pub fn parse(field: &FieldRef, group: &AbelianGroup, text: &str) -> Result<Self> {
        let coeffs = crate::algebra::field::parse_u32_list(text)?;
        GroupAlgebraElement::new(field, group, coeffs)
    }
}

/// Convolution over `G`.
pub fn ga_mul(a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
    a.check_same(b)?;
    let f = &a.field;
    let g = &a.group;
    let mut coeffs = vec![0; a.coeffs.len()];
    for (x, &ca) in a.coeffs.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (y, &cb) in b.coeffs.iter().enumerate() {
            if cb != 0 {
                let z = g.add(x, y);
                coeffs[z] = f.add(coeffs[z], f.mul(ca, cb));
            }
        }
    }
    Ok(GroupAlgebraElement { coeffs, ..a.clone() })
}

/// `Σ a_g g ↦ Σ a_{g⁻¹} g`.
pub fn mu_minus1(a: &GroupAlgebraElement) -> GroupAlgebraElement {
    let mut coeffs = vec![0; a.coeffs.len()];
    for (g, &c) in a.coeffs.iter().enumerate() {
        coeffs[a.group.neg(g)] = c;
    }
    GroupAlgebraElement { coeffs, ..a.clone() }
}

/// μ₋₁ as a coordinate permutation of `F_q^{|G|}`.
pub fn mu_minus1_map(field: &FieldRef, group: &AbelianGroup) -> SemiLinearMap {
    let perm = (0..group.order()).map(|g| group.neg(g)).collect();
    SemiLinearMap::permutation(field, perm).expect("inversion is a bijection")
}

pub fn is_idempotent(e: &GroupAlgebraElement) -> bool {
    ga_mul(e, e).map(|sq| sq == *e).unwrap_or(false)
}

/// The ideal `F_q[G]·e`, spanned by the translates of `e`.
pub fn ideal_from_generator(e: &GroupAlgebraElement) -> LinearCode {
    let n = e.group.order();
    let mut rows = Matrix::zeros(&e.field, 0, n);
    for g in 0..n {
        rows.push_row(&e.translate(g).coeffs);
    }
    LinearCode::from_matrix(&rows)
}

/// Closure under multiplication by each cyclic generator of `G`.
pub fn check_ideal(c: &LinearCode, group: &AbelianGroup) -> Result<()> {
    if c.n() != group.order() {
        return Err(Error::LengthMismatch {
            expected: group.order(),
            got: c.n(),
        });
    }
    let g = c.generator();
    for s in group.generators() {
        for r in 0..g.rows() {
            let mut shifted = vec![0; c.n()];
            for (h, &x) in g.row(r).iter().enumerate() {
                shifted[group.add(s, h)] = x;
            }
            if !c.contains(&shifted) {
                return Err(Error::NotAnIdeal);
            }
        }
    }
    Ok(())
}

/// Splits `1 = e + f` with `e ∈ C`, `f ∈ (μ₋₁(C))^⊥`. The split exists and
/// is unique exactly when the sum is direct, and then `e` is an
/// idempotent generating `C`.
pub fn find_idempotent_generator(c: &LinearCode, group: &AbelianGroup) -> Result<Option<GroupAlgebraElement>> {
    check_ideal(c, group)?;
    let f = c.field();
    let n = c.n();
    let mu = mu_minus1_map(f, group);
    let partner = crate::codes::apply_sigma(&mu, c)?.dual();
    let stacked = c.generator().vstack(partner.generator())?;
    if stacked.rank() != n {
        return Ok(None);
    }
    let one = GroupAlgebraElement::one(f, group);
    let x = stacked
        .solve_left(one.coeffs())
        .ok_or(Error::VerificationFailed("stacked bases do not span"))?;
    let e = GroupAlgebraElement::new(f, group, c.generator().left_apply(&x[..c.k()]))?;
    if !is_idempotent(&e) {
        return Err(Error::VerificationFailed("component of 1 in C is not idempotent"));
    }
    if ideal_from_generator(&e) != *c {
        return Err(Error::VerificationFailed("idempotent does not generate C"));
    }
    Ok(Some(e))
}

/// μ₋₁-LCD via the idempotent route, cross-checked against the hull.
pub fn is_abelian_mu1_lcd(c: &LinearCode, group: &AbelianGroup) -> Result<bool> {
    let by_idempotent = find_idempotent_generator(c, group)?.is_some();
    let by_hull = hull_dim(c, &mu_minus1_map(c.field(), group))? == 0;
    if by_idempotent != by_hull {
        return Err(Error::VerificationFailed("idempotent and hull verdicts disagree"));
    }
    Ok(by_idempotent)
}

/// Every ideal of `F_q[G]`: principal ideals of all `q^{|G|}` elements,
/// closed under sums.
pub fn all_ideals(field: &FieldRef, group: &AbelianGroup) -> Result<Vec<LinearCode>> {
    let n = group.order();
    let q = field.order() as u64;
    let total = q
        .checked_pow(n as u32)
        .filter(|&t| t <= 1 << 20)
        .ok_or(Error::BudgetExceeded {
            words: (q as u128).pow(n as u32),
            budget: 1 << 20,
        })?;
    let mut principal: Vec<LinearCode> = Vec::new();
    let mut seen_gen: HashSet<Vec<Vec<u32>>> = HashSet::new();
    let mut coeffs = vec![0u32; n];
    for idx in 0..total {
        let mut rest = idx;
        for c in coeffs.iter_mut() {
            *c = (rest % q) as u32;
            rest /= q;
        }
        let code = ideal_from_generator(&GroupAlgebraElement::new(field, group, coeffs.clone())?);
        if seen_gen.insert(code.generator().row_vecs()) {
            principal.push(code);
        }
    }
    let mut seen: HashSet<Vec<Vec<u32>>> = principal.iter().map(|c| c.generator().row_vecs()).collect();
    let mut out = principal.clone();
    let mut queue: VecDeque<usize> = (0..out.len()).collect();
    while let Some(i) = queue.pop_front() {
        for p in &principal {
            let s = out[i].sum(p)?;
            if seen.insert(s.generator().row_vecs()) {
                out.push(s);
                queue.push_back(out.len() - 1);
            }
        }
    }
    out.sort_by_key(|c| (c.k(), c.generator().row_vecs()));
    Ok(out)
}

/// Every idempotent of `F_q[G]`, by exhaustive squaring.
pub fn all_idempotents(field: &FieldRef, group: &AbelianGroup) -> Result<Vec<GroupAlgebraElement>> {
    let n = group.order();
    let q = field.order() as u64;
    let total = q.checked_pow(n as u32).filter(|&t| t <= 1 << 20).ok_or(Error::BudgetExceeded {
        words: (q as u128).pow(n as u32),
        budget: 1 << 20,
    })?;
    let mut out = Vec::new();
    for idx in 0..total {
        let mut rest = idx;
        let coeffs = (0..n)
            .map(|_| {
                let c = (rest % q) as u32;
                rest /= q;
                c
            })
            .collect();
        let e = GroupAlgebraElement::new(field, group, coeffs)?;
        if is_idempotent(&e) {
            out.push(e);
        }
    }
    Ok(out)
}

/// The degree-11 factor of `x^23 − 1` over GF(2) with the smaller
/// encoding `Σ c_i 2^i`: `1 + x + x^5 + x^6 + x^7 + x^9 + x^11`.
pub fn golay23_generator(f2: &FieldRef) -> Result<Poly> {
    if f2.order() != 2 {
        return Err(Error::FieldMismatch);
    }
    let ctx = CyclotomicContext::new(f2, 23)?;
    let encode = |p: &Poly| p.coeffs().iter().rev().fold(0u64, |acc, &c| acc * 2 + c as u64);
    ctx.leaders()
        .into_iter()
        .map(|l| ctx.minimal_polynomial(l as i64))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|p| p.degree() == Some(11))
        .min_by_key(encode)
        .ok_or(Error::VerificationFailed("x^23 - 1 has no degree-11 factor"))
}

/// The binary Golay code of length 23 as an ideal of `F_2[Z_23]`.
pub fn golay23(f2: &FieldRef) -> Result<LinearCode> {
    let g = golay23_generator(f2)?;
    let group = AbelianGroup::cyclic(23)?;
    let mut coeffs = g.to_dense(23);
    coeffs.truncate(23);
    Ok(ideal_from_generator(&GroupAlgebraElement::new(f2, &group, coeffs)?))
}
