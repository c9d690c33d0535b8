//! σ-duals, hulls and the constructive σ-LCD machinery.

use super::linear::LinearCode;
use super::sigma::SemiLinearMap;
use crate::algebra::Matrix;
use crate::error::{Error, Result};

fn check_lengths(c: &LinearCode, sigma: &SemiLinearMap) -> Result<()> {
    if c.n() != sigma.n() {
        return Err(Error::LengthMismatch {
            expected: c.n(),
            got: sigma.n(),
        });
    }
    if c.field() != sigma.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// `G^σ`: the rows `σ(G(i,:))`.
fn sigma_rows(c: &LinearCode, sigma: &SemiLinearMap) -> Matrix {
    let g = c.generator();
    let mut out = Matrix::zeros(c.field(), 0, c.n());
    for r in 0..g.rows() {
        out.push_row(&sigma.apply(g.row(r)));
    }
    out
}

/// `σ(C)`.
pub fn apply_sigma(sigma: &SemiLinearMap, c: &LinearCode) -> Result<LinearCode> {
    check_lengths(c, sigma)?;
    let image = LinearCode::from_matrix(&sigma_rows(c, sigma));
    if sigma.frob() != 0 && c.k() > 0 && c.field().order() > 2 {
        // Closure under scalars: σ(λ g) must lie in the span of the σ(g).
        let f = c.field();
        let lambda = f.elements().find(|&x| x > 1).unwrap_or(1);
        let g = c.generator();
        for r in 0..g.rows() {
            let scaled: Vec<u32> = g.row(r).iter().map(|&x| f.mul(lambda, x)).collect();
            if !image.contains(&sigma.apply(&scaled)) {
                return Err(Error::ImageNotLinear);
            }
        }
    }
    if image.k() != c.k() {
        return Err(Error::ImageNotLinear);
    }
    Ok(image)
}

/// `C^{⊥σ} = (σ(C))^⊥`.
pub fn sigma_dual(c: &LinearCode, sigma: &SemiLinearMap) -> Result<LinearCode> {
    Ok(apply_sigma(sigma, c)?.dual())
}

/// `dim(C ∩ C^{⊥σ}) = k − rank(G (G^σ)ᵀ)`.
pub fn hull_dim(c: &LinearCode, sigma: &SemiLinearMap) -> Result<usize> {
    check_lengths(c, sigma)?;
    if c.k() == 0 {
        return Ok(0);
    }
    let gram = c.generator().mul_transpose(&sigma_rows(c, sigma))?;
    Ok(c.k() - gram.rank())
}

pub fn is_sigma_lcd(c: &LinearCode, sigma: &SemiLinearMap) -> Result<bool> {
    Ok(hull_dim(c, sigma)? == 0)
}

/// `C ⊆ C^{⊥σ}`.
pub fn is_sigma_self_orthogonal(c: &LinearCode, sigma: &SemiLinearMap) -> Result<bool> {
    Ok(hull_dim(c, sigma)? == c.k())
}

/// `C = C^{⊥σ}`; such a code has dimension `n/2`.
pub fn is_sigma_self_dual(c: &LinearCode, sigma: &SemiLinearMap) -> Result<bool> {
    Ok(2 * c.k() == c.n() && is_sigma_self_orthogonal(c, sigma)?)
}

/// Euclidean hull `C ∩ C^⊥`, from the left kernel of `G Gᵀ`.
pub fn euclidean_hull(c: &LinearCode) -> LinearCode {
    let g = c.generator();
    if g.rows() == 0 {
        return c.clone();
    }
    let gram = g.mul_transpose(g).expect("same code");
    // G Gᵀ is symmetric, so its right and left kernels coincide.
    let kernel = gram.nullspace();
    let mut rows = Matrix::zeros(c.field(), 0, c.n());
    for r in 0..kernel.rows() {
        rows.push_row(&g.left_apply(kernel.row(r)));
    }
    LinearCode::from_matrix(&rows)
}

/// A coordinate permutation bringing the hull to the front, with the
/// generator `[I_h | A′ ; 0 | A″]` of the permuted code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullNormalForm {
    pub pi: SemiLinearMap,
    pub generator: Matrix,
    pub h: usize,
}

impl HullNormalForm {
    /// The block `A′` (first `h` rows, columns `h..n`).
    pub fn a_prime(&self) -> Matrix {
        self.block(0..self.h)
    }

    /// The block `A″` (rows `h..k`, columns `h..n`).
    pub fn a_double_prime(&self) -> Matrix {
        self.block(self.h..self.generator.rows())
    }

    fn block(&self, rows: std::ops::Range<usize>) -> Matrix {
        let g = &self.generator;
        let cols: Vec<usize> = (self.h..g.cols()).collect();
        let mut out = Matrix::zeros(g.field(), 0, cols.len());
        for r in rows {
            let row: Vec<u32> = cols.iter().map(|&c| g.get(r, c)).collect();
            out.push_row(&row);
        }
        out
    }
}

/// Permutation sending `front` (in order) to positions `0..front.len()`,
/// the remaining coordinates following in increasing order.
pub(crate) fn front_permutation(n: usize, front: &[usize]) -> Vec<usize> {
    let mut perm = vec![usize::MAX; n];
    for (i, &c) in front.iter().enumerate() {
        perm[c] = i;
    }
    let mut next = front.len();
    for p in perm.iter_mut() {
        if *p == usize::MAX {
            *p = next;
            next += 1;
        }
    }
    perm
}

/// Brings a code into the hull-first block form.
pub fn normalize_hull(c: &LinearCode) -> HullNormalForm {
    let f = c.field();
    let hull = euclidean_hull(c);
    let h = hull.k();
    let pi = SemiLinearMap::permutation(f, front_permutation(c.n(), hull.pivots()))
        .expect("front_permutation is a bijection");
    // π(hull) in echelon form reads [I_h | A′].
    let hull_img = apply_sigma(&pi, &hull).expect("lengths agree");
    let code_img = apply_sigma(&pi, c).expect("lengths agree");
    let mut generator = hull_img.generator().clone();
    // Rows of the echelon form of π(C) with pivots beyond h vanish on the
    // first h coordinates and complete the hull to a basis.
    let g = code_img.generator();
    for (r, &p) in code_img.pivots().iter().enumerate() {
        if p >= h {
            generator.push_row(g.row(r));
        }
    }
    HullNormalForm { pi, generator, h }
}

/// Outcome of [`make_lcd_sigma`]: the map and the code it makes σ-LCD.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcdWitness {
    pub sigma: SemiLinearMap,
    pub code: LinearCode,
}

/// Finds σ making the code σ-LCD.
///
/// For q > 2 the code itself becomes σ-LCD under `π⁻¹γπ`, where `γ` scales
/// the first `h` coordinates by some `λ ∉ {0, 1}`. Over GF(2) the code
/// `{0} × C` becomes σ-LCD under `π₁⁻¹π₂π₁`, where `π₂` rotates
/// coordinates `0..=h` by one.
pub fn make_lcd_sigma(c: &LinearCode) -> LcdWitness {
    let f = c.field();
    let nf = normalize_hull(c);
    let h = nf.h;
    if f.order() > 2 {
        if h == 0 {
            return LcdWitness {
                sigma: SemiLinearMap::identity(f, c.n()),
                code: c.clone(),
            };
        }
        let lambda = 2;
        let mut diag = vec![1; c.n()];
        diag[..h].fill(lambda);
        let gamma = SemiLinearMap::diagonal(f, diag).expect("λ is nonzero");
        let sigma = nf
            .pi
            .inverse()
            .compose(&gamma)
            .and_then(|s| s.compose(&nf.pi))
            .expect("maps share length and field");
        return LcdWitness {
            sigma,
            code: c.clone(),
        };
    }
    let code = c.prepend_zero();
    let n1 = c.n() + 1;
    let pi1 = nf.pi.extend_front();
    // π₂: (c_0, c_1, …, c_h, …) ↦ (c_1, …, c_h, c_0, …)
    let mut perm2: Vec<usize> = (0..n1).collect();
    if h > 0 {
        perm2[0] = h;
        for (j, p) in perm2.iter_mut().enumerate().take(h + 1).skip(1) {
            *p = j - 1;
        }
    }
    let pi2 = SemiLinearMap::permutation(f, perm2).expect("rotation is a bijection");
    let sigma = pi1
        .inverse()
        .compose(&pi2)
        .and_then(|s| s.compose(&pi1))
        .expect("maps share length and field");
    LcdWitness { sigma, code }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Field, FieldRef};

    fn code(f: &FieldRef, n: usize, rows: &[&[u32]]) -> LinearCode {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        LinearCode::from_rows(f, n, &rows).unwrap()
    }

    #[test]
    fn apply_sigma_examples() {
        let f2 = Field::prime(2).unwrap();
        let c = code(&f2, 2, &[&[1, 0]]);
        let swap = SemiLinearMap::permutation(&f2, vec![1, 0]).unwrap();
        assert_eq!(apply_sigma(&swap, &c).unwrap(), code(&f2, 2, &[&[0, 1]]));
        assert_eq!(
            apply_sigma(&SemiLinearMap::identity(&f2, 2), &c).unwrap(),
            c
        );

        let f4 = Field::new(2, 2, None).unwrap();
        // ω = 2, ω² = ω + 1 = 3
        let c = code(&f4, 2, &[&[1, 2]]);
        let frob = SemiLinearMap::frobenius(&f4, 2, 1);
        assert_eq!(apply_sigma(&frob, &c).unwrap(), code(&f4, 2, &[&[1, 3]]));
    }

    #[test]
    fn hull_examples() {
        let f2 = Field::prime(2).unwrap();
        let id3 = SemiLinearMap::identity(&f2, 3);
        let rep = code(&f2, 3, &[&[1, 1, 1]]);
        assert_eq!(hull_dim(&rep, &id3).unwrap(), 0);
        assert!(is_sigma_lcd(&rep, &id3).unwrap());
        assert!(!is_sigma_self_orthogonal(&rep, &id3).unwrap());
        assert!(!is_sigma_self_dual(&rep, &id3).unwrap());

        let sd = code(&f2, 2, &[&[1, 1]]);
        let id2 = SemiLinearMap::identity(&f2, 2);
        assert_eq!(hull_dim(&sd, &id2).unwrap(), 1);
        assert!(!is_sigma_lcd(&sd, &id2).unwrap());
        assert!(is_sigma_self_dual(&sd, &id2).unwrap());

        let f5 = Field::prime(5).unwrap();
        let c = code(&f5, 2, &[&[1, 2]]);
        let id = SemiLinearMap::identity(&f5, 2);
        assert_eq!(hull_dim(&c, &id).unwrap(), 1);
        assert!(is_sigma_self_orthogonal(&c, &id).unwrap());
        assert!(is_sigma_self_dual(&c, &id).unwrap());
        let d = SemiLinearMap::diagonal(&f5, vec![2, 1]).unwrap();
        assert!(is_sigma_lcd(&c, &d).unwrap());
    }

    #[test]
    fn sigma_dual_examples() {
        let f2 = Field::prime(2).unwrap();
        let sd = code(&f2, 2, &[&[1, 1]]);
        let swap = SemiLinearMap::permutation(&f2, vec![1, 0]).unwrap();
        assert_eq!(sigma_dual(&sd, &swap).unwrap(), sd);
        let rep = code(&f2, 3, &[&[1, 1, 1]]);
        assert_eq!(
            sigma_dual(&rep, &SemiLinearMap::identity(&f2, 3)).unwrap(),
            rep.dual()
        );

        // Frobenius on GF(4) gives the Hermitian dual: Σ b_i c_i^2 = 0.
        let f4 = Field::new(2, 2, None).unwrap();
        let c = code(&f4, 3, &[&[1, 2, 3]]);
        let herm = sigma_dual(&c, &SemiLinearMap::frobenius(&f4, 3, 1)).unwrap();
        assert_eq!(herm.k(), 2);
        let g = c.generator().row(0).to_vec();
        for r in 0..herm.k() {
            let b = herm.generator().row(r);
            let s = b.iter().zip(&g).fold(0, |acc, (&x, &y)| {
                f4.add(acc, f4.mul(x, f4.mul(y, y)))
            });
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn normalize_hull_examples() {
        let f5 = Field::prime(5).unwrap();
        let nf = normalize_hull(&code(&f5, 2, &[&[1, 2]]));
        assert_eq!(nf.h, 1);
        assert!(nf.pi.is_identity());
        assert_eq!(nf.generator.row(0), &[1, 2]);

        let f2 = Field::prime(2).unwrap();
        let nf = normalize_hull(&code(&f2, 2, &[&[1, 1]]));
        assert_eq!((nf.h, nf.generator.row(0)), (1, &[1u32, 1][..]));

        let rep = code(&f2, 3, &[&[1, 1, 1]]);
        let nf = normalize_hull(&rep);
        assert_eq!(nf.h, 0);
        assert!(nf.pi.is_identity());
        assert_eq!(&nf.generator, rep.generator());
    }

    #[test]
    fn make_lcd_sigma_examples() {
        let f5 = Field::prime(5).unwrap();
        let c = code(&f5, 2, &[&[1, 2]]);
        let w = make_lcd_sigma(&c);
        assert_eq!(w.sigma, SemiLinearMap::diagonal(&f5, vec![2, 1]).unwrap());
        assert!(is_sigma_lcd(&w.code, &w.sigma).unwrap());

        let f2 = Field::prime(2).unwrap();
        let w = make_lcd_sigma(&code(&f2, 2, &[&[1, 1]]));
        assert_eq!(w.code, code(&f2, 3, &[&[0, 1, 1]]));
        assert_eq!(w.sigma.perm(), &[1, 0, 2]);
        assert_eq!(w.sigma.apply(&[0, 1, 1]), vec![1, 0, 1]);
        assert!(is_sigma_lcd(&w.code, &w.sigma).unwrap());

        let rep = code(&f5, 3, &[&[1, 1, 1]]);
        let w = make_lcd_sigma(&rep);
        assert!(w.sigma.is_identity());
    }
}
