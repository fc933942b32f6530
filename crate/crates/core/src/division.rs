//! The real division algebras and the octonions, built by Cayley–Dickson doubling.
//!
//! Coefficient layouts: ℂ = (1, i); ℍ = (1, i, j, k); 𝕆 = ℍ ⊕ ℍ with basis
//! (1,0), (i,0), (j,0), (k,0), (0,1), (0,i), (0,j), (0,k).

use std::fmt;
use std::sync::OnceLock;

use crate::error::{input, Result};
use crate::linalg::RMatrix;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    R,
    C,
    H,
    O,
}

impl Algebra {
    /// Real dimension.
    pub fn dim(self) -> usize {
        match self {
            Algebra::R => 1,
            Algebra::C => 2,
            Algebra::H => 4,
            Algebra::O => 8,
        }
    }

    pub fn from_dim(d: usize) -> Option<Self> {
        match d {
            1 => Some(Algebra::R),
            2 => Some(Algebra::C),
            4 => Some(Algebra::H),
            8 => Some(Algebra::O),
            _ => None,
        }
    }

    pub fn is_associative(self) -> bool {
        self != Algebra::O
    }

    pub fn name(self) -> &'static str {
        match self {
            Algebra::R => "R",
            Algebra::C => "C",
            Algebra::H => "H",
            Algebra::O => "O",
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn cd_conj(a: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = a.iter().map(|x| -x).collect();
    out[0] = a[0].clone();
    out
}

// (a,b)(c,d) = (ac − d̄b, da + bc̄)
fn cd_mul(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let n = x.len();
    if n == 1 {
        return vec![&x[0] * &y[0]];
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let ac = cd_mul(a, c);
    let db = cd_mul(&cd_conj(d), b);
    let da = cd_mul(d, a);
    let bc = cd_mul(b, &cd_conj(c));
    let mut out = Vec::with_capacity(n);
    out.extend(ac.iter().zip(&db).map(|(p, q)| p - q));
    out.extend(da.iter().zip(&bc).map(|(p, q)| p + q));
    out
}

/// An element of ℝ, ℂ, ℍ or 𝕆 with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KElement {
    algebra: Algebra,
    coeffs: Vec<Rational>,
}

impl KElement {
    pub fn new(algebra: Algebra, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != algebra.dim() {
            return input(format!("{} needs {} coefficients, got {}", algebra, algebra.dim(), coeffs.len()));
        }
        Ok(KElement { algebra, coeffs })
    }

    pub fn from_ints(algebra: Algebra, coeffs: &[i64]) -> Result<Self> {
        Self::new(algebra, coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn zero(algebra: Algebra) -> Self {
        KElement { algebra, coeffs: vec![Rational::zero(); algebra.dim()] }
    }

    pub fn one(algebra: Algebra) -> Self {
        Self::basis(algebra, 0)
    }

    pub fn real(algebra: Algebra, x: Rational) -> Self {
        let mut e = Self::zero(algebra);
        e.coeffs[0] = x;
        e
    }

    /// The `idx`-th basis unit. Panics when out of range.
    pub fn basis(algebra: Algebra, idx: usize) -> Self {
        let mut e = Self::zero(algebra);
        e.coeffs[idx] = Rational::one();
        e
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn re(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn neg(&self) -> Self {
        KElement { algebra: self.algebra, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        KElement { algebra: self.algebra, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_tag(other)?;
        Ok(KElement {
            algebra: self.algebra,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    fn same_tag(&self, other: &Self) -> Result<()> {
        if self.algebra != other.algebra {
            return input(format!("algebra mismatch: {} vs {}", self.algebra, other.algebra));
        }
        Ok(())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(Rational::to_f64).collect()
    }
}

/// Product by the doubling formula.
pub fn mul(a: &KElement, b: &KElement) -> Result<KElement> {
    a.same_tag(b)?;
    Ok(KElement { algebra: a.algebra, coeffs: cd_mul(&a.coeffs, &b.coeffs) })
}

pub fn conj(x: &KElement) -> KElement {
    KElement { algebra: x.algebra, coeffs: cd_conj(&x.coeffs) }
}

pub fn norm_sq(x: &KElement) -> Rational {
    x.coeffs.iter().map(Rational::square).sum()
}

/// Real inner product Re(x̄y), the sum of coefficient products.
pub fn inner(x: &KElement, y: &KElement) -> Result<Rational> {
    x.same_tag(y)?;
    Ok(x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| a * b).sum())
}

/// Inverse x̄/|x|². Fails on zero.
pub fn inverse(x: &KElement) -> Result<KElement> {
    let n = norm_sq(x);
    if n.is_zero() {
        return input("zero has no inverse");
    }
    Ok(conj(x).scale(&n.recip()))
}

/// Memoized basis products e_a·e_b = sign·e_c, derived from the doubling formula.
pub fn basis_table(algebra: Algebra) -> &'static [Vec<(i8, usize)>] {
    static TABLES: [OnceLock<Vec<Vec<(i8, usize)>>>; 4] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let slot = match algebra {
        Algebra::R => 0,
        Algebra::C => 1,
        Algebra::H => 2,
        Algebra::O => 3,
    };
    TABLES[slot].get_or_init(|| {
        let d = algebra.dim();
        (0..d)
            .map(|a| {
                (0..d)
                    .map(|b| {
                        let p = cd_mul(KElement::basis(algebra, a).coeffs(), KElement::basis(algebra, b).coeffs());
                        let (idx, c) = p.iter().enumerate().find(|(_, c)| !c.is_zero()).unwrap();
                        (c.signum() as i8, idx)
                    })
                    .collect()
            })
            .collect()
    })
}

/// Product through the basis table; agrees with [`mul`].
pub fn mul_table(a: &KElement, b: &KElement) -> Result<KElement> {
    a.same_tag(b)?;
    let t = basis_table(a.algebra);
    let mut out = KElement::zero(a.algebra);
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let (s, k) = t[i][j];
            let p = x * y;
            if s > 0 {
                out.coeffs[k] += p;
            } else {
                out.coeffs[k] -= p;
            }
        }
    }
    Ok(out)
}

/// Real matrix of y ↦ x·y in the coefficient basis.
pub fn left_mul_matrix(x: &KElement) -> RMatrix {
    let d = x.algebra.dim();
    let t = basis_table(x.algebra);
    let mut m = RMatrix::zeros(d, d);
    for (i, c) in x.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (b, row) in t[i].iter().enumerate() {
            let (s, k) = row;
            m.add_to(*k, b, &if *s > 0 { c.clone() } else { -c });
        }
    }
    m
}

/// Real matrix of y ↦ y·x in the coefficient basis.
pub fn right_mul_matrix(x: &KElement) -> RMatrix {
    let d = x.algebra.dim();
    let t = basis_table(x.algebra);
    let mut m = RMatrix::zeros(d, d);
    for (i, c) in x.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for b in 0..d {
            let (s, k) = t[b][i];
            m.add_to(k, b, &if s > 0 { c.clone() } else { -c });
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn h(c: &[i64]) -> KElement {
        KElement::from_ints(Algebra::H, c).unwrap()
    }

    #[test]
    fn quaternion_units() {
        let i = h(&[0, 1, 0, 0]);
        let j = h(&[0, 0, 1, 0]);
        assert_eq!(mul(&i, &j).unwrap(), h(&[0, 0, 0, 1]));
        assert_eq!(mul(&j, &i).unwrap(), h(&[0, 0, 0, -1]));
        assert_eq!(conj(&i), h(&[0, -1, 0, 0]));
        assert_eq!(norm_sq(&h(&[1, 1, 1, 1])), rat(4, 1));
    }

    #[test]
    fn octonion_examples() {
        let o = |i| KElement::basis(Algebra::O, i);
        assert_eq!(mul(&o(1), &o(2)).unwrap(), o(3));
        assert_eq!(mul(&o(4), &o(4)).unwrap(), o(0).neg());
        let x = KElement::from_ints(Algebra::O, &[0, 1, 0, 0, 1, 0, 0, 0]).unwrap();
        let want = KElement::from_ints(Algebra::O, &[0, -1, 0, 0, -1, 0, 0, 0]).unwrap();
        assert_eq!(conj(&x), want);
        assert_eq!(norm_sq(&o(4)), Rational::one());
    }

    #[test]
    fn complex_and_real() {
        let z = KElement::from_ints(Algebra::C, &[3, 4]).unwrap();
        assert_eq!(norm_sq(&z), rat(25, 1));
        let r = KElement::new(Algebra::R, vec![rat(3, 2)]).unwrap();
        assert_eq!(conj(&r), r);
    }

    #[test]
    fn tag_mismatch_is_rejected() {
        let a = KElement::one(Algebra::C);
        let b = KElement::one(Algebra::H);
        assert!(mul(&a, &b).is_err());
        assert!(KElement::from_ints(Algebra::H, &[1, 2]).is_err());
    }

    #[test]
    fn table_agrees_with_formula() {
        for alg in [Algebra::R, Algebra::C, Algebra::H, Algebra::O] {
            for a in 0..alg.dim() {
                for b in 0..alg.dim() {
                    let x = KElement::basis(alg, a);
                    let y = KElement::basis(alg, b);
                    assert_eq!(mul(&x, &y).unwrap(), mul_table(&x, &y).unwrap());
                }
            }
        }
    }

    #[test]
    fn regular_representations() {
        let i = h(&[0, 1, 0, 0]);
        let j = h(&[0, 0, 1, 0]);
        let y = h(&[1, 2, 3, 4]);
        let ly = left_mul_matrix(&i).mul_vec(y.coeffs());
        assert_eq!(ly, mul(&i, &y).unwrap().coeffs().to_vec());
        let ry = right_mul_matrix(&j).mul_vec(y.coeffs());
        assert_eq!(ry, mul(&y, &j).unwrap().coeffs().to_vec());
    }
}
