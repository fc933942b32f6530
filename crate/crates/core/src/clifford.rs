//! The Clifford algebra Cl(r,s) on blade bitmasks.
//!
//! Sign convention: with v·w + w·v = −2g(v,w), generators e_1..e_r square
//! to +1 and e_{r+1}..e_n square to −1. Cl(0,n) is the Euclidean algebra
//! in which every generator squares to −1.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{input, Result};
use crate::linalg::{self, RMatrix};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub r: usize,
    pub s: usize,
}

impl Signature {
    pub fn new(r: usize, s: usize) -> Result<Self> {
        if r + s == 0 {
            return input("signature must have at least one generator");
        }
        if r + s > 30 {
            return input("signature too large for bitmask blades");
        }
        Ok(Signature { r, s })
    }

    pub fn euclidean(n: usize) -> Self {
        Signature { r: 0, s: n }
    }

    pub fn positive(n: usize) -> Self {
        Signature { r: n, s: 0 }
    }

    pub fn n(&self) -> usize {
        self.r + self.s
    }

    /// e_{i+1}² for the 0-based index `i`.
    pub fn square(&self, i: usize) -> i8 {
        if i < self.r {
            1
        } else {
            -1
        }
    }

    /// Diagonal entry g_ii = −e_i².
    pub fn metric(&self, i: usize) -> Rational {
        Rational::from_int(-(self.square(i) as i64))
    }

    /// g(v,w) for coordinate vectors.
    pub fn inner(&self, v: &[Rational], w: &[Rational]) -> Rational {
        v.iter().zip(w).enumerate().map(|(i, (a, b))| &self.metric(i) * &(a * b)).sum()
    }

    pub fn is_euclidean(&self) -> bool {
        self.r == 0
    }

    pub fn full_mask(&self) -> u32 {
        if self.n() == 32 {
            u32::MAX
        } else {
            (1u32 << self.n()) - 1
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.r, self.s)
    }
}

/// Product of distinct generators in ascending order; bit i is e_{i+1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(pub u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| self.0 >> i & 1 == 1)
    }
}

// Transpositions needed to sort the concatenation a·b.
fn reorder_parity(a: u32, b: u32) -> u32 {
    let mut count = 0;
    let mut rest = a >> 1;
    while rest != 0 {
        count += (rest & b).count_ones();
        rest >>= 1;
    }
    count
}

/// e_A·e_B = sign·e_{A xor B}.
pub fn blade_product(sig: &Signature, a: Blade, b: Blade) -> (i8, Blade) {
    let mut sign: i8 = if reorder_parity(a.0, b.0).is_multiple_of(2) { 1 } else { -1 };
    let common = a.0 & b.0;
    if common >> sig.r != 0 && (common >> sig.r).count_ones() % 2 == 1 {
        sign = -sign;
    }
    (sign, Blade(a.0 ^ b.0))
}

/// Sign of e_A∧e_B, or zero when the blades share a factor.
pub fn wedge_sign(a: Blade, b: Blade) -> i8 {
    if a.0 & b.0 != 0 {
        0
    } else if reorder_parity(a.0, b.0).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    sig: Signature,
    terms: BTreeMap<u32, Rational>,
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if *m == 0 {
                    c.to_string()
                } else {
                    let name: Vec<String> = Blade(*m).indices().map(|i| (i + 1).to_string()).collect();
                    format!("{c}*e{}", name.join(""))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector { sig, terms: BTreeMap::new() }
    }

    pub fn scalar(sig: Signature, x: Rational) -> Self {
        Self::blade(sig, Blade::SCALAR, x)
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, Rational::one())
    }

    pub fn blade(sig: Signature, b: Blade, x: Rational) -> Self {
        assert!(b.0 & !sig.full_mask() == 0, "blade out of range");
        let mut m = Self::zero(sig);
        if !x.is_zero() {
            m.terms.insert(b.0, x);
        }
        m
    }

    /// Generator e_{i+1} for the 0-based index `i`.
    pub fn generator(sig: Signature, i: usize) -> Self {
        Self::blade(sig, Blade(1 << i), Rational::one())
    }

    pub fn vector(sig: Signature, v: &[Rational]) -> Result<Self> {
        if v.len() != sig.n() {
            return input(format!("vector of length {} in {}", v.len(), sig));
        }
        let mut m = Self::zero(sig);
        for (i, x) in v.iter().enumerate() {
            m.add_term(Blade(1 << i), x);
        }
        Ok(m)
    }

    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (Blade, Rational)>) -> Self {
        let mut m = Self::zero(sig);
        for (b, x) in terms {
            assert!(b.0 & !sig.full_mask() == 0, "blade out of range");
            m.add_term(b, &x);
        }
        m
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Rational)> {
        self.terms.iter().map(|(m, c)| (Blade(*m), c))
    }

    pub fn coeff(&self, b: Blade) -> Rational {
        self.terms.get(&b.0).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, b: Blade, x: &Rational) {
        if x.is_zero() {
            return;
        }
        let e = self.terms.entry(b.0).or_default();
        *e += x;
        if e.is_zero() {
            self.terms.remove(&b.0);
        }
    }

    fn check_sig(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return input(format!("signature mismatch: {} vs {}", self.sig, other.sig));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut m = self.clone();
        for (b, x) in other.terms() {
            m.add_term(b, x);
        }
        Ok(m)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Rational::from_int(-1))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.sig);
        }
        Multivector { sig: self.sig, terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect() }
    }

    /// Geometric product.
    pub fn gp(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut m = Self::zero(self.sig);
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                let (s, c) = blade_product(&self.sig, a, b);
                let p = x * y;
                m.add_term(c, &if s > 0 { p } else { -p });
            }
        }
        Ok(m)
    }

    fn map_blades(&self, f: impl Fn(Blade) -> bool) -> Self {
        Multivector {
            sig: self.sig,
            terms: self.terms.iter().map(|(m, c)| (*m, if f(Blade(*m)) { -c } else { c.clone() })).collect(),
        }
    }

    /// φ: each k-blade scaled by (−1)^k.
    pub fn grade_involution(&self) -> Self {
        self.map_blades(|b| b.grade() % 2 == 1)
    }

    /// Transpose: each k-blade scaled by (−1)^{k(k−1)/2}.
    pub fn reversion(&self) -> Self {
        self.map_blades(|b| {
            let k = b.grade();
            (k * k.saturating_sub(1) / 2) % 2 == 1
        })
    }

    pub fn grade_part(&self, k: u32) -> Self {
        Multivector {
            sig: self.sig,
            terms: self.terms.iter().filter(|(m, _)| m.count_ones() == k).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    pub fn even_part(&self) -> Self {
        Multivector {
            sig: self.sig,
            terms: self.terms.iter().filter(|(m, _)| m.count_ones() % 2 == 0).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.count_ones() % 2 == 0)
    }

    pub fn scalar_part(&self) -> Rational {
        self.coeff(Blade::SCALAR)
    }

    /// Coordinates when the element is a pure vector.
    pub fn as_vector(&self) -> Option<Vec<Rational>> {
        if self.terms.keys().any(|m| m.count_ones() != 1) {
            return None;
        }
        Some((0..self.sig.n()).map(|i| self.coeff(Blade(1 << i))).collect())
    }

    /// Matrix of y ↦ self·y on the full blade basis (dimension 2ⁿ).
    pub fn left_mul_matrix(&self) -> RMatrix {
        let dim = 1usize << self.sig.n();
        let mut m = RMatrix::zeros(dim, dim);
        for col in 0..dim {
            for (a, x) in self.terms() {
                let (s, c) = blade_product(&self.sig, a, Blade(col as u32));
                m.add_to(c.0 as usize, col, &if s > 0 { x.clone() } else { -x });
            }
        }
        m
    }

    /// Two-sided inverse. Versors use x⁻¹ = xᵗ/(x xᵗ); anything else is
    /// solved exactly on the blade basis.
    pub fn inverse(&self) -> Result<Self> {
        let rev = self.reversion();
        let nn = self.gp(&rev)?;
        if nn.terms.keys().all(|m| *m == 0) && !nn.is_zero() {
            let inv = rev.scale(&nn.scalar_part().recip());
            if inv.gp(self)?.terms.keys().all(|m| *m == 0) {
                return Ok(inv);
            }
        }
        let n = self.sig.n();
        if n > 12 {
            return input("general inverse limited to n ≤ 12");
        }
        let l = self.left_mul_matrix();
        let dim = 1usize << n;
        let mut e = vec![Rational::zero(); dim];
        e[0] = Rational::one();
        match linalg::solve(&l.to_dense(), &e) {
            Some((y, 0)) => {
                let inv = Self::from_terms(self.sig, y.into_iter().enumerate().map(|(i, c)| (Blade(i as u32), c)));
                Ok(inv)
            }
            _ => input("multivector is not invertible"),
        }
    }
}

/// Geometric product as a free function.
pub fn geometric_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.gp(b)
}

/// ν = e_1⋯e_n.
pub fn volume_element(sig: Signature) -> Multivector {
    Multivector::blade(sig, Blade(sig.full_mask()), Rational::one())
}

/// ν² in closed form.
pub fn volume_square(sig: Signature) -> i8 {
    let n = sig.n();
    let reorder = if (n * (n - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    let squares = if sig.s.is_multiple_of(2) { 1 } else { -1 };
    reorder * squares
}

/// Which kind of generator ψ adjoins.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extension {
    /// Append e_n with e_n² = −1 (the default).
    Negative,
    /// Insert a generator squaring to +1 at position r+1, shifting the rest.
    Positive,
}

/// ψ(e_i) = e_i·e_n into the even part of the algebra with one more generator.
pub fn psi_embed(x: &Multivector, ext: Extension) -> Result<Multivector> {
    let src = x.signature();
    let (target, new_idx) = match ext {
        Extension::Negative => (Signature::new(src.r, src.s + 1)?, src.n()),
        Extension::Positive => (Signature::new(src.r + 1, src.s)?, src.r),
    };
    let shift = |i: usize| if ext == Extension::Positive && i >= src.r { i + 1 } else { i };
    let en = Multivector::generator(target, new_idx);
    let mut out = Multivector::zero(target);
    for (b, c) in x.terms() {
        let mut term = Multivector::scalar(target, c.clone());
        for i in b.indices() {
            let gi = Multivector::generator(target, shift(i)).gp(&en)?;
            term = term.gp(&gi)?;
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

/// ψ into Cl(r, s+1) with the extra generator e_n² = −1.
pub fn psi_embed_default(x: &Multivector) -> Result<Multivector> {
    psi_embed(x, Extension::Negative)
}

/// Exterior product on the shared blade basis (signature ignored).
pub fn wedge(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.check_sig(b)?;
    let mut m = Multivector::zero(a.sig);
    for (x, p) in a.terms() {
        for (y, q) in b.terms() {
            let s = wedge_sign(x, y);
            if s != 0 {
                let t = p * q;
                m.add_term(Blade(x.0 | y.0), &if s > 0 { t } else { -t });
            }
        }
    }
    Ok(m)
}

/// Euclidean interior product ι_v on exterior forms.
pub fn interior(v: &[Rational], x: &Multivector) -> Result<Multivector> {
    if v.len() != x.sig.n() {
        return input("vector length does not match the dimension");
    }
    let mut m = Multivector::zero(x.sig);
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (b, p) in x.terms() {
            if b.0 >> i & 1 == 1 {
                let before = (b.0 & ((1 << i) - 1)).count_ones();
                let t = c * p;
                m.add_term(Blade(b.0 & !(1 << i)), &if before % 2 == 0 { t } else { -t });
            }
        }
    }
    Ok(m)
}

/// Euclidean inner product of forms; blades are orthonormal.
pub fn form_inner(a: &Multivector, b: &Multivector) -> Rational {
    a.terms().map(|(m, c)| c * &b.coeff(m)).sum()
}

/// ⋆e_A = σ·e_{Aᶜ} with σ chosen so that e_A∧⋆e_A = e_1∧…∧e_n.
pub fn hodge_star(n: usize, x: &Multivector) -> Result<Multivector> {
    if x.sig.n() != n {
        return input(format!("form lives in dimension {}, not {}", x.sig.n(), n));
    }
    let full = x.sig.full_mask();
    let mut m = Multivector::zero(x.sig);
    for (b, c) in x.terms() {
        let comp = Blade(full & !b.0);
        let s = wedge_sign(b, comp);
        m.add_term(comp, &if s > 0 { c.clone() } else { -c });
    }
    Ok(m)
}
