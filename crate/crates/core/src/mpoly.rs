//! Polynomials in the equivariant parameters `t_1, .., t_n`.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use crate::combinat::Permutation;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Exponent vector, one entry per variable.
pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly<F> {
    nvars: usize,
    terms: BTreeMap<Exponent, F>,
}

impl<F: Scalar> MPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    /// The variable `t_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, F::one())
    }

    pub fn monomial(exp: Exponent, c: F) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &Exponent) -> F {
        self.terms.get(exp).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: Exponent, c: F) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let v = o.get().clone() + c;
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            p.add_term(e.clone(), x.clone() * c.clone());
        }
        p
    }

    /// The ring automorphism `t_i -> t_{w(i)}`.
    pub fn permute_vars(&self, w: &Permutation) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &k) in e.iter().enumerate() {
                f[w.apply(i)] = k;
            }
            p.add_term(f, x.clone());
        }
        p
    }

    /// Substitutes `t_a := t_b`.
    pub fn identify_vars(&self, a: usize, b: usize) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            let mut f = e.clone();
            f[b] += f[a];
            f[a] = 0;
            p.add_term(f, x.clone());
        }
        p
    }

    /// Exact quotient by `t_a - t_b`; fails when the division leaves a
    /// remainder.
    pub fn div_linear(&self, a: usize, b: usize) -> Result<Self> {
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        loop {
            // highest power of t_a first
            let lead = rem
                .terms
                .iter()
                .filter(|(e, _)| e[a] > 0)
                .max_by_key(|(e, _)| e[a])
                .map(|(e, x)| (e.clone(), x.clone()));
            let Some((e, x)) = lead else { break };
            let mut qe = e.clone();
            qe[a] -= 1;
            quot.add_term(qe.clone(), x.clone());
            rem.add_term(e, -x.clone());
            let mut shifted = qe;
            shifted[b] += 1;
            rem.add_term(shifted, x);
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::NotPolynomial(format!(
                "remainder after dividing by t{} - t{}",
                a + 1,
                b + 1
            )))
        }
    }
}

impl<F: Scalar> Add for &MPoly<F> {
    type Output = MPoly<F>;
    fn add(self, rhs: &MPoly<F>) -> MPoly<F> {
        let mut p = self.clone();
        for (e, x) in &rhs.terms {
            p.add_term(e.clone(), x.clone());
        }
        p
    }
}

impl<F: Scalar> Sub for &MPoly<F> {
    type Output = MPoly<F>;
    fn sub(self, rhs: &MPoly<F>) -> MPoly<F> {
        let mut p = self.clone();
        for (e, x) in &rhs.terms {
            p.add_term(e.clone(), -x.clone());
        }
        p
    }
}

impl<F: Scalar> Neg for &MPoly<F> {
    type Output = MPoly<F>;
    fn neg(self) -> MPoly<F> {
        self.scale(&-F::one())
    }
}

impl<F: Scalar> Mul for &MPoly<F> {
    type Output = MPoly<F>;
    fn mul(self, rhs: &MPoly<F>) -> MPoly<F> {
        let mut p = MPoly::zero(self.nvars);
        for (e, x) in &self.terms {
            for (f, y) in &rhs.terms {
                let g = e.iter().zip(f).map(|(a, b)| a + b).collect();
                p.add_term(g, x.clone() * y.clone());
            }
        }
        p
    }
}

/// The monomials of one total degree in `n` variables, in a fixed order,
/// with reverse lookup.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    nvars: usize,
    degree: u32,
    monomials: Vec<Exponent>,
    index: HashMap<Exponent, usize>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, degree: u32) -> Self {
        fn rec(i: usize, rem: u32, cur: &mut Exponent, out: &mut Vec<Exponent>) {
            if i + 1 == cur.len() {
                cur[i] = rem;
                out.push(cur.clone());
                return;
            }
            for k in (0..=rem).rev() {
                cur[i] = k;
                rec(i + 1, rem - k, cur, out);
            }
        }
        let mut monomials = Vec::new();
        if nvars == 0 {
            if degree == 0 {
                monomials.push(Vec::new());
            }
        } else {
            rec(0, degree, &mut vec![0; nvars], &mut monomials);
        }
        let index = monomials
            .iter()
            .enumerate()
            .map(|(k, e)| (e.clone(), k))
            .collect();
        MonomialBasis {
            nvars,
            degree,
            monomials,
            index,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Exponent] {
        &self.monomials
    }

    pub fn index_of(&self, e: &Exponent) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Position of the monomial obtained from monomial `k` by `t_i -> t_{w(i)}`.
    pub fn permuted_index(&self, k: usize, w: &Permutation) -> usize {
        let e = &self.monomials[k];
        let mut f = vec![0; self.nvars];
        for (i, &x) in e.iter().enumerate() {
            f[w.apply(i)] = x;
        }
        self.index[&f]
    }
}

/// Elementary symmetric polynomial `e_k(t_1, .., t_n)`.
pub fn elementary<F: Scalar>(nvars: usize, k: usize) -> MPoly<F> {
    let mut p = MPoly::zero(nvars);
    for mask in 0u32..(1 << nvars) {
        if mask.count_ones() as usize == k {
            let e = (0..nvars).map(|i| mask >> i & 1).collect();
            p.add_term(e, F::one());
        }
    }
    p
}
