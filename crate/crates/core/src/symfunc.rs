//! Homogeneous symmetric functions of degree `n` with coefficients in
//! `Q(q)`, expressed in one of the five classical bases.
//!
//! Conversions pivot through the power sums. For each degree the transition
//! matrices between `p` and the other bases are computed once and shared.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::combinat::{partitions_of, Partition};
use crate::error::{check_range, Error, Result};
use crate::linalg::Matrix;
use crate::qrat::Substitution;
use crate::scalar::Scalar;
use crate::{Q, QRat};

/// Largest degree with basis tables.
pub const MAX_DEGREE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Monomial.
    M,
    /// Elementary.
    E,
    /// Complete homogeneous.
    H,
    /// Power sum.
    P,
    /// Schur.
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

    pub fn letter(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            _ => Err(Error::Parse(format!("unknown basis '{s}', expected m|e|h|p|s"))),
        }
    }
}

impl Serialize for Basis {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.letter())
    }
}

/// Character value of the irreducible `lambda` on the class `mu`, by
/// removing border strips from the beta-set of `lambda`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.size(), mu.size(), "character of mismatched sizes");
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    mn_beta(beta, mu.parts())
}

fn mn_beta(beta: Vec<usize>, strips: &[usize]) -> i64 {
    let Some((&k, rest)) = strips.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        let v = mn_beta(next, rest);
        total += if between % 2 == 0 { v } else { -v };
    }
    total
}

/// An expansion in power sums with plain rational coefficients.
type PExp = BTreeMap<Partition, Q>;

fn pexp_mul(a: &PExp, b: &PExp) -> PExp {
    let mut out = PExp::new();
    for (la, x) in a {
        for (lb, y) in b {
            let key = la.join(lb);
            let v = out.entry(key).or_insert_with(Q::zero);
            *v += x.clone() * y.clone();
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `e_k` (signed) or `h_k` (unsigned) as `sum_mu c_mu p_mu / z_mu`.
fn single_row_in_p(k: usize, signed: bool) -> PExp {
    partitions_of(k)
        .expect("degree within range")
        .into_iter()
        .map(|mu| {
            let sign = if signed { mu.sign() } else { 1 };
            let c = Q::new(sign.into(), (mu.z() as i64).into());
            (mu, c)
        })
        .collect()
}

/// Number of ways to distribute the parts of `mu` into bins with the sizes of
/// `lambda`, which is the coefficient of `m_lambda` in `p_mu`.
fn bin_count(mu: &[usize], bins: &mut [usize]) -> u64 {
    let Some((&first, rest)) = mu.split_first() else {
        return u64::from(bins.iter().all(|&b| b == 0));
    };
    let mut count = 0;
    for i in 0..bins.len() {
        if bins[i] >= first {
            bins[i] -= first;
            count += bin_count(rest, bins);
            bins[i] += first;
        }
    }
    count
}

struct Tables {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// Row `lambda` holds basis element `b_lambda` in power sums.
    to_p: Vec<Matrix<Q>>,
    /// Row `mu` holds `p_mu` in basis `b`.
    from_p: Vec<Matrix<Q>>,
}

impl Tables {
    fn build(n: usize) -> Tables {
        let mut parts = partitions_of(n).expect("degree within range");
        parts.reverse();
        let index: HashMap<Partition, usize> =
            parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let k = parts.len();
        let dense = |exp: &PExp| {
            let mut row = vec![Q::zero(); k];
            for (mu, c) in exp {
                row[index[mu]] = c.clone();
            }
            row
        };

        let mut e_rows = Vec::with_capacity(k);
        let mut h_rows = Vec::with_capacity(k);
        let e_single: Vec<PExp> = (0..=n).map(|j| single_row_in_p(j, true)).collect();
        let h_single: Vec<PExp> = (0..=n).map(|j| single_row_in_p(j, false)).collect();
        for lambda in &parts {
            let mut e = PExp::from([(Partition::empty(), Q::one())]);
            let mut h = e.clone();
            for &part in lambda.parts() {
                e = pexp_mul(&e, &e_single[part]);
                h = pexp_mul(&h, &h_single[part]);
            }
            e_rows.push(dense(&e));
            h_rows.push(dense(&h));
        }
        let e_to_p = Matrix::from_rows(e_rows);
        let h_to_p = Matrix::from_rows(h_rows);

        let p_to_m = Matrix::from_rows(
            parts
                .iter()
                .map(|mu| {
                    parts
                        .iter()
                        .map(|lambda| {
                            let mut bins = lambda.parts().to_vec();
                            Q::from_int(bin_count(mu.parts(), &mut bins) as i64)
                        })
                        .collect()
                })
                .collect(),
        );

        let chi: Vec<Vec<i64>> = parts
            .iter()
            .map(|lambda| parts.iter().map(|mu| mn_character(lambda, mu)).collect())
            .collect();
        let s_to_p = Matrix::from_rows(
            (0..k)
                .map(|l| {
                    (0..k)
                        .map(|m| Q::new(chi[l][m].into(), (parts[m].z() as i64).into()))
                        .collect()
                })
                .collect(),
        );
        let p_to_s =
            Matrix::from_rows((0..k).map(|m| (0..k).map(|l| Q::from_int(chi[l][m])).collect()).collect());

        let inv = |m: &Matrix<Q>| m.inverse().expect("transition matrix is invertible");
        let to_p = vec![inv(&p_to_m), e_to_p.clone(), h_to_p.clone(), Matrix::identity(k), s_to_p];
        let from_p = vec![p_to_m, inv(&e_to_p), inv(&h_to_p), Matrix::identity(k), p_to_s];
        Tables {
            parts,
            index,
            to_p,
            from_p,
        }
    }
}

fn tables(n: usize) -> &'static Tables {
    static CACHE: [OnceLock<Tables>; MAX_DEGREE + 1] = [const { OnceLock::new() }; MAX_DEGREE + 1];
    CACHE[n].get_or_init(|| Tables::build(n))
}

/// All partitions of `n` in the fixed output order, lexicographically
/// increasing so that `(1, .., 1)` comes first.
pub fn partition_order(n: usize) -> Result<&'static [Partition]> {
    check_range("symmetric function degree", n, MAX_DEGREE)?;
    Ok(&tables(n).parts)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    n: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, QRat>,
}

impl SymFunc {
    pub fn zero(n: usize, basis: Basis) -> Result<Self> {
        check_range("symmetric function degree", n, MAX_DEGREE)?;
        Ok(SymFunc {
            n,
            basis,
            coeffs: BTreeMap::new(),
        })
    }

    /// A single basis element `b_lambda`.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Result<Self> {
        Self::from_terms(basis, lambda.size(), [(lambda, QRat::one())])
    }

    /// Convenience constructor from parts, e.g. `elem(Basis::E, &[2, 1])`.
    pub fn elem(basis: Basis, parts: &[usize]) -> Result<Self> {
        Self::basis_element(basis, Partition::new(parts.to_vec())?)
    }

    /// Sums the given terms; every partition must have size `n`.
    pub fn from_terms<I>(basis: Basis, n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, QRat)>,
    {
        let mut f = Self::zero(n, basis)?;
        for (lambda, c) in terms {
            if lambda.size() != n {
                return Err(Error::InvalidArgument(format!(
                    "partition {lambda} does not have size {n}"
                )));
            }
            f.add_term(lambda, c);
        }
        Ok(f)
    }

    fn add_term(&mut self, lambda: Partition, c: QRat) {
        if c.is_zero() {
            return;
        }
        let v = match self.coeffs.remove(&lambda) {
            Some(old) => &old + &c,
            None => c,
        };
        if !v.is_zero() {
            self.coeffs.insert(lambda, v);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> QRat {
        self.coeffs.get(lambda).cloned().unwrap_or_else(QRat::zero)
    }

    /// Nonzero terms in the fixed partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QRat)> {
        self.coeffs.iter()
    }

    fn map_coeffs(&self, f: impl Fn(&Partition, &QRat) -> QRat) -> SymFunc {
        let mut out = SymFunc {
            n: self.n,
            basis: self.basis,
            coeffs: BTreeMap::new(),
        };
        for (lambda, c) in &self.coeffs {
            out.add_term(lambda.clone(), f(lambda, c));
        }
        out
    }

    pub fn scale(&self, c: &QRat) -> SymFunc {
        self.map_coeffs(|_, x| x * c)
    }

    /// Applies a substitution in `q` to every coefficient.
    pub fn substitute(&self, sub: &Substitution<Q>) -> SymFunc {
        self.map_coeffs(|_, x| x.substitute(sub))
    }

    /// Evaluates every coefficient at `q = r`.
    pub fn eval_q(&self, r: &Q) -> Result<SymFunc> {
        let mut out = SymFunc::zero(self.n, self.basis)?;
        for (lambda, c) in &self.coeffs {
            out.add_term(lambda.clone(), QRat::constant(c.eval(r)?));
        }
        Ok(out)
    }

    pub fn change_basis(&self, target: Basis) -> SymFunc {
        if target == self.basis {
            return self.clone();
        }
        let t = tables(self.n);
        let k = t.parts.len();
        let from = &t.to_p[self.basis.slot()];
        let to = &t.from_p[target.slot()];
        let mut in_p = vec![QRat::zero(); k];
        for (lambda, c) in &self.coeffs {
            let row = t.index[lambda];
            for (mu, slot) in in_p.iter_mut().enumerate() {
                let m = &from[(row, mu)];
                if !m.is_zero() {
                    *slot = &*slot + &c.scale(m);
                }
            }
        }
        let mut out = vec![QRat::zero(); k];
        if target == Basis::P {
            out = in_p;
        } else {
            for (mu, c) in in_p.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (nu, slot) in out.iter_mut().enumerate() {
                    let m = &to[(mu, nu)];
                    if !m.is_zero() {
                        *slot = &*slot + &c.scale(m);
                    }
                }
            }
        }
        let mut f = SymFunc {
            n: self.n,
            basis: target,
            coeffs: BTreeMap::new(),
        };
        for (i, c) in out.into_iter().enumerate() {
            f.add_term(t.parts[i].clone(), c);
        }
        f
    }

    /// Transforms through power sums by `p_lambda -> w(lambda) p_lambda` and
    /// returns to the original basis.
    fn diagonal_in_p(&self, weight: impl Fn(&Partition) -> QRat) -> SymFunc {
        let b = self.basis;
        self.change_basis(Basis::P)
            .map_coeffs(|lambda, c| c * &weight(lambda))
            .change_basis(b)
    }

    /// The involution exchanging `e_lambda` and `h_lambda`.
    pub fn omega(&self) -> SymFunc {
        match self.basis {
            Basis::E | Basis::H => {
                let mut f = self.clone();
                f.basis = if self.basis == Basis::E { Basis::H } else { Basis::E };
                f
            }
            Basis::S => SymFunc {
                n: self.n,
                basis: Basis::S,
                coeffs: self
                    .coeffs
                    .iter()
                    .map(|(l, c)| (l.conjugate(), c.clone()))
                    .collect(),
            },
            Basis::P => self.map_coeffs(|lambda, c| c.scale(&Q::from_int(lambda.sign()))),
            Basis::M => self.diagonal_in_p(|lambda| QRat::from_int(lambda.sign())),
        }
    }

    /// Product, returned in the basis of `self`.
    pub fn multiply(&self, other: &SymFunc) -> Result<SymFunc> {
        let n = self.n + other.n;
        check_range("product degree", n, MAX_DEGREE)?;
        let multiplicative = matches!(self.basis, Basis::E | Basis::H | Basis::P);
        let work = if multiplicative { self.basis } else { Basis::P };
        let a = self.change_basis(work);
        let b = other.change_basis(work);
        let mut out = SymFunc::zero(n, work)?;
        for (la, x) in &a.coeffs {
            for (lb, y) in &b.coeffs {
                out.add_term(la.join(lb), x * y);
            }
        }
        Ok(out.change_basis(self.basis))
    }

    /// Adds `other`, expressed in the basis of `self`.
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.combine(other, true)
    }

    fn combine(&self, other: &SymFunc, negate: bool) -> Result<SymFunc> {
        if self.n != other.n {
            return Err(Error::InvalidArgument(format!(
                "cannot add symmetric functions of degrees {} and {}",
                self.n, other.n
            )));
        }
        let mut out = self.clone();
        for (lambda, c) in other.change_basis(self.basis).coeffs {
            out.add_term(lambda, if negate { -c } else { c });
        }
        Ok(out)
    }

    /// The substitution `f -> f[a(q) Z]`, i.e. `p_k -> a(q^k) p_k`.
    pub fn plethysm_scale(&self, a: &QRat) -> SymFunc {
        let mut powers: Vec<Option<QRat>> = vec![None; self.n + 1];
        for k in 1..=self.n {
            powers[k] = Some(a.substitute(&Substitution::QPower(k)));
        }
        self.diagonal_in_p(|lambda| {
            lambda
                .parts()
                .iter()
                .map(|&k| powers[k].clone().expect("part within degree"))
                .product()
        })
    }

    /// Tests whether the `e`-coefficients become polynomials in `q` with
    /// nonnegative coefficients after `q -> q + 1`.
    pub fn e_positive_shifted(&self) -> Result<EPositivity> {
        let shifted = self
            .change_basis(Basis::E)
            .substitute(&Substitution::q_plus_one());
        let mut witness = None;
        for (lambda, c) in shifted.terms() {
            let Some(p) = c.as_polynomial() else {
                return Err(Error::NotPolynomial(format!(
                    "coefficient of e_{lambda} is {}",
                    c.to_wire()
                )));
            };
            if witness.is_none() && p.coeffs().iter().any(|x| x.is_negative()) {
                witness = Some((lambda.clone(), c.clone()));
            }
        }
        Ok(EPositivity {
            positive: witness.is_none(),
            expansion: shifted,
            witness,
        })
    }

    /// Coefficient of `m_{1^n}`: the (graded) dimension of a module with this
    /// Frobenius characteristic.
    pub fn dimension_of(&self) -> QRat {
        self.change_basis(Basis::M).coeff(&Partition::ones(self.n))
    }

    /// First partition (in output order) where `self` and `other` differ,
    /// compared in the basis of `self`, with both coefficients.
    pub fn first_difference(&self, other: &SymFunc) -> Option<(Partition, QRat, QRat)> {
        if self.n != other.n {
            return Some((Partition::empty(), QRat::zero(), QRat::zero()));
        }
        let o = other.change_basis(self.basis);
        partition_order(self.n)
            .expect("degree within range")
            .iter()
            .find(|l| self.coeff(l) != o.coeff(l))
            .map(|l| (l.clone(), self.coeff(l), o.coeff(l)))
    }

    /// Equality as abstract symmetric functions.
    pub fn same_as(&self, other: &SymFunc) -> bool {
        self.first_difference(other).is_none()
    }

    pub fn to_latex(&self) -> String {
        self.render(|c| c.to_latex().replace(' ', ""), |l| {
            format!("{}_{{{}}}", self.basis.letter(), subscript(l))
        }, false)
    }

    pub fn to_plain(&self) -> String {
        self.render(|c| c.to_plain(), |l| format!("{}{}", self.basis.letter(), l), true)
    }

    fn render(
        &self,
        coeff: impl Fn(&QRat) -> String,
        elem: impl Fn(&Partition) -> String,
        star: bool,
    ) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (lambda, c)) in self.terms().enumerate() {
            let (neg, mag) = if is_negative_lead(c) { (true, -c.clone()) } else { (false, c.clone()) };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                let s = coeff(&mag);
                let compound = mag.denom().is_one() && mag.numer().coeffs().iter().filter(|x| !x.is_zero()).count() > 1;
                if compound {
                    out.push_str(&format!("({s})"));
                } else {
                    out.push_str(&s);
                }
                if star {
                    out.push('*');
                }
            }
            out.push_str(&elem(lambda));
        }
        out
    }
}

fn is_negative_lead(c: &QRat) -> bool {
    c.numer().leading().is_some_and(|x| x.is_negative())
}

fn subscript(lambda: &Partition) -> String {
    let parts: Vec<String> = lambda.parts().iter().map(|p| p.to_string()).collect();
    if lambda.parts().iter().all(|&p| p < 10) {
        parts.concat()
    } else {
        parts.join(",")
    }
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Terms<'a>(&'a SymFunc);
        struct Term<'a>(&'a Partition, &'a QRat);
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("partition", self.0)?;
                m.serialize_entry("coeff", &self.1.to_wire())?;
                m.end()
            }
        }
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_seq(self.0.terms().map(|(l, c)| Term(l, c)))
            }
        }
        let mut st = s.serialize_struct("SymFunc", 3)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("terms", &Terms(self))?;
        st.end()
    }
}

/// Outcome of [`SymFunc::e_positive_shifted`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EPositivity {
    pub positive: bool,
    /// The `e`-expansion after `q -> q + 1`.
    pub expansion: SymFunc,
    /// The first term with a negative coefficient, if any.
    pub witness: Option<(Partition, QRat)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::factorial;
    use proptest::prelude::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn qr(s: &str) -> QRat {
        s.parse().unwrap()
    }

    fn sf(basis: Basis, n: usize, terms: &[(&[usize], &str)]) -> SymFunc {
        SymFunc::from_terms(basis, n, terms.iter().map(|(p, c)| (part(p), qr(c)))).unwrap()
    }

    /// Brute-force coefficient of `m_lambda` in `s_shape`: the number of
    /// semistandard tableaux of that shape and content.
    fn kostka(shape: &[usize], content: &[usize]) -> i64 {
        fn fill(shape: &[usize], content: &[usize], grid: &mut Vec<Vec<usize>>, cell: usize) -> i64 {
            let cells: Vec<(usize, usize)> = shape
                .iter()
                .enumerate()
                .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
                .collect();
            if cell == cells.len() {
                let mut used = vec![0; content.len()];
                for row in grid.iter() {
                    for &v in row {
                        used[v] += 1;
                    }
                }
                return i64::from(used == content);
            }
            let (r, c) = cells[cell];
            let mut total = 0;
            for v in 0..content.len() {
                if c > 0 && grid[r][c - 1] > v {
                    continue;
                }
                if r > 0 && grid[r - 1][c] >= v {
                    continue;
                }
                grid[r].push(v);
                total += fill(shape, content, grid, cell + 1);
                grid[r].pop();
            }
            total
        }
        let mut grid = vec![Vec::new(); shape.len()];
        fill(shape, content, &mut grid, 0)
    }

    #[test]
    fn elementary_in_monomials() {
        assert_eq!(SymFunc::elem(Basis::E, &[2]).unwrap().change_basis(Basis::M), sf(Basis::M, 2, &[(&[1, 1], "1")]));
    }

    #[test]
    fn power_sum_in_elementary() {
        let got = SymFunc::elem(Basis::P, &[2]).unwrap().change_basis(Basis::E);
        assert_eq!(got, sf(Basis::E, 2, &[(&[1, 1], "1"), (&[2], "-2")]));
    }

    #[test]
    fn schur_in_monomials_matches_tableaux() {
        let got = SymFunc::elem(Basis::S, &[2, 1]).unwrap().change_basis(Basis::M);
        assert_eq!(got, sf(Basis::M, 3, &[(&[2, 1], "1"), (&[1, 1, 1], "2")]));
        for n in 1..=5 {
            for shape in partitions_of(n).unwrap() {
                let m = SymFunc::basis_element(Basis::S, shape.clone()).unwrap().change_basis(Basis::M);
                for content in partitions_of(n).unwrap() {
                    let k = kostka(shape.parts(), content.parts());
                    assert_eq!(m.coeff(&content), QRat::from_int(k), "s{shape} at m{content}");
                }
            }
        }
    }

    #[test]
    fn character_table_orthogonality() {
        for n in 1..=6 {
            let parts = partitions_of(n).unwrap();
            for a in &parts {
                for b in &parts {
                    let s: Q = parts
                        .iter()
                        .map(|mu| Q::new((mn_character(a, mu) * mn_character(b, mu)).into(), (mu.z() as i64).into()))
                        .sum();
                    assert_eq!(s, if a == b { Q::one() } else { Q::zero() });
                }
            }
        }
    }

    #[test]
    fn character_degree_counts_standard_tableaux() {
        let lambda = part(&[3, 2]);
        assert_eq!(mn_character(&lambda, &Partition::ones(5)), 5);
        assert_eq!(mn_character(&part(&[2, 1]), &part(&[3])), -1);
    }

    #[test]
    fn omega_examples() {
        let e21 = SymFunc::elem(Basis::E, &[2, 1]).unwrap();
        assert!(e21.omega().same_as(&SymFunc::elem(Basis::H, &[2, 1]).unwrap()));
        let p2 = SymFunc::elem(Basis::P, &[2]).unwrap();
        assert_eq!(p2.omega(), sf(Basis::P, 2, &[(&[2], "-1")]));
        for n in 1..=6 {
            for lambda in partitions_of(n).unwrap() {
                let e = SymFunc::basis_element(Basis::E, lambda.clone()).unwrap();
                let h = SymFunc::basis_element(Basis::H, lambda.clone()).unwrap();
                assert!(e.change_basis(Basis::M).omega().same_as(&h));
                let s = SymFunc::basis_element(Basis::S, lambda.clone()).unwrap();
                assert!(s.change_basis(Basis::P).omega().same_as(&s.omega()));
            }
        }
    }

    #[test]
    fn products() {
        let e1 = SymFunc::elem(Basis::E, &[1]).unwrap();
        let e2 = SymFunc::elem(Basis::E, &[2]).unwrap();
        assert_eq!(e1.multiply(&e1).unwrap(), SymFunc::elem(Basis::E, &[1, 1]).unwrap());
        assert_eq!(e2.multiply(&e1).unwrap(), SymFunc::elem(Basis::E, &[2, 1]).unwrap());
        let p1 = SymFunc::elem(Basis::P, &[1]).unwrap();
        let p2 = SymFunc::elem(Basis::P, &[2]).unwrap();
        assert_eq!(p1.multiply(&p2).unwrap(), SymFunc::elem(Basis::P, &[2, 1]).unwrap());
        let s1 = SymFunc::elem(Basis::S, &[1]).unwrap();
        let prod = s1.multiply(&s1).unwrap();
        assert_eq!(prod, sf(Basis::S, 2, &[(&[2], "1"), (&[1, 1], "1")]));
        let big = SymFunc::elem(Basis::E, &[5]).unwrap();
        assert!(matches!(big.multiply(&big), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn plethystic_scaling() {
        let p2 = SymFunc::elem(Basis::P, &[2]).unwrap();
        assert_eq!(p2.plethysm_scale(&QRat::one()), p2);
        assert_eq!(p2.plethysm_scale(&qr("q - 1")), sf(Basis::P, 2, &[(&[2], "q^2 - 1")]));
        let llt = sf(Basis::E, 2, &[(&[1, 1], "1"), (&[2], "q - 1")]);
        let x = llt
            .plethysm_scale(&qr("q - 1"))
            .scale(&qr("q - 1").pow(-2).unwrap());
        assert!(x.same_as(&sf(Basis::E, 2, &[(&[2], "q + 1")])));
    }

    #[test]
    fn shifted_e_positivity() {
        let llt = sf(Basis::E, 2, &[(&[1, 1], "1"), (&[2], "q - 1")]);
        let r = llt.e_positive_shifted().unwrap();
        assert!(r.positive);
        assert_eq!(r.expansion, sf(Basis::E, 2, &[(&[1, 1], "1"), (&[2], "q")]));
        let neg = sf(Basis::E, 2, &[(&[1, 1], "1"), (&[2], "-1")]);
        let r = neg.e_positive_shifted().unwrap();
        assert!(!r.positive);
        assert_eq!(r.witness, Some((part(&[2]), QRat::from_int(-1))));
        assert!(SymFunc::zero(3, Basis::M).unwrap().e_positive_shifted().unwrap().positive);
        let rational = sf(Basis::E, 1, &[(&[1], "(1)/(q)")]);
        assert!(matches!(rational.e_positive_shifted(), Err(Error::NotPolynomial(_))));
    }

    #[test]
    fn dimensions() {
        assert_eq!(SymFunc::elem(Basis::H, &[2]).unwrap().dimension_of(), QRat::one());
        assert_eq!(SymFunc::elem(Basis::P, &[1, 1]).unwrap().dimension_of(), QRat::from_int(2));
        for n in 1..=6 {
            assert_eq!(SymFunc::elem(Basis::E, &[n]).unwrap().dimension_of(), QRat::one());
            let regular = SymFunc::basis_element(Basis::P, Partition::ones(n)).unwrap();
            assert_eq!(regular.dimension_of(), QRat::from_int(factorial(n) as i64));
        }
    }

    #[test]
    fn rendering() {
        let f = sf(Basis::E, 2, &[(&[2], "q + 1")]);
        assert_eq!(f.to_latex(), "(q+1)e_{2}");
        let g = sf(Basis::E, 2, &[(&[1, 1], "1"), (&[2], "q - 1")]);
        assert_eq!(g.to_latex(), "e_{11} + (q-1)e_{2}");
        assert_eq!(g.to_plain(), "e(1,1) + (q - 1)*e(2)");
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(
            json,
            r#"{"basis":"e","n":2,"terms":[{"partition":[1,1],"coeff":"(1)/(1)"},{"partition":[2],"coeff":"(q - 1)/(1)"}]}"#
        );
        assert_eq!(SymFunc::zero(2, Basis::M).unwrap().to_latex(), "0");
        assert_eq!(sf(Basis::P, 2, &[(&[2], "-1")]).to_latex(), "-p_{2}");
    }

    #[test]
    fn degree_cap_is_enforced() {
        assert!(SymFunc::zero(9, Basis::E).is_err());
        assert!(SymFunc::from_terms(Basis::E, 3, [(part(&[2, 2]), QRat::one())]).is_err());
    }

    fn arb_sym(n: usize) -> impl Strategy<Value = SymFunc> {
        let k = partitions_of(n).unwrap().len();
        (0usize..5, prop::collection::vec((-3i64..=3, -2i64..=2), k)).prop_map(move |(b, cs)| {
            let parts = partitions_of(n).unwrap();
            let terms = parts.into_iter().zip(cs).map(|(p, (a, c))| {
                (p, &QRat::from_int(a) + &(&QRat::q() * &QRat::from_int(c)))
            });
            SymFunc::from_terms(Basis::ALL[b], n, terms).unwrap()
        })
    }

    proptest! {
        #[test]
        fn round_trip_all_bases(f in (1usize..=6).prop_flat_map(arb_sym)) {
            for b in Basis::ALL {
                prop_assert_eq!(f.change_basis(b).change_basis(f.basis()), f.clone());
            }
        }

        #[test]
        fn omega_is_an_involution(f in (1usize..=6).prop_flat_map(arb_sym)) {
            prop_assert_eq!(f.omega().omega(), f);
        }

        #[test]
        fn scaling_is_multiplicative(f in (1usize..=3).prop_flat_map(arb_sym), g in (1usize..=3).prop_flat_map(arb_sym)) {
            let a = qr("q - 1");
            let lhs = f.multiply(&g).unwrap().plethysm_scale(&a);
            let rhs = f.plethysm_scale(&a).multiply(&g.plethysm_scale(&a)).unwrap();
            prop_assert!(lhs.same_as(&rhs));
        }

        #[test]
        fn scaling_inverts(f in (1usize..=5).prop_flat_map(arb_sym)) {
            let a = qr("q + 2");
            let back = f.plethysm_scale(&a).plethysm_scale(&a.inv().unwrap());
            prop_assert_eq!(back, f);
        }
    }
}
