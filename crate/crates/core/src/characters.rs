//! Class functions on the symmetric group with values in `Q(q)`.
//!
//! A value at a cycle type is read either as an ordinary character value or
//! as a graded trace series `sum_i tr(sigma | A_i) q^i`; both live in the same
//! type. Virtual characters are allowed.

use num_traits::Signed;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::combinat::{permutations, Partition, Subset};
use crate::error::{Error, Result};
use crate::qrat::Substitution;
use crate::scalar::Scalar;
use crate::symfunc::{partition_order, Basis, SymFunc};
use crate::{Q, QRat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    /// One value per partition, in [`partition_order`].
    values: Vec<QRat>,
}

/// A class function whose values are generating series in `q`.
pub type GradedCharacter = ClassFunction;

/// One-dimensional representation to induce from a Young subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YoungRep {
    Trivial,
    Sign,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    /// `prod_k 1/(1 - q^k)` over the cycles.
    Symmetric,
    /// `prod_k (1 - q^k)`, the exterior algebra at `-q`.
    ExteriorSigned,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    None,
    Sign,
}

impl ClassFunction {
    pub fn from_fn(n: usize, f: impl Fn(&Partition) -> QRat) -> Result<Self> {
        let values = partition_order(n)?.iter().map(f).collect();
        Ok(ClassFunction { n, values })
    }

    /// Tries `f` on every class, stopping at the first error.
    pub fn try_from_fn(n: usize, f: impl Fn(&Partition) -> Result<QRat>) -> Result<Self> {
        let values = partition_order(n)?.iter().map(f).collect::<Result<_>>()?;
        Ok(ClassFunction { n, values })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| QRat::zero())
    }

    pub fn trivial(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| QRat::one())
    }

    pub fn sign(n: usize) -> Result<Self> {
        Self::from_fn(n, |mu| QRat::from_int(mu.sign()))
    }

    /// `n!` at the identity, zero elsewhere.
    pub fn regular(n: usize) -> Result<Self> {
        let id = Partition::ones(n);
        let nf = crate::combinat::factorial(n) as i64;
        Self::from_fn(n, |mu| if *mu == id { QRat::from_int(nf) } else { QRat::zero() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &'static [Partition] {
        partition_order(self.n).expect("degree checked at construction")
    }

    pub fn value(&self, mu: &Partition) -> QRat {
        let i = self
            .classes()
            .iter()
            .position(|p| p == mu)
            .unwrap_or_else(|| panic!("{mu} is not a class of S_{}", self.n));
        self.values[i].clone()
    }

    /// `(class, value)` pairs in the fixed order.
    pub fn iter(&self) -> impl Iterator<Item = (&'static Partition, &QRat)> {
        self.classes().iter().zip(&self.values)
    }

    fn map(&self, f: impl Fn(&Partition, &QRat) -> QRat) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self.iter().map(|(mu, v)| f(mu, v)).collect(),
        }
    }

    fn zip(&self, other: &ClassFunction, f: impl Fn(&QRat, &QRat) -> QRat) -> Result<ClassFunction> {
        if self.n != other.n {
            return Err(Error::InvalidArgument(format!(
                "class functions of S_{} and S_{} cannot be combined",
                self.n, other.n
            )));
        }
        Ok(ClassFunction {
            n: self.n,
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip(other, |a, b| a - b)
    }

    /// Pointwise product (the character of a tensor product).
    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &QRat) -> ClassFunction {
        self.map(|_, v| v * c)
    }

    pub fn substitute(&self, sub: &Substitution<Q>) -> ClassFunction {
        self.map(|_, v| v.substitute(sub))
    }

    /// Evaluates every series at `q = r`.
    pub fn eval_q(&self, r: &Q) -> Result<ClassFunction> {
        let values = self
            .values
            .iter()
            .map(|v| v.eval(r).map(QRat::constant))
            .collect::<Result<_>>()?;
        Ok(ClassFunction { n: self.n, values })
    }

    /// `chi (x) U`: each value times the sign of its class.
    pub fn tensor_sign(&self) -> ClassFunction {
        self.map(|mu, v| v.scale(&Q::from_int(mu.sign())))
    }

    /// Value at the identity class.
    pub fn degree(&self) -> QRat {
        self.value(&Partition::ones(self.n))
    }

    /// Whether every value is an integer and the degree is nonnegative;
    /// a necessary condition for an ungraded genuine character of `S_n`.
    pub fn has_integer_values(&self) -> bool {
        let nonneg = self
            .degree()
            .as_polynomial()
            .map(|p| !p.coeff(0).is_negative())
            .unwrap_or(false);
        nonneg
            && self.values.iter().all(|v| {
                v.as_polynomial()
                    .is_some_and(|p| p.degree().unwrap_or(0) == 0 && p.coeff(0).is_integer())
            })
    }

    /// First class where the two functions differ, with both values.
    pub fn first_difference(&self, other: &ClassFunction) -> Option<(Partition, QRat, QRat)> {
        if self.n != other.n {
            return Some((Partition::empty(), QRat::zero(), QRat::zero()));
        }
        self.iter()
            .zip(&other.values)
            .find(|((_, a), b)| a != b)
            .map(|((mu, a), b)| (mu.clone(), a.clone(), b.clone()))
    }
}

impl Serialize for ClassFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Classes<'a>(&'a ClassFunction);
        struct Entry<'a>(&'a Partition, &'a QRat);
        impl Serialize for Entry<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("type", self.0)?;
                m.serialize_entry("value", &self.1.to_wire())?;
                m.end()
            }
        }
        impl Serialize for Classes<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_seq(self.0.iter().map(|(mu, v)| Entry(mu, v)))
            }
        }
        let mut st = s.serialize_struct("ClassFunction", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("classes", &Classes(self))?;
        st.end()
    }
}

/// `ch(chi) = sum_mu chi(mu) p_mu / z_mu`, in the power-sum basis.
pub fn frobenius_ch(chi: &ClassFunction) -> SymFunc {
    SymFunc::from_terms(
        Basis::P,
        chi.n,
        chi.iter()
            .map(|(mu, v)| (mu.clone(), v.scale(&Q::new(1.into(), (mu.z() as i64).into())))),
    )
    .expect("class function degree is within range")
}

/// The class function with the given Frobenius characteristic.
pub fn frobenius_inverse(f: &SymFunc) -> ClassFunction {
    let p = f.change_basis(Basis::P);
    ClassFunction::from_fn(f.n(), |mu| p.coeff(mu).scale(&Q::from_int(mu.z() as i64)))
        .expect("symmetric function degree is within range")
}

/// `Ind_{S_I}^{S_n}` of the trivial or sign representation, through
/// `h_{P(I)}` or `e_{P(I)}`.
pub fn induced_young(i: &Subset, rep: YoungRep) -> Result<ClassFunction> {
    let basis = match rep {
        YoungRep::Trivial => Basis::H,
        YoungRep::Sign => Basis::E,
    };
    Ok(frobenius_inverse(&SymFunc::basis_element(basis, i.partition())?))
}

/// The same induced character by the coset formula
/// `chi(g) = |S_I|^{-1} sum_{x : x^-1 g x in S_I} psi(x^-1 g x)`,
/// summing over the whole group.
pub fn induced_young_by_cosets(i: &Subset, rep: YoungRep) -> Result<ClassFunction> {
    let n = i.n();
    let group = permutations(n)?;
    let order = i.young_subgroup_order() as i64;
    ClassFunction::from_fn(n, |mu| {
        let g = mu.representative();
        let total: i64 = group
            .iter()
            .map(|x| {
                let c = &(&x.inverse() * &g) * x;
                if !i.young_contains(&c) {
                    0
                } else if rep == YoungRep::Sign {
                    c.sign()
                } else {
                    1
                }
            })
            .sum();
        QRat::constant(Q::new(total.into(), order.into()))
    })
}

/// Graded trace of the permuted-variables action on `C[t_1..t_n]`:
/// `prod_{parts k} 1/(1 - q^k)`.
pub fn polynomial_algebra_series(n: usize) -> Result<GradedCharacter> {
    sym_ext_defining_series(n, SeriesKind::Symmetric)
}

pub fn sym_ext_defining_series(n: usize, kind: SeriesKind) -> Result<GradedCharacter> {
    let one_minus = |k: usize| &QRat::one() - &QRat::q_pow(k as i64);
    ClassFunction::try_from_fn(n, |mu| {
        let prod: QRat = mu.parts().iter().map(|&k| one_minus(k)).product();
        match kind {
            SeriesKind::Symmetric => prod.inv(),
            SeriesKind::ExteriorSigned => Ok(prod),
        }
    })
}

/// Whether `shift * chi(q^-1) = scale * chi(q)` classwise, with `chi`
/// optionally twisted by the sign on the right.
pub fn palindromicity_check(chi: &GradedCharacter, shift: &QRat, twist: Twist, scale: &QRat) -> bool {
    let lhs = chi.substitute(&Substitution::QInverse).scale(shift);
    let rhs = match twist {
        Twist::None => chi.clone(),
        Twist::Sign => chi.tensor_sign(),
    }
    .scale(scale);
    lhs == rhs
}
