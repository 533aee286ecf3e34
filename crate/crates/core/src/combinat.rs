//! Partitions, permutations of `[n]`, subsets of `[n-1]` and the small
//! counting functions built on them.
//!
//! Permutations compose as functions: `(u * w)(i) = u(w(i))`, the right factor
//! acting first. Every action matrix in the crate follows this convention.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use serde::{Serialize, Serializer};

use crate::error::{check_range, Error, Result};

/// Largest `n` for which partitions are enumerated.
pub const MAX_PARTITION_N: usize = 12;
/// Largest `n` for which whole symmetric groups are enumerated.
pub const MAX_GROUP_N: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the given positive parts into a partition.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The one-part partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of each part size.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `z_mu = prod k^{m_k} m_k!`, the order of the centralizer.
    pub fn z(&self) -> u64 {
        self.multiplicities()
            .into_iter()
            .map(|(k, m)| (k as u64).pow(m as u32) * factorial(m))
            .product()
    }

    /// Sign of any permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Union of parts.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn conjugate(&self) -> Partition {
        let Some(&first) = self.parts.first() else {
            return Partition::empty();
        };
        let parts = (1..=first)
            .map(|k| self.parts.iter().filter(|&&p| p >= k).count())
            .collect();
        Partition { parts }
    }

    /// A permutation of this cycle type whose cycles run over consecutive
    /// integers: `(1 2 .. p1)(p1+1 ..)...`.
    pub fn representative(&self) -> Permutation {
        let n = self.size();
        let mut images = vec![0; n];
        let mut start = 0;
        for &p in &self.parts {
            for k in 0..p {
                images[start + k] = start + (k + 1) % p;
            }
            start += p;
        }
        Permutation { images }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    check_range("n", n, MAX_PARTITION_N)?;
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

/// Number of permutations of cycle type `mu`: `n! / z_mu`.
pub fn conjugacy_class_size(mu: &Partition) -> u64 {
    factorial(mu.size()) / mu.z()
}

/// A permutation of `{0, .., n-1}`; one-line notation is 1-based at the API
/// boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based one-line notation `w(1), .., w(n)`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|v| v - 1).collect(),
        })
    }

    /// The transposition of the 0-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn sign(&self) -> i64 {
        self.cycle_type().sign()
    }

    /// Position in the lexicographic order of one-line notations.
    pub fn lex_rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0;
        for i in 0..n {
            let smaller = self.images[i + 1..]
                .iter()
                .filter(|&&v| v < self.images[i])
                .count();
            rank += smaller * factorial(n - 1 - i) as usize;
        }
        rank
    }

    /// Inverse of [`Permutation::lex_rank`].
    pub fn from_lex_rank(n: usize, mut rank: usize) -> Self {
        let mut avail: Vec<usize> = (0..n).collect();
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            let f = factorial(n - 1 - i) as usize;
            images.push(avail.remove(rank / f));
            rank %= f;
        }
        Permutation { images }
    }

    /// Maps a set of 0-based points given as a bitmask.
    pub fn apply_mask(&self, mask: u32) -> u32 {
        let mut out = 0;
        for (i, &v) in self.images.iter().enumerate() {
            if mask >> i & 1 == 1 {
                out |= 1 << v;
            }
        }
        out
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.n(), rhs.n(), "composing permutations of different degree");
        Permutation {
            images: rhs.images.iter().map(|&i| self.images[i]).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", w.join(","))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

/// All of `S_n` in lexicographic order; index `k` has `lex_rank() == k`.
pub fn permutations(n: usize) -> Result<Vec<Permutation>> {
    check_range("n", n, MAX_GROUP_N)?;
    Ok((0..factorial(n) as usize)
        .map(|r| Permutation::from_lex_rank(n, r))
        .collect())
}

/// A subset `I = {i_1 < .. < i_d}` of `[n-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    n: usize,
    elements: Vec<usize>,
}

impl Subset {
    pub fn new(n: usize, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.iter().any(|&i| i == 0 || i >= n) {
            return Err(Error::InvalidArgument(format!(
                "subset {elements:?} is not contained in [{}]",
                n.saturating_sub(1)
            )));
        }
        Ok(Subset { n, elements })
    }

    /// The subset of `[n-1]` whose bit `k - 1` is set for each element `k`.
    pub fn from_mask(n: usize, mask: u32) -> Self {
        let elements = (1..n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        Subset { n, elements }
    }

    /// Every subset of `[n-1]`, ordered by bitmask.
    pub fn all(n: usize) -> Vec<Subset> {
        let count = 1u32 << n.saturating_sub(1);
        (0..count).map(|m| Subset::from_mask(n, m)).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    /// `[n-1] \ I`.
    pub fn complement(&self) -> Vec<usize> {
        (1..self.n).filter(|&j| !self.contains(j)).collect()
    }

    /// `(i_1, i_2 - i_1, .., n - i_d)`.
    pub fn composition(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut prev = 0;
        for &i in self.elements.iter().chain(std::iter::once(&self.n)) {
            out.push(i - prev);
            prev = i;
        }
        if self.n == 0 {
            out.clear();
        }
        out
    }

    /// `P(I)`: the composition sorted into a partition.
    pub fn partition(&self) -> Partition {
        Partition::new(self.composition()).expect("composition parts are positive")
    }

    /// `|S_I|`, the product of factorials of the blocks.
    pub fn young_subgroup_order(&self) -> u64 {
        self.composition().into_iter().map(factorial).product()
    }

    /// Whether `w` lies in the Young subgroup `S_I` (preserves each block).
    pub fn young_contains(&self, w: &Permutation) -> bool {
        let mut start = 0;
        for b in self.composition() {
            for i in start..start + b {
                let v = w.apply(i);
                if v < start || v >= start + b {
                    return false;
                }
            }
            start += b;
        }
        true
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(2).unwrap(), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(partitions_of(0).unwrap(), vec![Partition::empty()]);
        assert!(partitions_of(13).is_err());
    }

    #[test]
    fn partition_counts_match_brute_force() {
        // weakly decreasing sequences bounded by n, filtered by sum
        fn brute(n: usize) -> usize {
            fn rec(rem: usize, max: usize) -> usize {
                if rem == 0 {
                    return 1;
                }
                (1..=max).filter(|&k| k <= rem).map(|k| rec(rem - k, k)).sum()
            }
            rec(n, n)
        }
        for n in 0..=12 {
            assert_eq!(partitions_of(n).unwrap().len(), brute(n));
        }
        assert_eq!(partitions_of(4).unwrap().len(), 5);
    }

    #[test]
    fn reverse_lex_order() {
        let ps = partitions_of(4).unwrap();
        assert_eq!(ps, vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(3).cycle_type(), p(&[1, 1, 1]));
        let c = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        assert_eq!(c.cycle_type(), p(&[3]));
        let w = Permutation::from_one_line(&[2, 1, 4, 3]).unwrap();
        assert_eq!(w.cycle_type(), p(&[2, 2]));
    }

    #[test]
    fn compositions_and_young_orders() {
        let s = |n, e: &[usize]| Subset::new(n, e.to_vec()).unwrap();
        assert_eq!(s(3, &[]).partition(), p(&[3]));
        assert_eq!(s(4, &[1, 3]).partition(), p(&[2, 1, 1]));
        assert_eq!(s(3, &[1, 2]).partition(), p(&[1, 1, 1]));
        assert_eq!(s(3, &[]).young_subgroup_order(), 6);
        assert_eq!(s(3, &[1]).young_subgroup_order(), 2);
        assert_eq!(s(3, &[1, 2]).young_subgroup_order(), 1);
        assert!(Subset::new(3, vec![3]).is_err());
    }

    #[test]
    fn class_sizes() {
        assert_eq!(conjugacy_class_size(&p(&[1, 1, 1])), 1);
        assert_eq!(conjugacy_class_size(&p(&[2, 1])), 3);
        assert_eq!(conjugacy_class_size(&p(&[3])), 2);
        for n in 0..=8 {
            let total: u64 = partitions_of(n).unwrap().iter().map(conjugacy_class_size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn class_sizes_match_enumeration() {
        for n in 1..=6 {
            let mut counts = BTreeMap::new();
            for w in permutations(n).unwrap() {
                *counts.entry(w.cycle_type()).or_insert(0u64) += 1;
            }
            for mu in partitions_of(n).unwrap() {
                assert_eq!(counts[&mu], conjugacy_class_size(&mu));
            }
        }
    }

    #[test]
    fn compositions_are_in_bijection_with_subsets() {
        for n in 1..=7 {
            let mut seen = std::collections::HashSet::new();
            for s in Subset::all(n) {
                let c = s.composition();
                assert_eq!(c.iter().sum::<usize>(), n);
                assert!(seen.insert(c));
            }
            assert_eq!(seen.len(), 1 << (n - 1));
        }
    }

    #[test]
    fn representatives_have_their_cycle_type() {
        for n in 0..=8 {
            for mu in partitions_of(n).unwrap() {
                assert_eq!(mu.representative().cycle_type(), mu);
            }
        }
    }

    #[test]
    fn lex_rank_round_trip() {
        let all = permutations(5).unwrap();
        for (k, w) in all.iter().enumerate() {
            assert_eq!(w.lex_rank(), k);
        }
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        (0..factorial(n) as usize).prop_map(move |r| Permutation::from_lex_rank(n, r))
    }

    proptest! {
        #[test]
        fn conjugation_preserves_cycle_type(n in 1usize..=6, a in 0usize..720, b in 0usize..720) {
            let f = factorial(n) as usize;
            let u = Permutation::from_lex_rank(n, a % f);
            let w = Permutation::from_lex_rank(n, b % f);
            let c = &(&u * &w) * &u.inverse();
            prop_assert_eq!(c.cycle_type(), w.cycle_type());
        }

        #[test]
        fn inverse_composes_to_identity(w in arb_perm(6)) {
            prop_assert!((&w * &w.inverse()).is_identity());
            prop_assert!((&w.inverse() * &w).is_identity());
        }
    }
}
