//! Hessenberg functions, their unit interval graphs, coloring sums and
//! orientations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::checks::{all_passed, Check};
use crate::combinat::{factorial, Partition};
use crate::error::{check_range, Error, Result};
use crate::qrat::Substitution;
use crate::symfunc::{Basis, SymFunc};
use crate::scalar::Scalar;
use crate::{QPoly, QRat, Q};

/// Largest `n` for coloring enumeration (`n^n` colorings).
pub const MAX_COLORING_N: usize = 7;
/// Largest edge count for orientation enumeration.
pub const MAX_ORIENTATION_EDGES: usize = 20;
/// Largest `n` accepted by [`verify_identities`].
pub const MAX_IDENTITY_N: usize = 6;

/// A weakly increasing `h: [n] -> [n]` with `h(j) >= j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    /// Validates `h(1), .., h(n)`; errors name the violated constraint.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidHessenberg("h must have at least one value".into()));
        }
        for (idx, &v) in values.iter().enumerate() {
            let j = idx + 1;
            if v < j {
                return Err(Error::InvalidHessenberg(format!(
                    "h(j) >= j violated: h({j}) = {v}"
                )));
            }
            if v > n {
                return Err(Error::InvalidHessenberg(format!(
                    "h(j) <= n violated: h({j}) = {v} > {n}"
                )));
            }
            if idx > 0 && values[idx - 1] > v {
                return Err(Error::InvalidHessenberg(format!(
                    "h must be weakly increasing: h({}) = {} > h({j}) = {v}",
                    j - 1,
                    values[idx - 1]
                )));
            }
        }
        debug_assert_eq!(values[n - 1], n);
        Ok(HessenbergFunction { values })
    }

    /// `(1, 2, .., n)`: no edges.
    pub fn identity(n: usize) -> Result<Self> {
        Self::new((1..=n).collect())
    }

    /// `(2, 3, .., n, n)`: the path graph.
    pub fn path(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|j| (j + 1).min(n)).collect())
    }

    /// `(n, .., n)`: the complete graph.
    pub fn complete(n: usize) -> Result<Self> {
        Self::new(vec![n; n])
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `h(j)` for `1 <= j <= n`.
    pub fn at(&self, j: usize) -> usize {
        self.values[j - 1]
    }

    /// `|h| = sum_j (h(j) - j)`, the number of edges of the graph.
    pub fn size(&self) -> usize {
        self.values.iter().enumerate().map(|(i, &v)| v - (i + 1)).sum()
    }

    pub fn is_complete(&self) -> bool {
        self.values.iter().all(|&v| v == self.n())
    }

    pub fn graph(&self) -> UnitIntervalGraph {
        UnitIntervalGraph::new(self)
    }
}

impl FromStr for HessenbergFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("'{}' in h is not a positive integer", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.values.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

impl Serialize for HessenbergFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(s)
    }
}

/// Every Hessenberg function of rank `n`, lexicographically.
pub fn hessenberg_all(n: usize) -> Result<Vec<HessenbergFunction>> {
    check_range("Hessenberg rank", n, MAX_COLORING_N)?;
    fn rec(j: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
        if j > n {
            out.push(HessenbergFunction { values: cur.clone() });
            return;
        }
        let lo = cur.last().copied().unwrap_or(0).max(j);
        for v in lo..=n {
            cur.push(v);
            rec(j + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(1, n, &mut Vec::new(), &mut out);
    }
    Ok(out)
}

/// The graph on `[n]` with edges `{j, i}` for `j < i <= h(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitIntervalGraph {
    n: usize,
    /// 1-based `(j, i)` with `j < i`, ordered by `j` then `i`.
    edges: Vec<(usize, usize)>,
    /// For each 0-based vertex, its `(edge index, larger endpoint)` pairs.
    up: Vec<Vec<(usize, usize)>>,
}

impl UnitIntervalGraph {
    pub fn new(h: &HessenbergFunction) -> Self {
        let n = h.n();
        let mut edges = Vec::new();
        let mut up = vec![Vec::new(); n];
        for j in 1..=n {
            for i in j + 1..=h.at(j) {
                up[j - 1].push((edges.len(), i - 1));
                edges.push((j, i));
            }
        }
        UnitIntervalGraph { n, edges, up }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

impl Serialize for UnitIntervalGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("UnitIntervalGraph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

/// Number of edges `{i < j}` with `kappa(i) < kappa(j)`; `kappa` lists the
/// colors of vertices `1..n`.
pub fn asc(kappa: &[usize], g: &UnitIntervalGraph) -> Result<usize> {
    if kappa.len() != g.n || kappa.contains(&0) {
        return Err(Error::InvalidArgument(format!(
            "a coloring of {} vertices by positive integers was expected",
            g.n
        )));
    }
    Ok(g.edges
        .iter()
        .filter(|&&(j, i)| kappa[j - 1] < kappa[i - 1])
        .count())
}

/// An orientation of a unit interval graph, stored as the set of edges
/// directed from the smaller to the larger endpoint.
#[derive(Clone, Copy, Debug)]
pub struct Orientation<'g> {
    graph: &'g UnitIntervalGraph,
    ascending: u64,
}

impl<'g> Orientation<'g> {
    /// Bit `k` of `ascending` marks edge `k` (in [`UnitIntervalGraph::edges`]
    /// order) as ascending.
    pub fn new(graph: &'g UnitIntervalGraph, ascending: u64) -> Result<Self> {
        let m = graph.edges.len();
        if m < 64 && ascending >> m != 0 {
            return Err(Error::InvalidArgument(format!(
                "orientation mask {ascending:#b} has bits beyond {m} edges"
            )));
        }
        Ok(Orientation { graph, ascending })
    }

    pub fn from_directions(graph: &'g UnitIntervalGraph, ascending: &[bool]) -> Result<Self> {
        if ascending.len() != graph.edges.len() {
            return Err(Error::InvalidArgument(format!(
                "{} directions given for {} edges",
                ascending.len(),
                graph.edges.len()
            )));
        }
        let mask = ascending
            .iter()
            .enumerate()
            .fold(0u64, |m, (k, &a)| if a { m | 1 << k } else { m });
        Self::new(graph, mask)
    }

    pub fn all_ascending(graph: &'g UnitIntervalGraph) -> Self {
        let m = graph.edges.len();
        Orientation {
            graph,
            ascending: if m == 64 { u64::MAX } else { (1u64 << m) - 1 },
        }
    }

    pub fn all_descending(graph: &'g UnitIntervalGraph) -> Self {
        Orientation { graph, ascending: 0 }
    }

    pub fn is_ascending(&self, edge: usize) -> bool {
        self.ascending >> edge & 1 == 1
    }

    /// Number of ascending edges.
    pub fn asc(&self) -> usize {
        self.ascending.count_ones() as usize
    }

    /// Highest reachable vertex of every vertex, 1-based.
    pub fn hrv_all(&self) -> Vec<usize> {
        let n = self.graph.n;
        let mut best = vec![0; n];
        // ascending edges only increase the vertex, so larger vertices are final first
        for v in (0..n).rev() {
            best[v] = self.graph.up[v]
                .iter()
                .filter(|&&(e, _)| self.is_ascending(e))
                .map(|&(_, k)| best[k])
                .fold(v, usize::max);
        }
        best.into_iter().map(|v| v + 1).collect()
    }

    /// Sizes of the level sets of [`Orientation::hrv_all`].
    pub fn lambda(&self) -> Partition {
        let mut sizes = BTreeMap::new();
        for v in self.hrv_all() {
            *sizes.entry(v).or_insert(0usize) += 1;
        }
        Partition::new(sizes.into_values().collect()).expect("block sizes are positive")
    }
}

/// The largest vertex reachable from `i` along ascending edges.
pub fn hrv(theta: &Orientation<'_>, i: usize) -> usize {
    theta.hrv_all()[i - 1]
}

pub fn lambda_of(theta: &Orientation<'_>) -> Partition {
    theta.lambda()
}

fn series(counts: &[u64]) -> QRat {
    let ints: Vec<i64> = counts.iter().map(|&c| c as i64).collect();
    QRat::from_poly(QPoly::from_ints(&ints))
}

/// Per exponent vector (packed, 4 bits per color), counts per power of q.
type Accum = HashMap<u64, Vec<u64>>;

fn merge_into(a: &mut Accum, b: Accum) {
    for (k, v) in b {
        let slot = a.entry(k).or_insert_with(|| vec![0; v.len()]);
        for (x, y) in slot.iter_mut().zip(v) {
            *x += y;
        }
    }
}

/// Both coloring sums: proper colorings `X_h` and all colorings `LLT_h`, in
/// the monomial basis.
pub fn coloring_functions(h: &HessenbergFunction) -> Result<(SymFunc, SymFunc)> {
    let n = h.n();
    if n > MAX_COLORING_N {
        return Err(Error::Budget(format!(
            "coloring enumeration needs n <= {MAX_COLORING_N}, got n = {n}"
        )));
    }
    let g = h.graph();
    let m = g.edges.len();
    let (proper, all) = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut proper = Accum::new();
            let mut all = Accum::new();
            let mut kappa = vec![0usize; n];
            kappa[0] = first;
            let rest = n - 1;
            let total = n.pow(rest as u32);
            for code in 0..total {
                let mut c = code;
                for slot in kappa.iter_mut().skip(1) {
                    *slot = c % n;
                    c /= n;
                }
                let mut key = 0u64;
                for &col in &kappa {
                    key += 1 << (4 * col);
                }
                let mut ascents = 0;
                let mut is_proper = true;
                for &(j, i) in &g.edges {
                    let (a, b) = (kappa[j - 1], kappa[i - 1]);
                    if a < b {
                        ascents += 1;
                    } else if a == b {
                        is_proper = false;
                    }
                }
                all.entry(key).or_insert_with(|| vec![0; m + 1])[ascents] += 1;
                if is_proper {
                    proper.entry(key).or_insert_with(|| vec![0; m + 1])[ascents] += 1;
                }
            }
            (proper, all)
        })
        .reduce(
            || (Accum::new(), Accum::new()),
            |(mut p1, mut a1), (p2, a2)| {
                merge_into(&mut p1, p2);
                merge_into(&mut a1, a2);
                (p1, a1)
            },
        );
    Ok((read_monomial(n, proper)?, read_monomial(n, all)?))
}

/// Reads `m`-coefficients, first checking that every exponent vector of one
/// sorted shape carries the same weight.
fn read_monomial(n: usize, acc: Accum) -> Result<SymFunc> {
    let mut by_shape: BTreeMap<Partition, Vec<Vec<u64>>> = BTreeMap::new();
    for (key, weight) in acc {
        let parts: Vec<usize> = (0..n)
            .map(|c| (key >> (4 * c) & 0xf) as usize)
            .filter(|&x| x > 0)
            .collect();
        let shape = Partition::new(parts).expect("nonzero counts");
        by_shape.entry(shape).or_default().push(weight);
    }
    let mut terms = Vec::new();
    for (shape, weights) in by_shape {
        let mut arrangements = factorial(n) / factorial(n - shape.len());
        for &mult in shape.multiplicities().values() {
            arrangements /= factorial(mult);
        }
        if weights.len() as u64 != arrangements || weights.iter().any(|w| *w != weights[0]) {
            return Err(Error::Internal(format!(
                "coloring sum is not symmetric at shape {shape}"
            )));
        }
        terms.push((shape, series(&weights[0])));
    }
    SymFunc::from_terms(Basis::M, n, terms)
}

/// The chromatic quasisymmetric function `X_h(z; q)`, in the monomial basis.
pub fn csf(h: &HessenbergFunction) -> Result<SymFunc> {
    Ok(coloring_functions(h)?.0)
}

/// The unicellular LLT polynomial `LLT_h(z; q)`, in the monomial basis.
pub fn llt(h: &HessenbergFunction) -> Result<SymFunc> {
    Ok(coloring_functions(h)?.1)
}

/// Orientation counts grouped by `lambda(theta)`: for each partition the
/// number of orientations per number of ascending edges.
pub fn orientation_statistics(h: &HessenbergFunction) -> Result<BTreeMap<Partition, Vec<u64>>> {
    let g = h.graph();
    let m = g.edges.len();
    if m > MAX_ORIENTATION_EDGES {
        return Err(Error::Budget(format!(
            "orientation enumeration needs |h| <= {MAX_ORIENTATION_EDGES}, got |h| = {m}"
        )));
    }
    let chunk = 1u64 << m.saturating_sub(6);
    let chunks = (1u64 << m).div_ceil(chunk);
    let merged = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut acc: HashMap<Partition, Vec<u64>> = HashMap::new();
            for mask in c * chunk..((c + 1) * chunk).min(1 << m) {
                let theta = Orientation {
                    graph: &g,
                    ascending: mask,
                };
                acc.entry(theta.lambda()).or_insert_with(|| vec![0; m + 1])[theta.asc()] += 1;
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                let slot = a.entry(k).or_insert_with(|| vec![0; m + 1]);
                for (x, y) in slot.iter_mut().zip(v) {
                    *x += y;
                }
            }
            a
        });
    Ok(merged.into_iter().collect())
}

/// `sum_theta q^{asc(theta)} e_{lambda(theta)}` over all orientations.
pub fn e_expansion_shifted(h: &HessenbergFunction) -> Result<SymFunc> {
    let stats = orientation_statistics(h)?;
    SymFunc::from_terms(Basis::E, h.n(), stats.into_iter().map(|(l, c)| (l, series(&c))))
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub h: HessenbergFunction,
    pub checks: Vec<Check>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

/// Verifies the coloring identities for one `h`:
///
/// * `a`: `q^{|h|} X_h(q^-1) = X_h(q)`
/// * `b`: `q^{|h|} LLT_h(q^-1) = omega LLT_h(q)`
/// * `c`: `X_h = (q-1)^{-n} LLT_h[(q-1)Z]`
/// * `d`: with `Xc = omega X_h` and `Y = LLT_h`, both
///   `Y = (1-q)^n Xc[Z/(1-q)]` and `Xc = (1-q)^{-n} Y[(1-q)Z]`
/// * `e`: `LLT_h` at `q = 1` is `p_{1^n}`
/// * `f`: the orientation sum equals `LLT_h(q+1)`
pub fn verify_identities(h: &HessenbergFunction) -> Result<IdentityReport> {
    let n = h.n();
    if n > MAX_IDENTITY_N {
        return Err(Error::Budget(format!(
            "identity verification needs n <= {MAX_IDENTITY_N}, got n = {n}"
        )));
    }
    let (x, y) = coloring_functions(h)?;
    let shift = QRat::q_pow(h.size() as i64);
    let one_minus_q = &QRat::one() - &QRat::q();
    let q_minus_one = -one_minus_q.clone();
    let ni = n as i32;
    let mut checks = Vec::new();

    let x_rev = x.substitute(&Substitution::QInverse).scale(&shift);
    checks.push(Check::sym_eq("a: X_h palindromic", &x_rev, &x));

    let y_rev = y.substitute(&Substitution::QInverse).scale(&shift);
    checks.push(Check::sym_eq("b: LLT_h palindromic up to omega", &y_rev, &y.omega()));

    let cm = y
        .plethysm_scale(&q_minus_one)
        .scale(&q_minus_one.pow(-ni)?);
    checks.push(Check::sym_eq("c: X_h = (q-1)^-n LLT_h[(q-1)Z]", &cm, &x));

    let xc = x.omega();
    let forward = xc
        .plethysm_scale(&one_minus_q.inv()?)
        .scale(&one_minus_q.pow(ni)?);
    let backward = y
        .plethysm_scale(&one_minus_q)
        .scale(&one_minus_q.pow(-ni)?);
    let d1 = Check::sym_eq("d", &forward, &y);
    let d2 = Check::sym_eq("d", &backward, &xc);
    let d_name = "d: plethystic relations between omega X_h and LLT_h";
    checks.push(match (d1.detail, d2.detail) {
        (None, None) => Check::pass(d_name),
        (Some(e), _) => Check::fail(d_name, format!("Y = (1-q)^n Xc[Z/(1-q)] fails at {e}")),
        (_, Some(e)) => Check::fail(d_name, format!("Xc = (1-q)^-n Y[(1-q)Z] fails at {e}")),
    });

    let regular = SymFunc::basis_element(Basis::P, Partition::ones(n))?;
    checks.push(Check::sym_eq("e: LLT_h(q=1) = p_{1^n}", &y.eval_q(&Q::from_int(1))?, &regular));

    let orient = e_expansion_shifted(h)?;
    let shifted = y.substitute(&Substitution::q_plus_one());
    checks.push(Check::sym_eq("f: orientation sum = LLT_h(q+1)", &orient, &shifted));

    Ok(IdentityReport { h: h.clone(), checks })
}
