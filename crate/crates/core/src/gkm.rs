//! GKM models: tuples of polynomials indexed by `S_n` subject to edge-wise
//! congruences, for a Hessenberg variety `X(h)` and its twin `Y(h)`.
//!
//! A degree-`d` piece lives in the coordinate space with one coordinate per
//! (vertex, degree-`d` monomial), vertex-major. Every group action considered
//! here permutes those coordinates, so traces on subspaces in reduced echelon
//! form are sums of single entries.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{frobenius_ch, palindromicity_check, ClassFunction, GradedCharacter, Twist};
use crate::checks::{all_passed, Check};
use crate::combinat::{binomial, factorial, permutations, Partition, Permutation};
use crate::error::{Error, Result};
use crate::hessgraph::{coloring_functions, HessenbergFunction};
use crate::linalg::{sparse_get, Echelon, Matrix, SparseVec, Subspace};
use crate::mpoly::{MPoly, MonomialBasis};
use crate::symfunc::SymFunc;
use crate::{QPoly, QRat, TPoly, Q};

/// Largest rank with GKM models.
pub const MAX_GKM_N: usize = 4;
/// Degrees above `|h|` allowed for a degree piece.
pub const MAX_EXTRA_DEGREE: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Flavor {
    /// The Hessenberg variety: labels `t_{w(i)} - t_{w(j)}`.
    X,
    /// Its twin: labels `t_i - t_j`.
    Y,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Action {
    /// `(s . f)(w) = s(f(s^-1 w))`.
    Dot,
    /// `(s + f)(w) = f(s^-1 w)`.
    Dagger,
    /// `(s * f)(w) = f(w s)`.
    Star,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::X => "X",
            Flavor::Y => "Y",
        }
    }
}

impl Action {
    pub fn name(self) -> &'static str {
        match self {
            Action::Dot => "dot",
            Action::Dagger => "dagger",
            Action::Star => "star",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Generators {
    /// The constant tuples `t_1, .., t_n`.
    TVars,
    /// The classes `x_i(w) = t_{w(i)}`.
    XClasses,
}

/// The edge `{u, v}` (vertex indices, `u < v`) labelled `t_a - t_b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GkmEdge {
    pub u: usize,
    pub v: usize,
    pub a: usize,
    pub b: usize,
}

#[derive(Clone, Debug)]
pub struct GkmModel {
    h: HessenbergFunction,
    flavor: Flavor,
    vertices: Vec<Permutation>,
    edges: Vec<GkmEdge>,
}

impl GkmModel {
    pub fn new(h: &HessenbergFunction, flavor: Flavor) -> Result<Self> {
        let n = h.n();
        if n > MAX_GKM_N {
            return Err(Error::Budget(format!("GKM models need n <= {MAX_GKM_N}, got n = {n}")));
        }
        let vertices = permutations(n)?;
        let mut edges = Vec::new();
        for (u, w) in vertices.iter().enumerate() {
            for j in 0..n {
                for i in j + 1..h.at(j + 1) {
                    let v = (w * &Permutation::transposition(n, i, j)).lex_rank();
                    if u < v {
                        let (a, b) = match flavor {
                            Flavor::X => (w.apply(i), w.apply(j)),
                            Flavor::Y => (i, j),
                        };
                        edges.push(GkmEdge { u, v, a, b });
                    }
                }
            }
        }
        Ok(GkmModel {
            h: h.clone(),
            flavor,
            vertices,
            edges,
        })
    }

    pub fn n(&self) -> usize {
        self.h.n()
    }

    pub fn h(&self) -> &HessenbergFunction {
        &self.h
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// All of `S_n` in lexicographic order; vertex `k` is `vertices()[k]`.
    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    pub fn edges(&self) -> &[GkmEdge] {
        &self.edges
    }

    /// Whether `f(u) - f(v)` is divisible by the label of every edge.
    pub fn satisfies(&self, f: &EquivariantClass) -> bool {
        f.values.len() == self.vertices.len()
            && self.edges.iter().all(|e| {
                (&f.values[e.u] - &f.values[e.v])
                    .identify_vars(e.a, e.b)
                    .is_zero()
            })
    }

    /// Whether `action` preserves this model's congruences.
    pub fn check_action(&self, action: Action) -> Result<()> {
        let ok = match (self.flavor, action) {
            (Flavor::X, Action::Dot) | (Flavor::Y, Action::Dagger) => true,
            (Flavor::X, Action::Star) => self.h.is_complete(),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ActionNotPreserving {
                action: action.name(),
                flavor: self.flavor.name(),
                detail: format!("h = {}", self.h),
            })
        }
    }

    /// Euler class `prod_{j < i <= h(j)} (t_{w(i)} - t_{w(j)})` at vertex `w`.
    pub fn euler_class(&self, w: usize) -> TPoly {
        let n = self.n();
        let perm = &self.vertices[w];
        let mut e = TPoly::one(n);
        for j in 0..n {
            for i in j + 1..self.h.at(j + 1) {
                e = &e * &(&TPoly::var(n, perm.apply(i)) - &TPoly::var(n, perm.apply(j)));
            }
        }
        e
    }
}

/// An element of `Map(S_n, C[t_1..t_n])`, indexed like the model's vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantClass {
    values: Vec<TPoly>,
}

impl EquivariantClass {
    pub fn new(values: Vec<TPoly>) -> Self {
        EquivariantClass { values }
    }

    /// The constant tuple `w -> p`.
    pub fn constant(n: usize, p: TPoly) -> Self {
        EquivariantClass {
            values: vec![p; factorial(n) as usize],
        }
    }

    /// `t_i` as a constant tuple (0-based `i`).
    pub fn t(n: usize, i: usize) -> Self {
        Self::constant(n, TPoly::var(n, i))
    }

    /// `x_i(w) = t_{w(i)}` (0-based `i`).
    pub fn x(n: usize, i: usize) -> Result<Self> {
        Ok(EquivariantClass {
            values: permutations(n)?
                .iter()
                .map(|w| TPoly::var(n, w.apply(i)))
                .collect(),
        })
    }

    pub fn values(&self) -> &[TPoly] {
        &self.values
    }

    pub fn mul(&self, other: &EquivariantClass) -> EquivariantClass {
        EquivariantClass {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        }
    }

    pub fn add(&self, other: &EquivariantClass) -> EquivariantClass {
        EquivariantClass {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> EquivariantClass {
        EquivariantClass {
            values: self.values.iter().map(|p| p.scale(c)).collect(),
        }
    }

    fn vertex_map(&self, vertices: &[Permutation], f: impl Fn(&Permutation, &TPoly, usize) -> TPoly) -> Self {
        let _ = vertices;
        EquivariantClass {
            values: vertices
                .iter()
                .enumerate()
                .map(|(k, w)| f(w, &self.values[k], k))
                .collect(),
        }
    }

    /// Applies `action` by `sigma`.
    pub fn act(&self, sigma: &Permutation, action: Action) -> EquivariantClass {
        let n = sigma.n();
        let vertices = permutations(n).expect("rank within range");
        let inv = sigma.inverse();
        self.vertex_map(&vertices, |w, _, _| match action {
            Action::Dot => self.values[(&inv * w).lex_rank()].permute_vars(sigma),
            Action::Dagger => self.values[(&inv * w).lex_rank()].clone(),
            Action::Star => self.values[(w * sigma).lex_rank()].clone(),
        })
    }
}

/// Direction of the transport `xi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XiDirection {
    YToX,
    XToY,
}

/// `(xi f)(w) = w(f(w))` from the twin to `X(h)`, or its inverse; the result
/// is checked against the target congruences.
pub fn xi_transport(h: &HessenbergFunction, f: &EquivariantClass, direction: XiDirection) -> Result<EquivariantClass> {
    let n = h.n();
    let vertices = permutations(n)?;
    let out = f.vertex_map(&vertices, |w, p, _| match direction {
        XiDirection::YToX => p.permute_vars(w),
        XiDirection::XToY => p.permute_vars(&w.inverse()),
    });
    let target = match direction {
        XiDirection::YToX => Flavor::X,
        XiDirection::XToY => Flavor::Y,
    };
    if !GkmModel::new(h, target)?.satisfies(&out) {
        return Err(Error::Internal(format!(
            "transported class violates the {target:?} congruences for h = {h}"
        )));
    }
    Ok(out)
}

/// `sum_w f(w) / e(w)` over the fixed points, which must be a polynomial.
pub fn localization_pushforward(model: &GkmModel, f: &EquivariantClass) -> Result<TPoly> {
    if model.flavor != Flavor::X {
        return Err(Error::InvalidArgument("localization is defined for the X flavor".into()));
    }
    let n = model.n();
    // over the Vandermonde denominator prod_{a<b} (t_a - t_b); each Euler
    // class is a signed sub-product of it
    let factor = |a: usize, b: usize| &TPoly::var(n, a) - &TPoly::var(n, b);
    let mut numerator = TPoly::zero(n);
    for (k, w) in model.vertices.iter().enumerate() {
        if f.values[k].is_zero() {
            continue;
        }
        let mut in_euler = vec![vec![false; n]; n];
        let mut sign = 1i64;
        for j in 0..n {
            for i in j + 1..model.h.at(j + 1) {
                let (x, y) = (w.apply(i), w.apply(j));
                if x < y {
                    in_euler[x][y] = true;
                } else {
                    in_euler[y][x] = true;
                    sign = -sign;
                }
            }
        }
        let mut term = f.values[k].scale(&Q::from_integer(sign.into()));
        for a in 0..n {
            for b in a + 1..n {
                if !in_euler[a][b] {
                    term = &term * &factor(a, b);
                }
            }
        }
        numerator = &numerator + &term;
    }
    for a in 0..n {
        for b in a + 1..n {
            numerator = numerator.div_linear(a, b)?;
        }
    }
    Ok(numerator)
}

/// The degree-`d` solutions of a model's congruences.
#[derive(Clone, Debug)]
pub struct GkmSpace {
    model: Arc<GkmModel>,
    degree: usize,
    monomials: MonomialBasis,
    space: Subspace<Q>,
    /// Ambient coordinate -> position among the space's coordinate indices.
    coord_pos: Vec<Option<usize>>,
}

fn check_degree(model: &GkmModel, d: usize) -> Result<()> {
    let cap = model.h.size() + MAX_EXTRA_DEGREE;
    if d > cap {
        return Err(Error::Budget(format!(
            "degree pieces need d <= |h| + {MAX_EXTRA_DEGREE} = {cap}, got d = {d}"
        )));
    }
    Ok(())
}

/// Solves the congruences in degree `d`: for every edge labelled
/// `t_a - t_b`, `f(u) - f(v)` must vanish after `t_a := t_b`.
pub fn degree_piece(model: &Arc<GkmModel>, d: usize) -> Result<GkmSpace> {
    check_degree(model, d)?;
    let n = model.n();
    let mono = MonomialBasis::new(n, d as u32);
    let m = mono.len();
    let ncols = model.vertices.len() * m;
    let mut images = vec![vec![Vec::new(); n]; n];
    for a in 0..n {
        for b in 0..n {
            if a != b {
                images[a][b] = mono
                    .monomials()
                    .iter()
                    .map(|e| {
                        let mut f = e.clone();
                        f[b] += f[a];
                        f[a] = 0;
                        mono.index_of(&f).expect("same degree")
                    })
                    .collect();
            }
        }
    }
    let mut ech = Echelon::new(ncols);
    for e in &model.edges {
        let img = &images[e.a][e.b];
        let mut rows: Vec<SparseVec<Q>> = vec![Vec::new(); m];
        for k in 0..m {
            rows[img[k]].push((e.u * m + k, Q::from_integer(1.into())));
        }
        for k in 0..m {
            rows[img[k]].push((e.v * m + k, Q::from_integer((-1).into())));
        }
        for row in rows {
            if !row.is_empty() {
                ech.insert(row);
            }
        }
    }
    let space = ech.nullspace();
    let mut coord_pos = vec![None; ncols];
    for (l, &c) in space.coordinate_indices().iter().enumerate() {
        coord_pos[c] = Some(l);
    }
    Ok(GkmSpace {
        model: model.clone(),
        degree: d,
        monomials: mono,
        space,
        coord_pos,
    })
}

impl GkmSpace {
    pub fn model(&self) -> &GkmModel {
        &self.model
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn subspace(&self) -> &Subspace<Q> {
        &self.space
    }

    fn nmono(&self) -> usize {
        self.monomials.len()
    }

    /// Basis vector `j` as a tuple of polynomials.
    pub fn class(&self, j: usize) -> EquivariantClass {
        let n = self.model.n();
        let m = self.nmono();
        let mut values = vec![MPoly::zero(n); self.model.vertices.len()];
        for (c, x) in &self.space.basis()[j] {
            values[c / m].add_term(self.monomials.monomials()[c % m].clone(), x.clone());
        }
        EquivariantClass { values }
    }

    /// Ambient coordinates of a homogeneous degree-`d` tuple.
    pub fn flatten(&self, f: &EquivariantClass) -> Result<SparseVec<Q>> {
        let m = self.nmono();
        let mut v = Vec::new();
        for (w, p) in f.values.iter().enumerate() {
            let mut entries: Vec<(usize, Q)> = Vec::new();
            for (e, x) in p.terms() {
                let k = self.monomials.index_of(e).ok_or_else(|| {
                    Error::InvalidArgument(format!("class is not homogeneous of degree {}", self.degree))
                })?;
                entries.push((w * m + k, x.clone()));
            }
            entries.sort_unstable_by_key(|e| e.0);
            v.extend(entries);
        }
        Ok(v)
    }

    /// Coordinates of `f` in this space's basis, or an error if `f` is not
    /// in the space.
    pub fn coordinates(&self, f: &EquivariantClass) -> Result<Vec<Q>> {
        if !self.model.satisfies(f) {
            return Err(Error::InvalidArgument("class violates the congruences".into()));
        }
        Ok(self.space.coordinates(&self.flatten(f)?))
    }

    /// `preimage[c]` is the coordinate that `sigma` moves to `c`.
    fn preimage(&self, sigma: &Permutation, action: Action) -> Vec<usize> {
        let m = self.nmono();
        let inv = sigma.inverse();
        let vmap: Vec<usize> = self
            .model
            .vertices
            .iter()
            .map(|w| match action {
                Action::Dot | Action::Dagger => (&inv * w).lex_rank(),
                Action::Star => (w * sigma).lex_rank(),
            })
            .collect();
        let mmap: Vec<usize> = (0..m)
            .map(|k| match action {
                Action::Dot => self.monomials.permuted_index(k, &inv),
                Action::Dagger | Action::Star => k,
            })
            .collect();
        let mut pre = Vec::with_capacity(vmap.len() * m);
        for &v in &vmap {
            for &k in &mmap {
                pre.push(v * m + k);
            }
        }
        pre
    }

    pub fn trace(&self, sigma: &Permutation, action: Action) -> Result<Q> {
        self.model.check_action(action)?;
        Ok(self.space.trace_of_permutation(&self.preimage(sigma, action)))
    }

    /// Matrix of the action in this space's basis, after checking that the
    /// image of every basis vector satisfies the congruences.
    pub fn action_matrix(&self, sigma: &Permutation, action: Action) -> Result<Matrix<Q>> {
        self.model.check_action(action)?;
        let dim = self.dim();
        let mut mat = Matrix::zeros(dim, dim);
        for j in 0..dim {
            let image = self.class(j).act(sigma, action);
            if !self.model.satisfies(&image) {
                return Err(Error::ActionNotPreserving {
                    action: action.name(),
                    flavor: self.model.flavor.name(),
                    detail: format!("image of basis class {j} in degree {}", self.degree),
                });
            }
            for (l, x) in self.space.coordinates(&self.flatten(&image)?).into_iter().enumerate() {
                mat[(l, j)] = x;
            }
        }
        Ok(mat)
    }

    /// Trace on a subspace given in this space's coordinates, in reduced
    /// echelon form with the subspace's pivots as coordinate indices.
    fn trace_on(&self, sub: &Subspace<Q>, pre: &[usize]) -> Q {
        let coords = self.space.coordinate_indices();
        let basis = self.space.basis();
        let mut total = Q::from_integer(0.into());
        for (r, &p) in sub.basis().iter().zip(sub.coordinate_indices()) {
            let target = pre[coords[p]];
            for (j, x) in r {
                if let Some(y) = sparse_get(&basis[*j], target) {
                    total += x.clone() * y.clone();
                }
            }
        }
        total
    }
}

/// The degree-`d` part of the ideal generated by `gens`, as a subspace in the
/// coordinates of `space_d`.
pub fn ideal_piece(space_d: &GkmSpace, space_dm1: Option<&GkmSpace>, gens: Generators) -> Result<Subspace<Q>> {
    let Some(lower) = space_dm1 else {
        return Ok(Subspace::zero(space_d.dim()));
    };
    let model = &space_d.model;
    if lower.degree + 1 != space_d.degree || !Arc::ptr_eq(&lower.model, model) {
        return Err(Error::InvalidArgument("ideal pieces need consecutive degrees of one model".into()));
    }
    if model.flavor == Flavor::Y && gens == Generators::XClasses {
        return Err(Error::InvalidArgument("the classes x_i do not satisfy the Y congruences".into()));
    }
    let n = model.n();
    let (m_lo, m_hi) = (lower.nmono(), space_d.nmono());
    // times_var[k][i]: index of monomial k of degree d-1 times t_i
    let times_var: Vec<Vec<usize>> = lower
        .monomials
        .monomials()
        .iter()
        .map(|e| {
            (0..n)
                .map(|i| {
                    let mut f = e.clone();
                    f[i] += 1;
                    space_d.monomials.index_of(&f).expect("degree d")
                })
                .collect()
        })
        .collect();
    let mut ech = Echelon::new(space_d.dim());
    for b in lower.space.basis() {
        for g in 0..n {
            let mut v: SparseVec<Q> = b
                .iter()
                .filter_map(|(c, x)| {
                    let (w, k) = (c / m_lo, c % m_lo);
                    let var = match gens {
                        Generators::TVars => g,
                        Generators::XClasses => model.vertices[w].apply(g),
                    };
                    space_d.coord_pos[w * m_hi + times_var[k][var]].map(|l| (l, x.clone()))
                })
                .collect();
            v.sort_unstable_by_key(|e| e.0);
            ech.insert(v);
        }
    }
    Ok(ech.into_subspace())
}

/// Degree pieces `0..=max_d` of one model, with cached ideal pieces.
pub struct GkmTower {
    model: Arc<GkmModel>,
    spaces: Vec<GkmSpace>,
}

impl GkmTower {
    pub fn new(model: GkmModel, max_d: usize) -> Result<Self> {
        let model = Arc::new(model);
        check_degree(&model, max_d)?;
        let spaces = (0..=max_d)
            .into_par_iter()
            .map(|d| degree_piece(&model, d))
            .collect::<Result<Vec<_>>>()?;
        Ok(GkmTower { model, spaces })
    }

    pub fn model(&self) -> &GkmModel {
        &self.model
    }

    pub fn spaces(&self) -> &[GkmSpace] {
        &self.spaces
    }

    pub fn max_degree(&self) -> usize {
        self.spaces.len() - 1
    }

    /// Per-degree characters of the quotient by the ideal of `gens`, with
    /// each trace confirmed on a second class representative.
    pub fn quotient_characters(&self, action: Action, gens: Generators) -> Result<Vec<ClassFunction>> {
        self.model.check_action(action)?;
        let n = self.model.n();
        let top = self.model.h.size();
        if self.max_degree() < top {
            return Err(Error::InvalidArgument(format!(
                "quotient characters need max degree >= |h| = {top}"
            )));
        }
        let reps = class_representatives(n)?;
        let per_degree = (0..self.spaces.len())
            .into_par_iter()
            .map(|d| {
                let space = &self.spaces[d];
                let ideal = ideal_piece(space, d.checked_sub(1).map(|e| &self.spaces[e]), gens)?;
                let trace = |sigma: &Permutation| -> Q {
                    let pre = space.preimage(sigma, action);
                    space.space.trace_of_permutation(&pre) - space.trace_on(&ideal, &pre)
                };
                ClassFunction::try_from_fn(n, |mu| {
                    let (first, second) = &reps[mu];
                    let t = trace(first);
                    if let Some(s) = second {
                        let t2 = trace(s);
                        if t2 != t {
                            return Err(Error::Internal(format!(
                                "trace in degree {d} differs between representatives {first} and {s} of class {mu}: {t} vs {t2}"
                            )));
                        }
                    }
                    Ok(QRat::constant(t))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        for (d, chi) in per_degree.iter().enumerate().skip(top + 1) {
            if !chi.degree().is_zero() {
                return Err(Error::Internal(format!(
                    "quotient is nonzero in degree {d} > |h| = {top}"
                )));
            }
        }
        Ok(per_degree)
    }

    pub fn quotient_graded_character(&self, action: Action, gens: Generators) -> Result<GradedCharacter> {
        Ok(assemble(&self.quotient_characters(action, gens)?))
    }
}

/// `sum_d chi_d q^d`.
pub fn assemble(per_degree: &[ClassFunction]) -> GradedCharacter {
    let n = per_degree[0].n();
    ClassFunction::from_fn(n, |mu| {
        let coeffs: Vec<Q> = per_degree
            .iter()
            .map(|chi| chi.value(mu).as_polynomial().expect("constant trace").coeff(0))
            .collect();
        QRat::from_poly(QPoly::new(coeffs))
    })
    .expect("rank within range")
}

/// One representative per cycle type, plus a distinct conjugate when the
/// class has more than one element.
fn class_representatives(
    n: usize,
) -> Result<std::collections::HashMap<Partition, (Permutation, Option<Permutation>)>> {
    let reversal = Permutation::from_one_line(&(1..=n).rev().collect::<Vec<_>>())?;
    let shift = Permutation::from_one_line(&(1..=n).map(|i| i % n + 1).collect::<Vec<_>>())?;
    let mut out = std::collections::HashMap::new();
    for mu in crate::combinat::partitions_of(n)? {
        let rep = mu.representative();
        let second = [&reversal, &shift]
            .into_iter()
            .map(|c| &(c * &rep) * &c.inverse())
            .find(|s| *s != rep);
        out.insert(mu, (rep, second));
    }
    Ok(out)
}

/// `quotient_graded_character` on a freshly built model.
pub fn quotient_graded_character(
    h: &HessenbergFunction,
    flavor: Flavor,
    action: Action,
    gens: Generators,
    max_d: usize,
) -> Result<GradedCharacter> {
    GkmTower::new(GkmModel::new(h, flavor)?, max_d)?.quotient_graded_character(action, gens)
}

/// Betti numbers `b_0, b_2, ..` read off `omega X_h`.
pub fn betti_numbers(x_h: &SymFunc) -> Vec<u64> {
    let dims = x_h.omega().dimension_of();
    let p = dims
        .as_polynomial()
        .expect("dimension series is a polynomial")
        .clone();
    p.coeffs().iter().map(|c| c.to_integer().try_into().expect("small Betti number")).collect()
}

/// `sum_k b_k binom(d - k + n - 1, n - 1)`.
pub fn free_module_dimension(betti: &[u64], n: usize, d: usize) -> u64 {
    betti
        .iter()
        .enumerate()
        .take(d + 1)
        .map(|(k, b)| b * binomial(d - k + n - 1, n - 1))
        .sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct GkmReport {
    pub h: HessenbergFunction,
    pub betti: Vec<u64>,
    pub dimensions_x: Vec<usize>,
    pub dimensions_y: Vec<usize>,
    /// Per-degree characters of the dot action on the `t`-quotient.
    pub x_dot_t: Vec<ClassFunction>,
    /// Per-degree characters of the dot action on the `x`-quotient.
    pub x_dot_x: Vec<ClassFunction>,
    /// Per-degree characters of the dagger action on the twin's `t`-quotient.
    pub y_dagger_t: Vec<ClassFunction>,
    pub checks: Vec<Check>,
}

impl GkmReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

/// Runs every GKM law for one `h`, with degree pieces up to `|h| + 1`.
pub fn gkm_report(h: &HessenbergFunction) -> Result<GkmReport> {
    let n = h.n();
    let top = h.size();
    let max_d = top + 1;
    let (x_h, llt_h) = coloring_functions(h)?;
    let betti = betti_numbers(&x_h);
    let (tx, ty) = rayon::join(
        || GkmTower::new(GkmModel::new(h, Flavor::X)?, max_d),
        || GkmTower::new(GkmModel::new(h, Flavor::Y)?, max_d),
    );
    let (tx, ty) = (tx?, ty?);
    let mut checks = Vec::new();

    let dims = |t: &GkmTower| t.spaces.iter().map(|s| s.dim()).collect::<Vec<_>>();
    let (dimensions_x, dimensions_y) = (dims(&tx), dims(&ty));
    let expected: Vec<usize> = (0..=max_d)
        .map(|d| free_module_dimension(&betti, n, d) as usize)
        .collect();
    for (name, got) in [("free-module dimension law (X)", &dimensions_x), ("free-module dimension law (Y)", &dimensions_y)] {
        checks.push(Check::from_bool(name, *got == expected, || {
            format!("dimensions {got:?}, expected {expected:?}")
        }));
    }

    let x_dot_t = tx.quotient_characters(Action::Dot, Generators::TVars)?;
    let x_dot_x = tx.quotient_characters(Action::Dot, Generators::XClasses)?;
    let y_dagger_t = ty.quotient_characters(Action::Dagger, Generators::TVars)?;
    let (r_xt, r_xx, r_yt) = (assemble(&x_dot_t), assemble(&x_dot_x), assemble(&y_dagger_t));

    checks.push(Check::sym_eq("ch of X dot t-quotient = omega X_h", &graded_frobenius(&r_xt), &x_h.omega()));
    checks.push(Check::sym_eq("ch of X dot x-quotient = LLT_h", &graded_frobenius(&r_xx), &llt_h));
    checks.push(Check::class_eq("Y dagger t-quotient = X dot x-quotient", &r_yt, &r_xx));
    let nf = QRat::from_int(factorial(n) as i64);
    let total_ok = [&r_xt, &r_xx, &r_yt].iter().all(|r| r.degree().eval(&Q::from_integer(1.into())).ok() == nf.as_polynomial().map(|p| p.coeff(0)));
    checks.push(Check::from_bool("quotients have total dimension n!", total_ok, || {
        format!("dimension series {} / {} / {}", r_xt.degree().to_plain(), r_xx.degree().to_plain(), r_yt.degree().to_plain())
    }));

    let one_minus_q_n = (&QRat::one() - &QRat::q()).pow(-(n as i32))?;
    let r_ht = r_xx.scale(&one_minus_q_n);
    let scale = QRat::from_int(-1).pow(n as i32)? * QRat::q_pow(n as i64);
    checks.push(Check::from_bool(
        "palindromicity of R(H_T) with sign twist",
        palindromicity_check(&r_ht, &QRat::q_pow(top as i64), Twist::Sign, &scale),
        || "q^|h| R(H_T; 1/q) differs from (-q)^n R(H_T; q) (x) U".into(),
    ));

    if h.is_complete() {
        let star = tx.quotient_graded_character(Action::Star, Generators::TVars)?;
        checks.push(Check::class_eq("X star t-quotient = Y dagger t-quotient", &star, &r_yt));
    }

    checks.push(localization_check(&tx)?);
    checks.push(xi_check(&ty)?);

    Ok(GkmReport {
        h: h.clone(),
        betti,
        dimensions_x,
        dimensions_y,
        x_dot_t,
        x_dot_x,
        y_dagger_t,
        checks,
    })
}

/// `sum_d ch(chi_d) q^d` for a graded character.
pub fn graded_frobenius(chi: &GradedCharacter) -> SymFunc {
    frobenius_ch(chi)
}

fn adjacent_transpositions(n: usize) -> Vec<Permutation> {
    (0..n.saturating_sub(1)).map(|i| Permutation::transposition(n, i, i + 1)).collect()
}

/// Pushforward of every basis class is a polynomial of the right degree and
/// commutes with the dot action of each adjacent transposition.
fn localization_check(tower: &GkmTower) -> Result<Check> {
    let name = "localization is polynomial and dot-equivariant";
    let model = tower.model.as_ref();
    let top = model.h.size();
    let gens = adjacent_transpositions(model.n());
    let failures: Vec<String> = tower
        .spaces
        .par_iter()
        .flat_map(|space| {
            let gens = &gens;
            (0..space.dim()).into_par_iter().filter_map(move |j| {
                let f = space.class(j);
                let p = match localization_pushforward(model, &f) {
                    Ok(p) => p,
                    Err(e) => return Some(format!("degree {} class {j}: {e}", space.degree)),
                };
                let expected_degree = space.degree.checked_sub(top);
                if !p.is_zero() && p.degree().map(|x| x as usize) != expected_degree
                    || !p.is_zero() && !p.is_homogeneous_of(p.degree().unwrap_or(0))
                {
                    return Some(format!("degree {} class {j}: pushforward has the wrong degree", space.degree));
                }
                for s in gens {
                    match localization_pushforward(model, &f.act(s, Action::Dot)) {
                        Ok(q) if q == p.permute_vars(s) => {}
                        _ => return Some(format!("degree {} class {j}: not equivariant under {s}", space.degree)),
                    }
                }
                None
            })
        })
        .collect();
    Ok(match failures.first() {
        None => Check::pass(name),
        Some(f) => Check::fail(name, f.clone()),
    })
}

/// `xi` carries every twin basis class into `X(h)` and intertwines dagger
/// with dot.
fn xi_check(tower: &GkmTower) -> Result<Check> {
    let name = "xi maps Y into X and intertwines dagger with dot";
    let h = tower.model.h.clone();
    let gens = adjacent_transpositions(h.n());
    let failures: Vec<String> = tower
        .spaces
        .par_iter()
        .flat_map(|space| {
            let h = h.clone();
            let gens = gens.clone();
            (0..space.dim()).into_par_iter().filter_map(move |j| {
                let f = space.class(j);
                let xf = match xi_transport(&h, &f, XiDirection::YToX) {
                    Ok(x) => x,
                    Err(e) => return Some(format!("degree {} class {j}: {e}", space.degree)),
                };
                for s in &gens {
                    let lhs = xi_transport(&h, &f.act(s, Action::Dagger), XiDirection::YToX);
                    if lhs.ok().as_ref() != Some(&xf.act(s, Action::Dot)) {
                        return Some(format!("degree {} class {j}: fails under {s}", space.degree));
                    }
                }
                None
            })
        })
        .collect();
    Ok(match failures.first() {
        None => Check::pass(name),
        Some(f) => Check::fail(name, f.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::Basis;

    fn hf(s: &str) -> HessenbergFunction {
        s.parse().unwrap()
    }

    fn model(s: &str, flavor: Flavor) -> Arc<GkmModel> {
        Arc::new(GkmModel::new(&hf(s), flavor).unwrap())
    }

    #[test]
    fn small_dimensions() {
        let m = model("2,2", Flavor::X);
        assert_eq!(degree_piece(&m, 0).unwrap().dim(), 1);
        assert_eq!(degree_piece(&m, 1).unwrap().dim(), 3);
        for flavor in [Flavor::X, Flavor::Y] {
            assert_eq!(degree_piece(&model("1,2", flavor), 0).unwrap().dim(), 2);
        }
        assert!(matches!(degree_piece(&m, 5), Err(Error::Budget(_))));
    }

    #[test]
    fn edges_and_labels() {
        let m = model("2,3,3", Flavor::X);
        assert_eq!(m.edges().len(), 6 * 2 / 2);
        let y = model("2,3,3", Flavor::Y);
        assert!(y.edges().iter().all(|e| e.a == e.b + 1));
        let full = model("4,4,4,4", Flavor::X);
        assert_eq!(full.edges().len(), 24 * 6 / 2);
    }

    #[test]
    fn identity_acts_trivially() {
        let m = model("2,3,3", Flavor::X);
        let s = degree_piece(&m, 2).unwrap();
        let id = Permutation::identity(3);
        assert!(s.action_matrix(&id, Action::Dot).unwrap().is_identity());
        let y = degree_piece(&model("2,3,3", Flavor::Y), 2).unwrap();
        assert!(y.action_matrix(&id, Action::Dagger).unwrap().is_identity());
    }

    #[test]
    fn x_classes_are_dot_fixed() {
        let m = model("2,3,3", Flavor::X);
        let s = degree_piece(&m, 1).unwrap();
        for i in 0..3 {
            let x = EquivariantClass::x(3, i).unwrap();
            assert!(m.satisfies(&x));
            let coords = s.coordinates(&x).unwrap();
            for sigma in permutations(3).unwrap() {
                let a = s.action_matrix(&sigma, Action::Dot).unwrap();
                for r in 0..s.dim() {
                    let v: Q = (0..s.dim()).map(|c| a[(r, c)].clone() * coords[c].clone()).sum();
                    assert_eq!(v, coords[r]);
                }
            }
        }
    }

    #[test]
    fn dagger_trace_on_edgeless_twin() {
        let s = degree_piece(&model("1,2", Flavor::Y), 0).unwrap();
        assert_eq!(s.trace(&Permutation::identity(2), Action::Dagger).unwrap(), Q::from_integer(2.into()));
        assert_eq!(s.trace(&Permutation::transposition(2, 0, 1), Action::Dagger).unwrap(), Q::from_integer(0.into()));
    }

    #[test]
    fn unsupported_actions_are_rejected() {
        let m = model("2,3,3", Flavor::X);
        let s = degree_piece(&m, 1).unwrap();
        let sigma = Permutation::transposition(3, 0, 1);
        assert!(matches!(s.action_matrix(&sigma, Action::Star), Err(Error::ActionNotPreserving { .. })));
        assert!(matches!(s.trace(&sigma, Action::Dagger), Err(Error::ActionNotPreserving { .. })));
        let full = degree_piece(&model("3,3,3", Flavor::X), 2).unwrap();
        assert!(full.action_matrix(&sigma, Action::Star).is_ok());
    }

    #[test]
    fn ideal_pieces() {
        let m = model("2,2", Flavor::X);
        let s0 = degree_piece(&m, 0).unwrap();
        let s1 = degree_piece(&m, 1).unwrap();
        assert_eq!(ideal_piece(&s0, None, Generators::TVars).unwrap().dim(), 0);
        assert_eq!(ideal_piece(&s1, Some(&s0), Generators::TVars).unwrap().dim(), 2);
        assert_eq!(ideal_piece(&s1, Some(&s0), Generators::XClasses).unwrap().dim(), 2);
    }

    #[test]
    fn two_vertex_quotients() {
        let h = hf("2,2");
        let xt = quotient_graded_character(&h, Flavor::X, Action::Dot, Generators::TVars, 1).unwrap();
        let h2 = SymFunc::elem(Basis::H, &[2]).unwrap();
        assert!(graded_frobenius(&xt).same_as(&h2.scale(&"q + 1".parse().unwrap())));
        let xx = quotient_graded_character(&h, Flavor::X, Action::Dot, Generators::XClasses, 1).unwrap();
        let e = SymFunc::from_terms(
            Basis::M,
            2,
            [(Partition::row(2), QRat::one()), (Partition::ones(2), "q + 1".parse().unwrap())],
        )
        .unwrap();
        assert!(graded_frobenius(&xx).same_as(&e));
    }

    #[test]
    fn xi_examples() {
        let h = hf("2,3,3");
        for i in 0..3 {
            let t = EquivariantClass::t(3, i);
            assert_eq!(xi_transport(&h, &t, XiDirection::YToX).unwrap(), EquivariantClass::x(3, i).unwrap());
        }
        let one = EquivariantClass::constant(3, TPoly::one(3));
        assert_eq!(xi_transport(&h, &one, XiDirection::YToX).unwrap(), one);
        let x0 = EquivariantClass::x(3, 0).unwrap();
        let back = xi_transport(&h, &x0, XiDirection::XToY).unwrap();
        assert_eq!(back, EquivariantClass::t(3, 0));
    }

    #[test]
    fn localization_examples() {
        let m = GkmModel::new(&hf("2,2"), Flavor::X).unwrap();
        let x1 = EquivariantClass::x(2, 0).unwrap();
        assert_eq!(
            localization_pushforward(&m, &x1).unwrap(),
            TPoly::constant(2, Q::from_integer((-1).into()))
        );
        let one = EquivariantClass::constant(2, TPoly::one(2));
        assert!(localization_pushforward(&m, &one).unwrap().is_zero());
        let t1 = EquivariantClass::new(vec![TPoly::one(2), TPoly::zero(2)]);
        assert!(matches!(localization_pushforward(&m, &t1), Err(Error::NotPolynomial(_))));
    }

    #[test]
    fn localization_is_equivariant_on_path() {
        let m = Arc::new(GkmModel::new(&hf("2,3,3"), Flavor::X).unwrap());
        let s = degree_piece(&m, 3).unwrap();
        for j in 0..s.dim() {
            let f = s.class(j);
            let p = localization_pushforward(&m, &f).unwrap();
            for sigma in permutations(3).unwrap() {
                let q = localization_pushforward(&m, &f.act(&sigma, Action::Dot)).unwrap();
                assert_eq!(q, p.permute_vars(&sigma));
            }
        }
    }

    #[test]
    fn reports_for_rank_three() {
        for n in 1..=3 {
            for h in crate::hessgraph::hessenberg_all(n).unwrap() {
                let r = gkm_report(&h).unwrap();
                assert!(r.passed(), "{h}: {:?}", r.checks);
            }
        }
    }

    #[test]
    #[ignore]
    fn timing_rank_four() {
        for s in ["2,3,4,4", "4,4,4,4"] {
            let t = std::time::Instant::now();
            let m = model(s, Flavor::X);
            for d in 0..=m.h().size() + 1 {
                let t0 = std::time::Instant::now();
                let sp = degree_piece(&m, d).unwrap();
                eprintln!("h={s} d={d} dim={} {:?}", sp.dim(), t0.elapsed());
            }
            eprintln!("total {:?}", t.elapsed());
        }
        let t = std::time::Instant::now();
        for h in crate::hessgraph::hessenberg_all(4).unwrap() {
            let t0 = std::time::Instant::now();
            let r = gkm_report(&h).unwrap();
            eprintln!("report {h}: passed={} {:?}", r.passed(), t0.elapsed());
            for c in r.checks.iter().filter(|c| !c.passed) {
                eprintln!("  {c:?}");
            }
        }
        eprintln!("all reports {:?}", t.elapsed());
    }
}
