//! Conformal derivation algebra and Tanaka prolongation.
//!
//! An element of degree `d ≥ 0` is stored as the list of its values on the
//! basis of the negative part, in global coordinates of the algebra built so
//! far (negative basis first, then degree 0, degree 1, ...).

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{GlaError, Result};
use crate::gla::{check_fundamental, check_gla, GradedAlgebra, SymBilinearForm};
use crate::io::{AlgebraFile, BracketEntry, FormFile};
use crate::linalg::{kernel_of_rows, sparse, RationalMatrix, RowReducer, SparseVec};
use crate::rational::Rational;

pub const DEFAULT_STEP_LIMIT: usize = 64;
pub const STEP_LIMIT_ENV: &str = "GLAP_STEP_LIMIT";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProlongationOptions {
    /// Highest positive degree that may be attempted.
    pub step_limit: usize,
}

impl Default for ProlongationOptions {
    fn default() -> Self {
        Self {
            step_limit: DEFAULT_STEP_LIMIT,
        }
    }
}

impl ProlongationOptions {
    /// Default options, with the step limit taken from `GLAP_STEP_LIMIT` if set.
    pub fn from_env() -> Self {
        let step_limit = std::env::var(STEP_LIMIT_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_STEP_LIMIT);
        Self { step_limit }
    }
}

/// Column layout of the unknowns for maps of one degree.
#[derive(Clone, Debug)]
struct Layout {
    offsets: Vec<usize>,
    targets: Vec<Vec<usize>>,
    eta_col: Option<usize>,
    ncols: usize,
}

impl Layout {
    fn col(&self, x: usize, pos: usize) -> usize {
        self.offsets[x] + pos
    }

    fn flatten(
        &self,
        images: &[SparseVec],
        pos_in_degree: &[usize],
        eta: Option<&Rational>,
    ) -> SparseVec {
        let mut out = Vec::new();
        for (x, img) in images.iter().enumerate() {
            for (t, v) in img {
                out.push((self.col(x, pos_in_degree[*t]), v.clone()));
            }
        }
        if let (Some(c), Some(e)) = (self.eta_col, eta) {
            if !e.is_zero() {
                out.push((c, e.clone()));
            }
        }
        out.sort_by_key(|e| e.0);
        out
    }

    fn unflatten(&self, v: &[(usize, Rational)]) -> (Vec<SparseVec>, Rational) {
        let mut images = vec![Vec::new(); self.offsets.len()];
        let mut eta = Rational::zero();
        for (c, val) in v {
            if Some(*c) == self.eta_col {
                eta = val.clone();
                continue;
            }
            let x = self.offsets.partition_point(|&o| o <= *c) - 1;
            images[x].push((self.targets[x][c - self.offsets[x]], val.clone()));
        }
        for img in &mut images {
            img.sort_by_key(|e| e.0);
        }
        (images, eta)
    }
}

#[derive(Clone, Debug)]
struct Level {
    layout: Layout,
    flat: Vec<SparseVec>,
    free: Vec<usize>,
    first: usize,
}

impl Level {
    /// Coordinates of a flattened map in this level's basis, if it lies in the span.
    fn coords(&self, w: &SparseVec) -> Option<Vec<Rational>> {
        let c: Vec<Rational> = self.free.iter().map(|&f| sparse::get(w, f)).collect();
        let mut acc = sparse::Accumulator::new();
        for (k, v) in c.iter().enumerate() {
            if !v.is_zero() {
                acc.add_scaled(v, &self.flat[k]);
            }
        }
        (acc.finish() == *w).then_some(c)
    }
}

/// Basis of the conformal derivation algebra of `(m, [g])`.
#[derive(Clone, Debug)]
pub struct DerivationBasis {
    m: GradedAlgebra,
    form: SymBilinearForm,
    elements: Vec<Vec<SparseVec>>,
    eta: Vec<Rational>,
    level: Level,
}

impl DerivationBasis {
    pub fn algebra(&self) -> &GradedAlgebra {
        &self.m
    }

    pub fn form(&self) -> &SymBilinearForm {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// Images `D e_x` of the negative basis, for element `k`.
    pub fn images(&self, k: usize) -> &[SparseVec] {
        &self.elements[k]
    }

    /// Matrix of element `k` on the negative part (column `x` is `D e_x`).
    pub fn matrix(&self, k: usize) -> RationalMatrix {
        images_to_matrix(&self.elements[k], self.m.dim())
    }

    pub fn matrices(&self) -> Vec<RationalMatrix> {
        (0..self.dim()).map(|k| self.matrix(k)).collect()
    }

    /// `η_D` for basis element `k`, where `D·g = η_D g`.
    pub fn eta(&self, k: usize) -> &Rational {
        &self.eta[k]
    }

    pub fn etas(&self) -> &[Rational] {
        &self.eta
    }

    /// Degree −1 block of element `k`, in the local basis of `g_{-1}`.
    pub fn block_minus1(&self, k: usize) -> RationalMatrix {
        restrict(&self.matrix(k), self.form.indices())
    }

    /// Coordinates of a degree-preserving map in this basis, or `None`.
    pub fn coordinates(&self, map: &RationalMatrix) -> Option<Vec<Rational>> {
        let images = matrix_to_images(map);
        if images.iter().enumerate().any(|(x, img)| {
            img.iter()
                .any(|(t, _)| self.m.degree(*t) != self.m.degree(x))
        }) {
            return None;
        }
        let pos = positions(self.m.degrees());
        let eta = eta_of_map(&self.form, map)?;
        self.level
            .coords(&self.level.layout.flatten(&images, &pos, Some(&eta)))
    }

    /// `η` evaluated on a coordinate vector.
    pub fn eta_of(&self, coords: &[Rational]) -> Rational {
        coords.iter().zip(&self.eta).map(|(c, e)| c * e).sum()
    }

    /// Map with the given coordinates.
    pub fn combination(&self, coords: &[Rational]) -> RationalMatrix {
        let n = self.m.dim();
        let mut out = RationalMatrix::zeros(n, n);
        for (k, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.matrix(k).scale(c));
            }
        }
        out
    }

    /// True if both bases span the same space of maps.
    pub fn same_span(&self, other: &DerivationBasis) -> bool {
        self.dim() == other.dim()
            && other
                .matrices()
                .iter()
                .all(|m| self.coordinates(m).is_some())
    }
}

fn images_to_matrix(images: &[SparseVec], n: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n, images.len());
    for (x, img) in images.iter().enumerate() {
        for (t, v) in img {
            m.set(*t, x, v.clone());
        }
    }
    m
}

fn matrix_to_images(m: &RationalMatrix) -> Vec<SparseVec> {
    (0..m.cols())
        .map(|x| sparse::from_dense(&m.column(x)))
        .collect()
}

fn restrict(m: &RationalMatrix, idx: &[usize]) -> RationalMatrix {
    let mut out = RationalMatrix::zeros(idx.len(), idx.len());
    for (a, &i) in idx.iter().enumerate() {
        for (b, &j) in idx.iter().enumerate() {
            out.set(a, b, m.get(i, j).clone());
        }
    }
    out
}

/// Position of each basis index within its degree block.
fn positions(degrees: &[i32]) -> Vec<usize> {
    let mut count: BTreeMap<i32, usize> = BTreeMap::new();
    degrees
        .iter()
        .map(|d| {
            let c = count.entry(*d).or_insert(0);
            *c += 1;
            *c - 1
        })
        .collect()
}

/// `η` with `g(Ax,y) + g(x,Ay) = η g(x,y)` on `g_{-1}`, if such `η` exists.
pub fn eta_of_map(g: &SymBilinearForm, map: &RationalMatrix) -> Option<Rational> {
    let a = restrict(map, g.indices());
    let s = g.matrix();
    let lhs = a.transpose().mul(s).add(&s.mul(&a));
    let n = s.rows();
    let (i, j) = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| !s.get(i, j).is_zero())?;
    let eta = lhs.get(i, j) / s.get(i, j);
    (lhs == s.scale(&eta)).then_some(eta)
}

/// Incremental Tanaka prolongation of `(m, [g])`.
#[derive(Clone, Debug)]
pub struct Prolongator {
    m: GradedAlgebra,
    form: SymBilinearForm,
    n: usize,
    degrees: Vec<i32>,
    pos: Vec<usize>,
    by_degree: BTreeMap<i32, Vec<usize>>,
    images: Vec<Vec<SparseVec>>,
    levels: Vec<Level>,
    finished: bool,
}

impl Prolongator {
    pub fn new(m: &GradedAlgebra, g: &SymBilinearForm) -> Result<Self> {
        let f = check_fundamental(m)?;
        if !f.is_fgla {
            return Err(GlaError::NotFundamental);
        }
        g.validate(m)?;
        let degrees = m.degrees().to_vec();
        let mut by_degree: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        for (i, d) in degrees.iter().enumerate() {
            by_degree.entry(*d).or_default().push(i);
        }
        Ok(Self {
            m: m.clone(),
            form: g.clone(),
            n: m.dim(),
            pos: positions(&degrees),
            degrees,
            by_degree,
            images: Vec::new(),
            levels: Vec::new(),
            finished: false,
        })
    }

    /// Degree of the next step.
    pub fn next_degree(&self) -> i32 {
        self.levels.len() as i32
    }

    pub fn is_finished(&self) -> bool {
        self.finished
    }

    /// Dimensions of the computed nonnegative degrees.
    pub fn level_dims(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.flat.len()).collect()
    }

    fn bracket_with_m(&self, s: usize, x: usize) -> SparseVec {
        if s < self.n {
            self.m.bracket_basis(s, x)
        } else {
            self.images[s - self.n][x].clone()
        }
    }

    fn layout(&self, d: i32) -> Layout {
        let mut offsets = Vec::with_capacity(self.n);
        let mut targets = Vec::with_capacity(self.n);
        let mut ncols = 0;
        for x in 0..self.n {
            let t = self
                .by_degree
                .get(&(self.degrees[x] + d))
                .cloned()
                .unwrap_or_default();
            offsets.push(ncols);
            ncols += t.len();
            targets.push(t);
        }
        let eta_col = (d == 0).then(|| {
            ncols += 1;
            ncols - 1
        });
        Layout {
            offsets,
            targets,
            eta_col,
            ncols,
        }
    }

    fn constraint_rows(&self, layout: &Layout) -> Vec<SparseVec> {
        let n = self.n;
        let mut rows: Vec<SparseVec> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut out = Vec::new();
                for j in i + 1..n {
                    let mut acc: BTreeMap<usize, sparse::Accumulator> = BTreeMap::new();
                    let mut add = |target: usize, col: usize, v: Rational| {
                        acc.entry(target).or_default().add(col, &v);
                    };
                    for (k, c) in self.m.bracket_basis(i, j) {
                        for (p, &t) in layout.targets[k].iter().enumerate() {
                            add(t, layout.col(k, p), c.clone());
                        }
                    }
                    for (p, &t) in layout.targets[i].iter().enumerate() {
                        for (s, c) in self.bracket_with_m(t, j) {
                            add(s, layout.col(i, p), -c);
                        }
                    }
                    for (p, &t) in layout.targets[j].iter().enumerate() {
                        for (s, c) in self.bracket_with_m(t, i) {
                            add(s, layout.col(j, p), c);
                        }
                    }
                    out.extend(
                        acc.into_values()
                            .map(|a| a.finish())
                            .filter(|r| !r.is_empty()),
                    );
                }
                out
            })
            .collect();
        if let Some(eta_col) = layout.eta_col {
            let idx = self.form.indices();
            let s = self.form.matrix();
            for a in 0..idx.len() {
                for b in a..idx.len() {
                    let mut acc = sparse::Accumulator::new();
                    for t in 0..idx.len() {
                        acc.add(layout.col(idx[a], t), s.get(t, b));
                        acc.add(layout.col(idx[b], t), s.get(a, t));
                    }
                    acc.add(eta_col, &-s.get(a, b));
                    let r = acc.finish();
                    if !r.is_empty() {
                        rows.push(r);
                    }
                }
            }
        }
        rows
    }

    /// Computes the next graded piece and returns its dimension; zero means
    /// the prolongation is complete.
    pub fn step(&mut self) -> Result<usize> {
        if self.finished {
            return Ok(0);
        }
        let d = self.next_degree();
        let layout = self.layout(d);
        let rows = self.constraint_rows(&layout);
        let mut red = RowReducer::new(layout.ncols);
        for r in rows {
            red.push(r);
        }
        let rref = red.into_rref();
        let flat = rref.kernel_basis();
        let first = self.n + self.images.len();
        for (k, v) in flat.iter().enumerate() {
            let (img, _) = layout.unflatten(v);
            self.images.push(img);
            self.degrees.push(d);
            let g = first + k;
            self.by_degree.entry(d).or_default().push(g);
            self.pos.push(k);
        }
        let dim = flat.len();
        if dim == 0 {
            self.finished = true;
        } else {
            self.levels.push(Level {
                layout,
                flat,
                free: rref.free,
                first,
            });
        }
        Ok(dim)
    }

    /// The degree 0 piece; runs the first step if necessary.
    pub fn derivations(&mut self) -> Result<DerivationBasis> {
        if self.levels.is_empty() && !self.finished {
            self.step()?;
        }
        let level = self
            .levels
            .first()
            .cloned()
            .ok_or_else(|| GlaError::Internal("empty degree 0".into()))?;
        let mut elements = Vec::new();
        let mut eta = Vec::new();
        for v in &level.flat {
            let (img, e) = level.layout.unflatten(v);
            elements.push(img);
            eta.push(e);
        }
        Ok(DerivationBasis {
            m: self.m.clone(),
            form: self.form.clone(),
            elements,
            eta,
            level,
        })
    }

    /// Runs steps until termination, then assembles the full algebra.
    pub fn run(mut self, opts: &ProlongationOptions) -> Result<ProlongationResult> {
        while !self.finished {
            if self.levels.len() > opts.step_limit {
                return Err(GlaError::StepLimitExceeded(opts.step_limit));
            }
            self.step()?;
        }
        self.assemble()
    }

    fn assemble(mut self) -> Result<ProlongationResult> {
        let g0 = self.derivations()?;
        let n = self.n;
        let total = n + self.images.len();
        let nu = self.levels.len() as i32 - 1;
        let mut nonneg: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();

        let bracket =
            |nonneg: &BTreeMap<(usize, usize), SparseVec>, u: usize, t: usize| -> SparseVec {
                if t < n {
                    return self.images[u - n][t].clone();
                }
                use std::cmp::Ordering::*;
                match u.cmp(&t) {
                    Equal => Vec::new(),
                    Less => nonneg.get(&(u, t)).cloned().unwrap_or_default(),
                    Greater => nonneg
                        .get(&(t, u))
                        .map(|v| sparse::scale(v, &Rational::from_integer(-1)))
                        .unwrap_or_default(),
                }
            };
        let apply =
            |nonneg: &BTreeMap<(usize, usize), SparseVec>, u: usize, w: &SparseVec| -> SparseVec {
                let mut acc = sparse::Accumulator::new();
                for (t, c) in w {
                    acc.add_scaled(c, &bracket(nonneg, u, *t));
                }
                acc.finish()
            };

        for total_degree in 0..=2 * nu {
            let mut pairs = Vec::new();
            for a in 0..=total_degree.min(nu) {
                let b = total_degree - a;
                if b < a || b > nu {
                    continue;
                }
                let la = &self.levels[a as usize];
                let lb = &self.levels[b as usize];
                for u in la.first..la.first + la.flat.len() {
                    for v in lb.first..lb.first + lb.flat.len() {
                        if u < v {
                            pairs.push((u, v));
                        }
                    }
                }
            }
            let results: Vec<Result<((usize, usize), SparseVec)>> = pairs
                .par_iter()
                .map(|&(u, v)| {
                    let w: Vec<SparseVec> = (0..n)
                        .map(|x| {
                            let vx = &self.images[v - n][x];
                            let ux = &self.images[u - n][x];
                            sparse::sub(&apply(&nonneg, u, vx), &apply(&nonneg, v, ux))
                        })
                        .collect();
                    if total_degree > nu {
                        if w.iter().any(|img| !img.is_empty()) {
                            return Err(GlaError::Internal(format!(
                                "bracket of degree {total_degree} does not vanish"
                            )));
                        }
                        return Ok(((u, v), Vec::new()));
                    }
                    let level = &self.levels[total_degree as usize];
                    let eta = if total_degree == 0 {
                        Some(eta_of_map(&self.form, &images_to_matrix(&w, n)))
                    } else {
                        None
                    };
                    let eta = match eta {
                        Some(None) => {
                            return Err(GlaError::Internal("bracket is not conformal".into()))
                        }
                        Some(Some(e)) => Some(e),
                        None => None,
                    };
                    let flat = level.layout.flatten(&w, &self.pos, eta.as_ref());
                    let c = level.coords(&flat).ok_or_else(|| {
                        GlaError::Internal(format!(
                            "bracket of degree {total_degree} leaves the algebra"
                        ))
                    })?;
                    let value = c
                        .into_iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(k, x)| (level.first + k, x))
                        .collect();
                    Ok(((u, v), value))
                })
                .collect();
            for r in results {
                let (key, value) = r?;
                if !value.is_empty() {
                    nonneg.insert(key, value);
                }
            }
        }

        let mut labels = self.m.labels().to_vec();
        for (d, level) in self.levels.iter().enumerate() {
            for k in 0..level.flat.len() {
                labels.push(format!("P{d}_{k}[{d}]"));
            }
        }
        let mut full =
            GradedAlgebra::new(format!("{}+", self.m.name()), labels, self.degrees.clone())?;
        for (&(i, j), v) in self.m.brackets() {
            full.set_bracket(i, j, v.clone())?;
        }
        for s in n..total {
            for x in 0..n {
                let img = &self.images[s - n][x];
                if !img.is_empty() {
                    full.set_bracket(s, x, img.clone())?;
                }
            }
        }
        for ((u, v), val) in nonneg {
            full.set_bracket(u, v, val)?;
        }

        let report = check_gla(&full);
        if !report.is_ok() {
            return Err(GlaError::Internal(format!(
                "assembled prolongation fails the Lie algebra check ({} violations)",
                report.violations.len()
            )));
        }
        if !is_transitive(&full) {
            return Err(GlaError::Internal(
                "assembled prolongation is not transitive".into(),
            ));
        }
        let mut step_dims: BTreeMap<i32, usize> = self
            .levels
            .iter()
            .enumerate()
            .map(|(d, l)| (d as i32, l.flat.len()))
            .collect();
        step_dims.insert(nu + 1, 0);
        Ok(ProlongationResult {
            full,
            boundary: nu,
            step_dims,
            g0,
            form: self.form,
        })
    }
}

/// The conformal derivation algebra of `(m, [g])`.
pub fn conformal_g0(m: &GradedAlgebra, g: &SymBilinearForm) -> Result<DerivationBasis> {
    Prolongator::new(m, g)?.derivations()
}

/// Full prolongation with options read from the environment.
pub fn full_prolongation(m: &GradedAlgebra, g: &SymBilinearForm) -> Result<ProlongationResult> {
    full_prolongation_with(m, g, &ProlongationOptions::from_env())
}

pub fn full_prolongation_with(
    m: &GradedAlgebra,
    g: &SymBilinearForm,
    opts: &ProlongationOptions,
) -> Result<ProlongationResult> {
    Prolongator::new(m, g)?.run(opts)
}

/// For every basis element `X` of nonnegative degree, `[X, g_{-1}] = 0`
/// implies `X = 0`; checked degree by degree as an injectivity statement.
pub fn is_transitive(a: &GradedAlgebra) -> bool {
    let minus_one = a.indices_of_degree(-1);
    let n = a.dim();
    let max = a.max_degree().unwrap_or(-1);
    (0..=max).all(|p| {
        let elems = a.indices_of_degree(p);
        let mut red = RowReducer::new(n * minus_one.len().max(1));
        elems.iter().all(|&x| {
            let mut row = Vec::new();
            for (slot, &y) in minus_one.iter().enumerate() {
                for (k, v) in a.bracket_basis(x, y) {
                    row.push((slot * n + k, v));
                }
            }
            row.sort_by_key(|e| e.0);
            !row.is_empty() && red.push(row)
        })
    })
}

/// Prolongation output.
#[derive(Clone, Debug)]
pub struct ProlongationResult {
    pub full: GradedAlgebra,
    /// Highest degree with a nonzero piece.
    pub boundary: i32,
    /// Dimension of each computed nonnegative degree, ending with the first zero.
    pub step_dims: BTreeMap<i32, usize>,
    pub g0: DerivationBasis,
    pub form: SymBilinearForm,
}

impl ProlongationResult {
    pub fn dims_by_degree(&self) -> BTreeMap<i32, usize> {
        self.full.dims_by_degree()
    }

    pub fn total_dim(&self) -> usize {
        self.full.dim()
    }

    pub fn negative_part(&self) -> Result<GradedAlgebra> {
        let mut m = self.full.negative_part()?;
        m.set_name(self.g0.algebra().name());
        Ok(m)
    }

    pub fn to_file(&self) -> ProlongationFile {
        let a = AlgebraFile::from(&self.full);
        ProlongationFile {
            name: a.name,
            labels: a.labels,
            degrees: a.degrees,
            brackets: a.brackets,
            step_dims: self.step_dims.clone(),
            form: Some(FormFile::from(&self.form)),
        }
    }
}

/// Algebra file format with the per-degree dimensions of the prolongation
/// and, optionally, the form it was computed from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProlongationFile {
    pub name: String,
    pub labels: Vec<String>,
    pub degrees: Vec<i32>,
    pub brackets: Vec<BracketEntry>,
    pub step_dims: BTreeMap<i32, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<FormFile>,
}

impl ProlongationFile {
    pub fn algebra(&self) -> Result<GradedAlgebra> {
        AlgebraFile {
            name: self.name.clone(),
            labels: self.labels.clone(),
            degrees: self.degrees.clone(),
            brackets: self.brackets.clone(),
        }
        .into_algebra()
    }
}

/// The characteristic map `x ↦ deg(x)·x` on the negative part.
pub fn characteristic_map(m: &GradedAlgebra) -> RationalMatrix {
    let d: Vec<Rational> = m
        .degrees()
        .iter()
        .map(|&p| Rational::from_integer(p as i64))
        .collect();
    RationalMatrix::diagonal(&d)
}

/// Decomposition of the derivation algebra into the line of the
/// characteristic map and the kernel of `η`.
#[derive(Clone, Debug)]
pub struct GradingSplit {
    /// Coordinates of the characteristic map.
    pub e_coords: Vec<Rational>,
    pub eta_e: Rational,
    /// Basis of `ker η`, as coordinate vectors.
    pub hat_basis: Vec<Vec<Rational>>,
}

impl GradingSplit {
    /// The characteristic map followed by the `ker η` basis.
    pub fn adapted_basis(&self) -> Vec<Vec<Rational>> {
        std::iter::once(self.e_coords.clone())
            .chain(self.hat_basis.iter().cloned())
            .collect()
    }
}

pub fn grading_split(d: &DerivationBasis) -> Result<GradingSplit> {
    let e = characteristic_map(d.algebra());
    let e_coords = d.coordinates(&e).ok_or_else(|| {
        GlaError::Internal("characteristic map is not a conformal derivation".into())
    })?;
    let eta_e = d.eta_of(&e_coords);
    if eta_e.is_zero() {
        return Err(GlaError::EtaVanishesOnE);
    }
    let row = sparse::from_dense(d.etas());
    let hat_basis = kernel_of_rows(d.dim(), std::iter::once(row))
        .iter()
        .map(|v| sparse::to_dense(v, d.dim()))
        .collect();
    Ok(GradingSplit {
        e_coords,
        eta_e,
        hat_basis,
    })
}

/// Checks that every commutator of basis elements lies in the span and in `ker η`.
pub fn commutators_in_eta_kernel(d: &DerivationBasis) -> bool {
    let mats = d.matrices();
    let k = mats.len();
    (0..k).into_par_iter().all(|i| {
        (i + 1..k).all(|j| {
            let c = mats[i].mul(&mats[j]).sub(&mats[j].mul(&mats[i]));
            match d.coordinates(&c) {
                Some(coords) => d.eta_of(&coords).is_zero(),
                None => false,
            }
        })
    })
}
