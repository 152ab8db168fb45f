//! Star-shaped plumbing graphs bounding `Σ(a₁,…,aₙ)`, their intersection
//! forms, and the plumbing formula `μ̄ = (sign P − w·w)/8`.
//!
//! Two independent code paths are provided. The dense functions
//! ([`signature`], [`wu_class`], [`SymmetricMatrix::determinant`]) work on
//! any symmetric integer matrix. The [`PlumbingGraph`] methods exploit the
//! tree structure and eliminate leaves one at a time, which keeps the cost
//! linear in the number of vertices; long arms make the dense path
//! impractical for large multiplicities.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arithmetic::Rational;
use crate::seifert::SeifertData;
use crate::{Error, Result};

/// Negative-regular continued fraction `num/den = c₁ − 1/(c₂ − 1/(…))` with
/// every `cⱼ ≥ 2`, for `0 < den < num`.
pub fn hirzebruch_jung(num: u64, den: u64) -> Vec<u64> {
    let (mut a, mut b) = (num as u128, den as u128);
    let mut out = Vec::new();
    while b > 0 {
        let c = a.div_ceil(b);
        out.push(c as u64);
        (a, b) = (b, c * b - a);
    }
    out
}

/// Weighted tree; the vertex weights are the self-intersections of the
/// plumbed spheres and every edge contributes `+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlumbingGraph {
    weights: Vec<i64>,
    edges: Vec<(usize, usize)>,
}

/// Characteristic vector with `0/1` coordinates in the vertex basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WuClass {
    coordinates: Vec<u8>,
}

impl WuClass {
    pub fn coordinates(&self) -> &[u8] {
        &self.coordinates
    }

    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(|&c| c == 0)
    }
}

impl PlumbingGraph {
    /// Builds a graph, checking that the edges form a tree on the vertices.
    pub fn new(weights: Vec<i64>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = weights.len();
        if n == 0 {
            return Err(Error::Domain("plumbing graph needs a vertex"));
        }
        if edges.len() + 1 != n {
            return Err(Error::Domain("plumbing graph must be a tree"));
        }
        // Union-find: any cycle or out-of-range endpoint is rejected.
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for &(u, v) in &edges {
            if u >= n || v >= n || u == v {
                return Err(Error::Domain("edge endpoint out of range"));
            }
            let (ru, rv) = (root(&mut parent, u), root(&mut parent, v));
            if ru == rv {
                return Err(Error::Domain("plumbing graph must be a tree"));
            }
            parent[ru] = rv;
        }
        Ok(PlumbingGraph { weights, edges })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// `x·y` under the intersection form.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        let diag: i64 = self
            .weights
            .iter()
            .zip(x.iter().zip(y))
            .map(|(w, (a, b))| w * a * b)
            .sum();
        let off: i64 = self
            .edges
            .iter()
            .map(|&(u, v)| x[u] * y[v] + x[v] * y[u])
            .sum();
        diag + off
    }

    /// `w·w` for a Wu class of this graph.
    pub fn square(&self, w: &WuClass) -> i64 {
        let x: Vec<i64> = w.coordinates.iter().map(|&c| c as i64).collect();
        self.pairing(&x, &x)
    }

    /// Checks `w·eᵥ ≡ eᵥ·eᵥ (mod 2)` for every basis vector `eᵥ`.
    pub fn is_characteristic(&self, w: &WuClass) -> bool {
        if w.coordinates.len() != self.len() {
            return false;
        }
        let mut dot: Vec<i64> = self
            .weights
            .iter()
            .zip(&w.coordinates)
            .map(|(wt, &c)| wt * c as i64)
            .collect();
        for &(u, v) in &self.edges {
            dot[u] += w.coordinates[v] as i64;
            dot[v] += w.coordinates[u] as i64;
        }
        dot.iter()
            .zip(&self.weights)
            .all(|(d, wt)| (d - wt).rem_euclid(2) == 0)
    }

    /// Signature and determinant by leaf elimination.
    ///
    /// A leaf with non-zero current weight `c` is a pivot: it contributes
    /// `sign(c)` and subtracts `1/c` from its neighbour. A zero-weight leaf
    /// pairs with its neighbour into a hyperbolic block (signature 0,
    /// determinant −1) and leaves the rest of the form untouched.
    pub fn eliminate(&self) -> FormSummary {
        let n = self.len();
        let adj = self.adjacency();
        let mut weight: Vec<Rational> = self
            .weights
            .iter()
            .map(|&w| Rational::from_integer(w.into()))
            .collect();
        let mut alive = vec![true; n];
        let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
        let mut summary = FormSummary {
            positive: 0,
            negative: 0,
            nullity: 0,
            determinant: Rational::one(),
        };

        while let Some(v) = queue.pop_front() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            let neighbour = adj[v].iter().copied().find(|&u| alive[u]);
            if !weight[v].is_zero() {
                if weight[v].is_positive() {
                    summary.positive += 1;
                } else {
                    summary.negative += 1;
                }
                summary.determinant *= &weight[v];
                if let Some(u) = neighbour {
                    let correction = weight[v].recip();
                    weight[u] -= correction;
                    degree[u] -= 1;
                    if degree[u] <= 1 {
                        queue.push_back(u);
                    }
                }
            } else if let Some(u) = neighbour {
                summary.positive += 1;
                summary.negative += 1;
                summary.determinant = -summary.determinant;
                alive[u] = false;
                for &t in &adj[u] {
                    if alive[t] {
                        degree[t] -= 1;
                        if degree[t] <= 1 {
                            queue.push_back(t);
                        }
                    }
                }
            } else {
                summary.nullity += 1;
                summary.determinant = Rational::zero();
            }
        }
        summary
    }

    pub fn signature(&self) -> i64 {
        self.eliminate().signature()
    }

    pub fn determinant(&self) -> BigInt {
        self.eliminate().determinant.to_integer()
    }

    /// Solves `Q·w ≡ diag(Q) (mod 2)` by leaf elimination over GF(2).
    pub fn wu_class(&self) -> Result<WuClass> {
        enum Step {
            /// `w[v] = c + w[u]`
            Follow { v: usize, u: usize, c: u8 },
            /// `w[v] = c`
            Fixed { v: usize, c: u8 },
            /// `w[v] = c + Σ w[t]`
            Sum { v: usize, c: u8, terms: Vec<usize> },
        }

        let n = self.len();
        let adj = self.adjacency();
        let mut diag: Vec<u8> = self.weights.iter().map(|w| w.rem_euclid(2) as u8).collect();
        let mut rhs = diag.clone();
        let mut alive = vec![true; n];
        let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
        let mut steps = Vec::with_capacity(n);
        let singular = || Error::violation("Wu class system is singular over GF(2)");

        while let Some(v) = queue.pop_front() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            match (adj[v].iter().copied().find(|&u| alive[u]), diag[v]) {
                (Some(u), 1) => {
                    // Row v: w[v] + w[u] = rhs[v]; substitute into row u.
                    diag[u] ^= 1;
                    rhs[u] ^= rhs[v];
                    steps.push(Step::Follow { v, u, c: rhs[v] });
                    degree[u] -= 1;
                    if degree[u] <= 1 {
                        queue.push_back(u);
                    }
                }
                (Some(u), _) => {
                    // Row v pins w[u]; row u then determines w[v].
                    let wu = rhs[v];
                    alive[u] = false;
                    let mut terms = Vec::new();
                    for &t in &adj[u] {
                        if alive[t] {
                            rhs[t] ^= wu;
                            terms.push(t);
                            degree[t] -= 1;
                            if degree[t] <= 1 {
                                queue.push_back(t);
                            }
                        }
                    }
                    steps.push(Step::Fixed { v: u, c: wu });
                    steps.push(Step::Sum {
                        v,
                        c: rhs[u] ^ (diag[u] & wu),
                        terms,
                    });
                }
                (None, 1) => steps.push(Step::Fixed { v, c: rhs[v] }),
                (None, _) => return Err(singular()),
            }
        }

        let mut w = vec![0u8; n];
        for step in steps.iter().rev() {
            match step {
                Step::Follow { v, u, c } => w[*v] = c ^ w[*u],
                Step::Fixed { v, c } => w[*v] = *c,
                Step::Sum { v, c, terms } => {
                    w[*v] = terms.iter().fold(*c, |acc, &t| acc ^ w[t]);
                }
            }
        }
        let class = WuClass { coordinates: w };
        if !self.is_characteristic(&class) {
            return Err(singular());
        }
        Ok(class)
    }
}

/// Inertia and determinant of a symmetric form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSummary {
    pub positive: usize,
    pub negative: usize,
    pub nullity: usize,
    pub determinant: Rational,
}

impl FormSummary {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Dense symmetric integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl SymmetricMatrix {
    pub fn new(size: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::Domain("matrix entry count does not match size"));
        }
        let m = SymmetricMatrix { size, entries };
        for i in 0..size {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::Domain("matrix is not symmetric"));
                }
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.size;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(self.get(i, j))).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}

/// Diagonal = vertex weights, `1` for each edge.
pub fn intersection_matrix(graph: &PlumbingGraph) -> SymmetricMatrix {
    let n = graph.len();
    let mut entries = vec![0i64; n * n];
    for (i, &w) in graph.weights.iter().enumerate() {
        entries[i * n + i] = w;
    }
    for &(u, v) in &graph.edges {
        entries[u * n + v] += 1;
        entries[v * n + u] += 1;
    }
    SymmetricMatrix { size: n, entries }
}

/// Exact signature by congruence diagonalization over the rationals.
///
/// When every remaining diagonal entry vanishes, a row/column `j` with
/// `aᵢⱼ ≠ 0` is added to row/column `i`, which makes the new diagonal entry
/// `2aᵢⱼ` non-zero.
pub fn signature(matrix: &SymmetricMatrix) -> i64 {
    let n = matrix.size;
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rational::from_integer(matrix.get(i, j).into()))
                .collect()
        })
        .collect();
    let mut sig = 0i64;
    for k in 0..n {
        let pivot = match (k..n).find(|&i| !a[i][i].is_zero()) {
            Some(i) => i,
            None => {
                let Some((i, j)) = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero())
                else {
                    break;
                };
                let row_j = a[j].clone();
                for (x, y) in a[i].iter_mut().zip(row_j) {
                    *x += y;
                }
                for row in a.iter_mut() {
                    let t = row[j].clone();
                    row[i] += t;
                }
                i
            }
        };
        a.swap(pivot, k);
        for row in a.iter_mut() {
            row.swap(pivot, k);
        }
        let p = a[k][k].clone();
        sig += if p.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &p;
            let (head, tail) = a.split_at_mut(i);
            for (x, y) in tail[0][k..].iter_mut().zip(&head[k][k..]) {
                *x -= &f * y;
            }
        }
    }
    sig
}

/// Unique `0/1` solution of `Q·w ≡ diag(Q) (mod 2)` by dense GF(2)
/// elimination.
pub fn wu_class(matrix: &SymmetricMatrix) -> Result<WuClass> {
    let n = matrix.size;
    let words = (n + 1).div_ceil(64);
    let bit = |row: &[u64], c: usize| (row[c / 64] >> (c % 64)) & 1;
    let mut rows: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut row = vec![0u64; words];
            for j in 0..n {
                if matrix.get(i, j).rem_euclid(2) == 1 {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            if matrix.get(i, i).rem_euclid(2) == 1 {
                row[n / 64] |= 1 << (n % 64);
            }
            row
        })
        .collect();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| bit(&rows[r], col) == 1) else {
            return Err(Error::violation(format!(
                "Wu class system is singular over GF(2) at column {col}"
            )));
        };
        rows.swap(p, col);
        let pivot = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != col && bit(row, col) == 1 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
    }
    Ok(WuClass {
        coordinates: rows.iter().map(|row| bit(row, n) as u8).collect(),
    })
}

/// Star-shaped plumbing: a central vertex of weight `−e₀` and, for each
/// fiber, a chain with weights `−c₁, −c₂, …` from the expansion of `aᵢ/bᵢ`.
/// The resulting form is negative definite with determinant `±1`.
pub fn build_plumbing(data: &SeifertData) -> PlumbingGraph {
    let central = -(data.offset() as i64);
    let mut weights = vec![central];
    let mut edges = Vec::new();
    for (&a, &b) in data.multiplicities().iter().zip(data.residues()) {
        let mut prev = 0;
        for c in hirzebruch_jung(a, b) {
            weights.push(-(c as i64));
            let v = weights.len() - 1;
            edges.push((prev, v));
            prev = v;
        }
    }
    PlumbingGraph { weights, edges }
}

/// Everything the plumbing route computes for one `Σ(a₁,…,aₙ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingInvariants {
    pub vertices: usize,
    pub signature: i64,
    pub determinant: BigInt,
    pub wu_square: i64,
    pub mu_bar: i64,
}

pub fn analyze_plumbing(data: &SeifertData) -> Result<PlumbingInvariants> {
    let graph = build_plumbing(data);
    let form = graph.eliminate();
    if !form.determinant.is_integer() || !form.determinant.abs().is_one() {
        return Err(Error::violation(format!(
            "plumbing determinant {} is not ±1",
            form.determinant
        )));
    }
    let wu = graph.wu_class()?;
    let wu_square = graph.square(&wu);
    let signature = form.signature();
    let numerator = signature - wu_square;
    if numerator.rem_euclid(8) != 0 {
        return Err(Error::violation(format!(
            "sign P − w·w = {numerator} is not divisible by 8"
        )));
    }
    Ok(PlumbingInvariants {
        vertices: graph.len(),
        signature,
        determinant: form.determinant.to_integer(),
        wu_square,
        mu_bar: numerator / 8,
    })
}

/// `μ̄ = (sign P − w·w)/8`.
pub fn mu_bar_plumbing(data: &SeifertData) -> Result<i64> {
    analyze_plumbing(data).map(|p| p.mu_bar)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(a: &[u64]) -> SeifertData {
        SeifertData::normalize(a).unwrap()
    }

    #[test]
    fn hj_expansions() {
        assert_eq!(hirzebruch_jung(5, 4), vec![2, 2, 2, 2]);
        assert_eq!(hirzebruch_jung(7, 1), vec![7]);
        assert_eq!(hirzebruch_jung(7, 3), vec![3, 2, 2]);
        assert_eq!(hirzebruch_jung(13, 5), vec![3, 3, 2]);
    }

    #[test]
    fn e8_from_235() {
        let g = build_plumbing(&data(&[2, 3, 5]));
        assert_eq!(g.len(), 8);
        assert!(g.weights().iter().all(|&w| w == -2));
        let m = intersection_matrix(&g);
        assert_eq!(m.determinant(), BigInt::one());
        assert_eq!(signature(&m), -8);
        assert_eq!(g.signature(), -8);
        assert!(wu_class(&m).unwrap().is_zero());
        assert!(g.wu_class().unwrap().is_zero());
        assert_eq!(mu_bar_plumbing(&data(&[2, 3, 5])).unwrap(), -1);
    }

    #[test]
    fn graph_for_237() {
        let g = build_plumbing(&data(&[2, 3, 7]));
        assert_eq!(g.weights(), &[-1, -2, -3, -7]);
        assert_eq!(g.determinant().abs(), BigInt::one());
        let w = g.wu_class().unwrap();
        assert_eq!(w.coordinates(), &[0, 1, 1, 1]);
        assert_eq!(wu_class(&intersection_matrix(&g)).unwrap(), w);
        assert!(g.is_characteristic(&w));
        assert_eq!(g.square(&w), -12);
        assert_eq!(mu_bar_plumbing(&data(&[2, 3, 7])).unwrap(), 1);
        assert_eq!(build_plumbing(&data(&[2, 3, 11])).determinant().abs(), BigInt::one());
    }

    #[test]
    fn small_forms() {
        let single = PlumbingGraph::new(vec![-1], vec![]).unwrap();
        let m = intersection_matrix(&single);
        assert_eq!(m.get(0, 0), -1);
        assert_eq!(signature(&m), -1);
        assert_eq!(single.signature(), -1);
        assert_eq!(wu_class(&m).unwrap().coordinates(), &[1]);
        assert_eq!(single.wu_class().unwrap().coordinates(), &[1]);

        let hyperbolic = PlumbingGraph::new(vec![0, 0], vec![(0, 1)]).unwrap();
        let m = intersection_matrix(&hyperbolic);
        assert_eq!(m, SymmetricMatrix::new(2, vec![0, 1, 1, 0]).unwrap());
        assert_eq!(signature(&m), 0);
        assert_eq!(hyperbolic.signature(), 0);
        assert_eq!(hyperbolic.determinant(), BigInt::from(-1));
        assert_eq!(m.determinant(), BigInt::from(-1));
        assert!(hyperbolic.wu_class().unwrap().is_zero());
    }

    #[test]
    fn singular_systems_are_rejected() {
        let even = PlumbingGraph::new(vec![2], vec![]).unwrap();
        assert!(matches!(even.wu_class(), Err(Error::InvariantViolation(_))));
        assert!(wu_class(&intersection_matrix(&even)).is_err());
        // [[0,1,0],[1,0,1],[0,1,0]] is singular.
        let path = PlumbingGraph::new(vec![0, 0, 0], vec![(0, 1), (1, 2)]).unwrap();
        assert!(path.wu_class().is_err());
        assert_eq!(path.determinant(), BigInt::zero());
        assert_eq!(path.signature(), signature(&intersection_matrix(&path)));
    }

    #[test]
    fn graph_validation() {
        assert!(PlumbingGraph::new(vec![-2, -2], vec![]).is_err());
        assert!(PlumbingGraph::new(vec![-2, -2, -2], vec![(0, 1), (1, 0)]).is_err());
        assert!(PlumbingGraph::new(vec![-2, -2], vec![(0, 2)]).is_err());
        assert!(SymmetricMatrix::new(2, vec![0, 1, 2, 0]).is_err());
    }

    #[test]
    fn tree_and_dense_routes_agree_on_mixed_trees() {
        // Trees with zero, positive and negative weights, including ones that
        // need hyperbolic blocks during elimination.
        type Case = (Vec<i64>, Vec<(usize, usize)>);
        let cases: Vec<Case> = vec![
            (vec![0, 3, 0, -1], vec![(0, 1), (1, 2), (1, 3)]),
            (vec![1, 0, 0, 2, -3], vec![(0, 1), (1, 2), (2, 3), (2, 4)]),
            (vec![0, 0, 0, 0, 0, 0], vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]),
            (vec![-1, 4, 0, 0, 1, -2, 0], vec![(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)]),
            (vec![5, -5, 1, -1], vec![(0, 1), (1, 2), (2, 3)]),
        ];
        for (w, e) in cases {
            let g = PlumbingGraph::new(w, e).unwrap();
            let m = intersection_matrix(&g);
            assert_eq!(g.signature(), signature(&m), "{g:?}");
            assert_eq!(g.determinant(), m.determinant(), "{g:?}");
            match (g.wu_class(), wu_class(&m)) {
                (Ok(a), Ok(b)) => assert_eq!(a, b),
                (Err(_), Err(_)) => {}
                (a, b) => panic!("routes disagree on {g:?}: {a:?} vs {b:?}"),
            }
        }
    }

    #[test]
    fn seifert_plumbings_agree_with_dense_route() {
        let tuples: [&[u64]; 8] = [
            &[2, 3, 5],
            &[2, 3, 7],
            &[2, 3, 11],
            &[2, 5, 7],
            &[3, 4, 5],
            &[3, 5, 7],
            &[2, 3, 5, 7],
            &[2, 3, 5, 7, 11],
        ];
        for t in tuples {
            let g = build_plumbing(&data(t));
            let m = intersection_matrix(&g);
            assert_eq!(m.determinant().abs(), BigInt::one(), "{t:?}");
            assert_eq!(g.signature(), signature(&m));
            assert_eq!(g.signature(), -(g.len() as i64), "negative definite");
            let w = wu_class(&m).unwrap();
            assert_eq!(g.wu_class().unwrap(), w);
            assert_eq!((g.signature() - g.square(&w)).rem_euclid(8), 0);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn tree() -> impl Strategy<Value = PlumbingGraph> {
            (1usize..12).prop_flat_map(|n| {
                (
                    proptest::collection::vec(-4i64..=4, n),
                    proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
                )
                    .prop_map(|(weights, parents)| {
                        let edges = parents
                            .iter()
                            .enumerate()
                            .map(|(i, ix)| (ix.index(i + 1), i + 1))
                            .collect();
                        PlumbingGraph::new(weights, edges).unwrap()
                    })
            })
        }

        proptest! {
            #[test]
            fn tree_elimination_matches_dense(g in tree()) {
                let m = intersection_matrix(&g);
                let form = g.eliminate();
                prop_assert_eq!(form.signature(), signature(&m));
                prop_assert_eq!(form.determinant, Rational::from_integer(m.determinant()));
                prop_assert_eq!(form.positive + form.negative + form.nullity, g.len());
                match (g.wu_class(), wu_class(&m)) {
                    (Ok(a), Ok(b)) => {
                        prop_assert!(g.is_characteristic(&a));
                        prop_assert_eq!(a, b);
                    }
                    (Err(_), Err(_)) => {}
                    (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
                }
            }
        }
    }
}
