use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::limits::{pow_sat, Limits};

use super::field::{format_vector, Field, Scalar, Vector};
use super::matrix::Matrix;

/// A linear subspace of `K^n`, stored as its canonical RREF basis (no zero rows).
///
/// Equal subspaces have identical representations, so `==` and hashing are
/// structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: (0..ambient).map(|i| field.unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn span(field: Field, ambient: usize, vectors: &[Vector]) -> Result<Subspace> {
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
        }
        Ok(Self::span_unchecked(field, ambient, vectors.to_vec()))
    }

    pub(crate) fn span_unchecked(field: Field, ambient: usize, vectors: Vec<Vector>) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, ambient, vectors).expect("checked lengths");
        let (r, pivots) = m.rref_with_pivots();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    /// Span of the standard basis vectors with the given (0-based) indices.
    pub fn coordinate(field: Field, ambient: usize, indices: &[usize]) -> Subspace {
        let vs: Vec<Vector> = indices.iter().map(|&i| field.unit_vector(ambient, i)).collect();
        Self::span_unchecked(field, ambient, vs)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// The canonical RREF basis.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, self.basis.clone()).expect("shape")
    }

    fn check_same(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// `v` minus its projection along the pivot columns; zero iff `v` is inside.
    pub fn residual(&self, v: &[Scalar]) -> Vector {
        let f = self.field;
        let mut r = v.to_vec();
        for (row, &c) in self.basis.iter().zip(&self.pivots) {
            if !r[c].is_zero() {
                let k = f.neg(&r[c]);
                f.axpy(&mut r, &k, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        self.check_vector(v)?;
        Ok(self.contains_unchecked(v))
    }

    pub(crate) fn contains_unchecked(&self, v: &[Scalar]) -> bool {
        self.residual(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if v.len() != self.ambient || !self.contains_unchecked(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c].clone()).collect())
    }

    /// The vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vector {
        let f = self.field;
        let mut out = f.zero_vector(self.ambient);
        for (c, row) in coeffs.iter().zip(&self.basis) {
            f.axpy(&mut out, c, row);
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        Ok(self.sum_unchecked(other))
    }

    pub(crate) fn sum_unchecked(&self, other: &Subspace) -> Subspace {
        if other.is_zero() || self.is_full() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Self::span_unchecked(self.field, self.ambient, vs)
    }

    /// Adds the given vectors to the span.
    pub fn extend(&self, vectors: &[Vector]) -> Result<Subspace> {
        for v in vectors {
            self.check_vector(v)?;
        }
        let mut vs = self.basis.clone();
        vs.extend(vectors.iter().cloned());
        Ok(Self::span_unchecked(self.field, self.ambient, vs))
    }

    /// Intersection by the Zassenhaus block construction.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        Ok(self.intersect_unchecked(other))
    }

    pub(crate) fn intersect_unchecked(&self, other: &Subspace) -> Subspace {
        let f = self.field;
        let n = self.ambient;
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(f, n);
        }
        if self.is_subspace_of_unchecked(other) {
            return self.clone();
        }
        if other.is_subspace_of_unchecked(self) {
            return other.clone();
        }
        let mut rows = Vec::new();
        for u in &self.basis {
            let mut r = u.clone();
            r.extend(u.iter().cloned());
            rows.push(r);
        }
        for v in &other.basis {
            let mut r = v.clone();
            r.extend(f.zero_vector(n));
            rows.push(r);
        }
        let m = Matrix::from_rows(f, 2 * n, rows).expect("shape").rref();
        let inside: Vec<Vector> = (0..m.rows())
            .map(|i| m.row(i))
            .filter(|r| r[..n].iter().all(Scalar::is_zero) && r[n..].iter().any(|x| !x.is_zero()))
            .map(|r| r[n..].to_vec())
            .collect();
        Self::span_unchecked(f, n, inside)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.is_subspace_of_unchecked(other))
    }

    pub(crate) fn is_subspace_of_unchecked(&self, other: &Subspace) -> bool {
        self.dim() <= other.dim() && self.basis.iter().all(|v| other.contains_unchecked(v))
    }

    /// Number of vectors `enumerate_vectors` would yield.
    pub fn vector_count(&self, up_to_scalar: bool) -> Result<u128> {
        let p = self.field.order()?;
        let total = pow_sat(p, self.dim());
        Ok(if up_to_scalar {
            1 + (total - 1) / (p as u128 - 1)
        } else {
            total
        })
    }

    /// All vectors of the subspace, or zero plus one representative per line
    /// (leading coordinate 1) when `up_to_scalar`.
    pub fn vectors(&self, up_to_scalar: bool, limits: &Limits) -> Result<VectorIter> {
        let needed = self.vector_count(up_to_scalar)?;
        limits.check_vectors("subspace vector enumeration", needed)?;
        Ok(VectorIter::new(self.clone(), up_to_scalar))
    }

    /// Nonzero representatives of the lines, sorted lexicographically.
    pub fn line_representatives(&self, limits: &Limits) -> Result<Vec<Vector>> {
        let mut reps: Vec<Vector> = self
            .vectors(true, limits)?
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        reps.sort();
        Ok(reps)
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient, self.dim(), &self.basis).cmp(&(other.ambient, other.dim(), &other.basis))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.basis.iter().map(|v| format_vector(v)).collect();
        write!(f, "span{{{}}}", parts.join(", "))
    }
}

/// Odometer over coefficient tuples of a subspace basis.
#[derive(Debug)]
pub struct VectorIter {
    space: Subspace,
    elements: Vec<Scalar>,
    coeffs: Vec<usize>,
    up_to_scalar: bool,
    done: bool,
}

impl VectorIter {
    fn new(space: Subspace, up_to_scalar: bool) -> VectorIter {
        let elements = space.field.elements().expect("prime field checked");
        let d = space.dim();
        VectorIter {
            space,
            elements,
            coeffs: vec![0; d],
            up_to_scalar,
            done: false,
        }
    }

    fn advance(&mut self) {
        let p = self.elements.len();
        for k in (0..self.coeffs.len()).rev() {
            self.coeffs[k] += 1;
            if self.coeffs[k] < p {
                return;
            }
            self.coeffs[k] = 0;
        }
        self.done = true;
    }

    fn is_normalized(&self) -> bool {
        match self.coeffs.iter().find(|&&c| c != 0) {
            None => true,
            Some(&c) => c == 1,
        }
    }
}

impl Iterator for VectorIter {
    type Item = Vector;

    fn next(&mut self) -> Option<Vector> {
        while !self.done {
            let keep = !self.up_to_scalar || self.is_normalized();
            let v = if keep {
                let cs: Vec<Scalar> = self.coeffs.iter().map(|&c| self.elements[c].clone()).collect();
                Some(self.space.combine(&cs))
            } else {
                None
            };
            self.advance();
            if v.is_some() {
                return v;
            }
        }
        None
    }
}

/// All vectors of `K^n` (or line representatives plus zero).
pub fn enumerate_vectors(
    field: Field,
    n: usize,
    up_to_scalar: bool,
    limits: &Limits,
) -> Result<VectorIter> {
    Subspace::full(field, n).vectors(up_to_scalar, limits)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn free_slots(n: usize, pivots: &[usize]) -> Vec<(usize, usize)> {
    let mut slots = Vec::new();
    for (r, &pc) in pivots.iter().enumerate() {
        for c in pc + 1..n {
            if !pivots.contains(&c) {
                slots.push((r, c));
            }
        }
    }
    slots
}

/// Number of subspaces of `GF(p)^n` (sum of Gaussian binomials).
pub fn subspace_count(field: Field, n: usize) -> Result<u128> {
    let p = field.order()?;
    let mut total: u128 = 0;
    for k in 0..=n {
        for piv in combinations(n, k) {
            total = total.saturating_add(pow_sat(p, free_slots(n, &piv).len()));
        }
    }
    Ok(total)
}

/// Every subspace of `GF(p)^n`, sorted by dimension then basis.
pub fn enumerate_subspaces(field: Field, n: usize, limits: &Limits) -> Result<Vec<Subspace>> {
    let p = field.order()? as usize;
    limits.check_subspaces("all-subspace enumeration", subspace_count(field, n)?)?;
    let elements = field.elements()?;
    let mut out = Vec::new();
    for k in 0..=n {
        for piv in combinations(n, k) {
            let slots = free_slots(n, &piv);
            let count = pow_sat(p as u64, slots.len()) as usize;
            for idx in 0..count {
                let mut basis: Vec<Vector> = piv.iter().map(|&c| field.unit_vector(n, c)).collect();
                let mut rest = idx;
                for &(r, c) in slots.iter().rev() {
                    basis[r][c] = elements[rest % p].clone();
                    rest /= p;
                }
                out.push(Subspace {
                    field,
                    ambient: n,
                    basis,
                    pivots: piv.clone(),
                });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Serializes as the list of canonical basis vectors.
impl serde::Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.basis.serialize(s)
    }
}
