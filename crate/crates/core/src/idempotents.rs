//! Idempotents: the quadratic system `x_j = Σ_k a_kj x_k²`, exhaustive
//! enumeration, FSEANI scans, g;f-idemelements and scaling to idempotents,
//! minimal idempotents, and sum combinations of orthogonal idempotents.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::algebra::{census_algebra, census_size, Element, EvolutionAlgebra};
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, Scalar, Subspace, Vector};
use crate::ideals::{autoann, is_simple, minimal_ideals, principal};
use crate::limits::{pow_sat, Limits};

/// The system whose solutions are exactly the idempotents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentSystem {
    n: usize,
    coeffs: Matrix,
}

impl IdempotentSystem {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry `(k, j)` is the coefficient of `x_k²` in equation `j`.
    pub fn coeffs(&self) -> &Matrix {
        &self.coeffs
    }

    /// Right-hand sides `Σ_k a_kj x_k²`.
    pub fn evaluate(&self, x: &[Scalar]) -> Vector {
        let f = self.coeffs.field();
        let squares: Vector = x.iter().map(|v| f.mul(v, v)).collect();
        (0..self.n)
            .map(|j| {
                (0..self.n).fold(f.zero(), |acc, k| f.add(&acc, &f.mul(self.coeffs.get(k, j), &squares[k])))
            })
            .collect()
    }

    pub fn is_solution(&self, x: &[Scalar]) -> bool {
        x.len() == self.n && self.evaluate(x) == x
    }

    /// One line per equation, e.g. `x1 = x1^2 + x2^2`.
    pub fn equations(&self) -> Vec<String> {
        (0..self.n)
            .map(|j| {
                let mut terms = Vec::new();
                for k in 0..self.n {
                    let c = self.coeffs.get(k, j);
                    if c.is_zero() {
                        continue;
                    }
                    if c.is_one() {
                        terms.push(format!("x{}^2", k + 1));
                    } else {
                        terms.push(format!("{}*x{}^2", c, k + 1));
                    }
                }
                let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                format!("x{} = {}", j + 1, rhs)
            })
            .collect()
    }
}

impl fmt::Display for IdempotentSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.equations() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

pub fn idempotent_system(a: &EvolutionAlgebra) -> IdempotentSystem {
    IdempotentSystem {
        n: a.dim(),
        coeffs: a.sq().clone(),
    }
}

pub fn is_idempotent(a: &EvolutionAlgebra, x: &[Scalar]) -> Result<bool> {
    Ok(a.product(x, x)? == x)
}

/// All idempotents including 0, sorted. GF(p) only.
pub fn idempotents(a: &EvolutionAlgebra, limits: &Limits) -> Result<Vec<Element>> {
    let all = Subspace::full(a.field(), a.dim()).vectors(false, limits)?;
    let mut out: Vec<Element> = all.filter(|x| a.square(x) == *x).collect();
    out.sort();
    Ok(out)
}

pub fn nonzero_idempotents(a: &EvolutionAlgebra, limits: &Limits) -> Result<Vec<Element>> {
    Ok(idempotents(a, limits)?
        .into_iter()
        .filter(|x| !x.iter().all(Scalar::is_zero))
        .collect())
}

/// Simplicity forces the structure matrix to have full rank.
pub fn simple_implies_full_rank_check(a: &EvolutionAlgebra, limits: &Limits) -> Result<bool> {
    Ok(!is_simple(a, limits)? || a.sq().rank() == a.dim())
}

/// Two equal columns of the structure matrix, or a zero column: the pattern
/// that lets the system trivialize. Full rank rules it out.
pub fn trivialization_pattern(a: &EvolutionAlgebra) -> bool {
    let n = a.dim();
    let cols: Vec<Vector> = (0..n).map(|j| a.sq().column(j)).collect();
    cols.iter().any(|c| c.iter().all(Scalar::is_zero))
        || (0..n).any(|i| (i + 1..n).any(|j| cols[i] == cols[j]))
}

/// Whether the structure matrix gives a nonzero idempotent. GF(p) only.
pub fn is_nnidempassevalg(sq: &Matrix, limits: &Limits) -> Result<bool> {
    let a = EvolutionAlgebra::new(sq.clone())?;
    Ok(!nonzero_idempotents(&a, limits)?.is_empty())
}

/// Result of scanning every structure matrix of one dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FseaniVerdict {
    field: Field,
    n: usize,
    is_fseani: bool,
    counterexample: Option<Matrix>,
    simple_count: u64,
    with_idempotent_count: u64,
}

impl FseaniVerdict {
    fn new(
        field: Field,
        n: usize,
        counterexample: Option<Matrix>,
        simple_count: u64,
        with_idempotent_count: u64,
        limits: &Limits,
    ) -> Result<FseaniVerdict> {
        if let Some(m) = &counterexample {
            let a = EvolutionAlgebra::new(m.clone())?;
            if !is_simple(&a, limits)? || is_nnidempassevalg(m, limits)? {
                return Err(Error::Invariant("FSEANI counterexample failed re-verification".into()));
            }
        }
        Ok(FseaniVerdict {
            field,
            n,
            is_fseani: counterexample.is_none(),
            counterexample,
            simple_count,
            with_idempotent_count,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_fseani(&self) -> bool {
        self.is_fseani
    }

    /// The lexicographically smallest simple structure matrix without a
    /// nonzero idempotent.
    pub fn counterexample(&self) -> Option<&Matrix> {
        self.counterexample.as_ref()
    }

    pub fn simple_count(&self) -> u64 {
        self.simple_count
    }

    /// Simple algebras that do have a nonzero idempotent.
    pub fn with_idempotent_count(&self) -> u64 {
        self.with_idempotent_count
    }
}

#[derive(Default)]
struct Tally {
    simple: u64,
    with_idempotent: u64,
    first_bad: Option<u64>,
}

fn scan_range(field: Field, n: usize, indices: impl Iterator<Item = u64>, limits: &Limits) -> Result<Tally> {
    let mut t = Tally::default();
    for idx in indices {
        let a = census_algebra(field, n, idx);
        if !is_simple(&a, limits)? {
            continue;
        }
        t.simple += 1;
        if nonzero_idempotents(&a, limits)?.is_empty() {
            t.first_bad = Some(t.first_bad.map_or(idx, |b| b.min(idx)));
        } else {
            t.with_idempotent += 1;
        }
    }
    Ok(t)
}

fn fseani_scan_ordered(field: Field, n: usize, reversed: bool, limits: &Limits) -> Result<FseaniVerdict> {
    let total = census_size(field, n, limits)?;
    let workers = std::thread::available_parallelism().map_or(1, |w| w.get()).min(8) as u64;
    let chunk = total.div_ceil(workers.max(1)).max(1);
    let parts: Vec<Result<Tally>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let lo = (w * chunk).min(total);
                let hi = ((w + 1) * chunk).min(total);
                s.spawn(move || {
                    if reversed {
                        scan_range(field, n, (lo..hi).rev(), limits)
                    } else {
                        scan_range(field, n, lo..hi, limits)
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("scan worker")).collect()
    });
    let mut total_tally = Tally::default();
    for part in parts {
        let t = part?;
        total_tally.simple += t.simple;
        total_tally.with_idempotent += t.with_idempotent;
        total_tally.first_bad = match (total_tally.first_bad, t.first_bad) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
    let counterexample = total_tally.first_bad.map(|idx| census_algebra(field, n, idx).sq().clone());
    FseaniVerdict::new(field, n, counterexample, total_tally.simple, total_tally.with_idempotent, limits)
}

/// Checks every simple algebra of dimension `n` over GF(p) for a nonzero idempotent.
pub fn fseani_scan(field: Field, n: usize, limits: &Limits) -> Result<FseaniVerdict> {
    fseani_scan_ordered(field, n, false, limits)
}

/// The same scan walking the census backwards.
pub fn fseani_scan_reversed(field: Field, n: usize, limits: &Limits) -> Result<FseaniVerdict> {
    fseani_scan_ordered(field, n, true, limits)
}

/// The FSEANI verdict alone: stops at the first simple algebra without a
/// nonzero idempotent. Verdicts are cached per field and dimension.
pub fn is_fseani(field: Field, n: usize, limits: &Limits) -> Result<bool> {
    static CACHE: OnceLock<Mutex<HashMap<(Field, usize), bool>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(&v) = cache.lock().expect("cache").get(&(field, n)) {
        return Ok(v);
    }
    let mut verdict = true;
    for idx in 0..census_size(field, n, limits)? {
        let a = census_algebra(field, n, idx);
        if is_simple(&a, limits)? && nonzero_idempotents(&a, limits)?.is_empty() {
            verdict = false;
            break;
        }
    }
    cache.lock().expect("cache").insert((field, n), verdict);
    Ok(verdict)
}

/// A nonzero solution of `x = a y², y = b x²`, which forces `x³ = 1/(a b²)`.
/// Works over any field with `a, b ≠ 0`.
pub fn cross_square_solution(field: Field, a: &Scalar, b: &Scalar) -> Result<Option<(Scalar, Scalar)>> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Precondition("coefficients must be nonzero".into()));
    }
    let denom = field.mul(a, &field.mul(b, b));
    let target = field.inv(&denom)?;
    let Some(x) = field.cbrt(&target) else {
        return Ok(None);
    };
    let y = field.mul(b, &field.mul(&x, &x));
    debug_assert_eq!(field.mul(a, &field.mul(&y, &y)), x);
    Ok(Some((x, y)))
}

/// Nonzero idempotents whose principal ideal is minimal, sorted. GF(p) only.
pub fn minimal_idempotents(a: &EvolutionAlgebra, limits: &Limits) -> Result<Vec<Element>> {
    let minimal = minimal_ideals(a, limits)?;
    Ok(nonzero_idempotents(a, limits)?
        .into_iter()
        .filter(|e| minimal.contains(&principal(a, e)))
        .collect())
}

/// `x ≠ 0` and `id({x})` is a minimal ideal: every nonzero element of it
/// generates it back. GF(p) only.
pub fn is_minimal_element(a: &EvolutionAlgebra, x: &[Scalar], limits: &Limits) -> Result<bool> {
    if x.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: x.len(),
        });
    }
    if x.iter().all(Scalar::is_zero) {
        return Ok(false);
    }
    let i = principal(a, x);
    let reps = i.line_representatives(limits)?;
    Ok(reps.iter().all(|y| principal(a, y) == i))
}

pub fn dim_of_element(a: &EvolutionAlgebra, x: &[Scalar]) -> Result<usize> {
    if x.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: x.len(),
        });
    }
    Ok(principal(a, x).dim())
}

/// Checks the pairing condition on a set of idempotents: each unordered pair
/// multiplies to 0 or to `f·e_k`, and each `k` is hit by exactly one pair.
fn pairing_holds(a: &EvolutionAlgebra, es: &[Element], f: &Scalar) -> bool {
    let field = a.field();
    let scaled: Vec<Vector> = es.iter().map(|e| field.scale_vector(f, e)).collect();
    let mut hits = vec![0usize; es.len()];
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            let p = a.mul(&es[i], &es[j]);
            if p.iter().all(Scalar::is_zero) {
                continue;
            }
            match scaled.iter().position(|s| *s == p) {
                Some(k) => hits[k] += 1,
                None => return false,
            }
        }
    }
    hits.iter().all(|&h| h == 1)
}

/// A set `E` of distinct nonzero idempotents with `x = g Σ E` satisfying the
/// pairing condition (unordered pairs). GF(p) only; `g` and `f` must be nonzero.
pub fn is_gf_idemelement(
    a: &EvolutionAlgebra,
    x: &[Scalar],
    g: &Scalar,
    f: &Scalar,
    limits: &Limits,
) -> Result<Option<Vec<Element>>> {
    if x.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: x.len(),
        });
    }
    if g.is_zero() || f.is_zero() {
        return Err(Error::Precondition("g and f must be nonzero".into()));
    }
    let field = a.field();
    let idem = nonzero_idempotents(a, limits)?;
    limits.check_combinations("idempotent subsets", pow_sat(2, idem.len()))?;
    let target = field.scale_vector(&field.inv(g)?, x);
    let mut chosen: Vec<usize> = Vec::new();
    let mut found = None;
    subsets(&idem, 0, &mut chosen, &mut |set: &[usize]| {
        if set.is_empty() {
            return true;
        }
        let es: Vec<Element> = set.iter().map(|&i| idem[i].clone()).collect();
        let sum = es.iter().fold(field.zero_vector(a.dim()), |acc, e| field.add_vectors(&acc, e));
        if sum == target && pairing_holds(a, &es, f) {
            found = Some(es);
            return false;
        }
        true
    });
    Ok(found)
}

fn subsets<T>(items: &[T], start: usize, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if !visit(chosen) {
        return false;
    }
    for i in start..items.len() {
        chosen.push(i);
        let go_on = subsets(items, i + 1, chosen, visit);
        chosen.pop();
        if !go_on {
            return false;
        }
    }
    true
}

/// When `x² = r x` with `r ≠ 0`, returns `(1/r, x/r)`, the latter verified
/// idempotent by direct product.
pub fn idempotent_scaling(a: &EvolutionAlgebra, x: &[Scalar]) -> Result<Option<(Scalar, Element)>> {
    let field = a.field();
    let sq = a.product(x, x)?;
    if x.iter().all(Scalar::is_zero) {
        return Ok(None);
    }
    let Some(r) = field.proportionality(&sq, x) else {
        return Ok(None);
    };
    if r.is_zero() {
        return Ok(None);
    }
    let lambda = field.inv(&r)?;
    let e = field.scale_vector(&lambda, x);
    if a.square(&e) != e {
        return Err(Error::Invariant("scaled element is not idempotent".into()));
    }
    Ok(Some((lambda, e)))
}

fn check_set(a: &EvolutionAlgebra, set: &[Element]) -> Result<()> {
    for v in set {
        if v.len() != a.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                found: v.len(),
            });
        }
    }
    Ok(())
}

fn multisets(len: usize, size: usize, start: usize, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if chosen.len() == size {
        visit(chosen);
        return;
    }
    for i in start..len {
        chosen.push(i);
        multisets(len, size, i, chosen, visit);
        chosen.pop();
    }
}

fn sorted_unique(mut v: Vec<Element>) -> Vec<Element> {
    v.sort();
    v.dedup();
    v
}

/// `{e_1 + ... + e_n : e_i ∈ E}` (repetition allowed), sorted.
pub fn sumspan(a: &EvolutionAlgebra, set: &[Element], n: usize, limits: &Limits) -> Result<Vec<Element>> {
    check_set(a, set)?;
    limits.check_combinations("sumspan terms", pow_sat(set.len() as u64 + 1, n))?;
    let field = a.field();
    let mut out = Vec::new();
    multisets(set.len(), n, 0, &mut Vec::new(), &mut |idx| {
        out.push(idx.iter().fold(field.zero_vector(a.dim()), |acc, &i| field.add_vectors(&acc, &set[i])));
    });
    Ok(sorted_unique(out))
}

/// Sums of `n` elements of `E` in which every member of the family is hit
/// at most once, sorted.
pub fn sumspan_family(
    a: &EvolutionAlgebra,
    family: &[Vec<Element>],
    set: &[Element],
    n: usize,
    limits: &Limits,
) -> Result<Vec<Element>> {
    check_set(a, set)?;
    for f in family {
        check_set(a, f)?;
    }
    limits.check_combinations("sumspan terms", pow_sat(set.len() as u64 + 1, n))?;
    let field = a.field();
    let mut out = Vec::new();
    multisets(set.len(), n, 0, &mut Vec::new(), &mut |idx| {
        let ok = family
            .iter()
            .all(|fam| idx.iter().filter(|&&i| fam.contains(&set[i])).count() <= 1);
        if ok {
            out.push(idx.iter().fold(field.zero_vector(a.dim()), |acc, &i| field.add_vectors(&acc, &set[i])));
        }
    });
    Ok(sorted_unique(out))
}

/// `(I ∩ sumspan(autoann(𝓔))) \ {0}` for a family of subsets of `B`. Over
/// GF(p), sums with repetition are exactly the combinations with
/// prime-field coefficients.
pub fn snzsc(
    a: &EvolutionAlgebra,
    i: &Subspace,
    b: &[Element],
    family: &[Vec<Element>],
    limits: &Limits,
) -> Result<Vec<Element>> {
    check_family(a, b, family)?;
    let field = a.field();
    let p = field.order()?;
    let base = autoann(a, family)?;
    limits.check_combinations("sum combinations", pow_sat(p, base.len()))?;
    let elements = field.elements()?;
    let mut out = Vec::new();
    let total = pow_sat(p, base.len()) as u64;
    for idx in 0..total {
        let mut rest = idx;
        let mut v = field.zero_vector(a.dim());
        for e in &base {
            let c = &elements[(rest % p) as usize];
            rest /= p;
            field.axpy(&mut v, c, e);
        }
        if !v.iter().all(Scalar::is_zero) && i.contains(&v)? {
            out.push(v);
        }
    }
    Ok(sorted_unique(out))
}

fn check_family(a: &EvolutionAlgebra, b: &[Element], family: &[Vec<Element>]) -> Result<()> {
    check_set(a, b)?;
    for set in family {
        check_set(a, set)?;
        if set.is_empty() {
            return Err(Error::Precondition("family members must be nonempty".into()));
        }
        if set.iter().any(|x| !b.contains(x)) {
            return Err(Error::Precondition("family members must be subsets of B".into()));
        }
    }
    Ok(())
}

/// Status of the sum-combination construction in a minimal ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Theorem75Status {
    /// The set is empty: `I` does not admit a sum combination for this family.
    DoesNotAdmit,
    /// Every element is an idempotent generating `I`.
    Holds(Vec<Element>),
    /// Some element is not an idempotent generating `I`.
    Fails(Element),
}

/// `(I ∩ sumspan(𝓔, autoann(𝓔))) \ {0}`, sorted.
pub fn theorem75_set(
    a: &EvolutionAlgebra,
    i: &Subspace,
    family: &[Vec<Element>],
    limits: &Limits,
) -> Result<Vec<Element>> {
    let base = autoann(a, family)?;
    let mut out = Vec::new();
    for n in 1..=base.len() {
        for v in sumspan_family(a, family, &base, n, limits)? {
            if !v.iter().all(Scalar::is_zero) && i.contains(&v)? {
                out.push(v);
            }
        }
    }
    Ok(sorted_unique(out))
}

/// Verifies the construction for a minimal ideal `I` and a family of
/// nonempty sets of nonzero idempotents. GF(p) only.
pub fn theorem75_status(
    a: &EvolutionAlgebra,
    i: &Subspace,
    family: &[Vec<Element>],
    limits: &Limits,
) -> Result<Theorem75Status> {
    if !minimal_ideals(a, limits)?.contains(i) {
        return Err(Error::Precondition("I must be a minimal ideal".into()));
    }
    let idem = nonzero_idempotents(a, limits)?;
    check_family(a, &idem, family)?;
    let set = theorem75_set(a, i, family, limits)?;
    if set.is_empty() {
        return Ok(Theorem75Status::DoesNotAdmit);
    }
    for e in &set {
        if a.square(e) != *e || principal(a, e) != *i {
            return Ok(Theorem75Status::Fails(e.clone()));
        }
    }
    Ok(Theorem75Status::Holds(set))
}

/// True unless some element of the set fails (vacuously true when empty).
pub fn theorem75_check(a: &EvolutionAlgebra, i: &Subspace, family: &[Vec<Element>], limits: &Limits) -> Result<bool> {
    Ok(!matches!(theorem75_status(a, i, family, limits)?, Theorem75Status::Fails(_)))
}
