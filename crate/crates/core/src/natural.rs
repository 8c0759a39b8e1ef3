//! Natural bases: detection in subspaces, extension to the whole algebra,
//! enumeration up to permutation and scaling, natural elements, uniqueness
//! criteria, separation, bipartite bases, ramification, and the incidence
//! between natural bases and idempotents.

use serde::{Deserialize, Serialize};

use crate::algebra::{Element, EvolutionAlgebra};
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, Scalar, Subspace, Vector};
use crate::ideals::{close_ideal, is_ideal_unchecked, is_subalgebra_unchecked, orthogonal_in, principal};
use crate::idempotents::nonzero_idempotents;
use crate::limits::Limits;

/// Three-valued answer: over the rationals some questions are only semi-decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    Undecided,
}

impl Decision {
    pub fn from_bool(b: bool) -> Decision {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Decision::Yes
    }

    /// `Some(bool)` when decided.
    pub fn known(self) -> Option<bool> {
        match self {
            Decision::Yes => Some(true),
            Decision::No => Some(false),
            Decision::Undecided => None,
        }
    }

    fn and(self, other: Decision) -> Decision {
        match (self, other) {
            (Decision::No, _) | (_, Decision::No) => Decision::No,
            (Decision::Yes, Decision::Yes) => Decision::Yes,
            _ => Decision::Undecided,
        }
    }
}

/// Outcome of a search that is complete over GF(p) but heuristic over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    Absent,
    Undecided,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn decision(&self) -> Decision {
        match self {
            Search::Found(_) => Decision::Yes,
            Search::Absent => Decision::No,
            Search::Undecided => Decision::Undecided,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scope {
    Subspace(Subspace),
    Algebra,
}

/// A natural basis, checked on construction: independent, spanning its scope,
/// pairwise products zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalBasisWitness {
    vectors: Vec<Element>,
    scope: Scope,
}

impl NaturalBasisWitness {
    pub fn new(a: &EvolutionAlgebra, vectors: Vec<Element>, scope: Scope) -> Result<NaturalBasisWitness> {
        let f = a.field();
        let n = a.dim();
        let span = Subspace::span(f, n, &vectors)?;
        if span.dim() != vectors.len() {
            return Err(Error::Precondition("natural basis vectors are dependent".into()));
        }
        let target = match &scope {
            Scope::Subspace(u) => u.clone(),
            Scope::Algebra => Subspace::full(f, n),
        };
        if span != target {
            return Err(Error::Precondition("natural basis does not span its scope".into()));
        }
        if !pairwise_orthogonal(a, &vectors) {
            return Err(Error::Precondition("natural basis vectors are not orthogonal".into()));
        }
        Ok(NaturalBasisWitness { vectors, scope })
    }

    pub fn vectors(&self) -> &[Element] {
        &self.vectors
    }

    pub fn scope(&self) -> &Scope {
        &self.scope
    }
}

/// A natural basis of the whole algebra up to permutation and per-vector
/// scaling; the representative has every vector normalized (leading entry 1)
/// and the vectors sorted, so equal classes compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BasisClass {
    lines: Vec<Element>,
}

impl BasisClass {
    pub fn new(a: &EvolutionAlgebra, vectors: &[Element]) -> Result<BasisClass> {
        NaturalBasisWitness::new(a, vectors.to_vec(), Scope::Algebra)?;
        let f = a.field();
        let mut lines: Vec<Element> = vectors.iter().map(|v| f.normalize(v)).collect();
        lines.sort();
        Ok(BasisClass { lines })
    }

    /// Normalized representative vectors, sorted.
    pub fn representative(&self) -> &[Element] {
        &self.lines
    }

    /// Whether some member of the class contains `x` (i.e. `x` is a multiple
    /// of one of the basis lines).
    pub fn contains_line_of(&self, f: Field, x: &[Scalar]) -> bool {
        let xn = f.normalize(x);
        self.lines.contains(&xn)
    }
}

fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

fn orthogonal(a: &EvolutionAlgebra, x: &[Scalar], y: &[Scalar]) -> bool {
    // x·y = Σ x_i y_i e_i²; only indices in both supports contribute.
    is_zero(&a.mul(x, y))
}

pub(crate) fn pairwise_orthogonal(a: &EvolutionAlgebra, vs: &[Element]) -> bool {
    (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| orthogonal(a, &vs[i], &vs[j])))
}

/// Depth-first search for sets of candidates that extend `fixed` to an
/// orthogonal independent family of size `target`. Candidates are taken in
/// increasing index order so each unordered selection is visited once.
/// `visit` returns `false` to stop the search.
fn search_extensions(
    a: &EvolutionAlgebra,
    fixed: &[Element],
    cands: &[Element],
    target: usize,
    visit: &mut dyn FnMut(&[Element]) -> bool,
) -> bool {
    let f = a.field();
    let n = a.dim();
    let span = Subspace::span_unchecked(f, n, fixed.to_vec());
    if span.dim() != fixed.len() || !pairwise_orthogonal(a, fixed) {
        return true;
    }
    let eligible: Vec<usize> = (0..cands.len())
        .filter(|&i| fixed.iter().all(|x| orthogonal(a, x, &cands[i])))
        .collect();
    let mut current = fixed.to_vec();
    dfs(a, cands, target, &eligible, &span, &mut current, visit)
}

fn dfs(
    a: &EvolutionAlgebra,
    cands: &[Element],
    target: usize,
    eligible: &[usize],
    span: &Subspace,
    current: &mut Vec<Element>,
    visit: &mut dyn FnMut(&[Element]) -> bool,
) -> bool {
    if current.len() == target {
        return visit(current);
    }
    let need = target - current.len();
    for (pos, &i) in eligible.iter().enumerate() {
        if eligible.len() - pos < need {
            break;
        }
        let c = &cands[i];
        if span.contains_unchecked(c) {
            continue;
        }
        let next: Vec<usize> = eligible[pos + 1..]
            .iter()
            .copied()
            .filter(|&j| orthogonal(a, c, &cands[j]))
            .collect();
        let new_span = span.extend(std::slice::from_ref(c)).expect("lengths");
        current.push(c.clone());
        let go_on = dfs(a, cands, target, &next, &new_span, current, visit);
        current.pop();
        if !go_on {
            return false;
        }
    }
    true
}

fn check_space(a: &EvolutionAlgebra, u: &Subspace) -> Result<()> {
    if u.field() != a.field() {
        return Err(Error::FieldMismatch);
    }
    if u.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: u.ambient_dim(),
        });
    }
    Ok(())
}

/// Every natural basis of `U`, one per class (normalized vectors in
/// lexicographic order). GF(p) only.
pub fn natural_bases_of(a: &EvolutionAlgebra, u: &Subspace, limits: &Limits) -> Result<Vec<Vec<Element>>> {
    check_space(a, u)?;
    let cands = u.line_representatives(limits)?;
    let mut out = Vec::new();
    search_extensions(a, &[], &cands, u.dim(), &mut |vs| {
        out.push(vs.to_vec());
        true
    });
    Ok(out)
}

/// Greedy orthogonalization: repeatedly add a vector of `U` orthogonal to all
/// chosen ones and independent of them.
fn greedy_natural(a: &EvolutionAlgebra, u: &Subspace, seed: &[Element]) -> Option<Vec<Element>> {
    let f = a.field();
    let n = a.dim();
    let mut chosen = seed.to_vec();
    if !pairwise_orthogonal(a, &chosen) {
        return None;
    }
    let mut span = Subspace::span_unchecked(f, n, chosen.clone());
    if span.dim() != chosen.len() {
        return None;
    }
    let target = span.sum_unchecked(u).dim();
    while chosen.len() < target {
        let room = orthogonal_in(a, u, &chosen);
        let pick = room.basis().iter().find(|v| !span.contains_unchecked(v))?.clone();
        span = span.extend(std::slice::from_ref(&pick)).ok()?;
        chosen.push(pick);
    }
    Some(chosen)
}

/// A natural basis of `U`. Complete over GF(p) (lexicographically first
/// basis by candidate order); over the rationals tries the canonical basis and
/// greedy orthogonalization, else `Undecided`.
pub fn find_natural_basis(a: &EvolutionAlgebra, u: &Subspace, limits: &Limits) -> Result<Search<NaturalBasisWitness>> {
    check_space(a, u)?;
    let scope = Scope::Subspace(u.clone());
    if u.is_zero() {
        return Ok(Search::Found(NaturalBasisWitness::new(a, vec![], scope)?));
    }
    if pairwise_orthogonal(a, u.basis()) {
        return Ok(Search::Found(NaturalBasisWitness::new(a, u.basis().to_vec(), scope)?));
    }
    if !a.field().is_prime_field() {
        return Ok(match greedy_natural(a, u, &[]) {
            Some(vs) => Search::Found(NaturalBasisWitness::new(a, vs, scope)?),
            None => Search::Undecided,
        });
    }
    let cands = u.line_representatives(limits)?;
    let mut found = None;
    search_extensions(a, &[], &cands, u.dim(), &mut |vs| {
        found = Some(vs.to_vec());
        false
    });
    Ok(match found {
        Some(vs) => Search::Found(NaturalBasisWitness::new(a, vs, scope)?),
        None => Search::Absent,
    })
}

/// An ideal with a natural basis.
pub fn is_evolution_ideal(a: &EvolutionAlgebra, u: &Subspace, limits: &Limits) -> Result<Decision> {
    check_space(a, u)?;
    if !is_ideal_unchecked(a, u) {
        return Ok(Decision::No);
    }
    Ok(find_natural_basis(a, u, limits)?.decision())
}

/// A subalgebra with a natural basis.
pub fn is_evolution_subalgebra(a: &EvolutionAlgebra, u: &Subspace, limits: &Limits) -> Result<Decision> {
    check_space(a, u)?;
    if !is_subalgebra_unchecked(a, u) {
        return Ok(Decision::No);
    }
    Ok(find_natural_basis(a, u, limits)?.decision())
}

/// Evolution ideals, sorted. GF(p) only.
pub fn enumerate_evolution_ideals(a: &EvolutionAlgebra, limits: &Limits) -> Result<Vec<Subspace>> {
    let ideals = crate::ideals::enumerate_ideals(a, crate::ideals::IdealMode::All, limits)?;
    let mut out = Vec::new();
    for u in ideals {
        if find_natural_basis(a, &u, limits)?.decision().is_yes() {
            out.push(u);
        }
    }
    Ok(out)
}

/// Extends the orthogonal independent family `seed` to a natural basis of
/// the whole algebra, if possible. GF(p) only.
pub fn complete_to_natural_basis(a: &EvolutionAlgebra, seed: &[Element], limits: &Limits) -> Result<Option<Vec<Element>>> {
    let full = Subspace::full(a.field(), a.dim());
    let cands = full.line_representatives(limits)?;
    let mut found = None;
    search_extensions(a, seed, &cands, a.dim(), &mut |vs| {
        found = Some(vs.to_vec());
        false
    });
    Ok(found)
}

/// Some natural basis of `U` extends to a natural basis of `A`. GF(p) only.
pub fn extension_condition(a: &EvolutionAlgebra, u: &Subspace, limits: &Limits) -> Result<bool> {
    check_space(a, u)?;
    a.field().order()?;
    for basis in natural_bases_of(a, u, limits)? {
        if complete_to_natural_basis(a, &basis, limits)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

fn check_natural_limits(a: &EvolutionAlgebra, limits: &Limits) -> Result<()> {
    let p = a.field().order()?;
    if a.dim() > limits.max_natural_dim {
        return Err(Error::budget(
            "natural-basis enumeration dimension",
            a.dim() as u128,
            limits.max_natural_dim as u64,
        ));
    }
    if p > limits.max_natural_prime {
        return Err(Error::budget("natural-basis enumeration prime", p as u128, limits.max_natural_prime));
    }
    Ok(())
}

/// All natural bases of `A` up to permutation and scaling. GF(p) only.
pub fn enumerate_natural_bases(a: &EvolutionAlgebra, limits: &Limits) -> Result<Vec<BasisClass>> {
    check_natural_limits(a, limits)?;
    let full = Subspace::full(a.field(), a.dim());
    let mut out: Vec<BasisClass> = natural_bases_of(a, &full, limits)?
        .into_iter()
        .map(|lines| BasisClass { lines })
        .collect();
    out.sort();
    Ok(out)
}

/// Every pair of distinct squares `e_i², e_j²` of the defining basis is
/// linearly independent.
pub fn property_2li(a: &EvolutionAlgebra) -> bool {
    let n = a.dim();
    let f = a.field();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            Subspace::span_unchecked(f, n, vec![a.basis_square(i).to_vec(), a.basis_square(j).to_vec()]).dim() == 2
        })
    })
}

/// Largest number of linearly independent squares among the defining basis,
/// i.e. `rank(sq)`.
pub fn property_mli(a: &EvolutionAlgebra) -> usize {
    a.sq().rank()
}

/// Largest number of linearly independent squares over all natural bases.
pub fn property_mli_over_bases(a: &EvolutionAlgebra, limits: &Limits) -> Result<usize> {
    let f = a.field();
    let n = a.dim();
    Ok(enumerate_natural_bases(a, limits)?
        .iter()
        .map(|c| {
            let squares: Vec<Vector> = c.lines.iter().map(|v| a.square(v)).collect();
            Subspace::span_unchecked(f, n, squares).dim()
        })
        .max()
        .unwrap_or(0))
}

/// Exactly one natural-basis class. Enumerates when within limits; otherwise,
/// when the defining squares are all nonzero, falls back on the 2LI criterion
/// (only its positive direction over GF(2) and GF(3)).
pub fn has_unique_natural_basis(a: &EvolutionAlgebra, limits: &Limits) -> Result<Decision> {
    match enumerate_natural_bases(a, limits) {
        Ok(classes) => Ok(Decision::from_bool(classes.len() == 1)),
        Err(e) if e.is_budget() || e == Error::UnsupportedEnumeration => {
            // Over GF(2) and GF(3) a unique class can coexist with dependent squares.
            let small = matches!(a.field().modulus(), Some(2 | 3));
            if crate::ideals::is_nondegenerate_basis(a) && (property_2li(a) || !small) {
                Ok(Decision::from_bool(property_2li(a)))
            } else {
                Ok(Decision::Undecided)
            }
        }
        Err(e) => Err(e),
    }
}

/// `x` belongs to some natural basis of `A`.
pub fn is_natural_element(a: &EvolutionAlgebra, x: &[Scalar], limits: &Limits) -> Result<Decision> {
    if x.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: x.len(),
        });
    }
    if is_zero(x) {
        return Ok(Decision::No);
    }
    if !a.field().is_prime_field() {
        let full = Subspace::full(a.field(), a.dim());
        return Ok(match greedy_natural(a, &full, &[x.to_vec()]) {
            Some(_) => Decision::Yes,
            None => Decision::Undecided,
        });
    }
    Ok(Decision::from_bool(complete_to_natural_basis(a, &[x.to_vec()], limits)?.is_some()))
}

/// Nonzero idempotents that are natural elements, sorted. GF(p) only.
pub fn natural_idempotents(a: &EvolutionAlgebra, limits: &Limits) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    for e in nonzero_idempotents(a, limits)? {
        if is_natural_element(a, &e, limits)?.is_yes() {
            out.push(e);
        }
    }
    Ok(out)
}

/// Coordinates of `v` in the (independent) family `basis`.
pub fn coordinates_in(field: Field, basis: &[Element], v: &[Scalar]) -> Option<Vector> {
    let n = v.len();
    let k = basis.len();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut r: Vector = basis.iter().map(|b| b[i].clone()).collect();
        r.push(v[i].clone());
        rows.push(r);
    }
    let (m, pivots) = Matrix::from_rows(field, k + 1, rows).ok()?.rref_with_pivots();
    if pivots.contains(&k) || pivots.len() != k {
        return None;
    }
    Some((0..k).map(|r| m.get(r, k).clone()).collect())
}

fn check_basis(a: &EvolutionAlgebra, basis: &[Element]) -> Result<()> {
    let span = Subspace::span(a.field(), a.dim(), basis)?;
    if basis.len() != a.dim() || !span.is_full() {
        return Err(Error::Precondition("not a basis of the algebra".into()));
    }
    Ok(())
}

/// `B = C ∪ D` (a partition) with `c ∈ span C` and `d ∈ span D`; equivalently
/// the supports of `c` and `d` in `B` are disjoint.
pub fn separates(a: &EvolutionAlgebra, basis: &[Element], c: &[Scalar], d: &[Scalar]) -> Result<bool> {
    check_basis(a, basis)?;
    let f = a.field();
    let cc = coordinates_in(f, basis, c).ok_or_else(|| Error::Precondition("c outside the algebra".into()))?;
    let dc = coordinates_in(f, basis, d).ok_or_else(|| Error::Precondition("d outside the algebra".into()))?;
    Ok(cc.iter().zip(&dc).all(|(x, y)| x.is_zero() || y.is_zero()))
}

/// `C1`, `C2` nonempty, disjoint, covering the basis `B`, with `C1 ⊥ C2`.
pub fn is_orthogonal_bipartite(
    a: &EvolutionAlgebra,
    basis: &[Element],
    c1: &[Element],
    c2: &[Element],
) -> Result<bool> {
    check_basis(a, basis)?;
    if c1.is_empty() || c2.is_empty() {
        return Ok(false);
    }
    if c1.iter().any(|x| c2.contains(x)) {
        return Ok(false);
    }
    let covered = basis.iter().all(|b| c1.contains(b) || c2.contains(b))
        && c1.iter().chain(c2).all(|x| basis.contains(x))
        && c1.len() + c2.len() == basis.len();
    if !covered {
        return Ok(false);
    }
    Ok(c1.iter().all(|x| c2.iter().all(|y| orthogonal(a, x, y))))
}

/// `U` with `E ⊥ U` and `E ⊕ U = A`, if one exists. Exact over any field:
/// every candidate lies in `O = {u : uE = 0}`, and one exists iff `E + O = A`.
pub fn orthogonal_complement(a: &EvolutionAlgebra, e: &Subspace) -> Result<Option<Subspace>> {
    check_space(a, e)?;
    let f = a.field();
    let n = a.dim();
    let full = Subspace::full(f, n);
    let room = orthogonal_in(a, &full, e.basis());
    if !e.sum_unchecked(&room).is_full() {
        return Ok(None);
    }
    let mut span = e.clone();
    let mut picked = Vec::new();
    for v in room.basis() {
        if !span.contains_unchecked(v) {
            span = span.extend(std::slice::from_ref(v))?;
            picked.push(v.clone());
        }
    }
    Ok(Some(Subspace::span_unchecked(f, n, picked)))
}

/// `c` lies in an orthogonal bipartite basis `C ∪ C'` with `|C| = k`, `c ∈ C`
/// and `id({c}) = span C`. Any basis of `id({c})` containing `c` works for `C`,
/// and any basis of an orthogonal complement works for `C'`, so the search
/// reduces to the complement computation.
pub fn is_n_natural(a: &EvolutionAlgebra, c: &[Scalar], k: usize) -> Result<bool> {
    if c.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: c.len(),
        });
    }
    if is_zero(c) {
        return Ok(false);
    }
    let i = principal(a, c);
    if i.dim() != k || k >= a.dim() {
        return Ok(false);
    }
    Ok(orthogonal_complement(a, &i)?.is_some())
}

/// An explicit bipartite basis `(C, C')` witnessing [`is_n_natural`].
pub fn n_natural_witness(a: &EvolutionAlgebra, c: &[Scalar], k: usize) -> Result<Option<(Vec<Element>, Vec<Element>)>> {
    if !is_n_natural(a, c, k)? {
        return Ok(None);
    }
    let i = principal(a, c);
    let comp = orthogonal_complement(a, &i)?.expect("checked");
    let mut cs = vec![c.to_vec()];
    let mut span = Subspace::span_unchecked(a.field(), a.dim(), cs.clone());
    for v in i.basis() {
        if !span.contains_unchecked(v) {
            span = span.extend(std::slice::from_ref(v))?;
            cs.push(v.clone());
        }
    }
    Ok(Some((cs, comp.basis().to_vec())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Iterations {
    One,
    /// `k` iterations with possibly different multiplier sets.
    Steps(usize),
    /// `k` iterations drawing every multiplier from one set.
    Homogeneous(usize),
}

impl Iterations {
    fn count(self) -> usize {
        match self {
            Iterations::One => 1,
            Iterations::Steps(k) | Iterations::Homogeneous(k) => k,
        }
    }
}

/// `B` ramifies towards `C`: multiplier sets exist so that every `c ∈ C` is
/// `d_k(...(d_1 b))`. Multiplier sets can always be taken as large as allowed
/// (all of `A`, or `B` when `inside`), which turns existence into a
/// reachability question. With multipliers in `A` the reachable set from `s`
/// is `A·s = span{e_i² : i ∈ supp s}`, so the search runs over supports.
pub fn ramifies(
    a: &EvolutionAlgebra,
    b: &[Element],
    c: &[Element],
    iterations: Iterations,
    inside: bool,
    limits: &Limits,
) -> Result<bool> {
    for v in b.iter().chain(c) {
        if v.len() != a.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                found: v.len(),
            });
        }
    }
    let k = iterations.count();
    if k == 0 {
        return Err(Error::Precondition("ramification needs at least one iteration".into()));
    }
    if inside {
        let mut reach: Vec<Element> = b.to_vec();
        for _ in 0..k {
            let mut next: Vec<Element> = Vec::new();
            for d in b {
                for r in &reach {
                    let v = a.mul(d, r);
                    if !next.contains(&v) {
                        next.push(v);
                    }
                }
            }
            reach = next;
        }
        return Ok(c.iter().all(|x| reach.contains(x)));
    }
    let f = a.field();
    let n = a.dim();
    let image = |supp: &[usize]| -> Subspace {
        Subspace::span_unchecked(f, n, supp.iter().map(|&i| a.basis_square(i).to_vec()).collect())
    };
    let mut level: Vec<Vec<usize>> = b.iter().map(|x| a.support(x)).collect();
    level.sort();
    level.dedup();
    for _ in 1..k {
        let mut next: Vec<Vec<usize>> = Vec::new();
        for t in &level {
            for s in image(t).vectors(false, limits)? {
                let supp = a.support(&s);
                if !next.contains(&supp) {
                    next.push(supp);
                }
            }
        }
        next.sort();
        level = next;
    }
    let images: Vec<Subspace> = level.iter().map(|t| image(t)).collect();
    Ok(c.iter().all(|x| images.iter().any(|w| w.contains_unchecked(x))))
}

/// Incidence between natural-basis classes and nonzero idempotents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalityReport {
    pub classes: Vec<BasisClass>,
    pub idempotents: Vec<Element>,
    /// `incidence[c][k]`: idempotent `k` lies (up to scaling of the basis) in class `c`.
    pub incidence: Vec<Vec<bool>>,
    /// Every class holds exactly this many nonzero idempotents.
    pub surnatural: Option<usize>,
    /// Every nonzero idempotent lies in exactly this many classes.
    pub innatural: Option<usize>,
    pub binatural: Option<(usize, usize)>,
}

fn constant(counts: &[usize]) -> Option<usize> {
    let first = *counts.first()?;
    counts.iter().all(|&c| c == first).then_some(first)
}

/// Builds the class/idempotent incidence and reads off the constant counts.
pub fn naturality_classification(a: &EvolutionAlgebra, limits: &Limits) -> Result<NaturalityReport> {
    let f = a.field();
    let classes = enumerate_natural_bases(a, limits)?;
    let idempotents = nonzero_idempotents(a, limits)?;
    let incidence: Vec<Vec<bool>> = classes
        .iter()
        .map(|c| idempotents.iter().map(|e| c.contains_line_of(f, e)).collect())
        .collect();
    let rows: Vec<usize> = incidence.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
    let cols: Vec<usize> = (0..idempotents.len())
        .map(|k| incidence.iter().filter(|r| r[k]).count())
        .collect();
    let surnatural = constant(&rows);
    let innatural = constant(&cols);
    let binatural = surnatural.zip(innatural);
    Ok(NaturalityReport {
        classes,
        idempotents,
        incidence,
        surnatural,
        innatural,
        binatural,
    })
}

/// `e` natural with `A·e = span{e}` and `e² = r e`; used by the scaling checks.
pub fn generates_own_line(a: &EvolutionAlgebra, e: &[Scalar]) -> bool {
    let line = Subspace::span_unchecked(a.field(), a.dim(), vec![e.to_vec()]);
    close_ideal(a, line.clone()) == line
}

/// `Yes` when both parts are decided yes.
pub fn both(x: Decision, y: Decision) -> Decision {
    x.and(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_example, Family};

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    fn set(mut v: Vec<Element>) -> Vec<Element> {
        v.sort();
        v
    }

    #[test]
    fn natural_basis_examples() {
        let f = gf(5);
        let a4 = make_example(Family::FourDimNonsimpleMinimal, f).unwrap();
        let i = Subspace::span(f, 4, &[f.vector_from_ints(&[1, 1, 0, 0]), f.vector_from_ints(&[0, 0, 1, 1])]).unwrap();
        let w = find_natural_basis(&a4, &i, &lim()).unwrap().found().unwrap();
        assert_eq!(
            set(w.vectors().to_vec()),
            set(vec![f.vector_from_ints(&[1, 1, 0, 0]), f.vector_from_ints(&[0, 0, 1, 1])])
        );
        let z = find_natural_basis(&a4, &Subspace::zero(f, 4), &lim()).unwrap().found().unwrap();
        assert!(z.vectors().is_empty());
        let d = make_example(Family::Diag(2), gf(3)).unwrap();
        let w = find_natural_basis(&d, &Subspace::full(gf(3), 2), &lim()).unwrap().found().unwrap();
        assert_eq!(w.vectors().len(), 2);
    }

    #[test]
    fn evolution_ideal_examples() {
        let f = gf(5);
        let a4 = make_example(Family::FourDimNonsimpleMinimal, f).unwrap();
        let i = Subspace::span(f, 4, &[f.vector_from_ints(&[1, 1, 0, 0]), f.vector_from_ints(&[0, 0, 1, 1])]).unwrap();
        assert_eq!(is_evolution_ideal(&a4, &i, &lim()).unwrap(), Decision::Yes);
        let az3 = make_example(Family::Z3Counterexample, gf(3)).unwrap();
        let l = Subspace::coordinate(gf(3), 2, &[0]);
        assert_eq!(is_evolution_ideal(&az3, &l, &lim()).unwrap(), Decision::No);
        assert_eq!(is_evolution_ideal(&az3, &Subspace::zero(gf(3), 2), &lim()).unwrap(), Decision::Yes);
    }

    #[test]
    fn evolution_ideal_enumeration() {
        let d = make_example(Family::Diag(2), gf(2)).unwrap();
        assert_eq!(enumerate_evolution_ideals(&d, &lim()).unwrap().len(), 4);
        let az3 = make_example(Family::Z3Counterexample, gf(3)).unwrap();
        assert_eq!(enumerate_evolution_ideals(&az3, &lim()).unwrap().len(), 2);
        let z = make_example(Family::Zero(2), gf(2)).unwrap();
        assert_eq!(enumerate_evolution_ideals(&z, &lim()).unwrap().len(), 5);
    }

    #[test]
    fn extension_examples() {
        let f = gf(3);
        let d = make_example(Family::Diag(2), f).unwrap();
        assert!(extension_condition(&d, &Subspace::coordinate(f, 2, &[0]), &lim()).unwrap());
        let z = make_example(Family::Zero(2), f).unwrap();
        let line = Subspace::span(f, 2, &[f.vector_from_ints(&[1, 2])]).unwrap();
        assert!(extension_condition(&z, &line, &lim()).unwrap());
    }

    #[test]
    fn class_counts() {
        let z = make_example(Family::Zero(2), gf(2)).unwrap();
        let classes = enumerate_natural_bases(&z, &lim()).unwrap();
        assert_eq!(classes.len(), 3);
        let d = make_example(Family::Diag(2), gf(3)).unwrap();
        assert_eq!(enumerate_natural_bases(&d, &lim()).unwrap().len(), 1);
        let az3 = make_example(Family::Z3Counterexample, gf(3)).unwrap();
        assert_eq!(enumerate_natural_bases(&az3, &lim()).unwrap().len(), 1);
        let big = make_example(Family::Diag(5), gf(2)).unwrap();
        assert!(enumerate_natural_bases(&big, &lim()).unwrap_err().is_budget());
    }

    #[test]
    fn uniqueness_and_li() {
        let az3 = make_example(Family::Z3Counterexample, gf(3)).unwrap();
        assert!(property_2li(&az3));
        assert_eq!(has_unique_natural_basis(&az3, &lim()).unwrap(), Decision::Yes);
        let z = make_example(Family::Zero(2), gf(3)).unwrap();
        assert!(!property_2li(&z));
        assert_eq!(has_unique_natural_basis(&z, &lim()).unwrap(), Decision::No);
        let d = make_example(Family::Diag(2), gf(3)).unwrap();
        assert_eq!(property_mli(&d), 2);
        assert_eq!(property_mli_over_bases(&d, &lim()).unwrap(), 2);
        // Over the rationals, fall back on the 2LI criterion.
        let dq = make_example(Family::Diag(2), Field::rationals()).unwrap();
        assert_eq!(has_unique_natural_basis(&dq, &lim()).unwrap(), Decision::Yes);
    }

    #[test]
    fn natural_idempotent_examples() {
        let d = make_example(Family::Diag(2), gf(3)).unwrap();
        assert_eq!(
            natural_idempotents(&d, &lim()).unwrap(),
            set(vec![d.basis_vector(0).unwrap(), d.basis_vector(1).unwrap()])
        );
        let az3 = make_example(Family::Z3Counterexample, gf(3)).unwrap();
        assert!(natural_idempotents(&az3, &lim()).unwrap().is_empty());
        let z = make_example(Family::Zero(2), gf(3)).unwrap();
        assert!(natural_idempotents(&z, &lim()).unwrap().is_empty());
        let q = Field::rationals();
        let dq = make_example(Family::Diag(2), q).unwrap();
        assert_eq!(is_natural_element(&dq, &q.vector_from_ints(&[3, 0]), &lim()).unwrap(), Decision::Yes);
    }

    #[test]
    fn complements_and_n_naturality() {
        let f = gf(3);
        let d = make_example(Family::Diag(2), f).unwrap();
        let e1 = d.basis_vector(0).unwrap();
        assert_eq!(
            orthogonal_complement(&d, &Subspace::coordinate(f, 2, &[0])).unwrap(),
            Some(Subspace::coordinate(f, 2, &[1]))
        );
        assert!(is_n_natural(&d, &e1, 1).unwrap());
        assert!(!is_n_natural(&d, &e1, 2).unwrap());
        let (c, c2) = n_natural_witness(&d, &e1, 1).unwrap().unwrap();
        let mut basis = c.clone();
        basis.extend(c2.clone());
        assert!(is_orthogonal_bipartite(&d, &basis, &c, &c2).unwrap());
        let az3 = make_example(Family::Z3Counterexample, f).unwrap();
        assert_eq!(
            orthogonal_complement(&az3, &Subspace::full(f, 2)).unwrap(),
            Some(Subspace::zero(f, 2))
        );
    }

    #[test]
    fn separation() {
        let f = gf(3);
        let d = make_example(Family::Diag(3), f).unwrap();
        let basis: Vec<Element> = (0..3).map(|i| d.basis_vector(i).unwrap()).collect();
        let c = f.vector_from_ints(&[1, 1, 0]);
        let x = f.vector_from_ints(&[0, 0, 2]);
        let y = f.vector_from_ints(&[0, 1, 2]);
        assert!(separates(&d, &basis, &c, &x).unwrap());
        assert!(!separates(&d, &basis, &c, &y).unwrap());
    }

    #[test]
    fn ramification_examples() {
        let f = gf(3);
        let d = make_example(Family::Diag(2), f).unwrap();
        let b: Vec<Element> = (0..2).map(|i| d.basis_vector(i).unwrap()).collect();
        assert!(ramifies(&d, &b, &b, Iterations::One, true, &lim()).unwrap());
        let z = make_example(Family::Zero(2), f).unwrap();
        assert!(!ramifies(&z, &b, &b, Iterations::One, true, &lim()).unwrap());
        let az3 = make_example(Family::Z3Counterexample, f).unwrap();
        assert!(!ramifies(&az3, &b, &b, Iterations::One, true, &lim()).unwrap());
        // Multipliers from all of A: e1 = x·e_i needs e1 ∈ span{e_i²}; fails for both.
        assert!(!ramifies(&az3, &b, &b, Iterations::One, false, &lim()).unwrap());
        // After two steps the reachable supports include full ones, hence all of A.
        assert!(ramifies(&az3, &b, &b, Iterations::Steps(2), false, &lim()).unwrap());
    }

    #[test]
    fn classification_examples() {
        let d = make_example(Family::Diag(2), gf(3)).unwrap();
        let r = naturality_classification(&d, &lim()).unwrap();
        // e1 + e2 is idempotent but lies in no natural basis.
        assert_eq!(r.surnatural, Some(2));
        assert_eq!(r.innatural, None);
        assert_eq!(r.incidence, vec![vec![true, true, false]]);
        let az3 = make_example(Family::Z3Counterexample, gf(3)).unwrap();
        let r = naturality_classification(&az3, &lim()).unwrap();
        assert_eq!(r.surnatural, Some(0));
        assert_eq!(r.innatural, None);
        let z = make_example(Family::Zero(2), gf(3)).unwrap();
        assert_eq!(naturality_classification(&z, &lim()).unwrap().surnatural, Some(0));
    }
}
