//! Ideal and subalgebra generation, ideal enumeration over GF(p), the
//! structural predicates, and annihilators.

use crate::algebra::{Element, EvolutionAlgebra};
use crate::error::{Error, Result};
use crate::exactalg::{enumerate_subspaces, Matrix, Scalar, Subspace, Vector};
use crate::limits::Limits;

fn check_elements(a: &EvolutionAlgebra, s: &[Element]) -> Result<()> {
    for v in s {
        if v.len() != a.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                found: v.len(),
            });
        }
    }
    Ok(())
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

/// Smallest ideal containing `s`.
pub fn ideal_closure(a: &EvolutionAlgebra, s: &[Element]) -> Result<Subspace> {
    check_elements(a, s)?;
    Ok(close_ideal(a, Subspace::span_unchecked(a.field(), a.dim(), s.to_vec())))
}

/// Smallest ideal containing the subspace `u`.
pub fn ideal_closure_of(a: &EvolutionAlgebra, u: &Subspace) -> Result<Subspace> {
    check_space(a, u)?;
    Ok(close_ideal(a, u.clone()))
}

pub(crate) fn close_ideal(a: &EvolutionAlgebra, mut u: Subspace) -> Subspace {
    loop {
        let mut extra: Vec<Vector> = Vec::new();
        for v in u.basis() {
            for i in 0..a.dim() {
                if v[i].is_zero() {
                    continue;
                }
                let w = a.basis_mul(i, v);
                if !u.contains_unchecked(&w) {
                    extra.push(w);
                }
            }
        }
        if extra.is_empty() {
            return u;
        }
        u = u.extend(&extra).expect("lengths match");
    }
}

/// `id({v})`, without checks.
pub(crate) fn principal(a: &EvolutionAlgebra, v: &[Scalar]) -> Subspace {
    close_ideal(a, Subspace::span_unchecked(a.field(), a.dim(), vec![v.to_vec()]))
}

/// Smallest subalgebra containing `s`.
pub fn subalgebra_closure(a: &EvolutionAlgebra, s: &[Element]) -> Result<Subspace> {
    check_elements(a, s)?;
    let mut u = Subspace::span_unchecked(a.field(), a.dim(), s.to_vec());
    loop {
        let basis = u.basis().to_vec();
        let mut extra = Vec::new();
        for (k, x) in basis.iter().enumerate() {
            for y in &basis[k..] {
                let w = a.mul(x, y);
                if !u.contains_unchecked(&w) {
                    extra.push(w);
                }
            }
        }
        if extra.is_empty() {
            return Ok(u);
        }
        u = u.extend(&extra)?;
    }
}

/// `e_i v ∈ U` for every defining-basis vector and every basis vector of `U`.
pub fn is_ideal(a: &EvolutionAlgebra, u: &Subspace) -> Result<bool> {
    check_space(a, u)?;
    Ok(is_ideal_unchecked(a, u))
}

pub(crate) fn is_ideal_unchecked(a: &EvolutionAlgebra, u: &Subspace) -> bool {
    u.basis().iter().all(|v| {
        (0..a.dim()).all(|i| v[i].is_zero() || u.contains_unchecked(&a.basis_mul(i, v)))
    })
}

/// Closure of `U` under products of its own vectors.
pub fn is_subalgebra(a: &EvolutionAlgebra, u: &Subspace) -> Result<bool> {
    check_space(a, u)?;
    Ok(is_subalgebra_unchecked(a, u))
}

pub(crate) fn is_subalgebra_unchecked(a: &EvolutionAlgebra, u: &Subspace) -> bool {
    let b = u.basis();
    (0..b.len()).all(|i| (i..b.len()).all(|j| u.contains_unchecked(&a.mul(&b[i], &b[j]))))
}

/// `U` is an ideal of the subalgebra `I`: `I·U ⊆ U`. Used to treat `I` as an
/// algebra in its own right.
pub fn is_ideal_within(a: &EvolutionAlgebra, i: &Subspace, u: &Subspace) -> Result<bool> {
    check_space(a, i)?;
    check_space(a, u)?;
    if !u.is_subspace_of_unchecked(i) {
        return Ok(false);
    }
    Ok(i.basis()
        .iter()
        .all(|x| u.basis().iter().all(|y| u.contains_unchecked(&a.mul(x, y)))))
}

/// `span{u v : u ∈ basis(U), v ∈ basis(V)}`.
pub fn ideal_product(a: &EvolutionAlgebra, u: &Subspace, v: &Subspace) -> Result<Subspace> {
    check_space(a, u)?;
    check_space(a, v)?;
    Ok(product_unchecked(a, u, v))
}

pub(crate) fn product_unchecked(a: &EvolutionAlgebra, u: &Subspace, v: &Subspace) -> Subspace {
    let mut out = Vec::new();
    for x in u.basis() {
        for y in v.basis() {
            let w = a.mul(x, y);
            if w.iter().any(|c| !c.is_zero()) {
                out.push(w);
            }
        }
    }
    Subspace::span_unchecked(a.field(), a.dim(), out)
}

/// `A² = span{e_i²}`.
pub fn square_of_algebra(a: &EvolutionAlgebra) -> Subspace {
    Subspace::span_unchecked(a.field(), a.dim(), a.sq().to_rows())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealMode {
    /// `{id({v}) : v nonzero up to scalar} ∪ {0}`.
    Principal,
    /// Every subspace that is an ideal.
    All,
}

/// Ideals of `A`, sorted by dimension then basis.
pub fn enumerate_ideals(a: &EvolutionAlgebra, mode: IdealMode, limits: &Limits) -> Result<Vec<Subspace>> {
    let f = a.field();
    let n = a.dim();
    let mut out = match mode {
        IdealMode::Principal => {
            let mut v: Vec<Subspace> = Subspace::full(f, n)
                .vectors(true, limits)?
                .map(|x| principal(a, &x))
                .collect();
            v.sort();
            v.dedup();
            v
        }
        IdealMode::All => enumerate_subspaces(f, n, limits)?
            .into_iter()
            .filter(|u| is_ideal_unchecked(a, u))
            .collect(),
    };
    out.sort();
    Ok(out)
}

/// Inclusion-minimal members of a family.
pub fn minimal_members(family: &[Subspace]) -> Vec<Subspace> {
    let mut out: Vec<Subspace> = family
        .iter()
        .filter(|u| !family.iter().any(|w| w != *u && w.is_subspace_of_unchecked(u)))
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Inclusion-maximal members of a family.
pub fn maximal_members(family: &[Subspace]) -> Vec<Subspace> {
    let mut out: Vec<Subspace> = family
        .iter()
        .filter(|u| !family.iter().any(|w| w != *u && u.is_subspace_of_unchecked(w)))
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Minimal ideals, as the minimal nonzero principal ideals (a minimal ideal is
/// generated by any of its nonzero elements).
pub fn minimal_ideals(a: &EvolutionAlgebra, limits: &Limits) -> Result<Vec<Subspace>> {
    let nonzero: Vec<Subspace> = enumerate_ideals(a, IdealMode::Principal, limits)?
        .into_iter()
        .filter(|u| !u.is_zero())
        .collect();
    Ok(minimal_members(&nonzero))
}

/// `A² != 0` and every nonzero element generates `A`.
pub fn is_simple(a: &EvolutionAlgebra, limits: &Limits) -> Result<bool> {
    let mut reps = Subspace::full(a.field(), a.dim()).vectors(true, limits)?;
    if square_of_algebra(a).is_zero() {
        return Ok(false);
    }
    Ok(reps.all(|v| v.iter().all(Scalar::is_zero) || principal(a, &v).is_full()))
}

/// No nonzero principal ideal squares to zero.
pub fn is_semiprime(a: &EvolutionAlgebra, limits: &Limits) -> Result<bool> {
    Ok(square_zero_principal_ideal(a, limits)?.is_none())
}

/// A nonzero principal ideal `J` with `J² = 0`, if one exists.
pub fn square_zero_principal_ideal(a: &EvolutionAlgebra, limits: &Limits) -> Result<Option<Subspace>> {
    for v in Subspace::full(a.field(), a.dim()).vectors(true, limits)? {
        if v.iter().all(Scalar::is_zero) {
            continue;
        }
        let j = principal(a, &v);
        if product_unchecked(a, &j, &j).is_zero() {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

/// `x(Ax) = 0`, i.e. `x` witnesses left degeneracy when nonzero. Works over any field.
pub fn annihilates_own_multiples(a: &EvolutionAlgebra, x: &[Scalar]) -> Result<bool> {
    if x.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: x.len(),
        });
    }
    Ok((0..a.dim()).all(|j| a.mul(x, &a.basis_mul(j, x)).iter().all(Scalar::is_zero)))
}

/// `a(Aa) = 0` forces `a = 0`.
pub fn is_nondegenerate_left(a: &EvolutionAlgebra, limits: &Limits) -> Result<bool> {
    let mut reps = Subspace::full(a.field(), a.dim()).vectors(true, limits)?;
    Ok(reps.all(|x| x.iter().all(Scalar::is_zero) || !annihilates_own_multiples(a, &x).unwrap()))
}

/// Every `e_i²` of the defining basis is nonzero.
pub fn is_nondegenerate_basis(a: &EvolutionAlgebra) -> bool {
    (0..a.dim()).all(|i| a.basis_square(i).iter().any(|c| !c.is_zero()))
}

/// `A² = A`, i.e. `rank(sq) = n`.
pub fn is_perfect(a: &EvolutionAlgebra) -> bool {
    a.sq().rank() == a.dim()
}

/// A subspace together with its ideal flag and optional generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealRecord {
    pub space: Subspace,
    pub is_ideal: bool,
    pub generators: Option<Vec<Element>>,
}

impl IdealRecord {
    pub fn new(a: &EvolutionAlgebra, space: Subspace, generators: Option<Vec<Element>>) -> Result<IdealRecord> {
        let is_ideal = is_ideal(a, &space)?;
        Ok(IdealRecord {
            space,
            is_ideal,
            generators,
        })
    }

    /// The ideal generated by `generators`.
    pub fn generated(a: &EvolutionAlgebra, generators: Vec<Element>) -> Result<IdealRecord> {
        let space = ideal_closure(a, &generators)?;
        Ok(IdealRecord {
            space,
            is_ideal: true,
            generators: Some(generators),
        })
    }
}

fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

fn kills_all(a: &EvolutionAlgebra, u: &[Scalar], sets: &[&Vec<Element>]) -> bool {
    sets.iter().all(|set| set.iter().all(|f| is_zero_vec(&a.mul(u, f))))
}

/// `{u ∈ U : u·F = 0 for all F in the family}` for a finite set `U`.
pub fn lann_set(a: &EvolutionAlgebra, u: &[Element], family: &[Vec<Element>]) -> Result<Vec<Element>> {
    check_elements(a, u)?;
    for set in family {
        check_elements(a, set)?;
    }
    let sets: Vec<&Vec<Element>> = family.iter().collect();
    Ok(u.iter().filter(|x| kills_all(a, x, &sets)).cloned().collect())
}

/// `{u ∈ U : u·F = 0 for all F in the family}` for a subspace `U`; the result is
/// a subspace, computed exactly by linear algebra over any field.
pub fn lann_subspace(a: &EvolutionAlgebra, u: &Subspace, family: &[Vec<Element>]) -> Result<Subspace> {
    check_space(a, u)?;
    let targets: Vec<Element> = family.iter().flatten().cloned().collect();
    check_elements(a, &targets)?;
    Ok(orthogonal_in(a, u, &targets))
}

/// `{u ∈ U : u·t = 0 for every t}`.
pub(crate) fn orthogonal_in(a: &EvolutionAlgebra, u: &Subspace, targets: &[Element]) -> Subspace {
    let f = a.field();
    let n = a.dim();
    if u.is_zero() || targets.is_empty() {
        return u.clone();
    }
    // Row k of the block matrix is (b_k · t_1 | b_k · t_2 | ...).
    let rows: Vec<Vector> = u
        .basis()
        .iter()
        .map(|b| targets.iter().flat_map(|t| a.mul(b, t)).collect())
        .collect();
    let m = Matrix::from_rows(f, n * targets.len(), rows).expect("shape");
    let coeffs = m.left_kernel();
    let vs: Vec<Vector> = coeffs.iter().map(|c| u.combine(c)).collect();
    Subspace::span_unchecked(f, n, vs)
}

/// `∪_E {e ∈ E : e·F = 0 for every other F in the family}`, sorted and deduplicated.
pub fn autoann(a: &EvolutionAlgebra, family: &[Vec<Element>]) -> Result<Vec<Element>> {
    for set in family {
        check_elements(a, set)?;
    }
    let mut out = Vec::new();
    for (k, e_set) in family.iter().enumerate() {
        let others: Vec<&Vec<Element>> = family
            .iter()
            .enumerate()
            .filter(|(j, other)| *j != k && *other != e_set)
            .map(|(_, s)| s)
            .collect();
        for e in e_set {
            if kills_all(a, e, &others) {
                out.push(e.clone());
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_example, Family};
    use crate::exactalg::Field;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    fn span(f: Field, rows: &[&[i64]]) -> Subspace {
        let n = rows[0].len();
        let vs: Vec<Vector> = rows.iter().map(|r| f.vector_from_ints(r)).collect();
        Subspace::span(f, n, &vs).unwrap()
    }

    #[test]
    fn closure_examples() {
        let f = gf(5);
        let a4 = make_example(Family::FourDimNonsimpleMinimal, f).unwrap();
        let i = ideal_closure(&a4, &[f.vector_from_ints(&[1, 1, 0, 0])]).unwrap();
        assert_eq!(i, span(f, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]));
        assert!(ideal_closure(&a4, &[a4.zero_element()]).unwrap().is_zero());
        assert!(ideal_closure(&a4, &[]).unwrap().is_zero());
        let az3 = make_example(Family::Z3Counterexample, gf(3)).unwrap();
        assert!(ideal_closure(&az3, &[az3.basis_vector(0).unwrap()]).unwrap().is_full());
    }

    #[test]
    fn subalgebra_examples() {
        let f = gf(3);
        let d = make_example(Family::Diag(2), f).unwrap();
        let e1 = d.basis_vector(0).unwrap();
        assert_eq!(subalgebra_closure(&d, std::slice::from_ref(&e1)).unwrap(), Subspace::coordinate(f, 2, &[0]));
        let az3 = make_example(Family::Z3Counterexample, f).unwrap();
        assert!(subalgebra_closure(&az3, &[e1]).unwrap().is_full());
        assert!(subalgebra_closure(&az3, &[]).unwrap().is_zero());
    }

    #[test]
    fn ideal_membership_examples() {
        let f = gf(5);
        let a4 = make_example(Family::FourDimNonsimpleMinimal, f).unwrap();
        let i = span(f, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let j = span(f, &[&[1, 1, 1, 1]]);
        assert!(is_ideal_within(&a4, &i, &j).unwrap());
        assert!(!is_ideal(&a4, &j).unwrap());
        assert!(is_ideal(&a4, &Subspace::zero(f, 4)).unwrap());
        let az3 = make_example(Family::Z3Counterexample, gf(3)).unwrap();
        assert!(!is_ideal(&az3, &Subspace::coordinate(gf(3), 2, &[0])).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        let az3 = make_example(Family::Z3Counterexample, gf(3)).unwrap();
        let p = enumerate_ideals(&az3, IdealMode::Principal, &lim()).unwrap();
        assert_eq!(p, vec![Subspace::zero(gf(3), 2), Subspace::full(gf(3), 2)]);

        let f2 = gf(2);
        let d = make_example(Family::Diag(2), f2).unwrap();
        let all = enumerate_ideals(&d, IdealMode::All, &lim()).unwrap();
        assert_eq!(
            all,
            vec![
                Subspace::zero(f2, 2),
                Subspace::coordinate(f2, 2, &[1]),
                Subspace::coordinate(f2, 2, &[0]),
                Subspace::full(f2, 2),
            ]
        );
        let z1 = make_example(Family::Zero(1), f2).unwrap();
        assert_eq!(enumerate_ideals(&z1, IdealMode::All, &lim()).unwrap().len(), 2);
        assert_eq!(
            enumerate_ideals(&make_example(Family::Diag(2), Field::rationals()).unwrap(), IdealMode::All, &lim()),
            Err(Error::UnsupportedEnumeration)
        );
    }

    #[test]
    fn minimal_ideal_examples() {
        let az3 = make_example(Family::Z3Counterexample, gf(3)).unwrap();
        assert_eq!(minimal_ideals(&az3, &lim()).unwrap(), vec![Subspace::full(gf(3), 2)]);
        let f = gf(5);
        let a4 = make_example(Family::FourDimNonsimpleMinimal, f).unwrap();
        assert_eq!(
            minimal_ideals(&a4, &lim()).unwrap(),
            vec![span(f, &[&[1, 1, 0, 0], &[0, 0, 1, 1]])]
        );
        let d = make_example(Family::Diag(2), gf(3)).unwrap();
        assert_eq!(minimal_ideals(&d, &lim()).unwrap().len(), 2);
    }

    #[test]
    fn product_examples() {
        let f = gf(2);
        let z = make_example(Family::Zero(2), f).unwrap();
        let l = Subspace::coordinate(f, 2, &[0]);
        assert!(ideal_product(&z, &l, &l).unwrap().is_zero());
        let az3 = make_example(Family::Z3Counterexample, gf(3)).unwrap();
        let full = Subspace::full(gf(3), 2);
        assert!(ideal_product(&az3, &full, &full).unwrap().is_full());
        let d = make_example(Family::Diag(2), f).unwrap();
        assert!(ideal_product(&d, &l, &Subspace::coordinate(f, 2, &[1])).unwrap().is_zero());
    }

    #[test]
    fn predicate_examples() {
        let az3 = make_example(Family::Z3Counterexample, gf(3)).unwrap();
        assert!(is_simple(&az3, &lim()).unwrap());
        assert!(is_nondegenerate_left(&az3, &lim()).unwrap());
        assert!(is_semiprime(&az3, &lim()).unwrap());
        assert!(is_perfect(&az3));
        let z1 = make_example(Family::Zero(1), gf(2)).unwrap();
        assert!(!is_semiprime(&z1, &lim()).unwrap());
        assert!(!is_simple(&z1, &lim()).unwrap());
        let mu = EvolutionAlgebra::from_ints(gf(3), &[vec![1, 1], vec![-1, -1]]).unwrap();
        assert!(!is_simple(&mu, &lim()).unwrap());
        assert!(is_nondegenerate_basis(&mu));
        assert!(!is_nondegenerate_basis(&z1));
    }

    #[test]
    fn rational_witness_check() {
        let q = Field::rationals();
        let z = make_example(Family::Zero(2), q).unwrap();
        assert!(annihilates_own_multiples(&z, &q.vector_from_ints(&[1, 3])).unwrap());
        let d = make_example(Family::Diag(2), q).unwrap();
        assert!(!annihilates_own_multiples(&d, &q.vector_from_ints(&[1, 3])).unwrap());
        assert!(is_nondegenerate_left(&d, &lim()).is_err());
    }

    #[test]
    fn annihilator_examples() {
        let f = gf(3);
        let d = make_example(Family::Diag(2), f).unwrap();
        let e1 = d.basis_vector(0).unwrap();
        let e2 = d.basis_vector(1).unwrap();
        let fam = vec![vec![e1.clone()], vec![e2.clone()]];
        let mut want = vec![e1.clone(), e2.clone()];
        want.sort();
        assert_eq!(autoann(&d, &fam).unwrap(), want);
        assert_eq!(autoann(&d, &[vec![e1.clone()]]).unwrap(), vec![e1.clone()]);
        let az3 = make_example(Family::Z3Counterexample, f).unwrap();
        assert_eq!(autoann(&az3, &fam).unwrap(), want);
    }

    #[test]
    fn annihilator_subspace_matches_enumeration() {
        let f = gf(3);
        let az3 = make_example(Family::Z3Counterexample, f).unwrap();
        let fam = vec![vec![f.vector_from_ints(&[1, 1])]];
        let full = Subspace::full(f, 2);
        let sub = lann_subspace(&az3, &full, &fam).unwrap();
        let all: Vec<Element> = full.vectors(false, &lim()).unwrap().collect();
        let set = lann_set(&az3, &all, &fam).unwrap();
        assert_eq!(set.len(), sub.vector_count(false).unwrap() as usize);
        assert!(set.iter().all(|v| sub.contains(v).unwrap()));
    }
}
