//! Socles: ideal and evolution socles, A-socles, the natural/non-natural
//! and extension partitions of the minimal ideals, the socle of natural
//! idempotency, coherent choices, minimal ideals as algebras, and the
//! socle decomposition report.

use serde::Serialize;

use crate::algebra::{Element, EvolutionAlgebra};
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, Scalar, Subspace};
use crate::ideals::{minimal_ideals, minimal_members, principal, product_unchecked};
use crate::idempotents::{is_fseani, minimal_idempotents, nonzero_idempotents};
use crate::limits::Limits;
use crate::natural::{
    coordinates_in, enumerate_evolution_ideals, extension_condition, find_natural_basis, natural_idempotents,
    property_2li, NaturalBasisWitness,
};

fn sum_all(field: Field, n: usize, spaces: &[Subspace]) -> Subspace {
    spaces.iter().fold(Subspace::zero(field, n), |acc, s| acc.sum_unchecked(s))
}

fn check_space(a: &EvolutionAlgebra, s: &Subspace) -> Result<()> {
    if s.field() != a.field() {
        return Err(Error::FieldMismatch);
    }
    if s.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: s.ambient_dim(),
        });
    }
    Ok(())
}

/// Minimal members among the nonzero evolution ideals, sorted.
pub fn minimal_evolution_ideals(a: &EvolutionAlgebra, limits: &Limits) -> Result<Vec<Subspace>> {
    let nonzero: Vec<Subspace> = enumerate_evolution_ideals(a, limits)?
        .into_iter()
        .filter(|u| !u.is_zero())
        .collect();
    Ok(minimal_members(&nonzero))
}

/// Sum of the minimal ideals (`{0}` when there are none).
pub fn socle(a: &EvolutionAlgebra, limits: &Limits) -> Result<Subspace> {
    Ok(sum_all(a.field(), a.dim(), &minimal_ideals(a, limits)?))
}

/// Sum of the minimal evolution ideals.
pub fn ev_socle(a: &EvolutionAlgebra, limits: &Limits) -> Result<Subspace> {
    Ok(sum_all(a.field(), a.dim(), &minimal_evolution_ideals(a, limits)?))
}

/// Sum of the minimal ideals inside the minimal evolution ideal `e`.
pub fn a_socle(a: &EvolutionAlgebra, e: &Subspace, limits: &Limits) -> Result<Subspace> {
    check_space(a, e)?;
    if !minimal_evolution_ideals(a, limits)?.contains(e) {
        return Err(Error::Precondition("not a minimal evolution ideal".into()));
    }
    let inside: Vec<Subspace> = minimal_ideals(a, limits)?
        .into_iter()
        .filter(|i| i.is_subspace_of_unchecked(e))
        .collect();
    let s = sum_all(a.field(), a.dim(), &inside);
    if !s.is_subspace_of_unchecked(&socle(a, limits)?) {
        return Err(Error::Invariant("A-socle escapes the socle".into()));
    }
    Ok(s)
}

/// Sum of the minimal evolution ideals lying inside some member of
/// `MinEvid(i)`, for a minimal ideal `i`.
pub fn a_ev_socle(a: &EvolutionAlgebra, i: &Subspace, limits: &Limits) -> Result<Subspace> {
    check_space(a, i)?;
    if !minimal_ideals(a, limits)?.contains(i) {
        return Err(Error::Precondition("not a minimal ideal".into()));
    }
    let evs = enumerate_evolution_ideals(a, limits)?;
    let over: Vec<Subspace> = evs.iter().filter(|x| i.is_subspace_of_unchecked(x)).cloned().collect();
    let fronts = minimal_members(&over);
    let inside: Vec<Subspace> = minimal_evolution_ideals(a, limits)?
        .into_iter()
        .filter(|m| fronts.iter().any(|f| m.is_subspace_of_unchecked(f)))
        .collect();
    Ok(sum_all(a.field(), a.dim(), &inside))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocEvsocProbe {
    pub soc_in_evsoc: bool,
    /// A minimal ideal not contained in the evolution socle.
    pub witness: Option<Subspace>,
}

/// Checks `soc(A) ⊆ evsoc(A)`.
pub fn soc_evsoc_probe(a: &EvolutionAlgebra, limits: &Limits) -> Result<SocEvsocProbe> {
    let evsoc = ev_socle(a, limits)?;
    let witness = minimal_ideals(a, limits)?
        .into_iter()
        .find(|i| !i.is_subspace_of_unchecked(&evsoc));
    Ok(SocEvsocProbe {
        soc_in_evsoc: witness.is_none(),
        witness,
    })
}

/// A natural-idempotent ideal `N = span{e_N}` and its generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NaturalWitness {
    pub ideal: Subspace,
    pub generator: Element,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleReport {
    #[serde(rename = "soc_basis")]
    pub soc: Subspace,
    #[serde(rename = "evsoc_basis")]
    pub evsoc: Subspace,
    pub minimal_ideals: Vec<Subspace>,
    pub minimal_evolution_ideals: Vec<Subspace>,
    pub nat_min: Vec<Subspace>,
    pub non_nat_min: Vec<Subspace>,
    pub ex_min: Vec<Subspace>,
    pub in_min: Vec<Subspace>,
    pub soc_nid: Subspace,
    pub sdni: usize,
    pub msdnonni: usize,
    pub faithful: bool,
    /// Generators of the members of `nat_min`.
    pub witnesses: Vec<NaturalWitness>,
}

impl SocleReport {
    fn check(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Invariant(format!("socle report: {m}")));
        let f = self.soc.field();
        let n = self.soc.ambient_dim();
        if sum_all(f, n, &self.minimal_ideals) != self.soc {
            return bad("soc is not the sum of the minimal ideals");
        }
        if sum_all(f, n, &self.minimal_evolution_ideals) != self.evsoc {
            return bad("evsoc is not the sum of the minimal evolution ideals");
        }
        let partition = |x: &[Subspace], y: &[Subspace]| {
            x.len() + y.len() == self.minimal_ideals.len()
                && x.iter().chain(y).all(|i| self.minimal_ideals.contains(i))
                && x.iter().all(|i| !y.contains(i))
        };
        if !partition(&self.nat_min, &self.non_nat_min) {
            return bad("nat/non-nat is not a partition");
        }
        if !partition(&self.ex_min, &self.in_min) {
            return bad("ex/in is not a partition");
        }
        if self.nat_min.iter().any(|i| i.dim() != 1) {
            return bad("natural-idempotent ideal of dimension > 1");
        }
        if !self.soc_nid.is_subspace_of_unchecked(&self.soc) {
            return bad("soc_nid escapes the socle");
        }
        Ok(())
    }
}

fn distinct_lines(field: Field, vs: &[Element]) -> usize {
    let mut lines: Vec<Element> = vs.iter().map(|v| field.normalize(v)).collect();
    lines.sort();
    lines.dedup();
    lines.len()
}

/// Full socle report. GF(p) within the natural-basis limits.
pub fn partitions(a: &EvolutionAlgebra, limits: &Limits) -> Result<SocleReport> {
    let field = a.field();
    let n = a.dim();
    let min_ids = minimal_ideals(a, limits)?;
    let min_evs = minimal_evolution_ideals(a, limits)?;
    let nat_idem = natural_idempotents(a, limits)?;
    let mut witnesses: Vec<NaturalWitness> = nat_idem
        .iter()
        .map(|e| NaturalWitness {
            ideal: principal(a, e),
            generator: e.clone(),
        })
        .collect();
    witnesses.sort_by(|x, y| x.ideal.cmp(&y.ideal));
    let mut nat_min: Vec<Subspace> = witnesses.iter().map(|w| w.ideal.clone()).collect();
    nat_min.dedup();
    let non_nat_min: Vec<Subspace> = min_ids.iter().filter(|i| !nat_min.contains(i)).cloned().collect();
    let mut ex_min = Vec::new();
    let mut in_min = Vec::new();
    for i in &min_ids {
        if extension_condition(a, i, limits)? {
            ex_min.push(i.clone());
        } else {
            in_min.push(i.clone());
        }
    }
    let lines: Vec<Subspace> = nat_idem
        .iter()
        .map(|e| Subspace::span_unchecked(field, n, vec![e.clone()]))
        .collect();
    let soc_nid = sum_all(field, n, &lines);
    let sdni = distinct_lines(field, &nat_idem);
    let msdnonni = minimal_idempotents(a, limits)?
        .iter()
        .filter(|e| !nat_idem.contains(e))
        .count();
    let report = SocleReport {
        soc: sum_all(field, n, &min_ids),
        evsoc: sum_all(field, n, &min_evs),
        minimal_ideals: min_ids,
        minimal_evolution_ideals: min_evs,
        nat_min,
        non_nat_min,
        ex_min,
        in_min,
        faithful: sdni == soc_nid.dim(),
        soc_nid,
        sdni,
        msdnonni,
        witnesses,
    };
    report.check()?;
    Ok(report)
}

/// The only nonzero idempotent in a natural-idempotent ideal `N`.
pub fn unique_generator(a: &EvolutionAlgebra, nat: &Subspace, limits: &Limits) -> Result<Element> {
    check_space(a, nat)?;
    let in_n: Vec<Element> = nat
        .vectors(false, limits)?
        .filter(|v| !v.iter().all(Scalar::is_zero) && a.square(v) == *v)
        .collect();
    let natural = natural_idempotents(a, limits)?;
    let generating: Vec<&Element> = in_n.iter().filter(|e| natural.contains(e) && principal(a, e) == *nat).collect();
    if generating.is_empty() {
        return Err(Error::Precondition("not generated by a natural idempotent".into()));
    }
    if in_n.len() != 1 {
        return Err(Error::Invariant("natural-idempotent ideal holds several idempotents".into()));
    }
    Ok(in_n[0].clone())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoherentChoiceCheck {
    /// Every chosen element generates its ideal.
    pub valid: bool,
    /// Chosen elements `e` with `A·e ⊄ span{e}`.
    pub unstable_count: usize,
    /// `dim soc(A) − dim span(choices)`.
    pub bound: usize,
    pub prop82_bound_holds: bool,
}

/// Checks a choice of one element per minimal ideal. Every minimal ideal
/// must be assigned.
pub fn coherent_choice_check(
    a: &EvolutionAlgebra,
    choice: &[(Subspace, Element)],
    limits: &Limits,
) -> Result<CoherentChoiceCheck> {
    let field = a.field();
    let n = a.dim();
    let min_ids = minimal_ideals(a, limits)?;
    let mut chosen = Vec::with_capacity(min_ids.len());
    for i in &min_ids {
        let e = choice
            .iter()
            .find(|(k, _)| k == i)
            .map(|(_, e)| e.clone())
            .ok_or_else(|| Error::Precondition(format!("no element chosen for {i}")))?;
        if e.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: e.len(),
            });
        }
        chosen.push((i, e));
    }
    let valid = chosen.iter().all(|(i, e)| principal(a, e) == **i);
    let unstable_count = chosen
        .iter()
        .filter(|(_, e)| {
            let line = Subspace::span_unchecked(field, n, vec![e.clone()]);
            (0..n).any(|k| !line.contains_unchecked(&a.basis_mul(k, e)))
        })
        .count();
    let m = Subspace::span_unchecked(field, n, chosen.iter().map(|(_, e)| e.clone()).collect()).dim();
    let soc_dim = sum_all(field, n, &min_ids).dim();
    let bound = soc_dim.saturating_sub(m);
    Ok(CoherentChoiceCheck {
        valid,
        unstable_count,
        bound,
        prop82_bound_holds: unstable_count <= bound,
    })
}

/// Whether `i`, with the restricted product, is a simple algebra: `i² ≠ 0`
/// and every nonzero element generates all of `i` using products by `i` only.
pub fn is_simple_as_algebra(a: &EvolutionAlgebra, i: &Subspace, limits: &Limits) -> Result<bool> {
    check_space(a, i)?;
    if product_unchecked(a, i, i).is_zero() {
        return Ok(false);
    }
    for x in i.line_representatives(limits)? {
        let mut j = Subspace::span_unchecked(a.field(), a.dim(), vec![x]);
        loop {
            let next = j.sum_unchecked(&product_unchecked(a, i, &j));
            if next == j {
                break;
            }
            j = next;
        }
        if j != *i {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The subspace `i` as an evolution algebra in the natural basis `basis`.
pub fn ideal_as_algebra(a: &EvolutionAlgebra, basis: &NaturalBasisWitness) -> Result<EvolutionAlgebra> {
    let vs = basis.vectors();
    let field = a.field();
    let k = vs.len();
    let mut rows = Vec::with_capacity(k);
    for v in vs {
        let sq = a.square(v);
        rows.push(coordinates_in(field, vs, &sq).ok_or_else(|| Error::Precondition("not closed under products".into()))?);
    }
    EvolutionAlgebra::new(Matrix::from_rows(field, k, rows)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdeallySimple {
    pub minimal_ideally_simple: bool,
    pub evolution_minimal_ideally_simple: bool,
    pub with_nonzero_product: bool,
}

pub fn ideally_simple_predicates(a: &EvolutionAlgebra, limits: &Limits) -> Result<IdeallySimple> {
    let mut simple = true;
    let mut natural = true;
    let mut nonzero = true;
    for i in minimal_ideals(a, limits)? {
        simple &= is_simple_as_algebra(a, &i, limits)?;
        natural &= find_natural_basis(a, &i, limits)?.decision().is_yes();
        nonzero &= !product_unchecked(a, &i, &i).is_zero();
    }
    Ok(IdeallySimple {
        minimal_ideally_simple: simple,
        evolution_minimal_ideally_simple: simple && natural,
        with_nonzero_product: simple && natural && nonzero,
    })
}

/// A minimal ideal outside the natural part, with a generating nonzero
/// idempotent when one exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonNaturalSummand {
    pub ideal: Subspace,
    pub generator: Option<Element>,
}

/// Empirical FSEANI verdict for one dimension; `None` when the scan is over budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FseaniCheck {
    pub dim: usize,
    pub verdict: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub evolution_minimal_ideally_simple: bool,
    pub two_li: bool,
    pub sdni: usize,
    /// `dim Σ_{N ∈ NatMinId} N`.
    pub natural_part_dim: usize,
    pub natural_part_matches_sdni: bool,
    pub natural_part: Subspace,
    pub non_natural: Vec<NonNaturalSummand>,
    /// FSEANI scans for every `m ≤ n − s`.
    pub fseani: Vec<FseaniCheck>,
    /// All dimensions verified FSEANI; `None` if some scan was skipped.
    pub fseani_hypothesis: Option<bool>,
    pub unwitnessed: usize,
    /// `soc(A)` equals the natural part plus the ideals of the witnessed generators.
    pub equation_holds: bool,
    pub soc: Subspace,
}

/// Socle decomposition into the natural part and idempotent-generated
/// non-natural minimal ideals. Hypothesis failures are reported, not raised.
pub fn theorem108_report(a: &EvolutionAlgebra, limits: &Limits) -> Result<DecompositionReport> {
    let field = a.field();
    let n = a.dim();
    let report = partitions(a, limits)?;
    let pred = ideally_simple_predicates(a, limits)?;
    let natural_part = sum_all(field, n, &report.nat_min);
    let s = report.sdni;
    let idem = nonzero_idempotents(a, limits)?;
    let non_natural: Vec<NonNaturalSummand> = report
        .non_nat_min
        .iter()
        .map(|i| NonNaturalSummand {
            ideal: i.clone(),
            generator: idem
                .iter()
                .find(|e| i.contains_unchecked(e) && principal(a, e) == *i)
                .cloned(),
        })
        .collect();
    let mut fseani = Vec::new();
    for m in 1..=n.saturating_sub(s) {
        let verdict = match is_fseani(field, m, limits) {
            Ok(v) => Some(v),
            Err(e) if e.is_budget() => None,
            Err(e) => return Err(e),
        };
        fseani.push(FseaniCheck { dim: m, verdict });
    }
    let fseani_hypothesis = fseani
        .iter()
        .try_fold(true, |acc, c| c.verdict.map(|v| acc && v));
    let unwitnessed = non_natural.iter().filter(|x| x.generator.is_none()).count();
    let generated: Vec<Subspace> = non_natural
        .iter()
        .filter_map(|x| x.generator.as_ref().map(|g| principal(a, g)))
        .collect();
    let rebuilt = natural_part.sum_unchecked(&sum_all(field, n, &generated));
    Ok(DecompositionReport {
        evolution_minimal_ideally_simple: pred.evolution_minimal_ideally_simple,
        two_li: property_2li(a),
        sdni: s,
        natural_part_dim: natural_part.dim(),
        natural_part_matches_sdni: natural_part.dim() == s,
        natural_part,
        non_natural,
        fseani,
        fseani_hypothesis,
        unwitnessed,
        equation_holds: unwitnessed == 0 && rebuilt == report.soc,
        soc: report.soc,
    })
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

    #[test]
    fn socle_examples() {
        let f = gf(3);
        let d = make_example(Family::Diag(2), f).unwrap();
        assert!(socle(&d, &lim()).unwrap().is_full());
        assert!(ev_socle(&d, &lim()).unwrap().is_full());
        let az3 = make_example(Family::Z3Counterexample, f).unwrap();
        assert!(socle(&az3, &lim()).unwrap().is_full());
        assert!(ev_socle(&az3, &lim()).unwrap().is_full());
        let z1 = make_example(Family::Zero(1), f).unwrap();
        assert!(socle(&z1, &lim()).unwrap().is_full());
        assert!(ev_socle(&z1, &lim()).unwrap().is_full());
    }

    #[test]
    fn a_socles() {
        let f = gf(3);
        let d = make_example(Family::Diag(2), f).unwrap();
        let l1 = Subspace::coordinate(f, 2, &[0]);
        assert_eq!(a_socle(&d, &l1, &lim()).unwrap(), l1);
        let az3 = make_example(Family::Z3Counterexample, f).unwrap();
        assert!(a_socle(&az3, &Subspace::full(f, 2), &lim()).unwrap().is_full());
        assert!(a_socle(&d, &Subspace::full(f, 2), &lim()).is_err());
    }

    #[test]
    fn probe() {
        let f = gf(3);
        let d = make_example(Family::Diag(2), f).unwrap();
        assert!(soc_evsoc_probe(&d, &lim()).unwrap().soc_in_evsoc);
        let az3 = make_example(Family::Z3Counterexample, f).unwrap();
        assert!(soc_evsoc_probe(&az3, &lim()).unwrap().soc_in_evsoc);
    }

    #[test]
    fn partition_examples() {
        let f = gf(3);
        let d = make_example(Family::Diag(2), f).unwrap();
        let r = partitions(&d, &lim()).unwrap();
        assert_eq!(r.nat_min, vec![Subspace::coordinate(f, 2, &[1]), Subspace::coordinate(f, 2, &[0])]);
        assert!(r.non_nat_min.is_empty());
        assert_eq!(r.sdni, 2);
        assert!(r.soc_nid.is_full());
        assert!(r.faithful);
        let az3 = make_example(Family::Z3Counterexample, f).unwrap();
        let r = partitions(&az3, &lim()).unwrap();
        assert_eq!(r.sdni, 0);
        assert!(r.soc_nid.is_zero());
        assert_eq!(r.non_nat_min, vec![Subspace::full(f, 2)]);
        let z = make_example(Family::Zero(2), gf(2)).unwrap();
        let r = partitions(&z, &lim()).unwrap();
        assert_eq!(r.sdni, 0);
        assert_eq!(r.minimal_ideals.len(), 3);
        assert!(r.nat_min.is_empty());
    }

    #[test]
    fn generators() {
        let f = gf(3);
        let d = make_example(Family::Diag(2), f).unwrap();
        let l1 = Subspace::coordinate(f, 2, &[0]);
        assert_eq!(unique_generator(&d, &l1, &lim()).unwrap(), f.vector_from_ints(&[1, 0]));
        let l2 = Subspace::coordinate(f, 2, &[1]);
        assert_eq!(unique_generator(&d, &l2, &lim()).unwrap(), f.vector_from_ints(&[0, 1]));
        assert!(unique_generator(&d, &Subspace::full(f, 2), &lim()).is_err());
    }

    #[test]
    fn coherent_choices() {
        let f = gf(3);
        let d = make_example(Family::Diag(2), f).unwrap();
        let l1 = Subspace::coordinate(f, 2, &[0]);
        let l2 = Subspace::coordinate(f, 2, &[1]);
        let good = vec![(l1.clone(), f.vector_from_ints(&[1, 0])), (l2.clone(), f.vector_from_ints(&[0, 1]))];
        let c = coherent_choice_check(&d, &good, &lim()).unwrap();
        assert!(c.valid && c.prop82_bound_holds);
        assert_eq!((c.unstable_count, c.bound), (0, 0));
        let bad = vec![(l1.clone(), f.zero_vector(2)), (l2, f.vector_from_ints(&[0, 1]))];
        assert!(!coherent_choice_check(&d, &bad, &lim()).unwrap().valid);
        assert!(coherent_choice_check(&d, &good[..1], &lim()).is_err());
    }

    #[test]
    fn ideally_simple() {
        let f = gf(3);
        let az3 = make_example(Family::Z3Counterexample, f).unwrap();
        let twice = az3.direct_sum(&az3).unwrap();
        let p = ideally_simple_predicates(&twice, &lim()).unwrap();
        assert!(p.with_nonzero_product);
        let f5 = gf(5);
        let a4 = make_example(Family::FourDimNonsimpleMinimal, f5).unwrap();
        assert!(!ideally_simple_predicates(&a4, &lim()).unwrap().minimal_ideally_simple);
        let d = make_example(Family::Diag(2), f).unwrap();
        assert!(ideally_simple_predicates(&d, &lim()).unwrap().with_nonzero_product);
    }

    #[test]
    fn ideal_as_algebra_matches_subspace_check() {
        let f5 = gf(5);
        let a4 = make_example(Family::FourDimNonsimpleMinimal, f5).unwrap();
        let i = Subspace::span(f5, 4, &[f5.vector_from_ints(&[1, 1, 0, 0]), f5.vector_from_ints(&[0, 0, 1, 1])]).unwrap();
        let w = find_natural_basis(&a4, &i, &lim()).unwrap().found().unwrap();
        let sub = ideal_as_algebra(&a4, &w).unwrap();
        assert_eq!(
            crate::ideals::is_simple(&sub, &lim()).unwrap(),
            is_simple_as_algebra(&a4, &i, &lim()).unwrap()
        );
    }

    #[test]
    fn decomposition() {
        let f = gf(3);
        let d3 = make_example(Family::Diag(3), f).unwrap();
        let r = theorem108_report(&d3, &lim()).unwrap();
        assert_eq!(r.sdni, 3);
        assert!(r.non_natural.is_empty());
        assert!(r.natural_part_matches_sdni && r.equation_holds);
        let mixed = make_example(Family::Diag(1), f)
            .unwrap()
            .direct_sum(&make_example(Family::Z3Counterexample, f).unwrap())
            .unwrap();
        let r = theorem108_report(&mixed, &lim()).unwrap();
        assert_eq!(r.natural_part, Subspace::coordinate(f, 3, &[0]));
        assert_eq!(r.non_natural.len(), 1);
        assert_eq!(r.non_natural[0].ideal, Subspace::coordinate(f, 3, &[1, 2]));
        assert_eq!(r.unwitnessed, 1);
        assert_eq!(r.fseani_hypothesis, Some(false));
        assert!(!r.equation_holds);
        let az3 = make_example(Family::Z3Counterexample, f).unwrap();
        let r = theorem108_report(&az3, &lim()).unwrap();
        assert!(r.two_li);
        assert_eq!((r.sdni, r.unwitnessed), (0, 1));
    }
}
