mod common;

use common::{gf, maximal_of, minimal_of, sum, to_space, Oracle, Space};
use evoalg::algebra::{census_algebra, census_size};
use evoalg::evlattice::{
    definable_lattices, evolution_ideal_poset, ideal_lattice, is_antichain, is_cut_of_unicity, maximal_lattices,
    replay_cut_consequences, semilatticed_predicates, tight_chain_check, CutReplay, Direction, EvolutionIdeals,
    FiniteBrset,
};
use evoalg::exactalg::enumerate_subspaces;
use evoalg::{make_example, EvolutionAlgebra, Family, Limits, Subspace};

fn lim() -> Limits {
    Limits::default()
}

fn census(p: u64, n: usize) -> Vec<EvolutionAlgebra> {
    let f = gf(p);
    (0..census_size(f, n, &lim()).unwrap()).map(|i| census_algebra(f, n, i)).collect()
}

fn small_censuses() -> Vec<EvolutionAlgebra> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.extend(census(2, n));
    }
    out.extend(census(3, 2));
    out
}

fn sorted(mut v: Vec<Space>) -> Vec<Space> {
    v.sort();
    v
}

#[test]
fn fronts_match_oracle() {
    for a in small_censuses() {
        let o = Oracle::new(&a);
        let evs = o.evolution_ideals();
        let ev = EvolutionIdeals::new(&a, &lim()).unwrap();
        for s in enumerate_subspaces(a.field(), a.dim(), &lim()).unwrap() {
            let os = to_space(&s);
            let over: Vec<Space> = evs.iter().filter(|e| os.is_subset(e)).cloned().collect();
            let below: Vec<Space> = evs.iter().filter(|e| e.is_subset(&os)).cloned().collect();
            let got_min = ev.min_evid(&s);
            let got_max = ev.max_evid(&s);
            assert!(is_antichain(&got_min) && is_antichain(&got_max));
            assert_eq!(sorted(got_min.iter().map(to_space).collect()), sorted(minimal_of(&over)), "{}", a.sq());
            assert_eq!(sorted(got_max.iter().map(to_space).collect()), sorted(maximal_of(&below)), "{}", a.sq());
        }
    }
}

#[test]
fn evolution_ideals_form_an_evlattice() {
    for a in small_censuses() {
        let o = Oracle::new(&a);
        let evs = o.evolution_ideals();
        assert!(EvolutionIdeals::new(&a, &lim()).unwrap().verify(), "{}", a.sq());
        for x in &evs {
            for y in &evs {
                let meet: Space = x.intersection(y).cloned().collect();
                let join = sum(o.p, o.n, x, y);
                let lo: Vec<Space> = evs.iter().filter(|e| e.is_subset(&meet)).cloned().collect();
                let hi: Vec<Space> = evs.iter().filter(|e| join.is_subset(e)).cloned().collect();
                assert!(!maximal_of(&lo).is_empty() && !minimal_of(&hi).is_empty());
            }
        }
    }
}

#[test]
fn breakups_and_breakdowns_match_oracle() {
    for a in small_censuses() {
        let o = Oracle::new(&a);
        let evs = sorted(o.evolution_ideals());
        let mut ups = 0;
        let mut downs = 0;
        for (i, x) in evs.iter().enumerate() {
            for y in &evs[i + 1..] {
                if evs.binary_search(&sum(o.p, o.n, x, y)).is_err() {
                    ups += 1;
                }
                if evs.binary_search(&x.intersection(y).cloned().collect()).is_err() {
                    downs += 1;
                }
            }
        }
        let ev = EvolutionIdeals::new(&a, &lim()).unwrap();
        assert_eq!(ev.breakups().len(), ups, "{}", a.sq());
        assert_eq!(ev.breakdowns().len(), downs, "{}", a.sq());
    }
}

#[test]
fn no_breakup_in_dimension_three_over_gf2() {
    assert!(census(2, 3)
        .iter()
        .all(|a| EvolutionIdeals::new(a, &lim()).unwrap().breakups().is_empty()));
}

#[test]
fn first_breakup_in_dimension_four() {
    let f = gf(2);
    let a = census_algebra(f, 4, 1336);
    let o = Oracle::new(&a);
    let evs = sorted(o.evolution_ideals());
    let oracle_breakup = evs.iter().enumerate().any(|(i, x)| {
        evs[i + 1..].iter().any(|y| evs.binary_search(&sum(2, 4, x, y)).is_err())
    });
    assert!(oracle_breakup);
    let ev = EvolutionIdeals::new(&a, &lim()).unwrap();
    assert!(!ev.breakups().is_empty());
    let report = semilatticed_predicates(&a, &lim()).unwrap();
    let oracle_sup = enumerate_subspaces(f, 4, &lim()).unwrap().iter().all(|s| {
        let os = to_space(s);
        let below: Vec<Space> = evs.iter().filter(|e| e.is_subset(&os)).cloned().collect();
        maximal_of(&below).len() == 1
    });
    assert_eq!(report.sup_semilatticed, oracle_sup);
    assert!(!report.sup_semilatticed);
    assert!(!report.latticed);
}

#[test]
fn semilatticed_examples() {
    for (family, p) in [(Family::Diag(2), 3), (Family::Z3Counterexample, 3)] {
        let a = make_example(family, gf(p)).unwrap();
        assert!(semilatticed_predicates(&a, &lim()).unwrap().latticed);
    }
}

#[test]
fn lattice_shapes() {
    let z3 = make_example(Family::Z3Counterexample, gf(3)).unwrap();
    assert_eq!(ideal_lattice(&z3, &lim()).unwrap().len(), 2);
    let d2 = make_example(Family::Diag(2), gf(2)).unwrap();
    assert_eq!(ideal_lattice(&d2, &lim()).unwrap().len(), 4);
    let zero = make_example(Family::Zero(2), gf(2)).unwrap();
    assert_eq!(ideal_lattice(&zero, &lim()).unwrap().len(), 5);
}

#[test]
fn tight_chains() {
    let f = gf(3);
    let z3 = make_example(Family::Z3Counterexample, f).unwrap();
    let poset = evolution_ideal_poset(&z3, &lim()).unwrap();
    let (zero, full) = (Subspace::zero(f, 2), Subspace::full(f, 2));
    assert!(tight_chain_check(&poset, &[zero.clone(), full.clone()]).unwrap());
    assert!(tight_chain_check(&poset, std::slice::from_ref(&full)).unwrap());
    let d2 = make_example(Family::Diag(2), f).unwrap();
    let poset = evolution_ideal_poset(&d2, &lim()).unwrap();
    assert!(!tight_chain_check(&poset, &[zero.clone(), full.clone()]).unwrap());
    let e1 = Subspace::coordinate(f, 2, &[0]);
    assert!(tight_chain_check(&poset, &[zero, e1, full]).unwrap());
}

#[test]
fn bounds_of_the_empty_relation_are_empty() {
    let b = FiniteBrset::from_fn(vec![0, 1, 2], |_, _| false).bounds(&[0, 1]);
    assert!(b.lower.is_empty() && b.upper.is_empty() && b.infima.is_empty() && b.suprema.is_empty());
}

#[test]
fn definable_lattice_examples() {
    let f = gf(3);
    let d2 = make_example(Family::Diag(2), f).unwrap();
    let zero = Subspace::zero(f, 2);
    let max = maximal_lattices(&definable_lattices(&d2, &zero, Direction::Over, 12, &lim()).unwrap());
    assert_eq!(max.len(), 1);
    assert_eq!(max[0].members(), EvolutionIdeals::new(&d2, &lim()).unwrap().list());
    let full = Subspace::full(f, 2);
    let over_full = definable_lattices(&d2, &full, Direction::Over, 12, &lim()).unwrap();
    assert_eq!(over_full.len(), 1);
    assert_eq!(over_full[0].members(), &[full]);
}

#[test]
fn definable_lattices_respect_the_size_limit() {
    let f = gf(2);
    let a = make_example(Family::Diag(3), f).unwrap();
    let err = definable_lattices(&a, &Subspace::zero(f, 3), Direction::Over, 4, &lim()).unwrap_err();
    assert!(err.is_budget());
}

#[test]
fn lattice_order_is_a_partial_order_and_maximal_lattices_dominate() {
    let mut checked = 0;
    for a in census(2, 2).into_iter().chain(census(3, 2)).chain(census(2, 3).into_iter().step_by(5)) {
        let f = a.field();
        for dir in [Direction::Over, Direction::Below] {
            let s = match dir {
                Direction::Over => Subspace::zero(f, a.dim()),
                Direction::Below => Subspace::full(f, a.dim()),
            };
            let family = match definable_lattices(&a, &s, dir, 12, &lim()) {
                Ok(family) => family,
                Err(e) if e.is_budget() => continue,
                Err(e) => panic!("{e}"),
            };
            if family.len() > 64 {
                continue;
            }
            for x in &family {
                assert!(x.le_latt(x));
                for y in &family {
                    if x.le_latt(y) && y.le_latt(x) {
                        assert_eq!(x, y);
                    }
                    for z in &family {
                        if x.le_latt(y) && y.le_latt(z) {
                            assert!(x.le_latt(z));
                        }
                    }
                }
            }
            let max = maximal_lattices(&family);
            for x in &family {
                assert!(max.iter().any(|m| x.le_latt(m)), "{}", a.sq());
            }
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn cuts_of_unicity_satisfy_their_consequences() {
    let mut cuts = 0;
    for a in small_censuses() {
        for s in enumerate_subspaces(a.field(), a.dim(), &lim()).unwrap() {
            for dir in [Direction::Over, Direction::Below] {
                let cut = match is_cut_of_unicity(&a, &s, dir, 12, &lim()) {
                    Ok(cut) => cut,
                    Err(e) if e.is_budget() => continue,
                    Err(e) => panic!("{e}"),
                };
                for finite in [false, true] {
                    match replay_cut_consequences(&a, &s, dir, finite, 12, &lim()).unwrap() {
                        CutReplay::NotACut => assert!(!cut),
                        CutReplay::Holds => assert!(cut),
                        CutReplay::Fails(i, j) => panic!("{}: S = {s}, {dir:?}, I = {i}, J = {j}", a.sq()),
                    }
                }
                cuts += cut as usize;
            }
        }
    }
    assert!(cuts > 0);
}
