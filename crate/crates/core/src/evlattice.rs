//! Finite binary related sets with generalized bounds, the ideal lattice and
//! evolution-ideal poset of an algebra, Evido/Evidb/MinEvid/MaxEvid, the
//! evlattice check, breakups/breakdowns, definable lattices and cuts of
//! unicity, tight chains, and DOT export.

use std::collections::BTreeMap;
use std::fmt::{self, Display, Write as _};

use serde::Serialize;

use crate::algebra::EvolutionAlgebra;
use crate::error::{Error, Result};
use crate::exactalg::{enumerate_subspaces, Subspace};
use crate::ideals::{enumerate_ideals, maximal_members, minimal_members, IdealMode};
use crate::limits::Limits;
use crate::natural::enumerate_evolution_ideals;

/// A finite set with an arbitrary binary relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteBrset<T> {
    elements: Vec<T>,
    relation: Vec<Vec<bool>>,
}

/// Index sets produced by [`FiniteBrset::bounds`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
    pub infima: Vec<usize>,
    pub suprema: Vec<usize>,
}

impl<T> FiniteBrset<T> {
    pub fn new(elements: Vec<T>, relation: Vec<Vec<bool>>) -> Result<FiniteBrset<T>> {
        let n = elements.len();
        if relation.len() != n || relation.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: relation.len(),
            });
        }
        Ok(FiniteBrset { elements, relation })
    }

    pub fn from_fn(elements: Vec<T>, rel: impl Fn(&T, &T) -> bool) -> FiniteBrset<T> {
        let relation = elements
            .iter()
            .map(|x| elements.iter().map(|y| rel(x, y)).collect())
            .collect();
        FiniteBrset { elements, relation }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        self.relation[i][j]
    }

    /// Lower/upper bounds of the index set `s`, and the infima/suprema among
    /// them, with no order axioms assumed.
    pub fn bounds(&self, s: &[usize]) -> Bounds {
        let n = self.len();
        let lower: Vec<usize> = (0..n).filter(|&a| s.iter().all(|&x| self.relation[a][x])).collect();
        let upper: Vec<usize> = (0..n).filter(|&b| s.iter().all(|&x| self.relation[x][b])).collect();
        let infima = lower
            .iter()
            .copied()
            .filter(|&a| lower.iter().all(|&y| self.relation[y][a]))
            .collect();
        let suprema = upper
            .iter()
            .copied()
            .filter(|&b| upper.iter().all(|&z| self.relation[b][z]))
            .collect();
        Bounds {
            lower,
            upper,
            infima,
            suprema,
        }
    }

    /// Pairs `(i, j)` with `i R j`, `i ≠ j`, and nothing strictly in between.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.relation[i][j] {
                    continue;
                }
                let between = (0..n).any(|k| k != i && k != j && self.relation[i][k] && self.relation[k][j]);
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Whether the chain `a ≤ b_1, ..., b_k ≤ c` (given as `[a, b_1, ..., b_k, c]`)
    /// admits no tightening: no `l, m` outside the interior with `(l, m) ≠ (a, c)`,
    /// `a ≤ l ≤ b_i ≤ m ≤ c` for every `i`. With an empty interior, this
    /// asks that nothing lies strictly between `a` and `c`.
    pub fn is_tight_chain(&self, chain: &[usize]) -> bool {
        if chain.len() < 2 {
            return true;
        }
        let a = chain[0];
        let c = chain[chain.len() - 1];
        let middle = &chain[1..chain.len() - 1];
        let n = self.len();
        let r = &self.relation;
        if middle.is_empty() {
            return !(0..n).any(|x| x != a && x != c && r[a][x] && r[x][c]);
        }
        for l in 0..n {
            if middle.contains(&l) || !r[a][l] || !middle.iter().all(|&b| r[l][b]) {
                continue;
            }
            #[allow(clippy::needless_range_loop)]
            for m in 0..n {
                if middle.contains(&m) || (l == a && m == c) {
                    continue;
                }
                if r[m][c] && middle.iter().all(|&b| r[b][m]) {
                    return false;
                }
            }
        }
        true
    }
}

impl<T: Display> FiniteBrset<T> {
    /// Graphviz `digraph` with one node per element and one edge per covering pair.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph {} {{", dot_id(name));
        let _ = writeln!(s, "  rankdir=BT;");
        for (i, e) in self.elements.iter().enumerate() {
            let _ = writeln!(s, "  n{} [label=\"{}\"];", i, e.to_string().replace('"', "\\\""));
        }
        for (i, j) in self.covering_pairs() {
            let _ = writeln!(s, "  n{i} -> n{j};");
        }
        s.push_str("}\n");
        s
    }
}

fn dot_id(name: &str) -> String {
    let cleaned: String = name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    if cleaned.is_empty() {
        "G".into()
    } else {
        cleaned
    }
}

fn inclusion(elements: Vec<Subspace>) -> FiniteBrset<Subspace> {
    FiniteBrset::from_fn(elements, |x, y| x.is_subspace_of(y).unwrap_or(false))
}

/// All ideals ordered by inclusion; inf is intersection, sup is the sum.
pub fn ideal_lattice(a: &EvolutionAlgebra, limits: &Limits) -> Result<FiniteBrset<Subspace>> {
    Ok(inclusion(enumerate_ideals(a, IdealMode::All, limits)?))
}

/// Evolution ideals ordered by inclusion.
pub fn evolution_ideal_poset(a: &EvolutionAlgebra, limits: &Limits) -> Result<FiniteBrset<Subspace>> {
    Ok(inclusion(enumerate_evolution_ideals(a, limits)?))
}

/// The evolution ideals of one algebra, computed once and queried by
/// containment.
#[derive(Clone, Debug)]
pub struct EvolutionIdeals {
    list: Vec<Subspace>,
}

impl EvolutionIdeals {
    pub fn new(a: &EvolutionAlgebra, limits: &Limits) -> Result<EvolutionIdeals> {
        Ok(EvolutionIdeals {
            list: enumerate_evolution_ideals(a, limits)?,
        })
    }

    pub fn list(&self) -> &[Subspace] {
        &self.list
    }

    pub fn contains(&self, u: &Subspace) -> bool {
        self.list.binary_search(u).is_ok()
    }

    /// Evolution ideals containing `s`.
    pub fn evido(&self, s: &Subspace) -> Vec<Subspace> {
        self.list.iter().filter(|x| s.is_subspace_of_unchecked(x)).cloned().collect()
    }

    /// Evolution ideals contained in `s`.
    pub fn evidb(&self, s: &Subspace) -> Vec<Subspace> {
        self.list.iter().filter(|x| x.is_subspace_of_unchecked(s)).cloned().collect()
    }

    pub fn min_evid(&self, s: &Subspace) -> Vec<Subspace> {
        minimal_members(&self.evido(s))
    }

    pub fn max_evid(&self, s: &Subspace) -> Vec<Subspace> {
        maximal_members(&self.evidb(s))
    }

    /// Checks the evlattice laws for every pair: each member of
    /// `MaxEvid(X ∩ Y)` lies in `X ∩ Y`, each member of `MinEvid(X ∪ Y)`
    /// contains `X + Y`, and both fronts are nonempty antichains.
    pub fn verify(&self) -> bool {
        for (i, x) in self.list.iter().enumerate() {
            for y in &self.list[i + 1..] {
                let meet = x.intersect_unchecked(y);
                let join = x.sum_unchecked(y);
                let lo = self.max_evid(&meet);
                let hi = self.min_evid(&join);
                if lo.is_empty() || hi.is_empty() || !is_antichain(&lo) || !is_antichain(&hi) {
                    return false;
                }
                if !lo.iter().all(|z| z.is_subspace_of_unchecked(&meet)) {
                    return false;
                }
                if !hi.iter().all(|z| join.is_subspace_of_unchecked(z)) {
                    return false;
                }
            }
        }
        true
    }

    /// Pairs of evolution ideals whose sum is not an evolution ideal.
    pub fn breakups(&self) -> Vec<(Subspace, Subspace)> {
        self.pairs_where(|x, y| !self.contains(&x.sum_unchecked(y)))
    }

    /// Pairs of evolution ideals whose intersection is not an evolution ideal.
    pub fn breakdowns(&self) -> Vec<(Subspace, Subspace)> {
        self.pairs_where(|x, y| !self.contains(&x.intersect_unchecked(y)))
    }

    fn pairs_where(&self, pred: impl Fn(&Subspace, &Subspace) -> bool) -> Vec<(Subspace, Subspace)> {
        let mut out = Vec::new();
        for (i, x) in self.list.iter().enumerate() {
            for y in &self.list[i + 1..] {
                if pred(x, y) {
                    out.push((x.clone(), y.clone()));
                }
            }
        }
        out
    }
}

pub fn is_antichain(family: &[Subspace]) -> bool {
    family.iter().enumerate().all(|(i, x)| {
        family
            .iter()
            .enumerate()
            .all(|(j, y)| i == j || !x.is_subspace_of_unchecked(y))
    })
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

pub fn evido(a: &EvolutionAlgebra, s: &Subspace, limits: &Limits) -> Result<Vec<Subspace>> {
    check_space(a, s)?;
    Ok(EvolutionIdeals::new(a, limits)?.evido(s))
}

pub fn evidb(a: &EvolutionAlgebra, s: &Subspace, limits: &Limits) -> Result<Vec<Subspace>> {
    check_space(a, s)?;
    Ok(EvolutionIdeals::new(a, limits)?.evidb(s))
}

/// Inclusion-minimal evolution ideals containing `s`.
pub fn min_evid(a: &EvolutionAlgebra, s: &Subspace, limits: &Limits) -> Result<Vec<Subspace>> {
    check_space(a, s)?;
    Ok(EvolutionIdeals::new(a, limits)?.min_evid(s))
}

/// Inclusion-maximal evolution ideals contained in `s`.
pub fn max_evid(a: &EvolutionAlgebra, s: &Subspace, limits: &Limits) -> Result<Vec<Subspace>> {
    check_space(a, s)?;
    Ok(EvolutionIdeals::new(a, limits)?.max_evid(s))
}

/// The unique member of `MinEvid(s)`, if there is exactly one.
pub fn minevid(a: &EvolutionAlgebra, s: &Subspace, limits: &Limits) -> Result<Option<Subspace>> {
    Ok(single(min_evid(a, s, limits)?))
}

/// The unique member of `MaxEvid(s)`, if there is exactly one.
pub fn maxevid(a: &EvolutionAlgebra, s: &Subspace, limits: &Limits) -> Result<Option<Subspace>> {
    Ok(single(max_evid(a, s, limits)?))
}

fn single(mut v: Vec<Subspace>) -> Option<Subspace> {
    if v.len() == 1 {
        v.pop()
    } else {
        None
    }
}

pub fn verify_evlattice(a: &EvolutionAlgebra, limits: &Limits) -> Result<bool> {
    Ok(EvolutionIdeals::new(a, limits)?.verify())
}

pub fn lattice_breakups(a: &EvolutionAlgebra, limits: &Limits) -> Result<Vec<(Subspace, Subspace)>> {
    Ok(EvolutionIdeals::new(a, limits)?.breakups())
}

pub fn lattice_breakdowns(a: &EvolutionAlgebra, limits: &Limits) -> Result<Vec<(Subspace, Subspace)>> {
    Ok(EvolutionIdeals::new(a, limits)?.breakdowns())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemilatticedReport {
    pub inf_semilatticed: bool,
    pub sup_semilatticed: bool,
    pub latticed: bool,
    /// First subspace with `|MinEvid| ≠ 1`.
    #[serde(skip)]
    pub inf_witness: Option<Subspace>,
    /// First subspace with `|MaxEvid| ≠ 1`.
    #[serde(skip)]
    pub sup_witness: Option<Subspace>,
}

/// Whether `minevid(S)` and `maxevid(S)` exist for every subspace `S`.
pub fn semilatticed_predicates(a: &EvolutionAlgebra, limits: &Limits) -> Result<SemilatticedReport> {
    let ev = EvolutionIdeals::new(a, limits)?;
    let mut inf_witness = None;
    let mut sup_witness = None;
    for s in enumerate_subspaces(a.field(), a.dim(), limits)? {
        if inf_witness.is_none() && ev.min_evid(&s).len() != 1 {
            inf_witness = Some(s.clone());
        }
        if sup_witness.is_none() && ev.max_evid(&s).len() != 1 {
            sup_witness = Some(s);
        }
        if inf_witness.is_some() && sup_witness.is_some() {
            break;
        }
    }
    let inf_semilatticed = inf_witness.is_none();
    let sup_semilatticed = sup_witness.is_none();
    Ok(SemilatticedReport {
        inf_semilatticed,
        sup_semilatticed,
        latticed: inf_semilatticed && sup_semilatticed,
        inf_witness,
        sup_witness,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Over,
    Below,
}

impl std::str::FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Direction> {
        match s {
            "over" => Ok(Direction::Over),
            "below" => Ok(Direction::Below),
            other => Err(Error::Precondition(format!("unknown direction `{other}`"))),
        }
    }
}

/// A lattice `(H, ⊆, f', g')` whose meets lie in the `MaxEvid` fronts and
/// whose joins lie in the `MinEvid` fronts. Members are sorted; `meets` and
/// `joins` are keyed by member index pairs `(i, j)`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinableLattice {
    members: Vec<Subspace>,
    meets: BTreeMap<(usize, usize), usize>,
    joins: BTreeMap<(usize, usize), usize>,
}

impl DefinableLattice {
    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    fn index(&self, x: &Subspace) -> Option<usize> {
        self.members.binary_search(x).ok()
    }

    fn key(i: usize, j: usize) -> (usize, usize) {
        (i.min(j), i.max(j))
    }

    pub fn meet(&self, x: &Subspace, y: &Subspace) -> Option<&Subspace> {
        let (i, j) = (self.index(x)?, self.index(y)?);
        if i == j {
            return Some(&self.members[i]);
        }
        self.meets.get(&Self::key(i, j)).map(|&k| &self.members[k])
    }

    pub fn join(&self, x: &Subspace, y: &Subspace) -> Option<&Subspace> {
        let (i, j) = (self.index(x)?, self.index(y)?);
        if i == j {
            return Some(&self.members[i]);
        }
        self.joins.get(&Self::key(i, j)).map(|&k| &self.members[k])
    }

    /// `self ⊆ other` with every meet and join of `self` preserved in `other`.
    pub fn le_latt(&self, other: &DefinableLattice) -> bool {
        if !self.members.iter().all(|x| other.index(x).is_some()) {
            return false;
        }
        for (i, x) in self.members.iter().enumerate() {
            for y in &self.members[i + 1..] {
                if self.meet(x, y) != other.meet(x, y) || self.join(x, y) != other.join(x, y) {
                    return false;
                }
            }
        }
        true
    }
}

impl Display for DefinableLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

fn candidates(ev: &EvolutionIdeals, s: &Subspace, direction: Direction) -> Vec<Subspace> {
    match direction {
        Direction::Over => ev.evido(s),
        Direction::Below => ev.evidb(s),
    }
}

/// Every nonempty lattice definable over (or below) `S`. Refuses when the
/// candidate poset has more than `size_limit` members.
pub fn definable_lattices(
    a: &EvolutionAlgebra,
    s: &Subspace,
    direction: Direction,
    size_limit: usize,
    limits: &Limits,
) -> Result<Vec<DefinableLattice>> {
    check_space(a, s)?;
    let ev = EvolutionIdeals::new(a, limits)?;
    definable_from(&ev, s, direction, size_limit)
}

fn definable_from(
    ev: &EvolutionIdeals,
    s: &Subspace,
    direction: Direction,
    size_limit: usize,
) -> Result<Vec<DefinableLattice>> {
    let cands = candidates(ev, s, direction);
    let k = cands.len();
    if k > size_limit || k >= 63 {
        return Err(Error::budget("definable-lattice candidates", k as u128, size_limit as u64));
    }
    let sub = |i: usize, j: usize| cands[i].is_subspace_of_unchecked(&cands[j]);
    // Fronts for every candidate pair, as candidate-index membership tables.
    let mut inf_front = vec![vec![Vec::new(); k]; k];
    let mut sup_front = vec![vec![Vec::new(); k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let lo = ev.max_evid(&cands[i].intersect_unchecked(&cands[j]));
            let hi = ev.min_evid(&cands[i].sum_unchecked(&cands[j]));
            inf_front[i][j] = (0..k).map(|t| lo.contains(&cands[t])).collect();
            sup_front[i][j] = (0..k).map(|t| hi.contains(&cands[t])).collect();
        }
    }
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << k) {
        let h: Vec<usize> = (0..k).filter(|&t| mask >> t & 1 == 1).collect();
        let mut meets = BTreeMap::new();
        let mut joins = BTreeMap::new();
        let mut ok = true;
        'pairs: for (x, &i) in h.iter().enumerate() {
            for (y, &j) in h.iter().enumerate().skip(x + 1) {
                let lower: Vec<usize> = h.iter().copied().filter(|&t| sub(t, i) && sub(t, j)).collect();
                let inf = lower.iter().copied().find(|&t| lower.iter().all(|&u| sub(u, t)));
                let upper: Vec<usize> = h.iter().copied().filter(|&t| sub(i, t) && sub(j, t)).collect();
                let sup = upper.iter().copied().find(|&t| upper.iter().all(|&u| sub(t, u)));
                match (inf, sup) {
                    (Some(m), Some(jn)) if inf_front[i][j][m] && sup_front[i][j][jn] => {
                        let pos = |t: usize| h.iter().position(|&q| q == t).expect("member");
                        meets.insert((x, y), pos(m));
                        joins.insert((x, y), pos(jn));
                    }
                    _ => {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
        }
        if ok {
            out.push(DefinableLattice {
                members: h.iter().map(|&t| cands[t].clone()).collect(),
                meets,
                joins,
            });
        }
    }
    Ok(out)
}

/// The `≤_latt`-maximal members of a family of definable lattices.
pub fn maximal_lattices(family: &[DefinableLattice]) -> Vec<DefinableLattice> {
    family
        .iter()
        .enumerate()
        .filter(|(i, l)| {
            !family
                .iter()
                .enumerate()
                .any(|(j, m)| *i != j && m.members.len() > l.members.len() && l.le_latt(m))
        })
        .map(|(_, l)| l.clone())
        .collect()
}

pub fn maximal_definable(
    a: &EvolutionAlgebra,
    s: &Subspace,
    direction: Direction,
    size_limit: usize,
    limits: &Limits,
) -> Result<Vec<DefinableLattice>> {
    Ok(maximal_lattices(&definable_lattices(a, s, direction, size_limit, limits)?))
}

/// Exactly one maximal definable lattice.
pub fn is_cut_of_unicity(
    a: &EvolutionAlgebra,
    s: &Subspace,
    direction: Direction,
    size_limit: usize,
    limits: &Limits,
) -> Result<bool> {
    Ok(maximal_definable(a, s, direction, size_limit, limits)?.len() == 1)
}

/// Outcome of replaying the uniqueness consequences of a cut of unicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutReplay {
    /// `S` is not a cut of unicity; nothing to check.
    NotACut,
    Holds,
    /// A pair `(I, J)` whose conclusion fails.
    Fails(Subspace, Subspace),
}

/// Replays the pairwise consequences of a cut of unicity on `S`.
///
/// Over: for `I ≠ J` containing `S`, if some `R ∈ MaxEvid(I ∩ J)` contains `S`
/// then `MinEvid(I + J)` is a singleton and that `R` is the only such one.
/// Below is dual. With `finite_form`, the hypothesis is weakened to "some
/// evolution ideal `R` with `S ⊆ R ⊆ I ∩ J`" (dually `I + J ⊆ R ⊆ S`) and the
/// conclusion asks for a unique maximal (dually minimal) such `R`.
pub fn replay_cut_consequences(
    a: &EvolutionAlgebra,
    s: &Subspace,
    direction: Direction,
    finite_form: bool,
    size_limit: usize,
    limits: &Limits,
) -> Result<CutReplay> {
    check_space(a, s)?;
    let ev = EvolutionIdeals::new(a, limits)?;
    if maximal_lattices(&definable_from(&ev, s, direction, size_limit)?).len() != 1 {
        return Ok(CutReplay::NotACut);
    }
    let cands = candidates(&ev, s, direction);
    for (x, i) in cands.iter().enumerate() {
        for j in &cands[x + 1..] {
            let meet = i.intersect_unchecked(j);
            let join = i.sum_unchecked(j);
            let holds = match (direction, finite_form) {
                (Direction::Over, false) => {
                    let rs: Vec<Subspace> = ev
                        .max_evid(&meet)
                        .into_iter()
                        .filter(|r| s.is_subspace_of_unchecked(r))
                        .collect();
                    rs.is_empty() || (rs.len() == 1 && ev.min_evid(&join).len() == 1)
                }
                (Direction::Below, false) => {
                    let rs: Vec<Subspace> = ev
                        .min_evid(&join)
                        .into_iter()
                        .filter(|r| r.is_subspace_of_unchecked(s))
                        .collect();
                    rs.is_empty() || (rs.len() == 1 && ev.max_evid(&meet).len() == 1)
                }
                (Direction::Over, true) => {
                    let rs: Vec<Subspace> = ev
                        .evidb(&meet)
                        .into_iter()
                        .filter(|r| s.is_subspace_of_unchecked(r))
                        .collect();
                    rs.is_empty() || (maximal_members(&rs).len() == 1 && ev.min_evid(&join).len() == 1)
                }
                (Direction::Below, true) => {
                    let rs: Vec<Subspace> = ev
                        .evido(&join)
                        .into_iter()
                        .filter(|r| r.is_subspace_of_unchecked(s))
                        .collect();
                    rs.is_empty() || (minimal_members(&rs).len() == 1 && ev.max_evid(&meet).len() == 1)
                }
            };
            if !holds {
                return Ok(CutReplay::Fails(i.clone(), j.clone()));
            }
        }
    }
    Ok(CutReplay::Holds)
}

/// [`FiniteBrset::is_tight_chain`] on the evolution-ideal poset, with the
/// chain given as subspaces.
pub fn tight_chain_check(poset: &FiniteBrset<Subspace>, chain: &[Subspace]) -> Result<bool> {
    let idx: Option<Vec<usize>> = chain
        .iter()
        .map(|c| poset.elements().iter().position(|e| e == c))
        .collect();
    let idx = idx.ok_or_else(|| Error::Precondition("chain element outside the poset".into()))?;
    Ok(poset.is_tight_chain(&idx))
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

    #[test]
    fn bounds_examples() {
        let f = gf(2);
        let d = make_example(Family::Diag(2), f).unwrap();
        let lat = ideal_lattice(&d, &lim()).unwrap();
        let pos = |u: &Subspace| lat.elements().iter().position(|e| e == u).unwrap();
        let l1 = pos(&Subspace::coordinate(f, 2, &[0]));
        let l2 = pos(&Subspace::coordinate(f, 2, &[1]));
        let b = lat.bounds(&[l1, l2]);
        assert_eq!(b.infima, vec![pos(&Subspace::zero(f, 2))]);
        assert_eq!(b.suprema, vec![pos(&Subspace::full(f, 2))]);
        let empty = FiniteBrset::new(vec![1, 2, 3], vec![vec![false; 3]; 3]).unwrap();
        assert_eq!(empty.bounds(&[0]), Bounds::default());
        let refl = FiniteBrset::from_fn(vec![1, 2], |x, y| x == y);
        let b = refl.bounds(&[1]);
        assert!(b.lower.contains(&1) && b.upper.contains(&1));
    }

    #[test]
    fn lattices() {
        let az3 = make_example(Family::Z3Counterexample, gf(3)).unwrap();
        assert_eq!(ideal_lattice(&az3, &lim()).unwrap().len(), 2);
        let d = make_example(Family::Diag(2), gf(2)).unwrap();
        assert_eq!(ideal_lattice(&d, &lim()).unwrap().len(), 4);
        let z = make_example(Family::Zero(2), gf(2)).unwrap();
        assert_eq!(ideal_lattice(&z, &lim()).unwrap().len(), 5);
        assert_eq!(evolution_ideal_poset(&z, &lim()).unwrap().len(), 5);
    }

    #[test]
    fn evid_sets() {
        let f = gf(3);
        let d = make_example(Family::Diag(2), f).unwrap();
        let e1 = Subspace::coordinate(f, 2, &[0]);
        assert_eq!(min_evid(&d, &e1, &lim()).unwrap(), vec![e1.clone()]);
        assert_eq!(max_evid(&d, &Subspace::zero(f, 2), &lim()).unwrap(), vec![Subspace::zero(f, 2)]);
        let az3 = make_example(Family::Z3Counterexample, f).unwrap();
        assert_eq!(min_evid(&az3, &e1, &lim()).unwrap(), vec![Subspace::full(f, 2)]);
        assert_eq!(minevid(&az3, &e1, &lim()).unwrap(), Some(Subspace::full(f, 2)));
    }

    #[test]
    fn evlattice_checks() {
        let d = make_example(Family::Diag(2), gf(3)).unwrap();
        assert!(verify_evlattice(&d, &lim()).unwrap());
        assert!(lattice_breakups(&d, &lim()).unwrap().is_empty());
        assert!(lattice_breakdowns(&d, &lim()).unwrap().is_empty());
        let az3 = make_example(Family::Z3Counterexample, gf(3)).unwrap();
        assert!(verify_evlattice(&az3, &lim()).unwrap());
        assert!(semilatticed_predicates(&d, &lim()).unwrap().latticed);
        assert!(semilatticed_predicates(&az3, &lim()).unwrap().latticed);
    }

    #[test]
    fn definable() {
        let f = gf(3);
        let d = make_example(Family::Diag(2), f).unwrap();
        let zero = Subspace::zero(f, 2);
        let max = maximal_definable(&d, &zero, Direction::Over, 12, &lim()).unwrap();
        assert_eq!(max.len(), 1);
        assert_eq!(max[0].members().len(), 4);
        assert!(is_cut_of_unicity(&d, &zero, Direction::Over, 12, &lim()).unwrap());
        let full = Subspace::full(f, 2);
        let all = definable_lattices(&d, &full, Direction::Over, 12, &lim()).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].members(), std::slice::from_ref(&full));
        assert_eq!(
            replay_cut_consequences(&d, &zero, Direction::Over, false, 12, &lim()).unwrap(),
            CutReplay::Holds
        );
        assert!(definable_lattices(&d, &zero, Direction::Over, 3, &lim()).unwrap_err().is_budget());
    }

    #[test]
    fn tight_chains() {
        let f = gf(3);
        let az3 = make_example(Family::Z3Counterexample, f).unwrap();
        let p = evolution_ideal_poset(&az3, &lim()).unwrap();
        let chain = [Subspace::zero(f, 2), Subspace::full(f, 2)];
        assert!(tight_chain_check(&p, &chain).unwrap());
        let d = make_example(Family::Diag(2), f).unwrap();
        let p = evolution_ideal_poset(&d, &lim()).unwrap();
        assert!(!tight_chain_check(&p, &chain).unwrap());
        assert!(tight_chain_check(&p, &chain[..1]).unwrap());
        let with_mid = [Subspace::zero(f, 2), Subspace::coordinate(f, 2, &[0]), Subspace::full(f, 2)];
        assert!(tight_chain_check(&p, &with_mid).unwrap());
    }

    #[test]
    fn dot_export() {
        let d = make_example(Family::Diag(2), gf(2)).unwrap();
        let dot = ideal_lattice(&d, &lim()).unwrap().to_dot("ideals");
        assert!(dot.starts_with("digraph ideals {"));
        assert_eq!(dot.matches("->").count(), 4);
    }
}
