//! Brute-force oracles on raw residues, independent of the library's linear algebra.
#![allow(dead_code)]

use std::collections::BTreeSet;

use evoalg::{EvolutionAlgebra, Field, Subspace};

pub type V = Vec<u64>;
pub type Space = BTreeSet<V>;

#[derive(Clone, Debug)]
pub struct Oracle {
    pub p: u64,
    pub n: usize,
    pub sq: Vec<V>,
}

pub fn gf(p: u64) -> Field {
    Field::prime(p).unwrap()
}

impl Oracle {
    pub fn new(a: &EvolutionAlgebra) -> Oracle {
        let p = a.field().modulus().expect("prime field");
        let n = a.dim();
        let sq = (0..n)
            .map(|i| a.basis_square(i).iter().map(|x| x.as_residue().unwrap()).collect())
            .collect();
        Oracle { p, n, sq }
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> V {
        let mut out = vec![0; self.n];
        for i in 0..self.n {
            let c = x[i] * y[i] % self.p;
            if c != 0 {
                for (o, s) in out.iter_mut().zip(&self.sq[i]) {
                    *o = (*o + c * s) % self.p;
                }
            }
        }
        out
    }

    pub fn vectors(&self) -> Vec<V> {
        all_vectors(self.p, self.n)
    }

    pub fn unit(&self, i: usize) -> V {
        let mut v = vec![0; self.n];
        v[i] = 1;
        v
    }

    /// Closed under multiplication by every basis vector.
    pub fn is_ideal(&self, s: &Space) -> bool {
        s.iter().all(|x| (0..self.n).all(|i| s.contains(&self.mul(&self.unit(i), x))))
    }

    pub fn is_subalgebra(&self, s: &Space) -> bool {
        s.iter().all(|x| s.iter().all(|y| s.contains(&self.mul(x, y))))
    }

    /// Some basis of `s` has pairwise zero products.
    pub fn has_natural_basis(&self, s: &Space) -> bool {
        self.natural_basis(s).is_some()
    }

    pub fn natural_basis(&self, s: &Space) -> Option<Vec<V>> {
        let k = dim_of(self.p, s);
        let nonzero: Vec<V> = s.iter().filter(|v| v.iter().any(|&c| c != 0)).cloned().collect();
        let mut chosen = Vec::new();
        self.orthogonal_pick(&nonzero, 0, k, &mut chosen, s.len())
    }

    fn orthogonal_pick(&self, pool: &[V], start: usize, k: usize, chosen: &mut Vec<V>, size: usize) -> Option<Vec<V>> {
        if chosen.len() == k {
            return (span(self.p, self.n, chosen).len() == size).then(|| chosen.clone());
        }
        for i in start..pool.len() {
            let v = &pool[i];
            if chosen.iter().all(|c| is_zero(&self.mul(c, v))) && !span(self.p, self.n, chosen).contains(v) {
                chosen.push(v.clone());
                if let Some(b) = self.orthogonal_pick(pool, i + 1, k, chosen, size) {
                    return Some(b);
                }
                chosen.pop();
            }
        }
        None
    }

    pub fn ideals(&self) -> Vec<Space> {
        all_subspaces(self.p, self.n).into_iter().filter(|s| self.is_ideal(s)).collect()
    }

    pub fn evolution_ideals(&self) -> Vec<Space> {
        self.ideals().into_iter().filter(|s| self.has_natural_basis(s)).collect()
    }

    /// Every ideal is the sum of the principal ideals of its elements, so
    /// closing the principal ideals under sums finds them all. Suits larger p^n.
    pub fn ideals_from_principal(&self) -> Vec<Space> {
        let mut found: BTreeSet<Space> = self.vectors().iter().map(|v| self.ideal_of(std::slice::from_ref(v))).collect();
        let principal: Vec<Space> = found.iter().cloned().collect();
        let mut frontier: Vec<Space> = principal.clone();
        while let Some(s) = frontier.pop() {
            for t in &principal {
                if !t.is_subset(&s) {
                    let u = sum(self.p, self.n, &s, t);
                    if found.insert(u.clone()) {
                        frontier.push(u);
                    }
                }
            }
        }
        found.into_iter().collect()
    }

    pub fn idempotents(&self) -> Vec<V> {
        self.vectors().into_iter().filter(|x| self.mul(x, x) == *x).collect()
    }

    /// Smallest ideal containing `gens`: saturate a basis under multiplication by each `e_i`.
    pub fn ideal_of(&self, gens: &[V]) -> Space {
        let mut basis = basis_of(self.p, self.n, gens);
        let mut s = span(self.p, self.n, &basis);
        let mut k = 0;
        while k < basis.len() {
            for i in 0..self.n {
                let v = self.mul(&self.unit(i), &basis[k]);
                if !s.contains(&v) {
                    s = extend(self.p, &s, &v);
                    basis.push(v);
                }
            }
            k += 1;
        }
        s
    }

    pub fn minimal_ideals(&self) -> Vec<Space> {
        let nonzero: Vec<Space> = self.ideals().into_iter().filter(|s| s.len() > 1).collect();
        minimal_of(&nonzero)
    }

    pub fn is_simple(&self) -> bool {
        let ids = self.ideals();
        let full = self.vectors().len();
        let square = span(
            self.p,
            self.n,
            &(0..self.n).map(|i| self.sq[i].clone()).collect::<Vec<_>>(),
        );
        square.len() > 1 && ids.iter().all(|s| s.len() == 1 || s.len() == full)
    }
}

pub fn is_zero(v: &[u64]) -> bool {
    v.iter().all(|&c| c == 0)
}

pub fn all_vectors(p: u64, n: usize) -> Vec<V> {
    let total = p.pow(n as u32);
    (0..total)
        .map(|mut idx| {
            let mut v = vec![0; n];
            for k in (0..n).rev() {
                v[k] = idx % p;
                idx /= p;
            }
            v
        })
        .collect()
}

/// All linear combinations, by repeated closure under addition and scaling.
pub fn span(p: u64, n: usize, gens: &[V]) -> Space {
    let mut s: Space = BTreeSet::new();
    s.insert(vec![0; n]);
    for g in gens {
        if !s.contains(g) {
            s = extend(p, &s, g);
        }
    }
    s
}

/// `{x + c g : x ∈ s, c ∈ GF(p)}`.
pub fn extend(p: u64, s: &Space, g: &[u64]) -> Space {
    let mut out = s.clone();
    for c in 1..p {
        for x in s {
            out.insert(x.iter().zip(g).map(|(a, b)| (a + c * b) % p).collect());
        }
    }
    out
}

pub fn dim_of(p: u64, s: &Space) -> usize {
    let mut k = 0;
    let mut size = 1;
    while size < s.len() {
        size *= p as usize;
        k += 1;
    }
    k
}

/// Every subspace, grown one vector at a time from {0}.
pub fn all_subspaces(p: u64, n: usize) -> Vec<Space> {
    let vs = all_vectors(p, n);
    let mut seen: BTreeSet<Space> = BTreeSet::new();
    let mut frontier = vec![span(p, n, &[])];
    seen.insert(frontier[0].clone());
    while let Some(s) = frontier.pop() {
        for v in &vs {
            if !s.contains(v) {
                let t = extend(p, &s, v);
                if seen.insert(t.clone()) {
                    frontier.push(t);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// A spanning subset picked greedily.
pub fn basis_of(p: u64, n: usize, gens: &[V]) -> Vec<V> {
    let mut out: Vec<V> = Vec::new();
    let mut s = span(p, n, &[]);
    for g in gens {
        if !s.contains(g) {
            s = extend(p, &s, g);
            out.push(g.clone());
        }
    }
    out
}

pub fn sum(p: u64, _n: usize, a: &Space, b: &Space) -> Space {
    let mut s = a.clone();
    for v in b {
        if !s.contains(v) {
            s = extend(p, &s, v);
        }
    }
    s
}

pub fn minimal_of(family: &[Space]) -> Vec<Space> {
    family
        .iter()
        .filter(|s| !family.iter().any(|t| t.len() < s.len() && t.is_subset(s)))
        .cloned()
        .collect()
}

pub fn maximal_of(family: &[Space]) -> Vec<Space> {
    family
        .iter()
        .filter(|s| !family.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
        .cloned()
        .collect()
}

/// The oracle's view of a library subspace.
pub fn to_space(s: &Subspace) -> Space {
    let p = s.field().modulus().unwrap();
    let gens: Vec<V> = s
        .basis()
        .iter()
        .map(|v| v.iter().map(|x| x.as_residue().unwrap()).collect())
        .collect();
    span(p, s.ambient_dim(), &gens)
}

pub fn to_v(x: &[evoalg::Scalar]) -> V {
    x.iter().map(|c| c.as_residue().unwrap()).collect()
}

pub fn from_v(f: Field, x: &[u64]) -> Vec<evoalg::Scalar> {
    x.iter().map(|&c| f.residue(c)).collect()
}
