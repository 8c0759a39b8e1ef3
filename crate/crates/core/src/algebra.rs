//! The evolution algebra object: structure matrix, product, supports, the
//! example families, and the plain-text definition format.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactalg::{format_vector, Field, Matrix, Scalar, Vector};
use crate::limits::{pow_sat, Limits};

/// Element coordinates in the defining natural basis.
pub type Element = Vector;

/// Evolution algebra given by `sq`, whose row `i` holds the coordinates of `e_i²`.
///
/// The defining basis is natural by construction: `e_i e_j = 0` for `i != j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvolutionAlgebra {
    field: Field,
    n: usize,
    sq: Matrix,
    label: Option<String>,
}

impl EvolutionAlgebra {
    pub fn new(sq: Matrix) -> Result<EvolutionAlgebra> {
        if sq.rows() != sq.cols() {
            return Err(Error::DimensionMismatch {
                expected: sq.rows(),
                found: sq.cols(),
            });
        }
        Ok(EvolutionAlgebra {
            field: sq.field(),
            n: sq.rows(),
            sq,
            label: None,
        })
    }

    pub fn from_ints(field: Field, rows: &[Vec<i64>]) -> Result<EvolutionAlgebra> {
        for r in rows {
            if r.len() != rows.len() {
                return Err(Error::DimensionMismatch {
                    expected: rows.len(),
                    found: r.len(),
                });
            }
        }
        let sq = if rows.is_empty() {
            Matrix::zeros(field, 0, 0)
        } else {
            Matrix::from_ints(field, rows)?
        };
        EvolutionAlgebra::new(sq)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Row convention: row `i` is `e_i²`.
    pub fn sq(&self) -> &Matrix {
        &self.sq
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// The column-convention structure matrix, `transpose(sq)`.
    pub fn structure_matrix_columns(&self) -> Matrix {
        self.sq.transpose()
    }

    /// Coordinates of `e_i²`.
    pub fn basis_square(&self, i: usize) -> &[Scalar] {
        self.sq.row(i)
    }

    pub fn basis_vector(&self, i: usize) -> Result<Element> {
        self.check_index(i)?;
        Ok(self.field.unit_vector(self.n, i))
    }

    pub fn zero_element(&self) -> Element {
        self.field.zero_vector(self.n)
    }

    /// Parses integer coordinates into an element.
    pub fn element(&self, coords: &[i64]) -> Result<Element> {
        self.check_len(coords.len())?;
        Ok(self.field.vector_from_ints(coords))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                dim: self.n,
            });
        }
        Ok(())
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: len,
            });
        }
        Ok(())
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Result<Element> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        Ok(self.mul(x, y))
    }

    /// `Σ x_i y_i e_i²` without length checks.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        let f = self.field;
        let mut out = f.zero_vector(self.n);
        for i in 0..self.n {
            if x[i].is_zero() || y[i].is_zero() {
                continue;
            }
            let c = f.mul(&x[i], &y[i]);
            f.axpy(&mut out, &c, self.sq.row(i));
        }
        out
    }

    pub fn square(&self, x: &[Scalar]) -> Element {
        self.mul(x, x)
    }

    /// `e_i · x = x_i e_i²`.
    pub fn basis_mul(&self, i: usize, x: &[Scalar]) -> Element {
        self.field.scale_vector(&x[i], self.sq.row(i))
    }

    pub fn support(&self, x: &[Scalar]) -> Vec<usize> {
        x.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn projection(&self, x: &[Scalar], j: usize) -> Result<Scalar> {
        self.check_len(x.len())?;
        self.check_index(j)?;
        Ok(x[j].clone())
    }

    /// Size of the support of `e_i²`.
    pub fn cesrb(&self, i: usize) -> Result<usize> {
        self.check_index(i)?;
        Ok(self.support(self.sq.row(i)).len())
    }

    /// A basis triple `(i, j, k)` with `(e_i e_j) e_k != e_i (e_j e_k)`, if any.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let basis: Vec<Element> = (0..self.n).map(|i| self.field.unit_vector(self.n, i)).collect();
        for i in 0..self.n {
            for j in 0..self.n {
                let ij = self.mul(&basis[i], &basis[j]);
                for k in 0..self.n {
                    let left = self.mul(&ij, &basis[k]);
                    let right = self.mul(&basis[i], &self.mul(&basis[j], &basis[k]));
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Associativity, decided on basis triples (enough by trilinearity).
    pub fn is_associative(&self) -> bool {
        self.associativity_violation().is_none()
    }

    /// Checks that every bracketing of `a^k` agrees, for `k <= depth`.
    pub fn power_associative_probe(&self, a: &[Scalar], depth: usize) -> Result<bool> {
        self.check_len(a.len())?;
        if depth > 10 {
            return Err(Error::Precondition("power-associativity depth is capped at 10".into()));
        }
        // powers[k] holds the distinct values of all bracketings of a^k.
        let mut powers: Vec<Vec<Element>> = vec![Vec::new(), vec![a.to_vec()]];
        for k in 2..=depth {
            let mut vals: Vec<Element> = Vec::new();
            for left in 1..k {
                for x in &powers[left] {
                    for y in &powers[k - left] {
                        let v = self.mul(x, y);
                        if !vals.contains(&v) {
                            vals.push(v);
                        }
                    }
                }
            }
            if vals.len() > 1 {
                return Ok(false);
            }
            powers.push(vals);
        }
        Ok(true)
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &EvolutionAlgebra) -> Result<EvolutionAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let n = self.n + other.n;
        let mut sq = Matrix::zeros(self.field, n, n);
        for i in 0..self.n {
            for j in 0..self.n {
                sq.set(i, j, self.sq.get(i, j).clone());
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                sq.set(self.n + i, self.n + j, other.sq.get(i, j).clone());
            }
        }
        let label = match (&self.label, &other.label) {
            (Some(a), Some(b)) => Some(format!("{a} + {b}")),
            _ => None,
        };
        Ok(EvolutionAlgebra {
            field: self.field,
            n,
            sq,
            label,
        })
    }

    /// Parses the plain-text definition format:
    ///
    /// ```text
    /// field GF(3)
    /// dim 2
    /// row 1 2
    /// row 1 1
    /// ```
    pub fn parse_definition(text: &str) -> Result<EvolutionAlgebra> {
        let mut field: Option<Field> = None;
        let mut dim: Option<usize> = None;
        let mut rows: Vec<Vector> = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let mut words = line.split_whitespace();
            let keyword = words.next().unwrap_or("");
            match (keyword, field, dim) {
                ("field", None, _) => {
                    let spec: Vec<&str> = words.collect();
                    if spec.len() != 1 {
                        return Err(err("expected `field GF(<p>)` or `field Q`".into()));
                    }
                    let f = parse_field_spec(spec[0]).map_err(|e| err(e.to_string()))?;
                    field = Some(f);
                }
                ("dim", Some(_), None) => {
                    let spec: Vec<&str> = words.collect();
                    if spec.len() != 1 {
                        return Err(err("expected `dim <n>`".into()));
                    }
                    let n: usize = spec[0]
                        .parse()
                        .map_err(|_| err(format!("invalid dimension `{}`", spec[0])))?;
                    dim = Some(n);
                }
                ("row", Some(f), Some(n)) => {
                    if rows.len() == n {
                        return Err(err(format!("row count exceeds dim {n}")));
                    }
                    let entries: Vec<&str> = words.collect();
                    if entries.len() != n {
                        return Err(err(format!("row has {} entries, dim is {n}", entries.len())));
                    }
                    let row = entries
                        .iter()
                        .map(|s| f.parse(s))
                        .collect::<Result<Vector>>()
                        .map_err(|e| err(e.to_string()))?;
                    rows.push(row);
                }
                ("field", Some(_), _) => return Err(err("duplicate `field` line".into())),
                ("dim", None, _) => return Err(err("`field` must come before `dim`".into())),
                ("dim", Some(_), Some(_)) => return Err(err("duplicate `dim` line".into())),
                ("row", _, _) => return Err(err("`row` before `field` and `dim`".into())),
                (other, _, _) => return Err(err(format!("unknown keyword `{other}`"))),
            }
        }
        let eof = |message: &str| Error::Parse {
            line: last_line.max(1),
            message: message.to_string(),
        };
        let field = field.ok_or_else(|| eof("missing `field` line"))?;
        let n = dim.ok_or_else(|| eof("missing `dim` line"))?;
        if rows.len() != n {
            return Err(eof(&format!("row count {} ≠ dim {n}", rows.len())));
        }
        let sq = Matrix::from_rows(field, n, rows)?;
        EvolutionAlgebra::new(sq)
    }

    /// Writes the definition format read by [`EvolutionAlgebra::parse_definition`].
    pub fn to_definition(&self) -> String {
        let mut out = String::new();
        if let Some(l) = &self.label {
            out.push_str(&format!("# {l}\n"));
        }
        out.push_str(&format!("field {}\ndim {}\n", self.field, self.n));
        for i in 0..self.n {
            let r: Vec<String> = self.sq.row(i).iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("row {}\n", r.join(" ")));
        }
        out
    }
}

fn parse_field_spec(s: &str) -> Result<Field> {
    if s == "Q" {
        return Ok(Field::rationals());
    }
    let p = s
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Precondition(format!("malformed field `{s}`")))?;
    let p: u64 = p
        .parse()
        .map_err(|_| Error::Precondition(format!("malformed field `{s}`")))?;
    Field::prime(p)
}

impl fmt::Display for EvolutionAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = &self.label {
            writeln!(f, "{l}")?;
        }
        write!(f, "evolution algebra of dimension {} over {}", self.n, self.field)?;
        for i in 0..self.n {
            write!(f, "\n  e{}^2 = {}", i + 1, format_vector(self.sq.row(i)))?;
        }
        Ok(())
    }
}

/// Product rules of the triangular family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangularVariant {
    /// `e_ij² = e_{i,j+1}`, `e_ii² = e_i1`.
    Cyclic,
    /// `e_ij² = j e_ij + (j+1) e_{i,j+1}`, `e_ii² = i e_ii + (i+1) e_i1`.
    Weighted,
    /// `e_ij² = e_ij + e_{i,j+1}`, `e_ii² = e_ii + e_i1`.
    UnitDiag,
}

/// Named example algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `e_i² = e_i`.
    Diag(usize),
    /// All products zero.
    Zero(usize),
    /// Two-dimensional, `e1² = e1 + 2e2`, `e2² = e1 + e2`; simple over GF(3)
    /// with no nonzero idempotent.
    Z3Counterexample,
    /// `e1² = -(e3+e4)`, `e2² = -(e1+e2)`, `e3² = e1+e2`, `e4² = e3+e4`.
    FourDimNonsimpleMinimal,
    /// Dimension `n(n+1)/2`, basis `e_ij` with `1 <= j <= i <= n`.
    Triangular(usize, TriangularVariant),
}

/// 0-based flat index of `e_ij` (1-based `i`, `j`) in the triangular family:
/// `(i-1)i/2 + j - 1`.
pub fn triangular_index(i: usize, j: usize) -> usize {
    (i - 1) * i / 2 + j - 1
}

fn characteristic_exceeds(field: Field, bound: u64) -> bool {
    let c = field.characteristic();
    c == 0 || c > bound
}

/// Builds a named example over `field`.
pub fn make_example(family: Family, field: Field) -> Result<EvolutionAlgebra> {
    let a = match family {
        Family::Diag(n) => EvolutionAlgebra::new(Matrix::identity(field, n))?.with_label(format!("diag({n})")),
        Family::Zero(n) => EvolutionAlgebra::new(Matrix::zeros(field, n, n))?.with_label(format!("zero({n})")),
        Family::Z3Counterexample => EvolutionAlgebra::from_ints(field, &[vec![1, 2], vec![1, 1]])?
            .with_label("z3_counterexample"),
        Family::FourDimNonsimpleMinimal => EvolutionAlgebra::from_ints(
            field,
            &[
                vec![0, 0, -1, -1],
                vec![-1, -1, 0, 0],
                vec![1, 1, 0, 0],
                vec![0, 0, 1, 1],
            ],
        )?
        .with_label("four_dim_nonsimple_minimal"),
        Family::Triangular(n, variant) => triangular(n, variant, field)?,
    };
    Ok(a)
}

fn triangular(n: usize, variant: TriangularVariant, field: Field) -> Result<EvolutionAlgebra> {
    match variant {
        TriangularVariant::Weighted if !characteristic_exceeds(field, n as u64 + 2) => {
            return Err(Error::Characteristic {
                characteristic: field.characteristic(),
                requirement: format!("char > {} (n + 2)", n + 2),
            })
        }
        TriangularVariant::UnitDiag if !characteristic_exceeds(field, 2) => {
            return Err(Error::Characteristic {
                characteristic: field.characteristic(),
                requirement: "char > 2".into(),
            })
        }
        _ => {}
    }
    let dim = n * (n + 1) / 2;
    let mut sq = Matrix::zeros(field, dim, dim);
    let bump = |sq: &mut Matrix, r: usize, c: usize, v: i64| {
        let cur = sq.get(r, c).clone();
        sq.set(r, c, field.add(&cur, &field.from_i64(v)));
    };
    for i in 1..=n {
        for j in 1..=i {
            let row = triangular_index(i, j);
            let next = if j < i { triangular_index(i, j + 1) } else { triangular_index(i, 1) };
            match variant {
                TriangularVariant::Cyclic => bump(&mut sq, row, next, 1),
                TriangularVariant::Weighted => {
                    let (a, b) = if j < i { (j, j + 1) } else { (i, i + 1) };
                    bump(&mut sq, row, row, a as i64);
                    bump(&mut sq, row, next, b as i64);
                }
                TriangularVariant::UnitDiag => {
                    bump(&mut sq, row, row, 1);
                    bump(&mut sq, row, next, 1);
                }
            }
        }
    }
    let name = match variant {
        TriangularVariant::Cyclic => "cyclic",
        TriangularVariant::Weighted => "weighted",
        TriangularVariant::UnitDiag => "unit-diag",
    };
    Ok(EvolutionAlgebra::new(sq)?.with_label(format!("triangular({n}, {name})")))
}

impl FromStr for TriangularVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cyclic" => Ok(TriangularVariant::Cyclic),
            "weighted" => Ok(TriangularVariant::Weighted),
            "unit-diag" | "unit_diag" => Ok(TriangularVariant::UnitDiag),
            _ => Err(Error::Precondition(format!("unknown triangular variant `{s}`"))),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `diag:N`, `zero:N`, `z3_counterexample`, `four_dim_nonsimple_minimal`,
    /// `triangular:N:VARIANT`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let size = |t: &str| -> Result<usize> {
            t.parse()
                .map_err(|_| Error::Precondition(format!("invalid size `{t}` in family `{s}`")))
        };
        match parts.as_slice() {
            ["diag", n] => Ok(Family::Diag(size(n)?)),
            ["zero", n] => Ok(Family::Zero(size(n)?)),
            ["z3_counterexample"] => Ok(Family::Z3Counterexample),
            ["four_dim_nonsimple_minimal"] => Ok(Family::FourDimNonsimpleMinimal),
            ["triangular", n, v] => Ok(Family::Triangular(size(n)?, v.parse()?)),
            _ => Err(Error::Precondition(format!("unknown family `{s}`"))),
        }
    }
}

/// Every evolution algebra of dimension `n` over GF(p), one per structure
/// matrix, in lexicographic order of the row-major entries.
pub fn all_algebras(
    field: Field,
    n: usize,
    limits: &Limits,
) -> Result<impl Iterator<Item = EvolutionAlgebra>> {
    let total = census_size(field, n, limits)?;
    Ok((0..total).map(move |idx| census_algebra(field, n, idx)))
}

/// Number of structure matrices of dimension `n`, checked against the budget.
pub fn census_size(field: Field, n: usize, limits: &Limits) -> Result<u64> {
    let p = field.order()?;
    let total = pow_sat(p, n * n);
    limits.check_vectors("structure-matrix census", total)?;
    Ok(total as u64)
}

/// The `idx`-th structure matrix in lexicographic row-major order.
pub fn census_algebra(field: Field, n: usize, idx: u64) -> EvolutionAlgebra {
    let p = field.modulus().expect("prime field");
    let mut sq = Matrix::zeros(field, n, n);
    let mut rest = idx;
    for k in (0..n * n).rev() {
        sq.set(k / n, k % n, field.residue(rest % p));
        rest /= p;
    }
    EvolutionAlgebra::new(sq).expect("square")
}
