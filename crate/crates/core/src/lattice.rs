//! Exact-integer lattice arithmetic: Gram forms, duals, discriminant groups,
//! divisibility, saturation, orthogonal complements and signatures, together
//! with constructors for the named lattices used throughout the crate.
//!
//! Basis conventions (fixed once, used by every other module and by the CLI):
//!
//! * the generalized Kummer lattice `Λ_n = U ⊕ U ⊕ U ⊕ <-(2n+2)>` has ordered
//!   basis `e1, f1, e2, f2, e3, f3, δ` (coordinates in that order);
//! * the Mukai lattice `Λ~ = U ⊕ U ⊕ U ⊕ U` has ordered basis
//!   `e1, f1, e2, f2, e3, f3, e4, f4`;
//! * `L_{n,d}` is `Z^2` with Gram `((2n+2)/d^2) * [[1, 0], [0, 0]]`.
//!
//! Each `U` block has Gram `[[0, 1], [1, 0]]`. All values are immutable after
//! construction and safe to share between threads.

use crate::error::{Error, Result};
use crate::mat::{
    self, hnf_rows, int, kernel_basis, row_saturation_basis, signature_of_symmetric, smith, IMat,
    Int, Rat,
};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;

/// A finite-rank free `Z`-module with a symmetric integer Gram matrix.
///
/// Degenerate Grams (determinant zero) are first-class values; the operations
/// that need nondegeneracy check for it and error with [`Error::Degenerate`].
#[derive(Debug, PartialEq, Eq)]
pub struct IntLattice {
    label: String,
    rank: usize,
    gram: IMat,
}

/// Shared handle; lattices are plain immutable data.
pub type Lattice = Arc<IntLattice>;

impl IntLattice {
    pub fn new(label: impl Into<String>, gram: IMat) -> Result<Lattice> {
        if gram.nrows() != gram.ncols() || !gram.is_symmetric() {
            return Err(Error::domain("gram matrix must be square and symmetric"));
        }
        Ok(Arc::new(IntLattice { label: label.into(), rank: gram.nrows(), gram }))
    }

    /// The hyperbolic plane `U`, Gram `[[0, 1], [1, 0]]`.
    pub fn hyperbolic_plane() -> Lattice {
        Self::hyperbolic_sum(1, "U")
    }

    /// Orthogonal sum of `k` hyperbolic planes.
    pub fn hyperbolic_sum(k: usize, label: &str) -> Lattice {
        let mut g = IMat::zeros(2 * k, 2 * k);
        for i in 0..k {
            g[(2 * i, 2 * i + 1)] = Int::one();
            g[(2 * i + 1, 2 * i)] = Int::one();
        }
        IntLattice::new(label, g).expect("hyperbolic gram is symmetric")
    }

    /// The generalized Kummer lattice `Λ_n = U^3 ⊕ <-(2n+2)>`, rank 7, with
    /// ordered basis `e1, f1, e2, f2, e3, f3, δ` and `(δ, δ) = -(2n+2)`.
    pub fn kummer(n: i64) -> Result<Lattice> {
        if n < 1 {
            return Err(Error::domain(format!("kummer lattice needs n >= 1, got {n}")));
        }
        let mut g = IMat::zeros(7, 7);
        for i in 0..3 {
            g[(2 * i, 2 * i + 1)] = Int::one();
            g[(2 * i + 1, 2 * i)] = Int::one();
        }
        g[(6, 6)] = int(-(2 * n + 2));
        IntLattice::new(format!("Kummer(n={n})"), g)
    }

    /// The Mukai lattice `Λ~ = U^4`, rank 8, basis `e1, f1, ..., e4, f4`.
    pub fn mukai() -> Lattice {
        Self::hyperbolic_sum(4, "Mukai")
    }

    /// The degenerate rank-2 lattice `L_{n,d}` with Gram
    /// `((2n+2)/d^2) * [[1, 0], [0, 0]]`. Requires `d^2 | 2n+2`.
    pub fn lnd(n: i64, d: i64) -> Result<Lattice> {
        if d < 1 {
            return Err(Error::domain(format!("lnd lattice needs d >= 1, got {d}")));
        }
        let num = 2 * n + 2;
        if num % (d * d) != 0 {
            return Err(Error::domain(format!(
                "d^2 = {} does not divide 2n+2 = {num}",
                d * d
            )));
        }
        let mut g = IMat::zeros(2, 2);
        g[(0, 0)] = int(num / (d * d));
        IntLattice::new(format!("L(n={n},d={d})"), g)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gram(&self) -> &IMat {
        &self.gram
    }

    pub fn det(&self) -> Int {
        self.gram.det()
    }

    pub fn is_degenerate(&self) -> bool {
        self.det().is_zero()
    }

    /// If this lattice is exactly a `Λ_n` Gram in the standard basis, return `n`.
    pub fn kummer_n(&self) -> Option<i64> {
        if self.rank != 7 {
            return None;
        }
        let dd = &self.gram[(6, 6)];
        if dd.is_zero() || dd.is_positive() || (dd % int(2)).abs() != Int::zero() {
            return None;
        }
        let n = (-dd - 2) / 2;
        let expected = IntLattice::kummer(i64::try_from(&n).ok()?).ok()?;
        (expected.gram == self.gram).then(|| i64::try_from(&n).unwrap())
    }

    /// Counts of positive, negative and zero squares after exact rational
    /// congruence diagonalization. `null > 0` flags a degenerate lattice.
    pub fn signature(&self) -> Signature {
        let (pos, neg, null) = signature_of_symmetric(&self.gram);
        Signature { pos, neg, null }
    }

    /// Discriminant group `Λ∨/Λ` for a nondegenerate lattice, as Smith
    /// invariant factors `> 1` with generator lifts in `Λ ⊗ Q`.
    pub fn discriminant_group(&self) -> Result<DiscriminantGroup> {
        if self.is_degenerate() {
            return Err(Error::Degenerate);
        }
        let sm = smith(&self.gram);
        let mut cyclic_orders = Vec::new();
        let mut generator_lifts = Vec::new();
        for i in 0..self.rank {
            let s = sm.s[(i, i)].clone();
            if s > Int::one() {
                cyclic_orders.push(s.clone());
                let lift: Vec<Rat> = (0..self.rank)
                    .map(|k| Rat::new(sm.right[(k, i)].clone(), s.clone()))
                    .collect();
                generator_lifts.push(lift);
            }
        }
        Ok(DiscriminantGroup { cyclic_orders, generator_lifts })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "label": self.label,
            "rank": self.rank,
            "gram": (0..self.rank).map(|i| {
                (0..self.rank).map(|j| int_json(&self.gram[(i, j)])).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

/// JSON value for a `BigInt`: a number when it fits in `i64`, else a string.
pub fn int_json(v: &Int) -> serde_json::Value {
    match i64::try_from(v) {
        Ok(n) => serde_json::json!(n),
        Err(_) => serde_json::json!(v.to_string()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub null: usize,
}

impl Signature {
    pub fn pair(&self) -> (usize, usize) {
        (self.pos, self.neg)
    }
}

/// The finite quadratic-form carrier `Λ∨/Λ` as an abelian group: cyclic
/// factors in chain order plus rational lifts of their generators.
#[derive(Debug, Clone)]
pub struct DiscriminantGroup {
    pub cyclic_orders: Vec<Int>,
    pub generator_lifts: Vec<Vec<Rat>>,
}

impl DiscriminantGroup {
    pub fn order(&self) -> Int {
        self.cyclic_orders.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.cyclic_orders.is_empty()
    }
}

/// Integer coordinate tuple relative to the fixed basis of its home lattice.
#[derive(Clone, PartialEq, Eq)]
pub struct LatticeVector {
    home: Lattice,
    coords: Vec<Int>,
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} in {}", self.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(), self.home.label())
    }
}

/// Two vectors live in "the same" lattice when they share Gram data; the Arc
/// pointer is only a fast path.
fn same_home(a: &Lattice, b: &Lattice) -> bool {
    Arc::ptr_eq(a, b) || a.gram() == b.gram()
}

impl LatticeVector {
    pub fn new(home: Lattice, coords: Vec<Int>) -> Result<Self> {
        if coords.len() != home.rank() {
            return Err(Error::domain(format!(
                "coordinate length {} does not match rank {}",
                coords.len(),
                home.rank()
            )));
        }
        Ok(LatticeVector { home, coords })
    }

    pub fn from_i64(home: &Lattice, coords: &[i64]) -> Result<Self> {
        Self::new(home.clone(), coords.iter().map(|&c| int(c)).collect())
    }

    pub fn basis(home: &Lattice, i: usize) -> Self {
        let mut coords = vec![Int::zero(); home.rank()];
        coords[i] = Int::one();
        LatticeVector { home: home.clone(), coords }
    }

    pub fn zero(home: &Lattice) -> Self {
        LatticeVector { home: home.clone(), coords: vec![Int::zero(); home.rank()] }
    }

    pub fn home(&self) -> &Lattice {
        &self.home
    }

    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    pub fn coords_i64(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(i64::try_from).collect::<std::result::Result<_, _>>().ok()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The bilinear form `x^t · gram · y`. Errors if the homes differ.
    pub fn pair(&self, other: &LatticeVector) -> Result<Int> {
        if !same_home(&self.home, &other.home) {
            return Err(Error::LatticeMismatch);
        }
        let gy = self.home.gram().mul_vec(&other.coords);
        Ok(mat::dot(&self.coords, &gy))
    }

    pub fn norm(&self) -> Int {
        self.pair(self).expect("same home")
    }

    /// True iff the gcd of the coordinates is 1. The zero vector errors.
    pub fn is_primitive(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(mat::gcd_of(self.coords.iter().cloned()).is_one())
    }

    /// `Div(x)`: gcd of the pairings with the basis, i.e. the positive
    /// generator of the ideal `(x, Λ)`. By convention `Div(0) = 0`.
    pub fn divisibility(&self) -> Int {
        let gx = self.home.gram().mul_vec(&self.coords);
        mat::gcd_of(gx)
    }

    pub fn scaled(&self, k: &Int) -> LatticeVector {
        LatticeVector {
            home: self.home.clone(),
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    pub fn negated(&self) -> LatticeVector {
        self.scaled(&int(-1))
    }

    pub fn add(&self, other: &LatticeVector) -> Result<LatticeVector> {
        if !same_home(&self.home, &other.home) {
            return Err(Error::LatticeMismatch);
        }
        Ok(LatticeVector {
            home: self.home.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &LatticeVector) -> Result<LatticeVector> {
        self.add(&other.negated())
    }

    /// Divide every coordinate by `k`, requiring exactness.
    pub fn divided_exact(&self, k: &Int) -> Result<LatticeVector> {
        let mut coords = Vec::with_capacity(self.coords.len());
        for c in &self.coords {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return Err(Error::domain(format!("{c} is not divisible by {k}")));
            }
            coords.push(q);
        }
        Ok(LatticeVector { home: self.home.clone(), coords })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coords.iter().map(int_json).collect())
    }
}

/// Integer span of finitely many vectors of a common home lattice.
#[derive(Clone, Debug)]
pub struct Sublattice {
    home: Lattice,
    generators: Vec<LatticeVector>,
}

impl Sublattice {
    pub fn new(home: Lattice, generators: Vec<LatticeVector>) -> Result<Self> {
        for g in &generators {
            if !same_home(&home, g.home()) {
                return Err(Error::LatticeMismatch);
            }
        }
        Ok(Sublattice { home, generators })
    }

    pub fn from_rows(home: &Lattice, rows: &IMat) -> Self {
        let generators = (0..rows.nrows())
            .map(|i| LatticeVector::new(home.clone(), rows.row(i)).expect("row width = rank"))
            .collect();
        Sublattice { home: home.clone(), generators }
    }

    pub fn home(&self) -> &Lattice {
        &self.home
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    /// Generators as rows of a matrix.
    pub fn basis_matrix(&self) -> IMat {
        IMat::from_rows(self.generators.iter().map(|g| g.coords().to_vec()).collect())
    }

    /// Rank of the rational span.
    pub fn rank(&self) -> usize {
        self.basis_matrix().rank()
    }

    /// Gram matrix of the generators under the ambient form.
    pub fn gram(&self) -> IMat {
        let b = self.basis_matrix();
        &(&b * self.home.gram()) * &b.transpose()
    }

    /// The sublattice as an abstract lattice with the induced form.
    pub fn as_lattice(&self, label: impl Into<String>) -> Result<Lattice> {
        IntLattice::new(label, self.gram())
    }

    /// Saturation: the maximal sublattice of the same rational rank
    /// containing this one, via Smith normal form over `Z`.
    pub fn saturate(&self) -> Sublattice {
        let sat = row_saturation_basis(&self.basis_matrix());
        Sublattice::from_rows(&self.home, &sat)
    }

    pub fn is_saturated(&self) -> bool {
        self.spans_same(&self.saturate())
    }

    /// Saturated sublattice of everything orthogonal to all generators.
    /// Orthogonal complements are always saturated.
    pub fn orthogonal_complement(&self) -> Sublattice {
        let pairing = &self.basis_matrix() * self.home.gram();
        let kern = kernel_basis(&pairing);
        Sublattice::from_rows(&self.home, &kern)
    }

    /// Same integer span (not just the same rational span).
    pub fn spans_same(&self, other: &Sublattice) -> bool {
        same_home(&self.home, &other.home)
            && hnf_rows(&self.basis_matrix()) == hnf_rows(&other.basis_matrix())
    }

    pub fn contains(&self, v: &LatticeVector) -> bool {
        same_home(&self.home, v.home()) && self.coords_of(v).is_some()
    }

    /// Express `v` as an integer combination of the generators, if possible.
    pub fn coords_of(&self, v: &LatticeVector) -> Option<Vec<Int>> {
        mat::solve_in_row_span(&self.basis_matrix(), v.coords())
    }

    /// Divisibility of `v` computed inside this sublattice: gcd of the
    /// pairings of `v` with the generators.
    pub fn divisibility_of(&self, v: &LatticeVector) -> Result<Int> {
        let mut vals = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            vals.push(g.pair(v)?);
        }
        Ok(mat::gcd_of(vals))
    }
}

/// Index of a finite-index sublattice inside its saturation, via Smith
/// invariant factors of the coordinate matrix.
pub fn saturation_index(s: &Sublattice) -> Int {
    smith(&s.basis_matrix()).invariant_factors().iter().product()
}
