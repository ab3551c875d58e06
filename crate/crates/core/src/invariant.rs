//! The faithful monodromy invariant for primitive isotropic classes on a
//! generalized Kummer lattice: the canonical primitive embedding into the
//! Mukai lattice, the decomposition `α = dξ + bδ`, the saturated rank-2
//! lattice `H(α, ι) = sat<ι(α), v>`, and the normalized invariant class
//! `(n, d, ±b mod d)` together with the explicit base-change certificate.

use crate::error::{Error, Result};
use crate::lattice::{IntLattice, Lattice, LatticeVector, Sublattice};
use crate::mat::{self, int, IMat, Int};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// A primitive isometric embedding `source ↪ target` together with a chosen
/// generator `v` of the rank-1 orthogonal complement of the image.
///
/// The stored matrix has the images of the source basis as columns. For the
/// invariant machinery the source is a lattice isometric to some `Λ_n` and
/// the target is unimodular of rank one more, so `(v, v) = 2n + 2`.
#[derive(Clone, Debug)]
pub struct PrimEmbedding {
    source: Lattice,
    target: Lattice,
    matrix: IMat,
    v: LatticeVector,
    n: i64,
}

impl PrimEmbedding {
    pub fn new(source: Lattice, target: Lattice, matrix: IMat, v: LatticeVector) -> Result<Self> {
        if matrix.nrows() != target.rank() || matrix.ncols() != source.rank() {
            return Err(Error::domain("embedding matrix has wrong shape"));
        }
        if v.home().gram() != target.gram() {
            return Err(Error::LatticeMismatch);
        }
        // isometric: matrix^t G_target matrix = G_source
        if &(&matrix.transpose() * target.gram()) * &matrix != *source.gram() {
            return Err(Error::NotIsometry);
        }
        let image = Sublattice::from_rows(&target, &matrix.transpose());
        if !image.is_saturated() {
            return Err(Error::domain("embedding image is not saturated"));
        }
        let comp = image.orthogonal_complement();
        let span_v = Sublattice::new(target.clone(), vec![v.clone()])?;
        if comp.rank() != 1 || !comp.spans_same(&span_v.saturate()) {
            return Err(Error::domain("v does not generate the orthogonal complement"));
        }
        let vv = v.norm();
        if !vv.is_positive() || !(&vv % int(2)).is_zero() {
            return Err(Error::domain("(v, v) must be a positive even integer"));
        }
        let n = i64::try_from(&((&vv - int(2)) / int(2)))
            .map_err(|_| Error::domain("(v, v) out of range"))?;
        Ok(PrimEmbedding { source, target, matrix, v, n })
    }

    /// The canonical representative of the embedding orbit `Λ_n ↪ Λ~`:
    /// `e_i, f_i ↦ e_i, f_i` for `i = 1..3`, `δ ↦ e4 - (n+1) f4`, with
    /// complement generator `v = e4 + (n+1) f4`.
    pub fn canonical(n: i64) -> Result<Self> {
        let source = IntLattice::kummer(n)?;
        let target = IntLattice::mukai();
        let mut m = IMat::zeros(8, 7);
        for i in 0..6 {
            m[(i, i)] = Int::one();
        }
        m[(6, 6)] = Int::one();
        m[(7, 6)] = int(-(n + 1));
        let v = LatticeVector::from_i64(&target, &[0, 0, 0, 0, 0, 0, 1, 0])?
            .add(&LatticeVector::from_i64(&target, &[0, 0, 0, 0, 0, 0, 0, n + 1])?)?;
        PrimEmbedding::new(source, target, m, v)
    }

    pub fn source(&self) -> &Lattice {
        &self.source
    }

    pub fn target(&self) -> &Lattice {
        &self.target
    }

    pub fn matrix(&self) -> &IMat {
        &self.matrix
    }

    pub fn v(&self) -> &LatticeVector {
        &self.v
    }

    /// `n` with `(v, v) = 2n + 2`.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// Image `ι(x)` of a source vector in the target lattice.
    pub fn apply(&self, x: &LatticeVector) -> Result<LatticeVector> {
        if x.home().gram() != self.source.gram() {
            return Err(Error::LatticeMismatch);
        }
        LatticeVector::new(self.target.clone(), self.matrix.mul_vec(x.coords()))
    }
}

/// The value of the invariant: `(n, d)` plus the normalized residue of `b`,
/// representing the isometry class of `(L_{n,d}, (d, b))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct InvariantClass {
    pub n: i64,
    pub d: i64,
    pub b: i64,
}

impl InvariantClass {
    /// Normalize `b` into the canonical residue `min(b mod d, d - b mod d)`,
    /// the complete invariant of `{±b mod d}`. For `d = 1` the residue is 0.
    pub fn new(n: i64, d: i64, b: i64) -> Result<Self> {
        if d < 1 {
            return Err(Error::domain(format!("divisibility must be positive, got {d}")));
        }
        if (n + 1) % (d * d) != 0 {
            return Err(Error::domain(format!("d^2 = {} does not divide n+1 = {}", d * d, n + 1)));
        }
        let r = b.rem_euclid(d);
        let b = r.min(d - r);
        if d > 1 && gcd_i64(d, b) != 1 {
            return Err(Error::domain(format!("gcd(d, b) = gcd({d}, {b}) != 1")));
        }
        Ok(InvariantClass { n, d, b })
    }
}

impl std::fmt::Display for InvariantClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.n, self.d, self.b)
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// The decomposition `α = d ξ + b δ` with `ξ ∈ U^3` primitive, `gcd(d,b) = 1`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub d: Int,
    pub xi: LatticeVector,
    pub b: Int,
}

fn require_primitive_isotropic(alpha: &LatticeVector) -> Result<i64> {
    let n = alpha.home().kummer_n().ok_or(Error::NotKummer)?;
    if alpha.is_zero() || !alpha.is_primitive()? {
        return Err(Error::domain("class is not primitive"));
    }
    let norm = alpha.norm();
    if !norm.is_zero() {
        return Err(Error::domain(format!("not isotropic, (α,α) = {norm}")));
    }
    Ok(n)
}

/// Decompose a primitive isotropic class of `Λ_n` as `d ξ + b δ`. The content
/// `d` of the `U^3` part equals `Div(α)`, and `d²` divides `n + 1`.
pub fn decompose(alpha: &LatticeVector) -> Result<Decomposition> {
    let n = require_primitive_isotropic(alpha)?;
    let d = mat::gcd_of(alpha.coords()[..6].iter().cloned());
    if d.is_zero() {
        // α = ±δ is never isotropic
        return Err(Error::domain("isotropic class has zero U^3 part"));
    }
    let mut xi_coords: Vec<Int> = alpha.coords()[..6].iter().map(|c| c / &d).collect();
    xi_coords.push(Int::zero());
    let xi = LatticeVector::new(alpha.home().clone(), xi_coords)?;
    let b = alpha.coords()[6].clone();
    debug_assert!(d.gcd(&b).is_one());
    // isotropy forces d² (ξ,ξ) = (2n+2) b², hence d² | n+1 for even (ξ,ξ)
    let dd = &d * &d;
    if ((int(n) + 1) % &dd) != Int::zero() {
        return Err(Error::domain(format!("d^2 = {dd} does not divide n+1 = {}", n + 1)));
    }
    // divisibility of α equals the content of the U^3 part
    debug_assert_eq!(alpha.divisibility(), d);
    Ok(Decomposition { d, xi, b })
}

/// The smallest `b >= 0` with `gcd(d, b) = 1` and `(ι(α) - b v)/d` integral.
/// Any other valid `b'` is congruent to it modulo `d`.
pub fn find_b(alpha: &LatticeVector, emb: &PrimEmbedding) -> Result<Int> {
    let d = alpha.divisibility();
    if alpha.is_zero() || !alpha.is_primitive()? {
        return Err(Error::domain("class is not primitive"));
    }
    if !alpha.norm().is_zero() {
        return Err(Error::domain("class is not isotropic"));
    }
    let iota = emb.apply(alpha)?;
    let d_i64 = i64::try_from(&d).map_err(|_| Error::domain("divisibility out of range"))?;
    if d_i64 == 1 {
        return Ok(Int::zero());
    }
    for b in 0..d_i64 {
        if gcd_i64(d_i64, b) != 1 {
            continue;
        }
        let shifted = iota.sub(&emb.v().scaled(&int(b)))?;
        if shifted.divided_exact(&d).is_ok() {
            return Ok(int(b));
        }
    }
    Err(Error::domain("no residue b with (ι(α) - b v)/d integral"))
}

/// `H(α, ι) = sat<ι(α), v>`, returned in the distinguished basis `(v, u)`
/// with `u = (b v - ι(α))/d`; its Gram is `((2n+2)/d²) [[d², bd], [bd, b²]]`.
pub fn h_lattice(alpha: &LatticeVector, emb: &PrimEmbedding) -> Result<Sublattice> {
    let b = find_b(alpha, emb)?;
    let d = alpha.divisibility();
    let iota = emb.apply(alpha)?;
    let u = emb.v().scaled(&b).sub(&iota)?.divided_exact(&d)?;
    let h = Sublattice::new(emb.target().clone(), vec![emb.v().clone(), u])?;
    let raw = Sublattice::new(emb.target().clone(), vec![iota, emb.v().clone()])?;
    if !raw.saturate().spans_same(&h) {
        return Err(Error::domain("basis (v, u) does not span the saturation"));
    }
    Ok(h)
}

/// Verify the explicit base change: with `i d + j b = 1` and
/// `A = [[i, j], [b, -d]]` (so `A (d,b)^t = (1,0)^t` and `det A = -1`),
/// check `A G A^t = (G_00/d²) [[1, 0], [0, 0]]`.
pub fn base_change_check(d: &Int, b: &Int, gram: &IMat) -> Result<bool> {
    if gram.nrows() != 2 || gram.ncols() != 2 {
        return Err(Error::domain("expected a 2x2 Gram matrix"));
    }
    if !d.gcd(b).is_one() {
        return Err(Error::domain(format!("gcd(d, b) = gcd({d}, {b}) != 1")));
    }
    let (i, j) = mat::bezout(d, b);
    let a = IMat::from_rows(vec![vec![i, j], vec![b.clone(), -d.clone()]]);
    debug_assert_eq!(a.det(), int(-1));
    let dd = d * d;
    let (k, rem) = gram[(0, 0)].div_rem(&dd);
    if !rem.is_zero() {
        return Ok(false);
    }
    let mut target = IMat::zeros(2, 2);
    target[(0, 0)] = k;
    Ok(&(&a * gram) * &a.transpose() == target)
}

/// The monodromy invariant `ϑ(α)` computed through a chosen representative
/// of the canonical embedding orbit. Verifies the `H(α, ι)` Gram and the
/// base-change certificate before returning.
pub fn theta_via(alpha: &LatticeVector, emb: &PrimEmbedding) -> Result<InvariantClass> {
    let d = alpha.divisibility();
    let b = find_b(alpha, emb)?;
    let h = h_lattice(alpha, emb)?;
    let gram = h.gram();
    let n = emb.n();
    let k = int(2 * n + 2) / (&d * &d);
    let expected = IMat::from_rows(vec![
        vec![&k * (&d * &d), &k * (&d * &b)],
        vec![&k * (&d * &b), &k * (&b * &b)],
    ]);
    if gram != expected {
        return Err(Error::domain("H(α, ι) Gram does not match ((2n+2)/d²)[[d²,bd],[bd,b²]]"));
    }
    if !base_change_check(&d, &b, &gram)? {
        return Err(Error::domain("base-change certificate failed"));
    }
    let d = i64::try_from(&d).map_err(|_| Error::domain("divisibility out of range"))?;
    let b = i64::try_from(&b).map_err(|_| Error::domain("residue out of range"))?;
    InvariantClass::new(n, d, b)
}

/// `ϑ(α)` for a primitive isotropic class of `Λ_n`, via the canonical
/// embedding representative.
pub fn theta(alpha: &LatticeVector, n: i64) -> Result<InvariantClass> {
    let got = require_primitive_isotropic(alpha)?;
    if got != n {
        return Err(Error::domain(format!("class lives in Λ_{got}, not Λ_{n}")));
    }
    theta_via(alpha, &PrimEmbedding::canonical(n)?)
}

/// The divisibilities that occur on `Λ_n`: positive `d` with `d² | n + 1`.
pub fn admissible_divisibilities(n: i64) -> Result<Vec<i64>> {
    if n < 1 {
        return Err(Error::domain(format!("need n >= 1, got {n}")));
    }
    Ok((1..).take_while(|d| d * d <= n + 1).filter(|d| (n + 1) % (d * d) == 0).collect())
}

/// The finite set `Σ_{n,d}` under the normalization of this crate: one class
/// per residue `±b mod d` with `gcd(b, d) = 1`; a single class for `d = 1`.
pub fn sigma_classes(n: i64, d: i64) -> Result<Vec<InvariantClass>> {
    if d < 1 || (n + 1) % (d * d) != 0 {
        return Err(Error::domain(format!("d^2 = {} does not divide n+1 = {}", d * d, n + 1)));
    }
    if d == 1 {
        return Ok(vec![InvariantClass::new(n, 1, 0)?]);
    }
    (1..=d / 2)
        .filter(|&b| gcd_i64(b, d) == 1)
        .map(|b| InvariantClass::new(n, d, b))
        .collect()
}
