//! Mukai vectors on the even-cohomology model of an abelian surface, the
//! Beauville–Mukai witness construction, and polarization-type arithmetic
//! down to the fibration formula `(1, ..., 1, d, (n+1)/d)`.
//!
//! The even-cohomology model is `Z^8` with ordered basis
//! `h0, e1, f1, e2, f2, e3, f3, h4`: a `U^3` block in degree two and the
//! degrees zero and four paired by `(h0, h4) = -1`, so that the displayed
//! Mukai pairing `(v, w) = (v2, w2) - (v0 w4 + v4 w0)` is the Gram form
//! verbatim.

use crate::error::{Error, Result};
use crate::invariant::{theta_via, InvariantClass, PrimEmbedding};
use crate::lattice::{int_json, IntLattice, Lattice, LatticeVector, Sublattice};
use crate::mat::{int, IMat, Int};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::sync::OnceLock;

/// The even cohomology `H^0 ⊕ H^2 ⊕ H^4` of an abelian surface as a lattice.
pub fn even_cohomology_lattice() -> Lattice {
    static CELL: OnceLock<Lattice> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut g = IMat::zeros(8, 8);
        for i in 0..3 {
            g[(2 * i + 1, 2 * i + 2)] = Int::one();
            g[(2 * i + 2, 2 * i + 1)] = Int::one();
        }
        g[(0, 7)] = int(-1);
        g[(7, 0)] = int(-1);
        IntLattice::new("H•(S)", g).expect("symmetric gram")
    })
    .clone()
}

/// A triple `(r, c, s)` with `c` in the `U^3` model of `H^2(S, Z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MukaiVector {
    pub r: Int,
    pub c: [Int; 6],
    pub s: Int,
}

impl MukaiVector {
    pub fn new(r: i64, c: [i64; 6], s: i64) -> Self {
        MukaiVector { r: int(r), c: c.map(int), s: int(s) }
    }

    pub fn from_parts(r: Int, c: [Int; 6], s: Int) -> Self {
        MukaiVector { r, c, s }
    }

    /// Coordinates in the even-cohomology lattice basis.
    pub fn to_vector(&self) -> LatticeVector {
        let mut coords = Vec::with_capacity(8);
        coords.push(self.r.clone());
        coords.extend(self.c.iter().cloned());
        coords.push(self.s.clone());
        LatticeVector::new(even_cohomology_lattice(), coords).expect("rank 8")
    }

    pub fn from_vector(v: &LatticeVector) -> Result<Self> {
        if v.home().gram() != even_cohomology_lattice().gram() {
            return Err(Error::LatticeMismatch);
        }
        let c = v.coords();
        Ok(MukaiVector {
            r: c[0].clone(),
            c: [
                c[1].clone(),
                c[2].clone(),
                c[3].clone(),
                c[4].clone(),
                c[5].clone(),
                c[6].clone(),
            ],
            s: c[7].clone(),
        })
    }

    pub fn is_primitive(&self) -> Result<bool> {
        self.to_vector().is_primitive()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "r": int_json(&self.r),
            "c": self.c.iter().map(int_json).collect::<Vec<_>>(),
            "s": int_json(&self.s),
        })
    }
}

/// The Mukai pairing `(v, w) = (v2, w2) - (v0 w4 + v4 w0)`.
pub fn mukai_pair(v: &MukaiVector, w: &MukaiVector) -> Int {
    v.to_vector().pair(&w.to_vector()).expect("same model lattice")
}

/// Positivity of a Mukai vector. Effectivity of a middle-degree class is not
/// decidable from the lattice; `effective` overrides the default used for the
/// `r = 0` case, which declares `c` effective when `(c, c) > 0` and `c` pairs
/// positively with `e1 + f1`.
pub fn is_positive(v: &MukaiVector, effective: Option<bool>) -> bool {
    if v.r.is_positive() {
        return true;
    }
    let c_zero = v.c.iter().all(Zero::is_zero);
    if v.r.is_zero() && !c_zero && !v.s.is_zero() {
        let eff = effective.unwrap_or_else(|| {
            let c = MukaiVector::from_parts(Int::zero(), v.c.clone(), Int::zero());
            let cc = mukai_pair(&c, &c);
            let ample = MukaiVector::new(0, [1, 1, 0, 0, 0, 0], 0);
            cc.is_positive() && mukai_pair(&c, &ample).is_positive()
        });
        return eff;
    }
    v.r.is_zero() && c_zero && v.s.is_negative()
}

/// `dim K_H(v) = (v, v) - 2`; defined for `(v, v) >= 6`.
pub fn moduli_dimension(v: &MukaiVector) -> Result<Int> {
    let vv = mukai_pair(v, v);
    if vv < int(6) {
        return Err(Error::domain(format!("(v,v) = {vv} is below the threshold 6")));
    }
    Ok(vv - 2)
}

/// Saturated rank-7 orthogonal complement `v⊥` of a primitive Mukai vector
/// with `(v, v) >= 6` inside the even-cohomology lattice.
pub fn perp_lattice(v: &MukaiVector) -> Result<Sublattice> {
    if !v.is_primitive()? {
        return Err(Error::domain("Mukai vector is not primitive"));
    }
    moduli_dimension(v)?;
    let home = even_cohomology_lattice();
    let span = Sublattice::new(home, vec![v.to_vector()])?;
    Ok(span.orthogonal_complement())
}

/// A polarization type: positive integers with `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolType(Vec<i64>);

impl PolType {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::domain("polarization type must be nonempty"));
        }
        if entries.iter().any(|&d| d < 1) {
            return Err(Error::domain("polarization type entries must be positive"));
        }
        if entries.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::domain("polarization type needs d_i | d_{i+1}"));
        }
        Ok(PolType(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn product(&self) -> i64 {
        self.0.iter().product()
    }
}

impl std::fmt::Display for PolType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// `pol(L) = (1, d)` for a primitive class of square `2d` on a surface.
pub fn poltype_from_primitive_square(two_d: i64) -> Result<PolType> {
    if two_d <= 0 || two_d % 2 != 0 {
        return Err(Error::domain(format!("square must be even and positive, got {two_d}")));
    }
    PolType::new(vec![1, two_d / 2])
}

/// The dual polarization type
/// `(d_1, d_1 d_n / d_{n-1}, ..., d_1 d_n / d_2, d_n)`.
pub fn dual_poltype(t: &PolType) -> PolType {
    let e = t.entries();
    let n = e.len();
    if n <= 2 {
        return t.clone();
    }
    let (first, last) = (e[0], e[n - 1]);
    let mut out = Vec::with_capacity(n);
    out.push(first);
    for k in (1..n - 1).rev() {
        out.push(first * last / e[k]);
    }
    out.push(last);
    PolType::new(out).expect("dual of a valid type is valid")
}

/// `(1, ..., 1, d_1, ..., d_r)`: the type induced on the complementary
/// abelian subvariety of dimension `dim_a >= r`.
pub fn complementary_poltype(t: &PolType, dim_a: usize) -> Result<PolType> {
    if dim_a < t.len() {
        return Err(Error::domain("dim A >= dim B violated"));
    }
    let mut out = vec![1i64; dim_a - t.len()];
    out.extend_from_slice(t.entries());
    PolType::new(out)
}

/// The polarization type `(1, ..., 1, d, (n+1)/d)` of a Lagrangian fibration
/// of generalized Kummer `n`-type whose fiber class has divisibility `d`.
/// Defined for `n >= 2`; the length-`n` tuple degenerates below that.
pub fn kummer_fibration_poltype(n: i64, d: i64) -> Result<PolType> {
    if n < 2 {
        return Err(Error::domain(format!("fibration poltype needs n >= 2, got {n}")));
    }
    if d < 1 || (n + 1) % (d * d) != 0 {
        return Err(Error::domain(format!("d² does not divide n+1 (d = {d}, n = {n})")));
    }
    let mut out = vec![1i64; (n - 2) as usize];
    out.push(d);
    out.push((n + 1) / d);
    PolType::new(out)
}

/// The type `(1, ..., 1, d1, d2)` of a Beauville–Mukai system over `P^n`
/// built from a `(d1, d2)`-polarized abelian surface; needs `d1 d2 = n + 1`.
pub fn bm_system_poltype(d1: i64, d2: i64, n: i64) -> Result<PolType> {
    if d1 < 1 || d2 % d1 != 0 {
        return Err(Error::domain(format!("{d1} does not divide {d2}")));
    }
    if d1 * d2 != n + 1 {
        return Err(Error::domain(format!("d1 d2 = {} must equal n+1 = {}", d1 * d2, n + 1)));
    }
    complementary_poltype(&PolType::new(vec![d1, d2])?, n as usize)
}

/// The Beauville–Mukai witness for a class `(n, d, b)`: the Mukai vector
/// `v = (0, dβ, s)` with `β` a primitive class of square `(2n+2)/d²` and
/// `s b ≡ 1 (mod d)`, plus the isotropic class `α = (0, 0, 1)` in `v⊥` and
/// the checks that realize the invariant.
#[derive(Clone, Debug)]
pub struct BmWitness {
    pub n: i64,
    pub d: i64,
    pub b: i64,
    pub s: i64,
    pub v: MukaiVector,
    pub alpha: MukaiVector,
    pub vv: Int,
    /// divisibility of `α` computed inside `v⊥`
    pub alpha_divisibility: Int,
    pub invariant: InvariantClass,
    pub poltype: PolType,
    /// `(ι(α) - b v)/d` is integral
    pub quotient_integral: bool,
}

impl BmWitness {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "d": self.d,
            "b": self.b,
            "s": self.s,
            "v": self.v.to_json(),
            "alpha": self.alpha.to_json(),
            "vv": int_json(&self.vv),
            "alpha_divisibility": int_json(&self.alpha_divisibility),
            "invariant": self.invariant,
            "poltype": self.poltype,
            "quotient_integral": self.quotient_integral,
        })
    }
}

/// Build the witness; `n >= 2`, `d² | n+1`, `gcd(d, b) = 1`.
pub fn bm_witness(n: i64, d: i64, b: i64) -> Result<BmWitness> {
    if n < 2 {
        return Err(Error::domain(format!("witness needs n >= 2, got {n}")));
    }
    if d < 1 || (n + 1) % (d * d) != 0 {
        return Err(Error::domain(format!("d² does not divide n+1 (d = {d}, n = {n})")));
    }
    if d.gcd(&b) != 1 {
        return Err(Error::domain(format!("gcd(d, b) = {} != 1", d.gcd(&b))));
    }
    // least positive s with s b ≡ 1 (mod d); s = 1 when d = 1
    let s = (1..=d.max(1))
        .find(|s| (s * b).rem_euclid(d.max(1)) == 1 % d.max(1))
        .expect("b is a unit mod d");
    let m = (n + 1) / (d * d);
    let v = MukaiVector::new(0, [d, d * m, 0, 0, 0, 0], s);
    let alpha = MukaiVector::new(0, [0; 6], 1);

    let vv = mukai_pair(&v, &v);
    debug_assert_eq!(vv, int(2 * n + 2));
    let perp = perp_lattice(&v)?;
    let alpha_amb = alpha.to_vector();
    let alpha_div = perp.divisibility_of(&alpha_amb)?;

    // (ι(α) - b v)/d = (0, -b d β, 1 - b s)/d is integral iff s b ≡ 1 (mod d)
    let shifted = alpha_amb.sub(&v.to_vector().scaled(&int(b)))?;
    let quotient_integral = shifted.divided_exact(&int(d)).is_ok();

    // realize v⊥ ↪ H•(S) as a primitive embedding and evaluate the invariant
    let source = perp.as_lattice(format!("perp(v) n={n}"))?;
    let emb = PrimEmbedding::new(
        source.clone(),
        even_cohomology_lattice(),
        perp.basis_matrix().transpose(),
        v.to_vector(),
    )?;
    let alpha_src = LatticeVector::new(
        source,
        perp.coords_of(&alpha_amb).ok_or(Error::domain("α is not in v⊥"))?,
    )?;
    let invariant = theta_via(&alpha_src, &emb)?;
    let poltype = kummer_fibration_poltype(n, d)?;

    Ok(BmWitness {
        n,
        d,
        b,
        s,
        v,
        alpha,
        vv,
        alpha_divisibility: alpha_div,
        invariant,
        poltype,
        quotient_integral,
    })
}
