//! Constructive orbit reduction for primitive vectors in lattices that start
//! with at least two orthogonal hyperbolic-plane blocks `U ⊕ U ⊕ ...`.
//!
//! The moves are Eichler transvections
//! `E_{e,a}(x) = x + (x,e)a - (x,a)e - (a,a)/2 (x,e) e` with `e` isotropic and
//! `(e, a) = 0`. A word of such moves carries any primitive vector supported
//! on the plane blocks to the standard form `e1 + (norm/2) f1`; every move is
//! integral, has determinant one and acts trivially on the discriminant, so
//! the whole word stays inside the monodromy group wherever that is defined.
//!
//! Coordinate conventions: the home lattice's first `2p` basis vectors are
//! `e1, f1, ..., ep, fp` with Gram `[[0,1],[1,0]]` per block; whatever follows
//! is orthogonal to them and is left untouched by every move issued here.

use crate::error::{Error, Result};
use crate::mat::{int, IMat, Int};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Parameters of one Eichler transvection: the isotropic vector `e` and the
/// orthogonal translation vector `a`, in home-lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transvection {
    pub e: Vec<Int>,
    pub a: Vec<Int>,
}

impl Transvection {
    pub fn inverse(&self) -> Transvection {
        Transvection { e: self.e.clone(), a: self.a.iter().map(|c| -c).collect() }
    }

    /// Matrix `I + a (e^t G) - e (a^t G) - (a,a)/2 e (e^t G)`.
    pub fn matrix(&self, gram: &IMat) -> IMat {
        let n = gram.nrows();
        let ge = gram.mul_vec(&self.e);
        let ga = gram.mul_vec(&self.a);
        let aa = crate::mat::dot(&self.a, &ga);
        let half = &aa / int(2);
        assert!((&aa % int(2)).is_zero(), "transvection needs even (a,a) here");
        IMat::from_fn(n, n, |i, j| {
            let mut v = if i == j { Int::one() } else { Int::zero() };
            v += &self.a[i] * &ge[j];
            v -= &self.e[i] * &ga[j];
            v -= &half * (&self.e[i] * &ge[j]);
            v
        })
    }

    pub fn apply(&self, gram: &IMat, x: &[Int]) -> Vec<Int> {
        let xe = pairing(gram, x, &self.e);
        let xa = pairing(gram, x, &self.a);
        let ga = gram.mul_vec(&self.a);
        let aa = crate::mat::dot(&self.a, &ga);
        let half = &aa / int(2);
        x.iter()
            .enumerate()
            .map(|(i, xi)| xi + &xe * &self.a[i] - &xa * &self.e[i] - &half * (&xe * &self.e[i]))
            .collect()
    }
}

fn pairing(gram: &IMat, x: &[Int], y: &[Int]) -> Int {
    crate::mat::dot(x, &gram.mul_vec(y))
}

fn unit(n: usize, i: usize) -> Vec<Int> {
    let mut v = vec![Int::zero(); n];
    v[i] = Int::one();
    v
}

fn scaled_unit(n: usize, i: usize, c: &Int) -> Vec<Int> {
    let mut v = vec![Int::zero(); n];
    v[i] = c.clone();
    v
}

/// Quotient rounding to nearest, so `|a - q b| <= |b|/2`.
fn nearest_quotient(a: &Int, b: &Int) -> Int {
    let (mut q, r) = a.div_rem(b);
    if r.abs() * int(2) > b.abs() {
        if r.is_negative() == b.is_negative() {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Reduce a primitive vector `x`, supported on the first `planes >= 2`
/// hyperbolic blocks of the lattice with Gram `gram`, to the standard form
/// `e1 + (norm/2) f1`. Returns the move word in application order; applying
/// the moves left to right to `x` yields the standard vector exactly.
pub fn reduce_to_standard(gram: &IMat, planes: usize, x: &[Int]) -> Result<Vec<Transvection>> {
    let n = gram.nrows();
    assert!(planes >= 2, "need two hyperbolic planes for Eichler reduction");
    assert!(2 * planes <= n);
    assert_eq!(x.len(), n);
    if x[2 * planes..].iter().any(|c| !c.is_zero()) {
        return Err(Error::domain("vector is not supported on the hyperbolic blocks"));
    }
    let content = crate::mat::gcd_of(x.iter().cloned());
    if !content.is_one() {
        return Err(Error::domain("vector is not primitive"));
    }

    let mut v = x.to_vec();
    let mut word: Vec<Transvection> = Vec::new();
    let push = |v: &mut Vec<Int>, word: &mut Vec<Transvection>, e: Vec<Int>, a: Vec<Int>| {
        let t = Transvection { e, a };
        *v = t.apply(gram, v);
        word.push(t);
    };

    // plane slots: e_i at 2i, f_i at 2i+1. Coefficients A_i = v[2i], B_i = v[2i+1].
    let e1 = 0usize;
    let f1 = 1usize;
    for _round in 0..10_000 {
        let a1 = v[e1].clone();
        let z_nonzero: Vec<usize> = (2..2 * planes).filter(|&k| !v[k].is_zero()).collect();

        if z_nonzero.is_empty() {
            if a1.is_one() {
                // norm = 2 A1 B1 forces B1 = norm/2; nothing left to do
                return Ok(word);
            }
            if a1 == int(-1) {
                // two-move gadget flipping A1 = -1 to +1 through the second plane
                push(&mut v, &mut word, unit(n, f1), unit(n, 2));
                push(&mut v, &mut word, unit(n, 3), scaled_unit(n, e1, &int(-2)));
                continue;
            }
            // |A1| != 1: seed the second plane with B1 (nonzero by primitivity)
            push(&mut v, &mut word, unit(n, e1), unit(n, 2));
            continue;
        }

        if a1.is_zero() {
            // transfer some nonzero plane coefficient onto A1
            let k = z_nonzero[0];
            let (i, is_e_slot) = (k / 2, k.is_multiple_of(2));
            // coefficient at e_i is paired by f_i and vice versa
            let pivot = if is_e_slot { unit(n, 2 * i + 1) } else { unit(n, 2 * i) };
            push(&mut v, &mut word, pivot, unit(n, e1));
            continue;
        }

        if a1.abs().is_one() {
            // one move clears the tail: z -> z + A1 * (-A1 z) = 0
            let a: Vec<Int> = (0..n)
                .map(|k| if (2..2 * planes).contains(&k) { -&a1 * &v[k] } else { Int::zero() })
                .collect();
            push(&mut v, &mut word, unit(n, f1), a);
            continue;
        }

        // |A1| >= 2: reduce tail coefficients to nearest residues mod A1
        let mut a: Vec<Int> = vec![Int::zero(); n];
        let mut any = false;
        for k in 2..2 * planes {
            let q = nearest_quotient(&v[k], &a1);
            if !q.is_zero() {
                a[k] = -q;
                any = true;
            }
        }
        if any {
            push(&mut v, &mut word, unit(n, f1), a);
            if (2..2 * planes).all(|k| v[k].is_zero()) {
                continue;
            }
        }

        // Euclid step: fold the smallest tail coefficient into A1, landing in [1, |g|]
        let k = (2..2 * planes)
            .filter(|&k| !v[k].is_zero())
            .min_by_key(|&k| v[k].abs())
            .expect("tail is nonzero here");
        let g = v[k].clone();
        let r = a1.mod_floor(&g.abs());
        let target = if r.is_zero() { g.abs() } else { r };
        let c = (&target - &a1) / &g;
        debug_assert_eq!(&a1 + &c * &g, target);
        let (i, is_e_slot) = (k / 2, k % 2 == 0);
        let pivot = if is_e_slot { unit(n, 2 * i + 1) } else { unit(n, 2 * i) };
        push(&mut v, &mut word, pivot, scaled_unit(n, e1, &c));
    }
    Err(Error::ReductionFailure(format!(
        "no standard form after bounded rounds; vector {x:?}"
    )))
}

/// Apply a move word in application order.
pub fn apply_word(gram: &IMat, word: &[Transvection], x: &[Int]) -> Vec<Int> {
    let mut v = x.to_vec();
    for t in word {
        v = t.apply(gram, &v);
    }
    v
}

/// Matrix of the composite of a word (in application order).
pub fn word_matrix(gram: &IMat, word: &[Transvection]) -> IMat {
    let n = gram.nrows();
    let mut m = IMat::identity(n);
    for t in word {
        m = &t.matrix(gram) * &m;
    }
    m
}

/// The inverse word: reversed order, each translation negated.
pub fn inverse_word(word: &[Transvection]) -> Vec<Transvection> {
    word.iter().rev().map(Transvection::inverse).collect()
}
