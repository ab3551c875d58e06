//! Property tests for the algebraic invariants that hold for *all* inputs,
//! not just the worked examples: bilinearity, divisibility invariance,
//! saturation and complement laws, group closure, and invariant stability.

use genkummer::invariant::theta;
use genkummer::isometry::{
    self, mon2_contains, transvection, Isometry, Sign,
};
use genkummer::lattice::{IntLattice, Lattice, LatticeVector, Sublattice};
use genkummer::mat::{int, Int};
use genkummer::mukai::{dual_poltype, PolType};
use genkummer::oracle::{collect_classes, EnumerationConfig};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn coords7() -> impl Strategy<Value = [i64; 7]> {
    prop::array::uniform7(-9i64..=9)
}

fn coords8() -> impl Strategy<Value = [i64; 8]> {
    prop::array::uniform8(-6i64..=6)
}

fn kummer(n: i64) -> Lattice {
    IntLattice::kummer(n).unwrap()
}

fn vec_in(l: &Lattice, coords: &[i64]) -> LatticeVector {
    LatticeVector::from_i64(l, coords).unwrap()
}

/// A random element of the group generated by transvections and ρ-pairs,
/// reproducible from the seed. Always lands in Mon² on a Kummer lattice.
fn random_mon2_word(l: &Lattice, seed: u64, len: usize) -> Isometry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Isometry::identity(l);
    for _ in 0..len {
        let t = loop {
            let plane = rng.gen_range(0..3usize);
            let slot = 2 * plane + rng.gen_range(0..2usize);
            let partner = if slot % 2 == 0 { slot + 1 } else { slot - 1 };
            let mut coords = vec![0i64; l.rank()];
            for (i, c) in coords.iter_mut().enumerate() {
                if i != partner {
                    *c = rng.gen_range(-2..=2);
                }
            }
            let e = LatticeVector::basis(l, slot);
            let a = LatticeVector::from_i64(l, &coords).unwrap();
            if let Ok(t) = transvection(&e, &a) {
                break t;
            }
        };
        g = t.compose(&g).unwrap();
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pairing_is_symmetric_and_bilinear(a in coords7(), b in coords7(), c in coords7(), k in -4i64..=4) {
        let l = kummer(3);
        let (x, y, z) = (vec_in(&l, &a), vec_in(&l, &b), vec_in(&l, &c));
        prop_assert_eq!(x.pair(&y).unwrap(), y.pair(&x).unwrap());
        let lhs = x.add(&y.scaled(&int(k))).unwrap().pair(&z).unwrap();
        let rhs = x.pair(&z).unwrap() + int(k) * y.pair(&z).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn divisibility_divides_every_pairing(a in coords7(), b in coords7()) {
        let l = kummer(5);
        let (x, y) = (vec_in(&l, &a), vec_in(&l, &b));
        let d = x.divisibility();
        let p = x.pair(&y).unwrap();
        if d.is_zero() {
            prop_assert!(p.is_zero());
        } else {
            prop_assert!((p % d).is_zero());
        }
    }

    #[test]
    fn divisibility_is_isometry_invariant(a in coords7(), seed in any::<u64>()) {
        let l = kummer(3);
        let x = vec_in(&l, &a);
        let g = random_mon2_word(&l, seed, 4);
        prop_assert_eq!(g.apply(&x).unwrap().divisibility(), x.divisibility());
    }

    #[test]
    fn saturation_laws(a in coords8(), b in coords8()) {
        let m = IntLattice::mukai();
        let s = Sublattice::new(m.clone(), vec![vec_in(&m, &a), vec_in(&m, &b)]).unwrap();
        let sat = s.saturate();
        // contains the input and is idempotent
        for g in s.generators() {
            prop_assert!(sat.contains(g));
        }
        prop_assert!(sat.saturate().spans_same(&sat));
        // index² divides the ratio of Gram determinants when nondegenerate
        if s.rank() == 2 {
            let dg = s.gram().det();
            let dsat = sat.gram().det();
            if !dsat.is_zero() {
                let idx = genkummer::lattice::saturation_index(&s);
                prop_assert_eq!(&dg / &dsat, &idx * &idx);
            }
        }
    }

    #[test]
    fn double_complement_is_saturation(a in coords8(), b in coords8()) {
        let m = IntLattice::mukai();
        let va = vec_in(&m, &a);
        let vb = vec_in(&m, &b);
        prop_assume!(!va.is_zero() || !vb.is_zero());
        let s = Sublattice::new(m.clone(), vec![va, vb]).unwrap();
        let cc = s.orthogonal_complement().orthogonal_complement();
        prop_assert!(cc.spans_same(&s.saturate()));
    }

    #[test]
    fn isometry_words_preserve_the_form(seed in any::<u64>(), len in 1usize..6) {
        let l = kummer(2);
        let g = random_mon2_word(&l, seed, len);
        // constructor enforces the matrix identity; determinant must be ±1
        prop_assert!(g.det().numer().abs().is_one() && g.det().denom().is_one());
        prop_assert!(mon2_contains(&g).unwrap());
        // closure under inverse and composition
        prop_assert!(mon2_contains(&g.inverse()).unwrap());
        let h = random_mon2_word(&l, seed.wrapping_add(1), len);
        prop_assert!(mon2_contains(&g.compose(&h).unwrap()).unwrap());
    }

    #[test]
    fn transvections_act_trivially_on_discriminant(seed in any::<u64>()) {
        let l = kummer(4);
        let g = random_mon2_word(&l, seed, 1);
        prop_assert_eq!(
            isometry::discriminant_action(&g).unwrap(),
            genkummer::isometry::DiscAction::Plus
        );
    }

    #[test]
    fn rho_of_short_roots_is_in_w_not_mon2(seed in any::<u64>(), positive in any::<bool>()) {
        let l = kummer(3);
        let base = if positive { [1i64, 1, 0, 0, 0, 0, 0] } else { [1, -1, 0, 0, 0, 0, 0] };
        let u = random_mon2_word(&l, seed, 3).apply(&vec_in(&l, &base)).unwrap();
        prop_assert_eq!(u.norm(), int(if positive { 2 } else { -2 }));
        let r = isometry::rho(&u).unwrap();
        prop_assert!(isometry::w_contains(&r).unwrap());
        prop_assert!(!mon2_contains(&r).unwrap());
    }

    #[test]
    fn theta_is_mon2_invariant(idx in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let classes = collect_classes(&EnumerationConfig::new(3, 2));
        let t = classes[idx.index(classes.len())];
        let l = kummer(3);
        let alpha = vec_in(&l, &t);
        let g = random_mon2_word(&l, seed, 3);
        let image = g.apply(&alpha).unwrap();
        prop_assert_eq!(theta(&image, 3).unwrap(), theta(&alpha, 3).unwrap());
        prop_assert_eq!(theta(&alpha.negated(), 3).unwrap(), theta(&alpha, 3).unwrap());
    }

    #[test]
    fn dual_poltype_is_an_involution(factors in prop::collection::vec(1i64..=4, 1..5)) {
        // build a divisibility chain from cumulative products
        let mut entries = Vec::new();
        let mut acc = 1i64;
        for f in factors {
            acc *= f;
            entries.push(acc);
        }
        let t = PolType::new(entries).unwrap();
        let dual = dual_poltype(&t);
        prop_assert_eq!(dual.len(), t.len());
        prop_assert_eq!(dual_poltype(&dual), t);
    }
}

#[test]
fn enumeration_is_deterministic_across_runs() {
    let cfg = EnumerationConfig::new(3, 3);
    let a = collect_classes(&cfg);
    let b = collect_classes(&cfg);
    assert_eq!(a, b);
    assert!(!a.is_empty());
}

#[test]
fn find_root_postconditions_on_sampled_classes() {
    let l = kummer(8);
    for t in collect_classes(&EnumerationConfig::new(8, 3)) {
        let alpha = vec_in(&l, &t);
        for sign in [Sign::Plus, Sign::Minus] {
            let u = isometry::find_root(&alpha, sign).unwrap();
            assert!(u.pair(&alpha).unwrap().is_zero());
            assert_eq!(u.norm(), int(2 * sign.value()));
        }
    }
}

#[test]
fn disc_group_order_matches_determinant() {
    for n in 1..=12i64 {
        let l = kummer(n);
        assert_eq!(l.discriminant_group().unwrap().order(), Int::from(2 * n + 2));
        assert_eq!(l.det().abs(), Int::from(2 * n + 2));
    }
}
