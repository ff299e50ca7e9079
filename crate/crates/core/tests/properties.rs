use num::BigRational;
use proptest::prelude::*;

use pakron::diagram_algebra::{
    compose, generator_e, generator_s, AlgebraElement, SetPartitionDiagram, StandardModule,
};
use pakron::kronecker::{kron_padded_oracle, kron_via_blocks, kron_via_dagger, reduced_kron, stable_n};
use pakron::partitions::{
    ascending_chain, block_chain, dagger, is_n_pair, min_padding, n_pair_predecessor, n_pair_successor, pad,
    PaddedPartition,
};
use pakron::Partition;

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(|n| {
        let all = Partition::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn diagram(top: usize, bottom: usize) -> impl Strategy<Value = SetPartitionDiagram> {
    proptest::collection::vec(0..(top + bottom).max(1), top + bottom)
        .prop_map(move |labels| SetPartitionDiagram::from_labels(top, bottom, &labels).unwrap())
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

proptest! {
    #[test]
    fn partition_text_round_trip(p in partition(12)) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn conjugation_is_an_involution(p in partition(14)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn padding_round_trips(p in partition(8), extra in 0usize..6) {
        let n = min_padding(&p) + extra;
        let padded = pad(&p, n).unwrap();
        prop_assert_eq!(padded.to_partition().size(), n);
        prop_assert_eq!(PaddedPartition::from_full(&padded.to_partition()).base().clone(), p.clone());
        if let Some(below) = min_padding(&p).checked_sub(1) {
            prop_assert!(pad(&p, below).is_err());
        }
    }

    #[test]
    fn n_pairs_invert(mu in partition(8), n in 0usize..14) {
        if let Some(lambda) = n_pair_successor(&mu, n) {
            prop_assert!(is_n_pair(&mu, &lambda, n));
            prop_assert_eq!(n_pair_predecessor(&lambda, n), Some(mu.clone()));
        }
    }

    #[test]
    fn chain_entries_are_daggers(nu in partition(6), extra in 0usize..6, cap in 0usize..24) {
        let n = min_padding(&nu) + extra;
        let padded = pad(&nu, n).unwrap();
        let chain = block_chain(&nu, n, cap);
        for (i, entry) in chain.entries().iter().enumerate() {
            prop_assert_eq!(&dagger(&padded, i), entry);
            prop_assert!(entry.size() <= cap);
        }
        let next = ascending_chain(&nu, n).nth(chain.len()).unwrap();
        prop_assert!(next.size() > cap);
    }

    #[test]
    fn reduced_coefficient_is_symmetric(a in partition(3), b in partition(3), c in partition(4)) {
        let g = reduced_kron(&a, &b, &c).unwrap();
        prop_assert_eq!(g, reduced_kron(&b, &a, &c).unwrap());
    }

    #[test]
    fn coefficients_stabilize(a in partition(3), b in partition(3), c in partition(4)) {
        let n0 = stable_n(&a, &b, &c);
        prop_assume!(n0 + 3 <= 14);
        let g = kron_padded_oracle(&a, &b, &c, n0).unwrap();
        for n in n0 + 1..=n0 + 3 {
            prop_assert_eq!(kron_padded_oracle(&a, &b, &c, n).unwrap(), g);
        }
        if c.size() <= a.size() + b.size() {
            prop_assert_eq!(reduced_kron(&a, &b, &c).unwrap(), g);
        }
    }

    #[test]
    fn alternating_sums_match_oracle(a in partition(3), b in partition(3), c in partition(6), extra in 0usize..4) {
        let n = min_padding(&a).max(min_padding(&b)).max(min_padding(&c)).max(1) + extra;
        let g = kron_padded_oracle(&a, &b, &c, n).unwrap();
        prop_assert_eq!(kron_via_blocks(&a, &b, &c, n).unwrap(), g);
        prop_assert_eq!(kron_via_dagger(&a, &b, &c, n).unwrap(), g);
    }

    #[test]
    fn diagram_text_round_trip(d in diagram(4, 3)) {
        prop_assume!(d.to_string().contains('4') && d.to_string().contains("3'"));
        prop_assert_eq!(d.to_string().parse::<SetPartitionDiagram>().unwrap(), d);
    }

    #[test]
    fn composition_is_associative(x in diagram(3, 4), y in diagram(4, 2), z in diagram(2, 3)) {
        let (t1, xy) = compose(&x, &y).unwrap();
        let (t2, left) = compose(&xy, &z).unwrap();
        let (t3, yz) = compose(&y, &z).unwrap();
        let (t4, right) = compose(&x, &yz).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(t1 + t2, t3 + t4);
    }

    #[test]
    fn flip_reverses_products(x in diagram(3, 3), y in diagram(3, 3)) {
        let (t, xy) = compose(&x, &y).unwrap();
        let (s, yx) = compose(&y.flip(), &x.flip()).unwrap();
        prop_assert_eq!(t, s);
        prop_assert_eq!(xy.flip(), yx);
    }

    #[test]
    fn propagation_never_grows(x in diagram(4, 4), y in diagram(4, 4)) {
        let (_, xy) = compose(&x, &y).unwrap();
        prop_assert!(xy.propagating_count() <= x.propagating_count().min(y.propagating_count()));
    }

    #[test]
    fn standard_action_is_multiplicative(
        r in 1usize..=3,
        seed_x in proptest::collection::vec(0usize..6, 6),
        seed_y in proptest::collection::vec(0usize..6, 6),
        nu_pick in 0usize..16,
        num in 1i64..9,
        den in 1i64..4,
    ) {
        let x = SetPartitionDiagram::from_labels(r, r, &seed_x[..2 * r]).unwrap();
        let y = SetPartitionDiagram::from_labels(r, r, &seed_y[..2 * r]).unwrap();
        let labels = Partition::up_to(r);
        let nu = &labels[nu_pick % labels.len()];
        let delta = q(num) / q(den);
        let module = StandardModule::new(r, nu, delta.clone(), 7).unwrap();
        let (t, z) = compose(&x, &y).unwrap();
        let lhs = module.matrix_of(&z).unwrap().scale(&num::pow(delta, t));
        let rhs = &module.matrix_of(&x).unwrap() * &module.matrix_of(&y).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cell_forms_are_nondegenerate_off_integers(r in 1usize..=3, num in 1i64..40, den in 2i64..7) {
        prop_assume!(num % den != 0);
        let delta = q(num) / q(den);
        for nu in Partition::up_to(r) {
            let module = StandardModule::new(r, &nu, delta.clone(), 7).unwrap();
            prop_assert_eq!(module.gram_matrix().unwrap().rank(), module.dim(), "ν = {}", nu);
        }
    }
}

#[test]
fn semisimple_exactly_off_small_integers() {
    // P_r(δ) for integer δ >= 1 has a degenerate cell form iff δ <= 2r - 2.
    for r in 1..=3usize {
        for d in 1..=(2 * r as i64 + 1) {
            let degenerate = Partition::up_to(r).iter().any(|nu| {
                let module = StandardModule::new(r, nu, q(d), 7).unwrap();
                module.gram_matrix().unwrap().rank() < module.dim()
            });
            assert_eq!(degenerate, d <= 2 * r as i64 - 2, "r = {r}, δ = {d}");
        }
    }
}

#[test]
fn generators_satisfy_relations() {
    let delta = q(5) / q(3);
    for r in 1..=4 {
        let id = AlgebraElement::identity(r, delta.clone()).unwrap();
        for l in 1..=r {
            let e = generator_e(l, r, delta.clone()).unwrap();
            assert_eq!(e.mul(&e).unwrap(), e);
            assert_eq!(e.mul(&id).unwrap(), e);
        }
        for i in 1..r {
            let s = generator_s(i, i + 1, r, delta.clone()).unwrap();
            assert_eq!(s.mul(&s).unwrap(), id);
            if i + 2 <= r {
                let t = generator_s(i + 1, i + 2, r, delta.clone()).unwrap();
                let sts = s.mul(&t).unwrap().mul(&s).unwrap();
                assert_eq!(sts, t.mul(&s).unwrap().mul(&t).unwrap());
            }
        }
    }
    let zero = AlgebraElement::zero(2, delta.clone()).unwrap();
    let e = generator_e(1, 2, delta.clone()).unwrap();
    assert!(e.add(&e.scale(&q(-1))).unwrap().is_zero());
    assert_eq!(zero.mul(&e).unwrap(), zero);
    assert!(AlgebraElement::identity(2, q(1)).unwrap().mul(&e).is_err());
}

#[test]
fn full_algebra_multiplication_is_associative() {
    let delta = q(3);
    let basis: Vec<_> = SetPartitionDiagram::all(2, 2)
        .into_iter()
        .map(|d| AlgebraElement::from_diagram(d, delta.clone()).unwrap())
        .collect();
    for a in &basis {
        for b in &basis {
            let ab = a.mul(b).unwrap();
            for c in &basis {
                assert_eq!(ab.mul(c).unwrap(), a.mul(&b.mul(c).unwrap()).unwrap());
            }
        }
    }
}
