use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::abelian::{enumerate_abelian, AbelianGroup, OrderType};
use crate::numcore::{lcm_u64, Natural};

fn nat(x: u64) -> Natural {
    Natural::from(x)
}

fn raw(g: &CayleyGroup) -> Vec<Vec<usize>> {
    g.elements().map(|a| g.row(a).collect()).collect()
}

// o(g) by repeated multiplication, independent of the cached orders
fn slow_order(g: &CayleyGroup, x: Elem) -> u64 {
    let mut y = x;
    let mut k = 1;
    while y != 0 {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

fn triple_loop_lcm(g: &CayleyGroup) -> bool {
    for a in g.elements() {
        for b in g.elements() {
            let ab = g.mul(a, b);
            let l = lcm_u64(slow_order(g, a), slow_order(g, b));
            if g.pow(ab, l) != 0 {
                return false;
            }
        }
    }
    true
}

#[test]
fn validation_rejects_malformed_tables() {
    assert_eq!(
        CayleyGroup::validate_table(&[vec![0, 1], vec![1, 1]]),
        Err(ExplicitError::NotLatinSquare {
            line: Line::Row(1),
            value: 1
        })
    );
    assert_eq!(
        CayleyGroup::validate_table(&[]),
        Err(ExplicitError::EmptyTable)
    );
    assert!(matches!(
        CayleyGroup::validate_table(&[vec![0, 1], vec![1]]),
        Err(ExplicitError::Ragged { row: 1, .. })
    ));
    assert!(matches!(
        CayleyGroup::validate_table(&[vec![0, 1], vec![1, 2]]),
        Err(ExplicitError::EntryOutOfRange {
            row: 1,
            col: 1,
            value: 2
        })
    ));
    assert!(matches!(
        CayleyGroup::validate_table(&[vec![1, 0], vec![0, 1]]),
        Err(ExplicitError::NoIdentityAtZero { element: 0 })
    ));
    // a loop that is a Latin square with identity but not associative
    let loop5 = vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ];
    assert!(matches!(
        CayleyGroup::validate_table(&loop5),
        Err(ExplicitError::NotAssociative { .. })
    ));
}

#[test]
fn constructors_produce_valid_tables() {
    let groups = [
        cyclic(12).unwrap(),
        dihedral(16).unwrap(),
        dihedral(6).unwrap(),
        dicyclic(8).unwrap(),
        dicyclic(12).unwrap(),
        heisenberg(3).unwrap(),
        elementary_abelian(2, 3).unwrap(),
        direct_product(&dihedral(6).unwrap(), &cyclic(4).unwrap()).unwrap(),
    ];
    for g in &groups {
        let v = CayleyGroup::validate_table(&raw(g)).unwrap();
        assert_eq!(v.order(), g.order());
        for x in g.elements() {
            assert_eq!(g.element_order(x), slow_order(g, x));
            assert_eq!(g.mul(x, g.inv(x)), 0);
        }
    }
    assert!(dihedral(5).is_err());
    assert!(dicyclic(6).is_err());
    assert!(heisenberg(4).is_err());
    assert!(matches!(cyclic(5000), Err(ExplicitError::TooLarge { .. })));
}

#[test]
fn dihedral_and_quaternion_values() {
    let d16 = dihedral(16).unwrap();
    assert_eq!(d16.psi(), nat(59));
    assert_eq!(
        d16.order_type(),
        OrderType::from_entries([
            (nat(1), nat(1)),
            (nat(2), nat(9)),
            (nat(4), nat(2)),
            (nat(8), nat(4))
        ])
    );
    let q8 = dicyclic(8).unwrap();
    assert_eq!(
        q8.order_type(),
        OrderType::from_entries([(nat(1), nat(1)), (nat(2), nat(1)), (nat(4), nat(6))])
    );
    let c2d16 = direct_product(&cyclic(2).unwrap(), &d16).unwrap();
    let c4q8 = direct_product(&cyclic(4).unwrap(), &q8).unwrap();
    assert_eq!(c2d16.psi(), nat(119));
    assert_eq!(c4q8.psi(), nat(119));
    assert_ne!(c2d16.order_type(), c4q8.order_type());
    assert!(!c2d16.is_lcm_group());
    assert!(c4q8.is_lcm_group());
}

#[test]
fn lcm_verdicts() {
    assert!(!dihedral(8).unwrap().is_lcm_group());
    assert!(dicyclic(8).unwrap().is_lcm_group());
    assert!(!dihedral(6).unwrap().is_nilpotent());
    assert!(dihedral(8).unwrap().is_nilpotent());
    assert!(heisenberg(3).unwrap().is_lcm_group());
    assert!(!heisenberg(2).unwrap().is_lcm_group());
    for g in Catalogue::up_to(24).groups() {
        assert_eq!(g.is_lcm_group(), triple_loop_lcm(g), "{}", g.label());
    }
}

#[test]
fn structural_criterion_matches_pairwise_test() {
    for g in Catalogue::up_to(64).groups() {
        assert_eq!(g.is_lcm_group(), g.is_lcm_structural(), "{}", g.label());
    }
}

#[test]
fn index_two_subgroup_counts() {
    assert_eq!(index_p_subgroups(&cyclic(4).unwrap(), 2).len(), 1);
    assert_eq!(
        index_p_subgroups(&elementary_abelian(2, 2).unwrap(), 2).len(),
        3
    );
    assert_eq!(index_p_subgroups(&dihedral(16).unwrap(), 2).len(), 3);
    assert_eq!(
        index_p_subgroups(&elementary_abelian(3, 3).unwrap(), 3).len(),
        13
    );
    assert!(index_p_subgroups(&cyclic(9).unwrap(), 2).is_empty());
    // S3 has three non-normal subgroups of index 3
    let s3 = dihedral(6).unwrap();
    let idx3 = index_p_subgroups(&s3, 3);
    assert_eq!(idx3.len(), 3);
    assert!(idx3.iter().all(|m| !s3.is_normal(m)));
}

#[test]
fn hyperplanes_agree_with_lattice_search() {
    for g in Catalogue::up_to(48).groups() {
        for p in g.prime_divisors() {
            let fast = index_p_subgroups(g, p);
            let slow = subgroups_of_order(g, g.order() / p as usize);
            assert_eq!(fast, slow, "{} p={p}", g.label());
        }
    }
}

#[test]
fn quotients() {
    let d16 = dihedral(16).unwrap();
    let rot = d16.generated(&[1]);
    assert_eq!(rot.len(), 8);
    let (q, proj) = d16.quotient_map(&rot).unwrap();
    assert_eq!(q.order(), 2);
    assert_eq!(proj[0], 0);
    let refl = d16.generated(&[8]);
    assert!(matches!(
        d16.quotient(&refl),
        Err(ExplicitError::NotNormal { .. })
    ));
    // C4 x C4 / Ω_1 ≅ C2 x C2
    let g = from_abelian(
        &AbelianGroup::from_components([(2, crate::numcore::Partition::new(vec![2, 2]))]).unwrap(),
    )
    .unwrap();
    let omega = Subgroup::new(&g, g.omega_level(2, 1)).unwrap();
    let q = g.quotient(&omega).unwrap();
    assert_eq!(q.psi(), nat(7));
}

#[test]
fn subgroup_validation() {
    let g = cyclic(6).unwrap();
    assert!(Subgroup::new(&g, vec![0, 2, 4]).is_ok());
    assert!(matches!(
        Subgroup::new(&g, vec![0, 1]),
        Err(ExplicitError::NotSubgroup { .. })
    ));
    assert!(matches!(
        Subgroup::new(&g, vec![2, 4]),
        Err(ExplicitError::NotSubgroup { .. })
    ));
    assert!(matches!(
        Subgroup::new(&g, vec![0, 9]),
        Err(ExplicitError::ElementOutOfRange(9))
    ));
    assert_eq!(Subgroup::new(&g, vec![4, 0, 2]).unwrap().index(), 2);
}

#[test]
fn coset_summaries() {
    let g = cyclic(8).unwrap();
    let m = g.generated(&[2]);
    assert_eq!(g.coset(1, &m).elements(), &[1, 3, 5, 7]);
    assert_eq!(g.coset_psi(1, &m), nat(32));
    assert_eq!(g.coset_order_min(1, &m), 8);
    assert_eq!(g.coset_exponent(0, &m), 4);
    assert_eq!(
        g.coset_order_type(0, &m),
        OrderType::from_orders([1, 2, 4, 4])
    );
    assert_eq!(g.complement(&m), vec![1, 3, 5, 7]);
}

#[test]
fn p_part_decomposition_splits_orders() {
    for g in [
        cyclic(36).unwrap(),
        direct_product(&dihedral(6).unwrap(), &cyclic(4).unwrap()).unwrap(),
    ] {
        for x in g.elements() {
            for p in [2, 3] {
                let (a, b) = g.p_part_decomposition(x, p);
                let o = g.element_order(x);
                assert_eq!(g.mul(a, b), x);
                assert_eq!(g.mul(a, b), g.mul(b, a));
                assert_eq!(g.element_order(a), crate::numcore::p_part(o, p));
                assert_eq!(g.element_order(b), o / crate::numcore::p_part(o, p));
            }
        }
    }
}

#[test]
fn explicit_agrees_with_symbolic_engine() {
    for n in 1..=512u64 {
        for a in enumerate_abelian(&nat(n)).unwrap() {
            let g = from_abelian(&a).unwrap();
            assert_eq!(g.psi(), a.psi(), "{a}");
            assert_eq!(g.order_type(), a.order_type(), "{a}");
            assert_eq!(nat(g.exponent()), a.exponent(), "{a}");
            assert!(g.is_lcm_group());
        }
    }
}

#[test]
fn catalogue_contents() {
    let cat = Catalogue::up_to(128);
    assert!(cat.groups().all(|g| g.order() <= 128));
    assert!(cat.groups().any(|g| g.label() == "Q8"));
    assert!(cat.groups().any(|g| g.label() == "Heis(3)"));
    let abelian = cat.entries().iter().filter(|e| e.abelian.is_some()).count();
    let expected: usize = (1..=128u64)
        .map(|n| enumerate_abelian(&nat(n)).unwrap().len())
        .sum();
    assert_eq!(abelian, expected);
}

proptest! {
    #[test]
    fn products_multiply_psi_for_coprime_orders(a in 1u64..12, b in 1u64..12) {
        prop_assume!(crate::numcore::gcd_u64(a, b) == 1);
        let g = direct_product(&cyclic(a).unwrap(), &dihedral(2 * b + 2).unwrap()).unwrap();
        let h = dihedral(2 * b + 2).unwrap();
        if crate::numcore::gcd_u64(a, 2 * b + 2) == 1 {
            prop_assert_eq!(g.psi(), cyclic(a).unwrap().psi() * h.psi());
        }
    }

    #[test]
    fn powers_compose(n in 1u64..40, x in 0usize..40, i in 0u64..50, j in 0u64..50) {
        let g = cyclic(n).unwrap();
        let x = x % g.order();
        prop_assert_eq!(g.mul(g.pow(x, i), g.pow(x, j)), g.pow(x, i + j));
    }
}

#[test]
fn small_examples() {
    assert_eq!(CayleyGroup::validate_table(&[vec![0]]).unwrap().order(), 1);
    assert!(CayleyGroup::validate_table(&[vec![0, 1], vec![1, 0]]).is_ok());
    assert_eq!(cyclic(1).unwrap().psi(), nat(1));

    let q8 = dicyclic(8).unwrap();
    assert_eq!(q8.omega_level(2, 1).len(), 2);
    assert_eq!(q8.omega_level(2, 0), vec![0]);
    let d8 = dihedral(8).unwrap();
    // r², four reflections, and the identity
    assert_eq!(d8.omega_level(2, 1).len(), 6);
    assert!(!d8.is_product_closed(&d8.omega_level(2, 1)));

    let center = Subgroup::new(&q8, q8.omega_level(2, 1)).unwrap();
    assert_eq!(
        q8.quotient(&center).unwrap().order_type(),
        elementary_abelian(2, 2).unwrap().order_type()
    );
    let c2c3 = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()).unwrap();
    assert_eq!(c2c3.order_type(), cyclic(6).unwrap().order_type());
    assert_eq!(dihedral(16).unwrap().generated(&[2]).len(), 4);

    let c6 = cyclic(6).unwrap();
    assert_eq!(c6.p_part_decomposition(1, 2), (3, 4));
    assert_eq!(c6.p_part_decomposition(0, 2), (0, 0));
    let c8 = cyclic(8).unwrap();
    assert_eq!(c8.p_part_decomposition(1, 2), (1, 0));

    let c4 = cyclic(4).unwrap();
    let m = c4.generated(&[2]);
    assert_eq!(index_p_subgroups(&c4, 2), vec![m.clone()]);
    assert_eq!(c4.coset_psi(1, &m), nat(8));
    assert_eq!(
        c4.coset_psi(0, &m),
        c4.psi_of_set(m.members().iter().copied())
    );
    assert_eq!(c4.coset_order_min(3, &Subgroup::trivial(&c4)), 4);

    assert!(cyclic(12).unwrap().is_nilpotent());
    assert!(q8.is_lcm_structural());
    let c2d16 = direct_product(&cyclic(2).unwrap(), &dihedral(16).unwrap()).unwrap();
    assert!(!c2d16.is_lcm_structural());
    assert!(direct_product(&cyclic(4).unwrap(), &q8)
        .unwrap()
        .is_lcm_structural());
}
