use proptest::prelude::*;

use beck_core::bijections::{phi_forward, phi_inverse};
use beck_core::membership::PlainFamily;
use beck_core::{parse_partition, xi, xi_inverse, Notation, Partition};

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::new)
}

/// A random partition pushed into `F_r` by capping every gap at `r − 1`.
fn flat(r: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..r, 0..=14).prop_map(|gaps| {
        let mut parts = Vec::new();
        let mut value = 0;
        for g in gaps.into_iter().rev() {
            value += g;
            if value > 0 {
                parts.push(value);
            }
        }
        Partition::new(parts)
    })
}

proptest! {
    #[test]
    fn union_and_sum_add_sizes(a in partition(30, 10), b in partition(30, 10)) {
        prop_assert_eq!(a.union(&b).size(), a.size() + b.size());
        prop_assert_eq!(a.sum(&b).size(), a.size() + b.size());
        prop_assert_eq!(a.union(&b).len(), a.len() + b.len());
    }

    #[test]
    fn subtract_undoes_sum(a in partition(30, 10), b in partition(30, 10)) {
        let s = a.sum(&b);
        prop_assert_eq!(s.subtract(&b).unwrap(), a);
    }

    #[test]
    fn conjugation_is_an_involution(a in partition(25, 12)) {
        let c = a.conjugate();
        prop_assert_eq!(c.size(), a.size());
        prop_assert_eq!(c.len() as u32, a.largest());
        prop_assert_eq!(c.conjugate(), a);
    }

    #[test]
    fn scale_then_divide(a in partition(25, 12), k in 1u32..7) {
        prop_assert_eq!(a.scale(k).divide(k), Some(a));
    }

    #[test]
    fn rendering_round_trips(a in partition(40, 12)) {
        prop_assert_eq!(parse_partition(&a.to_string(), Notation::Plain).unwrap(), a.clone());
        let exp = a.to_exponential();
        prop_assert_eq!(parse_partition(&exp, Notation::Exponential).unwrap(), a.clone());
        prop_assert_eq!(exp.parse::<Partition>().unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn xi_round_trips_beyond_the_exhaustive_range(lambda in flat(3)) {
        prop_assert!(PlainFamily::Flat(3).contains(&lambda));
        let kappa = xi(&lambda, 3).unwrap();
        prop_assert!(PlainFamily::Regular(3).contains(&kappa));
        prop_assert_eq!(kappa.size(), lambda.size());
        prop_assert_eq!(xi_inverse(&kappa, 3).unwrap(), lambda);
    }

    #[test]
    fn xi_round_trips_for_larger_moduli(lambda in flat(5)) {
        let kappa = xi(&lambda, 5).unwrap();
        prop_assert_eq!(xi_inverse(&kappa, 5).unwrap(), lambda);
    }

    #[test]
    fn phi_round_trips_when_defined(lambda in partition(40, 12)) {
        if let Ok(mu) = phi_forward(&lambda, 4) {
            prop_assert!(PlainFamily::OneDivisible(4).contains(&mu));
            prop_assert_eq!(phi_inverse(&mu, 4).unwrap(), lambda);
        }
    }
}
