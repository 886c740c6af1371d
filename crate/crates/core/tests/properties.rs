use proptest::prelude::*;
use ringq_core::ring::phi;
use ringq_core::{parse_poly, BinPoly, RingElem, RingVector};

fn poly(max_deg: usize) -> impl Strategy<Value = BinPoly> {
    prop::collection::vec(any::<bool>(), 0..=max_deg + 1)
        .prop_map(|bits| BinPoly::from_exponents(bits.iter().enumerate().filter(|b| *b.1).map(|b| b.0)))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = BinPoly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn unit_constant_poly(max_deg: usize) -> impl Strategy<Value = BinPoly> {
    poly(max_deg - 1).prop_map(|p| &p.shl(1) + &BinPoly::one())
}

fn ring_elem() -> impl Strategy<Value = RingElem> {
    (0u8..8).prop_map(RingElem::from_index)
}

fn ring_vec(n: usize) -> impl Strategy<Value = RingVector> {
    prop::collection::vec(ring_elem(), n).prop_map(RingVector)
}

fn vec_pair(max_n: usize) -> impl Strategy<Value = (RingVector, RingVector)> {
    (1..=max_n).prop_flat_map(|n| (ring_vec(n), ring_vec(n)))
}

proptest! {
    #[test]
    fn division_reconstructs(a in poly(200), d in nonzero_poly(90)) {
        let (q, r) = a.div_rem(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &r, a);
        prop_assert!(r.is_zero() || r.deg() < d.deg());
    }

    #[test]
    fn product_is_divisible(a in poly(100), b in nonzero_poly(100)) {
        let (q, r) = (&a * &b).div_rem(&b).unwrap();
        prop_assert_eq!(q, a);
        prop_assert!(r.is_zero());
    }

    #[test]
    fn multiplication_commutes_and_distributes(a in poly(80), b in poly(80), c in poly(80)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(60), b in nonzero_poly(60), c in nonzero_poly(20)) {
        let (a, b) = (&a * &c, &b * &c);
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.divides(&a) && g.divides(&b) && c.divides(&g));
    }

    #[test]
    fn reciprocal_is_multiplicative_involution(a in unit_constant_poly(60), b in unit_constant_poly(60)) {
        let ra = a.reciprocal().unwrap();
        prop_assert_eq!((&a * &b).reciprocal().unwrap(), &ra * &b.reciprocal().unwrap());
        prop_assert_eq!(ra.deg(), a.deg());
        prop_assert_eq!(ra.reciprocal().unwrap(), a);
    }

    #[test]
    fn text_and_hex_round_trip(a in poly(150)) {
        prop_assert_eq!(parse_poly(&a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(parse_poly(&a.to_hex()).unwrap(), a);
    }

    #[test]
    fn shift_commutes_with_gray(x in (1usize..=16).prop_flat_map(ring_vec)) {
        prop_assert_eq!(x.sigma().gray(), phi(&x.gray()).unwrap());
    }

    #[test]
    fn gray_is_a_linear_isometry((x, y) in vec_pair(16)) {
        let s = x.add(&y).unwrap();
        prop_assert_eq!(s.gray(), x.gray().xor(&y.gray()));
        prop_assert_eq!(s.lee_weight() as usize, x.gray().xor(&y.gray()).weight());
        prop_assert_eq!(RingVector::from_gray(&x.gray()), x);
    }

    #[test]
    fn binary_dot_is_the_v2_coefficient((x, y) in vec_pair(12)) {
        let ip = x.inner_product(&y).unwrap();
        prop_assert_eq!(x.gray().dot(&y.gray()), ip.index() & 4 != 0);
    }

    #[test]
    fn ring_multiplication_matches_polynomials(a in ring_elem(), b in ring_elem()) {
        let to_poly = |r: RingElem| {
            let idx = r.index();
            BinPoly::from_mask(idx as u128)
        };
        let modulus = BinPoly::from_exponents([3, 1]);
        prop_assert_eq!(to_poly(a * b), (&to_poly(a) * &to_poly(b)).rem(&modulus).unwrap());
    }
}
