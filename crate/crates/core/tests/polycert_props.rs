use std::collections::BTreeSet;

use gamma_envelope::polycert::{
    certify_negative_on_unit, certify_sign, lemma2_polynomials, sign_changes, sturm_root_count, Polynomial, Sign,
    SignCertificate, Verdict,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// `lead · ∏ (x − r)` with ascending coefficients.
fn from_roots(lead: i64, roots: &[i64]) -> Polynomial {
    let mut c: Vec<BigInt> = vec![BigInt::from(lead)];
    for &r in roots {
        let mut next = vec![BigInt::from(0); c.len() + 1];
        for (i, ci) in c.iter().enumerate() {
            next[i + 1] += ci;
            next[i] -= ci * r;
        }
        c = next;
    }
    Polynomial::new(c)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

proptest! {
    #[test]
    fn sturm_counts_distinct_roots(
        roots in prop::collection::btree_set(-12i64..12, 1..7),
        repeat in prop::collection::vec(any::<bool>(), 7),
        lead in prop::sample::select(vec![-3i64, -1, 1, 2, 5]),
        a in -15i64..15,
        width in 1i64..30,
    ) {
        // doubling some roots checks the square-free reduction
        let mut all: Vec<i64> = roots.iter().copied().collect();
        for (r, &twice) in roots.iter().zip(&repeat) {
            if twice {
                all.push(*r);
            }
        }
        let p = from_roots(lead, &all);
        let b = a + width;
        let expected = roots.iter().filter(|&&r| a < r && r < b).count();
        prop_assert_eq!(sturm_root_count(&p, &rat(a, 1), &rat(b, 1)).unwrap(), expected);
        // half-integer ends never hit a root
        let expected = roots.iter().filter(|&&r| 2 * r > 2 * a - 1 && 2 * r < 2 * b + 1).count();
        prop_assert_eq!(sturm_root_count(&p, &rat(2 * a - 1, 2), &rat(2 * b + 1, 2)).unwrap(), expected);
    }

    #[test]
    fn descartes_bounds_positive_roots_with_parity(
        roots in prop::collection::btree_set(-9i64..10, 1..7),
        lead in prop::sample::select(vec![-2i64, 1, 3]),
    ) {
        let roots: BTreeSet<i64> = roots.into_iter().filter(|&r| r != 0).collect();
        prop_assume!(!roots.is_empty());
        let all: Vec<i64> = roots.iter().copied().collect();
        let p = from_roots(lead, &all);
        let positive = roots.iter().filter(|&&r| r > 0).count();
        let v = sign_changes(&p).unwrap();
        prop_assert!(positive <= v);
        prop_assert_eq!((v - positive) % 2, 0);
    }

    #[test]
    fn certificates_agree_with_roots(
        roots in prop::collection::btree_set(-6i64..8, 1..5),
        lead in prop::sample::select(vec![-1i64, 1, 4]),
    ) {
        let all: Vec<i64> = roots.iter().copied().collect();
        let p = from_roots(lead, &all);
        let has_root_inside = roots.iter().any(|&r| 0 < r && r < 3);
        let c = certify_sign(&p, &rat(0, 1), &rat(3, 1), Sign::Positive).unwrap();
        let n = certify_sign(&p, &rat(0, 1), &rat(3, 1), Sign::Negative).unwrap();
        if has_root_inside {
            prop_assert_eq!(c.verdict, Verdict::Refuted);
            prop_assert_eq!(n.verdict, Verdict::Refuted);
        } else {
            // exactly one of the two signs holds on (0, 3)
            prop_assert!((c.verdict == Verdict::Certified) != (n.verdict == Verdict::Certified));
        }
    }
}

#[test]
fn lemma_polynomials_descartes_consistency() {
    let far = rat(1000, 1);
    for (name, p) in lemma2_polynomials() {
        let v = sign_changes(&p).unwrap();
        let positive = sturm_root_count(&p, &rat(0, 1), &far).unwrap();
        assert!(positive <= v && (v - positive).is_multiple_of(2), "{name}");
        assert_eq!(positive, 1, "{name}");
    }
}

#[test]
fn recorded_values_re_evaluate_exactly() {
    for (name, p) in lemma2_polynomials() {
        let cert = certify_negative_on_unit(&p).unwrap();
        let back = SignCertificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back, cert, "{name}");
        for pv in back.endpoint_values.iter().chain(back.descartes_witness.iter()) {
            assert_eq!(back.polynomial.eval(&pv.point), pv.value, "{name}");
        }
    }
}
