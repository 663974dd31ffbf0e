//! Property: on the GF(16) triple, every error of weight at most the radius
//! is removed exactly, and any decoder output is a codeword.

use std::sync::Arc;

use proptest::prelude::*;
use rs_plotkin::cascade::{self, CascadeStatus};
use rs_plotkin::{FieldElement, GaloisField, MessageTriple, NestedTriple};

fn triple() -> NestedTriple {
    let f = Arc::new(GaloisField::new(4, None).unwrap());
    NestedTriple::new(f, 15, 11, 9, 5, None).unwrap()
}

fn symbols(len: usize) -> impl Strategy<Value = Vec<FieldElement>> {
    prop::collection::vec((0u16..16).prop_map(FieldElement::from_raw), len)
}

fn sparse_error(len: usize, max_weight: usize) -> impl Strategy<Value = Vec<FieldElement>> {
    prop::collection::vec((0..len, 1u16..16), 0..=max_weight).prop_map(move |hits| {
        let mut e = vec![FieldElement::ZERO; len];
        for (p, v) in hits {
            e[p] = FieldElement::from_raw(v);
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn corrects_within_radius(msg in symbols(25), e in sparse_error(45, 5)) {
        let t = triple();
        let msg = MessageTriple::split(&msg, t.dims()).unwrap();
        let c = t.encode(&msg).unwrap();
        let r: Vec<_> = c.iter().zip(&e).map(|(&x, &y)| x + y).collect();
        let out = cascade::decode_flat(&t, &r).unwrap();
        prop_assert_eq!(out.status, CascadeStatus::Success);
        prop_assert_eq!(out.codeword, Some(c));
        prop_assert_eq!(out.message, Some(msg));
    }

    #[test]
    fn outputs_are_codewords(r in symbols(45)) {
        let t = triple();
        let out = cascade::decode_flat(&t, &r).unwrap();
        match out.codeword {
            Some(c) => {
                prop_assert!(t.is_codeword(&c));
                prop_assert_eq!(out.status, CascadeStatus::Success);
            }
            None => prop_assert_ne!(out.status, CascadeStatus::Success),
        }
    }
}
