use std::collections::BTreeSet;

use skewcode_core::codes::{canonicalize, enumerate_codes};
use skewcode_core::search::{enumerate_case2_codes, Candidate};
use skewcode_core::*;

fn aut(p: u32, s: u32) -> Automorphism {
    Automorphism::new(p, s).unwrap()
}

#[test]
fn reference_generators_divide() {
    let cases = [
        (3, 2, 8, "x^3 + u*x^2 + x + 1"),
        (3, 2, 6, "x^4 + 2*x^3 + 2*u*x^2 + x + (2+u)"),
        (3, 2, 11, "x^6 + x^4 + 2*x^3 + 2*x^2 + 2*x + 1"),
        (3, 2, 12, "x^5 + (1+u)*x^4 + u*x^3 + 2*u*x^2 + (2+2*u)*x + (2+2*u)"),
        (5, 4, 6, "x^4 + (4+3*u)*x^3 + 4*u*x^2 + (1+2*u)*x + (4+u)"),
        (5, 4, 18, "x^3 + 2*u*x + (1+3*u)"),
        (5, 4, 6, "x^3 + 2*x^2 + (2+u)*x + (1+u)"),
    ];
    for (p, s, n, text) in cases {
        let a = aut(p, s);
        let g = parse_polynomial(text, &a).unwrap();
        let k = g.right_divides_xn(n).unwrap().unwrap_or_else(|| panic!("{text}"));
        // multiply back as an independent check
        assert_eq!(k.mul(&g).unwrap(), SkewPoly::x_n_minus_one(&a, n));
        assert_eq!(format_polynomial(&g), text);
    }
}

#[test]
fn record_roundtrip_all_forms() {
    let a = aut(3, 2);
    for n in 1..=4 {
        for code in enumerate_codes(&a, n).unwrap() {
            let rec = CodeRecord::from_code(&code);
            let json = rec.to_json();
            let back = CodeRecord::from_json(&json).unwrap();
            assert_eq!(back, rec);
            assert_eq!(back.to_json(), json);
            let rebuilt = back.to_code().unwrap();
            assert_eq!(rebuilt.form(), code.form());
            assert_eq!(rebuilt.cardinality(), code.cardinality());
        }
    }
    assert!(CodeRecord::from_json(r#"{"p":3,"n":4,"s":2,"form":"monic"}"#).unwrap().to_code().is_err());
    assert!(CodeRecord::from_json(r#"{"p":3,"n":4,"s":2,"form":"other"}"#).is_err());
    let bad = CodeRecord::from_json(r#"{"p":3,"n":4,"s":2,"form":"nonmonic","abar":"x^2 + x"}"#).unwrap();
    assert_eq!(bad.to_code().unwrap_err(), Error::AbarNotDivisor);
}

#[test]
fn mixed_record_json_shape() {
    let a = aut(5, 4);
    let code = SkewCyclicCode::construct(
        &a,
        6,
        GeneratorForm::Mixed {
            g: parse_polynomial("x^3 + 2*x^2 + 2*x + 1", &a).unwrap(),
            pp: FpPoly::from_i64(*a.field(), &[1, 1]),
            abar: FpPoly::from_i64(*a.field(), &[1, 1]),
        },
    )
    .unwrap();
    let json = CodeRecord::from_code(&code).to_json();
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(
        value,
        serde_json::json!({"p": 5, "n": 6, "s": 4, "form": "mixed",
            "g": "x^3 + 2*x^2 + 2*x + 1", "p_poly": "x + 1", "abar": "x + 1"})
    );
}

/// All monic g with 1 ≤ deg g ≤ 3 and g ∗ k = x^4 − 1, by trying every coefficient vector.
fn brute_right_divisors(a: &Automorphism, n: usize) -> BTreeSet<String> {
    let f = *a.field();
    let elems: Vec<RingElement> = f.elements().collect();
    let xn = SkewPoly::x_n_minus_one(a, n);
    let mut out = BTreeSet::new();
    for deg in 1..n {
        let count = elems.len().pow(deg as u32);
        for mut idx in 0..count {
            let mut coeffs = Vec::with_capacity(deg + 1);
            for _ in 0..deg {
                coeffs.push(elems[idx % elems.len()]);
                idx /= elems.len();
            }
            coeffs.push(RingElement::ONE);
            let g = SkewPoly::new(a, coeffs);
            if xn.right_divide(&g).unwrap().1.is_zero() {
                out.insert(g.to_string());
            }
        }
    }
    out
}

#[test]
fn case2_stream_is_complete() {
    let a = aut(3, 2);
    let streamed: BTreeSet<String> = enumerate_case2_codes(&a, 4, 1, 3)
        .unwrap()
        .map(|c| match c {
            Candidate::Code(c) => c.generator().unwrap().to_string(),
            Candidate::Skipped { error, .. } => panic!("{error}"),
        })
        .collect();
    assert_eq!(streamed, brute_right_divisors(&a, 4));
}

#[test]
fn search_contains_reference_parameters() {
    let mut params = SearchParams::new(3, vec![6, 8], vec![2], vec![2, 3]);
    params.deg_min = 3;
    let mut records = search_best(&params).unwrap().records;
    let mut n11 = SearchParams::new(3, vec![11], vec![2], vec![2]);
    n11.deg_min = 6;
    n11.deg_max = Some(6);
    records.extend(search_best(&n11).unwrap().records);
    let found: BTreeSet<(usize, usize, Option<usize>)> = records.iter().map(|r| (r.length, r.dimension, r.d)).collect();
    for want in [(16, 10, Some(4)), (12, 4, Some(6)), (18, 4, Some(11)), (22, 10, Some(6))] {
        assert!(found.contains(&want), "{want:?}");
    }

    // n = 12: the degree-5 stream holds the reference generator, whose record is [24,14,6]
    let a = aut(3, 2);
    let g = parse_polynomial("x^5 + (1+u)*x^4 + u*x^3 + 2*u*x^2 + (2+2*u)*x + (2+2*u)", &a).unwrap();
    let code = enumerate_case2_codes(&a, 12, 5, 5)
        .unwrap()
        .find_map(|c| match c {
            Candidate::Code(c) if c.generator() == Some(&g) => Some(c),
            _ => None,
        })
        .expect("generator in stream");
    let rec = evaluate_candidate(&code, 2, &search::Budgets::default()).unwrap();
    assert_eq!((rec.length, rec.dimension, rec.d), (24, 14, Some(6)));
}

#[test]
fn search_is_deterministic_and_worker_independent() {
    let mut params = SearchParams::new(3, vec![4, 6, 8], vec![2], vec![2, 3]);
    params.deg_min = 2;
    params.threads = Some(1);
    let serial = search_best(&params).unwrap();
    params.threads = Some(4);
    let parallel = search_best(&params).unwrap();
    let again = search_best(&params).unwrap();
    let as_json = |o: &search::SearchOutcome| serde_json::to_string_pretty(&o.records).unwrap();
    assert_eq!(as_json(&serial), as_json(&parallel));
    assert_eq!(as_json(&parallel), as_json(&again));
    assert!(!serial.records.is_empty());

    // records rebuild to codes with the same parameters
    let budgets = search::Budgets::default();
    for rec in &serial.records {
        let code = rec.code().unwrap();
        let again = evaluate_candidate(&code, rec.ell, &budgets).unwrap();
        assert_eq!(&again, rec);
        let parsed: SearchRecord = serde_json::from_str(&serde_json::to_string(rec).unwrap()).unwrap();
        assert_eq!(&parsed, rec);
    }
}

#[test]
fn gray_distance_equals_min_gray_weight() {
    let a = aut(3, 2);
    for n in 1..=3 {
        for code in enumerate_codes(&a, n).unwrap() {
            if code.is_zero_code() {
                continue;
            }
            let words = code.codewords(1 << 16).unwrap();
            for ell in 2..=3 {
                let image = GrayImageCode::from_code(&code, ell).unwrap();
                let min_gray = words
                    .iter()
                    .filter(|w| w.iter().any(|c| !c.is_zero()))
                    .map(|w| w.iter().map(|&c| gray_weight(a.field(), ell, c).unwrap()).sum::<usize>())
                    .min()
                    .unwrap();
                assert_eq!(image.min_distance_exhaustive().unwrap(), min_gray, "{code}");
                let images: BTreeSet<Vec<u32>> = words
                    .iter()
                    .map(|w| gray::gray_map_word(a.field(), ell, w).unwrap())
                    .collect();
                assert_eq!(images.len() as u128, code.cardinality().unwrap());
            }
        }
    }
}

#[test]
fn non_principal_length4_code() {
    let a = aut(3, 2);
    let gen = parse_polynomial("(1+u)*x^2 + (1+2*u)", &a).unwrap();
    assert!(gen.right_divides_xn(4).unwrap().is_none());
    let code = canonicalize(&a, 4, &[gen.to_vector(4)]).unwrap();
    assert_eq!(
        code.form(),
        &GeneratorForm::Mixed {
            g: parse_polynomial("x^2 + 1", &a).unwrap(),
            pp: FpPoly::zero(*a.field()),
            abar: FpPoly::one(*a.field()),
        }
    );
    assert_eq!(code.cardinality(), Some(729));
    assert!(code.contains(&[RingElement::U, RingElement::ZERO, RingElement::ZERO, RingElement::ZERO]).unwrap());
}
