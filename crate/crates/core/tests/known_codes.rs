//! Generators, encoders and distances of small codes with known parameters.

use composite_codes::codes::{extend_self_dual, min_distance, weight_distribution, DEFAULT_BUDGET};
use composite_codes::constructions::{
    cr_generator, ding_generator, find_multiplier, lambda_orbits, legendre, sign_triples,
    CrFamily, DingFamily, DingTag, SignVector,
};
use composite_codes::convolutional::{
    build_encoder, encode_stream, free_distance_search, phi_n_split, stream_weight,
};
use composite_codes::decompose::Decomposition;
use composite_codes::gf::field_of_order;
use composite_codes::{Error, Poly};

fn sv(v: &[i8]) -> SignVector {
    SignVector(v.to_vec())
}

fn exponents(reps: &[u64]) -> Vec<usize> {
    let mut e: Vec<usize> = reps
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, _)| i)
        .collect();
    e.reverse();
    e
}

const LENGTH_21_GENERATOR: [u64; 10] = [1, 1, 0, 0, 1, 1, 0, 1, 1, 1];

const LENGTH_119_SUPPORT: [usize; 35] = [
    59, 58, 57, 56, 51, 50, 49, 48, 47, 46, 45, 44, 43, 39, 38, 37, 36, 33, 32, 30, 24, 22, 20,
    19, 18, 15, 14, 9, 8, 7, 6, 5, 4, 1, 0,
];

fn length_21_family() -> CrFamily {
    // theta^-1 in place of the canonical root
    CrFamily::with_theta_power(2, 7, 3, 20).unwrap()
}

fn length_119_family() -> DingFamily {
    DingFamily::with_theta_power(DingTag::One, 7, 17, 2, 3).unwrap()
}

#[test]
fn sign_vector_generator_of_length_21() {
    let g = length_21_family().code(&sv(&[1, -1, -1])).unwrap();
    assert_eq!(g.generator().reps(), LENGTH_21_GENERATOR);
    assert_eq!((g.len(), g.dimension()), (21, 12));
    // the canonical root carries the same polynomial under the negated label
    let canonical = cr_generator(7, 3, 2, &sv(&[-1, 1, 1])).unwrap();
    assert_eq!(canonical.generator().reps(), LENGTH_21_GENERATOR);
    assert_eq!(min_distance(&g, DEFAULT_BUDGET).unwrap().d, 5);
}

#[test]
fn ding_generator_of_length_119() {
    let c = length_119_family().code(&sv(&[1, 1, 1])).unwrap();
    assert_eq!(c.generator().degree(), Some(59));
    assert_eq!(exponents(&c.generator().reps()), LENGTH_119_SUPPORT);
    assert_eq!(c.dimension(), 60);
    // same code under the canonical root, label (1,-1,-1) of the same class
    let canonical = ding_generator(1, 7, 17, 2, &sv(&[1, -1, -1])).unwrap();
    assert_eq!(canonical, c);
    assert_eq!(DingTag::One.class_of(&sv(&[1, -1, -1])), 1);
}

#[test]
fn polyphase_splits() {
    let f = field_of_order(2).unwrap();
    let g = Poly::from_reps(&f, &LENGTH_21_GENERATOR).unwrap();
    let parts: Vec<Vec<u64>> = phi_n_split(&g, 7).iter().map(|p| p.reps()).collect();
    assert_eq!(
        parts,
        vec![vec![1, 1], vec![1, 1], vec![0, 1], vec![], vec![1], vec![1], vec![]]
    );

    let c = length_119_family().code(&sv(&[1, 1, 1])).unwrap();
    let parts: Vec<Vec<usize>> = phi_n_split(c.generator(), 7)
        .iter()
        .map(|p| {
            let mut e = exponents(&p.reps());
            e.reverse();
            e
        })
        .collect();
    assert_eq!(
        parts,
        vec![
            vec![0, 1, 2, 7, 8],
            vec![0, 1, 2, 3, 5, 6, 7, 8],
            vec![1, 4, 5, 6, 7, 8],
            vec![3, 5, 6, 8],
            vec![0, 2, 4, 5, 6],
            vec![0, 2, 4, 6],
            vec![0, 2, 6],
        ]
    );
}

#[test]
fn rate_four_sevenths_encoder() {
    let code = length_21_family().code(&sv(&[1, -1, -1])).unwrap();
    let enc = build_encoder(&code, 7, 4).unwrap();
    let e: Vec<u64> = vec![];
    let one = vec![1];
    let d = vec![0, 1];
    let one_d = vec![1, 1];
    let expected = vec![
        vec![one_d.clone(), one_d.clone(), d.clone(), e.clone(), one.clone(), one.clone(), e.clone()],
        vec![e.clone(), one_d.clone(), one_d.clone(), d.clone(), e.clone(), one.clone(), one.clone()],
        vec![d.clone(), e.clone(), one_d.clone(), one_d.clone(), d.clone(), e.clone(), one.clone()],
        vec![d.clone(), d.clone(), e.clone(), one_d.clone(), one_d.clone(), d.clone(), e.clone()],
    ];
    assert_eq!(enc.summary().rows, expected);
    assert_eq!(enc.delta, 4);
    assert_eq!(enc.max_minor_degree, 4);
    assert_eq!(enc.minors_gcd.reps(), vec![1]);

    let f = code.field().clone();
    let u: Vec<Poly> = [1, 1, 1, 0]
        .iter()
        .map(|&c| Poly::from_reps(&f, &[c]).unwrap())
        .collect();
    let v = encode_stream(&enc, &u).unwrap();
    let reps: Vec<Vec<u64>> = v.iter().map(|p| p.reps()).collect();
    assert_eq!(reps, vec![one.clone(), e.clone(), d.clone(), one.clone(), one_d, e.clone(), e]);
    assert_eq!(stream_weight(&v), 5);

    let search = free_distance_search(&enc, 3, DEFAULT_BUDGET).unwrap();
    assert_eq!((search.upper_bound, search.lower_bound, search.exact), (5, 5, true));
}

#[test]
fn rate_three_sevenths_encoder() {
    let code = length_119_family().code(&sv(&[1, 1, 1])).unwrap();
    let enc = build_encoder(&code, 7, 3).unwrap();
    assert_eq!(enc.delta, 24);
    assert_eq!(enc.delta, (17 - 1) * 3 / 2);
    assert_eq!(enc.minors_gcd.degree(), Some(0));
    let rows = enc.matrix.rows();
    let g = phi_n_split(code.generator(), 7);
    // row 1 is (D g_6, g_0, ..., g_5), row 2 is (D g_5, D g_6, g_0, ..., g_4)
    assert_eq!(rows[0], g);
    assert_eq!(rows[1][0], g[6].shift(1));
    assert_eq!(rows[1][1..], g[..6]);
    assert_eq!(rows[2][0], g[5].shift(1));
    assert_eq!(rows[2][1], g[6].shift(1));
    assert_eq!(rows[2][2..], g[..5]);
}

#[test]
fn sign_vector_distances() {
    // (q, n, r) -> distances of the inequivalent classes, largest first
    let cells: [(u64, u64, u64, &[usize]); 6] = [
        (2, 7, 3, &[5, 3]),
        (3, 11, 2, &[7, 5]),
        (4, 5, 3, &[5, 5, 3]),
        (2, 7, 5, &[6, 3]),
        (2, 17, 3, &[9, 5]),
        (3, 11, 4, &[8, 8, 7, 5]),
    ];
    for (q, n, r, expected) in cells {
        let fam = CrFamily::new(q, n, r).unwrap();
        let mut ds: Vec<usize> = lambda_orbits(q, r as usize)
            .unwrap()
            .iter()
            .map(|orbit| min_distance(&fam.code(&orbit[0]).unwrap(), DEFAULT_BUDGET).unwrap().d)
            .collect();
        ds.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(ds, expected, "q={q} n={n} r={r}");
    }
}

#[test]
fn ding_classes_at_35() {
    let expected = [(DingTag::One, [8, 7]), (DingTag::Two, [4, 8]), (DingTag::Three, [4, 7])];
    for (tag, ds) in expected {
        let fam = DingFamily::new(tag, 5, 7, 4).unwrap();
        let [a1, a2] = tag.classes();
        for (class, d) in [(&a1, ds[0]), (&a2, ds[1])] {
            for eps in class.iter() {
                let got = min_distance(&fam.code(eps).unwrap(), DEFAULT_BUDGET).unwrap();
                assert_eq!((got.d, got.exact), (d, true), "{tag} {eps}");
            }
        }
    }
}

#[test]
fn exchanging_the_primes_swaps_constructions_two_and_three() {
    for (n1, n2, q) in [(5, 7, 4), (7, 17, 2)] {
        let two = DingFamily::new(DingTag::Two, n1, n2, q).unwrap();
        let three = DingFamily::new(DingTag::Three, n2, n1, q).unwrap();
        for eps in sign_triples() {
            let swapped = sv(&[eps.0[0], eps.0[2], eps.0[1]]);
            assert_eq!(two.code(&eps).unwrap(), three.code(&swapped).unwrap());
        }
    }
}

#[test]
fn second_construction_meets_the_short_code_bound() {
    // d(C2_(1,1,1)) = d(QR of length n1) + 1
    let fam = DingFamily::new(DingTag::Two, 5, 7, 4).unwrap();
    let short = composite_codes::codes::CyclicCode::new(fam.short_qr_generator(1), 5).unwrap();
    let d_short = min_distance(&short, DEFAULT_BUDGET).unwrap().d;
    assert_eq!(d_short, 3);
    let d = min_distance(&fam.code(&sv(&[1, 1, 1])).unwrap(), DEFAULT_BUDGET).unwrap().d;
    assert_eq!(d, d_short + 1);
}

#[test]
fn ding_one_components() {
    // n = n1, r = n2: component 0 is F3,e3; (t|n2) = e2 gives (x-1) F3,e1e2;
    // (t|n2) = -e2 gives F3,-e1e2
    let fam = DingFamily::new(DingTag::One, 5, 7, 4).unwrap();
    let dec = Decomposition::from_splitting_field(fam.splitting_field().clone(), 5, 7).unwrap();
    let f = fam.field().clone();
    let x_minus_1 = Poly::from_reps(&f, &[f.neg(composite_codes::Elem::ONE).0, 1]).unwrap();
    for eps in sign_triples() {
        let [e1, e2, e3] = [eps.0[0], eps.0[1], eps.0[2]];
        let comps = dec.component_codes(&fam.code(&eps).unwrap()).unwrap();
        for c in comps {
            let g = c.base_generator.expect("components descend");
            let expected = if c.t == 0 {
                fam.short_qr_generator(e3)
            } else if legendre(c.t as i64, 7).unwrap() == e2 {
                x_minus_1.mul(&fam.short_qr_generator(e1 * e2)).unwrap()
            } else {
                fam.short_qr_generator(-e1 * e2)
            };
            assert_eq!(g, expected, "{eps} t={}", c.t);
        }
    }
}

#[test]
fn sign_vector_components_are_residue_codes() {
    let fam = CrFamily::new(2, 7, 3).unwrap();
    let dec = Decomposition::from_splitting_field(fam.splitting_field().clone(), 7, 3).unwrap();
    let qr = |e: i8| {
        fam.splitting_field()
            .poly_from_exponents(fam.block_exponents(0, e))
            .unwrap()
    };
    for eps in fam.lambda() {
        let comps = dec.component_codes(&fam.code(&eps).unwrap()).unwrap();
        for c in &comps {
            assert_eq!(c.base_generator.as_ref().unwrap(), &qr(eps.0[c.t]));
        }
        let lb = dec.distance_lower_bound(&fam.code(&eps).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(lb.bound, 3);
        assert_eq!(lb.attained, eps.is_constant());
    }
}

#[test]
fn multiplier_search() {
    for (n1, n2) in [(5u64, 7u64), (7, 17), (7, 23)] {
        for (s1, s2) in [(-1i8, 1i8), (1, -1), (-1, -1)] {
            let u = find_multiplier(n1, n2, s1, s2);
            let sym = |m: u64| legendre(u as i64, m).unwrap();
            assert_eq!((sym(n1), sym(n2)), (s1, s2), "({n1},{n2}) u={u}");
        }
    }
    assert_eq!(find_multiplier(7, 17, -1, 1), 13);
}

#[test]
fn extended_code_of_length_162_is_self_dual() {
    let fam = DingFamily::new(DingTag::Two, 7, 23, 2).unwrap();
    for eps in [sv(&[1, 1, 1]), sv(&[-1, 1, -1])] {
        let code = fam.code(&eps).unwrap();
        let (ext, verdict) = extend_self_dual(&code, 7, 23).unwrap();
        assert_eq!(verdict.gamma.0, 1);
        assert_eq!((verdict.length, verdict.dimension), (162, 81));
        assert!(verdict.self_orthogonal && verdict.self_dual, "{eps}");
        assert_eq!(ext.code.len(), 162);
    }
}

#[test]
fn equivalent_codes_share_weight_distributions() {
    let fam = CrFamily::new(2, 7, 3).unwrap();
    for orbit in lambda_orbits(2, 3).unwrap() {
        let dists: Vec<Vec<u64>> = orbit
            .iter()
            .map(|e| weight_distribution(&fam.code(e).unwrap().to_linear()).unwrap())
            .collect();
        assert!(dists.windows(2).all(|w| w[0] == w[1]));
    }
}

#[test]
fn construction_errors() {
    assert!(matches!(
        CrFamily::new(3, 7, 2),
        Err(Error::QNotResidue { q: 3, n: 7 })
    ));
    assert!(matches!(
        CrFamily::new(2, 7, 3).unwrap().code(&sv(&[1, 1, -1])),
        Err(Error::NotInLambda(_))
    ));
    assert!(ding_generator(4, 5, 7, 4, &sv(&[1, 1, 1])).is_err());
}
