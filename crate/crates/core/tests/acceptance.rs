//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Distances are compared exactly; each line carries its time limit.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use composite_codes::codes::{
    extend_self_dual, min_distance, min_distance_with, weight_distribution, CyclicCode,
    DistanceOptions, Engine, LinearCode, WeightReport, DEFAULT_BUDGET,
};
use composite_codes::constructions::{
    act, find_multiplier, lambda_orbits, CrFamily, DingFamily, DingTag, SignVector,
};
use composite_codes::convolutional::{
    build_encoder_in, encode_stream, free_distance_search, free_distance_search_with_lower,
    phi_n_split, stream_weight,
};
use composite_codes::decompose::Decomposition;
use composite_codes::gf::field_of_order;
use composite_codes::poly::{factor_xn_minus_1, SplittingField};
use composite_codes::{Elem, FieldRef, Poly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SMALL_CELLS: [(u64, u64, u64, &[usize]); 4] = [
    (2, 7, 3, &[5, 3]),
    (3, 11, 2, &[7, 5]),
    (4, 5, 3, &[5, 5, 3]),
    (2, 7, 5, &[6, 3]),
];

const CODEWORDS_PER_CODE: usize = 1000;
const WEIGHT_DISTRIBUTION_LIMIT: f64 = (1u64 << 20) as f64;
const RANDOM_CODES: usize = 50;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn sv(v: &[i8]) -> SignVector {
    SignVector(v.to_vec())
}

fn info_set(code: &CyclicCode) -> WeightReport {
    let opts = DistanceOptions {
        engine: Engine::InformationSet,
        ..Default::default()
    };
    min_distance_with(&code.to_linear(), &opts).unwrap()
}

fn exhaustive(code: &LinearCode) -> WeightReport {
    let opts = DistanceOptions {
        engine: Engine::Exhaustive,
        ..Default::default()
    };
    min_distance_with(code, &opts).unwrap()
}

fn sorted_desc(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn cell_distances(q: u64, n: u64, r: u64) -> Vec<usize> {
    let fam = CrFamily::new(q, n, r).unwrap();
    let ds = lambda_orbits(q, r as usize)
        .unwrap()
        .iter()
        .map(|orbit| {
            let rep = min_distance(&fam.code(&orbit[0]).unwrap(), DEFAULT_BUDGET).unwrap();
            assert!(rep.exact);
            rep.d
        })
        .collect();
    sorted_desc(ds)
}

fn sign_vector_cells() -> Outcome {
    let limit = Duration::from_secs(10);
    let mut pass = true;
    let mut parts = Vec::new();
    for (q, n, r, expected) in SMALL_CELLS {
        let start = Instant::now();
        let got = cell_distances(q, n, r);
        let took = start.elapsed();
        let ok = got == expected && took < limit;
        pass &= ok;
        parts.push(format!("(q={q},n={n},r={r}) {got:?} in {:.2}s", took.as_secs_f64()));
    }
    outcome(pass, format!("{}; limit 10s per cell", parts.join(", ")))
}

/// Distance of each A1/A2 class, checked constant across the class.
fn class_distances(fam: &DingFamily) -> Option<[usize; 2]> {
    let mut out = [0; 2];
    for (slot, class) in fam.tag().classes().iter().enumerate() {
        let ds: Vec<usize> = class
            .iter()
            .map(|e| {
                let rep = info_set(&fam.code(e).unwrap());
                assert!(rep.exact);
                rep.d
            })
            .collect();
        if ds.iter().any(|&d| d != ds[0]) {
            return None;
        }
        out[slot] = ds[0];
    }
    Some(out)
}

fn ding_at_35() -> Outcome {
    let start = Instant::now();
    let one = class_distances(&DingFamily::new(DingTag::One, 5, 7, 4).unwrap());
    // constructions 2 and 3 with the primes taken in the order (7, 5)
    let two = class_distances(&DingFamily::new(DingTag::Two, 7, 5, 4).unwrap());
    let three = class_distances(&DingFamily::new(DingTag::Three, 7, 5, 4).unwrap());
    let took = start.elapsed();
    let set = |c: Option<[usize; 2]>| c.map(|[a, b]| sorted_desc(vec![a, b]));
    let ok_one = set(one) == Some(vec![8, 7]);
    let ok_two = set(two) == Some(vec![7, 4]);
    let ok_three = matches!(set(three), Some(v) if v[0] == 8 && v[1] < 8);
    outcome(
        ok_one && ok_two && ok_three && took < Duration::from_secs(300),
        format!(
            "q=4: C1(5,7) {:?}, C2(7,5) {:?}, C3(7,5) {:?} (A1, A2) in {:.2}s; limit 300s",
            one,
            two,
            three,
            took.as_secs_f64()
        ),
    )
}

fn long_code(d: &mut Option<usize>) -> Outcome {
    let start = Instant::now();
    let fam = DingFamily::new(DingTag::One, 7, 17, 2).unwrap();
    let rep = info_set(&fam.code(&sv(&[1, 1, 1])).unwrap());
    let took = start.elapsed();
    *d = rep.exact.then_some(rep.d);
    outcome(
        (rep.n, rep.k, rep.d, rep.exact) == (119, 60, 12, true)
            && took < Duration::from_secs(1800),
        format!(
            "[{},{},{}] exact={} in {:.2}s; limit 1800s",
            rep.n,
            rep.k,
            rep.d,
            rep.exact,
            took.as_secs_f64()
        ),
    )
}

fn short_code_plus_one() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (n1, n2, q) in [(5, 7, 4), (7, 17, 2)] {
        let fam = DingFamily::new(DingTag::Two, n1, n2, q).unwrap();
        let short = CyclicCode::new(fam.short_qr_generator(1), n1 as usize).unwrap();
        let d_short = exhaustive(&short.to_linear()).d;
        let d = info_set(&fam.code(&sv(&[1, 1, 1])).unwrap()).d;
        pass &= d == d_short + 1;
        parts.push(format!("({n1},{n2},{q}): d={d}, d_short={d_short}"));
    }
    outcome(pass, parts.join(", "))
}

fn random_codeword(code: &CyclicCode, rng: &mut ChaCha8Rng) -> Poly {
    let q = code.field().q();
    let msg: Vec<Elem> = (0..code.dimension())
        .map(|_| Elem(rng.gen_range(0..q)))
        .collect();
    code.encode(&msg).unwrap()
}

fn min_nonzero_weight(parts: &[Poly]) -> Option<usize> {
    parts.iter().filter(|p| !p.is_zero()).map(|p| p.weight()).min()
}

fn decomposition_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut violations = Vec::new();
    let mut codes = 0;
    let mut words = 0;
    for (q, n, r, _) in SMALL_CELLS {
        let fam = CrFamily::new(q, n, r).unwrap();
        let dec =
            Decomposition::from_splitting_field(fam.splitting_field().clone(), n as usize, r as usize)
                .unwrap();
        let emb = dec.splitting_field().embedding();
        for eps in fam.lambda() {
            let code = fam.code(&eps).unwrap();
            codes += 1;
            for _ in 0..CODEWORDS_PER_CODE {
                words += 1;
                let c = random_codeword(&code, &mut rng);
                let img = dec.phi_forward(&c).unwrap();
                let comps = &img.components;
                let tag = format!("(q={q},n={n},r={r}) {eps}");
                if img.weight() != c.weight() {
                    violations.push(format!("{tag}: weight not preserved"));
                }
                if c.is_zero() != comps.iter().all(|p| p.is_zero()) {
                    violations.push(format!("{tag}: CRT zero test"));
                }
                if let Some(m) = min_nonzero_weight(comps) {
                    if c.weight() < m {
                        violations.push(format!("{tag}: weight below the component minimum"));
                    }
                }
                // equal components
                let c0 = comps[0].clone();
                let flat = dec.phi_inverse(&vec![c0.clone(); r as usize]).unwrap();
                if flat.weight() != c0.weight() {
                    violations.push(format!("{tag}: constant tuple weight"));
                }
                if eps.is_constant() {
                    let inside = flat
                        .descend(emb)
                        .is_some_and(|p| code.contains(&p).unwrap());
                    if !inside {
                        violations.push(format!("{tag}: constant tuple left the code"));
                    }
                }
                // one component cleared
                let mut holed = comps.clone();
                holed[rng.gen_range(0..r as usize)] = Poly::zero(dec.ext());
                let w = dec.phi_inverse(&holed).unwrap().weight();
                match min_nonzero_weight(&holed) {
                    Some(m) if w < 2 * m => {
                        violations.push(format!("{tag}: zero component without doubling"))
                    }
                    None if w != 0 => violations.push(format!("{tag}: zero tuple")),
                    _ => {}
                }
            }
        }
    }
    let shown: Vec<&String> = violations.iter().take(3).collect();
    outcome(
        violations.is_empty(),
        format!(
            "{codes} codes, {words} codewords, {} violations {shown:?}",
            violations.len()
        ),
    )
}

fn equivalence() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (q, n, r, _) in SMALL_CELLS {
        let fam = CrFamily::new(q, n, r).unwrap();
        let k = ((n + 1) * r / 2) as i32;
        if (q as f64).powi(k) > WEIGHT_DISTRIBUTION_LIMIT {
            parts.push(format!("(q={q},n={n},r={r}) skipped: q^k above 2^20"));
            continue;
        }
        let mut orbits_ok = 0;
        let orbits = lambda_orbits(q, r as usize).unwrap();
        for orbit in &orbits {
            let dists: Vec<Vec<u64>> = orbit
                .iter()
                .map(|e| weight_distribution(&fam.code(e).unwrap().to_linear()).unwrap())
                .collect();
            if dists.windows(2).all(|w| w[0] == w[1]) {
                orbits_ok += 1;
            }
        }
        pass &= orbits_ok == orbits.len();
        parts.push(format!(
            "(q={q},n={n},r={r}) k={k}: {orbits_ok}/{} orbits share weight distributions",
            orbits.len()
        ));
    }
    // Ding classes at (5,7,4) have q^k = 4^18; their multipliers are checked
    // as exact code equalities instead
    for tag in [DingTag::One, DingTag::Two, DingTag::Three] {
        for (n1, n2) in [(5, 7), (7, 5)] {
            let fam = DingFamily::new(tag, n1, n2, 4).unwrap();
            let a = find_multiplier(n1, n2, -1, 1);
            let b = find_multiplier(n1, n2, 1, -1);
            let (pa, pb) = tag.multiplier_actions();
            let mut matched = 0;
            for class in tag.classes() {
                for eps in class.iter() {
                    let code = fam.code(eps).unwrap();
                    let img_a = code.multiplier_image(a).unwrap();
                    let img_b = code.multiplier_image(b).unwrap();
                    let ea = act(pa, eps);
                    let eb = act(pb, eps);
                    if img_a == fam.code(&ea).unwrap()
                        && img_b == fam.code(&eb).unwrap()
                        && tag.class_of(&ea) == tag.class_of(eps)
                        && tag.class_of(&eb) == tag.class_of(eps)
                    {
                        matched += 1;
                    }
                }
            }
            pass &= matched == 8;
            parts.push(format!("{tag}({n1},{n2},4): {matched}/8 multiplier images exact"));
        }
    }
    outcome(pass, parts.join("; "))
}

fn convolutional(block_distance: Option<usize>) -> Outcome {
    let start = Instant::now();
    let mut fails = Vec::new();

    let sf = SplittingField::with_theta_power(&field_of_order(2).unwrap(), 21, 20).unwrap();
    let fam = CrFamily::with_theta_power(2, 7, 3, 20).unwrap();
    let code = fam.code(&sv(&[1, -1, -1])).unwrap();
    let enc = build_encoder_in(&sf, &code, 7, 4).unwrap();
    let (e, o, d, od) = (vec![], vec![1u64], vec![0u64, 1], vec![1u64, 1]);
    let matrix = vec![
        vec![od.clone(), od.clone(), d.clone(), e.clone(), o.clone(), o.clone(), e.clone()],
        vec![e.clone(), od.clone(), od.clone(), d.clone(), e.clone(), o.clone(), o.clone()],
        vec![d.clone(), e.clone(), od.clone(), od.clone(), d.clone(), e.clone(), o.clone()],
        vec![d.clone(), d.clone(), e.clone(), od.clone(), od.clone(), d.clone(), e.clone()],
    ];
    if enc.summary().rows != matrix {
        fails.push("rate 4/7 matrix");
    }
    if enc.delta != 4 {
        fails.push("rate 4/7 degree");
    }
    let f = code.field().clone();
    let u: Vec<Poly> = [1, 1, 1, 0]
        .iter()
        .map(|&c| Poly::from_reps(&f, &[c]).unwrap())
        .collect();
    let v: Vec<Vec<u64>> = encode_stream(&enc, &u)
        .unwrap()
        .iter()
        .map(|p| p.reps())
        .collect();
    if v != vec![o.clone(), e.clone(), d.clone(), o, od, e.clone(), e] {
        fails.push("rate 4/7 codeword");
    }
    let search = free_distance_search(&enc, 3, DEFAULT_BUDGET).unwrap();
    if (search.upper_bound, search.exact) != (5, true) {
        fails.push("rate 4/7 free distance");
    }

    let sf = SplittingField::with_theta_power(&field_of_order(2).unwrap(), 119, 3).unwrap();
    let fam = DingFamily::with_theta_power(DingTag::One, 7, 17, 2, 3).unwrap();
    let code = fam.code(&sv(&[1, 1, 1])).unwrap();
    let enc2 = build_encoder_in(&sf, &code, 7, 3).unwrap();
    if enc2.delta != 24 {
        fails.push("rate 3/7 degree");
    }
    if enc2.minors_gcd.degree() != Some(0) {
        fails.push("rate 3/7 minors gcd");
    }
    if enc2.matrix.rows()[0] != phi_n_split(code.generator(), 7) {
        fails.push("rate 3/7 first row");
    }
    let lower = match block_distance {
        Some(d) => d,
        None => info_set(&code).proved_lower_bound,
    };
    let search2 = free_distance_search_with_lower(&enc2, 3, DEFAULT_BUDGET, lower).unwrap();
    if search2.lower_bound != 12 {
        fails.push("rate 3/7 lower bound");
    }
    // the input (1,1,1,0) gives a weight-5 stream
    let cert_weight = stream_weight(&encode_stream(&enc, &u).unwrap());

    let took = start.elapsed();
    if took >= Duration::from_secs(60) {
        fails.push("time");
    }
    outcome(
        fails.is_empty(),
        format!(
            "rate 4/7: delta={} d_free={} (B=3, exact={}, stream weight {cert_weight}); rate 3/7: delta={} gcd deg={:?} d_free in [{}, {}] in {:.2}s; limit 60s; failed {fails:?}",
            enc.delta,
            search.upper_bound,
            search.exact,
            enc2.delta,
            enc2.minors_gcd.degree(),
            search2.lower_bound,
            search2.upper_bound,
            took.as_secs_f64()
        ),
    )
}

fn self_dual() -> Outcome {
    let fam = DingFamily::new(DingTag::Two, 7, 23, 2).unwrap();
    let code = fam.code(&sv(&[1, 1, 1])).unwrap();
    let (ext, v) = extend_self_dual(&code, 7, 23).unwrap();
    let f = ext.code.field();
    let rows = ext.code.rows();
    let orthogonal = rows.iter().all(|a| {
        rows.iter().all(|b| {
            a.iter()
                .zip(b)
                .fold(Elem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
                .is_zero()
        })
    });
    outcome(
        orthogonal && v.gamma == Elem::ONE && (v.length, v.dimension) == (162, 81),
        format!(
            "gamma={} length={} dim={} G.G^T=0: {orthogonal}",
            v.gamma, v.length, v.dimension
        ),
    )
}

fn random_cyclic_code(rng: &mut ChaCha8Rng) -> (FieldRef, CyclicCode) {
    loop {
        let q = [2u64, 3, 4, 5, 7, 8, 9][rng.gen_range(0..7)];
        let f = field_of_order(q).unwrap();
        let n = rng.gen_range(3..=63usize);
        if n as u64 % f.p() == 0 {
            continue;
        }
        let factors = factor_xn_minus_1(&f, n).unwrap();
        let picked: Vec<&Poly> = factors.iter().filter(|_| rng.gen_bool(0.5)).collect();
        let Ok(code) = CyclicCode::new(Poly::product(&f, picked).unwrap(), n) else {
            continue;
        };
        if (q as f64).powi(code.dimension() as i32) <= (1u64 << 16) as f64 {
            return (f, code);
        }
    }
}

fn oracle_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut disagreements = Vec::new();
    for _ in 0..RANDOM_CODES {
        let (f, code) = random_cyclic_code(&mut rng);
        let lin = code.to_linear();
        let a = exhaustive(&lin);
        let b = min_distance_with(
            &lin,
            &DistanceOptions {
                engine: Engine::InformationSet,
                ..Default::default()
            },
        )
        .unwrap();
        if a.d != b.d || !a.exact || !b.exact {
            disagreements.push(format!("q={} [{},{}] {} vs {}", f.q(), code.len(), code.dimension(), a.d, b.d));
        }
    }
    outcome(
        disagreements.is_empty(),
        format!(
            "{RANDOM_CODES} codes (seed 2024), {} disagreements {disagreements:?}",
            disagreements.len()
        ),
    )
}

fn run(index: usize, name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        outcome(false, format!("panicked: {msg}"))
    });
    println!(
        "criterion {index} [{}] {name}: {} ({:.2}s)",
        if result.pass { "PASS" } else { "FAIL" },
        result.detail,
        start.elapsed().as_secs_f64()
    );
    result.pass
}

fn main() -> ExitCode {
    let mut block_distance = None;
    let results = [
        run(1, "sign-vector codes of length 21, 22, 15, 35", sign_vector_cells),
        run(2, "Ding constructions at (5,7,4)", ding_at_35),
        run(3, "Ding-1 [119,60,12]", || long_code(&mut block_distance)),
        run(4, "construction 2 meets d(short QR)+1", short_code_plus_one),
        run(5, "decomposition properties", decomposition_properties),
        run(6, "equivalence classes", equivalence),
        run(7, "convolutional encoders", || convolutional(block_distance)),
        run(8, "self-dual extension (7,23,2)", self_dual),
        run(9, "exhaustive vs information-set", oracle_agreement),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
