//! Acceptance criteria, one PASS/FAIL line each. Exact arithmetic throughout,
//! so every comparison is equality.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nczeta::cyclic::{letters_by_row, DEFAULT_ENUMERATION_GUARD as GUARD};
use nczeta::examples::{closed_g, closed_p, dxd_p_prefix, two_by_two_p_coefficient, u_series};
use nczeta::proper::lukasiewicz_predicate;
use nczeta::sampling::{random_matrix, RandomMatrixParams};
use nczeta::{
    alphabet_of, euler_product, guess_annihilator, s_coeff, solve_truncated, sum_coeffs_by_length,
    AlgebraMatrix, BigInt, BigRational, BivariatePolynomial, ExampleId, ProperSystem,
    SequenceOptions, TripleLetter, TruncatedSeries,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn seq(m: &AlgebraMatrix, n: usize) -> Vec<BigInt> {
    m.a_sequence(n, SequenceOptions::default())
        .expect("a_sequence")
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| x.into()).collect()
}

fn zeta(m: &AlgebraMatrix, n: usize) -> TruncatedSeries {
    TruncatedSeries::zeta_from_counts(&seq(m, n))
}

fn builtin(s: &str) -> AlgebraMatrix {
    s.parse::<ExampleId>().unwrap().build().unwrap()
}

const BUILTINS: [&str; 5] = [
    "kontsevich:1",
    "kontsevich:2",
    "paper2x2",
    "paperdxd:3",
    "paperdxd:4",
];

/// The random family: d ≤ 3, support ≤ 2 per entry, word length ≤ 2,
/// coefficients in [−3, 3].
fn random_family(seed: u64, count: usize) -> Vec<AlgebraMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params = RandomMatrixParams::default();
    let mut out = Vec::new();
    while out.len() < count {
        let m = random_matrix(&mut rng, &params);
        if !m.is_zero() {
            out.push(m);
        }
    }
    out
}

fn c1_two_by_two_counts() -> Outcome {
    let start = Instant::now();
    let got = seq(&builtin("paper2x2"), 10);
    let elapsed = start.elapsed();
    ensure(
        got == ints(&[0, 6, 0, 30, 0, 174, 0, 1086, 0, 7086]),
        || format!("got {got:?}"),
    )?;
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("a_1..a_10 match in {elapsed:.2?}"))
}

fn c2_two_by_two_zeta() -> Outcome {
    let m = builtin("paper2x2");
    let p = zeta(&m, 10);
    let golden = TruncatedSeries::from_integers([1, 0, 3, 0, 12, 0, 56, 0, 288, 0, 1584]);
    ensure(p == golden, || format!("pipeline zeta\n{p}"))?;
    ensure(p == closed_p(ExampleId::TwoByTwo, 10).unwrap(), || {
        "closed form differs".into()
    })?;
    let euler = euler_product(&m, 6, GUARD).unwrap();
    ensure(euler == p.truncate(6), || format!("euler product\n{euler}"))?;
    for n in 1..=5u32 {
        let c = two_by_two_p_coefficient(n);
        ensure(c.is_integer() && p.coeff(2 * n as usize) == c, || {
            format!("t^{} coefficient", 2 * n)
        })?;
    }
    Ok("pipeline = golden = closed form = Euler product (L=6); binomial formula n ≤ 5".into())
}

fn c3_kontsevich() -> Outcome {
    let p1 = zeta(&builtin("kontsevich:1"), 8);
    ensure(
        p1 == TruncatedSeries::from_integers([1, 0, 1, 0, 2, 0, 5, 0, 14]),
        || format!("n=1 pipeline\n{p1}"),
    )?;
    ensure(p1 == closed_p(ExampleId::Kontsevich(1), 8).unwrap(), || {
        "n=1 closed form differs".into()
    })?;
    let p2 = zeta(&builtin("kontsevich:2"), 8);
    let closed2 = closed_p(ExampleId::Kontsevich(2), 8).unwrap();
    ensure(p2 == closed2, || {
        format!("n=2 pipeline\n{p2}closed\n{closed2}")
    })?;
    Ok(format!("n=1 Catalan, n=2 t^8 coefficient {}", p2.coeff(8)))
}

fn c4_dxd_family() -> Outcome {
    let mut notes = Vec::new();
    for d in [3usize, 4] {
        let m = ExampleId::DByD(d).build().unwrap();
        let start = Instant::now();
        let a = seq(&m, 8);
        let elapsed = start.elapsed();
        let g = TruncatedSeries::generating_from_counts(&a);
        let closed = closed_g(ExampleId::DByD(d), 8).unwrap();
        ensure(g == closed, || {
            format!("d={d}: g pipeline\n{g}closed\n{closed}")
        })?;
        let p = TruncatedSeries::zeta_from_counts(&a);
        let prefix = dxd_p_prefix(d, 8).unwrap();
        ensure(p == prefix, || {
            format!("d={d}: zeta pipeline\n{p}expansion\n{prefix}")
        })?;
        if d == 3 {
            ensure(elapsed < Duration::from_secs(600), || {
                format!("d=3 took {elapsed:?}")
            })?;
        }
        notes.push(format!("d={d} in {elapsed:.2?}"));
    }
    Ok(notes.join(", "))
}

fn c5_integrality() -> Outcome {
    let family = random_family(5, 24);
    let (mut nonzero, mut largest) = (0usize, BigInt::from(0));
    for (k, m) in family.iter().enumerate() {
        let a = seq(m, 10);
        nonzero += a.iter().filter(|x| **x != BigInt::from(0)).count();
        largest = a
            .iter()
            .map(|x| if *x < BigInt::from(0) { -x } else { x.clone() })
            .fold(largest, |l, x| l.max(x));
        let p = TruncatedSeries::zeta_from_counts(&a);
        ensure(p.is_integral(), || {
            format!("matrix #{k} gives a non-integral zeta\n{p}")
        })?;
    }
    Ok(format!(
        "{} random matrices, N = 10 ({nonzero} nonzero a_n, max |a_n| = {largest})",
        family.len()
    ))
}

fn path_word(rng: &mut ChaCha8Rng, alphabet: &[TripleLetter], len: usize) -> Vec<TripleLetter> {
    let rows = letters_by_row(alphabet);
    let mut row = alphabet[rng.gen_range(0..alphabet.len())].row;
    let mut w = Vec::new();
    for _ in 0..len {
        let Some(choices) = rows.get(&row) else { break };
        let l = choices[rng.gen_range(0..choices.len())].clone();
        row = l.col;
        w.push(l);
    }
    w
}

fn uniform_word(rng: &mut ChaCha8Rng, alphabet: &[TripleLetter], len: usize) -> Vec<TripleLetter> {
    (0..len)
        .map(|_| alphabet[rng.gen_range(0..alphabet.len())].clone())
        .collect()
}

/// The letters retracing `w` backwards, when they exist in the alphabet.
fn retrace(w: &[TripleLetter], alphabet: &[TripleLetter]) -> Option<Vec<TripleLetter>> {
    w.iter()
        .rev()
        .map(|l| {
            let back = TripleLetter::new(l.word.invert(), l.col, l.row);
            alphabet.contains(&back).then_some(back)
        })
        .collect()
}

fn c6_cyclicity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut matrices: Vec<AlgebraMatrix> = BUILTINS.iter().map(|s| builtin(s)).collect();
    matrices.extend(random_family(66, 20));
    let (mut cases, mut nonzero) = (0usize, 0usize);
    for m in &matrices {
        let alphabet = alphabet_of(m);
        for _ in 0..12 {
            let lu = rng.gen_range(1..=3);
            let u = if rng.gen_bool(0.5) {
                path_word(&mut rng, &alphabet, lu)
            } else {
                uniform_word(&mut rng, &alphabet, lu)
            };
            let v = match retrace(&u, &alphabet) {
                Some(v) if rng.gen_bool(0.5) => v,
                _ => {
                    let lv = rng.gen_range(1..=3);
                    path_word(&mut rng, &alphabet, lv)
                }
            };
            let lw = rng.gen_range(1..=3);
            let w = path_word(&mut rng, &alphabet, lw);
            let w = match retrace(&w, &alphabet) {
                Some(back) if rng.gen_bool(0.5) => [w, back].concat(),
                _ => w,
            };
            let r = rng.gen_range(2..=3usize);
            let uv = s_coeff(m, &[u.clone(), v.clone()].concat()).unwrap();
            let vu = s_coeff(m, &[v, u].concat()).unwrap();
            ensure(uv == vu, || format!("(S,uv) = {uv} but (S,vu) = {vu}"))?;
            let wr: Vec<TripleLetter> = w.iter().cycle().take(w.len() * r).cloned().collect();
            let sw = s_coeff(m, &w).unwrap();
            let swr = s_coeff(m, &wr).unwrap();
            ensure(swr == sw.pow(r as u32), || {
                format!("(S,w^{r}) = {swr} but (S,w)^{r} = {}", sw.pow(r as u32))
            })?;
            cases += 1;
            nonzero += usize::from(uv != BigInt::from(0)) + usize::from(sw != BigInt::from(0));
        }
    }
    ensure(cases >= 200, || format!("only {cases} cases"))?;
    Ok(format!(
        "{cases} cases, {nonzero} with nonzero coefficients"
    ))
}

fn c7_identification() -> Outcome {
    for m in random_family(7, 20) {
        let a = seq(&m, 4);
        for n in 1..=4 {
            let s = sum_coeffs_by_length(&m, n, GUARD).unwrap();
            ensure(s == a[n - 1], || {
                format!("random matrix, n={n}: {s} vs {}", a[n - 1])
            })?;
        }
    }
    for name in BUILTINS {
        let m = builtin(name);
        let a = seq(&m, 6);
        for n in 1..=6 {
            let s = sum_coeffs_by_length(&m, n, GUARD).unwrap();
            ensure(s == a[n - 1], || {
                format!("{name}, n={n}: {s} vs {}", a[n - 1])
            })?;
        }
    }
    Ok("20 random matrices (n ≤ 4), 5 built-ins (n ≤ 6)".into())
}

fn c8_euler_product() -> Outcome {
    let family = random_family(8, 20);
    for (k, m) in family.iter().enumerate() {
        let e = euler_product(m, 5, GUARD).unwrap();
        let z = zeta(m, 5);
        ensure(e == z, || format!("matrix #{k}: euler\n{e}zeta\n{z}"))?;
    }
    let letters: usize = family.iter().map(|m| alphabet_of(m).len()).sum();
    Ok(format!(
        "{} random matrices, L = 5, {letters} triple letters in total",
        family.len()
    ))
}

type Poly = BTreeMap<(usize, usize), BigInt>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&(i1, j1), c1) in a {
        for (&(i2, j2), c2) in b {
            *out.entry((i1 + i2, j1 + j2)).or_default() += c1 * c2;
        }
    }
    out.retain(|_, c| *c != BigInt::from(0));
    out
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (k, c) in b {
        *out.entry(*k).or_default() -= c;
    }
    out.retain(|_, c| *c != BigInt::from(0));
    out
}

fn poly(terms: &[((usize, usize), i64)]) -> Poly {
    terms.iter().map(|&(k, c)| (k, BigInt::from(c))).collect()
}

fn c9_certificates() -> Outcome {
    let u = u_series(2, 30);
    let pu = guess_annihilator(&u, 2, 2)
        .unwrap()
        .ok_or("no certificate for u")?;
    let expected_u = BivariatePolynomial::parse("2 y^2 - y + t^2").unwrap();
    ensure(pu == expected_u, || format!("u certificate {pu}"))?;

    // (32t⁶y + 24t⁴ − 12t² + 1)² − (1 − 8t²)³, with the common factor t⁶
    // and the content removed
    let lin = poly(&[((6, 1), 32), ((4, 0), 24), ((2, 0), -12), ((0, 0), 1)]);
    let cube_base = poly(&[((0, 0), 1), ((2, 0), -8)]);
    let raw = poly_sub(
        &poly_mul(&lin, &lin),
        &poly_mul(&cube_base, &poly_mul(&cube_base, &cube_base)),
    );
    let shift = raw.keys().map(|k| k.0).min().unwrap();
    let expected =
        BivariatePolynomial::new(raw.iter().map(|(&(i, j), c)| ((i - shift, j), c.clone())))
            .unwrap();

    let p40 = closed_p(ExampleId::TwoByTwo, 40).unwrap();
    let cert = guess_annihilator(&p40, 6, 2)
        .unwrap()
        .ok_or("no certificate for P_M")?;
    ensure(cert.deg_y() == 2, || format!("deg_y = {}", cert.deg_y()))?;
    ensure(cert == expected, || {
        format!("P_M certificate {cert}, expected {expected}")
    })?;
    ensure(cert.annihilates(&p40), || {
        "certificate does not annihilate".into()
    })?;
    let p20 = zeta(&builtin("paper2x2"), 20);
    ensure(p20 == p40.truncate(20), || {
        "pipeline zeta differs from the closed form below order 20".into()
    })?;
    ensure(cert.annihilates(&p20), || {
        "certificate fails on pipeline zeta".into()
    })?;

    let e = TruncatedSeries::variable(40).exp().unwrap();
    let none = guess_annihilator(&e, 4, 4).unwrap();
    ensure(none.is_none(), || format!("exp(t) got {}", none.unwrap()))?;
    Ok(format!("u: {pu}; P_M: {cert}; exp(t): none"))
}

fn c10_proper_system() -> Outcome {
    let sys = ProperSystem::lukasiewicz();
    let sol = solve_truncated(&sys, 7).unwrap();
    let alphabet = sys.alphabet();
    let mut found: Vec<String> = Vec::new();
    for (w, c) in sol[0].sorted_terms() {
        ensure(*c == BigInt::from(1), || format!("coefficient {c}"))?;
        found.push(w.iter().map(|&l| alphabet[l].as_str()).collect());
    }
    let mut expected = Vec::new();
    for len in 1..=7usize {
        for code in 0u32..1 << len {
            let w: String = (0..len)
                .rev()
                .map(|k| if code >> k & 1 == 0 { 'a' } else { 'b' })
                .collect();
            if lukasiewicz_predicate(&w) {
                expected.push(w);
            }
        }
    }
    found.sort();
    expected.sort();
    ensure(found == expected, || {
        format!("solver {found:?} vs predicate {expected:?}")
    })?;
    Ok(format!("{} words of length ≤ 7", found.len()))
}

fn c11_oracle() -> Outcome {
    let mut matrices: Vec<(String, AlgebraMatrix)> = BUILTINS
        .iter()
        .map(|s| (s.to_string(), builtin(s)))
        .collect();
    matrices.extend(
        random_family(11, 20)
            .into_iter()
            .map(|m| ("random".to_string(), m)),
    );
    for (name, m) in &matrices {
        let a = seq(m, 5);
        for n in 1..=5 {
            let o = m.a_n_oracle(n, 8).unwrap();
            ensure(o == a[n - 1], || {
                format!("{name}, n={n}: oracle {o} vs {}", a[n - 1])
            })?;
        }
    }
    Ok(format!("{} matrices, n ≤ 5", matrices.len()))
}

fn c12_rescaling() -> Outcome {
    for name in BUILTINS {
        let m = builtin(name);
        let a = seq(&m, 8);
        let z = TruncatedSeries::zeta_from_counts(&a);
        for lambda in [-1i64, 2] {
            let scaled = m.scalar_matrix(&lambda.into());
            let b = seq(&scaled, 8);
            for n in 0..8 {
                let expect = &a[n] * BigInt::from(lambda).pow(n as u32 + 1);
                ensure(b[n] == expect, || {
                    format!("{name}, λ={lambda}, n={}", n + 1)
                })?;
            }
            let zs = TruncatedSeries::zeta_from_counts(&b);
            ensure(
                zs == z.rescale(&BigRational::from_integer(lambda.into())),
                || format!("{name}, λ={lambda}: zeta"),
            )?;
        }
    }
    Ok("built-ins, λ ∈ {-1, 2}, N = 8".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("2x2 golden counts", c1_two_by_two_counts),
        ("2x2 zeta function", c2_two_by_two_zeta),
        ("Kontsevich n=1,2", c3_kontsevich),
        ("d×d family d=3,4", c4_dxd_family),
        ("integrality on random matrices", c5_integrality),
        ("cyclicity", c6_cyclicity),
        ("identification with a_n", c7_identification),
        ("Euler product", c8_euler_product),
        ("algebraicity certificates", c9_certificates),
        ("proper system", c10_proper_system),
        ("oracle equivalence", c11_oracle),
        ("rescaling", c12_rescaling),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {name}: {detail} [{elapsed:.2?}]",
                k + 1
            ),
            Err(detail) => {
                failures += 1;
                println!(
                    "criterion {:>2} FAIL  {name}: {detail} [{elapsed:.2?}]",
                    k + 1
                );
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
