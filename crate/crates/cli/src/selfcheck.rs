//! Invariant suite behind `nczeta selfcheck`.

use std::fmt::Write as _;

use nczeta::cyclic::DEFAULT_ENUMERATION_GUARD;
use nczeta::examples::{closed_p, dxd_p_prefix};
use nczeta::matrix::DEFAULT_ORACLE_GUARD;
use nczeta::sampling::{random_matrix, RandomMatrixParams};
use nczeta::{
    alphabet_of, euler_product, parse_matrix_with, s_coeff, sum_coeffs_by_length, AlgebraMatrix,
    BigInt, BigRational, ExampleId, SequenceOptions, TripleLetter, TruncatedSeries,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BUILTINS: [ExampleId; 4] = [
    ExampleId::Kontsevich(1),
    ExampleId::Kontsevich(2),
    ExampleId::TwoByTwo,
    ExampleId::DByD(3),
];

type Check = std::result::Result<String, String>;

/// Runs every check, writes one line each and reports whether all passed.
pub fn run(seed: u64, samples: usize, out: &mut String) -> bool {
    let params = RandomMatrixParams::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random: Vec<AlgebraMatrix> = (0..samples)
        .map(|_| random_matrix(&mut rng, &params))
        .collect();
    let builtins: Vec<AlgebraMatrix> = BUILTINS
        .iter()
        .map(|id| id.build().expect("valid built-in"))
        .collect();

    let checks: Vec<(&str, Check)> = vec![
        ("round trip", round_trip(&random, &params)),
        ("closed forms", closed_forms()),
        ("integrality", integrality(&random)),
        ("oracle", oracle(&builtins, &random)),
        ("identification", identification(&builtins, &random)),
        ("euler product", euler(&builtins, &random)),
        ("cyclicity", cyclicity(&builtins, &random, &mut rng)),
        ("rescaling", rescaling(&builtins)),
    ];
    let mut ok = true;
    for (name, result) in checks {
        let (verdict, detail) = match result {
            Ok(d) => ("PASS", d),
            Err(d) => {
                ok = false;
                ("FAIL", d)
            }
        };
        let _ = writeln!(out, "{verdict} {name}: {detail}");
    }
    ok
}

fn seq(m: &AlgebraMatrix, n: usize) -> Result<Vec<BigInt>, String> {
    m.a_sequence(n, SequenceOptions::default())
        .map_err(|e| e.to_string())
}

fn round_trip(random: &[AlgebraMatrix], params: &RandomMatrixParams) -> Check {
    let gens = params.generator_table();
    for m in random {
        let text = m.display(&gens).to_string();
        let back = parse_matrix_with(&text, gens.clone()).map_err(|e| format!("{e} in\n{text}"))?;
        if &back.matrix != m {
            return Err(format!("re-parsed matrix differs:\n{text}"));
        }
    }
    Ok(format!("{} matrices", random.len()))
}

fn closed_forms() -> Check {
    for id in BUILTINS {
        let p =
            TruncatedSeries::zeta_from_counts(&seq(&id.build().map_err(|e| e.to_string())?, 8)?);
        let want = match id {
            ExampleId::DByD(d) => dxd_p_prefix(d, 8),
            _ => closed_p(id, 8),
        }
        .map_err(|e| e.to_string())?;
        if p != want {
            return Err(format!("{id}: P_M differs from the closed form"));
        }
    }
    Ok(format!("{} built-ins, N = 8", BUILTINS.len()))
}

fn integrality(random: &[AlgebraMatrix]) -> Check {
    for m in random {
        let p = TruncatedSeries::zeta_from_counts(&seq(m, 10)?);
        if !p.is_integral() {
            return Err(format!("non-integral zeta:\n{p}"));
        }
    }
    Ok(format!("{} matrices, N = 10", random.len()))
}

fn oracle(builtins: &[AlgebraMatrix], random: &[AlgebraMatrix]) -> Check {
    for m in builtins.iter().chain(random) {
        let a = seq(m, 5)?;
        for n in 1..=5 {
            let o = m
                .a_n_oracle(n, DEFAULT_ORACLE_GUARD)
                .map_err(|e| e.to_string())?;
            if o != a[n - 1] {
                return Err(format!("a_{n}: oracle {o}, pipeline {}", a[n - 1]));
            }
        }
    }
    Ok("n <= 5".into())
}

fn identification(builtins: &[AlgebraMatrix], random: &[AlgebraMatrix]) -> Check {
    let cases = builtins
        .iter()
        .map(|m| (m, 6))
        .chain(random.iter().map(|m| (m, 4)));
    for (m, upto) in cases {
        let a = seq(m, upto)?;
        for n in 1..=upto {
            let s =
                sum_coeffs_by_length(m, n, DEFAULT_ENUMERATION_GUARD).map_err(|e| e.to_string())?;
            if s != a[n - 1] {
                return Err(format!("length {n}: cyclic sum {s}, a_n {}", a[n - 1]));
            }
        }
    }
    Ok("built-ins n <= 6, random n <= 4".into())
}

fn euler(builtins: &[AlgebraMatrix], random: &[AlgebraMatrix]) -> Check {
    let cases = builtins
        .iter()
        .map(|m| (m, 6))
        .chain(random.iter().map(|m| (m, 5)));
    for (m, l) in cases {
        let e = euler_product(m, l, DEFAULT_ENUMERATION_GUARD).map_err(|e| e.to_string())?;
        let p = TruncatedSeries::zeta_from_counts(&seq(m, l)?);
        if e != p {
            return Err(format!("Euler product differs from zeta at L = {l}"));
        }
    }
    Ok("built-ins L = 6, random L = 5".into())
}

/// Random words biased towards closed index paths so that most
/// coefficients are nonzero.
fn path_word(rng: &mut ChaCha8Rng, alphabet: &[TripleLetter], len: usize) -> Vec<TripleLetter> {
    let mut w: Vec<TripleLetter> = Vec::with_capacity(len);
    for _ in 0..len {
        let next: Vec<&TripleLetter> = match w.last() {
            Some(prev) => alphabet.iter().filter(|l| l.row == prev.col).collect(),
            None => alphabet.iter().collect(),
        };
        if next.is_empty() {
            break;
        }
        w.push(next[rng.gen_range(0..next.len())].clone());
    }
    w
}

fn cyclicity(builtins: &[AlgebraMatrix], random: &[AlgebraMatrix], rng: &mut ChaCha8Rng) -> Check {
    let mut cases = 0usize;
    for m in builtins.iter().chain(random) {
        let alphabet = alphabet_of(m);
        if alphabet.is_empty() {
            continue;
        }
        for _ in 0..5 {
            let (lu, lv) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            let u = path_word(rng, &alphabet, lu);
            let v = path_word(rng, &alphabet, lv);
            let uv = s_coeff(m, &[u.clone(), v.clone()].concat()).map_err(|e| e.to_string())?;
            let vu = s_coeff(m, &[v, u.clone()].concat()).map_err(|e| e.to_string())?;
            if uv != vu {
                return Err(format!("(S,uv) = {uv} but (S,vu) = {vu}"));
            }
            let r = rng.gen_range(2..=3usize);
            let ur: Vec<TripleLetter> = u.iter().cycle().take(u.len() * r).cloned().collect();
            let su = s_coeff(m, &u).map_err(|e| e.to_string())?;
            let sur = s_coeff(m, &ur).map_err(|e| e.to_string())?;
            if sur != su.pow(r as u32) {
                return Err(format!(
                    "(S,w^{r}) = {sur} but (S,w)^{r} = {}",
                    su.pow(r as u32)
                ));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

fn rescaling(builtins: &[AlgebraMatrix]) -> Check {
    for m in builtins {
        let a = seq(m, 8)?;
        let p = TruncatedSeries::zeta_from_counts(&a);
        for lambda in [-1i64, 2] {
            let l = BigInt::from(lambda);
            let scaled = m.scalar_matrix(&l);
            let b = seq(&scaled, 8)?;
            for (n, (x, y)) in a.iter().zip(&b).enumerate() {
                if *y != x * l.pow(n as u32 + 1) {
                    return Err(format!("a_{}(λM) wrong for λ = {lambda}", n + 1));
                }
            }
            let q = TruncatedSeries::zeta_from_counts(&b);
            if q != p.rescale(&BigRational::from_integer(l.clone())) {
                return Err(format!("zeta(λM) wrong for λ = {lambda}"));
            }
        }
    }
    Ok("λ ∈ {-1, 2}, N = 8".into())
}
