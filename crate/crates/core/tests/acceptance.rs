//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rpp_lr::fixtures;
use rpp_lr::reading::{height_vector, reading_word, reconstruct, Word};
use rpp_lr::rpp_crystal::{is_benign, restrict};
use rpp_lr::shapes::{all_skew_shapes, SkewShape};
use rpp_lr::symfunc::{g_poly, h_coeffs, schur, SparsePoly};
use rpp_lr::tableaux::Filling;
use rpp_lr::verify::{self, Config, Suite};
use rpp_lr::word_crystal::raise_word;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

/// The corpus: every skew shape with `|λ| ≤ 6`, `m ∈ {1,2,3}`, ten random
/// resolution orders, words up to length 8.
const CORPUS: Config = Config {
    max_cells: 6,
    max_entry: 3,
    seed: 7,
    random_orders: 10,
    word_length: 8,
};

fn suites(cfg: &Config, list: &[Suite]) -> Outcome {
    let mut notes = Vec::new();
    for &s in list {
        let report = verify::run(s, cfg);
        if !report.passed() {
            return Err(report.to_string());
        }
        notes.push(format!("{} cases {}", s.name(), report.cases));
    }
    Ok(notes.join(", "))
}

fn w(letters: &[u32]) -> Word {
    Word::new(letters.to_vec())
}

fn orbit() -> Outcome {
    let start = Instant::now();
    let s = w(&[1, 2, 2, 3, 1, 3, 2, 2, 2, 1, 3, 1, 2]);
    let expected = [
        w(&[1, 1, 2, 3, 1, 3, 2, 2, 2, 1, 3, 1, 2]),
        w(&[1, 1, 2, 3, 1, 3, 1, 2, 2, 1, 3, 1, 2]),
        w(&[1, 1, 2, 3, 1, 3, 1, 2, 2, 1, 3, 1, 1]),
    ];
    let mut cur = s;
    for (k, want) in expected.iter().enumerate() {
        match raise_word(&cur, 1) {
            Some(next) if &next == want => cur = next,
            got => return Err(format!("E_1^{}(s) = {got:?}, expected {want}", k + 1)),
        }
    }
    if let Some(extra) = raise_word(&cur, 1) {
        return Err(format!("E_1^4(s) = {extra}, expected zero"));
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_millis(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{elapsed:?}"))
}

fn reading_example() -> Outcome {
    let shape: SkewShape = "4,4,4,4,3,3,2/2,1".parse().map_err(|e| format!("{e}"))?;
    let rows: Vec<Vec<u32>> = vec![
        vec![1, 2],
        vec![1, 1, 4],
        vec![1, 1, 1, 4],
        vec![1, 3, 3, 4],
        vec![2, 3, 5],
        vec![2, 4, 5],
        vec![3, 4],
    ];
    let t = Filling::new(shape.clone(), 5, rows).map_err(|e| e.to_string())?;
    let word = reading_word(&t);
    let heights = height_vector(&t);
    if word != w(&[3, 4, 2, 5, 3, 1, 3, 4, 1, 1, 2]) {
        return Err(format!("reading word {word}"));
    }
    if heights != [7, 7, 6, 6, 5, 4, 4, 4, 3, 3, 1] {
        return Err(format!("height vector {heights:?}"));
    }
    let back = reconstruct(&shape, &word, &heights, 5).map_err(|e| e.to_string())?;
    if back != t {
        return Err(format!("reconstructed\n{back}"));
    }
    Ok(format!("r(T) = {}", word.compact()))
}

fn benign_fixtures() -> Outcome {
    let (a, b, c) = (fixtures::benign_fixture_a(), fixtures::benign_fixture_b(), fixtures::benign_fixture_c());
    let classify = |t: &Filling| (is_benign(&restrict(t, 1)), t.is_rpp());
    let got = [classify(&a), classify(&b), classify(&c)];
    if got[0].0 || !got[1].0 || got[1].1 || !got[2].1 {
        return Err(format!("(benign, rpp) = {got:?}"));
    }
    Ok("a: not benign; b: benign, not RPP; c: RPP".into())
}

/// Σ_ν h_ν s_ν rebuilt as a polynomial and compared with `g` directly,
/// on top of the coefficient comparison in the identity suite.
fn identity() -> Outcome {
    let start = Instant::now();
    let notes = suites(&CORPUS, &[Suite::Identity])?;
    for shape in all_skew_shapes(CORPUS.max_cells) {
        for m in 1..=CORPUS.max_entry {
            let mut sum = SparsePoly::zero(m as usize, 0);
            for (nu, c) in h_coeffs(&shape, m).0 {
                sum = &sum + &(&schur(&nu, m) * &c);
            }
            if sum != g_poly(&shape, m) {
                return Err(format!("shape {shape}, m={m}: Σ h_ν s_ν != g"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{notes}, {:.1}s", elapsed.as_secs_f64()))
}

fn criteria() -> Vec<Criterion> {
    vec![
        ("E_1 orbit of the worked example", Box::new(orbit)),
        ("reading word, heights and reconstruction of the worked example", Box::new(reading_example)),
        ("benign fixtures classify as not benign / benign non-RPP / RPP", Box::new(benign_fixtures)),
        ("Schur expansion of g equals the lattice count", Box::new(identity)),
        ("refined identity and ceq preservation", Box::new(|| suites(&CORPUS, &[Suite::Refined, Suite::Preserve]))),
        ("reading word intertwines e_i/f_i with E_i/F_i", Box::new(|| suites(&CORPUS, &[Suite::Intertwine]))),
        ("crystal components are Schur crystals", Box::new(|| suites(&CORPUS, &[Suite::Components]))),
        ("straight shapes agree with elegant fillings", Box::new(|| suites(&CORPUS, &[Suite::Elegant]))),
        ("top degree is the skew Schur polynomial with LR expansion", Box::new(|| suites(&CORPUS, &[Suite::Top]))),
        ("descent resolution is confluent within the step bound", Box::new(|| suites(&CORPUS, &[Suite::Confluence]))),
        ("E_i/F_i inverse and lattice equivalence on [3]^≤8", Box::new(|| suites(&CORPUS, &[Suite::Words]))),
        (
            "coefficients stable from m to m+1 for m ∈ {1,2}",
            Box::new(|| suites(&Config { max_entry: 2, ..CORPUS }, &[Suite::Stability])),
        ),
    ]
}

fn main() -> ExitCode {
    let mut failures = 0;
    for (k, (name, check)) in criteria().into_iter().enumerate() {
        match check() {
            Ok(note) => println!("[PASS] criterion {}: {name} ({note})", k + 1),
            Err(why) => {
                failures += 1;
                println!("[FAIL] criterion {}: {name}: {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} of 12 criteria passed", 12 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
