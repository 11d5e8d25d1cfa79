//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines always reach the output.
//! A criterion listed in `KNOWN_UNATTAINABLE` prints FAIL without failing the
//! run; the process exits nonzero on any other failure, or if a listed
//! criterion unexpectedly passes.

use std::time::{Duration, Instant};

use rand::Rng;

use bihom_core::axioms::{
    check_bihom_superdialgebra, check_hom_superdialgebra, check_multiplicative, check_superdialgebra, CheckOptions,
};
use bihom_core::constructions::{
    classify_subspace, from_differential, generated_ideal, hom_to_bihom, morphism_check, power_twist, quotient,
    superdialgebra_to_bihom, untwist_regular, yau_twist, IdealWitness,
};
use bihom_core::corpus::{generate, random_homogeneous, rng, CorpusConfig, CorpusEntry};
use bihom_core::derivations::{
    ad_operator, brute_force_derivations, is_quasi_pair, solve_dialgebra_derivations, solve_generalized,
    verify_bracket_closure, GeneralizedParams, QuasiPair, SignConvention, Signature,
};
use bihom_core::graded::{DialgebraInstance, GradedMap, ProductTensor, SuperalgebraInstance};
use bihom_core::{DifferentialInstance, Field, Matrix, Parity, ParityMap, SuperSpace};

const STD: SignConvention = SignConvention::Standard;

/// Criteria that cannot hold as stated, with the reason.
const KNOWN_UNATTAINABLE: &[(u32, &str)] = &[
    (
        9,
        "the proof moves ε(r) with plain associativity, which BiHom instances with α = ε ≠ Id lack, \
         and drops the Koszul sign for odd r; with α = ε = Id it holds once (−1)^{|q||r|} sits on ad(p)⊣q",
    ),
    (
        10,
        "the printed identity (p⊣q)⊢ε(r) = α(p)⊣(q⊢r) fails whenever some d(q)·d(r) ≠ 0; \
         the construction's proof only checks the (⊣,⊣) and (⊢,⊢) identities",
    ),
    (
        11,
        "every mutation of a one-dimensional instance with α = ε = Id is again a valid instance; \
         the seeded pool holds three such unit lines, capping the rate at 94%",
    ),
];

/// Id, name, check, time budget.
type Criterion = (u32, &'static str, fn() -> Outcome, Duration);

struct Outcome {
    pass: bool,
    detail: String,
}

fn opts() -> CheckOptions {
    CheckOptions { max_per_axiom: 1 }
}

fn passes(h: &DialgebraInstance) -> bool {
    check_bihom_superdialgebra(h, opts()).is_empty()
}

fn corpus(seed: u64, field: Field, max_dim: usize, count: usize) -> Vec<CorpusEntry> {
    generate(&CorpusConfig::new(seed, field, max_dim, count)).expect("corpus generation")
}

fn criterion_1() -> Outcome {
    let entries = corpus(101, Field::Rational, 4, 50);
    let supers = entries
        .iter()
        .filter(|e| check_superdialgebra(&e.base, opts()).is_empty() && passes(&e.base.with_identity_maps()))
        .count();
    let homs = entries
        .iter()
        .filter(|e| {
            let h = e.hom_instance();
            check_hom_superdialgebra(&h, opts()).is_empty() && passes(&h.with_maps(h.alpha.clone(), h.alpha.clone()))
        })
        .count();
    Outcome {
        pass: supers == 50 && homs == 50,
        detail: format!("superdialgebras {supers}/50, Hom-instances with ε = α {homs}/50"),
    }
}

fn criterion_2() -> Outcome {
    let entries = corpus(202, Field::Rational, 4, 50);
    let mut r = rng(202);
    let mut ok = 0;
    let mut first_bad = None;
    for k in 0..100 {
        let e = &entries[k % entries.len()];
        let (a, b) = e.twist_pair(r.gen_range(0..=2), r.gen_range(0..=2));
        match yau_twist(&e.instance, &a, &b) {
            Ok(t) if passes(&t) => ok += 1,
            Ok(_) => {
                first_bad.get_or_insert(format!("{}: checker violation", e.name));
            }
            Err(err) => {
                first_bad.get_or_insert(format!("{}: {err}", e.name));
            }
        }
    }
    Outcome {
        pass: ok == 100,
        detail: format!("{ok}/100 twists pass{}", first_bad.map(|b| format!("; first failure {b}")).unwrap_or_default()),
    }
}

fn criterion_3() -> Outcome {
    let entries = corpus(303, Field::Rational, 4, 60);
    let mut failures = Vec::new();
    let (mut powers, mut homs, mut untwists, mut embeds, mut trips) = (0, 0, 0, 0, 0);
    for e in &entries {
        if check_multiplicative(&e.instance, opts()).0 {
            for n in 0..=2 {
                match power_twist(&e.instance, n) {
                    Ok(t) if passes(&t) => powers += 1,
                    _ => failures.push(format!("power_twist({n}) on {}", e.name)),
                }
            }
        }
        let hom = e.hom_instance();
        for k in 0..=2 {
            match hom_to_bihom(&hom, &e.endo.pow(k)) {
                Ok(t) if passes(&t) => homs += 1,
                _ => failures.push(format!("hom_to_bihom on {}", e.name)),
            }
        }
        let (a, b) = (e.endo.pow(e.powers.0), e.endo.pow(e.powers.1));
        match superdialgebra_to_bihom(&e.base, &a, &b) {
            Ok(t) if passes(&t) => embeds += 1,
            _ => failures.push(format!("superdialgebra_to_bihom on {}", e.name)),
        }
        if e.is_regular() {
            match untwist_regular(&e.instance) {
                Ok(u) if check_superdialgebra(&u, opts()).is_empty() => {
                    untwists += 1;
                    let back_to_base = u == e.base;
                    let retwist = superdialgebra_to_bihom(&u, &e.instance.alpha, &e.instance.epsilon)
                        .map(|t| t == e.instance)
                        .unwrap_or(false);
                    if back_to_base && retwist {
                        trips += 1;
                    } else {
                        failures.push(format!("round trip on {}", e.name));
                    }
                }
                _ => failures.push(format!("untwist_regular on {}", e.name)),
            }
        }
    }
    Outcome {
        pass: failures.is_empty() && untwists > 0,
        detail: format!(
            "power {powers}, hom→bihom {homs}, untwist {untwists}, superdialgebra→bihom {embeds}, round trips {trips}/{untwists}{}",
            failures.first().map(|f| format!("; first failure {f}")).unwrap_or_default()
        ),
    }
}

/// Candidate ideals: {0}, H, generated ideals of random homogeneous seeds,
/// two-sided hits among random homogeneous subspaces, and kernels of `f^c`.
fn candidate_ideals(e: &CorpusEntry, r: &mut rand_chacha::ChaCha8Rng) -> Vec<IdealWitness> {
    let h = &e.instance;
    let field = h.field();
    let n = h.dim();
    let mut out = Vec::new();
    let mut push = |w: IdealWitness| {
        if w.is_two_sided && !out.iter().any(|o: &IdealWitness| o.basis == w.basis) {
            out.push(w);
        }
    };
    push(classify_subspace(h, &[]).unwrap());
    let units: Vec<_> = (0..n).map(|i| bihom_core::linalg::unit_vector(field, n, i)).collect();
    push(classify_subspace(h, &units).unwrap());
    for _ in 0..3 {
        let p = if r.gen_bool(0.5) { Parity::Even } else { Parity::Odd };
        let seed = random_homogeneous(r, field, &h.space, p);
        push(generated_ideal(h, &[seed]).unwrap());
        let k = r.gen_range(1..=n);
        let vs: Vec<_> = (0..k)
            .map(|_| {
                let p = if r.gen_bool(0.5) { Parity::Even } else { Parity::Odd };
                random_homogeneous(r, field, &h.space, p)
            })
            .collect();
        push(classify_subspace(h, &vs).unwrap());
    }
    for c in 1..=2 {
        let g = e.endo.pow(c);
        let m = morphism_check(h, h, g.matrix()).unwrap();
        if m.witness.is_morphism() {
            push(m.kernel);
        }
    }
    out
}

fn criterion_4() -> Outcome {
    let entries = corpus(404, Field::Rational, 4, 40);
    let mut r = rng(404);
    let (mut total, mut ok, mut proper) = (0, 0, 0);
    let mut first_bad = None;
    for e in &entries {
        for t in candidate_ideals(e, &mut r) {
            total += 1;
            if t.dim() > 0 && t.dim() < e.instance.dim() {
                proper += 1;
            }
            let good = quotient(&e.instance, &t).ok().and_then(|q| {
                let m = morphism_check(&e.instance, &q.instance, &q.projection).ok()?;
                let kernel_is_t = m.kernel.basis == t.basis;
                Some(passes(&q.instance) && m.witness.is_morphism() && kernel_is_t)
            });
            if good == Some(true) {
                ok += 1;
            } else {
                first_bad.get_or_insert(e.name.clone());
            }
        }
    }
    Outcome {
        pass: ok == total && proper > 0,
        detail: format!(
            "{ok}/{total} graded two-sided ideals ({proper} proper) give valid quotients{}",
            first_bad.map(|b| format!("; first failure on {b}")).unwrap_or_default()
        ),
    }
}

fn criterion_5() -> Outcome {
    let f5 = Field::prime(5).unwrap();
    let entries = corpus(505, f5, 2, 40);
    let (mut agree, mut total) = (0, 0);
    let mut first_bad = None;
    for e in &entries {
        for (m, n) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            for p in Parity::ALL {
                let s = Signature::new(m, n, p);
                total += 1;
                let solved = solve_dialgebra_derivations(&e.instance, s, STD).unwrap();
                let brute = brute_force_derivations(&e.instance, s, STD).unwrap();
                if solved.same_span(&brute) {
                    agree += 1;
                } else {
                    first_bad.get_or_insert(format!("{} {s:?}", e.name));
                }
            }
        }
    }
    Outcome {
        pass: agree == total,
        detail: format!(
            "{agree}/{total} (instance, signature) spans agree over F_5{}",
            first_bad.map(|b| format!("; first mismatch {b}")).unwrap_or_default()
        ),
    }
}

fn criterion_6() -> Outcome {
    let entries = corpus(606, Field::Rational, 4, 20);
    let sigs = [(0, 0), (0, 1)];
    let (mut pairs, mut closed, mut anti) = (0usize, 0usize, 0usize);
    let mut first_bad = None;
    for e in &entries {
        let mut spaces = Vec::new();
        for &(m, n) in &sigs {
            for p in Parity::ALL {
                spaces.push(solve_dialgebra_derivations(&e.instance, Signature::new(m, n, p), STD).unwrap());
            }
        }
        for a in &spaces {
            for b in &spaces {
                let report = verify_bracket_closure(&e.instance, a, b).unwrap();
                pairs += report.entries.len();
                closed += report.entries.iter().filter(|x| x.satisfies && x.in_span).count();
                anti += report.entries.iter().filter(|x| x.antisymmetric).count();
                if !report.closed() {
                    first_bad.get_or_insert(format!("{} {:?}", e.name, report.target));
                }
            }
        }
    }
    Outcome {
        pass: closed == pairs && anti == pairs && pairs > 0,
        detail: format!(
            "{closed}/{pairs} basis brackets closed, {anti}/{pairs} super-antisymmetric{}",
            first_bad.map(|b| format!("; first failure {b}")).unwrap_or_default()
        ),
    }
}

/// Solved spaces on the corpus used by criteria 7 and 8.
fn solved_spaces(entries: &[CorpusEntry]) -> Vec<(usize, bihom_core::derivations::DerivationSpace)> {
    let mut out = Vec::new();
    for (k, e) in entries.iter().enumerate() {
        for (m, n) in [(0, 0), (0, 1), (1, 0)] {
            for p in Parity::ALL {
                out.push((k, solve_dialgebra_derivations(&e.instance, Signature::new(m, n, p), STD).unwrap()));
            }
        }
    }
    out
}

fn criterion_7() -> Outcome {
    let entries = corpus(707, Field::Rational, 4, 50);
    let spaces = solved_spaces(&entries);
    let agree = spaces
        .iter()
        .filter(|(k, s)| {
            let h = &entries[*k].instance;
            solve_generalized(h, &GeneralizedParams::ones(h.field()), s.signature, STD)
                .unwrap()
                .same_span(s)
        })
        .count();
    Outcome {
        pass: agree == spaces.len(),
        detail: format!("{agree}/{} spans equal at (γ, δ, λ) = (1, 1, 1)", spaces.len()),
    }
}

fn criterion_8() -> Outcome {
    let entries = corpus(808, Field::Rational, 4, 50);
    let spaces = solved_spaces(&entries);
    let (mut total, mut ok) = (0, 0);
    for (k, s) in &spaces {
        for d in &s.basis {
            total += 1;
            let pair = QuasiPair { d: d.clone(), d_prime: d.clone() };
            if is_quasi_pair(&entries[*k].instance, &pair, s.signature, STD).unwrap() {
                ok += 1;
            }
        }
    }
    Outcome {
        pass: ok == total && total > 0,
        detail: format!("{ok}/{total} derivations embed as quasi pairs (d, d)"),
    }
}

fn criterion_9() -> Outcome {
    let entries = corpus(909, Field::Rational, 4, 80);
    let mut pool: Vec<DialgebraInstance> = entries
        .iter()
        .map(|e| e.instance.clone())
        .filter(|h| h.alpha == h.epsilon && !h.has_zero_products())
        .collect();
    pool.extend(entries.iter().map(CorpusEntry::hom_instance).filter(|h| !h.has_zero_products()));
    pool.truncate(20);
    let mut r = rng(909);
    // [plain, signed, ⊢ plain, total] for identity maps and for α = ε ≠ Id.
    let mut tally = [[0usize; 4]; 2];
    for h in &pool {
        let class = (*h.alpha.matrix() != Matrix::identity(h.field(), h.dim())) as usize;
        for _ in 0..10 {
            let p = if r.gen_bool(0.5) { Parity::Even } else { Parity::Odd };
            let v = random_homogeneous(&mut r, h.field(), &h.space, p);
            let ad = ad_operator(h, &v).unwrap();
            let t = &mut tally[class];
            t[0] += ad.left.plain as usize;
            t[1] += ad.left.signed as usize;
            t[2] += ad.right.plain as usize;
            t[3] += 1;
        }
    }
    let plain = tally[0][0] + tally[1][0];
    let total = tally[0][3] + tally[1][3];
    let [id, twisted] = tally;
    Outcome {
        pass: pool.len() == 20 && plain == total,
        detail: format!(
            "⊣-Leibniz as in the proof {plain}/{total} (Id maps {}/{}, α = ε ≠ Id {}/{}); \
             informational: signed ⊣ {}/{} on Id maps, ⊢ {}/{total}",
            id[0], id[3], twisted[0], twisted[3], id[1], id[3], id[2] + twisted[2]
        ),
    }
}

fn differential_instances() -> Vec<(String, DifferentialInstance)> {
    let q = Field::Rational;
    let diag = |v: &[i64]| {
        let rows: Vec<Vec<i64>> =
            (0..v.len()).map(|i| (0..v.len()).map(|j| if i == j { v[i] } else { 0 }).collect()).collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        GradedMap::new(Matrix::from_i64(q, &refs)).unwrap()
    };
    let build = |bits: &[u8], prod: ProductTensor, pi: &GradedMap, d: Matrix, parity: Parity| {
        let space = SuperSpace::from_bits(bits);
        // p·q := π(p)π(q) is BiHom-associative with α = ε = π for idempotent multiplicative π.
        let twisted = prod.precompose(pi.matrix(), pi.matrix());
        let base = SuperalgebraInstance::new(space.clone(), twisted, pi.clone(), pi.clone()).unwrap();
        DifferentialInstance::new(base, ParityMap::new(&space, d, parity).unwrap()).unwrap()
    };
    let grassmann2 = ProductTensor::from_fn(q, 4, |a, b| {
        let mut v = vec![q.zero(); 4];
        if a & b == 0 {
            v[a | b] = q.from_i64(if a & 2 != 0 && b & 1 != 0 { -1 } else { 1 });
        }
        v
    });
    let grassmann1 = ProductTensor::from_fn(q, 2, |i, j| {
        let mut v = vec![q.zero(); 2];
        if i + j < 2 {
            v[i + j] = q.one();
        }
        v
    });
    let m = |rows: &[&[i64]]| Matrix::from_i64(q, rows);
    vec![
        ("zero products, odd d".into(), build(&[0, 1], ProductTensor::zero(q, 2), &diag(&[1, 1]), m(&[&[0, 0], &[1, 0]]), Parity::Odd)),
        ("zero products, even d".into(), build(&[0, 0], ProductTensor::zero(q, 2), &diag(&[1, 1]), m(&[&[0, 0], &[1, 0]]), Parity::Even)),
        ("Λ(ξ), d = 0".into(), build(&[0, 1], grassmann1.clone(), &diag(&[1, 1]), m(&[&[0, 0], &[0, 0]]), Parity::Odd)),
        ("Λ(ξ), d = ∂ξ".into(), build(&[0, 1], grassmann1, &diag(&[1, 1]), m(&[&[0, 1], &[0, 0]]), Parity::Odd)),
        (
            "Λ(ξ1,ξ2), d = ∂ξ1".into(),
            build(&[0, 1, 1, 0], grassmann2.clone(), &diag(&[1, 1, 1, 1]), m(&[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]), Parity::Odd),
        ),
        (
            "Λ(ξ1,ξ2), d = ξ1∂ξ2".into(),
            build(&[0, 1, 1, 0], grassmann2.clone(), &diag(&[1, 1, 1, 1]), m(&[&[0, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]), Parity::Even),
        ),
        (
            "Λ(ξ1,ξ2), α = ε kills ξ2, d = ∂ξ1".into(),
            build(&[0, 1, 1, 0], grassmann2, &diag(&[1, 1, 0, 0]), m(&[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]), Parity::Odd),
        ),
    ]
}

fn criterion_10() -> Outcome {
    let cases = differential_instances();
    let mut ok = 0;
    let mut failed = Vec::new();
    for (name, d) in &cases {
        match from_differential(d) {
            Ok(h) => {
                let report = check_bihom_superdialgebra(&h, opts());
                if report.is_empty() {
                    ok += 1;
                } else {
                    let axioms: Vec<String> = report.failed_axioms().iter().map(|a| a.label().to_string()).collect();
                    failed.push(format!("{name} [{}]", axioms.join(",")));
                }
            }
            Err(e) => failed.push(format!("{name} (hypothesis: {e})")),
        }
    }
    Outcome {
        pass: ok == cases.len(),
        detail: format!("{ok}/{} outputs pass; failing: {}", cases.len(), failed.join("; ")),
    }
}

fn criterion_11() -> Outcome {
    let entries = corpus(1111, Field::Rational, 4, 120);
    let pool: Vec<&CorpusEntry> = entries.iter().filter(|e| !e.instance.has_zero_products()).take(50).collect();
    let mut r = rng(1111);
    let (mut caught, mut wide, mut wide_caught) = (0, 0, 0);
    for e in &pool {
        let mut h = e.instance.clone();
        let n = h.dim();
        let (i, j, k) = (r.gen_range(0..n), r.gen_range(0..n), r.gen_range(0..n));
        let delta = loop {
            let v: i64 = r.gen_range(-3..=3);
            if v != 0 {
                break h.field().from_i64(v);
            }
        };
        let prod = if r.gen_bool(0.5) { &mut h.left } else { &mut h.right };
        let v = prod.get(i, j, k) + &delta;
        prod.set(i, j, k, v);
        let detected = !check_bihom_superdialgebra(&h, opts()).is_empty();
        caught += detected as usize;
        if n > 1 {
            wide += 1;
            wide_caught += detected as usize;
        }
    }
    let rate = caught as f64 / pool.len().max(1) as f64;
    Outcome {
        pass: pool.len() == 50 && rate >= 0.95,
        detail: format!(
            "{caught}/{} mutations detected ({:.0}%); dimension ≥ 2: {wide_caught}/{wide}",
            pool.len(),
            rate * 100.0
        ),
    }
}

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "axiom-system hierarchy", criterion_1, Duration::from_secs(5)),
        (2, "twist closure", criterion_2, Duration::from_secs(10)),
        (3, "derived constructions", criterion_3, Duration::from_secs(10)),
        (4, "quotient soundness", criterion_4, Duration::from_secs(10)),
        (5, "solver vs brute-force oracle", criterion_5, Duration::from_secs(60)),
        (6, "bracket closure", criterion_6, Duration::from_secs(30)),
        (7, "generalized specialization", criterion_7, Duration::from_secs(10)),
        (8, "quasi embedding", criterion_8, Duration::from_secs(10)),
        (9, "ad operator", criterion_9, Duration::from_secs(10)),
        (10, "differential construction", criterion_10, Duration::from_secs(5)),
        (11, "mutation sensitivity", criterion_11, Duration::from_secs(10)),
    ];
    let filter: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut unexpected = 0;
    for (id, name, run, budget) in criteria {
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let pass = outcome.pass && in_time;
        let known = KNOWN_UNATTAINABLE.iter().find(|(k, _)| *k == id);
        println!(
            "criterion {id:>2} {}: {name}: {} ({:.2}s of {}s{})",
            if pass { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64(),
            budget.as_secs(),
            if in_time { "" } else { ", over budget" },
        );
        match (pass, known) {
            (false, Some((_, why))) => println!("             known unattainable: {why}"),
            (true, Some(_)) => {
                println!("             listed as unattainable but passed; update the list");
                unexpected += 1;
            }
            (false, None) => unexpected += 1,
            (true, None) => {}
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} unexpected acceptance result(s)");
        std::process::exit(1);
    }
}
