//! Acceptance criteria, one line of output per criterion.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hwmlab::envelope::{
    build_generator, commutator, hc_eigenvalue, is_central, l_number, structure_constants, Adjacency,
    BasisElement, Uea, Word,
};
use hwmlab::ktypes::{distinguished_ktype, g_map, g_map_iterate, j_invariant, verma_ktype_multiplicity, KTypeSignature};
use hwmlab::projection::{
    apply_projector, build_projector, characters_of, classify_module, ext_structure, inf_char, xset, Model,
    ModuleKind,
};
use hwmlab::scalar::parse_gaussian;
use hwmlab::sl2lab::{eisenstein_e2, lower_e, module_probe, TermKey};
use hwmlab::unitarity::{unitary_orbit, unitary_orbit_by_filter};
use hwmlab::weights::{abs_multiset, dot_act, dot_orbit};
use hwmlab::{GaussianRational, HalfInt, QSeries, Rational, Weight, WeylElement};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;

/// Identifier, name, time limit in seconds, body.
type Criterion = (usize, &'static str, u64, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn w(v: &[i64]) -> Weight {
    Weight::single(v).unwrap()
}

/// Weakly decreasing tuples of length `n` with entries in `lo..=hi`.
fn dominant(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    common::tuples(n, lo, hi)
        .into_iter()
        .filter(|v| v.windows(2).all(|p| p[0] >= p[1]))
        .collect()
}

fn random_element(rng: &mut ChaCha8Rng, n: usize) -> WeylElement {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let signs = (0..n).map(|_| if rng.gen_bool(0.5) { -1 } else { 1 }).collect();
    WeylElement::new(perm, signs).unwrap()
}

fn weyl_and_orbits() -> Check {
    let mut fact = 1usize;
    for n in 1..=5 {
        fact *= n;
        let count = WeylElement::all(n).len();
        ensure!(count == (1 << n) * fact, "|W_{n}| = {count}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=4);
        let lam = w(&(0..n).map(|_| rng.gen_range(-6..=10)).collect::<Vec<_>>());
        let (a, b) = (random_element(&mut rng, n), random_element(&mut rng, n));
        let lhs = dot_act(&a.compose(&b), &lam, 0).unwrap();
        let rhs = dot_act(&a, &dot_act(&b, &lam, 0).unwrap(), 0).unwrap();
        ensure!(lhs == rhs, "composition fails at {lam}");
        ensure!(dot_act(&WeylElement::identity(n), &lam, 0).unwrap() == lam, "identity moves {lam}");
    }
    for n in 1..=3 {
        for v in common::tuples(n, -2, 6) {
            let lam = w(&v);
            let base = abs_multiset(&lam);
            let orbit = dot_orbit(&lam, 0).unwrap();
            ensure!(orbit.iter().all(|m| abs_multiset(m) == base), "multiset changes on the orbit of {lam}");
        }
    }
    Ok(())
}

fn unitary_orbits() -> Check {
    let mut seen = 0;
    for n in 1..=6 {
        for v in common::regular_antidominant(n, n as i64 + 6) {
            let lam = w(&v);
            let mut closed = unitary_orbit(&lam, 0).unwrap().weights();
            closed.sort();
            ensure!(closed == unitary_orbit_by_filter(&lam, 0).unwrap(), "orbit mismatch at {lam}");
            if v[n - 1] != n as i64 + 1 {
                ensure!(closed == [lam.clone()], "{lam} should be alone");
            }
            seen += 1;
        }
    }
    ensure!(seen > 0, "no weights checked");
    Ok(())
}

fn distinguished_ktypes() -> Check {
    for n in 1..=4 {
        for lam in dominant(n, 0, 8) {
            let sigma = distinguished_ktype(&lam).unwrap();
            let degree = ((sigma.size() - lam.iter().sum::<i64>()).max(0) / 2) as usize;
            let m = verma_ktype_multiplicity(&lam, &sigma, degree).unwrap();
            ensure!(m >= 1, "{sigma:?} missing from N({lam:?})");
        }
    }
    for n in 1..=6 {
        for lam in dominant(n, 0, 10) {
            let j = j_invariant(&lam);
            let mut cur = lam.clone();
            for _ in 1..n {
                cur = g_map(&cur).unwrap();
                ensure!(j_invariant(&cur) == j, "j changes along g from {lam:?}");
            }
            let mut expect = vec![lam[0]; j];
            expect.extend(std::iter::repeat_n(lam[0] - 1, n - j));
            ensure!(g_map_iterate(&lam, n - 1).unwrap() == expect, "g^(n-1)({lam:?}) = {cur:?}");
        }
    }
    Ok(())
}

fn envelope() -> Check {
    for n in 1..=2 {
        let table = structure_constants::<Rational>(n);
        let dim = table.len();
        let zero = GaussianRational::new(Rational::from_integer(0.into()), Rational::from_integer(0.into()));
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    // [a,[b,c]] + [b,[c,a]] + [c,[a,b]]
                    let mut acc = vec![zero.clone(); dim];
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        for (k, s) in &table[y][z] {
                            for (l, t) in &table[x][*k] {
                                acc[*l] = acc[*l].clone() + s.clone() * t.clone();
                            }
                        }
                    }
                    ensure!(acc.iter().all(|v| *v == zero), "Jacobi fails at n={n} ({a},{b},{c})");
                }
            }
        }
    }
    let br = commutator(1, BasisElement::eplus(0, 0), BasisElement::eminus(0, 0)).unwrap();
    let expect = Uea::generator(1, BasisElement::B(0, 0))
        .unwrap()
        .scale(&parse_gaussian("4").unwrap());
    ensure!(br == expect, "[E+,E-] = {br}");
    for (word, l) in [("E-BE+", 0), ("E-BE+B*", 1), ("E+E-BB", 2), ("E-BBE+", 2)] {
        let parsed = Word::parse(word, Adjacency::Linear).map_err(|e| e.to_string())?;
        let got = l_number(&parsed);
        ensure!(got == l, "L({word}) = {got}");
    }
    for (n, r) in [(1, 1), (1, 2), (2, 1)] {
        let d = build_generator(n, r).unwrap();
        ensure!(is_central(&d, n).unwrap(), "D_{} not central at n={n}", 2 * r);
    }
    Ok(())
}

fn infinitesimal_characters() -> Check {
    for n in 1..=3 {
        let ws: Vec<Weight> = common::tuples(n, -2, 8).iter().map(|v| w(v)).collect();
        let chars: Vec<_> = ws.iter().map(inf_char).collect();
        for (a, ca) in ws.iter().zip(&chars) {
            let orbit: BTreeSet<Weight> = dot_orbit(a, 0).unwrap().into_iter().collect();
            for (b, cb) in ws.iter().zip(&chars) {
                let canon = ca.canonical() == cb.canonical();
                ensure!(canon == (ca.evaluation() == cb.evaluation()), "forms disagree for {a}, {b}");
                ensure!(canon == orbit.contains(b), "orbit disagrees for {a}, {b}");
            }
        }
    }
    let d2 = build_generator(1, 1).unwrap();
    let eig = |x: i64| hc_eigenvalue(&[HalfInt::from_int(x)], &d2).unwrap();
    for a in -6..=6 {
        for b in -6..=6 {
            let true_sep = eig(a) != eig(b);
            let surrogate = inf_char(&w(&[a])).separation(&inf_char(&w(&[b]))).is_some();
            ensure!(true_sep == surrogate, "separation disagrees at {a}, {b}");
        }
    }
    Ok(())
}

fn projection() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let kinds = [ModuleKind::Verma, ModuleKind::Irreducible, ModuleKind::DualVerma];
    for trial in 0..20 {
        let (n, d) = [(1, 1), (1, 2), (2, 1)][trial % 3];
        let (rho, members) = loop {
            let rho: Vec<KTypeSignature> = (0..d)
                .map(|_| {
                    let mut v: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=7)).collect();
                    v.sort_by(|a, b| b.cmp(a));
                    KTypeSignature::new(v).unwrap()
                })
                .collect();
            let members = xset(&rho).map_err(|e| e.to_string())?;
            if !members.is_empty() {
                break (rho, members);
            }
        };
        let modules: Vec<(ModuleKind, Weight)> = members
            .iter()
            .map(|m| (*kinds.choose(&mut rng).unwrap(), m.clone()))
            .collect();
        let model: Model<Rational> = Model::new(&modules, 6).map_err(|e| e.to_string())?;
        let chars = characters_of(&rho).unwrap();
        let plans: Vec<_> = chars.iter().map(|c| build_projector(c, &rho).unwrap()).collect();
        let dim = model.dim();
        let zero = Rational::from_integer(0.into());
        let mut vectors: Vec<Vec<Rational>> = (0..dim)
            .filter(|&k| dim <= 150 || (0..model.summands().len()).any(|s| model.range(s).start == k))
            .map(|k| (0..dim).map(|j| Rational::from_integer(i64::from(j == k).into())).collect())
            .collect();
        for _ in 0..3 {
            vectors.push(
                (0..dim)
                    .map(|_| Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into()))
                    .collect(),
            );
        }
        for v in &vectors {
            let images: Vec<Vec<Rational>> = plans.iter().map(|p| apply_projector(p, &model, v).unwrap()).collect();
            let mut total = vec![zero.clone(); dim];
            for (a, img) in images.iter().enumerate() {
                ensure!(apply_projector(&plans[a], &model, img).unwrap() == *img, "not idempotent, trial {trial}");
                for (b, p) in plans.iter().enumerate() {
                    if a != b {
                        let cross = apply_projector(p, &model, img).unwrap();
                        ensure!(cross.iter().all(|x| *x == zero), "not orthogonal, trial {trial}");
                    }
                }
                for (t, x) in total.iter_mut().zip(img) {
                    *t += x;
                }
            }
            ensure!(total == *v, "projectors do not sum to the identity, trial {trial}");
        }
    }
    Ok(())
}

fn classification() -> Check {
    let labels = |r: &hwmlab::projection::ClassificationResult| -> Vec<String> {
        r.possibilities.iter().map(ToString::to_string).collect()
    };
    let sigma = KTypeSignature::new(vec![4, 3]).unwrap();
    let r = classify_module(2, 1, &w(&[4, 3]), Some(&sigma)).unwrap();
    let json = serde_json::to_string(&r).unwrap();
    ensure!(
        json == r#"{"branch":"lambda_n=n+1","possibilities":["L(4,3)","NDual(4,1)"]}"#,
        "boundary branch gave {json}"
    );
    let r = classify_module(2, 2, &Weight::parse("5,4;5,4").unwrap(), None).unwrap();
    ensure!(labels(&r) == ["L(5,4;5,4)"], "several places gave {:?}", labels(&r));
    let r = classify_module(2, 1, &w(&[5, 4]), None).unwrap();
    ensure!(labels(&r) == ["L(5,4)"], "generic branch gave {:?}", labels(&r));
    let e = ext_structure(2, 1, &[4]).unwrap();
    ensure!(e.lambda == w(&[4, 3]) && e.lambda_prime == w(&[4, 1]) && e.ext_dim == 1, "ext weights {e:?}");
    ensure!(e.exact_sequence == "0 -> L(4,3) -> N(4,1) -> L(4,1) -> 0", "sequence {}", e.exact_sequence);
    ensure!(abs_multiset(&e.lambda) == abs_multiset(&e.lambda_prime), "multisets differ");
    Ok(())
}

fn sl2() -> Check {
    let e2: QSeries = eisenstein_e2(50).unwrap();
    for m in 1..=50u32 {
        let expect = Rational::from_integer((24 * common::sigma1_by_factoring(u64::from(m))).into());
        ensure!(e2.q_coefficient(m) == expect, "q^{m} coefficient");
    }
    let e = lower_e(&e2);
    let expect = QSeries::from_terms(50, [(TermKey::new(0, 0, -1), parse_gaussian("0-6i").unwrap())]);
    ensure!(e == expect, "E(E2) is not -6i/pi");
    ensure!(lower_e(&e).is_zero(), "E^2(E2) is not zero");
    let table = module_probe(&e2, 2, 4).map_err(|e| e.to_string())?;
    for (k, dim) in &table {
        ensure!(*dim == usize::from(*k >= 0), "weight {k} has dimension {dim}");
    }
    ensure!(table.get(&0) == Some(&1), "no constants at weight 0");
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "Weyl group and dot orbits", 30, weyl_and_orbits),
        (2, "unitary orbit closed form", 120, unitary_orbits),
        (3, "distinguished K-types and parity map", 120, distinguished_ktypes),
        (4, "enveloping algebra and central generators", 300, envelope),
        (5, "infinitesimal characters", 60, infinitesimal_characters),
        (6, "central projectors", 60, projection),
        (7, "classification golden values", 60, classification),
        (8, "SL2 nearly holomorphic lab", 30, sl2),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panic".into())));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed > Duration::from_secs(limit) {
                Err(format!("exceeded {limit} s"))
            } else {
                Ok(())
            }
        });
        match outcome {
            Ok(()) => println!("criterion {id} ({name}): PASS in {:.2} s", elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {id} ({name}): FAIL in {:.2} s: {msg}", elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
