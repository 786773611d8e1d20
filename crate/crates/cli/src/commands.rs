use std::cmp::Reverse;

use hwmlab::envelope::{
    self, build_generator, enumerate_words_with, exact_algebra, hc_eigenvalue, is_central, l_number_with,
    Adjacency, BasisElement, Uea, Word,
};
use hwmlab::ktypes::{
    distinguished_ktype, g_map_iterate, j_invariant, lr_coefficients, principal_series_multiplicity,
    upplus_decomposition, verma_ktype_multiplicity, KTypeSignature,
};
use hwmlab::projection::{
    apply_projector, build_projector, characters_of, classify_module, ext_structure, inf_char, xset, Model,
    ModuleKind,
};
use hwmlab::scalar::{format_gaussian, format_rational, parse_gaussian, parse_rational};
use hwmlab::sl2lab::{
    eisenstein_e2, holomorphic_part, lower_e, module_probe, nearly_holomorphic_degree, raise_maass_shimura,
    Series, TermKey,
};
use hwmlab::unitarity::{first_reduction_point, pq_counts, unitarity_verdict, unitary_orbit};
use hwmlab::weights::{abs_multiset, antidominant_rep, dot_act, dot_orbit, rho, weight_flags};
use hwmlab::{Error, Gaussian, QSeries, Rational, UeaElement, Weight, WeylElement};
use serde_json::{json, Value};

use crate::args::{CenterOp, Command, KtypeOp, ProjectOp, SeriesArgs, Sl2Op, WeightArgs};

pub type Outcome = Result<Value, Error>;

fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

fn ints(s: &str, what: &'static str) -> Result<Vec<i64>, Error> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim().parse().map_err(|_| Error::Parse {
                what,
                input: s.to_string(),
            })
        })
        .collect()
}

fn weight(s: &str, n: Option<usize>) -> Result<Weight, Error> {
    let w = Weight::parse(s)?;
    match n {
        Some(n) if n != w.rank() => Err(Error::RankMismatch {
            expected: n,
            got: w.rank(),
        }),
        _ => Ok(w),
    }
}

fn signatures(s: &str) -> Result<Vec<KTypeSignature>, Error> {
    s.split(';').map(KTypeSignature::parse).collect()
}

fn labels<'a>(ws: impl IntoIterator<Item = &'a Weight>) -> Vec<String> {
    ws.into_iter().map(Weight::label).collect()
}

fn place_row(w: &Weight, place: usize) -> Result<Vec<hwmlab::HalfInt>, Error> {
    Ok(w.at(place)?.to_vec())
}

fn uea_json(e: &UeaElement) -> Value {
    json!(e.to_string_map())
}

/// A Gaussian constant, or a `*`-separated product of basis elements.
fn element(n: usize, s: &str) -> Result<UeaElement, Error> {
    if let Ok(c) = parse_gaussian(s) {
        return Ok(Uea::constant(n, c));
    }
    let letters: Vec<BasisElement> = s.split('*').map(BasisElement::parse).collect::<Result<_, _>>()?;
    exact_algebra(n)?.word(&letters)
}

pub fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Orbit { weight, perm, signs } => orbit(&weight, perm.as_deref(), signs.as_deref()),
        Command::Unitary { weight } => unitary(&weight),
        Command::Ktype { op } => ktype(op),
        Command::Center { op } => center(op),
        Command::Infchar { weight: w, compare } => infchar(&w, compare.as_deref()),
        Command::Project { op } => project(op),
        Command::Classify { n, d, weight: w, ktype } => classify(n, d, &w, ktype.as_deref()),
        Command::Sl2 { op } => sl2(op),
    }
}

fn orbit(args: &WeightArgs, perm: Option<&str>, signs: Option<&str>) -> Outcome {
    let w = weight(&args.weight, args.n)?;
    let n = w.rank();
    let mut orbit = dot_orbit(&w, args.place)?;
    orbit.sort();
    let rep = antidominant_rep(&w).ok().map(|r| r.label());
    let mut out = json!({
        "weight": w.label(),
        "place": args.place,
        "rho": rho(n)?.coords,
        "flags": weight_flags(&w),
        "abs_multiset": abs_multiset(&w),
        "antidominant_rep": rep,
        "size": orbit.len(),
        "orbit": labels(&orbit),
    });
    if perm.is_some() || signs.is_some() {
        let p: Vec<usize> = match perm {
            Some(p) => ints(p, "permutation")?
                .into_iter()
                .map(|i| usize::try_from(i - 1).map_err(|_| invalid("permutation entries start at 1")))
                .collect::<Result<_, _>>()?,
            None => (0..n).collect(),
        };
        let s: Vec<i8> = match signs {
            Some(s) => ints(s, "signs")?.into_iter().map(|x| x as i8).collect(),
            None => vec![1; n],
        };
        let e = WeylElement::new(p, s)?;
        out["image"] = json!(dot_act(&e, &w, args.place)?.label());
    }
    Ok(out)
}

fn unitary(args: &WeightArgs) -> Outcome {
    let w = weight(&args.weight, args.n)?;
    let verdict = unitarity_verdict(&w, args.place)?;
    let orbit = unitary_orbit(&w, args.place).ok().map(|o| {
        json!({
            "base": o.base.label(),
            "members": o.members.iter().map(|m| json!({"j": m.j, "weight": m.weight.label()})).collect::<Vec<_>>(),
        })
    });
    let normalized = w.with_place(args.place, w.at(args.place)?.iter().map(|&x| x + verdict.shift).collect())?;
    Ok(json!({
        "weight": w.label(),
        "place": args.place,
        "normalized": normalized.label(),
        "pq": pq_counts(&w, args.place)?,
        "first_reduction_point": first_reduction_point(&normalized, args.place)?,
        "verdict": verdict,
        "unitarizable": verdict.unitarizable,
        "unitary_orbit": orbit,
    }))
}

fn ktype(op: KtypeOp) -> Outcome {
    match op {
        KtypeOp::Lr { mu, nu } => {
            let (mu, nu) = (KTypeSignature::parse(&mu)?, KTypeSignature::parse(&nu)?);
            let terms = lr_coefficients(&mu, &nu)?;
            Ok(json!({
                "mu": mu,
                "nu": nu,
                "terms": terms.iter().map(|(s, c)| json!({"ktype": s, "multiplicity": c})).collect::<Vec<_>>(),
            }))
        }
        KtypeOp::Upplus { n, depth } => {
            let parts = upplus_decomposition(n, depth);
            Ok(json!({
                "n": n,
                "max_degree": depth,
                "terms": parts.iter().map(|(p, c)| json!({"partition": p, "multiplicity": c})).collect::<Vec<_>>(),
            }))
        }
        KtypeOp::Verma { weight, ktype, depth } => {
            let lambda = ints(&weight, "weight")?;
            let sigma = KTypeSignature::parse(&ktype)?;
            let forced = ((sigma.size() - lambda.iter().sum::<i64>()).max(0) / 2) as usize;
            let degree = depth.unwrap_or(forced);
            Ok(json!({
                "weight": weight,
                "ktype": sigma,
                "max_degree": degree,
                "multiplicity": verma_ktype_multiplicity(&lambda, &sigma, degree)?,
            }))
        }
        KtypeOp::Distinguished { weight } => {
            let lambda = ints(&weight, "weight")?;
            let sigma = distinguished_ktype(&lambda)?;
            Ok(json!({"weight": weight, "j": j_invariant(&lambda), "ktype": sigma}))
        }
        KtypeOp::Gmap { weight, iterate } => {
            let lambda = ints(&weight, "weight")?;
            let k = iterate.unwrap_or(lambda.len().saturating_sub(1));
            let steps = (0..=k)
                .map(|i| g_map_iterate(&lambda, i).map(|v| json!({"step": i, "weight": v, "j": j_invariant(&v)})))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(json!({"weight": weight, "iterates": steps}))
        }
        KtypeOp::Parity { eps, j } => {
            let e: Vec<u8> = ints(&eps, "sign characters")?
                .into_iter()
                .map(|x| u8::try_from(x).ok().filter(|&x| x <= 1).ok_or_else(|| invalid("sign characters are 0 or 1")))
                .collect::<Result<_, _>>()?;
            Ok(json!({"eps": e, "j": j, "multiplicity": principal_series_multiplicity(&e, j)}))
        }
    }
}

fn adjacency(linear: bool) -> Adjacency {
    if linear {
        Adjacency::Linear
    } else {
        Adjacency::Cyclic
    }
}

fn center_element(n: usize, r: Option<usize>, e: Option<&str>) -> Result<UeaElement, Error> {
    match (r, e) {
        (Some(r), None) => build_generator(n, r),
        (None, Some(s)) => element(n, s),
        _ => Err(invalid("give exactly one of --r and --element")),
    }
}

fn center(op: CenterOp) -> Outcome {
    match op {
        CenterOp::Generator { n, r } => {
            let d = build_generator(n, r)?;
            Ok(json!({"n": n, "r": r, "terms": d.len(), "element": uea_json(&d)}))
        }
        CenterOp::Words { r, linear } => {
            let adj = adjacency(linear);
            let words = enumerate_words_with(r, adj)?;
            let list: Vec<Value> = words
                .iter()
                .map(|w| json!({"word": w, "l": l_number_with(w, adj)}))
                .collect();
            Ok(json!({"r": r, "count": words.len(), "words": list}))
        }
        CenterOp::Lnumber { word, linear } => {
            let adj = adjacency(linear);
            let w = Word::parse(&word, adj)?;
            Ok(json!({"word": w, "l": l_number_with(&w, adj)}))
        }
        CenterOp::Eigen { n, r, element: e, weight: w } => {
            let c = center_element(n, r, e.as_deref())?;
            let lam = weight(&w, Some(n))?;
            let row = place_row(&lam, 0)?;
            Ok(json!({"n": n, "weight": lam.label(), "eigenvalue": format_gaussian(&hc_eigenvalue(&row, &c)?)}))
        }
        CenterOp::Commutator { n, x, y } => {
            let (a, b) = (BasisElement::parse(&x)?, BasisElement::parse(&y)?);
            let c = envelope::commutator(n, a, b)?;
            Ok(json!({"x": a.to_string(), "y": b.to_string(), "bracket": uea_json(&c)}))
        }
        CenterOp::Normal { n, element: e } => {
            let v = element(n, &e)?;
            Ok(json!({"input": e, "normal_form": uea_json(&envelope::pbw_normal_form(&v)?)}))
        }
        CenterOp::Central { n, r, element: e } => {
            let c = center_element(n, r, e.as_deref())?;
            Ok(json!({"n": n, "central": is_central(&c, n)?}))
        }
    }
}

fn infchar(args: &WeightArgs, compare: Option<&str>) -> Outcome {
    let w = weight(&args.weight, args.n)?;
    let chi = inf_char(&w);
    let mut out = json!({"weight": w.label(), "label": chi.to_string(), "character": chi});
    if let Some(c) = compare {
        let other = weight(c, Some(w.rank()))?;
        let psi = inf_char(&other);
        let sep = chi.separation(&psi).map(|(place, i)| json!({"place": place, "index": i}));
        out["compare"] = json!({
            "weight": other.label(),
            "label": psi.to_string(),
            "equal": sep.is_none(),
            "separation": sep,
        });
    }
    Ok(out)
}

fn parse_module(s: &str) -> Result<(ModuleKind, Weight), Error> {
    let (kind, w) = s.split_once(':').ok_or_else(|| invalid(format!("module {s:?} needs KIND:weight")))?;
    let kind = match kind {
        "N" => ModuleKind::Verma,
        "L" => ModuleKind::Irreducible,
        "NDual" => ModuleKind::DualVerma,
        other => return Err(invalid(format!("unknown module kind {other:?}"))),
    };
    Ok((kind, Weight::parse(w)?))
}

fn project(op: ProjectOp) -> Outcome {
    match op {
        ProjectOp::Xset { ktype } => {
            let rho = signatures(&ktype)?;
            let members = xset(&rho)?;
            let chars = characters_of(&rho)?;
            Ok(json!({
                "ktype": ktype,
                "xset": labels(&members),
                "characters": chars.iter().map(ToString::to_string).collect::<Vec<_>>(),
            }))
        }
        ProjectOp::Plan { ktype, target } => {
            let rho = signatures(&ktype)?;
            let chi = inf_char(&weight(&target, Some(rho[0].rank()))?);
            Ok(json!({"ktype": ktype, "plan": build_projector(&chi, &rho)?}))
        }
        ProjectOp::Apply { ktype, target, truncation, module } => {
            let rho = signatures(&ktype)?;
            let chi = inf_char(&weight(&target, Some(rho[0].rank()))?);
            let plan = build_projector(&chi, &rho)?;
            let modules: Vec<(ModuleKind, Weight)> = if module.is_empty() {
                xset(&rho)?.into_iter().map(|w| (ModuleKind::Verma, w)).collect()
            } else {
                module.iter().map(|s| parse_module(s)).collect::<Result<_, _>>()?
            };
            let model: Model<Rational> = Model::new(&modules, truncation)?;
            let ones = vec![Rational::from_integer(1.into()); model.dim()];
            let image = apply_projector(&plan, &model, &ones)?;
            let summands: Vec<Value> = model
                .summands()
                .iter()
                .enumerate()
                .map(|(k, s)| {
                    let r = model.range(k);
                    json!({
                        "module": s.descriptor,
                        "character": s.character.to_string(),
                        "dim": r.len(),
                        "retained": image[r].iter().any(|x| *x != Rational::from_integer(0.into())),
                    })
                })
                .collect();
            Ok(json!({
                "target": chi.to_string(),
                "truncation": truncation,
                "dim": model.dim(),
                "image_dim": image.iter().filter(|x| **x != Rational::from_integer(0.into())).count(),
                "summands": summands,
            }))
        }
        ProjectOp::Ext { n, i, head } => {
            let e = ext_structure(n, i, &ints(&head, "head")?)?;
            Ok(json!({
                "lambda": e.lambda.label(),
                "lambda_prime": e.lambda_prime.label(),
                "abs_multiset": abs_multiset(&e.lambda),
                "abs_multiset_prime": abs_multiset(&e.lambda_prime),
                "ext_dim": e.ext_dim,
                "exact_sequence": e.exact_sequence,
            }))
        }
    }
}

fn classify(n: usize, d: usize, w: &str, ktype: Option<&str>) -> Outcome {
    let lam = weight(w, Some(n))?;
    let sigma = match ktype {
        None => None,
        Some("distinguished") => Some(distinguished_ktype(&lam.ints_at(0)?)?),
        Some(s) => Some(KTypeSignature::parse(s)?),
    };
    let result = classify_module(n, d, &lam, sigma.as_ref())?;
    let mut out = serde_json::to_value(&result).expect("classification serializes");
    out["ktype"] = json!(sigma);
    Ok(out)
}

fn term_label(key: &TermKey, c: &Gaussian<Rational>) -> String {
    let zero = Rational::from_integer(0.into());
    let coeff = if c.im == zero {
        format_rational(&c.re)
    } else if c.re == zero {
        format!("{}i", format_rational(&c.im))
    } else {
        format!("({})", format_gaussian(c))
    };
    let mut parts = vec![coeff];
    if key.pi_exp != 0 {
        parts.push(format!("pi^{}", key.pi_exp));
    }
    match key.m {
        0 => {}
        1 => parts.push("q".into()),
        m => parts.push(format!("q^{m}")),
    }
    if key.r != 0 {
        parts.push(format!("(pi*y)^{}", -key.r));
    }
    parts.join("*")
}

fn series_json(f: &QSeries) -> Value {
    let mut terms: Vec<(&TermKey, &Gaussian<Rational>)> = f.terms().collect();
    terms.sort_by_key(|(k, _)| (k.m, Reverse(k.r), k.pi_exp));
    json!({
        "series": f,
        "expansion": terms.iter().map(|(k, c)| term_label(k, c)).collect::<Vec<_>>(),
    })
}

fn parse_series(s: &str) -> Result<QSeries, Error> {
    let bad = |why: &str| invalid(format!("series JSON: {why}"));
    let v: Value = serde_json::from_str(s).map_err(|e| bad(&e.to_string()))?;
    let precision = v["precision"].as_u64().ok_or_else(|| bad("missing precision"))? as u32;
    let terms = v["terms"].as_array().ok_or_else(|| bad("missing terms"))?;
    let mut out = Series::zero(precision);
    for t in terms {
        let int = |k: &str| t[k].as_i64().unwrap_or(0);
        let part = |k: &str| match &t[k] {
            Value::Null => Ok(Rational::from_integer(0.into())),
            Value::String(s) => parse_rational(s),
            Value::Number(n) => parse_rational(&n.to_string()),
            _ => Err(bad("coefficients are strings")),
        };
        let m = u32::try_from(t["m"].as_u64().ok_or_else(|| bad("term needs m"))?).map_err(|_| bad("m too large"))?;
        if m > precision {
            return Err(bad("term beyond precision"));
        }
        let key = TermKey::new(m, int("r") as i32, int("pi_exp") as i32);
        out.add_term(key, Gaussian::new(part("re")?, part("im")?));
    }
    Ok(out)
}

fn input_series(a: &SeriesArgs) -> Result<QSeries, Error> {
    match &a.series {
        Some(s) => parse_series(s),
        None => eisenstein_e2(a.prec),
    }
}

fn sl2(op: Sl2Op) -> Outcome {
    match op {
        Sl2Op::E2 { prec } => Ok(series_json(&eisenstein_e2(prec)?)),
        Sl2Op::Lower { input, times } => {
            let f = input_series(&input)?;
            let g = (0..times).fold(f, |g, _| lower_e(&g));
            let mut out = series_json(&g);
            out["is_zero"] = json!(g.is_zero());
            Ok(out)
        }
        Sl2Op::Raise { input, k } => {
            let g = raise_maass_shimura(&input_series(&input)?, k);
            let mut out = series_json(&g);
            out["weight"] = json!(k + 2);
            Ok(out)
        }
        Sl2Op::Holo { input } => {
            let f = input_series(&input)?;
            let mut out = series_json(&holomorphic_part(&f));
            out["degree"] = json!(nearly_holomorphic_degree(&f)?);
            Ok(out)
        }
        Sl2Op::Probe { input, k, depth } => {
            let f = input_series(&input)?;
            let table = module_probe(&f, k, depth)?;
            let slices: Vec<Value> = table.iter().map(|(w, d)| json!({"weight": w, "dim": d})).collect();
            Ok(json!({"weight": k, "depth": depth, "slices": slices}))
        }
    }
}
