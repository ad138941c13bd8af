//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use num_bigint::BigUint;
use rand::Rng;
use selfref::coding::{
    decode_formula, godel_decode, godel_encode, meta_neg, meta_subs, num_code, seq_decode,
    seq_encode, Coded, GodelCode,
};
use selfref::diagonal::{diagonalize, verify_fixed_point};
use selfref::eval::{eval_formula, eval_sentence, Assignment, Truth};
use selfref::finite_lab::{consistent_assignments, ParadoxKind};
use selfref::gallery::Family;
use selfref::kernel::{check_proof, search_proof, Binding, Bindings, Justification, Proof, Schema};
use selfref::registry::{apply, Defined, DefinedValue};
use selfref::syntax::{classify_delta0, classify_sigma1, parse_formula, Expr, Formula, Term, Var};

use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const DEFAULT_BUDGET: u64 = 10_000;

fn main() {
    let worker = std::thread::Builder::new()
        .stack_size(256 << 20)
        .spawn(run_all)
        .expect("spawn acceptance thread");
    if !worker.join().expect("acceptance thread") {
        std::process::exit(1);
    }
}

fn run_all() -> bool {
    let criteria: [Criterion; 9] = [
        ("coding round trips", coding_round_trips),
        ("arithmetized syntax fidelity", arithmetized_syntax),
        ("worked code values", worked_code_values),
        ("diagonal fixed points", diagonal_fixed_points),
        ("classifier properties", classifier_properties),
        ("evaluator oracle equivalence", evaluator_equivalence),
        ("proof kernel", proof_kernel),
        ("finite lab", finite_lab),
        ("cli end-to-end", cli_end_to_end),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut all = true;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| Err(format!("panicked: {}", panic_text(&e))));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                all = false;
                println!("FAIL {} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    let _ = panic::take_hook();
    all
}

fn panic_text(e: &Box<dyn std::any::Any + Send>) -> String {
    e.downcast_ref::<String>()
        .cloned()
        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_default()
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn truth(v: DefinedValue) -> Truth {
    match v {
        DefinedValue::Truth(t) => t,
        DefinedValue::Number(n) => panic!("expected a truth value, got {n}"),
    }
}

// 1 -----------------------------------------------------------------------

fn coding_round_trips() -> Outcome {
    let mut r = rng(1);
    for _ in 0..1000 {
        let seq = gen_seq(&mut r, 50, 1 << 20);
        let code = seq_encode(seq.iter().copied());
        ensure!(
            code.to_string() == oracle_seq_digits(&seq),
            "code of {seq:?} differs from the digit oracle"
        );
        let back: Vec<BigUint> = seq_decode(&code).map_err(|e| e.to_string())?;
        ensure!(
            back == seq.iter().map(|&n| big(n)).collect::<Vec<_>>(),
            "{seq:?} does not round-trip"
        );
    }
    for i in 0..500 {
        let depth = r.gen_range(1..=6);
        let e: Expr = if i % 3 == 0 {
            gen_term(&mut r, depth).into()
        } else {
            gen_formula(&mut r, depth).into()
        };
        let back = godel_decode(&godel_encode(&e)).map_err(|err| format!("{e}: {err}"))?;
        ensure!(back == e, "{e} decodes to {back}");
    }
    Ok("1000 sequences, 500 expressions".into())
}

// 2 -----------------------------------------------------------------------

fn arithmetized_syntax() -> Outcome {
    let mut r = rng(2);
    let mut cases = 0;
    let mut captured = 0;
    while cases < 500 {
        let depth = r.gen_range(1..=4);
        let phi = gen_formula(&mut r, depth);
        let free: Vec<Var> = phi.free_vars().into_iter().collect();
        let v = if !free.is_empty() && r.gen_bool(0.8) {
            free[r.gen_range(0..free.len())]
        } else {
            gen_var(&mut r)
        };
        let depth = r.gen_range(1..=3);
        let t = gen_term(&mut r, depth);
        let Ok(expected) = phi.substitute(v, &t) else {
            captured += 1;
            continue;
        };
        cases += 1;
        let (c, cv, ct) = (godel_encode(&phi), godel_encode(&v), godel_encode(&t));

        let subs = meta_subs(&c, &cv, &ct).map_err(|e| format!("Subs on {phi}: {e}"))?;
        ensure!(
            subs == godel_encode(&expected),
            "Subs code differs for {phi} [{t}/{v}]"
        );
        ensure!(
            decode_formula(&subs).ok() == Some(expected.clone()),
            "Subs decode for {phi}"
        );
        let via_registry = apply(Defined::Subs, &[c.0.clone(), cv.0.clone(), ct.0.clone()], 0)
            .map_err(|e| e.to_string())?;
        ensure!(
            via_registry == DefinedValue::Number(subs.0.clone()),
            "registry Subs for {phi}"
        );

        let neg = meta_neg(&c).map_err(|e| e.to_string())?;
        let negated = Formula::not(phi.clone());
        ensure!(neg == godel_encode(&negated), "Neg code differs for {phi}");
        ensure!(
            neg.to_string() == oracle_neg_digits(&c.to_string()),
            "Neg of {phi} is not the digit prefix"
        );
        ensure!(
            decode_formula(&neg).ok() == Some(negated),
            "Neg decode for {phi}"
        );
    }
    let swept = sweep_sequence_predicates()?;
    Ok(format!(
        "500 Neg/Subs cases ({captured} capturing draws skipped); {swept}"
    ))
}

fn evaluated(f: &Formula, values: &[(Var, &BigUint)]) -> Result<Truth, String> {
    let a: Assignment = values.iter().map(|(v, n)| (*v, (*n).clone())).collect();
    Ok(eval_formula(f, &a, 0).map_err(|e| e.to_string())?.value)
}

/// Every sequence of length at most 4 with elements below 50: the
/// expansions of `HetSeq` and `Ele`, read by the naive evaluator, agree with
/// the registry oracles and with the set-theoretic definitions. A slice of
/// the domain, picked by code value, also goes through the evaluator.
fn sweep_sequence_predicates() -> Result<String, String> {
    const ELEMS: u64 = 50;
    const MAX_LEN: u32 = 4;
    let het = Defined::HetSeq
        .expansion()
        .expect("HetSeq has an expansion");
    let ele = Defined::Ele.expansion().expect("Ele has an expansion");
    // each element's digits as a number, and the power of ten to shift by
    let pieces: Vec<(u64, u64)> = (0..ELEMS)
        .map(|e| {
            let d = oracle_element_digits(e);
            (d.parse().unwrap(), 10u64.pow(d.len() as u32))
        })
        .collect();

    // work items: every sequence of length <= 2, as a prefix of the rest
    let mut prefixes: Vec<Vec<u64>> = vec![vec![]];
    for a in 0..ELEMS {
        prefixes.push(vec![a]);
        for b in 0..ELEMS {
            prefixes.push(vec![a, b]);
        }
    }
    let next = AtomicUsize::new(0);
    let failed = AtomicBool::new(false);
    let (seqs, pairs) = (AtomicU64::new(0), AtomicU64::new(0));
    let by_evaluator = AtomicU64::new(0);
    let first_failure = std::sync::Mutex::new(None::<String>);
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());

    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| {
                let mut naive = Naive::default();
                let xs: Vec<BigUint> = (0..=ELEMS).map(big).collect();
                let mut ele_args = [BigUint::default(), BigUint::default()];
                let mut check = |seq: &[u64]| -> Result<(), String> {
                    let code = if seq.is_empty() {
                        0
                    } else {
                        seq.iter().fold(0u64, |acc, &e| {
                            acc * pieces[e as usize].1 + pieces[e as usize].0
                        })
                    };
                    let code_big = big(code);
                    let distinct = seq.iter().collect::<BTreeSet<_>>().len() == seq.len();

                    let oracle = truth(
                        apply(Defined::HetSeq, std::slice::from_ref(&code_big), 0)
                            .map_err(|e| e.to_string())?,
                    );
                    naive.set(Var(0), code);
                    let expanded = naive.holds(&het);
                    ensure!(
                        oracle == Truth::from(expanded) && expanded == distinct,
                        "HetSeq({seq:?}): oracle {oracle}, expansion {expanded}"
                    );

                    if code % 97 == 0 {
                        let value = evaluated(&het, &[(Var(0), &code_big)])?;
                        ensure!(
                            value == oracle,
                            "evaluator gives {value} for HetSeq({seq:?})"
                        );
                        by_evaluator.fetch_add(1, Ordering::Relaxed);
                    }

                    ele_args[1] = code_big;
                    naive.set(Var(1), code);
                    for x in 0..=ELEMS {
                        ele_args[0].clone_from(&xs[x as usize]);
                        let oracle =
                            truth(apply(Defined::Ele, &ele_args, 0).map_err(|e| e.to_string())?);
                        naive.set(Var(0), x);
                        let expanded = naive.holds(&ele);
                        ensure!(
                            oracle == Truth::from(expanded) && expanded == seq.contains(&x),
                            "Ele({x}, {seq:?}): oracle {oracle}, expansion {expanded}"
                        );
                        if (code + x) % 997 == 0 {
                            let value =
                                evaluated(&ele, &[(Var(0), &ele_args[0]), (Var(1), &ele_args[1])])?;
                            ensure!(
                                value == oracle,
                                "evaluator gives {value} for Ele({x}, {seq:?})"
                            );
                            by_evaluator.fetch_add(1, Ordering::Relaxed);
                        }
                    }
                    pairs.fetch_add(ELEMS + 1, Ordering::Relaxed);
                    seqs.fetch_add(1, Ordering::Relaxed);
                    Ok(())
                };
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= prefixes.len() || failed.load(Ordering::Relaxed) {
                        break;
                    }
                    let prefix = &prefixes[i];
                    let mut run = || -> Result<(), String> {
                        check(prefix)?;
                        if prefix.len() == 2 {
                            let mut seq = prefix.clone();
                            for c in 0..ELEMS {
                                seq.push(c);
                                check(&seq)?;
                                for d in 0..ELEMS {
                                    seq.push(d);
                                    check(&seq)?;
                                    seq.pop();
                                }
                                seq.pop();
                            }
                        }
                        Ok(())
                    };
                    if let Err(e) = run() {
                        failed.store(true, Ordering::Relaxed);
                        first_failure.lock().unwrap().get_or_insert(e);
                        break;
                    }
                }
            });
        }
    });
    if let Some(e) = first_failure.into_inner().unwrap() {
        return Err(e);
    }
    let expected: u64 = (0..=MAX_LEN).map(|k| ELEMS.pow(k)).sum();
    let seqs = seqs.into_inner();
    ensure!(
        seqs == expected,
        "swept {seqs} sequences, expected {expected}"
    );
    Ok(format!(
        "HetSeq on {seqs} sequences and Ele on {} pairs agree ({} also through the evaluator)",
        pairs.into_inner(),
        by_evaluator.into_inner()
    ))
}

// 3 -----------------------------------------------------------------------

fn worked_code_values() -> Outcome {
    // symbol codes: ( 13, 0 1, = 5, ) 14, S 2
    let cases: [(&str, String, GodelCode, &str); 4] = [
        (
            "⌜(0=0)⌝",
            oracle_seq_digits(&[13, 1, 5, 1, 14]),
            godel_encode(&parse_formula("(0=0)").unwrap()),
            "269296929279",
        ),
        (
            "Neg(⌜(0=0)⌝)",
            oracle_neg_digits(&oracle_seq_digits(&[13, 1, 5, 1, 14])),
            meta_neg(&GodelCode::from(269296929279u64)).map_err(|e| e.to_string())?,
            "79269296929279",
        ),
        (
            "Num(1)",
            oracle_seq_digits(&[2, 1]),
            num_code(&big(1)),
            "3929",
        ),
        (
            "seq(3,5)",
            oracle_seq_digits(&[3, 5]),
            seq_encode([3u32, 5]),
            "4969",
        ),
    ];
    for (what, oracle, computed, pinned) in &cases {
        ensure!(
            oracle == pinned,
            "{what}: digit oracle gives {oracle}, pinned {pinned}"
        );
        ensure!(
            computed.to_string() == *pinned,
            "{what}: computed {computed}, pinned {pinned}"
        );
    }
    let pairs = oracle_seq_split("4969").ok_or("4969 is not a code")?;
    ensure!(pairs == [3, 5], "4969 splits as {pairs:?}");
    Ok(cases
        .iter()
        .map(|c| format!("{}={}", c.0, c.3))
        .collect::<Vec<_>>()
        .join(", "))
}

// 4 -----------------------------------------------------------------------

fn diagonal_fixed_points() -> Outcome {
    let (x, y) = (Var(0), Var(1));
    for family in Family::ALL {
        let entry = family.build().map_err(|e| format!("{family}: {e}"))?;
        ensure!(entry.fixed_point_ok, "{family}: fixed point check failed");
        let d = &entry.diagonal;
        ensure!(verify_fixed_point(d), "{family}: verify_fixed_point false");
        ensure!(
            d.residual == godel_encode(&d.psi),
            "{family}: residual is not ⌜ψ⌝"
        );
        ensure!(
            d.strip(y) == family.template(),
            "{family}: ψ does not strip back to φ"
        );

        // mutation: ψ with its self-reference term replaced by y
        let mut bad = d.clone();
        bad.psi = d.strip(y);
        ensure!(
            !verify_fixed_point(&bad),
            "{family}: stripped ψ still verifies"
        );
        let mut tampered = entry.clone();
        tampered.psi = Formula::not(entry.psi.clone());
        tampered.recheck();
        ensure!(
            !tampered.fixed_point_ok,
            "{family}: negated ψ still verifies"
        );
    }
    let mut r = rng(4);
    for _ in 0..25 {
        let phi = gen_phi_xy(&mut r);
        let d = diagonalize(&phi, x, y).map_err(|e| format!("{phi}: {e}"))?;
        ensure!(verify_fixed_point(&d), "{phi}: fixed point check failed");
        ensure!(d.strip(y) == phi, "{phi}: ψ does not strip back to φ");
        ensure!(
            d.psi.free_vars().iter().all(|v| *v == x),
            "{phi}: ψ has free variables besides x"
        );
    }
    Ok("P, Q, R, F and 25 random φ verify; 8 mutations rejected".into())
}

// 5 -----------------------------------------------------------------------

fn classifier_properties() -> Outcome {
    let mut r = rng(5);
    for _ in 0..200 {
        let f = gen_sigma1(&mut r);
        ensure!(classify_sigma1(&f), "generated {f} is not Σ1");
        let g = Formula::exists(gen_var(&mut r), f.clone());
        ensure!(classify_sigma1(&g), "∃ over Σ1 {f} is not Σ1");
    }
    for _ in 0..200 {
        let f = gen_delta0_open(&mut r);
        ensure!(classify_delta0(&f), "generated {f} is not Δ0");
        ensure!(classify_sigma1(&f), "Δ0 {f} is not Σ1");
    }
    Ok("200 Σ1 closed under ∃, 200 Δ0 are Σ1".into())
}

// 6 -----------------------------------------------------------------------

fn evaluator_equivalence() -> Outcome {
    let mut r = rng(6);
    let mut trues = 0;
    for _ in 0..300 {
        let f = gen_delta0_sentence(&mut r);
        let got = eval_sentence(&f, 0).map_err(|e| format!("{f}: {e}"))?.value;
        let want = Naive::default().holds(&f);
        trues += usize::from(want);
        ensure!(
            got == Truth::from(want),
            "{f}: evaluator {got}, naive {want}"
        );
    }
    let budgets = [10, 100, 1000];
    let mut known = [0; 3];
    for _ in 0..100 {
        let v = Var(0);
        let body = gen_delta0(&mut r, 3, &mut vec![v]);
        let f = if r.gen_bool(0.5) {
            Formula::exists(v, body.clone())
        } else {
            Formula::forall(v, body.clone())
        };
        let mut previous: Option<Truth> = None;
        for (i, &b) in budgets.iter().enumerate() {
            let e = eval_sentence(&f, b).map_err(|e| format!("{f}: {e}"))?;
            if let Some(p) = previous.filter(|p| p.is_known()) {
                ensure!(
                    e.value == p,
                    "{f}: {p} at a smaller budget, {} at {b}",
                    e.value
                );
            }
            if let Some(w) = &e.witness {
                let mut naive = Naive::default();
                naive.set(v, w.try_into().map_err(|_| "huge witness")?);
                let holds = naive.holds(&body);
                ensure!(holds == (e.value == Truth::True), "{f}: bad witness {w}");
            }
            known[i] += usize::from(e.value.is_known());
            previous = Some(e.value);
        }
    }
    Ok(format!(
        "300 Δ0 sentences match ({trues} true); monotone on 100 formulas, known at budgets 10/100/1000: {}/{}/{}",
        known[0], known[1], known[2]
    ))
}

// 7 -----------------------------------------------------------------------

fn bind(pairs: &[(char, Binding)]) -> Bindings {
    pairs.iter().cloned().collect()
}

fn hand_proofs() -> Vec<(&'static str, Proof)> {
    let refl = |t: Term| bind(&[('t', Binding::Term(t))]);
    let x_eq_x = parse_formula("(v0=v0)").unwrap();
    let zero = parse_formula("(0=0)").unwrap();

    // ⊢ A → A from K and S
    let a = zero.clone();
    let aa = Formula::imp(a.clone(), a.clone());
    let k1 = Formula::imp(a.clone(), Formula::imp(aa.clone(), a.clone()));
    let s = Formula::imp(
        k1.clone(),
        Formula::imp(Formula::imp(a.clone(), aa.clone()), aa.clone()),
    );
    let k2 = Formula::imp(a.clone(), aa.clone());
    let fa = |f: &Formula| Binding::Formula(f.clone());
    let identity = Proof::default()
        .axiom(
            k1.clone(),
            Schema::K,
            bind(&[('A', fa(&a)), ('B', fa(&aa))]),
        )
        .axiom(
            s.clone(),
            Schema::S,
            bind(&[('A', fa(&a)), ('B', fa(&aa)), ('C', fa(&a))]),
        )
        .mp(Formula::imp(k2.clone(), aa.clone()), 0, 1)
        .axiom(k2, Schema::K, bind(&[('A', fa(&a)), ('B', fa(&a))]))
        .mp(aa, 3, 2);

    vec![
        (
            "x=x",
            Proof::default().axiom(x_eq_x.clone(), Schema::Refl, refl(Term::var(0))),
        ),
        (
            "(0=0)",
            Proof::default().axiom(zero, Schema::Refl, refl(Term::Zero)),
        ),
        ("A→A", identity),
        (
            "∀x x=x",
            Proof::default()
                .axiom(x_eq_x.clone(), Schema::Refl, refl(Term::var(0)))
                .gen(Formula::forall(Var(0), x_eq_x), 0, Var(0)),
        ),
    ]
}

/// Twenty corruptions of the hand proofs, each of which must be rejected.
fn mutations(proofs: &[(&'static str, Proof)]) -> Vec<(String, Proof)> {
    let mut out = Vec::new();
    let (_, x_eq_x) = &proofs[0];
    let (_, zero) = &proofs[1];
    let (_, identity) = &proofs[2];
    let (_, gen) = &proofs[3];
    let mut push = |what: String, base: &Proof, edit: &dyn Fn(&mut Proof)| {
        let mut p = base.clone();
        edit(&mut p);
        out.push((what, p));
    };
    for i in 0..identity.lines.len() {
        push(format!("negated line {}", i + 1), identity, &|p| {
            p.lines[i].formula = Formula::not(p.lines[i].formula.clone());
        });
    }
    for i in [2, 4] {
        push(
            format!("swapped premises on line {}", i + 1),
            identity,
            &|p| {
                if let Justification::ModusPonens { minor, major } = &mut p.lines[i].justification {
                    std::mem::swap(minor, major);
                }
            },
        );
        push(
            format!("self reference on line {}", i + 1),
            identity,
            &|p| {
                p.lines[i].justification = Justification::ModusPonens { minor: i, major: i };
            },
        );
    }
    for i in [0, 1, 3] {
        push(format!("rebound axiom on line {}", i + 1), identity, &|p| {
            if let Justification::Axiom { bindings, .. } = &mut p.lines[i].justification {
                bindings.insert('A', Binding::Formula(parse_formula("(0=S0)").unwrap()));
            }
        });
        push(format!("wrong schema on line {}", i + 1), identity, &|p| {
            if let Justification::Axiom { schema, .. } = &mut p.lines[i].justification {
                *schema = if *schema == Schema::K {
                    Schema::S
                } else {
                    Schema::K
                };
            }
        });
    }
    push("generalized over v1".into(), gen, &|p| {
        p.lines[1].justification = Justification::Generalization {
            premise: 0,
            var: Var(1),
        };
    });
    push("Refl claiming (v0=S0)".into(), x_eq_x, &|p| {
        p.lines[0].formula = parse_formula("(v0=Sv0)").unwrap();
    });
    push("Refl bound to v0 for (0=0)".into(), zero, &|p| {
        if let Justification::Axiom { bindings, .. } = &mut p.lines[0].justification {
            bindings.insert('t', Binding::Term(Term::var(0)));
        }
    });
    push("extra binding".into(), zero, &|p| {
        if let Justification::Axiom { bindings, .. } = &mut p.lines[0].justification {
            bindings.insert('s', Binding::Term(Term::Zero));
        }
    });
    push("empty proof".into(), &Proof::default(), &|_| {});
    out
}

fn proof_kernel() -> Outcome {
    let proofs = hand_proofs();
    for (name, p) in &proofs {
        check_proof(p).map_err(|e| format!("hand proof of {name} rejected: {e}"))?;
    }
    let bad = mutations(&proofs);
    ensure!(
        bad.len() == 20,
        "expected 20 mutations, built {}",
        bad.len()
    );
    for (what, p) in &bad {
        ensure!(check_proof(p).is_err(), "mutation accepted: {what}");
    }

    let goal = parse_formula("(0=0)").unwrap();
    let found = search_proof(&goal, DEFAULT_BUDGET).ok_or("search did not find (0=0)")?;
    check_proof(&found).map_err(|e| format!("found proof rejected: {e}"))?;
    ensure!(
        found.conclusion() == Some(&goal),
        "found proof concludes something else"
    );

    let code = godel_encode(&goal);
    let prov = truth(
        apply(Defined::Prov, std::slice::from_ref(&code.0), DEFAULT_BUDGET)
            .map_err(|e| e.to_string())?,
    );
    ensure!(prov == Truth::True, "Prov(⌜(0=0)⌝) is {prov}");
    let atom = Formula::pred(Defined::Prov, vec![Term::numeral(code.value())]);
    let via_eval = eval_formula(&atom, &Assignment::new(), DEFAULT_BUDGET)
        .map_err(|e| e.to_string())?
        .value;
    ensure!(
        via_eval == Truth::True,
        "evaluating Prov(⌜(0=0)⌝) gives {via_eval}"
    );
    let symbols = goal.symbols().len();
    Ok(format!(
        "4 hand proofs accepted, 20 mutations rejected, search proof of (0=0) in {} line(s), Prov(⌜(0=0)⌝) true ({symbols} symbols)",
        found.lines.len()
    ))
}

// 8 -----------------------------------------------------------------------

fn finite_lab() -> Outcome {
    for n in 1..=12usize {
        let count = |k| {
            consistent_assignments(k, n)
                .map(|m| m.len())
                .map_err(|e| e.to_string())
        };
        ensure!(
            count(ParadoxKind::SomeoneWrong)? == 0,
            "SomeoneWrong has models at n={n}"
        );
        let else_wrong =
            consistent_assignments(ParadoxKind::SomeoneElseWrong, n).map_err(|e| e.to_string())?;
        ensure!(
            else_wrong.len() == n,
            "SomeoneElseWrong has {} models at n={n}",
            else_wrong.len()
        );
        ensure!(
            else_wrong
                .iter()
                .all(|m| m.iter().filter(|b| !**b).count() == 1),
            "SomeoneElseWrong model without exactly one liar at n={n}"
        );
        let at_least =
            consistent_assignments(ParadoxKind::AtLeastK, n).map_err(|e| e.to_string())?;
        if n % 2 == 0 {
            let first_half: Vec<bool> = (0..n).map(|i| i < n / 2).collect();
            ensure!(
                at_least == [first_half],
                "AtLeastK at n={n} gives {at_least:?}"
            );
        } else {
            ensure!(at_least.is_empty(), "AtLeastK has models at odd n={n}");
        }
    }
    Ok("counts exact for n = 1..12".into())
}

// 9 -----------------------------------------------------------------------

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_selfref"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(
        out.status.success(),
        "{args:?} exited with {}: {}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn cli_end_to_end() -> Outcome {
    let encode = cli(&["encode", "(0=0)"])?;
    ensure!(encode == "269296929279\n", "encode printed {encode:?}");

    let gallery = cli(&["gallery", "build", "P"])?;
    let expected = Family::P
        .build()
        .map_err(|e| e.to_string())?
        .report()
        .to_string();
    ensure!(
        gallery == expected,
        "gallery build P differs from the library report"
    );
    ensure!(
        gallery.lines().any(|l| l == "fixedPointOk: true"),
        "gallery build P lacks fixedPointOk: true"
    );

    let lab = cli(&["finite-lab", "--kind", "3", "--n", "4", "--table"])?;
    let want = "kind: AtLeastK\nn: 4\nmodels: 1\nclassification: determinate\nT T F F\n";
    ensure!(lab == want, "finite-lab printed {lab:?}");
    Ok("encode, gallery build P and finite-lab outputs exact".into())
}
