//! Three-valued evaluation with a witness budget.
use selfref::eval::{eval_formula, eval_sentence, Assignment};
use selfref::registry::Defined;
use selfref::syntax::{parse_formula, Formula, Term, Var};

fn main() {
    for (text, budget) in [
        ("∃v0 (v0=S0)", 10),
        ("∃v0 ((v0×v0)=SSSSSSSSS0)", 2),
        ("∃v0 ((v0×v0)=SSSSSSSSS0)", 10),
        ("∃v0 ¬(v0=v0)", 100),
        ("∀v0 (v0<SSS0)", 100),
        ("(∀v0<SSSS0)(∃v1<SSSSS0)(v0<v1)", 0),
    ] {
        let r = eval_sentence(&parse_formula(text).unwrap(), budget).unwrap();
        let w = r
            .witness
            .map(|w| format!(" witness {w}"))
            .unwrap_or_default();
        println!(
            "{text:<36} budget {budget:>3}: {}{w} ({} steps)",
            r.value, r.steps
        );
    }
    let het = Formula::pred(Defined::HetSeq, vec![Term::num(4969)]);
    println!(
        "HetSeq(seq [3, 5])                  : {}",
        eval_sentence(&het, 0).unwrap().value
    );
    let prov = Formula::pred(Defined::Prov, vec![Term::num(269296929279)]);
    println!(
        "Prov(⌜(0=0)⌝)                       : {}",
        eval_sentence(&prov, 100).unwrap().value
    );
    let f = parse_formula("(v0<v1)").unwrap();
    let a = Assignment::from([(Var(0), 2u32.into()), (Var(1), 7u32.into())]);
    println!(
        "{f} with v0=2, v1=7: {}",
        eval_formula(&f, &a, 0).unwrap().value
    );
}
