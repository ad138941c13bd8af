//! Parsing, printing, substitution and classification.
use selfref::syntax::{classify, parse_formula, parse_term, Term, Var};

fn main() {
    let inputs = [
        "forall v0 (v0 = v0)",
        "(∀v1<SS0)((v1 + 0) = v1)",
        "exists v0 ((v0 <= v1) and not (v0 = S0))",
        "∃v2 Prov(Neg(Subs(v1,v0,Num(v2))))",
    ];
    for text in inputs {
        let f = parse_formula(text).unwrap();
        println!("{text}\n  printed:  {f}\n  class:    {}", classify(&f));
        println!(
            "  free:     {:?}",
            f.free_vars().iter().map(Var::to_string).collect::<Vec<_>>()
        );
    }

    let f = parse_formula("∀v1 (v0<v1)").unwrap();
    let t = parse_term("SS0").unwrap();
    println!("{f} [v0 := {t}] = {}", f.substitute(Var(0), &t).unwrap());
    match f.substitute(Var(0), &Term::var(1)) {
        Ok(g) => println!("unexpected: {g}"),
        Err(e) => println!("{f} [v0 := v1] rejected: {e}"),
    }
    println!("numeral 100 = {}", Term::num(100));
    println!("{:?}", parse_formula("(0=").unwrap_err());
}
