//! Neg and Subs computed on codes agree with the syntax they describe.
use selfref::coding::{godel_encode, meta_neg, meta_subs, num_code};
use selfref::syntax::{parse_formula, Formula, Term, Var};

fn main() {
    let f = parse_formula("(0=0)").unwrap();
    let c = godel_encode(&f);
    let neg = meta_neg(&c).unwrap();
    println!("Neg({c}) = {neg}");
    assert_eq!(neg, godel_encode(&Formula::not(f)));

    let g = parse_formula("(∃v1<v0)(v1=S0)").unwrap();
    let three = Term::num(3);
    let subs = meta_subs(
        &godel_encode(&g),
        &godel_encode(&Var(0)),
        &num_code(&3u32.into()),
    )
    .unwrap();
    let direct = godel_encode(&g.substitute(Var(0), &three).unwrap());
    println!("Subs(⌜{g}⌝, ⌜v0⌝, Num(3)) = {subs}");
    println!("⌜{}⌝ = {direct}", g.substitute(Var(0), &three).unwrap());
    assert_eq!(subs, direct);
}
