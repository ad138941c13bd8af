//! Checking hand-written proofs, proof codes, and proof search.
use selfref::coding::godel_encode;
use selfref::kernel::{check_proof, decode_proof, encode_proof, parse_proof, search_proof};
use selfref::registry::eval_defined;
use selfref::syntax::parse_formula;

const ZERO_EQ_ZERO: &str = "\
# (0=0) by generalizing reflexivity and instantiating
1. (v0=v0) ; ax Refl [t:=v0]
2. ∀v0 (v0=v0) ; gen 1 v0
3. (∀v0 (v0=v0)→(0=0)) ; ax Inst [x:=v0] [A:=(v0=v0)] [t:=0]
4. (0=0) ; mp 2 3
";

fn main() {
    let proof = parse_proof(ZERO_EQ_ZERO).unwrap();
    println!("{proof}checked: {:?}", check_proof(&proof));
    let code = encode_proof(&proof);
    println!("proof code has {} digits", code.digits());
    assert_eq!(decode_proof(&code).unwrap(), proof);

    let bad = parse_proof(&ZERO_EQ_ZERO.replace("mp 2 3", "mp 1 3")).unwrap();
    println!("tampered: {}", check_proof(&bad).unwrap_err());

    for goal in ["(0=0)", "((0+0)=0)", "((0=0)∧(0=0))", "¬(0=0)"] {
        match search_proof(&parse_formula(goal).unwrap(), 10_000) {
            Some(p) => println!("found {goal}:\n{p}"),
            None => println!("no proof of {goal} within budget"),
        }
    }
    let c = godel_encode(&parse_formula("(0=0)").unwrap()).into_inner();
    println!(
        "Prov(⌜(0=0)⌝) = {:?}",
        eval_defined("Prov", &[c], 100).unwrap()
    );
}
