//! Least number principle instances and their evaluation.
use selfref::eval::eval_sentence;
use selfref::gallery::{lnp_instance, X};
use selfref::syntax::parse_formula;

fn main() {
    for text in ["(v0=S0)", "(SS0<v0)", "(v0<v0)"] {
        let p = parse_formula(text).unwrap();
        let inst = lnp_instance(&p, X).unwrap();
        let r = eval_sentence(&inst, 20).unwrap();
        println!("{inst}\n  = {}", r.value);
    }
    println!(
        "{}",
        lnp_instance(&parse_formula("(0=0)").unwrap(), X).unwrap_err()
    );
}
