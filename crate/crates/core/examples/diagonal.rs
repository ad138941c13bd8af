//! The diagonal construction and its fixed-point check.
use selfref::diagonal::{diagonalize, verify_fixed_point};
use selfref::syntax::{parse_formula, Var};

fn main() {
    for text in ["(v1=v1)", "¬Prov(v1)", "(∃v2<v0)(v1=v2)", "(v0<S0)"] {
        let phi = parse_formula(text).unwrap();
        let r = diagonalize(&phi, Var(0), Var(1)).unwrap();
        println!("φ = {phi}");
        println!("  θ       = {}", r.theta);
        println!("  ⌜ψ⌝     = {} digits", r.self_code.digits());
        println!("  ψ       = {} symbols", r.psi.symbol_count());
        println!("  fixed   = {}", verify_fixed_point(&r));

        let mut tampered = r.clone();
        tampered.psi = selfref::syntax::Formula::not(tampered.psi);
        println!(
            "  tampered ψ still fixed? {}",
            verify_fixed_point(&tampered)
        );
    }
}
