//! The four self-referential families, summarized.
use selfref::gallery::Family;

fn main() {
    for fam in Family::ALL {
        println!("{fam} template: {}", fam.template());
        let e = fam.build().unwrap();
        let r = e.report();
        println!(
            "  ⌜ψ⌝ digits {}, symbols {}, fixedPointOk {}, classification {}",
            r.self_code_digits, r.symbol_count, r.fixed_point_ok, r.classification
        );
        println!(
            "  stripped ψ equals template: {}",
            e.diagonal.strip(selfref::gallery::Y) == fam.template()
        );
    }
}
