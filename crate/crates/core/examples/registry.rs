//! Defined symbols, their oracles and expansions.
use selfref::coding::seq_encode;
use selfref::registry::{eval_defined, expand_definition, Registry};
use selfref::syntax::parse_formula;

fn main() {
    print!("{}", Registry::standard().table());
    let s = seq_encode([3u32, 5]).into_inner();
    let t = seq_encode([3u32, 3]).into_inner();
    println!(
        "HetSeq([3,5]) = {:?}",
        eval_defined("HetSeq", std::slice::from_ref(&s), 0).unwrap()
    );
    println!(
        "HetSeq([3,3]) = {:?}",
        eval_defined("HetSeq", &[t], 0).unwrap()
    );
    println!(
        "Ele(5,[3,5])  = {:?}",
        eval_defined("Ele", &[5u32.into(), s.clone()], 0).unwrap()
    );
    println!(
        "l([3,5])      = {:?}",
        eval_defined("l", std::slice::from_ref(&s), 0).unwrap()
    );
    println!(
        "Dec([3,5],0)  = {:?}",
        eval_defined("Dec", &[s, 0u32.into()], 0).unwrap()
    );
    let f = parse_formula("(HetSeq(v3)∧Prov(v4))").unwrap();
    println!("{f}\n  expands to {}", expand_definition(&f).unwrap());
}
