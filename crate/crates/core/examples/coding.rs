//! Sequence codes and Gödel numbers.
use selfref::coding::{
    godel_decode, godel_encode, num_code, seq_at, seq_decode, seq_encode, seq_len,
};
use selfref::syntax::parse_formula;

fn main() {
    let c = seq_encode([3u32, 5]);
    println!("seq [3, 5]      = {c}");
    println!("decoded         = {:?}", seq_decode(&c).unwrap());
    println!("length          = {}", seq_len(&c).unwrap());
    println!("element 1       = {}", seq_at(&c, &1u32.into()).unwrap());
    println!("seq [8]         = {}", seq_encode([8u32]));
    println!("seq []          = {}", seq_encode(Vec::<u32>::new()));

    let f = parse_formula("(0=0)").unwrap();
    let code = godel_encode(&f);
    println!("⌜(0=0)⌝         = {code}");
    println!("decoded back    = {}", godel_decode(&code).unwrap());
    for n in [0u32, 1, 2, 8, 100] {
        println!("Num({n:>3})        = {}", num_code(&n.into()));
    }
}
