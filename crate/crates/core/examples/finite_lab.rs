//! Model counts for the finite paradoxes.
use selfref::finite_lab::{ModelReport, ParadoxKind};

fn main() {
    for kind in ParadoxKind::ALL {
        let counts: Vec<String> = (1..=10)
            .map(|n| ModelReport::new(kind, n).unwrap().models.len().to_string())
            .collect();
        println!("{kind:<18} n=1..10 models: {}", counts.join(" "));
    }
    print!(
        "{}",
        ModelReport::new(ParadoxKind::AtLeastK, 6)
            .unwrap()
            .render(true)
    );
    print!(
        "{}",
        ModelReport::new(ParadoxKind::SomeoneElseWrong, 3)
            .unwrap()
            .render(true)
    );
}
