//! Minimal proof sizes of the bench families with and without cut.
//! `cargo run --release --example bench_sizes -- iterdef 1,2,3`

use hocut::bench::{render, run, Family};
use hocut::calculus::Calculus;

fn main() {
    let mut args = std::env::args().skip(1);
    let family: Family = args.next().as_deref().unwrap_or("iterdef").parse().unwrap();
    let sizes: Vec<usize> = match args.next() {
        Some(s) => s.split(',').map(|n| n.parse().unwrap()).collect(),
        None => vec![1, 2],
    };
    for calc in [Calculus::Gb, Calculus::GbCut] {
        print!("{}", render(family, &calc, &run(family, &sizes, &calc, 60)));
    }
}
