//! Runs every check on a batch of random discs and the tiling patches, printing one line each.
//!
//! `cargo run --release --example survey -- [seeds] [cells]`

use std::time::Instant;

use tpkit::generators::*;
use tpkit::io::{check, CheckOptions, Complex};

fn main() {
    let mut args = std::env::args().skip(1);
    let seeds: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(100);
    let cells: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(60);

    let start = Instant::now();
    let (mut triangles, mut pentagons, mut failures) = (0, 0, 0);
    for seed in 1..=seeds {
        let x = gen_random_cat0_disc(&GeneratorSpec::random(seed, cells, Bias::HALF)).expect("generation");
        triangles += x.triangles().len();
        pentagons += x.pentagons().len();
        if !check(&Complex::Tp(x), &CheckOptions::all()).expect("flag").verdict.is_pass() {
            failures += 1;
            println!("seed {seed}: FAIL");
        }
    }
    println!("{seeds} random discs: {triangles} triangles, {pentagons} pentagons, {failures} failing, {:.2?}", start.elapsed());

    let patches = (1..=3)
        .map(|r| (format!("pentagon tiling r{r}"), gen_pentagon_tiling(r)))
        .chain((1..=4).map(|r| (format!("triangle tiling r{r}"), gen_triangle_tiling(r))));
    for (name, x) in patches {
        let x = x.expect("tiling");
        let t = Instant::now();
        let n = x.vertex_count();
        let verdict = check(&Complex::Tp(x), &CheckOptions::all()).expect("flag").verdict;
        println!("{name}: {n} vertices, {verdict:?}, {:.2?}", t.elapsed());
    }
}
