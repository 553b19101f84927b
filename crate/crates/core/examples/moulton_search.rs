use numplane::counterexamples::search_moulton_desargues;

fn main() {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2024);
    match search_moulton_desargues(seed, 100_000) {
        Some((i, d, cfg)) => {
            println!("seed {seed} attempt {i}");
            println!("tri {:?}", d.tri.iter().map(|p| p.to_string()).collect::<Vec<_>>());
            println!("p1 {} r {}", d.p1, d.r);
            println!("tri2 {:?}", cfg.tri2.iter().map(|p| p.to_string()).collect::<Vec<_>>());
        }
        None => println!("no hit"),
    }
}
