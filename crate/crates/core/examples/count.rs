//! Counts isomorphism classes of graphs on n vertices.
//!
//! cargo run --release --example count -- 9 [--connected] [--threads 4]

use std::time::Instant;

use gel_core::enumerate::count_graphs;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = match args.first().and_then(|a| a.parse().ok()) {
        Some(n) => n,
        None => {
            eprintln!("usage: count N [--connected] [--threads T]");
            std::process::exit(64);
        }
    };
    let connected = args.iter().any(|a| a == "--connected");
    let threads = args
        .iter()
        .position(|a| a == "--threads")
        .and_then(|i| args.get(i + 1))
        .and_then(|t| t.parse().ok())
        .unwrap_or(1);
    let started = Instant::now();
    match count_graphs(n, connected, threads) {
        Ok(count) => println!("n={n} connected={connected} count={count} in {:.2?}", started.elapsed()),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
