//! Regenerates `data/graph8c.g6` and `data/sr25.g6`.
//!
//! ```text
//! igel-datagen graph8c data/graph8c.g6
//! igel-datagen sr25 data/sr25.g6 [max-search-attempts]
//! ```

mod canon;
mod enumerate;
mod search;
mod srg;

use std::process::ExitCode;
use std::time::Instant;

fn usage() -> ExitCode {
    eprintln!("usage: igel-datagen (graph8c | sr25) <out.g6> [max-search-attempts]");
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (Some(which), Some(out)) = (args.first(), args.get(1)) else {
        return usage();
    };
    let start = Instant::now();
    let graphs = match which.as_str() {
        "graph8c" => enumerate::connected_graphs(8),
        "sr25" => {
            let max_runs: u64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(200);
            let mut cat = srg::Catalog::new();
            cat.insert(&srg::paley25());
            for g in srg::latin_square_graphs() {
                cat.insert(&g);
            }
            eprintln!("seeds: {} classes", cat.classes.len());
            cat.close();
            eprintln!(
                "after switching closure: {} classes ({} on 26 points)",
                cat.classes.len(),
                cat.wider_len()
            );
            let params = search::Params {
                n: srg::N,
                k: srg::K,
                lambda: srg::LAMBDA,
                mu: srg::MU,
            };
            let mut solved = 0;
            for seed in 1..=max_runs {
                if cat.classes.len() == 15 {
                    break;
                }
                if let Some(rows) = search::attempt(&params, seed, 2_000_000) {
                    solved += 1;
                    if cat.insert(&canon::graph_of(&rows)) {
                        cat.close();
                        eprintln!(
                            "attempt {seed}: new class, catalog now {} ({solved} solutions)",
                            cat.classes.len()
                        );
                    }
                }
            }
            eprintln!("{solved} search solutions");
            cat.graphs()
        }
        _ => return usage(),
    };
    let text = igel::io::write_graph6_collection(&graphs);
    if let Err(e) = std::fs::write(out, text) {
        eprintln!("cannot write {out}: {e}");
        return ExitCode::from(2);
    }
    eprintln!(
        "wrote {} graphs to {out} in {:.1}s",
        graphs.len(),
        start.elapsed().as_secs_f64()
    );
    ExitCode::SUCCESS
}
