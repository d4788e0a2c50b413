//! Run a small benchmark in-process and print the CSV the `bench` subcommand writes.

use std::path::Path;
use std::time::Duration;

use treedepth::cli::bench::{check_consistency, parse_labels, parse_manifest, run_bench, write_csv};

fn main() -> treedepth::Result<()> {
    let base = Path::new(env!("CARGO_MANIFEST_DIR")).join("instances");
    let manifest = "gen:cycle:20 6\ngen:square_grid:4 7\nfamous/petersen.gr 6\n";
    let instances = parse_manifest(manifest, &base)?;
    let configs = parse_labels("All,-LB,-Sym,-Dom")?;
    let mut rows = run_bench(&instances, &configs, Duration::from_secs(10), 1);
    let flagged = check_consistency(&instances, &mut rows);
    write_csv(&rows, &mut std::io::stdout())?;
    eprintln!("{flagged} row(s) disagree");
    Ok(())
}
