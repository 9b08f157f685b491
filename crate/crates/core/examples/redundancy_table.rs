// Exact and approximate CPB redundancy for q = 4.

use balanced_codes::cli::table1_rows;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>6}  {:>8}  {:>8}", "n", "exact", "approx");
    for (n, exact, approx) in table1_rows()? {
        println!("{n:>6}  {exact:>8.4}  {approx:>8.4}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
