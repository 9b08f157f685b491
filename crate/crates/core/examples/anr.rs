// Asymptotic normalized redundancy, and its agreement with the slope of the
// closed-form redundancy in log_q n.

use balanced_codes::asymptotics::{anr, approx_redundancy};
use balanced_codes::BalanceKind;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>2}  {:>5} {:>5} {:>5} {:>5}", "q", "SB", "CB", "PB", "CPB");
    for q in 2..=7u32 {
        let row: Vec<String> = BalanceKind::ALL.iter().map(|&k| anr(k, q).to_string()).collect();
        println!("{q:>2}  {:>5} {:>5} {:>5} {:>5}", row[0], row[1], row[2], row[3]);
    }

    let (q, kind) = (6, BalanceKind::Cpb);
    let (n1, n2) = (1_000, 1_000_000);
    let log_q = |n: usize| (n as f64).ln() / (q as f64).ln();
    let slope = (approx_redundancy(kind, n2, q)? - approx_redundancy(kind, n1, q)?) / (log_q(n2) - log_q(n1));
    println!("CPB, q = 6: slope {slope:.12}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
