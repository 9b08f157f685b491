// Exact numbers of balanced words, checked against enumeration.

use balanced_codes::counting::{brute_force_count, count, joint_census};
use balanced_codes::BalanceKind;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>2} {:>2}  {:>8} {:>8} {:>8} {:>8}", "q", "n", "SB", "CB", "PB", "CPB");
    for (q, n) in [(3, 6), (4, 6), (5, 5), (6, 6)] {
        let counts: Vec<String> = BalanceKind::ALL.iter().map(|&k| count(k, n, q).to_string()).collect();
        println!("{q:>2} {n:>2}  {:>8} {:>8} {:>8} {:>8}", counts[0], counts[1], counts[2], counts[3]);
        for kind in BalanceKind::ALL {
            assert_eq!(count(kind, n, q), brute_force_count(kind, n, q)?);
        }
    }

    let census = joint_census(10, 4)?;
    println!("CPB(10, 4) from the joint census: {}", census.get(0, 0));
    println!("CPB(10, 4) closed form:           {}", count(BalanceKind::Cpb, 10, 4));
    println!("SB(300, 6) = {}", count(BalanceKind::Sb, 300, 6));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
