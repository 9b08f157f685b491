// Relative error of the Gaussian approximations as n grows.

use balanced_codes::asymptotics::ln_approx_count;
use balanced_codes::counting::{count, ln_count};
use balanced_codes::BalanceKind;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = 5;
    println!("q = {q}");
    for kind in BalanceKind::ALL {
        let errors: Vec<String> = [40usize, 80, 160, 320]
            .iter()
            .map(|&n| -> Result<String, balanced_codes::Error> {
                let ratio = (ln_approx_count(kind, n, q)? - ln_count(&count(kind, n, q))).exp();
                Ok(format!("{:>9.2e}", ratio - 1.0))
            })
            .collect::<Result<_, _>>()?;
        println!("{kind:<4} {}", errors.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
