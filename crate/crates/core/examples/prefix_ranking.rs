// Enumerative ranking of balanced words, used for prefixes.

use balanced_codes::prefix::{plan, rank, unrank};
use balanced_codes::{BalanceKind, BigCount, Construction};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for i in 0..6u32 {
        let w = unrank(&BigCount::from(i), 4, BalanceKind::Cb, 2)?;
        println!("{i} -> {w:?}");
        assert_eq!(rank(&w, BalanceKind::Cb, 2)?, BigCount::from(i));
    }

    for c in [Construction::Pb, Construction::Cb, Construction::Cpb, Construction::Sb] {
        let p = plan(c, 5, 1000)?;
        println!("{c:<4} k = 1000, q = 5: P = {}, log_q P = {:.3}, p = {}", p.space, p.unbalanced_length, p.length);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
