// The symbol alphabet and the four balance properties.

use balanced_codes::alphabet::{charge_sum, polarity_sum};
use balanced_codes::{is_balanced, Alphabet, BalanceKind, Word};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a5 = Alphabet::new(5)?;
    println!("A_5 = {:?}", a5.symbols());

    let words = ["+4,+4,0,-2,-2,-2,+2", "+2,+2,0,-4,-2,-2,+4", "-4,-2,0,+2,+4"];
    for text in words {
        let w: Word = text.parse()?;
        let props: Vec<String> = BalanceKind::ALL
            .iter()
            .filter(|&&k| is_balanced(k, &w, 5))
            .map(|k| k.to_string())
            .collect();
        println!(
            "{w:<22} sum {:>3}  polarity {:>2}  balanced: {}",
            charge_sum(&w),
            polarity_sum(&w),
            props.join(" ")
        );
    }

    let zq = a5.word_to_zq(&"+4,-4,0".parse::<Word>()?)?;
    println!("(+4,-4,0) over Z_5 = {zq:?}");
    assert_eq!(a5.word_from_zq(&zq)?, vec![4, -4, 0]);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
