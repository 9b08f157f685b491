// Charge and polarity balancing for q >= 4.

use balanced_codes::alphabet::is_cpb;
use balanced_codes::{Codec, Construction};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let codec = Codec::new(Construction::Cpb, 5, 7)?;
    println!("prefix length {} for {} side-info values", codec.plan().length, codec.plan().space);
    let data = [4, 4, -2, 0, 0, 0, 0];
    let e = codec.encode(&data)?;
    println!("{}  {:?}", e.codeword, e.side_info);
    assert_eq!(e.codeword.payload, vec![2, 2, 0, -4, -2, -2, 4]);
    assert!(is_cpb(&e.codeword.concatenated()));
    assert_eq!(codec.decode(&e.codeword)?, data);

    let six = Codec::new(Construction::Cpb, 6, 10)?;
    let e = six.encode(&[5, 5, 5, 5, 3, 1, -1, 5, 5, 5])?;
    println!("{}", e.codeword);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
