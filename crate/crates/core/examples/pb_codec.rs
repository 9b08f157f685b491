// Polarity balancing with an alphabet offset for odd q.

use balanced_codes::{Codec, Construction};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let codec = Codec::new(Construction::Pb, 5, 7)?;
    let data = [4, 4, -2, 0, 0, 0, 0];
    let e = codec.encode(&data)?;
    println!("{}  {:?}", e.codeword, e.side_info);
    assert_eq!(e.codeword.payload, vec![4, 4, 0, -2, -2, -2, 2]);
    assert_eq!(codec.decode(&e.codeword)?, data);

    let even = Codec::new(Construction::Pb, 4, 8)?;
    let e = even.encode(&[3, 3, 3, 1, 1, 3, 3, 1])?;
    println!("{}  {:?}", e.codeword, e.side_info);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
