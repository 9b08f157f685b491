// Symbol balancing in q - 1 rounds.

use balanced_codes::alphabet::is_sb;
use balanced_codes::{Codec, Construction, Injection};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let codec = Codec::new(Construction::Sb, 3, 6)?;
    let data = [0, -2, -2, -2, 0, -2];

    let replay = codec.encode_with(&data, &"i1=3,i2=3".parse::<Injection>()?)?;
    println!("i1 = i2 = 3: {}", replay.codeword);
    assert_eq!(replay.codeword.payload, vec![0, 2, 2, -2, 0, -2]);

    let e = codec.encode(&data)?;
    println!("canonical:   {}  {:?}", e.codeword, e.side_info);
    assert!(is_sb(&e.codeword.payload, 3));
    assert_eq!(codec.decode(&e.codeword)?, data);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
