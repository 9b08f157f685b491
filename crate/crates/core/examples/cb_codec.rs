// Charge balancing with balancing sequences.

use balanced_codes::codecs::balancing_sequence;
use balanced_codes::{Codec, Construction, Injection};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let codec = Codec::new(Construction::Cb, 5, 7)?;
    let data = [4, 4, -2, 0, 0, 0, 0];
    println!("b_32 = {:?}", balancing_sequence(32, 7, 5)?);

    for z in ["z=32", "z=7"] {
        let e = codec.encode_with(&data, &z.parse::<Injection>()?)?;
        println!("{z:<5} {}", e.codeword);
        assert_eq!(codec.decode(&e.codeword)?, data);
    }
    let e = codec.encode(&data)?;
    println!("canonical {:?}", e.side_info);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
