// Knuth's binary construction.

use balanced_codes::{Codec, Construction, Injection};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let codec = Codec::new(Construction::Knuth, 2, 6)?;
    println!("prefix length {} for {} side-info values", codec.plan().length, codec.plan().space);

    let data = [1, -1, 1, 1, 1, 1];
    let replay = codec.encode_with(&data, &"z=4".parse::<Injection>()?)?;
    println!("z = 4: {}", replay.codeword);
    assert_eq!(replay.codeword.payload, vec![-1, 1, -1, -1, 1, 1]);

    let canonical = codec.encode(&data)?;
    println!("canonical: {}  {:?}", canonical.codeword, canonical.side_info);
    assert_eq!(codec.decode(&canonical.codeword)?, data);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
