//! Reading and writing documents.
//!
//!     cargo run --example json_io

use leibniz_xmod::bider::{bider_qn, BiderPair};
use leibniz_xmod::io::{bider_from_json, bider_to_json, Codec};
use leibniz_xmod::{catalog, CrossedModule, LeibnizAlgebra, Rational};
use serde_json::json;

type Q = Rational;

fn main() -> leibniz_xmod::Result<()> {
    // Sparse structure constants: [i, j, [[k, coefficient], ...]].
    let doc = json!({"dim": 2, "brackets": [[0, 0, [[1, "1"]]]]});
    let l2 = LeibnizAlgebra::<Q>::from_json(&doc)?;
    println!("read an algebra of dimension {}", l2.dim());

    let x = catalog::crossed_module::<Q>("n-in-L2")?;
    let text = serde_json::to_string_pretty(&x.to_json()).unwrap();
    println!("{text}");
    let back = CrossedModule::<Q>::from_json(&serde_json::from_str(&text).unwrap())?;
    println!("crossed module survives a round trip: {}", back == x);

    let pairs = bider_qn(&x)?;
    let stored = bider_to_json(&pairs, &x.to_json());
    println!("stored with input digest {}", stored["input_digest"]);
    let again = bider_from_json::<Q, BiderPair<Q>>(&stored)?;
    println!("biderivations survive a round trip: {}", again == pairs);
    Ok(())
}
