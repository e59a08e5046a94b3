//! Semidirect product of crossed modules and its split extension.
//!
//!     cargo run --example semidirect_xmod

use leibniz_xmod::{catalog, Rational, XModActionData};

fn main() -> leibniz_xmod::Result<()> {
    let d = catalog::action::<Rational>("sl2-selfaction")?;
    let s = d.semidirect_xmod()?;
    println!("semidirect product dims {:?}", s.xmod.dims());
    println!("it is a crossed module: {}", s.xmod.validate().ok());
    let split = s.check_split();
    println!("inclusion, projection and section split: {}", split.ok());

    // Trivial data gives the direct product.
    let x = catalog::crossed_module::<Rational>("A2-id")?;
    let y = catalog::crossed_module::<Rational>("q-q-id-L2")?;
    let z = XModActionData::zero(&x, &y).semidirect_xmod()?;
    println!(
        "zero action gives the direct product: {}",
        z.xmod == y.direct_product(&x)
    );
    Ok(())
}
