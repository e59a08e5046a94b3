//! The same computations over the rationals and over F2 and F3. Dimensions
//! can jump in small characteristic.
//!
//!     cargo run --example finite_fields

use leibniz_xmod::bider::{actor, bider_algebra};
use leibniz_xmod::{catalog, Field, Rational, F2, F3};

fn row<F: Field>(label: &str) -> leibniz_xmod::Result<()> {
    let sl2 = catalog::algebra::<F>("sl2")?;
    let l2 = catalog::algebra::<F>("L2")?;
    let x = catalog::crossed_module::<F>("sl2-id")?;
    println!(
        "{label:3} Ann(sl2) {}  [sl2,sl2] {}  Bider(sl2) {}  Bider(L2) {}  actor(sl2-id) {:?}",
        sl2.annihilator().dim(),
        sl2.commutator().dim(),
        bider_algebra(&sl2)?.dim(),
        bider_algebra(&l2)?.dim(),
        actor(&x)?.xmod.dims(),
    );
    Ok(())
}

fn main() -> leibniz_xmod::Result<()> {
    row::<Rational>("Q")?;
    row::<F2>("F2")?;
    row::<F3>("F3")?;
    Ok(())
}
