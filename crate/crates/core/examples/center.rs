//! The center of a crossed module, compared with the kernel of the
//! canonical morphism into the actor.
//!
//!     cargo run --example center

use leibniz_xmod::bider::canonical_morphism;
use leibniz_xmod::{catalog, Rational};

fn main() -> leibniz_xmod::Result<()> {
    for id in catalog::ids_of_kind("crossed-module") {
        let x = catalog::crossed_module::<Rational>(id)?;
        let c = x.center()?;
        let k = canonical_morphism(&x)?.kernel()?;
        let same = k.top == c.center.top && k.base == c.center.base;
        print!(
            "{id:16} center {:?}  kernel {:?}  equal: {same}",
            c.center.xmod.dims(),
            k.xmod.dims()
        );
        match c.warning {
            Some(_) => println!("  (no condition holds)"),
            None => println!(),
        }
    }
    Ok(())
}
