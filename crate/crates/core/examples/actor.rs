//! The actor of a crossed module and the canonical morphism into it.
//!
//!     cargo run --example actor

use leibniz_xmod::bider::actor;
use leibniz_xmod::{catalog, Rational};

fn main() -> leibniz_xmod::Result<()> {
    for id in ["zero-L2", "q-q-id-L2", "n-in-L2", "sl2-id"] {
        let x = catalog::crossed_module::<Rational>(id)?;
        let a = actor(&x)?;
        let f = a.canonical_morphism()?;
        let (inner, outer) = (a.inner()?, a.outer()?);
        println!("{id}: dims {:?}", x.dims());
        println!("  pairs {}, quadruples {}", a.pairs.dim(), a.quads.dim());
        println!("  actor is a crossed module: {}", a.xmod.validate().ok());
        println!("  canonical morphism is valid: {}", f.validate().ok());
        println!(
            "  inner {:?}, outer {:?}",
            inner.xmod.dims(),
            outer.xmod.dims()
        );
        println!("  delta has rank {}", a.delta().rank());
        println!("  conditions {:?}", a.flags);
    }
    Ok(())
}
