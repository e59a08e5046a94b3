//! Lifting a short exact sequence of crossed modules into the actor of its
//! left term.
//!
//!     cargo run --example lift

use leibniz_xmod::bider::lift_sequence;
use leibniz_xmod::{catalog, Rational};

fn main() -> leibniz_xmod::Result<()> {
    let seq = catalog::sequence::<Rational>("sl2-split")?;
    let m = seq.middle();
    println!("middle term dims {:?}", m.dims());
    let lift = lift_sequence(&seq)?;
    println!(
        "alpha-beta into the actor: {:?} -> {:?}",
        lift.alpha_beta.source.dims(),
        lift.alpha_beta.target.dims()
    );
    println!(
        "gamma into the outer part: {:?} -> {:?}",
        lift.gamma.source.dims(),
        lift.gamma.target.dims()
    );
    if lift.report.ok() {
        println!("both squares commute");
    } else {
        println!("{}", lift.report);
    }
    Ok(())
}
