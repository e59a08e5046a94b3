//! Actions of one crossed module on another, and their correspondence with
//! morphisms into the actor.
//!
//!     cargo run --example xmod_action

use leibniz_xmod::bider::actor;
use leibniz_xmod::{catalog, Error, Rational, XModActionData};

type Q = Rational;

fn main() -> leibniz_xmod::Result<()> {
    let x = catalog::crossed_module::<Q>("sl2-id")?;
    let data = XModActionData::conjugation(&x);
    println!("conjugation data valid: {}", data.validate().ok());

    let a = actor(&x)?;
    let f = data.morphism_from_action(&a)?;
    println!(
        "morphism equals the canonical one: {}",
        f == a.canonical_morphism()?
    );
    let back = XModActionData::action_from_morphism(&f, &a)?;
    println!("round trip recovers the data: {}", back == data);

    // Without any of the conditions the inverse direction is refused.
    let l2 = catalog::crossed_module::<Q>("q-q-id-L2")?;
    let al2 = actor(&l2)?;
    match XModActionData::action_from_morphism(&al2.canonical_morphism()?, &al2) {
        Err(Error::NoCondition(msg)) => println!("refused: {msg}"),
        other => println!("unexpected: {other:?}"),
    }

    // Data that only satisfies the axioms the forward direction needs.
    let d = catalog::action::<Q>("forward-only-action")?;
    println!(
        "forward-only data, failed axioms: {:?}",
        d.validate().labels()
    );
    let g = d.morphism_from_action(&actor(&d.target)?)?;
    println!("its morphism is valid anyway: {}", g.validate().ok());
    Ok(())
}
