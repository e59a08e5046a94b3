//! Every built-in fixture, with its kind and verdict.
//!
//!     cargo run --example catalog_tour

use leibniz_xmod::catalog::{self, CatalogObject};
use leibniz_xmod::Rational;

fn main() -> leibniz_xmod::Result<()> {
    for id in catalog::ids() {
        let entry = catalog::load::<Rational>(id)?;
        let detail = match &entry.object {
            CatalogObject::Algebra(a) => format!("dim {}, lie {}", a.dim(), a.is_lie()),
            CatalogObject::CrossedModule(x) => format!("dims {:?}, {:?}", x.dims(), x.conditions()),
            CatalogObject::Action(d) => format!("full axioms {}", d.validate().ok()),
            CatalogObject::Sequence(s) => format!("middle {:?}", s.middle().dims()),
        };
        println!(
            "{:22} {:15} {}  {}",
            entry.id,
            entry.object.kind(),
            detail,
            entry.note
        );
    }
    Ok(())
}
