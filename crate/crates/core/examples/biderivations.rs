//! Biderivations of a Leibniz algebra, and the bracket that makes them an
//! algebra again.
//!
//!     cargo run --example biderivations

use leibniz_xmod::bider::{bider_algebra, inner_bider};
use leibniz_xmod::scalar::int;
use leibniz_xmod::{LeibnizAlgebra, Matrix, Rational};

type Q = Rational;

fn show(m: &Matrix<Q>) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    format!("[{}]", rows.join("; "))
}

fn main() -> leibniz_xmod::Result<()> {
    // Two-dimensional, non-Lie: [e0, e0] = e1 and nothing else.
    let l2 = LeibnizAlgebra::<Q>::from_brackets(2, &[(0, 0, vec![(1, int(1))])])?;
    println!("L2 is Leibniz: {}", l2.validate_leibniz().ok());
    println!("L2 is Lie: {}", l2.is_lie());

    let b = bider_algebra(&l2)?;
    println!("Bider(L2) has dimension {}", b.dim());
    for (k, pair) in b.basis().iter().enumerate() {
        println!(
            "  basis {k}: d = {}  D = {}",
            show(&pair.d),
            show(&pair.big_d)
        );
    }

    // The brackets of basis elements land back in the span.
    for (i, p) in b.basis().iter().enumerate() {
        for (j, p2) in b.basis().iter().enumerate() {
            let bracket = p.bracket(p2, &Matrix::identity(2));
            let coords = b.coordinates(&bracket).expect("closed");
            if coords.iter().any(|c| *c != int(0)) {
                let c: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
                println!("  [b{i}, b{j}] = ({})", c.join(", "));
            }
        }
    }
    println!(
        "bracket on Bider(L2) is Leibniz: {}",
        b.algebra().validate_leibniz().ok()
    );

    // Inner biderivations: (-[-, x], [x, -]).
    for k in 0..2 {
        let e = leibniz_xmod::matrix::unit(2, k);
        let inner = inner_bider(&l2, &e);
        println!(
            "inner biderivation of e{k}: coordinates {:?}",
            b.coordinates(&inner)
                .map(|c| { c.iter().map(|x| x.to_string()).collect::<Vec<_>>() })
        );
    }
    Ok(())
}
