//! Standard algebras and triangulations used as fixtures.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::gentle::{validate_gentle, GentleAlgebra};
use crate::quiver::{QuiverBuilder, QuiverPresentation};
use crate::surface::{algebra_from_triangulation, Triangulation};

fn gentle(q: QuiverPresentation) -> GentleAlgebra {
    validate_gentle(&q).expect("fixture is gentle")
}

/// Eight vertices, arrows `a..k` (no `i`-`j` gap), two cycles of relations.
pub fn example_quiver() -> QuiverPresentation {
    QuiverPresentation::from_parts(
        &["1", "2", "3", "4", "5", "6", "7", "8"],
        &[
            ("a", "1", "2"),
            ("b", "2", "3"),
            ("c", "3", "4"),
            ("d", "5", "1"),
            ("e", "6", "2"),
            ("f", "2", "7"),
            ("g", "4", "7"),
            ("h", "8", "4"),
            ("i", "6", "5"),
            ("j", "7", "6"),
            ("k", "7", "8"),
        ],
        &[("b", "a"), ("f", "e"), ("j", "f"), ("e", "j"), ("k", "g"), ("h", "k"), ("g", "h")],
    )
    .expect("valid presentation")
}

pub fn example() -> GentleAlgebra {
    gentle(example_quiver())
}

/// `1 -> 2`.
pub fn path_a2() -> QuiverPresentation {
    QuiverPresentation::from_parts(&["1", "2"], &[("a", "1", "2")], &[]).expect("valid presentation")
}

pub fn a2() -> GentleAlgebra {
    gentle(path_a2())
}

/// Two parallel arrows `a, b: 1 -> 2`.
pub fn kronecker() -> GentleAlgebra {
    gentle(QuiverPresentation::from_parts(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], &[]).expect("valid"))
}

/// The oriented `n`-cycle `a_i: i -> i+1` with every composition zero.
pub fn cyclic_nakayama(n: usize) -> QuiverPresentation {
    let mut b = QuiverBuilder::new();
    let vs: Vec<String> = (1..=n).map(|i| format!("{i}")).collect();
    for v in &vs {
        b.vertex(v).expect("fresh vertex");
    }
    for i in 0..n {
        b.arrow(&format!("a{}", i + 1), &vs[i], &vs[(i + 1) % n]).expect("fresh arrow");
    }
    for i in 0..n {
        b.relation(&format!("a{}", (i + 1) % n + 1), &format!("a{}", i + 1)).expect("composable");
    }
    b.build()
}

/// The selfinjective gentle algebra `I_n`.
pub fn nakayama(n: usize) -> GentleAlgebra {
    gentle(cyclic_nakayama(n))
}

/// `Λ_n`: vertices `0..=n`, `c1: 0 -> 1`, `c2: 0 -> n`, and for
/// `i = 1..n` arrows `a_i: i -> i+1`, `b_i: i+1 -> i` with `a_i b_i = 0 = b_i a_i`.
pub fn lambda_quiver(n: usize) -> QuiverPresentation {
    assert!(n >= 2, "Λ_n needs n >= 2");
    let mut b = QuiverBuilder::new();
    for v in 0..=n {
        b.vertex(&format!("{v}")).expect("fresh vertex");
    }
    b.arrow("c1", "0", "1").expect("fresh arrow");
    b.arrow("c2", "0", &format!("{n}")).expect("fresh arrow");
    for i in 1..n {
        let (s, t) = (format!("{i}"), format!("{}", i + 1));
        b.arrow(&format!("a{i}"), &s, &t).expect("fresh arrow");
        b.arrow(&format!("b{i}"), &t, &s).expect("fresh arrow");
    }
    for i in 1..n {
        b.relation(&format!("a{i}"), &format!("b{i}")).expect("composable");
        b.relation(&format!("b{i}"), &format!("a{i}")).expect("composable");
    }
    b.build()
}

pub fn lambda(n: usize) -> GentleAlgebra {
    gentle(lambda_quiver(n))
}

/// Two disjoint 3-cycles with all compositions zero.
pub fn two_triangles() -> GentleAlgebra {
    gentle(
        QuiverPresentation::from_parts(
            &["1", "2", "3", "4", "5", "6"],
            &[
                ("p1", "1", "2"),
                ("p2", "2", "3"),
                ("p3", "3", "1"),
                ("q1", "4", "5"),
                ("q2", "5", "6"),
                ("q3", "6", "4"),
            ],
            &[("p2", "p1"), ("p3", "p2"), ("p1", "p3"), ("q2", "q1"), ("q3", "q2"), ("q1", "q3")],
        )
        .expect("valid presentation"),
    )
}

/// A hexagon with diagonals `x, y, z` cutting out one inner triangle.
pub fn hexagon() -> Triangulation {
    Triangulation::new(
        &["x", "y", "z"],
        &["b1", "b2", "b3", "b4", "b5", "b6"],
        &[["b1", "b2", "x"], ["b3", "b4", "y"], ["b5", "b6", "z"], ["x", "y", "z"]],
    )
    .expect("valid triangulation")
}

/// The fan triangulation of an `n`-gon: every diagonal leaves one corner.
pub fn fan(n: usize) -> Triangulation {
    assert!(n >= 3, "a polygon has at least three sides");
    let d: Vec<String> = (1..=n - 3).map(|i| format!("d{i}")).collect();
    let b: Vec<String> = (1..=n).map(|i| format!("b{i}")).collect();
    let triangles: Vec<[String; 3]> = if n == 3 {
        vec![[b[0].clone(), b[1].clone(), b[2].clone()]]
    } else {
        let mut t = vec![[b[0].clone(), b[1].clone(), d[0].clone()]];
        for i in 1..n - 3 {
            t.push([d[i - 1].clone(), b[i + 1].clone(), d[i].clone()]);
        }
        t.push([d[n - 4].clone(), b[n - 2].clone(), b[n - 1].clone()]);
        t
    };
    Triangulation::new(&d, &b, &triangles).expect("valid triangulation")
}

/// An octagon with two inner triangles sharing the diagonal `d04`.
pub fn octagon_two_inner() -> Triangulation {
    Triangulation::new(
        &["d02", "d24", "d46", "d60", "d04"],
        &["b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8"],
        &[
            ["b1", "b2", "d02"],
            ["b3", "b4", "d24"],
            ["b5", "b6", "d46"],
            ["b7", "b8", "d60"],
            ["d02", "d24", "d04"],
            ["d04", "d46", "d60"],
        ],
    )
    .expect("valid triangulation")
}

pub fn fan5() -> GentleAlgebra {
    gentle(algebra_from_triangulation(&fan(5)))
}

/// Every algebra fixture, with a short name.
pub fn named_algebras() -> Vec<(String, GentleAlgebra)> {
    let mut out = vec![("example".into(), example()), ("A2".into(), a2()), ("kronecker".into(), kronecker())];
    for n in 2..=4 {
        out.push((format!("I{n}"), nakayama(n)));
    }
    for n in 2..=5 {
        out.push((format!("Lambda{n}"), lambda(n)));
    }
    out.push(("fan5".into(), fan5()));
    out.push(("hexagon".into(), gentle(algebra_from_triangulation(&hexagon()))));
    out.push(("octagon".into(), gentle(algebra_from_triangulation(&octagon_two_inner()))));
    out.push(("two-triangles".into(), two_triangles()));
    out
}

pub fn all_algebras() -> Vec<GentleAlgebra> {
    named_algebras().into_iter().map(|(_, a)| a).collect()
}
