//! Transcriptions of the displayed genus-three relations.
//!
//! Shorthand used in the tables: `p123` is `wp[1,2,3]`, `B13` is the Baker
//! function written with the same symbol `wp[1,3]`, `h25` is the formal entry
//! `h[2,5]` and `D` is the quadratic
//! `wp11 wp33 - wp12 wp23 - wp13^2 + wp13 wp22`.
//! Obvious breakage that prevents parsing (a missing `+`, an unclosed
//! parenthesis) is repaired and noted; everything else is kept as printed.

use super::{Identity, IdentitySet, Source};
use crate::curve::klein_matrix;
use crate::matrix::PolyMatrix;
use crate::poly::{p, Poly};
use crate::symbol::Symbol;

const DELTA: &str = "(wp[1,1]*wp[3,3] - wp[1,2]*wp[2,3] - wp[1,3]^2 + wp[1,3]*wp[2,2])";

/// Expand the table shorthand into the text syntax.
pub fn expand(s: &str) -> String {
    let b = s.as_bytes();
    let mut out = String::with_capacity(s.len() * 2);
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        let digits = b[i + 1..].iter().take_while(|d| d.is_ascii_digit()).count();
        let prev_alnum = i > 0 && b[i - 1].is_ascii_alphanumeric();
        if !prev_alnum && (c == b'p' || c == b'B') && (2..=4).contains(&digits) {
            let idx: Vec<String> = b[i + 1..i + 1 + digits].iter().map(|d| (*d as char).to_string()).collect();
            out.push_str(&format!("wp[{}]", idx.join(",")));
            i += 1 + digits;
        } else if !prev_alnum && c == b'h' && digits == 2 {
            out.push_str(&format!("h[{},{}]", b[i + 1] as char, b[i + 2] as char));
            i += 3;
        } else if !prev_alnum && c == b'D' && digits == 0 {
            out.push_str(DELTA);
            i += 1;
        } else {
            out.push(c as char);
            i += 1;
        }
    }
    out
}

/// Parse shorthand; formal entries `h[i,j]` are left formal.
pub fn sh(s: &str) -> Poly {
    p(&expand(s))
}

/// Parse shorthand and substitute the genus-three Klein entries.
pub fn sh_h(s: &str) -> Poly {
    let km = klein_matrix(3).expect("genus 3");
    sh(s).substitute(&km.formal_bindings())
}

/// `lhs - rhs` in shorthand.
pub fn sh_rel(lhs: &str, rhs: &str) -> Poly {
    sh(lhs) - sh(rhs)
}

/// `wp1333` style name of a four-index symbol.
pub fn fourindex_name(s: Symbol) -> String {
    let idx = s.wp_indices().unwrap_or_default();
    format!("wp{}", idx.iter().map(|i| i.to_string()).collect::<String>())
}

pub const P5: [&str; 5] = [
    "p113*p333 - p123*p233 + p223*p133 - p133^2",
    "-p233*p113 - p112*p333 - p133*p222 + 2*p133*p123 + p233*p122",
    "p133*p122 - p133*p113 - p223*p122 + p223*p113 + p111*p333 + p123*p222 - 2*p123^2",
    "-p233*p111 - p112*p133 + p112*p223 - p113*p222 + 2*p113*p123",
    "-p123*p112 + p113*p122 - p113^2 + p133*p111",
];

pub const P9_0: &str = "h25*p333 - h35*p233 + h45*(p223 - p133) - h55*(p222 - 2*p123)";
pub const P9_8: &str = "h11*(p222 - 2*p123) - h12*(p122 - p113) + h13*p112 - h14*p111";
pub const P7_0: &str =
    "-4*h15*p333 + 4*h35*p133 - h45*(2*p123 + p222) + 4*h55*(p122 - p113) - h34*p233 + h24*p333 - h44*(p133 - p223)";
pub const BASE1: [&str; 2] = [
    "h24*p333 - h34*p233 + h44*(p223 - p133) - h54*(p222 - 2*p123)",
    "h25*p333 - h35*p233 + h45*(p223 - p133) - h55*(p222 - 2*p123)",
];

/// The antisymmetric matrix `A` with `h A = 0`.
pub const A_MATRIX: [[&str; 5]; 5] = [
    ["0", "-p333", "p233", "-p223 + p133", "p222 - 2*p123"],
    ["p333", "0", "-p133", "p123", "-p122 + p113"],
    ["-p233", "p133", "0", "-p113", "p112"],
    ["p223 - p133", "-p123", "p113", "0", "-p111"],
    ["-p222 + 2*p123", "p122 - p113", "-p112", "p111", "0"],
];

/// Appendix 1, `(lhs, rhs)`.
pub const APPENDIX1: [(&str, &str); 15] = [
    ("-p3333 + 6*p33^2", "8*a6*p33 - 8*a7*p23 + a8*(3*p22 - 4*p13) + 10*(a4*a8 - 4*a5*a7 + 3*a6^2)"),
    ("-p2333 + 6*p23*p33", "12*a5*p33 - 10*a6*p23 + 4*a7*(p22 - 3*p13) + 2*a8*p12 + 10*(a3*a8 - 3*a4*a7 + 2*a5*a6)"),
    (
        "-p2233 + 4*p23^2 + 2*p22*p33",
        "18*a4*p33 - 12*a5*p23 + 2*a6*(3*p22 - 14*p13) + 4*a7*p12 + 2*a8*p11 + 8*(a2*a8 - a3*a7 - 5*a4*a6 + 5*a5^2)",
    ),
    (
        "-p2223 + 6*p22*p23",
        "28*a3*p33 - 16*a4*p23 + 4*a5*(3*p22 - 14*p13) + 12*a7*p11 + 4*(a1*a8 + 5*a2*a7 - 21*a3*a6 + 15*a4*a5)",
    ),
    (
        "-p2222 + 6*p22^2 - 12*D",
        "48*a3*p33 - 32*a3*p23 + 32*a4*(p22 - 3*p13) - 32*a5*p12 + 48*a6*p11 + a0*a8 + 24*a1*a7 - 4*a2*a6 - 216*a3*a5 + 195*a4^2",
    ),
    ("-p1333 + 6*p13*p33", "3*a4*p33 - 10*a6*p13 + 4*a7*p12 - a8*p11 + 3*a2*a8 - 8*a3*a7 + 5*a4*a6"),
    ("-p1233 + 4*p13*p23 + 2*p12*p33", "4*a3*p33 + 2*a4*p23 - 20*a5*p13 + 6*a6*p12 + 2*(a1*a8 - 6*a3*a6 + 5*a4*a5)"),
    (
        "-p1223 + 4*p12*p23 + 2*p13*p22 + 2*D",
        "6*a2*p33 + 4*a3*p23 + 2*a4*(p22 - 18*p13) + 4*a5*p12 + 6*a6*p11 + 1/2*(a0*a8 + 16*a1*a7 - 36*a2*a6 - 16*a3*a5 + 35*a4^2)",
    ),
    (
        "-p1222 + 6*p12*p22",
        "12*a1*p33 + 4*a3*(3*p22 - 14*p13) - 16*a4*p12 + 28*a5*p11 + 4*(a0*a7 + 5*a1*a6 - 21*a2*a5 + 15*a3*a4)",
    ),
    ("-p1133 + 4*p13^2 + 2*p11*p33 - 2*D", "4*a3*p23 - a4*(p22 - 12*p13) + 4*a5*p12 + 1/2*(a0*a8 - 16*a3*a5 + 15*a4^2)"),
    ("-p1123 + 4*p12*p13 + 2*p11*p23", "6*a2*p23 - 20*a3*p13 + 2*a4*p12 + 4*a5*p11 + 2*(a0*a7 - 6*a2*a5 + 5*a3*a4)"),
    (
        "-p1122 + 4*p12^2 + 2*p11*p22",
        "2*a0*p33 + 4*a1*p23 + 2*a2*(3*p22 - 14*p13) - 12*a3*p12 + 18*a4*p11 + 8*(a0*a6 - a1*a5 - 5*a2*a4 + 5*a3^2)",
    ),
    ("-p1113 + 6*p11*p13", "-a0*p33 + 4*a1*p23 - 10*a2*p13 + 3*a4*p11 + 3*a0*a6 - 8*a1*a5 + 5*a2*a4"),
    ("-p1112 + 6*p11*p12", "2*a0*p23 + 4*a1*(p22 - 3*p13) - 10*a2*p12 + 12*a3*p11 + 10*(a0*a5 - 3*a1*a4 + 2*a2*a3)"),
    ("-p1111 + 6*p11^2", "a0*(3*p22 - 4*p13) - 8*a1*p12 + 8*a2*p11 + 10*(a0*a4 - 4*a1*a3 + 3*a2^2)"),
];

/// Four-index symbol isolated by each Appendix-1 (and Appendix-2) line.
pub const FOURINDEX_ORDER: [[u8; 4]; 15] = [
    [3, 3, 3, 3],
    [2, 3, 3, 3],
    [2, 2, 3, 3],
    [2, 2, 2, 3],
    [2, 2, 2, 2],
    [1, 3, 3, 3],
    [1, 2, 3, 3],
    [1, 2, 2, 3],
    [1, 2, 2, 2],
    [1, 1, 3, 3],
    [1, 1, 2, 3],
    [1, 1, 2, 2],
    [1, 1, 1, 3],
    [1, 1, 1, 2],
    [1, 1, 1, 1],
];

/// Appendix 2 in Baker's functions, `(lhs, rhs)`. Line 4 keeps the printed
/// `7-a_4`, read literally as `+ 7 - a4*B23`.
pub const APPENDIX2: [(&str, &str); 15] = [
    ("B3333 - 6*B33^2", "28*a6*B33 + 8*a7*B23 + a8*(4*B13 - 3*B22) - 35*a4*a8 + 56*a5*a7"),
    ("B2333 - 6*B23*B33", "28*a6*B23 + 4*a7*(3*B13 - B22) + 2*a8*B12 - 14*a3*a8"),
    ("B2233 - 4*B23^2 - 2*B22*B33", "28*a5*B23 + 28*a6*B13 - 4*a7*B12 - 2*a8*B11 - 14*a2*a8"),
    ("B2223 - 6*B22*B23", "-28*a3*B33 + 7 - a4*B23 + 56*a5*B13 - 12*a7*B11 - 4*a1*a8 - 56*a2*a7"),
    (
        "B2222 - 6*B22^2 - 12*D",
        "-84*a2*B33 + 56*a3*B23 + 70*a4*B22 + 56*a5*B12 - 84*a6*B11 - 392*a2*a6 + 392*a3*a5",
    ),
    ("B1333 - 6*B13*B33", "28*a6*B13 - 4*a7*B12 + a8*B11"),
    ("B1233 - 4*B13*B23 - 2*B12*B33", "28*a5*B13 - 2*a1*a8"),
    ("B1223 - 4*B12*B23 - 2*B13*B22 + 2*D", "70*a4*B13 - 8*a1*a7 - 1/2*a0*a8"),
    ("B1222 - 6*B12*B22", "-12*a1*B33 + 56*a3*B13 + 70*a4*B12 - 28*a5*B11 - 112*a1*a6 - 4*a0*a7"),
    ("B1133 - 4*B13^2 - 2*B11*B33 - 2*D", "-1/2*a1*a8"),
    ("B1123 - 4*B12*B13 - 2*B11*B23", "28*a3*B13 - 2*a0*a7"),
    ("B1122 - 4*B12^2 - 2*B11*B22", "-2*a0*B33 - 4*a1*B23 + 28*a2*B13 + 28*a3*B12 - 14*a0*a6"),
    ("B1113 - 6*B11*B13", "a0*B33 - 4*a1*B23 + 28*a2*B13"),
    ("B1112 - 6*B11*B12", "-2*a0*B23 + 4*a1*(3*B13 - B22) + 28*a2*B12 - 14*a0*a5"),
    ("B1111 - 6*B11^2", "a0*(4*B13 - 3*B22) + 8*a1*B12 + 28*a2*B11 - 35*a0*a4 + 56*a1*a3"),
];

/// Reading choices made while transcribing Appendix 2.
pub fn appendix2_notes(i: usize) -> Option<&'static str> {
    match i {
        3 => Some("printed coefficient `7-a_4` on B23 kept literally as `+ 7 - a4*B23`"),
        5 => Some("printed `B14` (no such index at genus three) read as B12, the only weight-consistent choice"),
        14 => Some("printed unmarked `wp13` read as B13"),
        _ => None,
    }
}

/// Baker's Klein matrix `h^B`.
pub const H_BAKER: [[&str; 5]; 5] = [
    ["a0", "4*a1", "-2*B11", "-2*B12", "-2*B13"],
    ["4*a1", "28*a2 + 4*B11", "28*a3 + 2*B12", "-2*B22 + 4*B13", "-2*B23"],
    ["-2*B11", "28*a3 + 2*B12", "70*a4 + 4*B22 - 4*B13", "28*a5 + 2*B23", "-2*B33"],
    ["-2*B12", "-2*B22 + 4*B13", "28*a5 + 2*B23", "28*a6 + 4*B33", "4*a7"],
    ["-2*B13", "-2*B23", "-2*B33", "4*a7", "a8"],
];

/// `wp^B_ij = wp_ij - c a_k`, as `(ij, c, k)`.
pub const BAKER_SHIFT: [([u8; 2], (i64, i64), u8); 6] = [
    ([1, 1], (3, 1), 2),
    ([1, 2], (2, 1), 3),
    ([1, 3], (1, 2), 4),
    ([2, 2], (9, 1), 4),
    ([2, 3], (2, 1), 5),
    ([3, 3], (3, 1), 6),
];

/// The nine-, seven- and five-member lists of the four-index section.
pub const MAIN_TEXT: [(&str, &str, &str); 21] = [
    ("m9-1", "-p3333 + 6*p33^2", "10*(a4*a8 - 4*a5*a7 + 3*a6^2) + 8*a6*p33 - 8*a7*p23 + a8*(3*p22 - 4*p13)"),
    (
        "m9-2",
        "-p2333 + 6*p23*p33",
        "10*(a3*a8 - 3*a4*a7 + 2*a5*a6) + 12*a5*p33 - 10*p23 + 4*a7*(p22 - 3*p13) + 2*a8*p12",
    ),
    (
        "m9-3",
        "2*(-p1333 + 6*p13*p33) + 3*(-p2233 + 2*p22*p33 + 4*p23^2)",
        "10*(3*a2*a8 - 4*a3*a7 - 11*a4*a6 + 12*a5^2) + 60*a4*p33 - 36*a5*p23 - 2*a6*(9*p22 - 52*p13) + 20*a7*p12 + 4*a8*p11",
    ),
    (
        "m9-4",
        "-p2223 + 6*p22*p23 + 3*(-p1233 + 2*p12*p33 + 4*p13*p23)",
        "10*(a1*a8 + 2*a2*a7 - 12*a3*a6 + 9*a4*a5) + 40*a3*p33 - 10*a4*p23 + 4*a5*(3*p22 - 29*p13) + 18*a6*p12 + 12*a7*p11",
    ),
    (
        "m9-5",
        "-p2222 + 6*p22^2 + 6*(-p1133 + 2*p11*p33 + 4*p13^2) + 12*(-p1223 + 4*p12*p23 + 2*p13*p22)",
        "10*(a0*a8 + 12*a1*a7 - 22*a2*a6 - 36*a3*a5 + 45*a4^2) + 120*a2*p33 + 40*a3*p23 + 50*a4*(p22 - 12*p13) + 40*a5*p12 + 120*a6*p11",
    ),
    (
        "m9-6",
        "-p1222 + 6*p12*p22 + 3*(-p1123 + 4*p12*p13 + 2*p11*p23)",
        "10*(a0*a7 + 2*a1*a6 - 12*a2*a5 + 9*a3*a4) + 12*a1*p33 + 18*a2*p23 + 4*a3*(3*p22 - 29*p13) - 10*a4*p12 + 40*a5*p11",
    ),
    (
        "m9-7",
        "2*(-p1113 + 6*p11*p13) + 3*(-p1122 + 2*p11*p22 + 4*p12^2)",
        "10*(3*a0*a6 - 4*a1*a5 - 11*a2*a4 + 12*a3^2) + 4*a0*p33 + 20*a1*p23 + 2*a2*(9*p22 - 52*p13) - 36*a3*p12 + 60*a4*p11",
    ),
    (
        "m9-8",
        "-p1112 + 6*p11*p12",
        "10*(a0*a5 - 3*a1*a4 + 2*a2*a3) + 2*a0*p23 + 4*a1*(p22 - 3*p13) - 10*a2*p12 + 12*a3*p11",
    ),
    ("m9-9", "-p1111 + 6*p11^2", "10*(a0*a4 - 4*a1*a3 + 3*a2^2) + a0*(3*p22 - 4*p13) - 8*a1*p12 + 8*a2*p11"),
    (
        "m7-1",
        "-p1333 + 6*p13*p33",
        "3*a2*a8 - 8*a3*a7 + 5*a4*a6 + 3*a4*p33 - 10*a6*p13 + 4*a7*p12 - a8*p11",
    ),
    (
        "m7-2",
        "-p1233 + 2*p12*p33 + 4*p13*p23",
        "2*a1*a8 - 12*a3*a6 + 10*a4*a5 + 4*a3*p33 + 2*a4*p23 - 20*a5*p13 + 6*a6*p12",
    ),
    (
        "m7-3",
        "-p1133 + 2*p11*p33 + 4*p13^2 - p1223 + 2*p13*p22 + 4*p12*p23",
        "a0*a8 + 8*a1*a7 - 18*a2*a6 - 16*a3*a5 + 25*a4^2 + 6*a2*p33 + 8*a3*p23 + a4*(p22 - 48*p13) + 8*a5*p12 + 6*a6*p11",
    ),
    (
        "m7-4",
        "-p1222 + 6*p12*p22 + 6*(-p1123 + 2*p11*p23 + 4*p12*p13)",
        "16*a0*a7 + 20*a1*a6 - 156*a2*a5 + 120*a3*a4 + 12*a1*p33 + 36*a2*p23 + 4*(3*a3*p22 - 44*p13) - 4*a4*p12 + 52*a5*p11",
    ),
    (
        "m7-5",
        "-p1113 + 6*p11*p12 - p1122 + 2*p11*p22 + 4*p12^2",
        "11*a0*a6 - 16*a1*a5 - 35*a2*a4 + 40*a3^2 + a0*p33 + 8*a1*p23 + 2*a2*(3*p22 - 19*p13) - 12*a3*p12 + 21*a4*p11",
    ),
    (
        "m7-6",
        "-p1112 + 6*p11*p12",
        "10*(a0*a5 - 3*a1*a4 + 2*a2*a3) + 2*a0*p23 + 4*a1*(p22 - 3*p13) - 10*a2*p12 + 12*a3*p11",
    ),
    ("m7-7", "-p1111 + 6*p11^2", "10*(a0*a4 - 4*a1*a3 + 3*a2^2) + a0*(3*p22 - 4*p13) - 8*a1*p12 + 8*a2*p11"),
    (
        "m5-1",
        "2*(-p1133 + 6*p13^2) + 4*(p23*p12 - p13*p22)",
        "a0*a8 - 16*a3*a5 + 15*a4^2 + 8*a3*p23 - 2*a4*(p22 + 12*p13) + 8*a5*p12",
    ),
    (
        "m5-2",
        "-p1123 + 4*p12*p13 + 2*p23*p11",
        "2*a0*a7 - 12*a2*a5 + 10*a3*a4 + 6*a2*p23 - 20*a3*p13 + 2*a4*p12 + 4*a5*p11",
    ),
    (
        "m5-3",
        "-p1122 + 2*p11*p22 + 4*p12^2 + 2*(-p1113 + 6*p11*p13)",
        "14*a0*a6 - 24*a1*a5 - 30*a2*a4 + 40*a3^3 + 12*a1*p23 + 6*a2*(p22 - 8*p13) - 12*a3*p12 + 24*a4*p11",
    ),
    (
        "m5-4",
        "-p1112 + 6*p11*p12",
        "10*a0*a5 - 30*a1*a4 + 20*a2*a3 + 2*a0*p23 + 4*a1*(p22 - 3*p13) - 10*a2*p12 + 12*a3*p11",
    ),
    ("m5-5", "-p1111 + 6*p11^2", "10*a0*a4 - 40*a1*a3 + 30*a2^2 + a0*(3*p22 - 4*p13) - 8*a1*p12 + 8*a2*p11"),
];

/// Minor displays `-2 wp3333`, `-2 wp1333`, `-2 wp1133`, as `(symbol, rhs)`.
pub const MINOR_DISPLAYS: [(&str, &str); 3] = [
    ("p3333", "-(h24*h55 - h25*h54) + (h33*h55 - h35*h53) - (h34*h45 - h35*h44)"),
    ("p1333", "-(h14*h45 - h15*h44) + (h13*h55 - h53*h15)"),
    ("p1133", "(h11*h55 - h15*h51) - (h14*h25 - h15*h24)"),
];

pub fn appendix1() -> IdentitySet {
    let members = APPENDIX1
        .iter()
        .enumerate()
        .map(|(i, (l, r))| {
            let name = fourindex_name(Symbol::wp(&FOURINDEX_ORDER[i]));
            let mut id = Identity::new(name, 3, sh_rel(l, r), Source::PaperAsPrinted, format!("appendix-1:{}", i + 1));
            if i == 4 {
                id = id.with_note("missing `+` before a0*a8 restored");
            }
            id
        })
        .collect();
    IdentitySet::new("appendix1", 3, members)
}

pub fn appendix2() -> IdentitySet {
    let members = APPENDIX2
        .iter()
        .enumerate()
        .map(|(i, (l, r))| {
            let name = format!("B{}", &fourindex_name(Symbol::wp(&FOURINDEX_ORDER[i]))[2..]);
            let id = Identity::new(name, 3, sh_rel(l, r), Source::PaperAsPrinted, format!("appendix-2:{}", i + 1));
            match appendix2_notes(i) {
                Some(n) => id.with_note(n),
                None => id,
            }
        })
        .collect();
    IdentitySet::new("appendix2", 3, members).in_baker_variables()
}

pub fn main_text_fourindex() -> IdentitySet {
    let members = MAIN_TEXT
        .iter()
        .map(|(n, l, r)| {
            let id = Identity::new(*n, 3, sh_rel(l, r), Source::PaperAsPrinted, format!("four-index lists:{n}"));
            match *n {
                "m9-5" => id.with_note("unclosed parenthesis closed after 45*a4^2"),
                "m7-3" => id.with_note("`8a_3\\wp{23}` read as 8*a3*wp[2,3]"),
                _ => id,
            }
        })
        .collect();
    IdentitySet::new("maintext", 3, members)
}

pub fn baker_matrix() -> PolyMatrix {
    PolyMatrix::from_fn(5, 5, |i, j| sh(H_BAKER[i][j]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand() {
        assert_eq!(expand("p123 - 2*B13*h25"), "wp[1,2,3] - 2*wp[1,3]*h[2,5]");
        assert_eq!(sh("D"), p(DELTA));
        assert_eq!(expand("a0*a8"), "a0*a8");
    }

    #[test]
    fn tables_parse() {
        assert_eq!(appendix1().len(), 15);
        assert_eq!(appendix2().len(), 15);
        assert_eq!(main_text_fourindex().len(), 21);
        for (i, id) in appendix1().members.iter().enumerate() {
            let s = Symbol::wp(&FOURINDEX_ORDER[i]);
            assert_eq!(id.relation.coeff_of(&crate::Monomial::var(s)), crate::Rational::from(-1), "{}", id.name);
        }
    }

    #[test]
    fn first_and_last_appendix1() {
        let a = appendix1();
        assert_eq!(
            a.members[0].relation,
            p("-wp[3,3,3,3] + 6*wp[3,3]^2 - 8*a6*wp[3,3] + 8*a7*wp[2,3] - a8*(3*wp[2,2] - 4*wp[1,3]) - 10*(a4*a8 - 4*a5*a7 + 3*a6^2)")
        );
        assert_eq!(a.members[14].name, "wp1111");
    }
}
