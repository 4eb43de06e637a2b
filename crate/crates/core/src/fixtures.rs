//! Small algebras and triangulations shipped with the crate.

use crate::algebra::GentleAlgebra;
use crate::format;
use crate::triangulation::Triangulation;

pub const C4: &str = include_str!("../fixtures/C4.alg");
pub const LIN: &str = include_str!("../fixtures/LIN.alg");
pub const TRI3: &str = include_str!("../fixtures/TRI3.alg");
pub const A3: &str = include_str!("../fixtures/A3.alg");
pub const BAND: &str = include_str!("../fixtures/BAND.alg");
pub const HEX: &str = include_str!("../fixtures/HEX.tri");
pub const SQUARE: &str = include_str!("../fixtures/SQUARE.tri");
pub const FAN5: &str = include_str!("../fixtures/FAN5.tri");

fn algebra(text: &str) -> GentleAlgebra {
    format::parse_algebra(text).expect("bundled fixture is a gentle algebra")
}

fn triangulation(text: &str) -> Triangulation {
    format::parse_triangulation(text).expect("bundled fixture is a triangulation")
}

pub fn c4() -> GentleAlgebra {
    algebra(C4)
}

pub fn lin() -> GentleAlgebra {
    algebra(LIN)
}

pub fn tri3() -> GentleAlgebra {
    algebra(TRI3)
}

pub fn a3() -> GentleAlgebra {
    algebra(A3)
}

pub fn band() -> GentleAlgebra {
    algebra(BAND)
}

pub fn hex() -> Triangulation {
    triangulation(HEX)
}

pub fn square() -> Triangulation {
    triangulation(SQUARE)
}

pub fn fan5() -> Triangulation {
    triangulation(FAN5)
}
