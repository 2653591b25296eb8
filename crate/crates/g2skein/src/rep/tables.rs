//! Projector coefficient tables, kept as verbatim strings for audit.

use crate::qalg::rf;
use crate::skein::diagrams::named;
use crate::web::WebSum;

/// Hom spaces carrying projector systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Space {
    End11,
    Hom12,
    Hom21,
    End22,
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Space::End11 => "End11",
            Space::Hom12 => "Hom12",
            Space::Hom21 => "Hom21",
            Space::End22 => "End22",
        };
        write!(f, "{s}")
    }
}

/// Dominant-weight tags of the irreducible factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Weight {
    Triv,
    W1,
    W2,
    TwoW1,
    W1PlusW2,
    TwoW2,
    ThreeW1,
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Weight::Triv => "0",
            Weight::W1 => "w1",
            Weight::W2 => "w2",
            Weight::TwoW1 => "2w1",
            Weight::W1PlusW2 => "w1+w2",
            Weight::TwoW2 => "2w2",
            Weight::ThreeW1 => "3w1",
        };
        write!(f, "{s}")
    }
}

/// The two candidate readings of one smudged factor in the 2w2 entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoW2Reading {
    /// ... ([4][14] - [7]) ...
    QuantumSeven,
    /// ... ([4][14] - 7) ...
    IntegerSeven,
}

pub const P22_2W2_TATE_QUANTUM: &str =
    "[3]^2[4]^2[6][9]([4][14]-[7])/([2]^2[7][8][12]^2[18])";
pub const P22_2W2_TATE_INTEGER: &str =
    "[3]^2[4]^2[6][9]([4][14]-7)/([2]^2[7][8][12]^2[18])";

/// (projector entry as printed): list of (web, coefficient string).
pub fn entry_strings(space: Space, w: Weight, reading: TwoW2Reading) -> Option<Vec<(&'static str, &'static str)>> {
    use Space::*;
    use Weight::*;
    let v: Vec<(&'static str, &'static str)> = match (space, w) {
        (End11, TwoW1) => vec![
            ("id", "1"),
            ("tate", "[4]/([3][8])"),
            ("rung", "1/([2][3])"),
            ("arcs", "-[4][6]/([2][7][12])"),
        ],
        (End11, W1) => vec![("tate", "-[4]/([3][8])")],
        (End11, W2) => vec![("rung", "-1/([2][3])")],
        (End11, Triv) => vec![("arcs", "[4][6]/([2][7][12])")],
        (Hom12, W1PlusW2) => vec![
            ("yoko", "1/[3]"),
            ("tate", "[5](q^8+q^2-1+q^-2+q^-8)/([7][15])"),
            ("square", "[4]/([2][3][7])"),
        ],
        (Hom12, TwoW1) => vec![
            ("square", "1/([2][7])"),
            ("tate", "[3][4]/([2][7][8])"),
        ],
        (Hom12, W1) => vec![("tate", "-[5][12]/([6][8][15])")],
        (End22, TwoW2) => vec![
            ("id", "[3][4][5](q^2-2+q^-2)/[12]"),
            ("arcs", "-[3]^2[4][5][14]/([7][8][12][15])"),
            (
                "tate",
                match reading {
                    TwoW2Reading::QuantumSeven => P22_2W2_TATE_QUANTUM,
                    TwoW2Reading::IntegerSeven => P22_2W2_TATE_INTEGER,
                },
            ),
            ("yoko", "[3]^2[4]^2[6]/([2]^2[12]^2)"),
            ("square", "[5]/([6][8])"),
        ],
        (End22, ThreeW1) => vec![
            ("id", "[3][4]/[12]"),
            ("arcs", "[2][3][4]^2[5]/([8][10][12])"),
            ("tate", "-[3]^4[4]^2[5]/([2]^2[10][12]^2)"),
            ("yoko", "-[3]^2[4]^2[6]/([2]^2[12]^2)"),
            ("square", "-[4][5]/([2][6][10])"),
        ],
        (End22, TwoW1) => vec![
            ("arcs", "-[2][3]^2[4][5][6]/([7][8][10][12])"),
            ("tate", "[3]^3[4]^2[5][6]^2/([2]^3[8][10][12]^2)"),
            ("square", "[5]/([8][10])"),
        ],
        (End22, W2) => vec![("tate", "-[3]^2[4][9]/([2]^2[12][18])")],
        (End22, Triv) => vec![("arcs", "[3][4][5]/([7][8][15])")],
        _ => return None,
    };
    Some(v)
}

/// Weights carried by each space's projector system, in display order.
pub fn weights_of(space: Space) -> &'static [Weight] {
    use Weight::*;
    match space {
        Space::End11 => &[TwoW1, W1, W2, Triv],
        Space::Hom12 | Space::Hom21 => &[W1PlusW2, TwoW1, W1],
        Space::End22 => &[TwoW2, ThreeW1, TwoW1, W2, Triv],
    }
}

fn web_by_name(space: Space, name: &str) -> crate::web::Web {
    match (space, name) {
        (Space::End11, "id") => named::w11_id(),
        (Space::End11, "arcs") => named::w11_arcs(),
        (Space::End11, "tate") => named::w11_tate(),
        (Space::End11, "yoko") => named::w11_yoko(),
        (Space::End11, "rung") => named::w11_rung(),
        (Space::Hom12, "tate") => named::w12_tate(),
        (Space::Hom12, "yoko") => named::w12_yoko(),
        (Space::Hom12, "square") => named::w12_square(),
        (Space::End22, "id") => named::w22_id(),
        (Space::End22, "arcs") => named::w22_arcs(),
        (Space::End22, "tate") => named::w22_tate(),
        (Space::End22, "yoko") => named::w22_yoko(),
        (Space::End22, "square") => named::w22_square(),
        _ => panic!("no web named {name} in {space}"),
    }
}

/// Transcribed projector as a web sum. Hom21 entries are not tabulated; they
/// are computed by conjugation in the rep module.
pub fn projector_sum(space: Space, w: Weight, reading: TwoW2Reading) -> Option<WebSum> {
    let entries = entry_strings(space, w, reading)?;
    let mut sum = WebSum::zero(web_by_name(space, entries[0].0).coloring());
    for (name, coeff) in entries {
        sum.add_term(&web_by_name(space, name), rf(coeff));
    }
    Some(sum)
}

/// Spectral decomposition: (eigenvalue string, weight) pairs.
pub fn spectral_strings(space: Space) -> Vec<(&'static str, Weight)> {
    use Weight::*;
    match space {
        Space::End11 => vec![
            ("q^2", TwoW1),
            ("-q^-6", W1),
            ("-1", W2),
            ("q^-12", Triv),
        ],
        Space::Hom12 | Space::Hom21 => vec![
            ("q^3", W1PlusW2),
            ("q^-4", TwoW1),
            ("-q^-12", W1),
        ],
        Space::End22 => vec![
            ("q^6", TwoW2),
            ("-1", ThreeW1),
            ("q^-10", TwoW1),
            ("-q^-12", W2),
            ("q^-24", Triv),
        ],
    }
}
