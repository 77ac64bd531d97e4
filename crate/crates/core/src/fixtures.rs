//! Reference graphs with published parameters.
//!
//! Edge tables are stored as printed, in the edge-table format of
//! [`crate::formats`]. Their vertex numbering walks offsets first: vertex
//! `(i, j)` of `Z_m × Z_ℓ` is number `j·m + i + 1`. The hexacode matrix is
//! numbered block by block with `v_∞` first.

use serde::Serialize;

use crate::addcode::TypeClass;
use crate::metagraph::{Labeling, MetacirculantSpec};

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// The drawing of the hexacode graph.
    Figure,
    /// The printed generator matrix of the bordered hexacode graph.
    WorkedExample,
    /// Caption of a printed edge table.
    TableCaption,
    /// Row of the graph property table.
    PropertyTable,
    /// Stated parameters of the code built from the graph.
    CodeClaim,
    /// Stated weight-distribution fact.
    WeightClaim,
    /// Stated type of the code.
    TypeClaim,
    /// Implied by other published values (e.g. `n·ν/2` edges).
    Implied,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Claim<T> {
    pub value: T,
    pub source: Source,
}

const fn claim<T>(value: T, source: Source) -> Option<Claim<T>> {
    Some(Claim { value, source })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub edges: Option<Claim<usize>>,
    /// Common degree of the unbordered graph.
    pub valency: Option<Claim<usize>>,
    pub diameter: Option<Claim<usize>>,
    pub girth: Option<Claim<usize>>,
    pub clique: Option<Claim<usize>>,
    /// Type of the bordered code.
    pub type_class: Option<Claim<TypeClass>>,
    /// Minimum distance of the unbordered code.
    pub distance: Option<Claim<usize>>,
    /// Minimum distance of the bordered code.
    pub bordered_distance: Option<Claim<usize>>,
    /// Number of minimum-weight words of the bordered code.
    pub bordered_count_at_d: Option<Claim<u64>>,
    /// Generator matrix of the bordered code, one row per line.
    pub bordered_matrix: Option<Claim<&'static str>>,
}

const NONE: Expected = Expected {
    edges: None,
    valency: None,
    diameter: None,
    girth: None,
    clique: None,
    type_class: None,
    distance: None,
    bordered_distance: None,
    bordered_count_at_d: None,
    bordered_matrix: None,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fixture {
    pub name: &'static str,
    pub spec: MetacirculantSpec,
    /// Printed edge table, when there is one.
    #[serde(skip)]
    pub edge_table: Option<&'static str>,
    /// Numbering used by `edge_table` and `expected.bordered_matrix`.
    pub labeling: Labeling,
    pub expected: Expected,
}

pub const NAMES: [&str; 8] = ["hexacode", "G28", "G36_1", "G36_2", "G80_1", "G80_2", "G80_3", "G93"];

const HEXACODE_MATRIX: &str = "\
w 1 1 1 1 1 1
1 w 1 1 1 0 0
1 1 w 1 0 1 0
1 1 1 w 0 0 1
1 1 0 0 w 1 1
1 0 1 0 1 w 1
1 0 0 1 1 1 w
";

/// Common values of the property table: diameter 2, girth 3.
fn props(edges: Option<Claim<usize>>, valency: usize, clique: usize, d: usize) -> Expected {
    Expected {
        edges,
        valency: claim(valency, Source::PropertyTable),
        diameter: claim(2, Source::PropertyTable),
        girth: claim(3, Source::PropertyTable),
        clique: claim(clique, Source::PropertyTable),
        bordered_distance: claim(d, Source::CodeClaim),
        ..NONE
    }
}

fn spec(m: usize, ell: usize, alpha: usize, sets: &[&[usize]]) -> MetacirculantSpec {
    MetacirculantSpec::new(m, ell, alpha, sets.iter().map(|s| s.to_vec()).collect())
}

pub fn fixture(name: &str) -> Option<Fixture> {
    let f = match name {
        "hexacode" => Fixture {
            name: "hexacode",
            spec: spec(2, 3, 1, &[&[1, 2], &[0]]),
            edge_table: None,
            labeling: Labeling::BlockMajor,
            expected: Expected {
                edges: claim(9, Source::Figure),
                distance: claim(4, Source::CodeClaim),
                bordered_distance: claim(3, Source::WorkedExample),
                bordered_matrix: claim(HEXACODE_MATRIX, Source::WorkedExample),
                ..NONE
            },
        },
        "G28" => Fixture {
            name: "G28",
            spec: spec(2, 14, 13, &[&[5, 6, 8, 9], &[0, 1, 3, 6, 7, 9, 11]]),
            edge_table: Some(include_str!("../data/g28.txt")),
            labeling: Labeling::OffsetMajor,
            expected: props(claim(154, Source::TableCaption), 11, 4, 10),
        },
        "G36_1" => Fixture {
            name: "G36_1",
            spec: spec(2, 18, 17, &[&[1, 3, 9, 15, 17], &[2, 6, 8, 11, 15, 16]]),
            edge_table: Some(include_str!("../data/g36_1.txt")),
            labeling: Labeling::OffsetMajor,
            expected: Expected {
                diameter: claim(3, Source::PropertyTable),
                bordered_count_at_d: claim(252, Source::WeightClaim),
                ..props(claim(198, Source::TableCaption), 11, 4, 11)
            },
        },
        "G36_2" => Fixture {
            name: "G36_2",
            spec: spec(
                2,
                18,
                17,
                &[&[1, 2, 3, 5, 13, 15, 16, 17], &[0, 1, 2, 3, 5, 8, 9, 11, 12, 13, 15]],
            ),
            edge_table: Some(include_str!("../data/g36_2.txt")),
            labeling: Labeling::OffsetMajor,
            expected: Expected {
                bordered_count_at_d: claim(270, Source::WeightClaim),
                ..props(claim(342, Source::TableCaption), 19, 5, 11)
            },
        },
        "G80_1" => Fixture {
            name: "G80_1",
            spec: spec(
                8,
                10,
                7,
                &[&[1, 4, 6, 9], &[0, 1, 2, 3, 6, 7, 8], &[0, 2, 3, 4, 8, 9], &[0, 6], &[0, 1, 2, 4, 6, 8, 9]],
            ),
            edge_table: Some(include_str!("../data/g80_1.txt")),
            labeling: Labeling::OffsetMajor,
            expected: Expected {
                type_class: claim(TypeClass::TypeI, Source::TypeClaim),
                ..props(claim(1640, Source::TableCaption), 41, 8, 20)
            },
        },
        "G80_2" => Fixture {
            name: "G80_2",
            spec: spec(
                8,
                10,
                3,
                &[&[4, 5, 6], &[0, 1, 2, 4, 5, 7, 9], &[0, 1, 5, 8, 9], &[0, 2, 3, 7], &[1, 2, 3, 4, 5, 6, 7, 8, 9]],
            ),
            edge_table: None,
            labeling: Labeling::OffsetMajor,
            expected: Expected {
                type_class: claim(TypeClass::TypeI, Source::TypeClaim),
                ..props(claim(1760, Source::Implied), 44, 7, 20)
            },
        },
        "G80_3" => Fixture {
            name: "G80_3",
            spec: spec(
                10,
                8,
                5,
                &[&[2, 3, 5, 6], &[3], &[2, 4, 6, 7], &[5, 6], &[0, 1, 2, 3, 4, 6], &[0, 2, 5, 6, 7]],
            ),
            edge_table: None,
            labeling: Labeling::OffsetMajor,
            expected: Expected {
                type_class: claim(TypeClass::TypeI, Source::TypeClaim),
                ..props(claim(1400, Source::Implied), 35, 9, 20)
            },
        },
        "G93" => Fixture {
            name: "G93",
            spec: spec(
                3,
                31,
                1,
                &[&[10, 12, 13, 15, 16, 18, 19, 21], &[4, 6, 7, 9, 12, 14, 15, 18, 19, 21]],
            ),
            edge_table: Some(include_str!("../data/g93.txt")),
            labeling: Labeling::OffsetMajor,
            expected: Expected {
                type_class: claim(TypeClass::TypeII, Source::TypeClaim),
                ..props(claim(1302, Source::TableCaption), 28, 4, 22)
            },
        },
        _ => return None,
    };
    Some(f)
}

pub fn all() -> Vec<Fixture> {
    NAMES.iter().map(|n| fixture(n).expect("listed fixture exists")).collect()
}
