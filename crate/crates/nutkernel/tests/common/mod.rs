//! Hand-encoded example digraphs shared by the integration tests.
#![allow(dead_code)]

pub mod oracles;
pub mod sweeps;

use nutkernel::{Digraph, UndirectedGraph};

pub fn dg(n: usize, arcs: &[(usize, usize)]) -> Digraph {
    Digraph::from_arcs(n, arcs).expect("fixture arcs are valid")
}

/// Each listed pair is added in both directions.
fn with_pairs(n: usize, arcs: &[(usize, usize)], pairs: &[(usize, usize)]) -> Digraph {
    let mut all = arcs.to_vec();
    for &(u, v) in pairs {
        all.push((u, v));
        all.push((v, u));
    }
    dg(n, &all)
}

/// Smallest dextro-nut; kernel (1,1,1,-1), vertex 3 is a sink.
pub fn smallest_dextro() -> Digraph {
    dg(4, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])
}

/// Dextro-nut on 7 vertices with a vertex of in-degree 1.
pub fn dextro_with_leaf() -> Digraph {
    dg(
        7,
        &[
            (3, 4), (3, 6), (0, 3), (0, 4), (4, 1), (4, 6),
            (1, 5), (1, 6), (6, 0), (6, 5), (5, 0), (5, 2),
        ],
    )
}

pub const DEXTRO_WITH_LEAF_KERNEL: [i64; 7] = [1, -1, -1, 1, -1, -1, 1];

/// The unique ambi-nut on 7 vertices.
pub fn ambi_seven() -> Digraph {
    dg(
        7,
        &[
            (4, 6), (4, 2), (4, 1), (5, 4), (5, 0), (0, 4), (0, 3), (2, 5),
            (2, 6), (1, 5), (1, 3), (6, 0), (6, 3), (6, 1), (3, 2), (3, 5),
        ],
    )
}

pub const AMBI_SEVEN_KERNEL: [i64; 7] = [1, -2, 1, 1, -1, -1, 1];

/// A bi-nut on 7 vertices that is not an ambi-nut.
pub fn bi_not_ambi_seven() -> Digraph {
    dg(
        7,
        &[
            (0, 3), (0, 2), (2, 4), (4, 1), (1, 3), (3, 5), (3, 6), (6, 1),
            (1, 5), (5, 0), (6, 4), (2, 5), (6, 2), (5, 6), (6, 0), (4, 5),
        ],
    )
}

/// Labelled drawing of M1(6) (isomorphic to the formula instance).
pub fn m1_six_drawn() -> Digraph {
    dg(
        6,
        &[
            (1, 0), (2, 1), (3, 2), (4, 3), (5, 4), (0, 5),
            (2, 0), (3, 1), (4, 2), (5, 3), (0, 4), (1, 5),
        ],
    )
}

/// Labelled drawing of M2(6).
pub fn m2_six_drawn() -> Digraph {
    dg(
        6,
        &[
            (1, 0), (2, 1), (3, 2), (4, 3), (5, 4), (0, 5),
            (2, 0), (1, 3), (4, 2), (3, 5), (0, 4), (5, 1),
        ],
    )
}

/// 4-regular dextro-nuts on 6 vertices that are not bi-nuts; each has a sink.
pub fn quartic_dextro_a() -> Digraph {
    dg(
        6,
        &[
            (1, 0), (5, 0), (1, 2), (2, 3), (4, 3), (4, 5),
            (0, 2), (0, 4), (2, 4), (5, 1), (5, 3), (1, 3),
        ],
    )
}

pub const QUARTIC_DEXTRO_A_KERNEL: [i64; 6] = [-2, 1, 1, 1, -1, -1];

pub fn quartic_dextro_b() -> Digraph {
    dg(
        6,
        &[
            (0, 1), (0, 5), (2, 1), (2, 3), (4, 3), (5, 4),
            (0, 2), (4, 0), (4, 2), (1, 5), (5, 3), (1, 3),
        ],
    )
}

pub const QUARTIC_DEXTRO_B_KERNEL: [i64; 6] = [3, 1, -2, -1, 1, 1];

/// The five 4-regular ambi-nuts on 8 vertices (last three are M1, M2, M3).
pub fn quartic_ambi_eight() -> Vec<Digraph> {
    vec![
        dg(
            8,
            &[
                (0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 6), (3, 7), (3, 6),
                (4, 7), (4, 2), (5, 0), (5, 3), (6, 0), (6, 1), (7, 1), (7, 2),
            ],
        ),
        dg(
            8,
            &[
                (0, 3), (0, 5), (1, 5), (1, 7), (2, 4), (2, 6), (3, 1), (3, 6),
                (4, 0), (4, 3), (5, 2), (5, 7), (6, 0), (6, 1), (7, 2), (7, 4),
            ],
        ),
        dg(
            8,
            &[
                (0, 2), (0, 5), (1, 4), (1, 6), (2, 5), (2, 7), (3, 1), (3, 6),
                (4, 0), (4, 2), (5, 3), (5, 7), (6, 4), (6, 0), (7, 1), (7, 3),
            ],
        ),
        dg(
            8,
            &[
                (0, 2), (1, 4), (1, 6), (2, 5), (2, 7), (3, 1), (4, 0), (4, 2),
                (5, 7), (6, 4), (7, 1), (7, 3), (0, 6), (6, 3), (3, 5), (5, 0),
            ],
        ),
        dg(
            8,
            &[
                (0, 2), (1, 6), (2, 5), (3, 1), (4, 0), (5, 7), (6, 4), (7, 3),
                (0, 6), (6, 3), (3, 5), (5, 0), (4, 1), (1, 7), (7, 2), (2, 4),
            ],
        ),
    ]
}

pub const QUARTIC_AMBI_EIGHT_KERNELS: [[i64; 8]; 3] = [
    [1, -1, 1, -1, 1, -1, 1, -1],
    [1, -1, 1, -1, -1, 1, 1, -1],
    [1, -1, -1, 1, -1, 1, 1, -1],
];

/// Ambi-core digraphs of nullity greater than one: M3(6) drawn (nullity 3),
/// and two 7-vertex examples with nullities 4 and 2.
pub fn ambi_core_m3_six() -> Digraph {
    dg(
        6,
        &[
            (1, 0), (2, 1), (3, 2), (4, 3), (5, 4), (0, 5),
            (0, 2), (1, 3), (2, 4), (3, 5), (4, 0), (5, 1),
        ],
    )
}

pub fn ambi_core_nullity_four() -> Digraph {
    dg(
        7,
        &[
            (4, 6), (2, 4), (1, 4), (4, 5), (5, 0), (0, 4), (0, 3), (5, 2),
            (6, 2), (5, 1), (1, 3), (6, 0), (3, 6), (6, 1), (2, 3), (3, 5),
        ],
    )
}

pub fn ambi_core_nullity_two() -> Digraph {
    dg(
        7,
        &[
            (4, 6), (4, 2), (1, 4), (5, 4), (5, 0), (0, 4), (0, 3), (2, 5),
            (6, 2), (5, 1), (1, 3), (6, 0), (3, 6), (6, 1), (2, 3), (3, 5),
        ],
    )
}

/// A 9-vertex nut graph that is the underlying graph of no ambi-nut.
pub fn bad_core() -> UndirectedGraph {
    UndirectedGraph::from_edges(
        9,
        &[
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (1, 3), (1, 2), (1, 6), (6, 5), (6, 7),
            (6, 8), (2, 7), (2, 8), (4, 7), (4, 5), (3, 8), (3, 5), (5, 8), (8, 7), (7, 5),
        ],
    )
    .expect("valid edges")
}

pub const BAD_CORE_KERNEL: [i64; 9] = [-1, 3, -1, -1, -1, -1, 4, -1, -1];

/// The first Sciriha graph, viewed as a symmetric digraph.
pub fn sciriha_one_symmetric() -> Digraph {
    with_pairs(
        7,
        &[],
        &[(1, 4), (1, 6), (6, 4), (6, 3), (2, 6), (2, 5), (0, 3), (0, 5)],
    )
}

pub const SCIRIHA_ONE_KERNEL: [i64; 7] = [-1, -1, 1, 1, -1, -1, 1];

/// Ambi-nuts that use opposite arc pairs.
pub fn non_oriented_ambi() -> Vec<(Digraph, Vec<i64>)> {
    vec![
        (
            with_pairs(4, &[(0, 2), (2, 1), (3, 0), (1, 3)], &[(2, 3), (0, 1)]),
            vec![-1, -1, 1, 1],
        ),
        (
            with_pairs(
                6,
                &[(1, 0), (0, 2), (2, 1), (4, 3), (3, 5), (5, 4)],
                &[(0, 3), (1, 4), (2, 5)],
            ),
            vec![1, 1, 1, -1, -1, -1],
        ),
        (
            with_pairs(
                6,
                &[(3, 5), (0, 5), (5, 1), (5, 2), (1, 2), (1, 4), (3, 1), (0, 4)],
                &[(3, 0), (3, 4), (0, 2), (4, 2)],
            ),
            vec![1, -1, 1, -1, -1, 1],
        ),
        (
            with_pairs(
                6,
                &[(3, 5), (3, 1), (5, 2), (5, 1), (1, 4), (1, 2), (4, 3), (2, 4)],
                &[(5, 0), (2, 0), (0, 3), (0, 4)],
            ),
            vec![1, -2, 1, -1, -1, 1],
        ),
    ]
}

/// Inter-nuts that are not ambi-nuts, with their kernel dimensions.
pub fn inter_not_ambi_six_dim3() -> Digraph {
    dg(6, &[(0, 3), (0, 4), (4, 5), (4, 2), (5, 3), (5, 2), (1, 4), (1, 5)])
}

pub const INTER_SIX_DIM3_VECTOR: [i64; 6] = [-1, 1, -1, 1, -1, 1];

pub fn inter_not_ambi_six_dim2() -> Digraph {
    dg(
        6,
        &[
            (0, 4), (0, 3), (0, 2), (0, 5), (2, 4), (2, 5),
            (5, 1), (5, 3), (1, 2), (1, 4), (3, 1), (3, 4),
        ],
    )
}

pub const INTER_SIX_DIM2_VECTOR: [i64; 6] = [1, -1, -1, 1, 1, -1];

pub fn inter_not_ambi_sciriha_one() -> Digraph {
    dg(7, &[(1, 4), (1, 6), (6, 4), (6, 3), (2, 6), (2, 5), (0, 3), (0, 5)])
}

pub fn inter_not_ambi_sciriha_two() -> Digraph {
    dg(
        7,
        &[
            (0, 4), (0, 5), (0, 3), (0, 6), (6, 4), (6, 5),
            (3, 6), (3, 4), (2, 4), (2, 5), (1, 3), (1, 5),
        ],
    )
}

pub const INTER_SCIRIHA_TWO_VECTOR: [i64; 7] = [1, -1, -1, -1, -1, 1, 1];

pub fn inter_not_ambi_sciriha_three() -> Digraph {
    dg(
        7,
        &[
            (6, 1), (6, 2), (6, 3), (6, 4), (6, 5), (6, 0),
            (0, 3), (4, 1), (5, 2), (5, 0), (0, 4), (4, 5),
        ],
    )
}

pub const INTER_SCIRIHA_THREE_VECTOR: [i64; 7] = [-1, 1, 1, 1, -1, -1, 1];

/// Digraph with nullity 2 exhibiting all four deletion cases; vertex
/// labels 1..6 are indices 0..5.
pub fn deletion_cases() -> Digraph {
    dg(6, &[(0, 2), (4, 0), (1, 2), (3, 2), (4, 1), (3, 4), (3, 5), (5, 4)])
}

/// The same digraph without label 6; it is bipartite.
pub fn deletion_cases_bipartite() -> Digraph {
    dg(5, &[(0, 2), (4, 0), (1, 2), (3, 2), (4, 1), (3, 4)])
}

/// Two copies of the smallest dextro-nut glued so as to stay dextro-nut,
/// via a triangle hanging from vertex 2 of the leaf example.
pub fn dextro_coalescence_good() -> Digraph {
    dg(
        10,
        &[
            (3, 4), (3, 6), (0, 3), (0, 4), (4, 1), (4, 6), (1, 5), (1, 6), (6, 0), (6, 5),
            (5, 0), (5, 2), (7, 2), (8, 2), (9, 2), (7, 8), (8, 9), (9, 7),
        ],
    )
}

/// Gadget fixtures `(digraph, root, defining vector, demand numerator,
/// demand denominator)`.
pub fn gadget_fixtures() -> Vec<(Digraph, usize, Vec<i64>, i64, i64)> {
    vec![
        (
            dg(
                7,
                &[
                    (4, 1), (0, 4), (2, 4), (3, 2), (0, 3), (1, 3), (1, 5), (5, 2),
                    (5, 0), (6, 1), (6, 5), (6, 0), (4, 6), (3, 6), (2, 6),
                ],
            ),
            6,
            vec![1, -1, -1, 1, -1, -1, 1],
            1,
            1,
        ),
        (
            dg(
                7,
                &[
                    (3, 1), (5, 1), (5, 3), (4, 0), (4, 2), (0, 2), (0, 3), (1, 4),
                    (2, 5), (6, 0), (6, 4), (6, 5), (1, 6), (2, 6), (3, 6),
                ],
            ),
            6,
            vec![-1, 1, 1, -1, 1, 1, -1],
            1,
            1,
        ),
        (
            dg(
                6,
                &[
                    (0, 2), (5, 2), (4, 5), (4, 3), (3, 0), (5, 0),
                    (0, 4), (2, 4), (2, 3), (3, 5), (1, 4), (5, 1),
                ],
            ),
            1,
            vec![1, -2, 1, 1, -1, -1],
            -1,
            2,
        ),
        (
            dg(
                7,
                &[
                    (3, 1), (1, 4), (4, 0), (0, 3), (6, 0), (6, 1), (1, 5), (0, 5),
                    (6, 3), (3, 5), (5, 4), (4, 6), (5, 6), (2, 5), (6, 2),
                ],
            ),
            2,
            vec![1, 1, -3, 1, 1, -1, -1],
            -1,
            3,
        ),
        (
            dg(
                8,
                &[
                    (7, 1), (7, 2), (0, 7), (3, 7), (0, 3), (3, 6), (6, 0), (2, 6), (6, 1),
                    (5, 2), (5, 3), (1, 4), (4, 0), (7, 5), (7, 4), (1, 5), (2, 4),
                ],
            ),
            4,
            vec![1, -1, 1, -1, 1, -1, -1, 1],
            -1,
            1,
        ),
        (
            dg(
                7,
                &[
                    (2, 1), (2, 6), (2, 4), (1, 4), (6, 1), (4, 3), (6, 0), (3, 0), (4, 6), (6, 3),
                    (0, 4), (0, 5), (5, 4), (5, 2), (5, 1), (5, 6), (3, 5), (0, 2), (1, 3),
                ],
            ),
            5,
            vec![3, -2, 2, -1, 1, -3, 1],
            2,
            3,
        ),
    ]
}

/// Base digraphs with an integer eigenvalue whose eigenspaces for the
/// digraph and its reverse are spanned by one full vector.
pub fn base_fixtures() -> Vec<(Digraph, i64)> {
    vec![
        (
            dg(
                6,
                &[
                    (0, 3), (0, 2), (3, 2), (5, 4), (5, 1),
                    (1, 4), (0, 4), (2, 5), (5, 0), (4, 2),
                ],
            ),
            -1,
        ),
        (
            dg(
                7,
                &[(5, 0), (0, 4), (4, 1), (1, 6), (6, 5), (3, 5), (6, 3), (6, 2), (2, 5)],
            ),
            -1,
        ),
        (
            dg(
                7,
                &[
                    (0, 3), (0, 6), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5),
                    (4, 0), (4, 5), (4, 6), (5, 6), (6, 1), (6, 2), (6, 3),
                ],
            ),
            -1,
        ),
        (
            dg(
                6,
                &[
                    (0, 3), (0, 2), (3, 2), (5, 4), (1, 5),
                    (4, 1), (0, 4), (5, 2), (5, 0), (2, 4),
                ],
            ),
            -1,
        ),
        (
            dg(
                7,
                &[(5, 0), (0, 4), (4, 1), (1, 6), (5, 6), (5, 3), (3, 6), (6, 2), (2, 5)],
            ),
            -1,
        ),
        (
            dg(
                7,
                &[
                    (0, 3), (0, 6), (1, 6), (2, 6), (3, 5), (4, 0), (4, 5),
                    (4, 1), (4, 2), (5, 1), (5, 2), (6, 4), (6, 5), (6, 3),
                ],
            ),
            -1,
        ),
        (
            dg(
                8,
                &[
                    (0, 4), (2, 6), (0, 2), (2, 4), (4, 6), (6, 0), (3, 7), (1, 5),
                    (3, 5), (5, 7), (7, 1), (1, 3), (3, 6), (0, 5), (2, 7), (1, 4),
                ],
            ),
            1,
        ),
        (
            dg(
                8,
                &[
                    (4, 6), (6, 2), (4, 0), (0, 2), (2, 4), (1, 6), (6, 3), (7, 0),
                    (0, 5), (1, 3), (3, 5), (5, 7), (7, 1), (7, 3), (1, 5),
                ],
            ),
            1,
        ),
        (
            dg(
                8,
                &[
                    (4, 5), (5, 1), (1, 6), (3, 6), (0, 3), (7, 0), (2, 7),
                    (2, 4), (5, 2), (1, 4), (6, 2), (7, 1), (6, 0), (3, 7),
                ],
            ),
            1,
        ),
        (
            dg(
                8,
                &[
                    (4, 5), (2, 4), (5, 2), (5, 7), (6, 4), (6, 7), (7, 0), (3, 6),
                    (0, 3), (6, 0), (3, 7), (5, 1), (1, 6), (7, 1), (1, 4),
                ],
            ),
            1,
        ),
        (
            dg(
                8,
                &[
                    (7, 4), (4, 6), (6, 5), (5, 7), (7, 3), (3, 5),
                    (7, 2), (2, 5), (6, 1), (1, 4), (6, 0), (0, 4),
                ],
            ),
            1,
        ),
        (
            dg(
                7,
                &[
                    (0, 5), (4, 0), (3, 4), (3, 6), (5, 4), (5, 3), (0, 3),
                    (4, 6), (6, 0), (6, 2), (6, 1), (2, 5), (1, 5),
                ],
            ),
            2,
        ),
        (
            dg(
                7,
                &[
                    (5, 0), (0, 4), (3, 4), (3, 6), (4, 5), (5, 3), (0, 3),
                    (4, 6), (6, 0), (6, 2), (6, 1), (2, 5), (1, 5),
                ],
            ),
            2,
        ),
        (
            dg(
                8,
                &[
                    (6, 5), (5, 7), (6, 4), (4, 7), (7, 0), (0, 6), (7, 3),
                    (3, 6), (7, 2), (2, 6), (7, 1), (1, 6), (6, 7),
                ],
            ),
            2,
        ),
    ]
}
