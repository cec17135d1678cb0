// Incidence matrices are given as one string per point; a digit is the
// multiplicity of the block in that column.

pub const FANO: [&str; 7] = ["1110000", "1001100", "1000011", "0101010", "0100101", "0011001", "0010110"];

/// Block permutations of the Fano lines, one per double coset.
pub const FANO_PERMS: [&str; 4] = ["()", "(6 7)", "(5 6 7)", "(3 4)(5 6 7)"];

/// Matrices obtained from the Fano lines with [`FANO_PERMS`], numerators over 2.
pub const FANO_R: [[[i64; 7]; 7]; 3] = [
    [
        [2, 0, 0, 0, 0, 0, 0],
        [0, 2, 0, 0, 0, 0, 0],
        [0, 0, 2, 0, 0, 0, 0],
        [0, 0, 0, 1, 1, 1, -1],
        [0, 0, 0, 1, 1, -1, 1],
        [0, 0, 0, 1, -1, 1, 1],
        [0, 0, 0, -1, 1, 1, 1],
    ],
    [
        [2, 0, 0, 0, 0, 0, 0],
        [0, 1, 1, 1, -1, 0, 0],
        [0, 1, 1, -1, 1, 0, 0],
        [0, 0, 0, 1, 1, 1, -1],
        [0, 0, 0, 1, 1, -1, 1],
        [0, 1, -1, 0, 0, 1, 1],
        [0, -1, 1, 0, 0, 1, 1],
    ],
    [
        [1, 1, 0, 1, 0, 0, -1],
        [1, 0, 1, 0, -1, 0, 1],
        [0, 1, 1, -1, 1, 0, 0],
        [1, -1, 0, 0, 1, 1, 0],
        [0, 0, 0, 1, 1, -1, 1],
        [0, 1, -1, 0, 0, 1, 1],
        [-1, 0, 1, 1, 0, 1, 0],
    ],
];

/// Lines of the affine plane of order 2.
pub const AG22: [&str; 4] = ["111000", "100110", "010101", "001011"];
pub const AG22_SWAP: &str = "(1 6)(2 5)(3 4)";

pub const WQH6: [&str; 6] =
    ["11110000000", "10001110000", "10000001110", "01001001001", "00100100101", "00010010011"];
pub const WQH6_SWAP: &str = "(1 11)";

pub const AH6: [&str; 6] = [
    "11111110000000",
    "11100001111000",
    "10011001100110",
    "10000110011110",
    "01010101010101",
    "01001010101101",
];
pub const AH6_PERM: &str = "(5 6 8)(7 10 9)";

/// Points and planes of the affine space of dimension 3 over the field of two elements.
pub const AG32: [&str; 8] = [
    "11111110000000",
    "11100001111000",
    "10011001100110",
    "10000110011110",
    "01010101010101",
    "01001010101101",
    "00110010110011",
    "00101101001011",
];

pub const AG32_PERMS: [&str; 14] = [
    "()",
    "(6 7)(8 9)",
    "(5 6 7)(8 10 9)",
    "(3 4)(5 6 7)(8 10 9)(11 12)",
    "(3 12)(5 10)(6 9)(7 8)",
    "(3 12)(5 10)(6 9)",
    "(7 8)",
    "(3 12)(5 10)(6 8)(7 9)",
    "(3 12)(5 9 7 10 6 8)",
    "(3 12)(5 10)(6 8 9 7)",
    "(6 7 9 8)",
    "(3 12)(5 9 7)(6 8 10)",
    "(5 6 7 10 9 8)",
    "(3 11 12 4)(5 9 7)(6 8 10)",
];

/// Denominators of the matrices in [`AG32_R`].
pub const AG32_DEN: [i64; 14] = [1, 2, 2, 2, 2, 4, 4, 2, 2, 4, 4, 4, 4, 4];

pub const AG32_R: [[[i64; 8]; 8]; 14] = [
    [
        [1, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [2, 0, 0, 0, 0, 0, 0, 0],
        [0, 2, 0, 0, 0, 0, 0, 0],
        [0, 0, 2, 0, 0, 0, 0, 0],
        [0, 0, 0, 2, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 1, 1, -1],
        [0, 0, 0, 0, 1, 1, -1, 1],
        [0, 0, 0, 0, 1, -1, 1, 1],
        [0, 0, 0, 0, -1, 1, 1, 1],
    ],
    [
        [2, 0, 0, 0, 0, 0, 0, 0],
        [0, 2, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 1, -1, 0, 0],
        [0, 0, 1, 1, -1, 1, 0, 0],
        [0, 0, 0, 0, 1, 1, 1, -1],
        [0, 0, 0, 0, 1, 1, -1, 1],
        [0, 0, 1, -1, 0, 0, 1, 1],
        [0, 0, -1, 1, 0, 0, 1, 1],
    ],
    [
        [2, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 1, 0, 1, 0, 0, -1],
        [0, 1, 0, 1, 0, -1, 0, 1],
        [0, 0, 1, 1, -1, 1, 0, 0],
        [0, 1, -1, 0, 0, 1, 1, 0],
        [0, 0, 0, 0, 1, 1, -1, 1],
        [0, 0, 1, -1, 0, 0, 1, 1],
        [0, -1, 0, 1, 1, 0, 1, 0],
    ],
    [
        [0, 1, 1, 0, 1, 0, 0, -1],
        [1, 0, 0, 1, 0, 1, -1, 0],
        [1, 0, 0, 1, 0, -1, 1, 0],
        [0, 1, 1, 0, -1, 0, 0, 1],
        [1, 0, 0, -1, 0, 1, 1, 0],
        [0, 1, -1, 0, 1, 0, 0, 1],
        [0, -1, 1, 0, 1, 0, 0, 1],
        [-1, 0, 0, 1, 0, 1, 1, 0],
    ],
    [
        [1, 1, 1, 1, 1, 1, 1, -3],
        [1, 1, 1, 1, 1, 1, -3, 1],
        [1, 1, 1, 1, 1, -3, 1, 1],
        [1, 1, 1, 1, -3, 1, 1, 1],
        [1, 1, 1, -3, 1, 1, 1, 1],
        [1, 1, -3, 1, 1, 1, 1, 1],
        [1, -3, 1, 1, 1, 1, 1, 1],
        [-3, 1, 1, 1, 1, 1, 1, 1],
    ],
    [
        [3, 1, 1, -1, 1, -1, -1, 1],
        [1, 3, -1, 1, -1, 1, 1, -1],
        [1, -1, 3, 1, -1, 1, 1, -1],
        [-1, 1, 1, 3, 1, -1, -1, 1],
        [1, -1, -1, 1, 3, 1, 1, -1],
        [-1, 1, 1, -1, 1, 3, -1, 1],
        [-1, 1, 1, -1, 1, -1, 3, 1],
        [1, -1, -1, 1, -1, 1, 1, 3],
    ],
    [
        [0, 1, 1, 0, 1, 0, 0, -1],
        [1, 0, 0, 1, 0, 1, -1, 0],
        [1, 0, 0, 1, 0, -1, 1, 0],
        [0, 1, 1, 0, -1, 0, 0, 1],
        [1, 0, 0, -1, 1, 0, 0, 1],
        [0, 1, -1, 0, 0, 1, 1, 0],
        [0, -1, 1, 0, 0, 1, 1, 0],
        [-1, 0, 0, 1, 1, 0, 0, 1],
    ],
    [
        [0, 1, 1, 0, 1, 0, 0, -1],
        [1, 0, 0, 1, 0, 1, -1, 0],
        [1, 0, 1, 0, -1, 0, 1, 0],
        [0, 1, 0, 1, 0, -1, 0, 1],
        [1, 0, 0, -1, 1, 0, 0, 1],
        [0, 1, -1, 0, 0, 1, 1, 0],
        [0, -1, 0, 1, 1, 0, 1, 0],
        [-1, 0, 1, 0, 0, 1, 0, 1],
    ],
    [
        [1, 1, 1, 1, 1, 1, 1, -3],
        [1, 1, 1, 1, 1, 1, -3, 1],
        [1, 1, 1, 1, 1, -3, 1, 1],
        [1, 1, 1, 1, -3, 1, 1, 1],
        [3, -1, -1, -1, 1, 1, 1, 1],
        [-1, 3, -1, -1, 1, 1, 1, 1],
        [-1, -1, 3, -1, 1, 1, 1, 1],
        [-1, -1, -1, 3, 1, 1, 1, 1],
    ],
    [
        [3, 1, 1, -1, 1, -1, -1, 1],
        [1, 3, -1, 1, -1, 1, 1, -1],
        [1, -1, 3, 1, -1, 1, 1, -1],
        [-1, 1, 1, 3, 1, -1, -1, 1],
        [-1, 1, 1, -1, 3, 1, 1, -1],
        [1, -1, -1, 1, 1, 3, -1, 1],
        [1, -1, -1, 1, 1, -1, 3, 1],
        [-1, 1, 1, -1, -1, 1, 1, 3],
    ],
    [
        [1, 1, 1, 1, 1, 1, 1, -3],
        [1, 1, 1, 1, 1, 1, -3, 1],
        [3, -1, 1, 1, -1, -1, 1, 1],
        [-1, 3, 1, 1, -1, -1, 1, 1],
        [1, 1, -1, -1, 3, -1, 1, 1],
        [1, 1, -1, -1, -1, 3, 1, 1],
        [-1, -1, 3, -1, 1, 1, 1, 1],
        [-1, -1, -1, 3, 1, 1, 1, 1],
    ],
    [
        [3, 1, 1, -1, 1, -1, -1, 1],
        [1, 3, -1, 1, -1, 1, 1, -1],
        [-1, 1, 3, 1, 1, -1, 1, -1],
        [1, -1, 1, 3, -1, 1, -1, 1],
        [1, -1, 1, -1, 1, 3, 1, -1],
        [-1, 1, -1, 1, 3, 1, -1, 1],
        [1, -1, -1, 1, 1, -1, 3, 1],
        [-1, 1, 1, -1, -1, 1, 1, 3],
    ],
    [
        [1, 1, 1, 1, 1, 1, 1, -3],
        [3, 1, 1, -1, 1, -1, -1, 1],
        [1, -1, 1, 3, -1, 1, -1, 1],
        [-1, 3, 1, 1, -1, -1, 1, 1],
        [-1, 1, -1, 1, 3, 1, -1, 1],
        [1, 1, -1, -1, -1, 3, 1, 1],
        [-1, -1, 3, -1, 1, 1, 1, 1],
        [1, -1, -1, 1, 1, -1, 3, 1],
    ],
];

pub const NEW7: [&str; 7] = [
    "111111111111111000000000000000",
    "111111100000000111111110000000",
    "111000011110000111100001111000",
    "111000000001111000011111111000",
    "100110011001100110011001100110",
    "010101010101010101010101010101",
    "001011001100110100110011001011",
];
pub const NEW7_PERM: &str = "(1 24)(2 20)(3 16)(4 14)(5 10)(7 30)(8 13)(11 29)(15 28)(17 27)(18 23)(21 26)";
pub const NEW7_R: [[i64; 7]; 7] = [
    [1, -1, -1, -1, 2, 2, 2],
    [-1, 1, 1, 1, -2, 2, 2],
    [-1, 1, 1, 1, 2, -2, 2],
    [-1, 1, 1, 1, 2, 2, -2],
    [2, -2, 2, 2, 0, 0, 0],
    [2, 2, -2, 2, 0, 0, 0],
    [2, 2, 2, -2, 0, 0, 0],
];

pub const NEW8: [&str; 8] = [
    "111221111222222000000000000000",
    "111221111000000222222000000000",
    "111200000222000222000111120000",
    "111020000200220200220111102000",
    "100201100020220200202110020110",
    "100021100220002022200110002110",
    "010201010200202020220101020101",
    "010021010022200220002101002101",
];
pub const NEW8_PERM: &str = "(4 5)(10 16)(15 21)(26 27)";
pub const NEW8_R: [[i64; 8]; 8] = [
    [2, 1, 0, 0, 1, -1, -1, 1],
    [1, 2, 0, 0, -1, 1, 1, -1],
    [0, 0, 2, 1, -1, 1, -1, 1],
    [0, 0, 1, 2, 1, -1, 1, -1],
    [1, -1, -1, 1, 1, 2, 0, 0],
    [-1, 1, 1, -1, 2, 1, 0, 0],
    [-1, 1, -1, 1, 0, 0, 1, 2],
    [1, -1, 1, -1, 0, 0, 2, 1],
];

/// Adjacency matrices on the eight points of [`NEW8`] for which the switch
/// does not factor through smaller known methods.
pub const NEW8_IRREDUCIBLE_AC: [&str; 10] = [
    "00000001 00000010 00011000 00100100 00100000 00010000 01000001 10000010",
    "00000001 00000010 00011000 00100100 00100011 00010011 01001101 10001110",
    "00000001 00000010 00011011 00100111 00100000 00010000 01110001 10110010",
    "00000001 00000010 00011011 00100111 00100011 00010011 01111101 10111110",
    "00000101 00001010 00000110 00001001 01010000 10100000 01100000 10010000",
    "00000101 00001010 00000110 00001001 01010011 10100011 01101100 10011100",
    "00001011 00000111 00010010 00100001 10000100 01001000 11100000 11010000",
    "00001011 00000111 00010010 00100001 10000111 01001011 11101100 11011100",
    "00001011 00000111 00011110 00101101 10110100 01111000 11100000 11010000",
    "00110101 00111010 11000110 11001001 01010011 10100011 01101100 10011100",
];

pub const PROP51_R: [[i64; 6]; 6] = [
    [2, 3, 3, -1, -1, -1],
    [3, 2, -3, 1, 1, 1],
    [3, -3, 2, 1, 1, 1],
    [-1, 1, 1, -2, 3, 3],
    [-1, 1, 1, 3, -2, 3],
    [-1, 1, 1, 3, 3, -2],
];

pub const LEVEL5_ROW: [i64; 8] = [3, 1, 2, -1, -2, 1, 2, -1];
pub const FANO_ROW: [i64; 7] = [-1, 1, 1, 0, 1, 0, 0];

/// Circulant forms of two of the switches obtainable from the lines of the
/// affine plane of order 3, numerators over 3.
pub const AG23_CIRCULANT_ROW: [i64; 9] = [2, 1, 0, -1, 1, 0, -1, 1, 0];
pub const AG23_BLOCK_ROWS: [[i64; 3]; 3] = [[2, 1, 0], [0, -1, 1], [0, -1, 1]];
