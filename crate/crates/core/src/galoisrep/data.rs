//! Matrices of the four generators of `Gal(L/Q)` acting on NS, as printed: the 8×8 set on
//! the lines `v1..v8` of the quotient del Pezzo surface, the 19×19 set on the Dwork basis.

#[rustfmt::skip]
pub const M8: [[[i8; 8]; 8]; 4] = [
    // sigma_I
    [
        [-1,  0,  0,  0,  0,  0, -1, -1],
        [ 0, -1,  0,  0,  0,  0, -1, -1],
        [ 0,  0, -1,  0,  0,  0, -1, -1],
        [ 0,  0,  0,  1,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  1,  0,  0,  0],
        [ 0,  0,  0,  0,  0, -1, -1, -1],
        [-1, -1, -1,  0,  0, -1, -1, -2],
        [ 1,  1,  1,  0,  0,  1,  2,  3],
    ],
    // sigma_2
    [
        [ 0, -1, -1, -1, -1, -1,  0, -2],
        [-1,  0, -1, -1, -1, -1,  0, -2],
        [-1, -1, -2, -1, -1, -1, -1, -3],
        [-1, -1, -1, -2, -1, -1, -1, -3],
        [-1, -1, -1, -1, -2, -1, -1, -3],
        [-1, -1, -1, -1, -1, -2, -1, -3],
        [ 0,  0, -1, -1, -1, -1, -1, -2],
        [ 2,  2,  3,  3,  3,  3,  2,  7],
    ],
    // sigma_plus
    [
        [-1,  0, -1, -1, -1, -1,  0, -2],
        [ 0, -1, -1, -1, -1, -1,  0, -2],
        [-1, -1, -2, -1, -1, -1, -1, -3],
        [-1, -1, -1, -2, -1, -1, -1, -3],
        [-1, -1, -1, -1, -2, -1, -1, -3],
        [-1, -1, -1, -1, -1, -2, -1, -3],
        [ 0,  0, -1, -1, -1, -1, -1, -2],
        [ 2,  2,  3,  3,  3,  3,  2,  7],
    ],
    // sigma_minus
    [
        [-1, -2, -1, -1, -1, -1, -1, -3],
        [-2, -1, -1, -1, -1, -1, -1, -3],
        [-1, -1, -2, -1, -1, -1, -1, -3],
        [-1, -1, -1, -2, -1, -1, -1, -3],
        [-1, -1, -1, -1, -2, -1, -1, -3],
        [-1, -1, -1, -1, -1, -2, -1, -3],
        [-1, -1, -1, -1, -1, -1, -2, -3],
        [ 3,  3,  3,  3,  3,  3,  3,  8],
    ],
];

#[rustfmt::skip]
pub const M19: [[[i8; 19]; 19]; 4] = [
    // sigma_I
    [
        [-1,  0,  0,  0,  0,  0, -1, -1,  0,  0,  0,  0, -1, -1, -1,  0, -1, -2, -1],
        [ 0, -1,  0,  0,  0,  0, -1, -1,  0,  0,  0,  0, -1, -1, -1,  0, -1, -2, -1],
        [ 0,  0, -1,  0,  0,  0, -1, -1,  0,  0,  0,  0, -1, -1, -1,  0, -1, -2, -1],
        [ 0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0, -1, -1, -1,  0, -1, -3, -1],
        [ 0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1, -1],
        [ 0,  0,  0,  0,  0, -1, -1, -1,  0,  0,  0,  0, -1, -1, -1,  0, -1, -2, -1],
        [-1, -1, -1,  0,  0, -1, -1, -2, -1,  0,  0, -1,  0,  0,  0,  0,  0, -2, -1],
        [ 1,  1,  1,  0,  0,  1,  2,  3,  1,  0,  0,  1,  2,  2,  2,  0,  2,  6,  3],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0, -1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  1,  1,  1,  0,  1,  1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0, -2,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1],
    ],
    // sigma_2
    [
        [ 0, -1, -1, -1, -1, -1,  0, -2, -1, -1, -1, -1,  0,  0, -1, -1, -1,  1, -1],
        [-1,  0, -1, -1, -1, -1,  0, -2, -1, -1, -1, -1,  0,  0, -1, -1, -1,  1, -1],
        [-1, -1, -2, -1, -1, -1, -1, -3, -1, -1, -1, -1,  0,  0, -1, -1, -1,  1, -1],
        [-1, -1, -1, -2, -1, -1, -1, -3, -1, -1, -1, -1,  0,  0, -1, -1, -1,  2, -1],
        [-1, -1, -1, -1, -2, -1, -1, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1,  0,  0],
        [-1, -1, -1, -1, -1, -2, -1, -3, -1, -1, -1, -1,  0,  0, -1, -1, -1,  1, -2],
        [ 0,  0, -1, -1, -1, -1, -1, -2, -1, -1, -1, -1, -1, -1, -1, -1, -1,  1,  0],
        [ 2,  2,  3,  3,  3,  3,  2,  7,  3,  3,  3,  3,  1,  1,  3,  3,  3, -3,  2],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0,  0,  1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0, -1, -1,  0,  0,  0, -1,  1],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0,  1],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  2,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0, -2],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1],
    ],
    // sigma_plus
    [
        [-1,  0, -1, -1, -1, -1,  0, -2, -1, -1, -1, -1,  0,  0, -1, -1, -1,  0, -2],
        [ 0, -1, -1, -1, -1, -1,  0, -2, -1, -1, -1, -1,  0,  0, -1, -1, -1,  0, -2],
        [-1, -1, -2, -1, -1, -1, -1, -3, -1, -1, -1, -1,  0,  0, -1, -1, -1, -1, -3],
        [-1, -1, -1, -2, -1, -1, -1, -3, -1, -1, -1, -1,  0,  0, -1, -1, -1, -1, -4],
        [-1, -1, -1, -1, -2, -1, -1, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1],
        [-1, -1, -1, -1, -1, -2, -1, -3, -1, -1, -1, -1,  0,  0, -1, -1, -1, -1, -4],
        [ 0,  0, -1, -1, -1, -1, -1, -2, -1, -1, -1, -1, -1, -1, -1, -1, -1,  0, -1],
        [ 2,  2,  3,  3,  3,  3,  2,  7,  3,  3,  3,  3,  1,  1,  3,  3,  3,  2,  7],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0,  0,  0, -1],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0, -1, -1,  0,  0,  0,  0,  2],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0,  1],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0, -2],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0, -2],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1, -2],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1],
    ],
    // sigma_minus
    [
        [-1, -2, -1, -1, -1, -1, -1, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1,  0,  0],
        [-2, -1, -1, -1, -1, -1, -1, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1,  0,  0],
        [-1, -1, -2, -1, -1, -1, -1, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1,  1,  1],
        [-1, -1, -1, -2, -1, -1, -1, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1,  2,  2],
        [-1, -1, -1, -1, -2, -1, -1, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1,  0,  0],
        [-1, -1, -1, -1, -1, -2, -1, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1,  1,  1],
        [-1, -1, -1, -1, -1, -1, -2, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1,  0,  0],
        [ 3,  3,  3,  3,  3,  3,  3,  8,  3,  3,  3,  3,  3,  3,  3,  3,  3, -2, -2],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0,  0,  1,  1],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0, -1, -1],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  2,  2],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  2],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1],
    ],
];

/// FNV-1a over the entries (as bytes) of `M8` then `M19`, row-major.
pub const CHECKSUM: u64 = 0x2db9b8ec95815699;
