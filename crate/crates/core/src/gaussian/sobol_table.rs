//! Direction numbers for the Sobol generator, dimensions 2 through 128.
//!
//! Values are the first rows of the Joe & Kuo `new-joe-kuo-6.21201` table
//! (S. Joe and F. Y. Kuo, "Constructing Sobol sequences with better
//! two-dimensional projections", SIAM J. Sci. Comput. 30, 2635-2654, 2008),
//! <https://web.maths.unsw.edu.au/~fkuo/sobol/>. Dimension 1 is implicit
//! (all initial direction numbers equal to 1).

pub(crate) struct DirectionEntry {
    /// Degree `s` of the primitive polynomial.
    pub degree: u32,
    /// Interior polynomial coefficients `a`, packed as bits.
    pub coeffs: u32,
    /// Initial direction numbers `m_1..m_s`.
    pub initial: &'static [u32],
}

pub(crate) const MAX_DIMENSION: usize = 128;

pub(crate) static DIRECTIONS: [DirectionEntry; 127] = [
    DirectionEntry { degree: 1, coeffs: 0, initial: &[1] },
    DirectionEntry { degree: 2, coeffs: 1, initial: &[1, 3] },
    DirectionEntry { degree: 3, coeffs: 1, initial: &[1, 3, 1] },
    DirectionEntry { degree: 3, coeffs: 2, initial: &[1, 1, 1] },
    DirectionEntry { degree: 4, coeffs: 1, initial: &[1, 1, 3, 3] },
    DirectionEntry { degree: 4, coeffs: 4, initial: &[1, 3, 5, 13] },
    DirectionEntry { degree: 5, coeffs: 2, initial: &[1, 1, 5, 5, 17] },
    DirectionEntry { degree: 5, coeffs: 4, initial: &[1, 1, 5, 5, 5] },
    DirectionEntry { degree: 5, coeffs: 7, initial: &[1, 1, 7, 11, 19] },
    DirectionEntry { degree: 5, coeffs: 11, initial: &[1, 1, 5, 1, 1] },
    DirectionEntry { degree: 5, coeffs: 13, initial: &[1, 1, 1, 3, 11] },
    DirectionEntry { degree: 5, coeffs: 14, initial: &[1, 3, 5, 5, 31] },
    DirectionEntry { degree: 6, coeffs: 1, initial: &[1, 3, 3, 9, 7, 49] },
    DirectionEntry { degree: 6, coeffs: 13, initial: &[1, 1, 1, 15, 21, 21] },
    DirectionEntry { degree: 6, coeffs: 16, initial: &[1, 3, 1, 13, 27, 49] },
    DirectionEntry { degree: 6, coeffs: 19, initial: &[1, 1, 1, 15, 7, 5] },
    DirectionEntry { degree: 6, coeffs: 22, initial: &[1, 3, 1, 15, 13, 25] },
    DirectionEntry { degree: 6, coeffs: 25, initial: &[1, 1, 5, 5, 19, 61] },
    DirectionEntry { degree: 7, coeffs: 1, initial: &[1, 3, 7, 11, 23, 15, 103] },
    DirectionEntry { degree: 7, coeffs: 4, initial: &[1, 3, 7, 13, 13, 15, 69] },
    DirectionEntry { degree: 7, coeffs: 7, initial: &[1, 1, 3, 13, 7, 35, 63] },
    DirectionEntry { degree: 7, coeffs: 8, initial: &[1, 3, 5, 9, 1, 25, 53] },
    DirectionEntry { degree: 7, coeffs: 14, initial: &[1, 3, 1, 13, 9, 35, 107] },
    DirectionEntry { degree: 7, coeffs: 19, initial: &[1, 3, 1, 5, 27, 61, 31] },
    DirectionEntry { degree: 7, coeffs: 21, initial: &[1, 1, 5, 11, 19, 41, 61] },
    DirectionEntry { degree: 7, coeffs: 28, initial: &[1, 3, 5, 3, 3, 13, 69] },
    DirectionEntry { degree: 7, coeffs: 31, initial: &[1, 1, 7, 13, 1, 19, 1] },
    DirectionEntry { degree: 7, coeffs: 32, initial: &[1, 3, 7, 5, 13, 19, 59] },
    DirectionEntry { degree: 7, coeffs: 37, initial: &[1, 1, 3, 9, 25, 29, 41] },
    DirectionEntry { degree: 7, coeffs: 41, initial: &[1, 3, 5, 13, 23, 1, 55] },
    DirectionEntry { degree: 7, coeffs: 42, initial: &[1, 3, 7, 3, 13, 59, 17] },
    DirectionEntry { degree: 7, coeffs: 50, initial: &[1, 3, 1, 3, 5, 53, 69] },
    DirectionEntry { degree: 7, coeffs: 55, initial: &[1, 1, 5, 5, 23, 33, 13] },
    DirectionEntry { degree: 7, coeffs: 56, initial: &[1, 1, 7, 7, 1, 61, 123] },
    DirectionEntry { degree: 7, coeffs: 59, initial: &[1, 1, 7, 9, 13, 61, 49] },
    DirectionEntry { degree: 7, coeffs: 62, initial: &[1, 3, 3, 5, 3, 55, 33] },
    DirectionEntry { degree: 8, coeffs: 14, initial: &[1, 3, 1, 15, 31, 13, 49, 245] },
    DirectionEntry { degree: 8, coeffs: 21, initial: &[1, 3, 5, 15, 31, 59, 63, 97] },
    DirectionEntry { degree: 8, coeffs: 22, initial: &[1, 3, 1, 11, 11, 11, 77, 249] },
    DirectionEntry { degree: 8, coeffs: 38, initial: &[1, 3, 1, 11, 27, 43, 71, 9] },
    DirectionEntry { degree: 8, coeffs: 47, initial: &[1, 1, 7, 15, 21, 11, 81, 45] },
    DirectionEntry { degree: 8, coeffs: 49, initial: &[1, 3, 7, 3, 25, 31, 65, 79] },
    DirectionEntry { degree: 8, coeffs: 50, initial: &[1, 3, 1, 1, 19, 11, 3, 205] },
    DirectionEntry { degree: 8, coeffs: 52, initial: &[1, 1, 5, 9, 19, 21, 29, 157] },
    DirectionEntry { degree: 8, coeffs: 56, initial: &[1, 3, 7, 11, 1, 33, 89, 185] },
    DirectionEntry { degree: 8, coeffs: 67, initial: &[1, 3, 3, 3, 15, 9, 79, 71] },
    DirectionEntry { degree: 8, coeffs: 70, initial: &[1, 3, 7, 11, 15, 39, 119, 27] },
    DirectionEntry { degree: 8, coeffs: 84, initial: &[1, 1, 3, 1, 11, 31, 97, 225] },
    DirectionEntry { degree: 8, coeffs: 97, initial: &[1, 1, 1, 3, 23, 43, 57, 177] },
    DirectionEntry { degree: 8, coeffs: 103, initial: &[1, 3, 7, 7, 17, 17, 37, 71] },
    DirectionEntry { degree: 8, coeffs: 115, initial: &[1, 3, 1, 5, 27, 63, 123, 213] },
    DirectionEntry { degree: 8, coeffs: 122, initial: &[1, 1, 3, 5, 11, 43, 53, 133] },
    DirectionEntry { degree: 9, coeffs: 8, initial: &[1, 3, 5, 5, 29, 17, 47, 173, 479] },
    DirectionEntry { degree: 9, coeffs: 13, initial: &[1, 3, 3, 11, 3, 1, 109, 9, 69] },
    DirectionEntry { degree: 9, coeffs: 16, initial: &[1, 1, 1, 5, 17, 39, 23, 5, 343] },
    DirectionEntry { degree: 9, coeffs: 22, initial: &[1, 3, 1, 5, 25, 15, 31, 103, 499] },
    DirectionEntry { degree: 9, coeffs: 25, initial: &[1, 1, 1, 11, 11, 17, 63, 105, 183] },
    DirectionEntry { degree: 9, coeffs: 44, initial: &[1, 1, 5, 11, 9, 29, 97, 231, 363] },
    DirectionEntry { degree: 9, coeffs: 47, initial: &[1, 1, 5, 15, 19, 45, 41, 7, 383] },
    DirectionEntry { degree: 9, coeffs: 52, initial: &[1, 3, 7, 7, 31, 19, 83, 137, 221] },
    DirectionEntry { degree: 9, coeffs: 55, initial: &[1, 1, 1, 3, 23, 15, 111, 223, 83] },
    DirectionEntry { degree: 9, coeffs: 59, initial: &[1, 1, 5, 13, 31, 15, 55, 25, 161] },
    DirectionEntry { degree: 9, coeffs: 62, initial: &[1, 1, 3, 13, 25, 47, 39, 87, 257] },
    DirectionEntry { degree: 9, coeffs: 67, initial: &[1, 1, 1, 11, 21, 53, 125, 249, 293] },
    DirectionEntry { degree: 9, coeffs: 74, initial: &[1, 1, 7, 11, 11, 7, 57, 79, 323] },
    DirectionEntry { degree: 9, coeffs: 81, initial: &[1, 1, 5, 5, 17, 13, 81, 3, 131] },
    DirectionEntry { degree: 9, coeffs: 82, initial: &[1, 1, 7, 13, 23, 7, 65, 251, 475] },
    DirectionEntry { degree: 9, coeffs: 87, initial: &[1, 3, 5, 1, 9, 43, 3, 149, 11] },
    DirectionEntry { degree: 9, coeffs: 91, initial: &[1, 1, 3, 13, 31, 13, 13, 255, 487] },
    DirectionEntry { degree: 9, coeffs: 94, initial: &[1, 3, 3, 1, 5, 63, 89, 91, 127] },
    DirectionEntry { degree: 9, coeffs: 103, initial: &[1, 1, 3, 3, 1, 19, 123, 127, 237] },
    DirectionEntry { degree: 9, coeffs: 104, initial: &[1, 1, 5, 7, 23, 31, 37, 243, 289] },
    DirectionEntry { degree: 9, coeffs: 109, initial: &[1, 1, 5, 11, 17, 53, 117, 183, 491] },
    DirectionEntry { degree: 9, coeffs: 122, initial: &[1, 1, 1, 5, 1, 13, 13, 209, 345] },
    DirectionEntry { degree: 9, coeffs: 124, initial: &[1, 1, 3, 15, 1, 57, 115, 7, 33] },
    DirectionEntry { degree: 9, coeffs: 137, initial: &[1, 3, 1, 11, 7, 43, 81, 207, 175] },
    DirectionEntry { degree: 9, coeffs: 138, initial: &[1, 3, 1, 1, 15, 27, 63, 255, 49] },
    DirectionEntry { degree: 9, coeffs: 143, initial: &[1, 3, 5, 3, 27, 61, 105, 171, 305] },
    DirectionEntry { degree: 9, coeffs: 145, initial: &[1, 1, 5, 3, 1, 3, 57, 249, 149] },
    DirectionEntry { degree: 9, coeffs: 152, initial: &[1, 1, 3, 5, 5, 57, 15, 13, 159] },
    DirectionEntry { degree: 9, coeffs: 157, initial: &[1, 1, 1, 11, 7, 11, 105, 141, 225] },
    DirectionEntry { degree: 9, coeffs: 167, initial: &[1, 3, 3, 5, 27, 59, 121, 101, 271] },
    DirectionEntry { degree: 9, coeffs: 173, initial: &[1, 3, 5, 9, 11, 49, 51, 59, 115] },
    DirectionEntry { degree: 9, coeffs: 176, initial: &[1, 1, 7, 1, 23, 45, 125, 71, 419] },
    DirectionEntry { degree: 9, coeffs: 181, initial: &[1, 1, 3, 5, 23, 5, 105, 109, 75] },
    DirectionEntry { degree: 9, coeffs: 182, initial: &[1, 1, 7, 15, 7, 11, 67, 121, 453] },
    DirectionEntry { degree: 9, coeffs: 185, initial: &[1, 3, 7, 3, 9, 13, 31, 27, 449] },
    DirectionEntry { degree: 9, coeffs: 191, initial: &[1, 3, 1, 15, 19, 39, 39, 89, 15] },
    DirectionEntry { degree: 9, coeffs: 194, initial: &[1, 1, 1, 1, 1, 33, 73, 145, 379] },
    DirectionEntry { degree: 9, coeffs: 199, initial: &[1, 3, 1, 15, 15, 43, 29, 13, 483] },
    DirectionEntry { degree: 9, coeffs: 218, initial: &[1, 1, 7, 3, 19, 27, 85, 131, 431] },
    DirectionEntry { degree: 9, coeffs: 220, initial: &[1, 3, 3, 3, 5, 35, 23, 195, 349] },
    DirectionEntry { degree: 9, coeffs: 227, initial: &[1, 3, 3, 7, 9, 27, 39, 59, 297] },
    DirectionEntry { degree: 9, coeffs: 229, initial: &[1, 1, 3, 9, 11, 17, 13, 241, 157] },
    DirectionEntry { degree: 9, coeffs: 230, initial: &[1, 3, 7, 15, 25, 57, 33, 189, 213] },
    DirectionEntry { degree: 9, coeffs: 234, initial: &[1, 1, 7, 1, 9, 55, 73, 83, 217] },
    DirectionEntry { degree: 9, coeffs: 236, initial: &[1, 3, 3, 13, 19, 27, 23, 113, 249] },
    DirectionEntry { degree: 9, coeffs: 241, initial: &[1, 3, 5, 3, 23, 43, 3, 253, 479] },
    DirectionEntry { degree: 9, coeffs: 244, initial: &[1, 1, 5, 5, 11, 5, 45, 117, 217] },
    DirectionEntry { degree: 9, coeffs: 253, initial: &[1, 3, 3, 7, 29, 37, 33, 123, 147] },
    DirectionEntry { degree: 10, coeffs: 4, initial: &[1, 3, 1, 15, 5, 5, 37, 227, 223, 459] },
    DirectionEntry { degree: 10, coeffs: 13, initial: &[1, 1, 7, 5, 5, 39, 63, 255, 135, 487] },
    DirectionEntry { degree: 10, coeffs: 19, initial: &[1, 3, 1, 7, 9, 7, 87, 249, 217, 599] },
    DirectionEntry { degree: 10, coeffs: 22, initial: &[1, 1, 3, 13, 9, 47, 7, 225, 363, 247] },
    DirectionEntry { degree: 10, coeffs: 50, initial: &[1, 3, 7, 13, 19, 13, 9, 67, 9, 737] },
    DirectionEntry { degree: 10, coeffs: 55, initial: &[1, 3, 5, 5, 19, 59, 7, 41, 319, 677] },
    DirectionEntry { degree: 10, coeffs: 64, initial: &[1, 1, 5, 3, 31, 63, 15, 43, 207, 789] },
    DirectionEntry { degree: 10, coeffs: 69, initial: &[1, 1, 7, 9, 13, 39, 3, 47, 497, 169] },
    DirectionEntry { degree: 10, coeffs: 98, initial: &[1, 3, 1, 7, 21, 17, 97, 19, 415, 905] },
    DirectionEntry { degree: 10, coeffs: 107, initial: &[1, 3, 7, 1, 3, 31, 71, 111, 165, 127] },
    DirectionEntry { degree: 10, coeffs: 115, initial: &[1, 1, 5, 11, 1, 61, 83, 119, 203, 847] },
    DirectionEntry { degree: 10, coeffs: 121, initial: &[1, 3, 3, 13, 9, 61, 19, 97, 47, 35] },
    DirectionEntry { degree: 10, coeffs: 127, initial: &[1, 1, 7, 7, 15, 29, 63, 95, 417, 469] },
    DirectionEntry { degree: 10, coeffs: 134, initial: &[1, 3, 1, 9, 25, 9, 71, 57, 213, 385] },
    DirectionEntry { degree: 10, coeffs: 140, initial: &[1, 3, 5, 13, 31, 47, 101, 57, 39, 341] },
    DirectionEntry { degree: 10, coeffs: 145, initial: &[1, 1, 3, 3, 31, 57, 125, 173, 365, 551] },
    DirectionEntry { degree: 10, coeffs: 152, initial: &[1, 3, 7, 1, 13, 57, 67, 157, 451, 707] },
    DirectionEntry { degree: 10, coeffs: 158, initial: &[1, 1, 1, 7, 21, 13, 105, 89, 429, 965] },
    DirectionEntry { degree: 10, coeffs: 161, initial: &[1, 1, 5, 9, 17, 51, 45, 119, 157, 141] },
    DirectionEntry { degree: 10, coeffs: 171, initial: &[1, 3, 7, 7, 13, 45, 91, 9, 129, 741] },
    DirectionEntry { degree: 10, coeffs: 181, initial: &[1, 3, 7, 1, 23, 57, 67, 141, 151, 571] },
    DirectionEntry { degree: 10, coeffs: 194, initial: &[1, 1, 3, 11, 17, 47, 93, 107, 375, 157] },
    DirectionEntry { degree: 10, coeffs: 199, initial: &[1, 3, 3, 5, 11, 21, 43, 51, 169, 915] },
    DirectionEntry { degree: 10, coeffs: 203, initial: &[1, 1, 5, 3, 15, 55, 101, 67, 455, 625] },
    DirectionEntry { degree: 10, coeffs: 208, initial: &[1, 3, 5, 9, 1, 23, 29, 47, 345, 595] },
    DirectionEntry { degree: 10, coeffs: 227, initial: &[1, 3, 7, 7, 5, 49, 29, 155, 323, 589] },
    DirectionEntry { degree: 10, coeffs: 242, initial: &[1, 3, 3, 7, 5, 41, 127, 61, 261, 717] },
];
