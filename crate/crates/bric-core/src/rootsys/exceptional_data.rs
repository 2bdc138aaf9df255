//! Positive roots of the exceptional root systems in simple-root
//! coordinates, with a `true` flag on long roots (F4, G2).
//!
//! Node numbering: E6 chain 1-3-4-5-6 with 2 on 4; E7 chain 1-3-4-5-6-7
//! with 2 on 5; E8 chain 1-3-4-5-6-7-8 with 2 on 6; F4 chain 1-2=>3-4
//! (1,2 long); G2 with node 1 short.

pub(super) const E6_POS: &[([i64; 6], bool)] = &[
    ([0, 0, 0, 0, 0, 1], false),
    ([0, 0, 0, 0, 1, 0], false),
    ([0, 0, 0, 1, 0, 0], false),
    ([0, 0, 1, 0, 0, 0], false),
    ([0, 1, 0, 0, 0, 0], false),
    ([1, 0, 0, 0, 0, 0], false),
    ([0, 0, 0, 0, 1, 1], false),
    ([0, 0, 0, 1, 1, 0], false),
    ([0, 0, 1, 1, 0, 0], false),
    ([0, 1, 0, 1, 0, 0], false),
    ([1, 0, 1, 0, 0, 0], false),
    ([0, 0, 0, 1, 1, 1], false),
    ([0, 0, 1, 1, 1, 0], false),
    ([0, 1, 0, 1, 1, 0], false),
    ([0, 1, 1, 1, 0, 0], false),
    ([1, 0, 1, 1, 0, 0], false),
    ([0, 0, 1, 1, 1, 1], false),
    ([0, 1, 0, 1, 1, 1], false),
    ([0, 1, 1, 1, 1, 0], false),
    ([1, 0, 1, 1, 1, 0], false),
    ([1, 1, 1, 1, 0, 0], false),
    ([0, 1, 1, 1, 1, 1], false),
    ([0, 1, 1, 2, 1, 0], false),
    ([1, 0, 1, 1, 1, 1], false),
    ([1, 1, 1, 1, 1, 0], false),
    ([0, 1, 1, 2, 1, 1], false),
    ([1, 1, 1, 1, 1, 1], false),
    ([1, 1, 1, 2, 1, 0], false),
    ([0, 1, 1, 2, 2, 1], false),
    ([1, 1, 1, 2, 1, 1], false),
    ([1, 1, 2, 2, 1, 0], false),
    ([1, 1, 1, 2, 2, 1], false),
    ([1, 1, 2, 2, 1, 1], false),
    ([1, 1, 2, 2, 2, 1], false),
    ([1, 1, 2, 3, 2, 1], false),
    ([1, 2, 2, 3, 2, 1], false),
];

pub(super) const E7_POS: &[([i64; 7], bool)] = &[
    ([0, 0, 0, 0, 0, 0, 1], false),
    ([0, 0, 0, 0, 0, 1, 0], false),
    ([0, 0, 0, 0, 1, 0, 0], false),
    ([0, 0, 0, 1, 0, 0, 0], false),
    ([0, 0, 1, 0, 0, 0, 0], false),
    ([0, 1, 0, 0, 0, 0, 0], false),
    ([1, 0, 0, 0, 0, 0, 0], false),
    ([0, 0, 0, 0, 0, 1, 1], false),
    ([0, 0, 0, 0, 1, 1, 0], false),
    ([0, 0, 0, 1, 1, 0, 0], false),
    ([0, 0, 1, 1, 0, 0, 0], false),
    ([0, 1, 0, 0, 1, 0, 0], false),
    ([1, 0, 1, 0, 0, 0, 0], false),
    ([0, 0, 0, 0, 1, 1, 1], false),
    ([0, 0, 0, 1, 1, 1, 0], false),
    ([0, 0, 1, 1, 1, 0, 0], false),
    ([0, 1, 0, 0, 1, 1, 0], false),
    ([0, 1, 0, 1, 1, 0, 0], false),
    ([1, 0, 1, 1, 0, 0, 0], false),
    ([0, 0, 0, 1, 1, 1, 1], false),
    ([0, 0, 1, 1, 1, 1, 0], false),
    ([0, 1, 0, 0, 1, 1, 1], false),
    ([0, 1, 0, 1, 1, 1, 0], false),
    ([0, 1, 1, 1, 1, 0, 0], false),
    ([1, 0, 1, 1, 1, 0, 0], false),
    ([0, 0, 1, 1, 1, 1, 1], false),
    ([0, 1, 0, 1, 1, 1, 1], false),
    ([0, 1, 0, 1, 2, 1, 0], false),
    ([0, 1, 1, 1, 1, 1, 0], false),
    ([1, 0, 1, 1, 1, 1, 0], false),
    ([1, 1, 1, 1, 1, 0, 0], false),
    ([0, 1, 0, 1, 2, 1, 1], false),
    ([0, 1, 1, 1, 1, 1, 1], false),
    ([0, 1, 1, 1, 2, 1, 0], false),
    ([1, 0, 1, 1, 1, 1, 1], false),
    ([1, 1, 1, 1, 1, 1, 0], false),
    ([0, 1, 0, 1, 2, 2, 1], false),
    ([0, 1, 1, 1, 2, 1, 1], false),
    ([0, 1, 1, 2, 2, 1, 0], false),
    ([1, 1, 1, 1, 1, 1, 1], false),
    ([1, 1, 1, 1, 2, 1, 0], false),
    ([0, 1, 1, 1, 2, 2, 1], false),
    ([0, 1, 1, 2, 2, 1, 1], false),
    ([1, 1, 1, 1, 2, 1, 1], false),
    ([1, 1, 1, 2, 2, 1, 0], false),
    ([0, 1, 1, 2, 2, 2, 1], false),
    ([1, 1, 1, 1, 2, 2, 1], false),
    ([1, 1, 1, 2, 2, 1, 1], false),
    ([1, 1, 2, 2, 2, 1, 0], false),
    ([0, 1, 1, 2, 3, 2, 1], false),
    ([1, 1, 1, 2, 2, 2, 1], false),
    ([1, 1, 2, 2, 2, 1, 1], false),
    ([0, 2, 1, 2, 3, 2, 1], false),
    ([1, 1, 1, 2, 3, 2, 1], false),
    ([1, 1, 2, 2, 2, 2, 1], false),
    ([1, 1, 2, 2, 3, 2, 1], false),
    ([1, 2, 1, 2, 3, 2, 1], false),
    ([1, 1, 2, 3, 3, 2, 1], false),
    ([1, 2, 2, 2, 3, 2, 1], false),
    ([1, 2, 2, 3, 3, 2, 1], false),
    ([1, 2, 2, 3, 4, 2, 1], false),
    ([1, 2, 2, 3, 4, 3, 1], false),
    ([1, 2, 2, 3, 4, 3, 2], false),
];

pub(super) const E8_POS: &[([i64; 8], bool)] = &[
    ([0, 0, 0, 0, 0, 0, 0, 1], false),
    ([0, 0, 0, 0, 0, 0, 1, 0], false),
    ([0, 0, 0, 0, 0, 1, 0, 0], false),
    ([0, 0, 0, 0, 1, 0, 0, 0], false),
    ([0, 0, 0, 1, 0, 0, 0, 0], false),
    ([0, 0, 1, 0, 0, 0, 0, 0], false),
    ([0, 1, 0, 0, 0, 0, 0, 0], false),
    ([1, 0, 0, 0, 0, 0, 0, 0], false),
    ([0, 0, 0, 0, 0, 0, 1, 1], false),
    ([0, 0, 0, 0, 0, 1, 1, 0], false),
    ([0, 0, 0, 0, 1, 1, 0, 0], false),
    ([0, 0, 0, 1, 1, 0, 0, 0], false),
    ([0, 0, 1, 1, 0, 0, 0, 0], false),
    ([0, 1, 0, 0, 0, 1, 0, 0], false),
    ([1, 0, 1, 0, 0, 0, 0, 0], false),
    ([0, 0, 0, 0, 0, 1, 1, 1], false),
    ([0, 0, 0, 0, 1, 1, 1, 0], false),
    ([0, 0, 0, 1, 1, 1, 0, 0], false),
    ([0, 0, 1, 1, 1, 0, 0, 0], false),
    ([0, 1, 0, 0, 0, 1, 1, 0], false),
    ([0, 1, 0, 0, 1, 1, 0, 0], false),
    ([1, 0, 1, 1, 0, 0, 0, 0], false),
    ([0, 0, 0, 0, 1, 1, 1, 1], false),
    ([0, 0, 0, 1, 1, 1, 1, 0], false),
    ([0, 0, 1, 1, 1, 1, 0, 0], false),
    ([0, 1, 0, 0, 0, 1, 1, 1], false),
    ([0, 1, 0, 0, 1, 1, 1, 0], false),
    ([0, 1, 0, 1, 1, 1, 0, 0], false),
    ([1, 0, 1, 1, 1, 0, 0, 0], false),
    ([0, 0, 0, 1, 1, 1, 1, 1], false),
    ([0, 0, 1, 1, 1, 1, 1, 0], false),
    ([0, 1, 0, 0, 1, 1, 1, 1], false),
    ([0, 1, 0, 0, 1, 2, 1, 0], false),
    ([0, 1, 0, 1, 1, 1, 1, 0], false),
    ([0, 1, 1, 1, 1, 1, 0, 0], false),
    ([1, 0, 1, 1, 1, 1, 0, 0], false),
    ([0, 0, 1, 1, 1, 1, 1, 1], false),
    ([0, 1, 0, 0, 1, 2, 1, 1], false),
    ([0, 1, 0, 1, 1, 1, 1, 1], false),
    ([0, 1, 0, 1, 1, 2, 1, 0], false),
    ([0, 1, 1, 1, 1, 1, 1, 0], false),
    ([1, 0, 1, 1, 1, 1, 1, 0], false),
    ([1, 1, 1, 1, 1, 1, 0, 0], false),
    ([0, 1, 0, 0, 1, 2, 2, 1], false),
    ([0, 1, 0, 1, 1, 2, 1, 1], false),
    ([0, 1, 0, 1, 2, 2, 1, 0], false),
    ([0, 1, 1, 1, 1, 1, 1, 1], false),
    ([0, 1, 1, 1, 1, 2, 1, 0], false),
    ([1, 0, 1, 1, 1, 1, 1, 1], false),
    ([1, 1, 1, 1, 1, 1, 1, 0], false),
    ([0, 1, 0, 1, 1, 2, 2, 1], false),
    ([0, 1, 0, 1, 2, 2, 1, 1], false),
    ([0, 1, 1, 1, 1, 2, 1, 1], false),
    ([0, 1, 1, 1, 2, 2, 1, 0], false),
    ([1, 1, 1, 1, 1, 1, 1, 1], false),
    ([1, 1, 1, 1, 1, 2, 1, 0], false),
    ([0, 1, 0, 1, 2, 2, 2, 1], false),
    ([0, 1, 1, 1, 1, 2, 2, 1], false),
    ([0, 1, 1, 1, 2, 2, 1, 1], false),
    ([0, 1, 1, 2, 2, 2, 1, 0], false),
    ([1, 1, 1, 1, 1, 2, 1, 1], false),
    ([1, 1, 1, 1, 2, 2, 1, 0], false),
    ([0, 1, 0, 1, 2, 3, 2, 1], false),
    ([0, 1, 1, 1, 2, 2, 2, 1], false),
    ([0, 1, 1, 2, 2, 2, 1, 1], false),
    ([1, 1, 1, 1, 1, 2, 2, 1], false),
    ([1, 1, 1, 1, 2, 2, 1, 1], false),
    ([1, 1, 1, 2, 2, 2, 1, 0], false),
    ([0, 1, 1, 1, 2, 3, 2, 1], false),
    ([0, 1, 1, 2, 2, 2, 2, 1], false),
    ([0, 2, 0, 1, 2, 3, 2, 1], false),
    ([1, 1, 1, 1, 2, 2, 2, 1], false),
    ([1, 1, 1, 2, 2, 2, 1, 1], false),
    ([1, 1, 2, 2, 2, 2, 1, 0], false),
    ([0, 1, 1, 2, 2, 3, 2, 1], false),
    ([0, 2, 1, 1, 2, 3, 2, 1], false),
    ([1, 1, 1, 1, 2, 3, 2, 1], false),
    ([1, 1, 1, 2, 2, 2, 2, 1], false),
    ([1, 1, 2, 2, 2, 2, 1, 1], false),
    ([0, 1, 1, 2, 3, 3, 2, 1], false),
    ([0, 2, 1, 2, 2, 3, 2, 1], false),
    ([1, 1, 1, 2, 2, 3, 2, 1], false),
    ([1, 1, 2, 2, 2, 2, 2, 1], false),
    ([1, 2, 1, 1, 2, 3, 2, 1], false),
    ([0, 2, 1, 2, 3, 3, 2, 1], false),
    ([1, 1, 1, 2, 3, 3, 2, 1], false),
    ([1, 1, 2, 2, 2, 3, 2, 1], false),
    ([1, 2, 1, 2, 2, 3, 2, 1], false),
    ([0, 2, 1, 2, 3, 4, 2, 1], false),
    ([1, 1, 2, 2, 3, 3, 2, 1], false),
    ([1, 2, 1, 2, 3, 3, 2, 1], false),
    ([1, 2, 2, 2, 2, 3, 2, 1], false),
    ([0, 2, 1, 2, 3, 4, 3, 1], false),
    ([1, 1, 2, 3, 3, 3, 2, 1], false),
    ([1, 2, 1, 2, 3, 4, 2, 1], false),
    ([1, 2, 2, 2, 3, 3, 2, 1], false),
    ([0, 2, 1, 2, 3, 4, 3, 2], false),
    ([1, 2, 1, 2, 3, 4, 3, 1], false),
    ([1, 2, 2, 2, 3, 4, 2, 1], false),
    ([1, 2, 2, 3, 3, 3, 2, 1], false),
    ([1, 2, 1, 2, 3, 4, 3, 2], false),
    ([1, 2, 2, 2, 3, 4, 3, 1], false),
    ([1, 2, 2, 3, 3, 4, 2, 1], false),
    ([1, 2, 2, 2, 3, 4, 3, 2], false),
    ([1, 2, 2, 3, 3, 4, 3, 1], false),
    ([1, 2, 2, 3, 4, 4, 2, 1], false),
    ([1, 2, 2, 3, 3, 4, 3, 2], false),
    ([1, 2, 2, 3, 4, 4, 3, 1], false),
    ([1, 2, 2, 3, 4, 4, 3, 2], false),
    ([1, 2, 2, 3, 4, 5, 3, 1], false),
    ([1, 2, 2, 3, 4, 5, 3, 2], false),
    ([1, 3, 2, 3, 4, 5, 3, 1], false),
    ([1, 2, 2, 3, 4, 5, 4, 2], false),
    ([1, 3, 2, 3, 4, 5, 3, 2], false),
    ([1, 3, 2, 3, 4, 5, 4, 2], false),
    ([1, 3, 2, 3, 4, 6, 4, 2], false),
    ([1, 3, 2, 3, 5, 6, 4, 2], false),
    ([1, 3, 2, 4, 5, 6, 4, 2], false),
    ([1, 3, 3, 4, 5, 6, 4, 2], false),
    ([2, 3, 3, 4, 5, 6, 4, 2], false),
];

pub(super) const F4_POS: &[([i64; 4], bool)] = &[
    ([0, 0, 0, 1], false),
    ([0, 0, 1, 0], false),
    ([0, 1, 0, 0], true),
    ([1, 0, 0, 0], true),
    ([0, 0, 1, 1], false),
    ([0, 1, 1, 0], false),
    ([1, 1, 0, 0], true),
    ([0, 1, 1, 1], false),
    ([0, 1, 2, 0], true),
    ([1, 1, 1, 0], false),
    ([0, 1, 2, 1], false),
    ([1, 1, 1, 1], false),
    ([1, 1, 2, 0], true),
    ([0, 1, 2, 2], true),
    ([1, 1, 2, 1], false),
    ([1, 2, 2, 0], true),
    ([1, 1, 2, 2], true),
    ([1, 2, 2, 1], false),
    ([1, 2, 2, 2], true),
    ([1, 2, 3, 1], false),
    ([1, 2, 3, 2], false),
    ([1, 2, 4, 2], true),
    ([1, 3, 4, 2], true),
    ([2, 3, 4, 2], true),
];

pub(super) const G2_POS: &[([i64; 2], bool)] = &[
    ([0, 1], true),
    ([1, 0], false),
    ([1, 1], false),
    ([2, 1], false),
    ([3, 1], true),
    ([3, 2], true),
];

