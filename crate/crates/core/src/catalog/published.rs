//! Classification numbers as originally published, for side-by-side comparison.

pub struct Published {
    pub dim: usize,
    /// (multiplication, bialgebras, infinitesimal bialgebras)
    pub rows: &'static [(&'static str, usize, usize)],
    pub trivial_2as: &'static [(&'static str, &'static str)],
    pub nontrivial_2as: &'static [(&'static str, &'static str, &'static str)],
    /// Type counts (1,1), (1,2), (2,1), (2,2).
    pub two_b: [((u8, u8), usize); 4],
    pub two_b_listed: &'static [(&'static str, &'static str, &'static str, &'static str)],
    pub two_two_b: &'static [(&'static str, &'static str, &'static str, &'static str)],
}

pub const DIM2: Published = Published {
    dim: 2,
    rows: &[("mu1_2", 3, 2), ("mu2_2", 0, 0)],
    trivial_2as: &[("mu1_2", "delta_1_2_2")],
    nontrivial_2as: &[],
    two_b: [((1, 1), 3), ((1, 2), 3), ((2, 1), 0), ((2, 2), 0)],
    two_b_listed: &[],
    two_two_b: &[("mu1_2", "mu1_2", "delta_1_2_2", "delta_1_2_2")],
};

pub const DIM3: Published = Published {
    dim: 3,
    rows: &[
        ("mu1_3", 18, 8),
        ("mu2_3", 3, 2),
        ("mu3_3", 3, 2),
        ("mu4_3", 0, 0),
        ("mu5_3", 1, 1),
    ],
    trivial_2as: &[
        ("mu1_3", "delta_1_2_3"),
        ("mu1_3", "delta_1_5_3"),
        ("mu1_3", "delta_1_6_3"),
        ("mu1_3", "delta_1_8_3"),
        ("mu1_3", "delta_1_11_3"),
        ("mu1_3", "delta_1_14_3"),
        ("mu1_3", "delta_1_15_3"),
        ("mu1_3", "delta_1_18_3"),
        ("mu2_3", "delta_2_1_3"),
        ("mu2_3", "delta_2_2_3"),
        ("mu3_3", "delta_3_2_3"),
        ("mu3_3", "delta_3_3_3"),
        ("mu5_3", "delta_5_1_3"),
    ],
    nontrivial_2as: &[
        ("mu3_3", "mu5_3", "delta_3_1_3"),
        ("mu1_3", "mu2_3", "delta_2_1_3"),
        ("mu1_3", "mu2_3", "delta_2_2_3"),
    ],
    two_b: [((1, 1), 25), ((1, 2), 159), ((2, 1), 1), ((2, 2), 3)],
    two_b_listed: &[
        ("mu3_3", "mu5_3", "delta_3_1_3", "delta_5_1_3"),
        ("mu1_3", "mu2_3", "delta_1_3_3", "delta_2_1_3"),
        ("mu1_3", "mu2_3", "delta_1_4_3", "delta_2_1_3"),
        ("mu1_3", "mu2_3", "delta_1_5_3", "delta_2_1_3"),
    ],
    two_two_b: &[("mu1_3", "mu2_3", "delta_1_5_3", "delta_2_1_3")],
};

pub fn for_dim(dim: usize) -> Option<&'static Published> {
    match dim {
        2 => Some(&DIM2),
        3 => Some(&DIM3),
        _ => None,
    }
}
