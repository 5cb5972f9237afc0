use g2maps::singularities::SingularityType;
use g2maps::strata::{parse_configuration, Reducibility};

// Grouped as in the published table: genera, number of singular points,
// then the configurations of that group with their stratum dimensions.
pub type Group = (
    &'static str,
    &'static str,
    u32,
    &'static [(&'static str, u32)],
);

pub const GOLDEN: &[Group] = &[
    ("irreducible", "2", 1, &[("A1", 13), ("A2", 12)]),
    ("irreducible", "1", 1, &[("A3", 11), ("A4", 10)]),
    (
        "irreducible",
        "1",
        2,
        &[("A1^2", 12), ("A1 A2", 11), ("A2^2", 10)],
    ),
    (
        "irreducible",
        "0",
        1,
        &[("A5", 9), ("A6", 8), ("D4", 10), ("D5", 9), ("E6", 8)],
    ),
    (
        "irreducible",
        "0",
        2,
        &[("A1 A3", 10), ("A2 A3", 9), ("A1 A4", 9), ("A2 A4", 8)],
    ),
    (
        "irreducible",
        "0",
        3,
        &[("A1^3", 11), ("A1^2 A2", 10), ("A1 A2^2", 9), ("A2^3", 8)],
    ),
    ("cubic+line", "1+0", 1, &[("A5", 9)]),
    ("cubic+line", "1+0", 2, &[("A1 A3", 10)]),
    ("cubic+line", "1+0", 3, &[("A1^3", 11)]),
    ("cubic+line", "0+0", 1, &[("D6", 8), ("E7", 7)]),
    (
        "cubic+line",
        "0+0",
        2,
        &[("A1 D4", 9), ("A1 A5", 8), ("A1 D5", 8), ("A2 A5", 7)],
    ),
    ("cubic+line", "0+0", 3, &[("A1^2 A3", 9), ("A1 A2 A3", 8)]),
    ("cubic+line", "0+0", 4, &[("A1^4", 10), ("A1^3 A2", 9)]),
    ("two-conics", "0+0", 1, &[("A7", 7)]),
    ("two-conics", "0+0", 2, &[("A1 A5", 8), ("A3^2", 8)]),
    ("two-conics", "0+0", 3, &[("A1^2 A3", 8)]),
    ("two-conics", "0+0", 3, &[("A1^4", 10)]),
    ("conic+two-lines", "0+0+0", 2, &[("A1 D6", 7)]),
    ("conic+two-lines", "0+0+0", 3, &[("A1^2 D4", 8)]),
    ("conic+two-lines", "0+0+0", 4, &[("A1^3 A3", 8)]),
    ("conic+two-lines", "0+0+0", 5, &[("A1^5", 9)]),
    ("four-lines", "0+0+0+0", 1, &[("planar-4-fold", 6)]),
    ("four-lines", "0+0+0+0", 4, &[("A1^3 D4", 7)]),
    ("four-lines", "0+0+0+0", 6, &[("A1^4", 8)]),
];

pub const NON_REDUCED: &[(&str, u32)] = &[
    ("conic and generic double line", 7),
    ("conic and tangent double line", 6),
    ("three generic lines, one double", 6),
    ("three concurrent lines, one double", 5),
    ("double conic", 5),
    ("two double lines", 4),
    ("line and triple line", 4),
    ("quadruple line", 2),
];

pub fn golden_rows() -> Vec<(Reducibility, Vec<u32>, u32, Vec<SingularityType>, u32)> {
    let mut out = Vec::new();
    for (red, genera, points, configs) in GOLDEN {
        let genera: Vec<u32> = genera.split('+').map(|g| g.parse().unwrap()).collect();
        for (cfg, dim) in *configs {
            out.push((
                red.parse().unwrap(),
                genera.clone(),
                *points,
                parse_configuration(cfg).unwrap(),
                *dim,
            ));
        }
    }
    out
}

// Milnor numbers straight from the normal forms: A_k = k, D_k = k, E_k = k.
pub fn milnor(cfg: &str) -> u32 {
    cfg.split_whitespace()
        .map(|tok| {
            let (name, n) = tok
                .split_once('^')
                .map_or((tok, 1), |(a, b)| (a, b.parse().unwrap()));
            name[1..].parse::<u32>().unwrap() * n
        })
        .sum()
}
