use g2maps::components::{ComponentFamily, Partition};

// Dimensions rebuilt from clutching: a product of lower-genus spaces fibred
// over P^r, minus r conditions for every node that must map to one point.

pub fn tail_dim(r: i64, d: u32) -> i64 {
    // M_{0,1}(P^r, d)
    (r + 1) * d as i64 + r - 2
}

pub fn tails_dim(r: i64, tails: &Partition) -> i64 {
    tails.parts().iter().map(|&d| tail_dim(r, d)).sum()
}

pub fn clutching_dim(fam: &ComponentFamily, r: u32) -> i64 {
    let r = r as i64;
    match fam {
        ComponentFamily::Main { degree } => (r + 1) * *degree as i64 + 3 - r,
        ComponentFamily::D(mu) => {
            let k = mu.len() as i64;
            // M_{2,k} times the tails; all attaching points coincide.
            (3 + k) + tails_dim(r, mu) - r * (k - 1)
        }
        ComponentFamily::HypD(mu) => {
            let k = mu.len() as i64;
            (2 * r + 4 + k) + tails_dim(r, mu) - r * k
        }
        ComponentFamily::E { d0, tails } => {
            let k = tails.len() as i64;
            let elliptic = (r + 1) * *d0 as i64 + 1;
            (k + 1) + elliptic + tails_dim(r, tails) - r * k
        }
        ComponentFamily::EE { left, d0, right } => {
            let (k1, k2) = (left.len() as i64, right.len() as i64);
            let bridge = (r + 1) * *d0 as i64 + r - 1;
            (k1 + 1) + (k2 + 1) + bridge + tails_dim(r, left) + tails_dim(r, right) - r * (k1 + k2)
        }
        ComponentFamily::BrE { d0, tails } => {
            let k = tails.len() as i64;
            let bridge = (r + 1) * *d0 as i64 + r - 1;
            (k + 2) + bridge + tails_dim(r, tails) - r - r * k
        }
    }
}

// Degree four in the plane, in enumeration order.
pub const DEGREE_FOUR: &[(&str, i64)] = &[
    ("main", 13),
    ("D(4)", 16),
    ("D(3,1)", 15),
    ("D(2,2)", 15),
    ("D(2,1,1)", 14),
    ("D(1,1,1,1)", 13),
    ("E(4)", 14),
    ("E(3;1)", 13),
    ("E(2;2)", 13),
    ("E(2;1,1)", 12),
    ("EE(|4|)", 15),
    ("EE(|3|1)", 14),
    ("EE(|2|2)", 14),
    ("EE(|2|1,1)", 13),
    ("EE(1|2|1)", 13),
    ("EE(|1|3)", 14),
    ("EE(|1|2,1)", 13),
    ("EE(|1|1,1,1)", 12),
    ("EE(1|1|2)", 13),
    ("EE(1|1|1,1)", 12),
    ("brE(4)", 13),
    ("brE(3;1)", 12),
    ("brE(2;2)", 12),
    ("brE(2;1,1)", 11),
    ("brE(1;3)", 12),
    ("brE(1;2,1)", 11),
    ("brE(1;1,1,1)", 10),
    ("hypD(2)", 13),
    ("hypD(1,1)", 12),
];
