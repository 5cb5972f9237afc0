use g2maps::exact::{ratio, UniPoly};
use g2maps::singularities::SingularityType;

// Germ fixtures with their implicit equations, for an intersection-number
// oracle by substitution.

pub struct Fixture {
    pub name: &'static str,
    pub branches: Vec<(Vec<i64>, Vec<i64>, Vec<(u32, u32, i64)>)>,
    pub expected: SingularityType,
}

pub fn fixtures() -> Vec<Fixture> {
    let line_x = (vec![0, 1], vec![], vec![(0, 1, 1)]); // y = 0
    let line_y = (vec![], vec![0, 1], vec![(1, 0, 1)]); // x = 0
    let cusp = (vec![0, 0, 1], vec![0, 0, 0, 1], vec![(0, 2, 1), (3, 0, -1)]);
    vec![
        Fixture {
            name: "A4",
            branches: vec![(
                vec![0, 0, 1],
                vec![0, 0, 0, 0, 0, 1],
                vec![(0, 2, 1), (5, 0, -1)],
            )],
            expected: SingularityType::a(4),
        },
        Fixture {
            name: "D5",
            branches: vec![cusp.clone(), line_y.clone()],
            expected: SingularityType::d(5),
        },
        Fixture {
            name: "A5",
            branches: vec![
                line_x.clone(),
                (vec![0, 1], vec![0, 0, 0, 1], vec![(0, 1, 1), (3, 0, -1)]),
            ],
            expected: SingularityType::a(5),
        },
        Fixture {
            name: "D6",
            branches: vec![
                line_x.clone(),
                (vec![0, 1], vec![0, 0, 1], vec![(0, 1, 1), (2, 0, -1)]),
                line_y.clone(),
            ],
            expected: SingularityType::d(6),
        },
        Fixture {
            name: "D4",
            branches: vec![
                line_x.clone(),
                line_y.clone(),
                (vec![0, 1], vec![0, 1], vec![(0, 1, 1), (1, 0, -1)]),
            ],
            expected: SingularityType::d(4),
        },
        Fixture {
            name: "E6",
            branches: vec![(
                vec![0, 0, 0, 1],
                vec![0, 0, 0, 0, 1],
                vec![(0, 3, 1), (4, 0, -1)],
            )],
            expected: SingularityType::e(6),
        },
        Fixture {
            name: "E7",
            branches: vec![cusp, line_x.clone()],
            expected: SingularityType::e(7),
        },
        Fixture {
            name: "A1",
            branches: vec![line_x.clone(), line_y],
            expected: SingularityType::a(1),
        },
        Fixture {
            name: "A3",
            branches: vec![
                line_x,
                (vec![0, 1], vec![0, 0, 1], vec![(0, 1, 1), (2, 0, -1)]),
            ],
            expected: SingularityType::a(3),
        },
    ]
}

pub fn substitute(eq: &[(u32, u32, i64)], x: &UniPoly, y: &UniPoly) -> UniPoly {
    eq.iter().fold(UniPoly::zero(), |acc, &(i, j, c)| {
        &acc + &(&x.pow(i) * &y.pow(j)).scale(&ratio(c, 1))
    })
}

pub fn branch_delta(x: &[i64], y: &[i64]) -> u32 {
    // Monomial branches (t^p, t^q) with coprime p, q.
    let ord = |v: &[i64]| v.iter().position(|&c| c != 0).unwrap_or(usize::MAX) as u32;
    let (p, q) = (ord(x), ord(y));
    let (p, q) = (p.min(q), p.max(q));
    if p == 1 {
        0
    } else {
        (p - 1) * (q - 1) / 2
    }
}
