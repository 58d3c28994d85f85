//! Class groups of binary quadratic forms over ℤ, by reduction and
//! Dirichlet composition. Deliberately self-contained so that it can check
//! orbit counts.

use crate::error::{domain, Result};
use num_integer::Integer;
use std::collections::BTreeMap;

type F = (i64, i64, i64);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub disc: i64,
    /// Class number in the wide sense.
    pub class_number: usize,
    pub narrow_class_number: usize,
    /// Number of classes of order dividing 3.
    pub three_torsion: usize,
}

fn isqrt(n: i64) -> i64 {
    let mut x = (n as f64).sqrt() as i64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

struct Classes {
    disc: i64,
    /// reduced form ↦ class index
    index: BTreeMap<F, usize>,
    reps: Vec<F>,
    /// √disc rounded down, for positive discriminants
    root: i64,
}

impl Classes {
    fn reduce(&self, f: F) -> F {
        if self.disc < 0 {
            reduce_definite(f)
        } else {
            reduce_indefinite(f, self.disc, self.root)
        }
    }

    fn class(&self, f: F) -> usize {
        self.index[&self.reduce(f)]
    }

    /// Dirichlet composition with `e = gcd(a1, a2, (b1 + b2)/2) = u·a1 + v·a2 + w·(b1 + b2)/2`:
    /// `A = a1a2/e²` and `B = b2 + (2a2/e)(v(b1 − b2)/2 − w·c2)`.
    fn compose(&self, f: F, g: F) -> F {
        let (a1, b1, _) = f;
        let (a2, b2, c2) = g;
        let h = (b1 + b2) / 2;
        let x = a1.extended_gcd(&a2);
        let y = x.gcd.extended_gcd(&h);
        let (e, u, v, w) = (y.gcd, y.x * x.x, y.x * x.y, y.y);
        debug_assert_eq!(u * a1 + v * a2 + w * h, e);
        let a = a1 * a2 / (e * e);
        let b = (b2 + 2 * a2 / e * (v * (b1 - b2) / 2 - w * c2)).rem_euclid(2 * a.abs());
        (a, b, (b * b - self.disc) / (4 * a))
    }
}

fn reduce_definite(f: F) -> F {
    let (mut a, mut b, mut c) = f;
    loop {
        if b > a || b <= -a {
            // b ↦ b mod 2a into (−a, a]
            let k = (a - b).div_euclid(2 * a);
            let nb = b + 2 * a * k;
            c = (nb * nb - (b * b - 4 * a * c)) / (4 * a);
            b = nb;
        }
        if a > c {
            std::mem::swap(&mut a, &mut c);
            b = -b;
            continue;
        }
        if a == c && b < 0 {
            b = -b;
        }
        return (a, b, c);
    }
}

fn is_reduced_indefinite(f: F, root: i64) -> bool {
    let (a, b, _) = f;
    b > 0 && b <= root && 2 * a.abs() + b > root && 2 * a.abs() <= root + b
}

fn rho(f: F, disc: i64, root: i64) -> F {
    let (_, b, c) = f;
    let m = 2 * c.abs();
    let lo = if c.abs() > root { -c.abs() + 1 } else { root - m + 1 };
    let nb = lo + (-b - lo).rem_euclid(m);
    (c, nb, (nb * nb - disc) / (4 * c))
}

fn reduce_indefinite(mut f: F, disc: i64, root: i64) -> F {
    while !is_reduced_indefinite(f, root) {
        f = rho(f, disc, root);
    }
    // the least member of the cycle names the class
    let start = f;
    let mut best = f;
    loop {
        f = rho(f, disc, root);
        if f == start {
            return best;
        }
        best = best.min(f);
    }
}

fn primitive(f: F) -> bool {
    f.0.gcd(&f.1).gcd(&f.2) == 1
}

fn classes(disc: i64) -> Classes {
    let mut reps = Vec::new();
    let root = if disc > 0 { isqrt(disc) } else { 0 };
    if disc < 0 {
        let mut a = 1;
        while 3 * a * a <= -disc {
            for b in -a + 1..=a {
                if (b * b - disc) % (4 * a) == 0 {
                    let f = (a, b, (b * b - disc) / (4 * a));
                    if primitive(f) && reduce_definite(f) == f {
                        reps.push(f);
                    }
                }
            }
            a += 1;
        }
    } else {
        let mut seen = std::collections::BTreeSet::new();
        for b in 1..=root {
            if (b * b - disc) % 4 != 0 {
                continue;
            }
            let n = (b * b - disc) / 4;
            for a in 1..=n.abs() {
                if n % a != 0 {
                    continue;
                }
                for sa in [a, -a] {
                    let f = (sa, b, n / sa);
                    if primitive(f) && is_reduced_indefinite(f, root) {
                        let r = reduce_indefinite(f, disc, root);
                        if seen.insert(r) {
                            reps.push(r);
                        }
                    }
                }
            }
        }
    }
    reps.sort();
    let index = reps.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    Classes { disc, index, reps, root }
}

/// Class number and 3-torsion of the order of discriminant `disc`.
pub fn class_group_oracle_z(disc: i64) -> Result<OracleReport> {
    if disc.rem_euclid(4) > 1 {
        return domain(format!("{disc} is not 0 or 1 mod 4"));
    }
    if disc >= 0 && isqrt(disc) * isqrt(disc) == disc {
        return domain(format!("{disc} is a square"));
    }
    let cl = classes(disc);
    let principal = if disc.rem_euclid(4) == 0 { (1, 0, -disc / 4) } else { (1, 1, (1 - disc) / 4) };
    let id = cl.class(principal);
    let three_torsion = cl
        .reps
        .iter()
        .filter(|&&f| {
            let f3 = cl.compose(cl.compose(f, f), f);
            cl.class(f3) == id
        })
        .count();
    let narrow = cl.reps.len();
    let class_number = if disc > 0 {
        // a unit of norm −1 exists iff −1 is properly represented by the principal class
        let neg = (-principal.0, principal.1, -principal.2);
        if cl.class(neg) == id {
            narrow
        } else {
            narrow / 2
        }
    } else {
        narrow
    };
    Ok(OracleReport { disc, class_number, narrow_class_number: narrow, three_torsion })
}
