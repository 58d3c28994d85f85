//! Orbit counts against the class-group oracle, and the reducible orbits
//! against the cube criterion, over a range of discriminants.

use cubeclass_core::counting_local::{class_group_oracle_z, count_cl3, enumerate_orbits, EnumOptions};
use cubeclass_core::cubic_forms::{phi_inverse, GroupKind};
use cubeclass_core::{BaseField, FormSpace};

fn is_square(n: i64) -> bool {
    n >= 0 && (n as f64).sqrt().round().powi(2) as i64 == n
}

fn discriminants() -> impl Iterator<Item = i64> {
    (-400i64..=300).filter(|&d| d != 0 && d.rem_euclid(4) <= 1 && !is_square(d))
}

/// Fundamental discriminants, where the order is maximal.
fn is_fundamental(d: i64) -> bool {
    let squarefree = |n: i64| (2..).take_while(|p| p * p <= n.abs()).all(|p| n % (p * p) != 0);
    if d.rem_euclid(4) == 1 {
        squarefree(d)
    } else {
        let m = d / 4;
        matches!(m.rem_euclid(4), 2 | 3) && squarefree(m)
    }
}

#[test]
fn orbit_counts_match_oracle() {
    let k = BaseField::rational();
    let v = FormSpace::standard(k);
    for d in discriminants() {
        let c = count_cl3(&v, &k.int(d), &EnumOptions::default()).unwrap();
        let oracle = class_group_oracle_z(d).unwrap();
        assert_eq!(c.order as usize, oracle.three_torsion, "disc {d}");
    }
}

#[test]
fn reducible_orbits_follow_the_cube_criterion() {
    let k = BaseField::rational();
    let v = FormSpace::standard(k);
    let opts = EnumOptions { group: GroupKind::Sl, ..EnumOptions::default() };
    for d in discriminants().filter(|d| d.abs() <= 200) {
        let table = enumerate_orbits(&v, &k.int(d), &opts).unwrap();
        let mut reducible = 0;
        for r in table.reps.iter().filter(|r| r.projective) {
            let q = phi_inverse(&v, &r.form).unwrap();
            assert_eq!(r.reducible, q.delta_is_cube().unwrap(), "disc {d}, form {}", r.form);
            reducible += usize::from(r.reducible);
        }
        // reducible projective orbits match the ideals with I³ = S and trivial
        // norm, and a maximal order has only S
        assert!(reducible >= 1, "disc {d}");
        if is_fundamental(d) {
            assert_eq!(reducible, 1, "disc {d}");
        }
    }
    // a nonmaximal order where a nontrivial ideal cubes to S
    let table = enumerate_orbits(&v, &k.int(-44), &opts).unwrap();
    assert_eq!(table.reps.iter().filter(|r| r.projective && r.reducible).count(), 3);
}
