//! Universal characters against the Weyl character formula.

use num_traits::{One, Zero};
use qdim_core::rational::{frac, int};
use qdim_core::rootsys::{build_root_system, weyl_dim, weyl_qdim, Family, Vector, Weight};
use qdim_core::universal::{exc_line_dim, qdim_cartan_adjoint, qdim_z, vogel_params, AlgebraId};
use qdim_core::{sinh_ratio_series, PowerSeries, Rational};

const ORDER: usize = 20;

/// The 240 roots of E8 in orthogonal coordinates: `±eᵢ ± eⱼ` and
/// `½(±1, …, ±1)` with an even number of minus signs.
fn e8_roots() -> Vec<[Rational; 8]> {
    let mut roots = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut r: [Rational; 8] = std::array::from_fn(|_| Rational::zero());
                r[i] = int(si);
                r[j] = int(sj);
                roots.push(r);
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            roots.push(std::array::from_fn(|k| if mask >> k & 1 == 1 { frac(-1, 2) } else { frac(1, 2) }));
        }
    }
    roots
}

fn dot(a: &[Rational; 8], b: &[Rational; 8]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[test]
fn e8_independent_enumeration() {
    let roots = e8_roots();
    assert_eq!(roots.len(), 240);
    let rho: [Rational; 8] = std::array::from_fn(|k| int([0, 1, 2, 3, 4, 5, 6, 23][k]));
    let positive: Vec<&[Rational; 8]> = roots.iter().filter(|r| dot(r, &rho) > Rational::zero()).collect();
    assert_eq!(positive.len(), 120);
    let half_sum: [Rational; 8] =
        std::array::from_fn(|k| positive.iter().map(|r| r[k].clone()).sum::<Rational>() / int(2));
    assert_eq!(half_sum, rho);
    let theta: [Rational; 8] = std::array::from_fn(|k| if k >= 6 { int(1) } else { int(0) });

    let rs = build_root_system(Family::E, 8).unwrap();
    assert_eq!(rs.positive_roots().len(), 120);
    assert_eq!(rs.rho(), &Vector(rho.to_vec()));
    assert_eq!(rs.theta(), &Vector(theta.to_vec()));

    let v = vogel_params(AlgebraId::E8).unwrap();
    for (n, dim) in [(1, 248), (2, 27000), (3, 1_763_125)] {
        let lambda: [Rational; 8] = std::array::from_fn(|k| &theta[k] * int(n));
        let shifted: [Rational; 8] = std::array::from_fn(|k| &lambda[k] + &rho[k]);
        let mut oracle = PowerSeries::one(ORDER);
        let mut d = Rational::one();
        for mu in &positive {
            let (a, b) = (dot(mu, &shifted), dot(mu, &rho));
            d *= &a / &b;
            oracle = &oracle * &sinh_ratio_series(&(int(2) * a), &(int(2) * b), ORDER).unwrap();
        }
        assert_eq!(d, int(dim));
        assert_eq!(qdim_cartan_adjoint(&v, n as u32, ORDER).unwrap(), oracle, "n={n}");
    }
}

#[test]
fn cartan_powers_match_weyl() {
    for id in AlgebraId::SAMPLES {
        let rs = id.root_system().unwrap();
        let v = vogel_params(id).unwrap();
        for n in 1..=3 {
            let weyl = weyl_qdim(&rs, &Weight::theta_multiple(&rs, n), ORDER);
            assert_eq!(qdim_cartan_adjoint(&v, n, ORDER).unwrap(), weyl, "{id} n={n}");
        }
    }
}

fn z_weight(id: AlgebraId, k: u32, l: u32) -> (qdim_core::rootsys::RootSystem, Weight) {
    let rs = id.root_system().unwrap();
    let sigma = rs.sigma().expect("sigma").clone();
    let w = rs.theta().scaled(&int((k + l) as i64)).add(&sigma.scaled(&int(l as i64)));
    let weight = Weight::new(&rs, w).unwrap();
    (rs, weight)
}

#[test]
fn cartan_products_with_y2_match_weyl() {
    let algebras = [AlgebraId::A(5), AlgebraId::C(3), AlgebraId::D(6), AlgebraId::F4, AlgebraId::E6, AlgebraId::E7, AlgebraId::E8];
    for id in algebras {
        let v = vogel_params(id).unwrap();
        for (k, l) in [(0, 1), (1, 1), (2, 1), (0, 2), (1, 2)] {
            let (rs, w) = z_weight(id, k, l);
            let order = if matches!(id, AlgebraId::E8) { 8 } else { 12 };
            assert_eq!(qdim_z(&v, k, l, order).unwrap(), weyl_qdim(&rs, &w, order), "{id} ({k},{l})");
        }
    }
}

#[test]
fn g2_products_with_y2() {
    let v = vogel_params(AlgebraId::G2).unwrap();
    for k in 0..=3 {
        let (rs, w) = z_weight(AlgebraId::G2, k, 1);
        assert_eq!(qdim_z(&v, k, 1, ORDER).unwrap(), weyl_qdim(&rs, &w, ORDER), "k={k}");
    }
    // the universal formula vanishes where the weight (k+2)θ+2σ still exists
    let (rs, w) = z_weight(AlgebraId::G2, 0, 2);
    assert_eq!(weyl_dim(&rs, &w), int(182));
    assert!(qdim_z(&v, 0, 2, ORDER).unwrap().is_zero());
}

#[test]
fn exceptional_line_j_points() {
    // e7 = (−2, 8, 12) ~ (−1/3, 4/3, 2), f4 = (−2, 5, 6) ~ (−2/3, 5/3, 2)
    for (id, lambda) in [(AlgebraId::E7, frac(-1, 3)), (AlgebraId::F4, frac(-2, 3)), (AlgebraId::E8, frac(-1, 5)), (AlgebraId::E6, frac(-1, 2))] {
        let (rs, w) = z_weight(id, 0, 2);
        assert_eq!(exc_line_dim(&lambda, 0, 2).unwrap(), weyl_dim(&rs, &w), "{id}");
    }
    assert_eq!(exc_line_dim(&frac(-2, 3), 0, 2).unwrap(), int(16302));
    assert!(exc_line_dim(&frac(-3, 2), 0, 2).unwrap().is_zero());
    assert!(exc_line_dim(&frac(5, 2), 0, 2).unwrap().is_zero());
}
