//! Independent checks of the Weyl-integration volumes:
//! `vol(G/T) = prod_{alpha > 0} 2 pi / (alpha, rho)`, round-sphere volumes of
//! SU(2), and metric data recomputed from ambient matrix models.

use num::{One, Zero};
use sunada_core::exactnum::{int, rat, Rational, SymReal, SymVolume};
use sunada_core::rootvol::{vol_flag_quotient, vol_group, vol_torus, GroupDatum, LaplaceOp, Space};

fn product_formula(g: &GroupDatum) -> SymVolume {
    let l = LaplaceOp::of(g);
    let r = g.rank;
    let mut rho = vec![Rational::zero(); r];
    for a in &g.positive_roots {
        for (x, y) in rho.iter_mut().zip(a) {
            *x += y / int(2);
        }
    }
    let mut denom = Rational::one();
    for a in &g.positive_roots {
        let mut s = Rational::zero();
        for mu in 0..r {
            for nu in 0..r {
                s += &l.coefficients()[mu][nu] * &a[mu] * &rho[nu];
            }
        }
        denom *= s;
    }
    let n = g.positive_roots.len() as u32;
    SymVolume::new(SymReal::rational(int(1 << n) / denom), n)
}

#[test]
fn flag_volumes_match_product_formula() {
    for g in GroupDatum::shipped() {
        assert_eq!(vol_flag_quotient(&g).unwrap(), product_formula(&g), "{}", g.name);
    }
}

#[test]
fn group_volume_is_flag_times_torus() {
    for g in GroupDatum::shipped() {
        let lhs = vol_group(&g).unwrap();
        let rhs = &vol_flag_quotient(&g).unwrap() * &vol_torus(&g).unwrap();
        assert_eq!(lhs, rhs, "{}", g.name);
    }
}

// SU(2) with B(H, H) = beta is the round 3-sphere of radius sqrt(beta).
#[test]
fn su2_factors_are_round_spheres() {
    let sphere = |beta: Rational| {
        let r = SymReal::sqrt_of(&beta).unwrap();
        SymVolume::new(r.pow(3).scale(&int(2)), 2)
    };
    assert_eq!(vol_group(&GroupDatum::su2()).unwrap(), sphere(rat(2, 3)));
    assert_eq!(vol_group(&GroupDatum::diagonal_su2()).unwrap(), sphere(int(2)));
    assert_eq!(vol_group(&GroupDatum::su2_cubed()).unwrap(), sphere(rat(2, 3)).pow(3));
}

// U(1) of length 2 pi / sqrt(2) times Sp(1) of radius 1/sqrt(2).
#[test]
fn u1_sp1_from_factors() {
    let circle = SymVolume::new(SymReal::sqrt_of(&int(2)).unwrap(), 1);
    let s3 = SymVolume::new(SymReal::sqrt_of(&rat(1, 8)).unwrap().scale(&int(2)), 2);
    assert_eq!(vol_group(&GroupDatum::u1_sp1()).unwrap(), &circle * &s3);
}

fn inverse2(m: [[Rational; 2]; 2]) -> [[Rational; 2]; 2] {
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    [
        [&m[1][1] / &det, -&m[0][1] / &det],
        [-&m[1][0] / &det, &m[0][0] / &det],
    ]
}

// Torus of SU(3): t = {diag(i X) : sum X = 0}, b(X, Y) = (1/2) X.Y.
#[test]
fn su3_metric_from_trace_form() {
    let b = |x: &[i64; 3], y: &[i64; 3]| int(x.iter().zip(y).map(|(a, c)| a * c).sum::<i64>()) / int(2);
    let h = [[0, 1, -1], [-1, 0, 1]];
    let gram_h = [[b(&h[0], &h[0]), b(&h[0], &h[1])], [b(&h[1], &h[0]), b(&h[1], &h[1])]];
    for mu in 0..2 {
        for nu in 0..2 {
            let kd = if mu == nu { int(1) } else { int(0) };
            assert_eq!(gram_h[mu][nu], rat(3, 2) * (kd - rat(1, 3)));
        }
    }
    // (H1, H2) spans the kernel of exp up to 2 pi, so the lattice determinant is 1/det(gram_h).
    let det_h = &gram_h[0][0] * &gram_h[1][1] - &gram_h[0][1] * &gram_h[1][0];
    assert_eq!(SymReal::rational(det_h.recip()), GroupDatum::su3().lattice_gram_det);
    // e_mu evaluated on H_nu, then b^-1 = E gram_h^-1 E^T.
    let e = [[int(0), int(-1)], [int(1), int(0)]];
    let gi = inverse2(gram_h);
    let g = GroupDatum::su3();
    for mu in 0..2 {
        for nu in 0..2 {
            let mut s = Rational::zero();
            for a in 0..2 {
                for c in 0..2 {
                    s += &e[mu][a] * &gi[a][c] * &e[nu][c];
                }
            }
            assert_eq!(s, g.gram_binv[mu][nu]);
        }
    }
}

#[test]
fn sp2_and_diagonal_metric_data() {
    let sp2 = GroupDatum::sp2();
    assert_eq!(sp2.gram_binv, vec![vec![int(2), int(0)], vec![int(0), int(2)]]);
    // B(Delta H, Delta H) = 3 * (1/3) * 2.
    let b_dh = int(3) * rat(1, 3) * int(2);
    assert_eq!(b_dh, int(2));
    assert_eq!(GroupDatum::diagonal_su2().gram_binv[0][0], b_dh.recip());
    assert_eq!(GroupDatum::diagonal_su2().gram_binv[0][0], rat(1, 2));
}

#[test]
fn gaussian_evaluation_positive() {
    for g in GroupDatum::shipped() {
        let e = sunada_core::rootvol::gaussian_eval(&sunada_core::rootvol::delta_poly(&g), &LaplaceOp::of(&g));
        assert!(e > Rational::zero(), "{}", g.name);
    }
}

#[test]
fn every_space_renders() {
    for s in Space::ALL {
        match s.volume() {
            Ok(v) => assert!(v.approx() > 0.0),
            Err(_) => assert_eq!(s, Space::S6),
        }
    }
}
